#!/usr/bin/env python3
"""Random sweep comparing the game-pipeline rank against the definitional one.

Draws random connected multigraphs and random divisors, computes the rank
both ways, and reports any disagreement.  Useful for longer soak runs beyond
the exhaustive acceptance family.

Example:
    python3 scripts/rank_agreement_sweep.py --trials 5000 --seed 7 --max-n 5
"""

import argparse
import sys
import time
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chipfiring.distance import rank
from chipfiring.families import random_connected_multigraph, random_divisor
from chipfiring.multigraph import graph_to_text
from chipfiring.oracles import rank_definitional


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--low", type=int, default=-2, help="lowest divisor entry")
    parser.add_argument("--high-offset", type=int, default=1,
                        help="entries go up to degree + OFFSET")
    args = parser.parse_args()

    rng = Random(args.seed)
    start = time.monotonic()
    mismatches = 0
    for trial in range(args.trials):
        g = random_connected_multigraph(rng, max_n=args.max_n, max_extra_edges=2)
        f = random_divisor(rng, g, low=args.low, high_offset=args.high_offset)
        via_game = rank(g, f)
        via_definition = rank_definitional(g, f)
        if via_game != via_definition:
            mismatches += 1
            print(f"MISMATCH on trial {trial}: game={via_game} definition={via_definition}")
            print(graph_to_text(g), f)
    elapsed = time.monotonic() - start
    print(f"{args.trials} trials, {mismatches} mismatches, {elapsed:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
