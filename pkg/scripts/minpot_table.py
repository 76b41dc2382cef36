"""Bounded search for T_i and B_i over a few small graphs."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from potlab.multigraph import complete, cube, cycle, moebius_ladder
from potlab.extremal import minimal_pot_stats


@dataclass
class MinpotConfig:
    tile_bound: int = 4
    color_bound: int = 3


GRAPHS = {
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "K4": lambda: complete(4),
    "M8": lambda: moebius_ladder(4),
    "Q": cube,
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tiles", type=int, default=4)
    parser.add_argument("--colors", type=int, default=3)
    parser.add_argument("--scenarios", type=int, nargs="+", default=[1, 2])
    parser.add_argument("--graphs", nargs="+", default=list(GRAPHS))
    args = parser.parse_args()
    cfg = MinpotConfig(args.tiles, args.colors)
    print(f"{'graph':6} {'i':>2} {'T':>4} {'B':>4}  exhaustive  witness")
    for name in args.graphs:
        g = GRAPHS[name]()
        for i in args.scenarios:
            s = minimal_pot_stats(g, i, tile_bound=cfg.tile_bound, color_bound=cfg.color_bound)
            exact = "yes" if s.T_unconditional and s.B_unconditional else "bounded"
            witness = s.T_witness.to_json() if s.T_witness is not None else None
            print(f"{name:6} {i:>2} {str(s.T):>4} {str(s.B):>4}  {exact:10}  {witness}")


if __name__ == "__main__":
    main()
