"""Cube census: scenario-3 survivors per color count and the biminimal classes."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from potlab.extremal import census_cube, lower_bound_certificate, sweep


@dataclass
class CensusConfig:
    min_colors: int = 1
    max_colors: int = 5
    certificates: bool = False


def run(cfg: CensusConfig) -> dict:
    rows = []
    for c in range(cfg.min_colors, cfg.max_colors + 1):
        start = time.perf_counter()
        sw = sweep(c)
        sizes = sorted(len(s.pot) for s in sw.survivors)
        rows.append({
            "colors": c,
            "raw_partitions": sw.raw_partitions,
            "partition_orbits": sw.partitions,
            "colorings": len(sw.candidates),
            "survivors": len(sw.survivors),
            "survivor_pot_sizes": sizes,
            "seconds": round(time.perf_counter() - start, 2),
        })
        print(f"c={c}: orbits={sw.partitions} colorings={len(sw.candidates)} survivors={len(sw.survivors)} sizes={sizes}")
    out = {"config": asdict(cfg), "sweeps": rows, "biminimal": census_cube(5).to_json()}
    if cfg.certificates:
        out["lower_bounds"] = lower_bound_certificate()
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-colors", type=int, default=1)
    parser.add_argument("--max-colors", type=int, default=5)
    parser.add_argument("--certificates", action="store_true")
    parser.add_argument("--out", help="write the full JSON result here")
    args = parser.parse_args()
    result = run(CensusConfig(args.min_colors, args.max_colors, args.certificates))
    classes = result["biminimal"]["classes"]
    print(f"biminimal classes: {len(classes)}")
    for cls in classes:
        print("  ", cls["pot"])
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(result, fh, sort_keys=True, indent=2)


if __name__ == "__main__":
    main()
