"""Write the bundled data files (cube.json, p1.json, p2.json, report.schema.json) from the library."""
from __future__ import annotations

import argparse
import json
from pathlib import Path

from potlab.multigraph import cube
from potlab.reference import P1, P2
from potlab.verify import REPORT_SCHEMA

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "potlab" / "data"


def payloads() -> dict[str, object]:
    return {
        "cube.json": cube().to_json(),
        "p1.json": P1.to_json(),
        "p2.json": P2.to_json(),
        "report.schema.json": REPORT_SCHEMA,
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, data in payloads().items():
        (args.out / name).write_text(json.dumps(data, sort_keys=True) + "\n")
        print(f"wrote {args.out / name}")


if __name__ == "__main__":
    main()
