"""Batch figure generation: plots <kind> --in <csv> --out <img>."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .figures import PlotSpec, render
from .records import SchemaError

KINDS = ("lln-trend", "histogram", "residue-ratio")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Static figures from groupvc experiment CSVs"
    )
    parser.add_argument("kind", choices=KINDS, help="figure kind")
    parser.add_argument("--in", dest="input_csv", required=True, help="input CSV path")
    parser.add_argument("--out", dest="output", required=True, help="output image path")
    parser.add_argument("--title", default=None, help="figure title override")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(args.input_csv, args.kind, args.output, title=args.title)
    try:
        render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
