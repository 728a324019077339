"""The ``plot`` command: render CSV tables to raster images."""

from __future__ import annotations

import argparse
import sys

from .render import SchemaError, render_convergence, render_heatmap


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot", description="Render stability CSV tables headlessly.")
    subs = parser.add_subparsers(dest="command", required=True)

    heat = subs.add_parser("heatmap", help="log10 condition-number heatmap")
    heat.add_argument("csv", help="stability-map CSV")
    heat.add_argument("out", help="output image path (.png)")
    heat.add_argument("--dash-exp", type=float, default=2.0,
                      help="exponent of the dashed n = m^e curve (default 2)")

    conv = subs.add_parser("convergence", help="semilog error-decay plot")
    conv.add_argument("csv", help="convergence CSV")
    conv.add_argument("out", help="output image path (.png)")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "heatmap":
            render_heatmap(args.csv, args.out, args.dash_exp)
        else:
            render_convergence(args.csv, args.out)
    except SchemaError as exc:
        print(f"error: schema: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
