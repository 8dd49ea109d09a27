"""`schwinger-figures render --spec FILE` — batch-render figure specs."""

from __future__ import annotations

import argparse
import sys

from .render import render
from .schemas import SchemaError
from .specs import SpecError, load_specs

EXIT_OK = 0
EXIT_CONFIG = 2


def cmd_render(args) -> int:
    try:
        specs = load_specs(args.spec)
        results = [render(spec) for spec in specs]
    except (SpecError, SchemaError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    for result in results:
        print(f"wrote {result.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schwinger-figures",
        description="Render paper-style figures from simulator CSV tables")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render all figures in a spec file")
    p.add_argument("--spec", required=True, help="JSON figure spec file")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
