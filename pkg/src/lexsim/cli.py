"""Command-line front end: one subcommand per model, JSON config in, CSV out.

Exit codes: 0 success; 1 rejected configuration or command line; 2 model or
I/O failure at run time. Errors are written to stderr as a single line of the
form "error: <category>: <detail>".
"""

from __future__ import annotations

import argparse
import sys

from .config import MODELS, load_config
from .errors import ConfigError, LexsimError
from .runner import run

_HELP = {
    "equilibrium": "solve contract completeness where marginal benefit meets marginal cost",
    "settle": "settlement ranges and settle/trial outcomes for a batch of disputes",
    "frivolous": "resolve the nuisance-filing game for both plaintiff types",
    "evolve": "simulate selective relitigation of a rule population",
    "composition": "shift docket shares under a flat per-case cost cut",
    "sweep": "grid-run another model over one or more config axes",
}


def _u64(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a base-10 integer: got {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2^64): got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexsim",
        description="simulation models of litigation volume and the speed of legal change",
    )
    sub = parser.add_subparsers(dest="model", required=True, metavar="model")
    for name in MODELS:
        p = sub.add_parser(name, help=_HELP[name])
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--out", required=True, help="CSV output path")
        p.add_argument("--svg", help="optional SVG chart path")
        p.add_argument("--seed", type=_u64, help="overrides the config seed")
    return parser


def _one_line(err: BaseException) -> str:
    return " ".join(str(err).split())


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage; fold its exit into our code space
        return 0 if e.code == 0 else 1
    try:
        cfg = load_config(args.config, args.model)
        if args.seed is not None:
            cfg.seed = args.seed
        cfg.output_path = args.out
        if args.svg is not None:
            cfg.svg_path = args.svg
        result = run(cfg)
    except ConfigError as e:
        print(f"error: config: {_one_line(e)}", file=sys.stderr)
        return 1
    except LexsimError as e:
        print(f"error: model: {_one_line(e)}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: io: {_one_line(e)}", file=sys.stderr)
        return 2
    if result.svg_path is not None:
        print(f"wrote {result.csv_path} and {result.svg_path}")
    else:
        print(f"wrote {result.csv_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
