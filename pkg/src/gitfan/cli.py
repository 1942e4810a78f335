"""``gitfan <command> --instance FILE [...]`` entry point.

Exit status: 0 on success, 1 when an engine raises, 2 on parse errors
(bad instance, unknown command, missing option).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .io import COMMANDS, CommandError, InstanceError, dumps, parse_instance, run_command


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gitfan", description="GIT-fans of quiver representations")
    ap.add_argument("command", help=", ".join(COMMANDS))
    ap.add_argument("--instance", required=True, type=Path)
    ap.add_argument("--weight", action="append", help="weight name from the instance (repeatable)")
    ap.add_argument("--rep", help="representation name for orbit-cone")
    ap.add_argument("--mode", choices=("oracle", "sampled"))
    ap.add_argument("--p", type=int)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--out", type=Path)
    ap.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if args.command not in COMMANDS:
        print(f"gitfan: unknown command {args.command!r}", file=sys.stderr)
        return 2
    try:
        inst = parse_instance(args.instance.read_text(encoding="utf-8"))
    except OSError as exc:
        print(f"gitfan: {exc}", file=sys.stderr)
        return 2
    except InstanceError as exc:
        print(f"gitfan: {args.instance}: {exc}", file=sys.stderr)
        return 2
    try:
        doc = run_command(
            inst, args.command, weights=args.weight, rep=args.rep, timing=args.timing,
            mode=args.mode, p=args.p, samples=args.samples, seed=args.seed,
        )
    except CommandError as exc:
        print(f"gitfan: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # engine failures
        print(f"gitfan: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = dumps(doc)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
