"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 negative membership answer, 4 resource limit hit, 5 validation or
differential failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .errors import ParseError, ResourceLimitError
from .explore import ExploreConfig, explore, validate_exploration
from .model import Config, Bvass, model_hash, parse_bvass
from .oracle import bounded_reach, check_post_closure, check_soundness
from .semilinear import loads, member_config, to_json, to_text

OK, USAGE, BAD_INPUT, NEGATIVE, RESOURCE, INVALID = range(6)

log = logging.getLogger("bvass")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _model(path: str) -> Bvass:
    return parse_bvass(_read(path))


def _config(args) -> ExploreConfig:
    return ExploreConfig(worklist_order=args.order, max_nodes=args.max_nodes,
                         cover_any_processed=not args.ancestor_cover)


def _explore_flags(p):
    p.add_argument("--order", choices=("fifo", "lifo"), default="fifo")
    p.add_argument("--max-nodes", type=int, default=ExploreConfig.max_nodes)
    p.add_argument("--ancestor-cover", action="store_true",
                   help="only let proper ancestors cover a node")


def _presentation(args, b):
    if getattr(args, "from_path", None):
        s = loads(_read(args.from_path))
        if s.model_hash and s.model_hash != model_hash(b):
            log.warning("presentation was computed for a different model")
        return s, None
    e, s, stats = explore(b, _config(args))
    return s, e


def cmd_reach(args) -> int:
    b = _model(args.file)
    e, s, stats = explore(b, _config(args))
    if args.validate:
        rep = validate_exploration(e, b, _config(args))
        for v in rep.violations:
            print(f"violation: {v}", file=sys.stderr)
        if not rep.ok:
            return INVALID
    text = to_json(s) if args.json else to_text(s)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.stats:
        print(json.dumps(stats.as_dict(), sort_keys=True), file=sys.stderr)
    return OK


def cmd_member(args) -> int:
    if args.x < 0 or args.y < 0:
        raise _InputError("coordinates must be nonnegative")
    b = _model(args.file)
    s, _ = _presentation(args, b)
    c = Config(args.state, (args.x, args.y))
    i = member_config(s, c)
    if i is None:
        print(f"{c} not reachable")
        return NEGATIVE
    print(f"{c} reachable via {s.entries[i]}")
    return OK


def cmd_oracle(args) -> int:
    b = _model(args.file)
    res = bounded_reach(b, args.box)
    doc = {"box": res.box, "saturated": res.saturated,
           "configs": [[c.state, c.point[0], c.point[1]] for c in sorted(res.configs)]}
    sys.stdout.write(json.dumps(doc) + "\n")
    return OK


def cmd_check(args) -> int:
    b = _model(args.file)
    s, e = _presentation(args, b)
    sound = check_soundness(s, b, args.box, max(args.box, args.box_max))
    closure = check_post_closure(s, b, args.box)
    report = {
        "model_hash": model_hash(b),
        "entries": len(s),
        "soundness": sound.summary(),
        "unsound": [str(c) for c, st in sound.status.items() if st != "witnessed"],
        "closure_violations": [{"rule": r, "config": c} for _, r, c in closure.violations],
    }
    ok = sound.ok and closure.ok
    if e is not None:
        val = validate_exploration(e, b, _config(args))
        report["validation_violations"] = val.violations
        ok = ok and val.ok
    report["ok"] = ok
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return OK if ok else INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bvass", description="Reachability sets of 2-dimensional branching VASS.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    r = sub.add_parser("reach", help="compute a semilinear presentation")
    r.add_argument("file")
    r.add_argument("--json", action="store_true")
    r.add_argument("--out", metavar="PATH")
    r.add_argument("--validate", action="store_true")
    r.add_argument("--stats", action="store_true", help="print counters on stderr")
    _explore_flags(r)
    r.set_defaults(func=cmd_reach)

    m = sub.add_parser("member", help="decide whether a configuration is reachable")
    m.add_argument("file")
    m.add_argument("state")
    m.add_argument("x", type=int)
    m.add_argument("y", type=int)
    m.add_argument("--from", dest="from_path", metavar="PATH",
                   help="load a presentation (JSON or text, '-' for stdin)")
    _explore_flags(m)
    m.set_defaults(func=cmd_member)

    o = sub.add_parser("oracle", help="dump the box-bounded reachability set")
    o.add_argument("file")
    o.add_argument("--box", type=int, default=10)
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("check", help="differential check against the oracles")
    c.add_argument("file")
    c.add_argument("--box", type=int, default=20)
    c.add_argument("--box-max", type=int, default=160)
    c.add_argument("--from", dest="from_path", metavar="PATH")
    _explore_flags(c)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    level = os.environ.get("BVASS_LOG", "warn").upper()
    logging.basicConfig(level={"WARN": "WARNING"}.get(level, level)
                        if level in ("ERROR", "WARN", "INFO", "DEBUG") else "WARNING",
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, _InputError) as exc:
        print(f"bvass: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ResourceLimitError as exc:
        print(f"bvass: {exc}", file=sys.stderr)
        if exc.stats:
            print(json.dumps({"node": exc.node, **exc.stats}, sort_keys=True), file=sys.stderr)
        return RESOURCE
    except ValueError as exc:
        print(f"bvass: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
