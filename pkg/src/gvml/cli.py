"""Command-line interface.

Subcommands: classify, check-axioms, gallery, suite. Reports go to stdout
as JSON with sorted keys. Exit codes: 0 all-pass, 1 any refutation or
suite failure, 2 usage error. GVML_SEED overrides the default suite seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import gallery, jsonio, suites
from .errors import DomainError, UnknownNameError
from .sequences import Scale, classify
from .space import check_axioms
from .verdict import Status


def _default_seed() -> int:
    try:
        return int(os.environ.get("GVML_SEED", "7"))
    except ValueError:
        return 7


def _load_desc(arg: str):
    """A space/sequence argument is inline JSON, a file path, or a bare name."""
    s = arg.strip()
    if s.startswith("{"):
        return json.loads(s)
    if os.path.exists(s):
        with open(s, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return {"kind": "named", "name": s}


def _emit(obj) -> None:
    print(jsonio.dumps(obj))


def _cmd_classify(args) -> int:
    space = jsonio.space_from_json(_load_desc(args.space))
    seq = jsonio.sequence_from_json(_load_desc(args.sequence), horizon=args.horizon)
    n = args.horizon
    scale = Scale(
        epsilon=jsonio.parse_fraction(args.epsilon),
        t=jsonio.parse_fraction(args.t),
        k_max=args.kmax if args.kmax is not None else max(1, n // 10),
        horizon=n,
        m=args.m if args.m is not None else 2,
        depth=min(args.depth, n) if args.depth is not None else min(8, n),
    )
    report = classify(space, seq, scale)
    payload = {
        "space": space.name,
        "sequence": seq.name,
        "scale": scale,
        **jsonio.classification_to_dict(report),
    }
    _emit(payload)
    statuses = [v.status for v in report.verdict_map().values()]
    return 1 if Status.REFUTED_AT_SCALE in statuses else 0


def _cmd_check_axioms(args) -> int:
    space = jsonio.space_from_json(_load_desc(args.space))
    points = [jsonio.parse_point(p) for p in args.points.split(",")]
    t_grid = [jsonio.parse_fraction(t) for t in args.tgrid.split(",")]
    verdict = check_axioms(space, points, t_grid)
    _emit({"space": space.name, "verdict": verdict})
    return 1 if verdict.refuted else 0


def _cmd_gallery(args) -> int:
    if args.name is None:
        _emit([{"name": n, "claim": gallery.build_named(n).claim}
               for n in gallery.GALLERY_NAMES])
        return 0
    entry = gallery.build_named(args.name)
    results = gallery.verify_entry(entry)
    payload = {
        "name": entry.name,
        "kind": entry.kind,
        "claim": entry.claim,
        "facts": [{"check": r.fact.check,
                   "expected": r.fact.expected,
                   "status": r.verdict.status,
                   "ok": r.ok} for r in results],
    }
    _emit(payload)
    return 0 if all(r.ok for r in results) else 1


def _cmd_suite(args) -> int:
    ids = list(suites.suite_ids()) if args.id == "all" else [args.id]
    worst = 0
    for sid in ids:
        report = suites.run_suite(sid, seed=args.seed, cases=args.cases)
        _emit(report.to_dict())
        if not report.ok:
            worst = 1
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvml",
        description="finite-scale checks for fuzzy metric spaces and their "
                    "sequence classes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a sequence at one scale")
    p.add_argument("--space", required=True)
    p.add_argument("--sequence", required=True)
    p.add_argument("--epsilon", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("check-axioms", help="check membership axioms on samples")
    p.add_argument("--space", required=True)
    p.add_argument("--points", required=True,
                   help="comma-separated points, e.g. '0,1/2,1' or 'x:3,y:4'")
    p.add_argument("--tgrid", required=True, help="comma-separated times")
    p.set_defaults(fn=_cmd_check_axioms)

    p = sub.add_parser("gallery", help="list entries or re-verify one")
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(fn=_cmd_gallery)

    p = sub.add_parser("suite", help="run a property suite (or 'all')")
    p.add_argument("id")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--cases", type=int, default=None)
    p.set_defaults(fn=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UnknownNameError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: bad input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
