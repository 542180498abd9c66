"""Command-line front end.

Exit codes: 0 success, 1 domain error (cyclic input, size cap, bad file),
2 usage error, 3 theorem violation from the check harness.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .ideals import enumerate_special_ideals
from .lattice import lattice_properties, lattice_to_dot, lattice_to_json_dict
from .quiver import QuiverError, is_acyclic, max_parallel_paths, parse_quiver, quiver_to_text
from .random_quivers import random_acyclic_quiver
from .semigroup import CapExceeded, build_semigroup, enumerate_congruences
from .verify import check_theorems, congruence_lattice

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


def _load_quiver(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise QuiverError(f"cannot read {path}: {exc}") from exc
    return parse_quiver(text)


def _cmd_validate(args) -> int:
    q = _load_quiver(args.file)
    acyclic = "yes" if is_acyclic(q) else "no"
    print(f"ok: {len(q.vertices)} vertices, {len(q.arrows)} arrows, acyclic: {acyclic}")
    return EXIT_OK


def _cmd_paths(args) -> int:
    q = _load_quiver(args.file)
    s = build_semigroup(q)
    for p in s.paths:
        print(p.name)
    return EXIT_OK


def _cmd_congruences(args) -> int:
    q = _load_quiver(args.file)
    s = build_semigroup(q)
    congs = enumerate_congruences(s, args.max_elements)
    if args.json:
        payload = {"count": len(congs), "congruences": [c.to_json_dict() for c in congs]}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{len(congs)} congruences")
        name = s.element_name
        for c in congs:
            print(" ".join("{" + ",".join(name(i) for i in b) + "}" for b in c.blocks))
    return EXIT_OK


def _cmd_ideals(args) -> int:
    from .verify import ideal_label

    q = _load_quiver(args.file)
    s = build_semigroup(q)
    ideals = enumerate_special_ideals(q, args.max_elements)
    names = [p.name for p in s.paths]
    if args.json:
        payload = {"count": len(ideals), "ideals": [i.to_json_dict() for i in ideals]}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{len(ideals)} special ideals")
        for ideal in ideals:
            print(f"dim {ideal.dim}: {ideal_label(ideal, names)}")
    return EXIT_OK


def _cmd_lattice(args) -> int:
    q = _load_quiver(args.file)
    s = build_semigroup(q)
    congs = enumerate_congruences(s, args.max_elements)
    lat = congruence_lattice(s, congs)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(lattice_to_dot(lat))
    if args.json:
        print(json.dumps(lattice_to_json_dict(lat), indent=2, sort_keys=True))
    elif not args.dot:
        props = lattice_properties(lat)
        print(f"elements: {lat.n}")
        print(f"covers: {len(lat.covers)}")
        for key, value in props.items():
            print(f"{key}: {'yes' if value else 'no'}")
    return EXIT_OK


def _cmd_check(args) -> int:
    q = _load_quiver(args.file)
    report = check_theorems(q, args.max_elements)
    print(report.format())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_random_check(args) -> int:
    rng = random.Random(args.seed)
    worst = EXIT_OK
    for trial in range(1, args.trials + 1):
        q = random_acyclic_quiver(rng, args.vertices, args.arrows, args.max_elements)
        report = check_theorems(q, args.max_elements)
        status = "ok" if report.ok else "VIOLATION"
        summary = report.quiver_summary
        print(
            f"trial {trial}: {summary['vertices']} vertices, {summary['arrows']} arrows, "
            f"{summary['elements']} elements, {summary['congruences']} congruences: {status}"
        )
        if not report.ok:
            worst = EXIT_VIOLATION
            print(report.format())
            print("quiver was:")
            print(quiver_to_text(q), end="")
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcong",
        description=(
            "Congruence lattices of path semigroups of finite acyclic quivers, "
            "and the matching lattice of relation-generated path-algebra ideals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a quiver file and report its shape")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("paths", help="list all paths in canonical order")
    p.add_argument("file")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("congruences", help="enumerate all congruences")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-elements", type=int, default=20)
    p.set_defaults(func=_cmd_congruences)

    p = sub.add_parser("ideals", help="enumerate all special ideals")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-elements", type=int, default=20)
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("lattice", help="build the congruence lattice")
    p.add_argument("file")
    p.add_argument("--dot", metavar="PATH", help="write a DOT rendering to PATH")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-elements", type=int, default=20)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("check", help="run the theorem-verification harness")
    p.add_argument("file")
    p.add_argument("--max-elements", type=int, default=20)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("random-check", help="verify the theorems on random quivers")
    p.add_argument("--vertices", type=int, default=4)
    p.add_argument("--arrows", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--max-elements", type=int, default=20)
    p.set_defaults(func=_cmd_random_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (QuiverError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
