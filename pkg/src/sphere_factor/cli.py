"""Command-line interface.

Exit codes:
  0   success / factorable (constructive or existential) / valid
  1   certificate or input design invalid
  2   proven impossible (NotFactorable, infeasible parameters, infeasible search)
  3   unknown / not constructed / search budget exhausted
  64  usage error
  65  unparsable input file
  66  input file unreadable
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .designs import verify_design
from .divisibility import ExceptionTable, Verdict, skeleton_feasibility
from .errors import InfeasibleParameters, ParseError, UnsupportedConstruction
from .exact_cover import CoverStatus, SearchBudget, search_design
from .factorize import construct, exponentiate_factorization, simplex_factorization_from_design
from .formats import parse_certificate, parse_design, serialize_certificate, serialize_design, sniff
from .polytope import Family, SkeletonSpec, face_count
from .verify import verify_certificate

EX_OK, EX_INVALID, EX_IMPOSSIBLE, EX_UNKNOWN = 0, 1, 2, 3
EX_USAGE, EX_DATAERR, EX_NOINPUT = 64, 65, 66

DEFAULT_MAX_MILLIS = 60_000
DEFAULT_MAX_FACES = 2_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _spec(args) -> SkeletonSpec:
    try:
        return SkeletonSpec(Family.parse(args.family), args.n, args.ell)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.max_nodes, args.max_millis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, path) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path) -> str:
    return Path(path).read_text()


def cmd_feasibility(args) -> int:
    spec = _spec(args)
    if spec.ell < 1:
        raise UsageError("feasibility needs l >= 1")
    table = ExceptionTable.load(args.exceptions) if args.exceptions else None
    verdict = skeleton_feasibility(spec, table)
    print(verdict)
    return {
        Verdict.CONSTRUCTIVE: EX_OK,
        Verdict.EXISTENTIAL: EX_OK,
        Verdict.NOT_FACTORABLE: EX_IMPOSSIBLE,
        Verdict.UNKNOWN: EX_UNKNOWN,
    }[verdict.verdict]


def cmd_construct(args) -> int:
    spec = _spec(args)
    if spec.ell < 1:
        raise UsageError("construct needs l >= 1")
    total = face_count(spec)
    if total > args.max_faces:
        print(f"not constructed: {spec} has {total} faces, above --max-faces {args.max_faces}", file=sys.stderr)
        return EX_UNKNOWN
    try:
        cert = construct(spec, _budget(args))
    except InfeasibleParameters as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EX_IMPOSSIBLE
    except UnsupportedConstruction as exc:
        print(f"not constructed: {exc}", file=sys.stderr)
        return EX_UNKNOWN
    report = verify_certificate(cert)
    if not report.valid:
        print(f"internal error: constructed certificate failed verification: {report}", file=sys.stderr)
        return EX_INVALID
    _write(serialize_certificate(cert), args.output)
    print(f"{spec}: {len(cert.blocks)} blocks, {cert.face_total} faces", file=sys.stderr)
    return EX_OK


def _print_report(report) -> None:
    print("valid" if report.valid else "invalid")
    if report.evenness is not None:
        print(f"evenness: even={report.evenness.is_even} multiplicity={report.evenness.multiplicity}")
    for f, count in report.bad_faces:
        what = "uncovered" if count == 0 else f"covered {count} times"
        print(f"face {f.encode()}: {what}")
    for bi, f in report.foreign_faces:
        print(f"block {bi}: face {f.encode()} is not a face of the skeleton")
    for bi, reason in report.bad_blocks:
        print(f"block {bi}: not canonical ({reason})")
    for note in report.notes:
        print(f"note: {note}")


def cmd_verify(args) -> int:
    text = _read(args.path)
    kind = sniff(text)
    if kind == "design":
        d = parse_design(text)
        rep = verify_design(d)
        print("valid" if rep.valid else "invalid")
        for s, count in rep.uncovered:
            print(f"subset {' '.join(map(str, s))}: covered {count} times")
        for i, reason in rep.malformed:
            print(f"block {i}: {reason}")
        if not rep.block_count_ok:
            print(f"block count {len(d.blocks)}, expected {d.expected_blocks}")
        return EX_OK if rep.valid else EX_INVALID
    cert = parse_certificate(text)
    report = verify_certificate(cert)
    _print_report(report)
    return EX_OK if report.valid else EX_INVALID


def cmd_search_design(args) -> int:
    v, k, t = args.v, args.k, args.t
    if not 0 <= t < k <= v:
        raise UsageError(f"need t < k <= v, got v={v} k={k} t={t}")
    outcome = search_design(v, k, t, _budget(args))
    print(f"({v},{k},{t}): {outcome.status.value} after {outcome.nodes_expanded} nodes", file=sys.stderr)
    if outcome.status is CoverStatus.SOLVED:
        _write(serialize_design(outcome.design), args.output)
        return EX_OK
    return EX_IMPOSSIBLE if outcome.status is CoverStatus.INFEASIBLE else EX_UNKNOWN


def cmd_exponentiate(args) -> int:
    text = _read(args.path)
    kind = sniff(text)
    if kind == "design":
        d = parse_design(text)
        rep = verify_design(d)
        if d.k != d.t + 1 or not rep.valid:
            print(f"input design is not a valid ({d.v},{d.t + 1},{d.t}) system", file=sys.stderr)
            for s, count in rep.uncovered[:20]:
                print(f"subset {' '.join(map(str, s))}: covered {count} times", file=sys.stderr)
            return EX_INVALID
        cert = simplex_factorization_from_design(d)
    elif kind == "certificate":
        cert = parse_certificate(text)
        if cert.spec.family is not Family.SIMPLEX:
            print("exponentiation needs a simplex certificate", file=sys.stderr)
            return EX_INVALID
        report = verify_certificate(cert)
        if not report.valid:
            _print_report(report)
            return EX_INVALID
    else:
        raise ParseError("expected a DESIGN or FACTORIZATION header")
    cube = exponentiate_factorization(cert)
    report = verify_certificate(cube)
    if not report.valid:
        _print_report(report)
        return EX_INVALID
    _write(serialize_certificate(cube), args.output or args.out)
    print(f"{cube.spec}: {len(cube.blocks)} blocks", file=sys.stderr)
    return EX_OK


def _add_budget(p) -> None:
    p.add_argument("--max-nodes", type=int, default=None, help="search node budget (default unlimited)")
    p.add_argument("--max-millis", type=int, default=DEFAULT_MAX_MILLIS,
                   help=f"search time budget in ms (default {DEFAULT_MAX_MILLIS})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sphere-factor", description="Factor polytope skeleta into canonical spheres.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("feasibility", help="report what is known about a factorization")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("n", type=int)
    p.add_argument("ell", type=int, metavar="l")
    p.add_argument("--exceptions", help="file of 'k l v' triples with no design")
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("construct", help="build and verify a factorization certificate")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("n", type=int)
    p.add_argument("ell", type=int, metavar="l")
    p.add_argument("-o", "--output")
    p.add_argument("--max-faces", type=int, default=DEFAULT_MAX_FACES,
                   help=f"refuse skeleta with more faces than this (default {DEFAULT_MAX_FACES})")
    _add_budget(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate (or design) file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-design", help="find a (v,k,t) Steiner system by exact cover")
    p.add_argument("v", type=int)
    p.add_argument("k", type=int)
    p.add_argument("t", type=int)
    p.add_argument("-o", "--output")
    _add_budget(p)
    p.set_defaults(func=cmd_search_design)

    p = sub.add_parser("exponentiate", help="map a simplex factorization to a cube factorization")
    p.add_argument("path", help="DESIGN file with k = t + 1, or simplex certificate")
    p.add_argument("out", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_exponentiate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sphere-factor: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ParseError as exc:
        print(f"{getattr(args, 'path', '<input>')}: parse error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except (OSError, UnicodeDecodeError) as exc:
        print(f"sphere-factor: cannot read input: {exc}", file=sys.stderr)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())
