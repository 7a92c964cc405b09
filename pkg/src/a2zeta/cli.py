"""Command-line front end.

Exit codes: 0 pass, 1 usage or domain error, 2 validation failure,
3 identity failure.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .builders import BuildError, complex_from_presentation, find_presentation
from .complex_core import ComplexError, QuotientComplex, to_data, validate
from .groups import FiniteGroup, GroupError
from .lfun import LReport, Verdict, _coeffs, check_divisibility, check_induction, compute_L, run_all
from .rep_voltage import (
    CoverSpec,
    Representation,
    RepresentationError,
    build_cover,
    permutation_representation,
    regular_representation,
)
from .serialize import (
    FormatError,
    dumps,
    load_complex,
    load_group,
    load_presentation,
    load_rep,
    presentation_from_json,
    read_json,
    save_complex,
)

CHECKS = ("identity", "functional", "induction", "cohomology", "trace", "operators")

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_IDENTITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fixture(name: str) -> Path:
    return Path(str(resources.files("a2zeta") / "fixtures" / name))


def default_complex() -> QuotientComplex:
    """q=2 one-vertex complex with the shipped Z/3 voltages."""
    T = presentation_from_json(read_json(_fixture("q2_presentation.json")))
    G = load_group(_fixture("rep_z3.json"))
    return complex_from_presentation(T, G.generators, G)


def _presentation(args):
    if args.presentation:
        return load_presentation(args.presentation)
    if args.q is None:
        raise UsageError("build needs --q or --presentation")
    if args.q == 2 and args.seed is None:
        return presentation_from_json(read_json(_fixture("q2_presentation.json")))
    return find_presentation(args.q, seed=args.seed)


def _resolve_rep(choice: str, c: QuotientComplex) -> Representation:
    if choice == "trivial":
        return Representation.trivial(c.group)
    if choice == "permutation":
        return permutation_representation(c.group)
    if choice == "regular":
        return regular_representation(c.group)
    if not Path(choice).exists():
        raise UsageError(f"--rep: expected trivial, permutation, regular or a file; {choice!r} not found")
    return load_rep(choice, c.group)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _validation_failure(c: QuotientComplex, fmt: str) -> int | None:
    report = validate(c)
    if report.ok:
        return None
    if fmt == "json":
        sys.stdout.write(dumps({"validation": report.to_dict()}))
    else:
        sys.stdout.write(str(report) + "\n")
    return EXIT_INVALID


# ---------------------------------------------------------------- commands


def cmd_build(args) -> int:
    T = _presentation(args)
    if args.voltages or args.cover:
        G = load_group(args.voltages or args.cover)
        c = complex_from_presentation(T, G.generators, G)
    else:
        c = complex_from_presentation(T)
    if args.cover:
        c = build_cover(CoverSpec(c, action=c.group.generators))
    failed = _validation_failure(c, args.format)
    if failed is not None:
        return failed
    if args.out:
        save_complex(args.out, c)
    if args.format == "json":
        if not args.out:
            sys.stdout.write(dumps(to_data(c)))
    else:
        sys.stdout.write(c.summary() + "\n")
    return EXIT_OK


def _induction_verdicts(c: QuotientComplex) -> dict[str, Verdict]:
    """Regular cover (sheets = group elements, trivial rep) against the regular rep on ``c``."""
    G = c.group
    if G.order == 1:
        skip = Verdict("induction", True, "skipped: trivial voltage group", {"skipped": True})
        return {"induction": skip}
    H1 = FiniteGroup.trivial(G.degree)
    cover = build_cover(CoverSpec(c, subgroup=H1))
    ind = check_induction(c, G, H1, Representation.trivial(H1), cover)
    base_r = compute_L(c, Representation.trivial(G))
    cover_r = compute_L(cover, Representation.trivial(cover.group))
    return {"induction": ind, "divisibility": check_divisibility(base_r, cover_r)}


def _load_for_check(args) -> QuotientComplex:
    return load_complex(args.complex) if args.complex else default_complex()


def _report_text(r: LReport) -> str:
    lines = [
        f"q={r.q} d={r.d} N={list(r.N)} chi={r.chi} rep={r.rep_name or '-'}",
        f"P0 (deg {r.degrees['P0']}): {_fmt_poly(r.P0)}",
        f"P1 (deg {r.degrees['P1']}): {_fmt_poly(r.P1)}",
        f"P2 (deg {r.degrees['P2']}): {_fmt_poly(r.P2)}",
    ]
    for k, v in r.checks.items():
        line = f"{k}: {'PASS' if v.passed else 'FAIL'}"
        if v.detail:
            line += f" ({v.detail})"
        lines.append(line)
        if not v.passed and "differing_coefficients" in v.data:
            lines.append(f"  lhs: {v.data['lhs']}")
            lines.append(f"  rhs: {v.data['rhs']}")
    return "\n".join(lines) + "\n"


def _fmt_poly(p) -> str:
    return "[" + ", ".join(str(x) for x in _coeffs(p)) + "]"


def cmd_check(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    c = _load_for_check(args)
    if not args.no_validate:
        failed = _validation_failure(c, args.format)
        if failed is not None:
            return failed
    rho = _resolve_rep(args.rep, c)
    which = CHECKS if args.which == "all" else (args.which,)
    report = run_all(c, rho, args.n_max, tuple(w for w in which if w != "induction"))
    if "induction" in which:
        report.checks.update(_induction_verdicts(c))
    text = dumps(report.to_dict()) if args.format == "json" else _report_text(report)
    _emit(text, args.out)
    return EXIT_OK if report.ok else EXIT_IDENTITY


def cmd_lfun(args) -> int:
    c = _load_for_check(args)
    if not args.no_validate:
        failed = _validation_failure(c, args.format)
        if failed is not None:
            return failed
    report = compute_L(c, _resolve_rep(args.rep, c))
    text = dumps(report.to_dict()) if args.format == "json" else _report_text(report)
    _emit(text, args.out)
    return EXIT_OK


# -------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="a2zeta", description="Artin L-functions of finite quotients of the PGL3 building")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a one-vertex complex, optionally with voltages or a cover")
    b.add_argument("--q", type=int)
    b.add_argument("--presentation", help="triangle presentation JSON")
    b.add_argument("--voltages", help="representation file whose group generators a_x give the voltages")
    b.add_argument("--cover", help="representation file; build the cover sheeted over its permutation action")
    b.add_argument("--seed", type=int, help="shuffle the presentation search order")
    b.add_argument("--out")
    b.add_argument("--format", choices=("json", "text"), default="text")
    b.set_defaults(func=cmd_build)

    for name, func, hlp in (
        ("check", cmd_check, "run identity checks"),
        ("lfun", cmd_lfun, "print P0, P1, P2"),
    ):
        s = sub.add_parser(name, help=hlp)
        if name == "check":
            s.add_argument("which", choices=CHECKS + ("all",))
            s.add_argument("--n-max", type=int, default=6)
        s.add_argument("--complex", help="complex JSON (default: built-in q=2 complex with Z/3 voltages)")
        s.add_argument("--rep", default="trivial", help="trivial, permutation, regular or a representation file")
        s.add_argument("--format", choices=("json", "text"), default="json" if name == "check" else "text")
        s.add_argument("--out")
        s.add_argument("--no-validate", action="store_true", help="skip structural validation of the complex")
        s.set_defaults(func=func)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ComplexError as exc:
        print(f"error: invalid complex: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, BuildError, FormatError, RepresentationError, GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
