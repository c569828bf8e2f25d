"""Single command line entry point.

One binary, subcommand style.  Partitions are comma-separated integers
("-" for the empty one), index sets look like "{2,4}", and numeric
sequences accept integers, decimals, and fractions like "3/2" (parsed
exactly).  Human-readable tables are the default; ``--json`` switches the
combinatorial commands to machine-readable output, while ``sample`` and
``verify`` always print JSON reports.

Exit codes: 0 holds/member/pass, 1 violation or non-membership found,
2 malformed input, 3 sweep budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .conjectures import (
    star_orbit,
    verify_schur_domination,
    verify_star_conjecture,
    verify_tau_domination,
)
from .decompose import decompose_triple, repaint_canonicalize, validate_decomposition
from .domino import cl_coefficient, enumerate_domino_tableaux, reading_word
from .errors import BudgetExceededError, HornViolatedError, InputError
from .horn import (
    check_offdiag,
    check_pxyq,
    check_sv,
    combined_spectrum_cone,
    essential_triples,
    horn_cone_membership,
    horn_triples,
)
from .lr import lr_coefficient, schur_product
from .partitions import format_index_set, format_partition, parse_partition
from .spectra import (
    eigenvalues_sym,
    sample_verify_combined_cone,
    sample_verify_offdiag,
    sample_verify_theorem1,
    singular_values,
)


def _sequence(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad numeric sequence {text!r}: {exc}") from None


def _int_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise InputError(f"bad integer sequence {text!r}: {exc}") from None


def _read_matrix(path: str | None) -> list[list[float]]:
    fh = sys.stdin if path in (None, "-") else open(path)
    try:
        rows = [[float(tok) for tok in line.split()]
                for line in fh if line.strip()]
    except ValueError as exc:
        raise InputError(f"bad matrix entry: {exc}") from None
    finally:
        if fh is not sys.stdin:
            fh.close()
    if not rows:
        raise InputError("empty matrix")
    return rows


def _numstr(x) -> str:
    return str(x) if isinstance(x, (int, Fraction)) else repr(x)


def _print_report(report, json_flag: bool) -> int:
    if json_flag:
        print(json.dumps(report.to_json()))
    else:
        for v in report.violations:
            print(f"VIOLATED  {v.label}: {_numstr(v.lhs)} > {_numstr(v.rhs)}")
        verdict = "holds" if report.holds else "violated"
        print(f"{verdict} ({report.checked} inequalities, "
              f"min margin {_numstr(report.min_margin)})")
    return 0 if report.holds else 1


# -- coefficient commands ----------------------------------------------------

def cmd_lrcoef(args) -> int:
    value = lr_coefficient(parse_partition(args.lam), parse_partition(args.mu),
                           parse_partition(args.nu))
    print(json.dumps({"c": value}) if args.json else value)
    return 0


def cmd_clcoef(args) -> int:
    value = cl_coefficient(parse_partition(args.lam), parse_partition(args.mu),
                           parse_partition(args.nu))
    print(json.dumps({"c": value}) if args.json else value)
    return 0


def cmd_schur_mult(args) -> int:
    exp = schur_product(parse_partition(args.lam), parse_partition(args.mu))
    if args.json:
        print(json.dumps(
            {"terms": [{"nu": list(nu), "c": c} for nu, c in exp]}))
    else:
        for nu, c in exp:
            print(f"{format_partition(nu)}\t{c}")
    return 0


def cmd_ydt(args) -> int:
    shape = parse_partition(args.shape)
    weight = parse_partition(args.weight) if args.weight else None
    tableaux = list(enumerate_domino_tableaux(shape, weight_filter=weight,
                                              yamanouchi=args.yamanouchi))
    if args.json:
        print(json.dumps({"shape": list(shape), "count": len(tableaux),
                          "tableaux": [_tableau_json(t) for t in tableaux]}))
    else:
        for t in tableaux:
            dominoes = " ".join(
                f"(({d.row},{d.col}),{'H' if d.horizontal else 'V'},{d.label})"
                for d in t.dominoes)
            word = "".join(str(x) for x in reading_word(t))
            print(f"{dominoes} | word={word} | weight={format_partition(t.weight())}")
        print(f"count={len(tableaux)}")
    if args.render:
        from .figures import render_tableaux
        for path in render_tableaux(tableaux, args.render):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _tableau_json(t) -> dict:
    return {"dominoes": [[d.row, d.col, "H" if d.horizontal else "V", d.label]
                         for d in t.dominoes],
            "word": list(reading_word(t)),
            "weight": list(t.weight())}


def cmd_horn_triples(args) -> int:
    triples = essential_triples(args.p) if args.essential else \
        horn_triples(args.p, args.r)
    if args.json:
        print(json.dumps([{"I": list(t.I), "J": list(t.J), "K": list(t.K)}
                          for t in triples]))
    else:
        for t in triples:
            print(f"{format_index_set(t.I)} {format_index_set(t.J)} "
                  f"{format_index_set(t.K)}")
    return 0


# -- inequality commands ------------------------------------------------------

def cmd_ineq_sv(args) -> int:
    return _print_report(check_sv(_sequence(args.gamma), _sequence(args.s),
                                  tol=args.tol), args.json)


def cmd_ineq_offdiag(args) -> int:
    return _print_report(check_offdiag(_sequence(args.lam), _sequence(args.s),
                                       tol=args.tol), args.json)


def cmd_ineq_pxyq(args) -> int:
    mode = "full" if args.full else "ffg-only"
    return _print_report(check_pxyq(_sequence(args.gamma), _sequence(args.s),
                                    _sequence(args.t), mode, tol=args.tol),
                         args.json)


def cmd_cone(args) -> int:
    if (args.a is None) != (args.b is None):
        raise InputError("provide both --a and --b, or --gamma alone")
    if args.a is None:
        if args.gamma is None:
            raise InputError("provide --a/--b or --gamma")
        cone = combined_spectrum_cone(_sequence(args.gamma))
        report = cone.membership(_sequence(args.c), tol=args.tol)
    else:
        report = horn_cone_membership(_sequence(args.a), _sequence(args.b),
                                      _sequence(args.c), tol=args.tol)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for v in report.violations:
            print(f"VIOLATED  {v.label}: {_numstr(v.lhs)} > {_numstr(v.rhs)}")
        print("member" if report.holds else "not a member")
    return 0 if report.holds else 1


def cmd_decompose(args) -> int:
    a, b, c = _sequence(args.a), _sequence(args.b), _sequence(args.c)
    try:
        blocks = decompose_triple(a, b, c)
    except HornViolatedError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    valid = validate_decomposition(a, b, c, blocks)
    if args.json:
        print(json.dumps({"blocks": [bl.to_json() for bl in blocks],
                          "valid": valid}))
    else:
        for bl in blocks:
            print(f"t={bl.t} a=({','.join(map(str, bl.a))}) "
                  f"b=({','.join(map(str, bl.b))}) c=({','.join(map(str, bl.c))})")
        print(f"valid={valid}")
    return 0 if valid else 1


def cmd_repaint(args) -> int:
    steps = repaint_canonicalize(_int_sequence(args.colors), args.m)
    if args.json:
        print(json.dumps([st.to_json() for st in steps]))
    else:
        for st in steps:
            print(f"interlace colors {st.colors} starting {st.start} -> "
                  f"{','.join(map(str, st.coloring))}")
        print(f"steps={len(steps)}")
    return 0


# -- numeric commands ---------------------------------------------------------

_SAMPLERS = {"thm1": "sv-block", "offdiag": "eig-offdiag", "cone2": "cone-sum"}


def cmd_sample(args) -> int:
    tol = float(args.tol) if args.tol is not None else 1e-9
    if args.kind in ("thm1", "offdiag") and args.n is None:
        raise InputError(f"sample {args.kind} needs -n")
    if args.kind == "thm1":
        report = sample_verify_theorem1(args.p, args.n, args.trials, args.seed, tol)
    elif args.kind == "offdiag":
        report = sample_verify_offdiag(args.p, args.n, args.trials, args.seed, tol)
    else:
        report = sample_verify_combined_cone(args.p, args.trials, args.seed, tol)
    print(json.dumps(report.to_json()))
    if args.plot:
        from .figures import render_margin_histogram
        render_margin_histogram(report, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_svd(args) -> int:
    values = singular_values(_read_matrix(args.file))
    print(json.dumps(values) if args.json else " ".join(repr(v) for v in values))
    return 0


def cmd_eig(args) -> int:
    values = eigenvalues_sym(_read_matrix(args.file))
    print(json.dumps(values) if args.json else " ".join(repr(v) for v in values))
    return 0


# -- verification sweeps -------------------------------------------------------

_EXIT_BY_STATUS = {"pass": 0, "violation": 1, "budget-exhausted": 3}


def cmd_verify_star(args) -> int:
    report = verify_star_conjecture(args.box[0], args.box[1],
                                    checkpoint=args.resume,
                                    threads=args.threads)
    print(json.dumps(report.to_json()))
    return _EXIT_BY_STATUS[report.status]


def cmd_verify_domination(args) -> int:
    report = verify_schur_domination(parse_partition(args.gamma), p=args.p)
    print(json.dumps(report.to_json()))
    return _EXIT_BY_STATUS[report.status]


def cmd_verify_tau(args) -> int:
    report = verify_tau_domination(args.max_weight)
    print(json.dumps(report.to_json()))
    return _EXIT_BY_STATUS[report.status]


def cmd_orbit(args) -> int:
    orbit = star_orbit(parse_partition(args.lam), parse_partition(args.mu),
                       parts=args.parts)
    if args.json:
        print(json.dumps([[list(l), list(m)] for l, m in orbit]))
    else:
        for lam, mu in orbit:
            print(f"{format_partition(lam)}\t{format_partition(mu)}")
    return 0


def _add_json(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _add_tol(p):
    p.add_argument("--tol", type=Fraction, default=None,
                   help="slack for comparisons (default: exact for rational "
                        "input, 1e-9 for floats)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lrhorn",
        description="Littlewood-Richardson coefficients, domino tableaux, "
                    "and Horn-type spectral inequalities.")
    top.add_argument("--version", action="version", version=f"lrhorn {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lrcoef", help="one coefficient by the classical rule")
    p.add_argument("lam"), p.add_argument("mu"), p.add_argument("nu")
    _add_json(p)
    p.set_defaults(fn=cmd_lrcoef)

    p = sub.add_parser("clcoef", help="one coefficient by the domino rule")
    p.add_argument("lam"), p.add_argument("mu"), p.add_argument("nu")
    _add_json(p)
    p.set_defaults(fn=cmd_clcoef)

    p = sub.add_parser("schur-mult", help="full Schur product expansion")
    p.add_argument("lam"), p.add_argument("mu")
    _add_json(p)
    p.set_defaults(fn=cmd_schur_mult)

    p = sub.add_parser("ydt", help="enumerate semistandard domino tableaux")
    p.add_argument("shape")
    p.add_argument("--weight", default=None, help="restrict to this weight")
    p.add_argument("--yamanouchi", action="store_true",
                   help="keep only lattice reading words")
    p.add_argument("--render", metavar="DIR", default=None,
                   help="also draw each tableau as a PNG in DIR")
    _add_json(p)
    p.set_defaults(fn=cmd_ydt)

    p = sub.add_parser("horn-triples", help="certified index triples")
    p.add_argument("p", type=int)
    p.add_argument("-r", type=int, default=None, help="restrict to one size")
    p.add_argument("--essential", action="store_true",
                   help="only triples with certifying coefficient 1")
    _add_json(p)
    p.set_defaults(fn=cmd_horn_triples)

    p = sub.add_parser("ineq", help="evaluate one inequality family")
    isub = p.add_subparsers(dest="family", required=True)
    q = isub.add_parser("sv", help="block singular values")
    q.add_argument("--gamma", required=True), q.add_argument("--s", required=True)
    _add_tol(q), _add_json(q)
    q.set_defaults(fn=cmd_ineq_sv)
    q = isub.add_parser("offdiag", help="eigenvalues against block singular values")
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--s", required=True)
    _add_tol(q), _add_json(q)
    q.set_defaults(fn=cmd_ineq_offdiag)
    q = isub.add_parser("pxyq", help="two independent blocks, merged spectra")
    q.add_argument("--gamma", required=True)
    q.add_argument("--s", required=True), q.add_argument("--t", required=True)
    q.add_argument("--full", action="store_true",
                   help="all triples, not only the equal-component family")
    _add_tol(q), _add_json(q)
    q.set_defaults(fn=cmd_ineq_pxyq)

    p = sub.add_parser("cone", help="eigenvalue cone membership for a sum")
    p.add_argument("--a"), p.add_argument("--b")
    p.add_argument("--gamma", help="merged spectrum (interlace splitting)")
    p.add_argument("--c", required=True)
    _add_tol(p), _add_json(p)
    p.set_defaults(fn=cmd_cone)

    p = sub.add_parser("decompose", help="split a feasible triple into blocks")
    p.add_argument("--a", required=True), p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    _add_json(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("repaint", help="canonicalize a balanced coloring")
    p.add_argument("--colors", required=True)
    p.add_argument("-m", type=int, required=True, help="number of colors")
    _add_json(p)
    p.set_defaults(fn=cmd_repaint)

    p = sub.add_parser("sample", help="randomized verification harness")
    p.add_argument("kind", choices=sorted(_SAMPLERS))
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", metavar="FILE", default=None,
                   help="histogram of per-trial margins")
    _add_tol(p)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("svd", help="singular values of a dense matrix")
    p.add_argument("file", nargs="?", default=None,
                   help="whitespace-separated rows; default stdin")
    _add_json(p)
    p.set_defaults(fn=cmd_svd)

    p = sub.add_parser("eig", help="eigenvalues of a dense symmetric matrix")
    p.add_argument("file", nargs="?", default=None)
    _add_json(p)
    p.set_defaults(fn=cmd_eig)

    p = sub.add_parser("verify", help="desk-scale verification sweeps")
    vsub = p.add_subparsers(dest="sweep", required=True)
    q = vsub.add_parser("star", help="coefficient domination after rearrangement")
    q.add_argument("--box", type=int, nargs=2, required=True, metavar=("P", "Q"))
    q.add_argument("--resume", metavar="FILE", default=None)
    q.add_argument("--threads", type=int, default=1)
    q.set_defaults(fn=cmd_verify_star)
    q = vsub.add_parser("domination", help="splittings of a merged spectrum")
    q.add_argument("--gamma", required=True)
    q.add_argument("-p", type=int, default=None)
    q.set_defaults(fn=cmd_verify_domination)
    q = vsub.add_parser("tau", help="doubling-map domination")
    q.add_argument("--max-weight", type=int, required=True)
    q.set_defaults(fn=cmd_verify_tau)

    p = sub.add_parser("orbit", help="iterate the star rearrangement")
    p.add_argument("lam"), p.add_argument("mu")
    p.add_argument("--parts", type=int, default=None)
    _add_json(p)
    p.set_defaults(fn=cmd_orbit)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
