"""Command-line interface.

Subcommands:

    stats <perm>                     descent statistics of a permutation
    w <file> --eps E                 generating function of a configuration
    hadamard <left> <right> --eps E  closed-form Hadamard product
    verify <suite> [bounds]          run a verification suite
    zeta build <family> <params..>   one catalog entry
    zeta hadamard <fam:p,..> ...     Hadamard product of catalog entries
    zeta verify [--max-n K]          catalog identity sweep

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .configurations import make_strongly_disjoint, parse_labelled_configuration
from .errors import (BadParameters, ColshuffleError, NotCoherent, ParseError,
                     UnknownFamily, UnknownSuite)
from .permutations import parse_permutation
from .ratfun import RationalGF, expand, hadamard_series, w_of
from .shuffle_algebra import hadamard_via_theorem
from .verify import run_suite
from .zeta import FAMILY_PARAMS, build_entry, hadamard_entries

_USAGE_ERROR = 2
_VERIFY_ERROR = 1


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _rgf_output(rgf: RationalGF, fmt: str) -> None:
    if fmt == "json":
        _emit(rgf.to_json_obj())
    elif fmt == "latex":
        print(rgf.to_latex())
    else:
        print(rgf.to_text())


def cmd_stats(args) -> int:
    perm = parse_permutation(args.permutation)
    st = perm.stat_triple()
    report = {
        "permutation": str(perm),
        "length": len(perm),
        "des": st.des,
        "comaj": st.comaj,
        "col": {str(c): k for c, k in st.col},
        "Des": sorted(perm.descent_set()),
        "sDes": [[p, c] for p, c in perm.s_des()],
    }
    _emit(report)
    return 0


def _load_configuration(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_labelled_configuration(text)


def cmd_w(args) -> int:
    lc = _load_configuration(args.file)
    rgf = w_of(lc, args.eps)
    _rgf_output(rgf, args.format)
    if args.order is not None:
        series = expand(rgf, args.order)
        print(json.dumps([c.to_text() for c in series.coefficients]))
    return 0


def cmd_hadamard(args) -> int:
    lhs = _load_configuration(args.left)
    rhs = _load_configuration(args.right)
    if not args.assume_coherent:
        rhs = make_strongly_disjoint(lhs, rhs)
    lc, rgf = hadamard_via_theorem(lhs, rhs, args.eps)
    if args.format == "json":
        obj = lc.to_json_obj()
        obj["eps"] = args.eps
        obj["w"] = rgf.to_json_obj()
        _emit(obj)
    else:
        print(lc.to_text(), end="")
        _rgf_output(rgf, args.format)
    if args.verify is not None:
        order = args.verify
        oracle = hadamard_series(expand(w_of(lhs, args.eps), order),
                                 expand(w_of(rhs, args.eps), order))
        ok = expand(rgf, order) == oracle
        print("PASS" if ok else "FAIL")
        if not ok:
            return _VERIFY_ERROR
    return 0


_SUITE_BOUNDS = {
    "theorem": ("trials", "order", "seed", "max_support", "max_len",
                "exp_range"),
    "qsym": ("max_len", "cutoff", "colours"),
    "psi": ("max_len", "t_order", "colours"),
    "compat": ("max_total_len", "trials", "seed", "colours"),
    "catalog": ("max_n", "max_d"),
}


def cmd_verify(args) -> int:
    bounds = {}
    if args.suite in _SUITE_BOUNDS:
        for key in _SUITE_BOUNDS[args.suite]:
            value = getattr(args, key, None)
            if value is not None:
                bounds[key] = value
    report = run_suite(args.suite, **bounds)
    _emit(report)
    return 0 if not report["failures"] else _VERIFY_ERROR


def _parse_family_params(family: str, values: list[int]) -> dict:
    if family not in FAMILY_PARAMS:
        raise UnknownFamily(f"unknown family {family!r}; "
                            f"known: {', '.join(sorted(FAMILY_PARAMS))}")
    names = FAMILY_PARAMS[family]
    if len(values) != len(names):
        raise BadParameters(
            f"family {family} takes {len(names)} parameter(s) {names}, "
            f"got {len(values)}")
    return dict(zip(names, values))


def cmd_zeta_build(args) -> int:
    params = _parse_family_params(args.family, args.params)
    entry = build_entry(args.family, **params)
    if args.format == "latex":
        print(entry.closed_form.to_latex())
    else:
        _emit(entry.to_json_obj())
    return 0


def cmd_zeta_hadamard(args) -> int:
    entries = []
    for spec in args.entries:
        family, _, rest = spec.partition(":")
        try:
            values = [int(v) for v in rest.split(",") if v] if rest else []
        except ValueError as exc:
            raise ParseError(f"bad parameters in {spec!r}") from exc
        entries.append(build_entry(family,
                                   **_parse_family_params(family, values)))
    result = hadamard_entries(entries)
    if args.format == "latex":
        print(result.rgf.to_latex())
    else:
        _emit(result.to_json_obj())
    return 0


def cmd_zeta_verify(args) -> int:
    bounds = {}
    if args.max_n is not None:
        bounds["max_n"] = args.max_n
    if args.max_d is not None:
        bounds["max_d"] = args.max_d
    report = run_suite("catalog", **bounds)
    _emit(report)
    return 0 if not report["failures"] else _VERIFY_ERROR


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("text", "json", "latex"),
                        default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colshuffle",
        description="Closed-form Hadamard products of rational generating "
                    "functions via coloured permutation shuffles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="descent statistics of a permutation")
    p.add_argument("permutation", help='e.g. "1^1 2^2" (colour 0 may be omitted)')
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("w", help="generating function of a configuration file")
    p.add_argument("file")
    p.add_argument("--eps", type=int, default=1)
    p.add_argument("--order", type=int, default=None,
                   help="also print the series to this order")
    _add_format(p)
    p.set_defaults(func=cmd_w)

    p = sub.add_parser("hadamard",
                       help="closed-form Hadamard product of two "
                            "configuration files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--eps", type=int, default=1)
    p.add_argument("--assume-coherent", action="store_true",
                   help="use the operands as given instead of relabelling "
                        "the right one")
    p.add_argument("--verify", type=int, metavar="N", default=None,
                   help="check against the series oracle to order N")
    _add_format(p)
    p.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite",
                   help="one of: theorem, qsym, psi, compat, catalog")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-len", dest="max_len", type=int, default=None)
    p.add_argument("--max-support", dest="max_support", type=int, default=None)
    p.add_argument("--exp-range", dest="exp_range", type=int, default=None)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--t-order", dest="t_order", type=int, default=None)
    p.add_argument("--colours", type=int, default=None)
    p.add_argument("--max-total-len", dest="max_total_len", type=int,
                   default=None)
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--max-d", dest="max_d", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("zeta", help="zeta-function catalog")
    zeta_sub = p.add_subparsers(dest="zeta_command", required=True)

    pz = zeta_sub.add_parser("build", help="build one catalog entry")
    pz.add_argument("family")
    pz.add_argument("params", nargs="*", type=int)
    _add_format(pz)
    pz.set_defaults(func=cmd_zeta_build)

    pz = zeta_sub.add_parser("hadamard",
                             help="Hadamard product of catalog entries, "
                                  "e.g. mat:2,1 mat:3,2")
    pz.add_argument("entries", nargs="+")
    _add_format(pz)
    pz.set_defaults(func=cmd_zeta_hadamard)

    pz = zeta_sub.add_parser("verify", help="catalog identity sweep")
    pz.add_argument("--max-n", dest="max_n", type=int, default=None)
    pz.add_argument("--max-d", dest="max_d", type=int, default=None)
    pz.set_defaults(func=cmd_zeta_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NotCoherent, UnknownFamily, UnknownSuite,
            BadParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    except ColshuffleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
