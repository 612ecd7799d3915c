"""Verification suites: randomized and exhaustive identity checks.

Each suite returns a JSON-ready report dict with the fields ``suite``,
``cases`` (number of instances checked) and ``failures`` (a list, empty on
success).  The CLI exposes them behind the ``verify`` subcommand; the test
suite drives them directly at the documented acceptance bounds.
"""

from __future__ import annotations

import random

from .configurations import (ColouredConfiguration, Label,
                             LabelledConfiguration, SignedMonomial)
from .errors import UnknownSuite
from .permutations import (ColouredPermutation, all_coloured_permutations,
                           s_des)
from .qsym import psi_closed_form_check, verify_product_rule
from .ratfun import expand, hadamard_series, w_of
from .shuffle_algebra import (STATISTICS, check_shuffle_compatibility,
                              hadamard_via_theorem)
from .zeta import build_entry

__all__ = [
    "random_coherent_pair",
    "theorem_suite",
    "qsym_suite",
    "psi_suite",
    "compat_suite",
    "catalog_suite",
    "run_suite",
    "SUITES",
]


def _random_config(rng: random.Random, symbols: list[int], colours: list[int],
                   max_support: int, max_len: int) -> ColouredConfiguration:
    terms = []
    for _ in range(rng.randint(1, max_support)):
        length = rng.randint(0, max_len)
        perm_symbols = rng.sample(symbols, length)
        entries = [(s, rng.choice(colours)) for s in perm_symbols]
        terms.append((ColouredPermutation(entries), rng.randint(1, 2)))
    return ColouredConfiguration(terms)


def random_coherent_pair(rng: random.Random, max_support: int = 3,
                         max_len: int = 3, exp_range: int = 3
                         ) -> tuple[LabelledConfiguration, LabelledConfiguration]:
    """A random coherent pair: symbol-disjoint configurations that may
    share nonzero colours, with labels agreeing on the shared ones."""
    colours = list(range(0, 4))
    lhs_config = _random_config(rng, list(range(1, 7)), colours,
                                max_support, max_len)
    rhs_config = _random_config(rng, list(range(11, 17)), colours,
                                max_support, max_len)

    def random_monomial() -> SignedMonomial:
        return SignedMonomial(rng.choice((1, -1)),
                              rng.randint(-exp_range, exp_range))

    lhs_label = Label({c: random_monomial() for c in lhs_config.palette_star()})
    rhs_assignments = {}
    for c in rhs_config.palette_star():
        if c in lhs_config.palette_star():
            rhs_assignments[c] = lhs_label(c)
        else:
            rhs_assignments[c] = random_monomial()
    return (LabelledConfiguration(lhs_config, lhs_label),
            LabelledConfiguration(rhs_config, Label(rhs_assignments)))


def theorem_suite(trials: int = 200, order: int = 10, seed: int = 0,
                  max_support: int = 3, max_len: int = 3,
                  exp_range: int = 3) -> dict:
    """Random coherent pairs: the closed-form Hadamard product must match
    the coefficientwise product of the expanded series."""
    rng = random.Random(seed)
    failures = []
    for case in range(trials):
        lhs, rhs = random_coherent_pair(rng, max_support, max_len, exp_range)
        eps = rng.randint(-2, 2)
        _, closed = hadamard_via_theorem(lhs, rhs, eps)
        oracle = hadamard_series(expand(w_of(lhs, eps), order),
                                 expand(w_of(rhs, eps), order))
        if expand(closed, order) != oracle:
            failures.append({"case": case, "eps": eps,
                             "lhs": lhs.to_text(), "rhs": rhs.to_text()})
    return {"suite": "theorem", "cases": trials, "order": order,
            "seed": seed, "failures": failures}


def qsym_suite(max_len: int = 2, cutoff: int = 4, colours: int = 3) -> dict:
    """Exhaustive product rule for fundamental expansions: F_a * F_b equals
    the sum of F_c over shuffles, for all disjoint pairs up to the bounds."""
    cases = 0
    failures = []
    for n in range(0, max_len + 1):
        for m in range(0, max_len + 1):
            for a in all_coloured_permutations(n, colours):
                for b in all_coloured_permutations(m, colours,
                                                   first_symbol=n + 1):
                    cases += 1
                    if not verify_product_rule(a, b, cutoff):
                        failures.append({"a": str(a), "b": str(b)})
    return {"suite": "qsym", "cases": cases, "cutoff": cutoff,
            "failures": failures}


def psi_suite(max_len: int = 4, t_order: int = 8, colours: int = 3) -> dict:
    """Exhaustive check of the specialisation closed form, one permutation
    per coloured-descent-set class."""
    cases = 0
    failures = []
    for n in range(0, max_len + 1):
        seen = set()
        for a in all_coloured_permutations(n, colours):
            key = s_des(a)
            if key in seen:
                continue
            seen.add(key)
            cases += 1
            if not psi_closed_form_check(a, t_order):
                failures.append({"a": str(a)})
    return {"suite": "psi", "cases": cases, "t_order": t_order,
            "failures": failures}


def compat_suite(max_total_len: int = 5, trials: int = 200, seed: int = 0,
                 colours: int = 3) -> dict:
    """Shuffle-compatibility harness: the descent statistics must be clean
    and the planted non-statistic control must be caught."""
    reports = []
    failures = []
    for name in ("des_comaj_col", "sdes"):
        report = check_shuffle_compatibility(
            STATISTICS[name], trials=trials, max_len=max_total_len,
            colours=colours, seed=seed, statistic_name=name)
        reports.append(report.to_json_obj())
        if not report.ok:
            failures.append({"statistic": name,
                             "counterexample": report.counterexample})
    control = check_shuffle_compatibility(
        STATISTICS["first_symbol"], trials=trials, max_len=max_total_len,
        colours=colours, seed=seed, statistic_name="first_symbol")
    reports.append(control.to_json_obj())
    if control.ok:
        failures.append({"statistic": "first_symbol",
                         "error": "control was not caught"})
    return {"suite": "compat", "cases": len(reports), "reports": reports,
            "failures": failures}


def catalog_suite(max_n: int = 4, max_d: int = 5) -> dict:
    """Rebuild every catalog family over a parameter grid; each build
    verifies the defining identity symbolically."""
    cases = 0
    failures = []
    grids = {
        "mat": [{"d": d, "e": e} for d in range(1, max_d + 1)
                for e in range(1, max_d + 1)],
        "so": [{"d": d} for d in range(1, max_d + 1)],
        "f2d_cc": [{"d": d} for d in range(1, max_d + 1)],
        "threshold": [{"n": n} for n in range(1, max_n + 1)],
        "threshold_cc": [{"n": n} for n in range(1, max_n + 1)],
        "Tn": [{"n": n} for n in range(1, max_n + 1)],
        "Tn_cc": [{"n": n} for n in range(1, max_n + 1)],
        "unitriangular_oc": [{"d": d} for d in range(1, max_d + 1)],
    }
    for family, grid in grids.items():
        for params in grid:
            cases += 1
            try:
                build_entry(family, **params)
            except AssertionError as exc:
                failures.append({"family": family, "params": params,
                                 "error": str(exc)})
    return {"suite": "catalog", "cases": cases, "failures": failures}


SUITES = {
    "theorem": theorem_suite,
    "qsym": qsym_suite,
    "psi": psi_suite,
    "compat": compat_suite,
    "catalog": catalog_suite,
}


def run_suite(name: str, **bounds) -> dict:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; "
                           f"known: {', '.join(sorted(SUITES))}")
    return SUITES[name](**bounds)
