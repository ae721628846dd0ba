"""Catalog-wide verification suites and the registry the CLI dispatches on.

Two suites live here because they cut across presentations rather than
belonging to one construction: the relation suite replays every displayed
relation line against its own rule system, and the confluence suite reduces
every length-3 overlap both ways (plus the h = 0 degeneration of the two
deformed systems).  Everything else is re-exported from its home module.
"""

from __future__ import annotations

import random

from .core import Element
from .errors import UnknownGeneratorError
from .presentations import (
    CATALOG_NAMES,
    CATALOG_PRESENTATION,
    composite,
    presentation,
    relation_catalog,
)
from .printer import element_str
from .report import SuiteBuilder, SuiteReport
from .rewrite import critical_pairs, missing_pairs, strip_h
from .scalars import ONE
from . import calculus, contraction, hopf, rmatrix

_GAMMA_GENS = ("a", "beta", "gamma", "d", "alpha", "b", "c", "delta")
_FORM_GENS = ("w1", "u", "v", "w2")

_CENTRAL_REFS = {"D_h": "Eq. (5)", "Dhat": "Eq. (17)"}


def check_centrality() -> SuiteReport:
    """The two central elements against every generator they must commute with."""
    suite = SuiteBuilder("relations")
    gamma = presentation("gamma")
    forms = presentation("oneforms")
    for name, ref in _CENTRAL_REFS.items():
        for rs, gens in ((gamma, _GAMMA_GENS), (forms, _FORM_GENS)):
            el = composite(name, rs)
            for g in gens:
                gen = Element.generator(rs.table, g)
                suite.zero(f"{name} commutes with {g}", ref,
                           el * gen - gen * el, rs)
    glh = presentation("glh")
    d_h = composite("D_h", glh)
    d_h_inv = composite("D_h_inv", glh)
    one = Element.one(glh.table)
    suite.zero("D_h * D_h_inv = 1", "Eq. (5)", d_h * d_h_inv - one, glh)
    suite.zero("D_h_inv * D_h = 1", "Eq. (5)", d_h_inv * d_h - one, glh)
    return suite.done()


def check_relations() -> SuiteReport:
    """Every displayed relation line, normalized over its own presentation."""
    suite = SuiteBuilder("relations")
    for cat in CATALOG_NAMES:
        rs = CATALOG_PRESENTATION[cat]()
        for rel in relation_catalog(cat):
            suite.zero(rel.name, rel.ref, rel.element, rs)
    report = suite.done()
    report.extend(check_centrality())
    return report


# -- confluence ----------------------------------------------------------------

# presentation -> the tag its rules were read off from
_CONFLUENCE_TARGETS = (
    ("glq", "Eq. (1)"),
    ("glq_localized", "Eq. (1)"),
    ("glh", "Eq. (4)"),
    ("gamma", "Eq. (15)"),
    ("oneforms", "Eq. (39)"),
    ("weyl", "Eq. (52)"),
    ("derivatives", "Eq. (53)"),
)

_RANDOM_WORDS = 200
_MAX_WORD_LEN = 5


def _pair_records(suite: SuiteBuilder, rs, label: str, ref: str):
    missing = missing_pairs(rs)
    suite.true(f"{label}: every out-of-order pair has a rule", ref,
               not missing, witness=", ".join("*".join(p) for p in missing) or None)
    pairs = critical_pairs(rs)
    bad = [p for p in pairs if not p.resolved]
    suite.true(
        f"{label}: all {len(pairs)} length-3 critical pairs resolve",
        ref,
        not bad,
        witness=f"{len(bad)} unresolved" if bad else None,
    )
    # unresolved overlaps are failures of the consistency claim, each
    # surfaced with the difference of its two normal forms
    for p in bad:
        word = "*".join(rs.table.name(i) for i in p.word)
        suite.true(f"{label}: overlap {word} resolves", ref, False,
                   witness=element_str(p.left_nf - p.right_nf))
    return pairs, bad


def _supercommutative(flat) -> bool:
    """Each h-stripped rule sorts to at most one word with coefficient +-1."""
    for rhs in flat.rules.values():
        terms = rhs.terms
        if not terms:
            continue
        if len(terms) > 1:
            return False
        (hdeg, _), coeff = next(iter(terms.items()))
        if hdeg or coeff not in (ONE, -ONE):
            return False
    return True


def _classical_records(suite: SuiteBuilder, name: str, ref: str, rng):
    rs = presentation(name)
    flat = strip_h(rs)
    suite.true(f"{name} at h = 0 is a supercommutative sorting system", ref,
               _supercommutative(flat))
    pairs = critical_pairs(flat)
    bad = [p for p in pairs if not p.resolved]
    suite.true(
        f"{name} at h = 0: all {len(pairs)} critical pairs resolve", ref, not bad,
        witness=f"{len(bad)} unresolved" if bad else None,
    )
    table = rs.table
    indices = range(len(table))
    failures = 0
    first = None
    for _ in range(_RANDOM_WORDS):
        letters = tuple(rng.choice(indices)
                        for _ in range(rng.randint(1, _MAX_WORD_LEN)))
        hdeg = 1 if rng.random() < 0.25 else 0
        word = Element.from_word(table, letters, hdeg)
        through_rs = rs.normalize(word).drop_h()
        through_flat = flat.normalize(word.drop_h())
        if through_rs != through_flat:
            failures += 1
            if first is None:
                hmark = "h*" if hdeg else ""
                first = hmark + "*".join(table.name(i) for i in letters)
    suite.true(
        f"normalize commutes with h-deletion on {_RANDOM_WORDS} random "
        f"{name} words", ref, failures == 0,
        witness=f"{failures} mismatches, first at {first}" if failures else None,
    )


def check_confluence() -> SuiteReport:
    suite = SuiteBuilder("confluence")
    for name, ref in _CONFLUENCE_TARGETS:
        _pair_records(suite, presentation(name), name, ref)
    rng = random.Random(0)
    for name, ref in (("glh", "Eq. (4)"), ("gamma", "Eq. (15)")):
        _classical_records(suite, name, ref, rng)
    return suite.done()


# -- registry --------------------------------------------------------------------

SUITES = {
    "relations": check_relations,
    "confluence": check_confluence,
    "hopf": hopf.check_hopf,
    "coactions": hopf.check_coactions,
    "calculus": calculus.check_calculus,
    "maurer": calculus.check_maurer,
    "rmatrix": rmatrix.check_rmatrix,
    "superalgebra": calculus.check_superalgebra,
    "derivatives": hopf.check_derivative_comaps,
    "contraction": contraction.check_all,
    "superplane": calculus.check_superplane,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, jobs: int = 1) -> SuiteReport:
    """Run one named suite (or all of them) and return the merged report."""
    if name == "all":
        report = SuiteReport("all")
        if jobs > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for sub in pool.map(_run_by_name, SUITES):
                    report.extend(sub)
        else:
            for fn in SUITES.values():
                report.extend(fn())
        return report
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownGeneratorError(
            f"unknown suite {name!r}; available: {', '.join(SUITE_NAMES)}"
        ) from None
    return fn()


def _run_by_name(name: str) -> SuiteReport:
    return SUITES[name]()
