"""The exterior differential, Cartan-Maurer equations, and derivative actions.

The differential is a left graded Leibniz map fixed by its generator images:
parameters go to their differentials, differentials to zero, localized even
inverses to -x_inv*d(x)*x_inv, and (over the one-form presentation) each
Cartan-Maurer form to its quadratic expansion.  On an h-carrying word it
anticommutes, d(h*w) = -h*d(w).

The derivative generators act on parameter words by normal-ordering in the
Weyl presentation and discarding every word that still carries a derivative
letter (the vacuum action: derivatives annihilate 1).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import Element
from .errors import UnknownGeneratorError
from .parser import parse
from .presentations import (
    GLH_LINES,
    MAURER_D_LINES,
    _parse_relations,
    _subs_exprs,
    build_gamma,
    build_oneforms,
    build_weyl,
    relation_catalog,
    resolver_for,
)
from .report import SuiteBuilder, SuiteReport
from .rewrite import verify_zero
from .scalars import ONE

_PARAM_IMAGE = {"a": "alpha", "beta": "b", "gamma": "c", "d": "delta"}
_FORM_IMAGE = dict(zip(("w1", "u", "v", "w2"), MAURER_D_LINES))


class DifferentialMap:
    """Graded derivation determined by one image per generator.

    Images may be None (the generator is killed).  The Leibniz sign in front
    of the i-th summand is the parity of the word prefix before position i,
    and an h prefix contributes one extra global sign.
    """

    def __init__(self, table, images):
        self.table = table
        self._images = tuple(images.get(name) for name in table.names())

    def __call__(self, x: Element) -> Element:
        table = self.table
        out = Element.zero(table)
        h_unit = Element.h(table)
        for (hdeg, word), coeff in x.terms.items():
            prefix_parity = 0
            for i, g in enumerate(word):
                image = self._images[g]
                if image is not None:
                    piece = Element.from_word(table, word[:i], 0, coeff)
                    piece = piece * image
                    if i + 1 < len(word):
                        piece = piece * Element.from_word(table, word[i + 1 :], 0, ONE)
                    if prefix_parity:
                        piece = -piece
                    if hdeg:
                        piece = -(h_unit * piece)
                    out = out + piece
                prefix_parity ^= table.parity(g)
        return out


@lru_cache(maxsize=None)
def differential_map(name: str = "gamma") -> DifferentialMap:
    """The exterior differential over one of the calculus presentations."""
    if name == "gamma":
        rs = build_gamma()
    elif name == "oneforms":
        rs = build_oneforms()
    else:
        raise UnknownGeneratorError(
            f"no differential over {name!r}; use 'gamma' or 'oneforms'"
        )
    res = resolver_for(rs)
    images = {}
    for gen, diff in _PARAM_IMAGE.items():
        images[gen] = Element.generator(rs.table, diff)
    for gen in ("a", "d"):
        inv, diff = gen + "_inv", _PARAM_IMAGE[gen]
        images[inv] = parse(f"-{inv}*{diff}*{inv}", res)
    if name == "oneforms":
        for gen, expansion in _FORM_IMAGE.items():
            images[gen] = parse(expansion, res)
    return DifferentialMap(rs.table, images)


def differentiate(x: Element) -> Element:
    """Differentiate and normalize a parameter/differential element."""
    rs = build_gamma()
    if x.table != rs.table:
        x = transfer(x, rs.table)
    return rs.normalize(differential_map()(x))


def transfer(x: Element, table) -> Element:
    """Rebuild an element over another table carrying the same letter names."""
    out = Element.zero(table)
    src = x.table
    for (hdeg, word), coeff in x.terms.items():
        letters = tuple(table.index(src.name(g)) for g in word)
        out = out + Element.from_word(table, letters, hdeg, coeff)
    return out


def act(op: Element, f: Element) -> Element:
    """Vacuum action of a derivative-sector operator on a parameter element.

    Normal-orders op*f in the Weyl presentation, then drops every word still
    containing a derivative letter.
    """
    rs = build_weyl()
    table = rs.table
    derivs = frozenset(
        table.index(n) for n in ("Da", "Dbeta", "Dgamma", "Dd")
    )
    if op.table != table:
        op = transfer(op, table)
    if f.table != table:
        f = transfer(f, table)
    ordered = rs.normalize(op * f)
    kept = {
        w: c for w, c in ordered.terms.items() if not any(g in derivs for g in w[1])
    }
    return Element(table, kept)


def _parameter_words(max_len: int):
    names = ("a", "beta", "gamma", "d")
    for n in range(max_len + 1):
        yield from itertools.product(names, repeat=n)


def _word_elem(table, names_seq) -> Element:
    return Element.from_word(table, tuple(table.index(n) for n in names_seq))


# -- check suites ---------------------------------------------------------------


def check_d_structure() -> SuiteReport:
    """Nilpotency of d and its compatibility with the defining relations."""
    suite = SuiteBuilder("calculus")
    rs = build_gamma()
    dmap = differential_map()

    subs = _subs_exprs(rs.table, ("D_h", "D_h_inv"))
    for rel in _parse_relations(GLH_LINES, "Eq. (4)", rs.table, subs):
        suite.zero(f"d[{rel.name}]", rel.ref, dmap(rel.element), rs)
    for rel in relation_catalog("gamma"):
        if rel.ref == "Eq. (15)":
            suite.zero(f"d[{rel.name}]", rel.ref, dmap(rel.element), rs)

    bad = None
    count = 0
    for names_seq in _parameter_words(3):
        count += 1
        elem = _word_elem(rs.table, names_seq)
        ok, _ = verify_zero(dmap(dmap(elem)), rs)
        if not ok and bad is None:
            bad = "*".join(names_seq) or "1"
    suite.true(
        f"d^2 = 0 on all {count} parameter words of length <= 3",
        "Eq. (11a)",
        bad is None,
        bad if bad is not None else "",
    )
    return suite.done()


def check_d_expansions(max_len: int = 3) -> SuiteReport:
    """One d, two expansions: differentials against derivative actions."""
    suite = SuiteBuilder("calculus")
    rs = build_gamma()
    res = resolver_for(rs)
    weyl = build_weyl()
    wres = resolver_for(weyl)
    dmap = differential_map()

    diff_pairs = [
        (Element.generator(rs.table, _PARAM_IMAGE[g]), Element.generator(weyl.table, "D" + g))
        for g in ("a", "beta", "gamma", "d")
    ]
    form_pairs = [
        (res.lookup(w, 0), wres.lookup(op, 0))
        for w, op in (("w1", "T1"), ("u", "nablaP"), ("v", "nablaM"), ("w2", "T2"))
    ]

    failures = {"Eq. (51)": None, "Eq. (55)": None}
    count = 0
    for names_seq in _parameter_words(max_len):
        count += 1
        f_gamma = _word_elem(rs.table, names_seq)
        df = rs.normalize(dmap(f_gamma))
        f_weyl = _word_elem(weyl.table, names_seq)
        for ref, pairs in (("Eq. (51)", diff_pairs), ("Eq. (55)", form_pairs)):
            total = Element.zero(rs.table)
            for coeff, op in pairs:
                acted = act(op, f_weyl)
                if acted.terms:
                    total = total + coeff * transfer(acted, rs.table)
            ok, _ = verify_zero(df - total, rs)
            if not ok and failures[ref] is None:
                failures[ref] = "*".join(names_seq) or "1"
    for ref, label in (
        ("Eq. (51)", "derivative expansion of d"),
        ("Eq. (55)", "vector-field expansion of d"),
    ):
        bad = failures[ref]
        suite.true(
            f"{label} matches on all {count} parameter words of length <= {max_len}",
            ref,
            bad is None,
            bad if bad is not None else "",
        )
    return suite.done()


def check_maurer() -> SuiteReport:
    """Cartan-Maurer forms: the decomposition and the structure equations."""
    suite = SuiteBuilder("maurer")
    rs = build_gamma()
    res = resolver_for(rs)
    dmap = differential_map()

    for rel in relation_catalog("maurer-decomposition"):
        suite.zero(rel.name, rel.ref, rel.element, rs)

    parities = []
    for name in ("w1", "u", "v", "w2"):
        form = res.lookup(name, 0)
        parities.append(f"{name} {'odd' if rs.normalize(form).parity() else 'even'}")
        expected = parse(_FORM_IMAGE[name], res)
        suite.zero(f"d({name}) = {_FORM_IMAGE[name]}", "Eq. (47)", dmap(form) - expected, rs)
    suite.note("computed form parities: " + ", ".join(parities))

    forms_rs = build_oneforms()
    d_forms = differential_map("oneforms")
    for name in ("w1", "u", "v", "w2"):
        gen = Element.generator(forms_rs.table, name)
        suite.zero(f"d^2({name})", "Eq. (11a)", d_forms(d_forms(gen)), forms_rs)
    return suite.done()


def check_superalgebra() -> SuiteReport:
    """Vector-field relations, their action corollaries, and the Leibniz lines."""
    suite = SuiteBuilder("superalgebra")
    weyl = build_weyl()

    relations = relation_catalog("superalgebra")
    for rel in relations:
        suite.zero(rel.name, rel.ref, rel.element, weyl)
    for rel in relation_catalog("vector-on-params"):
        suite.zero(rel.name, rel.ref, rel.element, weyl)

    for rel in relations:
        bad = None
        for g in ("a", "beta", "gamma", "d"):
            residue = act(rel.element, Element.generator(weyl.table, g))
            ok, witness = verify_zero(residue, weyl)
            if not ok:
                bad = f"on {g}: {witness}"
                break
        suite.true(f"act[{rel.name}] kills every parameter", rel.ref, bad is None, bad or "")
    return suite.done()


def check_superplane() -> SuiteReport:
    """The subalgebra generated by x = 2u and theta = w1."""
    suite = SuiteBuilder("superplane")
    rs = build_oneforms()
    for rel in relation_catalog("superplane"):
        suite.zero(rel.name, rel.ref, rel.element, rs)
    return suite.done()


def check_calculus() -> SuiteReport:
    """Everything the differential is responsible for, in one report."""
    report = check_d_structure()
    report.extend(check_d_expansions())
    return report
