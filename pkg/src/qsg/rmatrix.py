"""Matrix packaging of the exchange relations.

A single 4x4 matrix R with entries in {0, 1, +-h} reproduces every quadratic
relation system at once: the exchange identity R*T1*T2 = T2*T1*R is entry-by-
entry equivalent to the coordinate relations, and five compact identities over
the differential and one-form layers encode the mixed systems.  T1 and T2 are
the graded tensor-leg embeddings of the coordinate matrix; the sign rule used
when embedding is not forced a priori, so a small family of candidate
conventions is implemented and the suite certifies that exactly one of them
satisfies all six identities.
"""

from .core import Element
from .errors import ValidationError
from .parser import parse
from .presentations import (
    FORM_FORM_LINES,
    GLH_LINES,
    _parse_relations,
    _subs_exprs,
    presentation,
    resolver_for,
)
from .printer import element_str
from .report import SuiteBuilder, SuiteReport
from .rewrite import normalize, strip_h

# Index parities of the fundamental space (one even and one odd direction)
# and of its tensor square, in row-major pair order.
_P2 = (0, 1)
_IDX = ((0, 0), (0, 1), (1, 0), (1, 1))
_P4 = tuple((_P2[i] + _P2[k]) & 1 for i, k in _IDX)


class AlgebraMatrix:
    """Rectangular array of algebra elements with graded index parities.

    Every nonzero entry must be parity-homogeneous, and the entry parities
    must agree with p(row) + p(col) up to one fixed offset (0 for coordinate
    matrices, 1 for differential and one-form matrices).
    """

    def __init__(self, rs, entries, row_parities, col_parities):
        self.rs = rs
        self.entries = [list(row) for row in entries]
        self.row_parities = tuple(row_parities)
        self.col_parities = tuple(col_parities)
        if len(self.entries) != len(self.row_parities):
            raise ValidationError("row count does not match row parities")
        offset = None
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_parities):
                raise ValidationError("column count does not match col parities")
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                p = e.parity()
                if p is None:
                    raise ValidationError(
                        f"entry ({i + 1},{j + 1}) is parity-inhomogeneous"
                    )
                off = (p + self.row_parities[i] + self.col_parities[j]) & 1
                if offset is None:
                    offset = off
                elif offset != off:
                    raise ValidationError(
                        f"entry ({i + 1},{j + 1}) breaks the parity pattern"
                    )
        self.offset = offset

    @property
    def shape(self):
        return len(self.row_parities), len(self.col_parities)

    def _like(self, entries):
        return AlgebraMatrix(self.rs, entries, self.row_parities,
                             self.col_parities)

    def __mul__(self, other):
        if self.col_parities != other.row_parities:
            raise ValidationError("matrix shapes are not conformable")
        n, _ = self.shape
        m, p = other.shape
        zero = Element.zero(self.rs.table)
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                s = zero
                for k in range(m):
                    s = s + self.entries[i][k] * other.entries[k][j]
                row.append(normalize(s, self.rs))
            out.append(row)
        return AlgebraMatrix(self.rs, out, self.row_parities,
                             other.col_parities)

    def mul_raw(self, other):
        """Product without normalization (free-algebra entries)."""
        n, _ = self.shape
        m, p = other.shape
        zero = Element.zero(self.rs.table)
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                s = zero
                for k in range(m):
                    s = s + self.entries[i][k] * other.entries[k][j]
                row.append(s)
            out.append(row)
        return AlgebraMatrix(self.rs, out, self.row_parities,
                             other.col_parities)

    def __add__(self, other):
        return self._like([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return self._like([[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return self._like([[-e for e in row] for row in self.entries])

    def prime(self):
        """Entrywise sign by the entry's own parity: X' = (-1)^p(X) X."""
        return self._like([[(-e if e.parity() == 1 else e) for e in row]
                           for row in self.entries])

    def index_prime(self):
        """Entrywise sign by index parity: entry (i,j) times (-1)^(p_i+p_j).

        For a differential matrix this is the matrix obtained by priming the
        underlying coordinates first and differentiating afterwards; it
        differs from prime() by a global sign whenever the entry parities sit
        opposite the index pattern.
        """
        return self._like([
            [(-e if (self.row_parities[i] + self.col_parities[j]) & 1 else e)
             for j, e in enumerate(row)]
            for i, row in enumerate(self.entries)
        ])

    def nonzero_entries(self, rs=None):
        """(i, j, normal form) for every entry that does not reduce to 0."""
        rs = rs or self.rs
        out = []
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                nf = normalize(e, rs)
                if not nf.is_zero():
                    out.append((i, j, nf))
        return out


def matrix_mul(x: AlgebraMatrix, y: AlgebraMatrix) -> AlgebraMatrix:
    return x * y


def identity_matrix(rs, parities=_P4) -> AlgebraMatrix:
    one = Element.one(rs.table)
    zero = Element.zero(rs.table)
    n = len(parities)
    return AlgebraMatrix(
        rs, [[one if i == j else zero for j in range(n)] for i in range(n)],
        parities, parities)


def r_matrix(rs) -> AlgebraMatrix:
    h = Element.h(rs.table)
    one = Element.one(rs.table)
    z = Element.zero(rs.table)
    return AlgebraMatrix(rs, [
        [one, z, z, z],
        [-h, one, z, z],
        [h, z, one, z],
        [z, h, h, one],
    ], _P4, _P4)


def r_inverse(rs) -> AlgebraMatrix:
    # R = 1 + N with N strictly lower triangular and N^2 = 0 (entries carry
    # h), so the inverse is the reflection 2 - R; the suite verifies this by
    # multiplication rather than assuming it.
    ident = identity_matrix(rs)
    return ident + ident - r_matrix(rs)


def coordinate_matrix(rs) -> AlgebraMatrix:
    res = resolver_for(rs, with_composites=False)
    return AlgebraMatrix(rs, [[parse("a", res), parse("beta", res)],
                              [parse("gamma", res), parse("d", res)]],
                         _P2, _P2)


def differential_matrix(rs) -> AlgebraMatrix:
    res = resolver_for(rs, with_composites=False)
    return AlgebraMatrix(rs, [[parse("alpha", res), parse("b", res)],
                              [parse("c", res), parse("delta", res)]],
                         _P2, _P2)


def form_matrix(rs) -> AlgebraMatrix:
    res = resolver_for(rs, with_composites=False)
    return AlgebraMatrix(rs, [[parse("w1", res), parse("u", res)],
                              [parse("v", res), parse("w2", res)]],
                         _P2, _P2)


# Embedding sign modes: how a 2x2 matrix entry picks up a sign when placed
# into one leg of the tensor square and read across the other leg's index.
_PLAIN, _BY_INDEX, _BY_ENTRY = 0, 1, 2

CONVENTIONS = {
    "plain": (_PLAIN, _PLAIN),
    "first-leg-graded": (_BY_INDEX, _PLAIN),
    "second-leg-graded": (_PLAIN, _BY_INDEX),
    "both-legs-graded": (_BY_INDEX, _BY_INDEX),
    "second-leg-by-entry": (_PLAIN, _BY_ENTRY),
}

# Pinned by the convention-determinacy check below: the unique member of the
# family under which the exchange identity and all five compact identities
# hold simultaneously.
DEFAULT_CONVENTION = "second-leg-graded"


def _embed_sign(mode, e, spectator, idx_parity):
    if mode == _BY_INDEX:
        return spectator & idx_parity
    if mode == _BY_ENTRY:
        return spectator & (e.parity() or 0)
    return 0


def leg_one(m: AlgebraMatrix, convention: str = DEFAULT_CONVENTION):
    """Embed a 2x2 matrix into the first tensor leg (M x 1)."""
    mode = CONVENTIONS[convention][0]
    zero = Element.zero(m.rs.table)
    out = [[zero] * 4 for _ in range(4)]
    for r, (i, k) in enumerate(_IDX):
        for c, (j, l) in enumerate(_IDX):
            if k != l:
                continue
            e = m.entries[i][j]
            if e.is_zero():
                continue
            s = _embed_sign(mode, e, _P2[k], (_P2[i] + _P2[j]) & 1)
            out[r][c] = -e if s else e
    return AlgebraMatrix(m.rs, out, _P4, _P4)


def leg_two(m: AlgebraMatrix, convention: str = DEFAULT_CONVENTION):
    """Embed a 2x2 matrix into the second tensor leg (1 x M)."""
    mode = CONVENTIONS[convention][1]
    zero = Element.zero(m.rs.table)
    out = [[zero] * 4 for _ in range(4)]
    for r, (i, k) in enumerate(_IDX):
        for c, (j, l) in enumerate(_IDX):
            if i != j:
                continue
            e = m.entries[k][l]
            if e.is_zero():
                continue
            s = _embed_sign(mode, e, _P2[i], (_P2[k] + _P2[l]) & 1)
            out[r][c] = -e if s else e
    return AlgebraMatrix(m.rs, out, _P4, _P4)


def _rtt_difference(rs, convention):
    R = r_matrix(rs)
    T1 = leg_one(coordinate_matrix(rs), convention)
    T2 = leg_two(coordinate_matrix(rs), convention)
    return R * T1 * T2 - T2 * T1 * R


def _compact_differences(convention):
    """label, ref, rule set, lhs - rhs for the five compact identities.

    The primed matrices follow the displayed definitions: on coordinate
    matrices the prime is the plain parity sign; the hatted left factors are
    "differentiate the primed coordinates" (index_prime); hatted and one-form
    matrices appearing primed inside right sides carry the entry-parity sign
    that the graded Leibniz rule produces there.
    """
    gam = presentation("gamma")
    forms = presentation("oneforms")
    out = []

    R, Ri = r_matrix(gam), r_inverse(gam)
    T1 = leg_one(coordinate_matrix(gam), convention)
    Th1 = leg_one(differential_matrix(gam), convention)
    Th2 = leg_two(differential_matrix(gam), convention)
    out.append(("T'1*dT2 = R^-1*dT2*T1*R", "Eq. (15)", gam,
                T1.prime() * Th2 - Ri * Th2 * T1 * R))
    out.append(("(dT1)'*dT2 = R*dT2'*dT1*R", "Eq. (16)", gam,
                Th1.index_prime() * Th2 - R * Th2.prime() * Th1 * R))

    R, Ri = r_matrix(forms), r_inverse(forms)
    T1 = leg_one(coordinate_matrix(forms), convention)
    Th1 = leg_one(differential_matrix(forms), convention)
    Om1 = leg_one(form_matrix(forms), convention)
    Om2 = leg_two(form_matrix(forms), convention)
    out.append(("T'1*Om2 = R^-1*Om2*R*T1", "Eq. (39)", forms,
                T1.prime() * Om2 - Ri * Om2 * R * T1))
    out.append(("(dT1)'*Om2 = R*Om2'*R*dT1", "Eq. (41)", forms,
                Th1.index_prime() * Om2 - R * Om2.prime() * R * Th1))
    out.append(("Om1'*R^-1*Om2*R = -R*Om2'*R*Om1", "Eq. (42)", forms,
                Om1.prime() * Ri * Om2 * R + R * Om2.prime() * R * Om1))
    return out


def _tidy_h_layer(e, rs):
    """Normalize only the h-stratum of an element; keep the h-free part raw."""
    return e.drop_h() + Element.h(rs.table) * normalize(e.h_part(), rs)


def _match_scalar_multiple(e, relations):
    """(name, factor) when e is a scalar multiple of one relation element."""
    for name, rel in relations:
        for w, c0 in sorted(rel.terms.items()):
            if w in e.terms:
                c = e.terms[w] / c0
                if (e - rel.scale(c)).is_zero():
                    return name, c
                break
    return None


def _span_records(suite, diff_raw, rs, lines, ref, label):
    """Match each raw entry difference against the relation catalog."""
    try:
        subs = _subs_exprs(rs.table, ("D_h", "D_h_inv"))
    except Exception:
        subs = None
    rels = [(r.name, _tidy_h_layer(r.element, rs))
            for r in _parse_relations(lines, ref, rs.table, subs)]
    covered = set()
    n, m = diff_raw.shape
    for i in range(n):
        for j in range(m):
            e = _tidy_h_layer(diff_raw.entries[i][j], rs)
            where = f"{label} raw entry ({i + 1},{j + 1})"
            if e.is_zero():
                suite.true(f"{where} vanishes identically", ref, True)
                continue
            hit = _match_scalar_multiple(e, rels)
            if hit is None:
                suite.true(f"{where} is a multiple of one relation line", ref,
                           False, witness=element_str(e))
                continue
            name, c = hit
            covered.add(name)
            suite.true(f"{where} = {c} * [{name}]", ref, True)
    suite.true(f"every relation line is recovered among the {label} entries",
               ref, len(covered) == len(rels),
               witness=f"{len(covered)}/{len(rels)}")
    return covered


def check_rtt() -> SuiteReport:
    """The exchange identity over the coordinate presentation."""
    suite = SuiteBuilder("rmatrix")
    glh = presentation("glh")
    R = r_matrix(glh)
    suite.true("deformation matrix entries follow the index parity pattern",
               "Eq. (4)", R.offset == 0)

    tallies = {name: len(_rtt_difference(glh, name).nonzero_entries())
               for name in CONVENTIONS}
    suite.note("exchange-identity residues by embedding convention: "
               + ", ".join(f"{k}={v}" for k, v in tallies.items()))

    diff = _rtt_difference(glh, DEFAULT_CONVENTION)
    for i in range(4):
        for j in range(4):
            suite.zero(f"exchange identity entry ({i + 1},{j + 1})", "Eq. (4)",
                       diff.entries[i][j], glh)

    # Entry-level equivalence: with only the h-stratum tidied, each raw
    # entry difference IS one relation line (up to a rational factor), and
    # together they exhaust the system.
    T1 = leg_one(coordinate_matrix(glh), DEFAULT_CONVENTION)
    T2 = leg_two(coordinate_matrix(glh), DEFAULT_CONVENTION)
    raw = R.mul_raw(T1).mul_raw(T2) - T2.mul_raw(T1).mul_raw(R)
    _span_records(suite, raw, glh, GLH_LINES, "Eq. (4)", "exchange")

    # The deformation entries are essential: deleting the (4,2) entry must
    # break the identity.
    broken = r_matrix(glh)
    broken.entries[3][1] = Element.zero(glh.table)
    mut = broken * T1 * T2 - T2 * T1 * broken
    bad = mut.nonzero_entries()
    suite.negative("zeroing the (4,2) deformation entry breaks the identity",
                   "Eq. (4)", bool(bad),
                   witness=(f"entry ({bad[0][0] + 1},{bad[0][1] + 1}): "
                            + element_str(bad[0][2])) if bad else None)

    # At h = 0 the matrix R is the identity, so the identity reads
    # T1*T2 = T2*T1 over the supercommutative rules.
    flat = strip_h(glh)
    F1 = leg_one(coordinate_matrix(flat), DEFAULT_CONVENTION)
    F2 = leg_two(coordinate_matrix(flat), DEFAULT_CONVENTION)
    residue = F1 * F2 - F2 * F1
    suite.true("at h = 0 the identity degenerates to supercommutativity",
               "Eq. (4)", not residue.nonzero_entries())
    return suite.done()


def _graded_ybe_residues(rs):
    """Entry count violating R12*R13*R23 = R23*R13*R12 on the cube."""
    table = rs.table
    zero = Element.zero(table)
    one = Element.one(table)

    def emb_first(m4):
        out = [[zero] * 8 for _ in range(8)]
        for r in range(4):
            for c in range(4):
                for s in range(2):
                    out[r * 2 + s][c * 2 + s] = m4.entries[r][c]
        return out

    def emb_last(m4):
        out = [[zero] * 8 for _ in range(8)]
        for s in range(2):
            for r in range(4):
                for c in range(4):
                    e = m4.entries[r][c]
                    if e.is_zero():
                        continue
                    sign = _P2[s] & ((_P4[r] + _P4[c]) & 1)
                    out[s * 4 + r][s * 4 + c] = -e if sign else e
        return out

    def mm(a, b):
        out = [[zero] * 8 for _ in range(8)]
        for i in range(8):
            for k in range(8):
                if a[i][k].is_zero():
                    continue
                for j in range(8):
                    if not b[k][j].is_zero():
                        out[i][j] = out[i][j] + a[i][k] * b[k][j]
        return out

    # graded swap of the two fundamental legs
    swap = [[zero] * 4 for _ in range(4)]
    for r, (i, k) in enumerate(_IDX):
        for c, (j, l) in enumerate(_IDX):
            if i == l and k == j:
                swap[r][c] = -one if (_P2[j] & _P2[l]) else one
    swap = AlgebraMatrix(rs, swap, _P4, _P4)

    R = r_matrix(rs)
    p23 = emb_last(swap)
    r12 = emb_first(R)
    r23 = emb_last(R)
    r13 = mm(mm(p23, r12), p23)
    lhs = mm(mm(r12, r13), r23)
    rhs = mm(mm(r23, r13), r12)
    return sum(1 for i in range(8) for j in range(8)
               if not (lhs[i][j] - rhs[i][j]).is_zero())


def check_compact_relations() -> SuiteReport:
    """R-inverse structure and the five compact matrix identities."""
    suite = SuiteBuilder("rmatrix")
    glh = presentation("glh")
    R = r_matrix(glh)
    ident = identity_matrix(glh)
    nil = R - ident
    suite.true("(R - 1)^2 = 0", "Eq. (15)",
               not (nil * nil).nonzero_entries())
    Ri = r_inverse(glh)
    suite.true("R * (2 - R) = 1", "Eq. (15)",
               not (R * Ri - ident).nonzero_entries())
    suite.true("(2 - R) * R = 1", "Eq. (15)",
               not (Ri * R - ident).nonzero_entries())

    for label, ref, rs, diff in _compact_differences(DEFAULT_CONVENTION):
        for i in range(4):
            for j in range(4):
                suite.zero(f"{label} entry ({i + 1},{j + 1})", ref,
                           diff.entries[i][j], rs)

    # Convention determinacy over all six identities at once.
    totals = {}
    for name in CONVENTIONS:
        count = len(_rtt_difference(glh, name).nonzero_entries())
        for _, _, rs, diff in _compact_differences(name):
            count += len(diff.nonzero_entries())
        totals[name] = count
    passing = [name for name, count in totals.items() if count == 0]
    suite.true("exactly one embedding convention satisfies all six identities",
               "Eq. (4)", passing == [DEFAULT_CONVENTION],
               witness="winner: " + ", ".join(passing) if passing else "none")
    suite.note("residue totals across the six identities: "
               + ", ".join(f"{k}={v}" for k, v in totals.items()))

    # The one-form exchange line w1*w2 = -w2*w1 - 2h*u*w2 appears verbatim
    # as a raw entry of the fifth identity.
    forms = presentation("oneforms")
    Rf, Rif = r_matrix(forms), r_inverse(forms)
    Om1 = leg_one(form_matrix(forms), DEFAULT_CONVENTION)
    Om2 = leg_two(form_matrix(forms), DEFAULT_CONVENTION)
    raw5 = (Om1.prime().mul_raw(Rif).mul_raw(Om2).mul_raw(Rf)
            + Rf.mul_raw(Om2.prime()).mul_raw(Rf).mul_raw(Om1))
    covered = _span_records(suite, raw5, forms, FORM_FORM_LINES, "Eq. (42)",
                            "one-form exchange")
    suite.true("the w1*w2 line is recovered from the fifth identity",
               "Eq. (42)", any(n.startswith("w1*w2") for n in covered))

    ybe = _graded_ybe_residues(glh)
    suite.note("supplementary: graded Yang-Baxter residues "
               f"R12*R13*R23 - R23*R13*R12: {ybe}/64 entries nonzero")
    return suite.done()


def check_rmatrix() -> SuiteReport:
    report = check_rtt()
    report.extend(check_compact_relations())
    return report
