"""Words and elements of a Z2-graded free algebra with a nilpotent odd h.

The deformation parameter h squares to zero, commutes with even generators
and anticommutes with odd ones, so every element is (h-free part) + h*(h-free
part).  A word is the pair (hdeg, letters) with hdeg in {0, 1} and letters a
tuple of generator indices into a GeneratorTable; an Element maps words to
Scalar coefficients and is kept canonical (no zero coefficients).

Multiplication moves the right factor's h prefix to the front, which costs a
sign (-1)^p for each odd letter it crosses, and drops any word whose total
h-degree would reach 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TableMismatchError, UnknownGeneratorError, ValidationError
from .scalars import ONE, Scalar

EVEN = 0
ODD = 1


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    invertible: bool = False
    inverse_of: str | None = None


class GeneratorTable:
    """Ordered generator alphabet; the position of a generator is its rank."""

    __slots__ = ("gens", "parities", "_index")

    def __init__(self, gens):
        gens = tuple(gens)
        seen = set()
        for g in gens:
            if g.name in seen:
                raise ValidationError(f"duplicate generator name {g.name!r}")
            if g.name in ("h", "q"):
                raise ValidationError(f"{g.name!r} is reserved")
            if g.invertible and g.parity == ODD:
                raise ValidationError(f"odd generator {g.name!r} cannot be invertible")
            seen.add(g.name)
        self.gens = gens
        self.parities = tuple(g.parity for g in gens)
        self._index = {g.name: i for i, g in enumerate(gens)}

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        return isinstance(other, GeneratorTable) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None

    def name(self, i: int) -> str:
        return self.gens[i].name

    def names(self):
        return tuple(g.name for g in self.gens)

    def parity(self, i: int) -> int:
        return self.parities[i]

    def generator(self, name: str) -> Generator:
        return self.gens[self.index(name)]

    def with_inverse(self, name: str):
        """Insert name + "_inv" right after name.

        Returns (new_table, remap) where remap sends old indices to new ones.
        """
        i = self.index(name)
        g = self.gens[i]
        inv = Generator(g.name + "_inv", g.parity, invertible=True, inverse_of=g.name)
        gens = self.gens[: i + 1] + (inv,) + self.gens[i + 1 :]
        remap = tuple(j if j <= i else j + 1 for j in range(len(self.gens)))
        return GeneratorTable(gens), remap

    def word_parity(self, letters) -> int:
        p = 0
        for l in letters:
            p ^= self.parities[l]
        return p

    def __repr__(self):
        return f"GeneratorTable({', '.join(self.names())})"


def _coeff(c):
    if isinstance(c, Scalar):
        return c
    if isinstance(c, (int, Fraction)):
        return Scalar(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class Element:
    """Finite Scalar-linear combination of words over one table."""

    __slots__ = ("table", "terms")

    def __init__(self, table: GeneratorTable, terms=None):
        canon = {}
        if terms:
            for w, c in terms.items():
                c = _coeff(c)
                if c:
                    canon[w] = c
        self.table = table
        self.terms = canon

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, table):
        return cls(table)

    @classmethod
    def one(cls, table):
        return cls(table, {(0, ()): ONE})

    @classmethod
    def from_word(cls, table, letters, hdeg=0, coeff=ONE):
        return cls(table, {(hdeg, tuple(letters)): coeff})

    @classmethod
    def generator(cls, table, name):
        return cls(table, {(0, (table.index(name),)): ONE})

    @classmethod
    def h(cls, table):
        return cls(table, {(1, ()): ONE})

    @classmethod
    def scalar(cls, table, c):
        return cls(table, {(0, ()): _coeff(c)})

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.table is not other.table and self.table != other.table:
            raise TableMismatchError(
                f"elements over different tables: {self.table!r} vs {other.table!r}"
            )

    def __add__(self, other):
        if not isinstance(other, Element):
            other = _as_element(self.table, other)
            if other is None:
                return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w)
            terms[w] = c if s is None else s + c
        return Element(self.table, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = _as_element(self.table, other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_element(self.table, other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        out = Element.__new__(Element)
        out.table = self.table
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return _mul(self, other)
        c = _maybe_coeff(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        c = _maybe_coeff(other)
        if c is None:
            return NotImplemented
        return self.scale(c)  # scalars are central, no sign

    def __truediv__(self, other):
        if isinstance(other, Element):
            if set(other.terms) <= {(0, ())}:
                c = other.terms.get((0, ()))
                if c is None:
                    raise ZeroDivisionError("division by the zero element")
                return self.scale(ONE / c)
            raise ValueError("can only divide by scalar elements")
        c = _maybe_coeff(other)
        if c is None:
            return NotImplemented
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(ONE / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be non-negative integers")
        acc = Element.one(self.table)
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, c):
        c = _coeff(c)
        if not c:
            return Element.zero(self.table)
        out = Element.__new__(Element)
        out.table = self.table
        out.terms = {w: s * c for w, s in self.terms.items()}
        return out

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            other = _as_element(self.table, other)
            if other is None:
                return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    def parity(self):
        """0, 1, or None when terms of both parities are present."""
        p = None
        for (h, w), _ in self.terms.items():
            tp = (h + self.table.word_parity(w)) & 1
            if p is None:
                p = tp
            elif p != tp:
                return None
        return p

    def drop_h(self):
        """The h := 0 specialization."""
        return Element(self.table, {w: c for w, c in self.terms.items() if not w[0]})

    def h_part(self):
        """The coefficient of h, as an h-free element."""
        return Element(
            self.table, {(0, w[1]): c for w, c in self.terms.items() if w[0]}
        )

    def subs_q(self, value):
        """Replace q by a rational number in every coefficient."""
        return Element(
            self.table,
            {w: Scalar(c.subs_q(value)) for w, c in self.terms.items()},
        )

    def map_coeff(self, f):
        return Element(self.table, {w: f(c) for w, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: _word_sort_key(it[0]))

    def __str__(self):
        from .printer import element_str

        return element_str(self)

    def __repr__(self):
        return f"<{self}>"


def _word_sort_key(w):
    h, letters = w
    return (h, len(letters), letters)


def _as_element(table, x):
    c = _maybe_coeff(x)
    if c is None:
        return None
    return Element(table, {(0, ()): c})


def _maybe_coeff(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return None


def _mul(x: Element, y: Element) -> Element:
    table = x.table
    parities = table.parities
    out = {}
    for (h1, u), c1 in x.terms.items():
        pu = -1  # computed lazily
        for (h2, v), c2 in y.terms.items():
            if h1 and h2:
                continue
            c = c1 * c2
            if h2:
                if pu < 0:
                    p = 0
                    for l in u:
                        p ^= parities[l]
                    pu = p
                if pu:
                    c = -c
            w = (h1 | h2, u + v)
            s = out.get(w)
            out[w] = c if s is None else s + c
    return Element(table, out)


def mul(x: Element, y: Element) -> Element:
    """Graded product with exact truncation at h^2 = 0."""
    x._check(y)
    return _mul(x, y)


def parity_of(x: Element):
    """Parity of a homogeneous element: EVEN, ODD, or None for mixed/zero."""
    return x.parity()


def symbols(table: GeneratorTable) -> dict:
    """name -> generator Element mapping, plus the h element."""
    ns = {g.name: Element.generator(table, g.name) for g in table.gens}
    ns["h"] = Element.h(table)
    return ns
