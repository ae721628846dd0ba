"""Exact coefficient arithmetic: rational functions in q over the rationals.

A Scalar is num/den where num and den are polynomials in q with Fraction
coefficients, stored little-endian as tuples.  Every Scalar is kept in
canonical form: gcd(num, den) = 1 and den monic.  Equality and hashing are
therefore structural, which the exact (zero-tolerance) checks rely on.
"""

from __future__ import annotations

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)

Poly = tuple  # little-endian Fraction coefficients; () is the zero polynomial


def _trim(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_F0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and any(c != 0 for c in r):
        if r[-1] == 0:
            r.pop()
            continue
        k = len(r) - len(b)
        f = r[-1] / lead
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        r.pop()
    return _trim(q), _trim(r)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        lead = a[-1]
        if lead != 1:
            a = tuple(c / lead for c in a)
    return a


_P_ONE: Poly = (_F1,)


class Scalar:
    """A rational function in q, always in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE):
        if isinstance(num, (int, Fraction)):
            num = (Fraction(num),) if num else ()
        else:
            num = _trim(Fraction(c) for c in num)
        if isinstance(den, (int, Fraction)):
            den = (Fraction(den),) if den else ()
        else:
            den = _trim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            den = _P_ONE
        elif len(den) == 1:
            if den[0] != 1:
                num = tuple(c / den[0] for c in num)
                den = _P_ONE
        else:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        s = object.__new__(Scalar)
        object.__setattr__(s, "num", _pneg(self.num))
        object.__setattr__(s, "den", self.den)
        return s

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == _P_ONE and other.den == _P_ONE:
            s = object.__new__(Scalar)
            object.__setattr__(s, "num", _pmul(self.num, other.num))
            object.__setattr__(s, "den", _P_ONE)
            return s
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def subs_q(self, value) -> Fraction:
        """Evaluate at a rational value of q (den must not vanish there)."""
        value = Fraction(value)
        n = _peval(self.num, value)
        d = _peval(self.den, value)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {value}")
        return n / d

    def depends_on_q(self) -> bool:
        return len(self.num) > 1 or len(self.den) > 1

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        s = _poly_str(self.num)
        if self.den == _P_ONE:
            return s
        if _needs_parens(self.num):
            s = f"({s})"
        d = _poly_str(self.den)
        if _needs_parens(self.den):
            d = f"({d})"
        return f"{s}/{d}"


def _peval(p: Poly, x: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _needs_parens(p: Poly) -> bool:
    return sum(1 for c in p if c) > 1


def _mono_str(c: Fraction, k: int) -> str:
    if k == 0:
        return str(c)
    if k == 1:
        body = "q"
    else:
        body = f"q^{k}"
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        m = _mono_str(c, k)
        if not parts:
            parts.append(m)
        elif m.startswith("-"):
            parts.append(f" - {m[1:]}")
        else:
            parts.append(f" + {m}")
    return "".join(parts)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar((0, 1))
Q_INV = Scalar((1,), (0, 1))
