"""Deterministic text form for elements.

The printed form is valid input for the expression parser, and printing a
normal form then parsing it back returns the same element.  Terms are ordered
by (h-degree, word length, letter ranks); runs of a repeated letter print as
powers.
"""

from __future__ import annotations

from .scalars import Scalar, _needs_parens


def _coeff_prefix(c: Scalar) -> tuple[bool, str]:
    """Split c into (is_negative, multiplier_text); text is "" for +-1."""
    neg = c.num[-1] < 0
    if neg:
        c = -c
    text = str(c)
    if text == "1":
        return neg, ""
    if c.den == (1,) and _needs_parens(c.num):
        text = f"({text})"
    return neg, text


def word_str(table, letters) -> str:
    if not letters:
        return ""
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        name = table.name(letters[i])
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def element_str(elem) -> str:
    if not elem.terms:
        return "0"
    chunks = []
    for (h, letters), c in elem.sorted_terms():
        neg, coeff = _coeff_prefix(c)
        body = []
        if coeff:
            body.append(coeff)
        if h:
            body.append("h")
        w = word_str(elem.table, letters)
        if w:
            body.append(w)
        text = "*".join(body) if body else "1"
        if not chunks:
            chunks.append(f"-{text}" if neg else text)
        else:
            chunks.append(f" - {text}" if neg else f" + {text}")
    return "".join(chunks)
