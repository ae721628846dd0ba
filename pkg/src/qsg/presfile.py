"""Reading and writing rule systems as plain-text presentation files.

The format is line-oriented: a `presentation` header, one `generator` line
per letter in rank order, optional `localize` markers, then the oriented
rules.  Everything after `#` is a comment.  Derived localization rules are
stored rather than re-derived, so loading an exported file rebuilds the
exact rule system: export followed by load is the identity.
"""

from __future__ import annotations

from .core import EVEN, ODD, Element, Generator, GeneratorTable
from .errors import ParseError
from .parser import Resolver, parse
from .printer import element_str
from .rewrite import RuleSet


def dumps(rs: RuleSet) -> str:
    """The presentation-file text for one rule system."""
    lines = [f"presentation {rs.name or 'unnamed'}", ""]
    for g in rs.table.gens:
        parts = ["generator", g.name, "odd" if g.parity == ODD else "even"]
        if g.invertible:
            parts.append("invertible")
        if g.inverse_of:
            parts.append(f"inverse-of {g.inverse_of}")
        lines.append(" ".join(parts))
    if rs.localized:
        lines.append("")
        lines.extend(f"localize {name}" for name in rs.localized)
    lines.append("")
    table = rs.table
    for i, j in sorted(rs.rules):
        rhs = rs.rules[(i, j)]
        lines.append(f"rule {table.name(i)}*{table.name(j)} = {element_str(rhs)}")
    lines.append("")
    return "\n".join(lines)


def _generator_line(lineno: int, rest: str) -> Generator:
    fields = rest.split()
    if len(fields) < 2:
        raise ParseError(f"line {lineno}: generator needs a name and a parity")
    name, parity_word, *mods = fields
    if parity_word not in ("even", "odd"):
        raise ParseError(
            f"line {lineno}: parity must be 'even' or 'odd', not {parity_word!r}")
    invertible = False
    inverse_of = None
    k = 0
    while k < len(mods):
        if mods[k] == "invertible":
            invertible = True
            k += 1
        elif mods[k] == "inverse-of" and k + 1 < len(mods):
            inverse_of = mods[k + 1]
            k += 2
        else:
            raise ParseError(
                f"line {lineno}: unknown generator modifier {mods[k]!r}")
    return Generator(name, ODD if parity_word == "odd" else EVEN,
                     invertible, inverse_of)


def loads(text: str) -> RuleSet:
    """Rebuild a rule system from presentation-file text.

    Structural problems raise ParseError with the line number; parity or
    ordering violations in the rules themselves surface as the rewrite
    engine's own validation errors.
    """
    name = None
    gens = []
    localized = []
    rule_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "presentation":
            if name is not None:
                raise ParseError(f"line {lineno}: second presentation header")
            if not rest:
                raise ParseError(f"line {lineno}: presentation needs a name")
            name = rest
        elif word == "generator":
            gens.append(_generator_line(lineno, rest))
        elif word == "localize":
            if not rest:
                raise ParseError(f"line {lineno}: localize needs a generator")
            localized.append(rest)
        elif word == "rule":
            rule_lines.append((lineno, rest))
        else:
            raise ParseError(f"line {lineno}: unknown directive {word!r}")
    if name is None:
        raise ParseError("missing presentation header")
    table = GeneratorTable(gens)
    resolver = Resolver(
        table, {g.name: Element.generator(table, g.name) for g in gens})
    rules = {}
    for lineno, body in rule_lines:
        lhs_text, eq, rhs_text = body.partition("=")
        if not eq:
            raise ParseError(f"line {lineno}: rule needs an '='")
        letters = [p.strip() for p in lhs_text.strip().split("*")]
        if len(letters) != 2:
            raise ParseError(
                f"line {lineno}: rule left side must be a two-letter word")
        key = (table.index(letters[0]), table.index(letters[1]))
        if key in rules:
            raise ParseError(
                f"line {lineno}: duplicate rule for {lhs_text.strip()}")
        rules[key] = parse(rhs_text.strip(), resolver)
    for lname in localized:
        table.index(lname)
    return RuleSet(table, rules, name, localized=tuple(localized))
