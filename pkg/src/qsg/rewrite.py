"""Rewriting modulo a graded presentation.

Rules map a length-2 h-free word to an element that is strictly smaller in
the term order (h-degree stratum first, then word length, then inversion
count, then the reversed-sorted letter multiset, then the letters).  The
decreasing property is validated rule-locally when a RuleSet is built, except
for right-side words containing inverse letters: conjugated corrections of
the form x_inv*P*x_inv genuinely exceed their left side in length and only
shrink after cancellation.  The order is also not monotone under embedding
into larger words.  Global termination is therefore enforced by a step
budget, not proved (default 10^6 steps per normalize call, QSG_STEP_BUDGET
overrides).

Normalization reduces the whole polynomial at once, always rewriting its
largest reducible word and merging like terms, so the heavy cancellation
between correction terms happens before sub-words are expanded any further.
Normal forms of short words are memoized per RuleSet, so repeated
verification over the same presentation shares the bulk of the rewriting
work without caching the (potentially enormous) long-word closure.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass

from .core import Element, GeneratorTable, ODD
from .errors import NotInvertibleError, StepBudgetExceeded, ValidationError
from .scalars import ONE, Scalar

DEFAULT_STEP_BUDGET = 10**6

# Words at most this long get their normal forms memoized per RuleSet.
_MEMO_MAX_LEN = 4


def step_budget() -> int:
    raw = os.environ.get("QSG_STEP_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValidationError(f"QSG_STEP_BUDGET must be an integer, got {raw!r}")
    return DEFAULT_STEP_BUDGET


def inversions(letters) -> int:
    n = 0
    for i in range(len(letters)):
        li = letters[i]
        for j in range(i + 1, len(letters)):
            if li > letters[j]:
                n += 1
    return n


def word_key(word):
    """Sort key implementing the term order (bigger key = bigger word)."""
    h, letters = word
    return (
        -h,  # h-terms rank strictly below all h-free terms
        len(letters),
        inversions(letters),
        tuple(sorted(letters, reverse=True)),
        letters,
    )


def word_less(a, b) -> bool:
    return word_key(a) < word_key(b)


class _MaxKey:
    """Reverses comparison so heapq pops the largest word first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k


class Budget:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def spend(self, table, word):
        self.left -= 1
        if self.left < 0:
            from .printer import word_str

            raise StepBudgetExceeded(
                f"step budget exhausted while rewriting {word_str(table, word)!r}; "
                "raise QSG_STEP_BUDGET if the reduction is expected to be this deep"
            )


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple  # (i, j) letter pair, h-free
    rhs: Element


class RuleSet:
    """Immutable-by-convention set of oriented rules over one table."""

    def __init__(self, table: GeneratorTable, rules: dict, name: str = "",
                 localized=(), validate: bool = True):
        self.table = table
        self.rules = dict(rules)
        self.name = name
        self.localized = tuple(localized)
        self._cache = {}
        self._computing = set()
        # Per-rule growth flags: whether applying the rule can lengthen a word
        # in the h-free stratum (index 0) or under an h prefix (index 1, where
        # the rule's own h-terms are truncated away).  Reduction prefers
        # non-growing positions so that nilpotent cancellations collapse a word
        # before an inverse-conjugation sandwich gets a chance to regrow it.
        self._grows = {
            lhs: (
                any(len(w) > 2 for (_, w) in rhs.terms),
                any(len(w) > 2 for (h, w) in rhs.terms if not h),
            )
            for lhs, rhs in self.rules.items()
        }
        if validate:
            self._validate()

    def _validate(self):
        table = self.table
        inverse_letters = {
            i for i, g in enumerate(table.gens) if g.inverse_of is not None
        }
        for lhs, rhs in self.rules.items():
            if len(lhs) != 2:
                raise ValidationError("rule left sides must be length-2 words")
            if rhs.table != table:
                raise ValidationError("rule right side over a different table")
            lp = table.word_parity(lhs)
            for (h, w), _ in rhs.terms.items():
                if ((h + table.word_parity(w)) & 1) != lp:
                    from .printer import word_str

                    raise ValidationError(
                        f"rule {word_str(table, lhs)} has a parity-inhomogeneous right side"
                    )
                if not h and w == lhs:
                    from .printer import word_str

                    raise ValidationError(
                        f"rule {word_str(table, lhs)} rewrites to itself"
                    )
                # Conjugated terms x_inv*P*x_inv from localization legitimately
                # exceed the lhs in length, so the decreasing check only binds
                # words without inverse letters; the step budget covers the rest.
                if inverse_letters.intersection(w):
                    continue
                if not word_less((h, w), (0, lhs)):
                    from .printer import word_str

                    raise ValidationError(
                        f"rule {word_str(table, lhs)} -> {rhs} is not decreasing "
                        f"at term {word_str(table, w)}"
                    )

    def __eq__(self, other):
        return (
            isinstance(other, RuleSet)
            and self.table == other.table
            and self.rules == other.rules
        )

    def __hash__(self):
        return hash((self.table, self.name, len(self.rules)))

    # -- normalization -------------------------------------------------------

    def _leftmost(self, letters):
        rules = self.rules
        for i in range(len(letters) - 1):
            r = rules.get(letters[i : i + 2])
            if r is not None:
                return i, r
        return None

    def _best_position(self, letters, hdeg):
        """Leftmost non-growing reducible position, else rightmost reducible.

        When only growing (inverse-sandwich) positions remain, the rightmost
        one is expanded: its correction terms land next to the material on the
        right and collapse through nilpotent squares, whereas expanding at the
        left end just rebuilds the same blocked prefix one sandwich longer.
        """
        rules = self.rules
        grows = self._grows
        gi = 1 if hdeg else 0
        fallback = None
        for i in range(len(letters) - 1):
            pair = letters[i : i + 2]
            r = rules.get(pair)
            if r is None:
                continue
            if not grows[pair][gi]:
                return i, r
            fallback = i, r
        return fallback

    def _expand(self, letters, i, rhs):
        """One rule application at position i, as (hdeg, letters, coeff) triples."""
        prefix = letters[:i]
        suffix = letters[i + 2 :]
        pp = self.table.word_parity(prefix)
        out = []
        for (h, v), c in rhs.terms.items():
            if h and pp:
                c = -c
            out.append((h, prefix + v + suffix, c))
        return out

    def _short_nf(self, letters, budget: Budget) -> Element:
        """Memoized full normal form of a short reducible word."""
        sub = self._cache.get(letters)
        if sub is None:
            self._computing.add(letters)
            try:
                one_step = {}
                for (h2, w2, c2) in self._expand(letters, *self._best_position(letters, 0)):
                    key = (h2, w2)
                    s = one_step.get(key)
                    one_step[key] = c2 if s is None else s + c2
                sub = self._reduce(one_step, budget)
            finally:
                self._computing.discard(letters)
            self._cache[letters] = sub
        return sub

    def _reduce(self, terms, budget: Budget) -> Element:
        """Normal form of a word->coeff polynomial, largest word first."""
        table = self.table
        memo_ok = _MEMO_MAX_LEN
        acc = {}
        work = {}
        heap = []

        def push(word, c):
            cur = work.get(word)
            if cur is not None:
                s = cur + c
                if s:
                    work[word] = s
                else:
                    del work[word]
                return
            cur = acc.get(word)
            if cur is not None:
                s = cur + c
                if s:
                    acc[word] = s
                else:
                    del acc[word]
                return
            work[word] = c
            heapq.heappush(heap, (_MaxKey(word_key(word)), word))

        for word, c in terms.items():
            if c:
                push(word, c)
        while heap:
            _, word = heapq.heappop(heap)
            c = work.pop(word, None)
            if c is None:
                continue  # merged into another entry since it was pushed
            h, letters = word
            red = self._best_position(letters, h)
            if red is None:
                s = acc.get(word)
                acc[word] = c if s is None else s + c
                continue
            budget.spend(table, letters)
            if len(letters) <= memo_ok and letters not in self._computing:
                for (h2, w2), c2 in self._short_nf(letters, budget).terms.items():
                    if h and h2:
                        continue
                    push((h | h2, w2), c * c2)
                continue
            for (h2, w2, c2) in self._expand(letters, *red):
                if h and h2:
                    continue
                push((h | h2, w2), c * c2)
        return Element(table, acc)

    def nf_word(self, letters, budget: Budget | None = None) -> Element:
        """Normal form of an h-free word."""
        letters = tuple(letters)
        hit = self._cache.get(letters)
        if hit is not None:
            return hit
        b = Budget(step_budget()) if budget is None else budget
        if self._leftmost(letters) is None:
            return Element.from_word(self.table, letters)
        if len(letters) <= _MEMO_MAX_LEN:
            return self._short_nf(letters, b)
        return self._reduce({(0, letters): ONE}, b)

    def normalize(self, elem: Element, budget: int | None = None) -> Element:
        if elem.table != self.table:
            from .errors import TableMismatchError

            raise TableMismatchError("element is over a different table than the rules")
        return self._reduce(elem.terms, Budget(step_budget() if budget is None else budget))

    def is_normal_word(self, letters) -> bool:
        return self._leftmost(letters) is None


def normalize(elem: Element, rs: RuleSet) -> Element:
    return rs.normalize(elem)


def verify_zero(elem: Element, rs: RuleSet):
    """(True, None) when elem reduces to 0, else (False, witness normal form)."""
    nf = rs.normalize(elem)
    if nf.is_zero():
        return True, None
    return False, nf


def strip_h(rs: RuleSet, name: str = "") -> RuleSet:
    """The h := 0 specialization: same left sides, right sides truncated."""
    rules = {lhs: rhs.drop_h() for lhs, rhs in rs.rules.items()}
    return RuleSet(rs.table, rules, name or (rs.name + "@h=0" if rs.name else ""),
                   localized=rs.localized)


# -- localization -------------------------------------------------------------


def _remap_element(elem: Element, table: GeneratorTable, remap) -> Element:
    return Element(
        table,
        {(h, tuple(remap[l] for l in w)): c for (h, w), c in elem.terms.items()},
    )


def _conjugated_rule(table, rules, g, g_inv, y):
    """Rule for the out-of-order pair among {y} x {g_inv}, or None.

    Derived from the existing rule between y and g.  For rank(y) > rank(g) the
    source rule is y*g = s*g*y + P and the target is
        y*g_inv -> (1/s)*(g_inv*y) - (1/s)*g_inv*P*g_inv;
    for rank(y) < rank(g) the source is g*y = s*y*g + P and the target is
        g_inv*y -> (1/s)*(y*g_inv) - (1/s)*g_inv*P*g_inv.
    Both follow from multiplying the source rule by g_inv on both sides.
    """
    e_ginv = Element.from_word(table, (g_inv,))
    if y > g:
        src = rules.get((y, g))
        if src is None:
            return None
        swapped = (0, (g, y))
        lhs = (y, g_inv)
        head = Element.from_word(table, (g_inv, y))
    else:
        src = rules.get((g, y))
        if src is None:
            return None
        swapped = (0, (y, g))
        lhs = (g_inv, y)
        head = Element.from_word(table, (y, g_inv))
    s = src.terms.get(swapped)
    if s is None:
        from .printer import word_str

        raise NotInvertibleError(
            f"rule for {word_str(table, lhs)} cannot be derived: the rule between "
            f"{table.name(y)} and {table.name(g)} has no swapped leading term"
        )
    p = src - Element.from_word(table, swapped[1], coeff=s)
    s_inv = ONE / s
    rhs = head.scale(s_inv) - (e_ginv * p * e_ginv).scale(s_inv)
    return lhs, rhs


def _derive_inverse_rules(table, rules, g_name, strict):
    g = table.index(g_name)
    g_inv = table.index(g_name + "_inv")
    new = {
        (g, g_inv): Element.one(table),
        (g_inv, g): Element.one(table),
    }
    for y in range(len(table)):
        if y in (g, g_inv):
            continue
        derived = _conjugated_rule(table, rules, g, g_inv, y)
        if derived is None:
            if strict:
                raise NotInvertibleError(
                    f"cannot localize at {g_name!r}: no commutation rule between "
                    f"{g_name!r} and {table.name(y)!r}"
                )
            continue
        new[derived[0]] = derived[1]
    return new


def _renormalize_rules(table, rules, name, localized) -> "RuleSet":
    """Rewrite every rhs to normal form under the full set, then validate."""
    for _ in range(4):
        rs = RuleSet(table, rules, name=name, localized=localized, validate=False)
        changed = False
        out = {}
        for lhs, rhs in rules.items():
            nf = rs.normalize(rhs)
            out[lhs] = nf
            if nf != rhs:
                changed = True
        rules = out
        if not changed:
            break
    else:
        raise ValidationError(f"rule right sides of {name!r} failed to stabilize")
    return RuleSet(table, rules, name=name, localized=localized)


def localize(rs: RuleSet, g_name: str) -> RuleSet:
    """Adjoin a two-sided inverse for an even invertible generator.

    Extends the table with g_inv ranked right after g, derives the conjugated
    commutation rules from the existing ones, renormalizes and revalidates.
    """
    gen = rs.table.generator(g_name)
    if gen.parity == ODD:
        raise NotInvertibleError(f"generator {g_name!r} is odd; only even generators invert")
    if not gen.invertible:
        raise NotInvertibleError(f"generator {g_name!r} is not marked invertible")
    if g_name in rs.localized:
        return rs
    table, remap = rs.table.with_inverse(g_name)
    rules = {
        tuple(remap[l] for l in lhs): _remap_element(rhs, table, remap)
        for lhs, rhs in rs.rules.items()
    }
    rules.update(_derive_inverse_rules(table, rules, g_name, strict=True))
    return _renormalize_rules(
        table, rules, name=rs.name, localized=rs.localized + (g_name,)
    )


def invert_perturbed(x: Element, x_inv: Element, n: Element, rs: RuleSet) -> Element:
    """Exact inverse of x + n given x_inv and a nilpotent perturbation n.

    Checks n*n -> 0 and x*x_inv -> 1 -> x_inv*x, returns x_inv - x_inv*n*x_inv,
    and verifies the result is a two-sided inverse of x + n before returning.
    """
    one = Element.one(rs.table)
    ok, w = verify_zero(n * n, rs)
    if not ok:
        raise ValidationError(f"perturbation is not nilpotent: n^2 -> {w}")
    for prod in (x * x_inv, x_inv * x):
        ok, w = verify_zero(prod - one, rs)
        if not ok:
            raise ValidationError(f"x_inv does not invert x: residue {w}")
    result = rs.normalize(x_inv - x_inv * n * x_inv)
    total = x + n
    for prod in (total * result, result * total):
        ok, w = verify_zero(prod - one, rs)
        if not ok:
            raise ValidationError(f"perturbed inverse failed verification: residue {w}")
    return result


# -- confluence ----------------------------------------------------------------


@dataclass(frozen=True)
class CriticalPair:
    word: tuple
    left_nf: Element
    right_nf: Element

    @property
    def resolved(self) -> bool:
        return self.left_nf == self.right_nf


def missing_pairs(rs: RuleSet):
    """Out-of-order pairs and odd squares with no rule (empty = complete)."""
    out = []
    table = rs.table
    n = len(table)
    for i in range(n):
        for j in range(n):
            needs = i > j or (i == j and table.parity(i) == ODD)
            if needs and (i, j) not in rs.rules:
                out.append((table.name(i), table.name(j)))
    return out


def critical_pairs(rs: RuleSet):
    """All overlaps x*y*z with rules at both positions, reduced both ways."""
    by_first = {}
    for (i, j) in rs.rules:
        by_first.setdefault(i, []).append(j)
    out = []
    for (x, y), rule_xy in sorted(rs.rules.items()):
        for z in sorted(by_first.get(y, ())):
            rule_yz = rs.rules[(y, z)]
            # first step at position 0: (x y) z
            left = Element(
                rs.table,
                {
                    (h, w + (z,)): c
                    for (h, w), c in rule_xy.terms.items()
                },
            )
            # first step at position 1: x (y z), h crossing x costs a sign
            px = rs.table.parity(x)
            right = Element(
                rs.table,
                {
                    (h, (x,) + w): (-c if (h and px) else c)
                    for (h, w), c in rule_yz.terms.items()
                },
            )
            out.append(
                CriticalPair(
                    word=(x, y, z),
                    left_nf=rs.normalize(left),
                    right_nf=rs.normalize(right),
                )
            )
    return out
