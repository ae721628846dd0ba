"""Tensor powers of the graded algebra and structure maps over them.

A TensorElement is a finite sum of scalar-weighted slot-word tuples over one
generator table, with a single h-degree flag for the whole tensor: the h
prefix always sits leftmost of slot 0, the crossing signs having been
absorbed when the term was built.  Products are slotwise with the graded
interchange sign (-1)^{p(v_i) p(w_j)} for i < j, and anything of total
h-degree 2 is dropped.

A CoMap sends generators to tensors of a fixed arity and extends as a graded
algebra homomorphism; arity 1 covers plain endomorphisms (counit images,
antipodes), and an antihomomorphism flag adds the Koszul sign of reversing
the odd letters.  map_slot splices a map into one slot of a TensorElement,
which is how composites like (f (x) id) o g are assembled; a map flagged odd
(the exterior differential in a slot) picks up the usual crossing sign over
the slots to its left.
"""

from __future__ import annotations

from .core import Element, GeneratorTable
from .errors import TableMismatchError, ValidationError
from .printer import _coeff_prefix, word_str
from .scalars import ONE, Scalar


class TensorElement:
    """Finite sum of slot-word tuples with one shared h flag per term.

    terms maps (hdeg, (word_0, ..., word_{n-1})) to a Scalar; the slot words
    themselves are h-free by construction.
    """

    __slots__ = ("table", "arity", "terms")

    def __init__(self, table: GeneratorTable, arity: int, terms=None):
        canon = {}
        if terms:
            for key, c in terms.items():
                if c:
                    canon[key] = c
        self.table = table
        self.arity = arity
        self.terms = canon

    @classmethod
    def zero(cls, table, arity):
        return cls(table, arity)

    @classmethod
    def one(cls, table, arity):
        return cls(table, arity, {(0, ((),) * arity): ONE})

    @classmethod
    def of(cls, *factors: Element):
        """Tensor product of plain elements, h pulled to the global front."""
        if not factors:
            raise ValidationError("tensor of zero factors")
        table = factors[0].table
        out = cls.one(table, len(factors))
        for j, f in enumerate(factors):
            if f.table != table:
                raise TableMismatchError("tensor factors over different tables")
            acc = {}
            for (H, ws), c0 in out.terms.items():
                for (hj, wj), cj in f.terms.items():
                    if H and hj:
                        continue
                    c = c0 * cj
                    if hj:
                        # pull this slot's h across the slots already placed
                        p = 0
                        for k in range(j):
                            p ^= table.word_parity(ws[k])
                        if p:
                            c = -c
                    key = (H | hj, ws[:j] + (wj,) + ws[j + 1:])
                    s = acc.get(key)
                    acc[key] = c if s is None else s + c
            out = cls(table, len(factors), acc)
        return out

    def _check(self, other):
        if self.table != other.table or self.arity != other.arity:
            raise TableMismatchError("tensor shapes differ")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            terms[k] = c if s is None else s + c
        return TensorElement(self.table, self.arity, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(
            self.table, self.arity, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        if not isinstance(c, Scalar):
            c = Scalar(c)
        return TensorElement(
            self.table, self.arity, {k: s * c for k, s in self.terms.items()})

    def __mul__(self, other):
        """Slotwise graded product."""
        self._check(other)
        table = self.table
        out = {}
        for (HA, ws), ca in self.terms.items():
            pws = [table.word_parity(w) for w in ws]
            for (HB, vs), cb in other.terms.items():
                if HA and HB:
                    continue
                c = ca * cb
                if HB and sum(pws) & 1:
                    c = -c  # the right factor's h crosses all left slot words
                sign = 0
                for i in range(self.arity):
                    pv = table.word_parity(vs[i])
                    if pv:
                        for j in range(i + 1, self.arity):
                            sign ^= pws[j]
                if sign:
                    c = -c
                key = (HA | HB, tuple(ws[i] + vs[i] for i in range(self.arity)))
                s = out.get(key)
                out[key] = c if s is None else s + c
        return TensorElement(table, self.arity, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.table == other.table
                and self.arity == other.arity and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def normalize(self, rs) -> "TensorElement":
        """Reduce every slot under `rs`, pulling slot-h out to the front.

        Slots are processed left to right, so the crossing signs always run
        over already-final h-free words.
        """
        out = self
        for i in range(self.arity):
            acc = {}
            for (H, ws), c in out.terms.items():
                nf = rs.normalize(Element.from_word(self.table, ws[i]))
                lp = 0
                for k in range(i):
                    lp ^= self.table.word_parity(ws[k])
                for (hp, u), cu in nf.terms.items():
                    if H and hp:
                        continue
                    cc = c * cu
                    if hp and lp:
                        cc = -cc
                    key = (H | hp, ws[:i] + (u,) + ws[i + 1:])
                    s = acc.get(key)
                    acc[key] = cc if s is None else s + cc
            out = TensorElement(self.table, self.arity, acc)
        return out

    def map_slot(self, i: int, f, odd: bool = False) -> "TensorElement":
        """Apply `f` to slot i, splicing the image's slots in place.

        `f` takes an Element and returns an Element or TensorElement; `odd`
        adds the operator crossing sign (-1)^{parity of slots left of i}.
        """
        table = self.table
        width = None
        acc = {}
        for (H, ws), c in self.terms.items():
            img = f(Element.from_word(table, ws[i]))
            if isinstance(img, Element):
                img = TensorElement(table, 1, {(h, (w,)): cc
                                               for (h, w), cc in img.terms.items()})
            if width is None:
                width = img.arity
            elif width != img.arity:
                raise ValidationError("slot map returned mixed arities")
            lp = 0
            for k in range(i):
                lp ^= table.word_parity(ws[k])
            for (hp, us), cu in img.terms.items():
                if H and hp:
                    continue
                cc = c * cu
                if lp and (odd ^ (hp & 1)):
                    # the odd operator and the image's h each cross the left
                    # slots; when both are present the signs cancel
                    cc = -cc
                key = (H | hp, ws[:i] + us + ws[i + 1:])
                s = acc.get(key)
                acc[key] = cc if s is None else s + cc
        if width is None:
            width = 1
        return TensorElement(table, self.arity - 1 + width, acc)

    def flatten(self) -> Element:
        """Multiply the slots out left to right (tensor order = word order)."""
        out = {}
        for (H, ws), c in self.terms.items():
            word = ()
            for w in ws:
                word += w
            key = (H, word)
            s = out.get(key)
            out[key] = c if s is None else s + c
        return Element(self.table, out)

    def sorted_terms(self):
        def key(item):
            (H, ws), _ = item
            return (H, sum(len(w) for w in ws), ws)
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        return tensor_str(self)

    def __repr__(self):
        return f"<{self}>"


def tensor_str(t: TensorElement) -> str:
    if not t.terms:
        return "0"
    chunks = []
    for (H, ws), c in t.sorted_terms():
        neg, coeff = _coeff_prefix(c)
        slots = " (x) ".join(word_str(t.table, w) or "1" for w in ws)
        body = []
        if coeff:
            body.append(coeff)
        if H:
            body.append("h")
        body.append(f"[{slots}]")
        text = "*".join(body)
        if not chunks:
            chunks.append(f"-{text}" if neg else text)
        else:
            chunks.append(f" - {text}" if neg else f" + {text}")
    return "".join(chunks)


class CoMap:
    """Graded algebra (anti)homomorphism into a tensor power.

    images maps generator names to TensorElements of one shared arity
    (plain Elements are accepted and wrapped).  The extension to words is
    multiplicative; with antihom=True the letter images multiply in reversed
    order with the Koszul sign of the reversal, and h_sign says whether the
    map is h-linear (+1) or flips the sign of h (-1).
    """

    def __init__(self, table, images: dict, antihom: bool = False,
                 h_sign: int = 1):
        self.table = table
        self.arity = None
        self.images = {}
        for name, img in images.items():
            if isinstance(img, Element):
                img = TensorElement(table, 1, {(h, (w,)): c
                                               for (h, w), c in img.terms.items()})
            if self.arity is None:
                self.arity = img.arity
            elif self.arity != img.arity:
                raise ValidationError("co-map images of mixed arity")
            self.images[table.index(name)] = img
        if self.arity is None:
            self.arity = 1
        self.antihom = antihom
        self.h_sign = h_sign

    def images_by_name(self) -> dict:
        return {self.table.name(i): img for i, img in self.images.items()}

    def __call__(self, elem: Element) -> TensorElement:
        table = self.table
        out = TensorElement.zero(table, self.arity)
        for (H, w), c in elem.terms.items():
            letters = w
            if self.antihom:
                letters = w[::-1]
                odd = sum(table.parity(l) for l in w)
                if (odd * (odd - 1) // 2) & 1:
                    c = -c
            acc = TensorElement.one(table, self.arity)
            for l in letters:
                img = self.images.get(l)
                if img is None:
                    raise ValidationError(
                        f"no image for generator {table.name(l)!r}")
                acc = acc * img
            if H:
                shifted = {}
                for (hp, ws), cc in acc.terms.items():
                    if hp:
                        continue  # h^2 = 0
                    shifted[(1, ws)] = cc if self.h_sign > 0 else -cc
                acc = TensorElement(table, self.arity, shifted)
            out = out + acc.scale(c)
        return out

    def as_element(self, elem: Element) -> Element:
        """Apply an arity-1 map and unwrap the result."""
        if self.arity != 1:
            raise ValidationError("as_element needs an arity-1 map")
        t = self(elem)
        return Element(self.table,
                       {(h, ws[0]): c for (h, ws), c in t.terms.items()})


def verify_tensor_zero(t: TensorElement, rs):
    """(is_zero, witness_string) after slotwise normalization."""
    nf = t.normalize(rs)
    if nf.is_zero():
        return True, None
    return False, tensor_str(nf)
