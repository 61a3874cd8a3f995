"""The three diagram algebras over the polynomial ring.

Each algebra is a free module on a set of two-row sign-stable diagrams:

* ``z2rel``     -- every diagram; multiplication d1*d2 = x^l (d1 glued on d2).
* ``signed``    -- the span of fully-propagating diagrams together with the
  diagrams whose propagating and one-row component counts satisfy, on both
  rows, s1 + s2 + (one-row couples of size >= 2) + (one-row symmetric
  classes) <= k - 1.  This span is closed under multiplication.
* ``partition`` -- diagrams in which every block is sign-constant; these
  are the doubled copies of ordinary partition diagrams and span a
  subalgebra isomorphic to the partition algebra with parameter x^2.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .errors import Incompatible, InvalidSize, NotADiagram
from .groups import Perm, WreathElt
from .ring import ONE, Poly
from .zpart import (BOTTOM, E, G, TOP, ZStablePartition, canonicalize,
                    compose, enumerate_rk, flip_sign, horizontal_counts,
                    identity_diagram, propagating_data, _set_partitions)

ALGEBRAS = ("z2rel", "signed", "partition")


def _check_algebra(algebra):
    if algebra not in ALGEBRAS:
        raise Incompatible("unknown algebra %r (expected one of %r)"
                           % (algebra, ALGEBRAS))


def in_basis(algebra, d):
    """Whether a two-row diagram belongs to the algebra's diagram basis."""
    _check_algebra(algebra)
    if d.rows != 2:
        raise NotADiagram("algebra elements are spanned by two-row diagrams")
    if algebra == "z2rel":
        return True
    if algebra == "partition":
        return all(len({v[2] for v in b}) == 1 for b in d.blocks)
    pd = propagating_data(d)
    if pd.s1 == d.k:
        return True
    if pd.s1 > d.k - 1 or pd.s2 > d.k - 1:
        return False
    he_t, hz_t, he_b, hz_b = horizontal_counts(d)
    return (pd.s1 + pd.s2 + he_t + hz_t <= d.k - 1
            and pd.s1 + pd.s2 + he_b + hz_b <= d.k - 1)


def basis(algebra, k):
    """The diagram basis, in the canonical deterministic order."""
    _check_algebra(algebra)
    return [d for d in enumerate_rk(k, 2) if in_basis(algebra, d)]


def _bell(n):
    row = [1]
    for _ in range(n):
        prev = row
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
    return row[0]


def dim_formula(algebra, k):
    """Closed-form dimension, independent of diagram enumeration.

    z2rel: sum over set partitions of the 2k unsigned points of
    prod(2^(block size - 1) + 1), since each unsigned block admits that many
    stable coverings.  partition: the Bell number B(2k).  signed: the
    permutation diagrams contribute k! 2^k; every other ordinary partition
    diagram d on two rows of k points contributes
    ((2^r - 1)/2^r)^s * prod(2^(block size - 1) + 1), with r = k minus the
    number of propagating blocks and s = how many of the two rows d meets
    with k distinct blocks (s counts |d+| = k and |d-| = k; both holding
    gives s = 2).
    """
    _check_algebra(algebra)
    if k < 1:
        raise InvalidSize("k must be >= 1, got %r" % k)
    if algebra == "partition":
        return _bell(2 * k)
    positions = [(row, i) for row in range(2) for i in range(1, k + 1)]
    if algebra == "z2rel":
        total = 0
        for part in _set_partitions(positions):
            prod = 1
            for blk in part:
                prod *= 2 ** (len(blk) - 1) + 1
            total += prod
        return total
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    total = Fraction(fact * 2**k)
    for part in _set_partitions(positions):
        tops = sum(1 for blk in part if any(r == 0 for r, _ in blk))
        bots = sum(1 for blk in part if any(r == 1 for r, _ in blk))
        prop = sum(1 for blk in part
                   if any(r == 0 for r, _ in blk) and any(r == 1 for r, _ in blk))
        if prop == k and all(len(blk) == 2 for blk in part):
            continue  # permutation diagram, carried by the k! 2^k term
        s = (1 if tops == k else 0) + (1 if bots == k else 0)
        r = k - prop
        term = Fraction(2**r - 1, 2**r) ** s
        for blk in part:
            term *= 2 ** (len(blk) - 1) + 1
        total += term
    if total.denominator != 1:
        raise AssertionError("dimension sum is not an integer: %r" % (total,))
    return int(total)


class AlgebraElement:
    """Finite formal sum of basis diagrams with polynomial coefficients."""

    __slots__ = ("algebra", "k", "terms")

    def __init__(self, algebra, k, terms=None):
        _check_algebra(algebra)
        if k < 1:
            raise InvalidSize("k must be >= 1, got %r" % k)
        self.algebra = algebra
        self.k = k
        self.terms = {}
        if terms:
            for d, c in terms.items():
                c = c if isinstance(c, Poly) else Poly.const(c)
                if c.is_zero():
                    continue
                if d.k != k or d.rows != 2:
                    raise Incompatible("diagram %r does not fit k=%d" % (d, k))
                if not in_basis(algebra, d):
                    raise Incompatible("diagram %r not in the %s basis"
                                       % (d, algebra))
                self.terms[d] = c

    @staticmethod
    def of(algebra, d, coeff=None):
        return AlgebraElement(algebra, d.k, {d: ONE if coeff is None else coeff})

    @staticmethod
    def zero(algebra, k):
        return AlgebraElement(algebra, k)

    @staticmethod
    def identity(algebra, k):
        return AlgebraElement.of(algebra, identity_diagram(k))

    def is_zero(self):
        return not self.terms

    def _match(self, other):
        if self.algebra != other.algebra or self.k != other.k:
            raise Incompatible("mixing %s/k=%d with %s/k=%d"
                               % (self.algebra, self.k, other.algebra, other.k))

    def __add__(self, other):
        self._match(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            nc = terms.get(d, Poly()) + c
            if nc.is_zero():
                terms.pop(d, None)
            else:
                terms[d] = nc
        out = AlgebraElement(self.algebra, self.k)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + other.scale(Poly.const(-1))

    def scale(self, coeff):
        coeff = coeff if isinstance(coeff, Poly) else Poly.const(coeff)
        return AlgebraElement(self.algebra, self.k,
                              {d: c * coeff for d, c in self.terms.items()})

    def __mul__(self, other):
        self._match(other)
        out = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2)
                c = c1 * c2 * Poly.x(loops) if loops else c1 * c2
                if d in out:
                    out[d] = out[d] + c
                else:
                    out[d] = c
        return AlgebraElement(self.algebra, self.k, out)

    def star(self):
        """The involution flipping top and bottom rows, extended linearly."""
        return AlgebraElement(self.algebra, self.k,
                              {star_diagram(d): c for d, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.algebra == other.algebra
                and self.k == other.k and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)*%r" % (c, d)
                          for d, c in sorted(self.terms.items()))

    def to_json(self):
        return {"algebra": self.algebra, "k": self.k,
                "terms": [{"coeff": c.to_json(), "diagram": d.to_json()}
                          for d, c in sorted(self.terms.items())]}

    @staticmethod
    def from_json(obj):
        algebra = obj["algebra"]
        k = int(obj["k"])
        terms = {}
        for t in obj["terms"]:
            d = ZStablePartition.from_json(t["diagram"])
            c = Poly.from_json(t["coeff"])
            terms[d] = terms.get(d, Poly()) + c
        return AlgebraElement(algebra, k, terms)


def star_diagram(d):
    """Flip top and bottom rows of a single diagram."""
    if d.rows != 2:
        raise NotADiagram("star needs a two-row diagram")
    blocks = [[(1 - r, i, s) for r, i, s in b] for b in d.blocks]
    return canonicalize(blocks, d.k, 2)


def top_cell_group(k):
    """The fully-propagating diagrams, as a list sorted like the basis."""
    return [d for d in enumerate_rk(k, 2) if propagating_data(d).s1 == k]


def diagram_to_wreath(d):
    """The decorated permutation (f, sigma) of a fully-propagating diagram.

    sigma(i) = j when column i on top connects to column j below;
    f(i) = 1 exactly when (i, e) is joined to (sigma(i)', g).
    """
    if d.rows != 2 or propagating_data(d).s1 != d.k:
        raise NotADiagram("not a fully-propagating diagram: %r" % (d,))
    images = [0] * d.k
    signs = [0] * d.k
    for i in range(1, d.k + 1):
        blk = d.block_of((TOP, i, E))
        (j, s), = {(v[1], v[2]) for v in blk if v[0] == BOTTOM}
        images[i - 1] = j - 1
        signs[i - 1] = s
    return WreathElt(signs, Perm(images))


def wreath_to_diagram(w, k):
    """Inverse of diagram_to_wreath."""
    blocks = []
    for i in range(k):
        b = [(TOP, i + 1, E), (BOTTOM, w.perm(i) + 1, w.signs[i])]
        blocks.append(b)
        blocks.append([flip_sign(v) for v in b])
    return canonicalize(blocks, k, 2)
