"""Tabular structure and cellular basis of the diagram algebras.

Every basis diagram with propagating data (s1, s2) factors uniquely as a
triple (top half, group element, bottom half): the halves are one-row
partitions with 2s1+s2 marked components (the traces of the through
classes) and the group element of (Z2 wr S_s1) x S_s2 records how top
marks connect to bottom marks, including the sign twist.  Replacing the
group coordinate by Murphy basis elements produces a cellular basis whose
structure constants factor through the phi-map on pairs of halves.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .dalg import AlgebraElement, _check_algebra, basis as algebra_basis
from .errors import Incompatible, NotADiagram, UnknownLabel
from .groups import GAElement, Perm
from .murphy import SymLayer, WreathSymLayer
from .ring import ExactMatrix, ONE, Poly
from .zpart import (BOTTOM, E, EPAIR, G, TOP, Z2CLASS, canonicalize,
                    enumerate_rk, propagating_data, restrict)


class HalfDiagram:
    """A one-row stable partition with ordered marked components.

    Marks are recorded by the unsigned support of the component; couples
    (EPair) and symmetric classes (Z2) are kept in separate lists, each
    sorted by minimal position -- that ordering is what the group-element
    coordinates refer to.
    """

    __slots__ = ("base", "e_marks", "z_marks", "_hash")

    def __init__(self, base, e_marks=(), z_marks=()):
        if base.rows != 1:
            raise NotADiagram("half diagrams live on one row")
        self.base = base
        self.e_marks = tuple(sorted(tuple(m) for m in e_marks))
        self.z_marks = tuple(sorted(tuple(m) for m in z_marks))
        kinds = {c.support: c.kind for c in base.components()}
        for m in self.e_marks:
            key = tuple((TOP, i) for i in m)
            if kinds.get(key) != EPAIR:
                raise Incompatible("support %r is not a couple of %r" % (m, base))
        for m in self.z_marks:
            key = tuple((TOP, i) for i in m)
            if kinds.get(key) != Z2CLASS:
                raise Incompatible("support %r is not a symmetric class of %r"
                                   % (m, base))
        self._hash = hash((base, self.e_marks, self.z_marks))

    @property
    def k(self):
        return self.base.k

    @property
    def s1(self):
        return len(self.e_marks)

    @property
    def s2(self):
        return len(self.z_marks)

    def e_block(self, support):
        """The block of a marked couple containing the minimal e-vertex."""
        return self.base.block_of((TOP, support[0], E))

    def g_block(self, support):
        return self.base.block_of((TOP, support[0], G))

    def z_block(self, support):
        return self.base.block_of((TOP, support[0], E))

    def marked_blocks(self):
        """All raw blocks covered by some mark."""
        out = []
        for m in self.e_marks:
            out.append(self.e_block(m))
            out.append(self.g_block(m))
        for m in self.z_marks:
            out.append(self.z_block(m))
        return out

    def __eq__(self, other):
        return (isinstance(other, HalfDiagram) and self.base == other.base
                and self.e_marks == other.e_marks and self.z_marks == other.z_marks)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return ((self.base, self.e_marks, self.z_marks)
                < (other.base, other.e_marks, other.z_marks))

    def __repr__(self):
        return "HalfDiagram(%r, e=%r, z=%r)" % (self.base, self.e_marks,
                                                self.z_marks)

    def to_json(self):
        return {"base": self.base.to_json(),
                "e_marks": [list(m) for m in self.e_marks],
                "z_marks": [list(m) for m in self.z_marks]}

    @staticmethod
    def from_json(obj):
        from .zpart import ZStablePartition
        return HalfDiagram(ZStablePartition.from_json(obj["base"]),
                           [tuple(m) for m in obj["e_marks"]],
                           [tuple(m) for m in obj["z_marks"]])


def variant_for(algebra):
    _check_algebra(algebra)
    return {"z2rel": "plain", "signed": "signed", "partition": "partition"}[algebra]


def _admit_half(half, k, variant):
    if variant == "plain":
        return True
    comps = half.base.components()
    if variant == "partition":
        return (half.s2 == 0
                and all(len({v[2] for v in b}) == 1 for b in half.base.blocks))
    marked = set(half.e_marks) | set(half.z_marks)
    r1 = r2 = 0
    for c in comps:
        supp = tuple(i for _, i in c.support)
        if supp in marked:
            continue
        if c.kind == EPAIR:
            r1 += 1
        else:
            r2 += 1
    total = half.s1 + half.s2 + r1 + r2
    if total <= k - 1:
        return True
    return total == k and (half.s1 == k or r1 != 0)


def enumerate_M(k, s1, s2, variant="plain"):
    """All admissible marked one-row halves with the given mark counts."""
    if variant not in ("plain", "signed", "partition"):
        raise Incompatible("unknown variant %r" % (variant,))
    out = []
    for base in enumerate_rk(k, 1):
        comps = base.components()
        e_supports = [tuple(i for _, i in c.support)
                      for c in comps if c.kind == EPAIR]
        z_supports = [tuple(i for _, i in c.support)
                      for c in comps if c.kind == Z2CLASS]
        if len(e_supports) < s1 or len(z_supports) < s2:
            continue
        for emarks in combinations(e_supports, s1):
            for zmarks in combinations(z_supports, s2):
                half = HalfDiagram(base, emarks, zmarks)
                if _admit_half(half, k, variant):
                    out.append(half)
    out.sort()
    return out


def decompose(d):
    """Split a diagram into (top half, bottom half, f, sigma1, sigma2).

    sigma1 sends the i-th top couple mark to the bottom couple mark its
    through class lands on; f(i) = 1 exactly when the block holding the
    minimal top e-vertex holds the minimal bottom g-vertex.  sigma2 does
    the same for symmetric through classes.
    """
    if d.rows != 2:
        raise NotADiagram("decompose needs a two-row diagram")
    top = restrict(d, "top")
    bot = restrict(d, "bottom")
    e_through = []
    z_through = []
    for c in d.components():
        if len(c.rows_met()) != 2:
            continue
        tsup = tuple(i for row, i in c.support if row == TOP)
        bsup = tuple(i for row, i in c.support if row == BOTTOM)
        if c.kind == EPAIR:
            e_through.append((tsup, bsup))
        else:
            z_through.append((tsup, bsup))
    top_half = HalfDiagram(top, [t for t, _ in e_through],
                           [t for t, _ in z_through])
    bot_half = HalfDiagram(bot, [b for _, b in e_through],
                           [b for _, b in z_through])
    s1, s2 = len(e_through), len(z_through)
    images1 = [0] * s1
    signs = [0] * s1
    for tsup, bsup in e_through:
        i = top_half.e_marks.index(tsup)
        j = bot_half.e_marks.index(bsup)
        images1[i] = j
        blk = d.block_of((TOP, tsup[0], E))
        signs[i] = 1 if (BOTTOM, bsup[0], G) in blk else 0
    images2 = [0] * s2
    for tsup, bsup in z_through:
        images2[z_marks_index(top_half, tsup)] = z_marks_index(bot_half, bsup)
    return (top_half, bot_half, tuple(signs), Perm(images1), Perm(images2))


def z_marks_index(half, support):
    return half.z_marks.index(tuple(support))


def reconstruct(top, bottom, f, sigma1, sigma2):
    """Inverse of decompose: glue marks along (f, sigma1, sigma2)."""
    if (top.k != bottom.k or top.s1 != bottom.s1 or top.s2 != bottom.s2):
        raise Incompatible("halves do not match: %r / %r" % (top, bottom))
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def tv(v):
        return (TOP, v[1], v[2])

    def bv(v):
        return (BOTTOM, v[1], v[2])

    for b in top.base.blocks:
        for v in b:
            parent[tv(v)] = tv(v)
    for b in bottom.base.blocks:
        for v in b:
            parent[bv(v)] = bv(v)
    for b in top.base.blocks:
        for v in b[1:]:
            union(tv(b[0]), tv(v))
    for b in bottom.base.blocks:
        for v in b[1:]:
            union(bv(b[0]), bv(v))
    for i, tsup in enumerate(top.e_marks):
        bsup = bottom.e_marks[sigma1(i)]
        if f[i]:
            union(tv(top.e_block(tsup)[0]), bv(bottom.g_block(bsup)[0]))
            union(tv(top.g_block(tsup)[0]), bv(bottom.e_block(bsup)[0]))
        else:
            union(tv(top.e_block(tsup)[0]), bv(bottom.e_block(bsup)[0]))
            union(tv(top.g_block(tsup)[0]), bv(bottom.g_block(bsup)[0]))
    for l, tsup in enumerate(top.z_marks):
        bsup = bottom.z_marks[sigma2(l)]
        union(tv(top.z_block(tsup)[0]), bv(bottom.z_block(bsup)[0]))
    classes = {}
    for v in parent:
        classes.setdefault(find(v), []).append(v)
    return canonicalize(list(classes.values()), top.k, 2)


def phi(top, bottom):
    """Glue two halves along their shared row.

    Returns (l, f, sigma1, sigma2) when the marked blocks of the two
    halves pair off bijectively inside the join -- one from each side per
    join class -- and None otherwise.  l counts the join classes meeting
    no marked block of either half.
    """
    if (top.k != bottom.k or top.s1 != bottom.s1 or top.s2 != bottom.s2):
        raise Incompatible("halves do not match: %r / %r" % (top, bottom))
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for half in (top, bottom):
        for b in half.base.blocks:
            for v in b:
                parent.setdefault(v, v)
    for half in (top, bottom):
        for b in half.base.blocks:
            for v in b[1:]:
                union(b[0], v)
    top_marked = {}    # join class -> (kind, mark index, which block)
    for i, m in enumerate(top.e_marks):
        for tag, blk in (("e", top.e_block(m)), ("g", top.g_block(m))):
            cls = find(blk[0])
            if cls in top_marked:
                return None
            top_marked[cls] = ("e", i, tag)
    for l, m in enumerate(top.z_marks):
        cls = find(top.z_block(m)[0])
        if cls in top_marked:
            return None
        top_marked[cls] = ("z", l, None)
    bot_marked = {}
    for j, m in enumerate(bottom.e_marks):
        for tag, blk in (("e", bottom.e_block(m)), ("g", bottom.g_block(m))):
            cls = find(blk[0])
            if cls in bot_marked:
                return None
            bot_marked[cls] = ("e", j, tag)
    for m_i, m in enumerate(bottom.z_marks):
        cls = find(bottom.z_block(m)[0])
        if cls in bot_marked:
            return None
        bot_marked[cls] = ("z", m_i, None)
    if set(top_marked) != set(bot_marked):
        return None
    s1, s2 = top.s1, top.s2
    images1 = [None] * s1
    signs = [0] * s1
    images2 = [None] * s2
    for cls, (kind, i, tag) in top_marked.items():
        bkind, j, btag = bot_marked[cls]
        if kind != bkind:
            return None
        if kind == "e":
            if tag == "e":
                images1[i] = j
                signs[i] = 1 if btag == "g" else 0
        else:
            images2[i] = j
    if None in images1 or None in images2:
        return None
    l = 0
    seen = set()
    for v in parent:
        cls = find(v)
        if cls in seen:
            continue
        seen.add(cls)
        if cls not in top_marked:
            l += 1
    return (l, tuple(signs), Perm(images1), Perm(images2))


def layer_for(algebra, s1, s2):
    _check_algebra(algebra)
    if algebra == "partition":
        if s2 != 0:
            raise UnknownLabel("partition algebra has s2 = 0 only")
        return SymLayer(s1)
    return WreathSymLayer(s1, s2)


def phi_element(top, bottom, layer):
    """The phi-map valued in the layer's group algebra (zero element if
    the gluing conditions fail)."""
    res = phi(top, bottom)
    if res is None:
        return GAElement.zero()
    l, f, sigma1, sigma2 = res
    return GAElement.of(layer.from_glue(f, sigma1, sigma2), Poly.x(l))


def index_pairs(algebra, k):
    """The (s1, s2) grid of the algebra's tabular poset, low to high."""
    _check_algebra(algebra)
    s2max = {"z2rel": k, "signed": k - 1, "partition": 0}[algebra]
    pairs = [(s1, s2) for s1 in range(k + 1) for s2 in range(s2max + 1)
             if 2 * s1 + s2 <= 2 * k]
    pairs.sort(key=lambda p: (2 * p[0] + p[1], p[0] + p[1], p))
    return pairs


def index_lt(a, b):
    """Strict tabular order: (r, s1+s2) with smaller meaning lower."""
    ra, rb = 2 * a[0] + a[1], 2 * b[0] + b[1]
    if ra != rb:
        return ra < rb
    return a[0] + a[1] < b[0] + b[1]


def _glue_of(d, layer):
    top, bot, f, s1, s2 = decompose(d)
    return top, bot, layer.from_glue(f, s1, s2)


def verify_table_datum(algebra, k, samples=200, seed=0):
    """Check the tabular product axiom on (a, C) pairs.

    For each pair: expand a*C; the result either falls into a strictly
    lower index, or is a basis diagram with the same bottom half as C
    whose group coordinate differs from C's by left-multiplication with a
    factor depending only on a and C's top half.  Tested by comparing
    against a reference C with identity group element and the top half
    reused as bottom half, then varying C's bottom half and group element.
    Returns {"checked": n, "failures": [...], "elapsed_ms": ...}.
    """
    import random

    t0 = time.time()
    diagrams = algebra_basis(algebra, k)
    variant = variant_for(algebra)
    rng = random.Random(seed)
    report = {"checked": 0, "failures": []}

    def run_pair(a, c):
        top, bot, f, sg1, sg2 = decompose(c)
        s1, s2 = top.s1, top.s2
        layer = layer_for(algebra, s1, s2)
        g = layer.from_glue(f, sg1, sg2)
        ref = reconstruct(top, top, (0,) * s1, Perm.identity(s1),
                          Perm.identity(s2))
        prod = AlgebraElement.of(algebra, a) * AlgebraElement.of(algebra, c)
        prod_ref = AlgebraElement.of(algebra, a) * AlgebraElement.of(algebra, ref)
        (d0, c0), = prod.terms.items()
        (d1, c1), = prod_ref.terms.items()
        pd0 = propagating_data(d0)
        pd1 = propagating_data(d1)
        low0 = index_lt((pd0.s1, pd0.s2), (s1, s2))
        low1 = index_lt((pd1.s1, pd1.s2), (s1, s2))
        if low0 or low1:
            if low0 != low1:
                return "vanishing depends on right data: a=%r C=%r" % (a, c)
            return None
        if (pd0.s1, pd0.s2) != (s1, s2) or (pd1.s1, pd1.s2) != (s1, s2):
            return "index escaped upward: a=%r C=%r" % (a, c)
        t0h, b0h, g0 = _glue_of(d0, layer)
        t1h, b1h, g1 = _glue_of(d1, layer)
        if b0h != bot:
            return "bottom half changed: a=%r C=%r" % (a, c)
        if b1h != top:
            return "reference bottom half changed: a=%r C=%r" % (a, c)
        if t0h != t1h:
            return "left coefficient depends on right data: a=%r C=%r" % (a, c)
        if c0 != c1:
            return "scalar depends on right data: a=%r C=%r" % (a, c)
        if g0 != g1 * g:
            return "group twist not a left factor: a=%r C=%r" % (a, c)
        return None

    if k <= 1:
        pairs = [(a, c) for a in diagrams for c in diagrams]
    else:
        pairs = [(rng.choice(diagrams), rng.choice(diagrams))
                 for _ in range(samples)]
    for a, c in pairs:
        failure = run_pair(a, c)
        report["checked"] += 1
        if failure is not None:
            report["failures"].append(failure)
    report["elapsed_ms"] = int((time.time() - t0) * 1000)
    return report


@dataclass(frozen=True)
class CellLabel:
    """(r, (s1, s2)) plus the group-layer cell label.

    For the z2rel and signed algebras the group label is a pair
    (bipartition of s1, partition of s2); for the partition algebra it is
    a single partition of s1.
    """

    s1: int
    s2: int
    glabel: object

    @property
    def r(self):
        return 2 * self.s1 + self.s2


@dataclass(frozen=True)
class CellRecord:
    label: CellLabel
    left: tuple      # (HalfDiagram, layer tableau datum)
    right: tuple
    element: object  # AlgebraElement


class CellularBasis:
    """The full cellular basis of one algebra at one size, with exact
    change of basis from the diagram basis."""

    def __init__(self, algebra, k):
        _check_algebra(algebra)
        self.algebra = algebra
        self.k = k
        self.diagrams = algebra_basis(algebra, k)
        self.diag_index = {d: i for i, d in enumerate(self.diagrams)}
        variant = variant_for(algebra)
        self.M = {}
        self.layers = {}
        self.records = []
        for s1, s2 in index_pairs(algebra, k):
            halves = enumerate_M(k, s1, s2, variant)
            if not halves:
                continue
            self.M[(s1, s2)] = halves
            layer = layer_for(algebra, s1, s2)
            self.layers[(s1, s2)] = layer
            murphy = layer.murphy()
            for rec in murphy.records:
                label = CellLabel(s1, s2, rec.label)
                for P in halves:
                    for Q in halves:
                        terms = {}
                        for g, coeff in rec.element.terms.items():
                            f, sg1, sg2 = layer.to_glue(g)
                            d = reconstruct(P, Q, f, sg1, sg2)
                            terms[d] = terms.get(d, Poly()) + coeff
                        elem = AlgebraElement(algebra, k, terms)
                        self.records.append(CellRecord(label, (P, rec.s),
                                                       (Q, rec.t), elem))
        n = len(self.records)
        if n != len(self.diagrams):
            raise AssertionError("cellular basis size %d != dim %d"
                                 % (n, len(self.diagrams)))
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for col, rec in enumerate(self.records):
            for d, c in rec.element.terms.items():
                matrix[self.diag_index[d]][col] = c.const_value()
        self._inv = ExactMatrix(matrix).inverse_rational()
        self._positions = {}
        for i, rec in enumerate(self.records):
            self._positions[(rec.label, rec.left, rec.right)] = i

    def position(self, label, left, right):
        try:
            return self._positions[(label, left, right)]
        except KeyError:
            raise UnknownLabel("no cellular basis element %r" % ((label, left,
                                                                  right),))

    def coords(self, elem):
        """Exact cellular coordinates of an algebra element (Poly-valued)."""
        vec = [Poly()] * len(self.diagrams)
        for d, c in elem.terms.items():
            vec[self.diag_index[d]] = c
        out = []
        for row in self._inv.entries:
            acc = Poly()
            for q, p in zip(row, vec):
                if q and p:
                    acc = acc + p * q
            out.append(acc)
        return out

    def label_lt(self, a, b):
        """Strict cell order; lower labels are discarded by reduction."""
        if (a.s1, a.s2) != (b.s1, b.s2):
            return index_lt((a.s1, a.s2), (b.s1, b.s2))
        if a.glabel == b.glabel:
            return False
        return self.layers[(a.s1, a.s2)].murphy().label_lt(a.glabel, b.glabel)

    def labels(self):
        seen = []
        for rec in self.records:
            if rec.label not in seen:
                seen.append(rec.label)
        return seen

    def left_data(self, label):
        seen = []
        for rec in self.records:
            if rec.label == label and rec.left not in seen:
                seen.append(rec.left)
        return seen


_cellular_cache = {}


def cellular_basis(algebra, k):
    key = (algebra, k)
    if key not in _cellular_cache:
        _cellular_cache[key] = CellularBasis(algebra, k)
    return _cellular_cache[key]
