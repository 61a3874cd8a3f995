"""Half-diagram factorization, phi-map, tabular axiom, cellular basis."""

import pytest

from zrelalg.dalg import ALGEBRAS, AlgebraElement, basis, dim_formula
from zrelalg.errors import Incompatible
from zrelalg.groups import Perm
from zrelalg.ring import ONE, Poly
from zrelalg.tabular import (CellLabel, HalfDiagram, cellular_basis,
                             decompose, enumerate_M, index_lt, index_pairs,
                             layer_for, phi, phi_element, reconstruct,
                             variant_for, verify_table_datum)
from zrelalg.zpart import (E, G, TOP, canonicalize, propagating_data)


@pytest.mark.parametrize("algebra", ALGEBRAS)
@pytest.mark.parametrize("k", [1, 2])
def test_half_diagram_census(algebra, k):
    """Sum over indices of |M|^2 * (layer group order) equals the algebra
    dimension -- the factorization is a bijection."""
    variant = variant_for(algebra)
    total = 0
    for s1, s2 in index_pairs(algebra, k):
        m = len(enumerate_M(k, s1, s2, variant))
        total += m * m * layer_for(algebra, s1, s2).order()
    assert total == dim_formula(algebra, k)


@pytest.mark.parametrize("algebra", ALGEBRAS)
@pytest.mark.parametrize("k", [1, 2])
def test_decompose_reconstruct_roundtrip(algebra, k):
    for d in basis(algebra, k):
        top, bot, f, s1, s2 = decompose(d)
        pd = propagating_data(d)
        assert (top.s1, top.s2) == (bot.s1, bot.s2) == (pd.s1, pd.s2)
        assert reconstruct(top, bot, f, s1, s2) == d


def test_decompose_is_injective():
    seen = {}
    for d in basis("z2rel", 2):
        key = decompose(d)
        assert key not in seen
        seen[key] = d


def _halves_k1():
    split = canonicalize([[(TOP, 1, E)], [(TOP, 1, G)]], 1, 1)
    joined = canonicalize([[(TOP, 1, E), (TOP, 1, G)]], 1, 1)
    return split, joined


def test_phi_hand_examples():
    split, joined = _halves_k1()
    # no marks: phi always succeeds; l counts the join classes
    h_split = HalfDiagram(split)
    h_joined = HalfDiagram(joined)
    assert phi(h_split, h_split) == (2, (), Perm(()), Perm(()))
    assert phi(h_split, h_joined) == (1, (), Perm(()), Perm(()))
    assert phi(h_joined, h_joined) == (1, (), Perm(()), Perm(()))
    # one couple mark on each side: the marked blocks pair off, l = 0
    m = HalfDiagram(split, e_marks=[(1,)])
    assert phi(m, m) == (0, (0,), Perm((0,)), Perm(()))
    z = HalfDiagram(joined, z_marks=[(1,)])
    assert phi(z, z) == (0, (), Perm(()), Perm((0,)))
    # mismatched mark counts are a usage error, not a zero
    with pytest.raises(Incompatible):
        phi(m, z)


def test_phi_failure_two_marks_in_one_join_class():
    # k=2, both columns joined on the bottom half: the two marked couples
    # of the top half land in a single join class
    top_base = canonicalize([[(TOP, 1, E)], [(TOP, 1, G)],
                             [(TOP, 2, E)], [(TOP, 2, G)]], 2, 1)
    bot_base = canonicalize([[(TOP, 1, E), (TOP, 2, E)],
                             [(TOP, 1, G), (TOP, 2, G)]], 2, 1)
    bot = HalfDiagram(bot_base, e_marks=[(1, 2)])
    top1 = HalfDiagram(top_base, e_marks=[(1,)])
    assert phi(top1, bot) == (0, (0,), Perm((0,)), Perm(()))
    two_marked = HalfDiagram(top_base, e_marks=[(1,), (2,)])
    assert phi(two_marked, two_marked) == (0, (0, 0), Perm((0, 1)),
                                           Perm(()))


def test_phi_none_when_marks_collide_or_miss():
    def zbase(*groups):
        blocks = [[(TOP, i, s) for i in grp for s in (E, G)]
                  for grp in groups]
        return canonicalize(blocks, 3, 1)

    # the bottom base merges the two marked classes of the top half
    top = HalfDiagram(zbase((1,), (2,), (3,)), z_marks=[(1,), (2,)])
    bot = HalfDiagram(zbase((1, 2), (3,)), z_marks=[(1, 2), (3,)])
    assert phi(top, bot) is None
    # disjoint marked supports: the join classes do not line up
    a = HalfDiagram(zbase((1,), (2,), (3,)), z_marks=[(1,)])
    b = HalfDiagram(zbase((1,), (2,), (3,)), z_marks=[(2,)])
    assert phi(a, b) is None
    assert phi(a, a) == (2, (), Perm(()), Perm((0,)))


def test_phi_element_values():
    split, joined = _halves_k1()
    m = HalfDiagram(split, e_marks=[(1,)])
    layer = layer_for("z2rel", 1, 0)
    assert phi_element(m, m, layer).terms
    h = HalfDiagram(split)
    lay0 = layer_for("z2rel", 0, 0)
    elt = phi_element(h, h, lay0)
    (g, c), = elt.terms.items()
    assert c == Poly.x(2)

    def zbase(*groups):
        blocks = [[(TOP, i, s) for i in grp for s in (E, G)]
                  for grp in groups]
        return canonicalize(blocks, 3, 1)

    a = HalfDiagram(zbase((1,), (2,), (3,)), z_marks=[(1,)])
    b = HalfDiagram(zbase((1,), (2,), (3,)), z_marks=[(2,)])
    assert phi_element(a, b, layer_for("z2rel", 0, 1)).is_zero()


def test_index_pairs_and_order():
    assert index_pairs("partition", 2) == [(0, 0), (1, 0), (2, 0)]
    assert (0, 1) in index_pairs("z2rel", 2)
    assert (0, 1) in index_pairs("signed", 2)
    assert (0, 2) in index_pairs("z2rel", 2)
    assert (0, 2) not in index_pairs("signed", 2)
    assert index_lt((0, 0), (0, 1))
    assert index_lt((0, 1), (1, 0))          # r = 1 below r = 2
    assert index_lt((1, 0), (0, 2))          # equal r: fewer through classes
    assert not index_lt((0, 2), (1, 0))
    assert not index_lt((1, 0), (1, 0))


def test_gram_shape_hand_example():
    # k=1, no marks: entries x^l with l from phi; matches [[x^2, x], [x, x]]
    halves = enumerate_M(1, 0, 0, "plain")
    assert len(halves) == 2
    mat = [[phi(p, q)[0] for q in halves] for p in halves]
    assert sorted(sum(mat, [])) == [1, 1, 1, 2]


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_tabular_axiom_exhaustive_k1(algebra):
    report = verify_table_datum(algebra, 1)
    assert report["failures"] == []
    assert report["checked"] == dim_formula(algebra, 1) ** 2


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_tabular_axiom_sampled_k2(algebra):
    report = verify_table_datum(algebra, 2, samples=100, seed=7)
    assert report["failures"] == []
    assert report["checked"] == 100


@pytest.mark.parametrize("algebra", ALGEBRAS)
@pytest.mark.parametrize("k", [1, 2])
def test_cellular_basis_is_a_basis(algebra, k):
    cb = cellular_basis(algebra, k)   # constructor inverts the matrix
    assert len(cb.records) == dim_formula(algebra, k)
    # coordinates of a record are a unit vector
    for i in range(0, len(cb.records), max(1, len(cb.records) // 10)):
        coords = cb.coords(cb.records[i].element)
        for j, c in enumerate(coords):
            assert c == (ONE if i == j else Poly())


def test_cell_congruence_exhaustive_k1():
    for algebra in ALGEBRAS:
        cb = cellular_basis(algebra, 1)
        for d in basis(algebra, 1):
            a = AlgebraElement.of(algebra, d)
            for rec in cb.records:
                coords = cb.coords(a * rec.element)
                for c, rec2 in zip(coords, cb.records):
                    if c.is_zero():
                        continue
                    if rec2.label == rec.label:
                        assert rec2.right == rec.right
                    else:
                        assert cb.label_lt(rec2.label, rec.label)


def test_label_order_is_strict():
    cb = cellular_basis("z2rel", 1)
    labels = cb.labels()
    for a in labels:
        assert not cb.label_lt(a, a)
        for b in labels:
            if cb.label_lt(a, b):
                assert not cb.label_lt(b, a)


def test_half_diagram_json_roundtrip():
    for h in enumerate_M(2, 1, 0, "signed"):
        assert HalfDiagram.from_json(h.to_json()) == h


def test_enumerate_M_variants_nest():
    for (s1, s2) in [(0, 0), (1, 0), (0, 1), (2, 0)]:
        plain = set(enumerate_M(2, s1, s2, "plain"))
        assert set(enumerate_M(2, s1, s2, "signed")) <= plain
        if s2 == 0:
            assert set(enumerate_M(2, s1, s2, "partition")) <= plain


def test_cell_label_r():
    assert CellLabel(2, 1, ((), ())).r == 5
