"""Murphy-type cellular bases of the group layers."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from zrelalg.groups import GAElement, Perm, ProdElt, WreathElt
from zrelalg.murphy import (SymLayer, WreathSymLayer, product_murphy,
                            sym_murphy, wreath_murphy)
from zrelalg.ring import ONE, Poly


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sym_basis_size(n):
    mb = sym_murphy(n)
    assert len(mb.records) == factorial(n)
    for label in mb.labels():
        tabs = mb.tableaux_for(label)
        count = sum(1 for rec in mb.records if rec.label == label)
        assert count == len(tabs) ** 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_wreath_basis_size(n):
    mb = wreath_murphy(n)
    assert len(mb.records) == 2 ** n * factorial(n)


def test_product_basis_size():
    assert len(product_murphy(1, 1).records) == 2
    assert len(product_murphy(2, 1).records) == 8
    assert len(product_murphy(1, 2).records) == 4


def _unit_vector_check(mb):
    for i, rec in enumerate(mb.records):
        coords = mb.coords(rec.element)
        for j, c in enumerate(coords):
            assert c == (ONE if i == j else Poly())


def test_coords_are_exact_inverse():
    _unit_vector_check(sym_murphy(3))
    _unit_vector_check(wreath_murphy(2))
    _unit_vector_check(product_murphy(1, 1))


def _check_cellularity(mb, group_elements):
    """Multiplying a basis element by a group element stays within the
    same label with the right tableau fixed, modulo strictly lower
    (more dominant) labels."""
    for g in group_elements:
        ga = mb.embed(g)
        for rec in mb.records:
            coords = mb.coords(ga * rec.element)
            for c, rec2 in zip(coords, mb.records):
                if c.is_zero():
                    continue
                if rec2.label == rec.label:
                    assert rec2.t == rec.t
                else:
                    assert mb.label_lt(rec2.label, rec.label)


def test_sym_murphy_is_cellular():
    _check_cellularity(sym_murphy(2), Perm.all(2))
    _check_cellularity(sym_murphy(3), Perm.all(3))


def test_wreath_murphy_is_cellular():
    _check_cellularity(wreath_murphy(1), WreathElt.all(1))
    _check_cellularity(wreath_murphy(2), WreathElt.all(2))


def test_product_murphy_is_cellular():
    _check_cellularity(product_murphy(1, 1), ProdElt.all(1, 1))
    _check_cellularity(product_murphy(2, 1), ProdElt.all(2, 1))


def test_struct_const_hand_example():
    # trivial label of S_2: m = 1 + (12), m*m = 2m, so the structure
    # constant of the identity is 2.
    mb = sym_murphy(2)
    label = (2,)
    (t,) = mb.tableaux_for(label)
    assert mb.struct_const(label, t, t, Perm.identity(2)) == Poly.const(2)
    # sign label: m = identity alone, m * (12) * m hits the lower label
    # only, so the same-label coordinate is the coefficient of (12).
    (t1,) = mb.tableaux_for((1, 1))
    assert mb.struct_const((1, 1), t1, t1, Perm.identity(2)) == ONE


def test_wreath_idempotent_layers():
    # top label ((1), ()): the element is the projector (1 + g)/2, which
    # squares to itself; struct const of the identity is 1.
    mb = wreath_murphy(1)
    for label in mb.labels():
        (t,) = mb.tableaux_for(label)
        assert mb.struct_const(label, t, t, WreathElt.identity(1)) == ONE
    # the sign generator acts by +1 on one label and -1 on the other
    g = WreathElt.sign_gen(1, 0)
    consts = sorted(mb.struct_const(label, mb.tableaux_for(label)[0],
                                    mb.tableaux_for(label)[0], g).const_value()
                    for label in mb.labels())
    assert consts == [-1, 1]


def test_layer_objects():
    layer = WreathSymLayer(2, 1)
    assert layer.order() == 8
    assert len(layer.elements()) == 8
    g = layer.from_glue((1, 0), Perm((1, 0)), Perm((0,)))
    assert layer.to_glue(g) == ((1, 0), Perm((1, 0)), Perm((0,)))
    assert layer.identity() * g == g
    assert len(layer.murphy().records) == 8

    sym = SymLayer(2)
    assert sym.order() == 2
    p = sym.from_glue((0, 0), Perm((1, 0)), Perm(()))
    assert p == Perm((1, 0))
    assert sym.to_glue(p) == ((0, 0), Perm((1, 0)), Perm(()))
    with pytest.raises(ValueError):
        sym.from_glue((1, 0), Perm((1, 0)), Perm(()))


@given(st.sampled_from(Perm.all(3)), st.sampled_from(Perm.all(3)))
def test_coords_linear_in_products(p, q):
    mb = sym_murphy(3)
    a, b = mb.embed(p), mb.embed(q)
    lhs = mb.coords(a + b.scale(Fraction(3, 2)))
    ca, cb = mb.coords(a), mb.coords(b)
    for l, x, y in zip(lhs, ca, cb):
        assert l == x + y * Poly.const(Fraction(3, 2))
