"""Cell modules, Gram matrices, radicals and irreducible dimensions.

The cell module for a label fixes the right half of the cellular basis and
lets the algebra act on the left halves; its bilinear form factors through
the phi-map on pairs of halves times structure constants of the Murphy
layer.  Radical = kernel of the Gram matrix; dim of the irreducible head =
Gram rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dalg import AlgebraElement, dim_formula
from .errors import Incompatible, UnknownLabel, UnsupportedCharacteristic
from .ring import ExactMatrix, Poly, Rationals, ScalarField
from .tableaux import bishape_sort_key, shape_sort_key
from .tabular import cellular_basis, phi


@dataclass(frozen=True)
class CellModule:
    algebra: str
    k: int
    label: object            # CellLabel
    basis: tuple             # left data (HalfDiagram, layer tableau datum)

    @property
    def dim(self):
        return len(self.basis)


def cell_module(label, algebra, k):
    cb = cellular_basis(algebra, k)
    data = cb.left_data(label)
    if not data:
        raise UnknownLabel("no cell module with label %r" % (label,))
    return CellModule(algebra, k, label, tuple(data))


def action_matrix(a, module):
    """Matrix of a on the cell module, in the pinned left-data order.

    Computed by acting on cellular basis elements with a fixed right half
    and reading same-label coordinates; lower-label residue is discarded
    by the cell congruence.
    """
    if a.algebra != module.algebra or a.k != module.k:
        raise Incompatible("element and module live in different algebras")
    cb = cellular_basis(module.algebra, module.k)
    right0 = module.basis[0]
    n = module.dim
    cols = []
    for left in module.basis:
        rec = cb.records[cb.position(module.label, left, right0)]
        coords = cb.coords(a * rec.element)
        col = []
        for target in module.basis:
            col.append(coords[cb.position(module.label, target, right0)])
        cols.append(col)
    return ExactMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def gram(label, algebra, k):
    """Gram matrix by the factorized formula: entry (S, T) is
    x^l(P glued to P') times the Murphy structure constant of the glue."""
    cb = cellular_basis(algebra, k)
    module = cell_module(label, algebra, k)
    layer = cb.layers[(label.s1, label.s2)]
    murphy = layer.murphy()
    entries = []
    for (P, s) in module.basis:
        row = []
        for (Q, t) in module.basis:
            res = phi(P, Q)
            if res is None:
                row.append(Poly())
                continue
            l, f, sg1, sg2 = res
            delta = layer.from_glue(f, sg1, sg2)
            coeff = murphy.struct_const(label.glabel, s, t, delta)
            row.append(coeff * Poly.x(l))
        entries.append(row)
    return ExactMatrix(entries)


def gram_bruteforce(label, algebra, k):
    """Oracle: entry (S, T) = cellular coordinate of C'_{S,T} in
    C'_{S,S} * C'_{T,T} (Gram congruence, no factorization)."""
    cb = cellular_basis(algebra, k)
    module = cell_module(label, algebra, k)
    entries = []
    for S in module.basis:
        row = []
        rec_ss = cb.records[cb.position(label, S, S)]
        for T in module.basis:
            rec_tt = cb.records[cb.position(label, T, T)]
            coords = cb.coords(rec_ss.element * rec_tt.element)
            row.append(coords[cb.position(label, S, T)])
        entries.append(row)
    return ExactMatrix(entries)


def radical_and_irreducible(label, algebra, k, scalar_field):
    """(dim Rad W, dim D) over the scalar field: dim D = Gram rank,
    dim Rad = dim W - rank."""
    if scalar_field.characteristic == 2:
        raise UnsupportedCharacteristic("2 must be invertible")
    g = gram(label, algebra, k)
    rank, _ = g.evaluate(scalar_field).rank_det_field(scalar_field.field)
    return (g.nrows - rank, rank)


def gram_rank_symbolic(label, algebra, k):
    """(rank, det) of the Gram matrix over the rational function field."""
    return gram(label, algebra, k).rank_det_symbolic()


def is_p_restricted(shape, p):
    """Every difference of consecutive parts (and the last part) < p."""
    parts = list(shape) + [0]
    return all(a - b < p for a, b in zip(parts, parts[1:]))


def _is_plain_shape(glabel):
    """Partition-algebra labels are plain shapes (tuples of ints); the
    other two algebras carry ((bipartition), partition) pairs."""
    return not glabel or isinstance(glabel[0], int)


def label_p_restricted(label, p):
    glabel = label.glabel
    if _is_plain_shape(glabel):
        return is_p_restricted(glabel, p)
    (l1, l2), mu = glabel
    return (is_p_restricted(l1, p) and is_p_restricted(l2, p)
            and is_p_restricted(mu, p))


def label_sort_key(label):
    glabel = label.glabel
    if _is_plain_shape(glabel):
        gkey = shape_sort_key(glabel)
    else:
        gkey = bishape_sort_key(glabel[0]) + shape_sort_key(glabel[1])
    return (label.r, label.s1 + label.s2, label.s1, gkey)


def irreducible_table(algebra, k, char=0, x_value=None):
    """Per-label table of cell-module and irreducible dimensions.

    char 0 with x_value None works symbolically over the rational function
    field; otherwise the Gram matrix is evaluated at the given x in QQ or
    the prime field.  Rows: label, dim W, dim D, whether the form is
    nonzero (label in the semisimple-support set), and det (symbolic runs
    only).
    """
    cb = cellular_basis(algebra, k)
    rows = []
    for label in sorted(cb.labels(), key=label_sort_key):
        g = gram(label, algebra, k)
        nonzero = any(not e.is_zero() for row in g.entries for e in row)
        entry = {"label": label, "dim_W": g.nrows, "nonzero": nonzero}
        if char == 0 and x_value is None:
            rank, det = g.rank_det_symbolic()
            entry["dim_D"] = rank
            entry["det"] = det
        else:
            field = Rationals() if char == 0 else None
            if field is None:
                from .ring import PrimeField
                field = PrimeField(char)
            sf = ScalarField(field, x_value if x_value is not None else 1)
            rank, _ = g.evaluate(sf).rank_det_field(sf.field)
            entry["dim_D"] = rank
            if char != 0:
                entry["p_restricted"] = label_p_restricted(label, char)
        rows.append(entry)
    return rows
