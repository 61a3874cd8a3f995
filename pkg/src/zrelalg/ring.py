"""Exact coefficient arithmetic: rational polynomials in x, scalar fields, exact matrices.

Everything here is pure value arithmetic over ``fractions.Fraction`` -- no
floating point anywhere.  Polynomials are sparse maps degree -> coefficient.
Symbolic rank/determinant use fraction-free (Bareiss) elimination so entries
stay polynomial throughout.
"""

from __future__ import annotations

import json
from fractions import Fraction


class Poly:
    """Univariate polynomial over Q in the parameter x, normalized (no zero coeffs)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for deg, val in coeffs.items():
                val = Fraction(val)
                if val:
                    c[int(deg)] = val
        self.coeffs = c

    @staticmethod
    def const(value):
        return Poly({0: Fraction(value)})

    @staticmethod
    def x(power=1):
        return Poly({power: 1})

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def is_const(self):
        return self.degree <= 0

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.coeffs.get(0, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        c = dict(self.coeffs)
        for d, v in other.coeffs.items():
            c[d] = c.get(d, Fraction(0)) + v
        return Poly(c)

    __radd__ = __add__

    def __neg__(self):
        return Poly({d: -v for d, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        c = {}
        for d1, v1 in self.coeffs.items():
            for d2, v2 in other.coeffs.items():
                d = d1 + d2
                c[d] = c.get(d, Fraction(0)) + v1 * v2
        return Poly(c)

    __rmul__ = __mul__

    def divmod(self, other):
        """Polynomial long division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self.coeffs)
        quo = {}
        dother = other.degree
        lead = other.coeffs[dother]
        while rem:
            drem = max(rem)
            if drem < dother:
                break
            factor = rem[drem] / lead
            quo[drem - dother] = factor
            for d, v in other.coeffs.items():
                dd = d + drem - dother
                nv = rem.get(dd, Fraction(0)) - factor * v
                if nv:
                    rem[dd] = nv
                elif dd in rem:
                    del rem[dd]
        return Poly(quo), Poly(rem)

    def exact_div(self, other):
        """Division known to be exact (used by Bareiss elimination)."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, value):
        """Evaluate at a rational (or field-element) point via Horner on sparse terms."""
        total = value * 0
        for d, v in self.coeffs.items():
            total = total + v * value**d
        return total

    def to_json(self):
        return {"coeffs": {str(d): str(v) for d, v in sorted(self.coeffs.items())}}

    @staticmethod
    def from_json(obj):
        return Poly({int(d): Fraction(v) for d, v in obj["coeffs"].items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs, reverse=True):
            v = self.coeffs[d]
            if d == 0:
                term = str(v)
            else:
                xs = "x" if d == 1 else "x^%d" % d
                if v == 1:
                    term = xs
                elif v == -1:
                    term = "-" + xs
                else:
                    term = "%s*%s" % (v, xs)
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    __repr__ = __str__

    @staticmethod
    def parse(text):
        """Inverse of __str__ (also accepts plain rationals)."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial string")
        text = text.replace("-", "+-")
        coeffs = {}
        for term in text.split("+"):
            if not term:
                continue
            if "x" in term:
                coef, _, pow_part = term.partition("x")
                if coef in ("", "-"):
                    coef += "1"
                coef = coef.rstrip("*")
                deg = int(pow_part[1:]) if pow_part.startswith("^") else 1
            else:
                coef, deg = term, 0
            coeffs[deg] = coeffs.get(deg, Fraction(0)) + Fraction(coef)
        return Poly(coeffs)


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


class Rationals:
    """The field Q."""

    p = 0

    def __call__(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return 1 / Fraction(a)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field F_p for an odd prime p; elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError("p must be an odd prime, got %r" % p)
        self.p = p

    def __call__(self, value):
        value = Fraction(value)
        num = value.numerator % self.p
        den = value.denominator % self.p
        if den == 0:
            raise ZeroDivisionError("denominator divisible by %d" % self.p)
        return num * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError
        return pow(a, -1, self.p)

    def zero(self):
        return 0

    def one(self):
        return 1

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


class ScalarField:
    """A coefficient field together with an evaluation point for x."""

    def __init__(self, field, x_value):
        self.field = field
        self.x_value = field(x_value)

    @staticmethod
    def rationals(x_value):
        return ScalarField(QQ, Fraction(x_value))

    @staticmethod
    def prime(p, x_value):
        return ScalarField(PrimeField(p), x_value)

    @property
    def characteristic(self):
        return self.field.p

    def eval_poly(self, poly):
        f = self.field
        total = f.zero()
        for d, v in poly.coeffs.items():
            total = f.add(total, f.mul(f(v), pow_field(f, self.x_value, d)))
        return total

    def __repr__(self):
        return "%r[x=%s]" % (self.field, self.x_value)


def pow_field(field, base, exponent):
    out = field.one()
    for _ in range(exponent):
        out = field.mul(out, base)
    return out


def evaluate(poly, scalar_field):
    """Specialize x; a ring homomorphism Q[x] -> field."""
    return scalar_field.eval_poly(poly)


class ExactMatrix:
    """Dense rectangular matrix with Poly or field-scalar entries."""

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")

    @staticmethod
    def zero(nrows, ncols, zero=None):
        z = ZERO if zero is None else zero
        return ExactMatrix([[z for _ in range(ncols)] for _ in range(nrows)])

    @staticmethod
    def identity(n):
        return ExactMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def transpose(self):
        return ExactMatrix([[self.entries[i][j] for i in range(self.nrows)]
                            for j in range(self.ncols)])

    def map(self, fn):
        return ExactMatrix([[fn(e) for e in row] for row in self.entries])

    def evaluate(self, scalar_field):
        return self.map(scalar_field.eval_poly)

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = None
                for l in range(self.ncols):
                    term = self.entries[i][l] * other.entries[l][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def rank_det_symbolic(self):
        """Fraction-free Bareiss elimination on Poly entries.

        Returns (rank over Q(x), determinant as Poly when square else None).
        """
        m = [[e if isinstance(e, Poly) else Poly.const(e) for e in row]
             for row in self.entries]
        n, nc = self.nrows, self.ncols
        prev = ONE
        rank = 0
        sign = 1
        row = 0
        for col in range(nc):
            if row >= n:
                break
            pivot = None
            for r in range(row, n):
                if not m[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                continue
            if pivot != row:
                m[row], m[pivot] = m[pivot], m[row]
                sign = -sign
            for r in range(row + 1, n):
                for c in range(col + 1, nc):
                    num = m[row][col] * m[r][c] - m[r][col] * m[row][c]
                    m[r][c] = num.exact_div(prev)
                m[r][col] = ZERO
            prev = m[row][col]
            rank += 1
            row += 1
        det = None
        if n == nc:
            if rank < n:
                det = ZERO
            else:
                det = m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]
        return rank, det

    def rank_det_field(self, field):
        """Gaussian elimination over an explicit field; entries must be field scalars."""
        m = [list(row) for row in self.entries]
        n, nc = self.nrows, self.ncols
        rank = 0
        det = field.one()
        row = 0
        for col in range(nc):
            if row >= n:
                break
            pivot = None
            for r in range(row, n):
                if m[r][col] != field.zero():
                    pivot = r
                    break
            if pivot is None:
                continue
            if pivot != row:
                m[row], m[pivot] = m[pivot], m[row]
                det = field.sub(field.zero(), det)
            pv = m[row][col]
            det = field.mul(det, pv)
            pinv = field.inv(pv)
            for r in range(row + 1, n):
                if m[r][col] == field.zero():
                    continue
                factor = field.mul(m[r][col], pinv)
                for c in range(col, nc):
                    m[r][c] = field.sub(m[r][c], field.mul(factor, m[row][c]))
            rank += 1
            row += 1
        if n != nc:
            det = None
        elif rank < n:
            det = field.zero()
        return rank, det

    def nullspace_field(self, field):
        """Basis of the right kernel over a field, as lists of field scalars."""
        m = [list(row) for row in self.entries]
        n, nc = self.nrows, self.ncols
        pivots = []
        row = 0
        for col in range(nc):
            if row >= n:
                break
            pivot = None
            for r in range(row, n):
                if m[r][col] != field.zero():
                    pivot = r
                    break
            if pivot is None:
                continue
            m[row], m[pivot] = m[pivot], m[row]
            pinv = field.inv(m[row][col])
            m[row] = [field.mul(pinv, e) for e in m[row]]
            for r in range(n):
                if r != row and m[r][col] != field.zero():
                    factor = m[r][col]
                    m[r] = [field.sub(a, field.mul(factor, b))
                            for a, b in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for fc in free:
            vec = [field.zero()] * nc
            vec[fc] = field.one()
            for prow, pcol in enumerate(pivots):
                vec[pcol] = field.sub(field.zero(), m[prow][fc])
            basis.append(vec)
        return basis

    def solve_field(self, rhs, field):
        """Solve self @ x = rhs for a square invertible matrix over a field."""
        n = self.nrows
        if n != self.ncols or len(rhs) != n:
            raise ValueError("need a square system")
        m = [list(row) + [rhs[i]] for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if m[r][col] != field.zero():
                    pivot = r
                    break
            if pivot is None:
                raise ArithmeticError("singular system")
            m[col], m[pivot] = m[pivot], m[col]
            pinv = field.inv(m[col][col])
            m[col] = [field.mul(pinv, e) for e in m[col]]
            for r in range(n):
                if r != col and m[r][col] != field.zero():
                    factor = m[r][col]
                    m[r] = [field.sub(a, field.mul(factor, b))
                            for a, b in zip(m[r], m[col])]
        return [m[i][n] for i in range(n)]

    def inverse_rational(self):
        """Inverse of a square matrix with Fraction entries."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        m = [[Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if m[r][col]:
                    pivot = r
                    break
            if pivot is None:
                raise ArithmeticError("singular matrix")
            m[col], m[pivot] = m[pivot], m[col]
            pv = m[col][col]
            m[col] = [e / pv for e in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    factor = m[r][col]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
        return ExactMatrix([row[n:] for row in m])

    def to_csv(self):
        lines = []
        for row in self.entries:
            lines.append(",".join('"%s"' % e for e in row))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % (self.nrows, self.ncols)


def rank_det(matrix, mode="symbolic", field=None):
    """Rank and determinant of an ExactMatrix.

    mode="symbolic": entries are Poly, rank over Q(x), det a Poly.
    mode="field": entries already specialized; `field` supplies the arithmetic.
    """
    if mode == "symbolic":
        return matrix.rank_det_symbolic()
    if mode == "field":
        return matrix.rank_det_field(field)
    raise ValueError("unknown mode %r" % mode)


def poly_matrix_from_csv(text):
    rows = []
    for line in text.strip().splitlines():
        cells = next(iter(json.loads("[[%s]]" % line)))
        rows.append([Poly.parse(c) for c in cells])
    return ExactMatrix(rows)
