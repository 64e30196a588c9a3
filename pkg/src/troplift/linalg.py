"""Exact linear algebra over an abstract field.

Used twice: over the series scalars for the main row reduction, and over
plain Fractions for the rational coefficient system.  Elements only need
the four arithmetic operators, truthiness as the nonzero test, and
equality; scalars that expose ``valuation``/``term_count`` get a pivot
rule tuned to keep downstream expansion orders small.

The elimination itself runs fraction-free (cross-multiplied updates with
exact division by the previous pivot) so that over polynomial-like
entries no per-operation gcd reduction is needed; correctness does not
depend on the divisions being exact, since every operation is ordinary
field arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from troplift.series import laurent_divexact, laurent_gcd

__all__ = [
    "Matrix",
    "RrefResult",
    "AffineSpace",
    "LinearForm",
    "rref_solve",
    "solve_affine",
    "kernel_basis",
    "vanishes_identically",
]


@dataclass(frozen=True)
class Matrix:
    """Dense rectangular matrix of field elements."""

    rows: tuple

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        return cls(rows)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Matrix.from_rows(zip(*self.rows)) if self.rows else Matrix(())


@dataclass(frozen=True)
class RrefResult:
    """Outcome of reduced row elimination on an augmented system.

    Pivot rows come first and carry 1 in their pivot column and 0 in every
    other pivot column; rows past `rank` are identically zero.  The
    solution set of (matrix, rhs) equals that of the input system.
    """

    matrix: Matrix
    rhs: tuple
    pivot_cols: tuple
    free_cols: tuple
    rank: int
    consistent: bool


@dataclass(frozen=True)
class AffineSpace:
    """offset + span(basis): the solution set of a rational linear system."""

    offset: tuple
    basis: tuple
    dim: int

    def point(self, weights):
        out = list(self.offset)
        for w, vec in zip(weights, self.basis):
            for i, v in enumerate(vec):
                out[i] += w * v
        return tuple(out)


@dataclass(frozen=True)
class LinearForm:
    """Affine-linear form constant + sum(coeffs[i] * y_i) over ambient R^N."""

    constant: Fraction
    coeffs: tuple  # sorted ((index, coefficient), ...) with no zeros

    @classmethod
    def make(cls, constant, coeffs):
        items = tuple(sorted((i, c) for i, c in coeffs.items() if c))
        return cls(Fraction(constant), items)

    @property
    def is_constant(self):
        return not self.coeffs

    @property
    def is_zero_form(self):
        return not self.coeffs and not self.constant

    def evaluate(self, values):
        acc = self.constant
        for i, c in self.coeffs:
            acc += c * values[i]
        return acc

    def gradient_dot(self, vector):
        acc = Fraction(0)
        for i, c in self.coeffs:
            acc += c * vector[i]
        return acc


def _pivot_key(x):
    # smallest |valuation| first to keep expansion orders near zero, then
    # sparsest entry to limit fill-in; plain Fractions compare equal here
    val = getattr(x, "valuation", None)
    v = val() if callable(val) else 0
    return (abs(v), getattr(x, "term_count", 1))


def _clear_denominators(row, rhs):
    """Scale a row of series scalars so every entry is polynomial."""
    dens = [x.den for x in row if not x.den.is_one]
    if not rhs.den.is_one:
        dens.append(rhs.den)
    if not dens:
        return row, rhs
    common = dens[0]
    for d in dens[1:]:
        common = laurent_divexact(common, laurent_gcd(common, d)) * d
    scale = type(rhs)(common)
    return [x * scale for x in row], rhs * scale


def rref_solve(matrix, rhs):
    """Reduce the augmented system (matrix | rhs) to pivot-normalized form.

    Inconsistency is reported through the `consistent` flag, never raised.
    """
    if isinstance(matrix, Matrix):
        rows = [list(r) for r in matrix.rows]
    else:
        rows = [list(r) for r in matrix]
    rhs = list(rhs)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if len(rhs) != m:
        raise ValueError("rhs length does not match row count")

    if n and hasattr(rows[0][0], "den"):
        for i in range(m):
            rows[i], rhs[i] = _clear_denominators(rows[i], rhs[i])

    pivot_cols = []
    prev = None
    for _ in range(min(m, n)):
        rank = len(pivot_cols)
        best = None
        for c in range(n):
            if c in pivot_cols:
                continue
            for r in range(rank, m):
                x = rows[r][c]
                if x:
                    key = _pivot_key(x) + (c, r)
                    if best is None or key < best[0]:
                        best = (key, r, c)
        if best is None:
            break
        _, r, c = best
        rows[rank], rows[r] = rows[r], rows[rank]
        rhs[rank], rhs[r] = rhs[r], rhs[rank]
        piv = rows[rank][c]
        if prev is None:
            prev = piv / piv  # the field's one
        prow, prhs = rows[rank], rhs[rank]
        for r in range(m):
            if r == rank:
                continue
            row = rows[r]
            f = row[c]
            if f:
                for j in range(n):
                    row[j] = (piv * row[j] - f * prow[j]) / prev
                rhs[r] = (piv * rhs[r] - f * prhs) / prev
            else:
                for j in range(n):
                    row[j] = (piv * row[j]) / prev
                rhs[r] = (piv * rhs[r]) / prev
        prev = piv
        pivot_cols.append(c)

    rank = len(pivot_cols)
    for i, c in enumerate(pivot_cols):
        piv = rows[i][c]
        rows[i] = [x / piv for x in rows[i]]
        rhs[i] = rhs[i] / piv
    consistent = all(not rhs[r] for r in range(rank, m))

    free_cols = tuple(c for c in range(n) if c not in pivot_cols)
    return RrefResult(
        matrix=Matrix.from_rows(rows),
        rhs=tuple(rhs),
        pivot_cols=tuple(pivot_cols),
        free_cols=free_cols,
        rank=rank,
        consistent=consistent,
    )


def solve_affine(matrix, rhs, ncols=None):
    """Solution set of a rational linear system as an AffineSpace, or None.

    Accepts a (possibly empty) list of coefficient rows; an empty
    constraint list leaves the whole space of dimension ``ncols``.
    """
    if isinstance(matrix, Matrix):
        rows = [list(r) for r in matrix.rows]
    else:
        rows = [list(r) for r in matrix]
    rhs = list(rhs)
    if not rows:
        if ncols is None:
            raise ValueError("empty system needs an explicit column count")
        return whole_space(ncols)
    n = len(rows[0])
    if ncols is not None and ncols != n:
        raise ValueError("declared column count does not match rows")
    if n == 0:
        if any(rhs):
            return None
        return AffineSpace(offset=(), basis=(), dim=0)
    red = rref_solve(rows, rhs)
    if not red.consistent:
        return None
    zero = Fraction(0)
    offset = [zero] * n
    for i, c in enumerate(red.pivot_cols):
        offset[c] = red.rhs[i]
    basis = []
    for f in red.free_cols:
        vec = [zero] * n
        vec[f] = Fraction(1)
        for i, c in enumerate(red.pivot_cols):
            vec[c] = -red.matrix[i][f]
        basis.append(tuple(vec))
    return AffineSpace(offset=tuple(offset), basis=tuple(basis),
                       dim=len(basis))


def whole_space(n):
    """The full rational affine space of dimension n."""
    zero = Fraction(0)
    offset = tuple([zero] * n)
    basis = []
    for f in range(n):
        vec = [zero] * n
        vec[f] = Fraction(1)
        basis.append(tuple(vec))
    return AffineSpace(offset=offset, basis=tuple(basis), dim=n)


def kernel_basis(matrix, one, ncols=None):
    """Basis of the right kernel of a matrix over an arbitrary field.

    ``one`` must be the field's multiplicative identity (needed to build
    unit vectors when the matrix imposes no constraint on a column).
    """
    rows = [list(r) for r in (matrix.rows if isinstance(matrix, Matrix) else matrix)]
    zero = one - one
    if not rows:
        if ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        basis = []
        for f in range(ncols):
            vec = [zero] * ncols
            vec[f] = one
            basis.append(tuple(vec))
        return basis
    n = len(rows[0])
    red = rref_solve(rows, [zero] * len(rows))
    basis = []
    for f in red.free_cols:
        vec = [zero] * n
        vec[f] = one
        for i, c in enumerate(red.pivot_cols):
            vec[c] = -red.matrix[i][f]
        basis.append(tuple(vec))
    return basis


def vanishes_identically(form, space):
    """True iff an affine-linear form is 0 at every point of the space."""
    if form.evaluate(space.offset):
        return False
    return all(not form.gradient_dot(vec) for vec in space.basis)
