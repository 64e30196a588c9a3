"""Deciding membership of a point in the valuation image of a linear system.

Given A*x = b over the series field and a target vector v of rational
valuations (INF allowed), `decide` answers whether some exact solution x
has coordinatewise valuation v, and produces such an x when the answer is
yes.  The pipeline:

1. delete columns with v_j = INF, pinning those coordinates to 0;
2. rescale exponents to an integer grid; a solution coordinate is a sum
   of series supported on single exponent residues mod 1, and an
   integer-exponent matrix maps each residue slice independently, so the
   system splits into one independent subsystem per residue of v (the
   integer residue keeps the right-hand side, the others must cancel to
   zero); every subsystem keeps all columns, requiring valuation exactly
   0 on its own congruence class after column scaling and a strict
   valuation lower bound on the rest;
3. per subsystem, row-reduce exactly and attach polynomial ansatz
   unknowns of bounded degree to the free columns;
4. the conditions "all strictly negative orders cancel" form a rational
   linear system in the ansatz coefficients, and "all order-zero
   residuals and leading ansatz coefficients that must be exact are
   nonzero" is a finite family of affine-linear forms that must be
   simultaneously nonzero on its solution space; a geometric-progression
   sweep over the solution space finds a point avoiding all their zero
   sets whenever one exists;
5. back-substitute to exact pivot coordinates, undo the scalings, sum
   the slices, and re-verify the witness before returning it.

Failures are certified with the stage that rejected the point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from troplift.linalg import (
    AffineSpace,
    LinearForm,
    Matrix,
    rref_solve,
    solve_affine,
    vanishes_identically,
)
from troplift.series import INF, PuiseuxFraction

__all__ = [
    "Instance",
    "Member",
    "NotMember",
    "decide",
    "verify_witness",
    "strip_infinite",
    "normalize_and_partition",
    "attach_unknowns",
    "build_forms",
    "solve_and_sweep",
    "reconstruct_witness",
    "regrid_instance",
    "permute_columns",
    "regrid_point",
    "matvec",
    "STAGE_INFEASIBLE",
    "STAGE_EMPTY_CLASS",
    "STAGE_SYSTEM3",
    "STAGE_FAMILY_L",
]

STAGE_INFEASIBLE = "InfeasibleOverK"
STAGE_EMPTY_CLASS = "EmptyClassWithRhs"
STAGE_SYSTEM3 = "System3Infeasible"
STAGE_FAMILY_L = "FamilyLVanishes"


class LiftInternalError(RuntimeError):
    """An invariant the algorithm guarantees was violated; always a defect."""


def _as_scalar(x):
    if isinstance(x, PuiseuxFraction):
        return x
    return PuiseuxFraction(x)


def as_point(coords):
    """Coerce a sequence of rationals / INF into a point tuple."""
    out = []
    for c in coords:
        if c == INF:
            out.append(INF)
        else:
            out.append(Fraction(c))
    return tuple(out)


@dataclass(frozen=True)
class Instance:
    """The pair (A, b): an m x n matrix and length-m vector of exact scalars."""

    matrix: tuple
    rhs: tuple

    @classmethod
    def from_rows(cls, rows, rhs):
        rows = tuple(tuple(_as_scalar(x) for x in r) for r in rows)
        rhs = tuple(_as_scalar(x) for x in rhs)
        if not rows:
            raise ValueError("instance needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        if len(rhs) != len(rows):
            raise ValueError("rhs length does not match row count")
        return cls(rows, rhs)

    @property
    def m(self):
        return len(self.matrix)

    @property
    def n(self):
        return len(self.matrix[0]) if self.matrix else 0

    def grid_den(self):
        q = 1
        for row in self.matrix:
            for x in row:
                q = math.lcm(q, x.num.q, x.den.q)
        for x in self.rhs:
            q = math.lcm(q, x.num.q, x.den.q)
        return q


def matvec(inst, x):
    """Exact A*x for a vector of scalars."""
    out = []
    for row in inst.matrix:
        acc = PuiseuxFraction.zero()
        for a, xi in zip(row, x):
            if a and xi:
                acc = acc + a * xi
        out.append(acc)
    return tuple(out)


def regrid_instance(inst, n):
    """Substitute t -> t**n in every entry."""
    return Instance(
        tuple(tuple(x.substitute_power(n) for x in row) for row in inst.matrix),
        tuple(x.substitute_power(n) for x in inst.rhs),
    )


def regrid_point(v, n):
    return tuple(INF if c == INF else Fraction(c) * n for c in v)


def permute_columns(inst, perm):
    """Reorder columns so new column j is old column perm[j]."""
    return Instance(
        tuple(tuple(row[p] for p in perm) for row in inst.matrix),
        inst.rhs,
    )


# -- results ------------------------------------------------------------------

@dataclass(frozen=True)
class SweepStats:
    """Bookkeeping from one nonzero-avoidance sweep."""

    chosen_p: int
    bound: int
    family_size: int
    dim: int


@dataclass(frozen=True)
class Member:
    """Positive certificate: an exact solution with the requested valuations."""

    witness: tuple
    sweeps: tuple = field(default=(), compare=False)

    @property
    def is_member(self):
        return True


@dataclass(frozen=True)
class NotMember:
    """Negative certificate, tagged with the stage that rejected the point."""

    stage: str
    detail: str = field(default="", compare=False)

    @property
    def is_member(self):
        return False


# -- stage 1: infinite coordinates -------------------------------------------

@dataclass(frozen=True)
class StripResult:
    instance: Instance
    point: tuple
    kept: tuple
    fixed: dict  # deleted column -> pinned zero coordinate


def strip_infinite(inst, v):
    """Delete columns whose target valuation is INF, pinning them to x_j = 0."""
    v = as_point(v)
    if len(v) != inst.n:
        raise ValueError("point length %d does not match %d columns"
                         % (len(v), inst.n))
    kept = tuple(j for j, c in enumerate(v) if c != INF)
    if len(kept) == inst.n:
        return StripResult(inst, v, kept, {})
    fixed = {j: PuiseuxFraction.zero() for j, c in enumerate(v) if c == INF}
    matrix = tuple(tuple(row[j] for j in kept) for row in inst.matrix)
    point = tuple(v[j] for j in kept)
    return StripResult(Instance(matrix, inst.rhs), point, kept, fixed)


# -- stage 2: integer grid and congruence classes ----------------------------

@dataclass(frozen=True)
class Subsystem:
    """The residue-`residue` slice of the regridded system.

    A solution coordinate is a sum of series supported on single exponent
    residues mod 1, and an integer-exponent matrix maps each residue
    slice independently, so the system splits into one subsystem per
    residue (the integer residue keeps the right-hand side, all others
    must cancel to zero).  Every subsystem sees every column: the columns
    of its own congruence class (`exact[j]` true, pairwise disjoint
    across subsystems) carry the class's exact target valuation,
    normalized to 0 here, while foreign columns may contribute anything
    of valuation strictly above their own target, normalized to a
    valuation >= 0 requirement.

    `shifts[j]` is the total exponent shift: the witness coordinate of
    the regridded system gains t**shifts[j] times this subsystem's local
    coordinate j.
    """

    residue: Fraction
    matrix: Matrix
    rhs: tuple
    shifts: tuple
    exact: tuple

    @property
    def columns(self):
        return tuple(j for j, flag in enumerate(self.exact) if flag)


@dataclass(frozen=True)
class Partition:
    scale: int
    subsystems: tuple
    rhs_class_missing: bool


def normalize_and_partition(inst, v):
    """Regrid to integer exponents and slice the system by valuation residue.

    Returns the grid factor and one subsystem per residue appearing in
    the target point (plus the integer residue whenever the right-hand
    side is nonzero, since that is the only slice that can absorb it).
    The degenerate no-columns case cannot absorb a nonzero right-hand
    side at all, which the flag reports.
    """
    v = as_point(v)
    if any(c == INF for c in v):
        raise ValueError("partition requires a finite point")
    s = inst.grid_den()
    scaled = regrid_instance(inst, s) if s > 1 else inst
    vs = [c * s for c in v]

    residues = {c - math.floor(c) for c in vs}
    rhs_nonzero = any(x for x in scaled.rhs)
    if rhs_nonzero:
        residues.add(Fraction(0))
    rhs_class_missing = rhs_nonzero and not vs

    zero = PuiseuxFraction.zero()
    subsystems = []
    for residue in sorted(residues):
        shifts = []
        exact = []
        for c in vs:
            delta = c - residue
            if delta.denominator == 1:
                shifts.append(delta)
                exact.append(True)
            else:
                shifts.append(Fraction(math.floor(delta) + 1))
                exact.append(False)
        matrix = Matrix.from_rows(
            [[scaled.matrix[i][j].shift(shifts[j]) for j in range(len(vs))]
             for i in range(scaled.m)])
        rhs = scaled.rhs if residue == 0 else tuple([zero] * scaled.m)
        subsystems.append(Subsystem(residue=residue, matrix=matrix, rhs=rhs,
                                    shifts=tuple(r + residue for r in shifts),
                                    exact=tuple(exact)))
    return Partition(scale=s, subsystems=tuple(subsystems),
                     rhs_class_missing=rhs_class_missing)


# -- stage 3: ansatz unknowns -------------------------------------------------

@dataclass(frozen=True)
class FreeColumn:
    """A non-pivot column and its ansatz.

    degree is None when every reduced entry of the column has valuation
    > 0: the coordinate is then invisible to all orders <= 0 and is
    pinned to the constant 1 when its valuation must be exactly 0, or
    dropped to 0 when any valuation >= 0 would do.  Otherwise the
    coordinate is a polynomial with unknowns y_(col,0) .. y_(col,degree);
    only exact columns must keep y_(col,0) nonzero.
    """

    column: int
    degree: int | None
    exact: bool


@dataclass(frozen=True)
class UnknownLayout:
    free: tuple              # FreeColumn per non-pivot column, in column order
    variables: tuple         # ordered (column, order) unknown ids
    var_index: dict
    low_orders: tuple        # per pivot row: lowest order that can be nonzero


def _int_val(x):
    val = x.valuation()
    if val == INF:
        return INF
    if val.denominator != 1:
        raise LiftInternalError("subsystem left the integer grid")
    return int(val)


def attach_unknowns(sub, red):
    """Fix the ansatz degree of every free column and each row's low order."""
    free = []
    variables = []
    for f in red.free_cols:
        vals = [_int_val(red.matrix[i][f]) for i in range(red.rank)]
        vals = [w for w in vals if w != INF]
        low = min(vals) if vals else None
        degree = -low if (low is not None and low <= 0) else None
        free.append(FreeColumn(column=f, degree=degree, exact=sub.exact[f]))
        if degree is not None:
            variables.extend((f, l) for l in range(degree + 1))
    low_orders = []
    for i in range(red.rank):
        lows = [_int_val(red.matrix[i][f]) for f in red.free_cols]
        lows.append(_int_val(red.rhs[i]))
        lows = [w for w in lows if w != INF]
        low_orders.append(min(lows) if lows else INF)
    var_index = {var: k for k, var in enumerate(variables)}
    return UnknownLayout(free=tuple(free), variables=tuple(variables),
                         var_index=var_index, low_orders=tuple(low_orders))


# -- stage 4: coefficient forms -----------------------------------------------

def build_forms(sub, red, layout):
    """Order-by-order coefficient forms of each reduced equation's residual.

    For pivot row i the residual is sum_j a_ij * x_j - b_i over the free
    columns, which equals -x_i.  Orders k < 0 must vanish for every row
    (pivot coordinates may never dip below valuation 0).  The order-0
    coefficient must additionally be nonzero when the pivot column's
    valuation has to be exactly 0, and the same goes for the leading
    ansatz coefficient of every exact free column.  Returns
    (must_vanish, must_not_vanish); the second list pairs each form with
    a printable label.
    """
    must_vanish = []
    must_not = []
    for i in range(red.rank):
        low = layout.low_orders[i]
        expansions = []
        for fc in layout.free:
            entry = red.matrix[i][fc.column]
            expansions.append((fc, entry.series_coefficients(0) if entry else {}))
        rhs_exp = red.rhs[i].series_coefficients(0) if red.rhs[i] else {}
        pivot_exact = sub.exact[red.pivot_cols[i]]
        orders = [] if low == INF else list(range(low, 0))
        if pivot_exact:
            orders.append(0)
        for k in orders:
            coeffs = {}
            constant = Fraction(0)
            for fc, exp in expansions:
                if fc.degree is None:
                    if fc.exact:
                        constant += exp.get(Fraction(k), Fraction(0))
                else:
                    for l in range(fc.degree + 1):
                        c = exp.get(Fraction(k - l), Fraction(0))
                        if c:
                            idx = layout.var_index[(fc.column, l)]
                            coeffs[idx] = coeffs.get(idx, Fraction(0)) + c
            constant -= rhs_exp.get(Fraction(k), Fraction(0))
            form = LinearForm.make(constant, coeffs)
            if k < 0:
                must_vanish.append(form)
            else:
                must_not.append(("L[%d,0]" % i, form))
    for fc in layout.free:
        if fc.degree is not None and fc.exact:
            idx = layout.var_index[(fc.column, 0)]
            must_not.append(("y[%d,0]" % fc.column,
                             LinearForm.make(0, {idx: Fraction(1)})))
    return must_vanish, must_not


# -- stage 5: solve and sweep ---------------------------------------------------

@dataclass(frozen=True)
class SweepOutcome:
    values: tuple
    stats: SweepStats


def solve_and_sweep(must_vanish, must_not, layout):
    """Solve the vanishing constraints and pick values avoiding all zero sets.

    Returns a SweepOutcome, or a NotMember when the constraint system is
    infeasible or some required-nonzero form vanishes identically on its
    solution space.  Every form that does not vanish identically is zero
    on at most `dim` of the geometric candidates, so scanning
    len(must_not)*dim + 1 of them is guaranteed to succeed.
    """
    n = len(layout.variables)
    rows = []
    rhs = []
    for form in must_vanish:
        row = [Fraction(0)] * n
        for i, c in form.coeffs:
            row[i] = c
        rows.append(row)
        rhs.append(-form.constant)
    if n == 0:
        if any(rhs):
            return NotMember(STAGE_SYSTEM3, "contradictory constant constraint")
        space = AffineSpace(offset=(), basis=(), dim=0)
    else:
        space = solve_affine(rows, rhs, ncols=n)
        if space is None:
            return NotMember(STAGE_SYSTEM3,
                             "coefficient constraints are unsatisfiable")
    for label, form in must_not:
        if vanishes_identically(form, space):
            return NotMember(STAGE_FAMILY_L,
                             "%s vanishes on the constraint solutions" % label)
    bound = len(must_not) * space.dim + 1
    for p in range(1, bound + 1):
        weights = [Fraction(p) ** l for l in range(1, space.dim + 1)]
        candidate = space.point(weights)
        if all(form.evaluate(candidate) for _, form in must_not):
            stats = SweepStats(chosen_p=p, bound=bound,
                               family_size=len(must_not), dim=space.dim)
            return SweepOutcome(values=candidate, stats=stats)
    raise LiftInternalError("sweep exhausted %d candidates" % bound)


# -- stage 6: witness assembly --------------------------------------------------

def reconstruct_witness(sub, red, layout, values):
    """Assemble the subsystem's coordinate contributions from swept values.

    Returns {column: contribution} in the regridded frame (shifts undone);
    the full witness coordinate is the sum of contributions over all
    subsystems.
    """
    locals_ = {}
    for fc in layout.free:
        if fc.degree is None:
            locals_[fc.column] = (PuiseuxFraction.one() if fc.exact
                                  else PuiseuxFraction.zero())
        else:
            terms = {l: values[layout.var_index[(fc.column, l)]]
                     for l in range(fc.degree + 1)}
            locals_[fc.column] = PuiseuxFraction.from_terms(terms)
    for i in range(red.rank):
        acc = red.rhs[i]
        for fc in layout.free:
            entry = red.matrix[i][fc.column]
            if entry and locals_[fc.column]:
                acc = acc - entry * locals_[fc.column]
        locals_[red.pivot_cols[i]] = acc
    return {col: locals_[col].shift(sub.shifts[col])
            for col in range(len(sub.shifts))}


# -- the decision procedure ------------------------------------------------------

def decide(inst, v):
    """Decide membership of v and lift it to an exact witness when possible."""
    stripped = strip_infinite(inst, v)
    part = normalize_and_partition(stripped.instance, stripped.point)
    if part.rhs_class_missing:
        return NotMember(STAGE_EMPTY_CLASS,
                         "nonzero right-hand side but every unknown is "
                         "pinned to zero")
    stripped_n = stripped.instance.n
    witness_scaled = [PuiseuxFraction.zero()] * stripped_n
    sweeps = []
    for sub in part.subsystems:
        red = rref_solve(sub.matrix, sub.rhs)
        if not red.consistent:
            return NotMember(
                STAGE_INFEASIBLE,
                "slice with residue %s has no solution at all" % sub.residue)
        layout = attach_unknowns(sub, red)
        must_vanish, must_not = build_forms(sub, red, layout)
        outcome = solve_and_sweep(must_vanish, must_not, layout)
        if isinstance(outcome, NotMember):
            return NotMember(outcome.stage,
                             "slice with residue %s: %s"
                             % (sub.residue, outcome.detail))
        sweeps.append(outcome.stats)
        contributions = reconstruct_witness(sub, red, layout, outcome.values)
        for col, value in contributions.items():
            if value:
                witness_scaled[col] = witness_scaled[col] + value

    down = Fraction(1, part.scale)
    witness = []
    pos = 0
    for j in range(inst.n):
        if j in stripped.fixed:
            witness.append(PuiseuxFraction.zero())
        else:
            coord = witness_scaled[pos]
            witness.append(coord.substitute_power(down)
                           if part.scale > 1 else coord)
            pos += 1
    witness = tuple(witness)
    if not verify_witness(inst, v, witness):
        raise LiftInternalError("constructed witness failed verification")
    return Member(witness=witness, sweeps=tuple(sweeps))


def verify_witness(inst, v, x):
    """Exact check: A*x = b and every coordinate has the requested valuation."""
    v = as_point(v)
    if len(v) != inst.n or len(x) != inst.n:
        return False
    x = tuple(_as_scalar(c) for c in x)
    for got, want in zip(matvec(inst, x), inst.rhs):
        if got != want:
            return False
    for xi, vi in zip(x, v):
        if xi.valuation() != vi:
            return False
    return True
