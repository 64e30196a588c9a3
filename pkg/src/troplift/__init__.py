"""Exact membership testing and witness lifting for tropical linear varieties.

Given a linear system A*x = b whose entries are ratios of Laurent
polynomials in a fractional power of t, and a target vector v of rational
valuations (infinity allowed), this package decides in polynomial time
whether some exact solution x has coordinatewise valuation v, and
constructs such a witness whenever the answer is yes.  A brute-force
circuit oracle, seeded instance generators, exact JSON formats and a CLI
round out the toolkit.
"""

from troplift.series import (
    INF,
    LaurentPolynomial,
    PuiseuxFraction,
    coefficient_at,
    regrid,
    scale_by_monomial,
    valuation,
)
from troplift.lift import (
    Instance,
    Member,
    NotMember,
    decide,
    matvec,
    permute_columns,
    regrid_instance,
    regrid_point,
    verify_witness,
)
from troplift.oracle import Circuit, TooLargeError, member_oracle
from troplift.gen import GenConfig, gen_member, gen_point, gen_random, perturb_point

__version__ = "0.1.0"

__all__ = [
    "INF",
    "LaurentPolynomial",
    "PuiseuxFraction",
    "Instance",
    "Member",
    "NotMember",
    "Circuit",
    "TooLargeError",
    "GenConfig",
    "decide",
    "verify_witness",
    "member_oracle",
    "matvec",
    "valuation",
    "coefficient_at",
    "scale_by_monomial",
    "regrid",
    "regrid_instance",
    "regrid_point",
    "permute_columns",
    "gen_random",
    "gen_member",
    "gen_point",
    "perturb_point",
    "__version__",
]
