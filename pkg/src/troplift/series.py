"""Exact arithmetic in the field of rational functions of fractional powers of t.

Scalars are ratios of Laurent polynomials in t**(1/q) with rational
coefficients.  This field is closed under the four operations, carries an
exact valuation (the lowest exponent), and supports coefficient extraction
to any order, which is all the series machinery the lifting algorithm
needs while staying finitely representable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

INF = float("inf")

__all__ = [
    "INF",
    "LaurentPolynomial",
    "PuiseuxFraction",
    "valuation",
    "coefficient_at",
    "scale_by_monomial",
    "regrid",
    "laurent_gcd",
    "laurent_divexact",
    "laurent_lcm",
]


def _frac_gcd(a, b):
    """Positive gcd of two rationals: gcd of numerators over lcm of denominators."""
    return Fraction(math.gcd(a.numerator, b.numerator),
                    math.lcm(a.denominator, b.denominator))


def _int_content(values):
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


class LaurentPolynomial:
    """Laurent polynomial in t**(1/q) over the rationals.

    Internal form is a minimal grid denominator ``q``, a primitive table of
    integer coefficients keyed by grid exponent (the stored pair ``k: c``
    is the term ``content*c * t**(k/q)``), and a positive rational
    ``content`` factored out of all coefficients.  The table holds no
    zeros, so equal polynomials have identical representations and can be
    hashed and compared structurally.  Instances are immutable.
    """

    __slots__ = ("q", "coeffs", "content")

    def __init__(self, q, coeffs, content):
        # Trusted constructor: arguments must already be normalized.
        # Use from_terms / _normalized to build values safely.
        self.q = q
        self.coeffs = coeffs
        self.content = content

    @classmethod
    def _normalized(cls, q, raw, content):
        raw = {k: v for k, v in raw.items() if v}
        if not raw or not content:
            return cls(1, {}, Fraction(0))
        if content < 0:
            content = -content
            raw = {k: -v for k, v in raw.items()}
        g = _int_content(raw.values())
        if g > 1:
            content = content * g
            raw = {k: v // g for k, v in raw.items()}
        d = reduce(math.gcd, raw.keys(), q)
        if d > 1:
            q //= d
            raw = {k // d: v for k, v in raw.items()}
        return cls(q, raw, content)

    @classmethod
    def from_terms(cls, terms):
        """Build from a mapping {exponent: coefficient} of rationals."""
        clean = {}
        q = 1
        for e, c in terms.items():
            e = Fraction(e)
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                q = math.lcm(q, e.denominator)
        clean = {e: c for e, c in clean.items() if c}
        if not clean:
            return cls.zero()
        content = reduce(_frac_gcd, clean.values())
        raw = {}
        for e, c in clean.items():
            m = c / content
            raw[int(e * q)] = m.numerator
        return cls._normalized(q, raw, content)

    @classmethod
    def zero(cls):
        return cls(1, {}, Fraction(0))

    @classmethod
    def one(cls):
        return cls(1, {0: 1}, Fraction(1))

    @classmethod
    def constant(cls, c):
        return cls.from_terms({0: Fraction(c)})

    @classmethod
    def t_power(cls, e):
        return cls.from_terms({Fraction(e): 1})

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_one(self):
        return self.q == 1 and self.coeffs == {0: 1} and self.content == 1

    @property
    def is_monomial(self):
        return len(self.coeffs) == 1

    def valuation(self):
        """Lowest exponent as a Fraction; INF for the zero polynomial."""
        if not self.coeffs:
            return INF
        return Fraction(min(self.coeffs), self.q)

    def degree(self):
        if not self.coeffs:
            return -INF
        return Fraction(max(self.coeffs), self.q)

    def terms(self):
        """Sorted list of (exponent, coefficient) pairs with Fraction values."""
        return [(Fraction(k, self.q), self.content * c)
                for k, c in sorted(self.coeffs.items())]

    def coefficient(self, e):
        e = Fraction(e)
        k = e * self.q
        if k.denominator != 1:
            return Fraction(0)
        return self.content * self.coeffs.get(int(k), 0)

    def lowest_coefficient(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no lowest coefficient")
        return self.content * self.coeffs[min(self.coeffs)]

    def _on_grid(self, q):
        f = q // self.q
        if f == 1:
            return self.coeffs
        return {k * f: v for k, v in self.coeffs.items()}

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        q = math.lcm(self.q, other.q)
        g = _frac_gcd(self.content, other.content)
        m1 = (self.content / g).numerator
        m2 = (other.content / g).numerator
        out = {k: v * m1 for k, v in self._on_grid(q).items()}
        for k, v in other._on_grid(q).items():
            out[k] = out.get(k, 0) + v * m2
        return LaurentPolynomial._normalized(q, out, g)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return LaurentPolynomial(self.q, {k: -v for k, v in self.coeffs.items()},
                                 self.content)

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPolynomial.zero()
        q = math.lcm(self.q, other.q)
        a = self._on_grid(q)
        b = other._on_grid(q)
        la, lb = len(a), len(b)
        if la > lb:
            a, b = b, a
            la, lb = lb, la
        spread_a = max(a) - min(a) + 1
        spread_b = max(b) - min(b) + 1
        if spread_b <= 3 * lb:
            # dense path: list convolution, iterating the sparser factor
            lo_a, lo_b = min(a), min(b)
            vb = [0] * spread_b
            for k, v in b.items():
                vb[k - lo_b] = v
            conv = [0] * (spread_a + spread_b - 1)
            for ka, ca in a.items():
                base = ka - lo_a
                for j, cb in enumerate(vb):
                    if cb:
                        conv[base + j] += ca * cb
            lo = lo_a + lo_b
            out = {lo + i: c for i, c in enumerate(conv) if c}
        else:
            out = {}
            get = out.get
            for ka, ca in a.items():
                for kb, cb in b.items():
                    k = ka + kb
                    out[k] = get(k, 0) + ca * cb
                get = out.get
        return LaurentPolynomial._normalized(q, out, self.content * other.content)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by a rational scalar."""
        c = Fraction(c)
        if not c or self.is_zero:
            return LaurentPolynomial.zero()
        return LaurentPolynomial._normalized(self.q, dict(self.coeffs),
                                             self.content * c)

    def shift(self, e):
        """Multiply by the monomial t**e."""
        e = Fraction(e)
        if self.is_zero or not e:
            return self
        q = math.lcm(self.q, e.denominator)
        ke = int(e * q)
        out = {k + ke: v for k, v in self._on_grid(q).items()}
        return LaurentPolynomial._normalized(q, out, self.content)

    def substitute_power(self, n):
        """Substitute t -> t**n (n a positive rational), scaling every exponent by n."""
        n = Fraction(n)
        if n <= 0:
            raise ValueError("substitution power must be positive")
        if self.is_zero or n == 1:
            return self
        q = self.q * n.denominator
        out = {k * n.numerator: v for k, v in self.coeffs.items()}
        return LaurentPolynomial._normalized(q, out, self.content)

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.q == other.q and self.content == other.content
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.q, self.content, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.terms():
            frag = _fmt_term(e, abs(c))
            if not parts:
                parts.append(frag if c > 0 else "-" + frag)
            else:
                parts.append(("+ " if c > 0 else "- ") + frag)
        return " ".join(parts)


def _as_laurent(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPolynomial.constant(x)
    return NotImplemented


def _fmt_term(e, c):
    if e == 0:
        return str(c)
    t = "t" if e == 1 else ("t^%s" % e if e.denominator == 1 and e >= 0
                            else "t^(%s)" % e)
    if c == 1:
        return t
    return "%s*%s" % (c, t)


# -- integer polynomial helpers (descending dense coefficient lists) --------

def _dense_descending(coeffs):
    """Dense descending integer coefficient list of a grid-keyed term table."""
    lo = min(coeffs)
    hi = max(coeffs)
    out = [0] * (hi - lo + 1)
    for k, v in coeffs.items():
        out[hi - k] = v
    return out


def _trim(p):
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _primitive(p):
    g = _int_content(p)
    if g == 0:
        return []
    if p[0] < 0:
        g = -g
    if g != 1:
        p = [c // g for c in p]
    return p


_GCD_PRIME = (1 << 31) - 1


def _modp_gcd_degree(a, b, p=_GCD_PRIME):
    """Degree of gcd(a, b) mod p, or None when p is unusable for a bound.

    As long as p keeps at least one leading coefficient alive, the true
    gcd's degree is at most this value, so a result of 0 certifies
    coprimality over the rationals.
    """
    if a[0] % p == 0 and b[0] % p == 0:
        return None

    def strip(x):
        i = 0
        while i < len(x) and x[i] == 0:
            i += 1
        return x[i:]

    big = strip([c % p for c in a])
    small = strip([c % p for c in b])
    if not big or not small:
        return None
    if len(big) < len(small):
        big, small = small, big
    while small:
        inv = pow(small[0], p - 2, p)
        r = big
        ns = len(small)
        while len(r) >= ns:
            f = r[0] * inv % p
            if f:
                r = [(r[i] - f * small[i]) % p
                     for i in range(1, ns)] + r[ns:]
            else:
                r = r[1:]
            r = strip(r)
        big, small = small, r
    return len(big) - 1


def _pseudo_rem_controlled(u, v):
    """Pseudo-remainder of u by v with per-step content stripping.

    Uses reduced multipliers lc(v)/g and lead/g at every cancellation so
    coefficients do not stack powers of lc(v); the result equals the
    classical pseudo-remainder up to a rational unit, which is all a
    primitive remainder sequence needs.
    """
    dv = len(v) - 1
    lv = v[0]
    r = list(u)
    while len(r) - 1 >= dv:
        lead = r[0]
        if lead == 0:
            r.pop(0)
            continue
        g = math.gcd(lead, lv)
        mult = lv // g
        fl = lead // g
        if mult == 1:
            r = r[1:]
            for j in range(1, dv + 1):
                r[j - 1] -= fl * v[j]
        else:
            r = [mult * c for c in r[1:]]
            for j in range(1, dv + 1):
                r[j - 1] -= fl * v[j]
            c = _int_content(r)
            if c > 1:
                r = [x // c for x in r]
    return r


def _int_poly_gcd(a, b):
    """Primitive gcd of two nonzero descending integer coefficient lists."""
    a = _primitive(_trim(a))
    b = _primitive(_trim(b))
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    if len(b) == 1:
        return [1]
    if _modp_gcd_degree(a, b) == 0:
        return [1]
    while b:
        if len(b) == 1:
            return [1]
        r = _pseudo_rem_controlled(a, b)
        a, b = b, _primitive(_trim(r))
    return a


def _divexact_ascending(p, d):
    """Exact quotient of ascending integer lists with d[0] != 0; raises if inexact."""
    n = len(p) - len(d) + 1
    if n <= 0:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * n
    r = list(p)
    d0 = d[0]
    for i in range(n):
        c = r[i]
        if c:
            qi, rem = divmod(c, d0)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[i] = qi
            for j, dj in enumerate(d):
                r[i + j] -= qi * dj
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q


def laurent_gcd(a, b):
    """Monic-content gcd of two nonzero Laurent polynomials.

    The result is primitive with valuation 0 (units, i.e. monomials, are
    divided out), so a trivial gcd comes back as the constant 1.
    """
    if a.is_zero or b.is_zero:
        raise ValueError("gcd of zero polynomial")
    q = math.lcm(a.q, b.q)
    g = _int_poly_gcd(_dense_descending(a._on_grid(q)),
                      _dense_descending(b._on_grid(q)))
    g = g[::-1]  # ascending, g[0] != 0 after primitive trim
    return LaurentPolynomial._normalized(q, {i: c for i, c in enumerate(g)},
                                         Fraction(1))


def _modp_divisible(a, b, p=_GCD_PRIME):
    """False only when b cannot divide a over the rationals (sound filter)."""

    def strip(x):
        i = 0
        while i < len(x) and x[i] == 0:
            i += 1
        return x[i:]

    big = strip([c % p for c in a])
    small = strip([c % p for c in b])
    if not small:
        return True  # inconclusive; caller falls back to the exact attempt
    if len(big) < len(small):
        return not big
    inv = pow(small[0], p - 2, p)
    ns = len(small)
    r = big
    while len(r) >= ns:
        f = r[0] * inv % p
        if f:
            r = [(r[i] - f * small[i]) % p for i in range(1, ns)] + r[ns:]
        else:
            r = r[1:]
        r = strip(r)
    return not r


def try_divexact(a, g):
    """Exact Laurent quotient a/g, or None when g does not divide a."""
    if a.is_zero:
        return LaurentPolynomial.zero()
    q = math.lcm(a.q, g.q)
    ca = a._on_grid(q)
    cg = g._on_grid(q)
    if len(ca) < len(cg) or (max(ca) - min(ca)) < (max(cg) - min(cg)):
        return None
    if not _modp_divisible(_dense_descending(ca), _dense_descending(cg)):
        return None
    try:
        return laurent_divexact(a, g)
    except ArithmeticError:
        return None


def laurent_divexact(a, g):
    """Exact quotient a/g of Laurent polynomials (g must divide a)."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return LaurentPolynomial.zero()
    q = math.lcm(a.q, g.q)
    ca = a._on_grid(q)
    cg = g._on_grid(q)
    lo_a, lo_g = min(ca), min(cg)
    pa = [0] * (max(ca) - lo_a + 1)
    for k, v in ca.items():
        pa[k - lo_a] = v
    pg = [0] * (max(cg) - lo_g + 1)
    for k, v in cg.items():
        pg[k - lo_g] = v
    quot = _divexact_ascending(pa, pg)
    off = lo_a - lo_g
    return LaurentPolynomial._normalized(
        q, {off + i: c for i, c in enumerate(quot)}, a.content / g.content)


def laurent_lcm(a, b):
    """Least common multiple up to units."""
    g = laurent_gcd(a, b)
    return laurent_divexact(a, g) * b


def _unit_normalized(num, den):
    """Divide out the denominator's unit part: val(den)=0, lowest coeff 1."""
    if den.is_one:
        return num, den
    if den.is_monomial:
        return (num.shift(-den.valuation()).scale(1 / den.lowest_coefficient()),
                LaurentPolynomial.one())
    s = den.valuation()
    if s:
        num = num.shift(-s)
        den = den.shift(-s)
    c = den.lowest_coefficient()
    if c != 1:
        num = num.scale(1 / c)
        den = den.scale(1 / c)
    return num, den


def _cofactor_gcd(a, b):
    """gcd g plus the cofactors a/g, b/g, skipping work on trivial shapes."""
    if a.is_monomial or b.is_monomial:
        return None, a, b
    g = laurent_gcd(a, b)
    if len(g.coeffs) == 1:
        return None, a, b
    return g, laurent_divexact(a, g), laurent_divexact(b, g)


class PuiseuxFraction:
    """Exact scalar: a ratio of Laurent polynomials in t**(1/q).

    Canonical form: the denominator is nonzero with valuation 0, lowest
    coefficient 1, and coprime to the numerator; zero is 0/1.  Canonical
    form is unique, so equality and hashing are structural.  Instances
    are immutable and safe to share.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = LaurentPolynomial.one() if den is None else _coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("denominator is zero")
        if num.is_zero:
            self.num = LaurentPolynomial.zero()
            self.den = LaurentPolynomial.one()
            return
        if not den.is_one:
            if not den.is_monomial and not num.is_monomial:
                quot = try_divexact(num, den)
                if quot is not None:
                    num = quot
                    den = LaurentPolynomial.one()
                else:
                    g = laurent_gcd(num, den)
                    if len(g.coeffs) > 1:
                        num = laurent_divexact(num, g)
                        den = laurent_divexact(den, g)
            num, den = _unit_normalized(num, den)
        self.num = num
        self.den = den

    @classmethod
    def _exact(cls, num, den):
        """Trusted constructor for already-canonical num/den pairs."""
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def zero(cls):
        return cls._exact(LaurentPolynomial.zero(), LaurentPolynomial.one())

    @classmethod
    def one(cls):
        return cls._exact(LaurentPolynomial.one(), LaurentPolynomial.one())

    @classmethod
    def constant(cls, c):
        return cls(LaurentPolynomial.constant(c))

    @classmethod
    def t_power(cls, e):
        return cls._exact(LaurentPolynomial.t_power(e), LaurentPolynomial.one())

    @classmethod
    def from_terms(cls, terms):
        return cls(LaurentPolynomial.from_terms(terms))

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    @property
    def term_count(self):
        return len(self.num.coeffs) + len(self.den.coeffs)

    def valuation(self):
        """Exact valuation: lowest exponent of num minus that of den; INF at 0."""
        if self.num.is_zero:
            return INF
        return self.num.valuation() - self.den.valuation()

    def __bool__(self):
        return not self.num.is_zero

    def __add__(self, other):
        other = _as_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        d1, d2 = self.den, other.den
        if d1.is_one and d2.is_one:
            return PuiseuxFraction._exact(self.num + other.num,
                                          LaurentPolynomial.one())
        # classical reduced addition: only gcd(d1, d2) can cancel, and the
        # only factors the new numerator can share with the denominator
        # sit inside that gcd
        g, d1g, d2g = _cofactor_gcd(d1, d2)
        num = self.num * d2g + other.num * d1g
        if num.is_zero:
            return PuiseuxFraction.zero()
        if g is None:
            den = d1 * d2g
        else:
            g2, num, g = _cofactor_gcd(num, g)
            den = d1g * (d2g * g)
        return PuiseuxFraction._exact(*_unit_normalized(num, den))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxFraction._exact(-self.num, self.den)

    def __sub__(self, other):
        other = _as_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PuiseuxFraction.zero()
        if self.den.is_one and other.den.is_one:
            return PuiseuxFraction._exact(self.num * other.num,
                                          LaurentPolynomial.one())
        # cross-cancel: with both operands reduced, the product of the
        # cofactors is reduced again
        _, n1, d2 = _cofactor_gcd(self.num, other.den)
        _, n2, d1 = _cofactor_gcd(other.num, self.den)
        return PuiseuxFraction._exact(*_unit_normalized(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero")
        if self.is_zero:
            return self
        if self.den.is_one and other.den.is_one:
            nb = other.num
            if nb.is_monomial:
                quot = (self.num.shift(-nb.valuation())
                        .scale(1 / nb.lowest_coefficient()))
                return PuiseuxFraction._exact(quot, LaurentPolynomial.one())
            if not self.num.is_monomial:
                quot = try_divexact(self.num, nb)
                if quot is not None:
                    return PuiseuxFraction._exact(quot,
                                                  LaurentPolynomial.one())
        _, n1, n2 = _cofactor_gcd(self.num, other.num)
        _, dl, d2 = _cofactor_gcd(self.den, other.den)
        return PuiseuxFraction._exact(*_unit_normalized(n1 * d2, dl * n2))

    def __rtruediv__(self, other):
        other = _as_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = PuiseuxFraction.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, e):
        """Multiply by the monomial t**e; shifts the valuation by exactly e."""
        return PuiseuxFraction._exact(self.num.shift(e), self.den)

    def substitute_power(self, n):
        """Substitute t -> t**n for a positive rational n."""
        return PuiseuxFraction._exact(self.num.substitute_power(n),
                                      self.den.substitute_power(n))

    def series_coefficients(self, upto):
        """Coefficients of the expansion about t=0 for all exponents <= upto.

        Returns {exponent: coefficient} computed by exact long division of
        num by den; exponents lie on the common grid of num and den.
        """
        if self.num.is_zero:
            return {}
        upto = Fraction(upto)
        q = math.lcm(self.num.q, self.den.q)
        dgrid = self.den._on_grid(q)
        k_low = min(dgrid)
        d0 = dgrid[k_low]  # true lowest coefficient den.content * d0 is 1
        dtail = [(k - k_low, v) for k, v in dgrid.items() if k != k_low]
        cn = self.num.content
        rem = {k - k_low: cn * v for k, v in self.num._on_grid(q).items()}
        kmax = math.floor(upto * q)
        out = {}
        while rem:
            k0 = min(rem)
            if k0 > kmax:
                break
            c = rem.pop(k0)
            out[Fraction(k0, q)] = c
            if dtail:
                step = c / d0  # c * den.content, the eliminated multiple
                for kd, dv in dtail:
                    k = k0 + kd
                    v = rem.get(k)
                    v = -step * dv if v is None else v - step * dv
                    if v:
                        rem[k] = v
                    elif k in rem:
                        del rem[k]
        return out

    def coefficient_at(self, e):
        """Exact coefficient of t**e in the expansion about t=0."""
        e = Fraction(e)
        if self.num.is_zero or e < self.valuation():
            return Fraction(0)
        return self.series_coefficients(e).get(e, Fraction(0))

    def truncation(self, upto):
        """The partial sum of the expansion through order `upto`, as an element."""
        return PuiseuxFraction(
            LaurentPolynomial.from_terms(self.series_coefficients(upto)))

    def __eq__(self, other):
        other = _as_fraction(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.is_one:
            return repr(self.num)
        return "(%r)/(%r)" % (self.num, self.den)


def _coerce_poly(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPolynomial.constant(x)
    raise TypeError("cannot build scalar from %r" % type(x).__name__)


def _as_fraction(x):
    if isinstance(x, PuiseuxFraction):
        return x
    if isinstance(x, (int, Fraction, LaurentPolynomial)):
        return PuiseuxFraction(x)
    return NotImplemented


# -- module-level operation surface ------------------------------------------

def valuation(x):
    """Valuation of a scalar or Laurent polynomial; INF exactly for zero."""
    return x.valuation()


def coefficient_at(x, e):
    """Coefficient of t**e in the expansion of x about t=0."""
    if isinstance(x, LaurentPolynomial):
        return x.coefficient(e)
    return x.coefficient_at(e)


def scale_by_monomial(x, e):
    """x * t**e."""
    return x.shift(e)


def regrid(x, n):
    """Substitute t -> t**n for a positive integer n, multiplying exponents by n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("regrid factor must be a positive integer")
    return x.substitute_power(n)
