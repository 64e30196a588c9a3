"""Exact JSON file formats for instances, points, witnesses and results.

Rationals travel as strings like "-3/7" so no reader can silently round
them; floats are rejected everywhere.  Parsing is strict: unknown fields
and malformed values fail with the offending location.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction

from troplift.lift import Instance
from troplift.series import INF, LaurentPolynomial, PuiseuxFraction

__all__ = [
    "FormatError",
    "parse_instance",
    "parse_point",
    "parse_witness",
    "serialize_instance",
    "serialize_point",
    "serialize_witness",
    "serialize_scalar",
    "parse_scalar",
    "render_series",
]

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class FormatError(ValueError):
    """Malformed input file; carries the location of the offending field."""

    def __init__(self, message, location):
        super().__init__("%s: %s" % (location, message))
        self.location = location
        self.reason = message


def _require_keys(obj, allowed, required, loc):
    if not isinstance(obj, dict):
        raise FormatError("expected an object", loc)
    for key in obj:
        if key not in allowed:
            raise FormatError("unknown field %r" % key, loc)
    for key in required:
        if key not in obj:
            raise FormatError("missing field %r" % key, loc)


def _parse_rational(value, loc):
    if not isinstance(value, str):
        raise FormatError("rationals must be exact strings like \"3/4\", got %s"
                          % type(value).__name__, loc)
    if not _RATIONAL.match(value):
        raise FormatError("not an exact rational: %r" % value, loc)
    return Fraction(value)


def _format_rational(f):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def _parse_int(value, loc, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError("expected an integer", loc)
    if minimum is not None and value < minimum:
        raise FormatError("must be >= %d" % minimum, loc)
    return value


def _parse_terms(value, q, loc):
    if not isinstance(value, list):
        raise FormatError("expected a list of [exponent, coefficient] pairs", loc)
    terms = {}
    for idx, item in enumerate(value):
        at = "%s[%d]" % (loc, idx)
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError("expected a [exponent, coefficient] pair", at)
        k = _parse_int(item[0], at + ".exponent")
        c = _parse_rational(item[1], at + ".coefficient")
        e = Fraction(k, q)
        terms[e] = terms.get(e, Fraction(0)) + c
    return LaurentPolynomial.from_terms(terms)


def parse_scalar(obj, default_q, loc):
    _require_keys(obj, {"q", "num", "den"}, {"num"}, loc)
    q = _parse_int(obj["q"], loc + ".q", minimum=1) if "q" in obj else default_q
    num = _parse_terms(obj["num"], q, loc + ".num")
    den = (_parse_terms(obj["den"], q, loc + ".den")
           if "den" in obj else LaurentPolynomial.one())
    if den.is_zero:
        raise FormatError("denominator is zero", loc + ".den")
    return PuiseuxFraction(num, den)


def serialize_scalar(x):
    q = math.lcm(x.num.q, x.den.q)
    out = {"q": q,
           "num": [[int(e * q), _format_rational(c)] for e, c in x.num.terms()]}
    if not x.den.is_one:
        out["den"] = [[int(e * q), _format_rational(c)]
                      for e, c in x.den.terms()]
    return out


def parse_instance(obj):
    """Instance from its JSON object form; exact round-trip with serialize."""
    _require_keys(obj, {"q", "m", "n", "A", "b"}, {"A", "b"}, "instance")
    q = _parse_int(obj["q"], "instance.q", minimum=1) if "q" in obj else 1
    rows_obj = obj["A"]
    if not isinstance(rows_obj, list) or not rows_obj:
        raise FormatError("expected a non-empty list of rows", "instance.A")
    rows = []
    for i, row in enumerate(rows_obj):
        if not isinstance(row, list) or not row:
            raise FormatError("expected a non-empty row", "instance.A[%d]" % i)
        rows.append([parse_scalar(entry, q, "instance.A[%d][%d]" % (i, j))
                     for j, entry in enumerate(row)])
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise FormatError("rows have differing lengths", "instance.A")
    b_obj = obj["b"]
    if not isinstance(b_obj, list):
        raise FormatError("expected a list", "instance.b")
    rhs = [parse_scalar(entry, q, "instance.b[%d]" % i)
           for i, entry in enumerate(b_obj)]
    if len(rhs) != len(rows):
        raise FormatError("b length %d does not match %d rows"
                          % (len(rhs), len(rows)), "instance.b")
    if "m" in obj and _parse_int(obj["m"], "instance.m", 1) != len(rows):
        raise FormatError("declared m does not match A", "instance.m")
    if "n" in obj and _parse_int(obj["n"], "instance.n", 1) != len(rows[0]):
        raise FormatError("declared n does not match A", "instance.n")
    return Instance.from_rows(rows, rhs)


def serialize_instance(inst):
    entries = [[serialize_scalar(x) for x in row] for row in inst.matrix]
    rhs = [serialize_scalar(x) for x in inst.rhs]
    q = 1
    for row in entries:
        for e in row:
            q = math.lcm(q, e["q"])
    for e in rhs:
        q = math.lcm(q, e["q"])
    return {"q": q, "m": inst.m, "n": inst.n, "A": entries, "b": rhs}


def parse_point(obj):
    _require_keys(obj, {"v"}, {"v"}, "point")
    coords_obj = obj["v"]
    if not isinstance(coords_obj, list):
        raise FormatError("expected a list", "point.v")
    coords = []
    for i, c in enumerate(coords_obj):
        loc = "point.v[%d]" % i
        if c == "inf":
            coords.append(INF)
        else:
            coords.append(_parse_rational(c, loc))
    return tuple(coords)


def serialize_point(v):
    return {"v": ["inf" if c == INF else _format_rational(c) for c in v]}


def parse_witness(obj):
    """Witness coordinates from {"x": [...]}; result files are accepted too."""
    if isinstance(obj, dict) and "witness" in obj and "x" not in obj:
        coords_obj = obj.get("witness")
        loc = "result.witness"
        if coords_obj is None:
            raise FormatError("result carries no witness", loc)
    else:
        _require_keys(obj, {"x"}, {"x"}, "witness")
        coords_obj = obj["x"]
        loc = "witness.x"
    if not isinstance(coords_obj, list):
        raise FormatError("expected a list", loc)
    return tuple(parse_scalar(entry, 1, "%s[%d]" % (loc, i))
                 for i, entry in enumerate(coords_obj))


def serialize_witness(x):
    return {"x": [serialize_scalar(c) for c in x]}


def render_series(x, upto):
    """Human-readable truncated expansion of a scalar, exact tail marker included."""
    if x.is_zero:
        return "0"
    upto = Fraction(upto)
    coeffs = x.series_coefficients(upto)
    parts = []
    for e in sorted(coeffs):
        c = coeffs[e]
        if e == 0:
            frag = _format_rational(abs(c))
        else:
            power = "t" if e == 1 else ("t^%s" % e if e.denominator == 1
                                        else "t^(%s)" % e)
            frag = power if abs(c) == 1 else "%s*%s" % (_format_rational(abs(c)),
                                                        power)
        if not parts:
            parts.append(frag if c > 0 else "-" + frag)
        else:
            parts.append(("+ " if c > 0 else "- ") + frag)
    rendered = " ".join(parts) if parts else "0"
    tail = x - x.truncation(upto)
    if tail:
        rendered += " + O(t^%s)" % tail.valuation()
    return rendered


def loads(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON (%s)" % exc, what) from exc
