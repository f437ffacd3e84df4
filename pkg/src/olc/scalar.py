"""Exact scalars and dense univariate polynomials.

Every number in the package is a :class:`GaussianRational`, a complex number
whose real and imaginary parts are :class:`fractions.Fraction`.  Real values
simply carry ``im == 0``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "GaussianRational",
    "G",
    "Poly",
    "as_scalar",
    "parse_scalar",
    "poly_mul",
    "poly_scale_arg",
    "falling_factorial_poly",
    "pochhammer",
    "qint",
]

Scalarish = Union["GaussianRational", int, Fraction, str]


class GaussianRational:
    """Immutable complex number with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalarish = 0, im: Scalarish = 0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        if isinstance(re, str):
            z = parse_scalar(re)
            object.__setattr__(self, "re", z.re)
            object.__setattr__(self, "im", z.im + Fraction(im))
            return
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic --

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return _mk(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return _mk(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return _mk(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return _mk(self.re * o.re, _ZERO)
        return _mk(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.reciprocal()

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers are exact")
        if k < 0:
            return self.reciprocal() ** (-k)
        if not self.im:
            return _mk(self.re**k, _ZERO)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "GaussianRational":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("division by zero")
            return _mk(1 / self.re, _ZERO)
        d = self.re * self.re + self.im * self.im
        return _mk(self.re / d, -self.im / d)

    def conjugate(self) -> "GaussianRational":
        return _mk(self.re, -self.im)

    # -- comparison and misc --

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def real_value(self) -> Fraction:
        """The real part, after checking there is no imaginary part."""
        if self.im:
            raise ValueError(f"{self} is not real")
        return self.re

    def __repr__(self):
        return f"G({str(self)!r})"

    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return f"{_fmt(self.im)}i"
        sign = "-" if self.im < 0 else "+"
        return f"{_fmt(self.re)}{sign}{_fmt(abs(self.im))}i"

    def to_json(self) -> dict:
        return {"re": _ratstr(self.re), "im": _ratstr(self.im)}


G = GaussianRational
_ZERO = Fraction(0)


def _mk(re: Fraction, im: Fraction) -> GaussianRational:
    z = object.__new__(GaussianRational)
    object.__setattr__(z, "re", re)
    object.__setattr__(z, "im", im)
    return z


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        return _mk(Fraction(x), _ZERO)
    return NotImplemented


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _ratstr(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


ZERO = _mk(Fraction(0), _ZERO)
ONE = _mk(Fraction(1), _ZERO)
I = _mk(Fraction(0), Fraction(1))

_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")


def _rational(token: str, text: str) -> Fraction:
    if not _RAT.fullmatch(token):
        raise ValueError(f"malformed rational: {text!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"p/q"``, ``"3"``, ``"1/2+3/4i"`` or ``"-i"``.

    Decimal points are rejected on purpose: every input stays exact.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty rational")
    if not s.endswith("i"):
        return _mk(_rational(s, text), _ZERO)
    body = s[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut > 0:
        re_tok, im_tok = body[:cut], body[cut:]
    else:
        re_tok, im_tok = "", body
    re_part = _rational(re_tok, text) if re_tok else Fraction(0)
    if im_tok in ("", "+"):
        im_part = Fraction(1)
    elif im_tok == "-":
        im_part = Fraction(-1)
    else:
        im_part = _rational(im_tok, text)
    return _mk(re_part, im_part)


def as_scalar(x: Scalarish) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (int, Rational)):
        return _mk(Fraction(x), _ZERO)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


def qint(n: int, q: Scalarish) -> GaussianRational:
    """[n]_q = 1 + q + ... + q^(n-1), computed without division."""
    q = as_scalar(q)
    total, term = ZERO, ONE
    for _ in range(n):
        total = total + term
        term = term * q
    return total


def pochhammer(a: Scalarish, k: int) -> GaussianRational:
    a = as_scalar(a)
    out = ONE
    for i in range(k):
        out = out * (a + i)
    return out


class Poly:
    """Dense polynomial over GaussianRational, lowest degree first.

    The zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalarish] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalarish) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalarish = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == Poly((o,)).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        o = _as_poly(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = _as_poly(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _as_poly(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Poly(c * o for c in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: Scalarish) -> GaussianRational:
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_arg(self, lam: Scalarish) -> "Poly":
        return poly_scale_arg(self, lam)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = str(c)
            if c.im and c.re:
                cs = f"({cs})"
            if mono and cs == "1":
                cs = ""
            elif mono and cs == "-1":
                cs = "-"
            terms.append(f"{cs}{'*' if mono and cs not in ('', '-') else ''}{mono}")
        return "Poly(" + " + ".join(reversed(terms)) + ")"


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    o = _coerce(x)
    if o is NotImplemented:
        return o
    return Poly((o,))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return Poly()
    a, b = p.coeffs, q.coeffs
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return Poly(out)


def poly_scale_arg(p: Poly, lam: Scalarish) -> Poly:
    """Return q with q(x) = p(lam * x)."""
    lam = as_scalar(lam)
    out, power = [], ONE
    for c in p.coeffs:
        out.append(c * power)
        power = power * lam
    return Poly(out)


def falling_factorial_poly(n0: int) -> Poly:
    """x(x-1)...(x-n0+1); the empty product for n0 = 0."""
    if n0 < 0:
        raise ValueError("n0 must be nonnegative")
    out = Poly((1,))
    for i in range(n0):
        out = out * Poly((-i, 1))
    return out


def poly_product(polys: Sequence[Poly]) -> Poly:
    out = Poly((1,))
    for p in polys:
        out = poly_mul(out, p)
    return out
