"""Exact arithmetic in real biquadratic fields Q(sqrt m, sqrt n) and in Q(i).

Elements are stored as four integer numerators over one positive common
denominator, reduced so that the five integers are coprime.  The public view
is :attr:`QuadExtElement.coords`, four canonical :class:`~fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .errors import DivisionByZero, FieldSpecMismatch, ParseError

_START_BITS = 64


def _is_squarefree(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(sqrt m, sqrt n), embedded with positive square roots."""

    m: int
    n: int

    def __post_init__(self):
        if not (_is_squarefree(self.m) and _is_squarefree(self.n)):
            raise ValueError(f"m and n must be squarefree integers > 1, got {self.m}, {self.n}")
        if self.m == self.n:
            raise ValueError("m and n must differ")

    @property
    def mn(self) -> int:
        return self.m * self.n

    @property
    def radicands(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.mn)

    def __call__(self, *coords) -> QuadExtElement:
        return QuadExtElement(self, coords)

    def zero(self) -> QuadExtElement:
        return QuadExtElement._raw(self, 0, 0, 0, 0, 1)

    def one(self) -> QuadExtElement:
        return QuadExtElement._raw(self, 1, 0, 0, 0, 1)

    def sqrt_m(self) -> QuadExtElement:
        return QuadExtElement._raw(self, 0, 1, 0, 0, 1)

    def sqrt_n(self) -> QuadExtElement:
        return QuadExtElement._raw(self, 0, 0, 1, 0, 1)

    def sqrt_mn(self) -> QuadExtElement:
        return QuadExtElement._raw(self, 0, 0, 0, 1, 1)

    def parse(self, text: str) -> QuadExtElement:
        return qf_parse(text, self)


class QuadExtElement:
    """a + b*sqrt(m) + c*sqrt(n) + d*sqrt(mn) with rational a, b, c, d."""

    __slots__ = ("spec", "_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, spec: FieldSpec, coords: Iterable = (0, 0, 0, 0)):
        fr = [Fraction(x) for x in coords]
        if len(fr) > 4:
            raise ValueError("at most four coordinates")
        fr += [Fraction(0)] * (4 - len(fr))
        den = math.lcm(*(f.denominator for f in fr))
        nums = [f.numerator * (den // f.denominator) for f in fr]
        self._set(spec, nums[0], nums[1], nums[2], nums[3], den)

    @classmethod
    def _raw(cls, spec, a, b, c, d, den) -> QuadExtElement:
        obj = cls.__new__(cls)
        obj._set(spec, a, b, c, d, den)
        return obj

    def _set(self, spec, a, b, c, d, den):
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        g = math.gcd(a, b, c, d, den)
        if g > 1:
            a, b, c, d, den = a // g, b // g, c // g, d // g, den // g
        self.spec = spec
        self._a, self._b, self._c, self._d, self._den = a, b, c, d, den
        self._hash = None

    # -- views ---------------------------------------------------------------

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        den = self._den
        return (Fraction(self._a, den), Fraction(self._b, den),
                Fraction(self._c, den), Fraction(self._d, den))

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_rational(self) -> bool:
        return not (self._b or self._c or self._d)

    def __repr__(self) -> str:
        return f"QuadExtElement({self.spec.m}, {self.spec.n}, {qf_format(self)!r})"

    def __str__(self) -> str:
        return qf_format(self)

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other) -> QuadExtElement:
        if isinstance(other, QuadExtElement):
            if other.spec != self.spec:
                raise FieldSpecMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, (int, Rational)):
            f = Fraction(other)
            return QuadExtElement._raw(self.spec, f.numerator, 0, 0, 0, f.denominator)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._den, o._den
        return QuadExtElement._raw(
            self.spec,
            self._a * d2 + o._a * d1, self._b * d2 + o._b * d1,
            self._c * d2 + o._c * d1, self._d * d2 + o._d * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement._raw(self.spec, -self._a, -self._b, -self._c, -self._d, self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m, n = self.spec.m, self.spec.n
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = o._a, o._b, o._c, o._d
        # sqrt(m)*sqrt(mn) = m*sqrt(n), sqrt(n)*sqrt(mn) = n*sqrt(m)
        return QuadExtElement._raw(
            self.spec,
            a1 * a2 + m * b1 * b2 + n * c1 * c2 + m * n * d1 * d2,
            a1 * b2 + b1 * a2 + n * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + m * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
            self._den * o._den)

    __rmul__ = __mul__

    def conj_n(self) -> QuadExtElement:
        """Image under sqrt(n) -> -sqrt(n)."""
        return QuadExtElement._raw(self.spec, self._a, self._b, -self._c, -self._d, self._den)

    def conj_m(self) -> QuadExtElement:
        """Image under sqrt(m) -> -sqrt(m)."""
        return QuadExtElement._raw(self.spec, self._a, -self._b, self._c, -self._d, self._den)

    def norm(self) -> Fraction:
        """Product of the four conjugates; a rational, zero only for zero."""
        y = self * self.conj_n()  # lies in Q(sqrt m)
        p, q = Fraction(y._a, y._den), Fraction(y._b, y._den)
        return p * p - self.spec.m * q * q

    def inverse(self) -> QuadExtElement:
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        cn = self.conj_n()
        y = self * cn
        # y = (p + q sqrt m)/den, and y * (p - q sqrt m) is rational
        ybar = QuadExtElement._raw(self.spec, y._a, -y._b, 0, 0, y._den)
        nrm = y * ybar
        assert nrm.is_rational()
        num = cn * ybar
        return QuadExtElement._raw(self.spec, num._a * nrm._den, num._b * nrm._den,
                                   num._c * nrm._den, num._d * nrm._den, num._den * nrm._a)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise DivisionByZero("division by zero field element")
        if o.is_rational():
            return QuadExtElement._raw(self.spec, self._a * o._den, self._b * o._den,
                                       self._c * o._den, self._d * o._den, self._den * o._a)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        return qf_sign(self)

    def __abs__(self):
        return -self if qf_sign(self) < 0 else self

    def __eq__(self, other):
        if isinstance(other, QuadExtElement):
            return (self.spec == other.spec and self._den == other._den
                    and self._a == other._a and self._b == other._b
                    and self._c == other._c and self._d == other._d)
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._a, self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, self._a, self._b, self._c, self._d, self._den))
        return self._hash

    def __lt__(self, other):
        return qf_compare(self, other) < 0

    def __le__(self, other):
        return qf_compare(self, other) <= 0

    def __gt__(self, other):
        return qf_compare(self, other) > 0

    def __ge__(self, other):
        return qf_compare(self, other) >= 0


def qf_arith(op: str, x: QuadExtElement, y: QuadExtElement) -> QuadExtElement:
    if x.spec != y.spec:
        raise FieldSpecMismatch(f"{x.spec} vs {y.spec}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    raise ValueError(f"unknown op {op!r}")


def _bounds(coef: int, s: int) -> tuple[int, int]:
    # s <= 2^k sqrt(r) < s + 1
    if coef >= 0:
        return coef * s, coef * (s + 1)
    return coef * (s + 1), coef * s


def qf_sign(x: QuadExtElement) -> int:
    """Sign of x under the embedding taking every sqrt to the positive root.

    Zero is decided from the coordinates.  Otherwise integer enclosures of the
    three square roots are refined (64 bits, then doubling) until the enclosure
    of x excludes zero.
    """
    a, b, c, d = x._a, x._b, x._c, x._d
    if not (b or c or d):
        return (a > 0) - (a < 0)
    if not (a or b or c or d):
        return 0
    m, n, mn = x.spec.radicands
    bits = _START_BITS
    while True:
        lo = hi = a << bits
        for coef, r in ((b, m), (c, n), (d, mn)):
            if coef:
                s = math.isqrt(r << (2 * bits))
                l, h = _bounds(coef, s)
                lo += l
                hi += h
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def qf_compare(x: QuadExtElement, y: QuadExtElement) -> int:
    if isinstance(x, QuadExtElement) and isinstance(y, QuadExtElement) and x.spec != y.spec:
        raise FieldSpecMismatch(f"{x.spec} vs {y.spec}")
    if not isinstance(x, QuadExtElement):
        x = y._coerce(x)
    return qf_sign(x - y)


# -- text format ---------------------------------------------------------------


def _fmt_rat(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"({f.numerator}/{f.denominator})"


def qf_format(x: QuadExtElement) -> str:
    """Render x in the field grammar, terms in basis order."""
    parts = []
    names = ("",) + tuple(f"r{r}" for r in x.spec.radicands)
    for coef, name in zip(x.coords, names):
        if coef == 0:
            continue
        mag = abs(coef)
        if not name:
            body = _fmt_rat(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{_fmt_rat(mag)}*{name}"
        if not parts:
            parts.append(("-" if coef < 0 else "") + body)
        else:
            parts.append(("- " if coef < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._skip()

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            self._skip()
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            raise ParseError(f"expected {ch!r}", self.pos)

    def integer(self, signed: bool = False) -> int:
        start = self.pos
        neg = False
        if signed and self.peek() in ("+", "-"):
            neg = self.peek() == "-"
            self.pos += 1
            self._skip()
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise ParseError("expected integer", start)
        value = int(self.text[digits_start:self.pos])
        self._skip()
        return -value if neg else value


def _rational(sc: _Scanner) -> Fraction:
    if sc.eat("("):
        num = sc.integer(signed=True)
        sc.expect("/")
        pos = sc.pos
        den = sc.integer()
        if den == 0:
            raise ParseError("zero denominator", pos)
        sc.expect(")")
        return Fraction(num, den)
    num = sc.integer()
    if sc.eat("/"):
        pos = sc.pos
        den = sc.integer()
        if den == 0:
            raise ParseError("zero denominator", pos)
        return Fraction(num, den)
    return Fraction(num)


def _radical(sc: _Scanner, spec: FieldSpec) -> int:
    pos = sc.pos
    sc.expect("r")
    r = sc.integer()
    try:
        return 1 + spec.radicands.index(r)
    except ValueError:
        raise ParseError(f"unknown radical r{r} for field Q(sqrt {spec.m}, sqrt {spec.n})", pos) from None


def qf_parse(text: str, spec: FieldSpec) -> QuadExtElement:
    """Parse ``expr := term (('+'|'-') term)*`` into a field element.

    A leading sign on the first term is accepted, as is a signed numerator
    inside a parenthesised fraction.
    """
    sc = _Scanner(text)
    coords = [Fraction(0)] * 4
    sign = 1
    if sc.peek() in ("+", "-"):
        sign = -1 if sc.peek() == "-" else 1
        sc.pos += 1
        sc._skip()
    while True:
        if sc.peek() == "r":
            slot, coef = _radical(sc, spec), Fraction(1)
        else:
            coef = _rational(sc)
            slot = 0
            if sc.eat("*"):
                slot = _radical(sc, spec)
        coords[slot] += sign * coef
        if sc.eat("+"):
            sign = 1
        elif sc.eat("-"):
            sign = -1
        elif sc.peek() == "":
            break
        else:
            raise ParseError(f"unexpected character {sc.peek()!r}", sc.pos)
    return QuadExtElement(spec, coords)


# -- Gaussian rationals --------------------------------------------------------


class GaussRational:
    """Exact element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x) -> GaussRational:
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Rational)):
            return GaussRational(x, 0)
        return NotImplemented

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        return f"{self.re} + {self.im}*i"

    def __eq__(self, other):
        o = GaussRational._lift(other)
        if o is NotImplemented:
            return o
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        o = GaussRational._lift(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussRational._lift(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = GaussRational._lift(other)
        if o is NotImplemented:
            return o
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = GaussRational._lift(other)
        if o is NotImplemented:
            return o
        nrm = o.norm()
        if nrm == 0:
            raise DivisionByZero("division by zero in Q(i)")
        p = self * o.conjugate()
        return GaussRational(p.re / nrm, p.im / nrm)

    def __rtruediv__(self, other):
        o = GaussRational._lift(other)
        if o is NotImplemented:
            return o
        return o / self


I = GaussRational(0, 1)


def gauss_arith(op: str, u: GaussRational, v: GaussRational) -> GaussRational:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    if op == "neg":
        return -u
    raise ValueError(f"unknown op {op!r}")
