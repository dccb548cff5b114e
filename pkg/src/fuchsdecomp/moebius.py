"""Moebius maps over a biquadratic field acting on the upper half-plane."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import (DeterminantNotOne, FieldSpecMismatch, IdentityHasNoCircle,
                     NonHomotheticUpperTriangular)
from .qfield import FieldSpec, QuadExtElement, qf_parse


@dataclass(frozen=True)
class UHPoint:
    x: QuadExtElement
    y: QuadExtElement

    def __post_init__(self):
        if self.x.spec != self.y.spec:
            raise FieldSpecMismatch("point coordinates live in different fields")
        if self.y.sign() <= 0:
            raise ValueError("point is not in the upper half-plane")

    @property
    def spec(self) -> FieldSpec:
        return self.x.spec

    def abs2(self) -> QuadExtElement:
        return self.x * self.x + self.y * self.y

    def reflect(self) -> UHPoint:
        """Mirror image in the imaginary axis."""
        return UHPoint(-self.x, self.y)

    def __str__(self):
        return f"{self.x};{self.y}"


def parse_point(text: str, spec: FieldSpec) -> UHPoint:
    """Parse ``'<x>;<y>'`` with both parts in the field grammar."""
    if ";" not in text:
        raise ValueError("point must be written as '<x>;<y>'")
    xs, ys = text.split(";", 1)
    return UHPoint(qf_parse(xs, spec), qf_parse(ys, spec))


class MoebiusMap:
    """Matrix [a, b; c, d] of determinant 1 over the field."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, check: bool = True):
        spec = a.spec
        if any(e.spec != spec for e in (b, c, d)):
            raise FieldSpecMismatch("matrix entries live in different fields")
        self.a, self.b, self.c, self.d = a, b, c, d
        if check and self.det() != 1:
            raise DeterminantNotOne(f"determinant is {self.det()}, not 1")

    @classmethod
    def identity(cls, spec: FieldSpec) -> MoebiusMap:
        return cls(spec.one(), spec.zero(), spec.zero(), spec.one(), check=False)

    @classmethod
    def parse(cls, entries, spec: FieldSpec, check: bool = True) -> MoebiusMap:
        """Build from four strings in row-major order."""
        if len(entries) != 4:
            raise ValueError("a matrix needs exactly four entries")
        return cls(*(qf_parse(str(e), spec) for e in entries), check=check)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> list[str]:
        return [str(e) for e in self.entries()]

    def det(self) -> QuadExtElement:
        return self.a * self.d - self.b * self.c

    def __repr__(self):
        return "MoebiusMap[{}; {}]".format(*(", ".join(str(e) for e in row)
                                            for row in ((self.a, self.b), (self.c, self.d))))

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __neg__(self):
        return MoebiusMap(-self.a, -self.b, -self.c, -self.d, check=False)

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        return mob_compose(self, other)

    def __pow__(self, k: int) -> MoebiusMap:
        base = self if k >= 0 else mob_invert(self)
        k = abs(k)
        result = MoebiusMap.identity(self.spec)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == 1 and self.d == 1

    def is_central(self) -> bool:
        """True for +identity and -identity."""
        return (self.b.is_zero() and self.c.is_zero() and self.a == self.d
                and (self.a == 1 or self.a == -1))

    def __call__(self, z: UHPoint) -> UHPoint:
        return mob_apply(self, z)


def mob_apply(g: MoebiusMap, z: UHPoint) -> UHPoint:
    a, b, c, d = g.entries()
    x, y = z.x, z.y
    cxd = c * x + d
    q = cxd * cxd + c * c * y * y
    qi = q.inverse()
    real = ((a * x + b) * cxd + a * c * y * y) * qi
    return UHPoint(real, y * qi)


def mob_compose(g: MoebiusMap, h: MoebiusMap) -> MoebiusMap:
    if g.spec != h.spec:
        raise FieldSpecMismatch("composing maps over different fields")
    return MoebiusMap(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                      g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d, check=False)


def mob_invert(g: MoebiusMap) -> MoebiusMap:
    return MoebiusMap(g.d, -g.b, -g.c, g.a, check=False)


def mob_is_homothety(g: MoebiusMap) -> Optional[QuadExtElement]:
    """Return the factor lambda > 1 if g = +-diag(u, 1/u) with |u| != 1.

    Both g and its inverse report the same factor; g(z) is lambda^2 z or
    lambda^-2 z accordingly.
    """
    if not (g.b.is_zero() and g.c.is_zero()):
        return None
    u = abs(g.a)
    cmp = (u - 1).sign()
    if cmp == 0:
        return None
    return u if cmp > 0 else u.inverse()


@dataclass(frozen=True)
class StandardCircle:
    center: QuadExtElement
    radius: QuadExtElement


@dataclass(frozen=True)
class HomothetyCircle:
    radius: QuadExtElement

    @property
    def center(self) -> QuadExtElement:
        return self.radius.spec.zero()


IsoCircle = Union[StandardCircle, HomothetyCircle]


def isometry_circle(g: MoebiusMap) -> IsoCircle:
    """The locus |cz + d| = 1, or |a z| = 1 when g is a homothety.

    For diag(u, 1/u) the circle has radius 1/|u|, so a homothety of factor
    lambda and its inverse bound the strip lambda^-1 <= |z| <= lambda.
    """
    if not g.c.is_zero():
        return StandardCircle(-g.d / g.c, abs(g.c).inverse())
    if g.is_central():
        raise IdentityHasNoCircle("+-identity has no isometry circle")
    if mob_is_homothety(g) is None:
        raise NonHomotheticUpperTriangular("c = 0 but the map is not a homothety")
    return HomothetyCircle(abs(g.a).inverse())


class Side(enum.Enum):
    EXTERIOR = "Exterior"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


def circle_side(circle: IsoCircle, z: UHPoint) -> Side:
    dx = z.x - circle.center
    s = (dx * dx + z.y * z.y - circle.radius * circle.radius).sign()
    if s > 0:
        return Side.EXTERIOR
    if s < 0:
        return Side.INTERIOR
    return Side.BOUNDARY


@dataclass(frozen=True)
class Strip:
    """Closed annulus lambda^-1 <= |z| <= lambda."""

    lam: QuadExtElement

    def __post_init__(self):
        if self.lam < 1:
            raise ValueError("strip factor must be >= 1")


class StripSide(enum.Enum):
    BELOW = "Below"
    INSIDE = "Inside"
    ABOVE = "Above"


def strip_side(strip: Strip, z: UHPoint) -> StripSide:
    r2 = z.abs2()
    lam2 = strip.lam * strip.lam
    if (r2 - lam2).sign() > 0:
        return StripSide.ABOVE
    if (r2 * lam2 - 1).sign() < 0:
        return StripSide.BELOW
    return StripSide.INSIDE
