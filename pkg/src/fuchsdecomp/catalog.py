"""Signature (1;e) presentations in normal form and their fundamental rectangles.

A presentation is <alpha, beta : (alpha beta alpha^-1 beta^-1)^e = +-1> with
alpha = diag(lambda, 1/lambda), lambda > 1, and beta = [a, b; b, a].  The
fundamental domain is the strip lambda^-1 <= |z| <= lambda minus the interiors
of the isometry circles of beta and beta^-1.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .errors import EmptyDomain, PresentationError
from .moebius import (MoebiusMap, Side, StandardCircle, Strip, UHPoint, circle_side,
                      isometry_circle, mob_invert)
from .qfield import FieldSpec, QuadExtElement


@dataclass(frozen=True)
class Violation:
    which: str
    detail: str = ""

    def __str__(self):
        return f"{self.which}: {self.detail}" if self.detail else self.which


@dataclass(frozen=True, eq=False)
class SignaturePresentation:
    e: int
    alpha: MoebiusMap
    beta: MoebiusMap
    lam: QuadExtElement
    label: str = ""

    @property
    def spec(self) -> FieldSpec:
        return self.alpha.spec

    @cached_property
    def alpha_inv(self) -> MoebiusMap:
        return mob_invert(self.alpha)

    @cached_property
    def beta_inv(self) -> MoebiusMap:
        return mob_invert(self.beta)

    @cached_property
    def commutator(self) -> MoebiusMap:
        return self.alpha @ self.beta @ self.alpha_inv @ self.beta_inv

    @cached_property
    def beta_plus_exponent(self) -> int:
        """+1 if beta maps F to the positive-x side, else -1.

        beta sends the exterior of I(beta) into the interior of I(beta^-1),
        so the answer is the sign of the centre of I(beta^-1).
        """
        circle = isometry_circle(self.beta_inv)
        return 1 if circle.center.sign() > 0 else -1

    @cached_property
    def beta_plus(self) -> MoebiusMap:
        return self.beta if self.beta_plus_exponent > 0 else self.beta_inv

    @cached_property
    def beta_minus(self) -> MoebiusMap:
        return self.beta_inv if self.beta_plus_exponent > 0 else self.beta

    @cached_property
    def domain(self) -> FundamentalDomain:
        return fundamental_domain(self)

    def to_json(self) -> dict:
        return {"label": self.label, "e": self.e, "m": self.spec.m, "n": self.spec.n,
                "alpha": self.alpha.to_json(), "beta": self.beta.to_json()}


def validate_presentation(p: SignaturePresentation) -> Optional[Violation]:
    """Check the normal-form invariants exactly; return the first violation or None."""
    if not isinstance(p.e, int) or p.e < 2:
        return Violation("e", f"e must be an integer >= 2, got {p.e!r}")
    spec = p.spec
    if any(x.spec != spec for x in (*p.beta.entries(), p.lam)):
        return Violation("field", "entries over different fields")
    for name, g in (("alpha", p.alpha), ("beta", p.beta)):
        if g.det() != 1:
            return Violation("determinant", f"det({name}) = {g.det()}")
    a = p.alpha
    if not (a.b.is_zero() and a.c.is_zero()):
        return Violation("alpha_shape", "alpha is not diagonal")
    if a.a != p.lam:
        return Violation("alpha_shape", "alpha[0,0] differs from lambda")
    if not p.lam > 1:
        return Violation("lambda", "lambda must exceed 1")
    b = p.beta
    if not (b.a == b.d and b.b == b.c and not b.b.is_zero()):
        return Violation("beta_shape", "beta must be [a, b; b, a] with b != 0")
    if not (p.commutator ** p.e).is_central():
        return Violation("relation", f"(alpha beta alpha^-1 beta^-1)^{p.e} is not +-1")
    return None


def require_valid(p: SignaturePresentation) -> SignaturePresentation:
    v = validate_presentation(p)
    if v is not None:
        raise PresentationError(v)
    return p


def make_presentation(label: str, e: int, m: int, n: int, alpha, beta) -> SignaturePresentation:
    """Build a presentation from entry strings without validating it."""
    spec = FieldSpec(m, n)
    alpha_m = MoebiusMap.parse(alpha, spec, check=False)
    beta_m = MoebiusMap.parse(beta, spec, check=False)
    return SignaturePresentation(e, alpha_m, beta_m, alpha_m.a, label)


def builtin_e2d1D6ii() -> SignaturePresentation:
    """The (1;2) group e2d1D6ii over Q(sqrt 2, sqrt 3)."""
    return require_valid(make_presentation(
        "e2d1D6ii", 2, 2, 3,
        ["(1/2)*r2 + (1/2)*r6", "0", "0", "-(1/2)*r2 + (1/2)*r6"],
        ["r2", "1", "1", "r2"]))


BUILTINS = {"e2d1D6ii": builtin_e2d1D6ii}


def presentation_from_json(data: dict) -> SignaturePresentation:
    try:
        p = make_presentation(str(data.get("label", "")), data["e"], int(data["m"]),
                              int(data["n"]), data["alpha"], data["beta"])
    except KeyError as exc:
        raise ValueError(f"presentation is missing field {exc}") from None
    return require_valid(p)


def load_presentation(path) -> SignaturePresentation:
    with open(path, encoding="utf-8") as fh:
        return presentation_from_json(json.load(fh))


def get_presentation(name_or_path: str) -> SignaturePresentation:
    """Builtin label, or path to a presentation JSON file."""
    if name_or_path in BUILTINS:
        return BUILTINS[name_or_path]()
    if os.path.exists(name_or_path):
        return load_presentation(name_or_path)
    raise ValueError(f"unknown group {name_or_path!r} (builtins: {', '.join(BUILTINS)})")


@dataclass(frozen=True)
class FundamentalDomain:
    strip: Strip
    left: StandardCircle
    right: StandardCircle
    witness: UHPoint


def _strictly_inside(strip, left, right, z) -> bool:
    lam2 = strip.lam * strip.lam
    r2 = z.abs2()
    return ((r2 - lam2).sign() < 0 and (r2 * lam2 - 1).sign() > 0
            and circle_side(left, z) is Side.EXTERIOR
            and circle_side(right, z) is Side.EXTERIOR)


def fundamental_domain(p: SignaturePresentation) -> FundamentalDomain:
    strip = Strip(p.lam)
    left = isometry_circle(mob_invert(p.beta_minus))
    right = isometry_circle(mob_invert(p.beta_plus))
    spec = p.spec
    # F is symmetric about the imaginary axis; look for a witness on it
    candidates = [Fraction(1)] + [Fraction(k, 16) for k in range(1, 64)]
    for t in candidates:
        z = UHPoint(spec.zero(), spec(t))
        if _strictly_inside(strip, left, right, z):
            return FundamentalDomain(strip, left, right, z)
    raise EmptyDomain("no interior point of the fundamental rectangle found")


class RegionTag(enum.Enum):
    INTERIOR_F = "InteriorF"
    BOUNDARY_F = "BoundaryF"
    S_PLUS = "SPlus"
    S_MINUS = "SMinus"
    ABOVE = "OutsideStrip(Above)"
    BELOW = "OutsideStrip(Below)"


def classify_point(p: SignaturePresentation, z: UHPoint) -> RegionTag:
    """Locate z relative to the fundamental rectangle.

    Outside the closed strip wins; then the open interiors of the right and
    left isometry circles; then the boundary arcs of F; the rest is int(F).
    """
    dom = p.domain
    lam2 = dom.strip.lam * dom.strip.lam
    r2 = z.abs2()
    s_top = (r2 - lam2).sign()
    if s_top > 0:
        return RegionTag.ABOVE
    s_bot = (r2 * lam2 - 1).sign()
    if s_bot < 0:
        return RegionTag.BELOW
    right = circle_side(dom.right, z)
    if right is Side.INTERIOR:
        return RegionTag.S_PLUS
    left = circle_side(dom.left, z)
    if left is Side.INTERIOR:
        return RegionTag.S_MINUS
    if s_top == 0 or s_bot == 0 or right is Side.BOUNDARY or left is Side.BOUNDARY:
        return RegionTag.BOUNDARY_F
    return RegionTag.INTERIOR_F


def gamma_plus(p: SignaturePresentation) -> list[MoebiusMap]:
    """[b, b a, b a^-1, b a b^-1, b a^-1 b^-1] with b the right-moving beta."""
    b, bi = p.beta_plus, p.beta_minus
    a, ai = p.alpha, p.alpha_inv
    return [b, b @ a, b @ ai, b @ a @ bi, b @ ai @ bi]


def gamma_minus(p: SignaturePresentation) -> list[MoebiusMap]:
    b, bi = p.beta_minus, p.beta_plus
    a, ai = p.alpha, p.alpha_inv
    return [b, b @ a, b @ ai, b @ a @ bi, b @ ai @ bi]
