"""SVG pictures of the fundamental rectangle and its Gamma+ translates.

Geodesics are tracked exactly through their ideal endpoints on the real axis;
only the corner points of the rectangle (intersections of two circles) need
square roots outside the field and are carried numerically.  Every number
written to the document has 30 significant digits, so output is byte-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union
from xml.sax.saxutils import quoteattr

import mpmath

from .catalog import SignaturePresentation, gamma_plus, get_presentation
from .errors import DepthCapExceeded, ViewportDegenerate
from .moebius import MoebiusMap
from .qfield import QuadExtElement

DIGITS = 30
WORK_DPS = 60
MAX_DEPTH = 4
DEFAULT_VIEWPORT = (Fraction(-13, 5), Fraction(13, 5), Fraction(11, 5))


@dataclass(frozen=True)
class RenderSpec:
    group: str = "e2d1D6ii"
    viewport: tuple = DEFAULT_VIEWPORT
    translate_depth: int = 0
    out: Optional[str] = None

    def __post_init__(self):
        x0, x1, ymax = (Fraction(v) for v in self.viewport)
        if not x0 < x1 or not ymax > 0:
            raise ViewportDegenerate(f"bad viewport {self.viewport}")
        object.__setattr__(self, "viewport", (x0, x1, ymax))
        if self.translate_depth < 0:
            raise ValueError("translate depth must be nonnegative")
        if self.translate_depth > MAX_DEPTH:
            raise DepthCapExceeded(f"translate depth {self.translate_depth} exceeds {MAX_DEPTH}")


def parse_viewport(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("viewport is 'x0,x1,ymax'")
    return tuple(Fraction(p.strip()) for p in parts)


def to_mpf(x: QuadExtElement):
    a, b, c, d = x.coords
    m, n, mn = x.spec.radicands
    with mpmath.workdps(WORK_DPS):
        return (mpmath.mpf(a.numerator) / a.denominator
                + mpmath.mpf(b.numerator) / b.denominator * mpmath.sqrt(m)
                + mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(n)
                + mpmath.mpf(d.numerator) / d.denominator * mpmath.sqrt(mn))


def fmt(v) -> str:
    if isinstance(v, QuadExtElement):
        v = to_mpf(v)
    elif isinstance(v, Fraction):
        with mpmath.workdps(WORK_DPS):
            v = mpmath.mpf(v.numerator) / v.denominator
    with mpmath.workdps(WORK_DPS):
        s = mpmath.nstr(v, DIGITS, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    return "0.0" if s in ("-0.0", "0.0") else s


INF = None  # ideal endpoint at infinity


@dataclass(frozen=True)
class Geodesic:
    """Geodesic with exact ideal endpoints; ``None`` stands for infinity."""

    e1: Optional[QuadExtElement]
    e2: Optional[QuadExtElement]

    @property
    def vertical(self) -> bool:
        return self.e1 is None or self.e2 is None

    def center(self) -> QuadExtElement:
        return (self.e1 + self.e2) / 2

    def radius(self) -> QuadExtElement:
        return abs(self.e1 - self.e2) / 2


def _map_ideal(g: MoebiusMap, e: Optional[QuadExtElement]) -> Optional[QuadExtElement]:
    if e is None:
        return None if g.c.is_zero() else g.a / g.c
    den = g.c * e + g.d
    if den.is_zero():
        return None
    return (g.a * e + g.b) / den


def _map_point(g: MoebiusMap, z):
    with mpmath.workdps(WORK_DPS):
        a, b, c, d = (to_mpf(x) for x in g.entries())
        return (a * z + b) / (c * z + d)


@dataclass(frozen=True)
class Arc:
    geodesic: Geodesic
    start: object  # mpmath.mpc
    end: object

    def image(self, g: MoebiusMap) -> Arc:
        geo = Geodesic(_map_ideal(g, self.geodesic.e1), _map_ideal(g, self.geodesic.e2))
        return Arc(geo, _map_point(g, self.start), _map_point(g, self.end))


def _circle_geodesic(center: QuadExtElement, radius: QuadExtElement) -> Geodesic:
    return Geodesic(center - radius, center + radius)


def _corner(center0: QuadExtElement, r0: QuadExtElement,
            center1: QuadExtElement, r1: QuadExtElement):
    """Upper intersection point of two circles centred on the real axis."""
    x = (r0 * r0 - r1 * r1 + center1 * center1 - center0 * center0) / (2 * (center1 - center0))
    dx = x - center0
    h2 = r0 * r0 - dx * dx
    if h2.sign() <= 0:
        raise ValueError("circles do not meet in the upper half-plane")
    with mpmath.workdps(WORK_DPS):
        return mpmath.mpc(to_mpf(x), mpmath.sqrt(to_mpf(h2)))


def domain_arcs(p: SignaturePresentation) -> list[Arc]:
    """The four sides of F, counter-clockwise from the top arc."""
    dom = p.domain
    spec = p.spec
    zero = spec.zero()
    lam, lam_inv = p.lam, p.lam.inverse()
    L, R = dom.left, dom.right
    out_r = _corner(zero, lam, R.center, R.radius)
    out_l = _corner(zero, lam, L.center, L.radius)
    in_r = _corner(zero, lam_inv, R.center, R.radius)
    in_l = _corner(zero, lam_inv, L.center, L.radius)
    return [
        Arc(_circle_geodesic(zero, lam), out_r, out_l),
        Arc(_circle_geodesic(L.center, L.radius), out_l, in_l),
        Arc(_circle_geodesic(zero, lam_inv), in_l, in_r),
        Arc(_circle_geodesic(R.center, R.radius), in_r, out_r),
    ]


def _pt(z) -> str:
    return f"{fmt(z.real)} {fmt(z.imag)}"


def _arc_command(arc: Arc) -> str:
    geo = arc.geodesic
    if geo.vertical:
        return f"L {_pt(arc.end)}"
    with mpmath.workdps(WORK_DPS):
        c = to_mpf(geo.center())
        t0 = mpmath.atan2(arc.start.imag, arc.start.real - c)
        t1 = mpmath.atan2(arc.end.imag, arc.end.real - c)
        sweep = 1 if t1 > t0 else 0
    r = fmt(geo.radius())
    return f"A {r} {r} 0 0 {sweep} {_pt(arc.end)}"


def outline_path(arcs: Sequence[Arc]) -> str:
    cmds = [f"M {_pt(arcs[0].start)}"] + [_arc_command(a) for a in arcs] + ["Z"]
    return " ".join(cmds)


def _semicircle(center: QuadExtElement, radius: QuadExtElement) -> str:
    left, right = fmt(center - radius), fmt(center + radius)
    r = fmt(radius)
    # from the left foot over the top to the right foot: clockwise in y-up coordinates
    return f"M {left} 0.0 A {r} {r} 0 0 0 {right} 0.0"


def translate_words(depth: int):
    """Index sequences (j_1, ..., j_n), 1 <= n <= depth, in lexicographic order per length."""
    for n in range(1, depth + 1):
        yield from itertools.product(range(5), repeat=n)


_GAMMA_NAMES = ("b", "ba", "ba^-1", "bab^-1", "ba^-1b^-1")


def render_domain(spec: RenderSpec, presentation: Optional[SignaturePresentation] = None) -> str:
    p = presentation if presentation is not None else get_presentation(spec.group)
    x0, x1, ymax = spec.viewport
    width = x1 - x0
    dom = p.domain
    arcs = domain_arcs(p)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{fmt(x0)} {fmt(-ymax)} {fmt(width)} {fmt(ymax)}" '
        f'width="800" height="{fmt(800 * ymax / width)}">',
        f"<desc>Fundamental domain of {quoteattr(p.label)[1:-1]}, "
        f"translate depth {spec.translate_depth}</desc>",
        '<g transform="scale(1,-1)" fill="none" stroke="black" stroke-width="1">',
        f'<line class="real-axis" x1="{fmt(x0)}" y1="0.0" x2="{fmt(x1)}" y2="0.0" '
        'vector-effect="non-scaling-stroke"/>',
        f'<path class="domain" fill="#b8d0f0" fill-opacity="0.6" '
        f'vector-effect="non-scaling-stroke" d="{outline_path(arcs)}"/>',
    ]
    for name, r in (("outer", p.lam), ("inner", p.lam.inverse())):
        lines.append(f'<path class="strip-arc" data-which="{name}" data-radius="{fmt(r)}" '
                     f'vector-effect="non-scaling-stroke" d="{_semicircle(p.spec.zero(), r)}"/>')
    for name, c in (("beta", dom.left), ("beta-inverse", dom.right)):
        lines.append(f'<path class="isometry-circle" data-of="{name}" '
                     f'data-center="{fmt(c.center)}" data-radius="{fmt(c.radius)}" '
                     f'stroke="#c03030" vector-effect="non-scaling-stroke" '
                     f'd="{_semicircle(c.center, c.radius)}"/>')
    if spec.translate_depth:
        gp = gamma_plus(p)
        lines.append('<g class="translates" stroke="#306030">')
        for word in translate_words(spec.translate_depth):
            g = MoebiusMap.identity(p.spec)
            for j in word:
                g = gp[j] @ g
            images = [a.image(g) for a in arcs]
            label = " ".join(_GAMMA_NAMES[j] for j in reversed(word))
            lines.append(f'<path class="translate" data-word="{label}" '
                         f'vector-effect="non-scaling-stroke" d="{outline_path(images)}"/>')
        lines.append("</g>")
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)


def write_svg(spec: RenderSpec, presentation: Optional[SignaturePresentation] = None) -> str:
    doc = render_domain(spec, presentation)
    if spec.out:
        with open(spec.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)
    return doc
