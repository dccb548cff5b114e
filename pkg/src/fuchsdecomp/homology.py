"""Reduction of group elements to words in alpha, beta and their homology classes.

A deck transformation g is pulled back to the fundamental rectangle by left
multiplication: powers of alpha bring g(tau) into the strip, beta^-1 moves a
point out of the right circle, beta out of the left one.  When the current
image of tau is interior to F the accumulated product is the inverse of g up
to sign, and the exponent sums of the resulting word are the coordinates of
{tau, g(tau)} in the basis {tau, alpha(tau)}, {tau, beta(tau)}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .catalog import RegionTag, SignaturePresentation, classify_point
from .errors import (BoundaryHit, LambdaNotGreaterThanOne, NonTermination,
                     NotDeckTransformation)
from .moebius import MoebiusMap, UHPoint
from .qfield import QuadExtElement

ALPHA = "A"
BETA = "B"
DEFAULT_MAX_ITER = 10_000


def _canonical(letters: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for gen, exp in letters:
        if gen not in (ALPHA, BETA):
            raise ValueError(f"unknown generator {gen!r}")
        exp = int(exp)
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class GenWord:
    """Run-length encoded word in alpha^+-1, beta^+-1, freely reduced."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _canonical(self.letters))

    def __mul__(self, other: GenWord) -> GenWord:
        return GenWord(self.letters + other.letters)

    def inverse(self) -> GenWord:
        return GenWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        name = {ALPHA: "a", BETA: "b"}
        return " ".join(name[g] if e == 1 else f"{name[g]}^{e}" for g, e in self.letters)

    def to_json(self) -> list:
        return [[g, e] for g, e in self.letters]

    @classmethod
    def from_json(cls, data) -> GenWord:
        return cls(tuple((str(g), int(e)) for g, e in data))


@dataclass(frozen=True)
class HomologyClass:
    n_alpha: int
    n_beta: int


@dataclass(frozen=True)
class DecompResult:
    word: GenWord
    coeffs: HomologyClass
    iterations: int
    sign: int
    trace: list = field(default_factory=list, compare=False, repr=False)

    def to_json(self) -> dict:
        return {"word": self.word.to_json(), "n_alpha": self.coeffs.n_alpha,
                "n_beta": self.coeffs.n_beta, "iterations": self.iterations,
                "sign": self.sign}


def abelianize(w: GenWord) -> HomologyClass:
    na = sum(e for g, e in w.letters if g == ALPHA)
    nb = sum(e for g, e in w.letters if g == BETA)
    return HomologyClass(na, nb)


def multiply_word(p: SignaturePresentation, w: GenWord) -> MoebiusMap:
    result = MoebiusMap.identity(p.spec)
    for gen, exp in w.letters:
        base = p.alpha if gen == ALPHA else p.beta
        result = result @ (base ** exp)
    return result


def strip_exponent(lam: QuadExtElement, z: UHPoint) -> int:
    """The integer N of least |N| with lambda^-1 <= |lambda^(2N) z| <= lambda."""
    s = (lam - 1).sign()
    if s < 0:
        raise LambdaNotGreaterThanOne("lambda must be > 1")
    r2 = z.abs2()
    if s == 0:
        if r2 == 1:
            return 0
        raise LambdaNotGreaterThanOne("lambda = 1 and |z| != 1")
    lam2 = lam * lam
    lam4 = lam2 * lam2
    n = 0
    if (r2 - lam2).sign() > 0:
        lam4_inv = lam4.inverse()
        while (r2 - lam2).sign() > 0:
            r2 = r2 * lam4_inv
            n -= 1
    elif (r2 * lam2 - 1).sign() < 0:
        while (r2 * lam2 - 1).sign() < 0:
            r2 = r2 * lam4
            n += 1
    return n


def _alpha_power_times(p: SignaturePresentation, n: int, g: MoebiusMap) -> MoebiusMap:
    u = p.lam ** n
    ui = u.inverse()
    return MoebiusMap(u * g.a, u * g.b, ui * g.c, ui * g.d, check=False)


def decompose(p: SignaturePresentation, tau: UHPoint, g: MoebiusMap,
              max_iter: int = DEFAULT_MAX_ITER, record: bool = False) -> DecompResult:
    """Write g as +-(word in alpha, beta) by reducing g(tau) into F.

    ``tau`` must be interior to F.  Every pass that changes the current matrix
    counts as one iteration; a run of alpha powers counts once.
    """
    if classify_point(p, tau) is not RegionTag.INTERIOR_F:
        raise ValueError("base point must lie in the open fundamental rectangle")
    plus = p.beta_plus_exponent
    beta_step = {RegionTag.S_PLUS: (p.beta_minus, -plus), RegionTag.S_MINUS: (p.beta_plus, plus)}
    current = g
    prefix: list[tuple[str, int]] = []  # prefix word * g == current, stored reversed
    trace = []
    iterations = 0
    while True:
        z = current(tau)
        tag = classify_point(p, z)
        if record:
            trace.append((tag, z))
        if tag is RegionTag.INTERIOR_F:
            break
        if tag is RegionTag.BOUNDARY_F:
            raise BoundaryHit(f"iterate {iterations} lies on the boundary of F: {z}")
        if iterations >= max_iter:
            raise NonTermination(f"no reduction after {max_iter} iterations")
        if tag is RegionTag.ABOVE or tag is RegionTag.BELOW:
            n = strip_exponent(p.lam, z)
            current = _alpha_power_times(p, n, current)
            prefix.append((ALPHA, n))
        else:
            step, exp = beta_step[tag]
            current = step @ current
            prefix.append((BETA, exp))
        iterations += 1
    if not current.is_central():
        raise NotDeckTransformation("reduced matrix fixes F but is not +-identity")
    sign = 1 if current.a == 1 else -1
    # prefix letters were pushed left-first, so the product is reversed(prefix)
    word = GenWord(tuple(reversed(prefix))).inverse()
    return DecompResult(word, abelianize(word), iterations, sign, trace)


def decompose_coeffs(p: SignaturePresentation, g: MoebiusMap,
                     tau: Optional[UHPoint] = None) -> HomologyClass:
    tau = tau if tau is not None else p.domain.witness
    return decompose(p, tau, g).coeffs
