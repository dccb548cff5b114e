"""Hecke coset tree and divisor groups for Gamma_0(N).

Points of the tree are right cosets gamma_u Gamma_0(N) with
gamma_u = gamma_(u_1) ... gamma_(u_n); a divisor is a finite integer
combination of tree labels, and the degree-zero subgroup is spanned by the
differences P - base.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .errors import NotDegreeZero, PDividesLevel


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class CosetRep:
    """Integer matrix [a, b; c, d] of determinant p^k."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: CosetRep) -> CosetRep:
        return CosetRep(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def tolist(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]


IDENTITY = CosetRep(1, 0, 0, 1)


def same_right_coset(g: CosetRep, h: CosetRep, level: int) -> bool:
    """Whether g Gamma_0(N) = h Gamma_0(N), i.e. h^-1 g lies in Gamma_0(N)."""
    det = h.det()
    if det != g.det() or det == 0:
        return False
    # h^-1 g = adj(h) g / det
    adj = CosetRep(h.d, -h.b, -h.c, h.a)
    m = adj @ g
    entries = m.tolist()
    if any(x % det for x in entries):
        return False
    a, b, c, d = (x // det for x in entries)
    return a * d - b * c == 1 and c % level == 0


def hecke_reps(p: int, level: int = 1) -> list[CosetRep]:
    """Right-coset representatives of Gamma_0(N) diag(1, p) Gamma_0(N).

    The p + 1 matrices [p, j; 0, 1] (0 <= j < p) and [1, 0; 0, p].
    """
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if level < 1:
        raise ValueError("level must be positive")
    if level % p == 0:
        raise PDividesLevel(f"p = {p} divides the level {level}")
    reps = [CosetRep(p, j, 0, 1) for j in range(p)] + [CosetRep(1, 0, 0, p)]
    for i, g in enumerate(reps):
        for h in reps[:i]:
            if same_right_coset(g, h, level):
                raise AssertionError(f"representatives {g} and {h} coincide")
    return reps


@dataclass(frozen=True, order=True)
class TreeLabel:
    word: tuple[int, ...] = ()

    @property
    def depth(self) -> int:
        return len(self.word)

    def __str__(self):
        return "(" + ",".join(map(str, self.word)) + ")"


ROOT = TreeLabel(())


def label_matrix(reps: list[CosetRep], label: TreeLabel) -> CosetRep:
    g = IDENTITY
    for u in label.word:
        g = g @ reps[u - 1]
    return g


def enumerate_tree(p: int, level: int, depth: int) -> list[TreeLabel]:
    """Labels of depth <= ``depth``, one per distinct right coset.

    Within each depth the lexicographically first label of a coset is kept;
    labels of different depth have different determinants and never collide.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    reps = hecke_reps(p, level)
    d = len(reps)
    labels = [ROOT]
    for n in range(1, depth + 1):
        kept: list[tuple[TreeLabel, CosetRep]] = []
        for word in product(range(1, d + 1), repeat=n):
            label = TreeLabel(word)
            g = label_matrix(reps, label)
            if not any(same_right_coset(g, h, level) for _, h in kept):
                kept.append((label, g))
        labels.extend(lbl for lbl, _ in kept)
    return labels


def counts_by_depth(labels: Iterable[TreeLabel]) -> list[int]:
    c = Counter(lbl.depth for lbl in labels)
    return [c[k] for k in range(max(c) + 1)] if c else []


class Divisor:
    """Finite formal sum of tree labels with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[TreeLabel, int] | None = None):
        self._coeffs = {k: int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def point(cls, label: TreeLabel, k: int = 1) -> Divisor:
        return cls({label: k})

    @property
    def coefficients(self) -> dict[TreeLabel, int]:
        return dict(self._coeffs)

    def support(self) -> list[TreeLabel]:
        return sorted(self._coeffs)

    def __getitem__(self, label: TreeLabel) -> int:
        return self._coeffs.get(label, 0)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: Divisor) -> Divisor:
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return Divisor(out)

    def __neg__(self) -> Divisor:
        return Divisor({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __rmul__(self, k: int) -> Divisor:
        return Divisor({lbl: k * v for lbl, v in self._coeffs.items()})

    def __repr__(self):
        terms = " + ".join(f"{v}*{k}" for k, v in sorted(self._coeffs.items()))
        return f"Divisor({terms or '0'})"


def degree(D: Divisor) -> int:
    return sum(D.coefficients.values())


def is_degree_zero(D: Divisor) -> bool:
    return degree(D) == 0


def degree_zero_basis_decomposition(D: Divisor, base: TreeLabel) -> dict[TreeLabel, int]:
    """Coefficients x_P with D = sum x_P (P - base), P ranging over supp(D) minus base."""
    if not is_degree_zero(D):
        raise NotDegreeZero(f"divisor has degree {degree(D)}")
    return {lbl: k for lbl, k in D.coefficients.items() if lbl != base}


def recombine(coeffs: Mapping[TreeLabel, int], base: TreeLabel) -> Divisor:
    out = Divisor()
    for lbl, k in coeffs.items():
        out = out + k * (Divisor.point(lbl) - Divisor.point(base))
    return out


def tree_json(p: int, level: int, depth: int) -> dict:
    labels = enumerate_tree(p, level, depth)
    return {"p": p, "N": level, "depth": depth,
            "labels": [list(lbl.word) for lbl in labels],
            "counts_by_depth": counts_by_depth(labels)}
