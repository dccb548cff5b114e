"""Factorisation of SL(2,Z) matrices into S and T powers by convergents at i.

Every matrix is written as

    g = U * T^(n_k) S T^(n_(k-1)) S ... S T^(n_1),    U in {Id, S, -Id, -S},

with S = [0, -1; 1, 0] and T = [1, 1; 0, 1].  The partial products applied to i
are the convergents g_1(i) = n_1 + i, g_(m+1)(i) = n_(m+1) - 1/g_m(i).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DeterminantNotOne, DivisionByZero, NonTermination
from .qfield import GaussRational, I


@dataclass(frozen=True)
class IntMatrix:
    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: IntMatrix) -> IntMatrix:
        return IntMatrix(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                         self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> IntMatrix:
        if self.det() != 1:
            raise DeterminantNotOne("powers are only taken of unimodular matrices")
        base = self if k >= 0 else IntMatrix(self.d, -self.b, -self.c, self.a)
        out = ID
        for _ in range(abs(k)):
            out = out @ base
        return out

    def apply(self, z: GaussRational) -> GaussRational:
        return (self.a * z + self.b) / (self.c * z + self.d)

    def tolist(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]


ID = IntMatrix(1, 0, 0, 1)
S = IntMatrix(0, -1, 1, 0)
T = IntMatrix(1, 1, 0, 1)

UNITS = {"Id": ID, "S": S, "-Id": -ID, "-S": -S}


def t_power(k: int) -> IntMatrix:
    return IntMatrix(1, k, 0, 1)


@dataclass(frozen=True)
class STWord:
    """exponents = (n_k, ..., n_1); residual is the unit U on the left."""

    exponents: tuple[int, ...]
    residual: str = "Id"

    @property
    def application_order(self) -> tuple[int, ...]:
        """(n_1, ..., n_k), the order in which the convergents consume them."""
        return tuple(reversed(self.exponents))

    def to_json(self) -> dict:
        return {"v": list(self.exponents), "residual": self.residual}


def euclid_quotient(a: int, b: int) -> int:
    """Quotient of a by b rounded toward zero, so a - q*b has the sign of a."""
    if b == 0:
        raise DivisionByZero("Div(a, 0)")
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b > 0) else -q


def st_decompose(g: IntMatrix, max_iter: int = 10_000) -> STWord:
    """Left-reduce g to a unit by S and T^-Div(a, c) steps."""
    if g.det() != 1:
        raise DeterminantNotOne(f"det = {g.det()}")
    gamma = g
    v: list[int] = []
    s_steps = 0
    lead_s = False
    steps = 0
    while gamma not in _TERMINAL:
        if steps >= max_iter:
            raise NonTermination(f"no reduction after {max_iter} steps")
        steps += 1
        if gamma.c == 0:
            # gamma = +-T^q
            q = gamma.b * gamma.d
            gamma = t_power(-q) @ gamma
            v.append(q)
        elif abs(gamma.a) < abs(gamma.c):
            gamma = S @ gamma
            if not v:
                lead_s = True
            s_steps += 1
        else:
            q = euclid_quotient(gamma.a, gamma.c)
            gamma = t_power(-q) @ gamma
            v.append(q)
    sign = -1 if s_steps % 2 else 1
    final = _TERMINAL[gamma]
    if final in ("-Id", "-S"):
        sign = -sign
    if final in ("S", "-S"):
        if v:
            # trailing S is absorbed as T^n_1 S T^0
            v.append(0)
        else:
            lead_s = True
    residual = ("" if sign > 0 else "-") + ("S" if lead_s else "Id")
    return STWord(tuple(v), residual)


_TERMINAL = {ID: "Id", S: "S", -ID: "-Id", -S: "-S"}


def partial_products(ns: Sequence[int]) -> list[IntMatrix]:
    """[T^n_1, T^n_2 S T^n_1, ...] for exponents in application order."""
    out = []
    cur = None
    for n in ns:
        cur = t_power(n) if cur is None else t_power(n) @ S @ cur
        out.append(cur)
    return out


def st_multiply(w: STWord) -> IntMatrix:
    prods = partial_products(w.application_order)
    body = prods[-1] if prods else ID
    return UNITS[w.residual] @ body


def convergents(ns: Sequence[int]) -> list[GaussRational]:
    """g_1(i) = n_1 + i, g_(m+1)(i) = n_(m+1) - 1/g_m(i), exponents in application order."""
    out: list[GaussRational] = []
    for n in ns:
        if not out:
            cur = n + I
        else:
            prev = out[-1]
            assert prev.im > 0
            cur = n - 1 / prev
        out.append(cur)
    return out


def path_decomposition(w: STWord) -> list[tuple[GaussRational, GaussRational]]:
    """Telescoping segments from i to g(i) through the convergents.

    Segment j joins g_j(i) to g_(j+1)(i) (with g_0(i) = i); an S in the
    residual contributes one last hop g_k(i) -> S(g_k(i)).
    """
    points = [I] + convergents(w.application_order)
    if w.residual in ("S", "-S"):
        points.append(S.apply(points[-1]))
    return list(zip(points[:-1], points[1:]))


def fraction_recurrence(ns: Sequence[int]) -> list[tuple[int, int]]:
    """(A_j, B_j) for j = 1..k from A_1 = 1, B_1 = 0 and
    A_j = B_(j-1), B_j = n_(j-1) B_(j-1) - A_(j-1).
    """
    if len(ns) < 2:
        raise ValueError("the recurrence needs at least two exponents")
    out = [(1, 0)]
    for j in range(1, len(ns)):
        a_prev, b_prev = out[-1]
        out.append((b_prev, ns[j - 1] * b_prev - a_prev))
    return out


def coprime_or_equal(a: int, b: int) -> bool:
    return gcd(a, b) == 1 or a == b or a == -b


def format_gauss(z: GaussRational) -> list[str]:
    return [str(z.re), str(z.im)]


def decomposition_json(g: IntMatrix, w: STWord) -> dict:
    out = w.to_json()
    out["matrix"] = g.tolist()
    out["segments"] = [[format_gauss(s), format_gauss(e)] for s, e in path_decomposition(w)]
    return out
