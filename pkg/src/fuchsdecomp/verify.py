"""Quick invariant self-checks run by ``fuchsdecomp verify``."""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

from .accel import active_backend, det_one_matrices, st_decompose_batch
from .catalog import BUILTINS, RegionTag, classify_point, gamma_plus, validate_presentation
from .hecke import counts_by_depth, enumerate_tree
from .homology import ALPHA, BETA, GenWord, decompose, multiply_word
from .qfield import FieldSpec
from .sl2z import IntMatrix, st_decompose, st_multiply


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str


def _field_axioms() -> str:
    K = FieldSpec(2, 3)
    x = K(1, 2, -1, 3)
    y = K(0, 1, 1, 0)
    assert x * x.inverse() == K.one()
    assert (x + y) * y == x * y + y * y
    assert (K.sqrt_mn() - K.sqrt_m() * K.sqrt_n()).is_zero()
    return "inverse, distributivity, sqrt(m)sqrt(n) = sqrt(mn)"


def _presentations() -> str:
    for name, make in BUILTINS.items():
        v = validate_presentation(make())
        assert v is None, f"{name}: {v}"
    return f"{len(BUILTINS)} builtin(s) valid"


def _fuchsian_round_trip(seed: int = 7, count: int = 40) -> str:
    p = BUILTINS["e2d1D6ii"]()
    rng = random.Random(seed)
    tau = p.domain.witness
    for _ in range(count):
        letters = tuple((rng.choice((ALPHA, BETA)), rng.choice((-2, -1, 1, 2)))
                        for _ in range(rng.randint(0, 6)))
        g = multiply_word(p, GenWord(letters))
        r = decompose(p, tau, g)
        back = multiply_word(p, r.word)
        assert back == g or -back == g
        assert (back == g) == (r.sign == 1) or g.is_central()
    return f"{count} random words reconstructed"


def _gamma_plus_lands_in_splus() -> str:
    p = BUILTINS["e2d1D6ii"]()
    tau = p.domain.witness
    for g in gamma_plus(p):
        assert classify_point(p, g(tau)) is RegionTag.S_PLUS
    return "gamma(F) inside S+ for the five generators"


def _sl2z_exhaustive(bound: int = 6) -> str:
    mats = det_one_matrices(bound)
    for a, b, c, d in mats.tolist():
        g = IntMatrix(a, b, c, d)
        assert st_multiply(st_decompose(g)) == g
    exps, lens, codes = st_decompose_batch(mats)
    ref = st_decompose_batch(mats, backend="python")
    assert (lens == ref[1]).all() and (codes == ref[2]).all() and (exps == ref[0]).all()
    return f"{len(mats)} matrices with |entries| <= {bound}, backend {active_backend()}"


def _hecke_counts() -> str:
    for p in (2, 3, 5):
        got = counts_by_depth(enumerate_tree(p, 1, 2))
        want = [sum(p**k for k in range(n + 1)) for n in range(3)]
        assert got == want, (p, got, want)
    return "coset counts equal sigma(p^n) for p = 2, 3, 5"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("field-axioms", _field_axioms),
    ("presentations", _presentations),
    ("fuchsian-round-trip", _fuchsian_round_trip),
    ("gamma-plus-generators", _gamma_plus_lands_in_splus),
    ("sl2z-exhaustive", _sl2z_exhaustive),
    ("hecke-counts", _hecke_counts),
]


def run_checks() -> list[Check]:
    out = []
    for name, fn in CHECKS:
        try:
            out.append(Check(name, True, fn()))
        except Exception as exc:  # report, do not abort the remaining checks
            out.append(Check(name, False, f"{type(exc).__name__}: {exc}"))
    return out
