"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary repeats
the per-criterion lines (see conftest.py).  ``python tests/test_acceptance.py``
runs the same checks without pytest.
"""

from __future__ import annotations

import random
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

from fuchsdecomp.accel import det_one_matrices, st_decompose_batch, RESIDUAL_NAMES
from fuchsdecomp.catalog import RegionTag, classify_point, gamma_plus, get_presentation
from fuchsdecomp.hecke import (ROOT, Divisor, counts_by_depth, degree,
                               degree_zero_basis_decomposition, enumerate_tree, hecke_reps,
                               label_matrix, recombine)
from fuchsdecomp.homology import ALPHA, BETA, GenWord, abelianize, decompose, multiply_word
from fuchsdecomp.moebius import MoebiusMap, UHPoint
from fuchsdecomp.qfield import FieldSpec
from fuchsdecomp.render import RenderSpec, render_domain
from fuchsdecomp.sl2z import (S, T, IntMatrix, STWord, convergents, coprime_or_equal,
                              fraction_recurrence, st_decompose, st_multiply)

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402

GOLDEN = Path(__file__).parent / "golden" / "e2d1D6ii_depth1.svg"
GROUP = "e2d1D6ii"


def report(n: int, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    assert ok, f"criterion {n}: {detail}"


@pytest.fixture(scope="module")
def pres():
    return get_presentation(GROUP)


def _random_word(rng: random.Random, max_len: int) -> GenWord:
    n = rng.randint(0, max_len)
    return GenWord(tuple((rng.choice((ALPHA, BETA)), rng.choice((1, -1))) for _ in range(n)))


def test_criterion_01_fuchsian_example(pres):
    K = pres.spec
    g = MoebiusMap(6 + 3 * K.sqrt_n(), 2 * K.sqrt_m(), 2 * K.sqrt_m(), 6 - 3 * K.sqrt_n())
    t0 = time.perf_counter()
    r = decompose(pres, UHPoint(K.zero(), K.one()), g)
    dt = time.perf_counter() - t0
    want = GenWord(((ALPHA, 1), (BETA, 2), (ALPHA, 1)))
    ok = ((r.coeffs.n_alpha, r.coeffs.n_beta) == (2, 2) and r.word == want
          and r.iterations == 4 and r.sign == 1 and dt < 1.0)
    report(1, ok, f"word {r.word}, coeffs ({r.coeffs.n_alpha},{r.coeffs.n_beta}), "
                  f"{r.iterations} iterations, {dt:.3f}s")


def test_criterion_02_sl2z_example():
    g = IntMatrix(3, 2, 7, 5)
    t0 = time.perf_counter()
    w = st_decompose(g)
    back = st_multiply(w)
    dt = time.perf_counter() - t0
    explicit = -S @ T ** -2 @ S @ T ** 3 @ S @ T
    ok = (w == STWord((-2, 3, 1), "-S") and back == g and explicit == g and dt < 1.0)
    report(2, ok, f"v = {list(w.exponents)}, residual {w.residual}, {dt:.3f}s")


def test_criterion_03_round_trip(pres):
    rng = random.Random(20240503)
    tau = UHPoint(pres.spec.zero(), pres.spec.one())
    t0 = time.perf_counter()
    failures = 0
    for _ in range(500):
        w = _random_word(rng, 12)
        g = multiply_word(pres, w)
        r = decompose(pres, tau, g)
        back = multiply_word(pres, r.word)
        if r.coeffs != abelianize(w) or back != (g if r.sign == 1 else -g):
            failures += 1
    dt = time.perf_counter() - t0
    report(3, failures == 0 and dt < 60, f"{500 - failures}/500 words, {dt:.2f}s")


def test_criterion_04_base_point_independence(pres):
    K = pres.spec
    taus = [UHPoint(K.zero(), K.one()), UHPoint(K(Fraction(1, 10)), K(Fraction(11, 10)))]
    assert all(classify_point(pres, t) is RegionTag.INTERIOR_F for t in taus)
    rng = random.Random(4)
    agree = 0
    for _ in range(50):
        g = multiply_word(pres, _random_word(rng, 10))
        c0, c1 = (decompose(pres, t, g).coeffs for t in taus)
        agree += c0 == c1
    report(4, agree == 50, f"{agree}/50 elements agree at two base points")


def test_criterion_05_kernel(pres):
    rng = random.Random(5)
    hits = 0
    for _ in range(100):
        w = GenWord()
        for _ in range(rng.randint(1, 3)):
            h, x, y = (_random_word(rng, 4) for _ in range(3))
            comm = x * y * x.inverse() * y.inverse()
            w = w * h * comm * h.inverse()
        r = decompose(pres, pres.domain.witness, multiply_word(pres, w))
        hits += (r.coeffs.n_alpha, r.coeffs.n_beta) == (0, 0)
    report(5, hits == 100, f"{hits}/100 conjugated commutator products map to (0,0)")


def test_criterion_06_sl2z_exhaustive():
    t0 = time.perf_counter()
    mats = det_one_matrices(10)
    bad = []
    for a, b, c, d in mats.tolist():
        g = IntMatrix(a, b, c, d)
        w = st_decompose(g)
        exps, res = oracles.euclid_columns(a, b, c, d)
        cusp = oracles.cusp_value(w.exponents, w.residual)
        want_cusp = None if c == 0 else Fraction(a, c)
        if st_multiply(w) != g or (w.exponents, w.residual) != (exps, res) or cusp != want_cusp:
            bad.append((a, b, c, d))
    e, lens, codes = st_decompose_batch(mats)
    for r, (a, b, c, d) in enumerate(mats.tolist()):
        w = st_decompose(IntMatrix(a, b, c, d))
        if tuple(e[r, :lens[r]].tolist()) != w.exponents or RESIDUAL_NAMES[codes[r]] != w.residual:
            bad.append(("batch", a, b, c, d))
    dt = time.perf_counter() - t0
    report(6, not bad and dt < 30,
           f"{len(mats)} matrices, {len(bad)} mismatches against the Euclid oracle, {dt:.2f}s")


def test_criterion_07_convergent_closed_forms():
    rng = random.Random(7)
    good = 0
    for _ in range(200):
        ns = [rng.randint(-25, 25) for _ in range(4)]
        good += convergents(ns) == oracles.closed_form_convergents(*ns)
    report(7, good == 200, f"{good}/200 exponent vectors match the closed forms")


def test_criterion_08_fraction_recurrence():
    rng = random.Random(8)
    good = 0
    for _ in range(200):
        ns = [rng.randint(-30, 30) for _ in range(rng.randint(2, 12))]
        pairs = fraction_recurrence(ns)
        good += all(coprime_or_equal(A, B) for A, B in pairs[1:])
    report(8, good == 200, f"{good}/200 vectors satisfy coprime-or-equal")


def _random_splus_points(pres, count: int, seed: int):
    K = pres.spec
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        u = Fraction(rng.randint(-1000, 1000), 1000)
        y = Fraction(rng.randint(1, 1000), 1000)
        if u * u + y * y >= 1:
            continue
        z = UHPoint(K.sqrt_m() + u, K(y))
        if classify_point(pres, z) is RegionTag.S_PLUS:
            pts.append(z)
    return pts


def test_criterion_09_gamma_plus_geometry(pres):
    pts = _random_splus_points(pres, 1000, 9)
    maps = gamma_plus(pres)
    escapes = [0] * len(maps)
    no_descent = 0
    for z in pts:
        descends = False
        for j, g in enumerate(maps):
            w = g(z)
            if classify_point(pres, w) is not RegionTag.S_PLUS:
                escapes[j] += 1
            if (w.y - z.y).sign() <= 0:
                descends = True
        no_descent += not descends
    ok = not any(escapes) and no_descent == 0
    report(9, ok, f"images outside S+ per map {escapes}; points without a "
                  f"non-increasing image: {no_descent} (of {len(pts)})")


FROZEN_COUNTS = {2: [1, 3, 7], 3: [1, 4, 13], 5: [1, 6, 31]}


def test_criterion_10_hecke_divisors():
    problems = []
    rng = random.Random(10)
    all_labels = []
    for p in (2, 3, 5):
        labels = enumerate_tree(p, 1, 2)
        counts = counts_by_depth(labels)
        reps = hecke_reps(p, 1)
        forms = [len({oracles.hnf_right_coset(label_matrix(reps, lbl).tolist())
                      for lbl in labels if lbl.depth == n}) for n in range(3)]
        if not (counts == FROZEN_COUNTS[p] == forms == oracles.hnf_counts(p, 2)):
            problems.append((p, counts, forms))
        all_labels.append(labels)
    exact = 0
    for _ in range(1000):
        labels = rng.choice(all_labels)
        support = rng.sample(labels, rng.randint(1, min(6, len(labels))))
        coeffs = {lbl: rng.randint(-9, 9) for lbl in support}
        coeffs[support[-1]] = coeffs.get(support[-1], 0) - sum(coeffs.values())
        D = Divisor(coeffs)
        assert degree(D) == 0
        x = degree_zero_basis_decomposition(D, ROOT)
        exact += recombine(x, ROOT) == D and all(k == D[lbl] for lbl, k in x.items())
    report(10, not problems and exact == 1000,
           f"counts {[FROZEN_COUNTS[p] for p in (2, 3, 5)]} "
           f"{'match' if not problems else f'differ {problems}'}; {exact}/1000 divisors exact")


def _near_zero_element(rng: random.Random, K: FieldSpec):
    b, c, d = (Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3))
    with mpmath.workdps(60):
        approx = -(b * mpmath.sqrt(K.m) + c * mpmath.sqrt(K.n) + d * mpmath.sqrt(K.mn))
        den = rng.choice((1, 7, 10**6, 10**12, 10**18))
        a = Fraction(int(mpmath.nint(approx * den)), den)
    return K(a, b, c, d)


def test_criterion_11_field_arithmetic():
    rng = random.Random(11)
    fields = [FieldSpec(2, 3), FieldSpec(2, 5), FieldSpec(3, 7), FieldSpec(5, 13)]
    mism = 0
    for k in range(10_000):
        K = fields[k % len(fields)]
        if k % 2:
            x = _near_zero_element(rng, K)
        else:
            x = K(*(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4)) for _ in range(4)))
        mism += x.sign() != oracles.numeric_sign(x.coords, K.radicands, 100)
    axiom_fail = 0
    for k in range(300):
        K = fields[k % len(fields)]
        x, y, z = (K(*(Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(4)))
                   for _ in range(3))
        checks = [x + y == y + x, x * y == y * x, (x + y) + z == x + (y + z),
                  (x * y) * z == x * (y * z), x * (y + z) == x * y + x * z,
                  x + K.zero() == x, x * K.one() == x, (x - x).is_zero()]
        if not x.is_zero():
            checks.append(x * x.inverse() == K.one())
        axiom_fail += not all(checks)
    report(11, mism == 0 and axiom_fail == 0,
           f"{10_000 - mism}/10000 signs agree with 100-digit evaluation; "
           f"{300 - axiom_fail}/300 axiom triples hold")


def test_criterion_12_rendering():
    a = render_domain(RenderSpec(group=GROUP, translate_depth=1))
    b = render_domain(RenderSpec(group=GROUP, translate_depth=1))
    golden = GOLDEN.read_text(encoding="utf-8")
    tol = mpmath.mpf("1e-20")
    with mpmath.workdps(50):
        s2, s6 = mpmath.sqrt(2), mpmath.sqrt(6)
        circles = re.findall(r'class="isometry-circle"[^>]*data-center="([^"]+)" data-radius="([^"]+)"', a)
        centers = sorted(mpmath.mpf(c) for c, _ in circles)
        radii = [mpmath.mpf(r) for _, r in circles]
        strips = sorted(mpmath.mpf(r) for r in re.findall(r'class="strip-arc"[^>]*data-radius="([^"]+)"', a))
        ok_geom = (len(centers) == 2 and abs(centers[0] + s2) < tol and abs(centers[1] - s2) < tol
                   and all(abs(r - 1) < tol for r in radii) and len(strips) == 2
                   and abs(strips[0] - (s6 - s2) / 2) < tol and abs(strips[1] - (s6 + s2) / 2) < tol)
    ok = ok_geom and a == b == golden
    report(12, ok, f"circles and strip radii within 1e-20: {ok_geom}; "
                   f"byte-identical runs: {a == b}; golden match: {a == golden}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
