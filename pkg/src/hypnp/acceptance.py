"""Acceptance checks shared by ``hypnp selftest`` and the test suite.

Each check returns a :class:`CheckResult`; none of them raise on a
mathematical failure, so a run always reports every line.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .charsum import resonant_decomposition_check
from .errors import NewtonBelowHodgeError
from .frobenius import compare, compare_all, enumerate_tuples, precision_stable
from .hodge import duality_pairing, irregular_hodge_polygon, theta
from .padic import default_ring, gauss_sum
from .params import CharParams, HypParams, is_nonresonant, normalize
from .polytope import (
    basis_exponents,
    build_facets,
    lattice_count_volume_check,
    volume,
    wan_facet_groups,
    weight,
)


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _primes_up_to(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, p))]


def random_params(rng: random.Random, max_total: int, max_den: int, alpha_zero: bool = False,
                  nonresonant: bool = True) -> HypParams:
    """Seeded random normalized parameters with n >= m, n + m <= max_total."""
    while True:
        n = rng.randint(1, max_total - 1) if max_total > 1 else 1
        m = rng.randint(0, min(n, max_total - n))
        if n + m < 2:
            continue

        def draw():
            den = rng.randint(1, max_den)
            return Fraction(rng.randrange(den), den)

        alpha = [draw() for _ in range(n)]
        beta = [draw() for _ in range(m)]
        if alpha_zero:
            alpha[0] = Fraction(0)
        hp = normalize(alpha, beta)
        if nonresonant and not is_nonresonant(hp):
            continue
        return hp


def check_newton_equals_hodge(seed: int = 0) -> tuple[bool, str]:
    total = bad = 0
    for p in (3, 5, 7):
        for cp in enumerate_tuples(p, 1, 3, 2):
            for r in compare_all(cp, allow_small_p=True):
                total += 1
                if r.verdict != "ordinary" or r.newton_polygon != r.hodge_polygon:
                    bad += 1
    return bad == 0, f"{total - bad}/{total} fibers ordinary over p in {{3,5,7}}, n <= 3, m < n"


def check_kloosterman(seed: int = 0) -> tuple[bool, str]:
    total = bad = 0
    for p in (5, 7, 11):
        for n in (2, 3):
            cp = CharParams(p, 1, (0,) * n)
            want = tuple(Fraction(k) for k in range(n))
            for r in compare_all(cp):
                total += 1
                if r.newton_polygon is None or r.newton_polygon.slopes != want:
                    bad += 1
    return bad == 0, f"{total - bad}/{total} Kloosterman fibers have slopes 0..n-1"


def check_stickelberger(seed: int = 0) -> tuple[bool, str]:
    total = bad = 0
    for p in _primes_up_to(13):
        ring = default_ring(p, 1, 3 * (p - 1))
        for k in range(p - 1):
            total += 1
            if gauss_sum(ring, k).ord_q() != Fraction(k, p - 1):
                bad += 1
    return bad == 0, f"{total - bad}/{total} Gauss sums with ord_q = k/(p-1), p <= 13"


def check_basis_weights(seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(200):
        hp = random_params(rng, 8, 24, alpha_zero=True)
        top = hp.n + hp.m - 1
        got = sorted(top - b.weight for b in basis_exponents(hp))
        if got != sorted(theta(hp)):
            bad += 1
    return bad == 0, f"{200 - bad}/200 random parameter sets match theta via basis weights"


def check_duality(seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed + 1)
    bad = sum(not duality_pairing(random_params(rng, 8, 24)) for _ in range(500))
    return bad == 0, f"{500 - bad}/500 non-resonant samples satisfy the duality"


def check_rank_four_example(seed: int = 0) -> tuple[bool, str]:
    hp = HypParams(tuple(Fraction(0) for _ in range(4)), tuple(Fraction(k, 5) for k in range(1, 5)))
    slopes = irregular_hodge_polygon(hp).slopes
    want = tuple(Fraction(k) for k in (2, 3, 4, 5))
    return slopes == want, f"slopes {[str(s) for s in slopes]}"


def check_resonant(seed: int = 0) -> tuple[bool, str]:
    total = bad = 0
    for (n, m), p in itertools.product(((2, 1), (3, 1), (3, 2)), (3, 5, 7)):
        trivial = CharParams(p, 1, (0,) * n, (0,) * m)
        other = CharParams(p, 1, (1,) + (0,) * (n - 1), (1,) * (m - 1) + (0,))
        for cp in (trivial, other):
            for a in range(1, p):
                for ext in (1, 2):
                    total += 1
                    if not resonant_decomposition_check(cp, a, ext):
                        bad += 1
    return bad == 0, f"{total - bad}/{total} decompositions hold in W"


def check_volume(seed: int = 0) -> tuple[bool, str]:
    total = bad = 0
    for n in range(1, 5):
        for m in range(0, n + 1):
            dim = n + m - 1
            if not 1 <= dim <= 3:
                continue
            for d in (1, 2):
                total += 1
                fs = build_facets(n, m, d)
                if lattice_count_volume_check(fs, dim + 1) != volume(n, m, d):
                    bad += 1
    return bad == 0, f"{total - bad}/{total} shapes agree with the lattice count"


def check_wan(seed: int = 0) -> tuple[bool, str]:
    total = bad = 0
    for n in range(1, 6):
        for m in range(0, n):
            if not 1 <= n + m - 1 <= 4:
                continue
            for p in (3, 5, 7):
                for _, factors in wan_facet_groups(n, m, p):
                    total += 1
                    if factors != (p - 1,) * (n + m - 1):
                        bad += 1
    return bad == 0, f"{total - bad}/{total} facets with all invariant factors p-1"


def _random_cone_point(rng, fs, spread):
    while True:
        pt = tuple(rng.randint(-spread, spread) for _ in range(fs.dim))
        if fs.in_cone(pt):
            return pt


def check_properties(seed: int = 0) -> tuple[bool, str]:
    rng = random.Random(seed + 2)
    sub_bad = 0
    for _ in range(1000):
        n = rng.randint(1, 4)
        m = rng.randint(0, n)
        if n + m < 2:
            n, m = 2, 0
        fs = build_facets(n, m, rng.randint(1, 6))
        p1 = _random_cone_point(rng, fs, 3 * fs.d)
        p2 = _random_cone_point(rng, fs, 3 * fs.d)
        if weight(fs, tuple(x + y for x, y in zip(p1, p2))) > weight(fs, p1) + weight(fs, p2):
            sub_bad += 1
    below = 0
    pool = enumerate_tuples(5, 1, 3, 2) + enumerate_tuples(3, 2, 2, 1) + enumerate_tuples(7, 1, 2, 1)
    for cp in rng.sample(pool, 30):
        for a in range(1, cp.q):
            try:
                compare(cp, a, keep_traces=False)
            except NewtonBelowHodgeError:
                below += 1
    stable_bad = 0
    for _ in range(20):
        cp = rng.choice(pool)
        a = rng.randrange(1, cp.q)
        if not precision_stable(cp, a):
            stable_bad += 1
    ok = sub_bad == stable_bad == below == 0
    return ok, (f"subadditivity failures {sub_bad}/1000, Newton-below-Hodge {below}, "
                f"precision instabilities {stable_bad}/20")


CHECKS: dict[int, tuple[str, Callable[[int], tuple[bool, str]]]] = {
    1: ("Newton = Hodge at desk scale", check_newton_equals_hodge),
    2: ("Kloosterman ordinariness", check_kloosterman),
    3: ("Stickelberger valuations", check_stickelberger),
    4: ("basis weights give theta", check_basis_weights),
    5: ("Hodge duality", check_duality),
    6: ("rank-4 example Hodge slopes", check_rank_four_example),
    7: ("resonant decomposition", check_resonant),
    8: ("volume against lattice counts", check_volume),
    9: ("facet invariant factors", check_wan),
    10: ("property suites", check_properties),
}


def run_check(number: int, seed: int = 0) -> CheckResult:
    name, fn = CHECKS[number]
    start = time.perf_counter()
    try:
        passed, detail = fn(seed)
    except Exception as exc:  # report, never abort the whole run
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(number, name, passed, detail, time.perf_counter() - start)


def run_all(seed: int = 0, only=None, echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    results = []
    for number in sorted(CHECKS):
        if only and number not in only:
            continue
        res = run_check(number, seed)
        if echo:
            echo(res.line())
        results.append(res)
    return results
