"""Small finite fields with discrete-log, trace and norm tables.

Elements of F_{p^k} = F_p[x]/(modulus) are encoded as integers
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``; zero encodes to 0.  The modulus is
the lexicographically smallest monic irreducible polynomial of degree k
and the generator is the smallest encoded primitive element, so every
table is reproducible run to run.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DomainError, ResourceError
from .params import is_prime

DEFAULT_BUDGET = 10**6


def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mulmod(f, g, mod, p):
    """(f * g) mod (mod, p) for coefficient lists (low degree first, mod monic)."""
    k = len(mod) - 1
    prod = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] = (prod[i + j] + a * b) % p
    for top in range(len(prod) - 1, k - 1, -1):
        c = prod[top]
        if c:
            for i in range(k + 1):
                prod[top - k + i] = (prod[top - k + i] - c * mod[i]) % p
    return (prod + [0] * k)[:k]


def poly_powmod(f, e, mod, p):
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    base = (list(f) + [0] * k)[:k]
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_divmod(f, g, p):
    f = _trim(f)
    g = _trim(g)
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 1)
    while len(f) >= len(g) and f:
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        f = _trim(f)
    return q, f


def _poly_gcd(f, g, p):
    f, g = _trim(f), _trim(g)
    while g:
        _, r = _poly_divmod(f, g, p)
        f, g = g, r
    return f


def is_irreducible(f, p) -> bool:
    """Rabin-style test: no common factor with x^(p^i) - x for i <= deg/2."""
    f = _trim(f)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1] + [0] * (k - 2)
    h = x
    for _ in range(k // 2):
        h = poly_powmod(h, p, f, p)
        diff = list(h)
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(f, diff, p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over F_p, low degree first."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FqField:
    """The field F_{p^degree} with full exp/log tables."""

    def __init__(self, p: int, degree: int = 1, budget: int = DEFAULT_BUDGET):
        if not is_prime(p):
            raise DomainError(f"p={p} is not prime")
        if degree < 1:
            raise DomainError("degree must be positive")
        q = p**degree
        if q > budget:
            raise ResourceError(f"field of size {q} exceeds the budget {budget}")
        self.p = p
        self.degree = degree
        self.q = q
        self.modulus = smallest_irreducible(p, degree)
        self.powers_of_p = np.array([p**i for i in range(degree)], dtype=np.int64)
        self.generator = self._find_generator()
        self._build_tables()

    def __repr__(self):
        return f"FqField(p={self.p}, degree={self.degree}, generator={self.generator})"

    # encoding helpers -------------------------------------------------
    def decode(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.degree)]

    def encode(self, coeffs) -> int:
        return sum(int(c) % self.p * self.p**i for i, c in enumerate(coeffs))

    def _find_generator(self) -> int:
        p, k, q = self.p, self.degree, self.q
        factors = _prime_factors(q - 1)
        for code in range(2 if q > 2 else 1, q):
            g = self.decode(code)
            if all(poly_powmod(g, (q - 1) // r, self.modulus, p) != [1] + [0] * (k - 1)
                   for r in factors):
                return code
        raise AssertionError("no primitive element found")  # cannot happen

    def _build_tables(self):
        p, k, q = self.p, self.degree, self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        g = self.decode(self.generator)
        cur = [1] + [0] * (k - 1)
        for i in range(q - 1):
            exp[i] = self.encode(cur)
            cur = poly_mulmod(cur, g, self.modulus, p)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        self.exp = exp
        self.log = log
        self.digits = (np.arange(q, dtype=np.int64)[:, None] // self.powers_of_p) % p
        # Tr(g^l) = sum_i g^(l p^i); the trace is F_p-valued, so only digit 0 survives
        idx = np.arange(q - 1, dtype=np.int64)
        acc = np.zeros((q - 1, k), dtype=np.int64)
        for i in range(k):
            acc += self.digits[exp[(idx * p**i) % (q - 1)]]
        acc %= p
        if k > 1 and acc[:, 1:].any():
            raise AssertionError("trace left F_p")
        self.trace_by_log = acc[:, 0].copy()

    # arithmetic ---------------------------------------------------------
    def add(self, x: int, y: int) -> int:
        return int(((self.digits[x] + self.digits[y]) % self.p) @ self.powers_of_p)

    def neg(self, x: int) -> int:
        return int(((-self.digits[x]) % self.p) @ self.powers_of_p)

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(self.log[x] + self.log[y]) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.exp[(-self.log[x]) % (self.q - 1)])

    def power(self, x: int, e: int) -> int:
        if x == 0:
            return 0 if e else 1
        return int(self.exp[(self.log[x] * e) % (self.q - 1)])

    def trace(self, x: int) -> int:
        if x == 0:
            return 0
        return int(self.trace_by_log[self.log[x]])

    def nonzero(self):
        return range(1, self.q)

    # subfields --------------------------------------------------------------
    def embedding(self, sub: "FqField") -> np.ndarray:
        """Array mapping encoded elements of ``sub`` to encoded elements of self.

        The image of sub's variable is the root of sub.modulus with the
        smallest discrete log in self.
        """
        if sub.p != self.p or self.degree % sub.degree:
            raise DomainError(f"{sub} is not a subfield of {self}")
        if sub.degree == 1:
            return np.arange(sub.q, dtype=np.int64)
        step = (self.q - 1) // (sub.q - 1)
        root = None
        for j in range(sub.q - 1):
            r = int(self.exp[j * step])
            if self._eval(sub.modulus, r) == 0:
                root = r
                break
        if root is None:
            raise AssertionError("subfield modulus has no root")  # cannot happen
        powers = [1]
        for _ in range(sub.degree - 1):
            powers.append(self.mul(powers[-1], root))
        out = np.zeros(sub.q, dtype=np.int64)
        for code in range(sub.q):
            acc = 0
            for c, rp in zip(sub.decode(code), powers):
                for _ in range(c):
                    acc = self.add(acc, rp)
            out[code] = acc
        return out

    def _eval(self, coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = self.mul(acc, x)
            for _ in range(c % self.p):
                acc = self.add(acc, 1)
        return acc

    def norm_log_factor(self, sub: "FqField") -> int:
        """e with log_{sub.generator}(Nm(x)) = e * log(x) mod (|sub| - 1)."""
        emb = self.embedding(sub)
        step = (self.q - 1) // (sub.q - 1)
        lg = int(self.log[emb[sub.generator]])  # = L' * step
        assert lg % step == 0
        return pow(lg // step, -1, sub.q - 1) if sub.q > 2 else 0

    def norm(self, x: int, sub: "FqField") -> int:
        """Norm to ``sub``, returned in sub's encoding."""
        if x == 0:
            return 0
        e = self.norm_log_factor(sub)
        return int(sub.exp[(e * int(self.log[x])) % (sub.q - 1)])


@lru_cache(maxsize=32)
def build_field(p: int, degree: int = 1, budget: int = DEFAULT_BUDGET) -> FqField:
    return FqField(p, degree, budget)
