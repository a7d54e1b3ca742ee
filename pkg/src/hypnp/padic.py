"""Truncated arithmetic in W = Z_q[pi] / (pi^(p-1) + p).

Z_q = Z_p[y]/(modulus) is the unramified extension of degree s, the
modulus being the integer lift of the polynomial that defines F_q.  An
element is a grid ``c[i][j]`` (coefficient of pi^i y^j, 0 <= i < p-1,
0 <= j < s) together with a pi-adic precision M: the element is known
modulo pi^M, so the coefficient of pi^i is known modulo
p^ceil((M - i)/(p - 1)).

Valuations are reported as ord_q = ord_pi / (s (p - 1)), so that
ord_q(q) = 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import DomainError, PrecisionError
from .fields import poly_powmod


def _vp(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of 0")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class PadicRing:
    """Handle for W at a fixed prime, unramified degree and precision."""

    def __init__(self, p: int, s: int = 1, precision: int = 40, modulus=None):
        if precision < 1:
            raise DomainError("precision must be positive")
        self.p = p
        self.s = s
        self.e = p - 1
        self.precision = precision
        if modulus is None:
            if s != 1:
                raise DomainError("an unramified modulus is required for s > 1")
            modulus = (0, 1)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise DomainError("modulus must be monic of degree s")
        self.modulus = modulus

    def __repr__(self):
        return f"PadicRing(p={self.p}, s={self.s}, precision={self.precision})"

    def __eq__(self, other):
        return (isinstance(other, PadicRing) and self.p == other.p and self.s == other.s
                and self.precision == other.precision and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.s, self.precision, self.modulus))

    def digits(self, i: int, prec: int | None = None) -> int:
        """p-adic digits kept for the coefficient of pi^i."""
        prec = self.precision if prec is None else prec
        return max(0, -(-(prec - i) // self.e))

    def with_precision(self, precision: int) -> "PadicRing":
        return PadicRing(self.p, self.s, precision, self.modulus)

    # Z_q helpers ---------------------------------------------------------
    def zq_mul(self, a, b):
        s = self.s
        if s == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.modulus
        for top in range(2 * s - 2, s - 1, -1):
            c = prod[top]
            if c:
                for i in range(s):
                    prod[top - s + i] -= c * mod[i]
        return tuple(prod[:s])

    def zq_reduce(self, a, modulus):
        return tuple(x % modulus for x in a)

    # constructors --------------------------------------------------------
    def element(self, coeffs, precision=None) -> "PadicElement":
        return PadicElement(self, coeffs, self.precision if precision is None else precision)

    def zero(self) -> "PadicElement":
        return self.from_int(0)

    def one(self) -> "PadicElement":
        return self.from_int(1)

    def from_int(self, k: int) -> "PadicElement":
        return self.from_zq((k,) + (0,) * (self.s - 1))

    def from_zq(self, a) -> "PadicElement":
        zero = (0,) * self.s
        return self.element([tuple(a)] + [zero] * (self.e - 1))

    @cached_property
    def pi(self) -> "PadicElement":
        if self.e == 1:
            return self.from_int(-self.p)
        zero = (0,) * self.s
        one = (1,) + (0,) * (self.s - 1)
        return self.element([zero, one] + [zero] * (self.e - 2))

    def pi_power(self, k: int) -> "PadicElement":
        return self.pi**k

    # distinguished elements -----------------------------------------------
    def teichmuller(self, residue) -> "PadicElement":
        """Teichmueller lift of a nonzero residue given as F_q coordinates.

        ``residue`` is the coefficient list of an element of
        F_p[y]/(modulus mod p) (an int is accepted when s = 1).  The lift is
        the limit of t -> t^q, which gains one p-adic digit per step.
        """
        if isinstance(residue, int):
            residue = [residue]
        res = [int(c) % self.p for c in residue] + [0] * self.s
        res = tuple(res[: self.s])
        if not any(res):
            raise DomainError("the Teichmueller lift of 0 is not a unit")
        k = self.digits(0)
        mod = self.p**k
        q = self.p**self.s
        t = res
        for _ in range(k + 2):
            nxt = self._zq_pow(t, q, mod)
            if nxt == t:
                break
            t = nxt
        else:  # pragma: no cover - t^q iteration converges in k steps
            raise AssertionError("Teichmueller iteration did not converge")
        return self.from_zq(t)

    def _zq_pow(self, a, e, mod):
        result = (1,) + (0,) * (self.s - 1)
        base = self.zq_reduce(a, mod)
        while e:
            if e & 1:
                result = self.zq_reduce(self.zq_mul(result, base), mod)
            base = self.zq_reduce(self.zq_mul(base, base), mod)
            e >>= 1
        return result

    @cached_property
    def zeta_p(self) -> "PadicElement":
        """The primitive p-th root of unity congruent to 1 + pi mod pi^2.

        Writes zeta = 1 + pi*u and runs Newton's method on
        h(u) = ((1 + pi u)^p - 1) / (p pi u), whose derivative is a unit.
        """
        p = self.p
        if self.precision < 2 and p > 2:
            raise PrecisionError("zeta_p needs precision >= 2", required=2)
        pi = self.pi
        mid = [Fraction(math.comb(p, k), p) for k in range(2, p)]
        mid = [int(c) for c in mid]  # C(p, k) / p is an integer for 1 < k < p
        u = self.one()
        for _ in range(2 * self.precision.bit_length() + 4):
            h = self.one() - u ** (p - 1)
            dh = self.from_int(-(p - 1)) * u ** (p - 2) if p > 2 else self.from_int(-1)
            upow = self.one()
            pipow = self.one()
            for k, c in enumerate(mid, start=2):
                # term c * pi^(k-1) * u^(k-1)
                pipow = pipow * pi
                dh = dh + pipow * upow * (c * (k - 1))
                upow = upow * u
                h = h + pipow * upow * c
            step = h * dh.inverse()
            if step.is_zero():
                break
            u = u - step
        else:  # pragma: no cover
            raise AssertionError("Newton iteration for zeta_p did not converge")
        zeta = self.one() + pi * u
        assert (zeta**p - self.one()).is_zero()
        return zeta

    def psi(self, t: int) -> "PadicElement":
        """Additive character of F_p: t -> zeta_p^t."""
        return self.zeta_p ** (int(t) % self.p)

    # batch evaluation of group-ring forms ---------------------------------
    def character_table(self, zeta_d: "PadicElement", d: int) -> np.ndarray:
        """Object array (p * d, e * s) with the coefficients of zeta_p^t zeta_d^c."""
        key = (zeta_d.coeffs, d)
        cache = self.__dict__.setdefault("_char_tables", {})
        if key in cache:
            return cache[key]
        zp = [self.one()]
        for _ in range(self.p - 1):
            zp.append(zp[-1] * self.zeta_p)
        zd = [self.one()]
        for _ in range(d - 1):
            zd.append(zd[-1] * zeta_d)
        rows = []
        for t in range(self.p):
            for c in range(d):
                rows.append([x for row in (zp[t] * zd[c]).coeffs for x in row])
        table = np.array(rows, dtype=object)
        cache[key] = table
        return table

    def evaluate_group_ring(self, counts: np.ndarray, zeta_d: "PadicElement") -> "PadicElement":
        """sum_{t, c} counts[t, c] * zeta_p^t * zeta_d^c for an integer array (p, d)."""
        counts = np.asarray(counts)
        p, d = counts.shape
        table = self.character_table(zeta_d, d)
        flat = np.array([int(x) for x in counts.reshape(-1)], dtype=object)
        coeffs = flat @ table
        grid = [tuple(coeffs[i * self.s:(i + 1) * self.s]) for i in range(self.e)]
        return self.element(grid)


class PadicElement:
    """Value-semantic element of a :class:`PadicRing`."""

    __slots__ = ("ring", "coeffs", "precision")

    def __init__(self, ring: PadicRing, coeffs, precision: int):
        self.ring = ring
        precision = min(precision, ring.precision)
        self.precision = precision
        rows = [tuple(int(x) for x in row) for row in coeffs]
        if len(rows) != ring.e or any(len(r) != ring.s for r in rows):
            raise DomainError("coefficient grid has the wrong shape")
        p = ring.p
        self.coeffs = tuple(
            tuple(x % p ** ring.digits(i, precision) for x in row) for i, row in enumerate(rows)
        )

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, PadicElement):
            return NotImplemented
        if other.ring.p != self.ring.p or other.ring.s != self.ring.s \
                or other.ring.modulus != self.ring.modulus:
            raise DomainError("elements belong to different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        coeffs = [tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(self.coeffs, other.coeffs)]
        return PadicElement(self.ring, coeffs, min(self.precision, other.precision))

    __radd__ = __add__

    def __neg__(self):
        return PadicElement(self.ring, [tuple(-x for x in r) for r in self.coeffs], self.precision)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        ring = self.ring
        if isinstance(other, int):
            return PadicElement(ring, [tuple(other * x for x in r) for r in self.coeffs], self.precision)
        other = self._check(other)
        if other is NotImplemented:
            return other
        e, s, p = ring.e, ring.s, ring.p
        acc = [[0] * s for _ in range(e)]
        for i, a in enumerate(self.coeffs):
            if not any(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not any(b):
                    continue
                prod = ring.zq_mul(a, b)
                k = i + j
                if k >= e:
                    # pi^e = -p
                    k -= e
                    prod = tuple(-p * x for x in prod)
                row = acc[k]
                for t in range(s):
                    row[t] += prod[t]
        return PadicElement(ring, acc, min(self.precision, other.precision))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("PadicElement is not hashable")

    def __repr__(self):
        return f"PadicElement({[list(r) for r in self.coeffs]}, precision={self.precision})"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.coeffs)

    def ord_pi(self) -> int:
        ring = self.ring
        best = None
        for i, row in enumerate(self.coeffs):
            nz = [x for x in row if x]
            if nz:
                v = i + ring.e * min(_vp(x, ring.p) for x in nz)
                best = v if best is None else min(best, v)
        if best is None:
            raise PrecisionError(
                f"element is zero to pi-adic precision {self.precision}",
                required=2 * max(self.precision, 1),
            )
        return best

    def ord_q(self) -> Fraction:
        return Fraction(self.ord_pi(), self.ring.s * self.ring.e)

    def is_unit(self) -> bool:
        return any(x % self.ring.p for x in self.coeffs[0])

    def inverse(self) -> "PadicElement":
        """Inverse of a unit, by Newton iteration y <- y (2 - x y)."""
        ring = self.ring
        if not self.is_unit():
            raise DomainError("only units are invertible in W")
        p, s = ring.p, ring.s
        c0 = [x % p for x in self.coeffs[0]]
        if s == 1:
            inv0 = (pow(c0[0], -1, p),)
        else:
            mod_p = [c % p for c in ring.modulus]
            inv0 = tuple(poly_powmod(c0, p**s - 2, mod_p, p))
        y = PadicElement(ring, [inv0] + [(0,) * s] * (ring.e - 1), self.precision)
        two = ring.from_int(2)
        known = 1  # pi-adic digits of y that are correct
        while known < self.precision:
            y = y * (two - self * y)
            known *= 2
        return y

    def div_int(self, k: int) -> "PadicElement":
        """Exact division by a nonzero integer; each factor p costs p-1 digits."""
        if k == 0:
            raise ZeroDivisionError("division by 0")
        ring = self.ring
        p = ring.p
        v = _vp(k, p)
        unit = k // p**v
        x = self
        for _ in range(v):
            if any(c % p for row in x.coeffs for c in row):
                raise PrecisionError("element is not divisible by p to the known precision")
            new_prec = x.precision - ring.e
            if new_prec < 1:
                raise PrecisionError("precision exhausted by division by p",
                                     required=ring.precision + ring.e)
            x = PadicElement(ring, [tuple(c // p for c in row) for row in x.coeffs], new_prec)
        inv = pow(unit, -1, p ** ring.digits(0, x.precision)) if x.precision > 0 else 0
        return x * inv

    def to_json(self) -> dict:
        return {"pi_coeffs": [list(r) for r in self.coeffs], "precision": self.precision}


def teichmuller_generator(ring: PadicRing) -> PadicElement:
    """omega(g) for the fixed generator g of F_q: a primitive (q-1)-th root of unity."""
    from .fields import build_field

    cache = ring.__dict__.setdefault("_omega_g", {})
    if "g" not in cache:
        field = build_field(ring.p, ring.s)
        if field.modulus != ring.modulus:
            raise DomainError("ring modulus does not match the field of the characters")
        cache["g"] = ring.teichmuller(field.decode(field.generator))
    return cache["g"]


@lru_cache(maxsize=128)
def default_ring(p: int, s: int = 1, precision: int = 40) -> PadicRing:
    """Shared ring over the modulus of build_field(p, s); caches survive across calls."""
    from .fields import smallest_irreducible

    return PadicRing(p, s, precision, smallest_irreducible(p, s))


def gauss_sum(ring: PadicRing, k: int, ext: int = 1) -> PadicElement:
    """G(psi, omega^{-k}) over F_{q^ext}, with omega^{-k} composed with the norm to F_q."""
    from .fields import build_field

    q = ring.p**ring.s
    if not 0 <= k <= q - 2 and not (q == 2 and k == 0):
        raise DomainError(f"k must lie in [0, {q - 2}]")
    base = build_field(ring.p, ring.s)
    big = build_field(ring.p, ring.s * ext)
    e = 1 if ext == 1 else big.norm_log_factor(base)
    logs = np.arange(big.q - 1, dtype=np.int64)
    counts = np.zeros((ring.p, q - 1), dtype=np.int64)
    np.add.at(counts, (big.trace_by_log, (-k * e * logs) % (q - 1)), 1)
    return ring.evaluate_group_ring(counts, teichmuller_generator(ring))
