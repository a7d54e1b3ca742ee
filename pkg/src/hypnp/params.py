"""Hypergeometric parameter data.

Parameters are rational numbers taken modulo Z.  Everything downstream
assumes the canonical form produced by :func:`normalize`: representatives
in ``[0, 1)``, each sequence sorted, and ``len(alpha) >= len(beta)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError, InvalidShapeError

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise DomainError(f"not a rational number: {x!r}") from exc
    raise DomainError(f"cannot interpret {x!r} as a rational number")


def frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Parse ``"0,1/2"`` (empty string means the empty sequence)."""
    text = text.strip()
    if not text:
        return ()
    return tuple(as_rational(tok) for tok in text.split(","))


@dataclass(frozen=True)
class HypParams:
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        alpha = tuple(as_rational(a) for a in self.alpha)
        beta = tuple(as_rational(b) for b in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if not alpha:
            raise InvalidShapeError("alpha must be non-empty")
        if len(alpha) < len(beta):
            raise InvalidShapeError("need n >= m (len(alpha) >= len(beta))")
        for x in alpha + beta:
            if not 0 <= x < 1:
                raise DomainError(f"parameter {x} not in [0, 1); use normalize()")
        if list(alpha) != sorted(alpha) or list(beta) != sorted(beta):
            raise DomainError("parameters must be sorted; use normalize()")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def m(self) -> int:
        return len(self.beta)

    @property
    def dim(self) -> int:
        """Ambient dimension n + m - 1 of the torus carrying the Laurent polynomial."""
        return self.n + self.m - 1

    def common_denominator(self) -> int:
        return math.lcm(*(x.denominator for x in self.alpha + self.beta))

    def to_json(self) -> dict:
        return {
            "alpha": [rational_str(a) for a in self.alpha],
            "beta": [rational_str(b) for b in self.beta],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HypParams":
        return normalize(data.get("alpha", []), data.get("beta", []))

    def __str__(self):
        a = ", ".join(str(x) for x in self.alpha)
        b = ", ".join(str(x) for x in self.beta)
        return f"HypParams(alpha=({a}), beta=({b}))"


def load_params(path) -> HypParams:
    with open(path) as fh:
        return HypParams.from_json(json.load(fh))


def normalize(alpha_raw: Iterable, beta_raw: Iterable = ()) -> HypParams:
    """Reduce both sequences mod Z into ``[0, 1)`` and sort them.

    The longer sequence is labelled ``alpha``.

    >>> normalize(["7/5", 0], ["9/5"])
    HypParams(alpha=(Fraction(0, 1), Fraction(2, 5)), beta=(Fraction(4, 5),))
    """
    alpha = sorted(frac_part(as_rational(a)) for a in alpha_raw)
    beta = sorted(frac_part(as_rational(b)) for b in beta_raw)
    if len(alpha) < len(beta):
        alpha, beta = beta, alpha
    if not alpha:
        raise InvalidShapeError("need at least one parameter")
    return HypParams(tuple(alpha), tuple(beta))


def is_nonresonant(hp: HypParams) -> bool:
    return not set(hp.alpha) & set(hp.beta)


def conjugate(hp: HypParams) -> HypParams:
    """The conjugate pair realizing the Hodge-number duality.

    Zeros of alpha stay zero; every nonzero alpha_i becomes 1 - alpha_i
    (the index reversal only matters before re-sorting).  beta_j becomes
    the fractional part of 1 - beta_j, so a zero beta stays zero.
    """
    n = hp.n
    t = sum(1 for a in hp.alpha if a == 0)
    # alpha is sorted, so its zeros are exactly the first t entries
    abar = [Fraction(0)] * t + [1 - hp.alpha[n + t - k] for k in range(t + 1, n + 1)]
    bbar = [frac_part(1 - b) for b in hp.beta]
    return HypParams(tuple(sorted(abar)), tuple(sorted(bbar)))


def frobenius_twist(hp: HypParams, prime: int) -> HypParams:
    """Multiply every parameter by ``prime`` modulo Z."""
    return normalize([prime * a for a in hp.alpha], [prime * b for b in hp.beta])


def resonant_convention(hp: HypParams) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Parameters in ``(0, 1]``: zeros replaced by 1, then sorted.

    Used only by the resonant decomposition, where trivial characters are
    expected at the end of each sequence.
    """
    alpha = tuple(sorted(a if a else Fraction(1) for a in hp.alpha))
    beta = tuple(sorted(b if b else Fraction(1) for b in hp.beta))
    return alpha, beta


@dataclass(frozen=True)
class CharParams:
    """Multiplicative character data ``chi_i = omega^{a_i}``, ``rho_j = omega^{b_j}``.

    ``omega`` is the Teichmueller character of ``F_q``, ``q = p**s``.  The
    exponent tuples are stored sorted so that equal character multisets
    compare equal.
    """

    p: int
    s: int
    a_exps: tuple[int, ...]
    b_exps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.p < 2 or not _is_prime(self.p):
            raise DomainError(f"p={self.p} is not prime")
        if self.s < 1:
            raise DomainError("s must be positive")
        q1 = self.q - 1
        a = tuple(sorted(int(x) for x in self.a_exps))
        b = tuple(sorted(int(x) for x in self.b_exps))
        if not a:
            raise InvalidShapeError("need n >= 1")
        if len(a) < len(b):
            raise InvalidShapeError("need n >= m")
        for x in a + b:
            if not 0 <= x < q1 or (q1 == 1 and x != 0):
                raise DomainError(f"exponent {x} outside [0, q-2] for q={self.q}")
        object.__setattr__(self, "a_exps", a)
        object.__setattr__(self, "b_exps", b)

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def n(self) -> int:
        return len(self.a_exps)

    @property
    def m(self) -> int:
        return len(self.b_exps)

    @property
    def hyp(self) -> HypParams:
        q1 = self.q - 1
        return HypParams(
            tuple(Fraction(a, q1) for a in self.a_exps),
            tuple(Fraction(b, q1) for b in self.b_exps),
        )

    def orders_divide_p_minus_1(self) -> bool:
        """True when every character factors through the norm to ``F_p``."""
        step = (self.q - 1) // (self.p - 1)
        return all(x % step == 0 for x in self.a_exps + self.b_exps)

    @classmethod
    def from_hyp(cls, hp: HypParams, p: int, s: int = 1) -> "CharParams":
        q1 = p**s - 1
        exps = []
        for seq in (hp.alpha, hp.beta):
            row = []
            for x in seq:
                y = x * q1
                if y.denominator != 1:
                    raise DomainError(f"denominator of {x} does not divide {q1}")
                row.append(int(y))
            exps.append(tuple(row))
        return cls(p, s, exps[0], exps[1])

    def to_json(self) -> dict:
        return {"p": self.p, "s": self.s, "aexps": list(self.a_exps), "bexps": list(self.b_exps)}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def is_prime(n: int) -> bool:
    return _is_prime(n)


def denominators_divide(hp: HypParams, modulus: int) -> bool:
    return all(modulus % x.denominator == 0 for x in hp.alpha + hp.beta)

