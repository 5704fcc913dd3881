"""Exact arithmetic in Z[zeta_m] and the group of fourth roots of unity.

A ``CycElem`` of order m is an integer vector of length phi(m) in the power
basis of Z[x]/(Phi_m).  Reduction modulo Phi_m makes the representation
canonical, so equality is coefficient equality.  Elements of different
orders are combined in order lcm(m1, m2).
"""

from __future__ import annotations

import cmath
import functools
import math
import sys
from dataclasses import dataclass
from typing import Sequence

# Per-unit-coefficient error of cyc_embed, in units of machine epsilon:
# angle reduced into [-pi, pi] (< 4 ulp of pi), cos/sin (< 1 ulp),
# one product rounding, then fsum rounds the total once.
EMBED_ERROR_CONSTANT = 16


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Quotient of integer polynomials when den is monic and divides num."""
    num = list(num)
    n = len(den) - 1
    quot = [0] * (len(num) - n)
    for k in range(len(num) - 1, n - 1, -1):
        c = num[k]
        quot[k - n] = c
        if c:
            for j in range(n + 1):
                num[k - n + j] -= c * den[j]
    assert not any(num), "inexact cyclotomic division"
    return quot


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m as little-endian integer coefficients."""
    if m < 1:
        raise ValueError(f"root-of-unity order must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(coeffs: Sequence[int], m: int) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(m)
    n = len(phi) - 1
    # x^m = 1 first, then division by the monic Phi_m
    folded = [0] * max(m, 1)
    for k, c in enumerate(coeffs):
        folded[k % m] += c
    for k in range(len(folded) - 1, n - 1, -1):
        c = folded[k]
        if c:
            shift = k - n
            for j in range(n + 1):
                folded[shift + j] -= c * phi[j]
    out = folded[:n] + [0] * (n - len(folded[:n]))
    return tuple(out)


class CycElem:
    """An element of Z[zeta_m]."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence[int] = ()) -> None:
        self.m = m
        self.coeffs = _reduce([int(c) for c in coeffs], m)

    @classmethod
    def from_int(cls, n: int, m: int = 1) -> CycElem:
        return cls(m, [n])

    @classmethod
    def from_exponent_counts(cls, m: int, counts: Sequence[int]) -> CycElem:
        """sum_k counts[k] * zeta_m^k."""
        return cls(m, counts)

    def __repr__(self) -> str:
        return f"CycElem({self.m}, {list(self.coeffs)})"

    def lift(self, order: int) -> CycElem:
        """The same element written in Z[zeta_order]; m must divide order."""
        if order % self.m:
            raise ValueError(f"cannot lift order {self.m} to {order}")
        step = order // self.m
        spread = [0] * (step * len(self.coeffs))
        for j, c in enumerate(self.coeffs):
            spread[j * step] = c
        return CycElem(order, spread)

    def _common(self, other) -> tuple[CycElem, CycElem] | None:
        if isinstance(other, int):
            other = CycElem.from_int(other, self.m)
        elif not isinstance(other, CycElem):
            return None
        if other.m == self.m:
            return self, other
        order = math.lcm(self.m, other.m)
        return self.lift(order), other.lift(order)

    def __eq__(self, other) -> bool:
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses orders

    def __add__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElem(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycElem(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        prod = [0] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] += x * y
        return CycElem(a.m, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycElem:
        if e < 0:
            raise ValueError("negative powers are not defined in Z[zeta_m]")
        result = CycElem.from_int(1, self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conj(self) -> CycElem:
        """Image under zeta -> zeta^-1."""
        out = [0] * self.m
        for j, c in enumerate(self.coeffs):
            out[-j % self.m] += c
        return CycElem(self.m, out)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def embed(self) -> complex:
        """Value under zeta_m -> exp(2 pi i / m).

        Each component is within ``embed_error_bound(self)`` of the exact value.
        """
        re, im = [], []
        for j, c in enumerate(self.coeffs):
            if c:
                k = j if 2 * j <= self.m else j - self.m
                z = cmath.exp(2j * math.pi * k / self.m)
                re.append(c * z.real)
                im.append(c * z.imag)
        return complex(math.fsum(re), math.fsum(im))

    def embed_error_bound(self) -> float:
        return EMBED_ERROR_CONSTANT * sys.float_info.epsilon * sum(abs(c) for c in self.coeffs)


def cyc_root(m: int, k: int) -> CycElem:
    """zeta_m^k."""
    if m < 1:
        raise ValueError(f"root-of-unity order must be >= 1, got {m}")
    return CycElem(m, [0] * (k % m) + [1])


def cyc_arith(a: CycElem, b: CycElem, op: str) -> CycElem:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown cyclotomic operation {op!r}")


def cyc_conj(a: CycElem) -> CycElem:
    return a.conj()


def cyc_embed(a: CycElem) -> complex:
    return a.embed()


_MU4_NAMES = ("1", "i", "-1", "-i")


@dataclass(frozen=True)
class Mu4:
    """The fourth root of unity i^k."""

    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % 4)

    @classmethod
    def from_sign(cls, sign: int) -> Mu4:
        if sign == 1:
            return cls(0)
        if sign == -1:
            return cls(2)
        raise ValueError(f"expected +1 or -1, got {sign}")

    @classmethod
    def parse(cls, text: str) -> Mu4:
        try:
            return cls(_MU4_NAMES.index(text.strip()))
        except ValueError:
            raise ValueError(f"not a fourth root of unity: {text!r}") from None

    def __str__(self) -> str:
        return _MU4_NAMES[self.k]

    def __mul__(self, other: Mu4) -> Mu4:
        if not isinstance(other, Mu4):
            return NotImplemented
        return Mu4(self.k + other.k)

    def __pow__(self, e: int) -> Mu4:
        return Mu4(self.k * e)

    def __neg__(self) -> Mu4:
        return Mu4(self.k + 2)

    def inverse(self) -> Mu4:
        return Mu4(-self.k)

    conj = inverse

    @property
    def sign(self) -> int:
        """The value as +1/-1; only defined for real values."""
        if self.k % 2:
            raise ValueError(f"{self} is not real")
        return 1 - self.k

    def to_cyc(self) -> CycElem:
        return cyc_root(4, self.k)

    def to_complex(self) -> complex:
        return (1, 1j, -1, -1j)[self.k]


ONE, I, MINUS_ONE, MINUS_I = Mu4(0), Mu4(1), Mu4(2), Mu4(3)
