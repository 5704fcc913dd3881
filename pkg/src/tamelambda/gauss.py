"""Quadratic Gauss sums over finite fields and tame epsilon factors.

The Gauss sum attached to a multiplicative character chi of k_q and the
additive character x -> psi_q(a x) is computed exactly in Z[zeta_p] by
counting how often each trace value occurs.  The closed form for the
quadratic character is eps * p^(s/2) with eps a fourth root of unity.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cyclotomic import CycElem, Mu4
from .finite_field import FieldDescriptor, FqElem, is_prime, quadratic_character, trace_to_prime

CHARACTERS = ("trivial", "quadratic")


def _check_character(chi: str, p: int) -> None:
    if chi not in CHARACTERS:
        raise ValueError(f"unknown residue character {chi!r}; expected one of {CHARACTERS}")
    if chi == "quadratic" and p == 2:
        raise ValueError("no quadratic character in characteristic 2")


def character_value(chi: str, x: FqElem) -> int:
    if chi == "trivial":
        return 1
    return quadratic_character(x)


@dataclass(frozen=True)
class ClosedGauss:
    """The value eps * p^half_power."""

    eps: Mu4
    p: int
    half_power: Fraction

    def to_complex(self) -> complex:
        return self.eps.to_complex() * float(self.p) ** float(self.half_power)


def gauss_sum_direct(field: FieldDescriptor, chi: str, twist: FqElem | int = 1) -> CycElem:
    """sum over x in k^x of chi(x) * zeta_p^Tr(twist * x), exactly."""
    _check_character(chi, field.p)
    twist = field.element(twist)
    if not twist:
        raise ValueError("additive character twist must be nonzero")
    return _gauss_sum(field, chi, twist)


@functools.lru_cache(maxsize=1024)
def _gauss_sum(field: FieldDescriptor, chi: str, twist: FqElem) -> CycElem:
    counts = [0] * field.p
    for x in field.units():
        counts[trace_to_prime(twist * x)] += character_value(chi, x)
    return CycElem.from_exponent_counts(field.p, counts)


def gauss_closed_quadratic(p: int, s: int) -> ClosedGauss:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("the closed quadratic Gauss sum needs odd p")
    if s < 1:
        raise ValueError(f"extension degree must be >= 1, got {s}")
    eps = Mu4(2 * (s - 1))
    if p % 4 == 3:
        eps = eps * Mu4(s)
    return ClosedGauss(eps, p, Fraction(s, 2))


@dataclass(frozen=True)
class TameMultChar:
    """A character of F^x trivial on 1-units.

    ``unit_part`` is the induced character of k_F^x and ``pi_value`` the
    value on the chosen uniformizer.
    """

    unit_part: str
    pi_value: Mu4

    def __post_init__(self) -> None:
        if self.unit_part not in CHARACTERS:
            raise ValueError(f"unknown residue character {self.unit_part!r}")

    @property
    def conductor(self) -> int:
        return 0 if self.unit_part == "trivial" else 1


@dataclass(frozen=True)
class EpsilonValue:
    """W = numerator / p^half_power with numerator exact."""

    numerator: CycElem
    p: int
    half_power: Fraction

    def to_complex(self) -> complex:
        return self.numerator.embed() / float(self.p) ** float(self.half_power)

    @property
    def mu4(self) -> Mu4:
        """W as an exact fourth root of unity.

        The candidate u must satisfy (numerator / u)^2 == p^(2 h) exactly; the
        remaining sign of the square root is read off the complex embedding.
        """
        target = self.p ** int(2 * self.half_power)
        for k in range(4):
            u = Mu4(k)
            rest = self.numerator * u.inverse().to_cyc()
            if rest * rest == target and rest.embed().real > 0:
                return u
        raise ValueError(f"{self.numerator!r} / {self.p}^{self.half_power} is not in mu_4")


def epsilon_tame(chi: TameMultChar, psi, F) -> EpsilonValue:
    """Local constant W(chi, psi) for chi of conductor <= 1.

    ``psi`` is an AdditiveCharSpec: conductor n and the residue twist a
    with psi(pi^(-n-1) u) = psi_q(a u) for units u.  With c = pi^(a(chi)+n):

    * a(chi) = 0:  W = chi(pi)^n.
    * a(chi) = 1:  W = chi(pi)^(1+n) * q^(-1/2) * sum_x chi'(x) psi_q(a x),
      which equals chi(pi)^(1+n) * chi'(a) * G(chi', psi_q) / sqrt(q).
    """
    field = F.residue_field
    order = lcm(4, field.p)
    if chi.conductor == 0:
        return EpsilonValue((chi.pi_value ** psi.n).to_cyc().lift(order), field.p, Fraction(0))
    # chi' is quadratic, hence its own inverse
    total = gauss_sum_direct(field, chi.unit_part, psi.twist)
    numerator = (chi.pi_value ** (1 + psi.n)).to_cyc() * total
    return EpsilonValue(numerator.lift(order), field.p, Fraction(field.s, 2))
