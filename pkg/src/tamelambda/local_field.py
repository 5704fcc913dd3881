"""Tamely ramified extensions F/Q_p at precision one.

F is presented by (p, f, e, w): residue field k_F of size p^f, ramification
index e prime to p, and a uniformizer pi with pi^e = p * w for a unit w of
the maximal unramified subfield F_0.  Elements of F^x are tracked only as
a valuation plus a unit residue in k_F^x, i.e. modulo the 1-units U_F^1.
Every character handled by this package is trivial on U_F^1, so nothing is
lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .finite_field import FieldDescriptor, FqElem, build_field


@dataclass(frozen=True)
class TameField:
    p: int
    f: int
    e: int
    w_res: FqElem

    @property
    def d(self) -> int:
        """Exponent of the different of F/Q_p."""
        return self.e - 1

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def residue_field(self) -> FieldDescriptor:
        return self.w_res.field

    @property
    def e_res(self) -> FqElem:
        """e reduced into k_F; nonzero by tameness."""
        return self.residue_field.element(self.e)

    def describe(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "e": self.e,
            "w": list(self.w_res.coeffs),
        }


@dataclass(frozen=True)
class CClass:
    """pi^val * u modulo U_F^1, with u represented by its residue."""

    val: int
    unit_res: FqElem

    def __post_init__(self) -> None:
        if not self.unit_res:
            raise ValueError("unit residue must be nonzero")


@dataclass(frozen=True)
class AdditiveCharSpec:
    """An additive character of F seen through its top graded piece.

    ``n`` is the conductor (psi trivial on P^-n, not on P^(-n-1)) and
    psi(pi^(-n-1) u) = psi_q(twist * u) for units u.
    """

    n: int
    twist: FqElem

    def __post_init__(self) -> None:
        if not self.twist:
            raise ValueError("additive character twist must be nonzero")


def make_tame_field(p: int, f: int, e: int, w_res: int | Sequence[int] | FqElem = 1) -> TameField:
    if e < 1:
        raise ValueError(f"ramification index must be >= 1, got {e}")
    field = build_field(p, f)
    if gcd(e, p) != 1:
        raise ValueError(f"e = {e} is divisible by p = {p}: wild ramification is not supported")
    if p == 2 and e != 1:
        raise ValueError("over Q_2 only unramified fields are accepted")
    w = field.element(w_res)
    if not w:
        raise ValueError("w must be a unit (nonzero residue)")
    return TameField(p, f, e, w)


def c_input(F: TameField, u_res) -> CClass:
    """The admissible c = pi^-e * u, of valuation -1 - d."""
    return CClass(-F.e, F.residue_field.element(u_res))


def _check_admissible(F: TameField, c: CClass) -> None:
    if c.val != -F.e:
        raise ValueError(f"c must have valuation -e = {-F.e}, got {c.val}")
    if c.unit_res.field != F.residue_field:
        raise ValueError("unit residue of c lives in the wrong residue field")


def trace_residue_pc(F: TameField, c: CClass) -> FqElem:
    """Residue of Tr_{F/F_0}(p c) in k_F = k_{F_0}.

    p c = w^-1 u and u = a_0 + a_1 pi + ... + a_(e-1) pi^(e-1) over O_{F_0};
    Tr(pi^j) = 0 for 0 < j < e, so the trace is e a_0 / w.
    """
    _check_admissible(F, c)
    return F.e_res * c.unit_res / F.w_res


def c_prime(F: TameField, c: CClass) -> CClass:
    """c' = c / Tr_{F/F_0}(p c); its unit residue is w / e for every admissible c."""
    return CClass(c.val, c.unit_res / trace_residue_pc(F, c))


def psi_minus_one_spec(F: TameField) -> AdditiveCharSpec:
    """Conductor -1 character whose restriction to O_F induces psi_q itself."""
    return AdditiveCharSpec(-1, F.residue_field.one())


def canonical_psi_spec(F: TameField) -> AdditiveCharSpec:
    """The canonical character psi_F = psi_Qp o Tr_{F/Q_p}.

    Its conductor is d.  On pi^-e u the value is
    psi_Qp(Tr_{F_0/Q_p}(Tr_{F/F_0}(p pi^-e u) / p)), so the top-piece twist is
    the residue of Tr_{F/F_0}(p pi^-e), namely e / w.
    """
    return AdditiveCharSpec(F.d, trace_residue_pc(F, c_input(F, 1)))


def twist_additive(psi: AdditiveCharSpec, a: CClass) -> AdditiveCharSpec:
    """The character x -> psi(a x)."""
    return AdditiveCharSpec(psi.n + a.val, psi.twist * a.unit_res)
