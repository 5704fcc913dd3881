"""Lambda functions of quadratic extensions K/F.

For tamely ramified K/F with odd residue characteristic,

    lambda_{K/F}(psi_F) = Delta_{K/F}(c') * lambda_{K/F}(psi_{-1}),

where psi_{-1} = c' psi_F restricts to the canonical character of k_F, so
lambda_{K/F}(psi_{-1}) is the normalized quadratic Gauss sum of k_F, and
Delta_{K/F} = omega_{K/F} is evaluated on c' through its unit residue.  The
uniformizer is taken to be a norm from K, so omega_{K/F}(pi) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import I, MINUS_I, MINUS_ONE, ONE, Mu4
from .finite_field import quadratic_character
from .gauss import TameMultChar, epsilon_tame, gauss_closed_quadratic
from .local_field import AdditiveCharSpec, CClass, TameField, c_input, c_prime, trace_residue_pc

KINDS = ("unramified", "ramified_norm_normalized")


@dataclass(frozen=True)
class QuadExt:
    base: TameField
    kind: str = "ramified_norm_normalized"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown extension kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "ramified_norm_normalized" and self.base.p == 2:
            raise ValueError("ramified quadratic extensions need odd p (the p = 2 case is wild)")

    @property
    def omega_pi(self) -> Mu4:
        """omega_{K/F}(pi_F)."""
        return ONE if self.kind == "ramified_norm_normalized" else MINUS_ONE


@dataclass(frozen=True)
class LambdaResult:
    value: Mu4
    delta_factor: Mu4
    gauss_factor: Mu4
    provenance: dict = field(default_factory=dict, compare=False)


def _require_odd(F: TameField) -> None:
    if F.p == 2:
        raise ValueError("p = 2 is not tamely ramified for quadratic extensions")


def lambda_psi_minus_one(F: TameField) -> Mu4:
    """(-1)^(s-1) for p = 1 mod 4 and (-1)^(s-1) i^s for p = 3 mod 4, s = f."""
    _require_odd(F)
    return gauss_closed_quadratic(F.p, F.f).eps


def delta_c_prime(F: TameField, c: CClass) -> Mu4:
    """Delta_{K/F}(c') = omega(pi)^val(c') * eta(unit residue of c'), omega(pi) = 1."""
    _require_odd(F)
    return Mu4.from_sign(quadratic_character(c_prime(F, c).unit_res))


def lambda_tame_quadratic(K: QuadExt, c: CClass | None = None) -> LambdaResult:
    if K.kind != "ramified_norm_normalized":
        raise ValueError("lambda_tame_quadratic handles the ramified case only")
    F = K.base
    _require_odd(F)
    if c is None:
        c = c_input(F, 1)
    cp = c_prime(F, c)
    delta = delta_c_prime(F, c)
    gauss = lambda_psi_minus_one(F)
    provenance = {
        **F.describe(),
        "c": {"val": c.val, "unit": list(c.unit_res.coeffs)},
        "c_prime": {"val": cp.val, "unit": list(cp.unit_res.coeffs)},
        "trace_pc": list(trace_residue_pc(F, c).coeffs),
    }
    return LambdaResult(delta * gauss, delta, gauss, provenance)


def lambda_unramified(K: QuadExt, n: int) -> Mu4:
    """W(omega, psi) for the unramified quadratic omega and psi of conductor n.

    omega has conductor 0 and omega(pi) = -1, so the degenerate local
    constant formula gives omega(pi)^n = (-1)^n.
    """
    if K.kind != "unramified":
        raise ValueError("lambda_unramified handles the unramified case only")
    omega = TameMultChar("trivial", K.omega_pi)
    psi = AdditiveCharSpec(n, K.base.residue_field.one())
    return epsilon_tame(omega, psi, K.base).mu4


def delta(K: QuadExt, a: CClass) -> Mu4:
    """Delta_{K/F}(a) = omega_{K/F}(a)."""
    value = K.omega_pi**a.val
    if K.kind == "ramified_norm_normalized":
        value = value * Mu4.from_sign(quadratic_character(a.unit_res))
    return value


def lambda_twist(lam: Mu4, K: QuadExt, a: CClass) -> Mu4:
    """lambda_{K/F}(a psi) = Delta_{K/F}(a) * lambda_{K/F}(psi)."""
    return delta(K, a) * lam


Q2_TABLE = {
    5: ONE,
    -1: I,
    -5: I,
    2: ONE,
    10: MINUS_ONE,
    -2: I,
    -10: MINUS_I,
}


def lambda_q2(square_class: int) -> Mu4:
    """lambda of Q_2(sqrt(d))/Q_2 for d one of the seven nontrivial square classes."""
    try:
        return Q2_TABLE[square_class]
    except KeyError:
        raise ValueError(
            f"{square_class} is not one of the square classes {sorted(Q2_TABLE)}"
        ) from None


def lambda_full_square_norm_class(base=None) -> Mu4:
    """lambda_{K/F} = 1 when F/Q_2 is finite and N_{K/F}(K^x) = F^x2.

    The hypothesis is the caller's responsibility; ``base`` is accepted for
    bookkeeping only.
    """
    return ONE
