"""Grid sweeps comparing the closed forms against the oracles.

Each suite returns a ``SuiteReport`` with the number of checks run, the
number that failed and the first failing case.  Grids are enumerated in
(p, f, e, w) order so reports are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd

from .cyclotomic import Mu4
from .finite_field import build_field, is_prime
from .gauss import TameMultChar, epsilon_tame, gauss_closed_quadratic, gauss_sum_direct
from .lambda_core import QuadExt, lambda_psi_minus_one, lambda_tame_quadratic, lambda_twist
from .local_field import (
    TameField,
    c_input,
    c_prime,
    canonical_psi_spec,
    make_tame_field,
    psi_minus_one_spec,
    trace_residue_pc,
    twist_additive,
)
from .oracles import gauss_numeric, lambda_direct_path, trace_residue_pc_oracle

GAUSS_TOL = 1e-6  # relative to p^(s/2)
ORACLE_AGREEMENT_TOL = 1e-9  # relative to q^(1/2)
LAMBDA_TOL = 1e-6
SWEEP_Q = 121  # sweep every unit residue of c up to this q
W_SAMPLE = 4  # w_res runs over g^0 .. g^(W_SAMPLE-1), g the smallest generator


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failed: int = 0
    first_failure: dict | None = None
    params: dict = field(default_factory=dict)

    def check(self, ok: bool, **case) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = case

    @property
    def passed(self) -> int:
        return self.checked - self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_record(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "first_failure": self.first_failure,
            "status": "pass" if self.ok else "fail",
        }


def odd_primes(pmax: int) -> list[int]:
    return [p for p in range(3, pmax + 1) if is_prime(p)]


def gauss_grid(pmax: int = 49, fmax: int = 3, qmax: int = 5000) -> list[tuple[int, int]]:
    return [(p, s) for p in odd_primes(pmax) for s in range(1, fmax + 1) if p**s <= qmax]


def tame_grid(pmax: int, fmax: int, emax: int, qmax: int = 5000, include_two: bool = False) -> list[TameField]:
    """Tame fields (p, f, e, w) with w over a sample of generator powers."""
    primes = ([2] if include_two and pmax >= 2 else []) + odd_primes(pmax)
    out = []
    for p in primes:
        for f in range(1, fmax + 1):
            if p**f > qmax:
                continue
            k = build_field(p, f)
            g = k.primitive_element()
            ws = []
            for j in range(W_SAMPLE):
                w = g**j
                if w not in ws:
                    ws.append(w)
            for e in range(1, emax + 1):
                if gcd(e, p) != 1 or (p == 2 and e != 1):
                    continue
                out.extend(make_tame_field(p, f, e, w) for w in ws)
    return out


def unit_residues(F: TameField):
    k = F.residue_field
    if k.q <= SWEEP_Q:
        return list(k.units())
    g = k.primitive_element()
    return [k.one(), g, g**2, -k.one()]


def run_gauss_suite(pmax=49, fmax=3, qmax=5000, exact_pmax=23, exact_fmax=2) -> SuiteReport:
    report = SuiteReport("gauss", params={"pmax": pmax, "fmax": fmax, "qmax": qmax})
    for p, s in gauss_grid(pmax, fmax, qmax):
        k = build_field(p, s)
        closed = gauss_closed_quadratic(p, s)
        expected = closed.to_complex()
        scale = p ** (s / 2)
        exact = gauss_sum_direct(k, "quadratic", 1)
        embedded = exact.embed()
        numeric = gauss_numeric(k, "quadratic", 1)
        report.check(abs(embedded - expected) <= GAUSS_TOL * scale,
                     p=p, s=s, check="exact_vs_closed", eps=str(closed.eps))
        report.check(abs(numeric - expected) <= GAUSS_TOL * scale,
                     p=p, s=s, check="numeric_vs_closed", eps=str(closed.eps))
        report.check(abs(numeric - embedded) <= ORACLE_AGREEMENT_TOL * math.sqrt(k.q),
                     p=p, s=s, check="numeric_vs_exact")
        if p <= exact_pmax and s <= exact_fmax:
            q = k.q
            report.check(exact * exact.conj() == q, p=p, s=s, check="norm_identity")
            sign = -1 if (q - 1) // 2 % 2 else 1
            report.check(exact * exact == sign * q, p=p, s=s, check="square_identity")
    return report


def run_lambda_suite(pmax=49, fmax=3, emax=10, qmax=5000, eps_qmax=500) -> SuiteReport:
    report = SuiteReport("lambda", params={"pmax": pmax, "fmax": fmax, "emax": emax, "qmax": qmax})
    direct_cache: dict[tuple[int, int], complex] = {}
    for F in tame_grid(pmax, fmax, emax, qmax):
        key = dict(p=F.p, f=F.f, e=F.e, w=list(F.w_res.coeffs))
        closed = lambda_psi_minus_one(F)
        if (F.p, F.f) not in direct_cache:
            direct_cache[F.p, F.f] = lambda_direct_path(F)
            report.check(abs(direct_cache[F.p, F.f] - closed.to_complex()) <= LAMBDA_TOL,
                         p=F.p, f=F.f, check="closed_vs_direct", closed=str(closed))
        K = QuadExt(F)
        reference = lambda_tame_quadratic(K)
        for u in unit_residues(F):
            c = c_input(F, u)
            result = lambda_tame_quadratic(K, c)
            case = dict(key, u=list(u.coeffs))
            report.check(result.value == result.delta_factor * result.gauss_factor,
                         check="assembly", **case)
            report.check(result.value == reference.value, check="c_independence", **case)
            report.check(result.delta_factor in (Mu4(0), Mu4(2)), check="delta_sign", **case)
            report.check(lambda_twist(closed, K, c_prime(F, c)) == result.value,
                         check="twist_coherence", **case)
        if F.q <= eps_qmax:
            # independent route: W(omega, psi_F) straight from the local constant formula
            w_val = epsilon_tame(TameMultChar("quadratic", Mu4(0)), canonical_psi_spec(F), F).mu4
            report.check(w_val == reference.value, check="epsilon_route", **key)
    return report


def run_trace_suite(pmax=19, fmax=2, emax=6) -> SuiteReport:
    report = SuiteReport("trace", params={"pmax": pmax, "fmax": fmax, "emax": emax})
    for F in tame_grid(pmax, fmax, emax, qmax=10**9, include_two=True):
        key = dict(p=F.p, f=F.f, e=F.e, w=list(F.w_res.coeffs))
        k = F.residue_field
        prime_units = set()
        for n, u in enumerate(unit_residues(F)):
            c = c_input(F, u)
            case = dict(key, u=list(u.coeffs))
            got = trace_residue_pc(F, c)
            report.check(got.coeffs == trace_residue_pc_oracle(F, u.coeffs, seed=n),
                         check="symbolic_oracle", **case)
            cp = c_prime(F, c)
            report.check(cp.val == -1 - F.d, check="valuation", **case)
            report.check(trace_residue_pc(F, cp) == k.one(), check="normalized_trace", **case)
            report.check(twist_additive(canonical_psi_spec(F), cp) == psi_minus_one_spec(F),
                         check="psi_minus_one", **case)
            prime_units.add(cp.unit_res.coeffs)
        report.check(len(prime_units) == 1, check="c_prime_independence", **key)
    return report


SUITES = {
    "gauss": run_gauss_suite,
    "lambda": run_lambda_suite,
    "trace": run_trace_suite,
}
