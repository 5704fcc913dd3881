"""Brute-force oracles that share nothing with the main path but the field modulus.

Field elements are handled here as raw coefficient tuples with a local
multiplication routine; traces are traces of multiplication matrices; the
quadratic character is membership in an enumerated set of squares; sums
are accumulated in floating point.
"""

from __future__ import annotations

import cmath
import functools
import math
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from .finite_field import FieldDescriptor, max_field_size
from .local_field import TameField

# Each term exp(2 pi i k / p) is off by a few ulp and fsum rounds each
# component once, so a sum over q terms is within q * C * eps per component.
GAUSS_NUMERIC_C = 8


def _mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], n: int) -> tuple[int, ...]:
    """Product in (Z/n)[t]/(modulus), modulus monic."""
    s = len(modulus) - 1
    prod = [0] * (2 * s)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(len(prod) - 1, s - 1, -1):
        c = prod[k] % n
        if c:
            for j in range(s + 1):
                prod[k - s + j] -= c * modulus[j]
    return tuple(c % n for c in prod[:s])


def _all_elements(field: FieldDescriptor):
    p, s = field.p, field.s
    for n in range(field.q):
        digits = []
        for _ in range(s):
            n, r = divmod(n, p)
            digits.append(r)
        yield tuple(digits)


def matrix_trace(field: FieldDescriptor, x: Sequence[int]) -> int:
    """Trace of y -> x y on the basis 1, t, ..., t^(s-1)."""
    total = 0
    for j in range(field.s):
        basis = tuple(1 if k == j else 0 for k in range(field.s))
        total += _mulmod(x, basis, field.modulus, field.p)[j]
    return total % field.p


def squares_by_enumeration(field: FieldDescriptor) -> set[tuple[int, ...]]:
    return {_mulmod(z, z, field.modulus, field.p) for z in _all_elements(field) if any(z)}


def _check_bound(field: FieldDescriptor) -> None:
    if field.q > max_field_size():
        raise ValueError(f"q = {field.q} exceeds the configured bound {max_field_size()}")


def gauss_numeric(field: FieldDescriptor, chi: str, twist: Sequence[int] | int = 1) -> complex:
    """sum_x chi(x) exp(2 pi i Tr(twist x) / p) in double precision."""
    _check_bound(field)
    if isinstance(twist, int):
        twist = (twist % field.p,) + (0,) * (field.s - 1)
    else:
        twist = tuple(getattr(twist, "coeffs", twist))
    squares = squares_by_enumeration(field) if chi == "quadratic" else None
    re, im = [], []
    for x in _all_elements(field):
        if not any(x):
            continue
        sign = 1 if squares is None or x in squares else -1
        k = matrix_trace(field, _mulmod(twist, x, field.modulus, field.p))
        z = cmath.exp(2j * math.pi * k / field.p)
        re.append(sign * z.real)
        im.append(sign * z.imag)
    return complex(math.fsum(re), math.fsum(im))


def gauss_numeric_error_bound(field: FieldDescriptor) -> float:
    return GAUSS_NUMERIC_C * field.q * sys.float_info.epsilon


def lambda_direct_path(F: TameField) -> complex:
    """q^(-1/2) * sum_x eta(x) psi_q(x): lambda(psi_{-1}) by direct summation."""
    if F.p == 2:
        raise ValueError("needs odd p")
    return gauss_numeric(F.residue_field, "quadratic", 1) / math.sqrt(F.q)


# -- explicit Eisenstein model of F/F_0 -------------------------------------

@dataclass(frozen=True)
class SymbolicTameModel:
    """O_F = O_{F_0}[pi]/(pi^e - p w), coefficients in O_{F_0} / p^2.

    O_{F_0} / p^2 is the Galois ring (Z/p^2)[t]/(g) with g the integer lift
    of the residue field modulus.  ``w`` is a lift of w_res to that ring.
    """

    p: int
    f: int
    e: int
    modulus: tuple[int, ...]
    w: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.p**2

    def gr_mul(self, a, b):
        return _mulmod(a, b, self.modulus, self.n)

    def gr_add(self, a, b):
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def gr_scale(self, a, k: int):
        return tuple(k * x % self.n for x in a)

    def gr_zero(self):
        return (0,) * self.f

    def gr_one(self):
        return (1,) + (0,) * (self.f - 1)

    def gr_inverse(self, a):
        # the unit group of GR(p^2, f) has order q (q - 1)
        q = self.p**self.f
        result, base, k = self.gr_one(), a, q * (q - 1) - 1
        while k:
            if k & 1:
                result = self.gr_mul(result, base)
            base = self.gr_mul(base, base)
            k >>= 1
        assert self.gr_mul(result, a) == self.gr_one(), "lift of w is not a unit"
        return result

    def mul(self, a, b):
        """Product of two elements given as length-e tuples of ring coefficients."""
        out = [self.gr_zero() for _ in range(self.e)]
        pw = self.gr_scale(self.w, self.p)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                term = self.gr_mul(x, y)
                k = i + j
                if k >= self.e:
                    term = self.gr_mul(term, pw)
                    k -= self.e
                out[k] = self.gr_add(out[k], term)
        return tuple(out)

    def basis(self, j: int):
        return tuple(self.gr_one() if k == j else self.gr_zero() for k in range(self.e))

    def scalar(self, a):
        return (tuple(a),) + tuple(self.gr_zero() for _ in range(self.e - 1))


def make_symbolic_model(F: TameField, seed: int = 0) -> SymbolicTameModel:
    """Model of F with a randomly chosen lift of w_res (any lift works)."""
    rng = random.Random(seed)
    w = tuple(c + F.p * rng.randrange(F.p) for c in F.w_res.coeffs)
    return SymbolicTameModel(F.p, F.f, F.e, F.residue_field.modulus, w)


def symbolic_trace(model: SymbolicTameModel, elem) -> tuple[int, ...]:
    """Tr_{F/F_0}(elem) as the trace of its multiplication matrix."""
    total = model.gr_zero()
    for j in range(model.e):
        column = model.mul(elem, model.basis(j))
        total = model.gr_add(total, column[j])
    return total


@functools.lru_cache(maxsize=256)
def _w_inverse(model: SymbolicTameModel) -> tuple[int, ...]:
    return model.gr_inverse(model.w)


def trace_residue_pc_oracle(F: TameField, u_res, seed: int = 0) -> tuple[int, ...]:
    """Residue of Tr_{F/F_0}(p c) for c = pi^-e u, using p pi^-e = w^-1 in the model.

    u is a random lift of u_res including random higher pi-adic digits.
    """
    model = make_symbolic_model(F, seed)
    rng = random.Random(seed + 1)
    u0 = tuple(c + F.p * rng.randrange(F.p) for c in u_res)
    u = (u0,) + tuple(
        tuple(rng.randrange(model.n) for _ in range(F.f)) for _ in range(F.e - 1)
    )
    pc = model.mul(model.scalar(_w_inverse(model)), u)
    tr = symbolic_trace(model, pc)
    return tuple(c % F.p for c in tr)
