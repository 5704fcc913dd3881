"""Finite fields k_q with q = p^s elements.

Elements are coefficient tuples in the polynomial basis 1, t, ..., t^(s-1)
of F_p[t]/(m(t)), little-endian.  The modulus m is the lexicographically
smallest monic irreducible polynomial of degree s (coefficients compared
low-degree first), so ``build_field(p, s)`` is reproducible everywhere.

For s = 1 the modulus is ``x`` and arithmetic is plain residue arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_MAX_Q = 2**20
_TABLE_LIMIT = 2**16  # largest q whose quadratic character gets tabulated
MAX_Q_ENV = "TAMELAMBDA_MAX_Q"


def max_field_size() -> int:
    """Upper bound on q, overridable through the TAMELAMBDA_MAX_Q variable."""
    raw = os.environ.get(MAX_Q_ENV)
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        bound = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_Q_ENV} must be an integer, got {raw!r}") from None
    if bound < 2:
        raise ValueError(f"{MAX_Q_ENV} must be at least 2")
    return bound


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
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


# -- polynomials over F_p as little-endian tuples ---------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic polynomial."""
    a = [c % p for c in a]
    n = len(mod) - 1
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            shift = k - n
            for j in range(n + 1):
                a[shift + j] = (a[shift + j] - c * mod[j]) % p
    return _trim(a[:n] if len(a) > n else a)


def _poly_mulmod(a, b, mod, p) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, mod, p)


def _poly_powmod(a, e: int, mod, p) -> list[int]:
    result = [1]
    base = _poly_mod(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        e >>= 1
        if e:
            base = _poly_mulmod(base, base, mod, p)
    return _poly_mod(result, mod, p)


def _poly_sub(a, b, p) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a, b, p) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        inv = pow(b[-1], -1, p)
        monic = [c * inv % p for c in b]
        a, b = b, _poly_mod(a, monic, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    s = len(poly) - 1
    if s < 1:
        return False
    if s == 1:
        return True
    x = [0, 1]

    def frobenius_power(k):
        y = x
        for _ in range(k):
            y = _poly_powmod(y, p, poly, p)
        return y

    if _poly_sub(frobenius_power(s), x, p):
        return False
    for r in prime_factors(s):
        g = _poly_gcd(poly, _poly_sub(frobenius_power(s // r), x, p), p)
        if len(g) != 1:
            return False
    return True


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=s):
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {s} over F_{p}")


# -- fields and elements ----------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    s: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.s

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s})"

    @functools.cached_property
    def _basis_traces(self) -> tuple[int, ...]:
        # Tr(t^j) by the Frobenius definition; trace is then linear in coeffs.
        traces = []
        for j in range(self.s):
            basis = [0] * j + [1]
            total = [0] * self.s
            y = _poly_mod(basis, self.modulus, self.p)
            for _ in range(self.s):
                for k, c in enumerate(y):
                    total[k] += c
                y = _poly_powmod(y, self.p, self.modulus, self.p)
            total = [c % self.p for c in total]
            assert all(c == 0 for c in total[1:]), "trace left the prime field"
            traces.append(total[0])
        return tuple(traces)

    @functools.cached_property
    def _quadratic_table(self) -> dict[tuple[int, ...], int]:
        return {x.coeffs: _euler_criterion(x) for x in self.units()}

    def _wrap(self, coeffs: Sequence[int]) -> FqElem:
        out = [0] * self.s
        out[: len(coeffs)] = coeffs
        return FqElem(self, tuple(out))

    def element(self, value: int | Sequence[int] | FqElem) -> FqElem:
        """Coerce value into the field.

        An int is read as a prime-field scalar; a sequence as polynomial-basis
        coefficients (little-endian, at most s of them).
        """
        if isinstance(value, FqElem):
            if value.field != self:
                raise ValueError(f"element of {value.field!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return self._wrap([value % self.p])
        coeffs = [int(c) for c in value]
        if len(coeffs) > self.s:
            raise ValueError(f"{len(coeffs)} coefficients given for a degree-{self.s} field")
        return self._wrap([c % self.p for c in coeffs])

    def zero(self) -> FqElem:
        return self._wrap([])

    def one(self) -> FqElem:
        return self._wrap([1])

    def gen(self) -> FqElem:
        """The class of t (for s = 1 this is 0, the root of the modulus x)."""
        return self._wrap(_poly_mod([0, 1], self.modulus, self.p))

    def from_index(self, n: int) -> FqElem:
        """Element whose coefficients are the base-p digits of n."""
        if not 0 <= n < self.q:
            raise ValueError(f"index {n} out of range for {self!r}")
        digits = []
        for _ in range(self.s):
            n, r = divmod(n, self.p)
            digits.append(r)
        return FqElem(self, tuple(digits))

    def elements(self) -> Iterator[FqElem]:
        for n in range(self.q):
            yield self.from_index(n)

    def units(self) -> Iterator[FqElem]:
        for n in range(1, self.q):
            yield self.from_index(n)

    @functools.cached_property
    def _primitive(self) -> FqElem:
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)]
        for x in self.units():
            if all(x**k != self.one() for k in cofactors):
                return x
        raise AssertionError("multiplicative group is not cyclic")

    def primitive_element(self) -> FqElem:
        """Smallest generator of k_q^x in index order."""
        return self._primitive


@dataclass(frozen=True)
class FqElem:
    field: FieldDescriptor
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        if self.field.s == 1:
            return f"{self.coeffs[0]} mod {self.field.p}"
        return f"FqElem({list(self.coeffs)} in {self.field!r})"

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def index(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def _other(self, other) -> FqElem | None:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError(f"mixed fields {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        f = self.field
        if f.s == 1:
            return FqElem(f, (self.coeffs[0] * other.coeffs[0] % f.p,))
        return f._wrap(_poly_mulmod(_trim(list(self.coeffs)), _trim(list(other.coeffs)), f.modulus, f.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        f = self.field
        if e < 0:
            return self.inverse() ** (-e)
        if f.s == 1:
            return FqElem(f, (pow(self.coeffs[0], e, f.p),))
        return f._wrap(_poly_powmod(_trim(list(self.coeffs)), e, f.modulus, f.p))

    def inverse(self) -> FqElem:
        if not self:
            raise ZeroDivisionError(f"zero has no inverse in {self.field!r}")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def is_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self) -> int:
        if not self.is_prime_field():
            raise ValueError(f"{self!r} is not in the prime field")
        return self.coeffs[0]


@functools.lru_cache(maxsize=None)
def _build_field(p: int, s: int) -> FieldDescriptor:
    modulus = (0, 1) if s == 1 else smallest_irreducible(p, s)
    return FieldDescriptor(p, s, modulus)


def build_field(p: int, s: int = 1) -> FieldDescriptor:
    """Canonical descriptor of the field with p^s elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 1:
        raise ValueError(f"extension degree must be >= 1, got {s}")
    bound = max_field_size()
    if p**s > bound:
        raise ValueError(f"field size {p}^{s} exceeds the configured bound {bound}")
    return _build_field(p, s)


def field_arith(a: FqElem, b, op: str) -> FqElem:
    """Dispatch one of add, mul, inv, pow; b is an int exponent for pow and ignored for inv."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a**b
    raise ValueError(f"unknown field operation {op!r}")


def trace_to_prime(x: FqElem) -> int:
    """Tr(x) = sum of x^(p^j), j < s, returned as an integer in [0, p)."""
    f = x.field
    return sum(c * t for c, t in zip(x.coeffs, f._basis_traces)) % f.p


def _euler_criterion(x: FqElem) -> int:
    r = x ** ((x.field.q - 1) // 2)
    if r == x.field.one():
        return 1
    if r == -x.field.one():
        return -1
    raise AssertionError(f"Euler criterion gave {r!r}")


def quadratic_character(x: FqElem) -> int:
    """+1 if x is a nonzero square, -1 otherwise (Euler's criterion)."""
    if x.field.p == 2:
        raise ValueError("the quadratic character needs odd characteristic")
    if not x:
        raise ValueError("quadratic character of zero")
    if x.field.q > _TABLE_LIMIT:
        return _euler_criterion(x)
    return x.field._quadratic_table[x.coeffs]


def additive_char_exponent(x: FqElem) -> int:
    """k with psi_q(x) = exp(2 pi i k / p) for the canonical additive character."""
    return trace_to_prime(x)
