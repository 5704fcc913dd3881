import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamelambda.cyclotomic import (
    I,
    MINUS_I,
    MINUS_ONE,
    ONE,
    CycElem,
    Mu4,
    cyc_arith,
    cyc_conj,
    cyc_embed,
    cyc_root,
    cyclotomic_polynomial,
    euler_phi,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Phi_105 is the first with a coefficient of absolute value 2
    assert min(cyclotomic_polynomial(105)) == -2


@pytest.mark.parametrize("m", range(1, 40))
def test_phi_degree_is_totient(m):
    assert euler_phi(m) == sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def test_cyc_root_examples():
    assert cyc_root(4, 1).coeffs == (0, 1)
    assert cyc_root(3, 2).coeffs == (-1, -1)
    assert cyc_root(5, 5) == 1
    assert cyc_root(7, 0) == 1
    assert cyc_root(6, -1) == cyc_root(6, 5)


def test_cyc_arith_examples():
    z3 = cyc_root(3, 1)
    assert cyc_arith(z3, z3 * z3, "add") == -1
    assert cyc_arith(cyc_root(4, 1), cyc_root(4, 1), "mul") == -1
    assert cyc_arith(1 + cyc_root(5, 1), CycElem(5), "mul") == 0
    with pytest.raises(ValueError):
        cyc_arith(z3, z3, "div")


def test_mixed_orders_lift_to_lcm():
    s = cyc_root(4, 1) + cyc_root(3, 1)
    assert s.m == 12
    assert s == cyc_root(12, 3) + cyc_root(12, 4)
    assert cyc_root(4, 1) * cyc_root(3, 1) == cyc_root(12, 7)
    assert cyc_root(6, 2) == cyc_root(3, 1)


def test_conj_examples():
    assert cyc_conj(cyc_root(4, 1)) == -cyc_root(4, 1)
    assert cyc_conj(cyc_root(5, 1)) == cyc_root(5, 4)
    assert cyc_conj(CycElem.from_int(7, 9)) == 7


def test_embed_examples():
    assert cyc_embed(cyc_root(4, 1)) == pytest.approx(1j)
    assert cyc_embed(cyc_root(3, 1)) == pytest.approx(complex(-0.5, math.sqrt(3) / 2))
    assert cyc_embed(1 + cyc_root(4, 2)) == 0


@pytest.mark.parametrize("m", range(2, 60))
def test_sum_of_all_roots_vanishes(m):
    total = sum((cyc_root(m, k) for k in range(m)), CycElem(m))
    assert total == 0


def elements(max_m=30):
    return st.integers(1, max_m).flatmap(
        lambda m: st.lists(st.integers(-50, 50), min_size=euler_phi(m), max_size=euler_phi(m)).map(
            lambda c: CycElem(m, c)
        )
    )


@settings(max_examples=200, deadline=None)
@given(elements())
def test_conj_is_involution(a):
    assert a.conj().conj() == a


@settings(max_examples=200, deadline=None)
@given(elements(), elements())
def test_embed_is_ring_homomorphism(a, b):
    tol = 1e-9 * (1 + sum(map(abs, a.coeffs))) * (1 + sum(map(abs, b.coeffs)))
    assert abs((a + b).embed() - (a.embed() + b.embed())) <= tol
    assert abs((a * b).embed() - a.embed() * b.embed()) <= tol
    assert abs(a.conj().embed() - a.embed().conjugate()) <= tol


@settings(max_examples=100, deadline=None)
@given(elements(max_m=60))
def test_embed_error_bound_against_high_precision(a):
    mpmath.mp.dps = 40
    exact = mpmath.fsum(c * mpmath.expjpi(mpmath.mpf(2 * j) / a.m) for j, c in enumerate(a.coeffs))
    z = a.embed()
    bound = a.embed_error_bound()
    assert abs(float(exact.real) - z.real) <= bound
    assert abs(float(exact.imag) - z.imag) <= bound


def test_ring_laws_exact():
    a = CycElem(7, [1, -2, 3, 0, 5, 1])
    b = CycElem(7, [0, 4, -1, 2, 0, 0])
    c = cyc_root(7, 3) - 2
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a**3 == a * a * a


def test_mu4():
    assert I * I == MINUS_ONE
    assert I**4 == ONE
    assert [str(Mu4(k)) for k in range(4)] == ["1", "i", "-1", "-i"]
    assert Mu4.parse("-i") == MINUS_I
    assert Mu4(-1) == MINUS_I
    assert I.inverse() == MINUS_I
    assert Mu4.from_sign(-1) == MINUS_ONE
    assert MINUS_ONE.sign == -1
    assert I.to_cyc() == cyc_root(4, 1)
    assert cmath.isclose(MINUS_I.to_complex(), -1j)
    for k in range(4):
        assert Mu4(k) ** 4 == ONE
    with pytest.raises(ValueError):
        Mu4.parse("2")
    with pytest.raises(ValueError):
        Mu4.from_sign(0)
