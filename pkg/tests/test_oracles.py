import math

import pytest

from tamelambda.finite_field import MAX_Q_ENV, build_field, quadratic_character, trace_to_prime
from tamelambda.gauss import gauss_closed_quadratic, gauss_sum_direct
from tamelambda.lambda_core import lambda_psi_minus_one
from tamelambda.local_field import make_tame_field
from tamelambda.oracles import (
    gauss_numeric,
    gauss_numeric_error_bound,
    lambda_direct_path,
    make_symbolic_model,
    matrix_trace,
    squares_by_enumeration,
    symbolic_trace,
)
from tamelambda.verify import gauss_grid


def test_gauss_numeric_examples():
    assert gauss_numeric(build_field(5), "quadratic") == pytest.approx(math.sqrt(5))
    assert gauss_numeric(build_field(3), "quadratic") == pytest.approx(1j * math.sqrt(3))
    assert gauss_numeric(build_field(3, 2), "quadratic") == pytest.approx(3.0)


def test_gauss_numeric_bound(monkeypatch):
    k = build_field(11)
    monkeypatch.setenv(MAX_Q_ENV, "10")
    with pytest.raises(ValueError):
        gauss_numeric(k, "quadratic")
    with pytest.raises(ValueError):
        lambda_direct_path(make_tame_field(3, 3, 1, 1))


@pytest.mark.parametrize("p, s", gauss_grid(pmax=49, fmax=3, qmax=2500))
def test_numeric_agrees_with_exact(p, s):
    k = build_field(p, s)
    tol = max(1e-9 * math.sqrt(k.q), gauss_numeric_error_bound(k))
    assert abs(gauss_numeric(k, "quadratic") - gauss_sum_direct(k, "quadratic").embed()) <= tol


@pytest.mark.parametrize("p, s", [(3, 2), (5, 2), (7, 3), (2, 4)])
def test_matrix_trace_and_squares_match_main_path(p, s):
    k = build_field(p, s)
    for x in k.elements():
        assert matrix_trace(k, x.coeffs) == trace_to_prime(x)
    if p != 2:
        squares = squares_by_enumeration(k)
        for x in k.units():
            assert (x.coeffs in squares) == (quadratic_character(x) == 1)


def test_symbolic_trace_examples():
    model = make_symbolic_model(make_tame_field(5, 1, 2, 1))
    one = model.scalar(model.gr_one())
    assert symbolic_trace(model, one) == (2,)
    assert symbolic_trace(model, model.basis(1)) == (0,)
    for a in range(25):
        for b in range(25):
            assert symbolic_trace(model, ((a,), (b,))) == (2 * a % 25,)


def test_symbolic_model_relation():
    for F in (make_tame_field(7, 2, 3, [2, 1]), make_tame_field(3, 1, 4, 2)):
        model = make_symbolic_model(F, seed=3)
        pi = model.basis(1)
        power = model.scalar(model.gr_one())
        for _ in range(F.e):
            power = model.mul(power, pi)
        assert power == model.scalar(model.gr_scale(model.w, F.p))
        assert symbolic_trace(model, model.scalar(model.gr_one()))[0] == F.e


@pytest.mark.parametrize("p, f", [(5, 1), (3, 1), (7, 2), (11, 2), (3, 3)])
def test_lambda_direct_path(p, f):
    F = make_tame_field(p, f, 1, 1)
    assert abs(lambda_direct_path(F) - lambda_psi_minus_one(F).to_complex()) <= 1e-6
    assert abs(lambda_direct_path(F) - gauss_closed_quadratic(p, f).eps.to_complex()) <= 1e-6
