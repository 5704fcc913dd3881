import pytest

from tamelambda.finite_field import build_field
from tamelambda.local_field import (
    AdditiveCharSpec,
    CClass,
    c_input,
    c_prime,
    canonical_psi_spec,
    make_tame_field,
    psi_minus_one_spec,
    trace_residue_pc,
    twist_additive,
)
from tamelambda.oracles import trace_residue_pc_oracle
from tamelambda.verify import tame_grid


def test_make_tame_field_examples():
    F = make_tame_field(5, 1, 1, 1)
    assert (F.d, F.q) == (0, 5)
    F = make_tame_field(5, 1, 2, 1)
    assert F.d == 1
    g = build_field(3, 2).primitive_element()
    F = make_tame_field(3, 2, 4, g)
    assert (F.e, F.f, F.d, F.q) == (4, 2, 3, 9)
    assert F.w_res == g


@pytest.mark.parametrize("args", [(5, 1, 5, 1), (3, 1, 6, 1), (5, 1, 1, 0), (2, 1, 3, 1), (4, 1, 1, 1), (5, 1, 0, 1)])
def test_make_tame_field_rejects(args):
    with pytest.raises(ValueError):
        make_tame_field(*args)


def test_q2_unramified_is_accepted():
    assert make_tame_field(2, 3, 1, 1).q == 8


def test_c_input_examples():
    c = c_input(make_tame_field(5, 1, 1, 1), 1)
    assert (c.val, int(c.unit_res)) == (-1, 1)
    c = c_input(make_tame_field(5, 1, 2, 1), 3)
    assert (c.val, int(c.unit_res)) == (-2, 3)
    c = c_input(make_tame_field(7, 1, 3, 1), 1)
    assert (c.val, int(c.unit_res)) == (-3, 1)
    with pytest.raises(ValueError):
        c_input(make_tame_field(7, 1, 3, 1), 0)


def test_trace_residue_examples():
    q5 = make_tame_field(5, 1, 1, 1)
    for x in range(1, 5):
        assert int(trace_residue_pc(q5, c_input(q5, x))) == x
    # symbolic oracle: Tr(a + b pi) = 2a in F_0(pi), pi^2 = 5 w
    F = make_tame_field(5, 1, 2, 1)
    assert trace_residue_pc_oracle(F, (1,)) == (2,)
    assert int(trace_residue_pc(F, c_input(F, 1))) == 2
    F = make_tame_field(3, 1, 2, 2)
    assert trace_residue_pc_oracle(F, (1,)) == (1,)
    assert int(trace_residue_pc(F, c_input(F, 1))) == 1


def test_trace_residue_rejects_wrong_valuation():
    F = make_tame_field(5, 1, 2, 1)
    with pytest.raises(ValueError):
        trace_residue_pc(F, CClass(-1, F.residue_field.one()))
    with pytest.raises(ValueError):
        c_prime(F, CClass(0, F.residue_field.one()))


def test_c_prime_examples():
    F = make_tame_field(5, 1, 1, 1)
    for u in range(1, 5):
        cp = c_prime(F, c_input(F, u))
        assert (cp.val, int(cp.unit_res)) == (-1, 1)
    cp = c_prime(make_tame_field(5, 1, 2, 1), c_input(make_tame_field(5, 1, 2, 1), 1))
    assert (cp.val, int(cp.unit_res)) == (-2, 3)
    cp = c_prime(make_tame_field(7, 1, 3, 1), c_input(make_tame_field(7, 1, 3, 1), 1))
    assert (cp.val, int(cp.unit_res)) == (-3, 5)


def test_psi_minus_one_spec():
    for F in (make_tame_field(5, 1, 1, 1), make_tame_field(7, 2, 3, [0, 1])):
        spec = psi_minus_one_spec(F)
        assert spec == AdditiveCharSpec(-1, F.residue_field.one())
        cp = c_prime(F, c_input(F, 1))
        assert F.e_res / F.w_res * cp.unit_res == F.residue_field.one()
        assert twist_additive(canonical_psi_spec(F), cp) == spec


def test_canonical_psi_has_conductor_d():
    F = make_tame_field(11, 1, 4, 3)
    spec = canonical_psi_spec(F)
    assert spec.n == F.d == 3
    assert spec.twist == F.e_res / F.w_res


@pytest.mark.parametrize("F", tame_grid(pmax=19, fmax=2, emax=6, qmax=121, include_two=True),
                         ids=lambda F: f"p{F.p}f{F.f}e{F.e}w{F.w_res.index}")
def test_residue_formula_against_symbolic_oracle(F):
    one = F.residue_field.one()
    images = set()
    for n, u in enumerate(F.residue_field.units()):
        c = c_input(F, u)
        assert trace_residue_pc(F, c).coeffs == trace_residue_pc_oracle(F, u.coeffs, seed=n)
        cp = c_prime(F, c)
        assert cp.val == -1 - F.d
        assert trace_residue_pc(F, cp) == one
        images.add(cp.unit_res)
    assert images == {F.w_res / F.e_res}
