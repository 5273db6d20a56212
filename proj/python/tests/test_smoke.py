import math

import pytest

import latsum


def test_special_lattices_and_kissing():
    assert latsum.kissing_number(latsum.special_lattice("A2")) == 6
    assert latsum.kissing_number(latsum.special_lattice("D3")) == 12
    assert latsum.kissing_number(latsum.special_lattice("D4")) == 24
    assert latsum.kissing_number(latsum.special_lattice("E8")) == 240


def test_epstein_zeta_square_lattice():
    z = latsum.epstein_zeta(latsum.special_lattice("Z2"), 4.0)
    # 4 * zeta(2) * beta(2)
    assert z.value == pytest.approx(6.02681203969194, abs=1e-10)
    assert z.tail_bound < 1e-10


def test_theta_jacobi_identity():
    L = latsum.from_domain_point(0.3, 1.2)
    for alpha in (0.25, 1.0, 3.0):
        lhs = latsum.lattice_theta(L, alpha).value
        rhs = alpha ** -1.0 * latsum.lattice_theta(latsum.dual(L), 1.0 / alpha).value
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_energy_paths_agree():
    f = latsum.RadialPotential.lennard_jones(1, 1, 6, 12)
    L = latsum.special_lattice("Lambda1")
    a = latsum.energy_direct(f, L, 1.0).value
    b = latsum.energy_theta_integral(f, L, 1.0).value
    assert a == pytest.approx(b, rel=1e-8)


def test_minimize_scale_matches_closed_form():
    f = latsum.RadialPotential.lennard_jones(1, 1, 6, 12)
    L = latsum.special_lattice("Lambda1")
    m = latsum.minimize_scale(f, L, 0.3, 3.0)
    assert m.lambda_star == pytest.approx(latsum.optimal_scale(L, 1, 1, 6, 12), abs=1e-6)
    assert m.value == pytest.approx(latsum.min_energy_closed_form(L, 1, 1, 6, 12), abs=1e-10)


def test_epsilon_zero_round_trip():
    eps = latsum.epsilon_zero(0.769)
    assert latsum.h_of_epsilon(eps) == pytest.approx(0.769, abs=1e-12)
    assert eps == pytest.approx(1.1485753, abs=1e-5)


def test_c_function_square_vs_triangular_region():
    assert latsum.c_function(0.0, 1.0) > 2.0 / 3.0
    with pytest.raises(latsum.LatsumError):
        latsum.c_function(0.5, math.sqrt(3.0) / 2.0)


def test_window_for_counterexample_potential():
    V = latsum.RadialPotential.counterexample_v()
    ivs = latsum.nonminimality_window(V, 1.3, 2.2, 91, step=2e-2, y_hi=1.3)
    assert len(ivs) == 1
    assert 1.4 < ivs[0].lo < 1.6
    assert 1.8 < ivs[0].hi < 2.1
