"""Tests for the numeric oracles: polynomial recurrences, the
finite-difference eigensolver, and residuals of the separated equations."""

import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, eval_jacobi

from swalg.qoscillator import nu_values, spectrum_hyperspherical
from swalg.spectral import (Grid1D, SeparatedSolution, angular_residual,
                            cartesian_psi, cartesian_residual,
                            degeneracy_count, fd_eigen_1d, jacobi_eval,
                            laguerre_eval, radial_residual,
                            sample_box_points)


# -- orthogonal polynomial recurrences ----------------------------------------

def test_laguerre_frozen_value():
    assert laguerre_eval(2, 1.0, 2.0) == -1.0


def test_laguerre_matches_reference_implementation():
    xs = np.linspace(0.0, 9.0, 13)
    for n in range(6):
        for alpha in (0.0, 0.5, 1.5, 2.75):
            mine = laguerre_eval(n, alpha, xs)
            ref = eval_genlaguerre(n, alpha, xs)
            assert np.allclose(mine, ref, rtol=1e-12, atol=1e-12)


def test_jacobi_matches_reference_implementation():
    xs = np.linspace(-0.95, 0.95, 11)
    for n in range(6):
        for a, b in ((0.0, 0.0), (1.5, 0.5), (2.0, 3.25), (0.3, 1.7)):
            mine = jacobi_eval(n, a, b, xs)
            ref = eval_jacobi(n, a, b, xs)
            assert np.allclose(mine, ref, rtol=1e-12, atol=1e-12)


def test_polynomials_reject_negative_degree():
    with pytest.raises(ValueError):
        laguerre_eval(-1, 0.0, 1.0)
    with pytest.raises(ValueError):
        jacobi_eval(-2, 0.0, 0.0, 0.5)


# -- degeneracy ----------------------------------------------------------------

def _levels_by_enumeration(n_coords: int, level: int) -> int:
    return sum(1 for tup in product(range(level + 1), repeat=n_coords)
               if sum(tup) == level)


def test_degeneracy_spot_checks():
    assert degeneracy_count(3, 0) == 1
    assert degeneracy_count(3, 2) == 6
    for n_coords in (2, 3, 4):
        for level in range(6):
            assert degeneracy_count(n_coords, level) == \
                _levels_by_enumeration(n_coords, level)


def test_degeneracy_rejects_bad_input():
    with pytest.raises(ValueError):
        degeneracy_count(0, 1)


# -- finite-difference eigensolver ----------------------------------------------

def test_grid_spacing_and_points():
    g = Grid1D(0.0, 1.0, 9)
    assert g.h == pytest.approx(0.1)
    assert g.points[0] == pytest.approx(0.1)
    assert g.points[-1] == pytest.approx(0.9)


def test_fd_eigen_matches_algebraic_levels_with_barrier():
    res = fd_eigen_1d(Fraction(1), Fraction(1, 2), num_levels=5, points=1500)
    nu = 1.5
    s = 1.0
    exact = np.array([2 * s * (2 * q + nu + 1) for q in range(5)])
    assert np.max(np.abs(res.levels - exact) / exact) < 1e-6
    assert np.all((res.ratios > 3.5) & (res.ratios < 4.5))


def test_fd_eigen_free_axis_interleaves_parities():
    res = fd_eigen_1d(0, 2.0, num_levels=5, points=1500)
    s = 2.0
    exact = np.array([s * (2 * m + 1) for m in range(5)])
    assert np.max(np.abs(res.levels - exact) / exact) < 1e-6


def test_fd_eigen_rejects_bad_couplings():
    with pytest.raises(ValueError):
        fd_eigen_1d(-0.1, 1.0)
    with pytest.raises(ValueError):
        fd_eigen_1d(1.0, 0.0)


# -- explicit wavefunction residuals --------------------------------------------

def test_cartesian_residual_product_state():
    b = Fraction(7, 10)
    scale = float(2 * b) ** -0.25
    pts = sample_box_points(3, 24, scale, seed=7)
    r = cartesian_residual((Fraction(1), Fraction(3, 8), Fraction(9, 4)), b,
                           (2, 1, 3), (1, 1, 1), pts)
    assert r < 1e-8


def test_cartesian_residual_negative_branch():
    b = Fraction(7, 10)
    pts = sample_box_points(3, 20, float(2 * b) ** -0.25, seed=7)
    r = cartesian_residual((Fraction(1), Fraction(3, 8), Fraction(9, 4)), b,
                           (2, 1, 3), (1, -1, 1), pts)
    assert r < 1e-8


def test_cartesian_psi_energy_scaling():
    # ground state of one free coordinate pair: psi > 0 on the orthant
    psi = cartesian_psi((0, 0), 0.5, (0, 0), (1, 1))
    vals = psi(np.array([[0.5, 0.5], [1.0, 2.0]]))
    assert np.all(vals > 0)


def test_separated_solution_residuals_all_levels():
    sol = SeparatedSolution(a_values=(1.0, 0.375, 2.25, 0.5), b=0.7,
                            branches=(1, 1, 1, 1), taus=(2, 1, 3), tau_r=2)
    thetas = np.linspace(0.25, 1.3, 25)
    for level in (1, 2, 3):
        assert angular_residual(sol, level, thetas) < 1e-7
    scale = (2 * 0.7) ** -0.25
    rs = np.linspace(0.4 * scale, 2.2 * scale, 25)
    assert radial_residual(sol, rs) < 1e-7


def test_separated_solution_mixed_branch_residuals():
    sol = SeparatedSolution(a_values=(1.0, 0.375, 0.0), b=1.25,
                            branches=(1, -1, -1), taus=(1, 2), tau_r=1)
    thetas = np.linspace(0.25, 1.3, 25)
    for level in (1, 2):
        assert angular_residual(sol, level, thetas) < 1e-7
    assert radial_residual(sol, np.linspace(0.3, 1.6, 25)) < 1e-7


def test_separated_solution_two_coordinates():
    sol = SeparatedSolution(a_values=(0.375, 1.0), b=0.5,
                            branches=(1, 1), taus=(2,), tau_r=3)
    thetas = np.linspace(0.25, 1.3, 25)
    assert angular_residual(sol, 1, thetas) < 1e-7
    assert radial_residual(sol, np.linspace(0.4, 2.4, 25)) < 1e-7


def test_separated_energy_matches_algebraic_route():
    a_vals = (Fraction(1), Fraction(3, 8), Fraction(3))
    nus = nu_values(a_vals)
    sol = SeparatedSolution(a_values=tuple(float(a) for a in a_vals), b=0.5,
                            branches=(1, 1, 1), taus=(1, 2), tau_r=1)
    reduced = 2 * 1 + 2 * (1 + 2) + float(sum(nus)) + 3
    assert sol.reduced_energy == pytest.approx(reduced, rel=1e-14)
    table = [float(e) for e in spectrum_hyperspherical(nus, (1, 1, 1), 4)]
    assert any(abs(sol.reduced_energy - e) < 1e-12 for e in table)


def test_separated_solution_validates_lengths():
    with pytest.raises(ValueError):
        SeparatedSolution(a_values=(1.0, 1.0), b=0.5, branches=(1,),
                          taus=(0,), tau_r=0)


def test_accumulated_parameter_recurrence():
    sol = SeparatedSolution(a_values=(1.0, 0.375, 2.25), b=0.5,
                            branches=(1, 1, 1), taus=(2, 1), tau_r=0)
    nus = sol.nus
    for level in (1, 2):
        assert sol.x_param(level) == pytest.approx(
            2 * sol.taus[level - 1] + nus[level - 1] + sol.x_param(level + 1)
            + 1)
    assert sol.x_param(3) == pytest.approx(nus[2])


def test_sample_box_points_deterministic():
    one = sample_box_points(3, 8, 1.2, seed=5)
    two = sample_box_points(3, 8, 1.2, seed=5)
    assert np.array_equal(one, two)
    assert one.shape == (8, 3)
    assert np.all(one > 0)
