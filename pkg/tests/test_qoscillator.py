"""Tests for structure functions, constraint solutions, and the four
independent spectrum routes."""

import math
from fractions import Fraction

import pytest

from swalg.qoscillator import (NumberOperatorLaw, QuadAlgConstants,
                               casimir_cubic, chain_z_values,
                               crosscheck_chain, crosscheck_pair,
                               crosscheck_top, group_levels,
                               nested_sum_value, nu_values, pair_constants,
                               pair_solutions, sorted_energies,
                               spectra_agree, spectrum_cartesian,
                               spectrum_chain, spectrum_hyperspherical,
                               spectrum_pairwise, sqrt_value,
                               structure_function_from_roots,
                               structure_function_quartic, top_solutions)

HALF = Fraction(1, 2)


# -- parameter bookkeeping ---------------------------------------------------

def test_nu_values_exact_and_float():
    vals = nu_values([Fraction(1), Fraction(3, 8), Fraction(0), Fraction(3)])
    assert vals == [Fraction(3, 2), Fraction(1), HALF, Fraction(5, 2)]
    approx = nu_values([Fraction(1, 4)])[0]
    assert isinstance(approx, float)
    assert approx == pytest.approx(math.sqrt(3) / 2)


def test_sqrt_value_modes():
    assert sqrt_value(Fraction(9, 4)) == Fraction(3, 2)
    assert isinstance(sqrt_value(Fraction(2)), float)
    assert sqrt_value(2.0) == pytest.approx(math.sqrt(2))


def test_nested_sum_value_base_case():
    # a single coordinate with label 2*nu gives the zero of the empty sum
    nu = Fraction(3, 2)
    a = (4 * nu * nu - 1) / 8
    assert nested_sum_value(1, a, 2 * nu) == 0


def test_nested_sum_value_matches_two_coordinate_form():
    # two coordinates, label z: value (2 + z^2 - 8(a1+a2)) / 4
    a1, a2, z = Fraction(1), Fraction(3), Fraction(7)
    assert nested_sum_value(2, a1 + a2, z) == Fraction(2 + 49 - 32, 4)


def test_chain_z_values_recurrence():
    nus = [Fraction(3, 2), Fraction(5, 2), HALF]
    assert chain_z_values(nus, [1, 0]) == [3, 14, 17]
    # each link adds 4q + 2nu + 2 on top of the previous label
    vals = chain_z_values(nus, [2, 3])
    assert vals[1] - vals[0] == 4 * 2 + 2 * nus[1] + 2
    assert vals[2] - vals[1] == 4 * 3 + 2 * nus[2] + 2


def test_number_operator_law_linear_and_quadratic():
    lin = NumberOperatorLaw(gamma=0, epsilon=Fraction(16), shift=HALF)
    assert lin.eigenvalue(2) == 10
    quad = NumberOperatorLaw(gamma=Fraction(8), epsilon=Fraction(16),
                             shift=HALF)
    # 4*(w^2 - 1/4 - 1/4) at w = 5/2
    assert quad.eigenvalue(2) == 4 * (Fraction(25, 4) - HALF)


def test_casimir_cubic_scalar_consistency():
    c = QuadAlgConstants(alpha=Fraction(8), gamma=Fraction(0),
                         delta=Fraction(-2), epsilon=Fraction(16),
                         zeta=Fraction(0), a=Fraction(0),
                         d=Fraction(-40), z=Fraction(12))
    e, f, g = Fraction(2), Fraction(3), Fraction(5)
    val = casimir_cubic(c, e, f, g)
    by_hand = (g * g - c.alpha * 2 * e * e * f
               + (c.alpha * c.gamma - c.delta) * 2 * e * f
               - c.gamma * 2 * e * f * f
               + (c.gamma * c.gamma - c.epsilon) * f * f
               + (c.gamma * c.delta - 2 * c.zeta) * f
               + Fraction(2, 3) * c.a * e ** 3
               + (c.d + c.a * c.gamma / 3 + c.alpha ** 2) * e * e
               + (c.a * c.epsilon / 3 + c.alpha * c.delta + 2 * c.z) * e)
    assert val == by_hand


# -- constraint solutions ----------------------------------------------------

def test_pair_solution_roots_and_shift():
    sols = pair_solutions(Fraction(3, 2), Fraction(5, 2), p=4)
    assert len(sols) == 4
    by_signs = {s.signs: s for s in sols}
    plus = by_signs[(1, -1)]
    assert plus.shift == HALF + Fraction(3, 4)
    assert set(plus.roots_n) == {0, Fraction(-3, 2), 5, 5 + Fraction(5, 2)}
    # the central value doubles as the sum of the two one-coordinate energies
    assert plus.extras["m_red"] == 2 * (2 * 5 + Fraction(3, 2)
                                        + Fraction(5, 2))
    assert plus.positive


def test_pair_solution_unphysical_branch_flagged():
    sols = {s.signs: s for s in pair_solutions(Fraction(3, 2),
                                               Fraction(5, 2), p=2)}
    # roots (0, 3/2, 3, 1/2) put a sign change inside the window
    assert not sols[(-1, 1)].positive


def test_top_solution_roots_vanish_at_cutoff():
    z1 = 4 * 2 + 2 * Fraction(3, 2) + 2  # one link below the top
    for sol in top_solutions(3, Fraction(5, 2), z1, p=3):
        phi = sol.factorized()
        assert phi.eval_n(0) == 0
        assert phi.eval_n(sol.p + 1) == 0


def test_structure_function_shift_evaluation():
    phi = structure_function_from_roots((0, 2), HALF)
    # phi(n) = (n + 1/2)(n + 1/2 - 2) once the shift moves into xi
    assert phi.eval_n(Fraction(3, 2)) == 2 * 0
    assert phi.eval_n(0) == HALF * (HALF - 2)


# -- structure-function cross-checks ----------------------------------------

def test_pair_crosscheck_ratio_is_sixteen():
    for signs in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        chk = crosscheck_pair(Fraction(1), Fraction(3), HALF, p=4,
                              signs=signs)
        assert chk.consistent
        assert chk.ratio == 16
        assert chk.max_rel_dev == 0.0
        assert len(chk.points) >= 5


def test_pair_crosscheck_irrational_couplings():
    chk = crosscheck_pair(Fraction(1, 4), Fraction(2), HALF, p=3)
    assert chk.consistent
    assert chk.ratio == pytest.approx(16.0, rel=1e-12)


def test_top_crosscheck_reports_mismatch():
    z1 = 4 * 1 + 2 * Fraction(3, 2) + 2
    chk = crosscheck_top(3, [Fraction(1), Fraction(1), Fraction(3)], HALF,
                         p=3, z_param=z1)
    assert not chk.consistent
    assert "degree" in chk.note
    assert len(chk.points) >= 9


def test_chain_crosscheck_reports_mismatch():
    chk = crosscheck_chain(3, 2, [Fraction(1), Fraction(1), Fraction(3)],
                           p=2, zm_param=2 * Fraction(3, 2),
                           yp_param=2 * (2 * 1 + Fraction(5, 2) + 1))
    assert not chk.consistent
    assert "degree" in chk.note


def test_crosscheck_to_dict_roundtrips():
    chk = crosscheck_pair(Fraction(1), Fraction(1), HALF, p=2)
    d = chk.to_dict()
    assert d["consistent"] is True
    assert d["ratio"] == 16.0
    assert d["family"] == "pair"


# -- spectra through four routes ---------------------------------------------

def _routes(nus, branches, n_max):
    return (spectrum_cartesian(nus, branches, n_max),
            spectrum_pairwise(nus, branches, n_max),
            spectrum_hyperspherical(nus, branches, n_max),
            spectrum_chain(nus, branches, n_max))


def test_routes_agree_exactly_for_rational_couplings():
    nus = nu_values([Fraction(1), Fraction(3)])
    cart, pair, hyper, chain = _routes(nus, (1, 1), 6)
    assert cart == pair == hyper == chain
    assert cart[0] == Fraction(3, 2) + Fraction(5, 2) + 2
    assert len(cart) == sum(k + 1 for k in range(7))


def test_routes_agree_for_irrational_couplings():
    nus = nu_values([Fraction(1, 4), Fraction(1), Fraction(2)])
    cart, pair, hyper, chain = _routes(nus, (1, 1, 1), 5)
    for other in (pair, hyper, chain):
        assert spectra_agree(cart, other, rel_tol=1e-12)


def test_routes_agree_with_mixed_branches():
    nus = nu_values([Fraction(0), Fraction(1), Fraction(3, 8)])
    cart, pair, hyper, chain = _routes(nus, (-1, 1, 1), 5)
    assert cart == pair == hyper == chain
    assert cart[0] == -HALF + Fraction(3, 2) + 1 + 3


def test_cartesian_route_degeneracies_are_binomial():
    nus = nu_values([Fraction(1)] * 4)
    levels = group_levels([float(e)
                           for e in spectrum_cartesian(nus, (1,) * 4, 6)])
    counts = [c for _e, c in levels]
    assert counts == [math.comb(m + 3, 3) for m in range(7)]


def test_sorted_energies_sorts_mixed_values():
    vals = sorted_energies([Fraction(5), 2.5, Fraction(3, 2)])
    assert [float(v) for v in vals] == [1.5, 2.5, 5.0]


def test_spectra_agree_rejects_mismatch():
    assert not spectra_agree([1.0, 2.0], [1.0, 2.0 + 1e-6])
    assert not spectra_agree([1.0], [1.0, 2.0])


def test_pair_constants_central_value():
    # K' = 4(8a_i - 3) m^2 - 8 b (8a_i - 3)(8a_j - 3)
    c, kprime = pair_constants(Fraction(1), Fraction(3), HALF, Fraction(28))
    assert kprime == 4 * 5 * 28 ** 2 - 4 * 5 * 21
    assert c.alpha == 8 and c.gamma == 0 and c.a == 0
    assert c.epsilon == 16 * HALF * 2
