"""Tests for the integrals of motion and their exact symmetry algebra."""

from fractions import Fraction
from pathlib import Path

import pytest

from swalg.opalg import Operator, anticommutator, commutator, serialize_operator
from swalg.swsym import (build_generators, relation_catalog,
                         solve_linear_combination, verify_chain_substructure,
                         verify_substructure_qij, verify_su11,
                         verify_sw_relations, verify_top_substructure)

GOLDEN = Path(__file__).parent / "golden"


def test_build_rejects_single_coordinate():
    with pytest.raises(ValueError):
        build_generators(1)


def test_generator_b1_canonical_form_frozen(gs3):
    expected = (GOLDEN / "b1_n3.txt").read_text()
    assert serialize_operator(gs3.B[1]) + "\n" == expected


def test_generator_a12_canonical_form_frozen(gs3):
    expected = (GOLDEN / "a12_n3.txt").read_text()
    assert serialize_operator(gs3.a_op(1, 2)) + "\n" == expected


def test_hamiltonian_is_half_the_b_sum(gs3):
    total = Operator.zero(3)
    for i in (1, 2, 3):
        total = total + gs3.B[i]
    assert (gs3.H + gs3.H - total).is_zero


def test_angular_block_is_symmetric(gs3):
    assert (gs3.a_op(1, 2) - gs3.a_op(2, 1)).is_zero
    assert (gs3.j_op(1, 2) + gs3.j_op(2, 1)).is_zero


def test_commuting_spot_checks(gs3):
    assert commutator(gs3.H, gs3.a_op(1, 3)).is_zero
    assert commutator(gs3.B[2], gs3.B[3]).is_zero
    assert commutator(gs3.H, gs3.c_op(2, 3)).is_zero


def test_d_is_cached_commutator(gs3):
    direct = commutator(gs3.a_op(1, 2), gs3.a_op(2, 3))
    assert (gs3.d_op(1, 2, 3) - direct).is_zero


def test_relation_catalog_names_unique():
    names = [spec.name for spec in relation_catalog()]
    assert len(names) == len(set(names)) == 20


def test_full_relation_suite_two_coordinates(gs2):
    checks = verify_sw_relations(gs2)
    assert checks and all(c.passed for c in checks)


def test_full_relation_suite_three_coordinates(gs3):
    checks = verify_sw_relations(gs3)
    failed = [c.label for c in checks if not c.passed]
    assert not failed
    assert len(checks) == 73
    # relations needing four or five distinct indices cannot fire here
    fired = {c.name for c in checks}
    silent = {s.name for s in relation_catalog()} - fired
    assert silent == {"qa[A,D]4", "qa[D,D]2", "qa[D,D]1", "qa[C,D]4"}


def test_spot_mode_checks_one_tuple_each(gs3):
    checks = verify_sw_relations(gs3, spot=True)
    names = [c.name for c in checks]
    assert len(names) == len(set(names))
    assert all(c.passed for c in checks)


def test_pair_substructure_both_orders(gs3):
    for i, j in ((1, 2), (2, 1), (1, 3)):
        checks = verify_substructure_qij(gs3, i, j)
        assert len(checks) == 7
        assert all(c.passed for c in checks), [c.label for c in checks]


def test_chain_substructure_pivot(gs3):
    checks = verify_chain_substructure(gs3, 2)
    assert all(c.passed for c in checks), [c.label for c in checks]


def test_chain_substructure_rejects_bad_pivot(gs3):
    with pytest.raises(ValueError):
        verify_chain_substructure(gs3, 3)


def test_top_substructure(gs3):
    checks = verify_top_substructure(gs3)
    assert all(c.passed for c in checks), [c.label for c in checks]


def test_radial_ladder_and_full_sum(gs2, gs3):
    for gs in (gs2, gs3):
        checks = verify_su11(gs)
        assert {c.name for c in checks} == {"su11_raise", "su11_lower",
                                            "su11_pair", "full_sum_identity"}
        assert all(c.passed for c in checks)


def test_check_label_format(gs3):
    check = verify_sw_relations(gs3, names=["c_antisym"])[0]
    assert check.label == "c_antisym@1,2"
    assert check.to_dict()["passed"] is True


def test_solve_linear_combination_recovers_commutator(gs3):
    # [B_i, C_ij] closes on {B_i,B_j} and s^2 A_ij with rational weights
    target = commutator(gs3.B[1], gs3.c_op(1, 2))
    s2 = gs3.s_poly() * gs3.s_poly()
    basis = [
        ("acomm_bb", anticommutator(gs3.B[1], gs3.B[2])),
        ("s2_a12", s2 * gs3.a_op(1, 2)),
        ("one", Operator.identity(3)),
    ]
    combo = solve_linear_combination(target, basis)
    assert combo == {"acomm_bb": Fraction(-4), "s2_a12": Fraction(16)}


def test_solve_linear_combination_reports_failure(gs3):
    target = commutator(gs3.B[1], gs3.c_op(1, 2))
    basis = [("b1", gs3.B[1]), ("one", Operator.identity(3))]
    assert solve_linear_combination(target, basis) is None
