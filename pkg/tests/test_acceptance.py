"""Acceptance gate: one test per verification check, at its stated tolerance.

Each test prints the check's one-line report (status, measured, expected,
tolerance) and fails if the check failed.  Run with ``pytest -s`` to see the
lines for passing checks too.
"""

import pytest

from diracboost.verify import run_verification


@pytest.fixture(scope="module")
def results():
    return {r.check_id: r for r in run_verification()}


def _gate(results, check_id):
    result = results[check_id]
    print(result.line())
    assert result.passed, result.line()


def test_c01_unboosted_opposite_helicity_global_entanglement(results):
    _gate(results, "c01")


def test_c02_spin_spin_separability_in_every_frame(results):
    _gate(results, "c02")


def test_c03_parallel_boost_leaves_measures_invariant(results):
    _gate(results, "c03")


def test_c04_transverse_boost_saturates_global_entanglement(results):
    _gate(results, "c04")


def test_c05_equal_label_pair_angle_independence(results):
    _gate(results, "c05")


def test_c06_equal_label_negativity_degrades_monotonically(results):
    _gate(results, "c06")


def test_c07_shared_momentum_state_extremal_in_rest_frame(results):
    _gate(results, "c07")


def test_c08_chiral_projections_boost_invariant(results):
    _gate(results, "c08")


def test_c09_closed_form_bloch_matches_pipeline(results):
    _gate(results, "c09")


def test_c10_randomized_algebraic_suites(results):
    _gate(results, "c10")
