import numpy as np

import diracboost.states
from diracboost.kinematics import BoostSpec, bispinor_boost
from diracboost.verify import (
    CheckResult,
    _check_chiral_invariance,
    _check_psi3_extremum,
    run_verification,
)


def test_registry_covers_all_checks_once():
    results = run_verification()
    ids = [r.check_id for r in results]
    assert ids == [f"c{i:02d}" for i in range(1, 11)]


def test_check_result_line_format():
    ok = CheckResult("c99", "demo check", True, 0.5, 0.5, 1e-10, "extra")
    line = ok.line()
    assert line.startswith("PASS c99 demo check:")
    for fragment in ("measured=0.5", "expected=0.5", "tolerance=1e-10", "[extra]"):
        assert fragment in line
    bad = CheckResult("c99", "demo check", False, 0.7, 0.5, 1e-10)
    assert bad.line().startswith("FAIL c99")
    assert bad.to_dict()["passed"] is False


def test_corrupted_boost_sign_is_caught(monkeypatch):
    """Flipping the boost rapidity sign must trip the rest-frame extremum
    check: the shared-momentum state then never reaches its rest frame on
    the scanned grid, so the minimum leaves omega = omega0."""
    assert _check_psi3_extremum().passed

    def flipped(b: BoostSpec) -> np.ndarray:
        return bispinor_boost(BoostSpec(-b.rapidity, b.direction))

    monkeypatch.setattr(diracboost.states, "bispinor_boost", flipped)
    corrupted = _check_psi3_extremum()
    assert not corrupted.passed
    assert corrupted.check_id == "c07"
    # the chiral-invariance check also reports its named id under corruption
    chiral = _check_chiral_invariance()
    assert not chiral.passed
    assert chiral.check_id == "c08"
