"""Built-in verification suite: one check per acceptance criterion.

Each check computes a measured quantity with its expected value and
tolerance and reports pass/fail; the CLI `verify` subcommand and the
acceptance test module both consume :func:`run_verification`.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .kinematics import (
    GAMMA5,
    BoostSpec,
    FourMomentum,
    bispinor_boost,
    bispinor_u,
    bispinor_v,
    boost_four_vector,
)
from .measures import (
    analytic_boosted_bloch,
    bloch_vector,
    global_entanglement,
    negativity,
    single_qubit_entropies,
    single_qubit_reductions,
    spin_spin_reduced,
)
from .states import (
    ChiralLabelPair,
    boost_two_particle,
    chiral_project,
    density_matrix,
    make_psi1,
    make_psi2,
    make_psi3,
)

GRID_OMEGAS = np.linspace(0.0, 5.0, 20)
GRID_THETAS = np.linspace(0.0, math.pi / 2.0, 10)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    passed: bool
    measured: float
    expected: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = (
            f"{status} {self.check_id} {self.description}: "
            f"measured={self.measured:.6g} expected={self.expected:.6g} "
            f"tolerance={self.tolerance:.6g}"
        )
        if self.detail:
            text += f" [{self.detail}]"
        return text

    def to_dict(self) -> dict:
        return asdict(self)


def _boosted_measures(rho0: np.ndarray, omega: float, theta: float) -> tuple[float, float]:
    boosted, _ = boost_two_particle(rho0, BoostSpec.from_polar_angle(omega, theta))
    return global_entanglement(boosted), negativity(spin_spin_reduced(boosted))


def _check_psi1_rest_eg() -> CheckResult:
    measured = global_entanglement(density_matrix(make_psi1(1.0)))
    expected, tol = 0.5, 1e-10
    return CheckResult(
        "c01",
        "unboosted opposite-helicity state has global entanglement 1/2",
        abs(measured - expected) <= tol,
        measured,
        expected,
        tol,
    )


def _check_psi1_negativity_grid() -> CheckResult:
    rho0 = density_matrix(make_psi1(1.0))
    worst = 0.0
    for om in GRID_OMEGAS:
        for th in GRID_THETAS:
            _, neg = _boosted_measures(rho0, float(om), float(th))
            worst = max(worst, abs(neg))
    tol = 1e-10
    return CheckResult(
        "c02",
        "opposite-helicity state stays spin-spin separable in every frame",
        worst <= tol,
        worst,
        0.0,
        tol,
        f"20x10 grid, omega in [0,5], theta in [0,pi/2]",
    )


def _check_psi1_parallel_invariance() -> CheckResult:
    rho0 = density_matrix(make_psi1(1.0))
    eg0 = global_entanglement(rho0)
    worst = 0.0
    for om in GRID_OMEGAS:
        eg, _ = _boosted_measures(rho0, float(om), 0.0)
        worst = max(worst, abs(eg - eg0))
    tol = 1e-10
    return CheckResult(
        "c03",
        "boosts parallel to the momenta leave global entanglement unchanged",
        worst <= tol,
        worst,
        0.0,
        tol,
        "theta=0, omega in [0,5]",
    )


def _check_psi1_saturation() -> CheckResult:
    rho0 = density_matrix(make_psi1(1.0))
    measured, _ = _boosted_measures(rho0, 10.0, math.pi / 2.0)
    monotone = True
    min_step = math.inf
    for th in GRID_THETAS:
        prev = None
        for om in GRID_OMEGAS:
            eg, _ = _boosted_measures(rho0, float(om), float(th))
            if prev is not None:
                min_step = min(min_step, eg - prev)
                if eg - prev < -1e-12:
                    monotone = False
            prev = eg
    passed = measured > 0.99 and monotone
    return CheckResult(
        "c04",
        "perpendicular high-rapidity boost saturates global entanglement",
        passed,
        measured,
        0.99,
        0.0,
        f"threshold check (measured > expected); monotone nondecreasing in omega: "
        f"{monotone} (min grid step {min_step:.3g})",
    )


def _check_psi2_angle_independence() -> CheckResult:
    rho0 = density_matrix(make_psi2(1.0))
    thetas = (0.0, math.pi / 8.0, math.pi / 4.0, math.pi / 2.0)
    spread_eg = 0.0
    spread_neg = 0.0
    for om in GRID_OMEGAS:
        egs, negs = [], []
        for th in thetas:
            eg, neg = _boosted_measures(rho0, float(om), th)
            egs.append(eg)
            negs.append(neg)
        spread_eg = max(spread_eg, max(egs) - min(egs))
        spread_neg = max(spread_neg, max(negs) - min(negs))
    measured = max(spread_eg, spread_neg)
    tol = 1e-10
    return CheckResult(
        "c05",
        "equal-helicity-pair state measures are independent of the boost angle",
        measured <= tol,
        measured,
        0.0,
        tol,
        f"max spread over theta in {{0, pi/8, pi/4, pi/2}}: "
        f"E_G {spread_eg:.3g}, negativity {spread_neg:.3g}",
    )


def _check_psi2_degradation() -> CheckResult:
    rho0 = density_matrix(make_psi2(1.0))
    expected = 1.0 / math.cosh(1.0) ** 2
    tol = 1e-9
    measured = negativity(spin_spin_reduced(rho0))
    omegas = np.linspace(0.0, 10.0, 41)
    values = [_boosted_measures(rho0, float(om), 0.0)[1] for om in omegas]
    nonincreasing = all(b - a <= 1e-12 for a, b in zip(values, values[1:]))
    tail = values[-1]
    passed = abs(measured - expected) <= tol and nonincreasing and tail < 0.01
    return CheckResult(
        "c06",
        "equal-helicity-pair negativity starts at sech^2(1) and degrades",
        passed,
        measured,
        expected,
        tol,
        f"nonincreasing over omega in [0,10]: {nonincreasing}; N(omega=10) = {tail:.3g}",
    )


def _check_psi3_extremum() -> CheckResult:
    rho0 = density_matrix(make_psi3(1.0))
    omegas = np.linspace(0.0, 3.0, 61)
    egs, negs = [], []
    for om in omegas:
        eg, neg = _boosted_measures(rho0, float(om), 0.0)
        egs.append(eg)
        negs.append(neg)
    i_min = int(np.argmin(egs))
    i_rest = 20  # omega = 1.00 on the 0.05-spaced grid
    measured = egs[i_rest]
    expected, tol = 0.5, 1e-9
    neg_rest = negs[i_rest]
    local_max = negs[i_rest] > negs[i_rest - 1] and negs[i_rest] > negs[i_rest + 1]
    passed = (
        i_min == i_rest
        and abs(measured - expected) <= tol
        and abs(neg_rest - 1.0) <= tol
        and local_max
    )
    return CheckResult(
        "c07",
        "comoving state reaches its global-entanglement minimum in its rest frame",
        passed,
        measured,
        expected,
        tol,
        f"argmin at omega={omegas[i_min]:.2f}; N(rest)={neg_rest:.12g}, "
        f"negativity local max at rest: {local_max}",
    )


def _check_chiral_invariance() -> CheckResult:
    rng = np.random.default_rng(20250821)
    samples = [
        (float(om), float(th))
        for om, th in zip(rng.uniform(0.0, 5.0, 25), rng.uniform(0.0, math.pi, 25))
    ]
    tol = 1e-12
    worst = 0.0
    details = []
    for name, maker in (("psi2", make_psi2), ("psi3", make_psi3)):
        for f in (0, 1):
            for g in (0, 1):
                rho = chiral_project(maker(1.0), ChiralLabelPair(f, g))
                dist = 0.0
                for om, th in samples:
                    boosted, _ = boost_two_particle(
                        rho, BoostSpec.from_polar_angle(om, th)
                    )
                    dist = max(dist, float(np.linalg.norm(boosted - rho)))
                worst = max(worst, dist)
                details.append(f"{name} f={f} g={g}: {dist:.3g}")
    return CheckResult(
        "c08",
        "chirality-projected states are unchanged by every boost",
        worst <= tol,
        worst,
        0.0,
        tol,
        "; ".join(details),
    )


def _check_analytic_bloch() -> CheckResult:
    tol = 1e-9
    worst = 0.0
    for maker in (make_psi2, make_psi3):
        st = maker(1.0)
        rho0 = density_matrix(st)
        for om in GRID_OMEGAS:
            for th in GRID_THETAS:
                boost = BoostSpec.from_polar_angle(float(om), float(th))
                boosted, _ = boost_two_particle(rho0, boost)
                numeric = {
                    tag: bloch_vector(r)
                    for tag, r in single_qubit_reductions(boosted).items()
                }
                analytic = analytic_boosted_bloch(st, boost)
                for tag in numeric:
                    diff = np.max(
                        np.abs(numeric[tag].as_array() - analytic[tag].as_array())
                    )
                    worst = max(worst, float(diff))
    return CheckResult(
        "c09",
        "closed-form boosted Bloch vectors match the numeric pipeline",
        worst <= tol,
        worst,
        0.0,
        tol,
        "both shared-momentum scenarios, 20x10 grid",
    )


def _random_momentum(rng) -> FourMomentum:
    mass = rng.uniform(0.5, 2.0)
    rap = rng.uniform(0.0, 3.0)
    n = rng.normal(size=3)
    n = n / np.linalg.norm(n)
    return FourMomentum.from_rapidity(mass, rap, n)


def _suite_orthonormality(rng) -> float:
    worst = 0.0
    for _ in range(50):
        p = _random_momentum(rng)
        minus_p = FourMomentum(p.mass, p.energy, -p.p3)
        us = [bispinor_u(p, s).amplitudes for s in (1, 2)]
        vs = [bispinor_v(p, s).amplitudes for s in (1, 2)]
        vs_minus = [bispinor_v(minus_p, s).amplitudes for s in (1, 2)]
        for a in range(2):
            for b in range(2):
                delta = 1.0 if a == b else 0.0
                worst = max(worst, abs(np.vdot(us[a], us[b]) - delta))
                worst = max(worst, abs(np.vdot(vs[a], vs[b]) - delta))
                worst = max(worst, abs(np.vdot(us[a], vs_minus[b])))
        completeness = sum(np.outer(u, u.conj()) for u in us) + sum(
            np.outer(v, v.conj()) for v in vs_minus
        )
        worst = max(worst, float(np.max(np.abs(completeness - np.eye(4)))))
    return worst


def _suite_boost_algebra(rng) -> float:
    worst = 0.0
    eye = np.eye(4)
    for _ in range(50):
        n = rng.normal(size=3)
        n = n / np.linalg.norm(n)
        w1, w2 = rng.uniform(-2.5, 2.5, 2)
        s1 = bispinor_boost(BoostSpec(w1, n))
        s1_inv = bispinor_boost(BoostSpec(-w1, n))
        s2 = bispinor_boost(BoostSpec(w2, n))
        s12 = bispinor_boost(BoostSpec(w1 + w2, n))
        worst = max(worst, float(np.max(np.abs(s1 @ s1_inv - eye))))
        worst = max(worst, float(np.max(np.abs(s1 @ s2 - s12))))
    return worst


def _suite_chiral_commutator(rng) -> float:
    worst = 0.0
    for _ in range(50):
        n = rng.normal(size=3)
        n = n / np.linalg.norm(n)
        s = bispinor_boost(BoostSpec(rng.uniform(-3.0, 3.0), n))
        worst = max(worst, float(np.max(np.abs(GAMMA5 @ s - s @ GAMMA5))))
    return worst


def _suite_minkowski(rng) -> float:
    worst = 0.0
    for _ in range(50):
        p = _random_momentum(rng)
        n = rng.normal(size=3)
        n = n / np.linalg.norm(n)
        boosted = boost_four_vector(p, BoostSpec(rng.uniform(-3.0, 3.0), n))
        worst = max(
            worst,
            abs(boosted.minkowski_norm_sq() - p.mass**2) / p.mass**2,
        )
    return worst


def _suite_dual_path_eg(rng) -> float:
    worst = 0.0
    for _ in range(50):
        v = rng.normal(size=16) + 1j * rng.normal(size=16)
        v = v / np.linalg.norm(v)
        rho = np.outer(v, v.conj())
        direct = sum(single_qubit_entropies(rho).values()) / 4.0
        via_bloch = 1.0 - sum(
            bloch_vector(r).norm_sq for r in single_qubit_reductions(rho).values()
        ) / 4.0
        worst = max(worst, abs(direct - via_bloch))
    return worst


def _check_algebraic_suites() -> CheckResult:
    rng = np.random.default_rng(20250822)
    suites = (
        ("orthonormality/completeness", _suite_orthonormality(rng), 1e-12),
        ("boost inverse/composition", _suite_boost_algebra(rng), 1e-12),
        ("chirality commutator", _suite_chiral_commutator(rng), 1e-14),
        ("Minkowski norm (relative)", _suite_minkowski(rng), 1e-10),
        ("dual-path global entanglement", _suite_dual_path_eg(rng), 1e-12),
    )
    ratios = [err / tol for _, err, tol in suites]
    detail = "; ".join(f"{name}: {err:.3g} (tol {tol:.0e})" for name, err, tol in suites)
    measured = max(ratios)
    return CheckResult(
        "c10",
        "algebraic property suites (worst error as a fraction of its tolerance)",
        measured <= 1.0,
        measured,
        0.0,
        1.0,
        detail,
    )


_CHECKS = (
    _check_psi1_rest_eg,
    _check_psi1_negativity_grid,
    _check_psi1_parallel_invariance,
    _check_psi1_saturation,
    _check_psi2_angle_independence,
    _check_psi2_degradation,
    _check_psi3_extremum,
    _check_chiral_invariance,
    _check_analytic_bloch,
    _check_algebraic_suites,
)


def run_verification() -> list[CheckResult]:
    """Run every acceptance check in order and return the results."""
    return [check() for check in _CHECKS]
