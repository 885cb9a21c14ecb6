"""Scenario registry, deterministic (omega, theta) grid sweeps, and emission.

Rows are produced in row-major order (omega outer, theta inner) and each
grid point is computed independently, so the output is byte-identical for
identical configurations regardless of the worker count.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .kinematics import E_Z, BoostSpec
from .measures import (
    bloch_vector,
    global_entanglement,
    negativity,
    single_qubit_reductions,
    spin_spin_reduced,
)
from .states import (
    ChiralLabelPair,
    SuperpositionTerm,
    TwoParticleState,
    boost_two_particle,
    chiral_project,
    density_matrix,
    make_psi1,
    make_psi2,
    make_psi3,
)

SCENARIOS = ("psi1", "psi2", "psi3", "chiral-psi2", "chiral-psi3", "custom")
MEASURES = ("eg", "delta_eg", "negativity", "delta_negativity", "bloch")
DEFAULT_MEASURES = ("eg", "delta_eg", "negativity", "delta_negativity")
OUTPUT_FORMATS = ("csv", "json")

_BLOCH_TAGS = ("pa", "sa", "pb", "sb")


class ConfigError(ValueError):
    """Invalid sweep configuration; carries the offending field name."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


class SweepError(RuntimeError):
    """A grid point failed; the message carries its (omega, theta) coordinates."""


@dataclass(frozen=True)
class GridSpec:
    """Inclusive linspace grid: ``steps`` points from ``start`` to ``stop``."""

    start: float
    stop: float
    steps: int

    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    @classmethod
    def parse(cls, text: str, field_name: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(field_name, f"expected min:max:steps, got {text!r}")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError:
            raise ConfigError(field_name, f"could not parse {text!r} as min:max:steps") from None

    def _validate(self, field_name: str) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ConfigError(field_name, "grid endpoints must be finite")
        if self.steps < 1:
            raise ConfigError(field_name, f"steps must be >= 1, got {self.steps}")
        if self.stop < self.start:
            raise ConfigError(field_name, f"max {self.stop!r} below min {self.start!r}")


@dataclass(frozen=True)
class CustomTermSpec:
    """One custom superposition term; directions are +1/-1 meaning +/- e_z."""

    re: float
    im: float
    helicity_a: int
    omega0_a: float
    dir_a: int
    helicity_b: int
    omega0_b: float
    dir_b: int

    @classmethod
    def parse(cls, text: str) -> "CustomTermSpec":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 8:
            raise ConfigError(
                "term",
                f"expected re,im,sA,omega0A,dirA,sB,omega0B,dirB (8 fields), got {text!r}",
            )
        try:
            return cls(
                float(parts[0]),
                float(parts[1]),
                int(parts[2]),
                float(parts[3]),
                int(parts[4]),
                int(parts[5]),
                float(parts[6]),
                int(parts[7]),
            )
        except ValueError:
            raise ConfigError("term", f"could not parse term {text!r}") from None

    def _validate(self) -> None:
        for name, s in (("sA", self.helicity_a), ("sB", self.helicity_b)):
            if s not in (1, 2):
                raise ConfigError("term", f"{name} must be 1 or 2, got {s}")
        for name, d in (("dirA", self.dir_a), ("dirB", self.dir_b)):
            if d not in (1, -1):
                raise ConfigError("term", f"{name} must be +1 or -1, got {d}")
        for name, w in (("omega0A", self.omega0_a), ("omega0B", self.omega0_b)):
            if not (math.isfinite(w) and w >= 0.0):
                raise ConfigError("term", f"{name} must be a nonnegative rapidity, got {w}")

    def to_term(self, mass: float) -> SuperpositionTerm:
        from .kinematics import FourMomentum

        pa = FourMomentum.from_rapidity(mass, self.omega0_a, self.dir_a * E_Z)
        pb = FourMomentum.from_rapidity(mass, self.omega0_b, self.dir_b * E_Z)
        return SuperpositionTerm(
            complex(self.re, self.im), (pa, self.helicity_a), (pb, self.helicity_b)
        )


#: A full custom-state description: the term list of a scenario of kind "custom".
CustomStateSpec = tuple[CustomTermSpec, ...]


@dataclass(frozen=True)
class SweepConfig:
    scenario: str = "psi2"
    omega0: float = 1.0
    mass: float = 1.0
    omega_grid: GridSpec = GridSpec(0.0, 5.0, 100)
    theta_grid: GridSpec = GridSpec(0.0, math.pi / 2.0, 50)
    measures: tuple[str, ...] = DEFAULT_MEASURES
    output_format: str = "csv"
    chiral_labels: tuple[int, int] | None = None
    custom_terms: CustomStateSpec = ()
    boost_direction: tuple[float, float, float] | None = None
    workers: int = 1

    def validate(self) -> None:
        if self.scenario not in SCENARIOS:
            raise ConfigError(
                "scenario", f"unknown scenario {self.scenario!r}; choose from {SCENARIOS}"
            )
        if not (math.isfinite(self.omega0) and self.omega0 >= 0.0):
            raise ConfigError("omega0", f"must be a nonnegative rapidity, got {self.omega0!r}")
        if not (math.isfinite(self.mass) and self.mass > 0.0):
            raise ConfigError("mass", f"must be positive, got {self.mass!r}")
        self.omega_grid._validate("omega")
        self.theta_grid._validate("theta")
        if self.theta_grid.start < -1e-12 or self.theta_grid.stop > math.pi + 1e-9:
            raise ConfigError("theta", "theta grid must lie within [0, pi]")
        if not self.measures:
            raise ConfigError("measures", "at least one measure is required")
        for m in self.measures:
            if m not in MEASURES:
                raise ConfigError("measures", f"unknown measure {m!r}; choose from {MEASURES}")
        if len(set(self.measures)) != len(self.measures):
            raise ConfigError("measures", f"duplicate measures in {self.measures!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError("format", f"unknown format {self.output_format!r}")
        chiral = self.scenario.startswith("chiral-")
        if self.chiral_labels is not None:
            if not chiral:
                raise ConfigError("chiral", "chiral labels only apply to chiral-* scenarios")
            f, g = self.chiral_labels
            if f not in (0, 1) or g not in (0, 1):
                raise ConfigError("chiral", f"labels must be 0 or 1, got {self.chiral_labels!r}")
        if self.scenario == "custom":
            if not self.custom_terms:
                raise ConfigError("term", "custom scenario needs at least one term")
            for t in self.custom_terms:
                t._validate()
            if all(t.re == 0.0 and t.im == 0.0 for t in self.custom_terms):
                raise ConfigError("term", "at least one coefficient must be nonzero")
        elif self.custom_terms:
            raise ConfigError("term", "terms only apply to the custom scenario")
        if self.boost_direction is not None:
            if self.scenario != "custom":
                raise ConfigError("boost-dir", "explicit boost direction only applies to custom scenarios")
            n = np.asarray(self.boost_direction, dtype=float)
            if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-12:
                raise ConfigError("boost-dir", f"must be a unit 3-vector, got {self.boost_direction!r}")
            if self.theta_grid.steps != 1:
                raise ConfigError(
                    "boost-dir", "a fixed boost direction requires a single-point theta grid"
                )
        if self.workers < 1:
            raise ConfigError("workers", f"must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class SweepRow:
    """One grid point: coordinates, measure columns in request order, and nu."""

    omega: float
    theta: float
    values: dict[str, float]
    nu: float

    def __post_init__(self) -> None:
        for name, v in self.as_mapping().items():
            if not math.isfinite(v):
                raise ValueError(f"non-finite value for {name!r}: {v!r}")

    def as_mapping(self) -> dict[str, float]:
        out = {"omega": self.omega, "theta": self.theta}
        out.update(self.values)
        out["nu"] = self.nu
        return out


def scenario_density(cfg: SweepConfig) -> np.ndarray:
    """Build the configured scenario's unboosted 16x16 density matrix."""
    try:
        if cfg.scenario == "psi1":
            return density_matrix(make_psi1(cfg.omega0, cfg.mass))
        if cfg.scenario == "psi2":
            return density_matrix(make_psi2(cfg.omega0, cfg.mass))
        if cfg.scenario == "psi3":
            return density_matrix(make_psi3(cfg.omega0, cfg.mass))
        if cfg.scenario in ("chiral-psi2", "chiral-psi3"):
            base = make_psi2 if cfg.scenario == "chiral-psi2" else make_psi3
            labels = ChiralLabelPair(*(cfg.chiral_labels or (0, 0)))
            return chiral_project(base(cfg.omega0, cfg.mass), labels)
        if cfg.scenario == "custom":
            terms = tuple(t.to_term(cfg.mass) for t in cfg.custom_terms)
            return density_matrix(TwoParticleState(terms, cfg.mass))
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError("scenario", f"cannot build scenario {cfg.scenario!r}: {exc}") from exc
    raise ConfigError("scenario", f"unknown scenario {cfg.scenario!r}")


def _compute_point(
    rho0: np.ndarray,
    baseline: tuple[float, float],
    measures: Sequence[str],
    boost_direction: tuple[float, float, float] | None,
    omega: float,
    theta: float,
) -> tuple[dict[str, float], float]:
    try:
        if boost_direction is None:
            boost = BoostSpec.from_polar_angle(omega, theta)
        else:
            boost = BoostSpec(omega, np.asarray(boost_direction, dtype=float))
        boosted, nu = boost_two_particle(rho0, boost)
        eg0, neg0 = baseline
        need_eg = "eg" in measures or "delta_eg" in measures
        need_neg = "negativity" in measures or "delta_negativity" in measures
        eg = global_entanglement(boosted) if need_eg else 0.0
        neg = negativity(spin_spin_reduced(boosted)) if need_neg else 0.0
        values: dict[str, float] = {}
        for m in measures:
            if m == "eg":
                values["eg"] = eg
            elif m == "delta_eg":
                values["delta_eg"] = eg - eg0
            elif m == "negativity":
                values["negativity"] = neg
            elif m == "delta_negativity":
                values["delta_negativity"] = neg - neg0
            elif m == "bloch":
                reductions = single_qubit_reductions(boosted)
                for tag in ("PA", "SA", "PB", "SB"):
                    b = bloch_vector(reductions[tag])
                    low = tag.lower()
                    values[f"bloch_{low}_x"] = b.x
                    values[f"bloch_{low}_y"] = b.y
                    values[f"bloch_{low}_z"] = b.z
        return values, nu
    except Exception as exc:
        raise SweepError(
            f"sweep point (omega={omega:.6g}, theta={theta:.6g}) failed: {exc}"
        ) from exc


def _compute_chunk(args) -> list[tuple[int, tuple[dict[str, float], float]]]:
    rho0, baseline, measures, boost_direction, points = args
    return [
        (idx, _compute_point(rho0, baseline, measures, boost_direction, om, th))
        for idx, om, th in points
    ]


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """Run the configured sweep; rows come back in row-major grid order."""
    cfg.validate()
    rho0 = scenario_density(cfg)
    baseline = (
        global_entanglement(rho0),
        negativity(spin_spin_reduced(rho0)),
    )
    omegas = cfg.omega_grid.points()
    thetas = cfg.theta_grid.points()
    tasks = [
        (i * len(thetas) + j, float(om), float(th))
        for i, om in enumerate(omegas)
        for j, th in enumerate(thetas)
    ]
    slots: list[tuple[dict[str, float], float] | None] = [None] * len(tasks)
    if cfg.workers == 1:
        for idx, om, th in tasks:
            slots[idx] = _compute_point(
                rho0, baseline, cfg.measures, cfg.boost_direction, om, th
            )
    else:
        nchunks = min(cfg.workers * 4, len(tasks)) or 1
        chunks = [tasks[k::nchunks] for k in range(nchunks)]
        args = [
            (rho0, baseline, cfg.measures, cfg.boost_direction, chunk)
            for chunk in chunks
            if chunk
        ]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for result in pool.map(_compute_chunk, args):
                for idx, payload in result:
                    slots[idx] = payload
    rows: list[SweepRow] = []
    for (idx, om, th), payload in zip(tasks, slots):
        assert payload is not None
        values, nu = payload
        rows.append(SweepRow(om, th, values, nu))
    return rows


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def emit(rows: Sequence[SweepRow], output_format: str = "csv", destination=None) -> bytes:
    """Serialize rows to CSV or JSON bytes; optionally write them out.

    CSV carries a header `omega,theta,<measures>,nu`, 12 significant digits,
    LF line endings.  JSON is an array of row objects with identical keys and
    the same 12-digit rounding.  Identical inputs produce identical bytes.
    """
    rows = list(rows)
    if not rows:
        raise ConfigError("rows", "nothing to emit: empty row list")
    columns = list(rows[0].as_mapping().keys())
    for r in rows[1:]:
        if list(r.as_mapping().keys()) != columns:
            raise ValueError("rows have inconsistent columns")
    if output_format == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(v) for v in r.as_mapping().values()) for r in rows)
        data = ("\n".join(lines) + "\n").encode("ascii")
    elif output_format == "json":
        payload = [
            {k: float(_fmt(v)) for k, v in r.as_mapping().items()} for r in rows
        ]
        data = (json.dumps(payload, separators=(",", ":")) + "\n").encode("ascii")
    else:
        raise ConfigError("format", f"unknown format {output_format!r}")
    if destination is not None:
        if hasattr(destination, "write"):
            destination.write(data)
        else:
            Path(destination).write_bytes(data)
    return data
