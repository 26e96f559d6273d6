"""Parameter sweeps and 1-D design search over the scanner geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import materials
from .multimorph import MultimorphStack
from .scanner import ScannerGeometry, ScannerSolution, solve_scanner


@dataclass(frozen=True)
class ScanConfig:
    """One complete scanner design point: stack, mirror, and drive voltage."""

    substrate_E: float
    piezo_E: float
    d31: float
    substrate_t: float
    piezo_t: float
    beam_width: float
    beam_length: float
    mirror_side: float
    voltage: float

    def geometry(self) -> ScannerGeometry:
        stack = MultimorphStack(
            substrate_E=self.substrate_E,
            substrate_t=self.substrate_t,
            piezo_E=self.piezo_E,
            piezo_t=self.piezo_t,
            d31=self.d31,
            width=self.beam_width,
            length=self.beam_length,
        )
        return ScannerGeometry(stack=stack, mirror_side=self.mirror_side)

    def solve(self, samples: int = 401) -> ScannerSolution:
        return solve_scanner(self.geometry(), self.voltage, samples=samples)


def reference_config() -> ScanConfig:
    """Scanner A: built-in materials, 5/1 um layers, 30 um wide 850 um beams,
    300 um mirror, 50 V drive."""
    return ScanConfig(
        substrate_E=materials.SILICON_E,
        piezo_E=materials.PZT5H_E,
        d31=materials.PZT5H_D31,
        substrate_t=5e-6,
        piezo_t=1e-6,
        beam_width=30e-6,
        beam_length=850e-6,
        mirror_side=300e-6,
        voltage=50.0,
    )


# Sweepable axis name -> ScanConfig field.
AXES = {
    "beam_length": "beam_length",
    "beam_width": "beam_width",
    "substrate_thickness": "substrate_t",
    "piezo_thickness": "piezo_t",
    "mirror_side": "mirror_side",
    "voltage": "voltage",
}


@dataclass(frozen=True)
class SweepSpec:
    base: ScanConfig
    axis: str
    start: float
    stop: float
    steps: int

    def __post_init__(self) -> None:
        if self.axis not in AXES:
            raise ValueError(f"unknown axis {self.axis!r}; one of {sorted(AXES)}")
        if not self.start < self.stop:
            raise ValueError("need start < stop")
        if self.steps < 2:
            raise ValueError("steps must be >= 2")

    def with_value(self, value: float) -> ScanConfig:
        return replace(self.base, **{AXES[self.axis]: value})


@dataclass(frozen=True)
class SweepRecord:
    """One sweep point. status is 'ok' or the error text of a failed point."""

    param_value: float
    tilt_deg: float
    y_max_m: float
    force_N: float
    reaction_N: float
    status: str = "ok"

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def evaluate_point(spec: SweepSpec, value: float) -> SweepRecord:
    try:
        sol = spec.with_value(value).solve(samples=3)
    except ValueError as exc:
        return SweepRecord(
            param_value=value, tilt_deg=math.nan, y_max_m=math.nan,
            force_N=math.nan, reaction_N=math.nan, status=str(exc),
        )
    return SweepRecord(
        param_value=value,
        tilt_deg=math.degrees(sol.tilt),
        y_max_m=sol.y_max,
        force_N=sol.force,
        reaction_N=sol.reaction,
    )


def run_sweep(spec: SweepSpec) -> list[SweepRecord]:
    """Evaluate the sweep grid in ascending parameter order.

    Points that violate geometry invariants are reported as failed records
    rather than dropped; every evaluation is pure, so the result does not
    depend on evaluation order.
    """
    step = (spec.stop - spec.start) / (spec.steps - 1)
    values = [spec.start + i * step for i in range(spec.steps)]
    values[-1] = spec.stop
    return [evaluate_point(spec, v) for v in values]


_OBJECTIVES = ("tilt", "y_max")
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _objective_value(spec: SweepSpec, objective: str, value: float) -> float:
    rec = evaluate_point(spec, value)
    if not rec.ok:
        raise ValueError(f"objective undefined at {value}: {rec.status}")
    return rec.tilt_deg if objective == "tilt" else rec.y_max_m


def optimize_1d(
    spec: SweepSpec, objective: str = "tilt", rel_tol: float = 1e-4
) -> tuple[float, float]:
    """Maximize tilt or y_max over one axis.

    Coarse grid scan on spec.steps points, then golden-section refinement
    inside the bracketing triple around the grid optimum. Ties break toward
    the smaller parameter value. The returned objective is never below any
    grid sample.
    """
    if objective not in _OBJECTIVES:
        raise ValueError(f"objective must be one of {_OBJECTIVES}")

    records = run_sweep(spec)
    grid = [(r.param_value, r.tilt_deg if objective == "tilt" else r.y_max_m)
            for r in records if r.ok]
    if not grid:
        raise ValueError("no feasible point on the sweep grid")

    best_x, best_f = grid[0]
    for x, f in grid[1:]:
        if f > best_f:
            best_x, best_f = x, f

    idx = [x for x, _ in grid].index(best_x)
    lo = grid[max(idx - 1, 0)][0]
    hi = grid[min(idx + 1, len(grid) - 1)][0]
    if lo == hi:
        return best_x, best_f

    # Golden-section interior maximization on [lo, hi].
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = _objective_value(spec, objective, c)
    fd = _objective_value(spec, objective, d)
    scale = max(abs(lo), abs(hi), 1e-30)
    while (b - a) > rel_tol * scale:
        if fc > fd or (fc == fd and c < d):
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = _objective_value(spec, objective, c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = _objective_value(spec, objective, d)

    x_ref = c if (fc > fd or (fc == fd and c < d)) else d
    f_ref = max(fc, fd)
    if f_ref > best_f or (f_ref == best_f and x_ref < best_x):
        best_x, best_f = x_ref, f_ref
    return best_x, best_f


TABLE1_BEAM_LENGTHS = (850e-6, 600e-6, 500e-6)


def table1(base: ScanConfig | None = None) -> list[SweepRecord]:
    """The three reference designs: 850/600/500 um beams, 30 um wide, 50 V."""
    if base is None:
        base = reference_config()
    spec = SweepSpec(base=base, axis="beam_length", start=500e-6, stop=850e-6, steps=2)
    return [evaluate_point(spec, length) for length in TABLE1_BEAM_LENGTHS]
