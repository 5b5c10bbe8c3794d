"""Ropelength minimisation by shrink-on-no-overlaps sweeps.

Each iteration runs edge equalisation, curvature control, optional
repositioning toward curvature centers, and overlap removal, in that order
(overlap removal last, so the no-overlap state that gates shrinking is
current). When a full overlap sweep finds nothing to correct, the
configuration is recorded and all coordinates shrink about the centroid; the
rope radius never changes, so the knot tightens until contacts and curvature
limits block further shrinking.

The returned knot is the most recent overlap-free configuration, which is the
state the convergence guarantees (pair floor, curvature floor, equilateral
edges) are quoted for.
"""

import math
from dataclasses import dataclass, field, fields, replace

import numpy as np

from . import _kernels, geometry
from .errors import ParameterError, GeometricDegeneracyError, PreconditionError

REPOSITION_STRENGTH = 0.25
EMBED_SCALE_MARGIN = 1.5  # input must clear contacts at this multiple of the rope radius


@dataclass
class TightenConfig:
    """Parameters of the tightening loop."""

    rope_radius: float = 1.0
    shrink_factor: float = 0.9995
    overlap_tolerance: float = 1e-4
    max_iterations: int = 40000
    stall_window: int = 600
    ee_sweeps: int = 3
    ro_sweeps: int = 2
    skip: int | None = None  # None: derived from rope radius and edge length
    reposition_enabled: bool = False

    def __post_init__(self):
        if self.rope_radius <= 0:
            raise ParameterError("rope_radius must be positive")
        if not 0.0 < self.shrink_factor < 1.0:
            raise ParameterError("shrink_factor must lie in (0, 1)")
        if not 0.0 <= self.overlap_tolerance < 0.01:
            raise ParameterError("overlap_tolerance must lie in [0, 0.01)")
        if self.max_iterations < 1:
            raise ParameterError("max_iterations must be positive")
        if self.stall_window < 1:
            raise ParameterError("stall_window must be positive")
        if self.ee_sweeps < 1 or self.ro_sweeps < 1:
            raise ParameterError("ee_sweeps and ro_sweeps must be positive")
        if self.skip is not None and self.skip < 2:
            raise ParameterError("skip must be >= 2 when given")


@dataclass
class TightenReport:
    """Outcome record of a tightening run."""

    iterations_run: int
    final_ropelength: float
    final_writhe: float
    ropelength_history: list = field(default_factory=list)
    overlap_events: int = 0
    converged: bool = False
    stop_reason: str = "max_iterations"  # stalled | max_iterations | parameter_error

    def history_rows(self):
        """(iteration, length, thickness, ropelength, violations) rows."""
        return list(self.ropelength_history)


CONFIG_FIELD_TYPES = {f.name: f.type for f in fields(TightenConfig)}


def load_config(path, overrides=None):
    """Read a flat key=value config file; `overrides` wins over the file."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParameterError(f"{path}:{lineno}: expected key=value")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in CONFIG_FIELD_TYPES:
                raise ParameterError(f"{path}:{lineno}: unknown key '{key}'")
            values[key] = _parse_config_value(key, val.strip())
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return TightenConfig(**values)


def _parse_config_value(key, text):
    if key in ("max_iterations", "stall_window", "ee_sweeps", "ro_sweeps", "skip"):
        return int(text)
    if key == "reposition_enabled":
        if text.lower() in ("1", "true", "yes", "on"):
            return True
        if text.lower() in ("0", "false", "no", "off"):
            return False
        raise ParameterError(f"cannot parse boolean '{text}' for {key}")
    return float(text)


def equalize_edges(knot, target_length):
    """One full edge-equalisation sweep toward a common edge length."""
    if target_length <= 0:
        raise ParameterError("target_length must be positive")
    verts = knot.vertices.copy()
    _kernels.ee_sweep(verts, float(target_length))
    return knot.with_vertices(verts)


def control_curvature(knot, rope_radius):
    """One curvature-control sweep: push sharp vertices off their circumcenters."""
    if rope_radius <= 0:
        raise ParameterError("rope_radius must be positive")
    verts = knot.vertices.copy()
    _kernels.cc_sweep(verts, float(rope_radius))
    return knot.with_vertices(verts)


def remove_overlaps(knot, rope_radius, skip, overlap_tolerance=1e-4):
    """One overlap-removal sweep; returns (knot, corrected pair count)."""
    if rope_radius <= 0:
        raise ParameterError("rope_radius must be positive")
    skip = geometry._validate_skip(skip, len(knot))
    verts = knot.vertices.copy()
    fixed = _kernels.ro_sweep(
        verts, float(rope_radius), skip, float(overlap_tolerance)
    )
    if fixed < 0:
        raise GeometricDegeneracyError(
            "coincident distant vertices: push direction undefined"
        )
    return knot.with_vertices(verts), int(fixed)


def reposition_to_curvature_centers(knot, strength, rope_radius):
    """Move vertices toward their curvature centers where the rope allows."""
    if not 0.0 < strength <= 1.0:
        raise ParameterError("strength must lie in (0, 1]")
    if rope_radius < 0:
        raise ParameterError("rope_radius must be nonnegative")
    verts = knot.vertices.copy()
    _kernels.reposition_sweep(verts, float(rope_radius), float(strength))
    return knot.with_vertices(verts)


def _auto_skip(n, rope_radius, length):
    skip = math.ceil(math.pi * rope_radius * n / length)
    return max(2, min(skip, (n - 1) // 2))


def _measure(verts, skip):
    """(length, thickness, ropelength) of a raw vertex array."""
    edges = np.roll(verts, -1, axis=0) - verts
    length = float(np.sqrt((edges * edges).sum(1)).sum())
    rmin = _local_radius_min(verts)
    dmin = float(_kernels.min_critical_distance(verts, skip))
    thick = min(rmin, 0.5 * dmin)
    return length, thick, length / thick


def _local_radius_min(verts):
    a = np.roll(verts, 1, axis=0)
    c = np.roll(verts, -1, axis=0)
    ab = verts - a
    bc = c - verts
    ca = a - c
    num = (
        np.sqrt((ab * ab).sum(1))
        * np.sqrt((bc * bc).sum(1))
        * np.sqrt((ca * ca).sum(1))
    )
    cr = np.cross(ab, bc)
    area2 = np.sqrt((cr * cr).sum(1))
    ok = area2 > 0.0
    if not np.any(ok):
        return math.inf
    return float((num[ok] / (2.0 * area2[ok])).min())


def _thickness_at_margin(verts, margin):
    n = verts.shape[0]
    edges = np.roll(verts, -1, axis=0) - verts
    length = float(np.sqrt((edges * edges).sum(1)).sum())
    skip = _auto_skip(n, margin, length)
    rmin = _local_radius_min(verts)
    dmin = float(_kernels.min_critical_distance(verts, skip))
    return min(rmin, 0.5 * dmin)


def _normalize_embedding(verts, rope_radius, max_rescales=60):
    """Rescale the input about its centroid until the tube clears the margin.

    The start must admit an embedded tube of radius margin * rope_radius
    (both curvature and distant contacts clear it); thickness scales linearly
    with the knot, so a suitable scale exists for every embedded curve.
    Oversized inputs are shrunk toward the margin to save shrink iterations.
    """
    margin = EMBED_SCALE_MARGIN * rope_radius
    centroid = verts.mean(axis=0)
    verts -= centroid
    thick = _thickness_at_margin(verts, margin)
    for _ in range(max_rescales):
        if not math.isfinite(thick) or thick <= 0.0:
            break
        if thick >= margin * 0.999:
            if thick > 3.0 * margin:
                verts *= 1.5 * margin / thick
                thick = _thickness_at_margin(verts, margin)
                continue
            verts += centroid
            return
        verts *= min(1.05 * margin / thick, 4.0)
        thick = _thickness_at_margin(verts, margin)
    raise PreconditionError(
        "starting knot is not embeddable at the requested rope radius"
    )


def tighten(knot, config=None):
    """Run the tightening loop; returns (tightened knot, report)."""
    cfg = config if config is not None else TightenConfig()
    n = len(knot)
    if cfg.skip is not None and cfg.skip >= n / 2:
        raise ParameterError(f"skip must be < N/2 = {n / 2}")

    verts = knot.vertices.copy()
    _normalize_embedding(verts, cfg.rope_radius)

    rope = cfg.rope_radius
    tol = cfg.overlap_tolerance
    stride = max(1, cfg.max_iterations // 2000)
    history = []
    overlap_events = 0
    # stall tracking uses the length in rope-radius units: the geometric
    # ropelength L/thickness is scale-invariant and blind to the free-shrink
    # phase before the curvature/contact floors start binding
    best_len = math.inf
    stall = 0
    accepted = None
    accepted_rl = math.inf
    pending_shrink = False
    stop_reason = "max_iterations"
    converged = False
    iterations = 0

    for it in range(1, cfg.max_iterations + 1):
        iterations = it
        if pending_shrink:
            centroid = verts.mean(axis=0)
            verts = centroid + cfg.shrink_factor * (verts - centroid)
            pending_shrink = False

        length = float(
            np.sqrt(((np.roll(verts, -1, axis=0) - verts) ** 2).sum(1)).sum()
        )
        skip = cfg.skip if cfg.skip is not None else _auto_skip(n, rope, length)

        for _ in range(cfg.ee_sweeps):
            target = (
                float(np.sqrt(((np.roll(verts, -1, axis=0) - verts) ** 2).sum(1)).sum())
                / n
            )
            _kernels.ee_sweep(verts, target)
        _kernels.cc_sweep(verts, rope)
        if cfg.reposition_enabled:
            _kernels.reposition_sweep(verts, rope, REPOSITION_STRENGTH)
        violations = 0
        for _ in range(cfg.ro_sweeps):
            fixed = _kernels.ro_sweep(verts, rope, skip, tol)
            if fixed < 0:
                raise GeometricDegeneracyError(
                    "coincident distant vertices during overlap removal"
                )
            violations += fixed
        overlap_events += violations

        length, thick, rl = _measure(verts, skip)
        if it % stride == 0 or it == 1:
            history.append((it, length, thick, rl, violations))

        if violations == 0:
            pending_shrink = True
            accepted = verts.copy()
            accepted_rl = rl

        if best_len - length > tol * min(best_len, length):
            best_len = length
            stall = 0
        else:
            stall += 1
            if stall >= cfg.stall_window:
                converged = True
                stop_reason = "stalled"
                break

    if history and history[-1][0] != iterations:
        history.append((iterations, length, thick, rl, violations))

    if accepted is None:
        accepted = verts
        accepted_rl = rl

    result = knot.with_vertices(accepted)
    report = TightenReport(
        iterations_run=iterations,
        final_ropelength=float(accepted_rl),
        final_writhe=geometry.writhe(result),
        ropelength_history=history,
        overlap_events=overlap_events,
        converged=converged,
        stop_reason=stop_reason,
    )
    return result, report


def write_report_csv(report, path):
    """Report CSV: one row per recorded iteration plus a summary comment."""
    with open(path, "w") as fh:
        fh.write("iter,length,thickness,ropelength,violations\n")
        for it, length, thick, rl, viol in report.ropelength_history:
            fh.write(f"{it},{length:.12g},{thick:.12g},{rl:.12g},{viol}\n")
        fh.write(
            f"# summary: iterations={report.iterations_run}"
            f" ropelength={report.final_ropelength:.12g}"
            f" writhe={report.final_writhe:.12g}"
            f" overlap_events={report.overlap_events}"
            f" converged={str(report.converged).lower()}"
            f" stop_reason={report.stop_reason}\n"
        )
