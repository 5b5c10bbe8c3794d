"""Starting configurations: circles, torus knots, and coordinate files.

Knot file format: one vertex per line as three whitespace-separated decimal
numbers; lines starting with ``#`` are comments. The optional header
comments ``# name=...`` and ``# cmin=...`` carry metadata. Closure is
implicit (the last vertex connects back to the first).
"""

import math
import re

import numpy as np

from .errors import InvalidKnotError, KnotParseError, ParameterError
from .geometry import MIN_VERTICES, PolygonalKnot

from dataclasses import dataclass


@dataclass
class TorusKnotSpec:
    """Parameters of a (p, q) torus knot polygon."""

    p: int
    q: int
    beads: int = 200
    major_radius: float = 2.0
    minor_radius: float = 1.0

    def __post_init__(self):
        if int(self.p) != self.p or int(self.q) != self.q:
            raise ParameterError("p and q must be integers")
        self.p, self.q = int(self.p), int(self.q)
        if self.p < 2 or self.q < 2:
            raise ParameterError("p and q must both be >= 2")
        if math.gcd(self.p, self.q) != 1:
            raise ParameterError(f"p={self.p} and q={self.q} must be co-prime")
        if self.beads < 5 * max(self.p, self.q):
            raise ParameterError(
                f"beads must be >= 5*max(p, q) = {5 * max(self.p, self.q)}"
            )
        if self.minor_radius <= 0:
            raise ParameterError("minor_radius must be positive")
        if self.major_radius <= self.minor_radius:
            raise ParameterError("major_radius must exceed minor_radius")


def make_circle(beads, radius):
    """Regular polygon inscribed in a circle in the z=0 plane."""
    if beads < MIN_VERTICES:
        raise ParameterError(f"beads must be >= {MIN_VERTICES}")
    if radius <= 0:
        raise ParameterError("radius must be positive")
    t = 2.0 * np.pi * np.arange(beads) / beads
    verts = np.column_stack(
        [radius * np.cos(t), radius * np.sin(t), np.zeros(beads)]
    )
    return PolygonalKnot(verts, name="circle", cmin=0)


def make_torus_knot(spec):
    """Sample the standard (p, q) torus-knot curve at equal parameter steps."""
    t = 2.0 * np.pi * np.arange(spec.beads) / spec.beads
    ring = spec.major_radius + spec.minor_radius * np.cos(spec.q * t)
    verts = np.column_stack(
        [
            ring * np.cos(spec.p * t),
            ring * np.sin(spec.p * t),
            spec.minor_radius * np.sin(spec.q * t),
        ]
    )
    knot = PolygonalKnot(verts, name=f"T({spec.p},{spec.q})")
    if _max_turning_angle(verts) >= 0.5 * np.pi:
        raise ParameterError(
            "beads too few: consecutive turning angles reach 90 degrees"
        )
    return knot


def _max_turning_angle(verts):
    edges = np.roll(verts, -1, axis=0) - verts
    norms = np.sqrt((edges * edges).sum(1))
    nxt = np.roll(edges, -1, axis=0)
    cosang = (edges * nxt).sum(1) / (norms * np.roll(norms, -1))
    return float(np.arccos(np.clip(cosang, -1.0, 1.0)).max())


_HEADER_RE = re.compile(r"#\s*(name|cmin)\s*=\s*(\S+)")


def load_knot(path):
    """Read a knot coordinate file (see module docstring for the format)."""
    rows = []
    name = None
    cmin = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                m = _HEADER_RE.match(line)
                if m:
                    if m.group(1) == "name":
                        name = m.group(2)
                    else:
                        try:
                            cmin = int(m.group(2))
                        except ValueError:
                            raise KnotParseError(
                                f"{path}:{lineno}: cmin must be an integer"
                            ) from None
                continue
            parts = line.split()
            if len(parts) != 3:
                raise KnotParseError(
                    f"{path}:{lineno}: expected three coordinates, got {len(parts)}"
                )
            try:
                rows.append([float(p) for p in parts])
            except ValueError:
                raise KnotParseError(
                    f"{path}:{lineno}: could not parse coordinates"
                ) from None
    if len(rows) < MIN_VERTICES:
        raise InvalidKnotError(
            f"{path}: a knot needs at least {MIN_VERTICES} vertices, got {len(rows)}"
        )
    return PolygonalKnot(np.asarray(rows), name=name, cmin=cmin)


def save_knot(knot, path):
    """Write a knot coordinate file; 17 significant digits round-trip exactly."""
    with open(path, "w") as fh:
        if knot.name is not None:
            fh.write(f"# name={knot.name}\n")
        if knot.cmin is not None:
            fh.write(f"# cmin={knot.cmin}\n")
        for x, y, z in knot.vertices:
            fh.write(f"{x:.17g} {y:.17g} {z:.17g}\n")
