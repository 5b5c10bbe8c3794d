"""Measurements on closed polygonal space curves.

A knot is a closed sequence of 3D vertices; the edge from the last vertex
back to the first is implicit. All operations are pure functions of an
immutable knot and are safe to evaluate concurrently.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import GeometricDegeneracyError, InvalidKnotError, ParameterError

MIN_VERTICES = 5


@dataclass
class PolygonalKnot:
    """Closed polygonal space curve with optional name and crossing number."""

    vertices: np.ndarray
    name: str | None = None
    cmin: int | None = None

    def __post_init__(self):
        verts = np.array(self.vertices, dtype=np.float64)
        if verts.ndim != 2 or verts.shape[1] != 3:
            raise InvalidKnotError("vertices must be an (N, 3) array")
        if verts.shape[0] < MIN_VERTICES:
            raise InvalidKnotError(
                f"a knot needs at least {MIN_VERTICES} vertices, got {verts.shape[0]}"
            )
        if not np.all(np.isfinite(verts)):
            raise InvalidKnotError("vertices must be finite")
        edges = np.roll(verts, -1, axis=0) - verts
        if np.any((edges * edges).sum(axis=1) == 0.0):
            raise InvalidKnotError("consecutive vertices must be distinct")
        if self.cmin is not None:
            if int(self.cmin) != self.cmin or self.cmin < 0:
                raise InvalidKnotError("cmin must be a nonnegative integer")
            self.cmin = int(self.cmin)
        verts.setflags(write=False)
        self.vertices = verts

    def __len__(self):
        return self.vertices.shape[0]

    def with_vertices(self, vertices):
        """New knot with the same metadata and different coordinates."""
        return PolygonalKnot(vertices, name=self.name, cmin=self.cmin)


@dataclass(frozen=True)
class TubeGeometry:
    """Thickness, axis length and their ratio for a tube around the knot."""

    thickness: float
    length: float
    ropelength: float


def total_length(knot):
    """Polygon length including the closing edge."""
    verts = knot.vertices
    edges = np.roll(verts, -1, axis=0) - verts
    return float(np.sqrt((edges * edges).sum(axis=1)).sum())


def mean_edge_length(knot):
    return total_length(knot) / len(knot)


def edge_lengths(knot):
    verts = knot.vertices
    edges = np.roll(verts, -1, axis=0) - verts
    return np.sqrt((edges * edges).sum(axis=1))


def local_radii(knot):
    """Circumradius of every consecutive vertex triple (inf when collinear)."""
    verts = knot.vertices
    a = np.roll(verts, 1, axis=0)
    c = np.roll(verts, -1, axis=0)
    ab = verts - a
    bc = c - verts
    ca = a - c
    lab = np.sqrt((ab * ab).sum(1))
    lbc = np.sqrt((bc * bc).sum(1))
    lca = np.sqrt((ca * ca).sum(1))
    cr = np.cross(ab, bc)
    area2 = np.sqrt((cr * cr).sum(1))  # twice the triangle area
    radii = np.full(len(knot), np.inf)
    ok = area2 > 0.0
    radii[ok] = lab[ok] * lbc[ok] * lca[ok] / (2.0 * area2[ok])
    radii[lca == 0.0] = 0.0  # hairpin: the turn is infinitely sharp
    return radii


def local_radius(knot, i):
    """Circumradius of the triple centred on vertex i (cyclic index)."""
    return float(local_radii(knot)[i % len(knot)])


def doubly_critical_distance(knot, skip):
    """Closest approach between vertices more than `skip` apart along the chain."""
    n = len(knot)
    skip = _validate_skip(skip, n)
    return float(_kernels.min_distant_distance(knot.vertices, skip))


def contact_distance(knot, skip):
    """Closest doubly-critical self-contact (mutual local minimum of the
    vertex distance) over separations > skip; inf when the knot has none.

    This is the contact measure the tube model needs: points that face each
    other across a curvature-saturated turn have short chords but no
    overlapping cross-sections, and the mutual-minimum test rejects them.
    """
    n = len(knot)
    skip = _validate_skip(skip, n)
    return float(_kernels.min_critical_distance(knot.vertices, skip))


def default_skip(knot, rope_radius):
    """Contact window from the rope radius: pairs within a half-turn of the
    tightest allowed arc are handled by curvature control, not contact."""
    if rope_radius <= 0:
        raise ParameterError("rope_radius must be positive")
    n = len(knot)
    skip = math.ceil(math.pi * rope_radius / mean_edge_length(knot))
    return max(2, min(skip, (n - 1) // 2))


def thickness(knot, skip):
    """Injectivity radius: min of local circumradii and half the
    doubly-critical contact distance."""
    return float(min(local_radii(knot).min(), 0.5 * contact_distance(knot, skip)))


def ropelength(knot, skip):
    """Tube geometry (thickness, length, length/thickness)."""
    r = thickness(knot, skip)
    length = total_length(knot)
    return TubeGeometry(thickness=r, length=length, ropelength=length / r)


def writhe(knot):
    """Gauss self-linking integral of the polygon.

    Evaluated as the exact solid-angle contribution of every non-adjacent
    segment pair; adjacent pairs are coplanar and contribute nothing.
    """
    total, status = _kernels.writhe_sum(knot.vertices)
    if status != 0:
        raise GeometricDegeneracyError(
            "non-adjacent segments touch or intersect; writhe is undefined"
        )
    return total / math.pi


def _validate_skip(skip, n):
    if int(skip) != skip:
        raise ParameterError("skip must be an integer")
    skip = int(skip)
    if skip < 2 or skip >= n / 2:
        raise ParameterError(f"skip must satisfy 2 <= skip < N/2 = {n / 2}")
    return skip
