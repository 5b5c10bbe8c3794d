"""Hot numerical kernels: numba-compiled by default, plain fallbacks on demand.

Set ``TIGHTKNOT_NUMBA=0`` to select the fallback path (vectorised numpy for
the pairwise measurements, straight Python loops for the sequential sweeps).
Both paths share semantics; the sweep kernels are literally the same source,
compiled or not. All kernels mutate their vertex array in place; callers that
need purity copy first.

Overlap corrections are applied in sorted (i, j) order, so results do not
depend on spatial-grid iteration details and repeated runs are bit-identical.
"""

import math
import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


USE_NUMBA = _HAVE_NUMBA and os.environ.get("TIGHTKNOT_NUMBA", "1").lower() not in (
    "0",
    "false",
    "off",
)

# near-coplanarity threshold for the writhe solid-angle formula, relative to
# the product of the quadrilateral leg lengths
_COPLANAR_RTOL = 1e-13


def backend():
    """Name of the active kernel path ("numba" or "fallback")."""
    return "numba" if USE_NUMBA else "fallback"


# ---------------------------------------------------------------------------
# scalar helpers (numba-compilable plain Python)
# ---------------------------------------------------------------------------


def _segment_distance(ax, ay, az, bx, by, bz, cx, cy, cz, dx, dy, dz):
    """Minimum distance between segments AB and CD (clamped closest points)."""
    ux, uy, uz = bx - ax, by - ay, bz - az
    vx, vy, vz = dx - cx, dy - cy, dz - cz
    wx, wy, wz = ax - cx, ay - cy, az - cz
    a = ux * ux + uy * uy + uz * uz
    b = ux * vx + uy * vy + uz * vz
    c = vx * vx + vy * vy + vz * vz
    d = ux * wx + uy * wy + uz * wz
    e = vx * wx + vy * wy + vz * wz
    den = a * c - b * b
    if den > 1e-14 * a * c:
        s = (b * e - c * d) / den
    else:
        s = 0.0
    if s < 0.0:
        s = 0.0
    elif s > 1.0:
        s = 1.0
    if c > 0.0:
        t = (b * s + e) / c
    else:
        t = 0.0
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    if a > 0.0:
        s = (b * t - d) / a
        if s < 0.0:
            s = 0.0
        elif s > 1.0:
            s = 1.0
    px = wx + s * ux - t * vx
    py = wy + s * uy - t * vy
    pz = wz + s * uz - t * vz
    return math.sqrt(px * px + py * py + pz * pz)


def _triple_circum(ax, ay, az, bx, by, bz, cx, cy, cz):
    """Circumradius and circumcenter of a vertex triple.

    Returns (radius, ox, oy, oz); radius is inf for collinear triples and 0
    for a degenerate hairpin (endpoints coincide).
    """
    ux, uy, uz = cx - ax, cy - ay, cz - az
    lac = math.sqrt(ux * ux + uy * uy + uz * uz)
    if lac == 0.0:
        return 0.0, ax, ay, az
    e1x, e1y, e1z = ux / lac, uy / lac, uz / lac
    wx, wy, wz = bx - ax, by - ay, bz - az
    px = wx * e1x + wy * e1y + wz * e1z
    qx = wx - px * e1x
    qy = wy - px * e1y
    qz = wz - px * e1z
    py = math.sqrt(qx * qx + qy * qy + qz * qz)
    if py == 0.0:
        return math.inf, ax, ay, az
    e2x, e2y, e2z = qx / py, qy / py, qz / py
    y0 = (px * px + py * py - px * lac) / (2.0 * py)
    mx = 0.5 * lac
    rho = math.sqrt(mx * mx + y0 * y0)
    ox = ax + mx * e1x + y0 * e2x
    oy = ay + mx * e1y + y0 * e2y
    oz = az + mx * e1z + y0 * e2z
    return rho, ox, oy, oz


# ---------------------------------------------------------------------------
# writhe: exact solid-angle contribution per non-adjacent segment pair
# ---------------------------------------------------------------------------


def _writhe_loops(verts):
    """Sum of atan2-form solid-angle terms over unordered segment pairs.

    Returns (sum, status); status -1 flags an intersecting or touching pair.
    The writhe is sum / pi.
    """
    n = verts.shape[0]
    total = 0.0
    for i in range(n - 2):
        jmax = n if i > 0 else n - 1
        for j in range(i + 2, jmax):
            i1 = i + 1
            j1 = j + 1 if j + 1 < n else 0
            ax = verts[j, 0] - verts[i, 0]
            ay = verts[j, 1] - verts[i, 1]
            az = verts[j, 2] - verts[i, 2]
            bx = verts[j, 0] - verts[i1, 0]
            by = verts[j, 1] - verts[i1, 1]
            bz = verts[j, 2] - verts[i1, 2]
            cx = verts[j1, 0] - verts[i1, 0]
            cy = verts[j1, 1] - verts[i1, 1]
            cz = verts[j1, 2] - verts[i1, 2]
            dx = verts[j1, 0] - verts[i, 0]
            dy = verts[j1, 1] - verts[i, 1]
            dz = verts[j1, 2] - verts[i, 2]
            na = math.sqrt(ax * ax + ay * ay + az * az)
            nb = math.sqrt(bx * bx + by * by + bz * bz)
            nc = math.sqrt(cx * cx + cy * cy + cz * cz)
            nd = math.sqrt(dx * dx + dy * dy + dz * dz)
            if na == 0.0 or nb == 0.0 or nc == 0.0 or nd == 0.0:
                return 0.0, -1
            # p = a . (b x c), shared by the two spherical triangles
            p = (
                ax * (by * cz - bz * cy)
                + ay * (bz * cx - bx * cz)
                + az * (bx * cy - by * cx)
            )
            scale = na * nc * (nb + nd)
            if abs(p) <= _COPLANAR_RTOL * scale:
                # coplanar pair: zero contribution unless the segments meet
                dmin = _segment_distance(
                    verts[i, 0],
                    verts[i, 1],
                    verts[i, 2],
                    verts[i1, 0],
                    verts[i1, 1],
                    verts[i1, 2],
                    verts[j, 0],
                    verts[j, 1],
                    verts[j, 2],
                    verts[j1, 0],
                    verts[j1, 1],
                    verts[j1, 2],
                )
                if dmin <= 1e-12 * (na + nc):
                    return 0.0, -1
                continue
            ab = ax * bx + ay * by + az * bz
            bc = bx * cx + by * cy + bz * cz
            ca = cx * ax + cy * ay + cz * az
            ad = ax * dx + ay * dy + az * dz
            dc = dx * cx + dy * cy + dz * cz
            d1 = na * nb * nc + ab * nc + bc * na + ca * nb
            d2 = na * nd * nc + ad * nc + dc * na + ca * nd
            total += math.atan2(p, d1) + math.atan2(p, d2)
    return total, 0


def _writhe_sum_numpy(verts):
    """Vectorised twin of :func:`_writhe_loops`."""
    n = verts.shape[0]
    ii, jj = np.triu_indices(n, k=2)
    keep = ~((ii == 0) & (jj == n - 1))
    ii, jj = ii[keep], jj[keep]
    p1 = verts[ii]
    p2 = verts[(ii + 1) % n]
    p3 = verts[jj]
    p4 = verts[(jj + 1) % n]
    a = p3 - p1
    b = p3 - p2
    c = p4 - p2
    d = p4 - p1
    na = np.sqrt((a * a).sum(1))
    nb = np.sqrt((b * b).sum(1))
    nc = np.sqrt((c * c).sum(1))
    nd = np.sqrt((d * d).sum(1))
    if np.any(na == 0) or np.any(nb == 0) or np.any(nc == 0) or np.any(nd == 0):
        return 0.0, -1
    p = np.einsum("ij,ij->i", a, np.cross(b, c))
    coplanar = np.abs(p) <= _COPLANAR_RTOL * (na * nc * (nb + nd))
    for k in np.nonzero(coplanar)[0]:
        i, j = int(ii[k]), int(jj[k])
        i1, j1 = (i + 1) % n, (j + 1) % n
        dmin = _segment_distance(
            verts[i, 0],
            verts[i, 1],
            verts[i, 2],
            verts[i1, 0],
            verts[i1, 1],
            verts[i1, 2],
            verts[j, 0],
            verts[j, 1],
            verts[j, 2],
            verts[j1, 0],
            verts[j1, 1],
            verts[j1, 2],
        )
        if dmin <= 1e-12 * (na[k] + nc[k]):
            return 0.0, -1
    ab = np.einsum("ij,ij->i", a, b)
    bc = np.einsum("ij,ij->i", b, c)
    ca = np.einsum("ij,ij->i", c, a)
    ad = np.einsum("ij,ij->i", a, d)
    dc = np.einsum("ij,ij->i", d, c)
    d1 = na * nb * nc + ab * nc + bc * na + ca * nb
    d2 = na * nd * nc + ad * nc + dc * na + ca * nd
    terms = np.arctan2(p, d1) + np.arctan2(p, d2)
    terms[coplanar] = 0.0
    return float(terms.sum()), 0


# ---------------------------------------------------------------------------
# pairwise contact measurements
# ---------------------------------------------------------------------------


def _min_distant_loops(verts, skip):
    """Minimum vertex-pair distance over cyclic separations > skip."""
    n = verts.shape[0]
    best = math.inf
    for i in range(n - 1):
        for j in range(i + 1, n):
            k = j - i
            sep = k if k <= n - k else n - k
            if sep <= skip:
                continue
            ux = verts[j, 0] - verts[i, 0]
            uy = verts[j, 1] - verts[i, 1]
            uz = verts[j, 2] - verts[i, 2]
            d2 = ux * ux + uy * uy + uz * uz
            if d2 < best:
                best = d2
    return math.sqrt(best) if best < math.inf else math.inf


def _min_distant_numpy(verts, skip):
    n = verts.shape[0]
    ii, jj = np.triu_indices(n, k=1)
    k = jj - ii
    sep = np.minimum(k, n - k)
    mask = sep > skip
    if not np.any(mask):
        return math.inf
    diff = verts[jj[mask]] - verts[ii[mask]]
    return float(np.sqrt((diff * diff).sum(1).min()))


def _pair_d2(verts, i, j):
    ux = verts[j, 0] - verts[i, 0]
    uy = verts[j, 1] - verts[i, 1]
    uz = verts[j, 2] - verts[i, 2]
    return ux * ux + uy * uy + uz * uz


def _is_critical_pair(verts, i, j, d2):
    """Discrete doubly-critical test: (i, j) is a mutual local minimum of the
    vertex distance (sliding either index to a neighbour does not decrease
    it). Points that face each other across a curvature-saturated turn fail
    this test even when their chord is short, matching the tube model."""
    n = verts.shape[0]
    jp = j + 1 if j + 1 < n else 0
    jm = j - 1 if j > 0 else n - 1
    ip = i + 1 if i + 1 < n else 0
    im = i - 1 if i > 0 else n - 1
    if _pair_d2(verts, i, jp) < d2:
        return False
    if _pair_d2(verts, i, jm) < d2:
        return False
    if _pair_d2(verts, ip, j) < d2:
        return False
    if _pair_d2(verts, im, j) < d2:
        return False
    return True


def _min_critical_loops(verts, skip):
    """Closest doubly-critical contact over separations > skip (inf if none)."""
    n = verts.shape[0]
    best = math.inf
    for i in range(n - 1):
        for j in range(i + 1, n):
            k = j - i
            sep = k if k <= n - k else n - k
            if sep <= skip:
                continue
            d2 = _pair_d2(verts, i, j)
            if d2 < best and _is_critical_pair(verts, i, j, d2):
                best = d2
    return math.sqrt(best) if best < math.inf else math.inf


def _min_critical_numpy(verts, skip):
    n = verts.shape[0]
    diff = verts[:, None, :] - verts[None, :, :]
    d2 = (diff * diff).sum(-1)
    idx = np.arange(n)
    k = np.abs(idx[:, None] - idx[None, :])
    sep = np.minimum(k, n - k)
    critical = (
        (d2 <= np.roll(d2, -1, axis=1))
        & (d2 <= np.roll(d2, 1, axis=1))
        & (d2 <= np.roll(d2, -1, axis=0))
        & (d2 <= np.roll(d2, 1, axis=0))
    )
    mask = (sep > skip) & critical
    if not np.any(mask):
        return math.inf
    return float(math.sqrt(d2[mask].min()))


# ---------------------------------------------------------------------------
# SONO sweeps (shared source, compiled or not)
# ---------------------------------------------------------------------------


def _ee_sweep(verts, target):
    """One edge-equalisation sweep.

    Each edge endpoint slides along the edge direction, halving the gap to
    the target length. An undamped correction folds the polygon wherever
    consecutive edges differ by more than the shorter edge, so the half-step
    is what keeps the sweep a contraction.
    """
    n = verts.shape[0]
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        ux = verts[j, 0] - verts[i, 0]
        uy = verts[j, 1] - verts[i, 1]
        uz = verts[j, 2] - verts[i, 2]
        d = math.sqrt(ux * ux + uy * uy + uz * uz)
        if d > 0.0:
            s = (0.5 * (d + target)) / d
            verts[j, 0] = verts[i, 0] + ux * s
            verts[j, 1] = verts[i, 1] + uy * s
            verts[j, 2] = verts[i, 2] + uz * s


def _cc_sweep(verts, rope_radius):
    """One curvature-control sweep.

    Any vertex whose triple circumradius falls below rope_radius slides
    along the line through its circumcenter onto the nearest configuration
    with circumradius exactly rope_radius. Deep corners (apex height above
    half the chord) only move away from the circumcenter: the nearer flattened
    solution would drag the apex across the chord region and can pass other
    strands. Shallow bumps take the nearest solution, a small flattening
    toward the chord; pushing them outward would overshoot by about two rope
    radii before the radius recovers. Returns the number of corrections.
    """
    n = verts.shape[0]
    fixed = 0
    for i in range(n):
        im = i - 1 if i > 0 else n - 1
        ip = i + 1 if i + 1 < n else 0
        ax, ay, az = verts[im, 0], verts[im, 1], verts[im, 2]
        bx, by, bz = verts[i, 0], verts[i, 1], verts[i, 2]
        cx, cy, cz = verts[ip, 0], verts[ip, 1], verts[ip, 2]
        ux, uy, uz = cx - ax, cy - ay, cz - az
        lac = math.sqrt(ux * ux + uy * uy + uz * uz)
        if lac == 0.0:
            continue
        e1x, e1y, e1z = ux / lac, uy / lac, uz / lac
        wx, wy, wz = bx - ax, by - ay, bz - az
        p1 = wx * e1x + wy * e1y + wz * e1z
        qx = wx - p1 * e1x
        qy = wy - p1 * e1y
        qz = wz - p1 * e1z
        p2 = math.sqrt(qx * qx + qy * qy + qz * qz)
        if p2 == 0.0:
            continue
        e2x, e2y, e2z = qx / p2, qy / p2, qz / p2
        y0 = (p1 * p1 + p2 * p2 - p1 * lac) / (2.0 * p2)
        half = 0.5 * lac
        rho = math.sqrt(half * half + y0 * y0)
        if rho >= rope_radius * (1.0 - 1e-12):
            continue
        # 2D line through B=(p1, p2) and the circumcenter (half, y0)
        dirx = (p1 - half) / rho
        diry = (p2 - y0) / rho
        deep = p2 >= 0.5 * lac
        ytar = math.sqrt(rope_radius * rope_radius - half * half)
        best = math.inf
        for sgn in (-1.0, 1.0):
            oy = sgn * ytar
            fx = p1 - half
            fy = p2 - oy
            bq = fx * dirx + fy * diry
            cq = fx * fx + fy * fy - rope_radius * rope_radius
            disc = bq * bq - cq
            if disc < 0.0:
                continue
            sq = math.sqrt(disc)
            for t in (-bq - sq, -bq + sq):
                if deep and t < -1e-12:
                    continue
                if best == math.inf or abs(t) < abs(best):
                    best = t
        if best == math.inf:
            continue
        t = best
        nx = p1 + t * dirx
        ny = p2 + t * diry
        verts[i, 0] = ax + nx * e1x + ny * e2x
        verts[i, 1] = ay + nx * e1y + ny * e2y
        verts[i, 2] = az + nx * e1z + ny * e2z
        fixed += 1
    return fixed


def _reposition_sweep(verts, rope_radius, strength):
    """Move vertices toward their curvature centers where the rope allows.

    The gap of a vertex is the distance it can slide toward its triple's
    circumcenter before the triple circumradius drops to rope_radius; each
    vertex with circumradius above rope_radius moves by strength * gap, but
    only if the two neighbouring triples also keep circumradius >=
    rope_radius. Moves are computed against the frozen sweep-start state and
    applied together (sequential application feeds each move into the next
    gap and crumples the curve). Returns the number of vertices moved.
    """
    n = verts.shape[0]
    out = verts.copy()
    moved = 0
    for i in range(n):
        im2 = i - 2 if i - 2 >= 0 else i - 2 + n
        im = i - 1 if i > 0 else n - 1
        ip = i + 1 if i + 1 < n else 0
        ip2 = i + 2 if i + 2 < n else i + 2 - n
        ax, ay, az = verts[im, 0], verts[im, 1], verts[im, 2]
        bx, by, bz = verts[i, 0], verts[i, 1], verts[i, 2]
        cx, cy, cz = verts[ip, 0], verts[ip, 1], verts[ip, 2]
        ux, uy, uz = cx - ax, cy - ay, cz - az
        lac = math.sqrt(ux * ux + uy * uy + uz * uz)
        if lac == 0.0 or lac >= 2.0 * rope_radius:
            continue  # no through-A,C circle of the rope radius exists
        e1x, e1y, e1z = ux / lac, uy / lac, uz / lac
        wx, wy, wz = bx - ax, by - ay, bz - az
        p1 = wx * e1x + wy * e1y + wz * e1z
        qx = wx - p1 * e1x
        qy = wy - p1 * e1y
        qz = wz - p1 * e1z
        p2 = math.sqrt(qx * qx + qy * qy + qz * qz)
        if p2 == 0.0:
            continue  # collinear: infinite radius, nothing to pull toward
        e2x, e2y, e2z = qx / p2, qy / p2, qz / p2
        y0 = (p1 * p1 + p2 * p2 - p1 * lac) / (2.0 * p2)
        half = 0.5 * lac
        rho = math.sqrt(half * half + y0 * y0)
        if rho <= rope_radius:
            continue
        # 2D ray from B=(p1, p2) toward the circumcenter (half, y0)
        dirx = (half - p1) / rho
        diry = (y0 - p2) / rho
        ytar = math.sqrt(rope_radius * rope_radius - half * half)
        gap = math.inf
        for sgn in (-1.0, 1.0):
            oy2 = sgn * ytar
            fx = p1 - half
            fy = p2 - oy2
            bq = fx * dirx + fy * diry
            cq = fx * fx + fy * fy - rope_radius * rope_radius
            disc = bq * bq - cq
            if disc < 0.0:
                continue
            sq = math.sqrt(disc)
            t1 = -bq - sq
            t2 = -bq + sq
            if t1 >= 0.0 and t1 < gap:
                gap = t1
            if t2 >= 0.0 and t2 < gap:
                gap = t2
        if not math.isfinite(gap) or gap == 0.0:
            continue
        step = strength * gap
        nx = bx + step * dirx * e1x + step * diry * e2x
        ny = by + step * dirx * e1y + step * diry * e2y
        nz = bz + step * dirx * e1z + step * diry * e2z
        r1, _, _, _ = _triple_circum(
            verts[im2, 0],
            verts[im2, 1],
            verts[im2, 2],
            verts[im, 0],
            verts[im, 1],
            verts[im, 2],
            nx,
            ny,
            nz,
        )
        if r1 < rope_radius * (1.0 - 1e-12):
            continue
        r2, _, _, _ = _triple_circum(
            verts[im, 0], verts[im, 1], verts[im, 2], nx, ny, nz,
            verts[ip, 0], verts[ip, 1], verts[ip, 2],
        )
        if r2 < rope_radius * (1.0 - 1e-12):
            continue
        r3, _, _, _ = _triple_circum(
            nx,
            ny,
            nz,
            verts[ip, 0],
            verts[ip, 1],
            verts[ip, 2],
            verts[ip2, 0],
            verts[ip2, 1],
            verts[ip2, 2],
        )
        if r3 < rope_radius * (1.0 - 1e-12):
            continue
        out[i, 0] = nx
        out[i, 1] = ny
        out[i, 2] = nz
        moved += 1
    verts[:] = out
    return moved


def _ro_sweep_grid(verts, rope_radius, skip, tol):
    """One overlap-removal sweep using a uniform spatial hash grid.

    Vertex pairs with cyclic separation > skip closer than
    2*rope_radius*(1 - tol) are pushed apart symmetrically to exactly
    2*rope_radius, in sorted pair order. Returns the number of corrected
    pairs, or -1 if a coincident distant pair is found.
    """
    n = verts.shape[0]
    cell = 2.0 * rope_radius
    inv = 1.0 / cell
    thr = 2.0 * rope_radius * (1.0 - tol)
    thr2 = thr * thr
    tsize = 4 * n + 7
    cx = np.empty(n, np.int64)
    cy = np.empty(n, np.int64)
    cz = np.empty(n, np.int64)
    hh = np.empty(n, np.int64)
    for i in range(n):
        a = int(math.floor(verts[i, 0] * inv))
        b = int(math.floor(verts[i, 1] * inv))
        c = int(math.floor(verts[i, 2] * inv))
        cx[i] = a
        cy[i] = b
        cz[i] = c
        hh[i] = ((a * 73856093) ^ (b * 19349663) ^ (c * 83492791)) % tsize
    start = np.zeros(tsize + 1, np.int64)
    for i in range(n):
        start[hh[i] + 1] += 1
    for k in range(tsize):
        start[k + 1] += start[k]
    entries = np.empty(n, np.int64)
    fill = start[:tsize].copy()
    for i in range(n):
        entries[fill[hh[i]]] = i
        fill[hh[i]] += 1
    # count candidates, then collect sort keys
    total = 0
    for i in range(n):
        for dx in range(-1, 2):
            for dy in range(-1, 2):
                for dz in range(-1, 2):
                    h = (
                        ((cx[i] + dx) * 73856093)
                        ^ ((cy[i] + dy) * 19349663)
                        ^ ((cz[i] + dz) * 83492791)
                    ) % tsize
                    for idx in range(start[h], start[h + 1]):
                        j = entries[idx]
                        if j <= i:
                            continue
                        k = j - i
                        sep = k if k <= n - k else n - k
                        if sep <= skip:
                            continue
                        d2 = _pair_d2(verts, i, j)
                        if d2 < thr2 and _is_critical_pair(verts, i, j, d2):
                            total += 1
    keys = np.empty(total, np.int64)
    m = 0
    for i in range(n):
        for dx in range(-1, 2):
            for dy in range(-1, 2):
                for dz in range(-1, 2):
                    h = (
                        ((cx[i] + dx) * 73856093)
                        ^ ((cy[i] + dy) * 19349663)
                        ^ ((cz[i] + dz) * 83492791)
                    ) % tsize
                    for idx in range(start[h], start[h + 1]):
                        j = entries[idx]
                        if j <= i:
                            continue
                        k = j - i
                        sep = k if k <= n - k else n - k
                        if sep <= skip:
                            continue
                        d2 = _pair_d2(verts, i, j)
                        if d2 < thr2 and _is_critical_pair(verts, i, j, d2):
                            keys[m] = i * n + j
                            m += 1
    keys = np.sort(keys[:m])
    fixed = 0
    last = np.int64(-1)
    for q in range(m):
        key = keys[q]
        if key == last:
            continue
        last = key
        i = key // n
        j = key % n
        d2 = _pair_d2(verts, i, j)
        if d2 == 0.0:
            return -1
        if d2 >= thr2 or not _is_critical_pair(verts, i, j, d2):
            continue
        ux = verts[j, 0] - verts[i, 0]
        uy = verts[j, 1] - verts[i, 1]
        uz = verts[j, 2] - verts[i, 2]
        d = math.sqrt(d2)
        push = rope_radius - 0.5 * d
        sx = ux / d * push
        sy = uy / d * push
        sz = uz / d * push
        verts[i, 0] -= sx
        verts[i, 1] -= sy
        verts[i, 2] -= sz
        verts[j, 0] += sx
        verts[j, 1] += sy
        verts[j, 2] += sz
        fixed += 1
    return fixed


def _ro_sweep_numpy(verts, rope_radius, skip, tol):
    """Brute-force twin of :func:`_ro_sweep_grid` (same correction order)."""
    n = verts.shape[0]
    thr = 2.0 * rope_radius * (1.0 - tol)
    ii, jj = np.triu_indices(n, k=1)
    k = jj - ii
    sep = np.minimum(k, n - k)
    mask = sep > skip
    ii, jj = ii[mask], jj[mask]
    diff = verts[jj] - verts[ii]
    d2 = (diff * diff).sum(1)
    cand = d2 < thr * thr
    order = np.lexsort((jj[cand], ii[cand]))
    fixed = 0
    for i, j in zip(ii[cand][order], jj[cand][order]):
        d2ij = _pair_d2(verts, i, j)
        if d2ij == 0.0:
            return -1
        if d2ij >= thr * thr or not _is_critical_pair(verts, i, j, d2ij):
            continue
        u = verts[j] - verts[i]
        d = math.sqrt(d2ij)
        shift = (rope_radius - 0.5 * d) / d * u
        verts[i] -= shift
        verts[j] += shift
        fixed += 1
    return fixed


# ---------------------------------------------------------------------------
# path selection
# ---------------------------------------------------------------------------

if USE_NUMBA:
    _segment_distance = njit(cache=True)(_segment_distance)
    _triple_circum = njit(cache=True)(_triple_circum)
    _pair_d2 = njit(cache=True)(_pair_d2)
    _is_critical_pair = njit(cache=True)(_is_critical_pair)
    writhe_sum = njit(cache=True)(_writhe_loops)
    min_distant_distance = njit(cache=True)(_min_distant_loops)
    min_critical_distance = njit(cache=True)(_min_critical_loops)
    ee_sweep = njit(cache=True)(_ee_sweep)
    cc_sweep = njit(cache=True)(_cc_sweep)
    reposition_sweep = njit(cache=True)(_reposition_sweep)
    ro_sweep = njit(cache=True)(_ro_sweep_grid)
else:
    writhe_sum = _writhe_sum_numpy
    min_distant_distance = _min_distant_numpy
    min_critical_distance = _min_critical_numpy
    ee_sweep = _ee_sweep
    cc_sweep = _cc_sweep
    reposition_sweep = _reposition_sweep
    ro_sweep = _ro_sweep_numpy
