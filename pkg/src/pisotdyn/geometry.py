"""Circle spacing geometry: roots-of-unity optima, gap statistics,
cyclotomic sums, diagonal self-similarity of regular polygons, PV cusp
curves and substitution-driven spacing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebraic import IntPolynomial, dominant_root_interval, pv_verdict, refine_root
from .substitution import Substitution, classify_pisot, fixed_point_prefix

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class AngleList:
    """Angles in [0, 2*pi), radians, in presentation order."""

    angles: tuple

    def __post_init__(self):
        a = tuple(float(x) for x in self.angles)
        if any(not 0.0 <= x < TWO_PI for x in a):
            raise ValueError("angles must lie in [0, 2*pi)")
        object.__setattr__(self, "angles", a)

    def __len__(self):
        return len(self.angles)

    def points(self):
        return [(math.cos(t), math.sin(t)) for t in self.angles]

    def to_csv(self) -> str:
        lines = ["k,theta,x,y"]
        for k, t in enumerate(self.angles, start=1):
            lines.append(f"{k},{fmt12(t)},{fmt12(math.cos(t))},{fmt12(math.sin(t))}")
        return "\n".join(lines) + "\n"

    def to_svg(self, size: int = 400, stroke: str = "#1a6baf",
               stroke_width: float = 1.0, mode: str = "petals") -> str:
        """Self-contained SVG: unit circle plus petal segments (center to
        each point) or a cusp polyline through consecutive points."""
        c = size / 2.0
        r = 0.45 * size

        def xy(t):
            return (c + r * math.cos(t), c - r * math.sin(t))

        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
            f'height="{size}" viewBox="0 0 {size} {size}">',
            f'<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#888" '
            f'stroke-width="{stroke_width}"/>',
        ]
        if mode == "cusp":
            pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(xy, self.angles))
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
                f'stroke-width="{stroke_width}"/>'
            )
        else:
            for t in self.angles:
                x, y = xy(t)
                parts.append(
                    f'<line x1="{c}" y1="{c}" x2="{x:.3f}" y2="{y:.3f}" '
                    f'stroke="{stroke}" stroke-width="{stroke_width}"/>'
                )
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def fmt12(x: float) -> str:
    """12 significant digits, stable across runs."""
    return f"{x:.12g}"


def geodesic_distance(a: float, b: float) -> float:
    """Shortest arc between two angles: min(|d|, 2*pi - |d|), in [0, pi]."""
    if not (0.0 <= a < TWO_PI and 0.0 <= b < TWO_PI):
        raise ValueError("angles must lie in [0, 2*pi)")
    d = abs(a - b)
    return min(d, TWO_PI - d)


def roots_of_unity(n: int) -> AngleList:
    """Angles 2*pi*k/n for k = 1..n (with 2*pi wrapped to 0)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return AngleList(tuple((TWO_PI * k / n) % TWO_PI for k in range(1, n + 1)))


def cyclotomic_sum(n: int) -> complex:
    """Vector sum of the n-th roots of unity (numerically ~ 0)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    k = np.arange(1, n + 1)
    z = np.exp(2j * np.pi * k / n)
    return complex(z.sum())


@dataclass(frozen=True)
class GapStats:
    mean: float
    variance: float
    min_gap: float
    max_gap: float
    distinct_gaps: int


def gap_statistics(a: AngleList, tolerance: float = 1e-9) -> GapStats:
    """Cyclic gap statistics of an angle list.

    Gaps are consecutive differences of the sorted angles plus the
    wraparound gap.  Exactness conventions: when every gap is <= pi the gap
    sum telescopes to exactly 2*pi, so the mean is reported as 2*pi/n
    without float accumulation; when all gaps agree within the clustering
    tolerance the variance is reported as exactly 0.0.
    """
    if len(a) < 2:
        raise ValueError("need at least 2 angles")
    s = sorted(a.angles)
    n = len(s)
    raw = [s[i + 1] - s[i] for i in range(n - 1)] + [TWO_PI - (s[-1] - s[0])]
    gaps = [min(g, TWO_PI - g) for g in raw]
    clusters = _cluster(sorted(gaps), tolerance)
    if all(g <= math.pi + tolerance for g in raw):
        mean = TWO_PI / n
    else:
        mean = sum(gaps) / n
    if len(clusters) == 1:
        variance = 0.0
    else:
        variance = sum((g - mean) ** 2 for g in gaps) / n
    return GapStats(
        mean=mean,
        variance=variance,
        min_gap=min(gaps),
        max_gap=max(gaps),
        distinct_gaps=len(clusters),
    )


def _cluster(sorted_vals: Sequence[float], tol: float):
    groups = [[sorted_vals[0]]]
    for v in sorted_vals[1:]:
        if v - groups[-1][0] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return groups


# ---------------------------------------------------------------------------
# diagonal self-similarity

def _seg_intersection(p1, p2, p3, p4, eps=1e-12):
    """Proper intersection point of open segments p1p2 and p3p4, or None."""
    x1, y1 = p1
    x2, y2 = p2
    x3, y3 = p3
    x4, y4 = p4
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) < eps:
        return None
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    u = ((x1 - x3) * (y1 - y2) - (y1 - y3) * (x1 - x2)) / den
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return (x1 + t * (x2 - x1), y1 + t * (y2 - y1))
    return None


def diagonal_polygon(n: int, tolerance: float = 1e-9):
    """Diagonal intersections of the regular n-gon on the unit circle.

    Returns (inner_ring_vertices, self_similar) where self_similar is
    (scaling, rotation) when the innermost intersection ring is itself a
    regular n-gon, else None.  The inner ring is the set of intersection
    points at minimal distance from the origin (within tolerance); the
    reported rotation is the vertex-matching representative nearest pi.
    """
    if n < 5:
        raise ValueError("n must be >= 5")
    verts = [(math.cos(TWO_PI * k / n), math.sin(TWO_PI * k / n)) for k in range(n)]
    diagonals = [
        (verts[i], verts[j])
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1)
    ]
    pts = []
    for i in range(len(diagonals)):
        for j in range(i + 1, len(diagonals)):
            p = _seg_intersection(*diagonals[i], *diagonals[j])
            if p is not None:
                pts.append(p)
    # dedupe
    uniq = []
    for p in pts:
        if not any(math.hypot(p[0] - q[0], p[1] - q[1]) < tolerance for q in uniq):
            uniq.append(p)
    radii = [math.hypot(x, y) for x, y in uniq]
    r_min = min(radii)
    ring = [p for p, r in zip(uniq, radii) if r - r_min <= tolerance]
    ring.sort(key=lambda p: math.atan2(p[1], p[0]) % TWO_PI)

    self_similar = None
    if len(ring) == n and r_min > tolerance:
        rads = [math.hypot(x, y) for x, y in ring]
        sides = [
            math.hypot(
                ring[i][0] - ring[(i + 1) % n][0], ring[i][1] - ring[(i + 1) % n][1]
            )
            for i in range(n)
        ]
        regular = (max(rads) - min(rads) <= tolerance * max(1.0, max(rads))) and (
            max(sides) - min(sides) <= tolerance * max(1.0, max(sides))
        )
        if regular:
            scaling = sum(rads) / n
            ring_angles = sorted(math.atan2(y, x) % TWO_PI for x, y in ring)
            base = ring_angles[0]  # outer vertex k=0 sits at angle 0
            # candidate rotations map vertex angle 0 onto some ring vertex
            candidates = [(base + TWO_PI * k / n) % TWO_PI for k in range(n)]
            rotation = min(candidates, key=lambda t: abs(t - math.pi))
            self_similar = (scaling, rotation)
    return ring, self_similar


# ---------------------------------------------------------------------------
# cusp curves

def cusp_curve(p: IntPolynomial, big_k: int, precision_bits: int = 128) -> AngleList:
    """theta_k = 2*pi*frac(lambda^k) for k = 1..K, lambda the PV root of p.

    lambda^k is evaluated in exact interval arithmetic refined until the
    fractional part is determined to the requested precision.
    """
    if pv_verdict(p) == "not_pv":
        raise ValueError("cusp_curve requires a PV polynomial")
    if big_k < 1:
        raise ValueError("K must be >= 1")
    iv = dominant_root_interval(p)
    out = []
    target = Fraction(1, 2**precision_bits)
    for k in range(1, big_k + 1):
        while True:
            lo, hi = iv.lower**k, iv.upper**k
            if hi - lo <= target and math.floor(lo) == math.floor(hi):
                break
            iv = refine_root(p, iv, iv.width / 4)
        frac = (lo + hi) / 2 - math.floor(lo)
        theta = (TWO_PI * float(frac)) % TWO_PI
        out.append(theta)
    return AngleList(tuple(out))


# ---------------------------------------------------------------------------
# substitution-driven spacing

def substitution_spacing(sigma: Substitution, beta0: float, beta1: float,
                         n_points: int) -> AngleList:
    """theta_k driven by the digits of the binary fixed point of sigma:
    advance by beta0 on letter 0, beta1 on letter 1 (mod 2*pi).

    Cross-checked internally against the cumulative letter-count form
    theta_k = (c0(k)*beta0 + c1(k)*beta1) mod 2*pi; the two must agree to
    1e-9 or a ValueError is raised.
    """
    if sigma.alphabet.size != 2:
        raise ValueError("substitution spacing needs a binary alphabet")
    report = classify_pisot(sigma, mode="loose")
    if not (report.primitive and report.pisot_loose):
        raise ValueError("substitution must be primitive of Pisot type")
    if not (0.0 <= beta0 < TWO_PI and 0.0 <= beta1 < TWO_PI):
        beta0 %= TWO_PI
        beta1 %= TWO_PI
    digits = fixed_point_prefix(sigma, 0, n_points).prefix(n_points)
    thetas = []
    theta = 0.0
    c0 = c1 = 0
    for k, d in enumerate(digits.letters, start=1):
        step = beta0 if d == 0 else beta1
        theta = (theta + step) % TWO_PI
        if d == 0:
            c0 += 1
        else:
            c1 += 1
        check = (c0 * beta0 + c1 * beta1) % TWO_PI
        diff = abs(theta - check)
        if min(diff, TWO_PI - diff) > 1e-9:
            raise ValueError(f"digit-driven and count-driven angles diverge at k={k}")
        thetas.append(theta % TWO_PI)
    return AngleList(tuple(thetas))
