"""Closed-form limit densities and shapes, and diagram-boundary geometry.

This is the exact/float frontier: everything upstream is exact, here the
closed-form densities and their antiderivatives are evaluated in binary64
with adaptive Simpson quadrature (endpoint square-root singularities are
removed by the substitution u = sqrt(c) sin(theta)).

Conventions.  In centered coordinates xt = x - (c+1)/2 the density
rho(xt, c) is supported on [-sqrt(c), sqrt(c)] and takes values in [0,1]:
for c >= 1 it is the particle density of the rotated-diagram ensemble
(integral 1), for c < 1 the complementary hole density (integral c); at
c = 1 it is identically 1/2 on [-1, 1].  The boundary function uses the
integrand 1 - 2 rho for c >= 1 and its negative for c < 1, which makes
f(0) = 1 and f(c+1) = c in both regimes.

Series tags: "GL" boundaries live on [0, c+1]; the spin/symplectic
"HALF" boundaries live on [0, (c+1)/2] and use the density with its
argument shifted by (c+1)/2 (the right half of the GL density).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .partitions import Partition

GL = "GL"
HALF = "HALF"

SLOPE_TOLERANCE = 1e-9


def rho(x: float, c: float) -> float:
    """Limit density at the centered coordinate x.

    Zero outside |x| <= sqrt(c); 1/2 on [-1, 1] at c = 1.  The two
    arctangent branches use (c-1) for c > 1 and (1-c) for c < 1 (the
    hole density), both continuous on the open support and vanishing at
    the edges.
    """
    if c <= 0:
        raise ValueError("c must be positive")
    if c == 1:
        return 0.5 if abs(x) <= 1 else 0.0
    gap = c - x * x
    if gap <= c * 1e-15:
        return 0.0  # at or beyond the support edge the arctangents cancel
    w = abs(c - 1) * math.sqrt(gap)
    total = math.atan2(-(c + 1) * x + 2 * c, w) + math.atan2((c + 1) * x + 2 * c, w)
    return total / (2 * math.pi)


def _adaptive_simpson(f, a: float, b: float, tol: float = 1e-9,
                      max_depth: int = 16) -> float:
    """Adaptive Simpson with absolute tolerance; at most 2^max_depth panels."""

    def simpson(x0, x2, f0, f1, f2):
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def rec(x0, x2, f0, f1, f2, whole, eps, depth):
        xm = 0.5 * (x0 + x2)
        xl = 0.5 * (x0 + xm)
        xr = 0.5 * (xm + x2)
        fl = f(xl)
        fr = f(xr)
        left = simpson(x0, xm, f0, fl, f1)
        right = simpson(xm, x2, f1, fr, f2)
        if depth >= max_depth or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return (rec(x0, xm, f0, fl, f1, left, eps / 2.0, depth + 1)
                + rec(xm, x2, f1, fr, f2, right, eps / 2.0, depth + 1))

    if a == b:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = simpson(a, b, fa, fm, fb)
    return rec(a, b, fa, fm, fb, whole, tol, 0)


def rho_integral(y: float, c: float, tol: float = 1e-9) -> float:
    """Integral of rho(., c) from -sqrt(c) to y.

    Substitutes u = sqrt(c) sin(theta) so the edge square roots become
    smooth; y is clamped to the support.
    """
    root = math.sqrt(c)
    y = max(-root, min(root, y))
    upper = math.asin(max(-1.0, min(1.0, y / root)))

    def integrand(theta: float) -> float:
        u = root * math.sin(theta)
        return rho(u, c) * root * math.cos(theta)

    return _adaptive_simpson(integrand, -math.pi / 2.0, upper, tol)


def limit_domain(c: float, series: str) -> float:
    if series == GL:
        return c + 1.0
    if series == HALF:
        return (c + 1.0) / 2.0
    raise ValueError(f"unknown series {series!r}")


def limit_f(x: float, c: float, series: str = GL) -> float:
    """The limiting boundary shape at x.

    GL: x in [0, c+1], f(0) = 1, f(c+1) = c.  HALF: x in [0, (c+1)/2],
    the density argument shifted right by (c+1)/2.  For c < 1 the
    sign-flipped integrand is used with the hole density.
    """
    if c <= 0:
        raise ValueError("c must be positive")
    end = limit_domain(c, series)
    if x < -1e-12 or x > end + 1e-12:
        raise ValueError(f"x={x} outside [0, {end}]")
    x = max(0.0, min(end, x))
    if c == 1:
        return 1.0
    if series == GL:
        center = (c + 1.0) / 2.0
        mass = rho_integral(x - center, c)
    else:
        left = rho_integral(0.0, c)  # mass on [0, x-shifted start]
        mass = rho_integral(x, c) - left
    if c > 1:
        return 1.0 + x - 2.0 * mass
    return 1.0 - x + 2.0 * mass


@dataclass(frozen=True)
class ShapeCurve:
    """Piecewise-linear boundary samples; slopes stay within +-1."""

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    series: str
    c: float | None = None

    def __post_init__(self):
        if len(self.xs) != len(self.ys) or len(self.xs) < 2:
            raise ValueError("need matching xs/ys with at least two samples")
        for a, b in zip(self.xs, self.xs[1:]):
            if not b > a:
                raise ValueError("xs must be strictly increasing")
        for (x0, y0), (x1, y1) in zip(zip(self.xs, self.ys),
                                      zip(self.xs[1:], self.ys[1:])):
            slope = (y1 - y0) / (x1 - x0)
            if abs(slope) > 1.0 + SLOPE_TOLERANCE:
                raise ValueError(f"slope {slope} exceeds 1")

    def __call__(self, x: float) -> float:
        """Evaluate with slope +-1 extrapolation outside the sample range
        (+1 to the right, matching an exhausted diagram boundary)."""
        xs, ys = self.xs, self.ys
        if x <= xs[0]:
            return ys[0] - (x - xs[0])
        if x >= xs[-1]:
            return ys[-1] + (x - xs[-1])
        i = bisect_right(xs, x) - 1
        t = (x - xs[i]) / (xs[i + 1] - xs[i])
        return ys[i] + t * (ys[i + 1] - ys[i])


_BOUNDARY_SERIES = {
    "A": (GL, lambda lam, n, i: lam.part(i) + n - i, 1, 1),
    "SO_odd": (HALF, lambda lam, n, i: 2 * (lam.part(i) + n - i) + 1, 4, 2),
    "Sp": (HALF, lambda lam, n, i: lam.part(i) + n - i + 1, 2, 1),
    "SO_even": (HALF, lambda lam, n, i: 2 * lam.part(i) + 2 * (n - i), 4, 2),
}


def diagram_boundary(lam, n: int, series: str = "A", p: int = 0) -> ShapeCurve:
    """Rotated-diagram boundary as a piecewise-linear unit-slope curve.

    Particle i occupies [a_i, a_i + w] before scaling, where a_i and the
    scale follow the series (A: a_i = lambda_i + n - i over n; SO_odd and
    SO_even: over 4l with width 2; Sp: over 2l).  The slope is -1 on
    particle intervals and +1 elsewhere, f(0) = 1.
    """
    if series not in _BOUNDARY_SERIES:
        raise ValueError(f"unknown series {series!r}")
    tag, coord, scale_mult, width = _BOUNDARY_SERIES[series]
    lam = Partition.of(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    scale = scale_mult * n
    intervals = sorted((coord(lam, n, i), coord(lam, n, i) + width)
                       for i in range(1, n + 1))
    xs = [0.0]
    ys = [1.0]
    pos = 0
    height = 1.0

    def advance(to: int, slope: float):
        nonlocal pos, height
        if to > pos:
            height += slope * (to - pos) / scale
            pos = to
            xs.append(pos / scale)
            ys.append(height)

    for lo, hi in intervals:
        advance(lo, +1.0)
        advance(hi, -1.0)
    return ShapeCurve(tuple(xs), tuple(ys), tag)


def sup_distance(curve: ShapeCurve, c: float, series: str | None = None,
                 grid: int = 2048) -> float:
    """max |curve - limit_f| over the limit domain.

    Sampled on the curve breakpoints plus a uniform grid; both functions
    are 1-Lipschitz so the grid error is bounded by the spacing.
    """
    series = series or curve.series
    end = limit_domain(c, series)
    points = set(curve.xs)
    points.update(end * i / grid for i in range(grid + 1))
    worst = 0.0
    for x in sorted(points):
        if x < 0 or x > end:
            continue
        worst = max(worst, abs(curve(x) - limit_f(x, c, series)))
    return worst


def mean_boundary(curves, grid: int = 512) -> ShapeCurve:
    """Pointwise average of same-series curves on a uniform grid."""
    if not curves:
        raise ValueError("no curves to average")
    series = curves[0].series
    if any(cv.series != series for cv in curves):
        raise ValueError("curves must share a series")
    end = max(cv.xs[-1] for cv in curves)
    xs = [end * i / grid for i in range(grid + 1)]
    ys = [sum(cv(x) for cv in curves) / len(curves) for x in xs]
    return ShapeCurve(tuple(xs), tuple(ys), series)


def first_row_prediction(n: int, k: int, pair: str = "GL") -> float:
    """Leading-order first-row length: sqrt(kn) + (k-n)/2 for the GL
    pair, sqrt(2kl) (l = n) for the spin/symplectic pairs."""
    if pair == "GL":
        return math.sqrt(k * n) + (k - n) / 2.0
    return math.sqrt(2.0 * k * n)
