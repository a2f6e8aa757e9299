"""General conics as quadratic forms: fitting, classification, features.

A conic is the zero set of A x^2 + B xy + C y^2 + D x + E y + F. The
coefficient 6-vector is normalized to unit length with a canonical sign,
so coefficient vectors of equal conics are comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .geom import GeometryError, Line, Point

__all__ = [
    "DegenerateConfiguration",
    "DegenerateConic",
    "FocusTooFar",
    "FocusOnDirectrix",
    "ConicClass",
    "GeneralConic",
    "ConicFeatures",
    "LineConicIntersection",
    "conic_from_five_points",
    "classify_conic",
    "conic_features",
    "ellipse_from_center_focus_semimajor",
    "conic_from_focus_directrix_ecc",
    "line_conic_tangency",
    "coefficient_distance",
    "conic_point_distance",
    "sample_conic_points",
    "transform_conic",
]

PARABOLA_WINDOW = 1e-9


class DegenerateConfiguration(GeometryError):
    """The input points do not determine a unique conic."""


class DegenerateConic(GeometryError):
    """The quadratic form factors into lines (or worse)."""


class FocusTooFar(GeometryError):
    """An ellipse focus must lie strictly inside the semi-major distance."""


class FocusOnDirectrix(GeometryError):
    """The focus-directrix locus degenerates when the focus is on the line."""


class ConicClass(Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class GeneralConic:
    coeffs: tuple[float, float, float, float, float, float]

    def __post_init__(self) -> None:
        v = np.asarray(self.coeffs, dtype=float)
        if v.shape != (6,) or not np.all(np.isfinite(v)):
            raise GeometryError("six finite coefficients required")
        n = float(np.linalg.norm(v))
        if n == 0.0:
            raise DegenerateConic("zero coefficient vector")
        v = v / n
        nz = np.nonzero(np.abs(v) > 1e-12)[0]
        if nz.size and v[nz[0]] < 0.0:
            v = -v
        if max(abs(v[0]), abs(v[1]), abs(v[2])) <= 1e-12:
            raise DegenerateConic("quadratic part vanishes")
        object.__setattr__(self, "coeffs", tuple(float(x) for x in v))

    def __call__(self, p: Point) -> float:
        a, b, c, d, e, f = self.coeffs
        return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f

    def gradient(self, p: Point) -> Point:
        a, b, c, d, e, _ = self.coeffs
        return Point(2 * a * p.x + b * p.y + d, b * p.x + 2 * c * p.y + e)

    def matrix(self) -> np.ndarray:
        a, b, c, d, e, f = self.coeffs
        return np.array([[a, b / 2, d / 2], [b / 2, c, e / 2], [d / 2, e / 2, f]])

    def discriminant(self) -> float:
        a, b, c = self.coeffs[:3]
        return b * b - 4 * a * c


@dataclass(frozen=True)
class ConicFeatures:
    kind: ConicClass
    center: Point | None
    major_axis: Line
    minor_axis: Line | None
    foci: tuple[Point, ...]
    vertices: tuple[Point, ...]
    directrices: tuple[Line, ...]
    eccentricity: float
    semi_major: float | None
    semi_minor: float | None
    c_focal: float | None
    axis_dir: Point
    parabola_p: float | None = None


def _from_matrix(m: np.ndarray) -> GeneralConic:
    return GeneralConic((m[0, 0], 2 * m[0, 1], m[1, 1], 2 * m[0, 2], 2 * m[1, 2], m[2, 2]))


def conic_from_five_points(points, require_nondegenerate: bool = True) -> GeneralConic:
    """Unique conic through five points, as the null space of the incidence matrix.

    The points are centered and scaled before building the monomial matrix;
    the null vector comes from an SVD, which also reveals rank deficiency.
    """
    pts = np.array([[p.x, p.y] for p in points], dtype=float)
    if pts.shape != (5, 2):
        raise DegenerateConfiguration("exactly five points required")
    span = max(float(np.abs(pts - pts.mean(axis=0)).max()), 1e-300)
    for i in range(5):
        for j in range(i + 1, 5):
            if np.hypot(*(pts[i] - pts[j])) < 1e-12 * span:
                raise DegenerateConfiguration(f"points {i} and {j} coincide")
    ctr = pts.mean(axis=0)
    q = (pts - ctr) / span
    x, y = q[:, 0], q[:, 1]
    m = np.column_stack([x * x, x * y, y * y, x, y, np.ones(5)])
    _, sing, vt = np.linalg.svd(m)
    if sing[4] < 1e-12 * sing[0]:
        raise DegenerateConfiguration("incidence matrix has rank below five")
    a, b, c, d, e, f = vt[-1]
    qm = np.array([[a, b / 2, d / 2], [b / 2, c, e / 2], [d / 2, e / 2, f]])
    t = np.array([[1 / span, 0, -ctr[0] / span], [0, 1 / span, -ctr[1] / span], [0, 0, 1]])
    conic = _from_matrix(t.T @ qm @ t)
    if require_nondegenerate and abs(np.linalg.det(conic.matrix())) < 1e-12:
        raise DegenerateConic("fitted conic factors into lines")
    return conic


def classify_conic(q: GeneralConic, tol: float = PARABOLA_WINDOW,
                   det_tol: float = 1e-12) -> ConicClass:
    """Sign of B^2 - 4AC with a tolerance window around the parabola boundary."""
    if abs(np.linalg.det(q.matrix())) < det_tol:
        return ConicClass.DEGENERATE
    disc = q.discriminant()
    if abs(disc) < tol:
        return ConicClass.PARABOLA
    return ConicClass.ELLIPSE if disc < 0 else ConicClass.HYPERBOLA


def _eig2_sym(a: float, h: float, b: float) -> tuple[tuple[float, Point], tuple[float, Point]]:
    """Closed-form eigen pairs of [[a, h], [h, b]], ordered by eigenvalue."""
    mean = 0.5 * (a + b)
    r = math.hypot(0.5 * (a - b), h)
    lam1, lam2 = mean - r, mean + r
    def vec(lam: float) -> Point:
        # (h, lam-a) and (lam-b, h) are both eigenvectors; pick the larger
        v1, v2 = Point(h, lam - a), Point(lam - b, h)
        v = v1 if v1.norm() >= v2.norm() else v2
        return v.unit() if v.norm() > 0 else Point(1.0, 0.0)
    return (lam1, vec(lam1)), (lam2, vec(lam2))


def _parabola_features(q: GeneralConic) -> ConicFeatures:
    a, b, c, d, e, f = q.coeffs
    (lam_small, v_small), (lam_big, v_big) = _eig2_sym(a, b / 2, c)
    # the near-zero eigenvalue direction is the axis of symmetry
    if abs(lam_small) <= abs(lam_big):
        lam, u, v = lam_big, v_big, v_small
    else:
        lam, u, v = lam_small, v_small, v_big
    du = d * u.x + e * u.y
    dv = d * v.x + e * v.y
    if abs(dv) < 1e-12:
        raise DegenerateConic("parabola degenerates to parallel lines")
    # lam*U^2 + du*U + dv*V + f = 0  ->  (U - u0)^2 = 4 p (V - v0)
    u0 = -du / (2 * lam)
    v0 = -(f - du * du / (4 * lam)) / dv
    p = -dv / (4 * lam)
    vertex = u * u0 + v * v0
    focus = vertex + v * p
    directrix = Line.from_point_normal(vertex - v * p, v)
    axis = Line.from_point_direction(vertex, v)
    return ConicFeatures(
        kind=ConicClass.PARABOLA,
        center=None,
        major_axis=axis,
        minor_axis=None,
        foci=(focus,),
        vertices=(vertex,),
        directrices=(directrix,),
        eccentricity=1.0,
        semi_major=None,
        semi_minor=None,
        c_focal=None,
        axis_dir=v,
        parabola_p=p,
    )


def conic_features(q: GeneralConic, tol: float = PARABOLA_WINDOW) -> ConicFeatures:
    """Center, axes, foci, vertices, directrices and eccentricity of a conic."""
    kind = classify_conic(q, tol)
    if kind is ConicClass.DEGENERATE:
        raise DegenerateConic("no features for a degenerate conic")
    if kind is ConicClass.PARABOLA:
        return _parabola_features(q)
    a, b, c, d, e, f = q.coeffs
    det = a * c - b * b / 4
    cx = (-d / 2 * c + e / 2 * (b / 2)) / det
    cy = (-e / 2 * a + d / 2 * (b / 2)) / det
    center = Point(cx, cy)
    fc = f + (d * cx + e * cy) / 2
    if abs(fc) < 1e-15:
        raise DegenerateConic("conic reduces to a point or a line pair")
    pairs = _eig2_sym(a, b / 2, c)
    axes = [(-fc / lam, vec) for lam, vec in pairs]  # signed squared semi-axes
    if kind is ConicClass.ELLIPSE:
        axes.sort(key=lambda t: t[0], reverse=True)
        (a2, u), (b2, v) = axes
        if a2 <= 0 or b2 <= 0:
            raise DegenerateConic("empty ellipse (imaginary locus)")
        semi_major, semi_minor = math.sqrt(a2), math.sqrt(b2)
        c_focal = math.sqrt(max(a2 - b2, 0.0))
        ecc = c_focal / semi_major
    else:
        axes.sort(key=lambda t: t[0], reverse=True)
        (a2, u), (nb2, v) = axes
        if a2 <= 0 or nb2 >= 0:
            raise DegenerateConic("hyperbola with no real branch")
        semi_major, semi_minor = math.sqrt(a2), math.sqrt(-nb2)
        c_focal = math.sqrt(a2 - nb2)
        ecc = c_focal / semi_major
    major_axis = Line.from_point_direction(center, u)
    minor_axis = Line.from_point_direction(center, v)
    foci: tuple[Point, ...]
    if ecc < 1e-12:
        foci = (center,)
        directrices: tuple[Line, ...] = ()
        vertices = (center + u * semi_major, center - u * semi_major)
    else:
        foci = (center + u * c_focal, center - u * c_focal)
        dd = semi_major / ecc
        directrices = (
            Line.from_point_normal(center + u * dd, u),
            Line.from_point_normal(center - u * dd, u),
        )
        vertices = (center + u * semi_major, center - u * semi_major)
    return ConicFeatures(
        kind=kind,
        center=center,
        major_axis=major_axis,
        minor_axis=minor_axis,
        foci=foci,
        vertices=vertices,
        directrices=directrices,
        eccentricity=ecc,
        semi_major=semi_major,
        semi_minor=semi_minor,
        c_focal=c_focal,
        axis_dir=u,
    )


def _central_conic(center: Point, u: Point, a2: float, b2: float) -> GeneralConic:
    """Conic (X'/a)^2 + (Y'/b)^2 = 1 in the frame (u, perp u) at center.

    ``b2 < 0`` yields the hyperbola with transverse axis along ``u``.
    """
    v = u.perp()
    s = np.outer([u.x, u.y], [u.x, u.y]) / a2 + np.outer([v.x, v.y], [v.x, v.y]) / b2
    cvec = np.array([center.x, center.y])
    lin = -2.0 * s @ cvec
    const = float(cvec @ s @ cvec) - 1.0
    return GeneralConic((s[0, 0], 2 * s[0, 1], s[1, 1], lin[0], lin[1], const))


def ellipse_from_center_focus_semimajor(center: Point, focus: Point, a: float) -> GeneralConic:
    """Ellipse with a given center, one focus, and semi-major length."""
    c = center.dist(focus)
    if c >= a:
        raise FocusTooFar(f"focal distance {c} is not below semi-major {a}")
    u = (focus - center).unit() if c > 1e-15 * a else Point(1.0, 0.0)
    return _central_conic(center, u, a * a, a * a - c * c)


def conic_from_focus_directrix_ecc(focus: Point, directrix: Line, ecc: float) -> GeneralConic:
    """Locus |XF| = ecc * dist(X, directrix) as a quadratic form."""
    if ecc <= 0:
        raise GeometryError("eccentricity must be positive")
    scale = max(abs(directrix.c), focus.norm(), 1.0)
    if directrix.distance(focus) < 1e-12 * scale:
        raise FocusOnDirectrix("focus lies on the directrix")
    nx, ny, c = directrix.nx, directrix.ny, directrix.c
    e2 = ecc * ecc
    return GeneralConic((
        1 - e2 * nx * nx,
        -2 * e2 * nx * ny,
        1 - e2 * ny * ny,
        -2 * focus.x + 2 * e2 * nx * c,
        -2 * focus.y + 2 * e2 * ny * c,
        focus.x * focus.x + focus.y * focus.y - e2 * c * c,
    ))


@dataclass(frozen=True)
class LineConicIntersection:
    kind: str                     # "secant" | "tangent" | "disjoint"
    points: tuple[Point, ...]
    separation: float             # root gap as a length (imaginary gap if disjoint)


def line_conic_tangency(q: GeneralConic, line: Line,
                        tol: float | None = None) -> LineConicIntersection:
    """Classify a line against a conic by the discriminant of the restriction."""
    p0 = line.foot(Point(0.0, 0.0))
    d = line.direction
    a, b, c, _, _, _ = q.coeffs
    alpha = a * d.x * d.x + b * d.x * d.y + c * d.y * d.y
    beta = q.gradient(p0).dot(d)
    gamma = q(p0)
    if abs(alpha) < 1e-14:
        if abs(beta) < 1e-14:
            return LineConicIntersection("disjoint", (), math.inf)
        s = -gamma / beta
        return LineConicIntersection("secant", (p0 + d * s,), math.inf)
    disc = beta * beta - 4 * alpha * gamma
    sep = math.sqrt(abs(disc)) / abs(alpha)
    s_mid = -beta / (2 * alpha)
    if tol is None:
        tol = 1e-7 * max(1.0, abs(s_mid))
    if sep < tol:
        return LineConicIntersection("tangent", (p0 + d * s_mid,), sep)
    if disc > 0:
        h = math.sqrt(disc) / (2 * alpha)
        return LineConicIntersection("secant", (p0 + d * (s_mid - h), p0 + d * (s_mid + h)), sep)
    return LineConicIntersection("disjoint", (), sep)


def coefficient_distance(q1: GeneralConic, q2: GeneralConic) -> float:
    """Distance of normalized coefficient vectors, up to overall sign."""
    v1 = np.asarray(q1.coeffs)
    v2 = np.asarray(q2.coeffs)
    return float(min(np.linalg.norm(v1 - v2), np.linalg.norm(v1 + v2)))


def conic_point_distance(q: GeneralConic, p: Point) -> float:
    """First-order distance from a point to the conic: |q(p)| / |grad q(p)|."""
    g = q.gradient(p).norm()
    if g == 0.0:
        return math.inf
    return abs(q(p)) / g


def sample_conic_points(q: GeneralConic, n: int, extent: float = 3.0) -> list[Point]:
    """Points on the conic, for residual checks and rendering.

    ``extent`` bounds the parameter range on unbounded branches.
    """
    feats = conic_features(q)
    pts: list[Point] = []
    if feats.kind is ConicClass.ELLIPSE:
        u, v = feats.axis_dir, feats.axis_dir.perp()
        for i in range(n):
            t = 2 * math.pi * i / n
            pts.append(feats.center + u * (feats.semi_major * math.cos(t))
                       + v * (feats.semi_minor * math.sin(t)))
    elif feats.kind is ConicClass.HYPERBOLA:
        u, v = feats.axis_dir, feats.axis_dir.perp()
        half = max(n // 2, 2)
        for branch in (1.0, -1.0):
            for i in range(half):
                t = -extent + 2 * extent * i / (half - 1)
                pts.append(feats.center + u * (branch * feats.semi_major * math.cosh(t))
                           + v * (feats.semi_minor * math.sinh(t)))
    else:
        vertex = feats.vertices[0]
        axis, trans = feats.axis_dir, feats.axis_dir.perp()
        p = feats.parabola_p
        for i in range(n):
            t = -extent + 2 * extent * i / (n - 1)
            pts.append(vertex + trans * t + axis * (t * t / (4 * p)))
    return pts


def transform_conic(q: GeneralConic, angle: float, translation: Point) -> GeneralConic:
    """Conic of the image set under rotation by ``angle`` then translation."""
    ca, sa = math.cos(angle), math.sin(angle)
    rot_t = np.array([[ca, sa], [-sa, ca]])
    t = np.array([translation.x, translation.y])
    h = np.eye(3)
    h[:2, :2] = rot_t
    h[:2, 2] = -rot_t @ t
    return _from_matrix(h.T @ q.matrix() @ h)
