"""Plane-geometry primitives: points, lines, circles, inversion, poles and polars.

All operations are pure functions of immutable values. Geometric predicates
use an absolute tolerance derived from a characteristic length of their
inputs; the default relative tolerance is ``REL_TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

REL_TOL = 1e-9

__all__ = [
    "REL_TOL",
    "GeometryError",
    "CenterInversion",
    "LineThroughCenter",
    "DegenerateTangency",
    "DegenerateTriangle",
    "CoincidentObjects",
    "PointNotOnCurve",
    "Point",
    "Line",
    "Circle",
    "InversionCircle",
    "CircleOrLine",
    "midpoint",
    "scene_scale",
    "invert_point",
    "invert_circle",
    "polar_of_point",
    "pole_of_line",
    "tangent_line_at",
    "circle_tangent_at_through",
    "exinscribed_circle",
    "intersect",
    "angle_between_circles_at",
    "circumcenter",
    "perpendicular_bisector",
]


class GeometryError(Exception):
    """Base class for geometric failures."""


class CenterInversion(GeometryError):
    """The inversion center itself has no inverse."""


class LineThroughCenter(GeometryError):
    """A line through the inversion center has no pole."""


class DegenerateTangency(GeometryError):
    """No circle is tangent to a line at a point of that same line."""


class DegenerateTriangle(GeometryError):
    """Collinear vertices admit no excircle or circumcircle."""


class CoincidentObjects(GeometryError):
    """Intersection of an object with itself is not a point set."""


class PointNotOnCurve(GeometryError):
    """An on-curve point was required."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def perp(self) -> "Point":
        """Rotate by +90 degrees."""
        return Point(-self.y, self.x)

    def unit(self) -> "Point":
        n = self.norm()
        if n == 0.0:
            raise GeometryError("cannot normalize the zero vector")
        return Point(self.x / n, self.y / n)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) * 0.5, (a.y + b.y) * 0.5)


@dataclass(frozen=True)
class Line:
    """Implicit line: p on line iff nx*p.x + ny*p.y == c.

    The normal is unit length and canonicalized so the first nonzero
    component is positive, which makes equality of constructions testable.
    """

    nx: float
    ny: float
    c: float

    def __post_init__(self) -> None:
        n = math.hypot(self.nx, self.ny)
        if not math.isfinite(n) or n < 1e-300:
            raise GeometryError("line normal must be nonzero")
        nx, ny, c = self.nx / n, self.ny / n, self.c / n
        # sign rule: first component above the direction-noise floor decides
        if nx < -1e-12 or (abs(nx) <= 1e-12 and ny < 0.0):
            nx, ny, c = -nx, -ny, -c
        object.__setattr__(self, "nx", nx)
        object.__setattr__(self, "ny", ny)
        object.__setattr__(self, "c", c)

    @property
    def normal(self) -> Point:
        return Point(self.nx, self.ny)

    @property
    def direction(self) -> Point:
        return Point(-self.ny, self.nx)

    @classmethod
    def from_points(cls, a: Point, b: Point) -> "Line":
        d = b - a
        if d.norm() == 0.0:
            raise GeometryError("two distinct points required")
        n = d.perp()
        return cls(n.x, n.y, n.dot(a))

    @classmethod
    def from_point_normal(cls, p: Point, normal: Point) -> "Line":
        return cls(normal.x, normal.y, normal.dot(p))

    @classmethod
    def from_point_direction(cls, p: Point, direction: Point) -> "Line":
        return cls.from_point_normal(p, direction.perp())

    def signed_distance(self, p: Point) -> float:
        return self.nx * p.x + self.ny * p.y - self.c

    def distance(self, p: Point) -> float:
        return abs(self.signed_distance(p))

    def foot(self, p: Point) -> Point:
        s = self.signed_distance(p)
        return Point(p.x - s * self.nx, p.y - s * self.ny)

    def contains(self, p: Point, tol: float) -> bool:
        return self.distance(p) <= tol


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise GeometryError(f"circle radius must be positive, got {self.radius}")

    def point_at(self, theta: float) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )

    def contains(self, p: Point, tol: float) -> bool:
        return abs(p.dist(self.center) - self.radius) <= tol


@dataclass(frozen=True)
class InversionCircle:
    """Circle of inversion: center is the pole of the map, k its radius."""

    center: Point
    k: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k) and self.k > 0.0):
            raise GeometryError(f"inversion radius must be positive, got {self.k}")


CircleOrLine = Circle | Line


def scene_scale(*objects) -> float:
    """Characteristic length of a group of inputs, used to scale tolerances."""
    vals = []
    for obj in objects:
        if isinstance(obj, Point):
            vals += [abs(obj.x), abs(obj.y)]
        elif isinstance(obj, Circle):
            vals += [abs(obj.center.x), abs(obj.center.y), obj.radius]
        elif isinstance(obj, InversionCircle):
            vals += [abs(obj.center.x), abs(obj.center.y), obj.k]
        elif isinstance(obj, Line):
            vals.append(abs(obj.c))
        elif isinstance(obj, (int, float)):
            vals.append(abs(float(obj)))
        else:
            raise TypeError(f"unsupported object {type(obj)!r}")
    m = max(vals, default=0.0)
    return m if m > 0.0 else 1.0


def invert_point(p: Point, inv: InversionCircle) -> Point:
    """Image of ``p`` under inversion: on ray center->p with |p'||p| = k^2."""
    w = p - inv.center
    n2 = w.dot(w)
    if math.sqrt(n2) < 1e-12 * inv.k:
        raise CenterInversion("point coincides with the inversion center")
    s = inv.k * inv.k / n2
    return inv.center + w * s


def invert_circle(c: Circle, inv: InversionCircle) -> CircleOrLine:
    """Image circle, or image line when ``c`` passes through the center.

    The branch is decided by a tolerance window on |dist(center, c) - r|;
    the line branch is built through the inverses of two actual points of
    ``c`` so that sampled images stay on the result.
    """
    m = inv.center
    d = m.dist(c.center)
    scale = max(inv.k, c.radius, d)
    if abs(d - c.radius) < REL_TOL * scale:
        u = (c.center - m).unit()
        v = u.perp() * c.radius
        p1 = invert_point(c.center + v, inv)
        p2 = invert_point(c.center - v, inv)
        return Line.from_points(p1, p2)
    s = inv.k * inv.k / (d * d - c.radius * c.radius)
    return Circle(m + (c.center - m) * s, abs(s) * c.radius)


def polar_of_point(p: Point, inv: InversionCircle) -> Line:
    """Line through the inverse of ``p`` perpendicular to the center ray."""
    q = invert_point(p, inv)
    n = (p - inv.center).unit()
    return Line.from_point_normal(q, n)


def pole_of_line(line: Line, inv: InversionCircle) -> Point:
    """Inverse of the foot of the perpendicular from the center to the line."""
    if line.distance(inv.center) < 1e-12 * inv.k:
        raise LineThroughCenter("line passes through the inversion center")
    return invert_point(line.foot(inv.center), inv)


def tangent_line_at(c: Circle, p: Point, tol: float | None = None) -> Line:
    """Tangent of a circle at one of its own points."""
    if tol is None:
        tol = REL_TOL * scene_scale(c, p)
    if not c.contains(p, tol):
        raise PointNotOnCurve(f"{p} is not on {c}")
    return Line.from_point_normal(p, p - c.center)


def circle_tangent_at_through(line: Line, t: Point, q: Point) -> Circle:
    """Circle tangent to ``line`` at ``t`` that passes through ``q``.

    The center sits on the normal of the line at ``t``; its offset along the
    normal is fixed by |center - t| = |center - q|.
    """
    scale = scene_scale(line, t, q)
    if line.distance(t) > 1e-10 * scale:
        raise GeometryError("tangency point is not on the line")
    w = q - t
    denom = line.normal.dot(w)
    if abs(denom) < REL_TOL * scale:
        raise DegenerateTangency("through-point lies on the tangent line")
    u = w.dot(w) / (2.0 * denom)
    return Circle(t + line.normal * u, abs(u))


def exinscribed_circle(v1: Point, apex: Point, v2: Point) -> Circle:
    """Excircle of triangle (v1, apex, v2) opposite ``apex``.

    It is tangent to side [v1 v2] and to the extensions of the two sides
    through ``apex``; the center lies on the internal bisector from ``apex``.
    """
    len_a = apex.dist(v2)   # opposite v1
    len_b = v1.dist(v2)     # opposite apex
    len_c = v1.dist(apex)   # opposite v2
    scale = max(len_a, len_b, len_c)
    area = 0.5 * abs((apex - v1).cross(v2 - v1))
    if scale == 0.0 or area < 1e-12 * scale * scale:
        raise DegenerateTriangle("triangle has (near-)zero area")
    denom = len_a - len_b + len_c
    center = (v1 * len_a - apex * len_b + v2 * len_c) * (1.0 / denom)
    s = 0.5 * (len_a + len_b + len_c)
    return Circle(center, area / (s - len_b))


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    """Center of the circle through three non-collinear points."""
    d = 2.0 * (b - a).cross(c - a)
    scale = max(a.dist(b), a.dist(c), b.dist(c), 1e-300)
    if abs(d) < 1e-12 * scale * scale:
        raise DegenerateTriangle("points are (near-)collinear")
    ab = (b.dot(b) - a.dot(a)) * 0.5
    ac = (c.dot(c) - a.dot(a)) * 0.5
    ux = (ab * (c.y - a.y) - ac * (b.y - a.y)) * 2.0 / d
    uy = ((b.x - a.x) * ac - (c.x - a.x) * ab) * 2.0 / d
    return Point(ux, uy)


def perpendicular_bisector(a: Point, b: Point) -> Line:
    return Line.from_point_normal(midpoint(a, b), b - a)


def _intersect_circle_circle(a: Circle, b: Circle, tol: float) -> list[Point]:
    d = a.center.dist(b.center)
    if d < tol and abs(a.radius - b.radius) < tol:
        raise CoincidentObjects("circles coincide")
    if d == 0.0:
        return []
    x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d)
    h2 = a.radius * a.radius - x * x
    scale = max(a.radius, b.radius, d)
    window = tol * scale
    u = (b.center - a.center) * (1.0 / d)
    base = a.center + u * x
    if h2 > window:
        h = math.sqrt(h2)
        v = u.perp() * h
        return [base + v, base - v]
    if h2 > -window:
        return [base]
    return []


def _intersect_circle_line(a: Circle, line: Line, tol: float) -> list[Point]:
    s = line.signed_distance(a.center)
    h2 = a.radius * a.radius - s * s
    window = tol * max(a.radius, abs(s))
    foot = Point(a.center.x - s * line.nx, a.center.y - s * line.ny)
    if h2 > window:
        h = math.sqrt(h2)
        d = line.direction
        return [foot + d * h, foot - d * h]
    if h2 > -window:
        return [foot]
    return []


def _intersect_line_line(a: Line, b: Line, tol: float) -> list[Point]:
    det = a.nx * b.ny - a.ny * b.nx
    if abs(det) < 1e-12:
        sign = 1.0 if a.nx * b.nx + a.ny * b.ny >= 0 else -1.0
        if abs(a.c - sign * b.c) < tol:
            raise CoincidentObjects("lines coincide")
        return []
    x = (a.c * b.ny - b.c * a.ny) / det
    y = (a.nx * b.c - b.nx * a.c) / det
    return [Point(x, y)]


def intersect(a: CircleOrLine, b: CircleOrLine, tol: float | None = None) -> list[Point]:
    """Common points of two circles or lines (0, 1 at tangency, or 2).

    Points are returned sorted by (x, y). Raises ``CoincidentObjects`` when
    the two arguments describe the same curve.
    """
    if a == b:
        raise CoincidentObjects("identical objects")
    if tol is None:
        tol = REL_TOL * scene_scale(a, b)
    if isinstance(a, Circle) and isinstance(b, Circle):
        pts = _intersect_circle_circle(a, b, tol)
    elif isinstance(a, Circle) and isinstance(b, Line):
        pts = _intersect_circle_line(a, b, tol)
    elif isinstance(a, Line) and isinstance(b, Circle):
        pts = _intersect_circle_line(b, a, tol)
    else:
        pts = _intersect_line_line(a, b, tol)
    return sorted(pts, key=lambda p: (p.x, p.y))


def _angle_deg(u: Point, v: Point) -> float:
    return math.degrees(math.atan2(abs(u.cross(v)), u.dot(v)))


def _tangent_direction_at(obj: CircleOrLine, p: Point) -> Point:
    if isinstance(obj, Circle):
        return (p - obj.center).perp().unit()
    return obj.direction


def angle_between_circles_at(a: CircleOrLine, b: CircleOrLine, p: Point,
                             tol: float | None = None) -> float:
    """Angle between two curves at a common point, in degrees.

    For two circles this is the opening of the wedge their disks overlap in
    (the measure inversion transports): 180 deg minus the angle subtended by
    the two centers at ``p``. Tangent circle pairs give 0. Pairs involving a
    line have no canonical disk side, so those angles fold into [0, 90].
    """
    if tol is None:
        tol = 1e-7 * scene_scale(a, b, p)
    for obj in (a, b):
        on = obj.contains(p, tol) if isinstance(obj, Circle) else obj.contains(p, tol)
        if not on:
            raise PointNotOnCurve(f"{p} is not on {obj}")
    if isinstance(a, Circle) and isinstance(b, Circle):
        theta = 180.0 - _angle_deg(a.center - p, b.center - p)
        return 0.0 if theta >= 180.0 - 1e-9 else theta
    ang = _angle_deg(_tangent_direction_at(a, p), _tangent_direction_at(b, p))
    return min(ang, 180.0 - ang)
