"""Reuleaux-style curvilinear triangles and their negative pedal geometry.

A (possibly asymmetric) Reuleaux triangle is the intersection of three
disks whose boundary circles meet pairwise at the triangle's vertices. The
pedal point M lives on the arc joining the first two vertices; the negative
pedal curve of the boundary then consists of two elliptic arcs and one
point, and the conic through their five endpoints is the object under test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .conics import (
    ConicClass,
    GeneralConic,
    classify_conic,
    conic_features,
    conic_from_five_points,
    line_conic_tangency,
)
from .geom import (
    Circle,
    GeometryError,
    InversionCircle,
    Line,
    Point,
    angle_between_circles_at,
    circumcenter,
    exinscribed_circle,
    intersect,
    invert_circle,
    invert_point,
    midpoint,
    polar_of_point,
    tangent_line_at,
)
from .pedal import npc_contact_point, npc_of_circle
from .report import SweepReport, VerificationReport

__all__ = [
    "InvalidArcs",
    "PedalAtVertex",
    "NotSymmetric",
    "NoCrossing",
    "InvalidSweep",
    "ReuleauxTriangle",
    "EndpointSet",
    "InvertedConfig",
    "make_reuleaux",
    "make_symmetric",
    "pedal_point_at",
    "npc_endpoints",
    "endpoint_conic",
    "verify_focus_theorem",
    "inverted_configuration",
    "verify_inversion_route",
    "classify_by_position",
    "locate_parabola_pedals",
    "check_elementary_properties",
    "sweep_study",
]

DEFAULT_TOL = 1e-8
PARABOLA_POSITION_WINDOW = 1e-7


class InvalidArcs(GeometryError):
    """The three circles do not bound a three-arc convex region."""


class PedalAtVertex(GeometryError):
    """The pedal construction degenerates at the arc endpoints."""


class NotSymmetric(GeometryError):
    """This check only applies to the equal-radii equilateral construction."""


class NoCrossing(GeometryError):
    """The position function never changes sign on the scanned range."""


class InvalidSweep(GeometryError):
    """A sweep needs at least three parameter samples."""


@dataclass(frozen=True)
class ReuleauxTriangle:
    """Three vertices and the three arc circles, one per opposite side.

    ``arcs[0]`` carries the side joining vertices 1 and 2 (indices as in
    ``vertices``), ``arcs[1]`` the side joining 0 and 2, and ``arcs[2]`` the
    pedal side joining 0 and 1. In the symmetric case the arc centers are
    the vertices themselves.
    """

    vertices: tuple[Point, Point, Point]
    arcs: tuple[Circle, Circle, Circle]
    symmetric: bool

    @property
    def pedal_circle(self) -> Circle:
        return self.arcs[2]

    @property
    def scale(self) -> float:
        return max(c.radius for c in self.arcs)

    def side_endpoints(self, i: int) -> tuple[Point, Point]:
        j, k = [m for m in range(3) if m != i]
        return self.vertices[j], self.vertices[k]

    def arc_angles(self, i: int) -> tuple[float, float]:
        """(start angle, sweep) of side ``i`` on its circle."""
        pa, pb = self.side_endpoints(i)
        return _arc_between(self.arcs[i], pa, pb)

    def boundary_points(self, per_arc: int = 128) -> list[Point]:
        pts: list[Point] = []
        for i in (0, 1, 2):
            circ = self.arcs[i]
            start, sweep = self.arc_angles(i)
            for j in range(per_arc):
                pts.append(circ.point_at(start + sweep * j / (per_arc - 1)))
        return pts


def _arc_between(circ: Circle, pa: Point, pb: Point) -> tuple[float, float]:
    """Start angle and signed sweep of the minor arc from pa to pb."""
    a1 = (pa - circ.center).angle()
    a2 = (pb - circ.center).angle()
    sweep = math.remainder(a2 - a1, 2.0 * math.pi)
    return a1, sweep


def _corner(circles: list[Circle], i: int, j: int, k: int, tol: float) -> Point:
    """Intersection of circles i and j that lies inside disk k."""
    pts = intersect(circles[i], circles[j])
    inside = [p for p in pts
              if p.dist(circles[k].center) <= circles[k].radius + tol]
    if len(inside) != 1:
        raise InvalidArcs(
            f"circles {i} and {j} must cross exactly once inside disk {k}, "
            f"found {len(inside)} such points")
    return inside[0]


def make_reuleaux(centers, radii) -> ReuleauxTriangle:
    """Build and validate the three-arc region bounded by three circles.

    ``centers`` are the three arc centers, ``radii`` the matching radii.
    Vertex i is the crossing of the other two circles that lies inside disk
    i, so each circle passes through the two vertices it does not own.
    """
    centers = [p if isinstance(p, Point) else Point(*p) for p in centers]
    radii = [float(r) for r in radii]
    if len(centers) != 3 or len(radii) != 3:
        raise InvalidArcs("three centers and three radii required")
    circles = [Circle(c, r) for c, r in zip(centers, radii)]
    scale = max(radii)
    tol = 1e-9 * scale
    v0 = _corner(circles, 1, 2, 0, tol)
    v1 = _corner(circles, 0, 2, 1, tol)
    v2 = _corner(circles, 0, 1, 2, tol)
    verts = (v0, v1, v2)
    if min(v0.dist(v1), v0.dist(v2), v1.dist(v2)) < 1e-6 * scale:
        raise InvalidArcs("vertices are not distinct")
    sides = [r for r in radii]
    dists = [centers[0].dist(centers[1]), centers[0].dist(centers[2]),
             centers[1].dist(centers[2])]
    symmetric = (max(radii) - min(radii) < 1e-12 * scale
                 and max(dists) - min(dists) < 1e-12 * scale
                 and abs(dists[0] - radii[0]) < 1e-12 * scale)
    tri = ReuleauxTriangle(verts, tuple(circles), symmetric)
    _validate_arcs(tri)
    return tri


def _validate_arcs(tri: ReuleauxTriangle) -> None:
    tol = 1e-9 * tri.scale
    for i in (0, 1, 2):
        circ = tri.arcs[i]
        pa, pb = tri.side_endpoints(i)
        for p in (pa, pb):
            if not circ.contains(p, tol):
                raise InvalidArcs(f"circle {i} misses its vertices")
        start, sweep = _arc_between(circ, pa, pb)
        others = [m for m in range(3) if m != i]
        for j in range(1, 16):
            p = circ.point_at(start + sweep * j / 16)
            for m in others:
                if p.dist(tri.arcs[m].center) > tri.arcs[m].radius + 1e-7 * tri.scale:
                    raise InvalidArcs(
                        f"arc {i} leaves disk {m}: the circles do not bound "
                        "a three-arc region")


def make_symmetric(r: float = 1.0, origin: Point = Point(0.0, 0.0),
                   angle: float = 0.0) -> ReuleauxTriangle:
    """Equal-radii construction: an equilateral triangle of side r, posed."""
    v0 = origin
    v1 = origin + Point(r * math.cos(angle), r * math.sin(angle))
    v2 = origin + Point(r * math.cos(angle + math.pi / 3),
                        r * math.sin(angle + math.pi / 3))
    return make_reuleaux([v0, v1, v2], [r, r, r])


def pedal_point_at(tri: ReuleauxTriangle, t: float) -> Point:
    """Point on the pedal arc at normalized parameter t (0 and 1 hit the vertices)."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"pedal parameter must be in [0, 1], got {t}")
    start, sweep = tri.arc_angles(2)
    return tri.pedal_circle.point_at(start + t * sweep)


@dataclass(frozen=True)
class EndpointSet:
    """The five endpoints of the negative pedal curve, plus its two ellipses.

    ``a1``/``a2`` are the envelope contacts of the arc centered on the first
    arc center (preimages: second vertex, third vertex); ``b1``/``b2`` those
    of the arc centered on the second (preimages: first vertex, third).
    ``antipode`` is the point the pedal side collapses to, and ``focus_a``/
    ``focus_b`` are the non-shared foci of the two ellipses.
    """

    pedal: Point
    antipode: Point
    a1: Point
    a2: Point
    b1: Point
    b2: Point
    focus_a: Point
    focus_b: Point
    ellipse_a: GeneralConic
    ellipse_b: GeneralConic

    def five_points(self) -> tuple[Point, Point, Point, Point, Point]:
        return (self.a1, self.a2, self.b1, self.b2, self.antipode)


def _second_focus(conic: GeneralConic, pedal: Point) -> Point:
    feats = conic_features(conic)
    return max(feats.foci, key=lambda f: f.dist(pedal))


def _require_interior_pedal(tri: ReuleauxTriangle, m: Point) -> None:
    scale = tri.scale
    if not tri.pedal_circle.contains(m, 1e-7 * scale):
        raise GeometryError("pedal point is not on the pedal arc's circle")
    if m.dist(tri.vertices[0]) < 1e-9 * scale or m.dist(tri.vertices[1]) < 1e-9 * scale:
        raise PedalAtVertex("pedal point coincides with an arc endpoint")


def npc_endpoints(tri: ReuleauxTriangle, m: Point) -> EndpointSet:
    """Contacts of the negative pedal at the arc endpoints, and the two ellipses."""
    _require_interior_pedal(tri, m)
    v0, v1, v2 = tri.vertices
    circle_a, circle_b, pedal_circle = tri.arcs
    antipode = pedal_circle.center * 2.0 - m
    a1 = npc_contact_point(circle_a, v1, m)
    a2 = npc_contact_point(circle_a, v2, m)
    b1 = npc_contact_point(circle_b, v0, m)
    b2 = npc_contact_point(circle_b, v2, m)
    ellipse_a = npc_of_circle(circle_a, m)
    ellipse_b = npc_of_circle(circle_b, m)
    if not isinstance(ellipse_a, GeneralConic) or not isinstance(ellipse_b, GeneralConic):
        raise GeometryError("pedal point lies on a side circle; no elliptic arcs")
    return EndpointSet(
        pedal=m,
        antipode=antipode,
        a1=a1, a2=a2, b1=b1, b2=b2,
        focus_a=_second_focus(ellipse_a, m),
        focus_b=_second_focus(ellipse_b, m),
        ellipse_a=ellipse_a,
        ellipse_b=ellipse_b,
    )


def endpoint_conic(tri: ReuleauxTriangle, m: Point) -> GeneralConic:
    """The conic through the five negative-pedal endpoints."""
    return conic_from_five_points(npc_endpoints(tri, m).five_points())


def verify_focus_theorem(tri: ReuleauxTriangle, m: Point,
                         tol: float = DEFAULT_TOL) -> VerificationReport:
    """Direct check that the endpoint conic has a focus at the pedal point.

    Also checks that the conic's major axis passes through the circumcenter
    of the vertex triangle, and that pedal point, inverted-frame circle
    center and circumcenter are collinear.
    """
    if not tri.symmetric:
        raise NotSymmetric("the focus theorem is stated for the symmetric triangle")
    r = tri.scale
    conic = endpoint_conic(tri, m)
    feats = conic_features(conic)
    g = circumcenter(*tri.vertices)
    config = inverted_configuration(tri, m, r)
    axis_line = Line.from_points(m, config.excircle.center)
    report = VerificationReport(name="focus_theorem", tolerance=tol * r)
    report.residuals["focus_at_pedal"] = min(f.dist(m) for f in feats.foci)
    report.residuals["axis_through_circumcenter"] = feats.major_axis.distance(g)
    report.residuals["pedal_center_circumcenter_collinear"] = axis_line.distance(g)
    report.details["conic"] = conic
    report.details["circumcenter"] = g
    return report


@dataclass(frozen=True)
class InvertedConfig:
    """Image of the triangle under inversion about the pedal point.

    ``apex`` is where the tangents at the two inverted base vertices meet;
    ``excircle`` is the excircle of (v1, apex, v2) opposite the apex, which
    all five endpoint polars touch; ``circumcircle`` is concentric with it
    through v1 and v2; the side circles are the inverted side arcs, tangent
    to the apex triangle's legs at v1 and v2 and passing through v3.
    """

    v1: Point
    v2: Point
    v3: Point
    apex: Point
    polars: dict[str, Line]
    excircle: Circle
    circumcircle: Circle
    side_circle_v1: Circle
    side_circle_v2: Circle


def inverted_configuration(tri: ReuleauxTriangle, m: Point, k: float) -> InvertedConfig:
    """Invert the construction about the pedal point with radius k."""
    _require_interior_pedal(tri, m)
    inv = InversionCircle(m, k)
    v1p = invert_point(tri.vertices[0], inv)
    v2p = invert_point(tri.vertices[1], inv)
    v3p = invert_point(tri.vertices[2], inv)
    image_a = invert_circle(tri.arcs[0], inv)
    image_b = invert_circle(tri.arcs[1], inv)
    if not isinstance(image_a, Circle) or not isinstance(image_b, Circle):
        raise GeometryError("side circle passes through the pedal point")
    ends = npc_endpoints(tri, m)
    polars = {
        "a1": polar_of_point(ends.a1, inv),
        "a2": polar_of_point(ends.a2, inv),
        "b1": polar_of_point(ends.b1, inv),
        "b2": polar_of_point(ends.b2, inv),
        "p0": polar_of_point(ends.antipode, inv),
    }
    leg_v1 = tangent_line_at(image_b, v1p)
    leg_v2 = tangent_line_at(image_a, v2p)
    apex_pts = intersect(leg_v1, leg_v2)
    if len(apex_pts) != 1:
        raise GeometryError("tangent legs at the inverted base vertices are parallel")
    apex = apex_pts[0]
    excircle = exinscribed_circle(v1p, apex, v2p)
    circumcircle = Circle(excircle.center,
                          0.5 * (excircle.center.dist(v1p) + excircle.center.dist(v2p)))
    return InvertedConfig(
        v1=v1p, v2=v2p, v3=v3p, apex=apex,
        polars=polars,
        excircle=excircle,
        circumcircle=circumcircle,
        side_circle_v1=image_b,
        side_circle_v2=image_a,
    )


def _line_gap(a: Line, b: Line, scale: float) -> float:
    """Sign-insensitive distance between two canonicalized lines."""
    sign = 1.0 if a.nx * b.nx + a.ny * b.ny >= 0 else -1.0
    dn = math.hypot(a.nx - sign * b.nx, a.ny - sign * b.ny)
    return dn + abs(a.c - sign * b.c) / scale


def _oriented_tangent(circ: Circle, at: Point, towards: Point) -> Point:
    t = (at - circ.center).perp().unit()
    return t if t.dot(towards - at) >= 0 else -t


def verify_inversion_route(tri: ReuleauxTriangle, m: Point, k: float,
                           tol: float = DEFAULT_TOL) -> VerificationReport:
    """Proof-route residuals in the inverted frame. Lengths are in units of k.

    Checks, in order: the two computations of the endpoint polars agree
    (directly, and as tangents of the inverted arcs); the apex triangle is
    equilateral; the inverted arcs meet at 120 degrees; all five polars are
    tangent to the excircle; the concentric circle through the inverted base
    vertices is consistent; the third inverted vertex mirrors the pedal
    point across the inverted pedal side.
    """
    config = inverted_configuration(tri, m, k)
    v1p, v2p, v3p, apex = config.v1, config.v2, config.v3, config.apex
    image_a, image_b = config.side_circle_v2, config.side_circle_v1
    report = VerificationReport(name="inversion_route", tolerance=tol)

    tangents = {
        "a1": tangent_line_at(image_a, v2p),
        "a2": tangent_line_at(image_a, v3p),
        "b1": tangent_line_at(image_b, v1p),
        "b2": tangent_line_at(image_b, v3p),
        "p0": Line.from_points(v1p, v2p),
    }
    for key, line in config.polars.items():
        report.residuals[f"polar_match_{key}"] = _line_gap(line, tangents[key], k)

    sides = [v1p.dist(apex), v2p.dist(apex), v1p.dist(v2p)]
    report.residuals["equilateral_dispersion"] = (max(sides) - min(sides)) / k

    base = Line.from_points(v1p, v2p)
    away1 = (v1p - v2p).unit()
    away2 = (v2p - v1p).unit()
    t1 = _oriented_tangent(image_b, v1p, v3p)
    t2 = _oriented_tangent(image_a, v2p, v3p)
    ang1 = math.degrees(math.atan2(abs(away1.cross(t1)), away1.dot(t1)))
    ang2 = math.degrees(math.atan2(abs(away2.cross(t2)), away2.dot(t2)))
    ang3 = angle_between_circles_at(image_a, image_b, v3p)
    report.residuals["corner_angle_v1"] = abs(ang1 - 120.0)
    report.residuals["corner_angle_v2"] = abs(ang2 - 120.0)
    report.residuals["corner_angle_v3"] = abs(ang3 - 120.0)

    exc = config.excircle
    for key, line in config.polars.items():
        report.residuals[f"polar_tangent_{key}"] = abs(line.distance(exc.center) - exc.radius) / k

    report.residuals["circumcircle_v1"] = abs(config.circumcircle.center.dist(v1p)
                                              - config.circumcircle.radius) / k
    report.residuals["circumcircle_v2"] = abs(config.circumcircle.center.dist(v2p)
                                              - config.circumcircle.radius) / k
    report.residuals["side_circle_v1_matches_arc"] = (
        config.side_circle_v1.center.dist(image_b.center)
        + abs(config.side_circle_v1.radius - image_b.radius)) / k
    report.residuals["side_circle_v2_matches_arc"] = (
        config.side_circle_v2.center.dist(image_a.center)
        + abs(config.side_circle_v2.radius - image_a.radius)) / k

    mirrored = m + base.normal * (-2.0 * base.signed_distance(m))
    report.residuals["v3_mirrors_pedal"] = mirrored.dist(v3p) / k
    report.details["config"] = config
    return report


def classify_by_position(tri: ReuleauxTriangle, m: Point, k: float,
                         window: float = PARABOLA_POSITION_WINDOW) -> ConicClass:
    """Class of the endpoint conic from the pedal point's position only.

    The test compares the pedal point's distance to the inverted-frame
    excircle center against that circle's radius: inside means ellipse,
    outside hyperbola, with a window for the parabola boundary.
    """
    config = inverted_configuration(tri, m, k)
    f = m.dist(config.excircle.center) - config.excircle.radius
    if abs(f) < window * config.excircle.radius:
        return ConicClass.PARABOLA
    return ConicClass.ELLIPSE if f < 0 else ConicClass.HYPERBOLA


def _position_value(tri: ReuleauxTriangle, t: float, k: float) -> float:
    m = pedal_point_at(tri, t)
    config = inverted_configuration(tri, m, k)
    return (m.dist(config.excircle.center) - config.excircle.radius) / config.excircle.radius


def locate_parabola_pedals(tri: ReuleauxTriangle, k: float,
                           scan: int = 512) -> tuple[float, float]:
    """Pedal parameters where the endpoint conic crosses the parabola boundary.

    Scans the normalized position function on a grid and bisects each sign
    change down to |dt| < 1e-12.
    """
    if not tri.symmetric:
        raise NotSymmetric("the classification boundary is scanned on the symmetric triangle")
    lo, hi = 0.005, 0.995
    ts = [lo + (hi - lo) * i / (scan - 1) for i in range(scan)]
    vals = [_position_value(tri, t, k) for t in ts]
    crossings = []
    for i in range(scan - 1):
        if vals[i] == 0.0:
            crossings.append(ts[i])
        elif (vals[i] > 0) != (vals[i + 1] > 0):
            a, b = ts[i], ts[i + 1]
            fa = vals[i]
            while b - a > 1e-12:
                mid = 0.5 * (a + b)
                fm = _position_value(tri, mid, k)
                if (fm > 0) == (fa > 0):
                    a, fa = mid, fm
                else:
                    b = mid
            crossings.append(0.5 * (a + b))
    if len(crossings) < 2:
        raise NoCrossing(f"expected two boundary crossings, found {len(crossings)}")
    return crossings[0], crossings[-1]


def _collinearity(a: Point, b: Point, c: Point) -> float:
    """Distance from c to line(a, b)."""
    return Line.from_points(a, b).distance(c)


def ellipse_pair_intersections(tri: ReuleauxTriangle, m: Point) -> list[Point]:
    """Common points of the two pedal ellipses, via their shared focus.

    In polar coordinates about the common focus each ellipse is
    r = p / (1 + e cos(theta - alpha)); equating the radii leaves a single
    harmonic equation with at most two roots, which is exact and avoids a
    general quartic solve.
    """
    out = []
    params = []
    for circ in (tri.arcs[0], tri.arcs[1]):
        a = circ.radius
        c = m.dist(circ.center)
        params.append(((a * a - c * c) / a, c / a, (m - circ.center).angle()))
    (p1, e1, al1), (p2, e2, al2) = params
    ca = p2 * e1 * math.cos(al1) - p1 * e2 * math.cos(al2)
    cb = p2 * e1 * math.sin(al1) - p1 * e2 * math.sin(al2)
    cc = p1 - p2
    amp = math.hypot(ca, cb)
    if amp < 1e-300 or abs(cc) > amp:
        return out
    phi = math.atan2(cb, ca)
    delta = math.acos(max(-1.0, min(1.0, cc / amp)))
    for theta in (phi + delta, phi - delta):
        r = p1 / (1.0 + e1 * math.cos(theta - al1))
        out.append(m + Point(r * math.cos(theta), r * math.sin(theta)))
    return out


def check_elementary_properties(tri: ReuleauxTriangle, m: Point,
                                tol: float = 1e-9) -> VerificationReport:
    """Residuals for the incidence, tangency and homothety properties.

    All length residuals are normalized by the largest arc radius. The
    families that require the symmetric construction (point containment on
    the focal triangle's sides, the focal bisector through the collapse
    point) are only emitted for symmetric triangles.
    """
    ends = npc_endpoints(tri, m)
    r_scale = tri.scale
    o1, o2, o3 = (c.center for c in tri.arcs)
    r1, r2 = tri.arcs[0].radius, tri.arcs[1].radius
    v3 = tri.vertices[2]
    rep = VerificationReport(name="elementary_properties", tolerance=tol * r_scale)
    res = rep.residuals

    feats_a = conic_features(ends.ellipse_a)
    feats_b = conic_features(ends.ellipse_b)
    res["p1_focus_ea"] = min(f.dist(m) for f in feats_a.foci)
    res["p1_focus_eb"] = min(f.dist(m) for f in feats_b.foci)
    res["p1_semimajor_ea"] = abs(feats_a.semi_major - r1)
    res["p1_semimajor_eb"] = abs(feats_b.semi_major - r2)
    for label, pt in (("a1", ends.a1), ("a2", ends.a2)):
        res[f"p1_sum_focal_{label}"] = abs(pt.dist(m) + pt.dist(ends.focus_a) - 2 * r1)
    for label, pt in (("b1", ends.b1), ("b2", ends.b2)):
        res[f"p1_sum_focal_{label}"] = abs(pt.dist(m) + pt.dist(ends.focus_b) - 2 * r2)

    res["p2_minor_axis_ea"] = feats_a.minor_axis.distance(ends.antipode)
    res["p2_minor_axis_eb"] = feats_b.minor_axis.distance(ends.antipode)

    res["p3_collinear_a2_v3_b2"] = _collinearity(ends.a2, ends.b2, v3)

    chord = Line.from_points(ends.a2, ends.b2)
    tan_a = line_conic_tangency(ends.ellipse_a, chord)
    tan_b = line_conic_tangency(ends.ellipse_b, chord)
    res["p4_tangent_a2b2_ea"] = min(tan_a.separation, 1.0)
    res["p4_tangent_a2b2_eb"] = min(tan_b.separation, 1.0)
    if tan_a.points:
        res["p4_contact_is_a2"] = min(p.dist(ends.a2) for p in tan_a.points)
    if tan_b.points:
        res["p4_contact_is_b2"] = min(p.dist(ends.b2) for p in tan_b.points)

    res["p5_a1_on_antipode_v2"] = _collinearity(ends.antipode, tri.vertices[1], ends.a1)
    res["p5_b1_on_antipode_v1"] = _collinearity(ends.antipode, tri.vertices[0], ends.b1)

    us = ellipse_pair_intersections(tri, m)
    if len(us) == 2:
        u1, u2 = us
        df = ends.focus_a - ends.focus_b
        du = u1 - u2
        res["p6_u1u2_perp_fafb"] = abs(du.unit().dot(df.unit())) * r_scale
        if tri.symmetric:
            res["p6_u1_bisector"] = abs(u1.dist(ends.focus_a) - u1.dist(ends.focus_b))
            res["p6_u2_bisector"] = abs(u2.dist(ends.focus_a) - u2.dist(ends.focus_b))
            res["p6_antipode_on_u1u2"] = _collinearity(u1, u2, ends.antipode)
            res["p1_sum_focal_u1"] = abs(u1.dist(m) + u1.dist(ends.focus_a) - 2 * r1)
            res["p1_sum_focal_u2"] = abs(u2.dist(m) + u2.dist(ends.focus_b) - 2 * r2)
        rep.details["u1"], rep.details["u2"] = u1, u2

    if tri.symmetric:
        res["p7_a2_on_antipode_fa"] = _collinearity(ends.antipode, ends.focus_a, ends.a2)
        res["p7_b2_on_antipode_fb"] = _collinearity(ends.antipode, ends.focus_b, ends.b2)
        res["p7_a1_on_fafb"] = _collinearity(ends.focus_a, ends.focus_b, ends.a1)
        res["p7_b1_on_fafb"] = _collinearity(ends.focus_a, ends.focus_b, ends.b1)

    res["p8_homothety_fa"] = ends.focus_a.dist(o1 * 2.0 - m)
    res["p8_homothety_fb"] = ends.focus_b.dist(o2 * 2.0 - m)
    res["p8_homothety_antipode"] = ends.antipode.dist(o3 * 2.0 - m)
    res["p8_fafb_is_twice_center_gap"] = abs(ends.focus_a.dist(ends.focus_b)
                                             - 2.0 * o1.dist(o2))

    centroid_arc = (o1 + o2 + o3) * (1.0 / 3.0)
    centroid_foci = (ends.focus_a + ends.focus_b + ends.antipode) * (1.0 / 3.0)
    res["p9_barycenters_collinear"] = _collinearity(m, centroid_arc, centroid_foci) \
        if centroid_arc.dist(m) > 1e-12 * r_scale else 0.0
    rep.details["endpoints"] = ends
    return rep


def sweep_study(tri: ReuleauxTriangle, n: int, k: float | None = None,
                tol: float = DEFAULT_TOL) -> SweepReport:
    """Evaluate the construction across n interior pedal parameters.

    Per sample: the elementary-property residuals, the focal gap of the two
    ellipses, the endpoint conic's class, and the deviation of its nearest
    focus from the pedal point (recorded, never gated; it only vanishes for
    the symmetric triangle). The summary reports cross-sample spreads and
    maxima.
    """
    if n < 3:
        raise InvalidSweep(f"need at least 3 samples, got {n}")
    if k is None:
        k = tri.pedal_circle.radius
    r_scale = tri.scale
    reports: list[VerificationReport] = []
    gaps, devs = [], []
    for i in range(n):
        t = (i + 1) / (n + 1)
        m = pedal_point_at(tri, t)
        rep = check_elementary_properties(tri, m, tol)
        rep.name = f"t={t:.6f}"
        rep.recorded["t"] = t
        ends: EndpointSet = rep.details["endpoints"]
        gap = ends.focus_a.dist(ends.focus_b)
        rep.recorded["focal_gap"] = gap
        gaps.append(gap)
        try:
            conic = conic_from_five_points(ends.five_points())
            feats = conic_features(conic)
            dev = min(f.dist(m) for f in feats.foci)
            rep.recorded["focus_deviation"] = dev
            rep.recorded["conic_class"] = feats.kind.value
            devs.append(dev)
        except GeometryError as exc:
            rep.recorded["flagged"] = 1.0
            rep.details["error"] = str(exc)
        reports.append(rep)
    summary = {
        "samples": float(n),
        "focal_gap_spread": (max(gaps) - min(gaps)) if gaps else math.nan,
        "focal_gap_mean": (sum(gaps) / len(gaps)) if gaps else math.nan,
        "max_focus_deviation": max(devs) if devs else math.nan,
        "min_focus_deviation": min(devs) if devs else math.nan,
        "max_residual": max((r.max_residual for r in reports), default=0.0),
        "flagged": float(sum(1 for r in reports if "flagged" in r.recorded)),
    }
    return SweepReport(reports=reports, summary=summary)
