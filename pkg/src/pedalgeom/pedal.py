"""Polar duals of circles and the negative pedal curve of a circle.

The negative pedal of a curve w.r.t. a pedal point M is the envelope of the
lines through curve points P perpendicular to PM. For a circle it is a conic
with focus M (or a single point when M sits on the circle), and it equals the
polar dual of the circle's inverse. Both the closed forms and a
finite-difference envelope oracle live here.
"""

from __future__ import annotations

import math

import numpy as np

from .conics import (
    ConicClass,
    GeneralConic,
    _central_conic,
    conic_features,
    conic_from_focus_directrix_ecc,
)
from .geom import (
    REL_TOL,
    Circle,
    GeometryError,
    InversionCircle,
    Point,
    PointNotOnCurve,
    invert_point,
    pole_of_line,
    polar_of_point,
    scene_scale,
)

__all__ = [
    "NotAtFocus",
    "SingularEnvelope",
    "NpcResult",
    "dual_of_circle",
    "dual_circle_of_focal_conic",
    "npc_of_circle",
    "npc_contact_point",
    "sample_npc_envelope",
]


class NotAtFocus(GeometryError):
    """The dual of a conic is a circle only from a focus."""


class SingularEnvelope(GeometryError):
    """The envelope system has no unique solution at this parameter."""


NpcResult = GeneralConic | Point


def dual_of_circle(g: Circle, inv: InversionCircle) -> GeneralConic:
    """Polar dual of a circle: the conic with focus at the inversion center.

    Eccentricity is |center offset| / radius, the directrix is the polar of
    the circle's center, so the class follows the position of the center of
    inversion: inside gives an ellipse, on the circle a parabola, outside a
    hyperbola. The concentric case degenerates to a circle (returned as the
    zero-eccentricity ellipse of radius k^2 / radius).
    """
    m = inv.center
    d = m.dist(g.center)
    if d < 1e-12 * scene_scale(g, inv):
        r = inv.k * inv.k / g.radius
        return _central_conic(m, Point(1.0, 0.0), r * r, r * r)
    ecc = d / g.radius
    directrix = polar_of_point(g.center, inv)
    return conic_from_focus_directrix_ecc(m, directrix, ecc)


def dual_circle_of_focal_conic(q: GeneralConic, inv: InversionCircle) -> Circle:
    """Inverse of ``dual_of_circle``: dual a conic back from one of its foci.

    The center of the result is the pole of the conic's directrix, and the
    inverses of the conic's vertices are antipodal on it.
    """
    feats = conic_features(q)
    m = inv.center
    scale = max(feats.semi_major or 1.0, inv.k)
    dists = [m.dist(f) for f in feats.foci]
    i = int(np.argmin(dists))
    if dists[i] > 1e-8 * scale:
        raise NotAtFocus(f"inversion center is {dists[i]:.3e} away from the nearest focus")
    if feats.eccentricity < 1e-12:
        # circle about its own center: the dual is the concentric circle
        return Circle(m, inv.k * inv.k / feats.semi_major)
    images = [invert_point(v, inv) for v in feats.vertices]
    center = pole_of_line(feats.directrices[i], inv)
    return Circle(center, sum(center.dist(w) for w in images) / len(images))


def npc_of_circle(g: Circle, m: Point) -> NpcResult:
    """Negative pedal of a circle: focus-at-M conic, or a point when M is on it.

    The conic is centered on the circle's center with vertices on the
    diameter line through M, so it is an ellipse for M interior, a hyperbola
    for M exterior, and never a parabola.
    """
    d = m.dist(g.center)
    scale = scene_scale(g, m)
    if abs(d - g.radius) < REL_TOL * scale:
        return g.center * 2.0 - m
    u = (m - g.center).unit() if d > 1e-15 * scale else Point(1.0, 0.0)
    a2 = g.radius * g.radius
    return _central_conic(g.center, u, a2, a2 - d * d)


def npc_contact_point(g: Circle, p: Point, m: Point) -> Point:
    """Contact of the negative pedal envelope for the pedal line at ``p``.

    Solves the two-equation envelope system: the contact X lies on the line
    through p perpendicular to pM, and (X - 2p + m) is orthogonal to the
    circle tangent at p.
    """
    scale = scene_scale(g, p, m)
    if not g.contains(p, 1e-9 * scale):
        raise PointNotOnCurve(f"{p} is not on {g}")
    w = p - m
    if w.norm() < 1e-12 * scale:
        raise SingularEnvelope("pedal line is undefined at the pedal point itself")
    t = (p - g.center).perp()
    det = w.cross(t)
    if abs(det) < 1e-14 * scale * scale:
        raise SingularEnvelope("envelope system is singular at this point")
    b1 = w.dot(p)
    b2 = t.dot(p * 2.0 - m)
    x = (b1 * t.y - b2 * w.y) / det
    y = (w.x * b2 - t.x * b1) / det
    return Point(x, y)


def sample_npc_envelope(g: Circle, m: Point, n: int) -> list[Point]:
    """Finite-difference envelope: intersections of neighboring pedal lines.

    A test oracle: as n grows the samples converge to the true contact
    points at O(1/n^2). Near-parallel neighbor pairs (and pedal lines taken
    at the pedal point itself) are dropped.
    """
    if n < 8:
        raise ValueError("need at least 8 parameter samples")
    theta = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    px = g.center.x + g.radius * np.cos(theta)
    py = g.center.y + g.radius * np.sin(theta)
    ux, uy = px - m.x, py - m.y
    c = ux * px + uy * py
    jx, jy, jc = np.roll(ux, -1), np.roll(uy, -1), np.roll(c, -1)
    det = ux * jy - uy * jx
    norms = np.hypot(ux, uy) * np.hypot(jx, jy)
    ok = np.abs(det) > 1e-12 * np.maximum(norms, 1e-300)
    x = (c * jy - jc * uy) / np.where(ok, det, 1.0)
    y = (ux * jc - jx * c) / np.where(ok, det, 1.0)
    return [Point(float(xi), float(yi)) for xi, yi, k in zip(x, y, ok) if k]
