"""Forward trisector oracle: the Morley triangle of an arbitrary triangle.

This module never looks at the construction in morley.inverse.  It
trisects each interior angle directly and intersects adjacent
trisectors, so it serves as an independent witness that the inverse
construction really produces a triangle with the requested Morley
triangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .kernel import (
    DegenerateTriangle,
    GeometryError,
    NearParallel,
    Point,
    Triangle,
    angle_at,
    rotate_about,
    signed_angle,
)

# Interior angles below this make trisector intersections unreliable.
MIN_TRIANGLE_ANGLE = 1e-6

# A trisector intersection must not fall behind either ray origin by
# more than this fraction of the triangle scale.
RAY_PARAM_SLACK = 1e-9


@dataclass(frozen=True, slots=True)
class Ray:
    """Origin plus unit direction."""

    origin: Point
    direction: Point

    def __post_init__(self) -> None:
        if abs(self.direction.norm() - 1.0) > 1e-12:
            raise GeometryError(f"direction {self.direction} is not unit length")

    def point_at(self, t: float) -> Point:
        return self.origin + self.direction * t


def trisectors(triangle: Triangle, vertex_index: int) -> tuple[Ray, Ray]:
    """The two interior angle trisectors at a vertex (1-based index).

    Both rays start at the vertex.  The first makes an angle of one
    third of the interior angle with the side toward the next vertex
    (in the triangle's vertex order), the second two thirds.
    """
    v = triangle.vertex(vertex_index)
    nxt = triangle.vertex(vertex_index % 3 + 1)
    prv = triangle.vertex((vertex_index + 1) % 3 + 1)
    theta = angle_at(v, nxt, prv)
    if theta < MIN_TRIANGLE_ANGLE:
        raise DegenerateTriangle(
            f"interior angle {theta:.3e} at vertex {vertex_index} is too small"
        )
    # Rotate off the side v->nxt into the triangle's interior.
    into = 1.0 if signed_angle(v, nxt, prv) > 0.0 else -1.0
    base = nxt - v
    base = base * (1.0 / base.norm())
    first = rotate_about(base + v, v, into * theta / 3.0) - v
    second = rotate_about(base + v, v, into * 2.0 * theta / 3.0) - v
    return Ray(v, _renormalize(first)), Ray(v, _renormalize(second))


def _renormalize(d: Point) -> Point:
    n = d.norm()
    return Point(d.x / n, d.y / n)


def _intersect_rays(r1: Ray, r2: Ray, scale: float) -> Point:
    denom = r1.direction.cross(r2.direction)
    if abs(denom) <= 1e-12:
        raise NearParallel(f"trisector rays {r1} and {r2} are (nearly) parallel")
    delta = r2.origin - r1.origin
    t1 = delta.cross(r2.direction) / denom
    t2 = delta.cross(r1.direction) / denom
    slack = RAY_PARAM_SLACK * scale
    if t1 < -slack or t2 < -slack:
        raise NearParallel(
            f"trisector rays meet behind an origin (t1={t1:.3e}, t2={t2:.3e})"
        )
    return r1.point_at(t1)


def morley_triangle(triangle: Triangle) -> Triangle:
    """Morley triangle: pairwise meets of adjacent interior trisectors.

    For vertices (A, B, C) the result's first vertex is the meet of
    the trisectors of B and C adjacent to side BC, and cyclically.
    With the default labels the result is labelled ("A'", "B'", "C'").
    """
    if triangle.min_interior_angle() < MIN_TRIANGLE_ANGLE:
        raise DegenerateTriangle(
            f"smallest interior angle {triangle.min_interior_angle():.3e} is too small"
        )
    scale = triangle.scale()
    first_1, second_1 = trisectors(triangle, 1)
    first_2, second_2 = trisectors(triangle, 2)
    first_3, second_3 = trisectors(triangle, 3)
    # At each vertex, `first` hugs the side toward the next vertex and
    # `second` hugs the side toward the previous one.
    near_bc = _intersect_rays(first_2, second_3, scale)
    near_ca = _intersect_rays(first_3, second_1, scale)
    near_ab = _intersect_rays(first_1, second_2, scale)
    return Triangle(near_bc, near_ca, near_ab, ("A'", "B'", "C'"))


def side_spread(triangle: Triangle) -> float:
    """Relative spread of the side lengths: (max - min) / max."""
    lengths = triangle.side_lengths()
    return (max(lengths) - min(lengths)) / max(lengths)


def apply_similarity(triangle: Triangle, theta: float, scale: float, translation: Point) -> Triangle:
    """Rotate by theta about the origin, scale, then translate."""
    if not (math.isfinite(scale) and scale > 0.0):
        raise GeometryError(f"scale must be finite and positive, got {scale}")
    c = math.cos(theta)
    s = math.sin(theta)

    def move(p: Point) -> Point:
        return Point(
            scale * (c * p.x - s * p.y) + translation.x,
            scale * (s * p.x + c * p.y) + translation.y,
        )

    return Triangle(move(triangle.v1), move(triangle.v2), move(triangle.v3), triangle.labels)
