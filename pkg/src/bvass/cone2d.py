"""Exact convex cones of Q^2 spanned by integer directions.

Every convex cone of the plane is one of six shapes: the origin, a ray, a
line, a sector narrower than a half-turn, a closed half-plane, or the
whole plane.  Directions are stored primitive (gcd 1), and all angular
comparisons go through integer cross products.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .model import IVec2

ZERO, RAY, LINE, SECTOR, HALFPLANE, PLANE = (
    "zero", "ray", "line", "sector", "halfplane", "plane")

AXES = ((1, 0), (0, 1))


def cross(u: IVec2, v: IVec2) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: IVec2, v: IVec2) -> int:
    return u[0] * v[0] + u[1] * v[1]


def primitive(d: IVec2) -> IVec2:
    g = gcd(d[0], d[1])
    if g == 0:
        raise ValueError("the zero vector has no direction")
    return (d[0] // g, d[1] // g)


def _half(d: IVec2) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(u: IVec2, v: IVec2) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def angle_sorted(dirs: Iterable[IVec2]) -> list[IVec2]:
    """Distinct primitive directions, counterclockwise from the positive x-axis."""
    prim = {primitive(d) for d in dirs if d != (0, 0)}
    return sorted(prim, key=functools.cmp_to_key(_angle_cmp))


@dataclass(frozen=True)
class Cone2:
    kind: str
    rays: tuple[IVec2, ...] = ()

    @classmethod
    def zero(cls):
        return cls(ZERO)

    @classmethod
    def ray(cls, d: IVec2):
        return cls(RAY, (primitive(d),))

    @classmethod
    def line(cls, d: IVec2):
        d = primitive(d)
        if _half(d):
            d = (-d[0], -d[1])
        return cls(LINE, (d,))

    @classmethod
    def sector(cls, lo: IVec2, hi: IVec2):
        lo, hi = primitive(lo), primitive(hi)
        if cross(lo, hi) <= 0:
            raise ValueError(f"sector from {lo} to {hi} is not narrower than a half-turn")
        return cls(SECTOR, (lo, hi))

    @classmethod
    def halfplane(cls, lo: IVec2):
        return cls(HALFPLANE, (primitive(lo),))

    @classmethod
    def plane(cls):
        return cls(PLANE)

    def generators(self) -> list[IVec2]:
        """A finite list of directions whose conic hull is this cone."""
        if self.kind == LINE:
            d = self.rays[0]
            return [d, (-d[0], -d[1])]
        if self.kind == HALFPLANE:
            lo = self.rays[0]
            return [lo, (-lo[1], lo[0]), (-lo[0], -lo[1])]
        if self.kind == PLANE:
            return [(1, 0), (0, 1), (-1, 0), (0, -1)]
        return list(self.rays)

    def __contains__(self, p: IVec2) -> bool:
        if self.kind == PLANE:
            return True
        if p == (0, 0):
            return True
        if self.kind == ZERO:
            return False
        if self.kind == RAY:
            d = self.rays[0]
            return cross(d, p) == 0 and dot(d, p) > 0
        if self.kind == LINE:
            return cross(self.rays[0], p) == 0
        if self.kind == HALFPLANE:
            return cross(self.rays[0], p) >= 0
        lo, hi = self.rays
        return cross(lo, p) >= 0 and cross(p, hi) >= 0

    def in_quadrant(self) -> bool:
        return self.kind in (ZERO, RAY, SECTOR) and all(
            d[0] >= 0 and d[1] >= 0 for d in self.rays)

    def __str__(self):
        if not self.rays:
            return self.kind.capitalize()
        inner = ", ".join(f"({x},{y})" for x, y in self.rays)
        return f"{self.kind.capitalize()}({inner})"


def span(dirs: Iterable[IVec2]) -> Cone2:
    """The conic hull of ``dirs``, normalized."""
    ds = angle_sorted(dirs)
    n = len(ds)
    if n == 0:
        return Cone2.zero()
    if n == 1:
        return Cone2.ray(ds[0])
    straight = []
    for i in range(n):
        a, b = ds[i], ds[(i + 1) % n]
        c = cross(a, b)
        if c < 0:
            # the unique gap wider than a half-turn
            return Cone2.sector(b, a)
        if c == 0:
            straight.append(i)
    if len(straight) == 2:
        return Cone2.line(ds[0])
    if len(straight) == 1:
        i = straight[0]
        return Cone2.halfplane(ds[(i + 1) % n])
    return Cone2.plane()


def _nonneg(d: IVec2) -> bool:
    return d[0] >= 0 and d[1] >= 0


def clip_to_quadrant(c: Cone2) -> Cone2:
    """``c ∩ Q≥0^2``.

    In the plane every extreme ray of the intersection of two cones is an
    extreme ray of one of them lying inside the other, so it suffices to
    keep the generators of ``c`` inside the quadrant and the axes inside
    ``c``.
    """
    keep = [d for d in c.generators() if _nonneg(d)]
    keep += [a for a in AXES if a in c]
    return span(keep)


def conP_formula(a: Sequence[IVec2]) -> Cone2:
    if not any(_nonneg(v) and v != (0, 0) for v in a):
        return Cone2.zero()
    return clip_to_quadrant(span(a))


def stabilize(c: Cone2, v: IVec2) -> Cone2:
    """``(c + Q≥0 v) ∩ Q≥0^2``."""
    return clip_to_quadrant(span(c.generators() + [v]))


def is_v_stable(c: Cone2, v: IVec2) -> bool:
    return stabilize(c, v) == c
