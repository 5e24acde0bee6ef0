"""Acceleration of periodic sets.

``perP(Z)`` is the set of finite sums of vectors of ``Z`` whose prefix sums
all stay in N^2.  In dimension two it is a finitely generated periodic set,
and a generating set is found by growing the prefix-reachable points round
by round until their periodic closure is stable under every shift by ``Z``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import cone2d
from .errors import ResourceLimitError
from .model import IVec2
from .periodic import MAX_CELLS, PeriodicSet, atoms, shifted_inclusion

log = logging.getLogger(__name__)

MAX_ROUNDS = 10**4
MAX_POINTS = 10**6


@dataclass(frozen=True)
class AccelReport:
    result: PeriodicSet
    rounds: int
    frontier_peak: int
    cone_check: bool


def _closed(gens: tuple[IVec2, ...], zs: Sequence[IVec2], cap: int) -> bool:
    p = PeriodicSet(gens)
    return all(shifted_inclusion(p, z, cap) for z in zs)


def per_plus_report(z: Iterable[IVec2], max_rounds: int = MAX_ROUNDS,
                    max_points: int = MAX_POINTS, cap: int = MAX_CELLS,
                    check: bool = True) -> AccelReport:
    zs = sorted({(int(a), int(b)) for a, b in z} - {(0, 0)})
    reached: set[IVec2] = {(0, 0)}
    frontier: list[IVec2] = [(0, 0)]
    gens: tuple[IVec2, ...] = ()
    tested: dict[tuple, bool] = {}
    rounds = 0
    peak = 1
    while True:
        if gens not in tested:
            tested[gens] = _closed(gens, zs, cap)
        if tested[gens] or not frontier:
            break
        rounds += 1
        if rounds > max_rounds:
            raise ResourceLimitError(f"acceleration exceeded {max_rounds} rounds")
        fresh = []
        for x in frontier:
            for dz in zs:
                y = (x[0] + dz[0], x[1] + dz[1])
                if y[0] >= 0 and y[1] >= 0 and y not in reached:
                    reached.add(y)
                    fresh.append(y)
        if len(reached) > max_points:
            raise ResourceLimitError(
                f"acceleration exceeded {max_points} prefix-reachable points")
        frontier = sorted(fresh)
        peak = max(peak, len(frontier))
        if fresh:
            gens = atoms(gens + tuple(fresh), cap)
    result = PeriodicSet(gens)
    ok = check_cone(zs, result) if check else True
    if not ok:
        log.error("cone cross-check failed for Z=%s, result=%s", zs, result)
    return AccelReport(result, rounds, peak, ok)


def per_plus(z: Iterable[IVec2], **limits) -> PeriodicSet:
    """A reduced generating set of ``perP(z)``."""
    return per_plus_report(z, check=False, **limits).result


def accelerate(i: Iterable[IVec2], p: PeriodicSet, **limits) -> PeriodicSet:
    """Least periodic set containing ``p`` and closed under the shifts in ``i``
    that stay inside N^2."""
    return per_plus(list(i) + list(p.generators), **limits)


def check_cone(z: Sequence[IVec2], result: PeriodicSet) -> bool:
    got = cone2d.clip_to_quadrant(cone2d.span(result.generators))
    return got == cone2d.conP_formula(list(z))
