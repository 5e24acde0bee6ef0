"""Finitely generated periodic subsets of N^2.

``per(G)`` is the set of all finite sums of generators, the empty sum
included.  Membership is decided by dynamic programming over the grid
below the target, stored as one Python-int bitset per x-row.

The shifted-inclusion test and the basis computation both reduce to the
finite set of *minimal points* of ``{y in per(G) : y >= t}``; see
``docs/dickson.md`` for the bounds used to enumerate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .model import IVec2, vadd, vnonneg, vsub

MAX_CELLS = 10**8
MAX_CANDIDATES = 10**6

_ROUND = 16


@dataclass(frozen=True)
class PeriodicSet:
    """``per(generators)``; generators are kept sorted, unique and nonzero."""

    generators: tuple[IVec2, ...] = ()

    def __post_init__(self):
        gens = set()
        for g in self.generators:
            g = (int(g[0]), int(g[1]))
            if not vnonneg(g):
                raise ValueError(f"generator {g} is not in N^2")
            if g != (0, 0):
                gens.add(g)
        object.__setattr__(self, "generators", tuple(sorted(gens)))

    @classmethod
    def of(cls, *gens: IVec2) -> "PeriodicSet":
        return cls(tuple(gens))

    def __contains__(self, y) -> bool:
        return member(self, y)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "per{" + ", ".join(f"({x},{y})" for x, y in self.generators) + "}"


def _check_cells(x: int, y: int, cap: int):
    if (x + 1) * (y + 1) > cap:
        raise ResourceLimitError(
            f"membership grid {x + 1}x{y + 1} exceeds the cap of {cap} cells")


@lru_cache(maxsize=4096)
def _table(gens: tuple[IVec2, ...], xmax: int, ymax: int) -> tuple[int, ...]:
    """Row bitsets of ``per(gens)`` restricted to ``[0, xmax] x [0, ymax]``."""
    mask = (1 << (ymax + 1)) - 1
    moving = [(gx, gy) for gx, gy in gens if gx > 0 and gx <= xmax and gy <= ymax]
    vertical = [gy for gx, gy in gens if gx == 0 and 0 < gy <= ymax]
    rows: list[int] = []
    for x in range(xmax + 1):
        r = 1 if x == 0 else 0
        for gx, gy in moving:
            if gx <= x:
                r |= rows[x - gx] << gy
        r &= mask
        if vertical and r:
            prev = -1
            while r != prev:
                prev = r
                for gy in vertical:
                    step = gy
                    while step <= ymax:
                        r |= (r << step) & mask
                        step *= 2
        rows.append(r)
    return tuple(rows)


def _rounded(v: int) -> int:
    return -(-(v + 1) // _ROUND) * _ROUND - 1


def reach_table(p, xmax: int, ymax: int, cap: int = MAX_CELLS) -> tuple[int, ...]:
    gens = p.generators if isinstance(p, PeriodicSet) else tuple(p)
    _check_cells(xmax, ymax, cap)
    return _table(gens, xmax, ymax)


def member(p: PeriodicSet, y: IVec2, cap: int = MAX_CELLS) -> bool:
    """True iff ``y`` is a nonnegative integer combination of the generators."""
    if not vnonneg(y):
        return False
    if y == (0, 0):
        return True
    if not p.generators:
        return False
    _check_cells(y[0], y[1], cap)
    xr, yr = _rounded(y[0]), _rounded(y[1])
    if (xr + 1) * (yr + 1) > cap:
        xr, yr = y
    rows = _table(p.generators, xr, yr)
    return bool((rows[y[0]] >> y[1]) & 1)


def sum_sets(p1: PeriodicSet, p2: PeriodicSet) -> PeriodicSet:
    return PeriodicSet(p1.generators + p2.generators)


def sum_all(ps: Iterable[PeriodicSet]) -> PeriodicSet:
    gens: tuple = ()
    for p in ps:
        gens += p.generators
    return PeriodicSet(gens)


def includes(big: PeriodicSet, small: PeriodicSet, cap: int = MAX_CELLS) -> bool:
    """``per(small) ⊆ per(big)``, checked on the generators of ``small``."""
    return all(member(big, g, cap) for g in small.generators)


def equal_sem(p1: PeriodicSet, p2: PeriodicSet, cap: int = MAX_CELLS) -> bool:
    return includes(p2, p1, cap) and includes(p1, p2, cap)


def reduce(p: PeriodicSet, cap: int = MAX_CELLS) -> PeriodicSet:
    """Drop every generator expressible through the others.

    In N^2 the monoid ``per(G)`` has a unique minimal generating set (its
    irreducible elements), so the lexicographic greedy elimination and the
    one-pass irreducibility test below agree; the latter is used because it
    needs a single DP table instead of one per removal.
    """
    gens = p.generators
    if len(gens) <= 1:
        return p
    return PeriodicSet(atoms(gens, cap))


def atoms(gens: Sequence[IVec2], cap: int = MAX_CELLS) -> tuple[IVec2, ...]:
    gens = tuple(sorted({g for g in gens if g != (0, 0)}))
    if len(gens) <= 1:
        return gens
    xmax = max(g[0] for g in gens)
    ymax = max(g[1] for g in gens)
    rows = reach_table(gens, xmax, ymax, cap)
    mask = (1 << (ymax + 1)) - 1
    nonzero = list(rows)
    nonzero[0] &= ~1
    # bit y of twice[x]: (x, y) is a sum of at least two nonzero members
    twice = [0] * (xmax + 1)
    for gx, gy in gens:
        for x in range(gx, xmax + 1):
            twice[x] |= (nonzero[x - gx] << gy) & mask
    return tuple(g for g in gens if not (twice[g[0]] >> g[1]) & 1)


def _generator_caps(gens: Sequence[IVec2], t: IVec2) -> list[int]:
    caps = []
    for g in gens:
        c = 0
        for j in (0, 1):
            if g[j] > 0 and t[j] > 0:
                c = max(c, -(-t[j] // g[j]))
        caps.append(c)
    return caps


def sum_bound(gens: Sequence[IVec2], t: IVec2) -> int:
    """Strict upper bound on the coefficient sum of any minimal solution."""
    mgx = max((g[0] for g in gens), default=0)
    mgy = max((g[1] for g in gens), default=0)
    return max(0, t[0]) + max(0, t[1]) + mgx + mgy


def min_solutions(generators: Sequence[IVec2], threshold: IVec2,
                  max_candidates: int = MAX_CANDIDATES) -> set[tuple[int, ...]]:
    """Componentwise-minimal ``n`` with ``sum(n_i * g_i) >= threshold``.

    Coordinates whose threshold is ``<= 0`` hold trivially.  Candidates are
    enumerated with the coefficient-sum bound of :func:`sum_bound` and the
    per-generator cap ``n_i <= max_j ceil(t_j / g_ij)``; a feasible candidate
    is minimal iff decrementing any positive coefficient breaks feasibility.
    """
    gens = [tuple(g) for g in generators]
    k = len(gens)
    t = (int(threshold[0]), int(threshold[1]))
    tx, ty = max(0, t[0]), max(0, t[1])
    if tx == 0 and ty == 0:
        return {(0,) * k}
    bound = sum_bound(gens, t)
    caps = _generator_caps(gens, t)
    seen = 0
    found: set[tuple[int, ...]] = set()

    def feasible(sx, sy):
        return sx >= tx and sy >= ty

    coeffs = [0] * k

    def walk(i, left, sx, sy):
        nonlocal seen
        seen += 1
        if seen > max_candidates:
            raise ResourceLimitError(
                f"min_solutions enumeration exceeded {max_candidates} candidates")
        if feasible(sx, sy):
            # everything after i stays zero: more units cannot be minimal
            if all(not feasible(sx - gens[j][0], sy - gens[j][1])
                   for j in range(i) if coeffs[j] > 0):
                found.add(tuple(coeffs))
            return
        if i == k:
            return
        gx, gy = gens[i]
        for n in range(0, min(caps[i], left) + 1):
            coeffs[i] = n
            sx2, sy2 = sx + n * gx, sy + n * gy
            walk(i + 1, left - n, sx2, sy2)
            if feasible(sx2, sy2):
                break
        coeffs[i] = 0

    walk(0, bound - 1, 0, 0)
    return found


def minimal_points(p: PeriodicSet, threshold: IVec2,
                   cap: int = MAX_CELLS) -> list[IVec2]:
    """Minimal elements of ``{y in per(G) : y >= threshold}`` under the
    order "``y'`` reaches ``y`` by adding generators".

    Every such point equals ``G . m`` for a minimal coefficient vector
    ``m`` and lies in the box computed here, so a single DP table finds
    them all.  Returned sorted.
    """
    gens = p.generators
    tx, ty = max(0, threshold[0]), max(0, threshold[1])
    if tx == 0 and ty == 0:
        return [(0, 0)]
    if not gens:
        return []
    mgx = max(g[0] for g in gens)
    mgy = max(g[1] for g in gens)
    if (tx > 0 and mgx == 0) or (ty > 0 and mgy == 0):
        return []
    bx = max(tx + mgx if tx else 0, (ty + mgy) * mgx if ty else 0)
    by = max(ty + mgy if ty else 0, (tx + mgx) * mgy if tx else 0)
    rows = reach_table(gens, bx, by, cap)
    out = []
    for x in range(tx, bx + 1):
        r = rows[x] >> ty
        y = ty
        while r:
            if r & 1:
                if not _has_feasible_predecessor(rows, gens, x, y, tx, ty):
                    out.append((x, y))
            r >>= 1
            y += 1
    return out


def _has_feasible_predecessor(rows, gens, x, y, tx, ty) -> bool:
    for gx, gy in gens:
        px, py = x - gx, y - gy
        if px >= tx and py >= ty and (rows[px] >> py) & 1:
            return True
    return False


def shifted_inclusion(p: PeriodicSet, z: IVec2, cap: int = MAX_CELLS) -> bool:
    """Decide ``(per(G) + z) ∩ N^2 ⊆ per(G)``.

    The set of ``y in per(G)`` with ``y + z >= 0`` is generated upward from
    its minimal points by adding generators, and ``per(G)`` is closed under
    that, so checking the minimal points suffices.
    """
    neg = (-z[0], -z[1])
    return all(member(p, vadd(y, z), cap) for y in minimal_points(p, neg, cap))


def basis(v: IVec2, p: PeriodicSet, cap: int = MAX_CELLS) -> list[IVec2]:
    """Finite ``B ⊆ N^2`` with ``B + per(G) = (v + per(G)) ∩ N^2``."""
    neg = (-v[0], -v[1])
    candidates = sorted(vadd(v, y) for y in minimal_points(p, neg, cap))
    kept: list[IVec2] = []
    for b in candidates:
        if not any(member(p, vsub(b, k), cap) for k in kept):
            kept.append(b)
    return kept


def enumerate_box(p: PeriodicSet, k: int) -> set[IVec2]:
    """All members of ``per(G)`` with both coordinates ``<= k``."""
    rows = reach_table(p.generators, k, k)
    return {(x, y) for x in range(k + 1) for y in range(k + 1) if (rows[x] >> y) & 1}
