"""Brute-force semantics inside a finite box, for differential testing.

``bounded_reach`` runs the post operator on boolean grids, one per state.
Branching rules are grid convolutions (the sum of one point per input
state), unary rules are shifts.  Anything produced outside ``[0, k]^2`` is
dropped; if nothing ever is, the box result is the whole reachability set.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import fftconvolve

from .errors import ResourceLimitError
from .model import Bvass, Config, IVec2, vnonneg
from .semilinear import SemilinearPresentation, enumerate_box, member_config

WITNESSED, INCONCLUSIVE, REFUTED = "witnessed", "inconclusive", "refuted"


@dataclass(frozen=True)
class BoxReachResult:
    configs: frozenset
    box: int
    saturated: bool

    def __contains__(self, c) -> bool:
        return Config(*c) in self.configs


def _place(m: np.ndarray, a: IVec2, k: int):
    """Grid of points ``index + a`` clipped to the box, plus whether some
    nonnegative point fell outside it."""
    out = np.zeros((k + 1, k + 1), dtype=bool)
    i0, j0 = max(0, -a[0]), max(0, -a[1])
    sub = m[i0:, j0:]
    if sub.size == 0:
        return out, False
    x0, y0 = i0 + a[0], j0 + a[1]
    rows, cols = max(0, k - x0 + 1), max(0, k - y0 + 1)
    lost = bool(sub[rows:, :].any() or sub[:, cols:].any())
    if rows and cols:
        inner = sub[:rows, :cols]
        out[x0:x0 + inner.shape[0], y0:y0 + inner.shape[1]] = inner
    return out, lost


def _sumset(grids) -> np.ndarray:
    acc = grids[0]
    for g in grids[1:]:
        acc = fftconvolve(acc.astype(float), g.astype(float)) > 0.5
    return acc


def _self_closure(m: np.ndarray, a: IVec2, k: int) -> np.ndarray:
    # the box is convex, so x + n*a is reachable in-box iff both ends are
    step = a
    while abs(step[0]) <= k and abs(step[1]) <= k and step != (0, 0):
        moved, _ = _place(m, step, k)
        m = m | moved
        step = (2 * step[0], 2 * step[1])
    return m


def _grids(b: Bvass, k: int, max_configs: int):
    grids = {q: np.zeros((k + 1, k + 1), dtype=bool) for q in b.states}
    version = dict.fromkeys(b.states, 0)
    saturated = True
    for r in b.rules:
        if not r.inputs:
            x, y = r.displacement
            if x >= 0 and y >= 0:
                if x <= k and y <= k:
                    if not grids[r.output][x, y]:
                        grids[r.output][x, y] = True
                        version[r.output] += 1
                else:
                    saturated = False
    seen: dict[int, tuple] = {}
    changed = True
    while changed:
        changed = False
        for ri, r in enumerate(b.rules):
            if not r.inputs:
                continue
            key = tuple(version[s] for s in r.inputs)
            if seen.get(ri) == key:
                continue
            seen[ri] = key
            srcs = [grids[s] for s in r.inputs]
            if not all(g.any() for g in srcs):
                continue
            made, lost = _place(_sumset(srcs), r.displacement, k)
            saturated &= not lost
            target = grids[r.output]
            new = target | made
            if r.inputs == (r.output,):
                new = _self_closure(new, r.displacement, k)
                _, lost = _place(new, r.displacement, k)
                saturated &= not lost
            if not np.array_equal(new, target):
                grids[r.output] = new
                version[r.output] += 1
                changed = True
        total = sum(int(g.sum()) for g in grids.values())
        if total > max_configs:
            raise ResourceLimitError(f"bounded reachability exceeded {max_configs} configurations")
    return grids, saturated


def bounded_reach(b: Bvass, k: int, max_configs: int = 10**7) -> BoxReachResult:
    """Configurations derivable with every intermediate point inside ``[0, k]^2``."""
    grids, saturated = _grids(b, k, max_configs)
    configs = frozenset(Config(q, (int(x), int(y)))
                        for q, g in grids.items() for x, y in np.argwhere(g))
    return BoxReachResult(configs, k, saturated)


@dataclass
class SoundnessReport:
    status: dict = field(default_factory=dict)
    boxes: list = field(default_factory=list)

    def count(self, what: str) -> int:
        return sum(1 for v in self.status.values() if v == what)

    @property
    def ok(self) -> bool:
        return all(v == WITNESSED for v in self.status.values())

    def summary(self) -> dict:
        return {WITNESSED: self.count(WITNESSED), INCONCLUSIVE: self.count(INCONCLUSIVE),
                REFUTED: self.count(REFUTED), "boxes": list(self.boxes)}


def _box_schedule(k: int, k_max: int) -> list[int]:
    boxes = []
    box = max(k, 1)
    while box <= k_max:
        boxes.append(box)
        box *= 2
    if not boxes or boxes[-1] < k_max:
        boxes.append(max(k_max, k))
    return boxes


def check_soundness(s: SemilinearPresentation, b: Bvass, k: int,
                    k_max: int) -> SoundnessReport:
    """Look for a box-bounded derivation of every presented configuration in
    ``[0, k]^2``, doubling the box up to ``k_max``.

    A configuration is *refuted* when a box saturates (so it holds the whole
    reachability set) without containing it.
    """
    rep = SoundnessReport()
    pending = set(enumerate_box(s, k))
    rep.status = dict.fromkeys(sorted(pending), INCONCLUSIVE)
    for box in _box_schedule(k, k_max):
        if not pending:
            break
        rep.boxes.append(box)
        try:
            res = bounded_reach(b, box)
        except ResourceLimitError:
            break
        hit = {c for c in pending if c in res.configs}
        for c in hit:
            rep.status[c] = WITNESSED
        pending -= hit
        if res.saturated:
            for c in pending:
                rep.status[c] = REFUTED
            pending.clear()
    return rep


@dataclass
class ClosureReport:
    violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def check_post_closure(s: SemilinearPresentation, b: Bvass, k: int) -> ClosureReport:
    """Apply every rule to presented configurations inside ``[0, k]^2`` and
    check that each result is presented again."""
    rep = ClosureReport()
    grids = {q: np.zeros((k + 1, k + 1), dtype=bool) for q in b.states}
    for c in enumerate_box(s, k):
        if c.state in grids:
            grids[c.state][c.point] = True
    for ri, r in enumerate(b.rules):
        if not r.inputs:
            if vnonneg(r.displacement):
                rep.checked += 1
                c = Config(r.output, r.displacement)
                if member_config(s, c) is None:
                    rep.violations.append((ri, str(r), str(c)))
            continue
        srcs = [grids[q] for q in r.inputs]
        if not all(g.any() for g in srcs):
            continue
        ax, ay = r.displacement
        for x, y in np.argwhere(_sumset(srcs)):
            p = (int(x) + ax, int(y) + ay)
            if p[0] < 0 or p[1] < 0:
                continue
            rep.checked += 1
            c = Config(r.output, p)
            if member_config(s, c) is None:
                rep.violations.append((ri, str(r), str(c)))
    return rep


def perp_oracle(z, k: int) -> set[IVec2]:
    """Points reached from the origin by adding vectors of ``z`` one at a time
    while staying inside ``[0, k]^2``."""
    zs = sorted(set(map(tuple, z)))
    seen = {(0, 0)}
    queue = collections.deque([(0, 0)])
    while queue:
        x, y = queue.popleft()
        for dx, dy in zs:
            p = (x + dx, y + dy)
            if 0 <= p[0] <= k and 0 <= p[1] <= k and p not in seen:
                seen.add(p)
                queue.append(p)
    return seen
