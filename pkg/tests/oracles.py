"""Independent brute-force references used by the tests.

Nothing here calls into the DP tables, the bitset code or the numpy grids of
the package; each function is the definition written out as a search.
"""

import collections
import itertools
from fractions import Fraction


def coeff_members(gens, k):
    """Every ``G . n`` inside ``[0, k]^2``, by enumerating coefficient vectors."""
    gens = [g for g in gens if g != (0, 0)]
    caps = []
    for gx, gy in gens:
        caps.append(min(k // gx if gx else k, k // gy if gy else k))
    out = set()
    for n in itertools.product(*(range(c + 1) for c in caps)):
        x = sum(c * g[0] for c, g in zip(n, gens))
        y = sum(c * g[1] for c, g in zip(n, gens))
        if x <= k and y <= k:
            out.add((x, y))
    return out


def feasible(gens, n, t):
    x = sum(c * g[0] for c, g in zip(n, gens))
    y = sum(c * g[1] for c, g in zip(n, gens))
    return x >= t[0] and y >= t[1]


def brute_min_solutions(gens, t, limit):
    """Minimal feasible vectors among those with every entry ``<= limit``."""
    sols = [n for n in itertools.product(range(limit + 1), repeat=len(gens))
            if feasible(gens, n, t)]
    return {n for n in sols
            if not any(m != n and all(a <= b for a, b in zip(m, n)) for m in sols)}


def in_cone_exact(dirs, p):
    """``p`` is a nonnegative rational combination of ``dirs``.

    In the plane two directions always suffice, so try singles and pairs with
    exact Cramer solves.
    """
    if p == (0, 0):
        return True
    dirs = [d for d in dirs if d != (0, 0)]
    for d in dirs:
        if d[0] * p[1] - d[1] * p[0] == 0 and d[0] * p[0] + d[1] * p[1] > 0:
            return True
    for u, v in itertools.combinations(dirs, 2):
        det = u[0] * v[1] - u[1] * v[0]
        if det == 0:
            continue
        lam = Fraction(p[0] * v[1] - p[1] * v[0], det)
        mu = Fraction(u[0] * p[1] - u[1] * p[0], det)
        if lam >= 0 and mu >= 0:
            return True
    return False


def prefix_bfs(z, k):
    seen = {(0, 0)}
    todo = collections.deque(seen)
    while todo:
        x, y = todo.popleft()
        for dx, dy in z:
            p = (x + dx, y + dy)
            if 0 <= p[0] <= k and 0 <= p[1] <= k and p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


def naive_box_reach(rules, k):
    """Kleene iteration of the post operator with every point kept in the box.

    ``rules`` are ``(output, inputs, (dx, dy))`` triples.
    """
    reach = set()
    while True:
        by_state = collections.defaultdict(list)
        for q, p in reach:
            by_state[q].append(p)
        new = set()
        for out, ins, (dx, dy) in rules:
            for pts in itertools.product(*(by_state[s] for s in ins)):
                x = dx + sum(p[0] for p in pts)
                y = dy + sum(p[1] for p in pts)
                if 0 <= x <= k and 0 <= y <= k:
                    new.add((out, (x, y)))
        if new <= reach:
            return reach
        reach |= new


def linear_box(state, base, gens, k):
    return {(state, (base[0] + x, base[1] + y))
            for x, y in coeff_members(gens, k)
            if base[0] + x <= k and base[1] + y <= k}
