"""Worklist exploration computing a semilinear presentation of ``Reach(B)``.

Each node carries a label ``(a, q, z, P)`` standing for the linear set
``q(z + per(P))``.  A popped node first has ``P`` accelerated with the
vectors ``I_n`` that are known to be iterable at that point:

* ``E_n``: displacements of elementary cycles of the VASS obtained by
  instantiating the model with the configurations of the proper ancestors,
  provided the cycle visits the state of some ancestor-or-self ``s`` sitting
  high enough (``z_s >= (c, c)``) and, when ``s`` is a proper ancestor, the
  displacement is nonnegative;
* ``C_n``: differences ``z_n - z_s`` to ancestors-or-self of the same state.

The node is then either covered by a same-state processed node (and kept as
a redundant leaf) or processed and combined with every other processed node
through the branching rules.  Restricting coverers to proper ancestors is
available through ``ExploreConfig(cover_any_processed=False)``; it is also
correct but can build far larger graphs.
"""

from __future__ import annotations

import collections
import itertools
import logging
from dataclasses import asdict, dataclass, field
from typing import Optional

import networkx as nx

from .accel import MAX_POINTS, accelerate
from .errors import ResourceLimitError
from .model import (Bvass, Config, InstantiatedVass, IVec2, instantiate,
                    iteration_constant, model_hash, vadd, vnonneg, vsub)
from .periodic import PeriodicSet, basis, equal_sem, includes, member, sum_all
from .semilinear import SemilinearPresentation, assemble

log = logging.getLogger(__name__)

WAITING, PROCESSED, REDUNDANT = "waiting", "processed", "redundant"


@dataclass(frozen=True)
class NodeLabel:
    a: IVec2
    q: str
    z: IVec2
    p: PeriodicSet

    def __post_init__(self):
        if not vnonneg(self.z):
            raise ValueError(f"node point {self.z} is not in N^2")

    @property
    def config(self) -> Config:
        return Config(self.q, self.z)


@dataclass
class ExplorationNode:
    id: int
    label: NodeLabel
    parents: tuple[int, ...]
    ancestors: frozenset = frozenset()
    status: str = WAITING
    covered_by: Optional[int] = None
    children: list = field(default_factory=list)


@dataclass(frozen=True)
class CycleVectors:
    e: frozenset
    cbar: frozenset
    i: frozenset
    c_const: int


@dataclass(frozen=True)
class ExploreConfig:
    worklist_order: str = "fifo"
    max_nodes: int = 20000
    max_cycles: int = 10**5
    max_accel_points: int = MAX_POINTS
    validate: bool = False
    cover_any_processed: bool = True

    def __post_init__(self):
        if self.worklist_order not in ("fifo", "lifo"):
            raise ValueError(f"unknown worklist order {self.worklist_order!r}")
        for name in ("max_nodes", "max_cycles", "max_accel_points"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class ExploreStats:
    nodes_created: int = 0
    processed: int = 0
    redundant: int = 0
    accelerations: int = 0
    cycles_enumerated: int = 0
    redundancy_hits: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Exploration:
    nodes: list = field(default_factory=list)
    worklist: collections.deque = field(default_factory=collections.deque)
    stats: ExploreStats = field(default_factory=ExploreStats)

    def node(self, i: int) -> ExplorationNode:
        return self.nodes[i]

    def _add(self, label: NodeLabel, parents, cfg: ExploreConfig) -> int:
        if len(self.nodes) >= cfg.max_nodes:
            raise ResourceLimitError(
                f"exploration exceeded {cfg.max_nodes} nodes",
                self.stats.as_dict(), parents[0] if parents else None)
        nid = len(self.nodes)
        parents = tuple(sorted(parents))
        anc = set(parents)
        for m in parents:
            anc |= self.nodes[m].ancestors
            self.nodes[m].children.append(nid)
        self.nodes.append(ExplorationNode(nid, label, parents, frozenset(anc)))
        self.worklist.append(nid)
        self.stats.nodes_created += 1
        return nid


def init_nodes(b: Bvass, cfg: ExploreConfig = ExploreConfig()) -> Exploration:
    e = Exploration()
    for r in b.rules:
        if not r.inputs and vnonneg(r.displacement):
            e._add(NodeLabel(r.displacement, r.output, r.displacement, PeriodicSet()), (), cfg)
    return e


def ancestor_instantiation(e: Exploration, b: Bvass, n: int) -> InstantiatedVass:
    return instantiate(b, {e.nodes[m].label.config for m in e.nodes[n].ancestors})


def elementary_cycle_displacements(v: InstantiatedVass,
                                   max_cycles: int = 10**5) -> dict:
    """Displacements of all elementary cycles, keyed by the visited state set.

    Parallel transitions are distinct cycles; they are folded into per-edge
    displacement sets and combined as sumsets along each simple cycle of the
    underlying state graph.
    """
    edges: dict[tuple[str, str], set] = collections.defaultdict(set)
    for p, a, q in v.transitions:
        edges[(p, q)].add(a)
    g = nx.DiGraph()
    g.add_nodes_from(v.states)
    g.add_edges_from(edges)
    out: dict[frozenset, set] = {}
    count = 0
    for cyc in nx.simple_cycles(g):
        sums = {(0, 0)}
        for i, p in enumerate(cyc):
            step = edges[(p, cyc[(i + 1) % len(cyc)])]
            sums = {vadd(s, a) for s in sums for a in step}
            count += len(sums)
            if count > max_cycles:
                raise ResourceLimitError(
                    f"elementary cycle enumeration exceeded {max_cycles} cycles")
        out.setdefault(frozenset(cyc), set()).update(sums)
    return out


def _cycle_vectors(e: Exploration, b: Bvass, n: int, max_cycles: int):
    node = e.nodes[n]
    c = iteration_constant(b)
    high = (c, c)
    z_n, q_n = node.label.z, node.label.q
    cycles = elementary_cycle_displacements(ancestor_instantiation(e, b, n), max_cycles)
    self_high = z_n[0] >= c and z_n[1] >= c
    high_states = {e.nodes[s].label.q for s in node.ancestors
                   if vnonneg(vsub(e.nodes[s].label.z, high))}
    ev = set()
    for key, disps in cycles.items():
        if self_high and q_n in key:
            ev |= disps
        elif key & high_states:
            ev |= {d for d in disps if vnonneg(d)}
    cbar = {(0, 0)}
    for s in node.ancestors:
        lab = e.nodes[s].label
        if lab.q == q_n:
            cbar.add(vsub(z_n, lab.z))
    count = sum(len(d) for d in cycles.values())
    return CycleVectors(frozenset(ev), frozenset(cbar), frozenset(ev | cbar), c), count


def compute_cycle_vectors(e: Exploration, b: Bvass, n: int,
                          max_cycles: int = 10**5) -> CycleVectors:
    return _cycle_vectors(e, b, n, max_cycles)[0]


def _covers(m: ExplorationNode, n: ExplorationNode) -> bool:
    lm, ln = m.label, n.label
    if lm.q != ln.q:
        return False
    d = vsub(ln.z, lm.z)
    return vnonneg(d) and member(lm.p, d) and includes(lm.p, ln.p)


def is_redundant(e: Exploration, n: int, any_processed: bool = False) -> Optional[int]:
    """Least-id proper ancestor (or, optionally, processed node) covering ``n``."""
    node = e.nodes[n]
    if any_processed:
        pool = sorted(set(node.ancestors) | {
            m.id for m in e.nodes if m.status == PROCESSED and m.id != n})
    else:
        pool = sorted(node.ancestors)
    for m in pool:
        if _covers(e.nodes[m], node):
            return m
    return None


def expand(e: Exploration, b: Bvass, n: int,
           cfg: ExploreConfig = ExploreConfig()) -> list[int]:
    node = e.nodes[n]
    q_n = node.label.q
    by_state: dict[str, list[int]] = collections.defaultdict(list)
    for m in e.nodes:
        if m.status == PROCESSED:
            by_state[m.label.q].append(m.id)
    created = []
    for r in dict.fromkeys(b.rules):
        if q_n not in r.inputs:
            continue
        pools = [[n] if s == q_n else by_state.get(s, []) for s in r.inputs]
        for chosen in itertools.product(*pools):
            v = r.displacement
            for m in chosen:
                v = vadd(v, e.nodes[m].label.z)
            p = sum_all(e.nodes[m].label.p for m in chosen)
            for point in basis(v, p):
                lab = NodeLabel(r.displacement, r.output, point, p)
                created.append(e._add(lab, chosen, cfg))
    return created


def _step(e: Exploration, b: Bvass, n: int, cfg: ExploreConfig):
    node = e.nodes[n]
    cv, count = _cycle_vectors(e, b, n, cfg.max_cycles)
    e.stats.cycles_enumerated += count
    p = accelerate(sorted(cv.i), node.label.p, max_points=cfg.max_accel_points)
    e.stats.accelerations += 1
    node.label = NodeLabel(node.label.a, node.label.q, node.label.z, p)
    m = is_redundant(e, n, cfg.cover_any_processed)
    if m is not None:
        node.status, node.covered_by = REDUNDANT, m
        e.stats.redundant += 1
        e.stats.redundancy_hits += 1
        log.debug("node %d %s%s covered by %d", n, node.label.config, p, m)
        return
    node.status = PROCESSED
    e.stats.processed += 1
    kids = expand(e, b, n, cfg)
    log.debug("node %d %s + %s processed, %d children", n, node.label.config, p, len(kids))


def explore(b: Bvass, cfg: ExploreConfig = ExploreConfig()):
    """Run the exploration to completion.

    Returns ``(exploration, presentation, stats)``.  Limits in ``cfg`` raise
    :class:`ResourceLimitError` carrying the partial counters.
    """
    e = init_nodes(b, cfg)
    while e.worklist:
        n = e.worklist.popleft() if cfg.worklist_order == "fifo" else e.worklist.pop()
        try:
            _step(e, b, n, cfg)
        except ResourceLimitError as exc:
            exc.stats = e.stats.as_dict()
            exc.node = n
            raise
    if cfg.validate:
        report = validate_exploration(e, b, cfg)
        if not report.ok:
            raise AssertionError("invalid exploration: " + "; ".join(report.violations))
    return e, assemble(e, model_hash(b)), e.stats


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_exploration(e: Exploration, b: Bvass,
                         cfg: ExploreConfig = ExploreConfig()) -> ValidationReport:
    """Re-derive every structural condition of a finished exploration."""
    rep = ValidationReport()
    rules = {(frozenset(r.inputs), r.displacement, r.output) for r in b.rules}
    for node in e.nodes:
        if node.status == WAITING:
            rep.violations.append(f"node {node.id}: still waiting")
            continue
        rep.checked += 1
        lab = node.label
        parents = [e.nodes[m] for m in node.parents]
        states = [m.label.q for m in parents]
        if len(set(states)) != len(states):
            rep.violations.append(f"node {node.id}: parent states {states} repeat")
        elif (frozenset(states), lab.a, lab.q) not in rules:
            rep.violations.append(
                f"node {node.id}: no rule {sorted(states)} -{lab.a}-> {lab.q}")
        if any(m.status != PROCESSED for m in parents):
            rep.violations.append(f"node {node.id}: a parent is not processed")
        base = lab.a
        for m in parents:
            base = vadd(base, m.label.z)
        summed = sum_all(m.label.p for m in parents)
        d = vsub(lab.z, base)
        if not (vnonneg(d) and member(summed, d)):
            rep.violations.append(
                f"node {node.id}: point {lab.z} not in {base} + {summed}")
        cv = compute_cycle_vectors(e, b, node.id, cfg.max_cycles)
        expect = accelerate(sorted(cv.i), summed, max_points=cfg.max_accel_points)
        if not equal_sem(lab.p, expect):
            rep.violations.append(
                f"node {node.id}: periods {lab.p} differ from acceleration {expect}")
        if node.status == REDUNDANT:
            if node.children:
                rep.violations.append(f"node {node.id}: redundant node has children")
            m = node.covered_by
            if m is None or (m not in node.ancestors and not cfg.cover_any_processed):
                rep.violations.append(f"node {node.id}: coverer {m} is not an ancestor")
            elif e.nodes[m].status != PROCESSED or not _covers(e.nodes[m], node):
                rep.violations.append(f"node {node.id}: cover certificate by {m} fails")
    return rep
