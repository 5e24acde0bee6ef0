"""Two-dimensional branching VASS: data model, text format and semantics.

A model is a set of states plus a list of rules ``(inputs, displacement,
output)``.  A rule with no inputs is *initial*, one input *unary*, two or
more *branching*.  Points live in N^2, displacements in Z^2; both are plain
``(int, int)`` tuples so arithmetic is exact.

Text format (one directive per line, ``#`` comments)::

    states p q r
    rule p <- : 4 4
    rule q <- p : -1 0
    rule r <- p,q : 0 0
"""

from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ParseError

IVec2 = tuple[int, int]

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")
_INT = re.compile(r"[+-]?[0-9]+\Z")


def vadd(u: IVec2, v: IVec2) -> IVec2:
    return (u[0] + v[0], u[1] + v[1])


def vsub(u: IVec2, v: IVec2) -> IVec2:
    return (u[0] - v[0], u[1] - v[1])


def vnonneg(u: IVec2) -> bool:
    return u[0] >= 0 and u[1] >= 0


def vle(u: IVec2, v: IVec2) -> bool:
    return u[0] <= v[0] and u[1] <= v[1]


class Config(NamedTuple):
    """A configuration ``state(point)``."""

    state: str
    point: IVec2

    def __str__(self):
        return f"{self.state}({self.point[0]}, {self.point[1]})"


@dataclass(frozen=True, order=True)
class TransitionRule:
    output: str
    inputs: tuple[str, ...]
    displacement: IVec2

    def __post_init__(self):
        if len(set(self.inputs)) != len(self.inputs):
            raise ValueError(f"duplicate input state in rule for {self.output!r}")
        object.__setattr__(self, "inputs", tuple(sorted(self.inputs)))
        dx, dy = self.displacement
        object.__setattr__(self, "displacement", (int(dx), int(dy)))

    @property
    def kind(self) -> str:
        if not self.inputs:
            return "initial"
        return "unary" if len(self.inputs) == 1 else "branching"

    def __str__(self):
        return (f"rule {self.output} <- {','.join(self.inputs)} : "
                f"{self.displacement[0]} {self.displacement[1]}")


@dataclass(frozen=True)
class Bvass:
    states: tuple[str, ...]
    rules: tuple[TransitionRule, ...]

    def __post_init__(self):
        mentioned = set(self.states)
        for r in self.rules:
            mentioned.add(r.output)
            mentioned.update(r.inputs)
        if not mentioned:
            raise ValueError("a model needs at least one state")
        object.__setattr__(self, "states", tuple(sorted(mentioned)))
        object.__setattr__(self, "rules", tuple(self.rules))

    @classmethod
    def from_rules(cls, rules: Iterable, states: Iterable[str] = ()) -> "Bvass":
        """Build from ``(output, inputs, (dx, dy))`` triples or rule objects."""
        built = []
        for r in rules:
            if not isinstance(r, TransitionRule):
                out, ins, disp = r
                r = TransitionRule(out, tuple(ins), tuple(disp))
            built.append(r)
        return cls(tuple(states), tuple(built))

    def is_vass(self) -> bool:
        return all(len(r.inputs) <= 1 for r in self.rules)

    def initial_configs(self) -> frozenset:
        return frozenset(Config(r.output, r.displacement) for r in self.rules
                         if not r.inputs and vnonneg(r.displacement))


def parse_bvass(text: str) -> Bvass:
    """Parse the line-based model format; raise :class:`ParseError` on bad input."""
    declared: list[str] = []
    rules: list[TransitionRule] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        words = line.split()
        head = words[0]
        if head == "states":
            for w in words[1:]:
                if not _NAME.match(w):
                    raise ParseError(f"bad state name {w!r}", lineno, line.find(w) + 1)
                declared.append(w)
        elif head == "rule":
            rules.append(_parse_rule(line, lineno))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
    if not declared and not rules:
        raise ParseError("empty model: no states and no rules")
    return Bvass(tuple(declared), tuple(rules))


def _tokens(line: str, lo: int, hi: int, sep: str | None = None):
    """Yield ``(text, column)`` for the pieces of ``line[lo:hi]``."""
    seg = line[lo:hi]
    if sep is None:
        for m in re.finditer(r"\S+", seg):
            yield m.group(), lo + m.start() + 1
        return
    pos = 0
    for piece in seg.split(sep):
        stripped = piece.strip()
        yield stripped, lo + pos + (piece.find(stripped) if stripped else 0) + 1
        pos += len(piece) + len(sep)


def _parse_rule(line: str, lineno: int) -> TransitionRule:
    head = line.index("rule") + len("rule")
    arrow = line.find("<-", head)
    if arrow < 0:
        raise ParseError("expected '<-' in rule", lineno, len(line.rstrip()) + 1)
    outs = list(_tokens(line, head, arrow))
    if len(outs) != 1 or not _NAME.match(outs[0][0]):
        col = outs[0][1] if outs else arrow + 1
        raise ParseError("expected one output state before '<-'", lineno, col)
    colon = line.find(":", arrow)
    if colon < 0:
        raise ParseError("expected ':' before displacement", lineno, len(line.rstrip()) + 1)
    inputs: list[str] = []
    if line[arrow + 2:colon].strip():
        for name, col in _tokens(line, arrow + 2, colon, ","):
            if not _NAME.match(name):
                raise ParseError(f"bad input state {name!r}", lineno, col)
            if name in inputs:
                raise ParseError(f"duplicate input state {name!r}", lineno, col)
            inputs.append(name)
    nums = list(_tokens(line, colon + 1, len(line)))
    for text, col in nums:
        if not _INT.match(text):
            raise ParseError(f"bad integer {text!r}", lineno, col)
    if len(nums) != 2:
        col = nums[2][1] if len(nums) > 2 else len(line.rstrip()) + 1
        raise ParseError("displacement must be two integers", lineno, col)
    return TransitionRule(outs[0][0], tuple(inputs), (int(nums[0][0]), int(nums[1][0])))


def serialize_bvass(b: Bvass) -> str:
    lines = ["states " + " ".join(b.states)]
    lines += [str(r) for r in b.rules]
    return "\n".join(lines) + "\n"


def model_hash(b: Bvass) -> str:
    return hashlib.sha256(serialize_bvass(b).encode("utf-8")).hexdigest()


def _choices(rule_states, configs_by_state):
    """All ways to pick one configuration per state (states pairwise distinct)."""
    pools = [configs_by_state.get(s, ()) for s in rule_states]
    return itertools.product(*pools)


def _by_state(configs) -> dict[str, list[Config]]:
    out: dict[str, list[Config]] = {}
    for c in sorted(set(configs)):
        out.setdefault(c.state, []).append(c)
    return out


def post_step(b: Bvass, configs: Iterable[Config]) -> frozenset:
    """One application of the post operator to a finite configuration set."""
    by_state = _by_state(configs)
    result = set()
    for r in b.rules:
        for chosen in _choices(r.inputs, by_state):
            x, y = r.displacement
            for c in chosen:
                x += c.point[0]
                y += c.point[1]
            if x >= 0 and y >= 0:
                result.add(Config(r.output, (x, y)))
    return frozenset(result)


@dataclass(frozen=True)
class InstantiatedVass:
    states: tuple[str, ...]
    transitions: tuple[tuple[str, IVec2, str], ...]
    source_configs: frozenset


def instantiate(b: Bvass, f: Iterable[Config]) -> InstantiatedVass:
    """Unary VASS obtained by fixing all but one input of every rule from ``f``."""
    f = frozenset(f)
    by_state = _by_state(f)
    trans = set()
    for r in b.rules:
        for p in r.inputs:
            others = [s for s in r.inputs if s != p]
            for chosen in _choices(others, by_state):
                a = r.displacement
                for c in chosen:
                    a = vadd(a, c.point)
                trans.add((p, a, r.output))
    return InstantiatedVass(b.states, tuple(sorted(trans)), f)


def iteration_constant(b: Bvass) -> int:
    """``|Q|`` times the largest decrement any rule applies to a coordinate."""
    worst = max((-v for r in b.rules for v in r.displacement), default=0)
    return len(b.states) * max(0, worst)
