"""Semilinear presentations: per-state unions of linear sets ``q(b + per(G))``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import periodic
from .errors import ParseError
from .model import Config, IVec2, vnonneg, vsub
from .periodic import PeriodicSet, includes, member


@dataclass(frozen=True)
class LinearSetEntry:
    state: str
    base: IVec2
    periods: PeriodicSet = field(default_factory=PeriodicSet)

    def sort_key(self):
        return (self.state, self.base, self.periods.generators)

    def contains(self, c: Config) -> bool:
        if c.state != self.state:
            return False
        d = vsub(c.point, self.base)
        return vnonneg(d) and member(self.periods, d)

    def covers(self, other: "LinearSetEntry") -> bool:
        """Sufficient test for ``other ⊆ self``."""
        if other.state != self.state:
            return False
        d = vsub(other.base, self.base)
        return (vnonneg(d) and member(self.periods, d)
                and includes(self.periods, other.periods))

    def __str__(self):
        parts = [f"{self.base[0]} {self.base[1]}"]
        parts += [f"{gx} {gy}" for gx, gy in self.periods.generators]
        return f"linear {self.state} : " + " ; ".join(parts)


@dataclass(frozen=True)
class SemilinearPresentation:
    entries: tuple[LinearSetEntry, ...] = ()
    model_hash: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           tuple(sorted(self.entries, key=LinearSetEntry.sort_key)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, c) -> bool:
        return member_config(self, Config(*c)) is not None


def normalize(entries: Iterable[LinearSetEntry]) -> list[LinearSetEntry]:
    """Drop entries covered by another one.  Coverage is transitive, so an
    entry dropped because of a later-removed coverer stays covered."""
    kept: list[LinearSetEntry] = []
    for e in sorted(set(entries), key=LinearSetEntry.sort_key):
        if any(k.covers(e) for k in kept):
            continue
        kept = [k for k in kept if not e.covers(k)]
        kept.append(e)
    return kept


def assemble(e, model_hash: str = "") -> SemilinearPresentation:
    """Presentation of all non-waiting nodes of a finished exploration."""
    entries = [LinearSetEntry(n.label.q, n.label.z, n.label.p)
               for n in e.nodes if n.status != "waiting"]
    return SemilinearPresentation(tuple(normalize(entries)), model_hash)


def member_config(s: SemilinearPresentation, c: Config) -> Optional[int]:
    for i, entry in enumerate(s.entries):
        if entry.contains(c):
            return i
    return None


def enumerate_box(s: SemilinearPresentation, k: int) -> set[Config]:
    out = set()
    for entry in s.entries:
        bx, by = entry.base
        if bx > k or by > k:
            continue
        for x, y in periodic.enumerate_box(entry.periods, k - min(bx, by)):
            if x + bx <= k and y + by <= k:
                out.add(Config(entry.state, (x + bx, y + by)))
    return out


def to_json(s: SemilinearPresentation) -> str:
    doc = {
        "model_hash": s.model_hash,
        "reach": [
            {"state": e.state, "base": list(e.base),
             "periods": [list(g) for g in e.periods.generators]}
            for e in s.entries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _vec(v, what) -> IVec2:
    if (not isinstance(v, list) or len(v) != 2
            or not all(isinstance(t, int) and not isinstance(t, bool) for t in v)):
        raise ParseError(f"{what} must be a pair of integers, got {v!r}")
    return (v[0], v[1])


def from_json(text: str) -> SemilinearPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("reach"), list):
        raise ParseError("expected an object with a 'reach' list")
    entries = []
    for item in doc["reach"]:
        try:
            state = item["state"]
            base = _vec(item["base"], "base")
            gens = tuple(_vec(g, "period") for g in item["periods"])
            entries.append(LinearSetEntry(state, base, PeriodicSet(gens)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad linear-set entry {item!r}: {exc}") from None
    return SemilinearPresentation(tuple(entries), str(doc.get("model_hash", "")))


def to_text(s: SemilinearPresentation) -> str:
    return "".join(str(e) + "\n" for e in s.entries)


def from_text(text: str, model_hash: str = "") -> SemilinearPresentation:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("linear ") or ":" not in line:
            raise ParseError("expected 'linear <state> : <bx> <by> ; ...'", lineno, 1)
        head, body = line[len("linear "):].split(":", 1)
        vecs = []
        for part in body.split(";"):
            nums = part.split()
            if len(nums) != 2:
                raise ParseError(f"expected two integers, got {part.strip()!r}", lineno)
            try:
                vecs.append((int(nums[0]), int(nums[1])))
            except ValueError:
                raise ParseError(f"bad integer in {part.strip()!r}", lineno) from None
        try:
            entries.append(LinearSetEntry(head.strip(), vecs[0], PeriodicSet(tuple(vecs[1:]))))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return SemilinearPresentation(tuple(entries), model_hash)


def loads(text: str) -> SemilinearPresentation:
    """Parse either serialization, sniffing JSON by its leading brace."""
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)
