"""Lattice paths: Dyck, Motzkin, their super variants, and double-Dyck paths.

Paths are immutable strings over ``U`` (+1), ``F`` (0) and ``D`` (-1).
Enumeration order is lexicographic with ``U < F < D``.

Family sizes:

* Dyck / SuperDyck ``n``: length ``2n``
* Motzkin / SuperMotzkin ``n``: length ``n``
* DoubleDyck ``n``: Dyck paths of length ``2(n+1)`` touching the axis at
  ``2*floor((n+1)/2)``, i.e. a Dyck path of semilength ``floor((n+1)/2)``
  followed by one of semilength ``ceil((n+1)/2)``.

Super paths may dip below the axis. Humps are only defined for the
non-super families.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from humplab import _kernels
from humplab.combinat import CapExceeded

__all__ = [
    "Step",
    "FamilyKind",
    "PathFamily",
    "LatticePath",
    "DEFAULT_CAPS",
    "enumeration_cap",
    "enumerate_paths",
    "count_enumerated",
    "hump_count",
    "total_humps",
    "first_return_split",
    "dump_paths",
    "parse_path",
]


class Step(enum.Enum):
    UP = "U"
    FLAT = "F"
    DOWN = "D"

    @property
    def delta(self) -> int:
        return _DELTA[self.value]


_DELTA = {"U": 1, "F": 0, "D": -1}


class FamilyKind(enum.Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    SUPER_DYCK = "superdyck"
    SUPER_MOTZKIN = "supermotzkin"
    DOUBLE_DYCK = "doubledyck"

    @property
    def is_super(self) -> bool:
        return self in (FamilyKind.SUPER_DYCK, FamilyKind.SUPER_MOTZKIN)

    @property
    def allows_flat(self) -> bool:
        return self in (FamilyKind.MOTZKIN, FamilyKind.SUPER_MOTZKIN)

    @classmethod
    def parse(cls, name: str) -> "FamilyKind":
        key = name.strip().lower().replace("-", "").replace("_", "")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown path family {name!r}; expected one of "
                         + ", ".join(k.value for k in cls))


DEFAULT_CAPS = {
    FamilyKind.DYCK: 14,
    FamilyKind.MOTZKIN: 16,
    FamilyKind.SUPER_DYCK: 12,
    FamilyKind.SUPER_MOTZKIN: 12,
    FamilyKind.DOUBLE_DYCK: 12,
}


def enumeration_cap(kind: FamilyKind) -> int:
    """Cap for ``kind``; ``HUMPLAB_MAX_ENUM_N`` overrides every family."""
    env = os.environ.get("HUMPLAB_MAX_ENUM_N")
    if env:
        return int(env)
    return DEFAULT_CAPS[kind]


@dataclass(frozen=True)
class PathFamily:
    kind: FamilyKind
    n: int

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", FamilyKind.parse(self.kind))
        if self.n < 0:
            raise ValueError(f"family size must be >= 0, got {self.n}")

    @property
    def length(self) -> int:
        if self.kind in (FamilyKind.MOTZKIN, FamilyKind.SUPER_MOTZKIN):
            return self.n
        if self.kind is FamilyKind.DOUBLE_DYCK:
            return 2 * (self.n + 1)
        return 2 * self.n

    @property
    def checkpoint(self) -> int:
        """Position forced to height 0 in the interior, or -1."""
        if self.kind is FamilyKind.DOUBLE_DYCK:
            return 2 * ((self.n + 1) // 2)
        return -1

    def contains(self, steps: str) -> bool:
        if len(steps) != self.length:
            return False
        if not self.kind.allows_flat and "F" in steps:
            return False
        h = 0
        for i, s in enumerate(steps, 1):
            h += _DELTA[s]
            if h < 0 and not self.kind.is_super:
                return False
            if i == self.checkpoint and h != 0:
                return False
        return h == 0


@dataclass(frozen=True)
class LatticePath:
    steps: str
    family: PathFamily = field(compare=False)

    def __post_init__(self):
        if set(self.steps) - set("UFD"):
            raise ValueError(f"path steps must be over U/F/D: {self.steps!r}")
        if not self.family.contains(self.steps):
            raise ValueError(f"{self.steps!r} is not a {self.family.kind.value} path of size {self.family.n}")

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return self.steps

    def heights(self) -> list[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + _DELTA[s])
        return out


def parse_path(text: str, family: PathFamily | FamilyKind | str) -> LatticePath:
    """Build a path from a U/F/D string; a bare kind infers ``n`` from the length."""
    text = text.strip()
    if isinstance(family, PathFamily):
        return LatticePath(text, family)
    kind = FamilyKind.parse(family) if isinstance(family, str) else family
    if kind in (FamilyKind.MOTZKIN, FamilyKind.SUPER_MOTZKIN):
        n = len(text)
    elif kind is FamilyKind.DOUBLE_DYCK:
        n = len(text) // 2 - 1
    else:
        n = len(text) // 2
    return LatticePath(text, PathFamily(kind, n))


def _raw_paths(length: int, alphabet: str, nonneg: bool, checkpoint: int) -> Iterator[str]:
    # iterative DFS; the stack holds the index of the next letter to try per depth
    if length == 0:
        yield ""
        return
    steps: list[str] = []
    heights = [0]
    tries = [0]
    k = len(alphabet)
    while tries:
        d = len(steps)
        t = tries[-1]
        if t == k:
            tries.pop()
            if steps:
                steps.pop()
                heights.pop()
            continue
        tries[-1] = t + 1
        s = alphabet[t]
        h = heights[-1] + _DELTA[s]
        pos = d + 1
        if nonneg and h < 0:
            continue
        target = checkpoint if 0 <= checkpoint and pos <= checkpoint else length
        if abs(h) > target - pos:
            continue
        if pos == length:
            yield "".join(steps) + s
            continue
        steps.append(s)
        heights.append(h)
        tries.append(0)


def enumerate_paths(family: PathFamily) -> Iterator[LatticePath]:
    """Stream every path of ``family`` once, lexicographically (U < F < D)."""
    alphabet = "UFD" if family.kind.allows_flat else "UD"
    for s in _raw_paths(family.length, alphabet, not family.kind.is_super, family.checkpoint):
        # skip re-validation: the generator only emits members
        p = object.__new__(LatticePath)
        object.__setattr__(p, "steps", s)
        object.__setattr__(p, "family", family)
        yield p


def dump_paths(paths: Iterable[LatticePath]) -> str:
    """One path per line over U/D/F."""
    return "".join(p.steps + "\n" for p in paths)


def _humps(steps: str) -> int:
    # U opens a candidate hump, F keeps it open, D closes it
    humps = 0
    open_up = False
    for s in steps:
        if s == "U":
            open_up = True
        elif s == "D":
            humps += open_up
            open_up = False
    return humps


def hump_count(path: LatticePath) -> int:
    """Number of humps: ``U F* D`` patterns (plain peaks ``UD`` for Dyck paths).

    Double-Dyck humps are counted over the whole concatenation. Humps of
    super paths are not defined, so those are rejected.
    """
    if path.family.kind.is_super:
        raise ValueError("humps are not defined for super paths")
    return _humps(path.steps)


def _check_cap(family: PathFamily, cap: int | None) -> None:
    limit = enumeration_cap(family.kind) if cap is None else cap
    if family.n > limit:
        raise CapExceeded(
            f"{family.kind.value} enumeration at n={family.n} exceeds cap {limit}; "
            "use the closed forms in humplab.formulas instead"
        )


def count_enumerated(family: PathFamily, cap: int | None = None, backend: str | None = None) -> int:
    """Number of paths in ``family``, by exhaustive walk."""
    _check_cap(family, cap)
    count, _ = _kernels.walk(family.length, family.kind.allows_flat, family.kind.is_super,
                             family.checkpoint, backend)
    return count


def total_humps(family: PathFamily, cap: int | None = None, backend: str | None = None) -> int:
    """Sum of hump counts over every path of ``family``, by exhaustive walk."""
    if family.kind.is_super:
        raise ValueError("humps are not defined for super paths")
    _check_cap(family, cap)
    _, humps = _kernels.walk(family.length, family.kind.allows_flat, False, family.checkpoint, backend)
    return humps


def first_return_split(path: LatticePath) -> tuple[LatticePath, LatticePath]:
    """Split at the first return to the axis.

    The prefix is a primitive path (a single flat step or an arch ``U...D``)
    and the suffix is whatever follows. Both are tagged with the plain
    Dyck or Motzkin family of matching size.
    """
    if path.family.kind.is_super:
        raise ValueError("first-return split needs a path that stays above the axis")
    if not path.steps:
        raise ValueError("cannot split the empty path")
    h = 0
    for i, s in enumerate(path.steps, 1):
        h += _DELTA[s]
        if h == 0:
            break
    kind = FamilyKind.MOTZKIN if path.family.kind.allows_flat else FamilyKind.DYCK
    pre, suf = path.steps[:i], path.steps[i:]
    return parse_path(pre, kind), parse_path(suf, kind)
