"""Partition atoms and the shared labeling of sorted orbit points.

A level-n dynamical partition tiles the circle with arcs whose endpoints
are the first q_n + q_{n-1} points of the orbit of the base point 0.
Because 0 is always an endpoint, no atom wraps across 0 and every atom can
be stored as a plain interval [left, right) inside [0, 1].
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Sequence

from .errors import StructureError

SHORT = "short"
LENGTHY = "lengthy"


@dataclass(frozen=True)
class Atom:
    """One partition arc: f^k of a base interval, labeled short or lengthy."""

    left: float
    right: float
    label: str
    k: int

    def __post_init__(self):
        if self.label not in (SHORT, LENGTHY):
            raise ValueError(f"label must be short or lengthy, got {self.label!r}")
        if not self.right > self.left:
            raise ValueError(f"degenerate atom [{self.left}, {self.right}]")

    @property
    def length(self) -> float:
        return self.right - self.left

    @property
    def key(self) -> tuple[str, int]:
        return (self.label, self.k)

    def to_json_dict(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "label": self.label,
            "k": self.k,
            "length": self.length,
        }


@dataclass(frozen=True)
class DynamicalPartition:
    """Ordered atoms of one partition level, tiling [0, 1]."""

    level: int
    atoms: tuple[Atom, ...]
    _lefts: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "_lefts", tuple(a.left for a in atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def short_count(self) -> int:
        return sum(1 for a in self.atoms if a.label == SHORT)

    @property
    def lengthy_count(self) -> int:
        return sum(1 for a in self.atoms if a.label == LENGTHY)

    @property
    def total_length(self) -> float:
        return sum(a.length for a in self.atoms)

    @property
    def max_length(self) -> float:
        return max(a.length for a in self.atoms)

    @property
    def min_length(self) -> float:
        return min(a.length for a in self.atoms)

    def locate(self, x: float) -> int:
        """Index of the atom containing x in [0, 1), left-closed."""
        x = x % 1.0
        idx = bisect_right(self._lefts, x) - 1
        return max(idx, 0)

    def atom_by_key(self) -> dict[tuple[str, int], Atom]:
        return {a.key: a for a in self.atoms}

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "atoms": [a.to_json_dict() for a in self.atoms],
        }


def sorted_index_pairs(order: Sequence[int]):
    """Orbit-index pairs (left, right) of consecutive sorted points."""
    count = len(order)
    for pos in range(count):
        yield order[pos], order[(pos + 1) % count]


def label_sorted_orbit(points, order, q_short, q_lengthy, ambiguous_probe=None):
    """Label the gaps between sorted orbit points as partition atoms.

    Consecutive endpoints have orbit indices differing by exactly q_n
    (short atom, the gap is an image of the base short interval) or
    q_{n-1} (lengthy atom); the atom's k is the smaller index.  When
    q_{n-1} == q_n (level 1 with a_1 = 1) the difference is ambiguous and
    the gap containing ``ambiguous_probe`` (the next orbit point) is the
    lengthy one.

    ``points`` may be floats or Fractions; ``order`` sorts them ascending
    with points[order[0]] == 0.
    """
    count = q_short + q_lengthy
    if len(order) != count:
        raise StructureError(
            f"expected {count} orbit points, got {len(order)}"
        )
    atoms = []
    short_seen = lengthy_seen = 0
    for pos, (i, j) in enumerate(sorted_index_pairs(order)):
        left = points[i]
        right = points[j] if pos + 1 < count else 1
        diff = abs(i - j)
        if q_short != q_lengthy:
            if diff == q_lengthy:
                label = SHORT
            elif diff == q_short:
                label = LENGTHY
            else:
                raise StructureError(
                    f"adjacent orbit indices differ by {diff}; expected "
                    f"{q_short} or {q_lengthy} (combinatorics do not match "
                    f"the coefficient prefix)"
                )
        else:
            if ambiguous_probe is None:
                raise StructureError("ambiguous level-1 labels need a probe point")
            label = LENGTHY if left < ambiguous_probe < right else SHORT
        if label == SHORT:
            short_seen += 1
        else:
            lengthy_seen += 1
        atoms.append(Atom(left=float(left), right=float(right), label=label, k=min(i, j)))
    if short_seen != q_short or lengthy_seen != q_lengthy:
        raise StructureError(
            f"atom counts ({short_seen} short, {lengthy_seen} lengthy) do not "
            f"match (q_(n-1), q_n) = ({q_short}, {q_lengthy})"
        )
    return atoms
