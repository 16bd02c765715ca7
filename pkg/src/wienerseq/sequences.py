"""Distance sequences and the coordinatewise dominance order.

The distance sequence of a connected graph is the nondecreasing sequence of
all n(n-1)/2 pairwise distances.  Sequences of equal length are partially
ordered by coordinatewise comparison; two Wiener-type facts drive the rest
of the package: a monotone index respects that order, and deleting a
non-cut vertex v bounds the sequence by the merge of the remaining graph's
sequence with the distance sequence of v.

Sequences are stored run-length compressed as (value, multiplicity) pairs;
all comparisons and merges walk runs, never expanded entries.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

from wienerseq.graphs import (
    Graph,
    delete_vertex,
    distance_matrix,
    is_cut_vertex,
)


class DistanceSequence:
    """Nondecreasing sequence of positive integers, run-length compressed."""

    __slots__ = ("runs", "_cum")

    def __init__(self, runs: Iterable[tuple[int, int]]):
        merged: list[tuple[int, int]] = []
        for value, count in runs:
            if value < 1:
                raise ValueError("entries must be positive, got %r" % (value,))
            if count < 0:
                raise ValueError("negative multiplicity %r" % (count,))
            if count == 0:
                continue
            if merged and value < merged[-1][0]:
                raise ValueError("runs must be sorted by value")
            if merged and value == merged[-1][0]:
                merged[-1] = (value, merged[-1][1] + count)
            else:
                merged.append((value, count))
        self.runs = tuple(merged)
        cum = []
        total = 0
        for _, count in merged:
            total += count
            cum.append(total)
        self._cum = tuple(cum)

    @classmethod
    def from_entries(
        cls, entries: Iterable[int], source_order: int | None = None
    ) -> "DistanceSequence":
        """Build from an arbitrary multiset of positive integers."""
        counts: dict[int, int] = {}
        for e in entries:
            counts[e] = counts.get(e, 0) + 1
        seq = cls(sorted(counts.items()))
        if source_order is not None:
            expect = source_order * (source_order - 1) // 2
            if len(seq) != expect:
                raise ValueError(
                    "sequence length %d does not match order %d (need %d)"
                    % (len(seq), source_order, expect)
                )
        return seq

    def __len__(self) -> int:
        return self._cum[-1] if self._cum else 0

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += len(self)
        if not (0 <= i < len(self)):
            raise IndexError(i)
        return self.runs[bisect.bisect_right(self._cum, i)][0]

    def __iter__(self) -> Iterator[int]:
        for value, count in self.runs:
            for _ in range(count):
                yield value

    def entries(self) -> list[int]:
        return list(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceSequence):
            return NotImplemented
        return self.runs == other.runs

    def __hash__(self) -> int:
        return hash(self.runs)

    def __repr__(self) -> str:
        return "DistanceSequence(%r)" % (self.runs,)

    def to_text(self) -> str:
        """Run-length text form, e.g. "1^8 2^8 3^8 4^4"; bare value for runs of 1."""
        parts = [
            "%d^%d" % (v, c) if c > 1 else "%d" % v for v, c in self.runs
        ]
        return " ".join(parts)

    def to_pairs(self) -> list[list[int]]:
        """JSON form: list of [value, multiplicity] pairs."""
        return [[v, c] for v, c in self.runs]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "DistanceSequence":
        return cls(tuple((int(v), int(c)) for v, c in pairs))

    @property
    def max_value(self) -> int:
        if not self.runs:
            raise ValueError("empty sequence has no maximum")
        return self.runs[-1][0]


class Dominance(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DominanceRelation:
    """Outcome of a coordinatewise comparison of equal-length sequences.

    ``less_at`` / ``greater_at`` are the first coordinates (0-based) where
    the left sequence is strictly smaller / larger; None when no such
    coordinate exists.
    """

    tag: Dominance
    less_at: int | None = None
    greater_at: int | None = None

    @property
    def dominated(self) -> bool:
        """Left <= right coordinatewise."""
        return self.tag in (Dominance.LESS, Dominance.EQUAL)


def compare(a: DistanceSequence, b: DistanceSequence) -> DominanceRelation:
    """Coordinatewise comparison; raises on length mismatch."""
    if len(a) != len(b):
        raise ValueError(
            "cannot compare sequences of lengths %d and %d" % (len(a), len(b))
        )
    less_at: int | None = None
    greater_at: int | None = None
    ia = ib = 0
    ra = rb = 0
    pos = 0
    total = len(a)
    while pos < total and (less_at is None or greater_at is None):
        va, ca = a.runs[ia]
        vb, cb = b.runs[ib]
        step = min(ca - ra, cb - rb)
        if va < vb and less_at is None:
            less_at = pos
        elif va > vb and greater_at is None:
            greater_at = pos
        pos += step
        ra += step
        rb += step
        if ra == ca:
            ia += 1
            ra = 0
        if rb == cb:
            ib += 1
            rb = 0
    if less_at is None and greater_at is None:
        return DominanceRelation(Dominance.EQUAL)
    if greater_at is None:
        return DominanceRelation(Dominance.LESS, less_at=less_at)
    if less_at is None:
        return DominanceRelation(Dominance.GREATER, greater_at=greater_at)
    return DominanceRelation(
        Dominance.INCOMPARABLE, less_at=less_at, greater_at=greater_at
    )


def merge(a: DistanceSequence, b: DistanceSequence) -> DistanceSequence:
    """Multiset union, i.e. the sorted concatenation of the two sequences."""
    out: list[tuple[int, int]] = []
    ia = ib = 0
    while ia < len(a.runs) or ib < len(b.runs):
        if ib >= len(b.runs) or (ia < len(a.runs) and a.runs[ia][0] <= b.runs[ib][0]):
            v, c = a.runs[ia]
            ia += 1
        else:
            v, c = b.runs[ib]
            ib += 1
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + c)
        else:
            out.append((v, c))
    return DistanceSequence(out)


def distance_sequence(g: Graph) -> DistanceSequence:
    """Distance sequence of a connected graph; length n(n-1)/2."""
    dm = distance_matrix(g)
    counts: dict[int, int] = {}
    for u in range(g.n):
        row = dm.d[u]
        for v in range(u + 1, g.n):
            d = row[v]
            counts[d] = counts.get(d, 0) + 1
    return DistanceSequence(sorted(counts.items()))


def vertex_distance_sequence(g: Graph, v: int) -> DistanceSequence:
    """Sorted distances from v to all other vertices; length n - 1."""
    if not (0 <= v < g.n):
        raise ValueError("vertex %r out of range" % (v,))
    dm = distance_matrix(g)
    counts: dict[int, int] = {}
    for u in range(g.n):
        if u == v:
            continue
        d = dm.d[v][u]
        counts[d] = counts.get(d, 0) + 1
    return DistanceSequence(sorted(counts.items()))


class DeletionBoundResult(NamedTuple):
    holds: bool
    equality: bool
    predicted_equality: bool


def deletion_bound_check(g: Graph, v: int) -> DeletionBoundResult:
    """Check the vertex deletion bound at a non-cut vertex v.

    The bound states that the distance sequence of g is coordinatewise at
    most the merge of the distance sequence of g - v with the sorted
    distances from v.  Equality is predicted exactly when every two
    neighbors of v are at distance at most 2 in g - v.
    """
    if not (0 <= v < g.n):
        raise ValueError("vertex %r out of range" % (v,))
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    if is_cut_vertex(g, v):
        raise ValueError("vertex %d is a cut vertex" % v)
    whole = distance_sequence(g)
    remainder = delete_vertex(g, v)
    rem_seq = (
        distance_sequence(remainder) if remainder.n > 1 else DistanceSequence(())
    )
    bound = merge(rem_seq, vertex_distance_sequence(g, v))
    rel = compare(whole, bound)
    holds = rel.dominated
    equality = rel.tag == Dominance.EQUAL
    predicted = True
    if remainder.n > 1:
        rem_dm = distance_matrix(remainder)
        nbrs = [u - 1 if u > v else u for u in g.neighbors(v)]
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if rem_dm.d[x][y] > 2:
                    predicted = False
                    break
            if not predicted:
                break
    return DeletionBoundResult(holds, equality, predicted)
