"""Parking functions, major sequences, labelled Dyck paths, and bounce.

A length-n parking function sorts to a'_i <= i-1; its coordinate-wise
complement (n - a_i) is a major sequence.  Both embed as labelled lattice
paths (weakly below, resp. above, the diagonal) with equal-height labels
written in decreasing order left to right.  The bounce machinery computes
the diagonal contact points together with the label sets C_v / D_v that
turn a parking function into a rooted tree.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterator, NamedTuple, Union

from .polynomials import BivariatePoly
from .trees import LabelledTree


def _counting_test(entries, n: int) -> bool:
    # at least i entries below i, for every i in [1, n]
    below = [0] * (n + 1)
    for a in entries:
        if a < n:
            below[a + 1] += 1
    running = 0
    for i in range(1, n + 1):
        running += below[i]
        if running < i:
            return False
    return True


def is_parking(entries) -> bool:
    """Test via the sorted definition and the counting criterion.

    The two routes must agree; a mismatch would be a bug in this module,
    not bad input, so it raises rather than returning.
    """
    entries = tuple(entries)
    n = len(entries)
    if any(a < 0 for a in entries):
        return False
    by_sort = all(a <= i for i, a in enumerate(sorted(entries)))
    by_count = _counting_test(entries, n)
    if by_sort != by_count:
        raise AssertionError(f"parking tests disagree on {entries}")
    return by_sort


def is_major(entries) -> bool:
    """Same dual-route test for major sequences, via complementation."""
    entries = tuple(entries)
    n = len(entries)
    if any(not 0 <= b <= n for b in entries):
        return False
    by_sort = all(i + 1 <= b <= n for i, b in enumerate(sorted(entries)))
    by_count = _counting_test(tuple(n - b for b in entries), n)
    if by_sort != by_count:
        raise AssertionError(f"major tests disagree on {entries}")
    return by_sort


@dataclass(frozen=True, slots=True)
class ParkingFunction:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if any(a < 0 for a in self.entries):
            raise ValueError(f"negative entry in {self.entries}")
        if not all(a <= i for i, a in enumerate(sorted(self.entries))):
            raise ValueError(f"not a parking function: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)


@dataclass(frozen=True, slots=True)
class MajorSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.entries)
        if not all(i + 1 <= b <= n for i, b in enumerate(sorted(self.entries))):
            raise ValueError(f"not a major sequence: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(str(b) for b in self.entries)


Sequencelike = Union[ParkingFunction, MajorSequence]


def complement(value: Sequencelike) -> Sequencelike:
    """Coordinate-wise n - entry, exchanging the two families."""
    n = value.n
    flipped = tuple(n - x for x in value.entries)
    if isinstance(value, ParkingFunction):
        return MajorSequence(flipped)
    return ParkingFunction(flipped)


def area(value: Sequencelike) -> int:
    """binom(n,2) - sum for parking functions, sum - binom(n,2) for majors."""
    n = value.n
    if isinstance(value, ParkingFunction):
        return math.comb(n, 2) - sum(value.entries)
    if isinstance(value, MajorSequence):
        return sum(value.entries) - math.comb(n, 2)
    raise TypeError(f"no area for {type(value).__name__}")


# ------------------------------------------------------------------ paths


@dataclass(frozen=True, slots=True)
class LabelledDyckPath:
    """Staircase path with labelled horizontal steps.

    heights[j] is the height of the (j+1)-th horizontal step; labels is
    the left-to-right label word.  side is "below" for parking functions
    and "above" for major sequences.
    """

    heights: tuple[int, ...]
    labels: tuple[int, ...]
    side: str

    def __post_init__(self):
        n = len(self.heights)
        if self.side not in ("below", "above"):
            raise ValueError(f"side must be 'below' or 'above': {self.side}")
        if sorted(self.labels) != list(range(1, n + 1)):
            raise ValueError(f"labels must be a permutation of 1..{n}")
        for j in range(1, n):
            if self.heights[j] < self.heights[j - 1]:
                raise ValueError("heights must be non-decreasing")
            if self.heights[j] == self.heights[j - 1] and not (
                self.labels[j] < self.labels[j - 1]
            ):
                raise ValueError("equal-height labels must decrease left-to-right")
        for j, h in enumerate(self.heights, start=1):
            if self.side == "below" and not 0 <= h <= j - 1:
                raise ValueError(f"step {j} at height {h} leaves the below region")
            if self.side == "above" and not j <= h <= n:
                raise ValueError(f"step {j} at height {h} leaves the above region")

    @property
    def n(self) -> int:
        return len(self.heights)

    def lattice_points(self) -> list[tuple[int, int]]:
        """Every lattice point on the path from (0,0) to (n,n), in order."""
        n = self.n
        points = [(0, 0)]
        y = 0
        for j, h in enumerate(self.heights, start=1):
            while y < h:
                y += 1
                points.append((j - 1, y))
            points.append((j, y))
        while y < n:
            y += 1
            points.append((n, y))
        return points


def to_path(value: Sequencelike) -> LabelledDyckPath:
    """Labelled-path view: the j-th horizontal step sits at the j-th
    smallest entry, and steps of equal height carry their index labels in
    decreasing order."""
    entries = value.entries
    heights = []
    labels = []
    for h in sorted(set(entries)):
        group = sorted((i + 1 for i, a in enumerate(entries) if a == h), reverse=True)
        heights.extend([h] * len(group))
        labels.extend(group)
    side = "below" if isinstance(value, ParkingFunction) else "above"
    return LabelledDyckPath(tuple(heights), tuple(labels), side)


def from_path(path: LabelledDyckPath) -> Sequencelike:
    entries = [0] * path.n
    for h, label in zip(path.heights, path.labels):
        entries[label - 1] = h
    if path.side == "below":
        return ParkingFunction(tuple(entries))
    return MajorSequence(tuple(entries))


# ----------------------------------------------------------------- bounce


@dataclass(frozen=True, slots=True)
class BounceData:
    """Bounce-path contacts plus the label sets hanging off each vertex.

    w is the left-to-right label word prefixed with w_0 = 0.  C[v] holds,
    in decreasing order, the labels at the height where v sits in w;
    D[v] adds, recursively, everything below those labels.  Vertex 0
    receives the height-0 labels, matching the tree picture where they
    are the root's children.
    """

    contacts: tuple[int, ...]
    w: tuple[int, ...]
    C: tuple[tuple[int, ...], ...]
    D: tuple[frozenset[int], ...]


def _bounce_contacts(entries: tuple[int, ...]) -> tuple[int, ...]:
    # closed form of the bouncing ball: next contact counts entries <= current
    n = len(entries)
    ordered = sorted(entries)
    contacts = [0]
    while contacts[-1] < n:
        level = contacts[-1]
        nxt = sum(1 for a in ordered if a <= level)
        if nxt <= level:
            raise AssertionError(f"bounce stalled on {entries}")
        contacts.append(nxt)
    return tuple(contacts)


def cd_sets(p: ParkingFunction) -> BounceData:
    n = p.n
    path = to_path(p)
    w = (0, *path.labels)
    at_height: list[list[int]] = [[] for _ in range(n + 1)]
    for h, label in zip(path.heights, path.labels):
        at_height[h].append(label)

    C: list[tuple[int, ...]] = [()] * (n + 1)
    D: list[frozenset[int]] = [frozenset()] * (n + 1)
    for i in range(n, -1, -1):
        vertex = w[i]
        group = tuple(at_height[i])
        C[vertex] = group
        acc = set(group)
        for j in group:
            acc |= D[j]
        D[vertex] = frozenset(acc)
    return BounceData(_bounce_contacts(p.entries), w, tuple(C), tuple(D))


def bounce(p: ParkingFunction) -> tuple[BounceData, int]:
    """Bounce data plus the statistic sum(n - i_j) over the contacts.

    The same number must come out as the total size of the D sets; the
    two routes are compared on every call.
    """
    data = cd_sets(p)
    n = p.n
    value = sum(n - i for i in data.contacts)
    via_d = sum(len(d) for d in data.D)
    if value != via_d:
        raise AssertionError(f"bounce routes disagree on {p}: {value} vs {via_d}")
    return data, value


def theta(p: ParkingFunction) -> LabelledTree:
    """The tree whose vertex v has children C[v]; a bijection onto trees."""
    data = cd_sets(p)
    parent = [0] * (p.n + 1)
    for v in range(p.n + 1):
        for child in data.C[v]:
            parent[child] = v
    return LabelledTree(tuple(parent))


def theta_inverse(tree: LabelledTree) -> ParkingFunction:
    """Rebuild the parking function whose C sets are the children lists.

    The label word w is grown left to right: position i contributes the
    children of w_i, written in decreasing order, as the labels at height
    i.  Connectivity of the tree guarantees the word never stalls.
    """
    n = tree.n
    children = tree.children()
    w = [0]
    entries = [0] * n
    for i in range(n + 1):
        if i >= len(w):
            raise AssertionError(f"label word stalled at position {i} for {tree}")
        batch = sorted(children[w[i]], reverse=True)
        for label in batch:
            entries[label - 1] = i
        w.extend(batch)
    return ParkingFunction(tuple(entries))


def pinv(p: ParkingFunction) -> int:
    """Sum over vertices of the D-elements smaller than the vertex."""
    data = cd_sets(p)
    return sum(sum(1 for x in data.D[v] if x < v) for v in range(p.n + 1))


def copinv(p: ParkingFunction) -> int:
    """Sum over vertices of the D-elements larger than the vertex."""
    data = cd_sets(p)
    return sum(sum(1 for x in data.D[v] if x > v) for v in range(p.n + 1))


# ------------------------------------------------------- parking process


class ParkProcess(NamedTuple):
    stalls: tuple[int, ...]
    jump: int
    cojump: int


def park_process(p: ParkingFunction) -> ParkProcess:
    """Run the lot: car i enters at a_i and rolls east to the first gap.

    jump totals the eastward displacement (and equals the area); cojump
    totals a_i - d_i where d_i is the nearest empty stall west of where
    car i ends up, measured right after it parks.  The lot is unbounded
    to the west, so d_i may be negative.
    """
    occupied: set[int] = set()
    stalls = []
    jump = cojump = 0
    for a in p.entries:
        c = a
        while c in occupied:
            c += 1
        occupied.add(c)
        stalls.append(c)
        jump += c - a
        d = c - 1
        while d in occupied:
            d -= 1
        cojump += a - d
    if occupied != set(range(p.n)):
        raise AssertionError(f"parking process left gaps for {p}")
    return ParkProcess(tuple(stalls), jump, cojump)


# ------------------------------------------------------------ enumeration


def parking_count(n: int) -> int:
    return 1 if n == 0 else (n + 1) ** (n - 1)


def enumerate_parking(n: int) -> Iterator[ParkingFunction]:
    """All parking functions of length n, in lexicographic order."""
    if n == 0:
        yield ParkingFunction(())
        return
    for entries in _cartesian(range(n), repeat=n):
        if is_parking(entries):
            yield ParkingFunction(entries)


def enumerate_majors(n: int) -> Iterator[MajorSequence]:
    for p in enumerate_parking(n):
        yield complement(p)


class ParkingEnumerators(NamedTuple):
    area: BivariatePoly
    bounce: BivariatePoly
    jump_cojump: BivariatePoly
    pinv_copinv: BivariatePoly


@functools.cache
def parking_enumerators(n: int) -> ParkingEnumerators:
    """Area, bounce, (jump, cojump) and (pinv, copinv) enumerators of P_n.

    All four are exact sums over the full family; area and bounce are
    univariate and stored in q.
    """
    area_acc: dict[tuple[int, int], int] = {}
    bounce_acc: dict[tuple[int, int], int] = {}
    jump_acc: dict[tuple[int, int], int] = {}
    pinv_acc: dict[tuple[int, int], int] = {}
    for p in enumerate_parking(n):
        a = area(p)
        area_acc[(a, 0)] = area_acc.get((a, 0), 0) + 1
        data, b = bounce(p)
        bounce_acc[(b, 0)] = bounce_acc.get((b, 0), 0) + 1
        binv = sum(sum(1 for x in data.D[v] if x < v) for v in range(n + 1))
        cobinv = sum(len(data.D[v]) for v in range(n + 1)) - binv
        pinv_acc[(binv, cobinv)] = pinv_acc.get((binv, cobinv), 0) + 1
        proc = park_process(p)
        key = (proc.jump, proc.cojump)
        jump_acc[key] = jump_acc.get(key, 0) + 1
    return ParkingEnumerators(
        BivariatePoly(area_acc),
        BivariatePoly(bounce_acc),
        BivariatePoly(jump_acc),
        BivariatePoly(pinv_acc),
    )


# -------------------------------------------------------------- text forms


def parse_entries(text: str) -> tuple[int, ...]:
    stripped = text.strip().strip("()")
    if not stripped:
        return ()
    return tuple(int(x) for x in re.split(r"[,\s]+", stripped) if x)


def parse_parking(text: str) -> ParkingFunction:
    return ParkingFunction(parse_entries(text))


def parse_major(text: str) -> MajorSequence:
    return MajorSequence(parse_entries(text))


def sequence_to_json(value: Sequencelike) -> dict:
    kind = "parking" if isinstance(value, ParkingFunction) else "major"
    return {"n": value.n, "entries": list(value.entries), "kind": kind}


def sequence_from_json(obj: dict) -> Sequencelike:
    entries = tuple(int(x) for x in obj["entries"])
    if len(entries) != int(obj["n"]):
        raise ValueError("n does not match entries length")
    if obj["kind"] == "parking":
        return ParkingFunction(entries)
    if obj["kind"] == "major":
        return MajorSequence(entries)
    raise ValueError(f"unknown kind {obj['kind']!r}")
