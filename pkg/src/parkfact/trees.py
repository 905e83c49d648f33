"""Labelled rooted trees on [n] and their inversion statistics.

Trees are parent vectors rooted at 0 (parent[0] is the self-sentinel and
is omitted by serializers).  Enumeration is exhaustive: a direct
parent-vector sweep for small n and Pruefer-sequence unranking beyond
that, with a cross-check test keeping the two honest.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterator

from .polynomials import BivariatePoly

_NAIVE_LIMIT = 4


@dataclass(frozen=True, slots=True)
class LabelledTree:
    """Rooted tree on vertices 0..n via its parent vector; parent[0] = 0."""

    parent: tuple[int, ...]

    def __post_init__(self):
        m = len(self.parent)
        if m == 0 or self.parent[0] != 0:
            raise ValueError("parent vector must start with the root sentinel 0")
        for v in range(1, m):
            if not 0 <= self.parent[v] < m:
                raise ValueError(f"parent[{v}] = {self.parent[v]} out of range")
        if not _reaches_root(self.parent):
            raise ValueError(f"parent map is not a tree rooted at 0: {self.parent}")

    @property
    def n(self) -> int:
        return len(self.parent) - 1

    def children(self) -> tuple[tuple[int, ...], ...]:
        """Children lists indexed by vertex, each in increasing order."""
        out: list[list[int]] = [[] for _ in self.parent]
        for v in range(1, len(self.parent)):
            out[self.parent[v]].append(v)
        return tuple(tuple(c) for c in out)

    def __str__(self) -> str:
        return format_tree(self)


def _reaches_root(parent: tuple[int, ...]) -> bool:
    m = len(parent)
    state = [0] * m  # 0 unknown, 1 on current path, 2 proven good
    state[0] = 2
    for start in range(1, m):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = parent[v]
        if state[v] == 1:
            return False
        for u in path:
            state[u] = 2
    return True


# ------------------------------------------------------------ enumeration


def tree_count(n: int) -> int:
    """(n+1)^(n-1), the size of the family."""
    return 1 if n == 0 else (n + 1) ** (n - 1)


def _enumerate_trees_naive(n: int) -> Iterator[LabelledTree]:
    """Sweep all parent vectors and keep the acyclic ones."""
    if n == 0:
        yield LabelledTree((0,))
        return
    for tail in _cartesian(range(n + 1), repeat=n):
        parent = (0, *tail)
        if _reaches_root(parent):
            yield LabelledTree(parent)


def _pruefer_to_parent(seq: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Decode a Pruefer sequence over [0, m-1] into a parent vector on 0."""
    degree = [1] * m
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, m - 1))

    adjacency: list[list[int]] = [[] for _ in range(m)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    parent = [0] * m
    stack = [0]
    seen = [False] * m
    seen[0] = True
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    return tuple(parent)


def unrank_tree(n: int, index: int) -> LabelledTree:
    """The index-th tree on [n] under base-(n+1) Pruefer unranking."""
    total = tree_count(n)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside [0, {total})")
    if n == 0:
        return LabelledTree((0,))
    if n == 1:
        return LabelledTree((0, 0))
    digits = []
    x = index
    for _ in range(n - 1):
        x, d = divmod(x, n + 1)
        digits.append(d)
    return LabelledTree(_pruefer_to_parent(tuple(digits), n + 1))


def _enumerate_trees_pruefer(n: int) -> Iterator[LabelledTree]:
    for index in range(tree_count(n)):
        yield unrank_tree(n, index)


def enumerate_trees(n: int) -> Iterator[LabelledTree]:
    """Every tree on [n] rooted at 0, exactly once.

    Small n uses the parent-vector sweep; larger n the Pruefer unranking.
    Ranges can be consumed in parallel via unrank_tree.
    """
    if n <= _NAIVE_LIMIT:
        return _enumerate_trees_naive(n)
    return _enumerate_trees_pruefer(n)


# -------------------------------------------------------------- statistics


def tree_stats(tree: LabelledTree) -> tuple[int, int, int]:
    """(inv, coinv, depth) in one pass over ancestor chains.

    A pair (i, j) with j a descendant of i counts as an inversion when
    i > j and a coinversion when i < j; depth is the total number of such
    pairs, i.e. the sum of all root distances.  O(n^2) worst case, which
    is fine at desk scale.
    """
    parent = tree.parent
    inv = coinv = depth = 0
    for v in range(1, len(parent)):
        u = parent[v]
        while True:
            if u > v:
                inv += 1
            else:
                coinv += 1
            depth += 1
            if u == 0:
                break
            u = parent[u]
    return inv, coinv, depth


def inv(tree: LabelledTree) -> int:
    return tree_stats(tree)[0]


def coinv(tree: LabelledTree) -> int:
    return tree_stats(tree)[1]


def depth(tree: LabelledTree) -> int:
    return tree_stats(tree)[2]


@functools.cache
def inversion_enumerator(n: int) -> BivariatePoly:
    """I_n(q,t) = sum over trees of q^inv t^coinv, by brute force."""
    acc: dict[tuple[int, int], int] = {}
    for tree in enumerate_trees(n):
        i, c, _ = tree_stats(tree)
        acc[(i, c)] = acc.get((i, c), 0) + 1
    return BivariatePoly(acc)


@functools.cache
def depth_enumerator(n: int) -> BivariatePoly:
    """D_n(q) = sum over trees of q^depth (univariate, stored in q)."""
    acc: dict[tuple[int, int], int] = {}
    for tree in enumerate_trees(n):
        _, _, d = tree_stats(tree)
        acc[(d, 0)] = acc.get((d, 0), 0) + 1
    return BivariatePoly(acc)


# -------------------------------------------------------------- text forms


def format_tree(tree: LabelledTree) -> str:
    """Parent-vector CSV like "0:-,1:0,2:1"."""
    cells = ["0:-"]
    cells += [f"{v}:{tree.parent[v]}" for v in range(1, len(tree.parent))]
    return ",".join(cells)


def parse_tree(text: str) -> LabelledTree:
    entries: dict[int, int] = {}
    for cell in text.strip().split(","):
        cell = cell.strip()
        if not cell:
            continue
        vertex_text, _, parent_text = cell.partition(":")
        v = int(vertex_text)
        if v == 0:
            if parent_text.strip() not in ("-", "0", ""):
                raise ValueError("vertex 0 is the root; its parent must be '-'")
            continue
        entries[v] = int(parent_text)
    m = len(entries) + 1
    if sorted(entries) != list(range(1, m)):
        raise ValueError(f"vertices must be exactly 1..{m - 1}: {sorted(entries)}")
    return LabelledTree((0, *(entries[v] for v in range(1, m))))


def tree_to_json(tree: LabelledTree) -> dict:
    return {"n": tree.n, "parent": list(tree.parent[1:])}


def tree_from_json(obj: dict) -> LabelledTree:
    parent = (0, *(int(x) for x in obj["parent"]))
    if len(parent) != int(obj["n"]) + 1:
        raise ValueError("n does not match parent length")
    return LabelledTree(parent)
