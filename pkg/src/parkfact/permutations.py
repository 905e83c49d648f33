"""Permutations of [n] = {0, ..., n} with left-to-right multiplication.

The composition convention throughout the library is left to right:
``compose(a, b)`` maps i to b(a(i)), and ``a * b`` means the same thing.
Transpositions are normalized with lo < hi, and full cycles are kept in
word-of-visit form (0, s_1, ..., s_n) because unimodality and contiguity
are properties of the word, not of the underlying function.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace
from itertools import permutations as _itertools_permutations
from typing import Iterator, Union


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection on [n], stored in one-line image form."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection on [n]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images) - 1

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        images = list(range(n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 0 <= x <= n:
                    raise ValueError(f"cycle entry {x} outside [0, {n}]")
                if x in seen:
                    raise ValueError(f"entry {x} repeated across cycles")
                seen.add(x)
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Cycle view: each cycle rotated to start at its minimum, cycles
        sorted by minimum.  Fixed points suppressed unless requested."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def num_cycles(self) -> int:
        """Cycle count including fixed points."""
        return len(self.cycles(include_fixed=True))

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True, slots=True, order=True)
class Transposition:
    """An unordered pair written with lo < hi."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError(f"transposition needs 0 <= lo < hi, got ({self.lo}, {self.hi})")

    @classmethod
    def of(cls, a: int, b: int) -> "Transposition":
        """Normalized constructor, accepting the pair in either order."""
        return cls(a, b) if a < b else cls(b, a)

    def apply(self, x: int) -> int:
        if x == self.lo:
            return self.hi
        if x == self.hi:
            return self.lo
        return x

    def to_permutation(self, n: int) -> Permutation:
        if self.hi > n:
            raise ValueError(f"transposition {self} exceeds ground set [0, {n}]")
        return Permutation.from_cycles([(self.lo, self.hi)], n)

    def __str__(self) -> str:
        return f"({self.lo} {self.hi})"


@dataclass(frozen=True, slots=True)
class FullCycle:
    """A single (n+1)-cycle kept as its visit word (0, s_1, ..., s_n)."""

    word: tuple[int, ...]

    def __post_init__(self):
        if not self.word or self.word[0] != 0:
            raise ValueError(f"full-cycle word must begin with 0: {self.word}")
        if sorted(self.word) != list(range(len(self.word))):
            raise ValueError(f"not a permutation of [n]: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word) - 1

    @classmethod
    def canonical(cls, n: int) -> "FullCycle":
        """The cycle (0 1 ... n)."""
        return cls(tuple(range(n + 1)))

    @classmethod
    def from_permutation(cls, perm: Permutation) -> "FullCycle":
        word = [0]
        x = perm(0)
        while x != 0:
            word.append(x)
            x = perm(x)
        if len(word) != len(perm.images):
            raise ValueError("permutation is not a single full cycle")
        return cls(tuple(word))

    def to_permutation(self) -> Permutation:
        images = [0] * len(self.word)
        for i, s in enumerate(self.word):
            images[s] = self.word[(i + 1) % len(self.word)]
        return Permutation(tuple(images))

    def positions(self) -> dict[int, int]:
        """Map from vertex to its index in the word."""
        return {v: i for i, v in enumerate(self.word)}

    def __str__(self) -> str:
        return "(" + " ".join(str(v) for v in self.word) + ")"


# ------------------------------------------------------------- operations


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: the result maps i to b(a(i))."""
    if len(a.images) != len(b.images):
        raise ValueError(f"size mismatch: [{a.n}] vs [{b.n}]")
    return Permutation(tuple(b.images[x] for x in a.images))


def is_unimodal(sigma: FullCycle) -> bool:
    """True iff the visit word rises strictly to n and then falls strictly."""
    word = sigma.word
    peak = word.index(sigma.n)
    rises = all(word[i] < word[i + 1] for i in range(peak))
    falls = all(word[i] > word[i + 1] for i in range(peak, len(word) - 1))
    return rises and falls


def unimodal_cycles(n: int) -> Iterator[FullCycle]:
    """All 2^(n-1) unimodal full cycles, by choice of the ascent set.

    The subset S of [1, n-1] placed on the rising side determines the
    cycle (0, sorted(S), n, rest descending); masks are scanned in
    ascending order, so the stream is deterministic.
    """
    if n < 1:
        raise ValueError("unimodal_cycles requires n >= 1")
    interior = list(range(1, n))
    for mask in range(1 << (n - 1)):
        ascent = [v for i, v in enumerate(interior) if mask >> i & 1]
        descent = [v for i, v in enumerate(interior) if not mask >> i & 1]
        yield FullCycle((0, *ascent, n, *reversed(descent)))


def full_cycles(n: int) -> Iterator[FullCycle]:
    """All n! full cycles on [n], in lexicographic word order."""
    for rest in _itertools_permutations(range(1, n + 1)):
        yield FullCycle((0, *rest))


def is_sigma_contiguous(pi: Permutation, sigma: FullCycle) -> bool:
    """True iff every cycle of pi is a window of sigma's word, traversed
    in word order.  Fixed points are length-1 windows."""
    if pi.n != sigma.n:
        raise ValueError(f"size mismatch: [{pi.n}] vs [{sigma.n}]")
    word = sigma.word
    pos = sigma.positions()
    for cycle in pi.cycles():
        indices = sorted(pos[x] for x in cycle)
        lo, hi = indices[0], indices[-1]
        if hi - lo + 1 != len(indices):
            return False
        for k in range(lo, hi):
            if pi(word[k]) != word[k + 1]:
                return False
        if pi(word[hi]) != word[lo]:
            return False
    return True


class FactorKind(enum.Enum):
    CUT = "cut"
    JOIN = "join"


def classify_factor(rho: Permutation, tau: Transposition) -> FactorKind:
    """JOIN if tau's endpoints lie in distinct cycles of rho, CUT otherwise.

    Multiplying rho by tau merges two cycles (join) or splits one (cut),
    so the cycle count of rho * tau differs from rho's by exactly one.
    """
    if tau.hi > rho.n:
        raise ValueError(f"transposition {tau} exceeds ground set [0, {rho.n}]")
    x = rho(tau.lo)
    while x != tau.lo:
        if x == tau.hi:
            return FactorKind.CUT
        x = rho(x)
    return FactorKind.JOIN


def _gamma(x: int, n: int) -> int:
    return n - x


def reflect_conjugate(value, n: int | None = None):
    """Conjugation by the order-reversing involution i -> n - i.

    Transpositions map endpoint-wise (n is required); full cycles map to
    the conjugated cycle re-rooted at 0; factorizations map factor-wise,
    carrying F_sigma onto F_(gamma sigma gamma).
    """
    if isinstance(value, Transposition):
        if n is None:
            raise ValueError("reflect_conjugate of a transposition needs n")
        if value.hi > n:
            raise ValueError(f"transposition {value} exceeds ground set [0, {n}]")
        return Transposition.of(_gamma(value.lo, n), _gamma(value.hi, n))
    if isinstance(value, FullCycle):
        if n is not None and n != value.n:
            raise ValueError(f"size mismatch: [{value.n}] vs [{n}]")
        m = value.n
        flipped = tuple(_gamma(v, m) for v in value.word)
        zero_at = flipped.index(0)
        return FullCycle(flipped[zero_at:] + flipped[:zero_at])
    factors = getattr(value, "factors", None)
    if factors is not None:
        m = value.n
        if n is not None and n != m:
            raise ValueError(f"size mismatch: [{m}] vs [{n}]")
        return replace(
            value, factors=tuple(reflect_conjugate(t, m) for t in factors)
        )
    raise TypeError(f"cannot reflect a {type(value).__name__}")


def reflect_reverse(factorization):
    """Conjugate every factor by i -> n - i, then reverse factor order.

    This is the involution on F_n that exchanges the lower and upper
    sequences up to complement-reverse.
    """
    factors = getattr(factorization, "factors", None)
    if factors is None:
        raise TypeError("reflect_reverse expects a factorization")
    m = factorization.n
    return replace(
        factorization,
        factors=tuple(reflect_conjugate(t, m) for t in reversed(factors)),
    )


# ------------------------------------------------------------ text forms

_CYCLE_GROUP = re.compile(r"\(([^()]*)\)")


def _parse_groups(text: str) -> list[list[int]]:
    stripped = text.strip()
    if not stripped:
        return []
    if "(" not in stripped:
        return [[int(x) for x in re.split(r"[,\s]+", stripped) if x]]
    groups = []
    consumed = _CYCLE_GROUP.sub("", stripped)
    if consumed.strip():
        raise ValueError(f"stray text outside cycle groups: {text!r}")
    for body in _CYCLE_GROUP.findall(stripped):
        entries = [int(x) for x in re.split(r"[,\s]+", body.strip()) if x]
        groups.append(entries)
    return groups


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse cycle notation like "(0 2 3)(5 6)"; whitespace tolerant."""
    cycles = [g for g in _parse_groups(text) if g]
    return Permutation.from_cycles(cycles, n)


def format_permutation(perm: Permutation) -> str:
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def parse_full_cycle(text: str) -> FullCycle:
    """Parse a visit word like "0 2 3 5 6 4 1" (parens and commas allowed).

    The leading 0 is required; rotated spellings are rejected so that the
    wire format stays unambiguous.
    """
    groups = _parse_groups(text)
    if len(groups) != 1:
        raise ValueError(f"expected a single cycle word, got {text!r}")
    return FullCycle(tuple(groups[0]))


def parse_transposition(text: str) -> Transposition:
    groups = _parse_groups(text)
    if len(groups) != 1 or len(groups[0]) != 2:
        raise ValueError(f"expected one pair, got {text!r}")
    a, b = groups[0]
    return Transposition.of(a, b)


PermLike = Union[Permutation, Transposition, FullCycle]
