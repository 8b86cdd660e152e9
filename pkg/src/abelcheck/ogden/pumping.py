"""Pumping ``u v^i w x^i y`` and membership of the result in T.

:func:`pump` materializes the pumped word.  :class:`WitnessIndex` answers the
same membership question from prefix sums over z and a segment tree of
scanner transition maps, so exponents like ``n!`` cost O(log |z| + log i)
instead of building a word of length ``i * |v|``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import Optional

from ..witness import ACCEPT, DEAD, N_STATES, START, WitnessSpec, in_R, step
from ..words import Word, is_abelian_square
from .coloring import Decomposition


class Reason(str, Enum):
    ODD_LENGTH = "OddLength"
    NOT_IN_R = "NotInR"
    ABELIAN_SQUARE = "AbelianSquare"


def pump(z: Word, d: Decomposition, i: int) -> Word:
    if i < 0:
        raise ValueError("pump exponent must be >= 0")
    u, v, w, x, y = d.parts(z)
    return u + v * i + w + x * i + y


def exit_reason(word: Word) -> Optional[Reason]:
    """First failing T-membership check on a materialized word, or None if in T."""
    if len(word) % 2:
        return Reason.ODD_LENGTH
    if not in_R(word):
        return Reason.NOT_IN_R
    if is_abelian_square(word):
        return Reason.ABELIAN_SQUARE
    return None


Map = tuple[int, ...]
IDENTITY: Map = tuple(range(N_STATES))


def _compose(first: Map, then: Map) -> Map:
    return tuple(then[q] for q in first)


def _token_map(run: int) -> Map:
    return tuple(step(q, run) for q in range(N_STATES))


class _MapTree:
    """Segment tree of scanner maps over a token sequence (order preserving)."""

    def __init__(self, tokens: list[int]):
        size = 1
        while size < max(1, len(tokens)):
            size *= 2
        self.size = size
        tree = [IDENTITY] * (2 * size)
        cache: dict[int, Map] = {}
        for j, t in enumerate(tokens):
            if t not in cache:
                cache[t] = _token_map(t)
            tree[size + j] = cache[t]
        for node in range(size - 1, 0, -1):
            tree[node] = _compose(tree[2 * node], tree[2 * node + 1])
        self.tree = tree

    def query(self, lo: int, hi: int) -> Map:
        """Composite map of tokens[lo:hi]."""
        left, right = IDENTITY, IDENTITY
        lo += self.size
        hi += self.size
        tree = self.tree
        while lo < hi:
            if lo & 1:
                left = _compose(left, tree[lo])
                lo += 1
            if hi & 1:
                hi -= 1
                right = _compose(tree[hi], right)
            lo //= 2
            hi //= 2
        return _compose(left, right)


@dataclass(frozen=True)
class Piece:
    """Scanner summary of a factor ``0^{lead} 1 ... 1 0^{trail}`` of z."""

    length: int
    ones: int
    lead: int
    interior: Map
    trail: int


def _apply_map_power(state: int, f: Map, times: int) -> int:
    # orbit of a single state under f enters a cycle within N_STATES steps
    seen: dict[int, int] = {}
    k = 0
    while k < times:
        if state in seen:
            cycle = k - seen[state]
            for _ in range((times - k) % cycle):
                state = f[state]
            return state
        seen[state] = k
        state = f[state]
        k += 1
    return state


class WitnessIndex:
    """Precomputed structure of one witness word for fast pumped membership."""

    def __init__(self, spec: WitnessSpec, z: Optional[Word] = None):
        self.spec = spec
        self.z = spec.word() if z is None else z
        z = self.z
        self.length = len(z)
        self.prefix_ones = [0, *accumulate(1 if ch == "1" else 0 for ch in z)]
        self.one_positions = [j for j, ch in enumerate(z) if ch == "1"]
        pos = self.one_positions
        gaps = [pos[q + 1] - pos[q] - 1 for q in range(len(pos) - 1)]
        self._tree = _MapTree(gaps)

    def ones(self, lo: int, hi: int) -> int:
        return self.prefix_ones[hi] - self.prefix_ones[lo]

    def piece(self, lo: int, hi: int) -> Piece:
        ones = self.ones(lo, hi)
        if ones == 0:
            return Piece(hi - lo, 0, hi - lo, IDENTITY, 0)
        first = self.prefix_ones[lo]
        last = first + ones - 1
        pos = self.one_positions
        return Piece(
            length=hi - lo,
            ones=ones,
            lead=pos[first] - lo,
            interior=self._tree.query(first, last),
            trail=hi - 1 - pos[last],
        )

    def _segments(self, d: Decomposition, i: int) -> list[tuple[int, int, int]]:
        a, b, c, e = d.cuts
        return [(0, a, 1), (a, b, i), (b, c, 1), (c, e, i), (e, self.length, 1)]

    def pumped_length(self, d: Decomposition, i: int) -> int:
        return self.length + (i - 1) * d.pumped_size

    def pumped_in_R(self, d: Decomposition, i: int) -> bool:
        state, pending = START, 0
        for lo, hi, reps in self._segments(d, i):
            if reps == 0 or lo == hi:
                continue
            p = self.piece(lo, hi)
            if p.ones == 0:
                pending += reps * p.length
                continue
            state = p.interior[step(state, pending + p.lead)]
            if reps > 1:
                seam = _compose(_token_map(p.trail + p.lead), p.interior)
                state = _apply_map_power(state, seam, reps - 1)
            pending = p.trail
            if state == DEAD:
                return False
        return step(state, pending) == ACCEPT

    def _prefix_ones(self, d: Decomposition, i: int, length: int) -> int:
        acc = 0
        for lo, hi, reps in self._segments(d, i):
            size = hi - lo
            if size == 0 or reps == 0:
                continue
            if length >= reps * size:
                acc += reps * self.ones(lo, hi)
                length -= reps * size
                continue
            full, rem = divmod(length, size)
            return acc + full * self.ones(lo, hi) + self.ones(lo, lo + rem)
        return acc

    def pumped_is_abelian_square(self, d: Decomposition, i: int) -> bool:
        total = self.pumped_length(d, i)
        if total % 2:
            return False
        ones = self._prefix_ones(d, i, total)
        return 2 * self._prefix_ones(d, i, total // 2) == ones

    def exit_reason(self, d: Decomposition, i: int) -> Optional[Reason]:
        """Same contract as :func:`exit_reason` applied to ``pump(z, d, i)``."""
        if self.pumped_length(d, i) % 2:
            return Reason.ODD_LENGTH
        if not self.pumped_in_R(d, i):
            return Reason.NOT_IN_R
        if self.pumped_is_abelian_square(d, i):
            return Reason.ABELIAN_SQUARE
        return None
