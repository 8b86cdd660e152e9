"""Binary words and the run-length combinatorics used by the checker.

Words are plain ``str`` objects over ``"01"``.  Python strings give C-speed
concatenation, slicing and ``count``, which is enough for words of 10^7
symbols.  :func:`to_runs` / :func:`from_runs` provide the run-length view for
callers that want to avoid materializing long repetitions.
"""
from __future__ import annotations

from dataclasses import dataclass
import re
from typing import Iterable, Iterator

Word = str

ALPHABET = frozenset("01")
_RUN = re.compile(r"0+|1+")


def as_word(symbols: str) -> Word:
    """Validate ``symbols`` as a binary word and return it unchanged."""
    if not ALPHABET.issuperset(symbols):
        raise ValueError(f"not a binary word: {symbols[:40]!r}")
    return symbols


def all_words(length: int) -> Iterator[Word]:
    """All binary words of exactly ``length`` symbols, in lexicographic order."""
    if length == 0:
        yield ""
        return
    for code in range(1 << length):
        yield format(code, f"0{length}b")


def words_up_to(max_length: int) -> Iterator[Word]:
    for length in range(max_length + 1):
        yield from all_words(length)


@dataclass(frozen=True)
class ParikhVector:
    zeros: int
    ones: int


def parikh(w: Word) -> ParikhVector:
    ones = w.count("1")
    return ParikhVector(zeros=len(w) - ones, ones=ones)


def is_abelian_square(w: Word) -> bool:
    # binary alphabet: halves are permutations of each other iff their 1-counts match
    if len(w) % 2:
        return False
    half = len(w) // 2
    return w.count("1", 0, half) == w.count("1", half)


@dataclass(frozen=True)
class RunForm:
    """``w = 0^{r0} 1 0^{r1} 1 ... 1 0^{rk}``."""

    zero_runs: tuple[int, ...]

    @property
    def ones_count(self) -> int:
        return len(self.zero_runs) - 1

    def reconstruct(self) -> Word:
        return "1".join("0" * r for r in self.zero_runs)

    def to_json(self) -> dict:
        return {"zeroRuns": list(self.zero_runs), "onesCount": self.ones_count}


def run_form(w: Word) -> RunForm:
    return RunForm(tuple(len(chunk) for chunk in w.split("1")))


def alt(w: Word) -> int:
    """Number of changes between consecutive 0-runs, ignoring the leading run."""
    runs = run_form(w).zero_runs
    return sum(1 for a, b in zip(runs[1:], runs[2:]) if a != b)


def alt_max(words: Iterable[Word]) -> int:
    best = None
    for w in words:
        value = alt(w)
        if best is None or value > best:
            best = value
    if best is None:
        raise ValueError("alt_max of an empty set is undefined")
    return best


def cyclic_run_sequence(w: Word) -> tuple[int, ...]:
    """The sequence (s1 + s_{k+1}, s2, ..., sk) for ``w = 0^{s1} 1 ... 1 0^{s_{k+1}}``."""
    runs = run_form(w).zero_runs
    if len(runs) < 2:
        raise ValueError("word must contain a 1")
    return (runs[0] + runs[-1],) + runs[1:-1]


def is_uneven_sequence(seq: tuple[int, ...]) -> bool:
    if len(seq) <= 1:
        return False
    return any(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq)))


def is_uneven_word(w: Word) -> bool:
    return is_uneven_sequence(cyclic_run_sequence(w))


@dataclass(frozen=True)
class EvenForm:
    """``w = 0^s 1 (0^{s+t} 1)^p 0^t``."""

    s: int
    t: int
    p: int

    def expand(self) -> Word:
        return "0" * self.s + "1" + ("0" * (self.s + self.t) + "1") * self.p + "0" * self.t

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "p": self.p}


def even_form(w: Word) -> EvenForm:
    if is_uneven_word(w):
        raise ValueError(f"word is uneven: {w[:40]!r}")
    runs = run_form(w).zero_runs
    return EvenForm(s=runs[0], t=runs[-1], p=len(runs) - 2)


def power(w: Word, k: int) -> Word:
    if k < 0:
        raise ValueError("negative power")
    return w * k


def to_runs(w: Word) -> list[tuple[str, int]]:
    """Run-length encoding as ``[(symbol, length), ...]``."""
    return [(m.group()[0], m.end() - m.start()) for m in _RUN.finditer(w)]


def from_runs(runs: Iterable[tuple[str, int]]) -> Word:
    return "".join(symbol * length for symbol, length in runs)


def alt_power_violations(max_length: int = 10, max_k: int = 6) -> tuple[int, list[tuple[Word, int]]]:
    """Check ``alt(w^k) >= k - 1`` for every uneven w up to ``max_length``.

    Returns the number of uneven words examined and the failing ``(w, k)`` pairs.
    """
    checked = 0
    failures = []
    for w in words_up_to(max_length):
        if "1" not in w or not is_uneven_word(w):
            continue
        checked += 1
        for k in range(1, max_k + 1):
            if alt(power(w, k)) < k - 1:
                failures.append((w, k))
    return checked, failures
