"""Block words, the regular envelope ``R`` and the witness family ``z_n``.

``R = w4* w3 w2* w3 w3*`` with ``w_i = 1 0^{i-1}``.  Every member starts with
a 1 and its 0-runs after each 1 read ``3^a 2 1^b 2 2^c``, so membership and
the exponent triple are decided by a five-state scanner over run lengths.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import cached_property
from math import factorial
from typing import Iterable, Optional

from .words import Word, is_abelian_square, run_form

MAX_N = 12
PROOF_THRESHOLD = 5

# Scanner states over 0-run lengths.  START consumes the leading run (must be 0).
START, FOURS, TWOS_OPEN, THREES_DONE, DEAD = range(5)
ACCEPT = THREES_DONE
N_STATES = 5


def step(state: int, run: int) -> int:
    """Transition of the R scanner on one 0-run length."""
    if state == START:
        return FOURS if run == 0 else DEAD
    if state == FOURS:
        if run == 3:
            return FOURS
        return TWOS_OPEN if run == 2 else DEAD
    if state == TWOS_OPEN:
        if run == 1:
            return TWOS_OPEN
        return THREES_DONE if run == 2 else DEAD
    if state == THREES_DONE:
        return THREES_DONE if run == 2 else DEAD
    return DEAD


def run_scanner(runs: Iterable[int], state: int = START) -> int:
    for r in runs:
        state = step(state, r)
        if state == DEAD:
            break
    return state


def block(i: int) -> Word:
    if i < 2:
        raise ValueError(f"block index must be >= 2, got {i}")
    return "1" + "0" * (i - 1)


W2, W3, W4 = block(2), block(3), block(4)


@dataclass(frozen=True)
class RParse:
    a: int
    b: int
    c: int

    def reconstruct(self) -> Word:
        return W4 * self.a + W3 + W2 * self.b + W3 + W3 * self.c


def r_word(a: int, b: int, c: int) -> Word:
    return RParse(a, b, c).reconstruct()


def parse_R(w: Word) -> Optional[RParse]:
    runs = run_form(w).zero_runs
    if runs[0] != 0:
        return None
    counts = {FOURS: 0, TWOS_OPEN: 0, THREES_DONE: -1}
    state = FOURS
    for r in runs[1:]:
        state = step(state, r)
        if state == DEAD:
            return None
        counts[state] += 1
    if state != ACCEPT:
        return None
    # the transitions into TWOS_OPEN / THREES_DONE consume the two mandatory w3
    return RParse(a=counts[FOURS], b=counts[TWOS_OPEN] - 1, c=counts[THREES_DONE])


def in_R(w: Word) -> bool:
    return parse_R(w) is not None


def in_T(w: Word) -> bool:
    return len(w) % 2 == 0 and in_R(w) and not is_abelian_square(w)


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")


@dataclass(frozen=True)
class WitnessSpec:
    """Shape of ``z_n = w4^n w3 w2^{n!+n} w3 w3^{2(n!+n)}`` and its colour regions.

    ``green_count`` and ``black_count`` are block counts (w2 blocks, trailing
    w3 blocks).  The region boundaries are symbol offsets.
    """

    n: int

    def __post_init__(self):
        _check_n(self.n)

    @cached_property
    def green_count(self) -> int:
        return factorial(self.n) + self.n

    @cached_property
    def black_count(self) -> int:
        return 2 * self.green_count

    @cached_property
    def red_end(self) -> int:
        return 4 * self.n

    @cached_property
    def blue_end(self) -> int:
        return self.red_end + 3

    @cached_property
    def green_end(self) -> int:
        return self.blue_end + 2 * self.green_count

    @cached_property
    def total_length(self) -> int:
        return self.green_end + 3 + 3 * self.black_count

    @cached_property
    def regions(self) -> dict[str, tuple[int, int]]:
        return {
            "red": (0, self.red_end),
            "blue": (self.red_end, self.blue_end),
            "green": (self.blue_end, self.green_end),
            "black": (self.green_end, self.total_length),
        }

    @cached_property
    def sub_threshold(self) -> bool:
        return self.n < PROOF_THRESHOLD

    def word(self) -> Word:
        return build_witness(self.n)


def build_witness(n: int) -> Word:
    _check_n(n)
    g = factorial(n) + n
    return W4 * n + W3 + W2 * g + W3 + W3 * (2 * g)


@dataclass(frozen=True)
class Lemma3Report:
    n: int
    totalOnes: int
    formulaTotalOnes: int
    secondHalfOnes: int
    formulaSecondHalfOnes: int
    halfOfTotal: float
    isAbelianSquare: bool
    inT: bool
    subThresholdWarning: bool

    @property
    def ok(self) -> bool:
        return (
            self.totalOnes == self.formulaTotalOnes
            and self.secondHalfOnes == self.formulaSecondHalfOnes
            and self.secondHalfOnes != self.halfOfTotal
            and self.inT
            and not self.isAbelianSquare
        )

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def lemma3_report(n: int) -> Lemma3Report:
    if n < 3:
        raise ValueError("the closed forms need 3 | 4*n!, i.e. n >= 3")
    z = build_witness(n)
    total = z.count("1")
    second = z.count("1", len(z) // 2)
    f = factorial(n)
    return Lemma3Report(
        n=n,
        totalOnes=total,
        formulaTotalOnes=3 * f + 4 * n + 2,
        secondHalfOnes=second,
        formulaSecondHalfOnes=4 * f // 3 + 2 * n + 1,
        halfOfTotal=total / 2,
        isAbelianSquare=is_abelian_square(z),
        inT=in_T(z),
        subThresholdWarning=n < PROOF_THRESHOLD,
    )
