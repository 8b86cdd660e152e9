"""Decompositions of the witness and the red/blue/green/black colouring."""
from __future__ import annotations

from dataclasses import dataclass

from ..witness import WitnessSpec
from ..words import Word

COLORS = ("red", "blue", "green", "black")


@dataclass(frozen=True)
class Decomposition:
    """Cut indices ``i1 <= i2 <= i3 <= i4`` splitting z into u v w x y."""

    i1: int
    i2: int
    i3: int
    i4: int

    def __post_init__(self):
        if not 0 <= self.i1 <= self.i2 <= self.i3 <= self.i4:
            raise ValueError(f"cut indices must be non-decreasing and >= 0: {self.cuts}")

    @property
    def cuts(self) -> tuple[int, int, int, int]:
        return (self.i1, self.i2, self.i3, self.i4)

    @property
    def v(self) -> tuple[int, int]:
        return (self.i1, self.i2)

    @property
    def w(self) -> tuple[int, int]:
        return (self.i2, self.i3)

    @property
    def x(self) -> tuple[int, int]:
        return (self.i3, self.i4)

    @property
    def pumped_size(self) -> int:
        return (self.i2 - self.i1) + (self.i4 - self.i3)

    def check_bounds(self, length: int) -> None:
        if self.i4 > length:
            raise ValueError(f"cut {self.i4} beyond word length {length}")

    def parts(self, z: Word) -> tuple[Word, Word, Word, Word, Word]:
        self.check_bounds(len(z))
        a, b, c, d = self.cuts
        return z[:a], z[a:b], z[b:c], z[c:d], z[d:]


@dataclass(frozen=True)
class ColorCounts:
    red: int = 0
    blue: int = 0
    green: int = 0
    black: int = 0

    def __getitem__(self, color: str) -> int:
        return getattr(self, color)

    @property
    def total(self) -> int:
        return self.red + self.blue + self.green + self.black


def _overlap(lo: int, hi: int, region: tuple[int, int]) -> int:
    return max(0, min(hi, region[1]) - max(lo, region[0]))


def color_counts(spec: WitnessSpec, segment: tuple[int, int]) -> ColorCounts:
    lo, hi = segment
    if not 0 <= lo <= hi <= spec.total_length:
        raise ValueError(f"segment {segment} outside [0, {spec.total_length}]")
    regions = spec.regions
    return ColorCounts(**{c: _overlap(lo, hi, regions[c]) for c in COLORS})


def marks(spec: WitnessSpec, segment: tuple[int, int]) -> int:
    """Number of Ogden-marked positions (the first 4n) inside ``segment``."""
    lo, hi = segment
    return max(0, min(hi, spec.red_end) - lo)


def cond_A(spec: WitnessSpec, d: Decomposition) -> bool:
    return marks(spec, d.v) + marks(spec, d.x) > 0


def cond_B(spec: WitnessSpec, d: Decomposition) -> bool:
    return marks(spec, (d.i1, d.i4)) <= spec.n
