"""Case tree for decompositions of the witness and the proof's pump exponents."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Optional

from ..witness import WitnessSpec
from ..words import Word, even_form, is_uneven_word
from .coloring import ColorCounts, Decomposition, color_counts

I_ZEROS = "I.i"
I_UNEVEN = "I.ii"
I_GREEN_IN_V = "I.iii.greenInV"
I_K_PLUS_S_NOT_3 = "I.iii.kPlusSNot3"
I_PUMP = "I.iii.pump"
II_ZEROS = "II.i"
II_UNEVEN = "II.ii"
II_V_UNMARKED = "II.iii.i"
II_BOTH_MARKED = "II.iii.ii.i"
II_BLUE2_EPS = "II.iii.ii.ii.blue2-eps"
II_BLUE2_ZERO = "II.iii.ii.ii.blue2-zero"
II_BLUE1_010 = "II.iii.ii.ii.blue1-010"
II_BLUE1_01L = "II.iii.ii.ii.blue1-01l"
II_BLUE0_GREEN_MANY = "II.iii.ii.ii.blue0-greenMany"
II_BLUE0_GREEN_1 = "II.iii.ii.ii.blue0-green1"
II_BLACK = "II.iii.ii.iii"
# x lies inside the blue w3; the listed subcases never mention it
II_BLUE_ONLY = "II.iii.ii.blueOnly"

LEAVES = (
    I_ZEROS,
    I_UNEVEN,
    I_GREEN_IN_V,
    I_K_PLUS_S_NOT_3,
    I_PUMP,
    II_ZEROS,
    II_UNEVEN,
    II_V_UNMARKED,
    II_BOTH_MARKED,
    II_BLUE2_EPS,
    II_BLUE2_ZERO,
    II_BLUE1_010,
    II_BLUE1_01L,
    II_BLUE0_GREEN_MANY,
    II_BLUE0_GREEN_1,
    II_BLACK,
    II_BLUE_ONLY,
)

# leaves whose refutation balances the halves with an exponent of the form n!/q
FACTORIAL_LEAVES = frozenset(
    {I_PUMP, II_BOTH_MARKED, II_BLUE1_01L, II_BLUE0_GREEN_MANY, II_BLUE0_GREEN_1, II_BLACK}
)


class UnreachableCase(RuntimeError):
    pass


@dataclass(frozen=True)
class CaseLabel:
    leaf: str
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.leaf not in LEAVES:
            raise ValueError(f"unknown leaf {self.leaf!r}")

    def get(self, name: str) -> Optional[int]:
        return self.params.get(name)

    def to_json(self) -> dict:
        return {"leaf": self.leaf, "params": dict(self.params)}


def _alternating_repeat(x: Word) -> Optional[int]:
    """l when x is (01)^l or (10)^l, else None."""
    if len(x) < 2 or len(x) % 2:
        return None
    l = len(x) // 2
    if x == "01" * l or x == "10" * l:
        return l
    return None


def _v_params(v: Word) -> dict:
    f = even_form(v)
    return {"k": f.s, "s": f.t, "p": f.p}


def _x_params(x: Word) -> dict:
    f = even_form(x)
    return {"c": f.s, "d": f.t, "e": f.p}


def _classify_single(spec: WitnessSpec, v: Word, span: tuple[int, int]) -> CaseLabel:
    if "1" not in v:
        return CaseLabel(I_ZEROS)
    if is_uneven_word(v):
        return CaseLabel(I_UNEVEN)
    params = _v_params(v)
    if color_counts(spec, span).green > 0:
        return CaseLabel(I_GREEN_IN_V, params)
    if params["k"] + params["s"] != 3:
        return CaseLabel(I_K_PLUS_S_NOT_3, params)
    return CaseLabel(I_PUMP, params)


def _classify_green_x(cx: ColorCounts, x: Word, params: dict) -> CaseLabel:
    if cx.blue == 3:
        raise UnreachableCase("x covering the whole blue w3 and some green is never even")
    if cx.blue == 2:
        if x == "001":
            return CaseLabel(II_BLUE2_EPS, params)
        if x == "0010":
            return CaseLabel(II_BLUE2_ZERO, params)
        raise UnreachableCase(f"even x with two blue bits must be 001 or 0010, got {x!r}")
    l = _alternating_repeat(x)
    if cx.blue == 1:
        if x == "010":
            return CaseLabel(II_BLUE1_010, params)
        return CaseLabel(II_BLUE1_01L, {**params, "l": l} if l else params)
    if cx.green > 1:
        return CaseLabel(II_BLUE0_GREEN_MANY, {**params, "l": l} if l else params)
    return CaseLabel(II_BLUE0_GREEN_1, params)


def classify(spec: WitnessSpec, d: Decomposition, z: Optional[Word] = None) -> CaseLabel:
    """Place a decomposition of z_n at exactly one leaf of the case tree."""
    if z is None:
        z = spec.word()
    d.check_bounds(len(z))
    v = z[d.i1 : d.i2]
    x = z[d.i3 : d.i4]
    if not v and not x:
        raise ValueError("v and x are both empty")
    if not x:
        return _classify_single(spec, v, d.v)
    if not v:
        return _classify_single(spec, x, d.x)

    if "1" not in v or "1" not in x:
        return CaseLabel(II_ZEROS)
    if is_uneven_word(v) or is_uneven_word(x):
        return CaseLabel(II_UNEVEN)
    params = {**_v_params(v), **_x_params(x)}
    cv = color_counts(spec, d.v)
    if cv.red == 0:
        return CaseLabel(II_V_UNMARKED, params)
    cx = color_counts(spec, d.x)
    if cx.red > 0:
        return CaseLabel(II_BOTH_MARKED, params)
    if cx.green > 0:
        return _classify_green_x(cx, x, params)
    if cx.black > 0:
        return CaseLabel(II_BLACK, params)
    return CaseLabel(II_BLUE_ONLY, params)


def _exact_quotient(num: int, den: int) -> Optional[int]:
    if den <= 0 or num % den:
        return None
    return num // den


def prescribed_i(label: CaseLabel, n: int) -> Optional[int]:
    """The exponent the proof picks for this leaf, when defined and integral."""
    leaf = label.leaf
    if leaf in (I_ZEROS, II_ZEROS):
        return 4
    if leaf in (I_UNEVEN, II_UNEVEN):
        return 6
    if leaf in (I_GREEN_IN_V, I_K_PLUS_S_NOT_3, II_BLUE2_EPS, II_BLUE2_ZERO, II_BLUE1_010, II_BLUE_ONLY):
        return 2
    if leaf == II_V_UNMARKED:
        return None
    p = label.get("p")
    if p is None:
        return None
    if leaf == II_BOTH_MARKED:
        return _exact_quotient(factorial(n), 2 + p + label.get("e"))
    return _exact_quotient(factorial(n), 1 + p)


def balancing_i(label: CaseLabel, n: int) -> Optional[int]:
    """Exponent that adds exactly n! red w4 blocks: one more than the proof's choice.

    Pumping with exponent i inserts i - 1 extra copies of v and x, so the
    balancing exponents are n!/(1+p) + 1 and n!/(2+p+e) + 1.
    """
    if label.leaf not in FACTORIAL_LEAVES:
        return None
    base = prescribed_i(label, n)
    return None if base is None else base + 1
