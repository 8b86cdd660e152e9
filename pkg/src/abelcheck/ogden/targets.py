"""Hand-placed decompositions that land on each leaf of the case tree.

Offsets are relative to the colour boundaries of z_n: ``r`` = end of red
(4n), ``g`` = start of green (4n + 3), ``k`` = start of black.  Candidates
that violate condition A or B for the given n are dropped.
"""
from __future__ import annotations

from ..witness import WitnessSpec
from . import cases as C
from .coloring import Decomposition, cond_A, cond_B


def _single(v_lo: int, v_hi: int) -> tuple[int, int, int, int]:
    return (v_lo, v_hi, v_hi, v_hi)


def _candidates(spec: WitnessSpec) -> list[tuple[tuple[int, int, int, int], str]]:
    r, g, k = spec.red_end, spec.blue_end, spec.green_end
    v4 = (r - 4, r)  # last red w4 block
    out = [
        (_single(r - 3, r - 1), C.I_ZEROS),
        (_single(r - 1, r), C.I_ZEROS),
        ((r - 2, r - 2, r - 2, r - 1), C.I_ZEROS),  # v empty, x = "0"
        (_single(r - 8, r - 3), C.I_UNEVEN),  # 10001
        (_single(r - 4, r + 3), C.I_UNEVEN),  # 1000100
        (_single(r - 1, r + 5), C.I_GREEN_IN_V),  # 010010
        (_single(r - 4, r - 3), C.I_K_PLUS_S_NOT_3),  # 1
        (_single(r - 4, r - 2), C.I_K_PLUS_S_NOT_3),  # 10
        (_single(r - 1, r + 3), C.I_PUMP),  # 0100 across red/blue
        ((r - 4, r - 4, r - 4, r), C.I_PUMP),  # v empty, x = w4
        ((r - 1, r, r, r + 1), C.II_ZEROS),
        ((r - 4, r - 3, r, r + 4), C.II_UNEVEN),  # v = 1, x = 1001
        ((r - 5, r - 1, r - 1, r + 3), C.II_BOTH_MARKED),  # 0100 . 0100
        ((*v4, r + 1, r + 4), C.II_BLUE2_EPS),
        ((*v4, r + 1, r + 5), C.II_BLUE2_ZERO),
        ((*v4, r + 2, r + 5), C.II_BLUE1_010),
        ((*v4, r + 2, k + 1), C.II_BLUE1_01L),  # runs into black
        ((*v4, g + 1, g + 4), C.II_BLUE0_GREEN_MANY),  # 010
        ((*v4, k - 1, k + 2), C.II_BLUE0_GREEN_1),
    ]
    for j in range(4):
        out.append((_single(r - 4 - j, r - j), C.I_PUMP))
    for p in range(1, spec.n // 4):
        out.append((_single(r - 4 * (p + 1), r), C.I_PUMP))
    for l in range(1, 5):
        out.append(((*v4, r + 2, r + 2 + 2 * l), C.II_BLUE1_01L))
        out.append(((*v4, g, g + 2 * l), C.II_BLUE0_GREEN_MANY))
        out.append(((*v4, g + 1, g + 1 + 2 * l), C.II_BLUE0_GREEN_MANY))
    for e in range(3):
        out.append(((*v4, k - 1, k + 2 + 3 * e), C.II_BLUE0_GREEN_1))
        out.append(((*v4, k + 3 * e, k + 3 * e + 3), C.II_BLACK))  # 100
        out.append(((*v4, k, k + 3 * (e + 1)), C.II_BLACK))  # (100)^{e+1}
    out.append(((*v4, k + 1, k + 4), C.II_BLACK))  # 001
    out.append(((*v4, k + 2, k + 5), C.II_BLACK))  # 010
    for hi in (r + 1, r + 2, r + 3):
        out.append(((*v4, r, hi), C.II_BLUE_ONLY))
    return out


def case_targeted(spec: WitnessSpec) -> list[tuple[Decomposition, str]]:
    """(decomposition, intended leaf) pairs satisfying conditions A and B."""
    seen = set()
    out = []
    for cuts, leaf in _candidates(spec):
        if cuts in seen or min(cuts) < 0 or max(cuts) > spec.total_length:
            continue
        seen.add(cuts)
        d = Decomposition(*cuts)
        if cond_A(spec, d) and cond_B(spec, d):
            out.append((d, leaf))
    return out


def unmarked_v_example(spec: WitnessSpec) -> Decomposition:
    """Both parts even and outside the red region: the leaf that breaks condition A."""
    g = spec.blue_end
    return Decomposition(g, g + 2, g + 2, g + 4)
