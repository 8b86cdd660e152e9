"""Refuting decompositions and sweeping families of them."""
from __future__ import annotations

import logging
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator, Optional, Sequence, Union

from ..witness import WitnessSpec
from ..words import alt_max
from .cases import CaseLabel, classify, prescribed_i
from .coloring import Decomposition, cond_A, cond_B
from .pumping import Reason, WitnessIndex
from .targets import case_targeted

log = logging.getLogger(__name__)

PAPER_ALT_R = 4


@dataclass(frozen=True)
class SearchConfig:
    max_small_i: int = 8
    # q ranges over 1..factorial_q_factor * n when trying n!/q and n!/q + 1
    factorial_q_factor: int = 2


@dataclass(frozen=True)
class Refutation:
    pump_exponent: int
    reason: Reason
    pumped_length: int
    via_prescribed: bool

    def to_json(self) -> dict:
        return {
            "pumpExponent": self.pump_exponent,
            "reason": self.reason.value,
            "pumpedLength": self.pumped_length,
            "viaPrescribed": self.via_prescribed,
        }


def candidate_exponents(label: CaseLabel, n: int, cfg: SearchConfig) -> list[int]:
    """Search order: prescribed, 0 and small i, n!/q, then n!/q + 1."""
    f = factorial(n)
    qs = [q for q in range(1, cfg.factorial_q_factor * n + 1) if f % q == 0]
    ordered = [prescribed_i(label, n), 0]
    ordered += range(2, cfg.max_small_i + 1)
    ordered += [f // q for q in qs]
    ordered += [f // q + 1 for q in qs]
    seen: dict[int, None] = {}
    for i in ordered:
        if i is not None and i != 1:
            seen.setdefault(i, None)
    return list(seen)


def refute(
    index: WitnessIndex,
    d: Decomposition,
    cfg: SearchConfig = SearchConfig(),
    label: Optional[CaseLabel] = None,
) -> Optional[Refutation]:
    """Find a pump exponent that drives the pumped word out of T.

    Every candidate is checked by membership on the pumped word; the case
    label only orders the search.
    """
    spec = index.spec
    d.check_bounds(index.length)
    if not (cond_A(spec, d) and cond_B(spec, d)):
        raise ValueError(f"decomposition {d.cuts} violates condition A or B")
    if label is None:
        label = classify(spec, d, index.z)
    prescribed = prescribed_i(label, spec.n)
    for i in candidate_exponents(label, spec.n, cfg):
        reason = index.exit_reason(d, i)
        if reason is not None:
            return Refutation(i, reason, index.pumped_length(d, i), i == prescribed)
    return None


# -- enumeration strategies -------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveWindow:
    width: int

    def describe(self) -> dict:
        return {"kind": "exhaustive-window", "window": self.width}


@dataclass(frozen=True)
class RandomSample:
    seed: int
    count: int

    def describe(self) -> dict:
        return {"kind": "random", "seed": self.seed, "count": self.count}


@dataclass(frozen=True)
class CaseTargeted:
    def describe(self) -> dict:
        return {"kind": "case-targeted"}


Strategy = Union[ExhaustiveWindow, RandomSample, CaseTargeted]


def _max_i4_for_B(spec: WitnessSpec, i1: int) -> int:
    # red count of [i1, i4) is min(i4, 4n) - i1 for i1 < 4n
    if i1 + spec.n >= spec.red_end:
        return spec.total_length
    return i1 + spec.n


def exhaustive_window(spec: WitnessSpec, width: int) -> Iterator[Decomposition]:
    """All A∧B quadruples with i4 - i1 <= width, in lexicographic order."""
    red_end, length = spec.red_end, spec.total_length
    # A∧B needs a marked bit, so i1 < 4n; then v is marked iff it is non-empty
    for i1 in range(red_end):
        top = min(length, i1 + width, _max_i4_for_B(spec, i1))
        for i2 in range(i1, top + 1):
            for i3 in range(i2, top + 1):
                if i2 > i1:
                    first_i4 = i3
                elif i3 < red_end:
                    first_i4 = i3 + 1
                else:
                    break
                for i4 in range(first_i4, top + 1):
                    yield Decomposition(i1, i2, i3, i4)


def window_total(spec: WitnessSpec, width: int) -> int:
    """Number of all quadruples with span <= width, ignoring A and B."""
    length = spec.total_length
    return sum(comb(min(width, length - i1) + 3, 3) for i1 in range(length + 1))


class _Sampler:
    def __init__(self, spec: WitnessSpec, seed: int):
        self.spec = spec
        self.rng = random.Random(seed)
        self.rejected = 0

    def draw(self) -> Decomposition:
        spec, rng = self.spec, self.rng
        length = spec.total_length
        while True:
            i1 = rng.randrange(spec.red_end)
            if rng.random() < 0.5:
                i4 = rng.randint(i1, length)
            else:
                i4 = min(length, i1 + rng.randint(0, 3 * spec.n))
            i2, i3 = sorted((rng.randint(i1, i4), rng.randint(i1, i4)))
            d = Decomposition(i1, i2, i3, i4)
            if d.pumped_size and cond_A(spec, d) and cond_B(spec, d):
                return d
            self.rejected += 1


def random_sample(spec: WitnessSpec, seed: int, count: int) -> tuple[list[Decomposition], int]:
    """``count`` seeded A∧B decompositions and the number of rejected draws.

    i1 is drawn inside the red region; half of the draws take a short span so
    that both short and long (green/black reaching) decompositions appear.
    """
    sampler = _Sampler(spec, seed)
    out = [sampler.draw() for _ in range(count)]
    return out, sampler.rejected


def decompositions(spec: WitnessSpec, strategy: Strategy) -> Iterator[Decomposition]:
    if isinstance(strategy, ExhaustiveWindow):
        return exhaustive_window(spec, strategy.width)
    if isinstance(strategy, RandomSample):
        return iter(random_sample(spec, strategy.seed, strategy.count)[0])
    if isinstance(strategy, CaseTargeted):
        return (d for d, _ in case_targeted(spec))
    raise TypeError(f"unknown strategy {strategy!r}")


# -- verification sweep -----------------------------------------------------


@dataclass
class _Tally:
    checked: int = 0
    per_leaf: dict = field(default_factory=dict)
    i_hist: Counter = field(default_factory=Counter)
    reason_hist: Counter = field(default_factory=Counter)
    unrefuted: list = field(default_factory=list)

    def add(self, d: Decomposition, label: CaseLabel, ref: Optional[Refutation]) -> None:
        self.checked += 1
        leaf = self.per_leaf.setdefault(
            label.leaf, {"count": 0, "prescribedSuccess": 0, "fallbackSuccess": 0}
        )
        leaf["count"] += 1
        if ref is None:
            self.unrefuted.append(list(d.cuts))
            return
        leaf["prescribedSuccess" if ref.via_prescribed else "fallbackSuccess"] += 1
        self.i_hist[ref.pump_exponent] += 1
        self.reason_hist[ref.reason.value] += 1

    def merge(self, other: "_Tally") -> None:
        self.checked += other.checked
        for leaf, stats in other.per_leaf.items():
            mine = self.per_leaf.setdefault(
                leaf, {"count": 0, "prescribedSuccess": 0, "fallbackSuccess": 0}
            )
            for key, value in stats.items():
                mine[key] += value
        self.i_hist.update(other.i_hist)
        self.reason_hist.update(other.reason_hist)
        self.unrefuted.extend(other.unrefuted)


_WORKER_INDEX: Optional[WitnessIndex] = None


def _init_worker(n: int) -> None:
    global _WORKER_INDEX
    _WORKER_INDEX = WitnessIndex(WitnessSpec(n))


def _check_chunk(args: tuple[int, list[tuple[int, int, int, int]], SearchConfig]) -> _Tally:
    n, cuts, cfg = args
    index = _WORKER_INDEX if _WORKER_INDEX is not None and _WORKER_INDEX.spec.n == n else None
    if index is None:
        index = WitnessIndex(WitnessSpec(n))
    tally = _Tally()
    for c in cuts:
        d = Decomposition(*c)
        label = classify(index.spec, d, index.z)
        tally.add(d, label, refute(index, d, cfg, label))
    return tally


def _chunks(items: Sequence, size: int) -> Iterator[Sequence]:
    for start in range(0, len(items), size):
        yield items[start : start + size]


def alt_bound(max_exponent: int = 4) -> dict:
    from ..witness import r_word

    family = (
        r_word(a, b, c)
        for a in range(max_exponent + 1)
        for b in range(max_exponent + 1)
        for c in range(max_exponent + 1)
    )
    computed = alt_max(family)
    return {
        "computedAltR": computed,
        "paperStatedAltR": PAPER_ALT_R,
        "discrepancy": computed != PAPER_ALT_R,
        "maxExponent": max_exponent,
    }


def verify_theorem_instance(
    n: int,
    strategies: Sequence[Strategy],
    cfg: SearchConfig = SearchConfig(),
    workers: int = 1,
    chunk_size: int = 5000,
) -> dict:
    """Refute every decomposition produced by ``strategies`` for z_n.

    The report layout does not depend on ``workers``: chunks are processed
    in stream order and merged in that order.
    """
    started = time.perf_counter()
    spec = WitnessSpec(n)
    if spec.sub_threshold:
        log.warning("n=%d is below the proof threshold n > 4", n)
    index = WitnessIndex(spec)
    total = _Tally()
    skipped = 0
    seeds = []
    for strategy in strategies:
        if isinstance(strategy, RandomSample):
            decomps, rejected = random_sample(spec, strategy.seed, strategy.count)
            skipped += rejected
            seeds.append(strategy.seed)
        else:
            decomps = list(decompositions(spec, strategy))
            if isinstance(strategy, ExhaustiveWindow):
                skipped += window_total(spec, strategy.width) - len(decomps)
        cuts = [d.cuts for d in decomps]
        jobs = [(n, list(chunk), cfg) for chunk in _chunks(cuts, chunk_size)]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(n,)) as pool:
                results = list(pool.map(_check_chunk, jobs))
        else:
            global _WORKER_INDEX
            _WORKER_INDEX = index
            results = [_check_chunk(job) for job in jobs]
        for tally in results:
            total.merge(tally)

    return {
        "n": n,
        "strategies": [s.describe() for s in strategies],
        "checked": total.checked,
        "skippedViolatingAB": skipped,
        "perLeaf": {leaf: total.per_leaf[leaf] for leaf in sorted(total.per_leaf)},
        "iHistogram": {str(i): total.i_hist[i] for i in sorted(total.i_hist)},
        "reasonHistogram": {r: total.reason_hist[r] for r in sorted(total.reason_hist)},
        "unrefuted": total.unrefuted,
        "seed": seeds[0] if len(seeds) == 1 else (seeds or None),
        "altBound": alt_bound(),
        "maxSmallI": cfg.max_small_i,
        "wallTimeMs": round((time.perf_counter() - started) * 1000),
        "subThresholdWarning": spec.sub_threshold,
    }
