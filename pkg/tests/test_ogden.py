import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcheck.ogden import (
    LEAVES,
    CaseLabel,
    CaseTargeted,
    ColorCounts,
    Decomposition,
    ExhaustiveWindow,
    RandomSample,
    Reason,
    SearchConfig,
    UnreachableCase,
    WitnessIndex,
    alt_bound,
    balancing_i,
    candidate_exponents,
    case_targeted,
    classify,
    color_counts,
    cond_A,
    cond_B,
    decompositions,
    exhaustive_window,
    exit_reason,
    marks,
    prescribed_i,
    pump,
    random_sample,
    refute,
    unmarked_v_example,
    verify_theorem_instance,
    window_total,
)
from abelcheck.ogden import cases as C
from abelcheck.witness import WitnessSpec, build_witness, in_T, parse_R, r_word
from abelcheck.words import alt, is_abelian_square, is_uneven_word, power

from oracles import ab_quadruples_bruteforce, marked_in


@pytest.fixture(scope="module")
def spec5():
    return WitnessSpec(5)


@pytest.fixture(scope="module")
def index5(spec5):
    return WitnessIndex(spec5)


@pytest.fixture(scope="module")
def z5(index5):
    return index5.z


def random_decomposition(rng, length, max_span=None):
    i1 = rng.randint(0, length)
    top = length if max_span is None else min(length, i1 + max_span)
    i2, i3, i4 = sorted(rng.randint(i1, top) for _ in range(3))
    return Decomposition(i1, i2, i3, i4)


# -- colouring ---------------------------------------------------------------


@pytest.mark.parametrize(
    "segment, counts",
    [
        ((0, 20), ColorCounts(20, 0, 0, 0)),
        ((18, 25), ColorCounts(2, 3, 2, 0)),
        ((0, 0), ColorCounts(0, 0, 0, 0)),
    ],
)
def test_color_counts_examples(spec5, segment, counts):
    assert color_counts(spec5, segment) == counts


def test_color_boundaries_n5(spec5):
    assert spec5.regions == {
        "red": (0, 20),
        "blue": (20, 23),
        "green": (23, 273),
        "black": (273, 1026),
    }


def test_color_counts_out_of_range(spec5):
    with pytest.raises(ValueError):
        color_counts(spec5, (10, 2000))
    with pytest.raises(ValueError):
        color_counts(spec5, (5, 4))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_color_partition(n):
    spec = WitnessSpec(n)
    rng = random.Random(n)
    for _ in range(2000):
        lo = rng.randint(0, spec.total_length)
        hi = rng.randint(lo, spec.total_length)
        assert color_counts(spec, (lo, hi)).total == hi - lo


def test_regions_follow_blocks():
    spec = WitnessSpec(4)
    z = build_witness(4)
    r = spec.regions
    assert z[slice(*r["red"])] == "1000" * 4
    assert z[slice(*r["blue"])] == "100"
    assert z[slice(*r["green"])] == "10" * spec.green_count
    assert z[slice(*r["black"])] == "100" * (spec.black_count + 1)


def test_marks_match_ogden_marking_exhaustive(spec5):
    length = spec5.total_length
    prefix = [0]
    for j in range(length):
        prefix.append(prefix[-1] + (j < 20))
    for lo in range(0, length + 1, 7):
        for hi in range(lo, length + 1):
            assert marks(spec5, (lo, hi)) == prefix[hi] - prefix[lo]
    for lo in range(30):
        for hi in range(lo, 60):
            assert color_counts(spec5, (lo, hi)).red == marked_in(lo, hi, 5)


# -- conditions ----------------------------------------------------------------


def test_cond_A_examples(spec5):
    assert cond_A(spec5, Decomposition(0, 4, 4, 4))
    assert not cond_A(spec5, Decomposition(400, 402, 410, 415))
    assert cond_A(spec5, Decomposition(19, 21, 30, 31))


def test_cond_B_examples(spec5):
    assert not cond_B(spec5, Decomposition(0, 4, 8, 12))
    assert cond_B(spec5, Decomposition(16, 20, 20, 20))
    assert cond_B(spec5, Decomposition(20, 20, 20, 20))


def test_decomposition_validation():
    with pytest.raises(ValueError):
        Decomposition(3, 2, 4, 5)
    with pytest.raises(ValueError):
        Decomposition(-1, 0, 0, 0)
    with pytest.raises(ValueError):
        Decomposition(0, 1, 2, 2000).parts("0101")


def test_parts_concatenate_to_z(z5):
    rng = random.Random(3)
    for _ in range(500):
        d = random_decomposition(rng, len(z5))
        assert "".join(d.parts(z5)) == z5


# -- pumping -------------------------------------------------------------------


def test_pump_examples(z5):
    d = Decomposition(16, 20, 20, 20)
    assert pump(z5, d, 1) == z5
    u, v, w, x, y = d.parts(z5)
    assert pump(z5, d, 0) == u + w + y
    pumped = pump(z5, d, 3)
    assert len(pumped) == 1026 + 8
    assert parse_R(pumped) == r_parse(7, 125, 250)


def r_parse(a, b, c):
    return parse_R(r_word(a, b, c))


def test_pump_identity_and_length(z5):
    rng = random.Random(11)
    for _ in range(10_000):
        d = random_decomposition(rng, len(z5), max_span=60)
        assert pump(z5, d, 1) == z5
        i = rng.randint(0, 5)
        assert len(pump(z5, d, i)) == len(z5) + (i - 1) * d.pumped_size


def test_pump_rejects_negative(z5):
    with pytest.raises(ValueError):
        pump(z5, Decomposition(0, 1, 1, 1), -1)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_symbolic_membership_matches_materialized(n):
    index = WitnessIndex(WitnessSpec(n))
    z = index.z
    rng = random.Random(100 + n)
    for _ in range(6000):
        d = random_decomposition(rng, len(z), max_span=rng.choice([6, 20, len(z)]))
        i = rng.choice([0, 1, 2, 3, 4, 6, 7, 13, 60, 121])
        assert index.exit_reason(d, i) == exit_reason(pump(z, d, i)), (d, i)


def test_symbolic_membership_handles_huge_exponents(index5, z5):
    d = Decomposition(16, 20, 20, 20)
    # w4^{5 + 10^6 - 1} w3 w2^125 w3 w3^250 is in R, not balanced
    assert index5.exit_reason(d, 10**6) is None
    assert index5.pumped_length(d, 10**6) == 1026 + 4 * (10**6 - 1)


# -- classification --------------------------------------------------------------


def leaf_predicate(spec, z, d, leaf):
    """Re-derive the structural predicate of a leaf from scratch."""
    v, x = z[d.i1 : d.i2], z[d.i3 : d.i4]
    if not x or not v:
        p = v or x
        seg = d.v if v else d.x
        if leaf == C.I_ZEROS:
            return set(p) == {"0"}
        if "1" not in p:
            return False
        if leaf == C.I_UNEVEN:
            return is_uneven_word(p)
        if is_uneven_word(p):
            return False
        green = color_counts(spec, seg).green
        runs = p.split("1")
        k_plus_s = len(runs[0]) + len(runs[-1])
        return {
            C.I_GREEN_IN_V: green > 0,
            C.I_K_PLUS_S_NOT_3: green == 0 and k_plus_s != 3,
            C.I_PUMP: green == 0 and k_plus_s == 3,
        }.get(leaf, False)
    if leaf == C.II_ZEROS:
        return "1" not in v or "1" not in x
    if "1" not in v or "1" not in x:
        return False
    if leaf == C.II_UNEVEN:
        return is_uneven_word(v) or is_uneven_word(x)
    if is_uneven_word(v) or is_uneven_word(x):
        return False
    cv, cx = color_counts(spec, d.v), color_counts(spec, d.x)
    if leaf == C.II_V_UNMARKED:
        return cv.red == 0
    if cv.red == 0:
        return False
    if leaf == C.II_BOTH_MARKED:
        return cx.red > 0
    if cx.red > 0:
        return False
    checks = {
        C.II_BLUE2_EPS: cx.green > 0 and cx.blue == 2 and x == "001",
        C.II_BLUE2_ZERO: cx.green > 0 and cx.blue == 2 and x == "0010",
        C.II_BLUE1_010: cx.green > 0 and cx.blue == 1 and x == "010",
        C.II_BLUE1_01L: cx.green > 0 and cx.blue == 1 and x != "010",
        C.II_BLUE0_GREEN_MANY: cx.blue == 0 and cx.green > 1,
        C.II_BLUE0_GREEN_1: cx.blue == 0 and cx.green == 1,
        C.II_BLACK: cx.green == 0 and cx.black > 0,
        C.II_BLUE_ONLY: cx.green == 0 and cx.black == 0 and cx.blue > 0,
    }
    return checks[leaf]


def test_classify_examples(spec5, z5):
    assert classify(spec5, Decomposition(16, 18, 18, 18)).leaf == C.I_K_PLUS_S_NOT_3
    assert classify(spec5, Decomposition(17, 19, 19, 19)).leaf == C.I_ZEROS
    label = classify(spec5, Decomposition(16, 20, 23, 25))
    assert label.leaf == C.II_BLUE0_GREEN_MANY
    assert label.get("l") == 1
    uneven = Decomposition(16, 22, 22, 22)
    assert is_uneven_word(z5[16:22])
    assert classify(spec5, uneven).leaf == C.I_UNEVEN


def test_classify_swaps_roles_when_v_empty(spec5):
    assert classify(spec5, Decomposition(16, 16, 16, 20)).leaf == C.I_PUMP
    assert classify(spec5, Decomposition(16, 16, 16, 20)).params == {"k": 0, "s": 3, "p": 0}


def test_classify_rejects_empty_pump(spec5):
    with pytest.raises(ValueError):
        classify(spec5, Decomposition(5, 5, 9, 9))


def test_unmarked_v_leaf(spec5, index5):
    d = unmarked_v_example(spec5)
    label = classify(spec5, d)
    assert label.leaf == C.II_V_UNMARKED
    assert prescribed_i(label, 5) is None
    assert not cond_A(spec5, d)
    with pytest.raises(ValueError):
        refute(index5, d)


def test_classifier_total_and_faithful(spec5, z5):
    rng = random.Random(2024)
    seen = set()
    for _ in range(100_000):
        if rng.random() < 0.5:
            d = random_decomposition(rng, len(z5), max_span=40)
        else:
            i1 = rng.randrange(24)
            d = Decomposition(i1, *sorted(rng.randint(i1, len(z5)) for _ in range(3)))
        if d.pumped_size == 0:
            continue
        label = classify(spec5, d, z5)
        seen.add(label.leaf)
        assert leaf_predicate(spec5, z5, d, label.leaf), (d.cuts, label)
    assert len(seen) >= 12


def test_blue3_green_x_is_never_even(spec5, z5):
    """x starting in blue and reaching green is uneven unless it is 001 / 0010."""
    r, g = spec5.red_end, spec5.blue_end
    for lo in range(r, g):
        for hi in range(g + 1, len(z5) + 1):
            x = z5[lo:hi]
            blue = g - lo
            if blue == 3:
                assert is_uneven_word(x)
            elif blue == 2 and x not in ("001", "0010"):
                assert is_uneven_word(x)


def test_classifier_raises_on_unreachable_combination(spec5):
    with pytest.raises(UnreachableCase):
        C._classify_green_x(ColorCounts(0, 3, 1, 0), "1001", {})


def test_case_label_validation():
    with pytest.raises(ValueError):
        CaseLabel("I.iv")


# -- prescribed exponents -------------------------------------------------------


def test_prescribed_examples():
    assert prescribed_i(CaseLabel(C.I_ZEROS), 5) == 4
    assert prescribed_i(CaseLabel(C.I_UNEVEN), 5) == 6
    assert prescribed_i(CaseLabel(C.I_PUMP, {"k": 0, "s": 3, "p": 0}), 5) == 120
    assert prescribed_i(CaseLabel(C.I_K_PLUS_S_NOT_3, {"k": 0, "s": 0, "p": 0}), 5) == 2
    both = CaseLabel(C.II_BOTH_MARKED, {"k": 1, "s": 2, "p": 0, "c": 1, "d": 2, "e": 0})
    assert prescribed_i(both, 5) == 60


def test_prescribed_absent_when_not_integral():
    label = CaseLabel(C.I_PUMP, {"k": 0, "s": 3, "p": 6})
    assert prescribed_i(label, 5) is None  # 7 does not divide 120
    assert prescribed_i(label, 7) == factorial(7) // 7
    assert prescribed_i(CaseLabel(C.II_V_UNMARKED), 5) is None


def test_balancing_exponent_is_one_more():
    label = CaseLabel(C.I_PUMP, {"k": 0, "s": 3, "p": 0})
    assert balancing_i(label, 5) == 121
    assert balancing_i(CaseLabel(C.I_ZEROS), 5) is None


def test_candidates_order(spec5):
    label = CaseLabel(C.I_PUMP, {"k": 0, "s": 3, "p": 0})
    cands = candidate_exponents(label, 5, SearchConfig(max_small_i=8))
    assert cands[:9] == [120, 0, 2, 3, 4, 5, 6, 7, 8]
    assert 121 in cands and 61 in cands and 1 not in cands
    assert len(cands) == len(set(cands))


# -- refutation ------------------------------------------------------------------


def test_refute_single_zero(index5):
    # one marked 0 pumped four times: odd length is the first failing check
    ref = refute(index5, Decomposition(19, 20, 20, 20))
    assert (ref.pump_exponent, ref.reason, ref.via_prescribed) == (4, Reason.ODD_LENGTH, True)
    ref = refute(index5, Decomposition(17, 19, 19, 19))
    assert (ref.pump_exponent, ref.reason) == (4, Reason.NOT_IN_R)


def test_refute_uneven_v(index5, z5):
    d = Decomposition(16, 22, 22, 22)
    ref = refute(index5, d)
    assert (ref.pump_exponent, ref.reason, ref.via_prescribed) == (6, Reason.NOT_IN_R, True)
    assert not in_T(pump(z5, d, 6))


def test_refute_whole_w4_block(index5, z5):
    d = Decomposition(16, 20, 20, 20)
    # the proof's i = n!/(1+p) = 120 leaves the word in T ...
    assert in_T(pump(z5, d, 120))
    # ... the balancing exponent is 121
    ref = refute(index5, d)
    assert (ref.pump_exponent, ref.reason, ref.via_prescribed) == (121, Reason.ABELIAN_SQUARE, False)
    assert ref.pumped_length == 1026 + 4 * 120


def test_w4_block_instantiation_at_balancing_exponent(z5):
    n, f = 5, factorial(5)
    pumped = pump(z5, Decomposition(16, 20, 20, 20), f + 1)
    assert pumped == r_word(f + n, f + n, 2 * (f + n))
    assert parse_R(pumped) == r_parse(125, 125, 250)
    assert is_abelian_square(pumped)


def test_refute_checks_preconditions(index5):
    with pytest.raises(ValueError):
        refute(index5, Decomposition(0, 4, 8, 12))  # B fails
    with pytest.raises(ValueError):
        refute(index5, Decomposition(300, 301, 301, 302))  # A fails


def test_refutations_reverify_on_materialized_words(index5, z5):
    decomps, _ = random_sample(index5.spec, seed=5, count=3000)
    for d in decomps:
        ref = refute(index5, d)
        assert ref is not None
        pumped = pump(z5, d, ref.pump_exponent)
        assert len(pumped) == ref.pumped_length
        assert exit_reason(pumped) == ref.reason
        assert not in_T(pumped)


# -- enumeration -----------------------------------------------------------------


@pytest.mark.parametrize("n, width", [(5, 8), (3, 10), (2, 12)])
def test_exhaustive_window_matches_bruteforce(n, width):
    spec = WitnessSpec(n)
    emitted = [d.cuts for d in exhaustive_window(spec, width)]
    assert len(emitted) == len(set(emitted))
    brute = ab_quadruples_bruteforce(n, spec.total_length, width)
    assert sorted(emitted) == sorted(brute)
    total = sum(
        1
        for i1 in range(spec.total_length + 1)
        for i4 in range(i1, min(spec.total_length, i1 + width) + 1)
        for i2 in range(i1, i4 + 1)
        for i3 in range(i2, i4 + 1)
    )
    assert window_total(spec, width) == total


def test_random_sample_reproducible(spec5):
    a = list(decompositions(spec5, RandomSample(seed=1, count=10)))
    b = list(decompositions(spec5, RandomSample(seed=1, count=10)))
    c = list(decompositions(spec5, RandomSample(seed=2, count=10)))
    assert a == b and a != c


def test_random_sample_satisfies_AB_and_reaches_far(spec5):
    decomps, rejected = random_sample(spec5, seed=9, count=5000)
    assert rejected > 0
    assert all(cond_A(spec5, d) and cond_B(spec5, d) for d in decomps)
    far = [d for d in decomps if d.i4 > spec5.green_end]
    assert far and any(color_counts(spec5, d.x).green for d in decomps)


def test_case_targeted_covers_every_reachable_leaf(spec5, z5):
    pairs = case_targeted(spec5)
    covered = set()
    for d, leaf in pairs:
        assert cond_A(spec5, d) and cond_B(spec5, d)
        label = classify(spec5, d, z5)
        assert label.leaf == leaf, (d.cuts, label)
        covered.add(leaf)
    assert covered == set(LEAVES) - {C.II_V_UNMARKED}
    assert [d for d, _ in pairs] == list(decompositions(spec5, CaseTargeted()))


def test_case_targeted_balancing_exponents_refute(index5):
    """The n!/q + 1 exponents refute every factorial-style targeted decomposition."""
    for d, leaf in case_targeted(index5.spec):
        label = classify(index5.spec, d, index5.z)
        i = balancing_i(label, 5)
        if i is not None:
            assert not in_T(pump(index5.z, d, i)), (d.cuts, leaf)


# -- reports ---------------------------------------------------------------------


def test_verify_small_instance_flags_threshold():
    report = verify_theorem_instance(2, [ExhaustiveWindow(10)])
    assert report["subThresholdWarning"] is True
    assert report["checked"] > 0
    assert report["checked"] + report["skippedViolatingAB"] == window_total(WitnessSpec(2), 10)


def test_verify_report_schema(spec5):
    report = verify_theorem_instance(5, [CaseTargeted(), RandomSample(3, 200)])
    assert set(report) >= {
        "n",
        "strategies",
        "checked",
        "skippedViolatingAB",
        "perLeaf",
        "iHistogram",
        "reasonHistogram",
        "unrefuted",
        "seed",
        "wallTimeMs",
        "subThresholdWarning",
    }
    assert report["unrefuted"] == []
    assert report["seed"] == 3
    assert sum(v["count"] for v in report["perLeaf"].values()) == report["checked"]
    assert sum(report["iHistogram"].values()) == report["checked"]


def test_verify_independent_of_workers():
    strategies = [RandomSample(4, 3000)]
    one = verify_theorem_instance(5, strategies, workers=1, chunk_size=500)
    two = verify_theorem_instance(5, strategies, workers=2, chunk_size=500)
    one.pop("wallTimeMs")
    two.pop("wallTimeMs")
    assert one == two


def test_alt_bound_against_uneven_parts(spec5, z5):
    bound = alt_bound()
    assert bound["computedAltR"] == 3 < 5
    assert bound["paperStatedAltR"] == 4 and bound["discrepancy"]
    decomps, _ = random_sample(spec5, seed=21, count=3000)
    for d in decomps:
        for part in (z5[d.i1 : d.i2], z5[d.i3 : d.i4]):
            if "1" in part and is_uneven_word(part):
                assert alt(power(part, 6)) >= 5


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 1026), st.integers(0, 40), st.integers(0, 40), st.integers(0, 40), st.integers(0, 9))
def test_pump_length_property(i1, a, b, c, i):
    z = build_witness(5)
    cuts = [min(1026, x) for x in (i1, i1 + a, i1 + a + b, i1 + a + b + c)]
    d = Decomposition(*cuts)
    assert len(pump(z, d, i)) == 1026 + (i - 1) * d.pumped_size
