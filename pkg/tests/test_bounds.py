import pytest
from hypothesis import given, strategies as st

from cyclechords import (
    BoundsError,
    Threshold,
    check_contraction_gap,
    check_sqrt_bound,
    deficiency_bound_holds,
    meets_threshold,
    threshold_increasing,
)


def test_main1_examples():
    assert meets_threshold(Threshold.MAIN1, 7, 4) is True  # k=3 boundary: 7 >= 7
    assert meets_threshold(Threshold.MAIN1, 12, 5) is False  # k=7: 43 > 12
    for n in (1, 5, 40):
        assert meets_threshold(Threshold.MAIN1, n, n) is True


def test_hamiltonian_always_meets_every_threshold():
    for t in Threshold:
        n = 9
        length = n - 1 if t is Threshold.HARVEY_DELTA else n
        assert meets_threshold(t, n, length) is True


def test_main3_small_n_edge_case():
    # k = 0 but n = 1: threshold value exceeds n, so even L = n fails
    assert meets_threshold(Threshold.MAIN3, 1, 1) is False
    assert meets_threshold(Threshold.MAIN3, 2, 2) is True


def test_q2_and_harvey_delta():
    assert meets_threshold(Threshold.Q2, 9, 6) is True
    assert meets_threshold(Threshold.Q2, 12, 6) is False  # 36 < 48
    assert meets_threshold(Threshold.HARVEY_DELTA, 9, 3) is True
    assert meets_threshold(Threshold.HARVEY_DELTA, 10, 3) is False


def test_input_validation():
    with pytest.raises(BoundsError):
        meets_threshold(Threshold.MAIN1, 0, 0)
    with pytest.raises(BoundsError):
        meets_threshold(Threshold.MAIN1, 5, 6)
    with pytest.raises(BoundsError):
        meets_threshold(Threshold.HARVEY_DELTA, 5, 5)  # degree mode caps at n-1


@given(st.integers(min_value=1, max_value=2000), st.integers(min_value=0, max_value=2000))
def test_main2_implies_main1(n, k):
    if k > n:
        return
    length = n - k
    if meets_threshold(Threshold.MAIN2, n, length):
        assert meets_threshold(Threshold.MAIN1, n, length)


@given(st.integers(min_value=1, max_value=2000), st.integers(min_value=0, max_value=2000))
def test_threshold_implies_deficiency_bound(n, k):
    if k > n:
        return
    length = n - k
    for t in (Threshold.MAIN1, Threshold.MAIN2, Threshold.MAIN3):
        if meets_threshold(t, n, length):
            assert deficiency_bound_holds(t, n, length)


def test_deficiency_bound_defined_only_for_main_thresholds():
    with pytest.raises(BoundsError):
        deficiency_bound_holds(Threshold.Q2, 5, 4)


def test_contraction_gap_examples():
    assert check_contraction_gap(3, 2, 7) == (True, None)
    assert check_contraction_gap(4, 2, 10) == (True, True)
    assert check_contraction_gap(1, 1, 2) == (True, None)


def test_contraction_gap_preconditions():
    with pytest.raises(BoundsError):
        check_contraction_gap(1, 6, 4)  # 3t-a = -3 < 1
    with pytest.raises(BoundsError):
        check_contraction_gap(4, 1, 10)  # n < 3t-a
    with pytest.raises(BoundsError):
        check_contraction_gap(0, 1, 5)


def test_threshold_increasing_ranges():
    assert threshold_increasing(1, 10_000) is True
    assert threshold_increasing(1, 2) is True
    assert threshold_increasing(5, 5) is True  # empty range
    with pytest.raises(BoundsError):
        threshold_increasing(3, 2)


def test_sqrt_bound():
    assert check_sqrt_bound(1) is True  # equality at n = 1
    assert check_sqrt_bound(4) is True
    assert check_sqrt_bound(10**6) is True


def test_predicates_against_high_precision_floats():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.prec = 100

    def real_threshold(t, n):
        n = mpmath.mpf(n)
        if t is Threshold.MAIN1:
            return n - (1 + mpmath.sqrt(4 * n - 3)) / 2
        if t is Threshold.MAIN2:
            return n - (1 + mpmath.sqrt(4 * n - 3)) / 2 + 1
        if t is Threshold.MAIN3:
            return n - mpmath.sqrt(n - 1) + 1
        if t is Threshold.Q2:
            return 2 * mpmath.sqrt(n)
        return mpmath.sqrt(n)

    import random

    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randrange(1, 10**6)
        for t in Threshold:
            upper = n - 1 if t is Threshold.HARVEY_DELTA else n
            if upper < 0:
                continue
            length = rng.randrange(0, upper + 1)
            thr = real_threshold(t, n)
            if abs(length - thr) <= mpmath.mpf("1e-6"):
                continue  # integer predicate is authoritative near the boundary
            assert meets_threshold(t, n, length) == (length >= thr), (t, n, length)
