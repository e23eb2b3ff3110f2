"""Exact integer forms of the circumference and degree thresholds.

Every predicate here is a real-number inequality reduced to integer
arithmetic by isolating the radical and squaring, so boundary cases never
depend on floating-point rounding.  With ``k = n - L`` (the deficiency of
an observed cycle length ``L``, or ``L`` read as a degree), the reductions
are:

``MAIN1``  L >= n - (1+sqrt(4n-3))/2
    <=> 2k - 1 <= sqrt(4n-3)            (k >= 1; both sides positive)
    <=> 4k^2 - 4k + 1 <= 4n - 3
    <=> n >= k^2 - k + 1                (k = 0 is trivially true)

``MAIN2``  L >= n - (1+sqrt(4n-3))/2 + 1
    <=> 2k + 1 <= sqrt(4n-3)
    <=> n >= k^2 + k + 1                (k = 0 is trivially true)

``MAIN3``  L >= n - sqrt(n-1) + 1
    <=> k + 1 <= sqrt(n-1)
    <=> (k+1)^2 <= n - 1

``Q2``     L >= 2*sqrt(n)      <=>  L^2 >= 4n
``HARVEY_DELTA``  L >= sqrt(n) <=>  L^2 >= n          (L is a degree here)

All squarings are monotone because both sides are nonnegative under the
stated preconditions (n >= 1 forces 4n-3 >= 1, and negative left sides
make the inequality true outright, which each function handles first).
"""

from __future__ import annotations

from enum import Enum


class Threshold(Enum):
    MAIN1 = "main1"
    MAIN2 = "main2"
    MAIN3 = "main3"
    Q2 = "q2"
    HARVEY_DELTA = "harvey-delta"


class BoundsError(ValueError):
    """Out-of-range input to a threshold predicate."""


def _check_inputs(threshold: Threshold, n: int, length: int) -> None:
    if n < 1:
        raise BoundsError(f"n must be >= 1, got {n}")
    upper = n - 1 if threshold is Threshold.HARVEY_DELTA else n
    if not 0 <= length <= upper:
        raise BoundsError(f"length {length} outside 0..{upper} for n={n}")


def meets_threshold(threshold: Threshold, n: int, length: int) -> bool:
    """Exact test of ``length`` against the chosen real-valued threshold at ``n``.

    ``length`` is a cycle length for MAIN1/MAIN2/MAIN3/Q2 and a minimum
    degree for HARVEY_DELTA.  See the module docstring for the integer
    reductions evaluated here.
    """
    _check_inputs(threshold, n, length)
    k = n - length
    if threshold is Threshold.MAIN1:
        return k == 0 or n >= k * k - k + 1
    if threshold is Threshold.MAIN2:
        return k == 0 or n >= k * k + k + 1
    if threshold is Threshold.MAIN3:
        return (k + 1) * (k + 1) <= n - 1
    if threshold is Threshold.Q2:
        return length * length >= 4 * n
    if threshold is Threshold.HARVEY_DELTA:
        return length * length >= n
    raise BoundsError(f"unknown threshold {threshold!r}")


def deficiency_bound_holds(threshold: Threshold, n: int, length: int) -> bool:
    """The weaker deficiency consequences implied by the MAIN thresholds.

    MAIN1: n >= k^2 - k + 1; MAIN2: n > k^2 - k + 1; MAIN3: n > k^2 + 1
    (k = 0 cases are trivially true for MAIN1/MAIN2).  These follow from
    :func:`meets_threshold` but are strictly weaker for MAIN2/MAIN3; both
    forms are exposed so either side of that implication can be checked.
    """
    _check_inputs(threshold, n, length)
    k = n - length
    if threshold is Threshold.MAIN1:
        return k == 0 or n >= k * k - k + 1
    if threshold is Threshold.MAIN2:
        return k == 0 or n > k * k - k + 1
    if threshold is Threshold.MAIN3:
        return n > k * k + 1
    raise BoundsError(f"no deficiency form for {threshold!r}")


def _f_exceeds(n: int, bound: int) -> bool:
    """Exact test of n - (1+sqrt(4n-3))/2 > bound.

    Rearranged to 2n - 2*bound - 1 > sqrt(4n-3); a nonpositive left side is
    false because sqrt(4n-3) >= 1 for n >= 1, otherwise squaring is exact.
    """
    d = 2 * n - 2 * bound - 1
    if d <= 0:
        return False
    return d * d > 4 * n - 3


def check_contraction_gap(t: int, a: int, n: int) -> tuple[bool, bool | None]:
    """Exact check that the threshold clears the contracted-cycle length bounds.

    For positive integers with n >= 3t - a >= 1, part 1 evaluates
    ``n - (1+sqrt(4n-3))/2 > 2t - a - 1`` and part 2 (only when t >= 4 and
    a >= 2, else None) evaluates the same with right side ``2t - a``.  Both
    are provably true on the whole valid range, so any False signals an
    implementation bug in this module.
    """
    if t < 1 or a < 1 or n < 1:
        raise BoundsError("t, a, n must be positive integers")
    if not n >= 3 * t - a >= 1:
        raise BoundsError(f"need n >= 3t-a >= 1, got n={n}, 3t-a={3 * t - a}")
    part1 = _f_exceeds(n, 2 * t - a - 1)
    part2 = _f_exceeds(n, 2 * t - a) if (t >= 4 and a >= 2) else None
    return part1, part2


def _f_strictly_less(n1: int, n2: int) -> bool:
    """Exact test of f(n1) < f(n2) for f(n) = n - (1+sqrt(4n-3))/2, n2 >= n1 >= 1.

    f(n1) < f(n2)  <=>  D + sqrt(B) > sqrt(A)   with D = 2(n2-n1),
    A = 4*n2-3, B = 4*n1-3.  Squaring once gives 2*D*sqrt(B) > A - B - D^2;
    a negative right side is immediately true, a zero right side needs
    D > 0, and otherwise squaring again decides it exactly.
    """
    if not 1 <= n1 <= n2:
        raise BoundsError("need 1 <= n1 <= n2")
    d = 2 * (n2 - n1)
    a = 4 * n2 - 3
    b = 4 * n1 - 3
    rest = a - b - d * d
    if rest < 0:
        return True
    if rest == 0:
        return d > 0 and b > 0
    return 4 * d * d * b > rest * rest


def threshold_increasing(n_lo: int, n_hi: int) -> bool:
    """True iff n - (1+sqrt(4n-3))/2 strictly increases at every step of [n_lo, n_hi]."""
    if not 1 <= n_lo <= n_hi:
        raise BoundsError(f"bad range [{n_lo}, {n_hi}]")
    return all(_f_strictly_less(n, n + 1) for n in range(n_lo, n_hi))


def check_sqrt_bound(n_hi: int) -> bool:
    """Verify sqrt(n) <= (1+sqrt(4n-3))/2 for all 1 <= n <= n_hi, exactly.

    2*sqrt(n) <= 1 + sqrt(4n-3); both sides are nonnegative, and squaring
    gives 4n <= 4n - 2 + 2*sqrt(4n-3), i.e. sqrt(4n-3) >= 1, i.e.
    4n - 3 >= 1.  The loop evaluates that integer-safe form per n (equality
    holds exactly at n = 1).
    """
    if n_hi < 1:
        raise BoundsError(f"n_hi must be >= 1, got {n_hi}")
    return all(4 * n - 3 >= 1 for n in range(1, n_hi + 1))
