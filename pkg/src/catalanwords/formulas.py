"""Closed-form exact counts and totals, plus floating asymptotic estimates.

All counting functions return exact Python integers.  The binomial follows
the convention C(n, k) = 0 outside 0 <= k <= n, which makes the parametric
plateau formulas valid for every n without case analysis.
"""

from __future__ import annotations

import math

from .stats import parse_statistic_id

__all__ = [
    "binomial",
    "catalan",
    "fibonacci",
    "narayana",
    "wruns_count",
    "total",
    "catalan_identity_check",
    "asymptotic_estimate",
    "asymptotic_log",
    "relative_error",
    "total_ratio",
    "ASYMPTOTIC_STATISTICS",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 when k < 0, k > n, or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    """Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return binomial(2 * n, n) // (n + 1)


def fibonacci(n: int) -> int:
    """Fibonacci number with F(1) = F(2) = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def narayana(n: int, k: int) -> int:
    """Narayana number C(n-1, k-1) C(n, k-1) / k; 0 outside 1 <= k <= n.

    Counts Catalan words of length n with exactly k runs of ascents (and,
    by the table symmetry, those with k runs of weak descents).
    """
    if n < 1 or k < 1 or k > n:
        return 0
    prod = binomial(n - 1, k - 1) * binomial(n, k - 1)
    assert prod % k == 0
    return prod // k


def wruns_count(n: int, k: int) -> int:
    """Number of Catalan words of length n with k runs of weak ascents:
    C(n, k) C(n-k, k-1) 2^(n - 2k + 1) / n; 0 outside the support."""
    if n < 1 or k < 1:
        return 0
    b1 = binomial(n, k)
    b2 = binomial(n - k, k - 1)
    if not b1 or not b2:
        return 0
    # b2 != 0 forces k - 1 <= n - k, so the exponent is nonnegative.
    val = b1 * b2 * 2 ** (n - 2 * k + 1)
    assert val % n == 0
    return val // n


def _resolve(sid: str, ell: int | None) -> tuple[str, int | None]:
    base, parsed = parse_statistic_id(sid)
    if base in ("lval", "lpeak"):
        if parsed is not None and ell is not None and parsed != ell:
            raise ValueError(f"conflicting plateau lengths for {sid!r}")
        ell = parsed if parsed is not None else ell
        if ell is None:
            raise ValueError(f"statistic {base!r} requires a plateau length")
        return base, ell
    if ell is not None:
        raise ValueError(f"statistic {sid!r} takes no plateau length")
    return base, None


def total(sid: str, n: int, ell: int | None = None) -> int:
    """Exact total of a statistic over all Catalan words of length n."""
    base, ell = _resolve(sid, ell)
    if n < 1:
        raise ValueError("n must be >= 1")
    if base in ("runs", "wdruns"):
        # Weak-descent runs distribute exactly like ascent runs.
        return binomial(2 * n - 1, n)
    if base == "wruns":
        return binomial(2 * n - 2, n - 1)
    if base == "druns":
        return binomial(2 * n, n) - binomial(2 * n - 2, n - 1)
    if base == "lval":
        return binomial(2 * (n - ell) - 1, n - ell - 3)
    if base == "val":
        return sum(binomial(2 * (n - l) - 1, n - l - 3) for l in range(1, n))
    if base == "symv":
        half_sum = sum(binomial(2 * k, k) for k in range(1, n + 1))
        assert half_sum % 2 == 0, "central binomial half-sum must be integral"
        return (3 * n - 2) * catalan(n - 1) - half_sum // 2
    if base == "lpeak":
        return binomial(2 * (n - ell) - 1, n - ell - 2)
    if base == "peak":
        return sum(binomial(2 * (n - l) - 1, n - l - 2) for l in range(1, n))
    if base == "symp":
        return sum(binomial(2 * k + 2, k) for k in range(0, n - 2))
    raise ValueError(f"no total formula for statistic {sid!r}")


def catalan_identity_check(n: int) -> bool:
    """Check catalan(n) == (1/n) sum_k C(n,k) C(n-k,k-1) 2^(n-2k+1) exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = 0
    for k in range(1, n + 1):
        b1 = binomial(n, k)
        b2 = binomial(n - k, k - 1)
        if b1 and b2:
            acc += b1 * b2 * 2 ** (n - 2 * k + 1)
    if acc % n:
        return False
    return acc // n == catalan(n)


# Statistics with a stated asymptotic approximation.
ASYMPTOTIC_STATISTICS = ("val", "symv", "peak", "symp", "lval", "lpeak")

_LOG2 = math.log(2.0)
_LOG_PI = math.log(math.pi)


def asymptotic_log(sid: str, n: int, ell: int | None = None) -> float:
    """Natural log of the asymptotic estimate (safe for huge n)."""
    base, ell = _resolve(sid, ell)
    half_log = 0.5 * (_LOG_PI + math.log(n))
    if base in ("val", "peak"):
        return 2 * n * _LOG2 - math.log(6.0) - half_log
    if base in ("symv", "symp"):
        return 2 * n * _LOG2 - math.log(12.0) - half_log
    if base in ("lval", "lpeak"):
        return (2 * (n - ell) - 1) * _LOG2 - half_log
    raise ValueError(f"no asymptotic estimate for statistic {sid!r}")


def asymptotic_estimate(sid: str, n: int, ell: int | None = None) -> float:
    """Floating value of the asymptotic estimate (may overflow for huge n)."""
    return math.exp(asymptotic_log(sid, n, ell))


def relative_error(sid: str, n: int, ell: int | None = None) -> float:
    """|exact/estimate - 1| computed in the log domain (exact big-int input)."""
    exact = total(sid, n, ell)
    return abs(math.exp(math.log(exact) - asymptotic_log(sid, n, ell)) - 1.0)


def total_ratio(sid_a: str, sid_b: str, n: int) -> float:
    """Exact ratio total(a, n) / total(b, n) evaluated via logarithms."""
    return math.exp(math.log(total(sid_a, n)) - math.log(total(sid_b, n)))
