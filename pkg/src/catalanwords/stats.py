"""Per-word statistics and exact distribution tables over all Catalan words.

Statistic ids are fixed strings: runs, wruns, druns, wdruns, val, symv,
peak, symp, and the parametric families lval:<l> and lpeak:<l> for plateau
length l >= 1.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .words import CatalanWord, _iter_letter_lists

__all__ = [
    "RUN_STATISTICS",
    "SIMPLE_STATISTICS",
    "RunProfile",
    "ValleyProfile",
    "PeakProfile",
    "DistributionTable",
    "desk_limit",
    "parse_statistic_id",
    "k_min_for",
    "run_profile",
    "valley_profile",
    "peak_profile",
    "statistic_value",
    "distribution",
    "totals",
    "bfile",
]

RUN_STATISTICS = ("runs", "wruns", "druns", "wdruns")
SIMPLE_STATISTICS = RUN_STATISTICS + ("val", "symv", "peak", "symp")
PARAMETRIC_BASES = ("lval", "lpeak")

DEFAULT_DESK_LIMIT = 14
DESK_LIMIT_ENV = "CATALAN_WORDS_DESK_LIMIT"


def desk_limit() -> int:
    """Maximum word length for enumeration-backed commands (env-overridable)."""
    raw = os.environ.get(DESK_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_DESK_LIMIT


def parse_statistic_id(sid: str) -> tuple[str, int | None]:
    """Split a statistic id into (base, plateau length or None)."""
    if sid in SIMPLE_STATISTICS:
        return sid, None
    base, sep, arg = sid.partition(":")
    if sep and base in PARAMETRIC_BASES:
        try:
            ell = int(arg)
        except ValueError:
            raise ValueError(f"bad plateau length in statistic id {sid!r}") from None
        if ell < 1:
            raise ValueError(f"plateau length must be >= 1 in {sid!r}")
        return base, ell
    raise ValueError(f"unknown statistic id {sid!r}")


def k_min_for(sid: str) -> int:
    base, _ = parse_statistic_id(sid)
    return 1 if base in RUN_STATISTICS else 0


@dataclass(frozen=True)
class RunProfile:
    runs: int
    wruns: int
    desc_runs: int
    wdesc_runs: int


@dataclass(frozen=True)
class ValleyProfile:
    by_ell: dict[int, int]
    val: int
    symv: int


@dataclass(frozen=True)
class PeakProfile:
    by_ell: dict[int, int]
    peak: int
    symp: int


def _pair_counts(ls: Sequence[int]) -> tuple[int, int, int]:
    gt = lt = eq = 0
    prev = ls[0]
    for i in range(1, len(ls)):
        cur = ls[i]
        if prev > cur:
            gt += 1
        elif prev < cur:
            lt += 1
        else:
            eq += 1
        prev = cur
    return gt, lt, eq


def run_profile(w: CatalanWord) -> RunProfile:
    """Counts of maximal runs of ascents, weak ascents, descents, and weak
    descents, via the pair-scan identities runs = 1 + #{i: wi >= wi+1} etc."""
    if not w:
        raise ValueError("run profile requires a nonempty word")
    gt, lt, eq = _pair_counts(w.letters)
    return RunProfile(
        runs=1 + gt + eq,
        wruns=1 + gt,
        desc_runs=1 + lt + eq,
        wdesc_runs=1 + lt,
    )


def _valley_scan(ls: Sequence[int]) -> tuple[dict[int, int], int]:
    # A valley is a factor a b^l (b+1) with a > b: a strict descent into a
    # plateau followed by the forced +1 ascent.  The plateau length l is
    # unique per occurrence.  Symmetric means a == b + 1.
    by_ell: dict[int, int] = {}
    symv = 0
    n = len(ls)
    for i in range(n - 1):
        if ls[i] > ls[i + 1]:
            b = ls[i + 1]
            j = i + 1
            while j + 1 < n and ls[j + 1] == b:
                j += 1
            if j + 1 < n and ls[j + 1] == b + 1:
                ell = j - i
                by_ell[ell] = by_ell.get(ell, 0) + 1
                if ls[i] == b + 1:
                    symv += 1
    return by_ell, symv


def _peak_scan(ls: Sequence[int]) -> tuple[dict[int, int], int]:
    # A peak is a factor a (a+1)^l b with a >= b: an ascent into a plateau
    # followed by a strict descent.  Symmetric means b == a.
    by_ell: dict[int, int] = {}
    symp = 0
    n = len(ls)
    for i in range(n - 1):
        if ls[i + 1] == ls[i] + 1:
            t = ls[i + 1]
            j = i + 1
            while j + 1 < n and ls[j + 1] == t:
                j += 1
            if j + 1 < n and ls[j + 1] < t:
                ell = j - i
                by_ell[ell] = by_ell.get(ell, 0) + 1
                if ls[j + 1] == ls[i]:
                    symp += 1
    return by_ell, symp


def valley_profile(w: CatalanWord) -> ValleyProfile:
    by_ell, symv = _valley_scan(w.letters)
    return ValleyProfile(by_ell=by_ell, val=sum(by_ell.values()), symv=symv)


def peak_profile(w: CatalanWord) -> PeakProfile:
    by_ell, symp = _peak_scan(w.letters)
    return PeakProfile(by_ell=by_ell, peak=sum(by_ell.values()), symp=symp)


def statistic_value(w: CatalanWord, sid: str) -> int:
    """Value of one statistic on one word.  On the empty word, wruns is 1 by
    convention, valley/peak statistics are 0, and the other run statistics
    are undefined."""
    base, ell = parse_statistic_id(sid)
    ls = w.letters
    if not ls:
        if base == "wruns":
            return 1
        if base in RUN_STATISTICS:
            raise ValueError(f"{base} is undefined on the empty word")
        return 0
    if base in RUN_STATISTICS:
        gt, lt, eq = _pair_counts(ls)
        return {
            "runs": 1 + gt + eq,
            "wruns": 1 + gt,
            "druns": 1 + lt + eq,
            "wdruns": 1 + lt,
        }[base]
    if base in ("val", "symv", "lval"):
        by_ell, symv = _valley_scan(ls)
        if base == "val":
            return sum(by_ell.values())
        if base == "symv":
            return symv
        return by_ell.get(ell, 0)
    by_ell, symp = _peak_scan(ls)
    if base == "peak":
        return sum(by_ell.values())
    if base == "symp":
        return symp
    return by_ell.get(ell, 0)


@lru_cache(maxsize=None)
def _length_tables(n: int):
    # One exhaustive pass over all words of length n, binning every statistic
    # at once.  Parametric families store only the k >= 1 part; the k = 0
    # count is the complement of the row sum.  Results are shared via the
    # cache and must not be mutated.
    simple: dict[str, dict[int, int]] = {sid: {} for sid in SIMPLE_STATISTICS}
    lval: dict[int, dict[int, int]] = {}
    lpeak: dict[int, dict[int, int]] = {}
    count = 0
    for w in _iter_letter_lists(n):
        count += 1
        gt = lt = eq = 0
        prev = w[0]
        for i in range(1, n):
            cur = w[i]
            if prev > cur:
                gt += 1
            elif prev < cur:
                lt += 1
            else:
                eq += 1
            prev = cur
        for sid, k in (
            ("runs", 1 + gt + eq),
            ("wruns", 1 + gt),
            ("druns", 1 + lt + eq),
            ("wdruns", 1 + lt),
        ):
            tbl = simple[sid]
            tbl[k] = tbl.get(k, 0) + 1

        v_by_ell, symv = _valley_scan(w)
        p_by_ell, symp = _peak_scan(w)
        for sid, k in (
            ("val", sum(v_by_ell.values())),
            ("symv", symv),
            ("peak", sum(p_by_ell.values())),
            ("symp", symp),
        ):
            tbl = simple[sid]
            tbl[k] = tbl.get(k, 0) + 1
        for ell, k in v_by_ell.items():
            tbl = lval.setdefault(ell, {})
            tbl[k] = tbl.get(k, 0) + 1
        for ell, k in p_by_ell.items():
            tbl = lpeak.setdefault(ell, {})
            tbl[k] = tbl.get(k, 0) + 1
    return simple, lval, lpeak, count


def word_count(n: int) -> int:
    """|C_n| by exhaustive enumeration (cached alongside the tables)."""
    if n == 0:
        return 1
    return _length_tables(n)[3]


@dataclass(frozen=True)
class DistributionTable:
    """Exact counts a(n, k) of words of length n with statistic value k,
    for 1 <= n <= max_length and k >= k_min."""

    statistic: str
    k_min: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def max_length(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def count(self, n: int, k: int) -> int:
        row = self.rows[n - 1]
        idx = k - self.k_min
        return row[idx] if 0 <= idx < len(row) else 0

    def items(self, n: int) -> Iterator[tuple[int, int]]:
        for idx, c in enumerate(self.rows[n - 1]):
            yield self.k_min + idx, c

    def row_sum(self, n: int) -> int:
        return sum(self.rows[n - 1])

    def weighted_sum(self, n: int) -> int:
        return sum(k * c for k, c in self.items(n))

    def to_csv(self) -> str:
        lines = ["n,k,count"]
        for n in range(1, self.max_length + 1):
            for k, c in self.items(n):
                lines.append(f"{n},{k},{c}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "statistic": self.statistic,
            "k_min": self.k_min,
            "max_length": self.max_length,
            "rows": [list(row) for row in self.rows],
        }
        return json.dumps(payload, sort_keys=True)


def _row_for(sid: str, n: int) -> dict[int, int]:
    base, ell = parse_statistic_id(sid)
    simple, lval, lpeak, count = _length_tables(n)
    if base in SIMPLE_STATISTICS:
        return simple[base]
    sparse = (lval if base == "lval" else lpeak).get(ell, {})
    row = dict(sparse)
    row[0] = count - sum(sparse.values())
    return row


def distribution(sid: str, max_length: int, *, limit: int | None = None) -> DistributionTable:
    """Exact distribution table for a statistic, by exhaustive enumeration."""
    parse_statistic_id(sid)
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    lim = desk_limit() if limit is None else limit
    if max_length > lim:
        raise ValueError(f"max_length {max_length} exceeds desk limit {lim}")
    kmin = k_min_for(sid)
    rows = []
    for n in range(1, max_length + 1):
        row = _row_for(sid, n)
        kmax = max(row) if row else kmin
        rows.append(tuple(row.get(k, 0) for k in range(kmin, kmax + 1)))
    return DistributionTable(statistic=sid, k_min=kmin, rows=tuple(rows))


def totals(sid: str, max_length: int, *, limit: int | None = None) -> tuple[int, ...]:
    """Exact totals sum_k k * a(n, k) for n = 1..max_length."""
    table = distribution(sid, max_length, limit=limit)
    return tuple(table.weighted_sum(n) for n in range(1, max_length + 1))


def bfile(values: Sequence[int], start: int = 1) -> str:
    """OEIS b-file text: one 'n a(n)' line per value."""
    return "".join(f"{start + i} {v}\n" for i, v in enumerate(values))
