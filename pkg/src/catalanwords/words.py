"""Catalan words: validation, parsing, enumeration, and decompositions.

A Catalan word is a (possibly empty) word w1 w2 ... wn over the nonnegative
integers with w1 = 0 and 0 <= wi <= w(i-1) + 1 for i >= 2.  There are
exactly Catalan(n) such words of length n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "CatalanWord",
    "FirstReturn",
    "parse",
    "format_word",
    "enumerate_words",
    "first_return",
    "zero_blocks",
    "render_lattice",
]


def _validate(letters: tuple[int, ...]) -> None:
    for i, a in enumerate(letters):
        if not isinstance(a, int) or isinstance(a, bool):
            raise TypeError(f"letter at position {i} is not an integer: {a!r}")
        if a < 0:
            raise ValueError(f"letter at position {i} is negative: {a}")
    if letters and letters[0] != 0:
        raise ValueError(f"first letter must be 0, got {letters[0]}")
    for i in range(1, len(letters)):
        if letters[i] > letters[i - 1] + 1:
            raise ValueError(
                f"letter {letters[i]} at position {i} exceeds predecessor+1 "
                f"(growth rule)"
            )


@dataclass(frozen=True, order=True, slots=True)
class CatalanWord:
    """Immutable, validated Catalan word.  Ordering is lexicographic."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        _validate(self.letters)

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "CatalanWord":
        # Fast path for internally generated words; skips validation.
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True, slots=True)
class FirstReturn:
    """Decomposition w = 0 (inner+1) tail with inner, tail Catalan words."""

    inner: CatalanWord
    tail: CatalanWord

    def reassemble(self) -> CatalanWord:
        letters = (0,) + tuple(a + 1 for a in self.inner.letters) + self.tail.letters
        return CatalanWord(letters)


def format_word(w: CatalanWord) -> str:
    """Canonical text: digit string when all letters fit one digit, else
    comma-separated decimals.  The empty word formats as the empty string."""
    if not w.letters:
        return ""
    if max(w.letters) <= 9:
        return "".join(str(a) for a in w.letters)
    return ",".join(str(a) for a in w.letters)


def parse(text: str) -> CatalanWord:
    """Parse a word from a digit string or comma-separated integers.

    Accepts the empty string (and the spelled-out 'ε') for the empty word.
    Raises ValueError on malformed tokens or growth-rule violations.
    """
    t = text.strip()
    if t in ("", "ε", "eps", "epsilon"):
        return CatalanWord(())
    if "," in t:
        try:
            letters = tuple(int(p.strip()) for p in t.split(","))
        except ValueError:
            raise ValueError(f"malformed token in word {text!r}") from None
    elif t.isascii() and t.isdigit():
        letters = tuple(int(c) for c in t)
    else:
        raise ValueError(
            f"cannot parse word {text!r}: expected a digit string or "
            f"comma-separated integers"
        )
    return CatalanWord(letters)


def _iter_letter_lists(n: int) -> Iterator[list[int]]:
    # Yields each word of length n as the *same* mutable list, in
    # lexicographic order, via the successor rule: bump the rightmost
    # letter that may grow, reset everything after it to 0.
    if n == 0:
        yield []
        return
    w = [0] * n
    while True:
        yield w
        i = n - 1
        while i > 0 and w[i] > w[i - 1]:
            i -= 1
        if i == 0:
            return
        w[i] += 1
        for j in range(i + 1, n):
            w[j] = 0


def enumerate_words(n: int) -> Iterator[CatalanWord]:
    """Yield every Catalan word of length n exactly once, lexicographically."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    for letters in _iter_letter_lists(n):
        yield CatalanWord._trusted(tuple(letters))


def first_return(w: CatalanWord) -> FirstReturn:
    """Split w = 0 (inner+1) tail: inner+1 is the maximal run of letters >= 1
    after the leading 0; tail is the remaining suffix (empty or starting 0)."""
    if not w:
        raise ValueError("empty word has no first-return decomposition")
    ls = w.letters
    j = 1
    n = len(ls)
    while j < n and ls[j] >= 1:
        j += 1
    inner = tuple(a - 1 for a in ls[1:j])
    return FirstReturn(CatalanWord._trusted(inner), CatalanWord._trusted(ls[j:]))


def _zero_blocks_raw(ls: tuple[int, ...]) -> list[tuple[int, ...]]:
    # Split at every letter 0 into blocks 0 (u+1); return the u parts.
    blocks: list[tuple[int, ...]] = []
    n = len(ls)
    start = 0
    for i in range(1, n + 1):
        if i == n or ls[i] == 0:
            blocks.append(tuple(a - 1 for a in ls[start + 1 : i]))
            start = i
    return blocks


def zero_blocks(w: CatalanWord) -> tuple[CatalanWord, ...]:
    """Maximal split w = 0(u1+1) 0(u2+1) ... 0(ua+1); returns (u1, ..., ua).

    Each block starts at a letter 0; the blocks' interiors are shifted down
    by one.  Reassembling the blocks reproduces w.
    """
    if not w:
        raise ValueError("empty word has no zero-block decomposition")
    return tuple(CatalanWord._trusted(u) for u in _zero_blocks_raw(w.letters))


def render_lattice(w: CatalanWord) -> str:
    """Plain-text lattice diagram: one horizontal unit segment per letter at
    its height, vertical bars joining consecutive segments, rows emitted from
    the top height down to 0."""
    ls = w.letters
    if not ls:
        return ""
    top = max(ls)
    width = 2 * len(ls) - 1
    grid = [[" "] * width for _ in range(top + 1)]
    for i, a in enumerate(ls):
        grid[a][2 * i] = "_"
        if i:
            b = ls[i - 1]
            if a == b:
                grid[a][2 * i - 1] = "_"
            else:
                lo, hi = (a, b) if a < b else (b, a)
                for h in range(lo, hi):
                    grid[h][2 * i - 1] = "|"
    return "\n".join("".join(grid[h]).rstrip() for h in range(top, -1, -1))
