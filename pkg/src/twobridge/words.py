"""Billiard-table words for 2-bridge knots.

A word in ``T(c)`` is stored as its run-length sequence ``(e1, ..., ec)``
with every run of length 1 or 2. Run ``i`` carries ``+`` when ``i`` is odd
and ``-`` when ``i`` is even, so the symbol word always starts with ``+``.
The constraints are ``e1 == ec == 1`` and ``sum(e) % 3 == 1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from twobridge.exact import exact_div, pow2

PLUS = "+"
MINUS = "-"
_SYMBOL_ALIASES = str.maketrans({"−": MINUS, "–": MINUS})


class WordError(ValueError):
    """A string or run sequence that is not a member of T(c)."""


def _check_c(c: int, minimum: int = 3) -> None:
    if c < minimum:
        raise ValueError(f"crossing number must be >= {minimum}, got {c}")


def _validate_runs(runs: Sequence[int]) -> None:
    c = len(runs)
    if c < 3:
        raise WordError(f"a word needs at least 3 runs, got {c}")
    for i, e in enumerate(runs, start=1):
        if e not in (1, 2):
            raise WordError(f"run {i} has length {e}; runs must have length 1 or 2")
    if runs[0] != 1:
        raise WordError("first run must be a single symbol (e1 = 1)")
    if runs[-1] != 1:
        raise WordError("last run must be a single symbol (ec = 1)")
    length = sum(runs)
    if length % 3 != 1:
        raise WordError(f"word length {length} is {length % 3} mod 3; it must be 1 mod 3")


@dataclass(frozen=True, order=True)
class RunWord:
    runs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "runs", tuple(int(e) for e in self.runs))
        _validate_runs(self.runs)

    @property
    def c(self) -> int:
        return len(self.runs)

    @property
    def length(self) -> int:
        return sum(self.runs)

    @property
    def symbols(self) -> str:
        return to_symbols(self)

    def __str__(self) -> str:
        return self.symbols


class CaseTag(enum.IntEnum):
    """Shape of the two runs just before the final one."""

    CASE1 = 1  # single, single
    CASE2 = 2  # double, double
    CASE3 = 3  # single, double
    CASE4 = 4  # double, single


@dataclass(frozen=True)
class KnotClass:
    representative: RunWord
    orbit_size: int
    palindromic: bool


def to_symbols(w: RunWord) -> str:
    return "".join((PLUS if i % 2 == 0 else MINUS) * e for i, e in enumerate(w.runs))


def symbol_runs(symbols: str) -> list[tuple[str, int]]:
    """Split a symbol string into maximal blocks ``(symbol, length)``."""
    return [(s, len(list(g))) for s, g in itertools.groupby(symbols)]


def parse_symbols(text: str) -> RunWord:
    s = text.strip().translate(_SYMBOL_ALIASES)
    if not s:
        raise WordError("empty word")
    bad = set(s) - {PLUS, MINUS}
    if bad:
        raise WordError(f"unexpected characters {''.join(sorted(bad))!r}; use '+' and '-'")
    if s[0] != PLUS:
        raise WordError("word must start with '+'")
    return RunWord(tuple(n for _, n in symbol_runs(s)))


def parse_runs(text: str) -> RunWord:
    try:
        runs = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise WordError(f"cannot read run sequence {text!r}") from None
    return RunWord(runs)


def parse_word(text: str) -> RunWord:
    """Accept either a symbol word (``+--+``) or comma-joined runs (``1,2,1``)."""
    t = text.strip()
    if t and t[0].isdigit():
        return parse_runs(t)
    return parse_symbols(t)


def format_runs(w: RunWord) -> str:
    return ",".join(str(e) for e in w.runs)


def _middle_runs(c: int, prefix: Sequence[int]) -> Iterator[tuple[int, ...]]:
    free = c - 2 - len(prefix)
    if free < 0:
        raise ValueError(f"prefix of length {len(prefix)} is too long for c={c}")
    head = tuple(prefix)
    for tail in itertools.product((1, 2), repeat=free):
        yield head + tail


def iter_words(c: int, prefix: Sequence[int] = ()) -> Iterator[RunWord]:
    """Yield T(c) in lexicographic run order.

    ``prefix`` fixes runs ``e2, e3, ...``; the chunks for all prefixes of a
    given length partition T(c), which is how aggregation is split across
    workers.
    """
    _check_c(c)
    if any(e not in (1, 2) for e in prefix):
        raise ValueError("prefix entries must be 1 or 2")
    for middle in _middle_runs(c, prefix):
        if (sum(middle) + 2) % 3 == 1:
            yield RunWord((1, *middle, 1))


def enumerate_words(c: int, prefix: Sequence[int] = ()) -> list[RunWord]:
    return list(iter_words(c, prefix))


def enumerate_palindromic(c: int) -> list[RunWord]:
    """Words of T(c) whose run sequence reads the same backwards.

    Only the free half of the sequence is generated, so the cost is about
    ``2**(c/2)`` rather than ``2**c``.
    """
    _check_c(c)
    half = c // 2
    out = []
    # half-prefix is (1, free...), optional centre run for odd c
    for free in itertools.product((1, 2), repeat=half - 1):
        left = (1, *free)
        centres = (1, 2) if c % 2 else (None,)
        for centre in centres:
            runs = left + ((centre,) if centre else ()) + left[::-1]
            if sum(runs) % 3 == 1:
                out.append(RunWord(runs))
    return out


def reverse(w: RunWord) -> RunWord:
    """The word read backwards; only stays in T(c) when c is odd."""
    s = to_symbols(w)[::-1]
    if s[0] != PLUS:
        raise WordError(f"reverse of {to_symbols(w)} starts with '-' (c={w.c} is even; use mirror_reverse)")
    return parse_symbols(s)


def mirror_reverse(w: RunWord) -> RunWord:
    """Reverse and swap every symbol; only stays in T(c) when c is even."""
    s = to_symbols(w)[::-1].translate(str.maketrans("+-", "-+"))
    if s[0] != PLUS:
        raise WordError(f"mirror reverse of {to_symbols(w)} starts with '-' (c={w.c} is odd; use reverse)")
    return parse_symbols(s)


def involution(w: RunWord) -> RunWord:
    """The parity-correct pairing: reverse for odd c, mirror reverse for even c."""
    return reverse(w) if w.c % 2 else mirror_reverse(w)


def is_palindromic_type(w: RunWord) -> bool:
    return w.runs == w.runs[::-1]


def jacobsthal(n: int) -> int:
    if n < 0:
        raise ValueError(f"Jacobsthal index must be >= 0, got {n}")
    return exact_div(pow2(n) - (-1) ** n, 3)


def count_words(c: int) -> int:
    _check_c(c)
    return exact_div(pow2(c - 2) - (-1) ** c, 3)


def count_palindromic(c: int) -> int:
    _check_c(c)
    if c % 2:
        return jacobsthal((c - 1) // 2)
    return jacobsthal((c - 2) // 2)


def ernst_sumners_count(c: int) -> int:
    """Number of 2-bridge knots with c crossings, mirror pairs counted once."""
    _check_c(c)
    r = c % 4
    if r == 0:
        num = pow2(c - 3) + pow2((c - 4) // 2)
    elif r == 1:
        num = pow2(c - 3) + pow2((c - 3) // 2)
    elif r == 2:
        num = pow2(c - 3) + pow2((c - 4) // 2) - 1
    else:
        num = pow2(c - 3) + pow2((c - 3) // 2) + 1
    return exact_div(num, 3)


def classify_case(w: RunWord) -> CaseTag:
    if w.c < 5:
        raise ValueError(f"case classification needs c >= 5, got c={w.c}")
    pair = w.runs[-3], w.runs[-2]
    return {
        (1, 1): CaseTag.CASE1,
        (2, 2): CaseTag.CASE2,
        (1, 2): CaseTag.CASE3,
        (2, 1): CaseTag.CASE4,
    }[pair]


def reduce_tail(w: RunWord) -> tuple[RunWord, int]:
    """Shorten the tail of ``w`` by its case's replacement rule.

    Written for odd c (the even case swaps every symbol):

    1. final ``+-+``     -> ``++-``  (c - 1 crossings)
    2. final ``++--+``   -> ``+-``   (c - 1)
    3. final ``+--+``    -> ``+``    (c - 2)
    4. final ``++-+``    -> ``+``    (c - 2)
    """
    case = classify_case(w)
    head = w.runs[:-3]
    if case is CaseTag.CASE1:
        runs = head + (2, 1)
    elif case is CaseTag.CASE2:
        runs = head + (1, 1)
    else:
        runs = head + (1,)
    reduced = RunWord(runs)
    return reduced, reduced.c


def knot_classes(c: int) -> list[KnotClass]:
    """Group T(c) into orbits of the parity-correct involution, one per knot."""
    seen: set[RunWord] = set()
    classes = []
    for w in iter_words(c):
        if w in seen:
            continue
        partner = involution(w)
        seen.update((w, partner))
        classes.append(
            KnotClass(
                representative=min(w, partner),
                orbit_size=1 if partner == w else 2,
                palindromic=is_palindromic_type(w),
            )
        )
    return classes
