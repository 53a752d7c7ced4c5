"""Forbidden factors of binary words.

A word is a string over {'0', '1'}; a pattern is a nonempty word that must
not occur as a factor (a block of consecutive letters).  Counting words by
(number of ones, number of zeros) that avoid the pattern is done three ways
that must agree: a closed generating function built from the pattern's
autocorrelation, a prefix-automaton dynamic program, and plain exhaustive
enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .series import BSeries

ENUMERATION_LIMIT = 22


class TooLarge(Exception):
    """Exhaustive enumeration refused: the word length guard was exceeded."""


@dataclass(frozen=True)
class Pattern:
    """A nonempty binary word used as a forbidden factor."""

    bits: str

    def __post_init__(self):
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ValueError("pattern must be a nonempty string over 0/1")

    @property
    def ones(self) -> int:
        return self.bits.count("1")

    @property
    def zeros(self) -> int:
        return self.bits.count("0")

    def reverse(self) -> "Pattern":
        return Pattern(self.bits[::-1])

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits


def as_pattern(p: "Pattern | str") -> Pattern:
    return p if isinstance(p, Pattern) else Pattern(p)


def autocorrelation(p: "Pattern | str") -> tuple[int, ...]:
    """The vector (c_0, ..., c_{h-1}) with c_i = 1 iff the pattern's prefix
    of length h - i equals its suffix of length h - i.  c_0 is always 1."""
    bits = as_pattern(p).bits
    h = len(bits)
    return tuple(1 if bits[: h - i] == bits[i:] else 0 for i in range(h))


def correlation_terms(p: "Pattern | str") -> list[tuple[int, int]]:
    """(ones, zeros) of each pattern tail marked by the autocorrelation.

    Shift i with c_i = 1 contributes the tail of length i; shift 0
    contributes the empty tail (0, 0).  Ordered by increasing shift.
    """
    bits = as_pattern(p).bits
    h = len(bits)
    terms = []
    for i, c in enumerate(autocorrelation(bits)):
        if c:
            tail = bits[h - i :]
            terms.append((tail.count("1"), tail.count("0")))
    return terms


def correlation_polynomial(p: "Pattern | str", order: int) -> BSeries:
    """The correlation polynomial as a bivariate series, x marking ones and
    y marking zeros of each tail.  Needs a grid large enough to hold every
    term, hence order >= max(ones, zeros) of the pattern."""
    p = as_pattern(p)
    if order < max(p.ones, p.zeros):
        raise ValueError("order too small to hold the correlation polynomial")
    return BSeries.from_terms({t: 1 for t in correlation_terms(p)}, order)


def avoider_table(p: "Pattern | str", order: int) -> BSeries:
    """Entry (n, k): words with n ones and k zeros avoiding the pattern.

    Computed as C / ((1 - x - y) C + x^a y^b) with C the correlation
    polynomial and (a, b) the pattern's letter counts.  Exact on the whole
    grid for any order: terms that fall off the grid cannot influence the
    retained entries.
    """
    p = as_pattern(p)
    c = BSeries.from_terms({t: 1 for t in correlation_terms(p)}, order)
    linear = BSeries.from_terms({(0, 0): 1, (1, 0): -1, (0, 1): -1}, order)
    denom = linear * c + BSeries.from_terms({(p.ones, p.zeros): 1}, order)
    return c / denom


# -- oracles ----------------------------------------------------------------


def _arrangements(ones: int, zeros: int):
    n = ones + zeros
    for positions in itertools.combinations(range(n), ones):
        letters = ["0"] * n
        for i in positions:
            letters[i] = "1"
        yield "".join(letters)


def _check_size(ones: int, zeros: int) -> None:
    if ones < 0 or zeros < 0:
        raise ValueError("letter counts must be non-negative")
    if ones + zeros > ENUMERATION_LIMIT:
        raise TooLarge(
            f"refusing to enumerate words of length {ones + zeros} "
            f"(limit {ENUMERATION_LIMIT})"
        )


def avoiding_words(p: "Pattern | str", ones: int, zeros: int) -> set[str]:
    """Every word with the given letter counts avoiding the pattern."""
    p = as_pattern(p)
    _check_size(ones, zeros)
    return {w for w in _arrangements(ones, zeros) if p.bits not in w}


def count_by_enumeration(p: "Pattern | str", ones: int, zeros: int) -> int:
    """Avoider count by direct enumeration; guarded by ENUMERATION_LIMIT."""
    p = as_pattern(p)
    _check_size(ones, zeros)
    return sum(1 for w in _arrangements(ones, zeros) if p.bits not in w)


def _failure(bits: str) -> list[int]:
    fail = [0] * len(bits)
    k = 0
    for i in range(1, len(bits)):
        while k and bits[i] != bits[k]:
            k = fail[k - 1]
        if bits[i] == bits[k]:
            k += 1
        fail[i] = k
    return fail


def _transitions(bits: str) -> list[list[int]]:
    # trans[s][b]: longest pattern prefix that is a suffix after reading
    # bit b in state s; state len(bits) would be a full match.
    fail = _failure(bits)
    h = len(bits)
    trans = [[0, 0] for _ in range(h)]
    for s in range(h):
        for b in (0, 1):
            ch = "01"[b]
            if ch == bits[s]:
                trans[s][b] = s + 1
            elif s == 0:
                trans[s][b] = 0
            else:
                trans[s][b] = trans[fail[s - 1]][b]
    return trans


def count_by_automaton(p: "Pattern | str", ones: int, zeros: int) -> int:
    """Avoider count by dynamic programming over the pattern's prefix
    automaton, with the full-match state forbidden.  Polynomial in the
    letter counts, so no size guard is needed."""
    p = as_pattern(p)
    if ones < 0 or zeros < 0:
        raise ValueError("letter counts must be non-negative")
    bits = p.bits
    h = len(bits)
    trans = _transitions(bits)
    dp = [[[0] * h for _ in range(zeros + 1)] for _ in range(ones + 1)]
    dp[0][0][0] = 1
    for i in range(ones + 1):
        for z in range(zeros + 1):
            row = dp[i][z]
            for s in range(h):
                c = row[s]
                if not c:
                    continue
                if i < ones:
                    t = trans[s][1]
                    if t < h:
                        dp[i + 1][z][t] += c
                if z < zeros:
                    t = trans[s][0]
                    if t < h:
                        dp[i][z + 1][t] += c
    return sum(dp[ones][zeros])
