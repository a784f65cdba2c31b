"""Words over the alphabet 1..r: lexicographic order, Lyndon machinery,
canonical factorizations and commutation classes.

Words are plain tuples of integers, so Python's tuple comparison is exactly
the lexicographic order in which a proper prefix is smaller.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .cartan import CartanDatum

Word = tuple[int, ...]


class EmptyWord(ValueError):
    """The operation needs a nonempty word."""


class NotLyndon(ValueError):
    """The operation needs a Lyndon word."""


class TooShort(ValueError):
    """Factorization needs a word of length at least 2."""


def word(*letters: int) -> Word:
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    return "w[" + ",".join(str(a) for a in w) + "]"


def parse_word(text: str, rank: int | None = None) -> Word:
    text = text.strip()
    if text.startswith("w[") and text.endswith("]"):
        text = text[2:-1]
    if not text:
        return ()
    w = tuple(int(p) for p in text.split(","))
    if any(a < 1 for a in w) or (rank is not None and any(a > rank for a in w)):
        raise ValueError(f"letters must lie in 1..{rank}")
    return w


def lex_compare(w: Word, x: Word) -> int:
    """-1, 0 or 1; a proper prefix compares smaller."""
    if w == x:
        return 0
    return -1 if w < x else 1


def is_lyndon(w: Word) -> bool:
    """True iff w is strictly smaller than every proper right factor."""
    if not w:
        raise EmptyWord("the empty word is not eligible")
    return all(w < w[j:] for j in range(1, len(w)))


def lyndon_factorization(w: Word) -> list[Word]:
    """The unique non-increasing factorization into Lyndon words (Duval's algorithm)."""
    out: list[Word] = []
    k, n = 0, len(w)
    while k < n:
        i, j = k, k + 1
        while j < n and w[i] <= w[j]:
            i = k if w[i] < w[j] else i + 1
            j += 1
        while k <= i:
            out.append(w[k : k + j - i])
            k += j - i
    return out


def _check_factorable(l: Word) -> None:
    if len(l) < 2:
        raise TooShort(f"{format_word(l)} has no nontrivial factorization")
    if not is_lyndon(l):
        raise NotLyndon(f"{format_word(l)} is not Lyndon")


def standard_factorization(l: Word) -> tuple[Word, Word]:
    """Split before the longest proper right factor that is Lyndon."""
    _check_factorable(l)
    for s in range(1, len(l)):
        if is_lyndon(l[s:]):
            return l[:s], l[s:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


def costandard_factorization(l: Word) -> tuple[Word, Word]:
    """Split after the longest proper left factor that is Lyndon."""
    _check_factorable(l)
    for s in range(len(l) - 1, 0, -1):
        if is_lyndon(l[:s]):
            left, right = l[:s], l[s:]
            # Both halves of either canonical split are Lyndon again.
            assert is_lyndon(right), format_word(l)
            return left, right
    raise AssertionError("unreachable: the first letter is always Lyndon")


def commutation_class(w: Word, datum: "CartanDatum") -> frozenset[Word]:
    """Closure of w under swaps of adjacent letters i, j with a_ij = 0."""
    a = datum.cartan
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        for p in range(len(v) - 1):
            x, y = v[p], v[p + 1]
            if x != y and a[x - 1][y - 1] == 0:
                u = v[:p] + (y, x) + v[p + 2 :]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return frozenset(seen)
