"""Word algebra: convolution, projections, primitive roots, conjugacy.

Words are plain tuples of symbols, which keeps them hashable for use as
search keys.  All functions are pure.
"""
from __future__ import annotations

from .automata import Word


def convolve(w: Word, x: Word) -> Word:
    """Zip two equal-length words into one word over the pair alphabet."""
    w, x = tuple(w), tuple(x)
    if len(w) != len(x):
        raise ValueError(f"length mismatch: {len(w)} vs {len(x)}")
    return tuple(zip(w, x))


def project(y: Word, coordinate: int) -> Word:
    """Extract the first or second track of a word over a pair alphabet."""
    if coordinate not in (1, 2):
        raise ValueError(f"coordinate must be 1 or 2, got {coordinate!r}")
    out = []
    for symbol in y:
        if not (isinstance(symbol, tuple) and len(symbol) == 2):
            raise ValueError(f"non-pair symbol {symbol!r}")
        out.append(symbol[coordinate - 1])
    return tuple(out)


def _border_table(x: Word) -> list:
    # Classic failure function: border[i] = length of the longest proper
    # border of x[:i+1].
    border = [0] * len(x)
    k = 0
    for i in range(1, len(x)):
        while k and x[i] != x[k]:
            k = border[k - 1]
        if x[i] == x[k]:
            k += 1
        border[i] = k
    return border


def primitive_root(x: Word):
    """Return (t, e) with t primitive and t**e == x.

    Uses the border table: the shortest period is |x| minus the longest
    border, and it yields the root exactly when it divides |x|.
    """
    x = tuple(x)
    if not x:
        raise ValueError("the empty word has no primitive root")
    period = len(x) - _border_table(x)[-1]
    if len(x) % period == 0:
        return x[:period], len(x) // period
    return x, 1


def _occurs_in(needle: Word, haystack: Word) -> bool:
    # Knuth-Morris-Pratt over symbol tuples; symbols may be pairs, so we
    # cannot fall back on str.find.
    if not needle:
        return True
    border = _border_table(needle)
    k = 0
    for symbol in haystack:
        while k and symbol != needle[k]:
            k = border[k - 1]
        if symbol == needle[k]:
            k += 1
        if k == len(needle):
            return True
    return False


def commutes(x: Word, y: Word) -> bool:
    """True iff xy == yx."""
    x, y = tuple(x), tuple(y)
    return x + y == y + x


def are_conjugates(x: Word, y: Word) -> bool:
    """True iff y is a cyclic shift of x.

    Linear time via the doubling trick: same length and y occurs in xx.
    The empty word is conjugate only to itself.
    """
    x, y = tuple(x), tuple(y)
    if len(x) != len(y):
        return False
    if not x:
        return True
    return _occurs_in(y, x + x)
