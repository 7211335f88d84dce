"""Core operations on words: finite sequences of non-negative integers.

A word may repeat letters.  A *pattern* (also called a Cayley permutation)
is a word fixed by standardisation: its distinct letters are exactly
{0, 1, ..., m}.  Occurrences are tuples of 1-based, strictly increasing
positions into a host word.
"""

from __future__ import annotations

from collections import Counter

Word = tuple[int, ...]
Occurrence = tuple[int, ...]


class InvalidOccurrence(ValueError):
    """Occurrence indices are out of range or not strictly increasing."""


def standardise(w) -> Word:
    """Relabel the letters of ``w`` order-preservingly onto {0, ..., m}.

    The empty word standardises to itself.
    """
    w = tuple(w)
    rank = {v: i for i, v in enumerate(sorted(set(w)))}
    return tuple(rank[v] for v in w)


def is_pattern(w) -> bool:
    """True iff ``w`` is fixed by standardisation."""
    w = tuple(w)
    return standardise(w) == w


def repeats(w) -> int:
    """Number of letter occurrences that are not the first of their value."""
    w = tuple(w)
    return len(w) - len(set(w))


def reverse(w) -> Word:
    return tuple(w)[::-1]


def subword(w, occ) -> Word:
    """Extract the letters of ``w`` at the 1-based positions ``occ``."""
    w = tuple(w)
    occ = tuple(occ)
    for prev, cur in zip((0,) + occ, occ):
        if cur <= prev or cur > len(w):
            raise InvalidOccurrence(
                f"positions must be strictly increasing within 1..{len(w)}: {occ}"
            )
    return tuple(w[i - 1] for i in occ)


def occurrences_by_value(w) -> dict[int, list[int]]:
    """Map each letter value to its sorted list of 1-based positions."""
    positions: dict[int, list[int]] = {}
    for i, v in enumerate(tuple(w), start=1):
        positions.setdefault(v, []).append(i)
    return positions


def contains(w, p) -> Occurrence | None:
    """Find an occurrence of the pattern ``p`` in ``w``, or None.

    Returns the lexicographically least occurrence under index order.
    Backtracking search over positions with order-isomorphism pruning;
    exponential in ``len(p)`` in the worst case, which is fine at the
    word sizes this library targets.  ``p`` must be a nonempty pattern.
    """
    w = tuple(w)
    p = tuple(p)
    if not p:
        raise ValueError("pattern must be nonempty")
    if not is_pattern(p):
        raise ValueError(f"not a standardised pattern: {p}")
    m = len(p)
    if m > len(w):
        return None

    # bound[letter] = host value assigned to that pattern letter, or None.
    bound: list[int | None] = [None] * (max(p) + 1)
    chosen: list[int] = []

    def feasible(letter: int, value: int) -> bool:
        if bound[letter] is not None:
            return bound[letter] == value
        for other, ov in enumerate(bound):
            if ov is None:
                continue
            if other < letter and ov >= value:
                return False
            if other > letter and ov <= value:
                return False
        return True

    def search(t: int, start: int) -> bool:
        if t == m:
            return True
        for i in range(start, len(w) - (m - t) + 1):
            v = w[i]
            letter = p[t]
            if not feasible(letter, v):
                continue
            was_unbound = bound[letter] is None
            bound[letter] = v
            chosen.append(i + 1)
            if search(t + 1, i + 1):
                return True
            chosen.pop()
            if was_unbound:
                bound[letter] = None
        return False

    if search(0, 0):
        return tuple(chosen)
    return None


def is_inversion_sequence(w) -> bool:
    """True iff every letter is smaller than its 1-based position."""
    return all(v < i for i, v in enumerate(tuple(w), start=1))


def render_grid(w) -> str:
    """Draw ``w`` as a monospace grid with a point at (position, value).

    Rows run from the maximum value down to 0.  When ``w`` is an
    inversion sequence, the cells on the diagonal (column i, value i)
    are dashed to show the staircase bounding the admissible region.
    """
    w = tuple(w)
    if not w:
        raise ValueError("cannot render the empty word")
    maxv = max(w)
    staircase = is_inversion_sequence(w)
    cell = max(len(str(len(w))), 1)
    label = len(str(maxv))
    lines = []
    for row in range(maxv, -1, -1):
        cells = []
        for col in range(1, len(w) + 1):
            if w[col - 1] == row:
                mark = "*"
            elif staircase and row == col:
                mark = "-"
            else:
                mark = "."
            cells.append(mark.rjust(cell))
        lines.append(f"{str(row).rjust(label)} |" + " ".join(cells))
    lines.append(" " * label + " +" + "-" * ((cell + 1) * len(w) - 1))
    lines.append(
        " " * label + "  " + " ".join(str(c).rjust(cell) for c in range(1, len(w) + 1))
    )
    return "\n".join(lines)


def parse_word(text: str) -> Word:
    """Parse the shared word text format.

    Either decimal integers separated by spaces or commas ("13 14 15"),
    or a compact digit string ("13043134") where every letter is a
    single digit.  A separator anywhere selects the separated form.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text or any(c.isspace() for c in text):
        parts = [p for chunk in text.split(",") for p in chunk.split()]
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"not a valid word: {text!r}") from None
    elif text.isdigit():
        letters = tuple(int(c) for c in text)
    else:
        raise ValueError(f"not a valid word: {text!r}")
    if any(v < 0 for v in letters):
        raise ValueError(f"letters must be non-negative: {text!r}")
    return letters


def format_word(w) -> str:
    """Render a word in the shared text format.

    Uses the compact digit string when every letter is a single digit,
    space-separated decimals otherwise.
    """
    w = tuple(w)
    if all(v <= 9 for v in w):
        return "".join(str(v) for v in w)
    return " ".join(str(v) for v in w)


def multiplicities(w) -> Counter:
    """Letter value -> number of occurrences."""
    return Counter(tuple(w))
