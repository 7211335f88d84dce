"""Unavoidable-pattern families and polynomial-time specialized checkers.

The base family for parameters (n, k) has seven members: the constant
pattern of length k+2, the doubled monotone staircase 0011...nn and its
reverse, and the four concatenations of two strictly monotone runs over
the same n+1 values.  The balanced-word family swaps the constant for
multiplied staircases 0^(k+1)...n^(k+1).

The checkers run in polynomial time by reducing every direction choice
to one of two chain searches over per-value occurrence lists:

* both runs ascending: pick the lowest value's position pair as a pivot
  (its second position bounds every first-block position from above),
  then grow a chain over higher values keeping the Pareto-minimal
  (last first-block position, last second-block position) states;
* first run descending, second ascending: the two positions of each
  value form an interval, and a valid occurrence is a chain of
  intervals nested outward as the value grows.

Reversing one or both runs is the same search on the value-complemented
host, which leaves positions untouched.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass

from .words import Occurrence, Word, occurrences_by_value


class Direction(enum.Enum):
    """Orientation of a monotone run: identity or reversal."""

    ID = "id"
    REV = "rev"

    def flip(self) -> "Direction":
        return Direction.REV if self is Direction.ID else Direction.ID

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FamilyId:
    """Identifies one member of an unavoidable-pattern family."""

    kind: str  # "constant" | "doubled_monotone" | "double_run"
    n: int
    k: int
    e1: Direction | None = None
    e2: Direction | None = None

    def __str__(self) -> str:
        if self.kind == "constant":
            return "Constant"
        if self.kind == "doubled_monotone":
            return f"DoubledMonotone({self.e1})"
        return f"DoubleRun({self.e1},{self.e2})"


def constant_pattern(m: int) -> Word:
    return (0,) * m


def multiplied_monotone_pattern(n: int, mult: int, e: Direction) -> Word:
    """n+1 groups of ``mult`` equal letters, strictly monotone per ``e``."""
    base = tuple(v for v in range(n + 1) for _ in range(mult))
    return base if e is Direction.ID else base[::-1]


def run_pattern(n: int, e: Direction) -> Word:
    base = tuple(range(n + 1))
    return base if e is Direction.ID else base[::-1]


def double_run_pattern(n: int, e1: Direction, e2: Direction) -> Word:
    return run_pattern(n, e1) + run_pattern(n, e2)


def _dedup(items: list[tuple[FamilyId, Word]]) -> list[tuple[FamilyId, Word]]:
    seen: set[Word] = set()
    out = []
    for fid, pat in items:
        if pat not in seen:
            seen.add(pat)
            out.append((fid, pat))
    return out


def family(n: int, k: int) -> list[tuple[FamilyId, Word]]:
    """The seven base patterns for (n, k), degenerate duplicates collapsed.

    Fixed order: constant, doubled monotone (id, rev), then the four
    double runs (id,id), (id,rev), (rev,id), (rev,rev).
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    items = [
        (FamilyId("constant", n, k), constant_pattern(k + 2)),
        (
            FamilyId("doubled_monotone", n, k, Direction.ID),
            multiplied_monotone_pattern(n, 2, Direction.ID),
        ),
        (
            FamilyId("doubled_monotone", n, k, Direction.REV),
            multiplied_monotone_pattern(n, 2, Direction.REV),
        ),
    ]
    items += [
        (FamilyId("double_run", n, k, e1, e2), double_run_pattern(n, e1, e2))
        for e1 in Direction
        for e2 in Direction
    ]
    return _dedup(items)


def family_mult(n: int, k: int) -> list[tuple[FamilyId, Word]]:
    """The six balanced-word patterns: multiplied staircases and double runs.

    The doubled-monotone members use group size k+1; at k=1 they
    coincide with the base family's staircases.
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    items = [
        (
            FamilyId("doubled_monotone", n, k, Direction.ID),
            multiplied_monotone_pattern(n, k + 1, Direction.ID),
        ),
        (
            FamilyId("doubled_monotone", n, k, Direction.REV),
            multiplied_monotone_pattern(n, k + 1, Direction.REV),
        ),
    ]
    items += [
        (FamilyId("double_run", n, k, e1, e2), double_run_pattern(n, e1, e2))
        for e1 in Direction
        for e2 in Direction
    ]
    return _dedup(items)


def contains_constant(w, m: int) -> Occurrence | None:
    """First m positions of the value whose m-th occurrence comes earliest."""
    if m < 1:
        raise ValueError(f"multiplicity must be positive, got {m}")
    seen: dict[int, list[int]] = {}
    for i, v in enumerate(tuple(w), start=1):
        ps = seen.setdefault(v, [])
        ps.append(i)
        if len(ps) == m:
            return tuple(ps)
    return None


def _complement(w: Word) -> Word:
    top = max(w)
    return tuple(top - v for v in w)


def contains_multiplied_monotone(w, n: int, mult: int, e: Direction) -> Occurrence | None:
    """Occurrence of n+1 groups of ``mult`` equal letters, monotone per ``e``."""
    w = tuple(w)
    if len(w) < (n + 1) * mult:
        return None
    host = w if e is Direction.ID else _complement(w)
    return _multiplied_monotone_ascending(host, n, mult)


def _multiplied_monotone_ascending(w: Word, n: int, mult: int) -> Occurrence | None:
    # Chain DP over values in increasing order.  best[L] is the minimal
    # achievable end position of an L-group chain together with its
    # groups; extending with value v always takes the first `mult`
    # occurrences of v after the previous end, which is exchange-optimal.
    occ = occurrences_by_value(w)
    target = n + 1
    best: list[tuple[int, tuple] | None] = [None] * (target + 1)
    best[0] = (0, ())
    for v in sorted(occ):
        ps = occ[v]
        if len(ps) < mult:
            continue
        updates = []
        for length in range(1, target + 1):
            prev = best[length - 1]
            if prev is None:
                break
            i = bisect_right(ps, prev[0])
            if i + mult <= len(ps):
                group = tuple(ps[i : i + mult])
                updates.append((length, group[-1], prev[1] + (group,)))
        for length, end, groups in updates:
            if best[length] is None or end < best[length][0]:
                best[length] = (end, groups)
        if best[target] is not None:
            _, groups = best[target]
            return tuple(p for group in groups for p in group)
    return None


def contains_double_run(w, n: int, e1: Direction, e2: Direction) -> Occurrence | None:
    """Occurrence of two position-separated monotone runs over the same
    n+1 values, the first oriented per ``e1`` and the second per ``e2``."""
    w = tuple(w)
    if len(w) < 2 * (n + 1):
        return None
    if e1 is Direction.ID and e2 is Direction.ID:
        return _double_run_both_ascending(w, n)
    if e1 is Direction.REV and e2 is Direction.REV:
        return _double_run_both_ascending(_complement(w), n)
    if e1 is Direction.REV and e2 is Direction.ID:
        return _double_run_nested(w, n)
    return _double_run_nested(_complement(w), n)


def _pareto_insert_min(front: list, p: int, q: int, trail) -> None:
    # Keep states minimal in both coordinates.
    for P, Q, _ in front:
        if P <= p and Q <= q:
            return
    front[:] = [(P, Q, t) for P, Q, t in front if not (p <= P and q <= Q)]
    front.append((p, q, trail))


def _double_run_both_ascending(w: Word, n: int) -> Occurrence | None:
    # Occurrence shape: positions p_0 < ... < p_n < q_0 < ... < q_n with
    # w[p_t] = w[q_t] = v_t and v_0 < ... < v_n.  The lowest value's pair
    # (p_0, q_0) is the pivot: every later first-block position must fall
    # inside (p_0, q_0) and every later second-block position after the
    # previous one.  Greedy take-all is not sound (a low value with late
    # positions can block better chains), so per chain length we keep the
    # Pareto-minimal (last_p, last_q) states.
    occ = occurrences_by_value(w)
    values = sorted(occ)
    for vi, v0 in enumerate(values):
        if len(values) - vi < n + 1:
            break
        ps0 = occ[v0]
        if len(ps0) < 2:
            continue
        for ai in range(len(ps0) - 1):
            for bi in range(ai + 1, len(ps0)):
                found = _chain_both_ascending(w, occ, n, v0, ps0[ai], ps0[bi])
                if found is not None:
                    return found
    return None


def _chain_both_ascending(
    w: Word, occ: dict, n: int, v0: int, p0: int, q0: int
) -> Occurrence | None:
    if n == 0:
        return (p0, q0)
    window_values = sorted({w[x - 1] for x in range(p0 + 1, q0) if w[x - 1] > v0})
    if len(window_values) < n:
        return None
    fronts: list[list] = [[] for _ in range(n + 1)]
    fronts[0] = [(p0, q0, ())]
    for v in window_values:
        ps = occ[v]
        new = []
        for length in range(n, 0, -1):
            for P, Q, trail in fronts[length - 1]:
                i = bisect_right(ps, P)
                if i >= len(ps) or ps[i] >= q0:
                    continue
                j = bisect_right(ps, Q)
                if j >= len(ps):
                    continue
                new.append((length, ps[i], ps[j], trail + ((ps[i], ps[j]),)))
        for length, p, q, trail in new:
            if length == n:
                firsts = (p0,) + tuple(pp for pp, _ in trail)
                seconds = (q0,) + tuple(qq for _, qq in trail)
                return firsts + seconds
            _pareto_insert_min(fronts[length], p, q, trail)
    return None


def _double_run_nested(w: Word, n: int) -> Occurrence | None:
    # Occurrence shape (first run descending, second ascending):
    # p_n < ... < p_0 < q_0 < ... < q_n with w[p_t] = w[q_t] = v_t and
    # v_0 < ... < v_n, i.e. a chain of position intervals (p, q) nested
    # outward as the value grows.  States per chain length keep the
    # outermost interval, preferring a late start and an early end.
    occ = occurrences_by_value(w)
    target = n + 1
    fronts: list[list] = [[] for _ in range(target + 1)]
    for v in sorted(occ):
        ps = occ[v]
        pairs = [(p, q) for i, p in enumerate(ps) for q in ps[i + 1 :]]
        if not pairs:
            continue
        new = [(1, p, q, ((p, q),)) for p, q in pairs]
        for length in range(target, 1, -1):
            for P, Q, trail in fronts[length - 1]:
                for p, q in pairs:
                    if p < P and q > Q:
                        new.append((length, p, q, trail + ((p, q),)))
        for length, p, q, trail in new:
            if length == target:
                firsts = tuple(pp for pp, _ in reversed(trail))
                seconds = tuple(qq for _, qq in trail)
                return firsts + seconds
            # Prefer large p (late start) and small q (early end).
            dominated = False
            for P, Q, _ in fronts[length]:
                if P >= p and Q <= q:
                    dominated = True
                    break
            if not dominated:
                fronts[length] = [
                    (P, Q, t) for P, Q, t in fronts[length] if not (p >= P and q <= Q)
                ]
                fronts[length].append((p, q, trail))
    return None


def find_family_member(w, fid: FamilyId, doubled_mult: int | None = None) -> Occurrence | None:
    """Run the specialized checker for one family member.

    ``doubled_mult`` overrides the group size of doubled-monotone
    members: 2 (default) for the base family, k+1 for the balanced-word
    family.
    """
    if fid.kind == "constant":
        return contains_constant(w, fid.k + 2)
    if fid.kind == "doubled_monotone":
        mult = 2 if doubled_mult is None else doubled_mult
        return contains_multiplied_monotone(w, fid.n, mult, fid.e1)
    if fid.kind == "double_run":
        return contains_double_run(w, fid.n, fid.e1, fid.e2)
    raise ValueError(f"unknown family member kind: {fid.kind}")


def base_pattern(fid: FamilyId) -> Word:
    """The concrete base-family pattern a FamilyId names."""
    if fid.kind == "constant":
        return constant_pattern(fid.k + 2)
    if fid.kind == "doubled_monotone":
        return multiplied_monotone_pattern(fid.n, 2, fid.e1)
    if fid.kind == "double_run":
        return double_run_pattern(fid.n, fid.e1, fid.e2)
    raise ValueError(f"unknown family member kind: {fid.kind}")


def contains_any_family(w, n: int, k: int) -> tuple[FamilyId, Occurrence] | None:
    """First base-family member with an occurrence, in the fixed order."""
    for fid, _ in family(n, k):
        found = find_family_member(w, fid)
        if found is not None:
            return fid, found
    return None
