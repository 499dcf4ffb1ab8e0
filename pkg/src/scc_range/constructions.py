"""Witness builders: one profile construction per range result.

Every "arbitrary" ordering used by a construction is fixed to ascending id
order, so the builders are deterministic.  Callers are expected to evaluate
the matching rule on the output rather than trust it.
"""

from __future__ import annotations

from math import ceil
from typing import Iterable

from .core import Ordering, Profile, inverse_ordering

__all__ = [
    "Infeasible",
    "construct_pareto",
    "construct_maximin",
    "construct_borda",
    "plurality_feasible",
    "construct_plurality",
    "cycle_profile",
    "construct_top_cycle",
    "copeland_part1",
    "copeland_part2",
    "construct_copeland",
    "pad_with_inverse_pair",
    "append_bottom_alternative",
    "gauge",
    "construct_approval",
]


class Infeasible(ValueError):
    """The requested set or size is outside the rule's range (or this builder's scope)."""


def _check_set(m: int, S: Iterable[int]) -> list[int]:
    s = sorted(set(int(x) for x in S))
    if not s:
        raise ValueError("the target set must be non-empty")
    if s[0] < 0 or s[-1] >= m:
        raise ValueError(f"target set {s} is not a subset of 0..{m - 1}")
    return s


def _rest(m: int, used: Iterable[int]) -> list[int]:
    used = set(used)
    return [x for x in range(m) if x not in used]


def _pad_pairs(m: int, count: int) -> list[Ordering]:
    q = tuple(range(m))
    return [q if j % 2 == 0 else inverse_ordering(q) for j in range(count)]


def construct_pareto(m: int, n: int, S) -> Profile:
    if n < 2:
        raise ValueError("the Pareto construction needs n >= 2")
    s = _check_set(m, S)
    below = _rest(m, s)
    first = tuple(s + below)
    second = tuple(s[::-1] + below)
    return Profile((first, second) + (first,) * (n - 2))


def construct_maximin(m: int, n: int, k: int) -> Profile:
    """Profile whose maximin set is ``{0, ..., k-1}``.

    Starts from the unanimous profile ``0 > 1 > ... > m-1``; step ``j``
    (``j = 2 .. k``) swaps ranks ``j-1`` and ``j`` for individuals ``1 .. j-1``.
    """
    if not 1 <= k <= min(m, n):
        raise Infeasible(f"maximin builder needs 1 <= k <= min(m, n) = {min(m, n)}, got k={k}")
    rows = [list(range(m)) for _ in range(n)]
    for j in range(2, k + 1):
        for i in range(j - 1):
            rows[i][j - 2], rows[i][j - 1] = rows[i][j - 1], rows[i][j - 2]
    return Profile(tuple(tuple(r) for r in rows))


def construct_borda(m: int, n: int, S) -> Profile:
    if n % 2 or n < 2:
        raise Infeasible("the Borda builder covers even n only")
    s = _check_set(m, S)
    below = _rest(m, s)
    head = [tuple(s + below), tuple(s[::-1] + below)]
    return Profile(tuple(head + _pad_pairs(m, n - 2)))


def _plurality_failure(m: int, n: int, k: int) -> str | None:
    if not 1 <= k <= m:
        return f"k={k} outside [1, m={m}]"
    if k > n:
        return f"k={k} exceeds the number of individuals n={n}"
    q, r = divmod(n, k)
    if r == 0:
        return None
    if k == m:
        return f"k = m = {m} does not divide n = {n}"
    if q <= ceil(r / (m - k)):
        return f"floor(n/k) = {q} is not larger than ceil({r}/{m - k}) = {ceil(r / (m - k))}"
    return None


def plurality_feasible(m: int, n: int, k: int) -> bool:
    """Whether a set of ``k`` alternatives can be exactly the plurality winners."""
    return _plurality_failure(m, n, k) is None


def construct_plurality(m: int, n: int, S) -> Profile:
    s = _check_set(m, S)
    k = len(s)
    reason = _plurality_failure(m, n, k)
    if reason is not None:
        raise Infeasible(f"plurality cannot select {k} of {m} alternatives with n={n}: {reason}")
    q, r = divmod(n, k)
    firsts = [x for x in s for _ in range(q)]
    losers = _rest(m, s)
    firsts += [losers[j % len(losers)] for j in range(r)]
    return Profile(tuple((t,) + tuple(_rest(m, [t])) for t in firsts))


def _cycle_orderings(S) -> list[list[int]]:
    s = list(S)
    if len(s) < 3:
        raise ValueError("a majority cycle needs at least 3 alternatives")
    x, y, z = s[:3]
    rows = [[x, y, z], [y, z, x], [z, x, y]]
    pivot = y
    for w in s[3:]:
        for row in rows:
            row.insert(row.index(pivot) + 1, w)
        pivot = w
    return rows


def cycle_profile(S) -> Profile:
    """Three-individual profile on ``len(S)`` alternatives whose majority
    closure makes all of them indifferent.

    Alternative ``i`` of the result stands for ``S[i]``.  The base is the
    3-cycle on ``S[0], S[1], S[2]``; ``S[3]`` goes just below ``S[1]`` in every
    ordering and each later alternative just below the previous insertion.
    """
    s = list(S)
    if len(set(s)) != len(s):
        raise ValueError("cycle alternatives must be distinct")
    index = {a: i for i, a in enumerate(s)}
    return Profile(tuple(tuple(index[a] for a in row) for row in _cycle_orderings(s)))


def construct_top_cycle(m: int, n: int, S) -> Profile:
    s = _check_set(m, S)
    below = _rest(m, s)
    if n < 2:
        raise ValueError("top-cycle builder needs n >= 2")
    if n % 2 == 0:
        head = [tuple(s + below), tuple(s[::-1] + below)]
    else:
        if len(s) == 2:
            raise Infeasible("with odd n no two-element set is a top cycle")
        if n < 3:
            raise ValueError("odd n needs at least 3 individuals")
        if len(s) == 1:
            head = [tuple(s + below)] * 3
        else:
            head = [tuple(row + below) for row in _cycle_orderings(s)]
    return Profile(tuple(head + _pad_pairs(m, n - len(head))))


def copeland_part1(m: int) -> Profile:
    """Three-individual profile on odd ``m`` where every Copeland score is (m-1)/2.

    Grows the 3-cycle two alternatives at a time.  At step ``t`` the fresh
    pair ``(p, q)`` goes to the top and bottom of individual 1; for odd ``t``
    q tops individual 2 and p is last for individual 3 (even ``t`` swaps 2 and
    3); then p enters the middle rank of the individual q tops and q the
    middle rank of the other.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"Part 1 profiles exist for odd m only, got m={m}")
    if m == 1:
        return Profile(((0,),) * 3)
    rows = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    for t in range(1, (m - 1) // 2):
        p, q = 2 * t + 1, 2 * t + 2
        topped, bottomed = (rows[1], rows[2]) if t % 2 else (rows[2], rows[1])
        rows[0].insert(0, p)
        rows[0].append(q)
        topped.insert(0, q)
        bottomed.append(p)
        middle = (len(rows[0]) + 1) // 2 - 1
        topped.insert(middle, p)
        bottomed.insert(middle, q)
    return Profile(tuple(tuple(r) for r in rows))


def copeland_part2(u: Profile) -> Profile:
    """Insert a new alternative ``t``: top for #1, bottom for #2, next-to-bottom for #3.

    Applied to a Part 1 profile, every old alternative except the last one of
    individual 3 gains a win over ``t``.
    """
    if u.n != 3:
        raise ValueError("the t-insertion acts on three individuals")
    t = u.m
    first, second, third = (list(o) for o in u.orderings)
    first.insert(0, t)
    second.append(t)
    third.insert(len(third) - 1, t)
    return Profile((tuple(first), tuple(second), tuple(third)))


def pad_with_inverse_pair(u: Profile) -> Profile:
    """Append ``Q`` and its inverse; margins are unchanged."""
    q = tuple(range(u.m))
    return Profile(u.orderings + (q, inverse_ordering(q)))


def append_bottom_alternative(u: Profile) -> Profile:
    return Profile(tuple(o + (u.m,) for o in u.orderings))


def construct_copeland(m: int, n: int, k: int) -> Profile:
    """Profile with exactly ``k`` Copeland winners (the alternatives ``0..k-1``
    for even n; for odd n the winners depend on the construction)."""
    if not 1 <= k <= m:
        raise Infeasible(f"size k={k} outside [1, m={m}]")
    if n < 2:
        raise ValueError("Copeland builder needs n >= 2")
    if n % 2 == 0:
        s = list(range(k))
        below = _rest(m, s)
        u = Profile((tuple(s + below), tuple(s[::-1] + below)))
        base_n = 2
    else:
        if m % 2 == 0 and k == m:
            raise Infeasible("m even: size m infeasible for odd n (equal scores would be (m-1)/2)")
        if m % 2 == 1 and k == m - 1:
            raise Infeasible("m odd: size m-1 infeasible for odd n (no integer score fits)")
        if k % 2:
            u = copeland_part1(k)
        else:
            u = copeland_part2(copeland_part1(k + 1))
        while u.m < m:
            u = append_bottom_alternative(u)
        base_n = 3
    for _ in range((n - base_n) // 2):
        u = pad_with_inverse_pair(u)
    return u


def gauge(b) -> int:
    return max(int(x) for x in b)


def construct_approval(m: int, n: int, S) -> tuple[Profile, tuple[int, ...]]:
    """Profile and index vector whose approval winners are exactly ``S``.

    Members of S are laid out as a token stream filling rank 1 for every
    individual, then rank 2, and so on.  With ``k >= n`` each member appears
    once; with ``2 <= k < n`` each appears ``floor(n/k) + 1`` times, which
    spills into rank 2 only.  Each individual approves exactly its tokens.
    """
    s = _check_set(m, S)
    k = len(s)
    if k > m:
        raise Infeasible(f"|S|={k} exceeds m={m}")
    if k == 1:
        tokens = s * n
    elif k >= n:
        tokens = list(s)
    else:
        q = n // k
        tokens = [x for x in s for _ in range(q + 1)]
    columns: list[list[int]] = [[] for _ in range(n)]
    for j, x in enumerate(tokens):
        columns[j % n].append(x)
    rows = []
    for col in columns:
        assert len(set(col)) == len(col), "token layout placed a member twice in one ordering"
        rows.append(tuple(col + _rest(m, col)))
    ballots = tuple(len(col) for col in columns)
    return Profile(tuple(rows)), ballots
