"""Social choice correspondences.

Every rule maps a :class:`~scc_range.core.Profile` to a non-empty frozenset of
alternatives.  Ties are never broken.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from .core import ChoiceSet, Profile, majority_matrix

RULES = ("tops", "pareto", "maximin", "borda", "plurality", "top_cycle", "copeland", "approval")


class UnknownRule(KeyError):
    pass


class MissingBallots(ValueError):
    pass


def _argmax(values) -> ChoiceSet:
    values = np.asarray(values)
    return frozenset(np.flatnonzero(values == values.max()).tolist())


def _argmin(values) -> ChoiceSet:
    values = np.asarray(values)
    return frozenset(np.flatnonzero(values == values.min()).tolist())


def tops(u: Profile) -> ChoiceSet:
    return frozenset(o[0] for o in u.orderings)


def pareto(u: Profile) -> ChoiceSet:
    """Alternatives that no other alternative beats unanimously."""
    dominated = (majority_matrix(u).support == u.n).any(axis=0)
    return frozenset(np.flatnonzero(~dominated).tolist())


def maximin_worst(u: Profile) -> np.ndarray:
    """Worst (largest) 1-based rank of each alternative over all individuals."""
    return u.positions().max(axis=0) + 1


def maximin(u: Profile) -> ChoiceSet:
    return _argmin(maximin_worst(u))


def borda_scores(u: Profile) -> np.ndarray:
    """Sum of 1-based ranks; lower is better."""
    return (u.positions() + 1).sum(axis=0)


def borda(u: Profile) -> ChoiceSet:
    return _argmin(borda_scores(u))


def plurality_counts(u: Profile) -> np.ndarray:
    return np.bincount([o[0] for o in u.orderings], minlength=u.m)


def plurality_number(u: Profile) -> int:
    return int(plurality_counts(u).max())


def plurality(u: Profile) -> ChoiceSet:
    return _argmax(plurality_counts(u))


def top_cycle(u: Profile) -> ChoiceSet:
    """Maximal elements of the transitive closure of simple majority.

    Computed as the unique strongly connected component of the weak majority
    digraph that receives no edge from outside itself.
    """
    weak = majority_matrix(u).weakly_beats()
    np.fill_diagonal(weak, False)
    _, labels = connected_components(weak.astype(np.int8), directed=True, connection="strong")
    # component c is beaten from outside if some y outside c weakly beats some x in c
    incoming = weak & (labels[:, None] != labels[None, :])
    entered = set(labels[np.flatnonzero(incoming.any(axis=0))].tolist())
    sources = [c for c in set(labels.tolist()) if c not in entered]
    assert len(sources) == 1, "weak majority digraph is complete, so its condensation has one source"
    return frozenset(np.flatnonzero(labels == sources[0]).tolist())


def copeland_scores(u: Profile, variant: str = "wins") -> np.ndarray:
    """Copeland scores.

    ``variant="wins"`` counts alternatives defeated by strict majority;
    ``variant="net"`` subtracts the number of alternatives that defeat x.
    """
    margin = majority_matrix(u).margin
    wins = (margin > 0).sum(axis=1)
    if variant == "wins":
        return wins
    if variant == "net":
        return wins - (margin < 0).sum(axis=1)
    raise ValueError(f"unknown Copeland variant {variant!r}")


def copeland(u: Profile, variant: str = "wins") -> ChoiceSet:
    return _argmax(copeland_scores(u, variant))


def validate_ballots(b: Sequence[int], n: int, m: int) -> tuple[int, ...]:
    b = tuple(int(x) for x in b)
    if len(b) != n:
        raise ValueError(f"index vector has length {len(b)}, profile has {n} individuals")
    bad = [x for x in b if not 1 <= x <= m]
    if bad:
        raise ValueError(f"approval counts must lie in [1, {m}], got {bad}")
    return b


def approval_scores(u: Profile, b: Sequence[int]) -> np.ndarray:
    """Number of individuals approving each alternative (x among their top b_i)."""
    b = validate_ballots(b, u.n, u.m)
    return (u.positions() < np.array(b)[:, None]).sum(axis=0)


def approval(u: Profile, b: Sequence[int]) -> ChoiceSet:
    return _argmax(approval_scores(u, b))


_PLAIN = {
    "tops": tops,
    "pareto": pareto,
    "maximin": maximin,
    "borda": borda,
    "plurality": plurality,
    "top_cycle": top_cycle,
    "copeland": copeland,
}


def evaluate(rule: str, u: Profile, ballots: Sequence[int] | None = None) -> ChoiceSet:
    """Dispatch ``rule`` by name; ``approval`` requires ``ballots``."""
    if rule == "approval":
        if ballots is None:
            raise MissingBallots("approval needs an index vector of approval counts")
        return approval(u, ballots)
    try:
        fn = _PLAIN[rule]
    except KeyError:
        raise UnknownRule(rule) from None
    return fn(u)


def scores(rule: str, u: Profile, ballots: Sequence[int] | None = None) -> np.ndarray | None:
    """Score vector underlying ``rule``, or None for rules without one."""
    if rule == "borda":
        return borda_scores(u)
    if rule == "copeland":
        return copeland_scores(u)
    if rule == "plurality":
        return plurality_counts(u)
    if rule == "maximin":
        return maximin_worst(u)
    if rule == "approval":
        if ballots is None:
            raise MissingBallots("approval needs an index vector of approval counts")
        return approval_scores(u, ballots)
    if rule in _PLAIN:
        return None
    raise UnknownRule(rule)
