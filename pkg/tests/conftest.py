import itertools

import numpy as np
import pytest

from scc_range.core import Profile

PARADOX = Profile(((0, 1, 2), (1, 2, 0), (2, 0, 1)))


def letters(table, names):
    """Profile from columns of letters, mapping ``names[i]`` to id ``i``."""
    index = {a: i for i, a in enumerate(names)}
    return Profile(tuple(tuple(index[a] for a in col.split()) for col in table))


def naive_margins(u):
    """Pairwise margins by direct counting, independent of majority_matrix."""
    m = u.m
    out = {}
    for x, y in itertools.permutations(range(m), 2):
        pro = sum(1 for o in u.orderings if o.index(x) < o.index(y))
        out[x, y] = pro - (u.n - pro)
    return out


def naive_copeland(u):
    mg = naive_margins(u)
    scores = [sum(1 for y in range(u.m) if y != x and mg[x, y] > 0) for x in range(u.m)]
    best = max(scores)
    return scores, frozenset(x for x in range(u.m) if scores[x] == best)


def naive_top_cycle(u):
    """Maximal elements of the closure of weak majority via Floyd-Warshall."""
    mg = naive_margins(u)
    m = u.m
    reach = [[x == y or mg[x, y] >= 0 for y in range(m)] for x in range(m)]
    for k in range(m):
        for i in range(m):
            for j in range(m):
                reach[i][j] = reach[i][j] or (reach[i][k] and reach[k][j])
    return frozenset(x for x in range(m) if all(reach[x]))


def random_profile(rng, m, n):
    return Profile(tuple(tuple(rng.permutation(m).tolist()) for _ in range(n)))


@pytest.fixture
def rng():
    return np.random.default_rng(20171216)


@pytest.fixture
def paradox():
    return PARADOX
