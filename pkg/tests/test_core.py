import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scc_range.core import (
    MalformedHeader,
    NotAPermutation,
    Profile,
    ProfileError,
    WrongRowCount,
    canonical_key,
    codec_emit,
    codec_parse,
    inverse_ordering,
    majority_matrix,
    mask_of,
    permute_individuals,
    rank_of,
    relabel_alternatives,
    set_of,
    top_k,
)

from conftest import PARADOX, naive_margins


@st.composite
def profiles(draw, max_m=6, max_n=6):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    rows = [tuple(draw(st.permutations(range(m)))) for _ in range(n)]
    return Profile(tuple(rows))


def test_inverse_ordering():
    assert inverse_ordering((0, 1, 2)) == (2, 1, 0)
    assert inverse_ordering(inverse_ordering((1, 0, 2))) == (1, 0, 2)
    assert inverse_ordering((1, 0, 2)) == (2, 0, 1)


@given(st.permutations(range(5)))
def test_inverse_flips_every_pair(o):
    inv = inverse_ordering(o)
    for x, y in itertools.permutations(range(5), 2):
        assert (o.index(x) < o.index(y)) == (inv.index(y) < inv.index(x))


@pytest.mark.parametrize("o,x,r", [((2, 0, 1), 2, 1), ((2, 0, 1), 1, 3), ((0, 1, 2, 3), 2, 3)])
def test_rank_of(o, x, r):
    assert rank_of(o, x) == r


def test_rank_of_unknown_alternative():
    with pytest.raises(ProfileError):
        rank_of((0, 1, 2), 5)


@pytest.mark.parametrize("o,k,want", [((2, 0, 1), 1, {2}), ((2, 0, 1), 3, {0, 1, 2}), ((3, 1, 0, 2), 2, {3, 1})])
def test_top_k(o, k, want):
    assert top_k(o, k) == want


@pytest.mark.parametrize("k", [0, 4])
def test_top_k_out_of_range(k):
    with pytest.raises(ValueError):
        top_k((0, 1, 2), k)


@given(st.permutations(range(6)), st.integers(1, 6))
def test_top_k_matches_rank(o, k):
    s = top_k(o, k)
    assert len(s) == k
    assert all((x in s) == (rank_of(o, x) <= k) for x in range(6))


def test_majority_matrix_examples():
    mm = majority_matrix(PARADOX)
    assert mm.margin[0, 1] == 1 and mm.margin[1, 2] == 1 and mm.margin[2, 0] == 1
    opposed = Profile(((0, 1, 2), (2, 1, 0)))
    assert not majority_matrix(opposed).margin.any()
    unanimous = Profile(((0, 1, 2),) * 3)
    s = majority_matrix(unanimous).support
    assert s[0, 1] == 3 and s[1, 0] == 0


@given(profiles())
def test_majority_matrix_invariants(u):
    mm = majority_matrix(u)
    s = mm.support
    assert np.all(np.diag(s) == 0)
    off = ~np.eye(u.m, dtype=bool)
    assert np.all((s + s.T)[off] == u.n)
    for (x, y), v in naive_margins(u).items():
        assert mm.margin[x, y] == v


@given(profiles(max_m=5), st.permutations(range(5)))
def test_inverse_pair_keeps_margins(u, p):
    p = tuple(x for x in p if x < u.m)
    padded = Profile(u.orderings + (p, inverse_ordering(p)))
    np.testing.assert_array_equal(majority_matrix(padded).margin, majority_matrix(u).margin)


def test_relabel_examples():
    u = Profile(((0, 1, 2),))
    assert relabel_alternatives(u, (0, 1, 2)) == u
    assert relabel_alternatives(u, (1, 0, 2)) == Profile(((1, 0, 2),))
    assert relabel_alternatives(relabel_alternatives(PARADOX, (1, 0, 2)), (1, 0, 2)) == PARADOX
    with pytest.raises(ProfileError):
        relabel_alternatives(u, (0, 0, 2))


@given(profiles(), st.randoms())
def test_relabel_commutes_with_majority(u, rnd):
    perm = list(range(u.m))
    rnd.shuffle(perm)
    before = majority_matrix(u).margin
    after = majority_matrix(relabel_alternatives(u, perm)).margin
    for x, y in itertools.product(range(u.m), repeat=2):
        assert after[perm[x], perm[y]] == before[x, y]


def test_canonical_key_examples():
    u = Profile(((0, 1, 2), (2, 1, 0), (1, 0, 2)))
    swapped = Profile(((2, 1, 0), (0, 1, 2), (1, 0, 2)))
    assert canonical_key(u) == canonical_key(swapped)
    assert canonical_key(Profile(((0, 1, 2),) * 3)) != canonical_key(PARADOX)
    assert canonical_key(Profile(tuple(sorted(u.orderings)))) == canonical_key(u)


@given(profiles(), st.randoms())
def test_canonical_key_anonymity(u, rnd):
    sigma = list(range(u.n))
    rnd.shuffle(sigma)
    assert canonical_key(permute_individuals(u, sigma)) == canonical_key(u)


def test_codec_examples():
    u = codec_parse("3 2\n0 1 2\n2 1 0\n")
    assert u == Profile(((0, 1, 2), (2, 1, 0)))
    assert u.m == 3 and u.n == 2
    text = "3 2\n0 1 2\n2 1 0\n"
    assert codec_emit(codec_parse(text)) == text


def test_codec_lenient_whitespace():
    u = codec_parse("3\t  2\n0  1\t2\n 2 1 0")
    assert codec_emit(u) == "3 2\n0 1 2\n2 1 0\n"


@pytest.mark.parametrize(
    "text,exc",
    [
        ("3 2\n0 1 1\n2 1 0\n", NotAPermutation),
        ("3 2\n0 1\n2 1 0\n", NotAPermutation),
        ("3 2\n0 1 x\n2 1 0\n", NotAPermutation),
        ("3\n0 1 2\n", MalformedHeader),
        ("three 2\n0 1 2\n2 1 0\n", MalformedHeader),
        ("", MalformedHeader),
        ("3 2\n0 1 2\n", WrongRowCount),
        ("3 1\n0 1 2\n2 1 0\n", WrongRowCount),
    ],
)
def test_codec_errors(text, exc):
    with pytest.raises(exc):
        codec_parse(text)


@settings(max_examples=300)
@given(profiles())
def test_codec_round_trip(u):
    assert codec_parse(codec_emit(u)) == u


def test_masks():
    assert mask_of({0, 2}) == 5
    assert set_of(5) == {0, 2}


def test_profile_validation():
    with pytest.raises(ProfileError):
        Profile(((0, 1, 2), (0, 1)))
    with pytest.raises(ProfileError):
        Profile(())
    with pytest.raises(ProfileError):
        Profile(((1, 2, 3),))
