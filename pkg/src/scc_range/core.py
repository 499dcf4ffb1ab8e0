"""Alternatives, orderings, profiles and pairwise majority tallies.

Alternatives are dense integer ids ``0 .. m-1``.  An ordering is a tuple of
ids listed top rank first, so ``o[0]`` is the most preferred alternative.
Ranks reported by :func:`rank_of` are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Ordering = tuple[int, ...]
ChoiceSet = frozenset[int]

MAX_MASK_ALTERNATIVES = 16


class ProfileError(ValueError):
    """Raised for structurally invalid orderings or profiles."""


class ProfileFormatError(ProfileError):
    """Base class for profile text codec failures."""


class MalformedHeader(ProfileFormatError):
    pass


class WrongRowCount(ProfileFormatError):
    pass


class NotAPermutation(ProfileFormatError):
    pass


def validate_ordering(ranks: Iterable[int], m: int | None = None) -> Ordering:
    """Return ``ranks`` as a tuple after checking it is a permutation of ``0..m-1``."""
    o = tuple(int(x) for x in ranks)
    if m is None:
        m = len(o)
    if len(o) != m or len(o) == 0 or sorted(o) != list(range(m)):
        raise ProfileError(f"{list(o)} is not a permutation of 0..{m - 1}")
    return o


@dataclass(frozen=True)
class Profile:
    """An n-tuple of strict orderings over the same ``m`` alternatives."""

    orderings: tuple[Ordering, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in o) for o in self.orderings)
        if not rows:
            raise ProfileError("a profile needs at least one individual")
        m = len(rows[0])
        for o in rows:
            validate_ordering(o, m)
        object.__setattr__(self, "orderings", rows)

    @property
    def m(self) -> int:
        return len(self.orderings[0])

    @property
    def n(self) -> int:
        return len(self.orderings)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.orderings)

    def __getitem__(self, i):
        return self.orderings[i]

    def to_array(self) -> np.ndarray:
        return np.array(self.orderings, dtype=np.int64)

    def positions(self) -> np.ndarray:
        """``(n, m)`` array of 0-based positions: ``pos[i, x]`` is x's index in u(i)."""
        arr = self.to_array()
        pos = np.empty_like(arr)
        rows = np.arange(self.n)[:, None]
        pos[rows, arr] = np.arange(self.m)[None, :]
        return pos

    def __str__(self):
        return codec_emit(self)


def make_profile(orderings: Iterable[Iterable[int]]) -> Profile:
    return Profile(tuple(tuple(o) for o in orderings))


def inverse_ordering(o: Sequence[int]) -> Ordering:
    """Reverse a strict order; every pairwise comparison flips."""
    return tuple(reversed(tuple(o)))


def rank_of(o: Sequence[int], x: int) -> int:
    """1-based rank of ``x`` in ``o`` (top rank is 1)."""
    try:
        return tuple(o).index(x) + 1
    except ValueError:
        raise ProfileError(f"alternative {x} does not occur in {list(o)}") from None


def top_k(o: Sequence[int], k: int) -> ChoiceSet:
    if not 1 <= k <= len(o):
        raise ValueError(f"k={k} outside [1, {len(o)}]")
    return frozenset(o[:k])


def mask_of(s: Iterable[int]) -> int:
    mask = 0
    for x in s:
        mask |= 1 << int(x)
    return mask


def set_of(mask: int) -> ChoiceSet:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def format_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


@dataclass(frozen=True)
class MajorityMatrix:
    """Pairwise support counts; ``support[x, y]`` individuals rank x above y."""

    support: np.ndarray
    n: int

    @property
    def m(self) -> int:
        return self.support.shape[0]

    @property
    def margin(self) -> np.ndarray:
        return self.support - self.support.T

    def weakly_beats(self) -> np.ndarray:
        """Simple majority relation: ``x`` is at least as popular as ``y``."""
        return self.margin >= 0

    def beats(self) -> np.ndarray:
        return self.margin > 0


def majority_matrix(u: Profile) -> MajorityMatrix:
    pos = u.positions()
    support = (pos[:, :, None] < pos[:, None, :]).sum(axis=0)
    support.setflags(write=False)
    return MajorityMatrix(support=support, n=u.n)


def relabel_alternatives(u: Profile, perm: Sequence[int]) -> Profile:
    """Replace every alternative ``x`` by ``perm[x]``."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(u.m)):
        raise ProfileError(f"{list(perm)} is not a permutation of 0..{u.m - 1}")
    return Profile(tuple(tuple(perm[x] for x in o) for o in u.orderings))


def permute_individuals(u: Profile, sigma: Sequence[int]) -> Profile:
    """Reorder individuals: position ``i`` of the result holds ``u(sigma[i])``."""
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(u.n)):
        raise ProfileError(f"{list(sigma)} is not a permutation of 0..{u.n - 1}")
    return Profile(tuple(u.orderings[s] for s in sigma))


def canonical_key(u: Profile) -> tuple[Ordering, ...]:
    """Key identifying ``u`` up to a permutation of individuals."""
    return tuple(sorted(u.orderings))


_WS = re.compile(r"[ \t]+")


def _tokens(line: str) -> list[str]:
    return [t for t in _WS.split(line.strip(" \t\r")) if t]


def codec_parse(text: str) -> Profile:
    """Parse the ``<m> <n>`` header plus n ordering rows format."""
    lines = text.split("\n")
    while lines and lines[-1].strip(" \t\r") == "":
        lines.pop()
    if not lines:
        raise MalformedHeader("empty input: expected header '<m> <n>'")
    head = _tokens(lines[0])
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise MalformedHeader(f"expected header '<m> <n>', got {lines[0]!r}")
    m, n = int(head[0]), int(head[1])
    if m < 1 or n < 1:
        raise MalformedHeader(f"header needs m >= 1 and n >= 1, got m={m} n={n}")
    rows = lines[1:]
    if len(rows) != n:
        raise WrongRowCount(f"header announces {n} rows, found {len(rows)}")
    orderings = []
    for lineno, line in enumerate(rows, start=2):
        toks = _tokens(line)
        if not all(t.isdigit() for t in toks):
            raise NotAPermutation(f"line {lineno}: non-integer id in {line!r}")
        row = [int(t) for t in toks]
        if sorted(row) != list(range(m)):
            raise NotAPermutation(f"line {lineno}: {row} is not a permutation of 0..{m - 1}")
        orderings.append(tuple(row))
    return Profile(tuple(orderings))


def codec_emit(u: Profile) -> str:
    out = [f"{u.m} {u.n}"]
    out.extend(" ".join(str(x) for x in o) for o in u.orderings)
    return "\n".join(out) + "\n"
