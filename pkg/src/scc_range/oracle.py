"""Brute-force ground truth over the space of profiles.

The profile space for ``(m, n)`` is enumerated as index tuples into the
lexicographically sorted list of the ``m!`` orderings.  Full mode walks all
``(m!)**n`` tuples; anonymous mode walks one non-decreasing tuple per multiset
of orderings.  Rules are evaluated in vectorized batches; the witness kept for
each achievable set is the first profile in enumeration order.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import chain, combinations_with_replacement, islice, permutations, product
from typing import Iterator

import numpy as np

from . import constructions as C
from . import rules as R
from .core import ChoiceSet, Profile, codec_emit, format_set, mask_of, permute_individuals, set_of

MODES = ("full", "anonymous")
RANGE_RULES = ("tops", "pareto", "maximin", "borda", "plurality", "top_cycle", "copeland")
# rules that read only each individual's top alternative
TOP_ONLY_RULES = frozenset({"tops", "plurality"})

MAX_M = 6
MAX_PROFILES = 5_000_000
MIN_GAUGE_MAX = 4
CHUNK = 1 << 15


class GuardExceeded(RuntimeError):
    """Enumeration larger than the soft guard; pass ``override_guards=True``."""


@lru_cache(maxsize=None)
def ordering_table(m: int) -> np.ndarray:
    """All orderings of ``0..m-1`` in lexicographic order, shape ``(m!, m)``."""
    table = np.array(list(permutations(range(m))), dtype=np.int8).reshape(-1, m)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _tables(m: int):
    orders = ordering_table(m)
    count = orders.shape[0]
    pos = np.empty_like(orders)
    pos[np.arange(count)[:, None], orders] = np.arange(m, dtype=np.int8)[None, :]
    above = (pos[:, :, None] < pos[:, None, :]).astype(np.uint8)
    for a in (pos, above):
        a.setflags(write=False)
    return pos, above


def profile_count(m: int, n: int, mode: str) -> int:
    orderings = math.factorial(m)
    if mode == "full":
        return orderings**n
    if mode == "anonymous":
        return math.comb(orderings + n - 1, n)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _check_guard(m: int, n: int, mode: str, override: bool, space: int | None = None):
    if m < 1 or n < 1:
        raise ValueError("enumeration needs m >= 1 and n >= 1")
    if override:
        return
    if m > MAX_M:
        raise GuardExceeded(f"m={m} exceeds the guard m <= {MAX_M}")
    size = profile_count(m, n, mode) if space is None else space
    if size > MAX_PROFILES:
        raise GuardExceeded(f"{size} profiles exceed the guard of {MAX_PROFILES}")


def _index_tuples(m: int, n: int, mode: str, alphabet=None) -> Iterator[tuple[int, ...]]:
    letters = range(math.factorial(m)) if alphabet is None else alphabet
    if mode == "full":
        return product(letters, repeat=n)
    if mode == "anonymous":
        return combinations_with_replacement(letters, n)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _chunks(m, n, mode, alphabet=None) -> Iterator[np.ndarray]:
    it = _index_tuples(m, n, mode, alphabet)
    while True:
        flat = np.fromiter(chain.from_iterable(islice(it, CHUNK)), dtype=np.int32)
        if flat.size == 0:
            return
        yield flat.reshape(-1, n)


def profile_from_indices(m: int, idx) -> Profile:
    table = ordering_table(m)
    return Profile(tuple(tuple(int(x) for x in table[i]) for i in idx))


def enumerate_profiles(m: int, n: int, mode: str = "anonymous", override_guards: bool = False) -> Iterator[Profile]:
    """Yield every profile (full) or one per anonymity class (anonymous)."""
    _check_guard(m, n, mode, override_guards)
    for idx in _index_tuples(m, n, mode):
        yield profile_from_indices(m, idx)


# -- batch evaluation ------------------------------------------------------


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a batch of boolean relations ``(B, m, m)``,
    by repeated squaring."""
    m = rel.shape[-1]
    closed = rel | np.eye(m, dtype=bool)
    for _ in range(max(1, math.ceil(math.log2(m)))):
        step = np.matmul(closed.astype(np.int32), closed.astype(np.int32)) > 0
        if np.array_equal(step, closed):
            break
        closed = step
    return closed


def batch_winners(rule: str, m: int, idx: np.ndarray) -> np.ndarray:
    """Boolean winners array ``(B, m)`` of ``rule`` on the profiles ``idx`` ``(B, n)``."""
    pos_table, above_table = _tables(m)
    n = idx.shape[1]
    if rule in ("tops", "plurality"):
        tops = ordering_table(m)[idx, 0]
        counts = np.zeros((idx.shape[0], m), dtype=np.int32)
        for i in range(n):
            counts[np.arange(idx.shape[0]), tops[:, i]] += 1
        if rule == "tops":
            return counts > 0
        return counts == counts.max(axis=1, keepdims=True)
    if rule in ("borda", "maximin"):
        pos = pos_table[idx].astype(np.int32)
        vals = pos.sum(axis=1) if rule == "borda" else pos.max(axis=1)
        return vals == vals.min(axis=1, keepdims=True)
    support = above_table[idx].sum(axis=1, dtype=np.int32)
    if rule == "pareto":
        return ~(support == n).any(axis=1)
    margin = support - support.transpose(0, 2, 1)
    if rule == "copeland":
        wins = (margin > 0).sum(axis=2)
        return wins == wins.max(axis=1, keepdims=True)
    if rule == "top_cycle":
        return transitive_closure(margin >= 0).all(axis=2)
    raise R.UnknownRule(rule)


def _masks(winners: np.ndarray) -> np.ndarray:
    weights = (1 << np.arange(winners.shape[1], dtype=np.int64))
    return winners.astype(np.int64) @ weights


def _first_hits(rule, m, idx, offset):
    masks = _masks(batch_winners(rule, m, idx))
    uniq, first = np.unique(masks, return_index=True)
    return {int(k): (offset + int(i), tuple(int(v) for v in idx[i])) for k, i in zip(uniq, first)}


def _scan_chunk(args):
    rules, m, idx, offset = args
    return {rule: _first_hits(rule, m, idx, offset) for rule in rules}


# -- reports ---------------------------------------------------------------


@dataclass
class RangeReport:
    rule: str
    m: int
    n: int
    mode: str
    achievable: dict[int, Profile] = field(default_factory=dict)

    @property
    def sizes(self) -> set[int]:
        return {bin(k).count("1") for k in self.achievable}

    @property
    def sets(self) -> set[ChoiceSet]:
        return {set_of(k) for k in self.achievable}

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "m": self.m,
            "n": self.n,
            "mode": self.mode,
            "sizes": sorted(self.sizes),
            "witnesses": {str(k): codec_emit(self.achievable[k]) for k in sorted(self.achievable)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _alphabet(rule: str, m: int, mode: str):
    # top-only rules in anonymous mode: one ordering per possible top,
    # the lexicographically first one, which sits at index t * (m-1)!
    if mode == "anonymous" and rule in TOP_ONLY_RULES:
        return tuple(t * math.factorial(m - 1) for t in range(m))
    return None


def _assert_anonymous(rule: str, m: int, n: int, trials: int = 16, seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        u = Profile(tuple(tuple(rng.permutation(m).tolist()) for _ in range(n)))
        v = permute_individuals(u, rng.permutation(n).tolist())
        if R.evaluate(rule, u) != R.evaluate(rule, v):
            raise AssertionError(f"{rule} is not anonymous; anonymous enumeration is unsound")


def _assert_neutral_closure(report: RangeReport):
    masks = set(report.achievable)
    for perm in permutations(range(report.m)):
        for k in masks:
            image = mask_of(perm[x] for x in set_of(k))
            if image not in masks:
                raise AssertionError(
                    f"{report.rule} range at m={report.m} n={report.n} is not closed under relabeling"
                )


def range_reports(
    rules,
    m: int,
    n: int,
    mode: str = "anonymous",
    *,
    workers: int = 1,
    override_guards: bool = False,
    checks: bool = True,
) -> dict[str, RangeReport]:
    """Achievable choice sets of several rules from one pass over the space.

    The space is cut into fixed-size contiguous index ranges; partial results
    are merged keeping the smallest enumeration index per set, so the outcome
    does not depend on ``workers``.
    """
    rules = tuple(rules)
    for rule in rules:
        if rule not in RANGE_RULES:
            raise R.UnknownRule(rule)
    groups: dict[object, list[str]] = {}
    for rule in rules:
        groups.setdefault(_alphabet(rule, m, mode), []).append(rule)

    _check_guard(m, n, mode, override_guards,
                 space=max(_space(m, n, mode, alpha) for alpha in groups))
    if checks and mode == "anonymous":
        for rule in rules:
            _assert_anonymous(rule, m, n)

    best: dict[str, dict[int, tuple[int, tuple[int, ...]]]] = {r: {} for r in rules}
    for alpha, group in groups.items():
        jobs = _jobs(group, m, n, mode, alpha)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_scan_chunk, jobs))
        else:
            parts = map(_scan_chunk, jobs)
        for part in parts:
            for rule, hits in part.items():
                mine = best[rule]
                for k, hit in hits.items():
                    if k not in mine or hit[0] < mine[k][0]:
                        mine[k] = hit

    reports = {}
    for rule in rules:
        rep = RangeReport(rule, m, n, mode)
        for k in sorted(best[rule]):
            rep.achievable[k] = profile_from_indices(m, best[rule][k][1])
        if checks:
            for k, u in rep.achievable.items():
                if mask_of(R.evaluate(rule, u)) != k:
                    raise AssertionError(f"{rule}: witness for {format_set(set_of(k))} re-evaluates differently")
            _assert_neutral_closure(rep)
        reports[rule] = rep
    return reports


def _space(m, n, mode, alpha):
    if alpha is None:
        return profile_count(m, n, mode)
    return math.comb(len(alpha) + n - 1, n)


def _jobs(rules, m, n, mode, alpha):
    offset = 0
    for idx in _chunks(m, n, mode, alpha):
        yield (tuple(rules), m, idx, offset)
        offset += idx.shape[0]


def range_report(rule: str, m: int, n: int, mode: str = "anonymous", **kwargs) -> RangeReport:
    if rule == "approval":
        raise ValueError("approval has no range report; every non-empty set is achievable, see min_gauge")
    return range_reports((rule,), m, n, mode, **kwargs)[rule]


def achievable_sizes(rule: str, m: int, n: int, mode: str = "anonymous", **kwargs) -> set[int]:
    return range_report(rule, m, n, mode, **kwargs).sizes


# -- approval gauge search ---------------------------------------------------


def min_gauge_witness(m: int, n: int, S, override_guards: bool = False):
    """Smallest gauge admitting approval winners exactly ``S``, with a witness.

    An individual's ballot enters approval only through the approved set
    ``top_k(u(i), b_i)``, so the search runs over multisets of the distinct
    approved sets produced by (ordering, b) pairs with ``b <= g``.
    Returns ``(g, profile, ballots)``.
    """
    target = mask_of(S)
    if target == 0 or target >> m:
        raise ValueError(f"target set must be a non-empty subset of 0..{m - 1}")
    if not override_guards and (m > MIN_GAUGE_MAX or n > MIN_GAUGE_MAX):
        raise GuardExceeded(f"min_gauge guard is m, n <= {MIN_GAUGE_MAX}; got m={m} n={n}")
    table = ordering_table(m)
    for g in range(1, m + 1):
        approved: dict[int, tuple[int, int]] = {}
        for oi, o in enumerate(table):
            for b in range(1, g + 1):
                approved.setdefault(mask_of(o[:b].tolist()), (oi, b))
        keys = sorted(approved)
        rows = np.array([[k >> x & 1 for x in range(m)] for k in keys], dtype=np.int32)
        for combo in _chunked_combos(len(keys), n):
            score = rows[combo].sum(axis=1)
            masks = _masks(score == score.max(axis=1, keepdims=True))
            hit = np.flatnonzero(masks == target)
            if hit.size:
                chosen = [approved[keys[c]] for c in combo[hit[0]]]
                u = profile_from_indices(m, [oi for oi, _ in chosen])
                ballots = tuple(b for _, b in chosen)
                assert R.approval(u, ballots) == frozenset(S)
                return g, u, ballots
    raise AssertionError("unreachable: gauge m always realizes S")


def _chunked_combos(alphabet_size, n):
    it = combinations_with_replacement(range(alphabet_size), n)
    while True:
        flat = np.fromiter(chain.from_iterable(islice(it, CHUNK)), dtype=np.int32)
        if flat.size == 0:
            return
        yield flat.reshape(-1, n)


def min_gauge(m: int, n: int, S, override_guards: bool = False) -> int:
    return min_gauge_witness(m, n, S, override_guards)[0]


# -- theorem checklist -------------------------------------------------------


@dataclass
class ClaimResult:
    claim: str
    params: dict
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.claim:<28} {ps:<22} expected={_show(self.expected)} observed={_show(self.observed)}"


def _show(v):
    if isinstance(v, (set, frozenset)):
        return "{" + ",".join(str(x) for x in sorted(v)) + "}"
    return str(v)


@dataclass
class ClaimReport:
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, claim, params, expected, observed):
        self.results.append(ClaimResult(claim, dict(params), expected, observed))

    def to_text(self) -> str:
        lines = [r.line() for r in self.results]
        failed = sum(not r.passed for r in self.results)
        lines.append(f"{len(self.results) - failed}/{len(self.results)} claims pass")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "claims": [
                {
                    "claim": r.claim,
                    "params": r.params,
                    "expected": _jsonable(r.expected),
                    "observed": _jsonable(r.observed),
                    "pass": r.passed,
                }
                for r in self.results
            ],
        }


def _jsonable(v):
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    return v


def _subsets(m):
    return [frozenset(x for x in range(m) if k >> x & 1) for k in range(1, 1 << m)]


def expected_copeland_sizes(m: int, n: int) -> set[int]:
    sizes = set(range(1, m + 1))
    if n % 2:
        sizes.discard(m if m % 2 == 0 else m - 1)
    return sizes


def expected_range(rule: str, m: int, n: int) -> set[ChoiceSet] | None:
    """Range family the paper's results give for ``rule`` at ``(m, n)``, or
    None when they only pin down part of it."""
    subsets = _subsets(m)
    if rule == "pareto":
        return set(subsets)
    if rule == "tops":
        return {s for s in subsets if len(s) <= n}
    if rule == "borda":
        if n % 2 == 0 or m % 2:
            return set(subsets)
        return {s for s in subsets if len(s) < m}
    if rule == "top_cycle":
        if n % 2 == 0:
            return set(subsets)
        return {s for s in subsets if len(s) != 2}
    if rule == "plurality":
        return {s for s in subsets if C.plurality_feasible(m, n, len(s))}
    if rule == "copeland":
        sizes = expected_copeland_sizes(m, n)
        return {s for s in subsets if len(s) in sizes}
    return None


def _constructive_claims(report: ClaimReport, m: int, n: int):
    subsets = _subsets(m)

    def roundtrip(name, build, rule, targets):
        bad = []
        for S in targets:
            if mask_of(R.evaluate(rule, build(S))) != mask_of(S):
                bad.append(sorted(S))
        report.add(name, {"m": m, "n": n}, [], bad)

    roundtrip("construct_pareto", lambda S: C.construct_pareto(m, n, S), "pareto", subsets)
    if n % 2 == 0:
        roundtrip("construct_borda", lambda S: C.construct_borda(m, n, S), "borda", subsets)
    roundtrip("construct_plurality", lambda S: C.construct_plurality(m, n, S), "plurality",
              [S for S in subsets if C.plurality_feasible(m, n, len(S))])
    roundtrip("construct_top_cycle", lambda S: C.construct_top_cycle(m, n, S), "top_cycle",
              [S for S in subsets if n % 2 == 0 or len(S) != 2])
    roundtrip("construct_maximin", lambda S: C.construct_maximin(m, n, len(S)), "maximin",
              [frozenset(range(k)) for k in range(1, min(m, n) + 1)])

    got = {k for k in expected_copeland_sizes(m, n) if len(R.copeland(C.construct_copeland(m, n, k))) == k}
    report.add("construct_copeland_sizes", {"m": m, "n": n}, expected_copeland_sizes(m, n), got)

    bad = []
    for S in subsets:
        u, b = C.construct_approval(m, n, S)
        k = len(S)
        gauge_ok = C.gauge(b) == -(-k // n) if k >= n else C.gauge(b) <= 2
        if R.approval(u, b) != S or not gauge_ok:
            bad.append(sorted(S))
    report.add("construct_approval", {"m": m, "n": n}, [], bad)


def verify_claims(m_max: int = 5, n_max: int = 6, *, budget: int = 300_000, workers: int = 1) -> ClaimReport:
    """Check every range result mechanically for ``3 <= m <= m_max``, ``2 <= n <= n_max``.

    Constructive claims run at every ``(m, n)``.  Exhaustive range claims run
    wherever the anonymous enumeration needed has at most ``budget`` profiles.
    """
    report = ClaimReport()
    for m in range(3, m_max + 1):
        for n in range(2, n_max + 1):
            _constructive_claims(report, m, n)
            rules = [r for r in RANGE_RULES
                     if _space(m, n, "anonymous", _alphabet(r, m, "anonymous")) <= budget]
            if not rules:
                continue
            reps = range_reports(rules, m, n, "anonymous", workers=workers)
            for rule, rep in reps.items():
                expected = expected_range(rule, m, n)
                if expected is not None:
                    want = {len(S) for S in expected}
                    observed = rep.sizes if rep.sets == expected else f"family mismatch, sizes {_show(rep.sizes)}"
                    report.add(f"range_{rule}", {"m": m, "n": n}, want, observed)
                elif rule == "maximin":
                    want = set(range(1, min(m, n) + 1))
                    report.add("maximin_sizes_cover", {"m": m, "n": n}, want, rep.sizes & want)
    for m in (3, 5, 7, 9):
        scores = set(R.copeland_scores(C.copeland_part1(m)).tolist())
        report.add("copeland_part1_scores", {"m": m}, {(m - 1) // 2}, scores)
    if m_max >= 4 and n_max >= 2:
        report.add("min_gauge", {"m": 4, "n": 2, "k": 3}, 2, min_gauge(4, 2, {0, 1, 2}))
    return report
