"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines, or execute this
file directly.
"""

import itertools
import time

import numpy as np

from scc_range import constructions as C
from scc_range import oracle as O
from scc_range import rules as R
from scc_range.core import Profile, majority_matrix, permute_individuals, relabel_alternatives

from conftest import random_profile
from paper_tables import (
    APPROVAL_BALLOTS,
    COPELAND_5,
    COPELAND_7,
    COPELAND_9,
    MAXIMIN_U1,
    MAXIMIN_U2,
    MAXIMIN_U3,
    approval_example,
)


def report(number, title, failures, detail=""):
    ok = not failures
    print(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
    assert ok, f"criterion {number}: {failures[:5]}"


def subsets(m):
    for k in range(1, m + 1):
        for S in itertools.combinations(range(m), k):
            yield frozenset(S)


def test_01_copeland_parity_exclusions():
    start = time.perf_counter()
    observed = {(m, 3): O.achievable_sizes("copeland", m, 3, "anonymous") for m in (3, 4, 5)}
    elapsed = time.perf_counter() - start
    expected = {(3, 3): {1, 3}, (4, 3): {1, 2, 3}, (5, 3): {1, 2, 3, 5}}
    failures = [(k, observed[k]) for k in expected if observed[k] != expected[k]]
    if elapsed >= 30:
        failures.append(f"runtime {elapsed:.1f}s >= 30s")
    report(1, "Copeland parity exclusions at n=3", failures, f"({elapsed:.1f}s)")


def test_02_copeland_even_n_completeness():
    failures = []
    for m in (3, 4, 5):
        for k in range(1, m + 1):
            if len(R.copeland(C.construct_copeland(m, 2, k))) != k:
                failures.append(("construct", m, k))
    for m in (3, 4):
        sizes = O.achievable_sizes("copeland", m, 2)
        if sizes != set(range(1, m + 1)):
            failures.append(("oracle", m, sizes))
    report(2, "Copeland even-n completeness", failures)


def test_03_copeland_part1_induction():
    failures = []
    for m in (3, 5, 7, 9):
        scores = set(R.copeland_scores(C.copeland_part1(m)).tolist())
        if scores != {(m - 1) // 2}:
            failures.append(("scores", m, scores))
    for m, table in ((5, COPELAND_5), (7, COPELAND_7), (9, COPELAND_9)):
        if C.copeland_part1(m) != table:
            failures.append(("table", m))
    report(3, "Copeland Part 1 induction and paper tables", failures)


def test_04_borda_range():
    failures = []
    rep = O.range_report("borda", 4, 3)
    if rep.sizes != {1, 2, 3} or 0b1111 in rep.achievable:
        failures.append(("oracle", 4, 3, rep.sizes))
    if O.achievable_sizes("borda", 3, 3) != {1, 2, 3}:
        failures.append(("oracle", 3, 3))
    for m, n in ((3, 2), (4, 2), (4, 4), (5, 2)):
        for S in subsets(m):
            if R.borda(C.construct_borda(m, n, S)) != S:
                failures.append(("construct", m, n, sorted(S)))
    report(4, "Borda range", failures)


def test_05_plurality():
    start = time.perf_counter()
    failures = []
    for m in (3, 4, 5):
        for n in range(2, 7):
            sizes = O.achievable_sizes("plurality", m, n)
            for k in range(1, m + 1):
                feasible = C.plurality_feasible(m, n, k)
                if feasible != (k in sizes):
                    failures.append(("feasible", m, n, k))
            for S in subsets(m):
                if C.plurality_feasible(m, n, len(S)) and R.plurality(C.construct_plurality(m, n, S)) != S:
                    failures.append(("construct", m, n, sorted(S)))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    report(5, "plurality feasibility vs oracle", failures, f"({elapsed:.1f}s)")


def test_06_top_cycle():
    failures = []
    for (m, n), want in {(3, 3): {1, 3}, (4, 3): {1, 3, 4}}.items():
        sizes = O.achievable_sizes("top_cycle", m, n)
        if sizes != want:
            failures.append(("oracle", m, n, sizes))
    if len(O.range_report("top_cycle", 3, 2).achievable) != 7:
        failures.append(("oracle", 3, 2))
    for m in range(3, 6):
        for n in (2, 3, 4, 5):
            for S in subsets(m):
                if n % 2 and len(S) == 2:
                    continue
                if R.top_cycle(C.construct_top_cycle(m, n, S)) != S:
                    failures.append(("construct", m, n, sorted(S)))
    report(6, "top cycle range", failures)


def test_07_maximin():
    failures = []
    for m in range(3, 6):
        for n in range(2, 6):
            for k in range(1, min(m, n) + 1):
                if R.maximin(C.construct_maximin(m, n, k)) != set(range(k)):
                    failures.append((m, n, k))
    for k, table in ((1, MAXIMIN_U1), (2, MAXIMIN_U2), (3, MAXIMIN_U3)):
        if C.construct_maximin(4, 4, k) != table or R.maximin(table) != set(range(k)):
            failures.append(("table", k))
    report(7, "maximin construction and paper tables", failures)


def test_08_pareto():
    failures = []
    for m in range(3, 6):
        for n in (2, 3):
            for S in subsets(m):
                if R.pareto(C.construct_pareto(m, n, S)) != S:
                    failures.append((m, n, sorted(S)))
    if O.range_report("pareto", 3, 2).sets != set(subsets(3)):
        failures.append("oracle 3,2")
    report(8, "Pareto range", failures)


def test_09_approval():
    failures = []
    for m in range(3, 7):
        for n in range(2, 11):
            for S in subsets(m):
                u, b = C.construct_approval(m, n, S)
                k, g = len(S), C.gauge(b)
                gauge_ok = g == -(-k // n) if k >= n else g <= 2
                if R.approval(u, b) != S or not gauge_ok:
                    failures.append((m, n, sorted(S), b))
    u, b = C.construct_approval(6, 10, range(4))
    example = approval_example()
    if u != example or b != APPROVAL_BALLOTS:
        failures.append("paper example layout")
    if R.approval_scores(example, APPROVAL_BALLOTS)[:4].tolist() != [3, 3, 3, 3]:
        failures.append("paper example scores")
    if R.approval(example, APPROVAL_BALLOTS) != {0, 1, 2, 3}:
        failures.append("paper example winners")
    if O.min_gauge(4, 2, {0, 1, 2}) != 2:
        failures.append("min_gauge(4,2,3)")
    report(9, "approval proposition and gauge", failures)


def test_10_property_suites():
    rng = np.random.default_rng(12345)
    m = n = 5
    failures = []
    for trial in range(1000):
        u = random_profile(rng, m, n)
        pi = rng.permutation(m).tolist()
        sigma = rng.permutation(n).tolist()
        b = rng.integers(1, m + 1, size=n).tolist()
        u_sigma = permute_individuals(u, sigma)
        u_pi = relabel_alternatives(u, pi)
        for rule in R.RULES:
            ballots = b if rule == "approval" else None
            got = R.evaluate(rule, u, ballots)
            if not got:
                failures.append(("empty", rule, trial))
            b_sigma = [b[s] for s in sigma] if ballots else None
            if R.evaluate(rule, u_sigma, b_sigma) != got:
                failures.append(("anonymity", rule, trial))
            if R.evaluate(rule, u_pi, ballots) != {pi[x] for x in got}:
                failures.append(("neutrality", rule, trial))
        if R.borda_scores(u).sum() != n * m * (m + 1) // 2:
            failures.append(("borda sum", trial))
        if R.copeland_scores(u).sum() != m * (m - 1) // 2:
            failures.append(("copeland sum", trial))
        padded = C.pad_with_inverse_pair(u)
        if not np.array_equal(majority_matrix(padded).margin, majority_matrix(u).margin):
            failures.append(("pad margins", trial))
        for rule in ("borda", "copeland", "top_cycle"):
            if R.evaluate(rule, padded) != R.evaluate(rule, u):
                failures.append(("pad", rule, trial))
        if R.copeland(C.append_bottom_alternative(u)) != R.copeland(u):
            failures.append(("append bottom", trial))
    report(10, "property suites on 1000 samples at m=n=5", failures)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
