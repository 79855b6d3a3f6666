"""The ten acceptance criteria, each timed and reported as one PASS/FAIL line."""

import os
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import permutations, product
from math import comb, factorial

import pytest
from conftest import ACCEPTANCE_LINES, elements

from bruhat_operads.bruhat import (
    InversionSet,
    chain_to_order,
    enumerate_admissible_classes,
    enumerate_bruhat,
    is_admissible,
    maximal_chains,
    ziegler_check,
)
from bruhat_operads.insertion import insert, insertion_parts, perm_to_element, permutation_insert
from bruhat_operads.operads import (
    BigBruhatElement,
    SmallBruhatOperad,
    big_compose,
    monotone_compose_check,
    small_compose,
    small_domain,
    standard_instances,
    verify_operad_laws,
)


@contextmanager
def criterion(number, title, seconds):
    """Time the block; record PASS only if its checks held and it finished in time."""
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        in_time = elapsed < seconds
        verdict = "PASS" if state["ok"] and in_time else "FAIL"
        line = f"[{verdict}] criterion {number:>2}: {title} ({elapsed:.2f}s, limit {seconds}s) {state['detail']}"
        ACCEPTANCE_LINES.append(line.rstrip())
        print(line)
    assert state["ok"], state["detail"]
    assert in_time, f"took {elapsed:.1f}s, limit {seconds}s"


def test_criterion_01_d1_counts():
    with criterion(1, "|B(n,1)| = n! for n = 2..5", 1) as st:
        counts = {n: len(enumerate_bruhat(n, 1)) for n in (2, 3, 4, 5)}
        st["detail"] = str(counts)
        st["ok"] = all(counts[n] == factorial(n) for n in counts)


def test_criterion_02_forced_counts():
    with criterion(2, "forced counts B(d,d), B(n,n-1), B(4,2)", 1) as st:
        diag = [len(enumerate_bruhat(d, d)) for d in range(1, 7)]
        sub = [len(enumerate_bruhat(n, n - 1)) for n in range(2, 7)]
        b42 = len(enumerate_bruhat(4, 2))
        st["detail"] = f"B(d,d)={diag} B(n,n-1)={sub} B(4,2)={b42}"
        st["ok"] = set(diag) == {1} and set(sub) == {2} and b42 == 8


def test_criterion_03_ziegler_bijection():
    cases = [(3, 1), (4, 1), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4)]
    with criterion(3, "admissible classes = Ziegler enumeration", 300) as st:
        bad = []
        for n, d in cases:
            fast = {e.members for e in enumerate_bruhat(n, d)}
            slow = {e.members for e in enumerate_admissible_classes(n, d)}
            if fast != slow:
                bad.append((n, d))
        st["detail"] = f"{len(cases)} cases, mismatches {bad}"
        st["ok"] = not bad


def test_criterion_04_insertion_closure():
    with criterion(4, "insertion lands in B(n+m-d,d)", 60) as st:
        checked = failures = 0
        for n, m, d in [(2, 2, 1), (3, 2, 1), (3, 3, 1), (4, 4, 2)]:
            for b, b2 in product(elements(n, d), elements(m, d)):
                for j in range(n - d + 1):
                    members = frozenset().union(*insertion_parts(b, b2, j))
                    checked += 1
                    failures += bool(ziegler_check(InversionSet(n + m - d, d, members)))
        st["detail"] = f"{checked} insertions, {failures} failures"
        st["ok"] = checked > 0 and failures == 0


def test_criterion_05_d1_matches_permutations():
    with criterion(5, "d=1 insertion equals block inflation", 10) as st:
        checked = mismatches = 0
        for sigma, tau in product(permutations(range(1, 4)), repeat=2):
            for j in range(3):
                checked += 1
                got = insert(perm_to_element(sigma), perm_to_element(tau), j)
                mismatches += got != perm_to_element(permutation_insert(sigma, tau, j + 1))
        st["detail"] = f"{checked} pairs, {mismatches} mismatches"
        st["ok"] = checked == 108 and mismatches == 0


@pytest.mark.slow
def test_criterion_06_operad_laws():
    with criterion(6, "operad laws for M, S, F, HB_0^1, HB_0^2, HB^1", 300) as st:
        reports = [verify_operad_laws(op, dom) for op, dom in standard_instances()]
        failed = [r.name for r in reports if not r.ok]
        st["detail"] = f"{sum(r.checked for r in reports)} checks, failing: {failed}"
        st["ok"] = not failed


def test_criterion_07_monotone():
    with criterion(7, "composition is monotone on B(3,1) and B(4,2)", 60) as st:
        reports = [
            monotone_compose_check(SmallBruhatOperad(1), small_domain(1, [3])),
            monotone_compose_check(SmallBruhatOperad(1), small_domain(1, [1, 2, 3])),
            monotone_compose_check(SmallBruhatOperad(2), small_domain(2, [2])),
            monotone_compose_check(SmallBruhatOperad(2), small_domain(2, [1, 2])),
        ]
        st["detail"] = f"{sum(r.checked for r in reports)} checks, {sum(len(r.failures) for r in reports)} failures"
        st["ok"] = all(r.ok and r.checked for r in reports)


def test_criterion_08_chains():
    with criterion(8, "maximal chains have C(n,d+1) edges and admissible orders", 60) as st:
        total = bad = 0
        for n, d in [(3, 1), (4, 1), (4, 2), (4, 3)]:
            for chain in maximal_chains(n, d):
                total += 1
                added = chain.added()
                bad += len(added) != comb(n, d + 1) or not is_admissible(chain_to_order(chain))
        st["detail"] = f"{total} chains, {bad} bad"
        st["ok"] = total > 0 and bad == 0


def test_criterion_09_embedding():
    with criterion(9, "electron-free big composition equals small", 30) as st:
        parts_pool = elements(2, 1) + elements(3, 1)
        checked = mismatches = 0
        for arity in (1, 2):
            for b0 in elements(arity, 1):
                for parts in product(parts_pool, repeat=arity):
                    checked += 1
                    big = big_compose(BigBruhatElement.embed(b0), [BigBruhatElement.embed(p) for p in parts])
                    mismatches += big != BigBruhatElement.embed(small_compose(b0, parts))
        st["detail"] = f"{checked} compositions, {mismatches} mismatches"
        st["ok"] = checked > 0 and mismatches == 0


def test_criterion_10_determinism():
    commands = [["enumerate", "5", "2", "--list"], ["hasse", "4", "2", "--format", "dot", "--verbose"],
                ["hasse", "5", "2"], ["laws", "--seed", "17"]]
    with criterion(10, "byte-identical CLI output across runs", 120) as st:
        differing = []
        for argv in commands:
            outs = set()
            for hash_seed in ("0", "12345"):
                env = dict(os.environ, PYTHONHASHSEED=hash_seed)
                proc = subprocess.run([sys.executable, "-m", "bruhat_operads", *argv],
                                      capture_output=True, env=env, check=True)
                outs.add(proc.stdout)
            if len(outs) != 1:
                differing.append(argv[0])
        st["detail"] = f"{len(commands)} commands, differing: {differing}"
        st["ok"] = not differing
