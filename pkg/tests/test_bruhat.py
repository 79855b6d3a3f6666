from itertools import chain, combinations, permutations
from math import comb, factorial

import pytest

from bruhat_operads.bruhat import (
    BruhatElement,
    BudgetExceeded,
    InversionSet,
    LinearOrder,
    MaximalChain,
    ZieglerViolation,
    admissible_orders,
    chain_to_order,
    enumerate_admissible_classes,
    enumerate_bruhat,
    hasse,
    inversions,
    is_admissible,
    leq,
    maximal_chains,
    ziegler_check,
)
from bruhat_operads.insertion import perm_inversions


# -- independent oracles -------------------------------------------------------

def naive_ziegler_ok(members, n, d):
    """Literal form of the criterion: the trace on each packet is (i_k..i_1) or (i_{d+2}..i_k)."""
    for big in combinations(range(1, n + 1), d + 2):
        drop = {k: tuple(x for x in big if x != big[k - 1]) for k in range(1, d + 3)}
        trace = {drop[k] for k in drop if drop[k] in members}
        ends = [{drop[t] for t in range(1, k + 1)} for k in range(0, d + 3)]
        starts = [{drop[t] for t in range(k, d + 3)} for k in range(1, d + 4)]
        if trace not in ends and trace not in starts:
            return False
    return True


def brute_force_bruhat(n, d):
    universe = list(combinations(range(1, n + 1), d + 1))
    found = []
    for r in range(len(universe) + 1):
        for sub in combinations(universe, r):
            if naive_ziegler_ok(set(sub), n, d):
                found.append(frozenset(sub))
    return found


def covers(elements):
    """Covering pairs of the inclusion order, computed from the definition."""
    sets = [e.members for e in elements]
    out = set()
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if a < b and not any(a < c < b for c in sets):
                out.add((i, j))
    return out


# -- LinearOrder / admissibility -------------------------------------------------

def test_linear_order_validates():
    with pytest.raises(ValueError):
        LinearOrder(3, 1, ((1,), (2,)))
    with pytest.raises(ValueError):
        LinearOrder(3, 1, ((1,), (1,), (2,)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_permutation_is_admissible_for_d1(n):
    for p in permutations(range(1, n + 1)):
        assert is_admissible(LinearOrder(n, 1, tuple((x,) for x in p)))


def test_admissible_examples():
    assert is_admissible(LinearOrder.lexicographic(4, 2))
    bad = LinearOrder(4, 2, ((1, 2), (1, 4), (1, 3), (2, 3), (2, 4), (3, 4)))
    assert not is_admissible(bad)
    with pytest.raises(ValueError):
        inversions(bad)


def test_inversions_examples():
    assert inversions(LinearOrder.lexicographic(4, 2)).members == frozenset()
    assert inversions(LinearOrder.antilexicographic(4, 2)).members == frozenset(combinations(range(1, 5), 3))
    o = LinearOrder(3, 1, ((3,), (2,), (1,)))
    assert inversions(o).members == {(1, 2), (1, 3), (2, 3)}


def test_inversions_match_permutation_inversions():
    # the order x_1 < x_2 < ... lists sigma^{-1}; pair (i, k) reversed iff sigma(i) > sigma(k)
    for sigma in permutations(range(1, 5)):
        listing = sorted(range(1, 5), key=lambda x: sigma[x - 1])
        o = LinearOrder(4, 1, tuple((x,) for x in listing))
        assert inversions(o).members == perm_inversions(sigma)


# -- Ziegler criterion ---------------------------------------------------------------

def test_ziegler_examples():
    assert ziegler_check(InversionSet(4, 2)) == []
    assert ziegler_check(InversionSet(4, 2, frozenset(combinations(range(1, 5), 3)))) == []
    assert ziegler_check(InversionSet(3, 1, frozenset({(1, 3)}))) == [(1, 2, 3)]


def test_bruhat_element_rejects_invalid():
    with pytest.raises(ZieglerViolation) as info:
        BruhatElement(3, 1, frozenset({(1, 3)}))
    assert info.value.violations == [(1, 2, 3)]


def test_inversion_set_shape_checks():
    with pytest.raises(ValueError):
        InversionSet(3, 1, frozenset({(1, 2, 3)}))
    with pytest.raises(ValueError):
        InversionSet(3, 1, frozenset({(1, 4)}))
    with pytest.raises(ValueError):
        InversionSet(2, 3)


@pytest.mark.parametrize("n, d", [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)])
def test_ziegler_check_matches_naive_oracle(n, d):
    universe = list(combinations(range(1, n + 1), d + 1))
    for r in range(len(universe) + 1):
        for sub in combinations(universe, r):
            inv = InversionSet(n, d, frozenset(sub))
            assert (not ziegler_check(inv)) == naive_ziegler_ok(set(sub), n, d)


# -- enumeration -----------------------------------------------------------------------

@pytest.mark.parametrize("n, d, count", [
    (4, 1, 24), (4, 2, 8), (2, 1, 2), (3, 2, 2), (5, 4, 2), (6, 5, 2), (3, 3, 1),
])
def test_enumerate_counts(n, d, count):
    assert len(enumerate_bruhat(n, d)) == count


@pytest.mark.parametrize("n, d", [(3, 1), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)])
def test_enumerate_matches_brute_force(n, d):
    got = [e.members for e in enumerate_bruhat(n, d)]
    assert set(got) == set(brute_force_bruhat(n, d))
    assert len(got) == len(set(got))


def test_enumerate_canonical_order():
    els = enumerate_bruhat(4, 2)
    keys = [(len(e), e.sorted_members()) for e in els]
    assert keys == sorted(keys)
    assert els[0].members == frozenset() and len(els[-1]) == 4


def test_enumerate_larger_known_counts():
    # |B(6,2)| = 908 and |B(6,3)| = 148 are the classical values
    assert len(enumerate_bruhat(6, 2)) == 908
    assert len(enumerate_bruhat(6, 3)) == 148
    assert len(enumerate_bruhat(7, 1)) == factorial(7)


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_bruhat(6, 1, budget=50)
    with pytest.raises(BudgetExceeded):
        enumerate_admissible_classes(5, 2, budget=50)


@pytest.mark.parametrize("n, d, count", [(3, 1, 6), (4, 3, 2), (4, 2, 8)])
def test_admissible_classes_examples(n, d, count):
    assert len(enumerate_admissible_classes(n, d)) == count


def test_admissible_orders_are_admissible_and_complete():
    # brute force over every permutation of the 6 pairs of [4]
    items = list(combinations(range(1, 5), 2))
    expected = {p for p in permutations(items) if is_admissible(LinearOrder(4, 2, p))}
    got = {o.sequence for o in admissible_orders(4, 2)}
    assert got == expected
    assert len(got) == 16


@pytest.mark.parametrize("n, d", [(4, 1), (5, 2), (5, 3), (6, 2)])
def test_complement_closure(n, d, B):
    sets = {e.members for e in B(n, d)}
    for e in B(n, d):
        assert e.complement().members in sets


# -- order, Hasse diagram, chains ------------------------------------------------------------

def test_leq_examples(B):
    els = B(3, 1)
    lo, hi = els[0], els[-1]
    assert all(leq(lo, b) and leq(b, hi) for b in els)
    a = BruhatElement(3, 1, frozenset({(1, 2)}))
    b = BruhatElement(3, 1, frozenset({(1, 3), (2, 3)}))
    assert not leq(a, b) and not leq(b, a)
    with pytest.raises(ValueError):
        leq(lo, B(4, 1)[0])


def test_leq_is_weak_order_for_d1():
    perms = list(permutations(range(1, 4)))
    for s in perms:
        for t in perms:
            a = BruhatElement(3, 1, perm_inversions(s))
            b = BruhatElement(3, 1, perm_inversions(t))
            assert leq(a, b) == (perm_inversions(s) <= perm_inversions(t))


@pytest.mark.parametrize("n, d, nodes, edges", [(3, 3, 1, 0), (3, 1, 6, 6), (4, 2, 8, 8), (4, 1, 24, 36)])
def test_hasse_sizes(n, d, nodes, edges):
    h = hasse(n, d)
    assert (len(h.elements), len(h.edges)) == (nodes, edges)


@pytest.mark.parametrize("n, d", [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)])
def test_hasse_edges_are_covering_relation(n, d):
    h = hasse(n, d)
    assert set(h.edges) == covers(h.elements)


def count_paths(h):
    ways = [0] * len(h.elements)
    ways[0] = 1
    for a, b in sorted(h.edges, key=lambda e: len(h.elements[e[0]])):
        ways[b] += ways[a]
    return ways[-1]


@pytest.mark.parametrize("n, d, count", [(3, 2, 1), (4, 3, 1), (3, 1, 2), (4, 2, 2), (4, 1, 16)])
def test_maximal_chain_counts(n, d, count):
    chains = list(maximal_chains(n, d))
    assert len(chains) == count == count_paths(hasse(n, d))
    assert all(len(c) == comb(n, d + 1) for c in chains)


def test_chain_to_order_examples():
    prefix_chain = next(c for c in maximal_chains(4, 2) if c.added()[0] == (1, 2, 3))
    assert chain_to_order(prefix_chain) == LinearOrder.lexicographic(4, 3)
    for c in maximal_chains(3, 1):
        assert is_admissible(chain_to_order(c))
    (c,) = maximal_chains(4, 3)
    assert chain_to_order(c).sequence == ((1, 2, 3, 4),)


def test_chain_validation():
    lo, hi = BruhatElement.minimum(3, 1), BruhatElement.maximum(3, 1)
    with pytest.raises(ValueError):
        MaximalChain((lo, hi))
    with pytest.raises(ValueError):
        chain_to_order(next(maximal_chains(3, 3)))


def test_json_roundtrip(B):
    for e in B(4, 2):
        assert BruhatElement.from_json(e.to_json()) == e
    assert BruhatElement(4, 2, frozenset({(1, 2, 3)})).dumps() == '{"n":4,"d":2,"inv":[[1,2,3]]}'
    with pytest.raises(ValueError):
        InversionSet.from_json({"n": 3})


def test_dot_export():
    dot = hasse(3, 1).to_dot()
    assert dot.startswith('digraph "B(3,1)"')
    assert '0 -> 1 [label="12"]' in dot
    assert 'tooltip="{12,13}"' in dot
    assert '3 [label="3: {12,13}"' in hasse(3, 1).to_dot(verbose=True)
