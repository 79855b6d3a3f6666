"""Higher Bruhat orders B(n, d).

An element of B(n, d) is identified with its inversion set, a family of
(d+1)-subsets of [n] whose intersection with every (d+2)-packet is a beginning
or an ending interval of that packet (Ziegler's criterion).  Two independent
routes produce the elements:

* ``enumerate_bruhat`` -- depth-first search over (d+1)-subsets with
  incremental checking of the criterion;
* ``enumerate_admissible_classes`` -- brute force over linear orders of the
  d-subsets, keeping the admissible ones and collecting inversion sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .core import Subset, k_subsets, make_subset, packet

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """A search used more nodes than its configured budget."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: search budget of {budget} nodes exceeded")
        self.budget = budget


class ZieglerViolation(ValueError):
    def __init__(self, n: int, d: int, violations: list[Subset]):
        shown = ", ".join(str(list(v)) for v in violations[:5])
        more = "" if len(violations) <= 5 else f" (+{len(violations) - 5} more)"
        super().__init__(f"not an inversion set of B({n},{d}); violating packets: {shown}{more}")
        self.violations = violations


def _check_params(n: int, d: int) -> None:
    if not (isinstance(n, int) and isinstance(d, int)) or not 1 <= d <= n:
        raise ValueError(f"need integers 1 <= d <= n, got n={n}, d={d}")


def _sort_key(members: Iterable[Subset]):
    s = sorted(members)
    return (len(s), s)


@dataclass(frozen=True)
class LinearOrder:
    """A total order on the d-subsets of [n]; earlier in ``sequence`` is smaller."""

    n: int
    d: int
    sequence: tuple[Subset, ...]
    rank: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _check_params(self.n, self.d)
        seq = tuple(make_subset(s, self.n) for s in self.sequence)
        if sorted(seq) != k_subsets(self.n, self.d):
            raise ValueError(f"sequence is not an ordering of all {self.d}-subsets of [{self.n}]")
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "rank", {s: i for i, s in enumerate(seq)})

    @classmethod
    def lexicographic(cls, n: int, d: int) -> LinearOrder:
        return cls(n, d, tuple(k_subsets(n, d)))

    @classmethod
    def antilexicographic(cls, n: int, d: int) -> LinearOrder:
        return cls(n, d, tuple(reversed(k_subsets(n, d))))


@dataclass(frozen=True)
class InversionSet:
    """A family of (d+1)-subsets of [n], not necessarily satisfying Ziegler's criterion."""

    n: int
    d: int
    members: frozenset = frozenset()

    def __post_init__(self):
        _check_params(self.n, self.d)
        members = frozenset(make_subset(s, self.n) for s in self.members)
        for s in members:
            if len(s) != self.d + 1:
                raise ValueError(f"{s} is not a {self.d + 1}-subset")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.members

    def __iter__(self) -> Iterator[Subset]:
        return iter(sorted(self.members))

    def sort_key(self):
        return _sort_key(self.members)

    def sorted_members(self) -> list[Subset]:
        return sorted(self.members)

    def complement(self) -> InversionSet:
        rest = set(combinations(range(1, self.n + 1), self.d + 1)) - self.members
        return InversionSet(self.n, self.d, frozenset(rest))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "inv": [list(s) for s in self.sorted_members()]}

    @classmethod
    def from_json(cls, obj: dict):
        try:
            n, d, inv = obj["n"], obj["d"], obj["inv"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed element JSON: {obj!r}") from exc
        return cls(n, d, frozenset(tuple(s) for s in inv))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


@dataclass(frozen=True)
class BruhatElement(InversionSet):
    """An element of B(n, d): an inversion set satisfying Ziegler's criterion."""

    def __post_init__(self):
        super().__post_init__()
        bad = ziegler_check(self)
        if bad:
            raise ZieglerViolation(self.n, self.d, bad)

    @classmethod
    def trusted(cls, n: int, d: int, members: Iterable[Subset]) -> BruhatElement:
        """Build an element without re-running the criterion (caller guarantees validity)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "members", frozenset(members))
        return obj

    @classmethod
    def minimum(cls, n: int, d: int) -> BruhatElement:
        _check_params(n, d)
        return cls.trusted(n, d, ())

    @classmethod
    def maximum(cls, n: int, d: int) -> BruhatElement:
        _check_params(n, d)
        return cls.trusted(n, d, combinations(range(1, n + 1), d + 1))

    @classmethod
    def unit(cls, d: int) -> BruhatElement:
        """The single element of B(d, d)."""
        return cls.minimum(d, d)


@lru_cache(maxsize=None)
def _packets(n: int, d: int) -> tuple[tuple[Subset, tuple[Subset, ...]], ...]:
    """(source, members) for every (d+2)-packet of [n]."""
    return tuple((big, packet(big).members) for big in combinations(range(1, n + 1), d + 2))


@lru_cache(maxsize=None)
def _interval_masks(length: int) -> frozenset[int]:
    full = (1 << length) - 1
    return frozenset({(1 << k) - 1 for k in range(length + 1)} | {full ^ ((1 << k) - 1) for k in range(length + 1)})


def ziegler_check(inv: InversionSet) -> list[Subset]:
    """Return every (d+2)-subset whose packet meets ``inv`` in a non-interval.

    An empty list means ``inv`` satisfies the criterion.
    """
    return ziegler_violations(inv.members, inv.n, inv.d)


def ziegler_violations(members: frozenset, n: int, d: int) -> list[Subset]:
    allowed = _interval_masks(d + 2)
    bad = []
    for big, p in _packets(n, d):
        mask = 0
        for t, s in enumerate(p):
            if s in members:
                mask |= 1 << t
        if mask not in allowed:
            bad.append(big)
    return bad


def is_bruhat(inv: InversionSet) -> bool:
    return not ziegler_check(inv)


def is_admissible(order: LinearOrder) -> bool:
    """True iff every (d+1)-packet appears in ``order`` in packet order or reversed."""
    rank = order.rank
    for big in combinations(range(1, order.n + 1), order.d + 1):
        r = [rank[s] for s in packet(big)]
        if r != sorted(r) and r != sorted(r, reverse=True):
            return False
    return True


def inversions(order: LinearOrder) -> InversionSet:
    """The (d+1)-subsets whose packets are reversed in an admissible ``order``."""
    if not is_admissible(order):
        raise ValueError("inversion set is only defined for admissible orders")
    rank = order.rank
    inv = []
    for big in combinations(range(1, order.n + 1), order.d + 1):
        first, second = packet(big).members[:2]
        if rank[first] > rank[second]:
            inv.append(big)
    return InversionSet(order.n, order.d, frozenset(inv))


def leq(a: InversionSet, b: InversionSet) -> bool:
    """Bruhat order: containment of inversion sets."""
    if (a.n, a.d) != (b.n, b.d):
        raise ValueError(f"cannot compare B({a.n},{a.d}) with B({b.n},{b.d})")
    return a.members <= b.members


def _interval_patterns(length: int) -> set[tuple[int, int]]:
    """All (known, value) bitmask pairs consistent with some prefix/suffix pattern."""
    full = (1 << length) - 1
    patterns = {(1 << k) - 1 for k in range(length + 1)}
    patterns |= {full ^ ((1 << k) - 1) for k in range(length + 1)}
    return {(known, p & known) for known in range(full + 1) for p in patterns}


def enumerate_bruhat(n: int, d: int, budget: int = DEFAULT_BUDGET) -> list[BruhatElement]:
    """All elements of B(n, d), sorted by (size, sorted member list).

    Subsets are decided one at a time; after each decision only the packets
    containing the new subset are tested, against partial assignments.
    """
    _check_params(n, d)
    universe = k_subsets(n, d + 1)
    index = {s: i for i, s in enumerate(universe)}
    bigs = k_subsets(n, d + 2)
    # for each (d+1)-subset: (packet id, bit position inside that packet)
    touches: list[list[tuple[int, int]]] = [[] for _ in universe]
    for pid, big in enumerate(bigs):
        for pos, member in enumerate(packet(big)):
            touches[index[member]].append((pid, 1 << pos))
    consistent = _interval_patterns(d + 2)
    known = [0] * len(bigs)
    value = [0] * len(bigs)
    chosen: list[Subset] = []
    out: list[BruhatElement] = []
    nodes = 0

    def dfs(t: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"enumerate_bruhat({n},{d})", budget)
        if t == len(universe):
            out.append(BruhatElement.trusted(n, d, chosen))
            return
        for take in (False, True):
            if all((known[p] | bit, (value[p] | bit) if take else value[p]) in consistent
                   for p, bit in touches[t]):
                for p, bit in touches[t]:
                    known[p] |= bit
                    if take:
                        value[p] |= bit
                if take:
                    chosen.append(universe[t])
                dfs(t + 1)
                if take:
                    chosen.pop()
                for p, bit in touches[t]:
                    known[p] &= ~bit
                    value[p] &= ~bit

    dfs(0)
    out.sort(key=InversionSet.sort_key)
    return out


def admissible_orders(n: int, d: int, budget: int = DEFAULT_BUDGET) -> Iterator[LinearOrder]:
    """Every admissible linear order on the d-subsets of [n], in lexicographic succession.

    A prefix is extended by ``s`` only if, in each packet containing ``s``, the
    members already placed form an initial (lex) or final (antilex) run and
    ``s`` is the next one in that direction.
    """
    _check_params(n, d)
    items = k_subsets(n, d)
    size = d + 1
    containing: dict[Subset, list[tuple[Subset, int]]] = {s: [] for s in items}
    for big in combinations(range(1, n + 1), size):
        for pos, s in enumerate(packet(big)):
            containing[s].append((big, pos))
    placed: dict[Subset, list[int]] = {big: [] for big in combinations(range(1, n + 1), size)}
    used = [False] * len(items)
    prefix: list[Subset] = []
    nodes = 0

    def extendable(s: Subset) -> bool:
        for big, pos in containing[s]:
            got = placed[big]
            c = len(got)
            if c == 0:
                if pos not in (0, size - 1):
                    return False
                continue
            # earlier placements were validated, so the last one fixes the direction
            lex = got[-1] == c - 1 and pos == c
            antilex = got[-1] == size - c and pos == size - c - 1
            if not (lex or antilex):
                return False
        return True

    def rec() -> Iterator[LinearOrder]:
        nonlocal nodes
        if len(prefix) == len(items):
            yield LinearOrder(n, d, tuple(prefix))
            return
        for i, s in enumerate(items):
            if used[i] or not extendable(s):
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"admissible_orders({n},{d})", budget)
            used[i] = True
            prefix.append(s)
            for big, pos in containing[s]:
                placed[big].append(pos)
            yield from rec()
            for big, pos in containing[s]:
                placed[big].pop()
            prefix.pop()
            used[i] = False

    yield from rec()


def enumerate_admissible_classes(n: int, d: int, budget: int = DEFAULT_BUDGET) -> list[InversionSet]:
    """Distinct inversion sets of admissible orders; independent oracle for ``enumerate_bruhat``."""
    seen = {inversions(o) for o in admissible_orders(n, d, budget)}
    return sorted(seen, key=InversionSet.sort_key)


@dataclass(frozen=True)
class HasseDiagram:
    n: int
    d: int
    elements: tuple[BruhatElement, ...]
    edges: tuple[tuple[int, int], ...]

    def added(self, edge: tuple[int, int]) -> Subset:
        a, b = edge
        (x,) = self.elements[b].members - self.elements[a].members
        return x

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "nodes": [e.to_json()["inv"] for e in self.elements],
            "edges": [[a, b, list(self.added((a, b)))] for a, b in self.edges],
        }

    def to_dot(self, verbose: bool = False) -> str:
        lines = [f'digraph "B({self.n},{self.d})" {{', "  rankdir=BT;"]
        for i, e in enumerate(self.elements):
            inv = _fmt_inv(e)
            label = f"{i}: {inv}" if verbose else str(i)
            lines.append(f'  {i} [label="{label}", tooltip="{inv}"];')
        for a, b in self.edges:
            lines.append(f'  {a} -> {b} [label="{"".join(map(str, self.added((a, b))))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _fmt_inv(e: InversionSet) -> str:
    return "{" + ",".join("".join(map(str, s)) if e.n < 10 else "-".join(map(str, s))
                          for s in e.sorted_members()) + "}"


def hasse(n: int, d: int, budget: int = DEFAULT_BUDGET) -> HasseDiagram:
    """Covering relations of B(n, d): b covers a iff b adds exactly one inversion to a."""
    elements = enumerate_bruhat(n, d, budget)
    index = {e.members: i for i, e in enumerate(elements)}
    universe = k_subsets(n, d + 1)
    edges = []
    for i, e in enumerate(elements):
        for x in universe:
            if x not in e.members:
                j = index.get(e.members | {x})
                if j is not None:
                    edges.append((i, j))
    edges.sort()
    return HasseDiagram(n, d, tuple(elements), tuple(edges))


@dataclass(frozen=True)
class MaximalChain:
    """A saturated chain from the minimum to the maximum of B(n, d)."""

    steps: tuple[BruhatElement, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("empty chain")
        n, d = self.steps[0].n, self.steps[0].d
        if any((s.n, s.d) != (n, d) for s in self.steps):
            raise ValueError("chain mixes different B(n,d)")
        if self.steps[0].members or len(self.steps[-1]) != comb(n, d + 1):
            raise ValueError("chain must run from the empty to the full inversion set")
        if len(self.steps) != comb(n, d + 1) + 1:
            raise ValueError("chain does not have C(n, d+1) steps")
        for a, b in zip(self.steps, self.steps[1:]):
            if not (a.members < b.members and len(b) == len(a) + 1):
                raise ValueError("consecutive steps must differ by one added inversion")

    @property
    def n(self) -> int:
        return self.steps[0].n

    @property
    def d(self) -> int:
        return self.steps[0].d

    def __len__(self) -> int:
        """Number of edges."""
        return len(self.steps) - 1

    def added(self) -> tuple[Subset, ...]:
        return tuple(next(iter(b.members - a.members)) for a, b in zip(self.steps, self.steps[1:]))


def maximal_chains(n: int, d: int, budget: int = DEFAULT_BUDGET) -> Iterator[MaximalChain]:
    """All source-to-sink paths of the Hasse diagram of B(n, d)."""
    h = hasse(n, d, budget)
    succ: dict[int, list[int]] = {i: [] for i in range(len(h.elements))}
    for a, b in h.edges:
        succ[a].append(b)
    top = len(h.elements) - 1
    nodes = 0
    path = [0]

    def walk() -> Iterator[MaximalChain]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"maximal_chains({n},{d})", budget)
        if path[-1] == top:
            yield MaximalChain(tuple(h.elements[i] for i in path))
            return
        for b in succ[path[-1]]:
            path.append(b)
            yield from walk()
            path.pop()

    yield from walk()


def chain_to_order(chain: MaximalChain) -> LinearOrder:
    """The order on (d+1)-subsets in which ``chain`` adds its inversions; admissible at level d+1."""
    if chain.d + 1 > chain.n:
        raise ValueError(f"B({chain.n},{chain.d}) has no level d+1")
    order = LinearOrder(chain.n, chain.d + 1, chain.added())
    if not is_admissible(order):
        raise ValueError("chain induces a non-admissible order")
    return order
