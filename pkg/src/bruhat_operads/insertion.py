"""The j-th insertion of one higher Bruhat order into another.

For b in B(n, d), b2 in B(m, d) and an offset 0 <= j <= n - d, ``insert``
replaces the block ``j + [d]`` of [n] by ``j + [m]`` and builds the inversion
set of the result in B(n + m - d, d).  Each (d+1)-subset L of the new ground
set falls in exactly one case:

1. L inside the inserted block: decided by b2 after shifting by -j;
2. L avoiding the non-team part of the block: pulled back to [n] and decided by b;
3. otherwise: the block elements of L are slid onto the rightmost free team
   positions (``bar``) and the result is decided by b.

For d = 1 this is block substitution of permutations, see ``permutation_insert``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .bruhat import BruhatElement, InversionSet, ZieglerViolation, leq, ziegler_violations
from .core import MonotoneBijection, Subset

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class InsertionFrame:
    """Decomposition [n+m-d] = A | B | C with the team D = j + [d] at the start of B."""

    n: int
    m: int
    d: int
    j: int

    def __post_init__(self):
        if self.d < 1 or self.n < self.d or self.m < self.d:
            raise ValueError(f"need n, m >= d >= 1, got n={self.n}, m={self.m}, d={self.d}")
        # C = j+m+[n-(j+d)] must be well formed
        if not 0 <= self.j <= self.n - self.d:
            raise ValueError(f"offset j={self.j} outside 0..{self.n - self.d}")

    @property
    def size(self) -> int:
        return self.n + self.m - self.d

    @cached_property
    def A(self) -> frozenset[int]:
        return frozenset(range(1, self.j + 1))

    @cached_property
    def B(self) -> frozenset[int]:
        return frozenset(range(self.j + 1, self.j + self.m + 1))

    @cached_property
    def D(self) -> frozenset[int]:
        return frozenset(range(self.j + 1, self.j + self.d + 1))

    @cached_property
    def C(self) -> frozenset[int]:
        return frozenset(range(self.j + self.m + 1, self.size + 1))

    @cached_property
    def outer(self) -> frozenset[int]:
        """A | D | C, the image of [n]."""
        return self.A | self.D | self.C

    @cached_property
    def phi(self) -> MonotoneBijection:
        return MonotoneBijection(range(1, self.n + 1), self.outer)

    def case(self, L: Iterable[int]) -> int:
        """Which of the three defining cases a subset falls into."""
        Ls = set(L)
        if Ls <= self.B:
            return 1
        if Ls <= self.outer:
            return 2
        return 3


def bar(L: Subset, frame: InsertionFrame, *, strict: bool = True) -> Subset:
    """Slide the elements of ``L`` in B \\ D onto the rightmost free team positions.

    With ``strict`` (the default) only subsets of the mixed case are accepted;
    otherwise any subset not inside B is mapped, subsets already avoiding
    B \\ D being returned unchanged.
    """
    L = tuple(sorted(L))
    c = frame.case(L)
    if c == 1 or (strict and c != 3):
        raise ValueError(f"bar is only defined for mixed subsets, {L} is case {c}")
    plus = [x for x in L if x in frame.outer]
    minus = [x for x in L if x not in frame.outer]
    free = sorted(frame.D - set(plus))
    if len(free) < len(minus):
        raise ValueError(f"{L} has too many block elements for the team {sorted(frame.D)}")
    return tuple(sorted(plus + free[len(free) - len(minus):]))


@lru_cache(maxsize=4096)
def _frame_table(n: int, m: int, d: int, j: int) -> tuple[tuple[Subset, int, Subset], ...]:
    """For every (d+1)-subset L of the new ground set: (L, case, the subset that decides it)."""
    f = InsertionFrame(n, m, d, j)
    rows = []
    for L in combinations(range(1, f.size + 1), d + 1):
        c = f.case(L)
        if c == 1:
            key = tuple(x - j for x in L)
        elif c == 2:
            key = f.phi.preimage(L)
        else:
            key = f.phi.preimage(bar(L, f))
        rows.append((L, c, key))
    return tuple(rows)


def insertion_parts(b: InversionSet, b2: InversionSet, j: int) -> tuple[frozenset, frozenset, frozenset]:
    """The three disjoint pieces of the inversion set of ``b o_j b2``, one per case."""
    if b.d != b2.d:
        raise ValueError(f"parameter mismatch: d={b.d} vs d={b2.d}")
    InsertionFrame(b.n, b2.n, b.d, j)
    sources = (b2.members, b.members, b.members)
    parts: tuple[list, list, list] = ([], [], [])
    for L, c, key in _frame_table(b.n, b2.n, b.d, j):
        if key in sources[c - 1]:
            parts[c - 1].append(L)
    return tuple(frozenset(p) for p in parts)


def insert(b: InversionSet, b2: InversionSet, j: int, *, validate: bool = True) -> BruhatElement:
    """``b o_j b2``: insert ``b2`` in B(m, d) into ``b`` in B(n, d) at team offset ``j``.

    The result always satisfies Ziegler's criterion; ``validate`` re-checks it and
    raises ``ZieglerViolation`` if it does not, which would indicate a bug.
    """
    if b.d != b2.d:
        raise ValueError(f"parameter mismatch: d={b.d} vs d={b2.d}")
    if not 0 <= j <= b.n - b.d:
        raise ValueError(f"offset j={j} outside 0..{b.n - b.d}")
    inner, outer = b2.members, b.members
    members = frozenset(L for L, c, key in _frame_table(b.n, b2.n, b.d, j)
                        if key in (inner if c == 1 else outer))
    n, d = b.n + b2.n - b.d, b.d
    if validate:
        bad = ziegler_violations(members, n, d)
        if bad:
            raise ZieglerViolation(n, d, bad)
    return BruhatElement.trusted(n, d, members)


# -- permutations (d = 1) ---------------------------------------------------


def perm_inversions(sigma: Sequence[int]) -> frozenset[Subset]:
    """Position pairs (i, k), i < k, with sigma(i) > sigma(k); one-line notation, 1-based."""
    n = len(sigma)
    return frozenset((i + 1, k + 1) for i in range(n) for k in range(i + 1, n) if sigma[i] > sigma[k])


def perm_to_element(sigma: Sequence[int]) -> BruhatElement:
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of [{n}]")
    return BruhatElement.trusted(n, 1, perm_inversions(sigma))


def element_to_perm(b: InversionSet) -> Permutation:
    """Inverse of ``perm_to_element`` on B(n, 1)."""
    if b.d != 1:
        raise ValueError("only elements of B(n,1) correspond to permutations")
    n, inv = b.n, b.members
    return tuple(
        1 + sum((k, i) not in inv for k in range(1, i)) + sum((i, k) in inv for k in range(i + 1, n + 1))
        for i in range(1, n + 1)
    )


def permutation_insert(sigma: Sequence[int], tau: Sequence[int], pos: int) -> Permutation:
    """Substitute the block pattern ``tau`` for position ``pos`` (1-based) of ``sigma``.

    Positions before ``pos`` keep their sigma-values, positions after are shifted
    by m-1, and the block ``pos-1+[m]`` is sent to ``sigma(pos)-1+[m]`` via tau;
    values are stretched the same way around ``sigma(pos)``.
    """
    n, m = len(sigma), len(tau)
    if not 1 <= pos <= n:
        raise ValueError(f"position {pos} outside 1..{n}")
    top = sigma[pos - 1]

    def stretch(v: int) -> int:
        return v if v < top else v + m - 1

    head = [stretch(v) for v in sigma[: pos - 1]]
    block = [top - 1 + t for t in tau]
    tail = [stretch(v) for v in sigma[pos:]]
    return tuple(head + block + tail)


# -- law harnesses -----------------------------------------------------------


@dataclass
class LawReport:
    """Outcome of a law sweep: how many instances were checked and which failed."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, what) -> None:
        self.checked += 1
        if not passed:
            self.failures.append(what() if callable(what) else str(what))

    def extend(self, other: LawReport) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failures": self.failures[:20],
                "failure_count": len(self.failures), "ok": self.ok}

    def __str__(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)})"
        return f"{self.name}: {status}, {self.checked} checks"


def _fmt(b: InversionSet) -> str:
    return f"B({b.n},{b.d}){b.sorted_members()}"


def comparable_pairs(elements: Iterable[InversionSet]) -> list[tuple[InversionSet, InversionSet]]:
    """All (lo, hi) with lo <= hi, including lo == hi."""
    els = list(elements)
    return [(a, b) for a in els for b in els if (a.n, a.d) == (b.n, b.d) and leq(a, b)]


def check_insertion_monotone(samples: Iterable[tuple]) -> LawReport:
    """Monotonicity of insertion in each argument and in both jointly.

    ``samples`` yields ``(lo, hi, lo2, hi2, j)`` with lo <= hi in B(n, d) and
    lo2 <= hi2 in B(m, d).
    """
    report = LawReport("insertion monotone")
    for lo, hi, lo2, hi2, j in samples:
        if not (leq(lo, hi) and leq(lo2, hi2)):
            raise ValueError("samples must be comparable pairs")
        base = insert(lo, lo2, j).members
        ctx = f"j={j} lo={_fmt(lo)} hi={_fmt(hi)} lo2={_fmt(lo2)} hi2={_fmt(hi2)}"
        report.record(base <= insert(lo, hi2, j).members, lambda: "second argument: " + ctx)
        report.record(base <= insert(hi, lo2, j).members, lambda: "first argument: " + ctx)
        report.record(base <= insert(hi, hi2, j).members, lambda: "both arguments: " + ctx)
    return report


def monotone_samples(left: Sequence[InversionSet], right: Sequence[InversionSet]):
    """Every comparable pair from ``left`` x every comparable pair from ``right`` x every legal j."""
    for lo, hi in comparable_pairs(left):
        for lo2, hi2 in comparable_pairs(right):
            if lo.d != lo2.d:
                continue
            for j in range(lo.n - lo.d + 1):
                yield lo, hi, lo2, hi2, j


def check_insertion_laws(samples: Iterable[tuple[InversionSet, InversionSet, InversionSet]]) -> LawReport:
    """Associativity and commutativity of insertions on every sampled triple.

    For ``(a, b, c)`` in B(n,d) x B(m,d) x B(p,d), all offsets are swept:

    * ``(a o_j b) o_{j+j'} c == a o_j (b o_{j'} c)`` for 0 <= j <= n-d, 0 <= j' <= m-d;
    * ``(a o_k0 b) o_{k0+m+k1} c == (a o_{k0+d+k1} c) o_k0 b`` for k0, k1 >= 0 with
      k0 + 2d + k1 <= n, i.e. the two teams of ``a`` are disjoint.
    """
    report = LawReport("insertion laws")
    for a, b, c in samples:
        d = a.d
        if not b.d == c.d == d:
            raise ValueError("parameter d mismatch in sample")
        n, m = a.n, b.n
        for j in range(n - d + 1):
            ab = insert(a, b, j)
            for jj in range(m - d + 1):
                lhs = insert(ab, c, j + jj)
                rhs = insert(a, insert(b, c, jj), j)
                report.record(lhs == rhs, lambda: f"assoc j={j} j'={jj}: {_fmt(a)} {_fmt(b)} {_fmt(c)}")
        for k0, k1 in product(range(n + 1), repeat=2):
            if k0 + 2 * d + k1 > n:
                continue
            lhs = insert(insert(a, b, k0), c, k0 + m + k1)
            rhs = insert(insert(a, c, k0 + d + k1), b, k0)
            report.record(lhs == rhs, lambda: f"comm k0={k0} k1={k1}: {_fmt(a)} {_fmt(b)} {_fmt(c)}")
    return report
