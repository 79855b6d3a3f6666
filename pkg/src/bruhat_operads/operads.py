"""Planar operads: molecules M^d, symmetric groups S and F, small and big Bruhat operads.

Every instance implements the same small contract (``arity``, ``unit``, the
1-based partial compositions ``partial(a, i, b)``) and may override the full
composition ``compose``; otherwise it is derived by inserting the parts
left to right.  ``verify_operad_laws`` checks unit, associativity and
commutativity of the partial compositions, agreement of ``compose`` with the
partial compositions, and associativity of ``compose`` itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import accumulate, combinations_with_replacement, permutations, product
from typing import Any, Iterable, Sequence

from .bruhat import BruhatElement, InversionSet, enumerate_bruhat, leq as bruhat_leq
from .insertion import LawReport, insert, perm_inversions, permutation_insert

Permutation = tuple[int, ...]


# -- molecules ---------------------------------------------------------------


@dataclass(frozen=True)
class MoleculeType:
    """Electron counts (k_0, ..., k_n) around n nuclei of d protons each."""

    electrons: tuple[int, ...]
    d: int = 1

    def __post_init__(self):
        e = tuple(self.electrons)
        if len(e) < 2:
            raise ValueError("a molecule type needs at least one nucleus")
        if any(not isinstance(k, int) or k < 0 for k in e):
            raise ValueError(f"electron counts must be nonnegative integers: {e}")
        if self.d < 1:
            raise ValueError(f"nucleus size must be positive, got {self.d}")
        object.__setattr__(self, "electrons", e)

    @classmethod
    def _trusted(cls, electrons: tuple[int, ...], d: int) -> MoleculeType:
        obj = object.__new__(cls)
        object.__setattr__(obj, "electrons", electrons)
        object.__setattr__(obj, "d", d)
        return obj

    @property
    def n(self) -> int:
        """Number of nuclei."""
        return len(self.electrons) - 1

    @property
    def size(self) -> int:
        """Number of particles, d*n + sum of electrons."""
        return self.d * self.n + sum(self.electrons)

    def sequence(self) -> tuple[int, ...]:
        """The type k^d = (k_0, d, k_1, ..., d, k_n)."""
        out = [self.electrons[0]]
        for k in self.electrons[1:]:
            out += [self.d, k]
        return tuple(out)

    def nucleus_offsets(self) -> tuple[int, ...]:
        """Number of particles before nucleus j, for j = 0..n-1."""
        before = accumulate(self.electrons[:-1])
        return tuple(k + self.d * j for j, k in enumerate(before))

    def nuclei(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(range(o + 1, o + self.d + 1)) for o in self.nucleus_offsets())

    def electron_positions(self) -> tuple[int, ...]:
        protons = {p for nucleus in self.nuclei() for p in nucleus}
        return tuple(x for x in range(1, self.size + 1) if x not in protons)

    def forget(self) -> MoleculeType:
        """The same electron counts with one-proton nuclei (the isomorphism M^d -> M^1)."""
        return MoleculeType(self.electrons, 1)

    def to_json(self) -> dict:
        return {"d": self.d, "electrons": list(self.electrons)}

    @classmethod
    def from_json(cls, obj: dict) -> MoleculeType:
        try:
            return cls(tuple(obj["electrons"]), obj["d"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed molecule type JSON: {obj!r}") from exc

    @classmethod
    def unit(cls, d: int = 1) -> MoleculeType:
        return cls((0, 0), d)

    @classmethod
    def bare(cls, n: int, d: int = 1) -> MoleculeType:
        """n nuclei and no electrons."""
        return cls((0,) * (n + 1), d)


def master_compose(k: MoleculeType, parts: Sequence[MoleculeType]) -> MoleculeType:
    """Insert ``parts[i]`` in place of nucleus i of ``k``; boundary electron runs merge."""
    if len(parts) != k.n:
        raise ValueError(f"arity mismatch: {k.n} nuclei, {len(parts)} parts")
    if any(p.d != k.d for p in parts):
        raise ValueError("nucleus size mismatch")
    out: list[int] = []
    carry = k.electrons[0]
    for i, p in enumerate(parts):
        e = p.electrons
        out.append(carry + e[0])
        out.extend(e[1:-1])
        carry = e[-1] + k.electrons[i + 1]
    out.append(carry)
    return MoleculeType._trusted(tuple(out), k.d)


def master_partial(k: MoleculeType, i: int, p: MoleculeType) -> MoleculeType:
    if not 1 <= i <= k.n:
        raise ValueError(f"slot {i} outside 1..{k.n}")
    if p.d != k.d:
        raise ValueError("nucleus size mismatch")
    e, f = k.electrons, p.electrons
    return MoleculeType._trusted(e[: i - 1] + (e[i - 1] + f[0],) + f[1:-1] + (f[-1] + e[i],) + e[i + 1:], k.d)


# -- symmetric groups ----------------------------------------------------------


def _check_perm(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation")


def sym_compose(tau: Sequence[int], sigmas: Sequence[Sequence[int]]) -> Permutation:
    """Block permutation: sigma_i acts on the i-th interval, then tau permutes the intervals.

    One-line notation: ``result[x-1]`` is the image of x.
    """
    if len(sigmas) != len(tau):
        raise ValueError(f"arity mismatch: |tau|={len(tau)}, {len(sigmas)} blocks")
    sizes = [len(s) for s in sigmas]
    out: list[int] = []
    for i, s in enumerate(sigmas):
        base = sum(sizes[t] for t in range(len(tau)) if tau[t] < tau[i])
        out.extend(base + v for v in s)
    return tuple(out)


@dataclass(frozen=True)
class FElement:
    """A permutation of the particles of a one-proton molecule that only moves nuclei."""

    mtype: MoleculeType
    perm: Permutation
    team_perm: Permutation = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.mtype.d != 1:
            raise ValueError("F elements live on molecules with one-proton nuclei")
        perm = tuple(self.perm)
        if len(perm) != self.mtype.size:
            raise ValueError("permutation size differs from the molecule size")
        _check_perm(perm)
        if any(perm[x - 1] != x for x in self.mtype.electron_positions()):
            raise ValueError("F elements must fix every electron")
        object.__setattr__(self, "perm", perm)
        # induced permutation of the nuclei, numbered 1..n left to right
        where = {p: a for a, (p,) in enumerate(self.mtype.nuclei(), start=1)}
        object.__setattr__(self, "team_perm", tuple(where[perm[p - 1]] for (p,) in self.mtype.nuclei()))

    @classmethod
    def from_team_perm(cls, mtype: MoleculeType, team: Sequence[int]) -> FElement:
        if mtype.d != 1 or len(team) != mtype.n:
            raise ValueError("team permutation size differs from the number of nuclei")
        _check_perm(team)
        return cls._trusted(mtype, tuple(team))

    @classmethod
    def _trusted(cls, mtype: MoleculeType, team: Permutation) -> FElement:
        pos = mtype.nucleus_offsets()
        perm = list(range(1, mtype.size + 1))
        for a, b in enumerate(team):
            perm[pos[a]] = pos[b - 1] + 1
        obj = object.__new__(cls)
        object.__setattr__(obj, "mtype", mtype)
        object.__setattr__(obj, "perm", tuple(perm))
        object.__setattr__(obj, "team_perm", team)
        return obj


def f_compose(tau: FElement, sigmas: Sequence[FElement]) -> FElement:
    """Blocks are permuted internally by the sigmas, then among themselves by tau; electrons stay put."""
    mtype = master_compose(tau.mtype, [s.mtype for s in sigmas])
    team = sym_compose(tau.team_perm, [s.team_perm for s in sigmas])
    return FElement._trusted(mtype, team)


def f_partial(a: FElement, i: int, b: FElement) -> FElement:
    return FElement._trusted(master_partial(a.mtype, i, b.mtype), permutation_insert(a.team_perm, b.team_perm, i))


# -- Bruhat operads --------------------------------------------------------------


def small_compose(b0: InversionSet, parts: Sequence[InversionSet]) -> BruhatElement:
    """gamma(b0; b1..bn) in HB_0^d: insert b_i at offset d*(m_1 + ... + m_{i-1})."""
    d = b0.d
    if b0.n % d:
        raise ValueError(f"B({b0.n},{d}) is not in the small operad")
    if len(parts) != b0.n // d:
        raise ValueError(f"arity mismatch: {b0.n // d} slots, {len(parts)} parts")
    out = b0
    offset = 0
    for p in parts:
        if p.d != d or p.n % d:
            raise ValueError(f"B({p.n},{p.d}) is not in the small operad of level {d}")
        out = insert(out, p, offset)
        offset += p.n
    return out


@dataclass(frozen=True)
class BigBruhatElement:
    """(m, b, k): an element b of B(m, d) with a molecule type k of m particles."""

    m: int
    b: BruhatElement
    mtype: MoleculeType

    def __post_init__(self):
        if (self.b.n, self.b.d) != (self.m, self.mtype.d):
            raise ValueError(f"b must lie in B({self.m},{self.mtype.d})")
        if self.mtype.size != self.m:
            raise ValueError(f"type {self.mtype.sequence()} has {self.mtype.size} particles, not {self.m}")

    @property
    def d(self) -> int:
        return self.mtype.d

    @property
    def arity(self) -> int:
        return self.mtype.n

    @classmethod
    def unit(cls, d: int) -> BigBruhatElement:
        return cls(d, BruhatElement.unit(d), MoleculeType.unit(d))

    @classmethod
    def embed(cls, b: BruhatElement) -> BigBruhatElement:
        """The image of b in HB_0^d inside HB^d (no electrons)."""
        if b.n % b.d:
            raise ValueError(f"B({b.n},{b.d}) is not in the small operad")
        return cls(b.n, b, MoleculeType.bare(b.n // b.d, b.d))

    def to_json(self) -> dict:
        return {"m": self.m, "type": self.mtype.to_json(), "bruhat": self.b.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> BigBruhatElement:
        try:
            return cls(obj["m"], BruhatElement.from_json(obj["bruhat"]), MoleculeType.from_json(obj["type"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed big element JSON: {obj!r}") from exc


def big_compose(a0: BigBruhatElement, parts: Sequence[BigBruhatElement]) -> BigBruhatElement:
    """gamma in HB^d: part i goes to offset (k_0 + ... + k_{i-1}) + (m'_1 + ... + m'_{i-1})."""
    if len(parts) != a0.arity:
        raise ValueError(f"arity mismatch: {a0.arity} slots, {len(parts)} parts")
    if any(p.d != a0.d for p in parts):
        raise ValueError("nucleus size mismatch")
    k = a0.mtype.electrons
    out = a0.b
    for i, p in enumerate(parts):
        offset = sum(k[:i + 1]) + sum(q.m for q in parts[:i])
        out = insert(out, p.b, offset)
    mtype = master_compose(a0.mtype, [p.mtype for p in parts])
    return BigBruhatElement(out.n, out, mtype)


def big_partial(a: BigBruhatElement, i: int, c: BigBruhatElement) -> BigBruhatElement:
    if not 1 <= i <= a.arity:
        raise ValueError(f"slot {i} outside 1..{a.arity}")
    offset = a.mtype.nucleus_offsets()[i - 1]
    b = insert(a.b, c.b, offset)
    return BigBruhatElement(b.n, b, master_partial(a.mtype, i, c.mtype))


# -- the operad contract ---------------------------------------------------------


class PlanarOperad:
    """Arity-graded sets with a unit and 1-based partial compositions."""

    name = "operad"

    def arity(self, x) -> int:
        raise NotImplementedError

    def unit(self):
        raise NotImplementedError

    def partial(self, a, i: int, b):
        raise NotImplementedError

    def compose(self, a, parts: Sequence):
        """Full composition, derived from partial compositions left to right."""
        if len(parts) != self.arity(a):
            raise ValueError(f"arity mismatch: {self.arity(a)} slots, {len(parts)} parts")
        slot = 1
        for p in parts:
            a = self.partial(a, slot, p)
            slot += self.arity(p)
        return a

    def leq(self, a, b) -> bool:
        raise NotImplementedError(f"{self.name} carries no order")

    def describe(self, x) -> str:
        return repr(x)


class MasterOperad(PlanarOperad):
    def __init__(self, d: int = 1):
        self.d = d
        self.name = f"M^{d}"

    def arity(self, x: MoleculeType) -> int:
        return x.n

    def unit(self) -> MoleculeType:
        return MoleculeType.unit(self.d)

    def partial(self, a, i, b):
        return master_partial(a, i, b)

    def compose(self, a, parts):
        return master_compose(a, parts)

    def describe(self, x):
        return str(x.sequence())


class SymmetricOperad(PlanarOperad):
    name = "S"

    def arity(self, x) -> int:
        return len(x)

    def unit(self) -> Permutation:
        return (1,)

    def partial(self, a, i, b):
        return permutation_insert(a, b, i)

    def compose(self, a, parts):
        return sym_compose(a, parts)

    def leq(self, a, b) -> bool:
        return len(a) == len(b) and perm_inversions(a) <= perm_inversions(b)


class FOperad(PlanarOperad):
    name = "F"

    def arity(self, x: FElement) -> int:
        return x.mtype.n

    def unit(self) -> FElement:
        return FElement(MoleculeType.unit(1), (1,))

    def partial(self, a, i, b):
        return f_partial(a, i, b)

    def compose(self, a, parts):
        return f_compose(a, parts)

    def leq(self, a, b) -> bool:
        return a.mtype == b.mtype and perm_inversions(a.team_perm) <= perm_inversions(b.team_perm)

    def describe(self, x):
        return f"{x.mtype.sequence()}:{x.perm}"


class SmallBruhatOperad(PlanarOperad):
    """HB_0^d(n) = B(nd, d)."""

    def __init__(self, d: int):
        self.d = d
        self.name = f"HB_0^{d}"

    def arity(self, x: InversionSet) -> int:
        return x.n // self.d

    def unit(self) -> BruhatElement:
        return BruhatElement.unit(self.d)

    def partial(self, a, i, b):
        if not 1 <= i <= self.arity(a):
            raise ValueError(f"slot {i} outside 1..{self.arity(a)}")
        return insert(a, b, self.d * (i - 1))

    def compose(self, a, parts):
        return small_compose(a, parts)

    def leq(self, a, b) -> bool:
        return (a.n, a.d) == (b.n, b.d) and bruhat_leq(a, b)

    def describe(self, x):
        return f"B({x.n},{x.d}){x.sorted_members()}"


class BigBruhatOperad(PlanarOperad):
    def __init__(self, d: int):
        self.d = d
        self.name = f"HB^{d}"

    def arity(self, x: BigBruhatElement) -> int:
        return x.arity

    def unit(self) -> BigBruhatElement:
        return BigBruhatElement.unit(self.d)

    def partial(self, a, i, b):
        return big_partial(a, i, b)

    def compose(self, a, parts):
        return big_compose(a, parts)

    def leq(self, a, b) -> bool:
        return a.m == b.m and a.mtype == b.mtype and bruhat_leq(a.b, b.b)

    def describe(self, x):
        return f"({x.m}, {x.mtype.sequence()}, {x.b.sorted_members()})"


# -- finite domains for exhaustive sweeps ------------------------------------------


def master_domain(max_entry: int = 2, max_arity: int = 3, d: int = 1) -> list[MoleculeType]:
    return [MoleculeType(e, d) for n in range(1, max_arity + 1)
            for e in product(range(max_entry + 1), repeat=n + 1)]


def sym_domain(max_n: int = 3) -> list[Permutation]:
    return [p for n in range(1, max_n + 1) for p in permutations(range(1, n + 1))]


def molecule_types(max_size: int, d: int = 1) -> list[MoleculeType]:
    """All types with at most ``max_size`` particles."""
    out = []
    for n in range(1, max_size // d + 1):
        for spare in range(max_size - n * d + 1):
            for slots in combinations_with_replacement(range(n + 1), spare):
                e = [0] * (n + 1)
                for s in slots:
                    e[s] += 1
                out.append(MoleculeType(tuple(e), d))
    return out


def f_domain(max_size: int = 4) -> list[FElement]:
    return [FElement.from_team_perm(t, p) for t in molecule_types(max_size)
            for p in permutations(range(1, t.n + 1))]


def small_domain(d: int, arities: Iterable[int]) -> list[BruhatElement]:
    return [b for a in arities for b in enumerate_bruhat(a * d, d)]


def big_domain(d: int, max_m: int) -> list[BigBruhatElement]:
    out = []
    for m in range(d, max_m + 1):
        elements = enumerate_bruhat(m, d)
        for t in molecule_types(m, d):
            if t.size == m:
                out.extend(BigBruhatElement(m, b, t) for b in elements)
    return out


# -- law harness ------------------------------------------------------------------


def _triples(elements: Sequence, limit: int | None, rng: random.Random):
    if limit is None:
        return product(elements, repeat=3)
    return ((rng.choice(elements), rng.choice(elements), rng.choice(elements)) for _ in range(limit))


def verify_operad_laws(op: PlanarOperad, elements: Sequence, *, limit: int | None = None,
                       gamma_samples: int = 200, seed: int = 0) -> LawReport:
    """Check the planar operad axioms of ``op`` on ``elements``.

    Partial-composition laws run over every triple of ``elements`` (or ``limit``
    random triples).  For 1 <= i <= |a|, 1 <= j <= |b| and i < k <= |a|:

    * unit:          1 o_1 a = a = a o_i 1
    * associativity: (a o_i b) o_{i-1+j} c = a o_i (b o_j c)
    * commutativity: (a o_i b) o_{k-1+|b|} c = (a o_k c) o_i b

    Then ``gamma_samples`` random trees check that ``compose`` agrees with the
    partial compositions, is unital, and is associative.
    """
    rng = random.Random(seed)
    elements = list(elements)
    report = LawReport(f"{op.name} laws")
    show = op.describe
    u = op.unit()
    for a in elements:
        report.record(op.partial(u, 1, a) == a, lambda: f"left unit: {show(a)}")
        report.record(op.compose(u, [a]) == a, lambda: f"left unit (gamma): {show(a)}")
        report.record(op.compose(a, [u] * op.arity(a)) == a, lambda: f"right unit (gamma): {show(a)}")
        for i in range(1, op.arity(a) + 1):
            report.record(op.partial(a, i, u) == a, lambda: f"right unit o_{i}: {show(a)}")
    partial = op.partial
    arity = {id(x): op.arity(x) for x in elements}
    # b o_j c and a o_k c are reused across the outer loop
    inner: dict = {}

    def cached(x, j, y):
        key = (id(x), j, id(y))
        if key not in inner:
            inner[key] = partial(x, j, y)
        return inner[key]

    for a, b, c in _triples(elements, limit, rng):
        la, lb = arity[id(a)], arity[id(b)]
        for i in range(1, la + 1):
            ab = cached(a, i, b)
            for j in range(1, lb + 1):
                report.record(partial(ab, i - 1 + j, c) == partial(a, i, cached(b, j, c)),
                              lambda: f"assoc i={i} j={j}: {show(a)} {show(b)} {show(c)}")
            for k in range(i + 1, la + 1):
                report.record(partial(ab, k - 1 + lb, c) == partial(cached(a, k, c), i, b),
                              lambda: f"comm i={i} k={k}: {show(a)} {show(b)} {show(c)}")
    if elements:
        for _ in range(gamma_samples):
            a = rng.choice(elements)
            parts = [rng.choice(elements) for _ in range(op.arity(a))]
            whole = op.compose(a, parts)
            report.record(whole == PlanarOperad.compose(op, a, parts),
                          lambda: f"gamma vs partials: {show(a)} {[show(p) for p in parts]}")
            leaves = [[rng.choice(elements) for _ in range(op.arity(p))] for p in parts]
            lhs = op.compose(whole, [x for group in leaves for x in group])
            rhs = op.compose(a, [op.compose(p, g) for p, g in zip(parts, leaves)])
            report.record(lhs == rhs, lambda: f"gamma assoc: {show(a)} {[show(p) for p in parts]}")
    return report


def monotone_compose_check(op: PlanarOperad, elements: Sequence, *, gamma_samples: int = 200,
                           seed: int = 0) -> LawReport:
    """Composition is monotone: a <= a', b <= b' implies a o_i b <= a' o_i b'.

    Every comparable pair of pairs and every slot is checked for the partial
    compositions; ``gamma_samples`` random comparable trees check ``compose``.
    """
    rng = random.Random(seed)
    report = LawReport(f"{op.name} monotone")
    show = op.describe
    pairs = [(x, y) for x in elements for y in elements if op.arity(x) == op.arity(y) and op.leq(x, y)]
    for a, a2 in pairs:
        for b, b2 in pairs:
            for i in range(1, op.arity(a) + 1):
                report.record(op.leq(op.partial(a, i, b), op.partial(a2, i, b2)),
                              lambda: f"o_{i}: {show(a)}<={show(a2)}, {show(b)}<={show(b2)}")
    if pairs:
        for _ in range(gamma_samples):
            a, a2 = rng.choice(pairs)
            lows, highs = zip(*[rng.choice(pairs) for _ in range(op.arity(a))])
            report.record(op.leq(op.compose(a, lows), op.compose(a2, highs)),
                          lambda: f"gamma: {show(a)}<={show(a2)}")
    return report


def standard_instances() -> list[tuple[PlanarOperad, list[Any]]]:
    """The operads and exhaustive domains used by the acceptance sweep and the CLI."""
    return [
        (MasterOperad(1), master_domain(2, 3, 1)),
        (MasterOperad(2), master_domain(1, 2, 2)),
        (SymmetricOperad(), sym_domain(3)),
        (FOperad(), f_domain(4)),
        (SmallBruhatOperad(1), small_domain(1, [1, 2, 3])),
        (SmallBruhatOperad(2), small_domain(2, [1, 2])),
        (BigBruhatOperad(1), big_domain(1, 3)),
    ]
