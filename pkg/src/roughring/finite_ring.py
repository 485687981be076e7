"""Finite rings given by Cayley tables, and the usual constructions on them.

A :class:`FiniteRing` is validated by brute force when it is built, so every
value in circulation satisfies the ring axioms. "Subring" means sub-rng:
closure under ``+``, ``-`` and ``*`` with no multiplicative identity required.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .errors import (
    AxiomViolation,
    CompatibilityViolation,
    NotAHomomorphism,
    NotAnIdeal,
    NotAPartition,
    NotASubgroup,
    SizeCapExceeded,
    StructuralError,
)
from .finite_sets import Subset, Universe

MAX_RING = 256
MAX_IDEAL_SCAN = 24
MAX_ISO_SEARCH = 12
MAX_CONGRUENCE_SCAN = 8


class FiniteRing:
    """A ring on ``elems`` with index-valued addition and multiplication tables."""

    def __init__(self, elems: Universe, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                 zero: int, one: int | None = None, name: str | None = None):
        n = elems.size
        if n > MAX_RING:
            raise SizeCapExceeded(f"ring of order {n} exceeds cap {MAX_RING}")
        add = tuple(tuple(int(v) for v in row) for row in add)
        mul = tuple(tuple(int(v) for v in row) for row in mul)
        for tname, table in (("add", add), ("mul", mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise StructuralError(f"{tname} table must be {n}x{n}")
            for a, row in enumerate(table):
                for b, v in enumerate(row):
                    if not 0 <= v < n:
                        raise AxiomViolation(f"{tname}-closure", (a, b))
        if not 0 <= zero < n:
            raise StructuralError(f"zero index {zero} out of range")
        if one is not None and not 0 <= one < n:
            raise StructuralError(f"one index {one} out of range")
        self.elems = elems
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one
        self.name = name
        self._flat_add = [v for row in add for v in row]
        self._flat_mul = [v for row in mul for v in row]

        bad = _kernels.ring_violation(self._flat_add, self._flat_mul, n, zero)
        if bad is not None:
            code, a, b, c = bad
            axiom = _kernels.RING_AXIOMS[code]
            witness = (a, b, c) if code >= 4 else (a, b) if code == 1 else (a,)
            raise AxiomViolation(axiom, tuple(elems.labels[i] for i in witness))
        if one is not None:
            for x in range(n):
                if mul[one][x] != x or mul[x][one] != x:
                    raise AxiomViolation("mul-identity", (elems.labels[x],))
        self.commutative = all(mul[a][b] == mul[b][a] for a in range(n) for b in range(a + 1, n))
        self._neg = tuple(next(b for b in range(n) if add[a][b] == zero) for a in range(n))

    @property
    def order(self) -> int:
        return self.elems.size

    def __len__(self) -> int:
        return self.elems.size

    @property
    def unital(self) -> bool:
        return self.one is not None

    def label(self, x: int) -> str:
        return self.elems.labels[x]

    def index(self, label: object) -> int:
        return self.elems.index(label)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def minus(self, a: int, b: int) -> int:
        return self.add[a][self._neg[b]]

    def additive_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.zero:
            x = self.add[x][a]
            k += 1
        return k

    def inverse(self, u: int) -> int | None:
        """Two-sided multiplicative inverse of ``u``, or None."""
        if self.one is None:
            return None
        for v in range(self.order):
            if self.mul[u][v] == self.one and self.mul[v][u] == self.one:
                return v
        return None

    def units(self) -> list[int]:
        return [u for u in range(self.order) if self.inverse(u) is not None]

    def subset(self, labels: Iterable[object]) -> Subset:
        return self.elems.subset(labels)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FiniteRing) and self.elems == other.elems and self.add == other.add
                and self.mul == other.mul and self.zero == other.zero and self.one == other.one)

    def __hash__(self) -> int:
        return hash((self.elems, self.add, self.mul, self.zero, self.one))

    def __repr__(self) -> str:
        return f"FiniteRing({self.name or '?'}, order={self.order})"


def ring_from_tables(elems, add, mul, zero, one=None, name=None) -> FiniteRing:
    """Validated ring from label sequence (or Universe) and index tables.

    ``zero``/``one`` may be labels or indices.
    """
    if not isinstance(elems, Universe):
        elems = Universe(elems)

    def resolve(v):
        if v is None or isinstance(v, int):
            return v
        return elems.index(v)

    return FiniteRing(elems, add, mul, resolve(zero), resolve(one), name=name)


def ring_zmod(n: int) -> FiniteRing:
    if not isinstance(n, int) or n < 1:
        raise StructuralError(f"zmod needs n >= 1, got {n!r}")
    if n > MAX_RING:
        raise SizeCapExceeded(f"zmod {n} exceeds cap {MAX_RING}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(Universe.range(n), add, mul, 0, 1 % n, name=f"Z{n}")


def ring_product(R1: FiniteRing, R2: FiniteRing) -> FiniteRing:
    n1, n2 = R1.order, R2.order
    if n1 * n2 > MAX_RING:
        raise SizeCapExceeded(f"product of order {n1 * n2} exceeds cap {MAX_RING}")
    labels = [f"({a},{b})" for a in R1.elems.labels for b in R2.elems.labels]

    def idx(a, b):
        return a * n2 + b

    pairs = [(a, b) for a in range(n1) for b in range(n2)]
    add = [[idx(R1.add[a][c], R2.add[b][d]) for c, d in pairs] for a, b in pairs]
    mul = [[idx(R1.mul[a][c], R2.mul[b][d]) for c, d in pairs] for a, b in pairs]
    one = idx(R1.one, R2.one) if R1.one is not None and R2.one is not None else None
    name = f"{R1.name or '?'}x{R2.name or '?'}"
    return FiniteRing(Universe(labels), add, mul, idx(R1.zero, R2.zero), one, name=name)


@dataclass(frozen=True)
class Verdict:
    """Pass/fail with the first failing witness (labels) when it fails."""

    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "yes"
        return f"no ({self.reason}: {' '.join(map(str, self.witness or ()))})"


def _bits(R: FiniteRing, S: Subset) -> int:
    if S.universe != R.elems:
        raise StructuralError("subset is not over the ring's elements")
    return S.bits


def is_subring(R: FiniteRing, S: Subset) -> Verdict:
    bits = _bits(R, S)
    if not bits:
        return Verdict(False, "empty", ())
    members = list(S)
    lab = R.label
    for a in members:
        if not bits >> R.neg(a) & 1:
            return Verdict(False, "negation", (lab(a),))
    for a in members:
        for b in members:
            if not bits >> R.add[a][b] & 1:
                return Verdict(False, "addition", (lab(a), lab(b)))
    for a in members:
        for b in members:
            if not bits >> R.mul[a][b] & 1:
                return Verdict(False, "multiplication", (lab(a), lab(b)))
    return Verdict(True)


def is_additive_subgroup(R: FiniteRing, S: Subset) -> Verdict:
    bits = _bits(R, S)
    if not bits >> R.zero & 1:
        return Verdict(False, "missing zero", (R.label(R.zero),))
    members = list(S)
    for a in members:
        if not bits >> R.neg(a) & 1:
            return Verdict(False, "negation", (R.label(a),))
    for a in members:
        for b in members:
            if not bits >> R.add[a][b] & 1:
                return Verdict(False, "addition", (R.label(a), R.label(b)))
    return Verdict(True)


def is_ideal(R: FiniteRing, S: Subset) -> Verdict:
    v = is_additive_subgroup(R, S)
    if not v:
        return v
    bits = S.bits
    for a in S:
        for r in range(R.order):
            if not bits >> R.mul[r][a] & 1:
                return Verdict(False, "left absorption", (R.label(r), R.label(a)))
            if not bits >> R.mul[a][r] & 1:
                return Verdict(False, "right absorption", (R.label(a), R.label(r)))
    return Verdict(True)


def _close(R: FiniteRing, bits: int, absorb: bool) -> int:
    bits |= 1 << R.zero
    n = R.order
    while True:
        members = [i for i in range(n) if bits >> i & 1]
        new = bits
        for a in members:
            new |= 1 << R.neg(a)
            for b in members:
                new |= 1 << R.add[a][b]
                new |= 1 << R.mul[a][b]
            if absorb:
                for r in range(n):
                    new |= 1 << R.mul[r][a] | 1 << R.mul[a][r]
        if new == bits:
            return bits
        bits = new


def subring_generated(R: FiniteRing, S: Subset) -> Subset:
    return Subset(R.elems, _close(R, _bits(R, S), absorb=False))


def ideal_generated(R: FiniteRing, S: Subset) -> Subset:
    return Subset(R.elems, _close(R, _bits(R, S), absorb=True))


def _lattice(R: FiniteRing, absorb: bool) -> list[Subset]:
    start = _close(R, 0, absorb)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for bits in frontier:
            for x in range(R.order):
                if not bits >> x & 1:
                    grown = _close(R, bits | 1 << x, absorb)
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return [Subset(R.elems, b) for b in sorted(seen, key=lambda b: (bin(b).count("1"), b))]


def enumerate_subrings(R: FiniteRing) -> list[Subset]:
    """All subrings, ordered by size then bitmask."""
    return _lattice(R, absorb=False)


def enumerate_ideals(R: FiniteRing) -> list[Subset]:
    """All two-sided ideals, ordered by size then bitmask."""
    if R.order > MAX_IDEAL_SCAN:
        raise SizeCapExceeded(f"ideal enumeration is capped at order {MAX_IDEAL_SCAN}")
    return _lattice(R, absorb=True)


class Congruence:
    """A partition of a ring compatible with both operations."""

    def __init__(self, ring: FiniteRing, block_of: Sequence[int]):
        self.ring = ring
        # renumber blocks by first occurrence
        renumber: dict[int, int] = {}
        self.block_of = tuple(renumber.setdefault(b, len(renumber)) for b in block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1

    def blocks(self) -> list[Subset]:
        masks = [0] * self.num_blocks
        for x, b in enumerate(self.block_of):
            masks[b] |= 1 << x
        return [Subset(self.ring.elems, m) for m in masks]

    def block(self, x: int) -> Subset:
        b = self.block_of[x]
        return Subset(self.ring.elems, sum(1 << y for y, c in enumerate(self.block_of) if c == b))

    def zero_block(self) -> Subset:
        return self.block(self.ring.zero)

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Congruence) and self.ring == other.ring and self.block_of == other.block_of

    def __hash__(self) -> int:
        return hash(self.block_of)

    def __repr__(self) -> str:
        return "Congruence(" + " ".join(b.format() for b in self.blocks()) + ")"


def congruence_from_partition(R: FiniteRing, blocks: Iterable) -> Congruence:
    """Validate a partition (Subsets or label lists) as a congruence."""
    block_of = [-1] * R.order
    for k, block in enumerate(blocks):
        indices = list(block) if isinstance(block, Subset) else [R.index(v) for v in block]
        if not indices:
            raise NotAPartition("empty block")
        for x in indices:
            if block_of[x] != -1:
                raise NotAPartition(f"element {R.label(x)} appears in two blocks")
            block_of[x] = k
    missing = [R.label(x) for x in range(R.order) if block_of[x] == -1]
    if missing:
        raise NotAPartition(f"elements not covered: {' '.join(missing)}")
    bad = _kernels.congruence_violation(R._flat_add, R._flat_mul, R.order, block_of)
    if bad is not None:
        op, x, y, c = bad
        raise CompatibilityViolation(_kernels.CONGRUENCE_OPS[op], (R.label(x), R.label(y), R.label(c)))
    return Congruence(R, block_of)


def congruence_from_ideal(R: FiniteRing, I: Subset) -> Congruence:
    v = is_ideal(R, I)
    if not v:
        raise NotAnIdeal(v.reason, v.witness)
    block_of = [-1] * R.order
    k = 0
    for x in range(R.order):
        if block_of[x] == -1:
            for i in I:
                block_of[R.add[x][i]] = k
            k += 1
    return Congruence(R, block_of)


def _partitions(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n."""
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield list(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    if n:
        yield from rec(1, 0)


def enumerate_congruences(R: FiniteRing) -> list[Congruence]:
    """Every congruence, found by scanning all partitions (small rings only)."""
    if R.order > MAX_CONGRUENCE_SCAN:
        raise SizeCapExceeded(f"partition scan is capped at order {MAX_CONGRUENCE_SCAN}")
    out = []
    for rgs in _partitions(R.order):
        if _kernels.congruence_violation(R._flat_add, R._flat_mul, R.order, rgs) is None:
            out.append(Congruence(R, rgs))
    return out


def _coset_label(R: FiniteRing, members: Subset) -> str:
    return "[" + R.label(next(iter(members))) + "]"


class RingHom:
    """A validated ring homomorphism, stored as an index table."""

    def __init__(self, source: FiniteRing, target: FiniteRing, table: Sequence[int]):
        table = tuple(int(t) for t in table)
        if len(table) != source.order or any(not 0 <= t < target.order for t in table):
            raise StructuralError("hom table does not match source/target")
        lab = source.label
        for a in range(source.order):
            for b in range(source.order):
                if table[source.add[a][b]] != target.add[table[a]][table[b]]:
                    raise NotAHomomorphism("addition", (lab(a), lab(b)))
        for a in range(source.order):
            for b in range(source.order):
                if table[source.mul[a][b]] != target.mul[table[a]][table[b]]:
                    raise NotAHomomorphism("multiplication", (lab(a), lab(b)))
        self.source = source
        self.target = target
        self.table = table

    def __call__(self, x: int) -> int:
        return self.table[x]

    @property
    def injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    @property
    def surjective(self) -> bool:
        return len(set(self.table)) == self.target.order

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def image_of(self, S: Subset) -> Subset:
        return self.target.elems.from_indices(self.table[x] for x in S)

    def preimage_of(self, T: Subset) -> Subset:
        bits = T.bits
        return self.source.elems.from_indices(x for x, y in enumerate(self.table) if bits >> y & 1)

    def kernel(self) -> Subset:
        return self.source.elems.from_indices(x for x, y in enumerate(self.table) if y == self.target.zero)

    def compose(self, inner: "RingHom") -> "RingHom":
        """``self ∘ inner``."""
        return RingHom(inner.source, self.target, [self.table[y] for y in inner.table])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RingHom) and self.source == other.source
                and self.target == other.target and self.table == other.table)

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        pairs = " ".join(f"{self.source.label(x)}:{self.target.label(y)}" for x, y in enumerate(self.table))
        return f"RingHom({self.source.name or '?'}->{self.target.name or '?'} {pairs})"


def hom_from_table(R1: FiniteRing, R2: FiniteRing, table) -> RingHom:
    """``table`` is a sequence of target indices or a ``{source label: target label}`` dict."""
    if isinstance(table, dict):
        idx = [None] * R1.order
        for x, y in table.items():
            idx[R1.index(x)] = R2.index(y)
        if None in idx:
            raise StructuralError("hom table does not cover every source element")
        table = idx
    return RingHom(R1, R2, table)


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, range(R.order))


def additive_generators(R: FiniteRing) -> list[int]:
    """A small additive generating set, largest additive order first."""
    order = sorted(range(R.order), key=lambda x: (-R.additive_order(x), x))
    span = 1 << R.zero
    gens = []
    for g in order:
        if span >> g & 1:
            continue
        gens.append(g)
        span = _additive_span(R, span | 1 << g)
        if span == (1 << R.order) - 1:
            break
    return gens


def _additive_span(R: FiniteRing, bits: int) -> int:
    while True:
        members = [i for i in range(R.order) if bits >> i & 1]
        new = bits
        for a in members:
            for b in members:
                new |= 1 << R.add[a][b]
        if new == bits:
            return bits
        bits = new


def _extend(R1: FiniteRing, R2: FiniteRing, partial: dict[int, int], gens: list[int]) -> dict[int, int] | None:
    """Grow an additive map from generator images; None on conflict."""
    phi = dict(partial)
    queue = list(phi)
    while queue:
        x = queue.pop()
        for g in gens:
            y = R1.add[x][g]
            img = R2.add[phi[x]][phi[g]]
            if y in phi:
                if phi[y] != img:
                    return None
            else:
                phi[y] = img
                queue.append(y)
    return phi


def _hom_search(R1: FiniteRing, R2: FiniteRing, bijective: bool) -> Iterator[RingHom]:
    gens = additive_generators(R1)
    n1 = R1.order
    if bijective and n1 != R2.order:
        return
    orders2 = [R2.additive_order(y) for y in range(R2.order)]

    def rec(k, assigned):
        if k == len(gens):
            phi = _extend(R1, R2, {R1.zero: R2.zero, **assigned}, gens)
            if phi is None or len(phi) != n1:
                return
            table = [phi[x] for x in range(n1)]
            if bijective and len(set(table)) != n1:
                return
            if all(table[R1.mul[a][b]] == R2.mul[table[a]][table[b]] for a in range(n1) for b in range(n1)):
                yield RingHom(R1, R2, table)
            return
        g = gens[k]
        og = R1.additive_order(g)
        for y in range(R2.order):
            if (orders2[y] != og) if bijective else (og % orders2[y]):
                continue
            trial = {**assigned, g: y}
            if _extend(R1, R2, {R1.zero: R2.zero, **trial}, gens[:k + 1]) is None:
                continue
            yield from rec(k + 1, trial)

    yield from rec(0, {})


def enumerate_homs(R1: FiniteRing, R2: FiniteRing) -> list[RingHom]:
    """Every ring homomorphism R1 -> R2 (no unit condition), ordered by generator images."""
    if R1.order > MAX_ISO_SEARCH * 2:
        raise SizeCapExceeded("hom enumeration is capped at source order 24")
    return list(_hom_search(R1, R2, bijective=False))


def find_isomorphism(R1: FiniteRing, R2: FiniteRing) -> RingHom | None:
    if R1.order != R2.order:
        return None
    if R1.order > MAX_ISO_SEARCH:
        raise SizeCapExceeded(f"isomorphism search is capped at order {MAX_ISO_SEARCH}")
    return next(_hom_search(R1, R2, bijective=True), None)


def quotient_by_congruence(R: FiniteRing, C: Congruence) -> tuple[FiniteRing, RingHom]:
    blocks = C.blocks()
    reps = [next(iter(b)) for b in blocks]
    k = len(blocks)
    add = [[C.block_of[R.add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    mul = [[C.block_of[R.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    for a in range(R.order):
        for b in range(R.order):
            ba, bb = C.block_of[a], C.block_of[b]
            assert add[ba][bb] == C.block_of[R.add[a][b]], "congruence not additive"
            assert mul[ba][bb] == C.block_of[R.mul[a][b]], "congruence not multiplicative"
    labels = [_coset_label(R, b) for b in blocks]
    one = C.block_of[R.one] if R.one is not None else None
    name = f"{R.name or '?'}/~"
    Q = FiniteRing(Universe(labels), add, mul, C.block_of[R.zero], one, name=name)
    return Q, RingHom(R, Q, C.block_of)


@dataclass
class CosetSpace:
    """Additive cosets of a subgroup with the induced operations.

    ``ring`` is set only when the induced multiplication is well defined;
    otherwise ``mul_witness`` holds ``(a, b, a2, b2)`` with ``a ~ a2``,
    ``b ~ b2`` but ``ab`` and ``a2 b2`` in different cosets.
    """

    source: FiniteRing
    subgroup: Subset
    cosets: list[Subset]
    coset_of: tuple[int, ...]
    induced_add: list[list[int]]
    induced_mul: list[list[int]] | None
    mul_well_defined: bool
    mul_witness: tuple | None
    ring: FiniteRing | None

    def __len__(self) -> int:
        return len(self.cosets)

    def labels(self) -> list[str]:
        return [_coset_label(self.source, c) for c in self.cosets]


def quotient_by_subgroup(R: FiniteRing, K: Subset) -> CosetSpace:
    v = is_additive_subgroup(R, K)
    if not v:
        raise NotASubgroup(v.reason, v.witness)
    coset_of = [-1] * R.order
    cosets = []
    for x in range(R.order):
        if coset_of[x] == -1:
            bits = 0
            for k in K:
                y = R.add[x][k]
                coset_of[y] = len(cosets)
                bits |= 1 << y
            cosets.append(Subset(R.elems, bits))
    m = len(cosets)
    reps = [next(iter(c)) for c in cosets]
    induced_add = [[coset_of[R.add[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]

    mul = [[-1] * m for _ in range(m)]
    first = {}
    witness = None
    for a in range(R.order):
        for b in range(R.order):
            i, j = coset_of[a], coset_of[b]
            c = coset_of[R.mul[a][b]]
            if mul[i][j] == -1:
                mul[i][j] = c
                first[i, j] = (a, b)
            elif mul[i][j] != c and witness is None:
                a0, b0 = first[i, j]
                witness = tuple(R.label(v) for v in (a0, b0, a, b))
    ok = witness is None
    ring = None
    if ok:
        one = coset_of[R.one] if R.one is not None else None
        labels = [_coset_label(R, c) for c in cosets]
        ring = FiniteRing(Universe(labels), induced_add, mul, coset_of[R.zero], one,
                          name=f"{R.name or '?'}/K")
    return CosetSpace(R, K, cosets, tuple(coset_of), induced_add, mul if ok else None, ok, witness, ring)
