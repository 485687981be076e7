"""Exhaustive checking of the approximation distribution laws.

Each law compares a *left* and a *right* set. Laws with expected status
``equality`` must hold on every instance; laws with expected status
``subset`` must satisfy ``left ⊆ right`` everywhere and, when the inclusion
is strict somewhere, the first strict instance in enumeration order is
reported as the witness.

The kernels in ``_kernels`` do the bulk enumeration; :func:`evaluate_sides`
recomputes a single instance through :mod:`finite_sets` and is what
:func:`revalidate` uses to re-check every reported witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .errors import BudgetExceeded, StructuralError
from .finite_ring import FiniteRing, congruence_from_ideal, enumerate_ideals, ring_product, ring_zmod
from .finite_sets import SetValuedMap, Subset, Universe
from .rough_hom import check_class_laws, setwise_add, setwise_mul

BUDGET = 10 ** 7

EQUALITY_EVERYWHERE = "equality-everywhere"
PROPER_INCLUSION = "proper-inclusion-with-witness"
REFUTED = "refuted-with-witness"
NO_WITNESS = "exhausted-no-witness"


@dataclass(frozen=True)
class Law:
    id: str
    kind: str  # single | pair | class
    code: int | None
    expected: str  # equality | subset (left ⊆ right)
    stated_claim: str  # equality | inclusion
    left: str
    right: str


def _single(law_id, code, expected, claim, left, right):
    return Law(law_id, "single", code, expected, claim, left, right)


def _pair(law_id, code, expected, claim, left, right):
    return Law(law_id, "pair", code, expected, claim, left, right)


K = _kernels
CATALOG: dict[str, Law] = {law.id: law for law in [
    _single("P21-1", K.P21_1, "equality", "equality", "lower(A ∩ B)", "lower(A) ∩ lower(B)"),
    _single("P21-2", K.P21_2, "equality", "equality", "upper(∅)", "∅"),
    _single("P21-3", K.P21_3, "equality", "equality", "upper(A ∪ B)", "upper(A) ∪ upper(B)"),
    _single("P21-4", K.P21_4, "subset", "equality", "lower(A) ∪ lower(B)", "lower(A ∪ B)"),
    _single("P21-5", K.P21_5, "subset", "equality", "upper(A ∩ B)", "upper(A) ∩ upper(B)"),
    _pair("T21-1", K.T21_1, "equality", "equality", "upper_{F1∪F2}(A)", "upper_F1(A) ∪ upper_F2(A)"),
    _pair("T21-2", K.T21_2, "subset", "inclusion", "upper_{F1∩F2}(A)", "upper_F1(A) ∩ upper_F2(A)"),
    _pair("T21-3", K.T21_3, "equality", "equality", "lower_{F1∪F2}(A)", "lower_F1(A) ∩ lower_F2(A)"),
    _pair("T21-4", K.T21_4, "subset", "equality", "lower_F1(A) ∪ lower_F2(A)", "lower_{F1∩F2}(A)"),
    # inverse-image forms: the upper/lower inverse images are the same operators
    _single("P31-1", K.P21_5, "subset", "equality", "upper(B1 ∩ B2)", "upper(B1) ∩ upper(B2)"),
    _single("P31-2", K.P21_3, "equality", "equality", "upper(B1 ∪ B2)", "upper(B1) ∪ upper(B2)"),
    _single("P31-3", K.P21_4, "subset", "equality", "lower(B1) ∪ lower(B2)", "lower(B1 ∪ B2)"),
    _pair("P32-1", K.T21_1, "equality", "equality", "upper_{F1∪F2}(B)", "upper_F1(B) ∪ upper_F2(B)"),
    _pair("P32-2", K.T21_2, "subset", "inclusion", "upper_{F1∩F2}(B)", "upper_F1(B) ∩ upper_F2(B)"),
    _pair("P32-3", K.T21_3, "equality", "equality", "lower_{F1∪F2}(B)", "lower_F1(B) ∩ lower_F2(B)"),
    _pair("P32-4", K.T21_4, "subset", "equality", "lower_F1(B) ∪ lower_F2(B)", "lower_{F1∩F2}(B)"),
    Law("P42-add", "class", None, "equality", "equality", "[x] + [y]", "[x + y]"),
    Law("P42-mul", "class", None, "subset", "equality", "[x] * [y]", "[x * y]"),
]}
LAW_IDS = list(CATALOG)


def get_law(law_id: str) -> Law:
    try:
        return CATALOG[law_id]
    except KeyError:
        raise StructuralError(f"unknown law {law_id!r}; known: {' '.join(LAW_IDS)}") from None


def scope_universes(nx: int, ny: int) -> tuple[Universe, Universe]:
    return Universe.range(nx, start=1), Universe.range(ny, start=1)


def count_maps(nx: int, ny: int, total_only: bool) -> int:
    return ((1 << ny) - (1 if total_only else 0)) ** nx


def _map_rows(nx: int, ny: int, total_only: bool) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(1 if total_only else 0, 1 << ny), repeat=nx)


def enumerate_svms(X: Universe, Y: Universe, total_only: bool = False,
                   budget: int = BUDGET) -> Iterator[SetValuedMap]:
    """Every map X -> 2^Y once; the first source element varies slowest."""
    count = count_maps(X.size, Y.size, total_only)
    if count > budget:
        raise BudgetExceeded(count, budget)
    for row in _map_rows(X.size, Y.size, total_only):
        yield SetValuedMap(X, Y, row)


def decode_map(index: int, nx: int, ny: int, total_only: bool) -> tuple[int, ...]:
    """Inverse of the enumeration order: map number -> image masks."""
    start = 1 if total_only else 0
    radix = (1 << ny) - start
    digits = []
    for _ in range(nx):
        index, d = divmod(index, radix)
        digits.append(d + start)
    return tuple(reversed(digits))


@dataclass(frozen=True)
class Witness:
    """A concrete law instance with both sides evaluated."""

    maps: tuple[SetValuedMap, ...]
    sets: tuple[Subset, ...]
    left: Subset
    right: Subset

    def lines(self) -> list[str]:
        out = []
        names = ["F"] if len(self.maps) == 1 else ["F1", "F2"]
        for name, F in zip(names, self.maps):
            out.append(f"{name}: " + " ".join(f"{x}->{s.format()}" for x, s in F.items()))
        set_names = ["A", "B"] if len(self.sets) == 2 else ["A"]
        for name, s in zip(set_names, self.sets):
            out.append(f"{name}: {s.format()}")
        out.append(f"left: {self.left.format()}")
        out.append(f"right: {self.right.format()}")
        return out


@dataclass(frozen=True)
class ClassWitness:
    ring: FiniteRing
    ideal: Subset
    x: int
    y: int
    setwise: Subset
    cls: Subset

    def lines(self) -> list[str]:
        R = self.ring
        return [
            f"ring: {R.name}",
            f"ideal: {self.ideal.format()}",
            f"x: {R.label(self.x)}",
            f"y: {R.label(self.y)}",
            f"left: {self.setwise.format()}",
            f"right: {self.cls.format()}",
        ]


@dataclass(frozen=True)
class LawVerdict:
    law: Law
    status: str
    witness: Witness | ClassWitness | None
    instances: int
    scope: str
    randomized: bool = False

    @property
    def contradicts_claim(self) -> bool:
        if self.status == REFUTED:
            return True
        return self.law.stated_claim == "equality" and self.status == PROPER_INCLUSION


def evaluate_sides(law: Law, maps, sets) -> tuple[Subset, Subset]:
    """Both sides of a map law, computed directly with SetValuedMap operations."""
    if law.kind == "single":
        (F,), code = maps, law.code
        A, B = sets
        if code == K.P21_1:
            return F.lower(A & B), F.lower(A) & F.lower(B)
        if code == K.P21_2:
            return F.upper(F.target.empty()), F.source.empty()
        if code == K.P21_3:
            return F.upper(A | B), F.upper(A) | F.upper(B)
        if code == K.P21_4:
            return F.lower(A) | F.lower(B), F.lower(A | B)
        return F.upper(A & B), F.upper(A) & F.upper(B)
    if law.kind == "pair":
        (F1, F2), (A,) = maps, sets
        code = law.code
        if code == K.T21_1:
            return F1.union(F2).upper(A), F1.upper(A) | F2.upper(A)
        if code == K.T21_2:
            return F1.intersection(F2).upper(A), F1.upper(A) & F2.upper(A)
        if code == K.T21_3:
            return F1.union(F2).lower(A), F1.lower(A) & F2.lower(A)
        return F1.lower(A) | F2.lower(A), F1.intersection(F2).lower(A)
    raise StructuralError(f"{law.id} is not a map law")


def _status(law: Law, diff, not_sub) -> tuple[str, object]:
    if law.expected == "equality":
        return (REFUTED, diff) if diff is not None else (EQUALITY_EVERYWHERE, None)
    if not_sub is not None:
        return REFUTED, not_sub
    if diff is not None:
        return PROPER_INCLUSION, diff
    return NO_WITNESS, None


def _map_witness(law, raw, nx, ny, total_only) -> Witness:
    X, Y = scope_universes(nx, ny)
    if law.kind == "single":
        m, a, b = raw
        maps = (SetValuedMap(X, Y, decode_map(m, nx, ny, total_only)),)
        sets = (Subset(Y, a), Subset(Y, b))
    else:
        m1, m2, a = raw
        maps = (SetValuedMap(X, Y, decode_map(m1, nx, ny, total_only)),
                SetValuedMap(X, Y, decode_map(m2, nx, ny, total_only)))
        sets = (Subset(Y, a),)
    left, right = evaluate_sides(law, maps, sets)
    return Witness(maps, sets, left, right)


def instance_count(law: Law, nx: int, ny: int, total_only: bool) -> int:
    nmaps, nsub = count_maps(nx, ny, total_only), 1 << ny
    if law.kind == "single":
        return nmaps if law.code == K.P21_2 else nmaps * nsub * nsub
    return nmaps * nmaps * nsub


def default_rings(max_order: int = 12) -> list[FiniteRing]:
    """Z_n for n <= max_order, then a few product rings, in that order."""
    rings = [ring_zmod(n) for n in range(1, max_order + 1)]
    Z2, Z3 = ring_zmod(2), ring_zmod(3)
    extras = [
        ring_product(Z2, Z2),
        ring_product(Z2, ring_zmod(4)),
        ring_product(ring_product(Z2, Z2), Z2),
        ring_product(Z3, Z3),
        ring_product(Z2, ring_zmod(6)),
    ]
    return rings + [R for R in extras if R.order <= max_order]


def _check_class_law(law: Law, rings) -> LawVerdict:
    instances = 0
    strict = None
    for R in rings:
        for I in enumerate_ideals(R):
            C = congruence_from_ideal(R, I)
            report = check_class_laws(R, C)
            res = report.additive if law.id == "P42-add" else report.multiplicative
            instances += res.instances
            if res.status == "equality":
                continue
            x, y = (R.index(v) for v in res.witness)
            op = setwise_add if law.id == "P42-add" else setwise_mul
            w = ClassWitness(R, I, x, y, op(C.block(x), C.block(y), R),
                             C.block(R.add[x][y] if law.id == "P42-add" else R.mul[x][y]))
            if res.status == "incomparable" or law.expected == "equality":
                return LawVerdict(law, REFUTED, w, instances, _ring_scope(rings))
            if strict is None:
                strict = w
    status = PROPER_INCLUSION if strict is not None else (
        EQUALITY_EVERYWHERE if law.expected == "equality" else NO_WITNESS)
    return LawVerdict(law, status, strict, instances, _ring_scope(rings))


def _ring_scope(rings) -> str:
    return "rings " + " ".join(R.name or "?" for R in rings)


def check_law(law_id: str, nx: int = 3, ny: int = 3, total_only: bool = True,
              budget: int = BUDGET, rings=None, max_ring_order: int = 12) -> LawVerdict:
    """Exhaustively check one catalog law.

    Map laws run over all maps ``{1..nx} -> 2^{1..ny}`` (total ones only by
    default) and all subsets; pair laws keep only pairs whose pointwise
    intersection is non-empty everywhere. Class laws run over every ideal of
    every ring in ``rings`` (default: :func:`default_rings`).
    """
    law = get_law(law_id)
    if law.kind == "class":
        return _check_class_law(law, rings if rings is not None else default_rings(max_ring_order))
    count = instance_count(law, nx, ny, total_only)
    if count > budget:
        raise BudgetExceeded(count, budget)
    nmaps, nsub = count_maps(nx, ny, total_only), 1 << ny
    flat = [v for row in _map_rows(nx, ny, total_only) for v in row]
    if law.kind == "single":
        instances, diff, not_sub, _ = _kernels.scan_single(flat, nmaps, nx, nsub, law.code)
    else:
        instances, diff, not_sub, _ = _kernels.scan_pair(flat, nmaps, nx, nsub, law.code, True)
    status, raw = _status(law, diff, not_sub)
    witness = _map_witness(law, raw, nx, ny, total_only) if raw is not None else None
    scope = f"|X|={nx} |Y|={ny} {'total' if total_only else 'all'} maps"
    return LawVerdict(law, status, witness, instances, scope)


def check_law_random(law_id: str, nx: int, ny: int, samples: int, seed: int = 0,
                     total_only: bool = True) -> LawVerdict:
    """Randomized spot-check for scopes above the exhaustive budget."""
    law = get_law(law_id)
    if law.kind == "class":
        raise StructuralError("randomized mode covers map laws only")
    rng = random.Random(seed)
    X, Y = scope_universes(nx, ny)
    lo = 1 if total_only else 0

    def rand_map():
        return SetValuedMap(X, Y, [rng.randrange(lo, 1 << ny) for _ in range(nx)])

    strict = None
    done = 0
    while done < samples:
        if law.kind == "single":
            maps = (rand_map(),)
            sets = (Subset(Y, rng.randrange(1 << ny)), Subset(Y, rng.randrange(1 << ny)))
        else:
            maps = (rand_map(), rand_map())
            if not maps[0].intersection(maps[1]).total:
                continue
            sets = (Subset(Y, rng.randrange(1 << ny)),)
        done += 1
        left, right = evaluate_sides(law, maps, sets)
        if left == right:
            continue
        w = Witness(maps, sets, left, right)
        if law.expected == "equality" or not left <= right:
            return LawVerdict(law, REFUTED, w, done, f"random |X|={nx} |Y|={ny}", randomized=True)
        if strict is None:
            strict = w
    status = PROPER_INCLUSION if strict else (EQUALITY_EVERYWHERE if law.expected == "equality" else NO_WITNESS)
    return LawVerdict(law, status, strict, done, f"random |X|={nx} |Y|={ny}", randomized=True)


def revalidate(verdict: LawVerdict) -> bool:
    """Recompute the witness from scratch and confirm it breaks the equality reading."""
    w = verdict.witness
    if w is None:
        return verdict.status in (EQUALITY_EVERYWHERE, NO_WITNESS)
    if isinstance(w, ClassWitness):
        R = w.ring
        C = congruence_from_ideal(R, w.ideal)
        bx, by = C.block(w.x), C.block(w.y)
        if verdict.law.id == "P42-add":
            left, right = setwise_add(bx, by, R), C.block(R.add[w.x][w.y])
        else:
            left, right = setwise_mul(bx, by, R), C.block(R.mul[w.x][w.y])
    else:
        left, right = evaluate_sides(verdict.law, w.maps, w.sets)
    if (left, right) != (w.left if isinstance(w, Witness) else w.setwise,
                         w.right if isinstance(w, Witness) else w.cls):
        return False
    if verdict.status == PROPER_INCLUSION:
        return left < right
    return left != right


def format_verdict(v: LawVerdict) -> list[str]:
    law = v.law
    lines = [
        f"law: {law.id}",
        f"statement: {law.left} {'=' if law.expected == 'equality' else '⊆'} {law.right}",
        f"stated_claim: {law.stated_claim}",
        f"expected: {law.expected}",
        f"scope: {v.scope}",
        f"instances: {v.instances}",
        f"status: {v.status}",
    ]
    if v.randomized:
        lines.append("mode: randomized")
    if v.witness is not None:
        lines.append("witness:")
        lines.extend("  " + line for line in v.witness.lines())
    return lines

