"""Set-valued ring homomorphisms.

A :class:`SetValuedRingHom` sends each element of a ring ``R1`` to a subset of
a ring ``R2``. It is *powerful* when it respects the ring operations exactly,
with sets combined elementwise::

    F(x + y) = F(x) + F(y)      F(x * y) = F(x) * F(y)      F(-x) = -F(x)

plus an inverse law on units. For powerful maps the kernel
``{x : F(x) = F(0)}`` is a subring and ``a + ker(F) -> F(a)`` is a ring
isomorphism from the coset ring onto the ring of image sets; the
:func:`fundamental_theorem` pipeline checks all of this by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AxiomViolation,
    NotASubgroup,
    NotASubring,
    NotPowerful,
    NotSurjective,
    NotTotal,
    RoughRingError,
    StructuralError,
    UniverseMismatch,
)
from .finite_ring import (
    Congruence,
    CosetSpace,
    FiniteRing,
    RingHom,
    Verdict,
    is_subring,
    quotient_by_subgroup,
)
from .finite_sets import SetValuedMap, Subset, Universe


def _over(A: Subset, R: FiniteRing) -> int:
    if A.universe != R.elems:
        raise UniverseMismatch("subset is not over the ring's elements")
    return A.bits


def _lift(op, A: Subset, B: Subset, R: FiniteRing) -> Subset:
    a_idx, b_idx = list(Subset(R.elems, _over(A, R))), list(Subset(R.elems, _over(B, R)))
    bits = 0
    for a in a_idx:
        row = op[a]
        for b in b_idx:
            bits |= 1 << row[b]
    return Subset(R.elems, bits)


def setwise_add(A: Subset, B: Subset, R: FiniteRing) -> Subset:
    """``{a + b : a in A, b in B}``."""
    return _lift(R.add, A, B, R)


def setwise_mul(A: Subset, B: Subset, R: FiniteRing) -> Subset:
    """``{a * b : a in A, b in B}``."""
    return _lift(R.mul, A, B, R)


def setwise_neg(A: Subset, R: FiniteRing) -> Subset:
    _over(A, R)
    return R.elems.from_indices(R.neg(a) for a in A)


def ring_set_label(R: FiniteRing, S: Subset) -> str:
    """Token form of a set of ring elements, e.g. ``{0,2,4}``."""
    return "{" + ",".join(R.label(x) for x in S) + "}"


class SetValuedRingHom:
    """A total set-valued map between the element sets of two rings."""

    def __init__(self, source: FiniteRing, target: FiniteRing, map: SetValuedMap):
        if map.source != source.elems or map.target != target.elems:
            raise UniverseMismatch("map universes do not match the rings")
        if not map.total:
            empty = next(x for x in range(source.order) if not map.table[x])
            raise NotTotal(f"F({source.label(empty)}) is empty")
        self.source = source
        self.target = target
        self.map = map

    @classmethod
    def from_images(cls, source: FiniteRing, target: FiniteRing, images) -> "SetValuedRingHom":
        """``images`` maps source labels to iterables of target labels."""
        return cls(source, target, SetValuedMap.from_mapping(source.elems, target.elems, images))

    def __call__(self, x: int) -> Subset:
        return self.map.at(x)

    def image_sets(self) -> list[Subset]:
        """Distinct images in order of first occurrence."""
        seen, out = set(), []
        for bits in self.map.table:
            if bits not in seen:
                seen.add(bits)
                out.append(Subset(self.target.elems, bits))
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SetValuedRingHom) and self.source == other.source
                and self.target == other.target and self.map == other.map)

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"SetValuedRingHom({self.source.name} -> {self.target.name}, {self.map!r})"


def classes_svh(R: FiniteRing, C: Congruence) -> SetValuedRingHom:
    """``F(x) = [x]``, the class of ``x`` under ``C``."""
    if C.ring != R:
        raise StructuralError("congruence belongs to a different ring")
    blocks = C.blocks()
    table = [blocks[C.block_of[x]].bits for x in range(R.order)]
    return SetValuedRingHom(R, R, SetValuedMap(R.elems, R.elems, table))


def singleton_svh(rho: RingHom) -> SetValuedRingHom:
    """``F(x) = {rho(x)}``."""
    table = [1 << y for y in rho.table]
    return SetValuedRingHom(rho.source, rho.target, SetValuedMap(rho.source.elems, rho.target.elems, table))


@dataclass(frozen=True)
class LawResult:
    ok: bool
    witness: tuple | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "yes"
        text = "no, witness " + " ".join(map(str, self.witness or ()))
        return text + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class PowerfulReport:
    additive_law: LawResult
    multiplicative_law: LawResult
    negation_law: LawResult
    unit_inverse_law: LawResult
    # literal elementwise reading of the inverse clause; informational only
    elementwise_inverse: LawResult

    @property
    def is_powerful(self) -> bool:
        return bool(self.additive_law and self.multiplicative_law
                    and self.negation_law and self.unit_inverse_law)

    def __bool__(self) -> bool:
        return self.is_powerful

    def laws(self) -> list[tuple[str, LawResult]]:
        return [("additive", self.additive_law), ("multiplicative", self.multiplicative_law),
                ("negation", self.negation_law), ("unit_inverse", self.unit_inverse_law)]

    def first_failure(self) -> str:
        for name, res in self.laws():
            if not res:
                return f"{name} law, {res.describe()}"
        return "none"


def _binary_law(F: SetValuedRingHom, op_table) -> LawResult:
    R1, R2 = F.source, F.target
    table = F.map.table
    for x in range(R1.order):
        for y in range(R1.order):
            lhs = table[op_table(R1)[x][y]]
            rhs = _lift(op_table(R2), F(x), F(y), R2).bits
            if lhs != rhs:
                return LawResult(False, (R1.label(x), R1.label(y)),
                                 f"F(x op y) = {ring_set_label(R2, Subset(R2.elems, lhs))}, "
                                 f"F(x) op F(y) = {ring_set_label(R2, Subset(R2.elems, rhs))}")
    return LawResult(True)


def is_powerful(F: SetValuedRingHom) -> PowerfulReport:
    """Brute-force every powerful-homomorphism law.

    The inverse law that decides the verdict is the ring-of-sets reading: for
    each unit ``u`` of ``R1``, ``F(u^-1)`` is the inverse of ``F(u)`` under
    setwise product, i.e. ``F(u) F(u^-1) = F(u^-1) F(u) = F(1)``. The literal
    reading (``F(u)`` consists of units and ``F(u^-1)`` is their inverses) is
    reported separately in ``elementwise_inverse``.
    """
    if not F.map.total:
        raise NotTotal("is_powerful needs a total map")
    R1, R2 = F.source, F.target
    additive = _binary_law(F, lambda R: R.add)
    multiplicative = _binary_law(F, lambda R: R.mul)

    negation = LawResult(True)
    for x in range(R1.order):
        if F(R1.neg(x)) != setwise_neg(F(x), R2):
            negation = LawResult(False, (R1.label(x),))
            break

    unit_inverse = LawResult(True)
    elementwise = LawResult(True)
    if R1.one is not None:
        f_one = F(R1.one)
        for u in R1.units():
            v = R1.inverse(u)
            if setwise_mul(F(u), F(v), R2) != f_one or setwise_mul(F(v), F(u), R2) != f_one:
                unit_inverse = LawResult(False, (R1.label(u),), "F(u) F(u^-1) != F(1)")
                break
        for u in R1.units():
            v = R1.inverse(u)
            non_units = [a for a in F(u) if R2.inverse(a) is None]
            if non_units:
                elementwise = LawResult(False, (R1.label(u), R2.label(non_units[0])),
                                        "image contains a non-unit")
                break
            inverted = R2.elems.from_indices(R2.inverse(a) for a in F(u))
            if inverted != F(v):
                elementwise = LawResult(False, (R1.label(u),), "F(u^-1) != {a^-1 : a in F(u)}")
                break
    return PowerfulReport(additive, multiplicative, negation, unit_inverse, elementwise)


def require_powerful(F: SetValuedRingHom) -> PowerfulReport:
    report = is_powerful(F)
    if not report:
        raise NotPowerful(report)
    return report


@dataclass(frozen=True)
class ClassLaw:
    """How ``[x] op [y]`` (setwise) compares with ``[x op y]`` over all pairs.

    ``status`` is ``equality``, ``proper-inclusion`` (setwise side strictly
    inside the class for some pair, never outside) or ``incomparable``.
    """

    status: str
    witness: tuple | None = None
    instances: int = 0


@dataclass(frozen=True)
class ClassLawReport:
    additive: ClassLaw
    multiplicative: ClassLaw


def _class_law(R: FiniteRing, C: Congruence, op) -> ClassLaw:
    strict = None
    n = R.order
    for x in range(n):
        bx = C.block(x)
        for y in range(n):
            setwise = _lift(op, bx, C.block(y), R)
            cls = C.block(op[x][y])
            if setwise == cls:
                continue
            if not setwise.issubset(cls):
                return ClassLaw("incomparable", (R.label(x), R.label(y)), n * n)
            if strict is None:
                strict = (R.label(x), R.label(y))
    if strict is None:
        return ClassLaw("equality", None, n * n)
    return ClassLaw("proper-inclusion", strict, n * n)


def check_class_laws(R: FiniteRing, C: Congruence) -> ClassLawReport:
    return ClassLawReport(_class_law(R, C, R.add), _class_law(R, C, R.mul))


def kernel(F: SetValuedRingHom) -> Subset:
    """``{x : F(x) = F(0)}``."""
    z = F.map.table[F.source.zero]
    return F.source.elems.from_indices(x for x, t in enumerate(F.map.table) if t == z)


def kernel_at_one(F: SetValuedRingHom) -> Subset | None:
    """``{x : F(x) = F(1)}``; the non-default reading of the kernel, for comparison."""
    if F.source.one is None:
        return None
    t1 = F.map.table[F.source.one]
    return F.source.elems.from_indices(x for x, t in enumerate(F.map.table) if t == t1)


def check_kernel_subring(F: SetValuedRingHom) -> Verdict:
    require_powerful(F)
    return is_subring(F.source, kernel(F))


@dataclass(frozen=True)
class RoughSubringReport:
    lower: Subset
    upper: Subset
    lower_is_subring: Verdict
    upper_is_subring: Verdict
    hypothesis: bool

    @property
    def falsified(self) -> bool:
        """Hypothesis ``F(0) ⊆ S`` holds yet the lower approximation is no subring."""
        return self.hypothesis and not self.lower_is_subring


def rough_subring_check(F: SetValuedRingHom, S: Subset) -> RoughSubringReport:
    v = is_subring(F.target, S)
    if not v:
        raise NotASubring(f"S is not a subring of the target: {v.describe()}")
    lower, upper = F.map.lower(S), F.map.upper(S)
    hypothesis = F(F.source.zero).issubset(S)
    return RoughSubringReport(lower, upper, is_subring(F.source, lower), is_subring(F.source, upper), hypothesis)


def induced_svh(rho: RingHom, F2: SetValuedRingHom) -> SetValuedRingHom:
    """Pull ``F2`` back along a surjection: ``F1(x) = rho^-1(F2(rho(x)))``."""
    if F2.source != rho.target:
        raise StructuralError("F2 must be defined on the target of rho")
    if not rho.surjective:
        raise NotSurjective("rho is not surjective")
    table = [rho.preimage_of(F2(rho(x))).bits for x in range(rho.source.order)]
    return SetValuedRingHom(rho.source, rho.source, SetValuedMap(rho.source.elems, rho.source.elems, table))


def check_upper_pullback(rho: RingHom, F2: SetValuedRingHom, A: Subset) -> Verdict:
    """``rho(upper_F1(A)) = upper_F2(rho(A))`` with ``F1 = induced_svh(rho, F2)``."""
    F1 = induced_svh(rho, F2)
    lhs = rho.image_of(F1.map.upper(A))
    rhs = F2.map.upper(rho.image_of(A))
    if lhs == rhs:
        return Verdict(True)
    y = next(iter(lhs ^ rhs))
    side = "left-only" if lhs.has_index(y) else "right-only"
    return Verdict(False, side, (rho.target.label(y),))


@dataclass(frozen=True)
class PullbackResult:
    report: PowerfulReport
    rho_injective: bool
    induced: SetValuedRingHom

    @property
    def is_powerful(self) -> bool:
        return self.report.is_powerful


def check_powerful_pullback(rho: RingHom, F2: SetValuedRingHom) -> PullbackResult:
    require_powerful(F2)
    F1 = induced_svh(rho, F2)
    return PullbackResult(is_powerful(F1), rho.injective, F1)


def image_ring(F: SetValuedRingHom) -> FiniteRing:
    """The distinct image sets under setwise operations."""
    require_powerful(F)
    return _image_ring(F)


def _image_ring(F: SetValuedRingHom) -> FiniteRing:
    R1, R2 = F.source, F.target
    sets = F.image_sets()
    pos = {s.bits: i for i, s in enumerate(sets)}
    m = len(sets)

    def table(op):
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                r = _lift(op, sets[i], sets[j], R2).bits
                if r not in pos:
                    raise AxiomViolation("closure", (ring_set_label(R2, sets[i]), ring_set_label(R2, sets[j])))
                row.append(pos[r])
            rows.append(row)
        return rows

    add, mul = table(R2.add), table(R2.mul)
    zero = pos[F.map.table[R1.zero]]
    one = pos[F.map.table[R1.one]] if R1.one is not None else None
    labels = [ring_set_label(R2, s) for s in sets]
    return FiniteRing(Universe(labels), add, mul, zero, one, name=f"F({R1.name or '?'})")


@dataclass
class IsoReport:
    kernel: Subset
    kernel_is_subring: Verdict
    cosets: CosetSpace | None
    image_ring: FiniteRing | None
    image_sets: list[Subset]
    phi: list[int] | None
    phi_hom: RingHom | None
    findings: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def is_isomorphism(self) -> bool:
        return not self.findings and self.phi is not None

    def __bool__(self) -> bool:
        return self.is_isomorphism


def fundamental_theorem(F: SetValuedRingHom) -> IsoReport:
    """Build ``R1/ker(F)``, the image ring, and check ``a + ker(F) -> F(a)``.

    Failures are collected in ``findings`` as ``(kind, witness)`` with kind in
    ``kernel-not-subring``, ``kernel-not-subgroup``, ``image-ring``,
    ``well-definedness``, ``operation-mismatch:add``,
    ``operation-mismatch:mul``, ``not-injective``, ``not-surjective``.
    """
    require_powerful(F)
    R1 = F.source
    lab = R1.label
    K = kernel(F)
    report = IsoReport(K, is_subring(R1, K), None, None, F.image_sets(), None, None)
    findings = report.findings
    if not report.kernel_is_subring:
        findings.append(("kernel-not-subring", report.kernel_is_subring.witness))
    try:
        cosets = quotient_by_subgroup(R1, K)
    except NotASubgroup as exc:
        findings.append(("kernel-not-subgroup", exc.witness))
        return report
    report.cosets = cosets
    try:
        Q = _image_ring(F)
    except RoughRingError as exc:
        findings.append(("image-ring", (str(exc),)))
        return report
    report.image_ring = Q
    pos = {s.bits: i for i, s in enumerate(report.image_sets)}

    phi = [-1] * len(cosets)
    rep = [-1] * len(cosets)
    for a in range(R1.order):
        c = cosets.coset_of[a]
        img = pos[F.map.table[a]]
        if phi[c] == -1:
            phi[c], rep[c] = img, a
        elif phi[c] != img:
            findings.append(("well-definedness", (cosets.labels()[c], lab(rep[c]), lab(a))))
            return report
    report.phi = phi

    for a in range(R1.order):
        for b in range(R1.order):
            ca, cb = cosets.coset_of[a], cosets.coset_of[b]
            if phi[cosets.induced_add[ca][cb]] != Q.add[phi[ca]][phi[cb]]:
                findings.append(("operation-mismatch:add", (lab(a), lab(b))))
                return report
            if phi[cosets.coset_of[R1.mul[a][b]]] != Q.mul[phi[ca]][phi[cb]]:
                findings.append(("operation-mismatch:mul", (lab(a), lab(b))))
                return report

    seen: dict[int, int] = {}
    for c, img in enumerate(phi):
        if img in seen:
            labels = cosets.labels()
            findings.append(("not-injective", (labels[seen[img]], labels[c])))
            return report
        seen[img] = c
    if len(seen) != Q.order:
        findings.append(("not-surjective", (Q.order - len(seen),)))
        return report
    if cosets.ring is not None:
        report.phi_hom = RingHom(cosets.ring, Q, phi)
    return report
