"""Brute-force suites over generated families of set-valued ring homomorphisms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .finite_ring import (
    FiniteRing,
    RingHom,
    congruence_from_ideal,
    enumerate_homs,
    enumerate_ideals,
    enumerate_subrings,
    find_isomorphism,
    is_subring,
    ring_zmod,
)
from .finite_sets import Subset
from .rough_hom import (
    SetValuedRingHom,
    check_kernel_subring,
    check_upper_pullback,
    check_powerful_pullback,
    classes_svh,
    fundamental_theorem,
    is_powerful,
    kernel,
    kernel_at_one,
    ring_set_label,
    rough_subring_check,
    singleton_svh,
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def describe_svh(F: SetValuedRingHom) -> str:
    return f"{F.source.name}->{F.target.name} " + " ".join(
        f"{F.source.label(x)}:{ring_set_label(F.target, F(x))}" for x in range(F.source.order))


def congruence_family(max_n: int = 12) -> list[SetValuedRingHom]:
    """Class maps of every ideal congruence on Z_n, n <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        R = ring_zmod(n)
        for I in enumerate_ideals(R):
            out.append(classes_svh(R, congruence_from_ideal(R, I)))
    return out


def singleton_family(max_n: int = 8) -> list[SetValuedRingHom]:
    """``x -> {rho(x)}`` for every ring hom rho: Z_n -> Z_m, n, m <= max_n."""
    rings = [ring_zmod(n) for n in range(1, max_n + 1)]
    return [singleton_svh(rho) for R1 in rings for R2 in rings for rho in enumerate_homs(R1, R2)]


def powerful_family(max_classes: int = 12, max_singleton: int = 8) -> list[SetValuedRingHom]:
    family = [F for F in congruence_family(max_classes) if is_powerful(F)]
    return family + singleton_family(max_singleton)


def kernel_and_lower_suite(family) -> SuiteResult:
    """Kernel is a subring; lower approximation of every subring S ⊇ F(0) is a subring."""
    result = SuiteResult("kernel-and-lower-subring")
    subrings: dict[FiniteRing, list[Subset]] = {}
    for F in family:
        result.checked += 1
        v = check_kernel_subring(F)
        if not v:
            result.failures.append(("kernel", describe_svh(F), v.describe()))
        if F.target not in subrings:
            subrings[F.target] = enumerate_subrings(F.target)
        for S in subrings[F.target]:
            rep = rough_subring_check(F, S)
            if rep.hypothesis:
                result.checked += 1
                if rep.falsified:
                    result.failures.append(("lower", describe_svh(F), S.format(), rep.lower_is_subring.describe()))
    return result


def mod_hom(n: int, m: int) -> RingHom:
    """Reduction Z_n -> Z_m (m divides n)."""
    if n % m:
        raise ValueError(f"{m} does not divide {n}")
    return RingHom(ring_zmod(n), ring_zmod(m), [x % m for x in range(n)])


def upper_pullback_suite(homs=None) -> SuiteResult:
    """``rho(upper_F1(A)) = upper_F2(rho(A))`` for every class map F2 on the target and every A."""
    if homs is None:
        homs = [mod_hom(6, 3), mod_hom(12, 4)]
    result = SuiteResult("upper-pullback")
    for rho in homs:
        R2 = rho.target
        for I in enumerate_ideals(R2):
            F2 = classes_svh(R2, congruence_from_ideal(R2, I))
            for A in rho.source.elems.all_subsets():
                result.checked += 1
                v = check_upper_pullback(rho, F2, A)
                if not v:
                    result.failures.append((describe_svh(F2), A.format(), v.describe()))
    return result


@dataclass
class PullbackProbe:
    """Powerfulness of pulled-back maps, split by whether rho is injective."""

    injective_checked: int = 0
    injective_failures: list[tuple] = field(default_factory=list)
    noninjective_checked: int = 0
    noninjective_failures: list[tuple] = field(default_factory=list)


def powerful_pullback_probe(max_n: int = 8) -> PullbackProbe:
    """Pull every powerful class map on Z_m back along every surjective rho: Z_n -> Z_m."""
    probe = PullbackProbe()
    rings = [ring_zmod(n) for n in range(1, max_n + 1)]
    for R1 in rings:
        for R2 in rings:
            for rho in enumerate_homs(R1, R2):
                if not rho.surjective:
                    continue
                for I in enumerate_ideals(R2):
                    F2 = classes_svh(R2, congruence_from_ideal(R2, I))
                    if not is_powerful(F2):
                        continue
                    res = check_powerful_pullback(rho, F2)
                    entry = (repr(rho), describe_svh(F2), res.report.first_failure())
                    if res.rho_injective:
                        probe.injective_checked += 1
                        if not res.is_powerful:
                            probe.injective_failures.append(entry)
                    else:
                        probe.noninjective_checked += 1
                        if not res.is_powerful:
                            probe.noninjective_failures.append(entry)
    return probe


def fundamental_suite(family) -> SuiteResult:
    result = SuiteResult("fundamental-theorem")
    for F in family:
        result.checked += 1
        rep = fundamental_theorem(F)
        if not rep.is_isomorphism:
            result.failures.append((describe_svh(F), rep.findings))
    return result


def quotient_matches_image(F: SetValuedRingHom) -> bool:
    """Cross-check: the coset ring and the image ring are isomorphic as abstract rings."""
    rep = fundamental_theorem(F)
    if rep.cosets is None or rep.cosets.ring is None or rep.image_ring is None:
        return False
    return find_isomorphism(rep.cosets.ring, rep.image_ring) is not None


def kernel_at_one_probe(max_n: int = 12) -> list[tuple]:
    """Powerful maps whose ``{x : F(x) = F(1)}`` is not a subring."""
    found = []
    for F in powerful_family(max_n, 0):
        K1 = kernel_at_one(F)
        if K1 is not None and not is_subring(F.source, K1):
            found.append((describe_svh(F), K1.format(), kernel(F).format()))
    return found
