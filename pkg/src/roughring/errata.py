"""Cross-check every stated claim against brute force and collect the results."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lawcheck, theorems
from .finite_ring import congruence_from_ideal, ring_zmod
from .finite_sets import Universe
from .powerset_ring import PowersetRing, ps_check_axioms
from .rough_hom import classes_svh, is_powerful, kernel_at_one, setwise_add
from .worked_examples import CLAIMS

CONFIRMED = "confirmed"
DISCREPANCY = "discrepancy"
DOWNGRADED = "downgraded-to-inclusion"
REFUTED = "refuted"
REINTERPRETED = "reinterpreted"
HYPOTHESIS_NEEDED = "hypothesis-needed"

GROUPS = ["EX21", "EX22", "EX31", "EX32", "P21", "T21", "P31", "P32", "P42", "PS22",
          "T41", "T42", "T43", "T44", "T51", "D43", "D44", "P42Z"]


@dataclass(frozen=True)
class ErrataEntry:
    id: str
    group: str
    claim: str
    stated: str
    computed: str
    status: str
    witness: tuple[str, ...] = field(default=())

    @property
    def is_discrepancy(self) -> bool:
        return self.status != CONFIRMED


def _group(entry_id: str) -> str:
    return entry_id.split("-")[0]


def _in_scope(entry_id: str, scope) -> bool:
    return scope is None or entry_id in scope or _group(entry_id) in scope


def _set(labels) -> str:
    return "{" + " ".join(labels) + "}"


def _example_entries(scope) -> list[ErrataEntry]:
    out = []
    for c in CLAIMS:
        if not _in_scope(c.id, scope):
            continue
        A = c.subset()
        pair = c.map.rough_pair(A)
        stated = f"lower {_set(c.lower)}, upper {_set(c.upper)}"
        computed = f"lower {pair.lower.format()}, upper {pair.upper.format()}"
        ok = tuple(pair.lower.labels()) == c.lower and tuple(pair.upper.labels()) == c.upper
        out.append(ErrataEntry(
            c.id, _group(c.id),
            f"approximations of {c.set_name} = {_set(c.set_labels)} under {c.map_name}",
            stated, computed, CONFIRMED if ok else DISCREPANCY))
    return out


def _law_entries(scope) -> list[ErrataEntry]:
    out = []
    for law_id in lawcheck.LAW_IDS:
        if not _in_scope(law_id, scope):
            continue
        v = lawcheck.check_law(law_id)
        law = v.law
        if v.status == lawcheck.REFUTED:
            status = REFUTED
        elif v.status == lawcheck.PROPER_INCLUSION and law.stated_claim == "equality":
            status = DOWNGRADED
        else:
            status = CONFIRMED
        rel = "=" if law.stated_claim == "equality" else "⊆"
        true_rel = "=" if v.status == lawcheck.EQUALITY_EVERYWHERE else "⊆"
        witness = tuple(v.witness.lines()) if v.witness is not None else ()
        out.append(ErrataEntry(
            law_id, _group(law_id), f"{law.left} vs {law.right}",
            f"{law.left} {rel} {law.right}",
            f"{law.left} {true_rel} {law.right} ({v.status}, {v.instances} instances, {v.scope})",
            status, witness))
    return out


def _structure_entries(scope) -> list[ErrataEntry]:
    out = []
    if _in_scope("PS22", scope):
        reports = {n: ps_check_axioms(PowersetRing(Universe.range(n, start=1))) for n in range(1, 5)}
        ok = all(reports.values())
        out.append(ErrataEntry("PS22", "PS22", "subsets under symmetric difference and intersection form a commutative ring",
                               "commutative ring", f"all axioms hold for |X| = 1..4: {'yes' if ok else 'no'}",
                               CONFIRMED if ok else REFUTED))

    needs_family = any(_in_scope(g, scope) for g in ("T41", "T44", "T51"))
    family = theorems.powerful_family() if needs_family else []
    if _in_scope("T41", scope) or _in_scope("T44", scope):
        suite = theorems.kernel_and_lower_suite(family)
        kernel_fail = [f for f in suite.failures if f[0] == "kernel"]
        lower_fail = [f for f in suite.failures if f[0] == "lower"]
        if _in_scope("T41", scope):
            out.append(ErrataEntry("T41", "T41", "lower approximation of a subring S with F(0) ⊆ S is a subring",
                                   "always", f"{len(lower_fail)} failures over {len(family)} powerful maps",
                                   CONFIRMED if not lower_fail else REFUTED,
                                   tuple(map(str, lower_fail[:1]))))
        if _in_scope("T44", scope):
            out.append(ErrataEntry("T44", "T44", "ker(F) = {x : F(x) = F(0)} is a subring",
                                   "always", f"{len(kernel_fail)} failures over {len(family)} powerful maps",
                                   CONFIRMED if not kernel_fail else REFUTED,
                                   tuple(map(str, kernel_fail[:1]))))
    if _in_scope("T42", scope):
        suite = theorems.upper_pullback_suite()
        out.append(ErrataEntry("T42", "T42", "rho(upper_F1(A)) = upper_F2(rho(A)) for the pulled-back F1",
                               "always", f"{len(suite.failures)} failures over {suite.checked} instances",
                               CONFIRMED if suite.ok else REFUTED, tuple(map(str, suite.failures[:1]))))
    if _in_scope("T43", scope):
        probe = theorems.powerful_pullback_probe()
        out.append(ErrataEntry(
            "T43-injective", "T43", "pullback of a powerful map along a bijective rho is powerful",
            "always", f"{len(probe.injective_failures)} failures over {probe.injective_checked} pullbacks",
            CONFIRMED if not probe.injective_failures else REFUTED))
        nf = probe.noninjective_failures
        out.append(ErrataEntry(
            "T43-surjective-only", "T43", "injectivity of rho can be dropped (argument only uses surjectivity)",
            "not stated", f"{len(nf)} non-powerful pullbacks over {probe.noninjective_checked} surjective non-injective rho",
            HYPOTHESIS_NEEDED if nf else CONFIRMED, tuple(nf[0]) if nf else ()))
    if _in_scope("T51", scope):
        suite = theorems.fundamental_suite(family)
        out.append(ErrataEntry("T51", "T51", "R/ker(F) ≅ F(R) via a + ker(F) -> F(a)",
                               "always", f"{len(suite.failures)} failures over {suite.checked} powerful maps",
                               CONFIRMED if suite.ok else REFUTED, tuple(map(str, suite.failures[:1]))))

    Z6 = ring_zmod(6)
    G = classes_svh(Z6, congruence_from_ideal(Z6, Z6.subset([0, 2, 4])))
    if _in_scope("D43", scope):
        rep = is_powerful(G)
        ew = rep.elementwise_inverse
        out.append(ErrataEntry(
            "D43-inverse", "D43", "F(u^-1) = {a^-1 : a in F(u)}",
            "elementwise inverses", f"elementwise reading fails on Z6 classes mod {{0 2 4}}: {ew.describe()}; "
            f"checked instead F(u) F(u^-1) = F(1): {rep.unit_inverse_law.describe()}",
            REINTERPRETED, tuple(map(str, ew.witness or ()))))
    if _in_scope("D44", scope):
        k1 = kernel_at_one(G)
        out.append(ErrataEntry(
            "D44-identity", "D44", "kernel taken at the multiplicative identity, {x : F(x) = F(1)}",
            "subring", f"on Z6 classes mod {{0 2 4}} it is {k1.format()}, not additively closed; "
                       "kernel taken at 0 instead", REINTERPRETED, (k1.format(),)))
    if _in_scope("P42Z", scope):
        checked = 0
        ok = True
        for F in theorems.powerful_family():
            checked += 1
            z = F(F.source.zero)
            ok = ok and all(setwise_add(z, S, F.target) == S for S in F.image_sets())
        out.append(ErrataEntry(
            "P42Z-identity", "P42Z", "F(e_R1) = e_R2",
            "a set equals an element", f"literal claim left unverified; F(0) + S = S for every image set S, "
            f"over {checked} powerful maps: {'yes' if ok else 'no'}", REINTERPRETED))
    return out


def errata_report(scope=None) -> list[ErrataEntry]:
    """Entries for every claim in ``scope`` (ids or groups such as ``P21``); None means everything."""
    if scope is not None:
        scope = set(scope)
        if not scope:
            return []
    entries = _example_entries(scope) + _law_entries(scope) + _structure_entries(scope)
    return entries


def format_errata(entries: list[ErrataEntry]) -> str:
    lines = [
        "format: 1",
        "command: errata",
        f"entries: {len(entries)}",
        f"discrepancies: {sum(e.is_discrepancy for e in entries)}",
    ]
    for e in entries:
        lines.append("")
        lines.append(f"[{e.id}]")
        lines.append(f"claim: {e.claim}")
        lines.append(f"stated: {e.stated}")
        lines.append(f"computed: {e.computed}")
        lines.append(f"status: {e.status}")
        if e.witness:
            lines.append("witness:")
            lines.extend(f"  {w}" for w in e.witness)
    return "\n".join(lines) + "\n"
