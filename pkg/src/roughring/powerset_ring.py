"""The Boolean ring of all subsets of a finite set.

Sum is symmetric difference, product is intersection, ``∅`` is zero and the
whole base set is one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeCapExceeded, StructuralError
from .finite_ring import FiniteRing
from .finite_sets import Subset, Universe

MAX_EXHAUSTIVE_BASE = 4


@dataclass(frozen=True)
class PowersetRing:
    base: Universe

    @property
    def order(self) -> int:
        return 1 << self.base.size

    def elements(self) -> list[Subset]:
        """Every subset in binary-counter order (bit i is base element i)."""
        return list(self.base.all_subsets())

    def zero(self) -> Subset:
        return self.base.empty()

    def one(self) -> Subset:
        return self.base.full()

    def add(self, a: Subset, b: Subset) -> Subset:
        return ps_add(a, b)

    def mul(self, a: Subset, b: Subset) -> Subset:
        return ps_mul(a, b)


def _check_base(a: Subset, b: Subset) -> None:
    if a.universe != b.universe:
        raise StructuralError("operands live over different base sets")


def ps_add(a: Subset, b: Subset) -> Subset:
    _check_base(a, b)
    return a.symmetric_difference(b)


def ps_mul(a: Subset, b: Subset) -> Subset:
    _check_base(a, b)
    return a.intersection(b)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    checks: dict
    failure: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def ps_check_axioms(P: PowersetRing) -> AxiomReport:
    """Check every commutative-ring axiom over all elements, pairs and triples.

    ``checks`` maps axiom name to the number of instances evaluated. Stops at
    the first failing instance and reports ``(axiom, a, b, c)`` as masks.
    """
    if P.base.size > MAX_EXHAUSTIVE_BASE:
        raise SizeCapExceeded(f"exhaustive check is capped at |X| <= {MAX_EXHAUSTIVE_BASE}")
    elems = P.elements()
    zero, one = P.zero(), P.one()
    checks: dict[str, int] = {}

    def run(name, arity, law):
        count = 0
        for combo in _tuples(elems, arity):
            count += 1
            if not law(*combo):
                checks[name] = count
                return (name,) + tuple(s.bits for s in combo)
        checks[name] = count
        return None

    laws = [
        ("add-associativity", 3, lambda a, b, c: ps_add(ps_add(a, b), c) == ps_add(a, ps_add(b, c))),
        ("add-commutativity", 2, lambda a, b: ps_add(a, b) == ps_add(b, a)),
        ("add-identity", 1, lambda a: ps_add(a, zero) == a),
        ("add-self-inverse", 1, lambda a: ps_add(a, a) == zero),
        ("mul-associativity", 3, lambda a, b, c: ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c))),
        ("mul-commutativity", 2, lambda a, b: ps_mul(a, b) == ps_mul(b, a)),
        ("mul-identity", 1, lambda a: ps_mul(a, one) == a),
        ("distributivity", 3, lambda a, b, c: ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c))),
    ]
    for name, arity, law in laws:
        failure = run(name, arity, law)
        if failure is not None:
            return AxiomReport(False, checks, failure)
    return AxiomReport(True, checks)


def _tuples(elems, arity):
    if arity == 1:
        for a in elems:
            yield (a,)
        return
    for a in elems:
        for rest in _tuples(elems, arity - 1):
            yield (a,) + rest


def ps_label(s: Subset) -> str:
    """Opaque token for a subset used as a ring element, e.g. ``{a,c}``."""
    return "{" + ",".join(s.labels()) + "}"


def ps_as_finite_ring(P: PowersetRing) -> FiniteRing:
    if P.base.size > MAX_EXHAUSTIVE_BASE:
        raise SizeCapExceeded(f"materialization is capped at |X| <= {MAX_EXHAUSTIVE_BASE}")
    elems = P.elements()
    n = len(elems)
    # element i is the subset with bitmask i
    add = [[ps_add(elems[i], elems[j]).bits for j in range(n)] for i in range(n)]
    mul = [[ps_mul(elems[i], elems[j]).bits for j in range(n)] for i in range(n)]
    labels = [ps_label(s) for s in elems]
    return FiniteRing(Universe(labels), add, mul, 0, n - 1, name=f"P({' '.join(P.base.labels)})")
