"""Command-line front end.

Every report starts with ``format: 1`` and ``command: <name>`` followed by
``key: value`` lines in a fixed order. Exit codes: 0 when the computation
succeeds and every check passes, 1 when a check finds a violation or a
counterexample, 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import lawcheck
from .errata import errata_report, format_errata
from .errors import ParseError, RoughRingError
from .finite_ring import (
    FiniteRing,
    congruence_from_ideal,
    enumerate_ideals,
    enumerate_subrings,
    find_isomorphism,
    is_subring,
    quotient_by_congruence,
    quotient_by_subgroup,
)
from .finite_sets import BOUNDARY_FORMULA, LOWER_FORMULA, UPPER_FORMULA, Subset, Universe
from .powerset_ring import PowersetRing, ps_check_axioms
from .rough_hom import (
    check_upper_pullback,
    check_powerful_pullback,
    fundamental_theorem,
    is_powerful,
    kernel,
    kernel_at_one,
    ring_set_label,
)
from .textformat import Document, parse

COMMANDS = ("approx", "invert", "psring", "ring", "quotient", "iso", "svh", "kernel",
            "induced", "fundamental", "laws", "errata")
OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _yn(flag) -> str:
    return "yes" if flag else "no"


def _header(command: str) -> list[str]:
    return ["format: 1", f"command: {command}"]


def _table_rows(R: FiniteRing, table) -> str:
    return " | ".join(" ".join(R.label(c) for c in row) for row in table)


def _lookup(doc: Document, name: str, kind: str):
    try:
        return doc.get(name, kind)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def cmd_approx(doc, args):
    F = _lookup(doc, args.map, "map")
    A = _lookup(doc, args.set, "set")
    if A.universe != F.target:
        raise UsageError(f"set {args.set} is not over the target of map {args.map}")
    pair = F.rough_pair(A)
    lines = _header("approx") + [
        f"map: {args.map}",
        f"set: {args.set} = {A.format()}",
        f"lower: {pair.lower.format()}",
        f"lower_definition: {LOWER_FORMULA}",
        f"upper: {pair.upper.format()}",
        f"upper_definition: {UPPER_FORMULA}",
        f"boundary: {pair.boundary.format()}",
        f"boundary_definition: {BOUNDARY_FORMULA}",
        f"rough: {_yn(pair.is_rough)}",
    ]
    return lines, OK


def cmd_invert(doc, args):
    F = _lookup(doc, args.map, "map")
    G = F.inverse()
    lines = _header("invert") + [
        f"map: {args.map}",
        f"domain: {F.domain().format()}",
        f"image: {F.image().format()}",
        "inverse:",
    ]
    lines += [f"  {y}: {s.format()}" for y, s in G.items()]
    return lines, OK


def cmd_psring(doc, args):
    if args.universe is not None:
        if doc is None:
            raise UsageError("--universe needs a document")
        X = _lookup(doc, args.universe, "universe")
    elif args.size is not None:
        X = Universe.range(args.size, start=1)
    else:
        raise UsageError("give --universe or --size")
    P = PowersetRing(X)
    rep = ps_check_axioms(P)
    lines = _header("psring") + [
        f"base: {X.full().format()}",
        f"order: {P.order}",
        f"zero: {P.zero().format()}",
        f"one: {P.one().format()}",
        "addition: symmetric difference",
        "multiplication: intersection",
    ]
    lines += [f"checked.{name}: {n}" for name, n in rep.checks.items()]
    if rep.failure is not None:
        axiom, *masks = rep.failure
        lines.append(f"failure: {axiom} " + " ".join(Subset(X, m).format() for m in masks))
    lines.append(f"axioms: {'ok' if rep else 'violated'}")
    return lines, OK if rep else VIOLATION


def cmd_ring(doc, args):
    R = _lookup(doc, args.ring, "ring")
    lines = _header("ring") + [
        f"ring: {args.ring}",
        f"order: {R.order}",
        f"elements: {R.elems.full().format()}",
        f"zero: {R.label(R.zero)}",
        f"one: {R.label(R.one) if R.one is not None else 'none'}",
        f"commutative: {_yn(R.commutative)}",
        f"units: {R.elems.from_indices(R.units()).format()}",
    ]
    try:
        ideals = enumerate_ideals(R)
        subrings = enumerate_subrings(R)
        lines.append(f"ideals: {' '.join(I.format() for I in ideals)}")
        lines.append(f"subrings: {len(subrings)}")
    except RoughRingError as exc:
        lines.append(f"ideals: skipped ({exc})")
    lines.append(f"add: {_table_rows(R, R.add)}")
    lines.append(f"mul: {_table_rows(R, R.mul)}")
    return lines, OK


def cmd_quotient(doc, args):
    R = _lookup(doc, args.ring, "ring")
    chosen = [(k, v) for k, v in (("ideal", args.ideal), ("partition", args.partition),
                                  ("subgroup", args.subgroup)) if v is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --ideal, --partition, --subgroup")
    kind, name = chosen[0]
    lines = _header("quotient") + [f"ring: {args.ring}"]
    if kind == "subgroup":
        K = _lookup(doc, name, "set")
        if K.universe != R.elems:
            raise UsageError(f"set {name} is not over ring {args.ring}")
        space = quotient_by_subgroup(R, K)
        lines += [
            f"by: subgroup {name} = {K.format()}",
            f"cosets: {len(space)}",
            f"coset_list: {' '.join(space.labels())}",
            f"add: {' | '.join(' '.join(space.labels()[c] for c in row) for row in space.induced_add)}",
            f"multiplication_well_defined: {_yn(space.mul_well_defined)}",
        ]
        if space.mul_well_defined:
            lines.append(f"mul: {_table_rows(space.ring, space.induced_mul)}")
            return lines, OK
        a, b, a2, b2 = space.mul_witness
        lines.append(f"witness: {a}*{b} and {a2}*{b2} fall in different cosets")
        return lines, VIOLATION
    if kind == "ideal":
        I = _lookup(doc, name, "ideal")
        C = congruence_from_ideal(R, I)
        lines.append(f"by: ideal {name} = {I.format()}")
    else:
        C = _lookup(doc, name, "partition")
        lines.append(f"by: partition {name} = {' '.join(b.format() for b in C.blocks())}")
    if C.ring != R:
        raise UsageError(f"{name} is not over ring {args.ring}")
    Q, _ = quotient_by_congruence(R, C)
    lines += [
        f"cosets: {Q.order}",
        f"coset_list: {' '.join(Q.elems.labels)}",
        f"add: {_table_rows(Q, Q.add)}",
        f"mul: {_table_rows(Q, Q.mul)}",
    ]
    return lines, OK


def cmd_iso(doc, args):
    R1 = _lookup(doc, args.ring, "ring")
    R2 = _lookup(doc, args.other, "ring")
    phi = find_isomorphism(R1, R2)
    lines = _header("iso") + [f"left: {args.ring}", f"right: {args.other}",
                              f"isomorphic: {_yn(phi is not None)}"]
    if phi is not None:
        lines.append("map: " + " ".join(f"{R1.label(x)}:{R2.label(y)}" for x, y in enumerate(phi.table)))
    return lines, OK if phi is not None else VIOLATION


def _svh_lines(name, F) -> list[str]:
    return [
        f"svh: {name}",
        f"source: {F.source.name}",
        f"target: {F.target.name}",
        "images: " + " ".join(f"{F.source.label(x)}->{ring_set_label(F.target, F(x))}"
                              for x in range(F.source.order)),
    ]


def _powerful_lines(rep) -> list[str]:
    lines = [f"law.{name}: {res.describe()}" for name, res in rep.laws()]
    lines.append(f"law.elementwise_inverse: {rep.elementwise_inverse.describe()} (informational)")
    lines.append(f"powerful: {_yn(rep)}")
    return lines


def cmd_svh(doc, args):
    F = _lookup(doc, args.svh, "svh")
    rep = is_powerful(F)
    return _header("svh") + _svh_lines(args.svh, F) + _powerful_lines(rep), OK if rep else VIOLATION


def cmd_kernel(doc, args):
    F = _lookup(doc, args.svh, "svh")
    rep = is_powerful(F)
    lines = _header("kernel") + [f"svh: {args.svh}", f"powerful: {_yn(rep)}"]
    if not rep:
        lines.append(f"failure: {rep.first_failure()}")
        return lines, VIOLATION
    K = kernel(F)
    v = is_subring(F.source, K)
    lines += [
        f"kernel: {K.format()}",
        "kernel_definition: {x : F(x) = F(0)}",
        f"kernel_subring: {v.describe()}",
    ]
    K1 = kernel_at_one(F)
    if K1 is not None:
        lines += [
            f"kernel_at_one: {K1.format()} (non-default)",
            "kernel_at_one_definition: {x : F(x) = F(1)}",
            f"kernel_at_one_subring: {is_subring(F.source, K1).describe()}",
        ]
    return lines, OK if v else VIOLATION


def cmd_induced(doc, args):
    rho = _lookup(doc, args.hom, "hom")
    F2 = _lookup(doc, args.svh, "svh")
    if F2.source != rho.target:
        raise UsageError(f"svh {args.svh} is not defined on the target of hom {args.hom}")
    if not rho.surjective:
        raise UsageError(f"hom {args.hom} is not surjective")
    lines = _header("induced") + [
        f"hom: {args.hom}",
        f"svh: {args.svh}",
        f"hom_injective: {_yn(rho.injective)}",
    ]
    if args.set is not None:
        A = _lookup(doc, args.set, "set")
        if A.universe != rho.source.elems:
            raise UsageError(f"set {args.set} is not over the source of hom {args.hom}")
        sets = [A]
    else:
        sets = list(rho.source.elems.all_subsets())
    failures = []
    for A in sets:
        v = check_upper_pullback(rho, F2, A)
        if not v:
            failures.append((A, v))
    lines.append(f"upper_pullback_checked: {len(sets)}")
    lines.append(f"upper_pullback_failures: {len(failures)}")
    if failures:
        A, v = failures[0]
        lines.append(f"upper_pullback_witness: A = {A.format()} {v.reason} {' '.join(v.witness)}")
    code = VIOLATION if failures else OK
    rep2 = is_powerful(F2)
    lines.append(f"svh_powerful: {_yn(rep2)}")
    if rep2:
        res = check_powerful_pullback(rho, F2)
        F1 = res.induced
        lines.append("induced: " + " ".join(f"{F1.source.label(x)}->{ring_set_label(F1.target, F1(x))}"
                                            for x in range(F1.source.order)))
        lines.append(f"induced_powerful: {_yn(res.is_powerful)}")
        if not res.is_powerful:
            lines.append(f"failure: {res.report.first_failure()}")
            code = VIOLATION
    return lines, code


def cmd_fundamental(doc, args):
    F = _lookup(doc, args.svh, "svh")
    rep = is_powerful(F)
    lines = _header("fundamental") + [f"svh: {args.svh}", f"powerful: {_yn(rep)}"]
    if not rep:
        lines.append(f"failure: {rep.first_failure()}")
        return lines, VIOLATION
    iso = fundamental_theorem(F)
    lines += [
        f"kernel: {iso.kernel.format()}",
        f"kernel_subring: {iso.kernel_is_subring.describe()}",
        f"cosets: {len(iso.cosets) if iso.cosets is not None else 'none'}",
        f"image_size: {len(iso.image_sets)}",
        "image: " + " ".join(ring_set_label(F.target, s) for s in iso.image_sets),
    ]
    if iso.phi is not None:
        labels = iso.cosets.labels()
        lines.append("phi: " + " ".join(f"{labels[c]}->{ring_set_label(F.target, iso.image_sets[i])}"
                                        for c, i in enumerate(iso.phi)))
    for kind, witness in iso.findings:
        lines.append(f"finding: {kind} {' '.join(map(str, witness))}")
    lines.append(f"isomorphism: {_yn(iso.is_isomorphism)}")
    return lines, OK if iso.is_isomorphism else VIOLATION


def cmd_laws(doc, args):
    ids = args.law or lawcheck.LAW_IDS
    for law_id in ids:
        if law_id not in lawcheck.CATALOG:
            raise UsageError(f"unknown law {law_id!r}; known: {' '.join(lawcheck.LAW_IDS)}")
    verdicts = []
    for law_id in ids:
        if args.random is not None and lawcheck.get_law(law_id).kind != "class":
            v = lawcheck.check_law_random(law_id, args.nx, args.ny, args.random, args.seed,
                                          total_only=not args.all_maps)
        else:
            v = lawcheck.check_law(law_id, args.nx, args.ny, total_only=not args.all_maps,
                                   max_ring_order=args.max_ring_order)
        verdicts.append(v)
    found = sum(v.witness is not None for v in verdicts)
    lines = _header("laws") + [
        f"laws: {len(verdicts)}",
        f"witnesses: {found}",
        f"contradicting_stated_claims: {sum(v.contradicts_claim for v in verdicts)}",
    ]
    for v in verdicts:
        lines.append("")
        lines += lawcheck.format_verdict(v)
    return lines, VIOLATION if found else OK


def cmd_errata(doc, args):
    entries = errata_report(args.scope)
    text = format_errata(entries).rstrip("\n").split("\n")
    return text, VIOLATION if any(e.is_discrepancy for e in entries) else OK


HANDLERS = {name: globals()["cmd_" + name] for name in COMMANDS}
NEEDS_DOCUMENT = {"approx", "invert", "ring", "quotient", "iso", "svh", "kernel", "induced", "fundamental"}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="roughring", description="Rough approximations over finite set-valued maps and rings.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def with_doc(name, help_text, optional=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("document", nargs="?" if optional else None, help="input file, '-' for stdin")
        return sp

    sp = with_doc("approx", "lower/upper approximation of a set under a map")
    sp.add_argument("--map", required=True)
    sp.add_argument("--set", required=True)
    sp = with_doc("invert", "inverse map, domain and image")
    sp.add_argument("--map", required=True)
    sp = with_doc("psring", "ring of subsets under symmetric difference and intersection", optional=True)
    sp.add_argument("--universe")
    sp.add_argument("--size", type=int)
    sp = with_doc("ring", "summary of a finite ring")
    sp.add_argument("--ring", required=True)
    sp = with_doc("quotient", "quotient by an ideal, partition or additive subgroup")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--ideal")
    sp.add_argument("--partition")
    sp.add_argument("--subgroup")
    sp = with_doc("iso", "search for a ring isomorphism")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--other", required=True)
    for name, help_text in (("svh", "check the homomorphism laws of a set-valued map"),
                            ("kernel", "kernel of a powerful set-valued map"),
                            ("fundamental", "coset ring versus image ring")):
        sp = with_doc(name, help_text)
        sp.add_argument("--svh", required=True)
    sp = with_doc("induced", "pull a set-valued map back along a surjective hom")
    sp.add_argument("--hom", required=True)
    sp.add_argument("--svh", required=True)
    sp.add_argument("--set")
    sp = sub.add_parser("laws", help="exhaustive check of the approximation law catalog")
    sp.add_argument("--law", action="append", help="law id, repeatable (default: all)")
    sp.add_argument("--nx", type=int, default=3)
    sp.add_argument("--ny", type=int, default=3)
    sp.add_argument("--all-maps", action="store_true", help="include non-total maps")
    sp.add_argument("--max-ring-order", type=int, default=12)
    sp.add_argument("--random", type=int, metavar="SAMPLES", help="randomized spot-check instead")
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("errata", help="compare stated claims with brute-force results")
    sp.add_argument("--scope", action="append", help="entry id or group, repeatable (default: all)")
    return p


def _load(path: str) -> Document:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def run(argv) -> tuple[str, int]:
    """Run one command; returns (report text, exit code). Errors come back as ``error: ...``."""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"a command is required: {', '.join(COMMANDS)}")
        doc = None
        if getattr(args, "document", None) is not None:
            doc = _load(args.document)
        elif args.command in NEEDS_DOCUMENT:
            raise UsageError("an input document is required")
        lines, code = HANDLERS[args.command](doc, args)
    except ParseError as exc:
        return f"error: {exc}\n", USAGE
    except (UsageError, RoughRingError) as exc:
        return f"error: {exc}\n", USAGE
    return "\n".join(lines) + "\n", code


def main(argv=None) -> int:
    text, code = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == USAGE else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
