"""Line-oriented document format for universes, maps, rings and homomorphisms.

Example::

    # comments start with '#'
    universe X: 1 2 3
    set A: X = 1 3
    map F: X -> X
      1: 1
      2: 1 3
      3:
    ring Z6: zmod 6
    ring P: product Z2 Z3
    ring B: psring X
    ring T: table
      elements: 0 1
      zero: 0
      one: 1
      add: 0 1 | 1 0
      mul: 0 0 | 0 1
    ideal I: Z6 = 0 2 4
    partition Q: Z6 = {0 2 4} {1 3 5}
    hom rho: Z6 -> Z3 = 0:0 1:1 2:2 3:0 4:1 5:2
    svh G: classes Z6 I
    svh H: singleton rho
    svh E: Z6 -> Z3
      0: 0
      ...

Names share one namespace and may be used before they are declared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError, RoughRingError
from .finite_ring import (
    FiniteRing,
    RingHom,
    congruence_from_ideal,
    congruence_from_partition,
    hom_from_table,
    is_ideal,
    ring_from_tables,
    ring_product,
    ring_zmod,
)
from .finite_sets import SetValuedMap, Subset, Universe
from .powerset_ring import PowersetRing, ps_as_finite_ring
from .rough_hom import SetValuedRingHom, classes_svh, singleton_svh

KINDS = ("universe", "set", "map", "ring", "ideal", "partition", "svh", "hom")
_HEADER = re.compile(r"^(\w+)\s+([A-Za-z_][\w']*)\s*:\s*(.*)$")


@dataclass
class Decl:
    kind: str
    name: str
    line: int
    head: str
    body: list[tuple[int, str]] = field(default_factory=list)


@dataclass
class Document:
    """Resolved declarations in file order."""

    decls: dict[str, Decl] = field(default_factory=dict)
    values: dict[str, object] = field(default_factory=dict)

    def get(self, name: str, kind: str | None = None):
        if name not in self.values:
            raise KeyError(f"no declaration named {name!r}")
        if kind is not None and self.decls[name].kind != kind:
            raise KeyError(f"{name!r} is a {self.decls[name].kind}, not a {kind}")
        return self.values[name]

    def names(self, kind: str) -> list[str]:
        return [n for n, d in self.decls.items() if d.kind == kind]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Document):
            return NotImplemented
        if [(d.kind, n) for n, d in self.decls.items()] != [(d.kind, n) for n, d in other.decls.items()]:
            return False
        return all(self.values[n] == other.values[n] for n in self.values)


def split_blocks(text: str, line: int) -> list[list[str]]:
    """``{a b} {c}`` -> ``[['a', 'b'], ['c']]``; braces inside labels are kept."""
    blocks, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "{":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ParseError(line, "unbalanced '}'")
            if depth == 0:
                blocks.append(_tokens(text[start:i]))
        elif depth == 0 and not ch.isspace():
            raise ParseError(line, f"expected '{{' to open a block, found {ch!r}")
    if depth:
        raise ParseError(line, "unbalanced '{'")
    return blocks


def _tokens(text: str) -> list[str]:
    """Whitespace split that keeps brace-balanced labels such as ``{1, 2}`` intact."""
    out, cur, depth = [], "", 0
    for ch in text:
        if ch.isspace() and depth == 0:
            if cur:
                out.append(cur)
                cur = ""
            continue
        depth += ch == "{"
        depth -= ch == "}"
        cur += ch
    if cur:
        out.append(cur)
    return out


def _read_decls(text: str) -> list[Decl]:
    decls: list[Decl] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        if raw[0].isspace():
            if not decls or decls[-1].kind not in ("map", "ring", "svh"):
                raise ParseError(lineno, "indented line outside a map, table ring or svh block")
            decls[-1].body.append((lineno, stripped.strip()))
            continue
        m = _HEADER.match(stripped)
        if not m:
            raise ParseError(lineno, "expected '<kind> <name>: ...'")
        kind, name, head = m.groups()
        if kind not in KINDS:
            raise ParseError(lineno, f"unknown declaration kind {kind!r}; expected one of {', '.join(KINDS)}")
        decls.append(Decl(kind, name, lineno, head.strip()))
    return decls


class _Resolver:
    def __init__(self, decls: list[Decl]):
        self.decls: dict[str, Decl] = {}
        for d in decls:
            if d.name in self.decls:
                raise ParseError(d.line, f"name {d.name!r} already declared on line {self.decls[d.name].line}")
            self.decls[d.name] = d
        self.values: dict[str, object] = {}
        self.active: set[str] = set()

    def ref(self, name: str, line: int, *kinds: str):
        d = self.decls.get(name)
        if d is None:
            raise ParseError(line, f"unknown reference {name!r}")
        if kinds and d.kind not in kinds:
            raise ParseError(line, f"{name!r} is a {d.kind}; expected {' or '.join(kinds)}")
        return self.resolve(d)

    def universe_of(self, name: str, line: int) -> Universe:
        v = self.ref(name, line, "universe", "ring")
        return v.elems if isinstance(v, FiniteRing) else v

    def resolve(self, d: Decl):
        if d.name in self.values:
            return self.values[d.name]
        if d.name in self.active:
            raise ParseError(d.line, f"circular reference through {d.name!r}")
        self.active.add(d.name)
        try:
            value = getattr(self, "_" + d.kind)(d)
        except ParseError:
            raise
        except (RoughRingError, KeyError, ValueError) as exc:
            raise ParseError(d.line, f"{d.kind} {d.name}: {exc}") from exc
        finally:
            self.active.discard(d.name)
        self.values[d.name] = value
        return value

    def _universe(self, d: Decl) -> Universe:
        labels = _tokens(d.head)
        for label in labels:
            if ":" in label:
                raise ParseError(d.line, f"label {label!r} may not contain ':'")
        return Universe(labels)

    def _split_eq(self, d: Decl) -> tuple[str, str]:
        if "=" not in d.head:
            raise ParseError(d.line, "expected '<structure> = <elements>'")
        left, right = d.head.split("=", 1)
        return left.strip(), right.strip()

    def _set(self, d: Decl) -> Subset:
        uname, members = self._split_eq(d)
        return self.universe_of(uname, d.line).subset(_tokens(members))

    def _map(self, d: Decl) -> SetValuedMap:
        m = re.fullmatch(r"(\S+)\s*->\s*(\S+)", d.head)
        if not m:
            raise ParseError(d.line, "expected 'map F: X -> Y'")
        X, Y = self.universe_of(m.group(1), d.line), self.universe_of(m.group(2), d.line)
        return SetValuedMap.from_mapping(X, Y, self._table_lines(d, X))

    def _table_lines(self, d: Decl, X: Universe) -> dict[str, list[str]]:
        images: dict[str, list[str]] = {}
        for line, text in d.body:
            if ":" not in text:
                raise ParseError(line, "expected '<element>: <members>'")
            x, ys = text.split(":", 1)
            x = x.strip()
            if x in images:
                raise ParseError(line, f"element {x!r} listed twice")
            X.index(x)
            images[x] = _tokens(ys)
        return images

    def _ring(self, d: Decl) -> FiniteRing:
        parts = d.head.split()
        if not parts:
            raise ParseError(d.line, "expected a ring constructor: zmod, product, psring or table")
        ctor, args = parts[0], parts[1:]
        if ctor == "zmod":
            if len(args) != 1 or not re.fullmatch(r"-?\d+", args[0]):
                raise ParseError(d.line, "expected 'zmod <n>'")
            n = int(args[0])
            if n < 1:
                raise ParseError(d.line, "zmod needs n >= 1")
            R = ring_zmod(n)
        elif ctor == "product":
            if len(args) != 2:
                raise ParseError(d.line, "expected 'product <ring> <ring>'")
            R = ring_product(self.ref(args[0], d.line, "ring"), self.ref(args[1], d.line, "ring"))
        elif ctor == "psring":
            if len(args) != 1:
                raise ParseError(d.line, "expected 'psring <universe>'")
            R = ps_as_finite_ring(PowersetRing(self.ref(args[0], d.line, "universe")))
        elif ctor == "table":
            R = self._table_ring(d)
        else:
            raise ParseError(d.line, f"unknown ring constructor {ctor!r}")
        R.name = d.name
        return R

    def _table_ring(self, d: Decl) -> FiniteRing:
        fields: dict[str, str] = {}
        for line, text in d.body:
            key, _, value = text.partition(":")
            key = key.strip()
            if key not in ("elements", "zero", "one", "add", "mul") or key in fields:
                raise ParseError(line, f"unexpected table field {key!r}")
            fields[key] = value.strip()
        for key in ("elements", "zero", "add", "mul"):
            if key not in fields:
                raise ParseError(d.line, f"table ring is missing '{key}:'")
        elems = Universe(_tokens(fields["elements"]))

        def rows(text):
            return [[elems.index(v) for v in _tokens(row)] for row in text.split("|")]

        one = fields.get("one")
        return ring_from_tables(elems, rows(fields["add"]), rows(fields["mul"]), fields["zero"], one or None)

    def _ideal(self, d: Decl) -> Subset:
        rname, members = self._split_eq(d)
        R = self.ref(rname, d.line, "ring")
        I = R.subset(_tokens(members))
        v = is_ideal(R, I)
        if not v:
            raise ParseError(d.line, f"ideal {d.name}: not an ideal ({v.reason}: {' '.join(v.witness)})")
        return I

    def _partition(self, d: Decl):
        rname, blocks = self._split_eq(d)
        R = self.ref(rname, d.line, "ring")
        return congruence_from_partition(R, split_blocks(blocks, d.line))

    def _hom(self, d: Decl) -> RingHom:
        m = re.fullmatch(r"(\S+)\s*->\s*(\S+)\s*=\s*(.*)", d.head)
        if not m:
            raise ParseError(d.line, "expected 'hom H: R1 -> R2 = x:y ...'")
        R1, R2 = self.ref(m.group(1), d.line, "ring"), self.ref(m.group(2), d.line, "ring")
        table = {}
        for pair in _tokens(m.group(3)):
            x, sep, y = pair.partition(":")
            if not sep:
                raise ParseError(d.line, f"expected 'x:y', got {pair!r}")
            table[x] = y
        return hom_from_table(R1, R2, table)

    def _svh(self, d: Decl) -> SetValuedRingHom:
        parts = d.head.split()
        if parts and parts[0] == "classes":
            if len(parts) != 3:
                raise ParseError(d.line, "expected 'classes <ring> <ideal|partition>'")
            R = self.ref(parts[1], d.line, "ring")
            rel = self.ref(parts[2], d.line, "ideal", "partition")
            C = congruence_from_ideal(R, rel) if isinstance(rel, Subset) else rel
            if C.ring != R:
                raise ParseError(d.line, f"{parts[2]} is not over ring {parts[1]}")
            return classes_svh(R, C)
        if parts and parts[0] == "singleton":
            if len(parts) != 2:
                raise ParseError(d.line, "expected 'singleton <hom>'")
            return singleton_svh(self.ref(parts[1], d.line, "hom"))
        m = re.fullmatch(r"(\S+)\s*->\s*(\S+)", d.head)
        if not m:
            raise ParseError(d.line, "expected 'classes', 'singleton' or 'R1 -> R2' with a table")
        R1, R2 = self.ref(m.group(1), d.line, "ring"), self.ref(m.group(2), d.line, "ring")
        images = self._table_lines(d, R1.elems)
        return SetValuedRingHom.from_images(R1, R2, images)


def parse(text: str) -> Document:
    decls = _read_decls(text)
    res = _Resolver(decls)
    for d in decls:
        res.resolve(d)
    doc = Document()
    for d in decls:
        doc.decls[d.name] = d
        doc.values[d.name] = res.values[d.name]
    return doc


def emit(doc: Document) -> str:
    """Canonical text for a document. Re-parsing it yields an equal document."""
    out = []
    for name, d in doc.decls.items():
        v = doc.values[name]
        if d.kind == "universe":
            out.append(f"universe {name}: {' '.join(v.labels)}")
        elif d.kind in ("set", "ideal"):
            owner = d.head.split("=", 1)[0].strip()
            out.append(f"{d.kind} {name}: {owner} = {' '.join(v.labels())}".rstrip())
        elif d.kind == "map":
            out.append(f"map {name}: {d.head}")
            for x, s in v.items():
                out.append(f"  {x}: {' '.join(s.labels())}".rstrip())
        elif d.kind == "ring":
            ctor = d.head.split()[0]
            if ctor == "table":
                out.append(f"ring {name}: table")
                out.append(f"  elements: {' '.join(v.elems.labels)}")
                out.append(f"  zero: {v.label(v.zero)}")
                if v.one is not None:
                    out.append(f"  one: {v.label(v.one)}")
                for key, table in (("add", v.add), ("mul", v.mul)):
                    rows = " | ".join(" ".join(v.label(c) for c in row) for row in table)
                    out.append(f"  {key}: {rows}")
            else:
                out.append(f"ring {name}: {' '.join(d.head.split())}")
        elif d.kind == "partition":
            owner = d.head.split("=", 1)[0].strip()
            out.append(f"partition {name}: {owner} = {' '.join(b.format() for b in v.blocks())}")
        elif d.kind == "hom":
            head = d.head.split("=", 1)[0].strip()
            head = " -> ".join(p.strip() for p in head.split("->"))
            pairs = " ".join(f"{v.source.label(x)}:{v.target.label(y)}" for x, y in enumerate(v.table))
            out.append(f"hom {name}: {head} = {pairs}")
        elif d.kind == "svh":
            parts = d.head.split()
            if parts and parts[0] in ("classes", "singleton"):
                out.append(f"svh {name}: {' '.join(parts)}")
            else:
                out.append(f"svh {name}: {' -> '.join(p.strip() for p in d.head.split('->'))}")
                for x in range(v.source.order):
                    out.append(f"  {v.source.label(x)}: {' '.join(v(x).labels())}".rstrip())
    return "\n".join(out) + ("\n" if out else "")
