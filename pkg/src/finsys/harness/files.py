"""The line-oriented instance file format.

A file is a sequence of named sections; each section validates on the spot,
so a file that parses is a file whose objects satisfy their axioms.  The
exact grammar lives in docs/instance-format.md.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..finring import DEFAULT_ORDER_CAP, ring_from_spec
from ..invsgrp import (
    FinGroupoid,
    InverseSemigroup,
    validate_groupoid,
    validate_inverse_semigroup,
)
from ..paction import (
    GroupoidPartialAction,
    PartialAction,
    validate_groupoid_partial_action,
    validate_partial_action,
)
from ..syscheck import validate_system


class ParseError(Exception):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnresolvedRef(Exception):
    pass


_HEADER = re.compile(r"^\[(ring|semigroup|groupoid|system|paction|gpa)\s+([^\s\]]+)\]$")
_TOKEN = re.compile(r"^[A-Za-z0-9_.+'*()-]+$")


@dataclass
class InstanceFile:
    rings: dict = field(default_factory=dict)
    semigroups: dict = field(default_factory=dict)
    groupoids: dict = field(default_factory=dict)
    systems: dict = field(default_factory=dict)
    pactions: dict = field(default_factory=dict)
    gpas: dict = field(default_factory=dict)
    order: list = field(default_factory=list)   # (kind, name) in declaration order
    source: str | None = None

    def add(self, kind, name, obj):
        store = getattr(self, _STORE[kind])
        if name in store:
            raise UnresolvedRef(f"duplicate {kind} section {name!r}")
        store[name] = obj
        self.order.append((kind, name))

    def get(self, kind, name):
        store = getattr(self, _STORE[kind])
        if name not in store:
            raise UnresolvedRef(f"no {kind} named {name!r}")
        return store[name]

    def is_empty(self):
        return not self.order


_STORE = {"ring": "rings", "semigroup": "semigroups", "groupoid": "groupoids",
          "system": "systems", "paction": "pactions", "gpa": "gpas"}


def _vector(text, lineno):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(lineno, f"bad element vector {text!r}")


def _gen_list(text, lineno):
    text = text.strip()
    if not text:
        return []
    return [_vector(part, lineno) for part in text.split(";")]


class _Section:
    def __init__(self, kind, name, lineno):
        self.kind = kind
        self.name = name
        self.lineno = lineno
        self.lines = []          # (lineno, text)


def _split_sections(text):
    sections = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            current = _Section(m.group(1), m.group(2), lineno)
            sections.append(current)
            continue
        if current is None:
            raise ParseError(lineno, "content before the first section header")
        current.lines.append((lineno, line))
    return sections


def _kv(line, lineno, key=None):
    if "=" not in line:
        raise ParseError(lineno, f"expected 'key = value' in {line!r}")
    lhs, rhs = line.split("=", 1)
    lhs, rhs = lhs.strip(), rhs.strip()
    if key is not None and lhs != key:
        raise ParseError(lineno, f"expected {key!r}, got {lhs!r}")
    return lhs, rhs


def _parse_ring(sec, cap):
    ranks = None
    products = {}
    for lineno, line in sec.lines:
        lhs, rhs = _kv(line, lineno)
        if lhs == "ranks":
            ranks = _vector(rhs, lineno)
        elif lhs.startswith("mul "):
            parts = lhs.split()
            if len(parts) != 3:
                raise ParseError(lineno, f"expected 'mul I J = vector' in {line!r}")
            try:
                i, j = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(lineno, "basis indices must be integers")
            products[(i, j)] = _vector(rhs, lineno)
        else:
            raise ParseError(lineno, f"unknown ring line {line!r}")
    if ranks is None:
        raise ParseError(sec.lineno, f"ring {sec.name} has no ranks line")
    return ring_from_spec(ranks, products, name=sec.name, cap=cap)


def _parse_semigroup(sec):
    elements = None
    rows = {}
    for lineno, line in sec.lines:
        lhs, rhs = _kv(line, lineno)
        if lhs == "elements":
            elements = [t.strip() for t in rhs.split(",")] if rhs else []
        elif lhs.startswith("row "):
            label = lhs[4:].strip()
            rows[label] = ([t.strip() for t in rhs.split(",")], lineno)
        else:
            raise ParseError(lineno, f"unknown semigroup line {line!r}")
    if elements is None:
        raise ParseError(sec.lineno, f"semigroup {sec.name} has no elements line")
    table = {}
    for a in elements:
        if a not in rows:
            raise ParseError(sec.lineno, f"semigroup {sec.name} misses row {a!r}")
        values, lineno = rows[a]
        if len(values) != len(elements):
            raise ParseError(lineno, f"row {a!r} has {len(values)} entries, "
                                     f"want {len(elements)}")
        for b, c in zip(elements, values):
            table[(a, b)] = c
    return validate_inverse_semigroup(table, elements)


def _parse_groupoid(sec):
    objects = None
    dmap, cmap, compose = {}, {}, {}
    for lineno, line in sec.lines:
        if line.startswith("objects"):
            _, rhs = _kv(line, lineno, "objects")
            objects = [t.strip() for t in rhs.split(",")] if rhs else []
        elif line.startswith("mor "):
            m = re.match(r"^mor\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$", line)
            if not m:
                raise ParseError(lineno, f"expected 'mor g : u -> v' in {line!r}")
            g, u, v = m.groups()
            dmap[g], cmap[g] = u, v
        elif line.startswith("cmp "):
            lhs, rhs = _kv(line, lineno)
            parts = lhs.split()
            if len(parts) != 3:
                raise ParseError(lineno, f"expected 'cmp g h = k' in {line!r}")
            compose[(parts[1], parts[2])] = rhs.strip()
        else:
            raise ParseError(lineno, f"unknown groupoid line {line!r}")
    if objects is None:
        raise ParseError(sec.lineno, f"groupoid {sec.name} has no objects line")
    return validate_groupoid(objects, list(dmap), dmap, cmap, compose)


def _parse_system(sec, inst):
    ring = sgrp = None
    comps = {}
    for lineno, line in sec.lines:
        lhs, rhs = _kv(line, lineno)
        if lhs == "ring":
            ring = inst.get("ring", rhs)
        elif lhs == "semigroup":
            sgrp = inst.get("semigroup", rhs)
        elif lhs.startswith("component "):
            comps[lhs.split(None, 1)[1].strip()] = _gen_list(rhs, lineno)
        else:
            raise ParseError(lineno, f"unknown system line {line!r}")
    if ring is None or sgrp is None:
        raise ParseError(sec.lineno, f"system {sec.name} needs ring and semigroup")
    _check_labels(comps, sgrp, sec)
    return validate_system(ring, sgrp, comps)


def _check_labels(mapping, sgrp, sec):
    known = set(sgrp.elements)
    for label in mapping:
        if label not in known:
            raise UnresolvedRef(f"section {sec.name}: {label!r} is not a "
                                f"semigroup element")


def _parse_paction(sec, inst):
    ring = sgrp = None
    domains, maps, identity_flags = {}, {}, set()
    for lineno, line in sec.lines:
        if line.startswith("pi ") and "->" in line and ":" in line:
            m = re.match(r"^pi\s+(\S+)\s*:\s*([0-9,\s-]*)->\s*([0-9,\s-]*)$", line)
            if not m:
                raise ParseError(lineno, f"expected 'pi s : v -> w' in {line!r}")
            s, src, dst = m.group(1), m.group(2), m.group(3)
            maps.setdefault(s, {})[_vector(src, lineno)] = _vector(dst, lineno)
            continue
        lhs, rhs = _kv(line, lineno)
        if lhs == "ring":
            ring = inst.get("ring", rhs)
        elif lhs == "semigroup":
            sgrp = inst.get("semigroup", rhs)
        elif lhs.startswith("domain "):
            domains[lhs.split(None, 1)[1].strip()] = _gen_list(rhs, lineno)
        elif lhs.startswith("pi "):
            if rhs != "id":
                raise ParseError(lineno, f"expected 'pi s = id' in {line!r}")
            identity_flags.add(lhs.split(None, 1)[1].strip())
        else:
            raise ParseError(lineno, f"unknown paction line {line!r}")
    if ring is None or sgrp is None:
        raise ParseError(sec.lineno, f"paction {sec.name} needs ring and semigroup")
    for s in identity_flags:
        maps[s] = None
    _check_labels(domains, sgrp, sec)
    _check_labels({s: None for s in maps}, sgrp, sec)
    full_maps = {s: maps.get(s) for s in sgrp.elements}
    return validate_partial_action(ring, sgrp, domains, full_maps)


def _parse_gpa(sec, inst):
    ring = groupoid = None
    ideals, maps, identity_flags = {}, {}, set()
    for lineno, line in sec.lines:
        if line.startswith("alpha ") and "->" in line and ":" in line:
            m = re.match(r"^alpha\s+(\S+)\s*:\s*([0-9,\s-]*)->\s*([0-9,\s-]*)$", line)
            if not m:
                raise ParseError(lineno, f"expected 'alpha g : v -> w' in {line!r}")
            g, src, dst = m.group(1), m.group(2), m.group(3)
            maps.setdefault(g, {})[_vector(src, lineno)] = _vector(dst, lineno)
            continue
        lhs, rhs = _kv(line, lineno)
        if lhs == "ring":
            ring = inst.get("ring", rhs)
        elif lhs == "groupoid":
            groupoid = inst.get("groupoid", rhs)
        elif lhs.startswith("ideal "):
            ideals[lhs.split(None, 1)[1].strip()] = _gen_list(rhs, lineno)
        elif lhs.startswith("alpha "):
            if rhs != "id":
                raise ParseError(lineno, f"expected 'alpha g = id' in {line!r}")
            identity_flags.add(lhs.split(None, 1)[1].strip())
        else:
            raise ParseError(lineno, f"unknown gpa line {line!r}")
    if ring is None or groupoid is None:
        raise ParseError(sec.lineno, f"gpa {sec.name} needs ring and groupoid")
    for g in identity_flags:
        maps[g] = None
    known = set(groupoid.morphisms)
    for label in list(ideals) + list(maps):
        if label not in known:
            raise UnresolvedRef(f"section {sec.name}: {label!r} is not a morphism")
    return validate_groupoid_partial_action(ring, groupoid, ideals, maps)


def parse(text, cap: int = DEFAULT_ORDER_CAP, source=None) -> InstanceFile:
    """Parse and validate; a returned instance has passed every module
    validator.  Validator exceptions propagate with their own messages."""
    inst = InstanceFile(source=source)
    for sec in _split_sections(text):
        if sec.kind == "ring":
            obj = _parse_ring(sec, cap)
        elif sec.kind == "semigroup":
            obj = _parse_semigroup(sec)
        elif sec.kind == "groupoid":
            obj = _parse_groupoid(sec)
        elif sec.kind == "system":
            obj = _parse_system(sec, inst)
        elif sec.kind == "paction":
            obj = _parse_paction(sec, inst)
        else:
            obj = _parse_gpa(sec, inst)
        inst.add(sec.kind, sec.name, obj)
    return inst


def parse_path(path, cap: int = DEFAULT_ORDER_CAP) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), cap=cap, source=str(path))


# ---------------------------------------------------------------------------
# serialization


def safe_label(x) -> str:
    """Flatten an arbitrary hashable label into a grammar-safe token."""
    if isinstance(x, str) and _TOKEN.match(x):
        return x
    if isinstance(x, tuple):
        return "_".join(safe_label(t) for t in x) or "empty"
    if isinstance(x, frozenset):
        inner = "+".join(sorted(safe_label(t) for t in x)) or "empty"
        return "b." + inner
    token = re.sub(r"[^A-Za-z0-9_.+'*()-]", "_", str(x))
    return token or "x"


def _unique_labels(labels):
    out, seen = {}, set()
    for lab in labels:
        token = safe_label(lab)
        while token in seen:
            token += "'"
        seen.add(token)
        out[lab] = token
    return out


def _fmt_vec(v):
    return ",".join(str(x) for x in v)


def serialize(inst: InstanceFile) -> str:
    """Write an instance back out; labels are flattened to grammar-safe
    tokens, so a parse of the output is isomorphic, not label-identical."""
    ring_names = {id(R): name for name, R in inst.rings.items()}
    sgrp_names = {id(S): name for name, S in inst.semigroups.items()}
    gpd_names = {id(G): name for name, G in inst.groupoids.items()}
    lines = []
    for kind, name in inst.order:
        obj = inst.get(kind, name)
        lines.append(f"[{kind} {name}]")
        if kind == "ring":
            lines.append(f"ranks = {_fmt_vec(obj.ranks)}")
            for i, row in enumerate(obj.sc):
                for j, v in enumerate(row):
                    if v != obj.zero:
                        lines.append(f"mul {i + 1} {j + 1} = {_fmt_vec(v)}")
        elif kind == "semigroup":
            labels = _unique_labels(obj.elements)
            lines.append("elements = " + ",".join(labels[s] for s in obj.elements))
            for a in obj.elements:
                row = ",".join(labels[obj.mul(a, b)] for b in obj.elements)
                lines.append(f"row {labels[a]} = {row}")
        elif kind == "groupoid":
            olabels = _unique_labels(obj.objects)
            mlabels = _unique_labels(obj.morphisms)
            lines.append("objects = " + ",".join(olabels[u] for u in obj.objects))
            for g in obj.morphisms:
                lines.append(f"mor {mlabels[g]} : {olabels[obj.dmap[g]]} -> "
                             f"{olabels[obj.cmap[g]]}")
            for (g, h), k in sorted(obj._compose.items(),
                                    key=lambda p: (mlabels[p[0][0]], mlabels[p[0][1]])):
                lines.append(f"cmp {mlabels[g]} {mlabels[h]} = {mlabels[k]}")
        elif kind == "system":
            lines.append(f"ring = {ring_names[id(obj.ring)]}")
            lines.append(f"semigroup = {sgrp_names[id(obj.sgrp)]}")
            labels = _unique_labels(obj.sgrp.elements)
            for s in obj.sgrp.elements:
                gens = obj.components[s].small_gens()
                lines.append(f"component {labels[s]} = "
                             + ";".join(_fmt_vec(g) for g in gens))
        elif kind == "paction":
            lines.append(f"ring = {ring_names[id(obj.ring)]}")
            lines.append(f"semigroup = {sgrp_names[id(obj.sgrp)]}")
            labels = _unique_labels(obj.sgrp.elements)
            for s in obj.sgrp.elements:
                gens = obj.domains[s].small_gens()
                lines.append(f"domain {labels[s]} = "
                             + ";".join(_fmt_vec(g) for g in gens))
            for s in obj.sgrp.elements:
                table = obj.maps[s]
                if all(x == y for x, y in table.items()):
                    lines.append(f"pi {labels[s]} = id")
                else:
                    for x in sorted(table):
                        lines.append(f"pi {labels[s]} : {_fmt_vec(x)} -> "
                                     f"{_fmt_vec(table[x])}")
        else:
            lines.append(f"ring = {ring_names[id(obj.ring)]}")
            lines.append(f"groupoid = {gpd_names[id(obj.groupoid)]}")
            mlabels = _unique_labels(obj.groupoid.morphisms)
            for g in obj.groupoid.morphisms:
                gens = obj.ideals[g].small_gens()
                lines.append(f"ideal {mlabels[g]} = "
                             + ";".join(_fmt_vec(x) for x in gens))
            for g in obj.groupoid.morphisms:
                table = obj.maps[g]
                if all(x == y for x, y in table.items()):
                    lines.append(f"alpha {mlabels[g]} = id")
                else:
                    for x in sorted(table):
                        lines.append(f"alpha {mlabels[g]} : {_fmt_vec(x)} -> "
                                     f"{_fmt_vec(table[x])}")
        lines.append("")
    return "\n".join(lines)
