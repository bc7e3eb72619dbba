"""Monoid text files, machine (JSON) reports and DOT exports.

Monoid text format::

    # comment lines start with '#'
    monoid 4
    elements 0 1 2 3
    identity 1
    0 0 0 0
    0 1 2 3
    0 2 0 2
    0 3 2 1

Row ``a`` lists the names of ``a*b`` for ``b`` in element order. Names match
``[A-Za-z0-9_*+-]+``. Blank lines are ignored; line numbers in errors are
physical line numbers (1-based).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

from .ideals import IdealLattice, enumerate_ideals, lattice_analysis
from .monoid import ElementSet, FiniteMonoid, validate_monoid
from .topology import (TerminalSpace, build_terminal_space, density_check, irreducible_components,
                       radicals, separation_check)
from .verifier import VerificationReport, table_hash

NAME_RE = re.compile(r"[A-Za-z0-9_*+-]+\Z")
REPORT_FORMAT = "termspace-report/1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MonoidSyntaxError(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class UnknownName(ParseError):
    pass


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(mo.group(), mo.start() + 1) for mo in re.finditer(r"\S+", line)]


def _content_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def parse_monoid_file(text: str) -> FiniteMonoid:
    if text.startswith("\ufeff"):
        text = text[1:]
    lines = list(_content_lines(text))
    last_line = len(text.splitlines()) + 1

    def header(k: int, keyword: str) -> tuple[int, list[tuple[str, int]]]:
        if k >= len(lines):
            raise MonoidSyntaxError(f"missing '{keyword}' line", last_line)
        lineno, line = lines[k]
        toks = _tokens(line)
        if toks[0][0] != keyword:
            raise MonoidSyntaxError(f"expected '{keyword}', found {toks[0][0]!r}", lineno, toks[0][1])
        return lineno, toks[1:]

    lineno, toks = header(0, "monoid")
    if len(toks) != 1 or not toks[0][0].isdigit() or int(toks[0][0]) < 1:
        raise MonoidSyntaxError("expected 'monoid <n>' with n >= 1", lineno, toks[0][1] if toks else 1)
    n = int(toks[0][0])

    lineno, toks = header(1, "elements")
    for name, col in toks:
        if not NAME_RE.match(name):
            raise MonoidSyntaxError(f"invalid element name {name!r}", lineno, col)
    if len(toks) != n:
        raise ArityMismatch(f"expected {n} element names, found {len(toks)}", lineno)
    names = [t for t, _ in toks]
    seen = set()
    for name, col in toks:
        if name in seen:
            raise MonoidSyntaxError(f"duplicate element name {name!r}", lineno, col)
        seen.add(name)
    index = {name: i for i, name in enumerate(names)}

    lineno, toks = header(2, "identity")
    if len(toks) != 1:
        raise MonoidSyntaxError("expected 'identity <name>'", lineno)
    identity, col = toks[0]
    if identity not in index:
        raise UnknownName(f"identity {identity!r} is not an element", lineno, col)

    rows = lines[3:]
    table = []
    for k in range(n):
        if k >= len(rows):
            raise MonoidSyntaxError(f"expected {n} table rows, found {len(rows)}", last_line)
        lineno, line = rows[k]
        toks = _tokens(line)
        if len(toks) != n:
            raise ArityMismatch(f"table row has {len(toks)} entries, expected {n}", lineno)
        row = []
        for name, col in toks:
            if name not in index:
                raise UnknownName(f"unknown element {name!r}", lineno, col)
            row.append(index[name])
        table.append(row)
    if len(rows) > n:
        lineno, _ = rows[n]
        raise MonoidSyntaxError("unexpected content after the table", lineno)
    return validate_monoid(names, table, identity)


def format_monoid(m: FiniteMonoid, comment: str | None = None) -> str:
    names = m.element_names
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"monoid {m.order}")
    out.append("elements " + " ".join(names))
    out.append(f"identity {names[m.identity]}")
    for row in m.table:
        out.append(" ".join(names[v] for v in row))
    return "\n".join(out) + "\n"


def parse_monoid_stream(text: str) -> list[FiniteMonoid]:
    """Parse several monoid documents, each starting at a ``monoid`` line."""
    chunks: list[list[str]] = [[]]
    for line in text.splitlines():
        if line.strip().startswith("monoid") and any(
                ln.strip().startswith("monoid") for ln in chunks[-1]):
            chunks.append([])
        chunks[-1].append(line)
    return [parse_monoid_file("\n".join(c)) for c in chunks
            if any(ln.strip().startswith("monoid") for ln in c)]


@dataclass
class Analysis:
    monoid: FiniteMonoid
    lattice: IdealLattice
    space: TerminalSpace
    name: str = ""

    @cached_property
    def separation(self):
        return separation_check(self.space)

    @cached_property
    def components(self):
        return irreducible_components(self.space)

    @cached_property
    def radicals(self):
        return radicals(self.monoid, self.lattice, self.space)

    @cached_property
    def density(self):
        return density_check(self.monoid, self.space)


def analyze(m: FiniteMonoid, name: str = "") -> Analysis:
    lattice = enumerate_ideals(m)
    return Analysis(m, lattice, build_terminal_space(m, lattice), name)


def _names(m: FiniteMonoid, s: ElementSet) -> list[str]:
    return [m.element_names[i] for i in s]


def report_document(analysis: Analysis, *, topology: bool = True,
                    verification: VerificationReport | None = None,
                    timings: bool = False) -> dict:
    """Machine report as plain JSON data with a fixed key order."""
    m, lat, space = analysis.monoid, analysis.lattice, analysis.space
    doc = {
        "format": REPORT_FORMAT,
        "monoid": {
            "name": analysis.name,
            "order": m.order,
            "elements": list(m.element_names),
            "identity": m.element_names[m.identity],
            "table": [[m.element_names[v] for v in row] for row in m.table],
            "sha256": table_hash(m),
        },
        "ideals": [
            {"members": _names(m, c.ideal), **c.flags()}
            for c in lat.classifications
        ],
        "lattice": {
            "distributive": lattice_analysis(lat).is_distributive,
            "hasse": [list(e) for e in lat.hasse_edges()],
        },
    }
    if topology:
        sep = analysis.separation
        comp = analysis.components
        rad = analysis.radicals
        dens = analysis.density
        k = len(space.points)
        doc["space"] = {
            "points": [_names(m, p) for p in space.points],
            "specialization": [[i, j] for i in range(k) for j in range(k)
                               if i != j and space.specializes(i, j)],
        }
        doc["closed_sets"] = [sorted(c.members) for c in space.closed_sets]
        doc["separation"] = {"t0": sep.t0, "t1": sep.t1, "antichain": sep.antichain,
                             "witness": list(sep.witness) if sep.witness else None}
        doc["components"] = {
            "components": [sorted(c.members) for c in comp.components],
            "minimal_points": list(comp.minimal_si),
        }
        doc["radicals"] = {"m": _names(m, rad.m_radical), "p": _names(m, rad.p_radical),
                           "s": _names(m, rad.s_radical)}
        doc["density"] = {
            "spec_dense": dens.spec_dense, "max_dense": dens.max_dense,
            "p_eq_s": dens.p_eq_s, "m_eq_s": dens.m_eq_s,
            "corrected_pairing_holds": dens.corrected_pairing_holds,
            "literal_pairing_holds": dens.literal_pairing_holds,
        }
    if verification is not None:
        rows = []
        for c in verification.checks:
            row = {"id": c.id, "status": c.status, "payload": c.payload}
            if timings:
                row["elapsed"] = round(c.elapsed, 6)
            rows.append(row)
        doc["verification"] = {
            "checks": rows,
            "summary": verification.summary,
            "findings": list(verification.findings),
        }
    # normalise tuples etc. to JSON-native values so the document round-trips
    return json.loads(json.dumps(doc))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)


def _label(m: FiniteMonoid, s: ElementSet) -> str:
    return "{" + ", ".join(_names(m, s)) + "}"


def export_dot(analysis: Analysis) -> str:
    """Two digraphs: the ideal lattice's Hasse diagram and the specialization order.

    Strongly irreducible ideals are drawn as boxes; primes also get a double border.
    """
    m, lat, space = analysis.monoid, analysis.lattice, analysis.space
    out = ["digraph ideal_lattice {", "  rankdir=BT;", "  node [shape=ellipse];"]
    for k, c in enumerate(lat.classifications):
        attrs = [f'label="{_label(m, c.ideal)}"']
        if c.strongly_irreducible:
            attrs.append("shape=box")
        if c.prime:
            attrs.append("peripheries=2")
        out.append(f"  I{k} [{', '.join(attrs)}];")
    for a, b in lat.hasse_edges():
        out.append(f"  I{a} -> I{b};")
    out.append("}")
    out += ["digraph terminal_space {", "  rankdir=BT;", "  node [shape=box];"]
    pb = space.point_bits
    for i, p in enumerate(space.points):
        out.append(f'  P{i} [label="{_label(m, p)}"];')
    k = len(pb)
    for i in range(k):
        for j in range(k):
            if i == j or not space.specializes(i, j):
                continue
            between = any(c not in (i, j) and space.specializes(i, c) and space.specializes(c, j)
                          for c in range(k))
            if not between:
                out.append(f"  P{i} -> P{j};")
    out.append("}")
    return "\n".join(out) + "\n"
