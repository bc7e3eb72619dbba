from pathlib import Path

import pytest

from termspace.corpus import enumerate_commutative_monoids, make_family
from termspace.formats import (ArityMismatch, MonoidSyntaxError, UnknownName, analyze, dumps,
                               export_dot, format_monoid, loads, parse_monoid_file,
                               parse_monoid_stream, report_document)
from termspace.monoid import NotAssociative
from termspace.verifier import run_all

ROOT = Path(__file__).parent.parent
GOLDEN = Path(__file__).parent / "golden"

BOOLEAN = """\
# the boolean monoid
monoid 2
elements 0 1
identity 1
0 0
0 1
"""

Z4 = (ROOT / "data" / "z4.monoid").read_text()


def test_parse_boolean():
    m = parse_monoid_file(BOOLEAN)
    assert m.order == 2 and m.element_names == ("0", "1") and m.identity == 1


def test_missing_identity_line():
    text = "monoid 2\nelements 0 1\n0 0\n0 1\n"
    with pytest.raises(MonoidSyntaxError) as exc:
        parse_monoid_file(text)
    assert exc.value.line == 3


def test_ragged_row_reports_its_line():
    lines = Z4.splitlines()
    # the comment is line 1, so the third table row is line 7
    lines[6] = "0 2 0"
    with pytest.raises(ArityMismatch) as exc:
        parse_monoid_file("\n".join(lines) + "\n")
    assert exc.value.line == 7


def test_unknown_name_has_column():
    with pytest.raises(UnknownName) as exc:
        parse_monoid_file("monoid 2\nelements 0 1\nidentity 1\n0 0\n0 x\n")
    assert (exc.value.line, exc.value.column) == (5, 3)


def test_validation_errors_pass_through():
    with pytest.raises(NotAssociative):
        parse_monoid_file("monoid 3\nelements 1 a b\nidentity 1\n1 a b\na 1 1\nb 1 1\n")


@pytest.mark.parametrize("text", [
    "",
    "monoid 0\n",
    "monoid two\n",
    "monoid 2\nelements 0 0\nidentity 0\n0 0\n0 0\n",
    "monoid 2\nelements 0 1\nidentity 1\n0 0\n0 1\n0 1\n",
    "monoid 2\nelements 0 1\nidentity 1\n0 0\n",
    "monoid 2\nelements 0 @\nidentity 0\n0 @\n@ @\n",
])
def test_malformed(text):
    with pytest.raises(MonoidSyntaxError):
        parse_monoid_file(text)


def test_arity_of_elements_line():
    with pytest.raises(ArityMismatch):
        parse_monoid_file("monoid 3\nelements 0 1\nidentity 1\n")


def test_round_trip_on_corpus():
    for n in range(1, 5):
        for m in enumerate_commutative_monoids(n):
            assert parse_monoid_file(format_monoid(m)) == m


def test_round_trip_on_families():
    for spec in ("z_mult(6)", "cyclic(2,3)", "direct_product(boolean,z_mult(3))"):
        m = make_family(spec)
        text = format_monoid(m, comment=spec)
        assert parse_monoid_file(text) == m
        assert format_monoid(parse_monoid_file(text), comment=spec) == text


def test_stream():
    ms = parse_monoid_stream(BOOLEAN + "\n" + Z4)
    assert [m.order for m in ms] == [2, 4]


def test_report_json_round_trip(z6):
    doc = report_document(analyze(z6, "z6"), verification=run_all(z6, name="z6"))
    assert loads(dumps(doc)) == doc
    assert list(doc) == ["format", "monoid", "ideals", "lattice", "space", "closed_sets",
                         "separation", "components", "radicals", "density", "verification"]


def test_report_has_no_timings_by_default(z4):
    doc = report_document(analyze(z4), verification=run_all(z4))
    assert all("elapsed" not in row for row in doc["verification"]["checks"])
    doc = report_document(analyze(z4), verification=run_all(z4), timings=True)
    assert all("elapsed" in row for row in doc["verification"]["checks"])


@pytest.mark.parametrize("name", ["z4", "z6"])
def test_golden_report(name):
    m = parse_monoid_file((ROOT / "data" / f"{name}.monoid").read_text())
    text = dumps(report_document(analyze(m, name), verification=run_all(m, name=name)))
    assert text == (GOLDEN / f"{name}_report.json").read_text()


@pytest.mark.parametrize("name", ["z4", "z6"])
def test_golden_dot(name):
    m = parse_monoid_file((ROOT / "data" / f"{name}.monoid").read_text())
    assert export_dot(analyze(m)) == (GOLDEN / f"{name}.dot").read_text()


def count_graph(dot, graph):
    body = dot.split(f"digraph {graph} {{")[1].split("}\n")[0]
    lines = [ln.strip() for ln in body.splitlines()]
    nodes = [ln for ln in lines if "[label=" in ln]
    edges = [ln for ln in lines if "->" in ln]
    return len(nodes), len(edges)


def test_dot_counts(z4, z6, trivial):
    assert count_graph(export_dot(analyze(z4)), "ideal_lattice") == (3, 2)
    assert count_graph(export_dot(analyze(z6)), "ideal_lattice") == (5, 5)
    dot = export_dot(analyze(trivial))
    assert count_graph(dot, "ideal_lattice") == (1, 0)
    assert count_graph(dot, "terminal_space") == (0, 0)


def test_dot_marks(z6):
    dot = export_dot(analyze(z6))
    assert 'I0 [label="{0}"];' in dot
    assert 'I1 [label="{0, 3}", shape=box, peripheries=2];' in dot
