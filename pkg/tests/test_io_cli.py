import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fillin.cli import run
from fillin.graph import Graph
from fillin.io import ParseError, RangeError, format_graph, parse_document, parse_graph

C4_TEXT = "4 4\n0 1\n1 2\n2 3\n3 0\n"


def call(argv, text):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(text), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    assert parse_graph(C4_TEXT) == Graph.cycle(4)
    g = parse_graph("p edge 3 2\ne 1 2\ne 2 3")
    assert g == Graph.path(3) and g.labels == ("1", "2", "3")
    with pytest.raises(RangeError):
        parse_graph("2 1\n0 2")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_graph("# comment\n3 2\n0 x\n1 2\n")
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph("3 1\n1 1\n")
    with pytest.raises(ParseError, match="announces"):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("p edge 3 1\nx 1 2\n")
    with pytest.raises(ParseError):
        parse_graph("")


def test_comments_and_duplicates():
    g = parse_graph("c hello\np edge 3 3 # header\ne 1 2\ne 2 1\ne 2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]


@given(st.integers(0, 9), st.sets(st.tuples(st.integers(0, 8), st.integers(0, 8))), st.booleans())
@settings(max_examples=100, deadline=None)
def test_round_trip(n, raw, dimacs):
    g = Graph.from_edges(n, {(min(a, b), max(a, b)) for a, b in raw if a != b and max(a, b) < n})
    text = format_graph(g, dimacs)
    again = parse_graph(text)
    assert again == g
    assert format_graph(again, dimacs) == text


def test_cli_examples():
    code, out, _ = call(["solve", "--k", "1"], C4_TEXT)
    rep = json.loads(out)
    assert code == 0 and rep["answer"] == "YES" and len(rep["fill"]) == 1
    assert list(rep) == ["answer", "k", "fill", "stats"] and out.endswith("\n")
    code, out, _ = call(["solve", "--k", "0"], C4_TEXT)
    assert code == 1 and json.loads(out)["answer"] == "NO"
    code, _, _ = call(["check-chordal"], "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert code == 0


def test_cli_dimacs_labels():
    code, out, _ = call(["solve", "--k", "1"], "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    assert code == 0 and json.loads(out)["fill"] == [[1, 3]]


def test_cli_sections():
    code, out, _ = call(["sandwich", "--k", "1"], C4_TEXT + "---\n1 3\n")
    assert code == 0 and json.loads(out)["fill"] == [[1, 3]]
    code, out, _ = call(["colored", "--k", "3"], C4_TEXT + "---\nc 0 0\nc 1 1\nc 2 0\nc 3 1\n")
    assert code == 1
    code, out, _ = call(["chain", "--k", "1"], "4 2\n0 2\n1 3\n---\nleft 0 1\n")
    assert code == 0 and len(json.loads(out)["fill"]) == 1
    code, _, err = call(["chain", "--k", "1"], "3 1\n0 1\n---\nleft 0 1\n")
    assert code == 2 and "inside one side" in err


def test_cli_usage_errors():
    assert call(["solve"], C4_TEXT)[0] == 2
    assert call(["solve", "--k", "-1"], C4_TEXT)[0] == 2
    assert call(["bogus"], C4_TEXT)[0] == 2
    code, _, err = call(["solve", "--k", "1"], "2 1\n0 2\n")
    assert code == 2 and "line 2" in err
    assert call(["sandwich", "--k", "1"], C4_TEXT + "---\n0 1\n")[0] == 2


def test_cli_other_commands():
    code, out, _ = call(["pmcs", "--k", "1"], C4_TEXT)
    assert json.loads(out)["stats"]["pmcs"] == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    code, out, _ = call(["kernelize", "--k", "0"], C4_TEXT)
    assert code == 1
    code, out, _ = call(["triangulate"], C4_TEXT)
    assert code == 0 and len(json.loads(out)["fill"]) == 1
    code, out, _ = call(["oracle", "--k", "1"], C4_TEXT)
    assert code == 0 and json.loads(out)["stats"]["oracle_mfi"] == 1
    code, out, _ = call(["solve", "--k", "1", "--emit", "text"], C4_TEXT)
    assert out.startswith("answer: YES\nk: 1\nfill: 0-2\n")


def test_cli_selftest():
    code, out, _ = call(["selftest", "--count", "10"], "")
    assert code == 0 and "0 mismatches" in out


def test_document_sections():
    doc = parse_document("p edge 2 0\n---\nc 1 5\nc 2 6\n")
    assert doc.dimacs and doc.extra == [(3, ["c", "1", "5"]), (4, ["c", "2", "6"])]
