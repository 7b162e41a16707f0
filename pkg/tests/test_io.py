import io

import numpy as np
import pytest

from koutgraph import FormatError, UGraph, export_edgelist, generate_kout, import_edgelist
from koutgraph.io import read_edgelist, write_edgelist


def roundtrip(g, meta=None):
    buf = io.StringIO()
    export_edgelist(g, buf, meta)
    buf.seek(0)
    return import_edgelist(buf), buf.getvalue()


def test_roundtrip_kout():
    g, _ = generate_kout(100, 3, 42)
    (h, meta), _ = roundtrip(g, {"k": 3, "seed": 42})
    assert h == g
    assert h.adjacency() == g.adjacency()
    assert meta["n"] == "100" and meta["k"] == "3" and meta["seed"] == "42"


def test_export_sorted_and_oriented():
    g = UGraph.from_edges(5, [(3, 1), (4, 0), (1, 0)])
    _, text = roundtrip(g)
    body = [ln for ln in text.splitlines() if not ln.startswith("#")]
    assert body == ["0 1", "0 4", "1 3"]


def test_isolated_nodes_survive_roundtrip():
    g = UGraph.from_edges(6, [(0, 1)])
    (h, _), _ = roundtrip(g)
    assert h.n == 6


def test_no_header_infers_n():
    g, _ = import_edgelist(io.StringIO("0 1\n1 4\n"))
    assert g.n == 5


@pytest.mark.parametrize("text,lineno,fragment", [
    ("0 1\n2 2\n", 2, "self-loop"),
    ("0 1\n0 x\n", 2, "non-integer"),
    ("0 1 2\n", 1, "two node ids"),
    ("# n=3\n0 5\n", 2, "out of range"),
    ("0 1\n1 0\n", 2, "duplicate"),
    ("-1 2\n", 1, "negative"),
])
def test_format_errors_carry_line(text, lineno, fragment):
    with pytest.raises(FormatError) as exc:
        import_edgelist(io.StringIO(text))
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)
    assert f"line {lineno}" in str(exc.value)


def test_file_helpers(tmp_path):
    g, _ = generate_kout(30, 2, 1)
    path = tmp_path / "g.txt"
    write_edgelist(g, path)
    h, _ = read_edgelist(path)
    assert h == g
    assert np.array_equal(h.edges(), g.edges())
