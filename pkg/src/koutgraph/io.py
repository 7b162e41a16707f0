"""Plain-text edge lists.

Format::

    # koutgraph edge list
    # n=5
    # k=2
    # seed=7
    0 1
    0 3
    ...

Lines starting with ``#`` are comments; ``key=value`` comments are parsed
as metadata. ``n`` is needed to recover isolated nodes; without it the node
count is one more than the largest id seen. Each other line holds one edge
as two whitespace-separated 0-based ids. Export writes ``u < v`` in
lexicographic order.
"""
from __future__ import annotations

import io
import os
from typing import IO, Mapping

import numpy as np

from .errors import FormatError
from .graph import DeletionRecord, UGraph

__all__ = ["export_edgelist", "import_edgelist", "read_edgelist", "write_edgelist",
           "deletion_metadata"]


def deletion_metadata(record: DeletionRecord) -> dict[str, str]:
    return {
        "n_original": str(record.n_original),
        "gamma": str(record.gamma),
        "deleted": ",".join(map(str, record.deleted.tolist())),
        "survivors": ",".join(map(str, record.survivors.tolist())),
    }


def export_edgelist(g: UGraph, sink: IO[str], metadata: Mapping[str, object] | None = None) -> None:
    sink.write("# koutgraph edge list\n")
    sink.write(f"# n={g.n}\n")
    for key, value in (metadata or {}).items():
        if key == "n":
            continue
        sink.write(f"# {key}={value}\n")
    e = g.edges()
    if e.size:
        buf = io.StringIO()
        np.savetxt(buf, e, fmt="%d", delimiter=" ")
        sink.write(buf.getvalue())


def import_edgelist(source: IO[str]) -> tuple[UGraph, dict[str, str]]:
    """Parse an edge list; returns the graph and its ``key=value`` metadata.

    Raises FormatError (carrying the line number) on malformed lines,
    negative or out-of-range ids, self-loops and repeated edges.
    """
    meta: dict[str, str] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, value = body.partition("=")
                meta[key.strip()] = value.strip()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected two node ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer node id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise FormatError(f"negative node id in {line!r}", lineno)
        if u == v:
            raise FormatError(f"self-loop on node {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
        if "n" in meta:
            n_decl = _declared_n(meta["n"])
            if key[1] >= n_decl:
                raise FormatError(f"node id {key[1]} out of range for n={n_decl}", lineno)
    if "n" in meta:
        n = _declared_n(meta["n"])
    else:
        n = 1 + max((v for _, v in edges), default=-1)
    # an "n=" header that appears after some edges is only checked here
    too_big = [v for _, v in edges if v >= n]
    if too_big:
        raise FormatError(f"node id {max(too_big)} out of range for n={n}")
    g = UGraph.from_edges(n, np.array(edges, dtype=np.int64).reshape(-1, 2))
    return g, meta


def _declared_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise FormatError(f"bad node count n={text!r}") from None
    if n < 0:
        raise FormatError(f"bad node count n={text!r}")
    return n


def write_edgelist(g: UGraph, path: str | os.PathLike, metadata=None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        export_edgelist(g, fh, metadata)


def read_edgelist(path: str | os.PathLike) -> tuple[UGraph, dict[str, str]]:
    with open(path, encoding="utf-8") as fh:
        return import_edgelist(fh)
