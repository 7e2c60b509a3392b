"""Graph file formats, JSON reports and DOT output.

Edge-list files hold one edge ``u v`` per line; a line with a single token
declares a vertex, ``#`` starts a comment.  Tokens are kept verbatim as
vertex labels.  DIMACS ``.col`` files (``p edge n m`` / ``e u v``) are also
read.  Every report lists vertices by external label in sorted order, and
JSON is written with sorted keys so equal inputs give equal bytes.
"""

from __future__ import annotations

import json
from typing import TextIO

from .blocks import BlockDecomposition, BlockSet
from .decision import WitnessSet
from .graph import Graph, Separation, _label_key
from .inseparability import KappaTable, pack

SCHEMA_VERSION = 1


class FormatError(ValueError):
    """Malformed graph or report input."""


# -- reading -------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    vertices, edges, seen = [], [], set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise FormatError(f"line {lineno}: self-loop at {u!r}")
            vertices.extend(tokens)
            key = (u, v) if u < v else (v, u)
            if key not in seen:
                seen.add(key)
                edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: expected 'u v' or a single vertex, got {len(tokens)} tokens")
    return Graph.from_edges(edges, vertices)


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: expected 'p edge n m'")
            n = _int(tokens[2], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before the 'p' line")
            if len(tokens) != 3:
                raise FormatError(f"line {lineno}: expected 'e u v'")
            u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: vertex outside 1..{n}")
            if u == v:
                raise FormatError(f"line {lineno}: self-loop at {u}")
            edges.add((min(u, v), max(u, v)))
        else:
            raise FormatError(f"line {lineno}: unknown record {tokens[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge n m' line")
    return Graph(n, [(u - 1, v - 1) for u, v in sorted(edges)], labels=[str(i) for i in range(1, n + 1)])


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {token!r} is not an integer") from None


def looks_like_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        tokens = raw.split()
        if tokens and tokens[0] != "c":
            return tokens[0] == "p"
    return False


def read_graph(stream: TextIO, fmt: str = "auto", name: str = "") -> Graph:
    text = stream.read()
    if fmt == "auto":
        fmt = "dimacs" if name.endswith(".col") or looks_like_dimacs(text) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise FormatError(f"unknown input format {fmt!r}")


# -- writing graphs ------------------------------------------------------------------

def emit_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n} m={g.m}"]
    edges = list(g.edges())
    order = list(dict.fromkeys(v for e in edges for v in e))
    if order != list(range(g.n)):
        # declare every vertex so re-parsing keeps the same numbering
        lines += [str(lab) for lab in g.labels]
    lines += [f"{g.labels[u]} {g.labels[v]}" for u, v in edges]
    return "\n".join(lines) + "\n"


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- JSON payloads ---------------------------------------------------------------------

def labels(g: Graph, vertices) -> list:
    return g.label_set(vertices)


def separation_json(g: Graph, s: Separation) -> dict:
    return {"a": labels(g, s.a), "b": labels(g, s.b),
            "separator": labels(g, s.separator), "order": s.order}


def blocks_json(g: Graph, blocks: BlockSet) -> list:
    return sorted((labels(g, b) for b in blocks), key=_list_key)


def _list_key(items):
    return [_label_key(x) for x in items]


def decomposition_json(g: Graph, dec: BlockDecomposition, blocks: BlockSet | None = None) -> dict:
    nodes = []
    for t in dec.nodes:
        entry = {"id": t.id, "parent": t.parent, "kind": t.kind, "size": len(t.vertices)}
        if t.children:
            entry["children"] = list(t.children)
            entry["separation"] = separation_json(g, t.separation)
        else:
            entry["leaf_set"] = labels(g, t.vertices)
            entry["block"] = blocks is not None and t.vertices in blocks
        nodes.append(entry)
    return {"k": dec.k, "step_count": dec.step_count, "adhesion": dec.adhesion,
            "width": dec.width, "nodes": nodes}


def witness_json(g: Graph, w: WitnessSet) -> list:
    return [separation_json(g, s) for s in w.separations]


def witness_from_json(g: Graph, k: int, items: list) -> WitnessSet:
    try:
        seps = [Separation(frozenset(g.index(x) for x in item["a"]),
                           frozenset(g.index(x) for x in item["b"])) for item in items]
    except (KeyError, TypeError) as err:
        raise FormatError(f"bad witness entry: {err}") from None
    return WitnessSet(k, tuple(seps))


def kappa_table_json(table: KappaTable) -> list:
    g = table.graph
    out = []
    for (x, y), (value, _) in sorted(table.entries.items()):
        out.append({"x": g.labels[x], "y": g.labels[y], "kappa": value,
                    "separation": separation_json(g, table.separation(x, y))})
    return out


def kappa_table_from_json(g: Graph, doc: dict) -> KappaTable:
    """Rebuild a κ-table saved by the ``kappa`` command for the same graph."""
    meta = doc.get("graph", {})
    if meta.get("n") != g.n or meta.get("m") != g.m:
        raise FormatError("κ-table was computed for a different graph")
    entries = {}
    try:
        for item in doc["kappa_table"]:
            x, y = g.index(item["x"]), g.index(item["y"])
            sep = Separation(frozenset(g.index(v) for v in item["separation"]["a"]),
                             frozenset(g.index(v) for v in item["separation"]["b"]))
            if x > y:
                x, y, sep = y, x, sep.reversed()
            entries[(x, y)] = (int(item["kappa"]), pack(sep))
    except (KeyError, TypeError) as err:
        raise FormatError(f"bad κ-table entry: {err}") from None
    if set(entries) != set(g.non_edges()):
        raise FormatError("κ-table does not cover exactly the non-adjacent pairs")
    return KappaTable(g, entries)


def report(command: str, g: Graph, k: int | None = None, **payload) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "graph": {"n": g.n, "m": g.m}}
    if k is not None:
        doc["k"] = k
    doc.update(payload)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- DOT -------------------------------------------------------------------------------

def _quote(text: str) -> str:
    return '"' + text + '"'


def _escape(label) -> str:
    return str(label).replace("\\", "\\\\").replace('"', '\\"')


def _braces(g: Graph, vertices) -> str:
    return "{" + ",".join(_escape(x) for x in labels(g, vertices)) + "}"


def emit_dot(dec: BlockDecomposition, blocks: BlockSet | None = None) -> str:
    """The decomposition tree as a DOT digraph rooted at node ``t0``."""
    g = dec.graph
    lines = ["digraph decomposition {", "  node [shape=box, fontname=monospace];"]
    for t in dec.nodes:
        if t.children:
            text = f"S={_braces(g, t.separation.separator)}\\norder {t.separation.order}"
            attrs = f"label={_quote(text)}"
        else:
            text = _braces(g, t.vertices)
            is_block = blocks is not None and t.vertices in blocks
            if is_block:
                text += "\\nblock"
            attrs = f"label={_quote(text)}"
            if is_block:
                attrs += ", block=true, peripheries=2"
            if t.dead:
                attrs += ", style=dashed"
        lines.append(f"  t{t.id} [{attrs}];")
    for t in dec.nodes:
        for c in t.children:
            lines.append(f"  t{t.id} -> t{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
