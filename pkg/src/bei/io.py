"""Reading and writing graphs: graph6, plain edge lists, DOT, K/P/C names."""

from __future__ import annotations

import re

from .graph import Graph, complete_graph, cycle_graph, path_graph

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return (
            chr(126)
            + chr(126)
            + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
        )
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Serialize in graph6 format: N(n) then the upper triangle of the
    adjacency matrix in column-major order, six bits per character."""
    parts = [_g6_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                parts.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        parts.append(chr((acc << (6 - nbits)) + 63))
    s = "".join(parts)
    return _G6_HEADER + s if header else s


def from_graph6(text: str) -> Graph:
    """Parse a single graph6 value (optional ``>>graph6<<`` header allowed)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for c in s:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise ValueError(f"invalid graph6 character {c!r}")
        vals.append(v)

    if vals[0] != 63:
        n = vals[0]
        i = 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ValueError("truncated graph6 vertex count")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        i = 8
    else:
        if len(vals) < 4:
            raise ValueError("truncated graph6 vertex count")
        n = 0
        for v in vals[1:4]:
            n = n << 6 | v
        i = 4

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(vals) - i != nchars:
        raise ValueError(
            f"graph6 body has {len(vals) - i} characters, expected {nchars} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for u in range(j):
            v = vals[i + k // 6]
            if v >> (5 - k % 6) & 1:
                edges.append((u, j))
            k += 1
    # padding bits must be zero for a bit-exact value
    if nbits % 6:
        pad = vals[i + nchars - 1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise ValueError("nonzero padding bits in graph6 body")
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines into a graph.

    If every token is an integer, tokens are vertex indices and the vertex
    count is ``max+1``.  Otherwise tokens are symbolic names, indexed by
    first appearance and kept as labels.  ``#`` starts a comment.
    """
    pairs: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge list line {lineno}: expected 'u v'")
        pairs.append((parts[0], parts[1], lineno))

    def as_int(tok: str) -> int | None:
        try:
            return int(tok)
        except ValueError:
            return None

    if all(as_int(a) is not None and as_int(b) is not None for a, b, _ in pairs):
        edges = [(int(a), int(b)) for a, b, _ in pairs]
        if any(u < 0 or v < 0 for u, v in edges):
            raise ValueError("negative vertex index in edge list")
        n = max((max(u, v) for u, v in edges), default=-1) + 1
        return Graph(n, edges)

    index: dict[str, int] = {}
    edges = []
    for a, b, lineno in pairs:
        for tok in (a, b):
            if tok not in index:
                index[tok] = len(index)
        if a == b:
            raise ValueError(f"edge list line {lineno}: self-loop at {a!r}")
        edges.append((index[a], index[b]))
    names = sorted(index, key=index.get)
    return Graph(len(index), edges, labels=names)


def format_edge_list(g: Graph) -> str:
    """One ``u v`` line per edge, using labels when present."""
    return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges())


# ---------------------------------------------------------------------------
# DOT


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# named graphs

_NAME_RE = re.compile(r"^([KPCkpc])(\d+)$")


def graph_from_name(token: str) -> Graph:
    """Build K<n>, P<n> or C<n> from its name (e.g. ``K4``, ``P3``, ``C5``)."""
    m = _NAME_RE.match(token.strip())
    if not m:
        raise ValueError(f"unknown graph name {token!r} (expected K<n>, P<n> or C<n>)")
    kind, num = m.group(1).upper(), int(m.group(2))
    if kind == "K":
        return complete_graph(num)
    if kind == "P":
        return path_graph(num)
    return cycle_graph(num)


def is_graph_name(token: str) -> bool:
    return bool(_NAME_RE.match(token.strip()))


# ---------------------------------------------------------------------------
# JSON graph objects


def graph_to_json(g: Graph) -> dict:
    obj: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return obj


def graph_from_json(obj: dict) -> Graph:
    return Graph(
        int(obj["n"]),
        [(int(u), int(v)) for u, v in obj.get("edges", [])],
        labels=obj.get("labels"),
    )
