"""Bitset-backed simple graphs and the primitive operations on them.

Vertices are the integers ``0..n-1``.  A set of vertices is a plain Python
int used as a bitmask (bit ``i`` set <=> vertex ``i`` in the set); the alias
``VertexSet`` marks that convention in signatures.  Arbitrary-precision ints
make union, difference and cardinality one machine operation per word, which
is what keeps exhaustive subset enumeration tolerable in pure Python.

Graphs are immutable: every transformation returns a new value, so graphs
may be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    """Pack vertex indices into a bitmask."""
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def members(s: VertexSet) -> list[int]:
    """Vertex indices of ``s``, ascending."""
    out = []
    while s:
        b = s & -s
        out.append(b.bit_length() - 1)
        s ^= b
    return out


def iter_members(s: VertexSet) -> Iterator[int]:
    """Iterate the vertex indices of ``s`` in ascending order."""
    while s:
        b = s & -s
        yield b.bit_length() - 1
        s ^= b


class Graph:
    """Immutable simple graph with one adjacency bitmask per vertex."""

    __slots__ = ("n", "adj", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Iterable[str] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        lab = None if labels is None else tuple(str(x) for x in labels)
        if lab is not None and len(lab) != n:
            raise ValueError("labels length must equal vertex count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "labels", lab)

    @classmethod
    def _from_adj(
        cls, adj: tuple[VertexSet, ...], labels: tuple[str, ...] | None = None
    ) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(adj))
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "labels", labels if labels is None else tuple(labels))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __delattr__(self, name):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph._from_adj, (self.adj, self.labels))

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            for v in iter_members(self.adj[u]):
                if v > u:
                    out.append((u, v))
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other) -> bool:
        # structural identity on the same indexing; labels are cosmetic
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# named constructors


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_adj(tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# connectivity


def _components(adj: tuple[VertexSet, ...], alive: VertexSet) -> list[VertexSet]:
    """Connected components of the induced subgraph on ``alive``, as masks,
    ordered by ascending minimum vertex."""
    comps = []
    rem = alive
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            acc = 0
            t = frontier
            while t:
                b = t & -t
                t ^= b
                acc |= adj[b.bit_length() - 1]
            frontier = acc & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rem ^= comp
    return comps


def components(g: Graph, removed: VertexSet = 0) -> list[VertexSet]:
    """Partition of V minus ``removed`` into maximal connected sets,
    ordered by ascending minimum vertex."""
    if removed & ~g.full_mask:
        raise ValueError("removed set out of range")
    return _components(g.adj, g.full_mask & ~removed)


def ncomponents(g: Graph, removed: VertexSet = 0) -> int:
    return len(components(g, removed))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(_components(g.adj, g.full_mask)) == 1


def distances_from(g: Graph, source: int) -> list[int | float]:
    """BFS distances from ``source``; unreachable vertices get ``math.inf``."""
    if not 0 <= source < g.n:
        raise ValueError(f"vertex {source} out of range")
    dist: list[int | float] = [math.inf] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    adj = g.adj
    while frontier:
        acc = 0
        t = frontier
        while t:
            b = t & -t
            t ^= b
            acc |= adj[b.bit_length() - 1]
        frontier = acc & ~seen
        d += 1
        for v in iter_members(frontier):
            dist[v] = d
        seen |= frontier
    return dist


def diameter(g: Graph) -> int | float:
    """Largest BFS distance over all vertex pairs; ``math.inf`` if disconnected."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        far = max(distances_from(g, v))
        if far == math.inf:
            return math.inf
        if far > best:
            best = far
    return best


# ---------------------------------------------------------------------------
# local transformations


def cliquify(g: Graph, v: int) -> Graph:
    """Add every edge between two neighbours of ``v`` (vertex set unchanged)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    nv = g.adj[v]
    adj = list(g.adj)
    for u in iter_members(nv):
        adj[u] |= nv & ~(1 << u)
    return Graph._from_adj(tuple(adj), g.labels)


def delete(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus ``s``, relabeled to a contiguous range.

    Returns the compact graph and the old->new index map for the kept
    vertices (ascending order is preserved).
    """
    if s & ~g.full_mask:
        raise ValueError("deleted set out of range")
    keep = members(g.full_mask & ~s)
    index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        row = 0
        for w in iter_members(g.adj[old]):
            if w in index:
                row |= 1 << index[w]
        adj.append(row)
    labels = tuple(g.label(old) for old in keep) if g.labels is not None else None
    return Graph._from_adj(tuple(adj), labels), index


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Block-diagonal union; the second graph's indices are shifted up by g1.n."""
    shift = g1.n
    adj = g1.adj + tuple(row << shift for row in g2.adj)
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = tuple(g1.label(i) for i in range(g1.n)) + tuple(
            g2.label(i) for i in range(g2.n)
        )
    return Graph._from_adj(adj, labels)


def cone(g: Graph, apex_label: str = "apex") -> Graph:
    """New vertex adjacent to every vertex of ``g``; the apex gets the top index."""
    n = g.n
    apex_bit = 1 << n
    adj = tuple(row | apex_bit for row in g.adj) + ((1 << n) - 1,)
    labels = None
    if g.labels is not None:
        labels = tuple(g.label(i) for i in range(n)) + (apex_label,)
    return Graph._from_adj(adj, labels)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    shift = g1.n
    m1 = (1 << g1.n) - 1
    m2 = ((1 << g2.n) - 1) << shift
    adj = tuple(r | m2 for r in g1.adj) + tuple((r << shift) | m1 for r in g2.adj)
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = tuple(g1.label(i) for i in range(g1.n)) + tuple(
            g2.label(i) for i in range(g2.n)
        )
    return Graph._from_adj(adj, labels)


# ---------------------------------------------------------------------------
# simplicial structure


def is_simplicial(g: Graph, v: int) -> bool:
    """True when the neighbourhood of ``v`` induces a clique."""
    nv = g.adj[v]
    for u in iter_members(nv):
        if nv & ~g.adj[u] != 1 << u:
            return False
    return True


def simplicial_vertices(g: Graph) -> VertexSet:
    s = 0
    for v in range(g.n):
        if is_simplicial(g, v):
            s |= 1 << v
    return s


def internal_vertex_count(g: Graph) -> int:
    """Number of non-simplicial vertices."""
    return g.n - simplicial_vertices(g).bit_count()


def is_complete(g: Graph) -> bool:
    full = g.full_mask
    return all(g.adj[v] == full ^ (1 << v) for v in range(g.n))


# ---------------------------------------------------------------------------
# block structure


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components (as vertex masks), the cut vertices, and
    whether the blocks form a clique path: every block a clique, every cut
    vertex in exactly two blocks, and the blocks linearly ordered so that
    consecutive blocks share exactly one vertex and the rest are disjoint."""

    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet
    is_clique_path: bool
    block_order: tuple[int, ...] | None


def _is_clique(g: Graph, mask: VertexSet) -> bool:
    for v in iter_members(mask):
        if mask & ~g.adj[v] != 1 << v:
            return False
    return True


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components of a connected graph."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition((1,), 0, True, (0,))

    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    stack: list[tuple[int, int]] = []
    raw_blocks: list[VertexSet] = []
    cut = 0
    timer = 0

    def dfs(u: int) -> None:
        nonlocal timer, cut
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for v in g.neighbors(u):
            if disc[v] == -1:
                parent[v] = u
                children += 1
                stack.append((u, v))
                dfs(v)
                low[u] = min(low[u], low[v])
                if (parent[u] == -1 and children > 1) or (
                    parent[u] != -1 and low[v] >= disc[u]
                ):
                    cut |= 1 << u
                if low[v] >= disc[u]:
                    blk = 0
                    while True:
                        e = stack.pop()
                        blk |= (1 << e[0]) | (1 << e[1])
                        if e == (u, v):
                            break
                    raw_blocks.append(blk)
            elif v != parent[u] and disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    dfs(0)
    blocks = tuple(sorted(raw_blocks, key=members))

    clique_path = all(_is_clique(g, b) for b in blocks)
    if clique_path:
        for c in iter_members(cut):
            if sum(1 for b in blocks if b >> c & 1) != 2:
                clique_path = False
                break
    if clique_path:
        clique_path = all((b & cut).bit_count() <= 2 for b in blocks)

    order: tuple[int, ...] | None = None
    if clique_path:
        k = len(blocks)
        if k == 1:
            order = (0,)
        else:
            # walk the block path from the lowest-indexed end block
            by_cut: dict[int, list[int]] = {}
            for i, b in enumerate(blocks):
                for c in iter_members(b & cut):
                    by_cut.setdefault(c, []).append(i)
            ends = [i for i, b in enumerate(blocks) if (b & cut).bit_count() == 1]
            walk = [min(ends)]
            used_cuts = 0
            while len(walk) < k:
                cur = blocks[walk[-1]]
                link = cur & cut & ~used_cuts
                c = link.bit_length() - 1
                used_cuts |= 1 << c
                i, j = by_cut[c]
                walk.append(j if i == walk[-1] else i)
            order = tuple(walk)

    return BlockDecomposition(blocks, cut, clique_path, order)


def is_block_graph(g: Graph) -> bool:
    """Connected graph whose biconnected components are all cliques."""
    return all(_is_clique(g, b) for b in block_decomposition(g).blocks)


def is_cm_closed(g: Graph) -> bool:
    """True when the blocks of ``g`` form a clique path (complete blocks in a
    line, consecutive ones sharing exactly one vertex)."""
    return block_decomposition(g).is_clique_path


# ---------------------------------------------------------------------------
# isomorphism (small graphs only; exists for consistency tests)


def is_isomorphic_small(g1: Graph, g2: Graph, max_n: int = 12) -> bool:
    """Exact isomorphism by degree-pruned backtracking; rejects inputs above
    ``max_n`` vertices."""
    if g1.n > max_n or g2.n > max_n:
        raise ValueError(f"isomorphism check capped at {max_n} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    if n == 0:
        return True

    def signature(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
        degs = [g.degree(v) for v in range(n)]
        return [
            (degs[v], tuple(sorted(degs[u] for u in g.neighbors(v))))
            for v in range(n)
        ]

    sig1 = signature(g1)
    sig2 = signature(g2)
    if sorted(sig1) != sorted(sig2):
        return False

    order = sorted(range(n), key=lambda v: (-sig1[v][0], sig1[v][1], v))
    mapping: list[int] = []

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        u = order[i]
        placed = 0
        need = 0
        for j in range(i):
            xb = 1 << mapping[j]
            placed |= xb
            if g1.has_edge(u, order[j]):
                need |= xb
        for x in range(n):
            if used >> x & 1:
                continue
            if sig2[x] != sig1[u]:
                continue
            if g2.adj[x] & placed == need:
                mapping.append(x)
                if extend(i + 1, used | (1 << x)):
                    return True
                mapping.pop()
        return False

    return extend(0, 0)
