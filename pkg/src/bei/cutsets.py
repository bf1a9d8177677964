"""Exhaustive cutset enumeration and the combinatorial verdicts built on it.

A subset T of vertices is a cutset when it is empty, or when removing any
single vertex of T strictly lowers the number of components of G minus T.
Equivalently, every vertex of T must touch at least two distinct components
of G minus T.  A simplicial vertex's surviving neighbours always sit inside
one clique, hence one component, so simplicial vertices never occur in any
cutset; the enumerator therefore walks only the submasks of the
non-simplicial vertex set, rejects candidates whose members keep fewer than
two outside neighbours, and re-derives component counts per survivor with a
bitmask flood fill.

Quotient-ring facts read off the cutset family: the Krull dimension of the
quotient by the binomial edge ideal is ``n + max(components - |T|)`` over
cutsets, and (for connected graphs) unmixedness says every cutset satisfies
``components == |T| + 1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .graph import (
    Graph,
    VertexSet,
    _components,
    iter_members,
    members,
    simplicial_vertices,
)

DEFAULT_BOUND = 24


class EnumerationBoundError(ValueError):
    """Raised when a graph exceeds the configured enumeration bound."""


def enumeration_bound(bound: int | None = None) -> int:
    """Effective vertex-count cap: explicit argument, else the BEI_BOUND
    environment variable, else 24."""
    if bound is not None:
        return bound
    env = os.environ.get("BEI_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"BEI_BOUND must be an integer, got {env!r}") from None
    return DEFAULT_BOUND


def is_cutset(g: Graph, t: VertexSet) -> bool:
    """Definitional check: empty, or every single removal strictly lowers
    the component count of G minus t."""
    if t & ~g.full_mask:
        raise ValueError("subset out of range")
    if t == 0:
        return True
    adj = g.adj
    alive = g.full_mask & ~t
    w = len(_components(adj, alive))
    for v in iter_members(t):
        if len(_components(adj, alive | (1 << v))) >= w:
            return False
    return True


def iter_cutsets(g: Graph, bound: int | None = None) -> Iterator[tuple[VertexSet, int]]:
    """Yield ``(cutset, component_count)`` pairs, the empty set first, the
    rest in ascending submask order over the non-simplicial vertices."""
    limit = enumeration_bound(bound)
    if g.n > limit:
        raise EnumerationBoundError(
            f"{g.n} vertices exceeds the enumeration bound {limit}"
        )
    adj = g.adj
    full = g.full_mask
    yield 0, len(_components(adj, full))
    cand = full & ~simplicial_vertices(g)
    s = 0
    while True:
        s = (s - cand) & cand
        if not s:
            return
        # cheap necessary condition: each member keeps >= 2 outside neighbours
        t = s
        ok = True
        while t:
            b = t & -t
            t ^= b
            if (adj[b.bit_length() - 1] & ~s).bit_count() < 2:
                ok = False
                break
        if not ok:
            continue
        alive = full & ~s
        comps = _components(adj, alive)
        if len(comps) < 2:
            continue
        t = s
        while t:
            b = t & -t
            t ^= b
            row = adj[b.bit_length() - 1]
            hits = 0
            for c in comps:
                if row & c:
                    hits += 1
                    if hits == 2:
                        break
            if hits < 2:
                break
        else:
            yield s, len(comps)


@dataclass(frozen=True)
class CutsetReport:
    """Full cutset family of one graph plus the verdicts derived from it.

    With a ``size_cap`` the boolean fields and the dimension are computed
    over the listed cutsets only.  For disconnected graphs unmixedness uses
    the extension ``components == |T| + components(G)``.
    """

    n: int
    connected: bool
    base_components: int
    cutsets: tuple[VertexSet, ...]
    per_cutset_components: tuple[int, ...]
    is_unmixed: bool
    is_accessible_system: bool
    oracle_dimension: int
    size_cap: int | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "connected": self.connected,
            "cutsets": [members(m) for m in self.cutsets],
            "per_cutset_components": list(self.per_cutset_components),
            "is_unmixed": self.is_unmixed,
            "is_accessible_system": self.is_accessible_system,
            "oracle_dimension": self.oracle_dimension,
            "size_cap": self.size_cap,
            "unmixedness_definition": (
                "standard" if self.connected else "disconnected-extension"
            ),
        }


def enumerate_cutsets(
    g: Graph, size_cap: int | None = None, bound: int | None = None
) -> CutsetReport:
    """All cutsets (optionally capped by size), sorted by size then by
    ascending member lists, with the derived verdicts."""
    found = []
    for mask, w in iter_cutsets(g, bound):
        if size_cap is None or mask.bit_count() <= size_cap:
            found.append((mask, w))
    found.sort(key=lambda mw: (mw[0].bit_count(), members(mw[0])))
    masks = tuple(m for m, _ in found)
    comps = tuple(w for _, w in found)
    w0 = comps[0]  # empty cutset sorts first
    unmixed = all(w == m.bit_count() + w0 for m, w in found)
    mask_set = set(masks)
    accessible = all(
        any((m ^ (1 << v)) in mask_set for v in iter_members(m))
        for m in masks
        if m
    )
    dim = g.n + max(w - m.bit_count() for m, w in found)
    return CutsetReport(
        n=g.n,
        connected=w0 <= 1,
        base_components=w0,
        cutsets=masks,
        per_cutset_components=comps,
        is_unmixed=unmixed,
        is_accessible_system=accessible,
        oracle_dimension=dim,
        size_cap=size_cap,
    )


def unmixedness_violation(
    g: Graph, bound: int | None = None
) -> tuple[VertexSet, int] | None:
    """First cutset breaking ``components == |T| + components(G)``, or None."""
    it = iter_cutsets(g, bound)
    _, w0 = next(it)
    for mask, w in it:
        if w != mask.bit_count() + w0:
            return mask, w
    return None


def is_unmixed(g: Graph, bound: int | None = None) -> bool:
    return unmixedness_violation(g, bound) is None


def is_accessible_system(g: Graph, bound: int | None = None) -> bool:
    """Every nonempty cutset contains a vertex whose removal is again a cutset."""
    masks = {m for m, _ in iter_cutsets(g, bound)}
    return all(
        any((m ^ (1 << v)) in masks for v in iter_members(m)) for m in masks if m
    )


def is_accessible(g: Graph, bound: int | None = None) -> bool:
    return is_unmixed(g, bound) and is_accessible_system(g, bound)


def dimension_oracle(g: Graph, bound: int | None = None) -> int:
    """Krull dimension of the quotient by the binomial edge ideal:
    ``n + max(components(G \\ T) - |T|)`` over all cutsets T."""
    return g.n + max(w - m.bit_count() for m, w in iter_cutsets(g, bound))


def accessibility_witness_chain(g: Graph, t: VertexSet) -> list[int] | None:
    """Removal order emptying the cutset ``t`` through successive cutsets,
    smallest removable vertex first; None when no such order exists."""
    if not is_cutset(g, t):
        raise ValueError("t is not a cutset")

    def extend(cur: VertexSet, acc: list[int]) -> list[int] | None:
        if cur == 0:
            return acc
        for v in iter_members(cur):
            nxt = cur ^ (1 << v)
            if is_cutset(g, nxt):
                res = extend(nxt, acc + [v])
                if res is not None:
                    return res
        return None

    return extend(t, [])
