"""Backtracking searches over small graphs: isomorphism, homs, embeddings.

All searches are deterministic.  Domain vertices are explored in order of
decreasing degree (better pruning) but results are always returned sorted
by their assignment in lexicographic label order, so the output does not
depend on the search schedule.  Budgets count candidate prefix nodes.
"""

from __future__ import annotations

from typing import Mapping

from .core import (
    MODE_INDUCED,
    MODE_SUBGRAPH,
    BadParameter,
    BudgetExceeded,
    Embedding,
    Graph,
    GraphMap,
)

DEFAULT_SEARCH_BUDGET = 10_000_000


class _Budget:
    __slots__ = ("limit", "used", "context")

    def __init__(self, limit: int | None, context: str):
        self.limit = DEFAULT_SEARCH_BUDGET if limit is None else limit
        self.used = 0
        self.context = context

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.limit, self.context)


def _search_order(G: Graph) -> list[str]:
    return sorted(G.vertices, key=lambda v: (-G.degree(v), v))


def enumerate_hom_assignments(
    domain: Graph,
    codomain: Graph,
    budget: int | None = None,
    candidates: Mapping[str, object] | None = None,
) -> list[tuple[str, ...]]:
    """Image tuples (over sorted domain vertices) of all edge-preserving
    functions, lexicographically sorted.

    This is the raw engine behind ``enumerate_homs``; the homotopy search
    uses it directly to avoid materializing map objects.  ``candidates``
    optionally restricts the allowed images per domain vertex.  Raises
    BudgetExceeded when the number of explored candidate prefixes passes
    the budget.
    """
    meter = _Budget(budget, "hom enumeration")
    order = _search_order(domain)
    adjacency = codomain.adjacency
    base: dict[str, list[str]] = {}
    for a in order:
        if candidates is not None and a in candidates:
            allowed = sorted(set(candidates[a]) & codomain.vertex_set)  # type: ignore[arg-type]
        else:
            allowed = list(codomain.sorted_vertices)
        if domain.is_looped(a):
            allowed = [b for b in allowed if codomain.is_looped(b)]
        base[a] = allowed
    # neighbours already assigned when a vertex is reached, per search order
    placed: list[list[str]] = []
    seen: set[str] = set()
    for a in order:
        placed.append([u for u in sorted(domain.neighbors(a)) if u in seen])
        seen.add(a)

    results: list[tuple[str, ...]] = []
    assign: dict[str, str] = {}
    key_order = domain.sorted_vertices
    spend = meter.spend

    def extend(i: int) -> None:
        if i == len(order):
            results.append(tuple(assign[v] for v in key_order))
            return
        a = order[i]
        constraints = placed[i]
        for b in base[a]:
            spend()
            nb = adjacency[b]
            if any(assign[u] not in nb for u in constraints):
                continue
            assign[a] = b
            extend(i + 1)
        assign.pop(a, None)

    extend(0)
    results.sort()
    return results


def assignment_to_map(domain: Graph, codomain: Graph, key: tuple[str, ...]) -> GraphMap:
    """Rebuild a map from its image tuple over sorted domain vertices."""
    return GraphMap(domain, codomain, tuple(zip(domain.sorted_vertices, key)))


def enumerate_homs(
    domain: Graph,
    codomain: Graph,
    budget: int | None = None,
    candidates: Mapping[str, object] | None = None,
) -> list[GraphMap]:
    """All edge-preserving vertex functions, in lexicographic assignment order."""
    return [
        assignment_to_map(domain, codomain, key)
        for key in enumerate_hom_assignments(domain, codomain, budget, candidates)
    ]


def enumerate_copies(
    pattern: Graph,
    host: Graph,
    mode: str = MODE_SUBGRAPH,
    budget: int | None = None,
    collapse: bool = False,
) -> list[Embedding]:
    """All injective embeddings of the pattern, canonically ordered.

    Embeddings differing only by a pattern automorphism are distinct; with
    ``collapse`` only the first embedding per (vertex set, image edge set)
    is kept.
    """
    if mode not in (MODE_SUBGRAPH, MODE_INDUCED):
        raise BadParameter(f"unknown embedding mode {mode!r}")
    meter = _Budget(budget, "embedding enumeration")
    order = _search_order(pattern)
    results: list[dict[str, str]] = []
    assign: dict[str, str] = {}
    used: set[str] = set()

    def compatible(p: str, w: str) -> bool:
        p_loop = pattern.is_looped(p)
        w_loop = host.is_looped(w)
        if p_loop and not w_loop:
            return False
        if mode == MODE_INDUCED and not p_loop and w_loop:
            return False
        for q, x in assign.items():
            p_edge = pattern.has_edge(p, q)
            h_edge = host.has_edge(w, x)
            if p_edge and not h_edge:
                return False
            if mode == MODE_INDUCED and not p_edge and h_edge:
                return False
        return True

    def extend(i: int) -> None:
        if i == len(order):
            results.append(dict(assign))
            return
        p = order[i]
        for w in host.sorted_vertices:
            meter.spend()
            if w in used or not compatible(p, w):
                continue
            assign[p] = w
            used.add(w)
            extend(i + 1)
            del assign[p]
            used.remove(w)

    extend(0)
    key_order = pattern.sorted_vertices
    results.sort(key=lambda m: tuple(m[v] for v in key_order))
    embeddings = [Embedding(pattern, host, tuple(m.items()), mode) for m in results]
    if collapse:
        seen = set()
        kept = []
        for emb in embeddings:
            sig = (emb.image_vertex_set, emb.image_edges)
            if sig not in seen:
                seen.add(sig)
                kept.append(emb)
        embeddings = kept
    return embeddings


def _vertex_invariant(G: Graph, v: str) -> tuple:
    nbrs = G.neighbors(v)
    profile = tuple(sorted((G.degree(u), G.is_looped(u)) for u in nbrs))
    return (len(nbrs), G.is_looped(v), profile)


def is_isomorphic(G: Graph, H: Graph) -> GraphMap | None:
    """First isomorphism in canonical search order, or None.

    Backtracking prunes on (degree, loop flag, neighbour degree multiset)
    invariant classes, which keeps the search instant at desk scale.
    """
    if G.order != H.order or len(G.edges) != len(H.edges):
        return None
    inv_g = {v: _vertex_invariant(G, v) for v in G.vertices}
    inv_h = {v: _vertex_invariant(H, v) for v in H.vertices}
    if sorted(inv_g.values()) != sorted(inv_h.values()):
        return None
    classes: dict[tuple, list[str]] = {}
    for v in H.sorted_vertices:
        classes.setdefault(inv_h[v], []).append(v)
    order = sorted(G.vertices, key=lambda v: (len(classes[inv_g[v]]), -G.degree(v), v))
    assign: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        for u, x in assign.items():
            if G.has_edge(v, u) != H.has_edge(w, x):
                return False
        return True

    def extend(i: int) -> dict[str, str] | None:
        if i == len(order):
            return dict(assign)
        v = order[i]
        for w in classes[inv_g[v]]:
            if w in used or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            found = extend(i + 1)
            if found is not None:
                return found
            del assign[v]
            used.remove(w)
        return None

    witness = extend(0)
    if witness is None:
        return None
    forward = GraphMap(G, H, tuple(witness.items()))
    # equal edge counts + injectivity force the inverse to be a map too;
    # constructing it revalidates that
    GraphMap(H, G, tuple((w, v) for v, w in witness.items()))
    return forward
