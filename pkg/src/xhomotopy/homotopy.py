"""Homotopy of graph maps through looped-path cylinders, with certificates.

Two maps f, g : A -> B are one-step homotopic when (a, i) -> [f, g][i](a)
is a graph map A x I_1 -> B; general homotopy is the transitive closure.
Because the hom set is finite, breadth-first search decides homotopy
exactly: a length-k chain of one-step moves is the same thing as a
homotopy through A x I_k.

The searches run over raw image tuples (maps are materialized only for
returned certificates), and chains are rebuilt from BFS parent links, so
the returned chain is shortest with ties broken by canonical enumeration
order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BudgetExceeded,
    Graph,
    GraphMap,
    SignatureMismatch,
    compose,
    find_map_violation,
    identity_map,
    interval,
    product,
)
from .folds import FoldSequence, stiff_reduction
from .search import (
    assignment_to_map,
    enumerate_hom_assignments,
    enumerate_homs,
    is_isomorphic,
)

DEFAULT_HOM_BUDGET = 1_000_000

Key = tuple[str, ...]


def _require_signature(f: GraphMap, g: GraphMap) -> None:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise SignatureMismatch("maps must share domain and codomain")


def one_step_homotopic(f: GraphMap, g: GraphMap) -> bool:
    """For every edge uv of the domain: f(u)g(v) and f(v)g(u) are edges."""
    _require_signature(f, g)
    B = f.codomain
    for u, v in sorted(f.domain.edges):
        if not B.has_edge(f(u), g(v)) or not B.has_edge(f(v), g(u)):
            return False
    return True


@dataclass(frozen=True)
class HomotopyCertificate:
    """A chain of maps f_0 ... f_k realizing a homotopy through A x I_k."""

    chain: tuple[GraphMap, ...]

    def __post_init__(self) -> None:
        if not self.chain:
            raise SignatureMismatch("a homotopy chain needs at least one map")
        first = self.chain[0]
        for f in self.chain[1:]:
            if f.domain != first.domain or f.codomain != first.codomain:
                raise SignatureMismatch("all chain maps must share a signature")

    @property
    def start(self) -> GraphMap:
        return self.chain[0]

    @property
    def end(self) -> GraphMap:
        return self.chain[-1]

    def __len__(self) -> int:
        return len(self.chain) - 1

    def as_product_map(self) -> GraphMap:
        """Materialize the chain as an explicit map A x I_k -> B."""
        A = self.chain[0].domain
        k = len(self.chain) - 1
        cyl = product(A, interval(k))
        assignment = tuple(
            (f"({a},{i})", self.chain[i](a)) for a in A.vertices for i in range(k + 1)
        )
        return GraphMap(cyl, self.chain[0].codomain, assignment)

    def to_json(self) -> dict:
        return {"chain": [dict(f.assignment) for f in self.chain]}


@dataclass(frozen=True)
class HomotopyCheck:
    ok: bool
    violation: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_homotopy(cert: HomotopyCertificate) -> HomotopyCheck:
    """Re-check a certificate on the materialized product graph.

    Builds A x I_k, assigns F(a, i) = f_i(a), and verifies edge
    preservation plus both endpoint restrictions.  Never raises; a failure
    reports the violating product edge.
    """
    A = cert.chain[0].domain
    B = cert.chain[0].codomain
    k = len(cert.chain) - 1
    cyl = product(A, interval(k))
    assignment = {
        f"({a},{i})": cert.chain[i](a) for a in A.vertices for i in range(k + 1)
    }
    violation = find_map_violation(cyl, B, assignment)
    if violation is not None:
        return HomotopyCheck(False, violation)
    for a in A.vertices:
        if assignment[f"({a},0)"] != cert.start(a) or assignment[f"({a},{k})"] != cert.end(a):
            return HomotopyCheck(False, None)
    return HomotopyCheck(True, None)


def _step_candidates(A: Graph, B: Graph, key: Key) -> dict[str, tuple[str, ...]]:
    """Per-vertex images allowed for a one-step successor of the map ``key``."""
    position = {v: i for i, v in enumerate(A.sorted_vertices)}
    out: dict[str, tuple[str, ...]] = {}
    for a in A.vertices:
        nbrs = A.neighbors(a)
        if not nbrs:
            out[a] = B.sorted_vertices
            continue
        allowed: frozenset[str] | None = None
        for u in nbrs:
            cand = B.neighbors(key[position[u]])
            allowed = cand if allowed is None else allowed & cand
            if not allowed:
                break
        out[a] = tuple(sorted(allowed or ()))
    return out


def one_step_neighbors(h: GraphMap, budget: int | None = None) -> list[GraphMap]:
    """All maps one-step homotopic to h, in canonical order (h included)."""
    key = tuple(h(v) for v in h.domain.sorted_vertices)
    return enumerate_homs(
        h.domain, h.codomain, budget=budget, candidates=_step_candidates(h.domain, h.codomain, key)
    )


class _StepSearch:
    """Resumable breadth-first exploration of one-step components.

    Works on raw image tuples.  ``reach`` expands pending frontier nodes
    only until the goal is visited, so repeated queries against the same
    component (as in the inverse-candidate loop) share one traversal.
    Parent links give shortest chains; expanding neighbours in canonical
    enumeration order makes the first-found parent deterministic.
    """

    def __init__(self, A: Graph, B: Graph, budget: int | None):
        self.A = A
        self.B = B
        self.limit = DEFAULT_HOM_BUDGET if budget is None else budget
        self.parents: dict[Key, Key | None] = {}
        self.queue: list[Key] = []
        self.visited = 0

    def seed(self, start: Key) -> None:
        if start not in self.parents:
            self._spend()
            self.parents[start] = None
            self.queue.append(start)

    def reach(self, goal: Key | None = None) -> bool:
        """Expand until ``goal`` is visited (True) or the frontier empties.

        With ``goal=None`` the pending components are exhausted.
        """
        if goal is not None and goal in self.parents:
            return True
        while self.queue:
            key = self.queue.pop(0)
            candidates = _step_candidates(self.A, self.B, key)
            for nkey in enumerate_hom_assignments(
                self.A, self.B, budget=self.limit, candidates=candidates
            ):
                if nkey in self.parents:
                    continue
                self._spend()
                self.parents[nkey] = key
                self.queue.append(nkey)
            if goal is not None and goal in self.parents:
                return True
        return goal is not None and goal in self.parents

    def _spend(self) -> None:
        self.visited += 1
        if self.visited > self.limit:
            raise BudgetExceeded(self.limit, "homotopy search")

    def __contains__(self, key: Key) -> bool:
        return key in self.parents

    def chain_from_start(self, key: Key) -> list[GraphMap]:
        """Maps along the parent links, ordered start ... key."""
        keys: list[Key] = []
        cursor: Key | None = key
        while cursor is not None:
            keys.append(cursor)
            cursor = self.parents[cursor]
        keys.reverse()
        return [assignment_to_map(self.A, self.B, k) for k in keys]


def _map_key(f: GraphMap) -> Key:
    return tuple(f(v) for v in f.domain.sorted_vertices)


def are_homotopic(f: GraphMap, g: GraphMap, budget: int | None = None) -> HomotopyCertificate | None:
    """Shortest one-step chain from f to g, or None.

    Absence is definitive: the hom set is finite, so exhausting the
    component of f decides the question.
    """
    _require_signature(f, g)
    search = _StepSearch(f.domain, f.codomain, budget)
    search.seed(_map_key(f))
    if not search.reach(_map_key(g)):
        return None
    return HomotopyCertificate(tuple(search.chain_from_start(_map_key(g))))


@dataclass(frozen=True)
class EquivalenceCertificate:
    """forward with a two-sided homotopy inverse, chains included."""

    forward: GraphMap
    inverse: GraphMap
    hom_to_identity_domain: HomotopyCertificate  # inverse o forward ~ 1_A
    hom_to_identity_codomain: HomotopyCertificate  # forward o inverse ~ 1_B

    def verify(self) -> bool:
        left = self.hom_to_identity_domain
        right = self.hom_to_identity_codomain
        if left.start != compose(self.inverse, self.forward):
            return False
        if left.end != identity_map(self.forward.domain):
            return False
        if right.start != compose(self.forward, self.inverse):
            return False
        if right.end != identity_map(self.forward.codomain):
            return False
        return bool(verify_homotopy(left)) and bool(verify_homotopy(right))


def is_equivalence(f: GraphMap, budget: int | None = None) -> EquivalenceCertificate | None:
    """Brute-force search for a two-sided homotopy inverse.

    Inverse candidates run in canonical order.  The identity components of
    the two endomorphism monoids are explored at most once each (cheaper
    side first, the other lazily); every candidate is then a membership
    lookup.  Chains to the identity come from the component's parent
    links, reversed, which stays a valid certificate because the one-step
    relation is symmetric.  Absence is definitive within budget.
    """
    A, B = f.domain, f.codomain
    searches: dict[str, _StepSearch] = {}

    def component(side: str) -> _StepSearch:
        if side not in searches:
            G = A if side == "A" else B
            search = _StepSearch(G, G, budget)
            search.seed(_map_key(identity_map(G)))
            searches[side] = search
        return searches[side]

    def chain_to_identity(side: str, m: GraphMap) -> HomotopyCertificate:
        chain = component(side).chain_from_start(_map_key(m))
        chain.reverse()
        return HomotopyCertificate(tuple(chain))

    first, second = ("A", "B") if A.order <= B.order else ("B", "A")
    for g in enumerate_homs(B, A, budget=budget):
        gf = compose(g, f)
        fg = compose(f, g)
        byside = {"A": gf, "B": fg}
        if not component(first).reach(_map_key(byside[first])):
            continue
        if not component(second).reach(_map_key(byside[second])):
            continue
        return EquivalenceCertificate(f, g, chain_to_identity("A", gf), chain_to_identity("B", fg))
    return None


@dataclass(frozen=True)
class StiffComparison:
    """Evidence for graph-level equivalence: fold both sides, compare stiff."""

    left_reduction: FoldSequence
    right_reduction: FoldSequence
    stiff_iso: GraphMap | None

    @property
    def equivalent(self) -> bool:
        return self.stiff_iso is not None


def graphs_equivalent(G: Graph, H: Graph) -> StiffComparison:
    """Homotopy equivalence of graphs via isomorphism of stiff subgraphs."""
    left = stiff_reduction(G)
    right = stiff_reduction(H)
    return StiffComparison(left, right, is_isomorphic(left.result, right.result))


def homotopy_classes(A: Graph, B: Graph, budget: int | None = None) -> list[list[GraphMap]]:
    """Partition of the hom set into one-step components, canonically ordered."""
    keys = enumerate_hom_assignments(A, B, budget=budget)
    search = _StepSearch(A, B, budget)
    classes: list[list[GraphMap]] = []
    claimed: set[Key] = set()
    for key in keys:
        if key in claimed:
            continue
        before = set(search.parents)
        search.seed(key)
        search.reach(None)
        component = set(search.parents) - before
        claimed |= component
        classes.append([assignment_to_map(A, B, k) for k in sorted(component)])
    return classes
