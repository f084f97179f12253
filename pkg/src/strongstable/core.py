"""Immutable graph values and the exhaustive primitives everything else builds on.

Conventions used across the package:

* vertices are the integers ``0 .. n-1``;
* a vertex set is a ``frozenset[int]`` (or any iterable normalized to one);
* a path is a tuple of distinct vertices, consecutive entries adjacent; an
  *induced* path additionally has no chords;
* graphs are immutable after construction, and every derived graph carries an
  explicit id mapping so witnesses can be translated back to original ids.

All enumerative routines are exhaustive but budget-bounded: they raise
:class:`BudgetExceededError` instead of running away on adversarial inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


class BudgetExceededError(RuntimeError):
    """An exhaustive routine hit its vertex or enumeration cap."""

    def __init__(self, message: str, *, used: int | None = None):
        super().__init__(message)
        self.used = used


@dataclass(frozen=True)
class Budget:
    """Caps for exhaustive routines.

    ``max_vertices`` bounds instance size, ``max_enumerations`` bounds the
    number of enumerated objects (search-tree nodes, paths, cliques,
    candidate embeddings).
    """

    max_vertices: int = 24
    max_enumerations: int = 1_000_000

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_enumerations <= 0:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = Budget()


class _Meter:
    """Mutable enumeration counter local to one operation call."""

    __slots__ = ("limit", "used")

    def __init__(self, budget: Budget):
        self.limit = budget.max_enumerations
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(
                f"enumeration budget exceeded ({self.limit})", used=self.used
            )


def _check_size(g: "Graph", budget: Budget, what: str) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceededError(
            f"{what}: graph has {g.n} vertices, budget allows {budget.max_vertices}"
        )


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with set-based adjacency.

    Invariants: no self-loops, symmetric adjacency, vertex ids exactly
    ``0 .. n-1``. Construct through :func:`from_edge_list` (or the helpers
    below), which validate input.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    # -- elementary predicates -------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        """N(S): vertices outside S with a neighbor in S."""
        s = frozenset(s)
        out: set[int] = set()
        for v in s:
            out |= self.adj[v]
        return frozenset(out - s)

    def closed_neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        return self.neighborhood(s) | s

    def is_clique(self, s: Iterable[int]) -> bool:
        s = list(s)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(s, 2))

    def is_stable(self, s: Iterable[int]) -> bool:
        s = list(s)
        return not any(self.has_edge(u, v) for u, v in itertools.combinations(s, 2))

    def is_complete_between(self, x: Iterable[int], y: Iterable[int]) -> bool:
        """True when disjoint sets x, y have every cross pair adjacent."""
        x, y = frozenset(x), frozenset(y)
        if x & y:
            return False
        return all(y <= self.adj[u] for u in x)

    def is_anticomplete_between(self, x: Iterable[int], y: Iterable[int]) -> bool:
        x, y = frozenset(x), frozenset(y)
        if x & y:
            return False
        return all(not (y & self.adj[u]) for u in x)

    def is_mixed_on(self, v: int, x: Iterable[int]) -> bool:
        """v not in x is mixed on x: neither complete nor anticomplete to it."""
        x = frozenset(x)
        if v in x or not x:
            return False
        hits = len(x & self.adj[v])
        return 0 < hits < len(x)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on n vertices; duplicate pairs collapse, self-loops reject."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def complement(g: Graph) -> Graph:
    full = frozenset(range(g.n))
    return Graph(g.n, tuple((full - g.adj[v]) - {v} for v in range(g.n)))


def induced(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by x, plus the id mapping new -> old.

    The mapping lets witnesses found in the subgraph be translated back.
    """
    order = tuple(sorted(frozenset(x)))
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise GraphError("induced set out of range")
    pos = {old: new for new, old in enumerate(order)}
    adj = tuple(
        frozenset(pos[w] for w in g.adj[old] if w in pos) for old in order
    )
    return Graph(len(order), adj), order


def delete_vertices(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Convenience wrapper: induced subgraph on the complement of x."""
    x = frozenset(x)
    return induced(g, frozenset(range(g.n)) - x)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def components_within(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Components of the subgraph induced by s, in original vertex ids."""
    s = frozenset(s)
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in sorted(s):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v] & s:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def anticomponents(g: Graph, s: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Anticomponents of s: components in the complement, restricted to s."""
    s = frozenset(range(g.n)) if s is None else frozenset(s)
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in sorted(s):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in (s - g.adj[v]) - comp - {v}:
                comp.add(w)
                stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


# -- maximal cliques -------------------------------------------------------


def _degeneracy_order(g: Graph) -> list[int]:
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        order.append(v)
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return order


def iter_maximal_cliques(
    g: Graph, budget: Budget | None = None
) -> Iterator[frozenset[int]]:
    """Yield every inclusion-maximal clique exactly once (pivoted search).

    Outer loop follows a degeneracy order; inner recursion uses the pivot
    that maximizes candidate coverage. Order of yields is deterministic but
    not sorted; see :func:`maximal_cliques` for the sorted list form.
    """
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, "maximal clique enumeration")
    meter = _Meter(budget)
    adj = g.adj

    def expand(r: list[int], p: set[int], x: set[int]) -> Iterator[frozenset[int]]:
        meter.tick()
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), -u))
        for v in sorted(p - adj[pivot]):
            yield from expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if g.n == 0:
        return
    order = _degeneracy_order(g)
    rank = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {w for w in g.adj[v] if rank[w] > rank[v]}
        earlier = {w for w in g.adj[v] if rank[w] < rank[v]}
        yield from expand([v], later, earlier)


def maximal_cliques(g: Graph, budget: Budget | None = None) -> list[frozenset[int]]:
    """All maximal cliques, sorted by their sorted vertex tuples."""
    return sorted(iter_maximal_cliques(g, budget), key=sorted)


def is_strong_stable_set(
    g: Graph, s: Iterable[int], budget: Budget | None = None
) -> bool:
    """True iff s is stable and meets every maximal clique of g."""
    s = frozenset(s)
    if not s <= g.vertex_set():
        return False
    if not g.is_stable(s):
        return False
    for clique in iter_maximal_cliques(g, budget):
        if not (clique & s):
            return False
    return True


# -- path enumeration ------------------------------------------------------


def induced_paths_between(
    g: Graph, u: int, v: int, budget: Budget | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every induced (chordless) path from u to v, each exactly once.

    Depth-first with forbidden-neighbor pruning: once a vertex stops being
    the tip, its whole neighborhood is off limits, so no chord can ever
    appear (endpoint chords included).
    """
    if u == v:
        raise GraphError("endpoints must differ")
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    adj = g.adj

    def extend(path: list[int], forbidden: frozenset[int]) -> Iterator[tuple[int, ...]]:
        meter.tick()
        tip = path[-1]
        for w in sorted(adj[tip]):
            if w in forbidden:
                continue
            if w == v:
                yield tuple(path) + (v,)
            else:
                yield from extend(path + [w], forbidden | adj[tip] | {w})

    yield from extend([u], frozenset({u}))


def all_paths_between(
    g: Graph, u: int, v: int, budget: Budget | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every simple path from u to v (chords allowed)."""
    if u == v:
        raise GraphError("endpoints must differ")
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    adj = g.adj

    def extend(path: list[int], used: set[int]) -> Iterator[tuple[int, ...]]:
        meter.tick()
        tip = path[-1]
        for w in sorted(adj[tip]):
            if w == v:
                yield tuple(path) + (v,)
            elif w not in used:
                yield from extend(path + [w], used | {w})

    yield from extend([u], {u})


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    """Definition check: consecutive adjacent, everything else non-adjacent."""
    if len(set(path)) != len(path):
        return False
    for i, j in itertools.combinations(range(len(path)), 2):
        adjacent = g.has_edge(path[i], path[j])
        if adjacent != (j - i == 1):
            return False
    return True


def shortest_path(
    g: Graph, source: int, targets: Iterable[int], allowed: Iterable[int] | None = None
) -> Optional[tuple[int, ...]]:
    """BFS shortest path from source to any target through allowed vertices.

    Shortest paths are chordless, which is what parity arguments need.
    """
    targets = frozenset(targets)
    allowed = g.vertex_set() if allowed is None else frozenset(allowed)
    if source in targets:
        return (source,)
    prev: dict[int, int] = {source: -1}
    frontier = [source]
    while frontier:
        nxt: list[int] = []
        for v in frontier:
            for w in sorted(g.adj[v]):
                if w in prev or w not in allowed:
                    continue
                prev[w] = v
                if w in targets:
                    path = [w]
                    while path[-1] != source:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                nxt.append(w)
        frontier = nxt
    return None


# -- induced cycle enumeration ----------------------------------------------


def induced_cycles(
    g: Graph,
    budget: Budget | None = None,
    min_len: int = 4,
    max_len: int | None = None,
    parity: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield induced cycles (holes) of length >= min_len, each exactly once.

    Canonical form: the smallest vertex first, second vertex smaller than the
    last (kills rotation and reflection duplicates). ``parity`` filters by
    length mod 2 when given.
    """
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    adj = g.adj
    limit = max_len if max_len is not None else g.n

    def extend(path: list[int], base: int) -> Iterator[tuple[int, ...]]:
        meter.tick()
        tip = path[-1]
        for w in sorted(adj[tip]):
            if w <= base or w in path:
                continue
            if adj[w] & set(path[:-1]) - {base}:
                continue
            if base in adj[w]:
                # closing vertex; it can never extend (the base edge would chord)
                k = len(path) + 1
                if k >= min_len and (parity is None or k % 2 == parity):
                    if path[1] < w:
                        yield tuple(path) + (w,)
            elif len(path) + 1 < limit:
                yield from extend(path + [w], base)

    if min_len > limit:
        return
    for base in range(g.n):
        for second in sorted(adj[base]):
            if second > base:
                yield from extend([base, second], base)


def squares(g: Graph, budget: Budget | None = None) -> Iterator[tuple[int, ...]]:
    """Induced 4-cycles in canonical order."""
    return induced_cycles(g, budget, min_len=4, max_len=4)


# -- multigraphs and line graphs ---------------------------------------------


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph: parallel edges allowed, no self-loops.

    Edge ids are positional (``0 .. m-1``) and stable; endpoints are stored
    normalized with the smaller vertex first.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def build(n: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm: list[tuple[int, int]] = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.append((min(u, v), max(u, v)))
        return Multigraph(n, tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, (a, b) in enumerate(self.edges) if v in (a, b))

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def underlying_simple(self) -> Graph:
        return from_edge_list(self.n, set(self.edges))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.underlying_simple().is_connected()

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """A 2-coloring (left, right) if bipartite, else None.

        Deterministic: each component's smallest vertex goes left.
        """
        color: dict[int, int] = {}
        simple = self.underlying_simple()
        for comp in components(simple):
            start = min(comp)
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in simple.adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        left = frozenset(v for v in range(self.n) if color.get(v, 0) == 0)
        return left, frozenset(range(self.n)) - left


def line_graph(b: Multigraph) -> tuple[Graph, tuple[int, ...]]:
    """Line graph of b plus the mapping edge id -> line-graph vertex id.

    Vertex i of the result is edge i of b, so the mapping is the identity
    array; it is returned anyway so callers can stay representation-agnostic.
    Parallel edges share both endpoints and therefore become adjacent twins.
    """
    m = b.m
    adj: list[set[int]] = [set() for _ in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        a, c = b.edges[i]
        x, y = b.edges[j]
        if {a, c} & {x, y}:
            adj[i].add(j)
            adj[j].add(i)
    return Graph(m, tuple(frozenset(s) for s in adj)), tuple(range(m))


def graph_isomorphic(g: Graph, h: Graph, budget: Budget | None = None) -> bool:
    """Exact isomorphism test by backtracking with degree-signature pruning."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, "isomorphism test")
    meter = _Meter(budget)

    def sig(graph: Graph, v: int) -> tuple:
        return (graph.degree(v), tuple(sorted(graph.degree(w) for w in graph.adj[v])))

    gs = {v: sig(g, v) for v in range(g.n)}
    hs = {v: sig(h, v) for v in range(h.n)}
    if sorted(gs.values()) != sorted(hs.values()):
        return False
    order = sorted(range(g.n), key=lambda v: (gs[v], v))

    def assign(i: int, mapping: dict[int, int], used: set[int]) -> bool:
        meter.tick()
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if w in used or hs[w] != gs[v]:
                continue
            ok = True
            for u, mu in mapping.items():
                if g.has_edge(u, v) != h.has_edge(mu, w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if assign(i + 1, mapping, used):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return assign(0, {}, set())
