"""Local-structure recognizers: claws, simplicial objects, twins, cobipartite
and linear-interval structure, chain orders, clowns, consistent sets, safe
vertices, and peculiar structure.

Path-parity checks (even pairs, safe vertices) come in two modes:

* ``"induced"`` (default): quantify over chordless paths, the definition used
  everywhere else in this package;
* ``"all"``: quantify over all simple paths, a strictly stronger condition
  kept for callers who want the conservative reading.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import (
    Budget,
    DEFAULT_BUDGET,
    Graph,
    GraphError,
    _Meter,
    _check_size,
    all_paths_between,
    complement,
    components,
    induced,
    induced_cycles,
    induced_paths_between,
)

PathMode = str  # "induced" | "all"


@dataclass(frozen=True)
class ClawWitness:
    """A center with three pairwise non-adjacent neighbors."""

    center: int
    leaves: tuple[int, int, int]

    def vertices(self) -> frozenset[int]:
        return frozenset((self.center,) + self.leaves)


@dataclass(frozen=True)
class Clown:
    """An even hole plus a hat adjacent to exactly two consecutive hole vertices.

    ``cycle`` is stored in cyclic order with the hat's two neighbors first.
    """

    hat: int
    cycle: tuple[int, ...]

    def vertices(self) -> frozenset[int]:
        return frozenset((self.hat,) + self.cycle)


@dataclass(frozen=True)
class CobipartitePartition:
    a: frozenset[int]
    b: frozenset[int]


@dataclass(frozen=True)
class LinearIntervalOrder:
    order: tuple[int, ...]


@dataclass(frozen=True)
class PeculiarParts:
    """The nine parts of a peculiar graph.

    The cobipartite pairs are (a1, b2), (a2, b3), (a3, b1); each k_i may be
    empty (the definition only says "take three cliques", and the empty clique
    satisfies every condition placed on the k_i, so both readings agree on
    verification; we accept empty).
    """

    a1: frozenset[int]
    a2: frozenset[int]
    a3: frozenset[int]
    b1: frozenset[int]
    b2: frozenset[int]
    b3: frozenset[int]
    k1: frozenset[int]
    k2: frozenset[int]
    k3: frozenset[int]

    def groups(self) -> tuple[frozenset[int], ...]:
        return (self.a1, self.a2, self.a3, self.b1, self.b2, self.b3,
                self.k1, self.k2, self.k3)


def find_claw(g: Graph) -> Optional[ClawWitness]:
    """First claw in lowest-id order, or None when g is claw-free."""
    for center in range(g.n):
        nbrs = sorted(g.adj[center])
        if len(nbrs) < 3:
            continue
        for trio in itertools.combinations(nbrs, 3):
            x, y, z = trio
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return ClawWitness(center, trio)
    return None


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.is_clique(g.adj[v]))


def is_simplicial_vertex(g: Graph, v: int) -> bool:
    return g.is_clique(g.adj[v])


def is_simplicial_edge(g: Graph, u: int, v: int) -> bool:
    """Edge uv with every neighbor of u adjacent to every neighbor of v.

    Pairs are compared outside {u, v} and a shared neighbor trivially
    satisfies its own pair.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    for x in g.adj[u] - {v}:
        for y in g.adj[v] - {u}:
            if x != y and not g.has_edge(x, y):
                return False
    return True


def is_cosimplicial_nonedge(g: Graph, u: int, v: int) -> bool:
    if u == v or g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not a non-edge")
    return is_simplicial_edge(complement(g), u, v)


def find_cosimplicial_nonedge(
    g: Graph, must_contain: Iterable[int] | None = None
) -> Optional[tuple[int, int]]:
    """Lex-first non-adjacent pair that is a simplicial edge of the complement.

    ``must_contain`` (at most two vertices) restricts the search to pairs
    containing those vertices.
    """
    need = tuple(sorted(frozenset(must_contain or ())))
    if len(need) > 2:
        raise GraphError("must_contain has more than two vertices")
    co = complement(g)
    if len(need) == 2:
        u, v = need
        if co.has_edge(u, v) and is_simplicial_edge(co, u, v):
            return (u, v)
        return None
    candidates: Iterator[tuple[int, int]]
    if len(need) == 1:
        (w,) = need
        candidates = ((min(w, x), max(w, x)) for x in sorted(co.adj[w]))
    else:
        candidates = ((u, v) for u in range(g.n) for v in sorted(co.adj[u]) if u < v)
    for u, v in candidates:
        if is_simplicial_edge(co, u, v):
            return (u, v)
    return None


def find_twins(g: Graph) -> Optional[tuple[int, int]]:
    """Lex-first adjacent pair with the same closed neighborhood."""
    closed = [g.adj[v] | {v} for v in range(g.n)]
    for u in range(g.n):
        for v in sorted(g.adj[u]):
            if u < v and closed[u] == closed[v]:
                return (u, v)
    return None


def cobipartite_partition(g: Graph) -> Optional[CobipartitePartition]:
    """Two cliques covering all vertices (a 2-coloring of the complement)."""
    co = complement(g)
    color: dict[int, int] = {}
    for comp in components(co):
        start = min(comp)
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in co.adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    a = frozenset(v for v in range(g.n) if color.get(v, 0) == 0)
    return CobipartitePartition(a, frozenset(range(g.n)) - a)


def linear_interval_order(
    g: Graph, budget: Budget | None = None
) -> Optional[LinearIntervalOrder]:
    """A numbering where every edge's index window is a clique, if one exists.

    Backtracking over the next vertex; when a vertex is placed, the window
    from its earliest placed neighbor must already be a clique, which is
    exactly the defining condition restricted to the prefix.
    """
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, "linear interval order")
    meter = _Meter(budget)
    n = g.n
    if n == 0:
        return LinearIntervalOrder(())

    def window_ok(order: list[int], v: int) -> bool:
        pos = {u: i for i, u in enumerate(order)}
        nbr_positions = [pos[u] for u in g.adj[v] if u in pos]
        if not nbr_positions:
            return True
        lo = min(nbr_positions)
        window = order[lo:] + [v]
        for i in range(len(window)):
            for j in range(i + 1, len(window)):
                if not g.has_edge(window[i], window[j]):
                    return False
        return True

    def place(order: list[int], remaining: set[int]) -> Optional[list[int]]:
        meter.tick()
        if not remaining:
            return order
        for v in sorted(remaining):
            if window_ok(order, v):
                res = place(order + [v], remaining - {v})
                if res is not None:
                    return res
        return None

    res = place([], set(range(n)))
    return None if res is None else LinearIntervalOrder(tuple(res))


def check_linear_interval_order(g: Graph, order: Iterable[int]) -> bool:
    """Direct definition check of a candidate numbering."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        return False
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(order[i], order[j]):
                if not g.is_clique(order[i : j + 1]):
                    return False
    return True


def chain_order(
    g: Graph, a: Iterable[int], b: Iterable[int]
) -> Optional[tuple[int, ...]]:
    """Order a by nested neighborhoods in b, or None when a crossing exists.

    A crossing is a pair a1, a2 with incomparable b-neighborhoods, which is
    exactly when some edges a1b1, a2b2 exist with a1b2, a2b1 both missing.
    """
    a = sorted(frozenset(a))
    b = frozenset(b)
    if b & frozenset(a):
        raise GraphError("sets must be disjoint")
    nb = {u: g.adj[u] & b for u in a}
    for u, v in itertools.combinations(a, 2):
        if not (nb[u] <= nb[v] or nb[v] <= nb[u]):
            return None
    return tuple(sorted(a, key=lambda u: (len(nb[u]), u)))


def find_clowns(g: Graph, budget: Budget | None = None) -> Iterator[Clown]:
    """All clowns: even holes plus a hat seeing exactly two consecutive vertices."""
    budget = budget or DEFAULT_BUDGET
    for hole in induced_cycles(g, budget, min_len=4, parity=0):
        k = len(hole)
        members = frozenset(hole)
        for hat in sorted(g.vertex_set() - members):
            hits = g.adj[hat] & members
            if len(hits) != 2:
                continue
            idx = sorted(hole.index(x) for x in hits)
            if idx[1] - idx[0] == 1 or (idx[0] == 0 and idx[1] == k - 1):
                if idx[1] - idx[0] == 1:
                    i = idx[0]
                else:
                    i = k - 1
                rotated = hole[i:] + hole[:i]
                if rotated[0] > rotated[1]:
                    rotated = (rotated[1], rotated[0]) + tuple(reversed(rotated[2:]))
                yield Clown(hat, rotated)


def _odd_pair_witness(
    g: Graph, u: int, v: int, budget: Budget, mode: PathMode
) -> Optional[tuple[int, ...]]:
    """An odd path between u and v, or None when {u, v} is an even pair."""
    if g.has_edge(u, v):
        return (u, v)
    paths = induced_paths_between if mode == "induced" else all_paths_between
    for p in paths(g, u, v, budget):
        if (len(p) - 1) % 2 == 1:
            return p
    return None


def is_consistent_set(
    g: Graph,
    z: Iterable[int],
    budget: Budget | None = None,
    mode: PathMode = "induced",
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether every pair of z is an even pair; on failure, a violating path."""
    budget = budget or DEFAULT_BUDGET
    for u, v in itertools.combinations(sorted(frozenset(z)), 2):
        witness = _odd_pair_witness(g, u, v, budget, mode)
        if witness is not None:
            return False, witness
    return True, None


def is_safe_vertex(
    g: Graph,
    v: int,
    budget: Budget | None = None,
    mode: PathMode = "induced",
) -> tuple[bool, Optional[tuple[Clown, tuple[int, ...]]]]:
    """Simplicial, and every qualifying path to a clown hat is odd.

    A path P to hat h qualifies when no vertex of P other than h lies in or
    has a neighbor in the clown's hole. The zero-length path counts as even,
    so a hat is never safe. Non-simplicial vertices fail with witness None.
    """
    budget = budget or DEFAULT_BUDGET
    if not is_simplicial_vertex(g, v):
        return False, None
    for clown in find_clowns(g, budget):
        h = clown.hat
        hole = frozenset(clown.cycle)
        if v == h:
            return False, (clown, (v,))
        if v in hole:
            # cannot happen for a simplicial v; defensive
            continue
        allowed = (g.vertex_set() - hole - g.neighborhood(hole)) | {h}
        if v not in allowed:
            continue
        sub, mapping = induced(g, allowed)
        back = dict(enumerate(mapping))
        pos = {old: new for new, old in enumerate(mapping)}
        paths = induced_paths_between if mode == "induced" else all_paths_between
        for p in paths(sub, pos[v], pos[h], budget):
            if (len(p) - 1) % 2 == 0:
                return False, (clown, tuple(back[x] for x in p))
    return True, None


def is_simplicial_clique(g: Graph, k: Iterable[int]) -> bool:
    """Non-empty clique whose members' outside neighborhoods are cliques."""
    k = frozenset(k)
    if not k:
        raise GraphError("simplicial clique must be non-empty")
    if not g.is_clique(k):
        raise GraphError("input is not a clique")
    return all(g.is_clique(g.adj[v] - k) for v in k)


# -- peculiar structure ------------------------------------------------------

# part indices: 0..2 = a1..a3, 3..5 = b1..b3, 6..8 = k1..k3
_FREE_PAIRS = {(0, 4), (1, 5), (2, 3)}  # (a_i, b_{i+1})


def _part_relation(p: int, q: int) -> str:
    """Required adjacency between members of parts p and q: edge/non/free."""
    if p == q:
        return "edge"
    lo, hi = min(p, q), max(p, q)
    if (lo, hi) in _FREE_PAIRS:
        return "free"
    if hi >= 6:
        if lo >= 6:  # two distinct K parts never see each other
            return "non"
        # K_i is anticomplete to a_i and b_i, complete to the other a/b parts
        side_index = lo if lo < 3 else lo - 3
        return "non" if side_index == hi - 6 else "edge"
    return "edge"


def verify_peculiar(g: Graph, parts: PeculiarParts) -> bool:
    """Literal definition check, including the 'no other edge' clause."""
    groups = parts.groups()
    allv: set[int] = set()
    for grp in groups:
        if allv & grp:
            return False
        allv |= grp
    if allv != set(range(g.n)):
        return False
    for i in range(3):
        if not groups[i] or not groups[3 + i]:
            return False
    for p in range(9):
        for q in range(p, 9):
            rel = _part_relation(p, q)
            pairs = (
                itertools.combinations(sorted(groups[p]), 2)
                if p == q
                else itertools.product(sorted(groups[p]), sorted(groups[q]))
            )
            for u, v in pairs:
                has = g.has_edge(u, v)
                if rel == "edge" and not has:
                    return False
                if rel == "non" and has:
                    return False
    for ai, bj in ((0, 4), (1, 5), (2, 3)):
        if g.is_complete_between(groups[ai], groups[bj]):
            return False
    return True


def peculiar_structure(
    g: Graph, budget: Budget | None = None
) -> Optional[PeculiarParts]:
    """Search for a peculiar 9-part assignment by label backtracking.

    Quick necessary conditions (connected, n >= 6, min degree >= 4) gate the
    exponential search; rotation symmetry is cut by pinning vertex 0 to one
    of a1, b1, k1.
    """
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, "peculiar structure search")
    if g.n < 6 or not g.is_connected():
        return None
    if min(g.degree(v) for v in range(g.n)) < 4:
        return None
    meter = _Meter(budget)
    n = g.n
    labels = [-1] * n

    def compatible(v: int, lab: int) -> bool:
        for u in range(v):
            rel = _part_relation(labels[u], lab)
            if rel == "free":
                continue
            has = g.has_edge(u, v)
            if rel == "edge" and not has:
                return False
            if rel == "non" and has:
                return False
        return True

    def final_check() -> Optional[PeculiarParts]:
        groups = [frozenset(v for v in range(n) if labels[v] == p) for p in range(9)]
        parts = PeculiarParts(*groups)
        return parts if verify_peculiar(g, parts) else None

    def assign(v: int) -> Optional[PeculiarParts]:
        meter.tick()
        if v == n:
            return final_check()
        options = (0, 3, 6) if v == 0 else range(9)
        for lab in options:
            if compatible(v, lab):
                labels[v] = lab
                res = assign(v + 1)
                if res is not None:
                    return res
                labels[v] = -1
        return None

    return assign(0)
