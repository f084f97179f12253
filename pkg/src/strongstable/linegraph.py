"""Bipartite-multigraph machinery: recovering a bipartite root of a line
graph, harmlessness (theta / bicycle subgraph search), suitable matchings
with frozen forced edges, degree-two contraction, and detection of smooth
augmentations of line graphs.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import (
    Budget,
    DEFAULT_BUDGET,
    Graph,
    GraphError,
    Multigraph,
    _Meter,
    _check_size,
    components_within,
    from_edge_list,
    line_graph,
    shortest_path,
)


@dataclass(frozen=True)
class RootRecovery:
    """A bipartite multigraph whose line graph is exactly the input.

    ``edge_map[v]`` is the root edge corresponding to input vertex v (the
    construction makes this the identity). ``ambiguous`` flags the classical
    situations where other, non-isomorphic roots exist as well (complete
    line graphs; parallel bundles interchangeable with pendant stars).
    """

    root: Multigraph
    edge_map: tuple[int, ...]
    ambiguous: bool


@dataclass(frozen=True)
class ThetaWitness:
    ends: tuple[int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for p in self.paths:
            out.extend((min(a, b), max(a, b)) for a, b in zip(p, p[1:]))
        return out


@dataclass(frozen=True)
class BicycleWitness:
    cycle1: tuple[int, ...]
    cycle2: tuple[int, ...]
    path: tuple[int, ...]  # from a cycle1 vertex to a cycle2 vertex; (v,) when shared
    shared_vertex: bool

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for c in (self.cycle1, self.cycle2):
            out.extend(
                (min(c[i], c[(i + 1) % len(c)]), max(c[i], c[(i + 1) % len(c)]))
                for i in range(len(c))
            )
        out.extend((min(a, b), max(a, b)) for a, b in zip(self.path, self.path[1:]))
        return out


@dataclass(frozen=True)
class SuitableMatching:
    """Pairwise disjoint edges covering every vertex of degree at least two."""

    edges: frozenset[int]


@dataclass(frozen=True)
class ContractionResult:
    """Degree-two contraction: u deleted, its two neighbors identified.

    ``vertex_map[old]`` is the new id (None for the deleted vertex);
    ``edge_map[new]`` is the old id of each surviving edge.
    """

    graph: Multigraph
    vertex_map: tuple[Optional[int], ...]
    edge_map: tuple[int, ...]


@dataclass(frozen=True)
class AugmentationStructure:
    """A bipartite root plus the cobipartite augments of its line graph.

    Each augment is ``((ex, ey), x_side, y_side, cross_edges)``: ex, ey are
    the base edge ids of the contracted flat edge, the sides are input
    vertex tuples (each a clique), and cross_edges is their adjacency in the
    input graph, which is all reconstruction needs. ``line_to_input[e]``
    maps base edge e to the input vertex it stands for, or None for the
    marker edges of the augments.
    """

    base: Multigraph
    augments: tuple[
        tuple[tuple[int, int], tuple[int, ...], tuple[int, ...], tuple[tuple[int, int], ...]],
        ...,
    ]
    line_to_input: tuple[Optional[int], ...]


# -- root recovery ----------------------------------------------------------------


def recover_root(g: Graph, budget: Budget | None = None) -> Optional[RootRecovery]:
    """A bipartite multigraph root, or None when no bipartite root exists.

    Searches edge-clique covers in which every vertex lies in at most two
    cliques; every such cover is a root (root vertices are the cliques plus
    a private tip for each vertex covered once), and covers are tried until
    one yields a bipartite root. Twin classes turn into parallel bundles by
    landing in the same pair of cliques.
    """
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, "root recovery")
    if not g.is_connected():
        raise GraphError("root recovery expects a connected graph")
    meter = _Meter(budget)
    if g.n == 0:
        return RootRecovery(Multigraph.build(0, []), (), ambiguous=False)

    edges = sorted(g.edges())
    cliques: list[set[int]] = []
    membership: list[list[int]] = [[] for _ in range(g.n)]

    def covered(u: int, v: int) -> bool:
        return any(v in cliques[i] for i in membership[u])

    def try_covers(idx: int) -> Optional[RootRecovery]:
        meter.tick()
        while idx < len(edges) and covered(*edges[idx]):
            idx += 1
        if idx == len(edges):
            return _root_from_cover(g, cliques, membership)
        u, v = edges[idx]
        for w, other in ((u, v), (v, u)):
            for ci in list(membership[w]):
                cl = cliques[ci]
                if other not in cl and len(membership[other]) < 2 and all(
                    g.has_edge(other, x) for x in cl
                ):
                    cl.add(other)
                    membership[other].append(ci)
                    res = try_covers(idx)
                    if res is not None:
                        return res
                    membership[other].pop()
                    cl.remove(other)
        if len(membership[u]) < 2 and len(membership[v]) < 2:
            cliques.append({u, v})
            ci = len(cliques) - 1
            membership[u].append(ci)
            membership[v].append(ci)
            res = try_covers(idx)
            if res is not None:
                return res
            membership[u].pop()
            membership[v].pop()
            cliques.pop()
        return None

    return try_covers(0)


def _root_from_cover(
    g: Graph, cliques: list[set[int]], membership: list[list[int]]
) -> Optional[RootRecovery]:
    """Build the root for a finished cover; None when it is not bipartite."""
    pair: list[tuple[int, int]] = []
    extra = len(cliques)
    for v in range(g.n):
        ids = membership[v]
        if len(ids) == 2:
            pair.append((ids[0], ids[1]))
        elif len(ids) == 1:
            pair.append((ids[0], extra))
            extra += 1
        else:  # isolated input vertex: a free-standing edge
            pair.append((extra, extra + 1))
            extra += 2
    root = Multigraph.build(extra, pair)
    if root.bipartition() is None:
        return None
    return RootRecovery(root, tuple(range(g.n)), ambiguous=_root_ambiguous(root))


def _root_ambiguous(root: Multigraph) -> bool:
    """Patterns under which other roots produce the same line graph."""
    deg = [root.degree(v) for v in range(root.n)]
    if root.m >= 3:
        shared = set(root.edges[0])
        for e in root.edges:
            shared &= set(e)
        if shared:  # all edges through one vertex: complete line graph
            return True
    mult: dict[tuple[int, int], int] = defaultdict(int)
    for e in root.edges:
        mult[e] += 1
    for (u, v), k in mult.items():
        if k >= 2 and (deg[u] == k or deg[v] == k):
            return True
    pendant_at: dict[int, int] = defaultdict(int)
    for u, v in root.edges:
        for a, b in ((u, v), (v, u)):
            if deg[a] == 1:
                pendant_at[b] += 1
    return any(k >= 2 for k in pendant_at.values())


def multigraph_isomorphic(b1: Multigraph, b2: Multigraph) -> bool:
    """Backtracking isomorphism test respecting edge multiplicities."""
    if b1.n != b2.n or b1.m != b2.m:
        return False

    def mult_map(b: Multigraph) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for e in b.edges:
            out[e] += 1
        return out

    m1, m2 = mult_map(b1), mult_map(b2)

    def sig(b: Multigraph, mm: dict) -> dict[int, tuple]:
        out = {}
        for v in range(b.n):
            mults = sorted(k for (x, y), k in mm.items() if v in (x, y))
            out[v] = (b.degree(v), tuple(mults))
        return out

    s1, s2 = sig(b1, m1), sig(b2, m2)
    if sorted(s1.values()) != sorted(s2.values()):
        return False
    order = sorted(range(b1.n), key=lambda v: (s1[v], v))

    def norm(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u <= v else (v, u)

    def assign(i: int, mapping: dict[int, int], used: set[int]) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(b2.n):
            if w in used or s2[w] != s1[v]:
                continue
            if all(
                m1[norm(u, v)] == m2[norm(mu, w)]
                for u, mu in mapping.items()
            ):
                mapping[v] = w
                used.add(w)
                if assign(i + 1, mapping, used):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return assign(0, {}, set())


# -- theta / bicycle subgraph search -------------------------------------------------


def _subgraph_paths(
    g: Graph,
    meter: _Meter,
    start: int,
    end: int,
    banned: frozenset[int],
    parity: int | None,
    min_len: int,
) -> Iterator[tuple[int, ...]]:
    """Simple paths (chords allowed) from start to end, interiors off banned."""

    def extend(path: list[int], used: frozenset[int]) -> Iterator[tuple[int, ...]]:
        meter.tick()
        for w in sorted(g.adj[path[-1]]):
            if w == end:
                k = len(path)
                if k >= min_len and (parity is None or k % 2 == parity):
                    yield tuple(path) + (end,)
            elif w not in used and w not in banned:
                yield from extend(path + [w], used | {w})

    if start == end:
        return
    yield from extend([start], frozenset({start}))


def _subgraph_cycles(
    g: Graph,
    meter: _Meter,
    banned: frozenset[int] = frozenset(),
    through: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Even cycles of length >= 4 (chords allowed) avoiding banned vertices.

    Canonical form: smallest vertex first and second entry smaller than the
    last; in ``through`` mode the required vertex leads instead and only the
    traversal direction is deduplicated.
    """

    def run(base: int) -> Iterator[tuple[int, ...]]:
        def extend(path: list[int]) -> Iterator[tuple[int, ...]]:
            meter.tick()
            tip = path[-1]
            for w in sorted(g.adj[tip]):
                if w in banned or w in path:
                    continue
                if through is None and w < base:
                    continue
                if g.has_edge(w, base) and len(path) >= 3:
                    k = len(path) + 1
                    if k % 2 == 0 and path[1] < w:
                        yield tuple(path) + (w,)
                yield from extend(path + [w])

        for second in sorted(g.adj[base]):
            if second in banned:
                continue
            if through is None and second < base:
                continue
            yield from extend([base, second])

    if through is not None:
        if through not in banned:
            yield from run(through)
    else:
        for base in sorted(g.vertex_set() - banned):
            yield from run(base)


def _three_disjoint_paths(
    g: Graph, a: int, z: int
) -> Optional[tuple[tuple[int, ...], ...]]:
    """Three internally vertex-disjoint a-z paths via unit-capacity flow."""
    if g.has_edge(a, z):
        return None
    # node splitting: 2*v = in, 2*v + 1 = out
    cap: dict[tuple[int, int], int] = defaultdict(int)
    nbrs: dict[int, set[int]] = defaultdict(set)

    def arc(x: int, y: int, c: int) -> None:
        cap[(x, y)] += c
        nbrs[x].add(y)
        nbrs[y].add(x)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, 3 if v in (a, z) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    src, snk = 2 * a, 2 * z + 1
    flow: dict[tuple[int, int], int] = defaultdict(int)

    def residual(x: int, y: int) -> int:
        return cap[(x, y)] - flow[(x, y)] + flow[(y, x)]

    def augment() -> bool:
        prev: dict[int, int] = {src: -1}
        frontier = [src]
        while frontier:
            nxt = []
            for x in frontier:
                for y in sorted(nbrs[x]):
                    if y in prev or residual(x, y) <= 0:
                        continue
                    prev[y] = x
                    if y == snk:
                        while y != src:
                            x0 = prev[y]
                            if flow[(y, x0)] > 0:
                                flow[(y, x0)] -= 1
                            else:
                                flow[(x0, y)] += 1
                            y = x0
                        return True
                    nxt.append(y)
            frontier = nxt
        return False

    found = 0
    while found < 3 and augment():
        found += 1
    if found < 3:
        return None
    out: list[tuple[int, ...]] = []
    for _ in range(3):
        path = [a]
        flow[(2 * a, 2 * a + 1)] -= 1
        node = 2 * a + 1
        while True:
            nxt = None
            for y in sorted(nbrs[node]):
                if flow[(node, y)] > 0:
                    nxt = y
                    break
            assert nxt is not None, "flow decomposition failed"
            flow[(node, nxt)] -= 1
            path.append(nxt // 2)
            flow[(nxt, nxt + 1)] -= 1
            if nxt // 2 == z:
                break
            node = nxt + 1  # enter -> leave through the split arc
        out.append(tuple(path))
    return tuple(out)


def find_theta(b: Multigraph, budget: Budget | None = None) -> Optional[ThetaWitness]:
    """Two vertices joined by three even, internally disjoint paths of length
    at least two; a subgraph search, so chords and parallel edges are moot.

    On bipartite hosts even-ness is automatic for same-side ends and a
    unit-capacity flow decides three-disjoint-paths exactly; otherwise a
    parity-tracked exhaustive search runs under the budget.
    """
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    u = b.underlying_simple()
    branch = [v for v in range(u.n) if u.degree(v) >= 3]
    sides = b.bipartition()
    if sides is not None:
        left = sides[0]
        for a, z in itertools.combinations(sorted(branch), 2):
            meter.tick()
            if (a in left) != (z in left):
                continue
            paths = _three_disjoint_paths(u, a, z)
            if paths is not None:
                return ThetaWitness((a, z), paths)
        return None
    for a, z in itertools.combinations(sorted(branch), 2):

        def grow(i: int, acc: list[tuple[int, ...]], used: frozenset[int]):
            if i == 3:
                return ThetaWitness((a, z), tuple(acc))
            for p in _subgraph_paths(u, meter, a, z, banned=used, parity=0, min_len=2):
                res = grow(i + 1, acc + [p], used | frozenset(p[1:-1]))
                if res is not None:
                    return res
            return None

        res = grow(0, [], frozenset())
        if res is not None:
            return res
    return None


def find_bicycle(b: Multigraph, budget: Budget | None = None) -> Optional[BicycleWitness]:
    """Two vertex-disjoint even cycles joined by an even path.

    Length-zero connections (the cycles share exactly one vertex) are
    returned with ``shared_vertex=True`` and a single-vertex path.
    """
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    u = b.underlying_simple()
    sides = b.bipartition()
    left = sides[0] if sides is not None else None
    for c1 in _subgraph_cycles(u, meter):
        c1set = frozenset(c1)
        for v in sorted(c1set):
            for c2 in _subgraph_cycles(u, meter, banned=c1set - {v}, through=v):
                return BicycleWitness(c1, c2, (v,), shared_vertex=True)
        for c2 in _subgraph_cycles(u, meter, banned=c1set):
            link = _even_connector(u, meter, c1set, frozenset(c2), left)
            if link is not None:
                return BicycleWitness(c1, c2, link, shared_vertex=False)
    return None


def _even_connector(
    g: Graph,
    meter: _Meter,
    c1: frozenset[int],
    c2: frozenset[int],
    left: frozenset[int] | None,
) -> Optional[tuple[int, ...]]:
    """An even path from c1 to c2 whose interior avoids both cycles."""
    rest = g.vertex_set() - c1 - c2
    if left is not None:
        for comp in components_within(g, rest):
            ends1 = sorted(x for x in c1 if g.adj[x] & comp)
            ends2 = sorted(x for x in c2 if g.adj[x] & comp)
            for x1 in ends1:
                for x2 in ends2:
                    if (x1 in left) != (x2 in left):
                        continue
                    path = shortest_path(g, x1, {x2}, allowed=comp | {x1, x2})
                    if path is not None:
                        return path
        return None
    for x1 in sorted(c1):
        for x2 in sorted(c2):
            for p in _subgraph_paths(
                g, meter, x1, x2, banned=(c1 | c2) - {x1, x2}, parity=0, min_len=2
            ):
                return p
    return None


def is_harmless(
    b: Multigraph, budget: Budget | None = None
) -> tuple[bool, Optional[ThetaWitness | BicycleWitness]]:
    """Neither a theta nor a bicycle occurs as a subgraph."""
    w = find_theta(b, budget)
    if w is not None:
        return False, w
    w2 = find_bicycle(b, budget)
    if w2 is not None:
        return False, w2
    return True, None


# -- suitable matchings ----------------------------------------------------------


def suitable_matching(
    b: Multigraph, forced: Iterable[int] = (), budget: Budget | None = None
) -> Optional[SuitableMatching]:
    """A matching containing ``forced`` covering every degree->=2 vertex, or
    None exactly when no such matching exists (bipartite hosts).

    Alternating-path augmentation over frozen forced edges: each uncovered
    required vertex is matched along a path that either ends at an exposed
    vertex or steals coverage from a vertex not yet committed; committed
    vertices (forced endpoints and already-processed requirements) never
    lose coverage, so the greedy pass is exact.
    """
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    if b.bipartition() is None:
        raise GraphError("suitable_matching requires a bipartite host")
    forced = frozenset(forced)
    for e in forced:
        if not (0 <= e < b.m):
            raise GraphError(f"forced edge id {e} out of range")
    match: dict[int, int] = {}
    for e in sorted(forced):
        u, v = b.edges[e]
        if u in match or v in match:
            raise GraphError("forced edges do not form a matching")
        match[u] = e
        match[v] = e
    required = sorted({v for v in range(b.n) if b.degree(v) >= 2} | set(match))
    committed: set[int] = set(match)
    incident = [b.incident(v) for v in range(b.n)]

    def other(e: int, v: int) -> int:
        x, y = b.edges[e]
        return y if x == v else x

    def apply_path(parent: dict[int, tuple[int, int]], end: int, t: int) -> None:
        hops: list[tuple[int, int, int]] = []  # (parent, child, edge), end first
        cur = end
        while cur != t:
            p, e = parent[cur]
            hops.append((p, cur, e))
            cur = p
        removals = [hops[i] for i in range(1, len(hops), 2)]
        additions = [hops[i] for i in range(0, len(hops), 2)]
        for p, c, e in removals:
            if match.get(p) == e:
                del match[p]
            if match.get(c) == e:
                del match[c]
        for p, c, e in additions:
            match[p] = e
            match[c] = e

    def augment(t: int) -> bool:
        parent: dict[int, tuple[int, int]] = {}
        seen = {t}
        frontier = [t]
        while frontier:
            meter.tick()
            nxt: list[int] = []
            for v in frontier:
                for e in incident[v]:
                    if e in forced or match.get(v) == e:
                        continue
                    w = other(e, v)
                    if w in seen:
                        continue
                    seen.add(w)
                    parent[w] = (v, e)
                    if w not in match:
                        apply_path(parent, w, t)
                        return True
                    f = match[w]
                    if f in forced:
                        continue
                    x = other(f, w)
                    if x in seen:
                        continue
                    if x not in committed:
                        # steal x's coverage: flip up to w, drop f entirely
                        if match.get(x) == f:
                            del match[x]
                        if match.get(w) == f:
                            del match[w]
                        apply_path(parent, w, t)
                        return True
                    seen.add(x)
                    parent[x] = (w, f)
                    nxt.append(x)
            frontier = nxt
        return False

    for t in required:
        if t not in match and not augment(t):
            return None
        committed.add(t)
    return SuitableMatching(frozenset(match.values()))


# -- degree-two contraction --------------------------------------------------------


def contract_degree_two(b: Multigraph, u: int) -> ContractionResult:
    """Delete a degree-two vertex and identify its two distinct neighbors.

    Surviving edges keep their relative order; the merged vertex takes the
    smaller neighbor's slot.
    """
    inc = b.incident(u)
    if len(inc) != 2:
        raise GraphError(f"vertex {u} does not have degree two")
    (e1, e2) = inc
    v = other_end(b, e1, u)
    w = other_end(b, e2, u)
    if v == w:
        raise GraphError("the two edges at u are parallel; neighbors not distinct")
    lo, hi = min(v, w), max(v, w)
    vmap: list[Optional[int]] = []
    nxt = 0
    for x in range(b.n):
        if x == u:
            vmap.append(None)
        elif x == hi:
            vmap.append(None)  # patched to lo's new id below
            continue
        else:
            vmap.append(nxt)
            nxt += 1
    vmap[hi] = vmap[lo]
    new_edges: list[tuple[int, int]] = []
    emap: list[int] = []
    for i, (x, y) in enumerate(b.edges):
        if i in (e1, e2):
            continue
        new_edges.append((vmap[x], vmap[y]))
        emap.append(i)
    return ContractionResult(
        Multigraph.build(nxt, new_edges), tuple(vmap), tuple(emap)
    )


def other_end(b: Multigraph, e: int, v: int) -> int:
    x, y = b.edges[e]
    return y if x == v else x


# -- smooth augmentation detection ---------------------------------------------------


def _pattern_pair(
    g: Graph, x0: frozenset[int], y0: frozenset[int], meter: _Meter
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Close a seed pair into a homogeneous clique pair with the flat-edge
    external pattern, branching on vertices complete to both sides."""

    def close(xs: frozenset[int], ys: frozenset[int], depth: int) -> Optional[
        tuple[frozenset[int], frozenset[int]]
    ]:
        meter.tick()
        if depth > g.n:
            return None
        if xs & ys or not (g.is_clique(xs) and g.is_clique(ys)):
            return None
        both = xs | ys
        pending_both: list[int] = []
        for v in sorted(g.vertex_set() - both):
            mixed_x = g.is_mixed_on(v, xs)
            mixed_y = g.is_mixed_on(v, ys)
            if mixed_x and mixed_y:
                return None
            if mixed_x:
                return close(xs, ys | {v}, depth + 1)
            if mixed_y:
                return close(xs | {v}, ys, depth + 1)
            if xs <= g.adj[v] and ys <= g.adj[v]:
                pending_both.append(v)
        if pending_both:
            v = pending_both[0]
            for xs2, ys2 in ((xs | {v}, ys), (xs, ys | {v})):
                res = close(xs2, ys2, depth + 1)
                if res is not None:
                    return res
            return None
        return xs, ys

    return close(x0, y0, 0)


def _augment_candidates(
    g: Graph, frozen: frozenset[int], meter: _Meter
) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Candidate smooth-augment pairs, seeded from same-side edges."""
    out: list[tuple[frozenset[int], frozenset[int]]] = []
    seen: set[frozenset[frozenset[int]]] = set()
    for u, v in sorted(g.edges()):
        if u in frozen or v in frozen:
            continue
        x0 = frozenset((u, v))
        y0 = frozenset((g.adj[u] ^ g.adj[v]) - x0)
        if not y0:
            continue
        res = _pattern_pair(g, x0, y0, meter)
        if res is None:
            continue
        xs, ys = res
        if frozen & (xs | ys):
            continue
        if len(xs | ys) < 3 or len(xs | ys) >= g.n:
            continue
        if not _valid_augment(g, xs, ys):
            continue
        key = frozenset((xs, ys))
        if key in seen:
            continue
        seen.add(key)
        out.append((min(xs, ys, key=sorted), max(xs, ys, key=sorted)))
    out.sort(key=lambda p: (sorted(p[0]), sorted(p[1])))
    return out


def _valid_augment(g: Graph, xs: frozenset[int], ys: frozenset[int]) -> bool:
    """Homogeneous clique pair with the flat-edge pattern, smooth, whose
    contraction neighborhoods are cliques."""
    if g.is_complete_between(xs, ys) and len(xs) == 1 and len(ys) == 1:
        return False
    c: set[int] = set()
    d: set[int] = set()
    for v in g.vertex_set() - xs - ys:
        to_x = xs <= g.adj[v]
        anti_x = not (xs & g.adj[v])
        to_y = ys <= g.adj[v]
        anti_y = not (ys & g.adj[v])
        if not ((to_x or anti_x) and (to_y or anti_y)):
            return False
        if to_x and to_y:
            return False  # the contracted edge would not be flat
        if to_x:
            c.add(v)
        elif to_y:
            d.add(v)
    if not (g.is_clique(c) and g.is_clique(d)):
        return False
    # smooth: both sides attach to each other everywhere
    if any(not (g.adj[x] & ys) for x in xs):
        return False
    if any(not (g.adj[y] & xs) for y in ys):
        return False
    # the augment itself is a connected cobipartite graph
    sub = xs | ys
    return len(components_within(g, sub)) == 1


def _contract_pair(
    g: Graph,
    origin: list,
    xs: frozenset[int],
    ys: frozenset[int],
    aug_index: int,
) -> tuple[Graph, list]:
    """Replace (xs, ys) by a flat marker edge x*, y*."""
    keep = sorted(g.vertex_set() - xs - ys)
    pos = {v: i for i, v in enumerate(keep)}
    xstar, ystar = len(keep), len(keep) + 1
    edges: list[tuple[int, int]] = []
    for a, bb in g.edges():
        if a in pos and bb in pos:
            edges.append((pos[a], pos[bb]))
    cx = g.neighborhood(xs) - ys
    dy = g.neighborhood(ys) - xs
    edges.extend((pos[v], xstar) for v in cx)
    edges.extend((pos[v], ystar) for v in dy)
    edges.append((xstar, ystar))
    new_origin = [origin[v] for v in keep]
    new_origin.append(("x", aug_index))
    new_origin.append(("y", aug_index))
    return from_edge_list(len(keep) + 2, edges), new_origin


def detect_smooth_augmentation(
    g: Graph, budget: Budget | None = None
) -> Optional[AugmentationStructure]:
    """Express g as a smooth augmentation of the line graph of a bipartite
    multigraph, when the candidate search can see how.

    Candidate cobipartite pairs are closed up from same-side edge seeds;
    each is contracted to a flat marker edge and the remainder is handed to
    root recovery. Failure means "not recognized", never a refutation.
    """
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, "smooth augmentation detection")
    if not g.is_connected():
        raise GraphError("smooth augmentation detection expects a connected graph")
    meter = _Meter(budget)
    augments: list[tuple[frozenset[int], frozenset[int]]] = []

    def attempt(cur: Graph, origin: list) -> Optional[AugmentationStructure]:
        meter.tick()
        frozen = frozenset(i for i, o in enumerate(origin) if isinstance(o, tuple))
        try:
            rr = recover_root(cur, budget)
        except GraphError:
            rr = None
        if rr is not None:
            return _assemble(g, rr, origin, augments)
        for xs, ys in _augment_candidates(cur, frozen, meter):
            aug_index = len(augments)
            augments.append(
                (
                    frozenset(origin[v] for v in xs),
                    frozenset(origin[v] for v in ys),
                )
            )
            nxt, nxt_origin = _contract_pair(cur, origin, xs, ys, aug_index)
            res = attempt(nxt, nxt_origin)
            if res is not None:
                return res
            augments.pop()
        return None

    return attempt(g, list(range(g.n)))


def _assemble(
    g: Graph, rr: RootRecovery, origin: list, augments: list
) -> AugmentationStructure:
    line_to_input: list[Optional[int]] = [None] * len(origin)
    marker_pos: dict[tuple[str, int], int] = {}
    for i, o in enumerate(origin):
        if isinstance(o, tuple):
            marker_pos[o] = i
        else:
            line_to_input[i] = o
    packed = []
    for idx, (xs, ys) in enumerate(augments):
        ex = marker_pos[("x", idx)]
        ey = marker_pos[("y", idx)]
        xt = tuple(sorted(xs))
        yt = tuple(sorted(ys))
        cross = tuple(
            (a, bb) for a in xt for bb in yt if g.has_edge(a, bb)
        )
        packed.append(((ex, ey), xt, yt, cross))
    return AugmentationStructure(rr.root, tuple(packed), tuple(line_to_input))


def reconstruct_augmentation(structure: AugmentationStructure) -> Graph:
    """Rebuild the augmented graph from its structure, on the input's ids."""
    lg, _ = line_graph(structure.base)
    n = 0
    for o in structure.line_to_input:
        if o is not None:
            n = max(n, o + 1)
    for _, xt, yt, _cross in structure.augments:
        for v in xt + yt:
            n = max(n, v + 1)
    edges: list[tuple[int, int]] = []
    expand: dict[int, tuple[int, ...]] = {}
    for e, o in enumerate(structure.line_to_input):
        expand[e] = (o,) if o is not None else ()
    for (ex, ey), xt, yt, cross in structure.augments:
        expand[ex] = xt
        expand[ey] = yt
        edges.extend(itertools.combinations(xt, 2))
        edges.extend(itertools.combinations(yt, 2))
        edges.extend(cross)
    for e1, e2 in lg.edges():
        if structure.line_to_input[e1] is None and structure.line_to_input[e2] is None:
            marked = {e1, e2}
            if any(
                {ex, ey} == marked for (ex, ey), *_ in structure.augments
            ):
                continue  # the flat marker pair itself; cross edges already added
        for a in expand[e1]:
            for bb in expand[e2]:
                edges.append((a, bb))
    return from_edge_list(n, edges)
