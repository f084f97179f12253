"""Decomposition finders and verifiers: clique cutsets, 0-joins, 1-joins,
W-joins, and maximal square-connected growth of a clique pair into a proper
coherent W-join.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    Budget,
    DEFAULT_BUDGET,
    Graph,
    GraphError,
    _Meter,
    components,
    components_within,
    delete_vertices,
)
from .recognizers import simplicial_vertices


@dataclass(frozen=True)
class CliqueCutset:
    k: frozenset[int]
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def internal(self) -> bool:
        return len(self.side_a) >= 2 and len(self.side_b) >= 2


@dataclass(frozen=True)
class OneJoin:
    v1: frozenset[int]
    v2: frozenset[int]
    a1: frozenset[int]
    a2: frozenset[int]
    rich: bool


@dataclass(frozen=True)
class WJoin:
    a: frozenset[int]
    b: frozenset[int]
    proper: bool
    coherent: bool


class HypothesisViolationError(RuntimeError):
    """Square-connected growth met a vertex it cannot absorb.

    Signals that the host graph does not satisfy the growth hypothesis
    (no outside vertex mixed on a square's side pair); carries the
    offending vertex and the witnessing square.
    """

    def __init__(self, vertex: int, square: tuple[int, ...]):
        super().__init__(f"vertex {vertex} is mixed but not absorbable (square {square})")
        self.vertex = vertex
        self.square = square


# -- minimal separators and clique cutsets -------------------------------------


def minimal_separators(g: Graph, budget: Budget | None = None) -> list[frozenset[int]]:
    """All minimal vertex separators, by close-separator generation + expansion."""
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    full = g.vertex_set()
    seen: set[frozenset[int]] = set()
    queue: list[frozenset[int]] = []

    def consider(s: frozenset[int]) -> None:
        if s and s not in seen:
            seen.add(s)
            queue.append(s)

    for v in range(g.n):
        for comp in components_within(g, full - g.adj[v] - {v}):
            consider(g.neighborhood(comp))
    i = 0
    while i < len(queue):
        s = queue[i]
        i += 1
        meter.tick()
        for x in sorted(s):
            for comp in components_within(g, full - s - g.adj[x]):
                consider(g.neighborhood(comp))
    # keep only true separators: at least two components remain without them
    return sorted(
        (s for s in seen if len(components_within(g, full - s)) >= 2),
        key=lambda s: (len(s), sorted(s)),
    )


def _split_components(comps: list[frozenset[int]]) -> tuple[frozenset[int], frozenset[int]]:
    """Group components into two anticomplete sides, internal when possible."""
    comps = sorted(comps, key=lambda c: (-len(c), sorted(c)))
    total = sum(len(c) for c in comps)
    for i, c in enumerate(comps):
        if len(c) >= 2 and total - len(c) >= 2:
            rest = frozenset().union(*(d for j, d in enumerate(comps) if j != i))
            return c, rest
    if len(comps) >= 4 and total >= 4:
        a = comps[0] | comps[1]
        rest = frozenset().union(*comps[2:])
        if len(a) >= 2 and len(rest) >= 2:
            return a, rest
    rest = frozenset().union(*comps[1:]) if len(comps) > 1 else frozenset()
    return comps[0], rest


def find_clique_cutset(
    g: Graph, budget: Budget | None = None
) -> Optional[CliqueCutset]:
    """Some clique cutset if one exists, preferring internal ones.

    Searches clique minimal separators (every clique cutset contains one);
    a disconnected graph yields the empty cutset.
    """
    if g.n == 0:
        return None
    comps = components(g)
    if len(comps) >= 2:
        side_a, side_b = _split_components(comps)
        return CliqueCutset(frozenset(), side_a, side_b)
    best: Optional[CliqueCutset] = None
    for s in minimal_separators(g, budget):
        if not g.is_clique(s):
            continue
        side_a, side_b = _split_components(components_within(g, g.vertex_set() - s))
        cut = CliqueCutset(s, side_a, side_b)
        if cut.internal:
            return cut
        if best is None:
            best = cut
    return best


def verify_clique_cutset(g: Graph, c: CliqueCutset) -> bool:
    if c.k | c.side_a | c.side_b != g.vertex_set():
        return False
    if (c.k & c.side_a) or (c.k & c.side_b) or (c.side_a & c.side_b):
        return False
    if not (c.side_a and c.side_b):
        return False
    if not g.is_clique(c.k):
        return False
    return g.is_anticomplete_between(c.side_a, c.side_b)


def find_zero_join(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A bipartition into anticomplete halves iff g is disconnected."""
    comps = components(g)
    if len(comps) < 2:
        return None
    rest = frozenset().union(*comps[1:])
    return comps[0], rest


# -- 1-joins --------------------------------------------------------------------


def _one_join_from_sides(g: Graph, v1: frozenset[int], v2: frozenset[int]) -> Optional[OneJoin]:
    a1 = frozenset(v for v in v1 if g.adj[v] & v2)
    a2 = frozenset(v for v in v2 if g.adj[v] & v1)
    if not (a1 and a2 and v1 - a1 and v2 - a2):
        return None
    if not g.is_clique(a1 | a2):
        return None
    join = OneJoin(v1, v2, a1, a2, rich=len(v1) > 2 and len(v2) > 2)
    return join if verify_one_join(g, join) else None


def find_one_join(g: Graph, budget: Budget | None = None) -> Optional[OneJoin]:
    """A 1-join if one exists; rich ones are preferred.

    Seeds on a non-adjacent pair (b1, b2) destined for the two far sides and
    propagates: everything near b1 joins side 1, a side-1 vertex non-adjacent
    to a known interface vertex of side 2 is itself far (so its neighborhood
    joins side 1), and remaining free vertices are branched on.
    """
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    n = g.n
    fallback: Optional[OneJoin] = None
    full = g.vertex_set()

    def settle(side: dict[int, int]) -> Optional[dict[int, int]]:
        """Propagate to a fixpoint; None on contradiction."""
        while True:
            s1 = {v for v, s in side.items() if s == 1}
            s2 = {v for v, s in side.items() if s == 2}
            a1 = {v for v in s1 if g.adj[v] & s2}
            a2 = {v for v in s2 if g.adj[v] & s1}
            if not g.is_clique(a1 | a2):
                return None
            changed = False
            for v in sorted(s1):
                if v in a1:
                    continue
                certain_far = v == seed1 or any(not g.has_edge(v, w) for w in a2)
                if certain_far:
                    for u in g.adj[v]:
                        if side.get(u) == 2:
                            return None
                        if u not in side:
                            side[u] = 1
                            changed = True
            for v in sorted(s2):
                if v in a2:
                    continue
                certain_far = v == seed2 or any(not g.has_edge(v, w) for w in a1)
                if certain_far:
                    for u in g.adj[v]:
                        if side.get(u) == 1:
                            return None
                        if u not in side:
                            side[u] = 2
                            changed = True
            if not changed:
                return side

    def search(side: dict[int, int]) -> Optional[OneJoin]:
        meter.tick()
        settled = settle(dict(side))
        if settled is None:
            return None
        free = sorted(full - settled.keys())
        if not free:
            v1 = frozenset(v for v, s in settled.items() if s == 1)
            return _one_join_from_sides(g, v1, full - v1)
        v = free[0]
        best_here: Optional[OneJoin] = None
        for choice in (1, 2):
            trial = dict(settled)
            trial[v] = choice
            res = search(trial)
            if res is not None:
                if res.rich:
                    return res
                if best_here is None:
                    best_here = res
        return best_here

    for seed1 in range(n):
        for seed2 in range(seed1 + 1, n):
            if g.has_edge(seed1, seed2):
                continue
            if g.adj[seed1] & g.adj[seed2]:
                continue
            res = search({seed1: 1, seed2: 2})
            if res is not None:
                if res.rich:
                    return res
                if fallback is None:
                    fallback = res
    return fallback


def verify_one_join(g: Graph, j: OneJoin) -> bool:
    if j.v1 | j.v2 != g.vertex_set() or (j.v1 & j.v2):
        return False
    if not (j.a1 <= j.v1 and j.a2 <= j.v2):
        return False
    b1, b2 = j.v1 - j.a1, j.v2 - j.a2
    if not (j.a1 and j.a2 and b1 and b2):
        return False
    if not g.is_clique(j.a1 | j.a2):
        return False
    if not g.is_anticomplete_between(b1, j.v2):
        return False
    if not g.is_anticomplete_between(b2, j.v1):
        return False
    if j.rich != (len(j.v1) > 2 and len(j.v2) > 2):
        return False
    return True


# -- W-joins ---------------------------------------------------------------------


def w_join_partition(
    g: Graph, a: frozenset[int], b: frozenset[int]
) -> Optional[tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]]:
    """(C, D, E, F) for a homogeneous pair, or None when some vertex is mixed."""
    c: set[int] = set()
    d: set[int] = set()
    e: set[int] = set()
    f: set[int] = set()
    for v in sorted(g.vertex_set() - a - b):
        to_a = a <= g.adj[v]
        anti_a = not (a & g.adj[v])
        to_b = b <= g.adj[v]
        anti_b = not (b & g.adj[v])
        if not ((to_a or anti_a) and (to_b or anti_b)):
            return None
        if to_a and anti_b:
            c.add(v)
        elif to_b and anti_a:
            d.add(v)
        elif to_a and to_b:
            e.add(v)
        else:
            f.add(v)
    return frozenset(c), frozenset(d), frozenset(e), frozenset(f)


def verify_w_join(g: Graph, w: WJoin) -> bool:
    a, b = w.a, w.b
    if not (a and b) or (a & b):
        return False
    if not (g.is_clique(a) and g.is_clique(b)):
        return False
    if g.is_complete_between(a, b) or g.is_anticomplete_between(a, b):
        return False
    parts = w_join_partition(g, a, b)
    if parts is None:
        return False
    _, _, e, _ = parts
    if w.proper:
        if not all(g.is_mixed_on(v, b) for v in a):
            return False
        if not all(g.is_mixed_on(v, a) for v in b):
            return False
    if w.coherent and not g.is_clique(e):
        return False
    return True


def _square_sides(
    g: Graph, square: Iterable[int], a_side: Iterable[int], b_side: Iterable[int]
) -> tuple[tuple[int, int], tuple[int, int]]:
    a1, a2 = sorted(a_side)
    b1, b2 = sorted(b_side)
    if frozenset(square) != frozenset((a1, a2, b1, b2)):
        raise GraphError("side pairs must partition the square")
    if not (g.has_edge(a1, a2) and g.has_edge(b1, b2)):
        raise GraphError("side pairs must be edges")
    cross = sum(
        1 for x, y in itertools.product((a1, a2), (b1, b2)) if g.has_edge(x, y)
    )
    matching = (
        g.has_edge(a1, b1) and g.has_edge(a2, b2) and not g.has_edge(a1, b2) and not g.has_edge(a2, b1)
    ) or (
        g.has_edge(a1, b2) and g.has_edge(a2, b1) and not g.has_edge(a1, b1) and not g.has_edge(a2, b2)
    )
    if cross != 2 or not matching:
        raise GraphError("the four vertices do not form a square split by the sides")
    return (a1, a2), (b1, b2)


def _mixed_square(
    g: Graph, v: int, s: set[int], t: set[int]
) -> Optional[tuple[int, int, int, int]]:
    """A square (s1, s2, t1, t2) in (S, T) with v adjacent to s1, not to s2."""
    for s1 in sorted(s & g.adj[v]):
        for s2 in sorted(s - g.adj[v]):
            for t1 in sorted((t & g.adj[s1]) - g.adj[s2]):
                for t2 in sorted((t & g.adj[s2]) - g.adj[s1]):
                    if t1 != t2:
                        return (s1, s2, t1, t2)
    return None


def grow_square_connected_pair(
    g: Graph,
    square: Iterable[int],
    a_side: Iterable[int],
    b_side: Iterable[int],
) -> WJoin:
    """Grow the seed square into a maximal square-connected pair of cliques.

    While some outside vertex is mixed on a side through a square, absorb it
    into the other side; when nothing is mixed but two common-complete
    outside vertices are non-adjacent, absorb that pair too. The result is a
    proper coherent W-join whenever the host satisfies the growth hypothesis;
    otherwise a :class:`HypothesisViolationError` pinpoints the obstruction.
    """
    (a1, a2), (b1, b2) = _square_sides(g, square, a_side, b_side)
    s: set[int] = {a1, a2}
    t: set[int] = {b1, b2}
    while True:
        outside = sorted(g.vertex_set() - s - t)
        absorbed = False
        for v in outside:
            if g.is_mixed_on(v, s):
                sq = _mixed_square(g, v, s, t)
                if sq is None:
                    raise HypothesisViolationError(v, tuple(sorted(s | t))[:4])
                if all(g.has_edge(v, w) for w in t):
                    t.add(v)
                    absorbed = True
                    break
                raise HypothesisViolationError(v, sq)
            if g.is_mixed_on(v, t):
                sq = _mixed_square(g, v, t, s)
                if sq is None:
                    raise HypothesisViolationError(v, tuple(sorted(s | t))[:4])
                if all(g.has_edge(v, w) for w in s):
                    s.add(v)
                    absorbed = True
                    break
                raise HypothesisViolationError(v, sq)
        if absorbed:
            continue
        e = [
            v
            for v in outside
            if all(g.has_edge(v, w) for w in s) and all(g.has_edge(v, w) for w in t)
        ]
        grew = False
        for e1, e2 in itertools.combinations(e, 2):
            if not g.has_edge(e1, e2):
                s.add(e1)
                t.add(e2)
                grew = True
                break
        if grew:
            continue
        break
    join = WJoin(frozenset(s), frozenset(t), proper=True, coherent=True)
    if not verify_w_join(g, join):
        raise HypothesisViolationError(min(s | t), (a1, a2, b1, b2))
    return join


# -- lifted internal clique cutsets ----------------------------------------------


def internal_clique_cutset_from_deletion(
    g: Graph, budget: Budget | None = None
) -> Optional[CliqueCutset]:
    """Delete all simplicial vertices; lift any clique cutset of the rest.

    Each simplicial vertex is assigned to the side containing its neighbors
    (its neighborhood is a clique, so it cannot straddle both). The lifted
    cutset is guaranteed internal only when g has no twins; with twins the
    lift still returns a valid cutset of g when one exists.
    """
    simp = simplicial_vertices(g)
    rest, mapping = delete_vertices(g, simp)
    cut = find_clique_cutset(rest, budget)
    if cut is None:
        return None
    back = dict(enumerate(mapping))
    k = frozenset(back[v] for v in cut.k)
    side_a = set(back[v] for v in cut.side_a)
    side_b = set(back[v] for v in cut.side_b)
    for v in sorted(simp):
        if g.adj[v] & side_a:
            side_a.add(v)
        else:
            side_b.add(v)
    return CliqueCutset(k, frozenset(side_a), frozenset(side_b))
