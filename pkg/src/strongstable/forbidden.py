"""Witness-producing detectors for the five families whose absence defines
innocence: odd holes, antiholes of length at least six, odd prisms, handcuffs,
and eye masks.

Each detector enumerates anchor structures first (cycles for holes, the
triangle-path-triangle core for handcuffs, the K4 for eye masks), then grows
the remaining paths and cycles under induced-ness constraints. Witnesses are
re-verified from scratch before being returned, so a returned witness is
always sound; completeness at the given budget comes from the exhaustive
enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .core import (
    Budget,
    DEFAULT_BUDGET,
    Graph,
    _Meter,
    _check_size,
    complement,
    induced_cycles,
)


class ForbiddenKind(str, Enum):
    ODD_HOLE = "odd-hole"
    LONG_ANTIHOLE = "long-antihole"
    ODD_PRISM = "odd-prism"
    HANDCUFF = "handcuff"
    EYE_MASK = "eye-mask"


# detection order used by innocence_certificate (fixed for determinism)
CERTIFICATE_ORDER = (
    ForbiddenKind.ODD_HOLE,
    ForbiddenKind.LONG_ANTIHOLE,
    ForbiddenKind.ODD_PRISM,
    ForbiddenKind.EYE_MASK,
    ForbiddenKind.HANDCUFF,
)


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: ForbiddenKind
    vertices: frozenset[int]
    anatomy: dict = field(compare=False)


@dataclass(frozen=True)
class Innocent:
    """Certificate that none of the five structures occurs (at this budget)."""

    budget: Budget


# -- constrained path growth --------------------------------------------------


def _anchored_paths(
    g: Graph,
    meter: _Meter,
    start: int,
    end: int,
    blocked: frozenset[int],
    quiet: frozenset[int],
    parity: int | None = None,
    min_len: int = 1,
    allow_end_chord: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Induced paths from start to end under embedding constraints.

    Interior vertices must avoid ``blocked`` and may have no neighbors in
    ``quiet``; the endpoints are exempt from both. With ``allow_end_chord``
    the pair (start, end) may be adjacent even on longer paths, which is how
    cycles through a prescribed edge are grown.
    """
    adj = g.adj

    def extend(path: list[int], forbidden: frozenset[int]) -> Iterator[tuple[int, ...]]:
        meter.tick()
        tip = path[-1]
        for w in sorted(adj[tip]):
            if w == end:
                k = len(path)
                if k < min_len:
                    continue
                if parity is not None and k % 2 != parity:
                    continue
                if allow_end_chord:
                    if any(g.has_edge(end, p) for p in path[1:-1]):
                        continue
                elif w in forbidden:
                    continue
                yield tuple(path) + (end,)
            elif (
                w not in forbidden
                and w not in blocked
                and not (adj[w] & quiet)
            ):
                yield from extend(path + [w], forbidden | adj[tip] | {w})

    if start == end:
        return
    yield from extend([start], frozenset({start}))


# -- individual detectors ------------------------------------------------------


def _find_odd_hole(g: Graph, budget: Budget) -> Optional[ForbiddenWitness]:
    for cycle in induced_cycles(g, budget, min_len=5, parity=1):
        return ForbiddenWitness(
            ForbiddenKind.ODD_HOLE, frozenset(cycle), {"cycle": cycle}
        )
    return None


def _find_long_antihole(g: Graph, budget: Budget) -> Optional[ForbiddenWitness]:
    for cycle in induced_cycles(complement(g), budget, min_len=6):
        return ForbiddenWitness(
            ForbiddenKind.LONG_ANTIHOLE, frozenset(cycle), {"cycle": cycle}
        )
    return None


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.n):
        for b in sorted(g.adj[a]):
            if b <= a:
                continue
            for c in sorted(g.adj[a] & g.adj[b]):
                if c > b:
                    out.append((a, b, c))
    return out


def _find_odd_prism(g: Graph, budget: Budget) -> Optional[ForbiddenWitness]:
    meter = _Meter(budget)
    tris = _triangles(g)
    for ta in tris:
        for tb in tris:
            meter.tick()
            if set(ta) & set(tb) or min(tb) < min(ta):
                continue
            for perm in itertools.permutations(tb):
                # cross edges between the triangles only along matched pairs
                if any(
                    g.has_edge(ta[i], perm[j])
                    for i in range(3)
                    for j in range(3)
                    if i != j
                ):
                    continue
                base = frozenset(ta) | frozenset(tb)
                witness = _grow_prism_paths(g, meter, ta, perm, base)
                if witness is not None:
                    return witness
    return None


def _grow_prism_paths(
    g: Graph,
    meter: _Meter,
    ta: tuple[int, int, int],
    tb: tuple[int, int, int],
    base: frozenset[int],
) -> Optional[ForbiddenWitness]:
    def grow(i: int, paths: list[tuple[int, ...]], used: frozenset[int]):
        if i == 3:
            verts = base | used
            w = ForbiddenWitness(
                ForbiddenKind.ODD_PRISM,
                verts,
                {"triangles": (ta, tb), "paths": tuple(paths)},
            )
            return w if verify_witness(g, w) else None
        quiet = (base - {ta[i], tb[i]}) | (used - {ta[i], tb[i]})
        for p in _anchored_paths(
            g, meter, ta[i], tb[i], blocked=base | used, quiet=quiet, parity=1
        ):
            res = grow(i + 1, paths + [p], used | frozenset(p))
            if res is not None:
                return res
        return None

    return grow(0, [], frozenset())


def _grow_cycle_through_edge(
    g: Graph,
    meter: _Meter,
    x: int,
    y: int,
    blocked: frozenset[int],
    quiet: frozenset[int],
) -> Iterator[tuple[int, ...]]:
    """Even holes containing the edge xy whose other vertices avoid blocked
    and have no neighbors in quiet.

    Yields the cycle as the vertex sequence from x to y; the closing edge is
    xy itself, so an odd path here means an even cycle.
    """
    for p in _anchored_paths(
        g,
        meter,
        x,
        y,
        blocked=blocked,
        quiet=quiet,
        parity=1,
        min_len=3,
        allow_end_chord=True,
    ):
        yield p  # p is x..y of odd length >= 3; cycle = p + closing edge


def _find_eye_mask(g: Graph, budget: Budget) -> Optional[ForbiddenWitness]:
    meter = _Meter(budget)
    cliques4 = [
        q
        for q in itertools.combinations(range(g.n), 4)
        if g.is_clique(q)
    ]
    for quad in cliques4:
        for split in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)):
            meter.tick()
            x1, y1, x2, y2 = (quad[i] for i in split)
            core = frozenset((x1, y1, x2, y2))
            for c1path in _grow_cycle_through_edge(
                g, meter, x1, y1, blocked=core, quiet=frozenset((x2, y2))
            ):
                c1 = frozenset(c1path)
                for c2path in _grow_cycle_through_edge(
                    g, meter, x2, y2, blocked=core | c1, quiet=c1
                ):
                    w = ForbiddenWitness(
                        ForbiddenKind.EYE_MASK,
                        c1 | frozenset(c2path),
                        {"cycles": (c1path, c2path)},
                    )
                    if verify_witness(g, w):
                        return w
    return None


def _find_handcuff(g: Graph, budget: Budget) -> Optional[ForbiddenWitness]:
    meter = _Meter(budget)
    edges = list(g.edges())
    for x1, y1 in edges:
        for t1 in sorted(g.adj[x1] & g.adj[y1]):
            for x2, y2 in edges:
                if {x2, y2} & {x1, y1, t1}:
                    continue
                if g.has_edge(t1, x2) or g.has_edge(t1, y2):
                    continue
                if (
                    g.has_edge(x1, x2)
                    or g.has_edge(x1, y2)
                    or g.has_edge(y1, x2)
                    or g.has_edge(y1, y2)
                ):
                    continue
                for t2 in sorted(g.adj[x2] & g.adj[y2]):
                    meter.tick()
                    if t2 in {x1, y1, t1} or g.has_edge(t2, x1) or g.has_edge(t2, y1):
                        continue
                    core = frozenset((x1, y1, x2, y2))
                    w = _grow_handcuff(g, meter, x1, y1, t1, x2, y2, t2, core)
                    if w is not None:
                        return w
    return None


def _grow_handcuff(
    g: Graph,
    meter: _Meter,
    x1: int,
    y1: int,
    t1: int,
    x2: int,
    y2: int,
    t2: int,
    core: frozenset[int],
) -> Optional[ForbiddenWitness]:
    for link in _anchored_paths(
        g, meter, t1, t2, blocked=core, quiet=core, parity=1
    ):
        linkset = frozenset(link)
        quiet1 = (linkset | frozenset((x2, y2))) - {x1, y1}
        for c1path in _grow_cycle_through_edge(
            g, meter, x1, y1, blocked=core | linkset, quiet=quiet1
        ):
            c1 = frozenset(c1path)
            quiet2 = (linkset | c1 | frozenset((x1, y1))) - {x2, y2}
            for c2path in _grow_cycle_through_edge(
                g, meter, x2, y2, blocked=core | linkset | c1, quiet=quiet2
            ):
                w = ForbiddenWitness(
                    ForbiddenKind.HANDCUFF,
                    c1 | frozenset(c2path) | linkset,
                    {
                        "cycles": (c1path, c2path),
                        "path": link,
                        "attach": ((x1, y1), (x2, y2)),
                    },
                )
                if verify_witness(g, w):
                    return w
    return None


_DETECTORS = {
    ForbiddenKind.ODD_HOLE: _find_odd_hole,
    ForbiddenKind.LONG_ANTIHOLE: _find_long_antihole,
    ForbiddenKind.ODD_PRISM: _find_odd_prism,
    ForbiddenKind.EYE_MASK: _find_eye_mask,
    ForbiddenKind.HANDCUFF: _find_handcuff,
}


def find_structure(
    g: Graph, kind: ForbiddenKind, budget: Budget | None = None
) -> Optional[ForbiddenWitness]:
    """First witness of the requested kind, or None when none is induced in g."""
    budget = budget or DEFAULT_BUDGET
    _check_size(g, budget, f"{kind.value} search")
    return _DETECTORS[ForbiddenKind(kind)](g, budget)


def innocence_certificate(
    g: Graph, budget: Budget | None = None
) -> Innocent | ForbiddenWitness:
    """Innocent, or the first witness in the fixed kind order."""
    budget = budget or DEFAULT_BUDGET
    for kind in CERTIFICATE_ORDER:
        w = find_structure(g, kind, budget)
        if w is not None:
            return w
    return Innocent(budget)


def is_innocent(g: Graph, budget: Budget | None = None) -> bool:
    return isinstance(innocence_certificate(g, budget), Innocent)


# -- verification --------------------------------------------------------------


def _cycle_edges(cycle: tuple[int, ...]) -> set[frozenset[int]]:
    return {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    }


def _path_edges(path: tuple[int, ...]) -> set[frozenset[int]]:
    return {frozenset((path[i], path[i + 1])) for i in range(len(path) - 1)}


def _induced_edges(g: Graph, verts: frozenset[int]) -> set[frozenset[int]]:
    return {
        frozenset((u, v))
        for u, v in itertools.combinations(sorted(verts), 2)
        if g.has_edge(u, v)
    }


def verify_witness(g: Graph, w: ForbiddenWitness) -> bool:
    """Re-check the witness definition from scratch on g."""
    try:
        return _verify(g, w)
    except (KeyError, IndexError, TypeError, ValueError):
        return False


def _verify(g: Graph, w: ForbiddenWitness) -> bool:
    verts = w.vertices
    if not verts <= g.vertex_set():
        return False
    actual = _induced_edges(g, verts)
    kind = ForbiddenKind(w.kind)

    if kind == ForbiddenKind.ODD_HOLE:
        cycle = tuple(w.anatomy["cycle"])
        k = len(cycle)
        if k < 5 or k % 2 == 0 or frozenset(cycle) != verts or len(set(cycle)) != k:
            return False
        return actual == _cycle_edges(cycle)

    if kind == ForbiddenKind.LONG_ANTIHOLE:
        cycle = tuple(w.anatomy["cycle"])
        k = len(cycle)
        if k < 6 or frozenset(cycle) != verts or len(set(cycle)) != k:
            return False
        allpairs = {
            frozenset(p) for p in itertools.combinations(sorted(verts), 2)
        }
        return actual == allpairs - _cycle_edges(cycle)

    if kind == ForbiddenKind.ODD_PRISM:
        ta, tb = (tuple(t) for t in w.anatomy["triangles"])
        paths = tuple(tuple(p) for p in w.anatomy["paths"])
        if len(paths) != 3 or len(set(ta)) != 3 or len(set(tb)) != 3:
            return False
        if set(ta) & set(tb):
            return False
        expected: set[frozenset[int]] = set()
        expected |= {frozenset(e) for e in itertools.combinations(ta, 2)}
        expected |= {frozenset(e) for e in itertools.combinations(tb, 2)}
        allv = set(ta) | set(tb)
        for i, p in enumerate(paths):
            if p[0] != ta[i] or p[-1] != tb[i]:
                return False
            if (len(p) - 1) % 2 == 0 or len(p) - 1 < 1:
                return False
            interior = set(p[1:-1])
            if interior & allv:
                return False
            allv |= interior
            expected |= _path_edges(p)
        if allv != set(verts):
            return False
        return actual == expected

    if kind == ForbiddenKind.EYE_MASK:
        c1, c2 = (tuple(c) for c in w.anatomy["cycles"])
        for c in (c1, c2):
            if len(c) < 4 or len(c) % 2 == 1 or len(set(c)) != len(c):
                return False
        if set(c1) & set(c2):
            return False
        if set(c1) | set(c2) != set(verts):
            return False
        x1, y1 = c1[0], c1[-1]
        x2, y2 = c2[0], c2[-1]
        expected = _cycle_edges(c1) | _cycle_edges(c2)
        expected |= {
            frozenset((a, b)) for a in (x1, y1) for b in (x2, y2)
        }
        return actual == expected

    if kind == ForbiddenKind.HANDCUFF:
        c1, c2 = (tuple(c) for c in w.anatomy["cycles"])
        link = tuple(w.anatomy["path"])
        (x1, y1), (x2, y2) = (tuple(e) for e in w.anatomy["attach"])
        for c in (c1, c2):
            if len(c) < 4 or len(c) % 2 == 1 or len(set(c)) != len(c):
                return False
        if (len(link) - 1) % 2 == 0 or len(link) - 1 < 1:
            return False
        s1, s2, sl = set(c1), set(c2), set(link)
        if s1 & s2 or s1 & sl or s2 & sl:
            return False
        if s1 | s2 | sl != set(verts):
            return False
        if frozenset((x1, y1)) not in _cycle_edges(c1):
            return False
        if frozenset((x2, y2)) not in _cycle_edges(c2):
            return False
        expected = _cycle_edges(c1) | _cycle_edges(c2) | _path_edges(link)
        expected |= {
            frozenset((link[0], x1)),
            frozenset((link[0], y1)),
            frozenset((link[-1], x2)),
            frozenset((link[-1], y2)),
        }
        return actual == expected

    return False
