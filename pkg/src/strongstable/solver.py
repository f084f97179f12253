"""Strong-stable-set computation.

``brute_force`` is the oracle: lexicographically smallest strong stable set
containing a prescribed set, by exhaustive enumeration. ``solve`` is the
structure-guided recursion: a cascade of reductions (complete, components,
twins, simplicial removal, cobipartite, linear interval, W-join, 1-join,
line graph of a bipartite multigraph, smooth augmentation, peculiar), each
recursing on strictly smaller instances, with brute force as the flagged
last resort. Every candidate produced by a structural branch is re-verified
before being accepted, so results are sound on arbitrary inputs; the
structure theory makes the cascade hit a structural branch on claw-free
innocent inputs of the shapes it recognizes.

"None exists" is only ever reported after a completed brute-force
confirmation on the whole instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional

from .core import (
    Budget,
    DEFAULT_BUDGET,
    BudgetExceededError,
    Graph,
    GraphError,
    _Meter,
    _check_size,
    components,
    delete_vertices,
    from_edge_list,
    induced,
    induced_cycles,
    is_strong_stable_set,
    iter_maximal_cliques,
    shortest_path,
    squares,
)
from .decompose import (
    HypothesisViolationError,
    OneJoin,
    WJoin,
    find_one_join,
    grow_square_connected_pair,
    verify_w_join,
    w_join_partition,
)
from .linegraph import (
    detect_smooth_augmentation,
    recover_root,
    suitable_matching,
)
from .recognizers import (
    LinearIntervalOrder,
    PeculiarParts,
    chain_order,
    check_linear_interval_order,
    cobipartite_partition,
    find_cosimplicial_nonedge,
    find_twins,
    is_consistent_set,
    is_safe_vertex,
    linear_interval_order,
    peculiar_structure,
    simplicial_vertices,
    verify_peculiar,
)

BRUTE_FORCE_BUDGET = Budget(max_vertices=16, max_enumerations=1_000_000)


class SolveStatus(str, Enum):
    FOUND = "found"
    NONE_EXISTS = "none-exists"
    FALLBACK_FOUND = "fallback-found"
    BUDGET = "budget"


@dataclass(frozen=True)
class BranchRecord:
    branch: str
    detail: dict = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    s: Optional[frozenset[int]]
    trace: tuple[BranchRecord, ...]


class CaseNotApplicable(Exception):
    """Internal: the current branch does not apply to this instance."""


class _SubInstanceInfeasible(Exception):
    """Internal: a recursive brute force found no solution for a sub-instance."""


# -- the oracle -------------------------------------------------------------------


def brute_force(
    g: Graph, z: Iterable[int] = (), budget: Budget | None = None
) -> Optional[frozenset[int]]:
    """Lexicographically smallest strong stable set containing z, or None.

    Stable supersets of z are enumerated in sorted-tuple order and tested
    against the maximal cliques; absence is therefore verified.
    """
    budget = budget or BRUTE_FORCE_BUDGET
    _check_size(g, budget, "brute force")
    meter = _Meter(budget)
    z = frozenset(z)
    if not z <= g.vertex_set():
        raise GraphError("prescribed vertices out of range")
    if not g.is_stable(z):
        return None
    cliques = list(iter_maximal_cliques(g, budget))

    def is_strong(s: frozenset[int]) -> bool:
        return all(s & k for k in cliques)

    eligible = sorted(g.vertex_set() - z - g.neighborhood(z))

    def extend(current: frozenset[int], start: int) -> Optional[frozenset[int]]:
        meter.tick()
        if is_strong(current):
            return current
        for idx in range(start, len(eligible)):
            v = eligible[idx]
            if g.adj[v] & current:
                continue
            res = extend(current | {v}, idx + 1)
            if res is not None:
                return res
        return None

    return extend(z, 0)


# -- the gadgets -------------------------------------------------------------------


def attach_anchor_gadgets(
    g: Graph, z: Iterable[int]
) -> tuple[Graph, tuple[tuple[int, int, int, int], ...]]:
    """Attach a 3-vertex gadget (w, x, y) to every anchor z_i.

    w_i duplicates z_i (complete to N[z_i]) and additionally sees x_i; y_i
    sees z_i and x_i. Any strong stable set of the extension uses {x_i, z_i}
    or {y_i, w_i} per anchor, which is what makes recovery possible.
    """
    z = tuple(sorted(frozenset(z)))
    edges = list(g.edges())
    n = g.n
    anchors = []
    for zi in z:
        w, x, y = n, n + 1, n + 2
        n += 3
        edges.extend((w, nb) for nb in g.adj[zi])
        edges.extend([(w, zi), (w, x), (y, zi), (y, x)])
        anchors.append((zi, w, x, y))
    return from_edge_list(n, edges), tuple(anchors)


def strip_anchor_gadgets(
    g: Graph,
    anchors: tuple[tuple[int, int, int, int], ...],
    s_prime: Iterable[int],
) -> frozenset[int]:
    """Recover a strong stable set of g containing the anchors.

    Drops the x/y gadget vertices and swaps any chosen duplicate w_i back to
    its twin z_i.
    """
    s = set(s_prime)
    for zi, w, x, y in anchors:
        s.discard(x)
        s.discard(y)
        if w in s:
            s.discard(w)
            s.add(zi)
    return frozenset(s)


@dataclass(frozen=True)
class ExtensionResult:
    graph: Graph
    added: tuple[int, ...]
    clown_added: Optional[tuple[int, ...]]
    extended: Optional[frozenset[int]]


def extend_at_simplicial(
    g: Graph,
    v0: int,
    variant: int,
    m: int,
    k: int | None = None,
    solution: Iterable[int] | None = None,
) -> ExtensionResult:
    """Attach one of the three canonical structures at a simplicial vertex.

    Variant 1: a hole v0-v1-...-vm-v0 (m odd >= 3) whose second vertex v1
    duplicates v0's closed neighborhood. Variant 2: a pendant path
    v0-v1-...-vm (m even >= 2). Variant 3: a pendant path of even length m
    ending at the hat of a fresh clown on k vertices (k even >= 4).

    When ``solution`` (a strong stable set of g containing v0) is given, the
    matching extension is returned as well.
    """
    if not g.is_clique(g.adj[v0]):
        raise GraphError(f"vertex {v0} is not simplicial")
    if variant == 1:
        if m < 3 or m % 2 == 0:
            raise GraphError("variant 1 needs odd m >= 3")
    elif variant in (2, 3):
        if m < 2 or m % 2 == 1:
            raise GraphError(f"variant {variant} needs even m >= 2")
        if variant == 3 and (k is None or k < 4 or k % 2 == 1):
            raise GraphError("variant 3 needs even k >= 4")
    else:
        raise GraphError("variant must be 1, 2, or 3")

    n = g.n
    edges = list(g.edges())
    added = tuple(range(n, n + m))  # v1 .. vm

    def v(t: int) -> int:  # v_t, 1-based
        return added[t - 1]

    edges.append((v0, v(1)))
    edges.extend((v(t), v(t + 1)) for t in range(1, m))
    clown = None
    if variant == 1:
        edges.append((v(m), v0))
        edges.extend((v(1), nb) for nb in g.adj[v0])
    elif variant == 3:
        c0 = n + m
        hole = tuple(range(n + m + 1, n + m + 1 + k))
        clown = (c0,) + hole
        edges.append((v(m), c0))
        edges.extend([(c0, hole[0]), (c0, hole[1])])
        edges.extend((hole[i], hole[(i + 1) % k]) for i in range(k))
    total = n + m + (1 + k if variant == 3 else 0)
    g2 = from_edge_list(total, edges)

    extended = None
    if solution is not None:
        s = frozenset(solution)
        if v0 not in s:
            raise GraphError("the given solution must contain the simplicial vertex")
        if variant == 1:
            extra = {v(t) for t in range(2, m, 2)}
        elif variant == 2:
            extra = {v(t) for t in range(2, m + 1, 2)}
        else:
            extra = {v(t) for t in range(2, m + 1, 2)}
            extra |= {clown[i] for i in range(2, k + 1, 2)}  # c2, c4, ..., ck
        extended = s | extra
    return ExtensionResult(g2, added, clown, extended)


# -- closed-form cases ---------------------------------------------------------------


def solve_cobipartite(
    g: Graph, z: Iterable[int] = (), budget: Budget | None = None
) -> frozenset[int]:
    """A two-vertex (or smaller) strong stable set of a cobipartite graph
    containing z, via a cosimplicial non-edge.

    Empty z takes any cosimplicial non-edge; a two-vertex z must itself be
    one; a single safe z takes the far endpoint with the largest nested
    neighborhood on the non-neighbor side.
    """
    z = frozenset(z)
    part = cobipartite_partition(g)
    if part is None:
        raise GraphError("graph is not cobipartite")
    if g.is_complete():
        if len(z) > 1:
            raise GraphError("prescribed set is not stable")
        return z if z else frozenset({0})
    if len(z) > 2:
        raise GraphError("a cobipartite graph has no stable set of size three")
    if not z:
        pair = find_cosimplicial_nonedge(g)
        if pair is None:
            raise GraphError("no cosimplicial non-edge; host out of scope")
        return frozenset(pair)
    if len(z) == 2:
        u, v = sorted(z)
        if g.has_edge(u, v):
            raise GraphError("prescribed set is not stable")
        pair = find_cosimplicial_nonedge(g, (u, v))
        if pair is None:
            raise GraphError("prescribed pair is not a cosimplicial non-edge")
        return z
    (a,) = z
    if g.degree(a) == g.n - 1:
        return frozenset({a})
    aside, bside = (part.a, part.b) if a in part.a else (part.b, part.a)
    b2 = bside - g.adj[a]
    order = chain_order(g, b2, aside)
    if order is None:
        raise GraphError("crossing squares on the far side; host out of scope")
    b = order[-1]
    pair = find_cosimplicial_nonedge(g, (a, b))
    if pair is None:
        raise GraphError("chain maximum is not cosimplicial; host out of scope")
    return frozenset({a, b})


def solve_peculiar(g: Graph, parts: PeculiarParts) -> frozenset[int]:
    """A two-vertex strong stable set of a peculiar graph with no long
    antihole: a cosimplicial non-edge across the first cobipartite pair."""
    if not verify_peculiar(g, parts):
        raise GraphError("parts do not describe a peculiar structure of g")
    sub, mapping = induced(g, parts.a1 | parts.b2)
    pair = find_cosimplicial_nonedge(sub)
    if pair is None:
        raise GraphError("no cosimplicial non-edge across the pair; host out of scope")
    back = dict(enumerate(mapping))
    return frozenset({back[pair[0]], back[pair[1]]})


def solve_linear_interval(
    g: Graph,
    z: Iterable[int],
    order: LinearIntervalOrder | Iterable[int],
    budget: Budget | None = None,
) -> frozenset[int]:
    """Strong stable set containing z for a linear interval graph.

    Follows the ordering: ends outside z are peeled off one at a time; with
    both ends prescribed, the prefix up to the last neighbor of the second
    vertex is cut away, the prescribed end is transplanted onto the cut
    point, and the first vertex rejoins the recursive solution.
    """
    budget = budget or DEFAULT_BUDGET
    meter = _Meter(budget)
    seq = tuple(order.order if isinstance(order, LinearIntervalOrder) else order)
    if not check_linear_interval_order(g, seq):
        raise GraphError("not a valid linear interval order")
    z = frozenset(z)
    if not g.is_stable(z):
        raise GraphError("prescribed set is not stable")

    def rec(active: tuple[int, ...], zz: frozenset[int]) -> frozenset[int]:
        meter.tick()
        if not active:
            return frozenset()
        if len(active) == 1:
            return frozenset(active)
        aset = frozenset(active)
        # per-component split keeps the order valid on each part
        comp = _component_of(g, active[0], aset)
        if comp != aset:
            left = rec(tuple(v for v in active if v in comp), zz & comp)
            right = rec(tuple(v for v in active if v not in comp), zz - comp)
            return left | right
        if all(g.adj[u] >= aset - {u} for u in active):  # complete
            return zz if zz else frozenset({active[0]})
        first, last = active[0], active[-1]
        if first not in zz:
            s = rec(active[1:], zz)
            if is_strong_set_of_induced(g, aset, s):
                return s
            return s | {first}
        if last not in zz:
            s = rec(active[:-1], zz)
            if is_strong_set_of_induced(g, aset, s):
                return s
            return s | {last}
        second = active[1]
        idx = max(i for i, u in enumerate(active) if u in g.adj[second] or u == second)
        v_i = active[idx]
        if g.has_edge(first, v_i):
            # first and second are twins within the active set; drop second
            s = rec(active[:1] + active[2:], zz)
            return s
        if zz & set(active[1:idx]):
            raise GraphError("prescribed vertex inside the cut prefix; host out of scope")
        tail = active[idx:]
        s = rec(tail, (zz - {first}) | {v_i})
        return s | {first}

    res = rec(seq, z)
    if not is_strong_set_of_induced(g, frozenset(seq), res, budget):
        raise GraphError("construction failed; host out of scope")
    if not z <= res:
        raise GraphError("construction lost a prescribed vertex; host out of scope")
    return res


def _component_of(g: Graph, start: int, within: frozenset[int]) -> frozenset[int]:
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v] & within:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return frozenset(comp)


def is_strong_set_of_induced(
    g: Graph, active: frozenset[int], s: frozenset[int], budget: Budget | None = None
) -> bool:
    sub, mapping = induced(g, active)
    pos = {old: new for new, old in enumerate(mapping)}
    if not s <= active:
        return False
    return is_strong_stable_set(sub, frozenset(pos[v] for v in s), budget)


# -- recombination cases ----------------------------------------------------------


SubSolver = Callable[[Graph, frozenset[int]], frozenset[int]]


def _with_apex(
    g: Graph, keep: frozenset[int], complete_to: frozenset[int], pendant: bool = False
) -> tuple[Graph, tuple[int, ...], int, Optional[int]]:
    """Induced subgraph on ``keep`` plus an apex complete to ``complete_to``
    (given in g's ids), optionally with a pendant hanging off the apex.

    Returns (graph, mapping new->old for the kept part, apex id, pendant id).
    """
    sub, mapping = induced(g, keep)
    pos = {old: new for new, old in enumerate(mapping)}
    n = sub.n
    edges = list(sub.edges())
    apex = n
    edges.extend((apex, pos[v]) for v in complete_to)
    pend = None
    if pendant:
        pend = n + 1
        edges.append((apex, pend))
    return from_edge_list(n + (2 if pendant else 1), edges), mapping, apex, pend


def combine_w_join(
    g: Graph, w: WJoin, z: Iterable[int], subsolver: SubSolver
) -> frozenset[int]:
    """Strong stable set through a proper coherent W-join.

    The two mixed cliques are covered by a cosimplicial non-edge across
    them; the attachment sides are solved independently with an apex vertex
    standing in for the join, and the far side is split by the absence of
    attachment-to-attachment paths.
    """
    z = frozenset(z)
    if not (w.proper and w.coherent) or not verify_w_join(g, w):
        raise CaseNotApplicable("not a verified proper coherent W-join")
    parts = w_join_partition(g, w.a, w.b)
    if parts is None:
        raise CaseNotApplicable("not homogeneous")
    c, d, e, f = parts
    if not z <= f:
        raise CaseNotApplicable("prescribed vertices attached to the join")
    if not (g.is_clique(c) and g.is_clique(d)):
        raise CaseNotApplicable("attachment sets are not cliques")
    if e and f and not g.is_anticomplete_between(e, f):
        raise CaseNotApplicable("common-complete set sees the far side")
    if c and d and not g.is_anticomplete_between(c, d):
        raise CaseNotApplicable("attachment sets see each other")
    f_c: set[int] = set()
    f_d: set[int] = set()
    for comp in _f_components(g, f):
        touches_c = any(g.adj[v] & c for v in comp)
        touches_d = any(g.adj[v] & d for v in comp)
        if touches_c and touches_d:
            raise CaseNotApplicable("far side not splittable")
        (f_d if touches_d else f_c).update(comp)
    s_c = _solve_side(g, frozenset(f_c), c, z & frozenset(f_c), subsolver)
    s_d = _solve_side(g, frozenset(f_d), d, z & frozenset(f_d), subsolver)
    sub, mapping = induced(g, w.a | w.b)
    pair = find_cosimplicial_nonedge(sub)
    if pair is None:
        raise CaseNotApplicable("no cosimplicial non-edge across the join")
    back = dict(enumerate(mapping))
    return s_c | s_d | {back[pair[0]], back[pair[1]]}


def _f_components(g: Graph, f: frozenset[int]) -> list[frozenset[int]]:
    out = []
    seen: set[int] = set()
    for v in sorted(f):
        if v in seen:
            continue
        comp = _component_of(g, v, f)
        seen |= comp
        out.append(comp)
    return out


def _solve_side(
    g: Graph,
    far: frozenset[int],
    attach: frozenset[int],
    z_side: frozenset[int],
    subsolver: SubSolver,
) -> frozenset[int]:
    """Solve one attachment side with an apex standing in for the join."""
    keep = far | attach
    side, mapping, apex, _ = _with_apex(g, keep, attach)
    pos = {old: new for new, old in enumerate(mapping)}
    z_new = frozenset(pos[v] for v in z_side) | {apex}
    s = subsolver(side, z_new)
    back = dict(enumerate(mapping))
    return frozenset(back[v] for v in s if v != apex)


def combine_one_join(
    g: Graph,
    j: OneJoin,
    z: Iterable[int],
    subsolver: SubSolver,
    budget: Budget | None = None,
) -> frozenset[int]:
    """Strong stable set through a 1-join.

    Rich joins: parity of the qualifying paths from the opposite interface
    to each side's anchor object (an even hole or a prescribed-to-be
    simplicial far vertex) decides which side receives a bare apex in its
    prescribed set and which receives an apex with a prescribed pendant.
    Small joins: the two-vertex side contributes its far vertex directly and
    the big side is solved with an interface vertex prescribed.
    """
    budget = budget or DEFAULT_BUDGET
    z = frozenset(z)
    if z & (j.a1 | j.a2):
        raise CaseNotApplicable("prescribed vertex on the interface")
    if j.rich:
        p1 = _side_parity(g, j.v1, j.a1, j.v1 - j.a1, min(j.a2), budget)
        p2 = _side_parity(g, j.v2, j.a2, j.v2 - j.a2, min(j.a1), budget)
        if p1 is None or p2 is None or p1 == p2:
            raise CaseNotApplicable("parity analysis inapplicable")
        sides = ((j.v1, j.a1, p1), (j.v2, j.a2, p2))
        picks: list[frozenset[int]] = []
        for verts, interface, parity in sides:
            if parity == 0:
                side, mapping, apex, _ = _with_apex(g, verts, interface)
                pos = {old: new for new, old in enumerate(mapping)}
                z_new = frozenset(pos[v] for v in z & verts) | {apex}
                s = subsolver(side, z_new)
                drop = {apex}
            else:
                side, mapping, apex, pend = _with_apex(
                    g, verts, interface, pendant=True
                )
                pos = {old: new for new, old in enumerate(mapping)}
                z_new = frozenset(pos[v] for v in z & verts) | {pend}
                s = subsolver(side, z_new)
                drop = {apex, pend}
            back = dict(enumerate(mapping))
            picks.append(frozenset(back[v] for v in s if v not in drop))
        return picks[0] | picks[1]
    # small join: one side is an interface vertex plus a pendant
    for small, big in ((j.v1, j.v2), (j.v2, j.v1)):
        if len(small) != 2:
            continue
        a_small = small & (j.a1 | j.a2)
        b_small = small - a_small
        if len(a_small) != 1 or len(b_small) != 1:
            continue
        (b1,) = b_small
        big_a = (j.a1 | j.a2) & big
        big_b = big - big_a
        for a2 in sorted(big_a):
            keep = big_b | {a2}
            sub, mapping = induced(g, keep)
            pos = {old: new for new, old in enumerate(mapping)}
            z_new = frozenset(pos[v] for v in z & big_b) | {pos[a2]}
            try:
                s = subsolver(sub, z_new)
            except CaseNotApplicable:
                continue
            back = dict(enumerate(mapping))
            cand = frozenset(back[v] for v in s) | {b1}
            if z <= cand and is_strong_stable_set(g, cand, budget):
                return cand
    raise CaseNotApplicable("small-join construction did not verify")


def _side_parity(
    g: Graph,
    verts: frozenset[int],
    interface: frozenset[int],
    far: frozenset[int],
    anchor: int,
    budget: Budget,
) -> Optional[int]:
    """Parity of a shortest qualifying path from the opposite anchor into
    this side, ending at an even hole or a simplicial far vertex."""
    allowed = verts | {anchor}
    simp = sorted(v for v in far if g.is_clique(g.adj[v]))
    if simp:
        path = shortest_path(g, anchor, {simp[0]}, allowed=allowed)
        if path is None:
            return None
        return (len(path) - 1) % 2
    sub, mapping = induced(g, verts)
    back = dict(enumerate(mapping))
    for cyc in induced_cycles(sub, budget, min_len=4, parity=0):
        hole = frozenset(back[v] for v in cyc)
        if g.adj[anchor] & hole:
            return 1  # zero-length qualifying path, plus the step onto the hole
        ring = g.neighborhood(hole) & verts
        inner = (allowed - hole - ring) | {anchor}
        path = shortest_path(g, anchor, ring, allowed=inner | ring)
        if path is None:
            continue
        return len(path) % 2  # (len - 1) edges plus one step onto the hole
    return None


# -- the cascade -------------------------------------------------------------------


class _Ctx:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.meter = _Meter(budget)
        self.trace: list[BranchRecord] = []
        self.fallback = False

    def record(self, branch: str, **detail) -> None:
        self.trace.append(BranchRecord(branch, dict(detail)))

    def subsolver(self) -> SubSolver:
        def run(h: Graph, zz: frozenset[int]) -> frozenset[int]:
            return _solve(self, h, zz, depth=1)

        return run


def validate_prescribed(
    g: Graph, z: frozenset[int], budget: Budget | None = None
) -> None:
    """Raise unless z is a consistent set of safe vertices."""
    budget = budget or DEFAULT_BUDGET
    if not z <= g.vertex_set():
        raise GraphError("prescribed vertices out of range")
    if not g.is_stable(z):
        raise GraphError("prescribed set is not stable")
    for v in sorted(z):
        ok, witness = is_safe_vertex(g, v, budget)
        if not ok:
            raise GraphError(f"prescribed vertex {v} is not safe ({witness})")
    ok, witness = is_consistent_set(g, z, budget)
    if not ok:
        raise GraphError(f"prescribed set is not consistent (odd path {witness})")


def solve(
    g: Graph,
    z: Iterable[int] = (),
    budget: Budget | None = None,
    trusted: bool = False,
) -> SolveResult:
    """Structure-guided strong-stable-set search; see the module docstring.

    Unless ``trusted``, z is first validated as a consistent set of safe
    vertices (with a budget separate from the solve itself).
    """
    budget = budget or DEFAULT_BUDGET
    z = frozenset(z)
    if not trusted and z:
        validate_prescribed(g, z, budget)
    ctx = _Ctx(budget)
    try:
        s = _solve(ctx, g, z, depth=0)
        status = SolveStatus.FALLBACK_FOUND if ctx.fallback else SolveStatus.FOUND
        return SolveResult(status, s, tuple(ctx.trace))
    except _SubInstanceInfeasible:
        try:
            s = brute_force(g, z, budget)
        except BudgetExceededError:
            ctx.record("budget")
            return SolveResult(SolveStatus.BUDGET, None, tuple(ctx.trace))
        if s is None:
            ctx.record("brute-force", result="none-exists", n=g.n)
            return SolveResult(SolveStatus.NONE_EXISTS, None, tuple(ctx.trace))
        ctx.record("brute-force", result="found", n=g.n)
        return SolveResult(SolveStatus.FALLBACK_FOUND, s, tuple(ctx.trace))
    except BudgetExceededError:
        ctx.record("budget")
        return SolveResult(SolveStatus.BUDGET, None, tuple(ctx.trace))


_BRANCHES: list[tuple[str, Callable]] = []


def _branch(name: str):
    def deco(fn):
        _BRANCHES.append((name, fn))
        return fn

    return deco


def _solve(ctx: _Ctx, g: Graph, z: frozenset[int], depth: int) -> frozenset[int]:
    ctx.meter.tick()
    for name, fn in _BRANCHES:
        try:
            s = fn(ctx, g, z)
        except (CaseNotApplicable, GraphError, HypothesisViolationError):
            continue
        if z <= s and is_strong_stable_set(g, s, ctx.budget):
            ctx.record(name, n=g.n, size=len(s))
            return s
        ctx.record("verify-failed", failed_branch=name, n=g.n)
    s = brute_force(g, z, ctx.budget)
    ctx.fallback = True
    if s is None:
        raise _SubInstanceInfeasible(f"no strong stable set on {g.n} vertices")
    ctx.record("brute-force", n=g.n, size=len(s))
    return s


@_branch("complete")
def _branch_complete(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    if not g.is_complete():
        raise CaseNotApplicable
    if g.n == 0:
        return frozenset()
    return z if z else frozenset({0})


@_branch("components")
def _branch_components(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    comps = components(g)
    if len(comps) < 2:
        raise CaseNotApplicable
    out: set[int] = set()
    for comp in comps:
        sub, mapping = induced(g, comp)
        pos = {old: new for new, old in enumerate(mapping)}
        s = _solve(ctx, sub, frozenset(pos[v] for v in z & comp), depth=1)
        back = dict(enumerate(mapping))
        out |= {back[v] for v in s}
    return frozenset(out)


@_branch("twins")
def _branch_twins(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    pair = find_twins(g)
    if pair is None:
        raise CaseNotApplicable
    u, v = pair
    drop = u if u not in z else v
    if drop in z:
        raise CaseNotApplicable("both twins prescribed")
    sub, mapping = delete_vertices(g, {drop})
    pos = {old: new for new, old in enumerate(mapping)}
    s = _solve(ctx, sub, frozenset(pos[x] for x in z), depth=1)
    back = dict(enumerate(mapping))
    return frozenset(back[x] for x in s)


@_branch("simplicial")
def _branch_simplicial(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    free = sorted(simplicial_vertices(g) - z)
    if not free:
        raise CaseNotApplicable
    v = free[0]
    sub, mapping = delete_vertices(g, {v})
    pos = {old: new for new, old in enumerate(mapping)}
    s = _solve(ctx, sub, frozenset(pos[x] for x in z), depth=1)
    back = dict(enumerate(mapping))
    lifted = frozenset(back[x] for x in s)
    if is_strong_stable_set(g, lifted, ctx.budget):
        return lifted
    return lifted | {v}


@_branch("cobipartite")
def _branch_cobipartite(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    if cobipartite_partition(g) is None:
        raise CaseNotApplicable
    return solve_cobipartite(g, z, ctx.budget)


@_branch("linear-interval")
def _branch_linear_interval(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    order = linear_interval_order(g, ctx.budget)
    if order is None:
        raise CaseNotApplicable
    return solve_linear_interval(g, z, order, ctx.budget)


@_branch("w-join")
def _branch_w_join(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    for cyc in squares(g, ctx.budget):
        c0, c1, c2, c3 = cyc
        for a_side, b_side in (((c0, c1), (c2, c3)), ((c1, c2), (c3, c0))):
            try:
                wj = grow_square_connected_pair(g, cyc, a_side, b_side)
            except (HypothesisViolationError, GraphError):
                continue
            try:
                return combine_w_join(g, wj, z, ctx.subsolver())
            except (CaseNotApplicable, GraphError):
                continue
    raise CaseNotApplicable


@_branch("one-join")
def _branch_one_join(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    j = find_one_join(g, ctx.budget)
    if j is None:
        raise CaseNotApplicable
    return combine_one_join(g, j, z, ctx.subsolver(), ctx.budget)


@_branch("line-graph")
def _branch_line_graph(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    try:
        rr = recover_root(g, ctx.budget)
    except GraphError:
        raise CaseNotApplicable
    if rr is None:
        raise CaseNotApplicable
    forced = frozenset(rr.edge_map[v] for v in z)
    m = suitable_matching(rr.root, forced, ctx.budget)
    if m is None:
        raise CaseNotApplicable
    inverse = {e: v for v, e in enumerate(rr.edge_map)}
    return frozenset(inverse[e] for e in m.edges)


@_branch("augmentation")
def _branch_augmentation(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    try:
        st = detect_smooth_augmentation(g, ctx.budget)
    except GraphError:
        raise CaseNotApplicable
    if st is None or not st.augments:
        raise CaseNotApplicable
    for (ex, ey), xt, yt, cross in st.augments:
        xs, ys = frozenset(xt), frozenset(yt)
        if z & (xs | ys):
            continue
        sub, _ = induced(g, xs | ys)
        if any(True for _ in squares(sub, ctx.budget)):
            continue  # square case belongs to the W-join branch
        u = next((x for x in sorted(xs) if ys <= g.adj[x]), None)
        v = next((y for y in sorted(ys) if xs <= g.adj[y]), None)
        if u is None or v is None:
            continue
        drop = (xs - {u}) | (ys - {v})
        sub2, mapping = delete_vertices(g, drop)
        pos = {old: new for new, old in enumerate(mapping)}
        s = _solve(ctx, sub2, frozenset(pos[x] for x in z), depth=1)
        back = dict(enumerate(mapping))
        return frozenset(back[x] for x in s)
    raise CaseNotApplicable


@_branch("peculiar")
def _branch_peculiar(ctx: _Ctx, g: Graph, z: frozenset[int]) -> frozenset[int]:
    if z:
        raise CaseNotApplicable("peculiar graphs have no simplicial vertices")
    parts = peculiar_structure(g, ctx.budget)
    if parts is None:
        raise CaseNotApplicable
    return solve_peculiar(g, parts)
