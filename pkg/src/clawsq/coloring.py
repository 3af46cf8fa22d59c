"""Verified square colorings of claw-free graphs within clique-number bounds.

The engine peels reducible vertices off with an explicit stack, colors the
remaining base components directly (paths and cycles, the icosahedron, or a
line graph via a strong edge coloring of its root), and then reinserts the
peeled vertices, recoloring each neighborhood through a system of distinct
representatives. Every public entry point verifies its own output against
the square before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import require_claw_free
from .errors import (
    BudgetExhaustedError,
    InternalBoundViolation,
    InvalidPairingError,
    NodeLimitExceeded,
    NotSmallOmegaError,
    SizeMismatchError,
)
from .graph import (
    UNCOLORED,
    Coloring,
    Graph,
    bits,
    connected_components,
    delete_vertex,
    distance,
    induced_subgraph,
    max_clique,
    max_degree,
    square,
)
from .structure import (
    Classification,
    RootGraph,
    classify,
    find_reducible_vertex,
    neighbor_degree_cap,
    reduction_threshold,
)

DEFAULT_NODE_LIMIT = 50_000_000


@dataclass(frozen=True)
class EngineParams:
    """Palette and reduction thresholds for one inductive run."""

    K: int
    Kprime: int
    omega: int

    def __post_init__(self):
        if self.Kprime > self.K:
            raise ValueError("Kprime must not exceed K")

    @classmethod
    def for_omega(cls, omega: int) -> "EngineParams":
        if omega == 3:
            return cls(9, 9, 3)
        if omega == 4:
            return cls(21, 19, 4)
        raise ValueError(f"inductive engine params are defined for omega 3 and 4, not {omega}")


def palette_bound(omega: int) -> int:
    """Guaranteed palette size for a claw-free graph of this clique number."""
    if omega <= 2:
        return 5
    if omega == 3:
        return 10
    if omega == 4:
        return 22
    return 2 * omega * (omega - 1) + 1


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff the coloring is total and proper on the square of g."""
    if len(coloring) != g.n:
        raise SizeMismatchError(
            f"coloring has {len(coloring)} entries for a {g.n}-vertex graph"
        )
    return coloring.is_proper_on(square(g))


def trivial_greedy_square(g: Graph) -> Coloring:
    """Greedy square coloring in non-increasing square-degree order.

    Uses at most one more color than the maximum square degree, which for
    claw-free inputs stays within 2*omega*(omega-1)+1.
    """
    sq = square(g)
    order = sorted(range(g.n), key=lambda v: (-sq.degree(v), v))
    colors = [UNCOLORED] * g.n
    for v in order:
        taken = {colors[u] for u in sq.neighbors(v) if colors[u] != UNCOLORED}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(colors)


def _path_pattern(length: int) -> list[int]:
    return [i % 3 for i in range(length)]


def _cycle_pattern(length: int) -> list[int]:
    # Squares of cycles: 3 colors when the length is a multiple of 3, all 5
    # distinct for the 5-cycle, otherwise 4 via blocks of 012 and 0123.
    if length == 5:
        return [0, 1, 2, 3, 4]
    if length % 3 == 0:
        return [i % 3 for i in range(length)]
    if length % 3 == 1:
        triples = (length - 4) // 3
    else:
        if length < 8:
            raise NotSmallOmegaError(f"no simple cycle of length {length}")
        triples = (length - 8) // 3
    quads = (length - 3 * triples) // 4
    return [0, 1, 2] * triples + [0, 1, 2, 3] * quads


def color_small_omega(g: Graph) -> Coloring:
    """Color the square of a disjoint union of paths and cycles with at most 5 colors."""
    if max_degree(g) > 2:
        raise NotSmallOmegaError("a vertex of degree 3 or more is present")
    colors = [UNCOLORED] * g.n
    for comp in connected_components(g):
        members = sorted(comp)
        sub, old = induced_subgraph(g, members)
        size = sub.n
        if sub.edge_count == size and size > 0:
            if size == 3:
                raise NotSmallOmegaError("a triangle is present")
            # walk the cycle starting at the lowest vertex, toward its
            # lower-numbered neighbor
            start = 0
            prev, cur = start, min(sub.neighbors(start))
            order = [start]
            while cur != start:
                order.append(cur)
                a, b = sub.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            pattern = _cycle_pattern(size)
        else:
            ends = [v for v in range(size) if sub.degree(v) <= 1]
            start = min(ends)
            order = [start]
            prev = None
            cur = start
            while len(order) < size:
                nxt = [u for u in sub.neighbors(cur) if u != prev]
                prev, cur = cur, nxt[0]
                order.append(cur)
            pattern = _path_pattern(size)
        for pos, local in enumerate(order):
            colors[old[local]] = pattern[pos]
    result = Coloring(colors)
    if not verify_coloring(g, result):
        raise InternalBoundViolation("path/cycle pattern failed verification")
    return result


def color_icosahedron(g: Graph, pairing) -> Coloring:
    """Six colors on the icosahedron, one per antipodal pair."""
    pairs = [tuple(p) for p in pairing]
    covered = sorted(v for p in pairs for v in p)
    if g.n != 12 or len(pairs) != 6 or covered != list(range(12)):
        raise InvalidPairingError("pairing must cover the 12 vertices in 6 pairs")
    for a, b in pairs:
        if distance(g, a, b) != 3:
            raise InvalidPairingError(f"vertices {a} and {b} are not antipodal")
    colors = [UNCOLORED] * 12
    for i, (a, b) in enumerate(sorted(pairs)):
        colors[a] = i
        colors[b] = i
    result = Coloring(colors)
    if not verify_coloring(g, result):
        raise InvalidPairingError("antipodal coloring is not proper on the square")
    return result


@dataclass(frozen=True)
class StrongEdgeColoring:
    """Edge coloring where edges at distance at most one get distinct colors."""

    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=-1) + 1

    def color_of(self, edge) -> int:
        u, v = sorted(edge)
        return self.colors[self.edges.index((u, v))]

    def verify_on(self, f: Graph) -> bool:
        """Definition check: conflicting edge pairs carry distinct colors."""
        if sorted(self.edges) != sorted(f.edges()):
            return False
        m = len(self.edges)
        for i in range(m):
            u, v = self.edges[i]
            for j in range(i + 1, m):
                x, y = self.edges[j]
                touching = len({u, v} & {x, y}) > 0
                joined = (
                    f.has_edge(u, x)
                    or f.has_edge(u, y)
                    or f.has_edge(v, x)
                    or f.has_edge(v, y)
                )
                if (touching or joined) and self.colors[i] == self.colors[j]:
                    return False
        return True


def edge_conflict_graph(f: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Graph on the edges of f, adjacent when they share or see an endpoint."""
    edges = tuple(sorted(f.edges()))
    m = len(edges)
    reach = []
    for u, v in edges:
        reach.append(f._adj[u] | f._adj[v] | (1 << u) | (1 << v))
    rows = [0] * m
    count = 0
    for i in range(m):
        ui, vi = edges[i]
        for j in range(i + 1, m):
            uj, vj = edges[j]
            if reach[i] >> uj & 1 or reach[i] >> vj & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                count += 1
    return Graph(m, tuple(rows), count), edges


def _dsatur_order_greedy(g: Graph) -> list[int]:
    """Greedy coloring by dynamic saturation; returns the color list."""
    n = g.n
    colors = [UNCOLORED] * n
    neighbor_colors = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == UNCOLORED),
            key=lambda u: (len(neighbor_colors[u]), g.degree(u), -u),
        )
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in bits(g._adj[v]):
            if colors[u] == UNCOLORED:
                neighbor_colors[u].add(c)
    return colors


def _backtrack_within(g: Graph, budget: int, node_limit: int) -> list[int] | None:
    """Find any proper coloring of g with at most ``budget`` colors.

    Backtracking over dynamically most-saturated vertices with new colors
    introduced in order (color symmetry breaking). Returns None when the
    search space is exhausted; raises NodeLimitExceeded past the node
    budget.
    """
    n = g.n
    if n == 0:
        return []
    colors = [UNCOLORED] * n
    nodes = 0

    def pick():
        best = None
        best_key = None
        for u in range(n):
            if colors[u] != UNCOLORED:
                continue
            sat = len({colors[w] for w in bits(g._adj[u]) if colors[w] != UNCOLORED})
            key = (sat, g.degree(u), -u)
            if best is None or key > best_key:
                best, best_key = u, key
        return best

    def walk(used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise NodeLimitExceeded(f"gave up after {node_limit} nodes")
        v = pick()
        if v is None:
            return True
        taken = {colors[w] for w in bits(g._adj[v]) if colors[w] != UNCOLORED}
        top = min(used + 1, budget)
        for c in range(top):
            if c in taken:
                continue
            colors[v] = c
            if walk(max(used, c + 1)):
                return True
            colors[v] = UNCOLORED
        return False

    return colors if walk(0) else None


def strong_edge_color(
    f: Graph, budget: int, node_limit: int = DEFAULT_NODE_LIMIT
) -> StrongEdgeColoring:
    """Strong edge coloring of f within ``budget`` colors by exact search.

    Greedy saturation ordering first; exact backtracking on the edge
    conflict graph when the greedy pass needs too many colors. Raises
    BudgetExhaustedError when the search proves the budget insufficient
    (impossible for max degree 3 with budget 10 and max degree 4 with
    budget 22) and NodeLimitExceeded when the node budget runs out first.
    """
    conflict, edges = edge_conflict_graph(f)
    greedy = _dsatur_order_greedy(conflict)
    if max(greedy, default=-1) + 1 <= budget:
        return StrongEdgeColoring(edges, tuple(greedy))
    found = _backtrack_within(conflict, budget, node_limit)
    if found is None:
        raise BudgetExhaustedError(
            f"no strong edge coloring with {budget} colors exists for this graph"
        )
    return StrongEdgeColoring(edges, tuple(found))


def _match_distinct(items, options):
    """Injective choice of one option per item via augmenting paths, or None."""
    owner: dict[int, int] = {}

    def try_assign(i, banned):
        for val in options[i]:
            if val in banned:
                continue
            banned.add(val)
            if val not in owner or try_assign(owner[val], banned):
                owner[val] = i
                return True
        return False

    for i in range(len(items)):
        if not try_assign(i, set()):
            return None
    return {items[i]: val for val, i in owner.items()}


def _reinsert_vertex(gr: Graph, v: int, case: str, kprime: int, after: list, K: int) -> list:
    """Extend a proper square coloring of gr minus v to all of gr.

    ``after`` is indexed in the deleted graph's labels. Recolors the
    low-square-degree part S of N(v) with pairwise distinct colors drawn
    from each vertex's available set (a system of distinct
    representatives), then gives v a color unseen in its square
    neighborhood.
    """
    colors = list(after[:v]) + [UNCOLORED] + list(after[v:])
    sq = square(gr)
    sq_deg = [sq.degree(x) for x in range(gr.n)]
    threshold = kprime + 2 if case == "ii" else kprime + 1
    nbrs = gr.neighbors(v)
    s_vertices = [x for x in nbrs if sq_deg[x] <= threshold]
    s_set = set(s_vertices)
    for s in s_vertices:
        colors[s] = UNCOLORED
    options = []
    for s in s_vertices:
        banned = {
            colors[u]
            for u in sq.neighbors(s)
            if u != v and u not in s_set
        }
        options.append([c for c in range(K + 1) if c not in banned])
    matched = _match_distinct(s_vertices, options)
    if matched is None:
        raise InternalBoundViolation(
            f"no distinct-representative recoloring for N({v}); this contradicts "
            "the reduction guarantee"
        )
    for s, c in matched.items():
        colors[s] = c
    taken = {colors[u] for u in sq.neighbors(v)}
    free = next((c for c in range(K + 1) if c not in taken), None)
    if free is None:
        raise InternalBoundViolation(
            f"no color left for vertex {v}; its square degree exceeds the threshold"
        )
    colors[v] = free
    if __debug__:
        assert len({matched[s] for s in s_vertices}) == len(s_vertices)
        assert Coloring(colors).is_proper_on(sq)
    return colors


def _component_reduction(cur: Graph, omega_run: int):
    """Locate one reducible vertex in some component, or None when all are base."""
    for comp in connected_components(cur):
        if len(comp) <= 2:
            continue
        sub, old = induced_subgraph(cur, comp)
        w = max_clique(sub)[0]
        if w <= 2:
            continue
        if w > omega_run:
            raise InternalBoundViolation(
                f"component clique number {w} exceeds the engine's omega {omega_run}"
            )
        red = find_reducible_vertex(
            sub,
            reduction_threshold(w),
            neighbor_cap=neighbor_degree_cap(w),
            allow_case_ii=True,
        )
        if red is not None:
            return old[red.vertex], red.case, red.kprime
    return None


def _color_line_graph_base(sub: Graph, root: RootGraph, node_limit: int) -> list:
    budget = 10 if max_degree(root.f) <= 3 else 22
    try:
        sec = strong_edge_color(root.f, budget, node_limit)
    except (BudgetExhaustedError, NodeLimitExceeded) as exc:
        raise InternalBoundViolation(
            f"strong edge coloring within {budget} colors failed on a root graph "
            f"with max degree {max_degree(root.f)}: {exc}"
        ) from exc
    index = {e: i for i, e in enumerate(sec.edges)}
    colors = [sec.colors[index[root.edge_of_vertex[x]]] for x in range(sub.n)]
    if not Coloring(colors).is_proper_on(square(sub)):
        raise InternalBoundViolation("pulled-back strong edge coloring is not proper")
    return colors


def _color_base_components(cur: Graph, node_limit: int) -> list:
    colors = [UNCOLORED] * cur.n
    for comp in connected_components(cur):
        sub, old = induced_subgraph(cur, comp)
        w = max_clique(sub)[0]
        if w <= 2:
            local = list(color_small_omega(sub).colors)
        else:
            outcome = classify(sub, w, check_claw_free=False)
            if outcome.kind == "icosahedron":
                local = list(color_icosahedron(sub, outcome.antipodal_pairs).colors)
            elif outcome.kind == "line_graph":
                local = _color_line_graph_base(sub, outcome.root, node_limit)
            else:
                raise InternalBoundViolation(
                    "a reducible component survived to the base step"
                )
        for i, c in enumerate(local):
            colors[old[i]] = c
    return colors


def greedy_reduce(
    g: Graph, params: EngineParams, *, node_limit: int = DEFAULT_NODE_LIMIT
) -> Coloring:
    """Inductive square coloring within K+1 colors for claw-free inputs.

    Iteratively deletes reducible vertices (explicit stack, no recursion),
    colors the base remainder per component, then reinserts each vertex in
    reverse order, recoloring its neighborhood through distinct available
    colors.
    """
    if max_clique(g)[0] > params.omega:
        raise ValueError("clique number exceeds the engine parameters")
    frames = []
    cur = g
    while True:
        found = _component_reduction(cur, params.omega)
        if found is None:
            break
        v, case, kprime = found
        frames.append((cur, v, case, kprime))
        cur = delete_vertex(cur, v)
    colors = _color_base_components(cur, node_limit)
    for gr, v, case, kprime in reversed(frames):
        colors = _reinsert_vertex(gr, v, case, kprime, colors, params.K)
    result = Coloring(colors)
    if result.palette_size > params.K + 1 or not verify_coloring(g, result):
        raise InternalBoundViolation("inductive coloring failed its own verification")
    return result


def color_square(g: Graph, *, node_limit: int = DEFAULT_NODE_LIMIT) -> Coloring:
    """Proper coloring of the square of a claw-free graph within its bound.

    Components are colored independently from a shared palette: paths and
    cycles directly, clique number 3 and 4 through the inductive engine,
    and clique number 5 and up through the greedy square coloring whose
    palette the maximum square degree caps.
    """
    require_claw_free(g)
    colors = [UNCOLORED] * g.n
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        w = max_clique(sub)[0]
        if w <= 2:
            local = color_small_omega(sub)
        elif w <= 4:
            local = greedy_reduce(sub, EngineParams.for_omega(w), node_limit=node_limit)
        else:
            local = trivial_greedy_square(sub)
        if local.palette_size > palette_bound(w):
            raise InternalBoundViolation(
                f"component palette {local.palette_size} exceeds the bound "
                f"{palette_bound(w)} for clique number {w}"
            )
        for i, c in enumerate(local.colors):
            colors[old[i]] = c
    result = Coloring(colors).compacted()
    if not verify_coloring(g, result):
        raise InternalBoundViolation("square coloring failed final verification")
    return result


def classify_component(sub: Graph) -> Classification:
    """Classification of one connected claw-free graph by its own clique number."""
    return classify(sub, max_clique(sub)[0])
