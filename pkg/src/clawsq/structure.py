"""Structural classification of connected claw-free graphs.

Dispatches every connected claw-free graph with clique number at least 3
into one of: a reducible vertex (small square degree with the recoloring
clique condition), the icosahedron, or a line graph witnessed by an edge
clique partition and a reconstructed root graph. Each outcome carries a
machine-checkable witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import require_claw_free
from .errors import (
    InvalidPartitionError,
    UnclassifiableGraphError,
    UnsupportedOmegaError,
)
from .graph import (
    Graph,
    bits,
    build_graph,
    connected_components,
    distance,
    induced_subgraph,
    max_degree,
    square,
)

SHAPE_TWO_DISJOINT_EDGES = "two_disjoint_edges"
SHAPE_CLIQUE_PAIR = "clique_pair"
SHAPE_CLIQUE_PAIR_PLUS_EDGES = "clique_pair_plus_edges"
SHAPE_FIVE_CYCLE = "five_cycle"
SHAPE_OTHER = "other"

# Past this neighborhood size the partition enumeration is pointless: such
# vertices cannot occur in the all-covered case of any supported omega.
_PARTITION_SIZE_LIMIT = 18


@dataclass(frozen=True)
class NeighborhoodShape:
    """Decomposition tag for an induced neighborhood.

    ``parts`` holds the two covering cliques (global vertex labels, possibly
    one empty) when the minimum-cross-edge decomposition exists and is
    unique; ``cross_edges`` the extra edges between them. ``ambiguous``
    marks neighborhoods with more than one minimal decomposition, which are
    tagged ``other`` because no covering pair is canonical.
    """

    kind: str
    parts: tuple[frozenset[int], frozenset[int]] | None
    cross_edges: tuple[tuple[int, int], ...] = ()
    ambiguous: bool = False

    @property
    def sizes(self) -> tuple[int, int] | None:
        if self.parts is None:
            return None
        return tuple(sorted(len(p) for p in self.parts))


def _mask_is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if g._adj[v] & mask != mask & ~(1 << v):
            return False
    return True


def _is_five_cycle(g: Graph) -> bool:
    return (
        g.n == 5
        and g.edge_count == 5
        and all(g.degree(v) == 2 for v in range(5))
        and len(connected_components(g)) == 1
    )


def neighborhood_shape(g: Graph, v: int) -> NeighborhoodShape:
    """Classify the induced neighborhood of ``v`` as two covering cliques.

    Enumerates every split of N(v) into two cliques and keeps the ones with
    the fewest cross edges. A unique minimum with at most two cross edges
    (non-incident when there are two) yields a tagged decomposition;
    anything else is ``five_cycle`` or ``other``.
    """
    nbrs = g.neighbors(v)
    h = len(nbrs)
    if h == 0:
        return NeighborhoodShape(SHAPE_CLIQUE_PAIR, (frozenset(), frozenset()))
    sub, old = induced_subgraph(g, nbrs)
    if _is_five_cycle(sub):
        return NeighborhoodShape(SHAPE_FIVE_CYCLE, None)
    if h > _PARTITION_SIZE_LIMIT:
        return NeighborhoodShape(SHAPE_OTHER, None)

    full = (1 << h) - 1
    best_k = None
    best_partitions = []
    # Fix vertex 0 inside part A so each unordered split is seen once.
    for half in range(1 << (h - 1)):
        a_mask = (half << 1) | 1
        b_mask = full ^ a_mask
        if not _mask_is_clique(sub, a_mask) or not _mask_is_clique(sub, b_mask):
            continue
        k = sum((sub._adj[i] & b_mask).bit_count() for i in bits(a_mask))
        if best_k is None or k < best_k:
            best_k = k
            best_partitions = [a_mask]
        elif k == best_k:
            best_partitions.append(a_mask)

    if best_k is None:
        return NeighborhoodShape(SHAPE_OTHER, None)
    if len(best_partitions) > 1:
        return NeighborhoodShape(SHAPE_OTHER, None, ambiguous=True)
    if best_k > 2:
        return NeighborhoodShape(SHAPE_OTHER, None)

    a_mask = best_partitions[0]
    b_mask = full ^ a_mask
    crosses = tuple(
        sorted(
            tuple(sorted((old[i], old[j])))
            for i in bits(a_mask)
            for j in bits(sub._adj[i] & b_mask)
        )
    )
    if best_k == 2:
        (p1, q1), (p2, q2) = crosses
        if {p1, q1} & {p2, q2}:
            return NeighborhoodShape(SHAPE_OTHER, None)
    part_a = frozenset(old[i] for i in bits(a_mask))
    part_b = frozenset(old[i] for i in bits(b_mask))
    parts = tuple(sorted((part_a, part_b), key=lambda p: (len(p), sorted(p))))
    if best_k == 0:
        kind = (
            SHAPE_TWO_DISJOINT_EDGES
            if (len(part_a), len(part_b)) in ((2, 2),)
            else SHAPE_CLIQUE_PAIR
        )
        return NeighborhoodShape(kind, parts)
    return NeighborhoodShape(SHAPE_CLIQUE_PAIR_PLUS_EDGES, parts, crosses)


# The neighborhood structures that rule a vertex out of the "good" set when
# the clique number is 4, as (kind, sorted part sizes, cross edge count).
_OMEGA4_COVERED_SHAPES = {
    (SHAPE_CLIQUE_PAIR, (1, 3), 0),
    (SHAPE_CLIQUE_PAIR, (2, 3), 0),
    (SHAPE_CLIQUE_PAIR_PLUS_EDGES, (2, 3), 1),
    (SHAPE_CLIQUE_PAIR, (3, 3), 0),
    (SHAPE_CLIQUE_PAIR_PLUS_EDGES, (3, 3), 1),
    (SHAPE_CLIQUE_PAIR_PLUS_EDGES, (3, 3), 2),
}


def is_good_vertex(g: Graph, v: int, omega: int) -> bool:
    """Whether v's neighborhood avoids the line-graph-like shapes for this omega."""
    if omega == 3:
        if g.degree(v) != 4:
            return False
        return neighborhood_shape(g, v).kind != SHAPE_TWO_DISJOINT_EDGES
    if omega == 4:
        shape = neighborhood_shape(g, v)
        key = (shape.kind, shape.sizes, len(shape.cross_edges))
        return key not in _OMEGA4_COVERED_SHAPES
    raise UnsupportedOmegaError(f"good vertices are defined for omega 3 and 4, not {omega}")


def recognize_icosahedron(g: Graph):
    """Antipodal pairing when g is the icosahedron, else None.

    The icosahedron is the unique connected graph in which every
    neighborhood induces a five-cycle; each vertex then has exactly one
    vertex at distance 3.
    """
    if g.n != 12 or g.edge_count != 30:
        return None
    if any(g.degree(v) != 5 for v in range(12)):
        return None
    if len(connected_components(g)) != 1:
        return None
    for v in range(12):
        sub, _ = induced_subgraph(g, g.neighbors(v))
        if not _is_five_cycle(sub):
            return None
    antipode = {}
    for v in range(12):
        far = [u for u in range(12) if distance(g, v, u) == 3]
        if len(far) != 1:
            return None
        antipode[v] = far[0]
    if any(antipode[antipode[v]] != v for v in range(12)):
        return None
    return tuple(sorted((v, antipode[v]) for v in range(12) if v < antipode[v]))


def krausz_partition(g: Graph, omega: int) -> list[frozenset[int]] | None:
    """Edge clique partition certifying that g is a line graph, or None.

    Designates, for every vertex, the union of the vertex with each of its
    two covering cliques (cross edges stay out of the designated cliques
    and are emitted as 2-cliques when no designated clique covers them).
    Verifies the partition properties rather than assuming them: every edge
    in exactly one clique, every vertex in at most two, all cliques of at
    most omega vertices. Returns None if construction or verification
    fails.
    """
    designated = set()
    for v in range(g.n):
        shape = neighborhood_shape(g, v)
        if shape.parts is None:
            return None
        for part in shape.parts:
            if not part:
                continue
            if len(part) > omega - 1:
                return None
            designated.add(part | {v})
    cover: dict[tuple[int, int], int] = {}
    for c in designated:
        members = sorted(c)
        for i, u in enumerate(members):
            for w in members[i + 1 :]:
                if not g.has_edge(u, w):
                    return None
                cover[(u, w)] = cover.get((u, w), 0) + 1
    extra = []
    for e in g.edges():
        hits = cover.get(e, 0)
        if hits > 1:
            return None
        if hits == 0:
            extra.append(frozenset(e))
    cliques = sorted(designated | set(extra), key=sorted)
    membership = [0] * g.n
    for c in cliques:
        for u in c:
            membership[u] += 1
    if any(count > 2 for count in membership):
        return None
    return cliques


@dataclass(frozen=True)
class RootGraph:
    """A graph f together with the map from vertices of g to edges of f."""

    f: Graph
    edge_of_vertex: tuple[tuple[int, int], ...]


def _validate_krausz(g: Graph, cliques) -> None:
    cover: dict[tuple[int, int], int] = {}
    membership = [0] * g.n
    for c in cliques:
        members = sorted(c)
        if len(members) < 2:
            raise InvalidPartitionError("cliques in the partition need at least two vertices")
        for u in members:
            g.check_vertex(u)
            membership[u] += 1
        for i, u in enumerate(members):
            for w in members[i + 1 :]:
                if not g.has_edge(u, w):
                    raise InvalidPartitionError(f"({u}, {w}) is not an edge")
                cover[(u, w)] = cover.get((u, w), 0) + 1
    for e in g.edges():
        if cover.get(e, 0) != 1:
            raise InvalidPartitionError(f"edge {e} covered {cover.get(e, 0)} times")
    if len(cover) != g.edge_count:
        raise InvalidPartitionError("partition covers a non-edge")
    if any(count > 2 for count in membership):
        raise InvalidPartitionError("a vertex belongs to more than two cliques")


def root_graph(g: Graph, partition) -> RootGraph:
    """Reconstruct the root graph from a Krausz partition of g.

    Root vertices are the cliques, plus one fresh endpoint per vertex of g
    that lies in fewer than two cliques (two for isolated vertices). The
    resulting line graph is checked against g edge for edge.
    """
    given = [frozenset(c) for c in partition]
    cliques = sorted(set(given), key=sorted)
    if len(cliques) != len(given):
        raise InvalidPartitionError("duplicate cliques in partition")
    _validate_krausz(g, cliques)
    membership: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for u in c:
            membership[u].append(i)
    next_aux = len(cliques)
    edge_of_vertex = []
    for v in range(g.n):
        owners = membership[v]
        if len(owners) == 2:
            e = (owners[0], owners[1])
        elif len(owners) == 1:
            e = (owners[0], next_aux)
            next_aux += 1
        else:
            e = (next_aux, next_aux + 1)
            next_aux += 2
        edge_of_vertex.append(tuple(sorted(e)))
    if len(set(edge_of_vertex)) != g.n:
        raise InvalidPartitionError("two vertices share the same pair of cliques")
    f = build_graph(next_aux, edge_of_vertex)
    for u in range(g.n):
        eu = set(edge_of_vertex[u])
        for w in range(u + 1, g.n):
            shares = bool(eu & set(edge_of_vertex[w]))
            if shares != g.has_edge(u, w):
                raise InvalidPartitionError("line graph reconstruction mismatch")
    return RootGraph(f, tuple(edge_of_vertex))


@dataclass(frozen=True)
class Reduction:
    """A vertex whose removal the inductive recoloring can undo.

    ``case`` records which recoloring case applies: "iii" when the
    neighbors with square degree above kprime+1 form a clique in the square
    of the deleted graph, "ii" when a neighbor xstar of square degree at
    most kprime+1 exists and the threshold moves to kprime+2.
    """

    vertex: int
    case: str
    xstar: int | None
    kprime: int


def _square_row_without(g: Graph, x: int, v: int) -> int:
    """Adjacency row of x in the square of g with vertex v deleted."""
    drop = ~(1 << v)
    mask = g._adj[x] & drop
    row = mask
    for u in bits(mask):
        row |= g._adj[u] & drop
    return row & ~(1 << x)


def _clique_in_deleted_square(g: Graph, vertices, v: int) -> bool:
    mask = 0
    for x in vertices:
        mask |= 1 << x
    for x in vertices:
        need = mask & ~(1 << x)
        if _square_row_without(g, x, v) & need != need:
            return False
    return True


def find_reducible_vertex(
    g: Graph,
    kprime: int,
    *,
    neighbor_cap: int | None = None,
    allow_case_ii: bool = True,
):
    """Smallest-index reducible vertex, preferring case iii over case ii.

    A vertex qualifies when its square degree is at most ``kprime`` and the
    neighbors exceeding the case threshold form a clique in the square of
    the graph with the vertex deleted.  ``neighbor_cap``, when given,
    additionally requires every neighbor's square degree to stay at or
    below it.
    """
    sq = square(g)
    sq_deg = [sq.degree(v) for v in range(g.n)]

    def candidates():
        for v in range(g.n):
            if sq_deg[v] > kprime:
                continue
            nbrs = g.neighbors(v)
            if neighbor_cap is not None and any(sq_deg[x] > neighbor_cap for x in nbrs):
                continue
            yield v, nbrs

    for v, nbrs in candidates():
        b = [x for x in nbrs if sq_deg[x] > kprime + 1]
        if _clique_in_deleted_square(g, b, v):
            return Reduction(v, "iii", None, kprime)
    if allow_case_ii:
        for v, nbrs in candidates():
            xstars = [x for x in nbrs if sq_deg[x] <= kprime + 1]
            if not xstars:
                continue
            b = [x for x in nbrs if sq_deg[x] > kprime + 2]
            if _clique_in_deleted_square(g, b, v):
                return Reduction(v, "ii", xstars[0], kprime)
    return None


def reduction_threshold(omega: int) -> int:
    """Square-degree threshold under which a vertex can anchor a reduction."""
    if omega == 3:
        return 9
    if omega == 4:
        return 19
    if omega >= 5:
        return 2 * omega * (omega - 1) - 4
    raise UnsupportedOmegaError(f"no reduction threshold for omega {omega}")


def neighbor_degree_cap(omega: int) -> int | None:
    """Cap on neighbor square degrees required of a reducible vertex, if any."""
    if omega == 3:
        return 11
    if omega == 4:
        return None
    if omega >= 5:
        return 2 * omega * (omega - 1) - 3
    raise UnsupportedOmegaError(f"no neighbor cap for omega {omega}")


@dataclass(frozen=True)
class Classification:
    """Structural outcome for one connected claw-free graph."""

    kind: str  # "small_omega" | "reducible" | "icosahedron" | "line_graph"
    omega: int
    reduction: Reduction | None = None
    antipodal_pairs: tuple[tuple[int, int], ...] | None = None
    root: RootGraph | None = None


def classify(g: Graph, omega: int, *, check_claw_free: bool = True) -> Classification:
    """Dispatch a connected claw-free graph into its structural case.

    Prefers a reducible vertex; falls back to icosahedron recognition
    (omega 3 only) and then to line-graph recognition. Raises
    UnclassifiableGraphError when nothing applies, which signals a bug or a
    violated precondition.
    """
    if check_claw_free:
        require_claw_free(g)
    if omega <= 2:
        return Classification("small_omega", omega)
    red = find_reducible_vertex(
        g,
        reduction_threshold(omega),
        neighbor_cap=neighbor_degree_cap(omega),
        allow_case_ii=omega <= 4,
    )
    if red is not None:
        return Classification("reducible", omega, reduction=red)
    if omega == 3:
        pairing = recognize_icosahedron(g)
        if pairing is not None:
            return Classification("icosahedron", omega, antipodal_pairs=pairing)
    partition = krausz_partition(g, omega)
    if partition is not None:
        root = root_graph(g, partition)
        if max_degree(root.f) <= omega:
            return Classification("line_graph", omega, root=root)
    raise UnclassifiableGraphError(
        f"no structural case applies (n={g.n}, omega={omega}); "
        "the input may contain a claw, or this is a bug"
    )


def classify_very_bad(g: Graph, omega: int) -> tuple[list[int], list[int]]:
    """Vertices whose square degree blocks easy recoloring, per omega.

    Returns (very_bad, extremely_bad); the second list is only populated
    for omega 3, where the two notions differ (square degree exactly 11
    versus 12 and up).
    """
    if omega < 3:
        raise UnsupportedOmegaError("very bad vertices are defined for omega >= 3")
    sq = square(g)
    degs = [sq.degree(v) for v in range(g.n)]
    if omega == 3:
        very = [v for v in range(g.n) if degs[v] == 11]
        extreme = [v for v in range(g.n) if degs[v] >= 12]
        return very, extreme
    threshold = 21 if omega == 4 else 2 * omega * (omega - 1) - 2
    return [v for v in range(g.n) if degs[v] >= threshold], []
