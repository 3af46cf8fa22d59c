"""Claw detection and the quantitative neighborhood inequalities for claw-free graphs.

Every inequality is exposed twice: as a plain computation (sets, counts,
matching numbers) and as a :class:`LemmaReport` that records both sides of
the bound exactly. Right-hand sides stay rational (`fractions.Fraction`),
never floating point, so "holds" is never a tolerance question.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NotClawFreeError, NotNeighborError, UnsupportedOmegaError
from .graph import Graph, bits, complement, induced_subgraph, max_clique, square

# Exact values of the Ramsey numbers R(k, 3) for small k; past the table the
# binomial upper bound C(k+1, 2) is used, which keeps every bound valid.
_RAMSEY_R3 = {2: 3, 3: 6, 4: 9, 5: 14, 6: 18, 7: 23, 8: 28, 9: 36}


@dataclass(frozen=True)
class ClawWitness:
    """An induced K_{1,3}: a center adjacent to three pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, int, int]

    def vertices(self) -> frozenset[int]:
        return frozenset((self.center,) + self.leaves)


@dataclass(frozen=True)
class LemmaReport:
    """One evaluated inequality instance: holds iff lhs <= rhs."""

    lemma_id: str
    vertex: int
    neighbor: int | None
    lhs: Fraction
    rhs: Fraction
    holds: bool

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "vertex": self.vertex,
            "neighbor": self.neighbor,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
        }


def _report(lemma_id, vertex, neighbor, lhs, rhs) -> LemmaReport:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return LemmaReport(lemma_id, vertex, neighbor, lhs, rhs, lhs <= rhs)


def find_claw(g: Graph) -> ClawWitness | None:
    """First induced claw in lexicographic (center, leaves) order, or None.

    For each center the search walks non-adjacent leaf pairs inside the
    neighborhood with bitmask filters; a graph is claw-free iff this
    returns None.
    """
    adj = g._adj
    for v in range(g.n):
        nv = adj[v]
        if nv.bit_count() < 3:
            continue
        for x in bits(nv):
            higher = nv >> (x + 1) << (x + 1)
            for y in bits(higher & ~adj[x]):
                rest = nv & ~adj[x] & ~adj[y]
                rest = rest >> (y + 1) << (y + 1)
                if rest:
                    z = (rest & -rest).bit_length() - 1
                    return ClawWitness(v, (x, y, z))
    return None


def require_claw_free(g: Graph) -> None:
    witness = find_claw(g)
    if witness is not None:
        raise NotClawFreeError(
            f"claw with center {witness.center} and leaves {witness.leaves}",
            witness=witness,
        )


def ramsey_bound(omega: int) -> int:
    """R(omega, 3) from the exact table, or the binomial upper bound past it."""
    if omega < 2:
        raise UnsupportedOmegaError("omega must be at least 2")
    return _RAMSEY_R3.get(omega, comb(omega + 1, 2))


def exterior_neighbors(g: Graph, v: int, w: int) -> frozenset[int]:
    """Neighbors of ``w`` lying outside the closed neighborhood of ``v``.

    Requires ``w`` adjacent to ``v``. On claw-free inputs this set is always
    a clique of at most omega-1 vertices.
    """
    if not g.has_edge(v, w):
        raise NotNeighborError(f"{w} is not a neighbor of {v}")
    mask = g._adj[w] & ~(g._adj[v] | (1 << v))
    return frozenset(bits(mask))


def z_set(g: Graph, v: int) -> frozenset[int]:
    """Neighbors of ``v`` with two non-adjacent common neighbors inside N(v)."""
    g.check_vertex(v)
    nv = g._adj[v]
    out = []
    for w in bits(nv):
        common = nv & g._adj[w]
        # w qualifies iff the common neighborhood is not a clique.
        for x in bits(common):
            if common & ~g._adj[x] & ~(1 << x):
                out.append(w)
                break
    return frozenset(out)


def _max_matching_mask(adj_masks, mask, memo):
    """Maximum matching size in the graph restricted to ``mask`` (exhaustive)."""
    if mask in memo:
        return memo[mask]
    best = 0
    rest = mask
    while rest:
        low = rest & -rest
        i = low.bit_length() - 1
        partners = adj_masks[i] & mask & ~low
        if partners:
            without_i = mask ^ low
            best = _max_matching_mask(adj_masks, without_i, memo)
            for j in bits(partners):
                cand = 1 + _max_matching_mask(adj_masks, without_i & ~(1 << j), memo)
                if cand > best:
                    best = cand
            break
        # isolated vertices never matter; drop and continue
        mask ^= low
        rest ^= low
    memo[mask] = best
    return best


def q_value(g: Graph, v: int, w: int) -> int:
    """Matching number of the complement of w's neighborhood inside N(v).

    Neighborhoods are Ramsey-bounded, so an exhaustive matching search
    (with memoization on vertex masks) beats carrying a blossom
    implementation around.
    """
    if not g.has_edge(v, w):
        raise NotNeighborError(f"{w} is not a neighbor of {v}")
    common = sorted(bits(g._adj[v] & g._adj[w]))
    sub, _ = induced_subgraph(g, common)
    comp = complement(sub)
    full = (1 << comp.n) - 1
    return _max_matching_mask(comp._adj, full, {})


def independence_number(g: Graph) -> int:
    """Size of a largest independent set (max clique of the complement)."""
    return max_clique(complement(g))[0]


def check_degree_lemma(g: Graph, omega: int) -> list[LemmaReport]:
    """Per-vertex degree cap below the Ramsey number, plus neighborhood structure.

    Reports, for every vertex: deg(v) <= R(omega,3)-1; no clique of size
    omega inside the neighborhood; no independent triple inside it.
    """
    require_claw_free(g)
    r = ramsey_bound(omega)
    reports = []
    for v in range(g.n):
        deg = g.degree(v)
        reports.append(_report("degree-below-ramsey", v, None, deg, r - 1))
        sub, _ = induced_subgraph(g, g.neighbors(v))
        reports.append(
            _report("neighborhood-clique-cap", v, None, max_clique(sub)[0], omega - 1)
        )
        reports.append(
            _report("neighborhood-stability-cap", v, None, independence_number(sub), 2)
        )
    return reports


def check_exterior_bounds(g: Graph, omega: int) -> list[LemmaReport]:
    """Per edge (v, w): the exterior of w is a clique of at most omega-1 vertices."""
    require_claw_free(g)
    reports = []
    for v in range(g.n):
        for w in g.neighbors(v):
            ext = exterior_neighbors(g, v, w)
            reports.append(_report("exterior-size", v, w, len(ext), omega - 1))
            nonedges = sum(
                1
                for x in ext
                for y in ext
                if x < y and not g.has_edge(x, y)
            )
            reports.append(_report("exterior-nonedges", v, w, nonedges, 0))
    return reports


def _second_degree_cap(omega: int) -> Fraction:
    # Max of three candidate caps on the square degree of a high-degree
    # vertex, evaluated with exact rationals; R may be replaced by any
    # upper bound without invalidating it.
    r = ramsey_bound(omega)
    t1 = Fraction(2 * omega - 1) + (Fraction(omega) - Fraction(1, 2)) * (omega - 1)
    t2 = Fraction(r - 2) + Fraction((r - 2) * (omega - 1)) / (Fraction(r - 1, 2) + 2 - omega)
    t3 = Fraction(r - 1) + Fraction((r - 1) * (omega - 1)) / (Fraction(r, 2) + 2 - omega)
    return max(t1, t2, t3)


def check_second_neighborhood_bounds(g: Graph, omega: int) -> list[LemmaReport]:
    """Evaluate every second-neighborhood inequality that applies per vertex.

    Emitted per vertex: the half-weighted bound through Z(v) (both the
    weighted sum and its closed form), the matching-weighted bound through
    q(w) (both forms), and, when deg(v) >= 2*omega-1: saturation of Z(v),
    the half-degree bound, and (only for omega >= 4, where the matching
    lower bound needs that much room) the matching-weighted degree bound
    and the square-degree cap. One extra report caps the maximum square
    degree globally.
    """
    require_claw_free(g)
    reports = []
    sq = square(g)
    worst_v = 0
    worst = 0
    for v in range(g.n):
        deg = g.degree(v)
        sqd = sq.degree(v)
        if sqd > worst:
            worst, worst_v = sqd, v
        snn = sqd - deg
        nbrs = g.neighbors(v)
        z = z_set(g, v)
        ext = {w: len(exterior_neighbors(g, v, w)) for w in nbrs}
        zsum = sum(
            (Fraction(ext[w], 2) if w in z else Fraction(ext[w])) for w in nbrs
        )
        reports.append(_report("second-neighborhood-z-sum", v, None, snn, zsum))
        reports.append(
            _report(
                "second-neighborhood-z",
                v,
                None,
                snn,
                (Fraction(deg) - Fraction(len(z), 2)) * (omega - 1),
            )
        )
        qs = {w: q_value(g, v, w) for w in nbrs}
        qsum = sum(Fraction(ext[w], qs[w] + 1) for w in nbrs)
        reports.append(_report("second-neighborhood-q-sum", v, None, snn, qsum))
        reports.append(
            _report(
                "second-neighborhood-q",
                v,
                None,
                snn,
                (omega - 1) * sum(Fraction(1, qs[w] + 1) for w in nbrs),
            )
        )
        if deg >= 2 * omega - 1:
            reports.append(_report("z-covers-neighborhood", v, None, deg, len(z)))
            reports.append(
                _report(
                    "half-degree-bound", v, None, snn, Fraction(deg * (omega - 1), 2)
                )
            )
            if omega >= 4:
                denom = (deg + 2) // 2 + 2 - omega  # ceil((deg+1)/2) + 2 - omega
                reports.append(
                    _report(
                        "matching-weighted-degree-bound",
                        v,
                        None,
                        snn,
                        Fraction(deg * (omega - 1), denom),
                    )
                )
                reports.append(
                    _report(
                        "square-degree-cap", v, None, sqd, _second_degree_cap(omega)
                    )
                )
    reports.append(
        _report("max-square-degree", worst_v, None, worst, 2 * omega * (omega - 1))
    )
    return reports


def run_lemma_suite(g: Graph, omega: int) -> list[LemmaReport]:
    """All lemma reports for one graph: degree caps, exteriors, second neighborhoods."""
    return (
        check_degree_lemma(g, omega)
        + check_exterior_bounds(g, omega)
        + check_second_neighborhood_bounds(g, omega)
    )
