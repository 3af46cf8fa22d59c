"""Brute-force reference implementations the tests check library code against.

Everything here recomputes from first principles (BFS, subset enumeration,
assignment enumeration) and deliberately shares no code path with the
library routines it validates.
"""

from collections import deque
from itertools import combinations, product


def bfs_distances(g, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def brute_square_degree(g, v):
    dist = bfs_distances(g, v)
    return sum(1 for u, d in dist.items() if u != v and d <= 2)


def brute_max_clique(g):
    """Largest clique size by subset enumeration, growing until none exists."""
    best = 0
    for size in range(1, g.n + 1):
        if not any(
            all(g.has_edge(u, v) for u, v in combinations(subset, 2))
            for subset in combinations(range(g.n), size)
        ):
            break
        best = size
    return best


def greedy_clique(g):
    """Clique grown greedily from each start vertex; a lower bound only."""
    best = 0
    for start in range(g.n):
        clique = [start]
        for v in range(g.n):
            if v != start and all(g.has_edge(v, u) for u in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def brute_chromatic_tiny(g, max_colors=8):
    """Minimum palette by enumerating every assignment; only for tiny graphs."""
    if g.n == 0:
        return 0
    edges = list(g.edges())
    for k in range(1, max_colors + 1):
        for assignment in product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
    return None


def has_claw_triples(g):
    """Claw presence by checking every center and leaf triple."""
    for v in range(g.n):
        for x, y, z in combinations(g.neighbors(v), 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return True
    return False
