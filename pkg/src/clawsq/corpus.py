"""Instance generators, named graphs, DIMACS files, and the shipped corpus.

Every generator is pure given its parameters and seed (each call owns a
fresh ``random.Random``, documented 64-bit Mersenne Twister; no global
state), so corpus entries carry provenance sufficient to regenerate them
bit for bit.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    DimacsError,
    DuplicateEdgeError,
    GenerationExhaustedError,
    InvalidSpecError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from .graph import Graph, build_graph, max_clique
from .oracle import brute_force_claw_free, line_graph_of


# ---------------------------------------------------------------------------
# named graphs


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpecError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def claw() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def octahedron() -> Graph:
    """K_{2,2,2}: all pairs except the three antipodal ones."""
    non_edges = {(0, 1), (2, 3), (4, 5)}
    return build_graph(
        6, [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in non_edges]
    )


def cocktail_party(k: int) -> Graph:
    """K_{k x 2}: 2k vertices, all pairs except k disjoint ones."""
    non_edges = {(2 * i, 2 * i + 1) for i in range(k)}
    return build_graph(
        2 * k,
        [(i, j) for i in range(2 * k) for j in range(i + 1, 2 * k) if (i, j) not in non_edges],
    )


def squared_cycle(n: int) -> Graph:
    """Circulant C_n(1, 2); claw-free with clique number 3 for n >= 7."""
    if n < 5:
        raise InvalidSpecError("squared cycles need at least 5 vertices")
    edges = {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2)}
    return build_graph(n, sorted(edges))


def gen_icosahedron() -> Graph:
    """The icosahedron on a fixed labeling.

    0 is a hub over the ring 1..5, 11 a hub over the ring 6..10, and ring
    vertex i is joined to 5+i and to 5+(i mod 5)+1.
    """
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(11, 5 + i) for i in range(1, 6)]
    edges += [(5 + i, 5 + i % 5 + 1) for i in range(1, 6)]
    for i in range(1, 6):
        edges.append((i, 5 + i))
        edges.append((i, 5 + i % 5 + 1))
    return build_graph(12, sorted(tuple(sorted(e)) for e in edges))


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class BlowupSpec:
    """Class sizes for a five-cycle blow-up."""

    sizes: tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.sizes) != 5:
            raise InvalidSpecError("a blow-up spec takes exactly five class sizes")
        if any(s < 1 for s in self.sizes):
            raise InvalidSpecError("class sizes must be positive")

    @property
    def degree_per_class(self) -> tuple[int, ...]:
        s = self.sizes
        return tuple(s[(i - 1) % 5] + s[(i + 1) % 5] for i in range(5))

    @property
    def max_degree(self) -> int:
        return max(self.degree_per_class)


def gen_blowup_c5(spec: BlowupSpec) -> Graph:
    """Five independent classes joined completely between consecutive ones."""
    sizes = spec.sizes
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    classes = [list(range(offsets[i], offsets[i + 1])) for i in range(5)]
    edges = []
    for i in range(5):
        for u in classes[i]:
            for v in classes[(i + 1) % 5]:
                edges.append(tuple(sorted((u, v))))
    return build_graph(offsets[-1], sorted(set(edges)))


def gen_line_graph(f: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of f and the ordered edge list serving as the bijection."""
    return line_graph_of(f)


def _random_bounded_graph(m: int, cap: int, rng: random.Random) -> Graph:
    """Random graph with m edges and maximum degree at most cap."""
    nf = max(4, (2 * m + cap - 1) // cap + 1)
    for _ in range(60):
        pairs = [(i, j) for i in range(nf) for j in range(i + 1, nf)]
        rng.shuffle(pairs)
        deg = [0] * nf
        chosen = []
        for u, v in pairs:
            if deg[u] < cap and deg[v] < cap:
                chosen.append((u, v))
                deg[u] += 1
                deg[v] += 1
                if len(chosen) == m:
                    return build_graph(nf, chosen)
        nf += 1
    raise GenerationExhaustedError(f"could not place {m} edges under degree cap {cap}")


def gen_random_claw_free(
    n: int, omega_target: int, seed: int, strategy: str = "line-graph"
) -> Graph:
    """Seeded random claw-free graph; claw-freeness is verified before return.

    Strategies: "line-graph" returns the line graph of a random graph with
    n edges and maximum degree at most omega_target; "blowup" the line
    graph of a random five-cycle blow-up with degrees capped by
    omega_target (n is treated as an upper bound on the output order);
    "rejection" filters dense or sparse uniform graphs on n vertices by
    claw-freeness and clique number.
    """
    if n < 0 or (strategy == "rejection" and n > 200):
        raise InvalidSpecError(f"unsupported size {n} for strategy {strategy}")
    if omega_target < 2:
        raise InvalidSpecError("omega_target must be at least 2")
    rng = random.Random(seed)
    if strategy == "line-graph":
        if n == 0:
            return build_graph(0, [])
        f = _random_bounded_graph(n, omega_target, rng)
        g, _ = gen_line_graph(f)
    elif strategy == "blowup":
        for _ in range(1000):
            spec = BlowupSpec(tuple(rng.randint(1, 3) for _ in range(5)))
            if spec.max_degree <= omega_target and gen_blowup_c5(spec).edge_count <= max(n, 5):
                g, _ = gen_line_graph(gen_blowup_c5(spec))
                break
        else:
            raise GenerationExhaustedError("no blow-up fits the requested bounds")
    elif strategy == "rejection":
        if n == 0:
            return build_graph(0, [])
        g = None
        for _ in range(5000):
            p = rng.choice((0.10, 0.13, 0.88, 0.92))
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < p
            ]
            candidate = build_graph(n, edges)
            if brute_force_claw_free(candidate) and max_clique(candidate)[0] <= omega_target:
                g = candidate
                break
        if g is None:
            raise GenerationExhaustedError(
                f"rejection sampling found no claw-free graph on {n} vertices"
            )
    else:
        raise InvalidSpecError(f"unknown strategy {strategy!r}")
    if not brute_force_claw_free(g):
        raise GenerationExhaustedError("generator produced a claw; this is a bug")
    return g


# ---------------------------------------------------------------------------
# DIMACS .col


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS .col document (1-based 'e u v' lines under one 'p edge' line)."""
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError("second problem line", line=lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError("problem line must read 'p edge <n> <m>'", line=lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError("non-integer counts in problem line", line=lineno)
        elif fields[0] == "e":
            if n is None:
                raise DimacsError("edge before problem line", line=lineno)
            if len(fields) != 3:
                raise DimacsError("edge line must read 'e <u> <v>'", line=lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError("non-integer endpoint", line=lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRangeError(f"line {lineno}: endpoint outside 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"unknown directive {fields[0]!r}", line=lineno)
    if n is None:
        raise DimacsError("missing problem line")
    try:
        g = build_graph(n, edges)
    except (SelfLoopError, DuplicateEdgeError) as exc:
        raise type(exc)(f"in DIMACS input: {exc}")
    if g.edge_count != m:
        raise DimacsError(f"problem line promises {m} edges, found {g.edge_count}")
    return g


def write_dimacs(g: Graph, comments: tuple[str, ...] = ()) -> str:
    """Serialize normalized DIMACS: sorted 1-based edges, LF endings."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.edge_count}")
    for u, v in sorted(g.edges()):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def load_dimacs(path) -> Graph:
    return parse_dimacs(Path(path).read_text(encoding="ascii"))


# ---------------------------------------------------------------------------
# the shipped corpus


@dataclass
class CorpusEntry:
    """One corpus graph with enough provenance to regenerate it exactly."""

    id: str
    graph: Graph
    generator: str
    params: dict = field(default_factory=dict)
    seed: int | None = None
    known: dict = field(default_factory=dict)

    def manifest_row(self, filename: str) -> dict:
        return {
            "id": self.id,
            "file": filename,
            "generator": self.generator,
            "params": self.params,
            "seed": self.seed,
            "known": self.known,
        }


def _entry(id_, graph, generator, params=None, seed=None) -> CorpusEntry:
    # Known fields are computed, not assumed: definition-level claw check
    # plus the exact clique solver.
    known = {
        "claw_free": brute_force_claw_free(graph),
        "omega": max_clique(graph)[0],
    }
    return CorpusEntry(id_, graph, generator, params or {}, seed, known)


def default_corpus() -> list[CorpusEntry]:
    """The deterministic claw-free corpus the acceptance suite runs on.

    Mixes named instances, line graphs of random graphs with max degree 3,
    4 and 5, blown-up five-cycle line graphs, cocktail parties, squared
    cycles, and rejection-sampled graphs; more than 500 entries, all on at
    most 40 vertices.
    """
    entries: list[CorpusEntry] = []

    entries.append(_entry("icosahedron", gen_icosahedron(), "icosahedron"))
    entries.append(_entry("octahedron", octahedron(), "octahedron"))
    for k in range(3, 9):
        entries.append(_entry(f"cocktail-{k}", cocktail_party(k), "cocktail-party", {"k": k}))
    for n in range(4, 21):
        entries.append(_entry(f"cycle-{n}", cycle(n), "cycle", {"n": n}))
    for n in range(1, 13):
        entries.append(_entry(f"path-{n}", path(n), "path", {"n": n}))
    for n in range(7, 27):
        entries.append(_entry(f"squared-cycle-{n}", squared_cycle(n), "squared-cycle", {"n": n}))
    for n in range(2, 6):
        entries.append(_entry(f"complete-{n}", complete(n), "complete", {"n": n}))

    named_roots = {
        "k4": complete(4),
        "k5": complete(5),
        "k33": build_graph(6, [(i, j + 3) for i in range(3) for j in range(3)]),
        "petersen": petersen(),
        "icosahedron": gen_icosahedron(),
    }
    for name, root in sorted(named_roots.items()):
        lg, _ = gen_line_graph(root)
        entries.append(_entry(f"line-{name}", lg, "line-graph", {"of": name}))

    blowup_sizes = [
        (1, 1, 1, 1, 1),
        (1, 1, 1, 2, 2),
        (1, 1, 2, 1, 2),
        (1, 1, 2, 2, 2),
        (1, 2, 1, 2, 2),
        (2, 2, 2, 2, 2),
        (1, 2, 2, 2, 3),
        (2, 2, 3, 2, 3),
        (1, 1, 3, 1, 3),
        (2, 3, 2, 3, 2),
    ]
    for sizes in blowup_sizes:
        f = gen_blowup_c5(BlowupSpec(sizes))
        lg, _ = gen_line_graph(f)
        label = "".join(str(s) for s in sizes)
        entries.append(_entry(f"line-blowup-{label}", lg, "line-blowup", {"sizes": list(sizes)}))

    for cap in (3, 4, 5):
        for m in (8, 12, 16, 20, 25, 30, 35, 40):
            for seed in range(12):
                gid = f"rand-line-d{cap}-m{m}-s{seed}"
                g = gen_random_claw_free(m, cap, seed, strategy="line-graph")
                entries.append(
                    _entry(gid, g, "random-claw-free",
                           {"n": m, "omega_target": cap, "strategy": "line-graph"}, seed)
                )

    for cap in (4, 5):
        for seed in range(20):
            gid = f"rand-blowup-d{cap}-s{seed}"
            g = gen_random_claw_free(40, cap, seed, strategy="blowup")
            entries.append(
                _entry(gid, g, "random-claw-free",
                       {"n": 40, "omega_target": cap, "strategy": "blowup"}, seed)
            )

    for n in (8, 10, 12, 14):
        for seed in range(30):
            gid = f"rand-reject-n{n}-s{seed}"
            g = gen_random_claw_free(n, 12, seed, strategy="rejection")
            entries.append(
                _entry(gid, g, "random-claw-free",
                       {"n": n, "omega_target": 12, "strategy": "rejection"}, seed)
            )

    return entries


def write_corpus(entries, directory) -> Path:
    """Write one DIMACS file per entry plus a manifest; returns the manifest path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest = []
    for entry in entries:
        filename = f"{entry.id}.col"
        (directory / filename).write_text(
            write_dimacs(entry.graph, comments=(entry.id,)), encoding="ascii"
        )
        manifest.append(entry.manifest_row(filename))
    manifest_path = directory / "manifest.json"
    manifest_path.write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="ascii"
    )
    return manifest_path
