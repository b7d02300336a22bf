"""Undirected labeled graphs on vertex set {0, ..., n-1}.

Vertices are integers so adjacency can live in per-vertex bitmasks, which keeps
connectivity and bipartiteness checks cheap during exhaustive scans. Graphs are
immutable; "mutators" return new instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations


class GraphFormatError(ValueError):
    """Raised when graph6 or edge-list input cannot be parsed."""


def _normalize_edge(u: int, v: int, n: int) -> tuple[int, int]:
    if not (isinstance(u, int) and isinstance(v, int)):
        raise ValueError(f"edge endpoints must be integers, got ({u!r}, {v!r})")
    if u == v:
        raise ValueError(f"loop at vertex {u} is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of edges.

    ``adj[v]`` is the neighbor bitmask of vertex v, derived from the edges.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __init__(self, n: int, edges=()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        norm = frozenset(_normalize_edge(u, v, n) for u, v in edges)
        masks = [0] * n
        for u, v in norm:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "adj", tuple(masks))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v, self.n) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:  # keep the default dataclass repr out of test logs
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# constructors

def complete(n: int) -> Graph:
    """K_n."""
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s}: sides {0..r-1} and {r..r+s-1}."""
    if r < 1 or s < 1:
        raise ValueError(f"both sides must be nonempty, got r={r}, s={s}")
    return Graph(r + s, ((u, r + v) for u in range(r) for v in range(s)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g on its own labels, h shifted up by g.n."""
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, list(g.edges) + list(shifted))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides (g keeps labels 0..g.n-1)."""
    base = disjoint_union(g, h)
    cross = ((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph(base.n, list(base.edges) + list(cross))


def join_split(n: int, k: int, r: int) -> Graph:
    """The split-clique family: a k-clique joined to K_r plus K_{n-k-r}.

    Vertex layout is fixed: clique block 0..k-1, then the r-block, then the
    rest. Valid for 1 <= k <= n-2 and 1 <= r <= n-k-1.
    """
    if not 1 <= k <= n - 2:
        raise ValueError(f"need 1 <= k <= n-2, got n={n}, k={k}")
    if not 1 <= r <= n - k - 1:
        raise ValueError(f"need 1 <= r <= n-k-1, got n={n}, k={k}, r={r}")
    return join(complete(k), disjoint_union(complete(r), complete(n - k - r)))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = _normalize_edge(u, v, g.n)
    if e not in g.edges:
        raise ValueError(f"edge ({u}, {v}) not present")
    return Graph(g.n, g.edges - {e})


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) with a caller-supplied RNG (tests stay seeded)."""
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


# ---------------------------------------------------------------------------
# edge-mask helpers (ordering shared with the scan kernels: lexicographic
# upper-triangle, so bit 0 is (0,1), bit 1 is (0,2), ...)

def edge_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def edge_mask(g: Graph) -> int:
    order = {e: i for i, e in enumerate(edge_order(g.n))}
    mask = 0
    for e in g.edges:
        mask |= 1 << order[e]
    return mask


def from_edge_mask(n: int, mask: int) -> Graph:
    order = edge_order(n)
    if mask < 0 or mask >= 1 << len(order):
        raise ValueError(f"mask {mask} out of range for n={n}")
    return Graph(n, (order[i] for i in range(len(order)) if mask >> i & 1))


# ---------------------------------------------------------------------------
# structure queries

@dataclass(frozen=True)
class ComponentSummary:
    """Connected components with a bipartite flag for each.

    ``vertex_sets`` holds one bitmask per component; components are ordered by
    their smallest vertex.
    """

    count: int
    bipartite_flags: tuple[bool, ...]
    vertex_sets: tuple[int, ...]

    @property
    def bipartite_count(self) -> int:
        return sum(self.bipartite_flags)

    @property
    def is_connected(self) -> bool:
        return self.count == 1

    @property
    def is_bipartite(self) -> bool:
        return all(self.bipartite_flags)


def components(g: Graph) -> ComponentSummary:
    """BFS over adjacency bitmasks, 2-coloring each component as it goes."""
    seen = 0
    flags: list[bool] = []
    sets: list[int] = []
    full = (1 << g.n) - 1
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp_mask = _component_mask(g, start)
        seen |= comp_mask
        flags.append(_is_bipartite_component(g, start))
        sets.append(comp_mask)
        if seen == full:
            break
    return ComponentSummary(len(flags), tuple(flags), tuple(sets))


def _component_mask(g: Graph, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nbrs = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nbrs |= g.adj[v]
            f &= f - 1
        frontier = nbrs & ~comp
        comp |= frontier
    return comp


def _is_bipartite_component(g: Graph, start: int) -> bool:
    color0 = 1 << start
    color1 = 0
    frontier = color0
    side = 0
    while frontier:
        nbrs = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nbrs |= g.adj[v]
            f &= f - 1
        if side == 0:
            if nbrs & color0:
                return False
            frontier = nbrs & ~(color0 | color1)
            color1 |= frontier
        else:
            if nbrs & color1:
                return False
            frontier = nbrs & ~(color0 | color1)
            color0 |= frontier
        side ^= 1
    return True


def is_connected(g: Graph) -> bool:
    return _component_mask(g, 0) == (1 << g.n) - 1


def vertex_connectivity(g: Graph) -> int:
    """Brute-force vertex connectivity; 0 for disconnected graphs.

    Checks removal sets in increasing size, so this is O(2^n * poly): fine for
    the desk-scale n this package targets, unusable beyond n ~ 20. Complete
    graphs get the usual kappa(K_n) = n - 1 convention.
    """
    if not is_connected(g):
        return 0
    if g.edge_count == g.n * (g.n - 1) // 2:
        return g.n - 1
    full = (1 << g.n) - 1
    for size in range(1, g.n - 1):
        for cut in combinations(range(g.n), size):
            removed = 0
            for v in cut:
                removed |= 1 << v
            if not _connected_within(g, full & ~removed):
                return size
    return g.n - 1  # unreachable for non-complete graphs


def _connected_within(g: Graph, allowed: int) -> bool:
    if allowed == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    comp = 1 << start
    frontier = comp
    while frontier:
        nbrs = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nbrs |= g.adj[v]
            f &= f - 1
        frontier = nbrs & allowed & ~comp
        comp |= frontier
    return comp == allowed


# ---------------------------------------------------------------------------
# serialization: graph6 (n <= 62) and a plain edge-list text format

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """graph6 string for n <= 62 (single size byte variant)."""
    if g.n > 62:
        raise GraphFormatError(f"graph6 writer limited to n <= 62, got n={g.n}")
    bits: list[int] = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        chars.append(chr(63 + group))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise GraphFormatError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    for c, v in zip(s, data):
        if not 0 <= v <= 63:
            raise GraphFormatError(f"invalid graph6 byte {c!r}")
    if data[0] == 63:
        raise GraphFormatError("graph6 reader limited to n <= 62")
    n = data[0]
    if n < 1:
        raise GraphFormatError(f"graph6 vertex count must be positive, got {n}")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = data[1:]
    if len(body) != need_bytes:
        raise GraphFormatError(
            f"graph6 body has {len(body)} data bytes, expected {need_bytes} for n={n}"
        )
    bits: list[int] = []
    for v in body:
        for shift in range(5, -1, -1):
            bits.append(v >> shift & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    if any(bits[need_bits:]):
        raise GraphFormatError("nonzero padding bits in graph6 input")
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """Text form: first line 'n m', then one 'u v' line per edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            bad = parts[0] if not parts[0].lstrip("-").isdigit() else parts[1]
            raise GraphFormatError(f"non-integer token {bad!r} in edge line {ln!r}") from exc
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
