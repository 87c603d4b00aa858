"""Immutable bitmask graphs, named families, graph6 codec, canonical forms.

A graph on n <= 64 vertices is stored as a tuple of n adjacency bitmasks,
so degree/neighborhood queries are single popcounts and intersections.
All operations are pure: mutation returns a fresh Graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Graph6Error(GraphError):
    """Malformed graph6 string; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` has bit j set iff {i, j} is an edge."""

    n: int
    adj: tuple

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if (row >> i) & 1:
                raise GraphError(f"loop at vertex {i}")
        for i, row in enumerate(self.adj):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adj[j] >> i) & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    # -- queries ---------------------------------------------------------

    def degree(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range")
        return self.adj[u].bit_count()

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self):
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                yield (u, u + 1 + v)

    def degree_sequence(self) -> tuple:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def neighbors(self, u: int):
        m = self.adj[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            yield v

    # -- mutation by copy ------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError("cannot add a loop")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError("vertex out of range")
        if self.has_edge(u, v):
            raise GraphError(f"edge {{{u},{v}}} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def delete_vertex(self, u: int) -> "Graph":
        if self.n < 2:
            raise GraphError("cannot delete the last vertex")
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range")
        low = (1 << u) - 1
        rows = []
        for i in range(self.n):
            if i == u:
                continue
            row = self.adj[i]
            rows.append((row & low) | ((row >> (u + 1)) << u))
        return Graph(self.n - 1, tuple(rows))

    def relabel(self, perm) -> "Graph":
        """Return the graph with old vertex ``perm[i]`` at new position i."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            m = self.adj[v]
            row = 0
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                row |= 1 << pos[w]
            rows[i] = row
        return Graph(self.n, tuple(rows))

    # -- structure -------------------------------------------------------

    def components(self):
        """Vertex bitmasks of connected components, ascending by lowest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = self.adj[s] & ~comp
            while frontier:
                comp |= frontier
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def induced_subgraph(self, mask: int) -> "Graph":
        verts = []
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            verts.append(v)
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            mm = self.adj[v] & mask
            while mm:
                w = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                row |= 1 << pos[w]
            rows.append(row)
        return Graph(len(verts), tuple(rows))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def adjacency_rows(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.uint64)

    def __repr__(self):
        return f"Graph({self.n}, g6={to_graph6(self)!r})"


# -- constructors --------------------------------------------------------


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError("loop in edge list")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(r: int) -> Graph:
    if r < 1:
        raise GraphError("complete graph needs r >= 1")
    full = (1 << r) - 1
    return Graph(r, tuple(full ^ (1 << i) for i in range(r)))


def complete_multipartite(sizes) -> Graph:
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    n = sum(sizes)
    parts = []
    start = 0
    for s in sizes:
        parts.append(((1 << s) - 1) << start)
        start += s
    full = (1 << n) - 1
    out = [0] * n
    start = 0
    for s, p in zip(sizes, parts):
        for i in range(s):
            out[start + i] = full & ~p
        start += s
    return Graph(n, tuple(out))


def complete_bipartite(s: int, t: int) -> Graph:
    return complete_multipartite([s, t])


def turan(r: int, n: int) -> Graph:
    """Complete r-partite graph on n vertices with near-equal parts."""
    if r < 1 or n < r:
        raise GraphError(f"Turan graph needs 1 <= r <= n, got r={r}, n={n}")
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    return complete_multipartite(sizes)


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs k >= 1")
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(t: int) -> Graph:
    """K_{1,t}: a center joined to t leaves (t + 1 vertices)."""
    if t < 1:
        raise GraphError("star needs t >= 1")
    return from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def disjoint_union(graphs) -> Graph:
    graphs = list(graphs)
    if not graphs:
        raise GraphError("union of no graphs")
    n = sum(g.n for g in graphs)
    rows = []
    shift = 0
    for g in graphs:
        rows.extend(row << shift for row in g.adj)
        shift += g.n
    return Graph(n, tuple(rows))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_multipartite_matrix(sizes) -> np.ndarray:
    """Dense adjacency of a complete multipartite graph, any size.

    Companion to :func:`turan` for part counts beyond the 64-vertex cap of
    :class:`Graph`; used to probe closed forms like q(T_2(n)) = n at large n.
    """
    sizes = list(sizes)
    n = sum(sizes)
    a = np.ones((n, n)) - np.eye(n)
    start = 0
    for s in sizes:
        a[start : start + s, start : start + s] = 0.0
        start += s
    return a


def turan_matrix(r: int, n: int) -> np.ndarray:
    if r < 1 or n < r:
        raise GraphError(f"Turan graph needs 1 <= r <= n, got r={r}, n={n}")
    q, rem = divmod(n, r)
    return complete_multipartite_matrix([q + 1] * rem + [q] * (r - rem))


# -- graph6 codec --------------------------------------------------------


def to_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(63 + g.n)
    else:
        head = "~" + "".join(
            chr(63 + ((g.n >> s) & 0x3F)) for s in (12, 6, 0)
        )
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    out = [head]
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    if not s:
        raise Graph6Error("empty string", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", off)
    if s[0] == "~":
        if len(s) < 4:
            raise Graph6Error("truncated long-form vertex count", len(s))
        if s[1] == "~":
            raise Graph6Error("8-byte vertex counts exceed the 64-vertex cap", 1)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
        body_off = 4
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        body_off = 1
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"body length {len(body)} != expected {need} for n={n}",
            body_off + min(len(body), need),
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        for sh in range(5, -1, -1):
            bits.append((val >> sh) & 1)
    for off, b in enumerate(bits[nbits:]):
        if b:
            raise Graph6Error("nonzero padding bits", body_off + (nbits + off) // 6)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- canonical form ------------------------------------------------------


def _refine(n, adj, cells):
    """Equitable refinement of an ordered partition by neighbor counts."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) > 1:
                changed = True
            for sig in sorted(buckets):
                new_cells.append(tuple(buckets[sig]))
        cells = new_cells
        if not changed:
            return tuple(cells)


def _interchangeable(adj, u, v):
    m = ~((1 << u) | (1 << v))
    return (adj[u] & m) == (adj[v] & m)


def _encode(n, adj, perm):
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = [0] * n
    for i, v in enumerate(perm):
        m = adj[v]
        row = 0
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            row |= 1 << pos[w]
        rows[i] = row
    return tuple(rows)


@lru_cache(maxsize=1 << 20)
def _canonical(n, adj):
    """Canonical labeling: (graph6 of the relabeled graph, permutation).

    Degree-partition refinement with backtracking over cell individualization
    (McKay-style); branches whose chosen vertex is swappable with an already
    tried one are skipped, which collapses cliques, cocliques and equal parts.
    """
    if n == 1:
        return "@", (0,)
    by_deg = {}
    for v in range(n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    initial = tuple(tuple(by_deg[d]) for d in sorted(by_deg, reverse=True))

    best = [None, None]

    def rec(cells):
        cells = _refine(n, adj, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            perm = tuple(c[0] for c in cells)
            enc = _encode(n, adj, perm)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                best[1] = perm
            return
        cell = cells[target]
        reps = []
        for v in cell:
            if any(_interchangeable(adj, v, u) for u in reps):
                continue
            reps.append(v)
            rest = tuple(w for w in cell if w != v)
            rec(cells[:target] + ((v,), rest) + cells[target + 1 :])

    rec(initial)
    perm = best[1]
    return to_graph6(Graph(n, best[0])), perm


def canonical_form(g: Graph) -> str:
    """String equal for two graphs iff they are isomorphic."""
    return _canonical(g.n, g.adj)[0]


def canonical_permutation(g: Graph):
    """Permutation p with p[i] = old vertex at canonical position i."""
    return _canonical(g.n, g.adj)[1]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_permutation(g))
