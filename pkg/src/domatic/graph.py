"""Dense-id simple graphs, Cartesian products, and named graph families.

Vertices are dense 0-based integers.  Product graphs carry a row-major
mixed-radix labeling (rightmost factor fastest), so nested and flat products
of the same factor list produce bit-identical vertex ids.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadCover,
    GraphTooLarge,
    InvalidSpec,
    IsolatedVertexError,
)

DEFAULT_MAX_VERTICES = 1 << 20
COMPLEMENT_MAX_VERTICES = 1 << 12


@dataclass(frozen=True)
class ProductLabeling:
    """Mixed-radix coordinates for product vertices.

    Vertex id = sum_i x_i * prod_{j>i} n_j, i.e. the rightmost factor varies
    fastest.
    """

    radices: tuple[int, ...]
    factor_names: tuple[str, ...]

    def __post_init__(self):
        if len(self.radices) != len(self.factor_names):
            raise InvalidSpec("radices and factor_names must have equal length")
        if not self.radices or any(r < 1 for r in self.radices):
            raise InvalidSpec("every factor size must be >= 1")

    @property
    def size(self) -> int:
        return math.prod(self.radices)

    def coords(self, v: int) -> tuple[int, ...]:
        out = []
        for r in reversed(self.radices):
            out.append(v % r)
            v //= r
        return tuple(reversed(out))

    def vertex(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.radices):
            raise InvalidSpec("coordinate arity mismatch")
        v = 0
        for x, r in zip(coords, self.radices):
            if not 0 <= x < r:
                raise InvalidSpec(f"coordinate {x} out of range for radix {r}")
            v = v * r + x
        return v

    def coords_array(self) -> np.ndarray:
        """All vertex coordinates in id order, shape (size, num_factors)."""
        ids = np.arange(self.size, dtype=np.int64)
        cols = []
        block = self.size
        for r in self.radices:
            block //= r
            cols.append((ids // block) % r)
        return np.stack(cols, axis=1)


class Graph:
    """Immutable simple undirected graph with CSR adjacency.

    Invariants: adjacency is symmetric, self-loop free, and neighbor lists are
    sorted ascending.  Isolated vertices are rejected unless
    ``allow_isolated=True`` (most operations assume minimum degree >= 1).
    """

    __slots__ = ("n", "indptr", "indices", "labeling", "name", "allow_isolated")

    def __init__(
        self,
        n: int,
        edges,
        *,
        labeling: Optional[ProductLabeling] = None,
        name: Optional[str] = None,
        allow_isolated: bool = False,
        max_vertices: int = DEFAULT_MAX_VERTICES,
    ):
        if n < 1:
            raise InvalidSpec("graph needs at least one vertex")
        if n > max_vertices:
            raise GraphTooLarge(f"{n} vertices exceeds the cap {max_vertices}")
        if labeling is not None and labeling.size != n:
            raise InvalidSpec("labeling size does not match vertex count")

        e = np.asarray(edges if not isinstance(edges, (list, tuple)) else list(edges), dtype=np.int64)
        e = e.reshape(-1, 2)
        if e.size:
            if e.min() < 0 or e.max() >= n:
                raise InvalidSpec("edge endpoint out of range")
            if (e[:, 0] == e[:, 1]).any():
                raise InvalidSpec("self-loops are not allowed")
            lo = np.minimum(e[:, 0], e[:, 1])
            hi = np.maximum(e[:, 0], e[:, 1])
            keys = np.unique(lo * n + hi)
            lo, hi = keys // n, keys % n
        else:
            lo = hi = np.empty(0, dtype=np.int64)

        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])

        self.n = n
        self.indptr = indptr
        self.indices = dst[order].astype(np.int32)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.labeling = labeling
        self.name = name
        self.allow_isolated = allow_isolated

        if not allow_isolated and (self.degrees == 0).any():
            v = int(np.argmin(self.degrees))
            raise IsolatedVertexError(f"vertex {v} is isolated")

    # -- basic accessors ---------------------------------------------------

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = int(np.searchsorted(nbrs, v))
        return i < len(nbrs) and nbrs[i] == v

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min())

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max())

    @property
    def has_isolated(self) -> bool:
        return bool((self.degrees == 0).any())

    def regularity(self) -> Optional[int]:
        """Common degree if the graph is regular, else None."""
        d = self.degrees
        r = int(d[0])
        return r if (d == r).all() else None

    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) array with u < v, sorted lexicographically."""
        rows = np.repeat(np.arange(self.n, dtype=np.int32), self.degrees)
        mask = rows < self.indices
        return np.stack([rows[mask], self.indices[mask]], axis=1)

    def edges(self) -> Iterable[tuple[int, int]]:
        for u, v in self.edge_array():
            yield int(u), int(v)

    def components(self) -> list[list[int]]:
        """Connected components as sorted id lists, ordered by smallest id."""
        seen = np.zeros(self.n, dtype=bool)
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.neighbors(u):
                    if not seen[w]:
                        seen[w] = True
                        comp.append(int(w))
                        queue.append(int(w))
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self):
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.num_edges}>"


# -- named families ---------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidSpec("path needs at least 2 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidSpec("complete graph needs at least 2 vertices")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidSpec("part sizes must be >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph(a + b, edges, name=f"K{a},{b}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise InvalidSpec("need >= 2 parts, each of size >= 1")
    bounds = np.cumsum([0] + list(parts))
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    return Graph(int(bounds[-1]), edges, name="K" + ",".join(map(str, parts)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner, name="Petersen")


def cartesian_product(
    factors: Sequence[Graph], max_vertices: int = DEFAULT_MAX_VERTICES
) -> Graph:
    """Cartesian product of one or more graphs.

    Vertex ids follow the row-major mixed-radix labeling over the factor
    orders, so the operation is associative on the nose: flattened and nested
    factor lists yield identical graphs (only the attached labeling differs).
    """
    if not factors:
        raise InvalidSpec("product needs at least one factor")
    ns = [g.n for g in factors]
    total = math.prod(ns)
    if total > max_vertices:
        raise GraphTooLarge(f"product has {total} vertices, cap is {max_vertices}")

    us_parts, vs_parts = [], []
    block = total
    prefix = 1
    for i, g in enumerate(factors):
        block //= ns[i]
        base = (
            np.arange(prefix, dtype=np.int64)[:, None] * (ns[i] * block)
            + np.arange(block, dtype=np.int64)[None, :]
        ).ravel()
        e = g.edge_array().astype(np.int64)
        if e.size:
            us_parts.append((base[:, None] + (e[:, 0] * block)[None, :]).ravel())
            vs_parts.append((base[:, None] + (e[:, 1] * block)[None, :]).ravel())
        prefix *= ns[i]

    edges = (
        np.stack([np.concatenate(us_parts), np.concatenate(vs_parts)], axis=1)
        if us_parts
        else np.empty((0, 2), dtype=np.int64)
    )
    labeling = ProductLabeling(
        radices=tuple(ns),
        factor_names=tuple(g.name or f"F{i}" for i, g in enumerate(factors)),
    )
    name = "[]".join(labeling.factor_names) if len(factors) > 1 else factors[0].name
    return Graph(
        total,
        edges,
        labeling=labeling,
        name=name,
        allow_isolated=any(g.has_isolated for g in factors),
        max_vertices=max_vertices,
    )


def hamming_graph(n: int, q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 1 or q < 2:
        raise InvalidSpec("Hamming graph needs n >= 1, q >= 2")
    g = cartesian_product([complete_graph(q)] * n, max_vertices=max_vertices)
    g.name = f"H({n},{q})"
    return g


def hypercube(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    g = hamming_graph(n, 2, max_vertices=max_vertices)
    g.name = f"Q{n}"
    return g


def torus_graph(ks: Sequence[int], max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if not ks or any(k < 3 for k in ks):
        raise InvalidSpec("torus needs every cycle length >= 3")
    g = cartesian_product([cycle_graph(k) for k in ks], max_vertices=max_vertices)
    g.name = "T(" + ",".join(map(str, ks)) + ")"
    return g


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union with factor ids shifted consecutively."""
    if not graphs:
        raise InvalidSpec("union of nothing")
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((offset + u, offset + v) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges, allow_isolated=any(g.has_isolated for g in graphs))


# -- family specs (declarative form used by the CLI) -------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a named graph family."""

    variant: str
    params: tuple = ()

    @staticmethod
    def path(n: int) -> "FamilySpec":
        return FamilySpec("path", (n,))

    @staticmethod
    def cycle(n: int) -> "FamilySpec":
        return FamilySpec("cycle", (n,))

    @staticmethod
    def complete(n: int) -> "FamilySpec":
        return FamilySpec("complete", (n,))

    @staticmethod
    def complete_bipartite(a: int, b: int) -> "FamilySpec":
        return FamilySpec("complete-bipartite", (a, b))

    @staticmethod
    def complete_multipartite(*parts: int) -> "FamilySpec":
        return FamilySpec("complete-multipartite", tuple(parts))

    @staticmethod
    def hypercube(n: int) -> "FamilySpec":
        return FamilySpec("hypercube", (n,))

    @staticmethod
    def hamming(n: int, q: int) -> "FamilySpec":
        return FamilySpec("hamming", (n, q))

    @staticmethod
    def torus(*ks: int) -> "FamilySpec":
        return FamilySpec("torus", tuple(ks))

    @staticmethod
    def petersen() -> "FamilySpec":
        return FamilySpec("petersen", ())

    @staticmethod
    def edge_list_file(path: str) -> "FamilySpec":
        return FamilySpec("file", (path,))


def build_family(spec: FamilySpec, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Build the graph described by a FamilySpec with canonical vertex order."""
    v, p = spec.variant, spec.params
    if v == "path":
        return path_graph(*p)
    if v == "cycle":
        return cycle_graph(*p)
    if v == "complete":
        return complete_graph(*p)
    if v == "complete-bipartite":
        return complete_bipartite(*p)
    if v == "complete-multipartite":
        return complete_multipartite(p)
    if v == "hypercube":
        return hypercube(*p, max_vertices=max_vertices)
    if v == "hamming":
        return hamming_graph(*p, max_vertices=max_vertices)
    if v == "torus":
        return torus_graph(p, max_vertices=max_vertices)
    if v == "petersen":
        return petersen_graph()
    if v == "file":
        return read_edge_list(p[0], max_vertices=max_vertices)
    raise InvalidSpec(f"unknown family {v!r}")


# -- transforms --------------------------------------------------------------


def complement(g: Graph, max_vertices: int = COMPLEMENT_MAX_VERTICES) -> Graph:
    """Complement graph; isolated vertices (if any appear) are flagged."""
    if g.n > max_vertices:
        raise GraphTooLarge(f"complement capped at {max_vertices} vertices")
    adj = np.zeros((g.n, g.n), dtype=bool)
    rows = np.repeat(np.arange(g.n), g.degrees)
    adj[rows, g.indices] = True
    comp = ~adj
    np.fill_diagonal(comp, False)
    u, v = np.nonzero(np.triu(comp))
    return Graph(
        g.n,
        np.stack([u, v], axis=1),
        allow_isolated=True if g.n else False,
        name=f"co-{g.name}" if g.name else None,
    )


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """2-coloring by BFS layering, component by component.

    The lowest-id vertex of each component lands in X.  Returns None when the
    graph is not bipartite.
    """
    side = np.full(g.n, -1, dtype=np.int8)
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                w = int(w)
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    xs = np.nonzero(side == 0)[0]
    ys = np.nonzero(side == 1)[0]
    return [int(v) for v in xs], [int(v) for v in ys]


def multipartite_cover(h: Graph, r: int, s0: int) -> Optional[list[list[int]]]:
    """Group the components of complement(h) into r parts of size >= s0 each.

    A successful grouping witnesses a complete multipartite spanning subgraph
    of h with r parts.  Greedy first-fit-decreasing on component sizes; this
    is a best-effort witness finder, not a decision procedure.  Parts are
    returned sorted by (size, smallest id).
    """
    if r < 2 or s0 < 1:
        raise InvalidSpec("need r >= 2 and s0 >= 1")
    comps = complement(h).components()
    comps.sort(key=lambda c: (-len(c), c[0]))
    bins: list[list[int]] = [[] for _ in range(r)]
    sizes = [0] * r
    for comp in comps:
        target = None
        for i in range(r):
            if sizes[i] < s0:
                target = i
                break
        if target is None:
            target = min(range(r), key=lambda i: (sizes[i], i))
        bins[target].extend(comp)
        sizes[target] += len(comp)
    if any(s < s0 for s in sizes):
        return None
    parts = [sorted(b) for b in bins]
    parts.sort(key=lambda p: (len(p), p[0]))
    return parts


def check_cover(h: Graph, parts: Sequence[Sequence[int]], s0: int = 1) -> None:
    """Validate a multipartite cover: disjoint, covering, sizes >= s0, and no
    complement edge crosses two parts (i.e. all cross-part pairs are edges of h).
    """
    seen: set[int] = set()
    for part in parts:
        if len(part) < s0:
            raise BadCover("part smaller than s0")
        for v in part:
            if v in seen or not 0 <= v < h.n:
                raise BadCover("parts must be disjoint vertex sets")
            seen.add(v)
    if len(seen) != h.n:
        raise BadCover("parts must cover every vertex")
    for i, part in enumerate(parts):
        for j in range(i + 1, len(parts)):
            for u in part:
                nbrs = set(int(x) for x in h.neighbors(u))
                for v in parts[j]:
                    if v not in nbrs:
                        raise BadCover(f"non-adjacent cross-part pair ({u},{v})")


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last vertex order (ties by id); used by the exact solver."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    removal = []
    for _ in range(g.n):
        v = min((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], x))
        removal.append(v)
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
    removal.reverse()
    return removal


# -- edge-list text format ----------------------------------------------------


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header comment with the order, then one
    "u v" line per edge sorted lexicographically."""
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_array())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    n_header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "n":
                n_header = int(fields[1])
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InvalidSpec(f"line {lineno}: expected 'u v'")
        edges.append((int(fields[0]), int(fields[1])))
    if n_header is None:
        if not edges:
            raise InvalidSpec("empty edge list without an order header")
        n_header = max(max(u, v) for u, v in edges) + 1
    return Graph(n_header, edges, allow_isolated=True, max_vertices=max_vertices)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))


def read_edge_list(path, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read(), max_vertices=max_vertices)
