"""Simple undirected graphs on vertices 0..n-1, plus the two bicyclic families.

A dumbbell graph D(p, k, q) is two disjoint cycles, of lengths p and q,
joined by a path with k interior vertices (k = 0 means the two cycles are
joined by a single edge).  A theta graph T(r, s, t) is a pair of hub
vertices joined by three internally disjoint paths with r, s and t interior
vertices.  Both families are connected with n vertices and n + 1 edges, and
their degree sequence is (3, 3, 2, ..., 2).

Vertex numbering is fixed so constructions are reproducible:
  dumbbell: first cycle 0..p-1 (hub 0), bridge interior p..p+k-1,
            second cycle p+k..p+k+q-1 (hub p+k)
  theta:    hubs 0 and 1, then the three chains in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union


@dataclass(frozen=True)
class DumbbellParams:
    """Cycle lengths p >= q >= 3 and bridge interior length k >= 0."""

    p: int
    k: int
    q: int

    def validate(self) -> None:
        if not (self.p >= self.q >= 3 and self.k >= 0):
            raise ValueError(
                f"invalid dumbbell parameters (p={self.p}, k={self.k}, q={self.q}):"
                " need p >= q >= 3 and k >= 0"
            )

    @property
    def vertex_count(self) -> int:
        return self.p + self.q + self.k


@dataclass(frozen=True)
class ThetaParams:
    """Chain interior lengths r >= s >= t >= 0 with (s, t) != (0, 0)."""

    r: int
    s: int
    t: int

    def validate(self) -> None:
        if not (self.r >= self.s >= self.t >= 0 and (self.s, self.t) != (0, 0)):
            raise ValueError(
                f"invalid theta parameters (r={self.r}, s={self.s}, t={self.t}):"
                " need r >= s >= t >= 0 and at most one zero chain"
            )

    @property
    def vertex_count(self) -> int:
        return self.r + self.s + self.t + 2


FamilyParams = Union[DumbbellParams, ThetaParams]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; edges stored as a sorted tuple of (i, j), i < j.

    ``family`` carries the construction parameters when the graph was built
    by one of the family constructors; it never takes part in equality.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    family: Optional[FamilyParams] = field(default=None, compare=False)

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (),
                 family: Optional[FamilyParams] = None):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        norm = []
        for pair in edges:
            i, j = pair
            if i == j:
                raise ValueError(f"loop at vertex {i} not allowed")
            if i > j:
                i, j = j, i
            if not (0 <= i < j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            norm.append((i, j))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "family", family)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree_sequence(self) -> tuple[int, ...]:
        """Vertex degrees, largest first."""
        degs = [0] * self.n
        for i, j in self.edges:
            degs[i] += 1
            degs[j] += 1
        return tuple(sorted(degs, reverse=True))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def relabel(g: Graph, mapping: dict[int, int] | list[int]) -> Graph:
    """Apply a vertex bijection old -> new; family metadata is dropped."""
    if isinstance(mapping, list):
        mapping = {old: new for old, new in enumerate(mapping)}
    if sorted(mapping) != list(range(g.n)) or sorted(mapping.values()) != list(range(g.n)):
        raise ValueError("mapping is not a bijection on 0..n-1")
    return Graph(g.n, ((mapping[i], mapping[j]) for i, j in g.edges))


def make_path(n: int) -> Graph:
    """Path on n >= 0 vertices."""
    if n < 0:
        raise ValueError("path needs n >= 0")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def _dumbbell_edges(p: int, k: int, q: int) -> list[tuple[int, int]]:
    edges = [(i, (i + 1) % p) for i in range(p)]
    base = p + k
    edges += [(base + i, base + (i + 1) % q) for i in range(q)]
    bridge = [0] + list(range(p, p + k)) + [base]
    edges += list(zip(bridge, bridge[1:]))
    return edges


def dumbbell_graph(p: int, k: int, q: int) -> Graph:
    """Layout builder for a dumbbell with the cycles in the given order.

    Unlike make_dumbbell this does not require p >= q, which is convenient
    when checking that the two cycle roles are interchangeable.
    """
    if min(p, q) < 3 or k < 0:
        raise ValueError(f"invalid dumbbell layout (p={p}, k={k}, q={q})")
    return Graph(p + q + k, _dumbbell_edges(p, k, q))


def make_dumbbell(p: int, k: int, q: int) -> Graph:
    """Dumbbell D(p, k, q) with normalized parameters p >= q >= 3, k >= 0."""
    params = DumbbellParams(p, k, q)
    params.validate()
    return Graph(params.vertex_count, _dumbbell_edges(p, k, q), family=params)


def _theta_edges(r: int, s: int, t: int) -> list[tuple[int, int]]:
    edges = []
    nxt = 2
    for length in (r, s, t):
        chain = [0] + list(range(nxt, nxt + length)) + [1]
        nxt += length
        edges += list(zip(chain, chain[1:]))
    return edges


def theta_graph(r: int, s: int, t: int) -> Graph:
    """Layout builder for a theta with the chains in the given order.

    Accepts any chain order; rejects parameter triples that would need a
    multi-edge (two or more empty chains).
    """
    if min(r, s, t) < 0 or sorted((r, s, t))[1] == 0:
        raise ValueError(f"invalid theta layout (r={r}, s={s}, t={t})")
    return Graph(r + s + t + 2, _theta_edges(r, s, t))


def make_theta(r: int, s: int, t: int) -> Graph:
    """Theta T(r, s, t) with normalized parameters r >= s >= t >= 0."""
    params = ThetaParams(r, s, t)
    params.validate()
    return Graph(params.vertex_count, _theta_edges(r, s, t), family=params)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, in order of
    smallest member."""
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def find_bridges(g: Graph) -> set[tuple[int, int]]:
    """Cut edges, found by the usual DFS low-point computation."""
    adj = g.adjacency()
    index = [0] * g.n
    low = [0] * g.n
    visited = [False] * g.n
    bridges: set[tuple[int, int]] = set()
    counter = 1

    for root in range(g.n):
        if visited[root]:
            continue
        # iterative DFS; stack holds (vertex, parent, neighbor iterator)
        visited[root] = True
        index[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], index[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > index[u]:
                        bridges.add((min(u, v), max(u, v)))
    return bridges


def _walk_cycle_from(adj: list[set[int]], start: int, first: int) -> Optional[list[int]]:
    """Follow degree-2 vertices from start through first until a vertex of
    degree != 2 is hit; return the full vertex walk including both ends."""
    walk = [start, first]
    while len(adj[walk[-1]]) == 2 and walk[-1] != start:
        a, b = adj[walk[-1]]
        nxt = b if a == walk[-2] else a
        walk.append(nxt)
    return walk


def classify_bicyclic(g: Graph) -> Optional[FamilyParams]:
    """Decide dumbbell vs theta membership and recover normalized parameters.

    Returns DumbbellParams, ThetaParams, or None when the graph is not in
    either family.  Not being in the family is an answer, not an error.
    """
    if g.n < 4 or g.m != g.n + 1 or not is_connected(g):
        return None
    degs = g.degree_sequence()
    if degs[:2] != (3, 3) or any(d != 2 for d in degs[2:]):
        return None
    adj = g.adjacency()
    hubs = [v for v in range(g.n) if len(adj[v]) == 3]
    a, b = hubs

    if find_bridges(g):
        # Dumbbell: each hub sits on its own cycle.  Walk a cycle by leaving
        # the hub along an edge whose walk returns to the hub.
        lengths = []
        for hub in (a, b):
            cycle_len = None
            for first in adj[hub]:
                walk = _walk_cycle_from(adj, hub, first)
                if walk[-1] == hub:
                    cycle_len = len(walk) - 1
                    break
            if cycle_len is None:
                return None
            lengths.append(cycle_len)
        p, q = max(lengths), min(lengths)
        k = g.n - p - q
        if k < 0:
            return None
        params = DumbbellParams(p, k, q)
        try:
            params.validate()
        except ValueError:
            return None
        return params

    # Theta: every walk out of hub a must end at hub b.
    interior = []
    for first in adj[a]:
        walk = _walk_cycle_from(adj, a, first)
        if walk[-1] != b:
            return None
        interior.append(len(walk) - 2)
    r, s, t = sorted(interior, reverse=True)
    if r + s + t + 2 != g.n:
        return None
    params = ThetaParams(r, s, t)
    try:
        params.validate()
    except ValueError:
        return None
    return params
