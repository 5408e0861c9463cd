"""Canonical labeling for small graphs.

The certificate is the graph6 encoding of the graph relabeled by a canonical
permutation, so two graphs are isomorphic exactly when their certificates are
equal bytes.  The permutation is found by exhaustive search restricted to
orderings that list vertices cell by cell, where the cells come from an
iterated neighbor-color refinement; the search keeps, at every position, only
the candidates whose adjacency bits against the already-placed prefix are
maximal, since any other choice is lexicographically dominated.  Interchangeable
candidates (mutual twins) are collapsed.  This is exhaustive-with-pruning, not
a refinement-based canonizer, which is plenty at the vertex counts used here.
"""

from __future__ import annotations

from .graph6 import graph6_encode
from .graphs import Graph, relabel


def refined_colors(n: int, adj: list[set[int]]) -> list[int]:
    """Stable vertex coloring: start from degrees, repeatedly split classes
    by the multiset of neighbor colors.  Color ranks are derived from sorted
    structural keys, so they are invariant under relabeling."""
    colors = [len(adj[v]) for v in range(n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(n)
        ]
        rank = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [rank[keys[v]] for v in range(n)]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """Position -> original vertex for the canonical relabeling."""
    n = g.n
    if n == 0:
        return ()
    adj = g.adjacency()
    colors = refined_colors(n, adj)

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    # Small cells first: the first positions then branch as little as
    # possible.  (size, color) is relabeling-invariant, so this order is too.
    cells = sorted(by_color.values(), key=lambda cell: (len(cell), colors[cell[0]]))
    cell_of_pos: list[int] = []
    for idx, cell in enumerate(cells):
        cell_of_pos.extend([idx] * len(cell))

    used = [False] * n
    placed: list[int] = []
    cur_bits: list[int] = []
    best_bits: list[int] | None = None
    best_perm: tuple[int, ...] | None = None

    def dfs() -> None:
        nonlocal best_bits, best_perm
        pos = len(placed)
        if pos == n:
            if best_bits is None or cur_bits > best_bits:
                best_bits = cur_bits.copy()
                best_perm = tuple(placed)
            return
        candidates = [v for v in cells[cell_of_pos[pos]] if not used[v]]
        scored = []
        for v in candidates:
            av = adj[v]
            b = 0
            for u in placed:
                b = (b << 1) | (1 if u in av else 0)
            scored.append((b, v))
        maxb = max(b for b, _ in scored)
        cur_bits.append(maxb)
        # A smaller bit field at this position loses no matter what follows.
        if best_bits is None or cur_bits >= best_bits[: pos + 1]:
            reps: list[int] = []
            for b, v in scored:
                if b != maxb:
                    continue
                if any(adj[v] - {w} == adj[w] - {v} for w in reps):
                    continue  # swapping two twins changes nothing downstream
                reps.append(v)
            for v in reps:
                used[v] = True
                placed.append(v)
                dfs()
                placed.pop()
                used[v] = False
        cur_bits.pop()

    dfs()
    assert best_perm is not None
    return best_perm


def canonical_graph(g: Graph) -> Graph:
    perm = canonical_permutation(g)
    mapping = {v: i for i, v in enumerate(perm)}
    return relabel(g, mapping)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant certificate: graph6 bytes of the canonical
    relabeling.  Equal certificates iff isomorphic graphs."""
    return graph6_encode(canonical_graph(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_form(a) == canonical_form(b)
