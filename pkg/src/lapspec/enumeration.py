"""Exhaustive enumeration of small graphs up to isomorphism.

The workhorse grows graphs on a fixed vertex set one edge at a time, keeping
one canonical representative per isomorphism class at every level (orderly
style, favoring simplicity over generation-tree cleverness: the vertex counts
here are desk scale).  Two prunes are applied only when they cannot lose a
wanted graph: a connectivity budget (a child whose component count exceeds
the remaining edge budget plus one can never become connected in time) and a
degree cap when an exact degree sequence is requested (degrees only grow).

A second, independent enumerator grows by vertex instead of by edge and is
used to cross-check census totals; the two routes share nothing but the
canonical form.

Results are deterministic: canonical graph6 forms, sorted.  They can be
cached on disk, one graph6 line per file, keyed by the task.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from random import Random
from typing import Optional

from .canonical import canonical_form
from .graph6 import graph6_decode
from .graphs import Graph, connected_components, is_connected

DEFAULT_CAP = 10
CACHE_ENV_VAR = "LAPSPEC_CACHE_DIR"


class EnumerationCapError(ValueError):
    """Refusal to enumerate above the configured vertex cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"enumeration on n={n} vertices exceeds the cap of {cap}; the class "
            f"count grows combinatorially, so raise the cap explicitly if you "
            f"really want this"
        )
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class EnumerationTask:
    """Graphs on exactly n vertices with exactly m edges, optionally filtered
    to connected graphs and/or an exact degree sequence (sorted descending)."""

    n: int
    m: int
    connected: bool = False
    degree_sequence: Optional[tuple[int, ...]] = None

    def validate(self) -> None:
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if not 0 <= self.m <= self.n * (self.n - 1) // 2:
            raise ValueError(f"m={self.m} impossible on n={self.n} vertices")
        if self.degree_sequence is not None:
            if len(self.degree_sequence) != self.n:
                raise ValueError("degree sequence length must equal n")
            if tuple(sorted(self.degree_sequence, reverse=True)) != self.degree_sequence:
                raise ValueError("degree sequence must be sorted descending")
            if sum(self.degree_sequence) != 2 * self.m:
                raise ValueError("degree sequence sum must equal 2m")

    def cache_name(self) -> str:
        name = f"n{self.n}_m{self.m}"
        if self.connected:
            name += "_conn"
        if self.degree_sequence is not None:
            name += "_d" + "-".join(map(str, self.degree_sequence))
        return name + ".g6"


_memo: dict[EnumerationTask, list[bytes]] = {}


def _resolve_cache_dir(cache_dir: Optional[str | Path]) -> Optional[Path]:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def _grow_forms(task: EnumerationTask) -> list[bytes]:
    n = task.n
    max_degree = max(task.degree_sequence) if task.degree_sequence else None
    level: dict[bytes, Graph] = {canonical_form(Graph(n)): Graph(n)}
    for m in range(1, task.m + 1):
        budget = task.m - m
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            present = set(g.edges)
            degs = [0] * n
            for i, j in g.edges:
                degs[i] += 1
                degs[j] += 1
            for i in range(n):
                for j in range(i + 1, n):
                    if (i, j) in present:
                        continue
                    if max_degree is not None and (degs[i] >= max_degree or degs[j] >= max_degree):
                        continue
                    child = Graph(n, g.edges + ((i, j),))
                    if task.connected and len(connected_components(child)) - 1 > budget:
                        continue
                    form = canonical_form(child)
                    if form not in nxt:
                        nxt[form] = child
        level = nxt

    forms = []
    for form, g in level.items():
        if task.connected and not is_connected(g):
            continue
        if task.degree_sequence is not None and g.degree_sequence() != task.degree_sequence:
            continue
        forms.append(form)
    forms.sort()
    return forms


def enumerate_graphs(task: EnumerationTask, cap: int = DEFAULT_CAP,
                     cache_dir: Optional[str | Path] = None) -> list[Graph]:
    """One canonically labeled representative per isomorphism class matching
    the task, sorted by graph6 form.  Raises EnumerationCapError above cap."""
    task = EnumerationTask(task.n, task.m, task.connected, task.degree_sequence)
    task.validate()
    if task.n > cap:
        raise EnumerationCapError(task.n, cap)

    forms = _memo.get(task)
    if forms is None:
        directory = _resolve_cache_dir(cache_dir)
        cache_file = directory / task.cache_name() if directory else None
        if cache_file is not None and cache_file.exists():
            lines = cache_file.read_bytes().split()
            forms = sorted(lines)
        else:
            forms = _grow_forms(task)
            if cache_file is not None:
                directory.mkdir(parents=True, exist_ok=True)
                cache_file.write_bytes(b"\n".join(forms) + (b"\n" if forms else b""))
        _memo[task] = forms
    return [graph6_decode(form) for form in forms]


def enumerate_by_vertex_growth(n: int, cap: int = DEFAULT_CAP) -> list[Graph]:
    """All graphs on exactly n vertices, grown one vertex at a time: every
    graph arises from deleting its last vertex, so attaching a new vertex
    with every neighbor subset and deduplicating is complete.  Independent
    of the edge-addition route; used to cross-check census totals."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise EnumerationCapError(n, cap)
    level: list[Graph] = [Graph(0)]
    for k in range(1, n + 1):
        nxt: dict[bytes, Graph] = {}
        for g in level:
            for subset in range(1 << (k - 1)):
                edges = g.edges + tuple(
                    (i, k - 1) for i in range(k - 1) if subset >> i & 1
                )
                child = Graph(k, edges)
                form = canonical_form(child)
                if form not in nxt:
                    nxt[form] = child
        level = [nxt[form] for form in sorted(nxt)]
    return level


def random_connected_graph(rng: Random, n: int, extra_edges: int = 0) -> Graph:
    """Random connected graph: a random recursive tree plus a sample of extra
    edges.  Deterministic for a given rng state."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    if extra_edges > 0:
        free = [(i, j) for i in range(n) for j in range(i + 1, n)
                if (i, j) not in edges]
        for pick in rng.sample(free, min(extra_edges, len(free))):
            edges.add(pick)
    return Graph(n, edges)
