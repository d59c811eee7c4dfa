"""Immutable graphs plus builders for paths, cycles, and their disjoint union."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidParameterError, ValidationError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over vertex ids 0..vertex_count-1.

    Edges keep their construction order and endpoint orientation, so equality
    between graphs is exact. Instances never mutate after construction and can
    be shared freely between threads or processes.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if self.vertex_count < 0:
            raise ValidationError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for a, b in self.edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValidationError(
                    f"edge ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
            if a == b:
                raise ValidationError(f"self-loop at vertex {a}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise ValidationError(f"duplicate edge ({a}, {b})")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(ns) for ns in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class FamilySpec:
    """Disjoint union of one even cycle and one path.

    Derived quantities: ``edge_count`` is cycle_order + path_order - 1 (the
    cycle contributes cycle_order edges, the path one fewer than its order)
    and ``half_cycle`` is cycle_order / 2, whose parity selects the path
    labeling branch and the minimum constructible path order.
    """

    cycle_order: int
    path_order: int

    def __post_init__(self):
        m, n = self.cycle_order, self.path_order
        if m < 4 or m % 2:
            raise InvalidParameterError(f"cycle order must be an even integer >= 4, got {m}")
        if n < 2:
            raise InvalidParameterError(f"path order must be at least 2, got {n}")

    @property
    def edge_count(self) -> int:
        return self.cycle_order + self.path_order - 1

    @property
    def half_cycle(self) -> int:
        return self.cycle_order // 2


def make_path(length: int) -> Graph:
    """Path on `length` vertices: edges (0,1), (1,2), ..., (length-2, length-1)."""
    if length < 1:
        raise InvalidParameterError(f"path needs at least one vertex, got {length}")
    return Graph(length, tuple((i, i + 1) for i in range(length - 1)))


def make_cycle(length: int) -> Graph:
    """Cycle on `length` vertices: edges (i, i+1 mod length) in ring order."""
    if length < 3:
        raise InvalidParameterError(f"cycle needs at least three vertices, got {length}")
    return Graph(length, tuple((i, (i + 1) % length) for i in range(length)))


def make_union(spec: FamilySpec) -> Graph:
    """Disjoint union: cycle vertices are ids 0..cycle_order-1 in ring order,
    path vertices follow as ids cycle_order..cycle_order+path_order-1.

    Cycle edges come first in the edge list, then path edges, so edge-indexed
    reports line up with the construction order.
    """
    m, n = spec.cycle_order, spec.path_order
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges.extend((m + j, m + j + 1) for j in range(n - 1))
    return Graph(m + n, tuple(edges))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    seen = [False] * g.vertex_count
    adj = g.adjacency
    components = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = [start]
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    members.append(v)
                    queue.append(v)
        members.sort()
        components.append(members)
    return components
