"""Exhaustive backtracking oracle for odd-gracefulness of small graphs.

The search assigns labels to vertices in increasing id order, trying
candidate labels in ascending numeric order, so the first labeling found is
the lexicographically least solution read in vertex-id order and the whole
run is deterministic. Pruning: a candidate is rejected if its label is taken,
if its parity disagrees with the two-coloring of its component (only when the
parity precheck is on), or if any edge to an already-labeled neighbour would
induce an even or already-used weight. Odd weights force opposite label
parity across every edge, so a graph containing an odd cycle has no labeling
at all; with the precheck enabled such graphs are rejected immediately with a
witness cycle.

Within a component the first vertex keeps both parities available, which
explores both polarities of the two-coloring exactly once each; solution
counts in find_all mode are therefore exact.

Exhaustion is practical up to roughly 18 edges. Beyond that, set a node
budget and treat the outcome as inconclusive.
"""

from __future__ import annotations

import enum
from collections import deque
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, replace

from .graph import Graph, connected_components
from .labeling import Labeling


@dataclass(frozen=True)
class Bipartite:
    """Two-coloring of every vertex; color of vertex v is coloring[v]."""

    coloring: tuple[int, ...]


@dataclass(frozen=True)
class OddCycle:
    """Witness cycle of odd length, as a vertex sequence closed by its last edge."""

    cycle: tuple[int, ...]


class SearchVerdict(enum.Enum):
    FOUND = "found"
    EXHAUSTED_NOT_FOUND = "exhausted-not-found"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchConfig:
    """node_budget caps backtrack nodes (None = run to exhaustion); find_all
    counts and collects every solution instead of stopping at the first;
    workers > 1 splits the root branching across processes."""

    node_budget: int | None = None
    find_all: bool = False
    parity_precheck: bool = True
    workers: int = 1


@dataclass(frozen=True)
class SearchOutcome:
    verdict: SearchVerdict
    labeling: Labeling | None
    nodes_explored: int
    solutions_found: int
    solutions: tuple[Labeling, ...] | None = None
    odd_cycle_witness: tuple[int, ...] | None = None
    deterministic: bool = True


def parity_precheck(g: Graph) -> Bipartite | OddCycle:
    """Two-color the graph, or exhibit an odd cycle proving it cannot be done."""
    color = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    adj = g.adjacency
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return OddCycle(_extract_cycle(u, v, parent))
    return Bipartite(tuple(color))


def search_odd_graceful(g: Graph, cfg: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Decide odd-gracefulness of g by pruned exhaustive search.

    FOUND carries a labeling the verifier accepts (in find_all mode, full
    enumeration finished and `solutions` holds every labeling in discovery
    order). EXHAUSTED_NOT_FOUND is returned only after the entire pruned
    space was covered without a budget cut, and is therefore a proof of
    nonexistence. BUDGET_EXCEEDED reports the node count at the cut.

    In parallel mode the node budget applies to each root subtree separately,
    find_all counts stay exact, and a first-found labeling may be any valid
    one (outcomes are then flagged non-deterministic).
    """
    if g.vertex_count == 0:
        empty = Labeling(())
        return SearchOutcome(
            SearchVerdict.FOUND,
            empty,
            0,
            1,
            solutions=(empty,) if cfg.find_all else None,
        )

    coloring = None
    if cfg.parity_precheck:
        check = parity_precheck(g)
        if isinstance(check, OddCycle):
            return SearchOutcome(
                SearchVerdict.EXHAUSTED_NOT_FOUND,
                None,
                0,
                0,
                solutions=() if cfg.find_all else None,
                odd_cycle_witness=check.cycle,
            )
        coloring = check.coloring

    if cfg.workers > 1 and 2 * g.edge_count > 0:
        return _parallel_search(g, cfg, coloring)

    first, nodes, sols, cut, collected = _enumerate(g, cfg, coloring)
    return SearchOutcome(
        _verdict(cut, sols),
        first,
        nodes,
        sols,
        solutions=tuple(collected) if collected is not None else None,
    )


def _verdict(cut: bool, sols: int) -> SearchVerdict:
    if cut:
        return SearchVerdict.BUDGET_EXCEEDED
    return SearchVerdict.FOUND if sols else SearchVerdict.EXHAUSTED_NOT_FOUND


def _enumerate(g, cfg, coloring, root_labels=None):
    """Depth-first enumeration core.

    Returns (first_labeling, nodes, solutions, budget_cut, collected); a node
    is counted each time a candidate label survives all filters and is
    committed. `root_labels` restricts the candidates of vertex 0, which is
    how parallel mode partitions the tree.
    """
    nv, q = g.vertex_count, g.edge_count
    limit = 2 * q
    adj = g.adjacency
    comp_first = [0] * nv
    for comp in connected_components(g):
        head = comp[0]
        for v in comp:
            comp_first[v] = head
    earlier = [tuple(u for u in adj[v] if u < v) for v in range(nv)]

    labels = [-1] * nv
    used_label = bytearray(max(limit, 1))
    used_weight = bytearray(max(limit, 1))
    budget = cfg.node_budget
    find_all = cfg.find_all

    nodes = 0
    sols = 0
    first: Labeling | None = None
    collected: list[Labeling] | None = [] if find_all else None
    cut = False

    def extend(v: int) -> bool:
        """Returns False to stop the whole search (first hit, or budget cut)."""
        nonlocal nodes, sols, first, cut
        if v == nv:
            sols += 1
            found = Labeling(tuple(labels))
            if first is None:
                first = found
            if collected is not None:
                collected.append(found)
            return find_all
        if v == 0 and root_labels is not None:
            candidates = root_labels
        elif coloring is None or comp_first[v] == v:
            candidates = range(limit)
        else:
            head = comp_first[v]
            want = (labels[head] ^ coloring[v] ^ coloring[head]) & 1
            candidates = range(want, limit, 2)
        for x in candidates:
            if used_label[x]:
                continue
            taken = []
            feasible = True
            for u in earlier[v]:
                w = x - labels[u]
                if w < 0:
                    w = -w
                if not (w & 1) or used_weight[w]:
                    feasible = False
                    break
                used_weight[w] = 1
                taken.append(w)
            if not feasible:
                for w in taken:
                    used_weight[w] = 0
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                nodes -= 1
                cut = True
                for w in taken:
                    used_weight[w] = 0
                return False
            used_label[x] = 1
            labels[v] = x
            keep_going = extend(v + 1)
            labels[v] = -1
            used_label[x] = 0
            for w in taken:
                used_weight[w] = 0
            if not keep_going:
                return False
        return True

    if limit > 0 or nv == 0:
        extend(0)
    # limit == 0 with vertices present: no labels exist at all, the space is
    # empty and the search exhausts immediately.
    return first, nodes, sols, cut, collected


def _search_subtree(args):
    g, cfg, root_label = args
    first, nodes, sols, cut, collected = _enumerate(g, cfg, _subtree_coloring(g, cfg), [root_label])
    return root_label, first, nodes, sols, cut, collected


def _subtree_coloring(g, cfg):
    if not cfg.parity_precheck:
        return None
    check = parity_precheck(g)
    # Odd-cycle graphs never reach the workers; the parent already returned.
    assert isinstance(check, Bipartite)
    return check.coloring


def _parallel_search(g: Graph, cfg: SearchConfig, coloring) -> SearchOutcome:
    worker_cfg = replace(cfg, workers=1)
    tasks = [(g, worker_cfg, x) for x in range(2 * g.edge_count)]
    if cfg.find_all:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_search_subtree, tasks))
        results.sort(key=lambda r: r[0])
        nodes = sum(r[2] for r in results)
        sols = sum(r[3] for r in results)
        cut = any(r[4] for r in results)
        collected: list[Labeling] = []
        for r in results:
            collected.extend(r[5])
        first = collected[0] if collected else None
        return SearchOutcome(
            _verdict(cut, sols), first, nodes, sols, solutions=tuple(collected)
        )

    nodes = 0
    sols = 0
    cut = False
    first = None
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        pending = {pool.submit(_search_subtree, t) for t in tasks}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                _, sub_first, sub_nodes, sub_sols, sub_cut, _ = fut.result()
                nodes += sub_nodes
                sols += sub_sols
                cut = cut or sub_cut
                if sub_first is not None and first is None:
                    first = sub_first
            if first is not None:
                for fut in pending:
                    fut.cancel()
                break
    if first is not None:
        return SearchOutcome(
            SearchVerdict.FOUND, first, nodes, sols, deterministic=False
        )
    return SearchOutcome(_verdict(cut, sols), None, nodes, sols, deterministic=False)


def _extract_cycle(u: int, v: int, parent: list[int]) -> tuple[int, ...]:
    """Cycle through the tree paths of u and v plus the conflicting edge (v, u)."""
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    index = {w: i for i, w in enumerate(up)}
    vp = [v]
    while vp[-1] not in index:
        vp.append(parent[vp[-1]])
    meet = vp[-1]
    cycle = up[: index[meet] + 1]
    cycle.extend(reversed(vp[:-1]))
    return tuple(cycle)
