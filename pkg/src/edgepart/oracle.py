"""Exact search for degree-k edge partitions.

Each crossing pair has exactly one red edge and uncrossed edges are blue, so a
partition is a choice of side per pair. The search branches on pairs in id
order (first edge red first) and propagates: once a vertex reaches its red
budget, every undecided crossed edge at it is forced blue and its partner red.
"""

from __future__ import annotations

import enum
import logging
import os
from dataclasses import dataclass
from typing import Iterator, Mapping

from .graph import EdgeColoring, OnePlaneGraph, require_valid

log = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10**8
NODE_LIMIT_ENV = "EDGEPART_NODE_LIMIT"
_PROGRESS_EVERY = 1_000_000


class Status(str, enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    ABORTED = "ABORTED"


@dataclass
class OracleResult:
    status: Status
    coloring: EdgeColoring | None
    nodes_explored: int


class SearchAborted(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"node limit reached after {nodes} nodes")
        self.nodes = nodes


def default_node_limit() -> int:
    return int(os.environ.get(NODE_LIMIT_ENV, DEFAULT_NODE_LIMIT))


class _Search:
    def __init__(self, g: OnePlaneGraph, k: int, caps: Mapping[int, int] | None, node_limit: int | None):
        require_valid(g)
        if k < 0:
            raise ValueError("k must be non-negative")
        self.g = g
        self.cap = [k] * g.n
        for v, c in (caps or {}).items():
            if c < 0:
                raise ValueError(f"negative cap at vertex {v}")
            self.cap[v] = min(c, k)
        self.pairs = [(cp.e1, cp.e2) for cp in g.crossings]
        self.ends = [(g.edges[a], g.edges[b]) for a, b in self.pairs]
        # vertex -> list of (pair, side) for crossed edges incident to it
        self.at: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for p, (a, b) in enumerate(self.ends):
            for side, (x, y) in enumerate((a, b)):
                self.at[x].append((p, side))
                self.at[y].append((p, side))
        self.count = [0] * g.n
        self.choice = [-1] * len(self.pairs)
        self.trail: list[int] = []
        self.nodes = 0
        self.limit = default_node_limit() if node_limit is None else node_limit

    def _assign(self, p: int, side: int) -> bool:
        """Set pair p to side and propagate; False on conflict (trail keeps what was set)."""
        queue = [(p, side)]
        while queue:
            q, s = queue.pop()
            cur = self.choice[q]
            if cur != -1:
                if cur != s:
                    return False
                continue
            self.choice[q] = s
            self.trail.append(q)
            for x in self.ends[q][s]:
                self.count[x] += 1
                if self.count[x] > self.cap[x]:
                    return False
                if self.count[x] == self.cap[x]:
                    for r, rs in self.at[x]:
                        if self.choice[r] == -1:
                            queue.append((r, 1 - rs))
        return True

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            q = self.trail.pop()
            for x in self.ends[q][self.choice[q]]:
                self.count[x] -= 1
            self.choice[q] = -1

    def _coloring(self) -> EdgeColoring:
        red = [pair[s] for pair, s in zip(self.pairs, self.choice)]
        return EdgeColoring.from_red(self.g.m, red)

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise SearchAborted(self.nodes)
        if self.nodes % _PROGRESS_EVERY == 0:
            log.info("oracle: %d nodes explored", self.nodes)

    def solutions(self) -> Iterator[EdgeColoring]:
        # initial propagation for caps that are already exhausted (cap 0)
        for v in range(self.g.n):
            if self.cap[v] == 0:
                for r, rs in self.at[v]:
                    if not self._assign(r, 1 - rs):
                        return
        # explicit DFS stack of (trail mark, pair, next side to try)
        stack: list[tuple[int, int, int]] = []
        p = self._next_free(0)
        if p is None:
            yield self._coloring()
            return
        stack.append((len(self.trail), p, 0))
        while stack:
            mark, p, side = stack.pop()
            self._undo(mark)
            if side > 1:
                continue
            stack.append((mark, p, side + 1))
            self._tick()
            if not self._assign(p, side):
                continue
            q = self._next_free(p + 1)
            if q is None:
                yield self._coloring()
                continue
            stack.append((len(self.trail), q, 0))

    def _next_free(self, start: int) -> int | None:
        for q in range(start, len(self.pairs)):
            if self.choice[q] == -1:
                return q
        return None


def decide_k(
    g: OnePlaneGraph,
    k: int,
    caps: Mapping[int, int] | None = None,
    *,
    node_limit: int | None = None,
) -> OracleResult:
    """Decide whether ``g`` has a partition with red degree <= k (and <= caps)."""
    s = _Search(g, k, caps, node_limit)
    try:
        for col in s.solutions():
            return OracleResult(Status.SAT, col, s.nodes)
    except SearchAborted:
        return OracleResult(Status.ABORTED, None, s.nodes)
    return OracleResult(Status.UNSAT, None, s.nodes)


def min_k(
    g: OnePlaneGraph,
    caps: Mapping[int, int] | None = None,
    *,
    node_limit: int | None = None,
) -> tuple[int, EdgeColoring]:
    """Smallest k admitting a partition, with a witness.

    Raises SearchAborted if some decision hits the node limit.
    """
    top = max((len(r) for r in g.incident()), default=0)
    for k in range(top + 1):
        res = decide_k(g, k, caps, node_limit=node_limit)
        if res.status is Status.ABORTED:
            raise SearchAborted(res.nodes_explored)
        if res.status is Status.SAT:
            return k, res.coloring
    raise ValueError("no partition respects the given caps")


def enumerate_valid(
    g: OnePlaneGraph,
    k: int,
    caps: Mapping[int, int] | None = None,
    *,
    node_limit: int | None = None,
) -> Iterator[EdgeColoring]:
    """Every partition with red degree <= k, each once, in a fixed order."""
    yield from _Search(g, k, caps, node_limit).solutions()
