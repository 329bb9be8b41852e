"""Graphs on the elements of a finite group.

Every graph has the whole group as vertex set (identity included) and no
loops.  Adjacency is a dense boolean matrix.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components as _components

from .core import CayleyGroup, is_cyclic, is_nilpotent, pair_closure
from .errors import DimensionMismatch, OrderLimitExceeded


class GraphKind(enum.Enum):
    POW = "pow"
    EPOW = "epow"
    COM = "com"
    SNORM = "snorm"
    NILP = "nilp"
    ENGEL = "engel"
    NGEN = "ngen"
    DNORM = "dnorm"

    @classmethod
    def parse(cls, text) -> GraphKind:
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"unknown graph kind {text!r}") from None


LIGHT_CAP = 4096
HEAVY_CAP = 512
ORDER_CAPS = {
    GraphKind.POW: LIGHT_CAP, GraphKind.EPOW: LIGHT_CAP, GraphKind.COM: LIGHT_CAP,
    GraphKind.SNORM: LIGHT_CAP, GraphKind.DNORM: LIGHT_CAP,
    GraphKind.NILP: HEAVY_CAP, GraphKind.ENGEL: HEAVY_CAP, GraphKind.NGEN: HEAVY_CAP,
}


@dataclass(frozen=True, eq=False)
class GroupGraph:
    """Undirected graph on group elements (``kind`` DNORM: directed)."""

    kind: GraphKind
    adjacency: np.ndarray
    group_name: str
    labels: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def directed(self) -> bool:
        return self.kind is GraphKind.DNORM

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted index pairs (i < j for undirected graphs)."""
        adj = self.adjacency if self.directed else np.triu(self.adjacency, 1)
        return [(int(i), int(j)) for i, j in np.argwhere(adj)]

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.adjacency[x, y])

    def is_complete(self) -> bool:
        return edge_count(self) == (self.n * (self.n - 1) // (1 if self.directed else 2))

    def __repr__(self) -> str:
        return f"GroupGraph({self.kind.name}, {self.group_name}, n={self.n}, edges={edge_count(self)})"


DirectedGroupGraph = GroupGraph


def _finish(kind, adj, G) -> GroupGraph:
    adj = np.array(adj, dtype=bool)
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return GroupGraph(kind, adj, G.name, G.labels)


def _pairwise_by_cyclic(G: CayleyGroup, predicate, only=None) -> np.ndarray:
    """Adjacency from a predicate on <x, y> that depends only on <x> and <y>.

    The predicate is evaluated once per unordered pair of cyclic subgroups;
    ``only`` optionally restricts which element pairs need evaluating.
    """
    ids = G.cyclic_ids
    reps = G.cyclic_reps
    k = reps.size
    val = np.zeros((k, k), dtype=bool)
    if only is None:
        need = np.ones((k, k), dtype=bool)
    else:
        need = np.zeros((k, k), dtype=bool)
        xi, yi = np.nonzero(only)
        need[ids[xi], ids[yi]] = True
    for a in range(k):
        for b in range(a, k):
            if need[a, b] or need[b, a]:
                val[a, b] = val[b, a] = predicate(pair_closure(G, int(reps[a]), int(reps[b])))
    return val[ids[:, None], ids[None, :]]


def _engel_reach(G: CayleyGroup) -> np.ndarray:
    """``r[x, y]`` true iff ``[x,_k y] = e`` for some k >= 1.

    All sequences c -> [c, y] are advanced together.  Each one is eventually
    periodic with preperiod plus period at most |G|, so |G| steps decide it;
    the loop stops early once every sequence has provably entered its cycle.
    """
    n, e = G.order, G.identity
    comm = G.commutator_table
    cols = np.arange(n)[None, :]
    C = comm.copy()
    reached = C == e
    saved, since, window = C.copy(), 0, 1
    for _ in range(n):
        C = comm[C, cols]
        reached |= C == e
        since += 1
        if np.array_equal(C, saved):
            break
        if since == window:
            saved, since, window = C.copy(), 0, window * 2
    return reached


def build_graph(kind, G: CayleyGroup, max_order: int | None = None) -> GroupGraph:
    """Build the ``kind`` graph of ``G``.

    POW: one of x, y is a power of the other.  EPOW: <x, y> is cyclic.
    COM: xy = yx.  SNORM: x normalises <y> and y normalises <x>.
    NILP: <x, y> is nilpotent.  ENGEL: [x,_k y] = e or [y,_k x] = e for
    some k.  NGEN: <x, y> is a proper subgroup.  DNORM (directed): x -> y
    iff <x> is normal in <x, y>.
    """
    kind = GraphKind.parse(kind)
    cap = ORDER_CAPS[kind] if max_order is None else max_order
    if G.order > cap:
        raise OrderLimitExceeded(G.order, cap, f"{kind.name} graph")
    if kind is GraphKind.POW:
        adj = G.powers | G.powers.T
    elif kind is GraphKind.COM:
        adj = G.mul == G.mul.T
    elif kind is GraphKind.SNORM:
        nm = G.cyclic_normalisers
        adj = nm & nm.T
    elif kind is GraphKind.DNORM:
        # <x> is normal in <x, y> iff y x y^-1 lies in <x>
        conj = G.mul[G.mul.T, G.inv[None, :]]
        adj = np.take_along_axis(G.powers, conj, axis=1)
    elif kind is GraphKind.EPOW:
        adj = _pairwise_by_cyclic(G, lambda H: is_cyclic(G, H), only=G.mul == G.mul.T)
    elif kind is GraphKind.NILP:
        adj = _pairwise_by_cyclic(G, lambda H: is_nilpotent(G, H))
    elif kind is GraphKind.NGEN:
        adj = _pairwise_by_cyclic(G, lambda H: H.order != G.order)
    elif kind is GraphKind.ENGEL:
        r = _engel_reach(G)
        adj = r | r.T
    return _finish(kind, adj, G)


def build_directed_normalising(G: CayleyGroup, max_order: int | None = None) -> GroupGraph:
    return build_graph(GraphKind.DNORM, G, max_order)


def enhanced_power_oracle(G: CayleyGroup) -> np.ndarray:
    """EPOW adjacency as "x and y lie in a common cyclic subgroup"."""
    pw = G.powers.astype(np.int32)
    adj = (pw.T @ pw) > 0
    np.fill_diagonal(adj, False)
    return adj


# ---------------------------------------------------------------------------
# comparison and statistics


def _same_size(A: GroupGraph, B: GroupGraph) -> None:
    if A.n != B.n:
        raise DimensionMismatch(f"graphs on {A.n} and {B.n} vertices")


def is_spanning_subgraph(A: GroupGraph, B: GroupGraph) -> bool:
    """E(A) is a subset of E(B)."""
    _same_size(A, B)
    return not (A.adjacency & ~B.adjacency).any()


def graphs_equal(A: GroupGraph, B: GroupGraph) -> bool:
    _same_size(A, B)
    return bool(np.array_equal(A.adjacency, B.adjacency))


def edge_difference(A: GroupGraph, B: GroupGraph) -> list[tuple[int, int]]:
    """Edges of A missing from B."""
    _same_size(A, B)
    diff = A.adjacency & ~B.adjacency
    if not A.directed:
        diff = np.triu(diff, 1)
    return [(int(i), int(j)) for i, j in np.argwhere(diff)]


def edge_count(A: GroupGraph) -> int:
    total = int(A.adjacency.sum())
    return total if A.directed else total // 2


def degree_sequence(A: GroupGraph) -> list[int]:
    """Degrees in vertex order (out-degrees for directed graphs)."""
    return [int(d) for d in A.adjacency.sum(axis=1)]


def connected_components(A: GroupGraph) -> int:
    """Number of (weakly) connected components."""
    return int(_components(A.adjacency, directed=A.directed, connection="weak")[0])


# ---------------------------------------------------------------------------
# export


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export(A: GroupGraph, format: str = "json") -> bytes:
    """Serialize as ``"json"`` or ``"dot"``; edges sorted lexicographically."""
    edges = A.edges()
    if format == "json":
        doc = {"kind": A.kind.value, "group": A.group_name, "n": A.n,
               "edges": [[i, j] for i, j in edges]}
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")
    if format == "dot":
        head, arrow = ("digraph", "->") if A.directed else ("graph", "--")
        lines = [f"{head} {_dot_quote(f'{A.kind.name}({A.group_name})')} {{"]
        lines += [f"  {i} [label={_dot_quote(lab)}];" for i, lab in enumerate(A.labels)]
        lines += [f"  {i} {arrow} {j};" for i, j in edges]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown export format {format!r}")
