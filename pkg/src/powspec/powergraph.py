"""Power graphs of the supported groups and the block-model companion graph.

Two constructions coexist on purpose.  build_power_graph is the ground
truth: x ~ y iff one element is a positive power of the other.  For the
twisted family build_model_graph realizes the explicit block structure
the closed-form polynomials are derived from; it forces the rotation
subgroup into a clique, so the two graphs differ inside that subgroup
and nowhere else.  The verifier keeps both and reports the gap rather
than deciding which one is intended.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import IntMatrix
from .group_core import (
    Cyclic,
    GroupElement,
    GroupSpec,
    SemidihedralType,
    class_partition,
    cyclic_subgroup,
    identity,
)

__all__ = [
    "Graph",
    "DecompositionReport",
    "AdjacencySplit",
    "canonical_order",
    "quartic_flip_pairs",
    "build_power_graph",
    "build_model_graph",
    "edge_count",
    "degree_sequence",
    "connected_components",
    "verify_decomposition",
    "graph_diff",
    "to_dot",
    "model_adjacency_split",
]


class Graph:
    """Immutable vertex-labelled graph over packed bit rows."""

    __slots__ = ("labels", "_rows", "directed", "_index")

    def __init__(
        self,
        labels: tuple[GroupElement, ...],
        row_masks: tuple[int, ...],
        directed: bool = False,
    ):
        n = len(labels)
        if len(row_masks) != n:
            raise ValueError("one adjacency row per vertex required")
        if len(set(labels)) != n:
            raise ValueError("vertex labels must be distinct")
        for i, mask in enumerate(row_masks):
            if mask >> n:
                raise ValueError("adjacency row has bits outside the vertex range")
            if (mask >> i) & 1:
                raise ValueError("loops are not allowed")
        if not directed:
            for i in range(n):
                for j in range(i + 1, n):
                    if ((row_masks[i] >> j) & 1) != ((row_masks[j] >> i) & 1):
                        raise ValueError("undirected graph must be symmetric")
        self.labels = labels
        self._rows = row_masks
        self.directed = directed
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: GroupElement) -> int:
        return self._index[label]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self._rows[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self._rows[i].bit_count()

    def neighbors(self, i: int) -> tuple[int, ...]:
        mask = self._rows[i]
        return tuple(j for j in range(self.n) if (mask >> j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Index pairs, (i, j) with i < j when undirected, arcs otherwise."""
        out = []
        for i in range(self.n):
            mask = self._rows[i]
            for j in range(self.n):
                if (mask >> j) & 1 and (self.directed or i < j):
                    out.append((i, j))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self._rows == other._rows
            and self.directed == other.directed
        )

    def __hash__(self) -> int:
        return hash((self.labels, self._rows, self.directed))


def _graph_from_pairs(
    labels: tuple[GroupElement, ...], pairs, directed: bool = False
) -> Graph:
    rows = [0] * len(labels)
    for i, j in pairs:
        rows[i] |= 1 << j
        if not directed:
            rows[j] |= 1 << i
    return Graph(labels, tuple(rows), directed)


def quartic_flip_pairs(spec: SemidihedralType) -> tuple[tuple[GroupElement, GroupElement], ...]:
    """Order-4 flips grouped into generator pairs (s r^m, s r^(m + 2^(k-1)p)).

    Each pair generates the same 4-element cyclic subgroup through the
    central rotation, which is why the pair shows up as one block in the
    model matrices.
    """
    half = spec.rotation_order // 2
    return tuple(
        (GroupElement(1, m), GroupElement(1, m + half)) for m in range(1, half, 2)
    )


def canonical_order(spec: GroupSpec) -> tuple[GroupElement, ...]:
    """Vertex order every matrix in the package is written in.

    Cyclic groups enumerate by exponent.  The twisted family starts with
    the identity and the central rotation, then the other rotations
    ascending, then the order-4 flips laid out pair by pair, then the
    order-2 flips ascending.
    """
    if isinstance(spec, Cyclic):
        return tuple(GroupElement(0, b) for b in range(spec.n))
    q = spec.rotation_order
    u = spec.central_rotation
    out = [identity(spec), u]
    out.extend(GroupElement(0, b) for b in range(1, q) if b != u.b)
    for first, second in quartic_flip_pairs(spec):
        out.append(first)
        out.append(second)
    out.extend(GroupElement(1, b) for b in range(0, q, 2))
    return tuple(out)


def build_power_graph(spec: GroupSpec, directed: bool = False) -> Graph:
    """The true power graph: an edge (arc) wherever one vertex is a power
    of the other (wherever the target lies in the source's cyclic subgroup)."""
    labels = canonical_order(spec)
    gen = {x: frozenset(cyclic_subgroup(spec, x)) for x in labels}
    pairs = []
    if directed:
        for i, x in enumerate(labels):
            for j, y in enumerate(labels):
                if i != j and y in gen[x]:
                    pairs.append((i, j))
    else:
        for i, x in enumerate(labels):
            for j in range(i + 1, len(labels)):
                y = labels[j]
                if y in gen[x] or x in gen[y]:
                    pairs.append((i, j))
    return _graph_from_pairs(labels, pairs, directed)


def build_model_graph(k: int, p: int) -> Graph:
    """The block-model graph behind the closed-form polynomials.

    Rotations form a clique; each order-4 flip pair attaches to the
    identity and the central rotation and closes internally (a 4-clique
    with the core); each order-2 flip hangs off the identity alone.
    """
    spec = SemidihedralType(k, p)
    labels = canonical_order(spec)
    q = spec.rotation_order
    pairs = [(i, j) for i in range(q) for j in range(i + 1, q)]
    for t in range(q // 4):
        a, b = q + 2 * t, q + 2 * t + 1
        pairs += [(0, a), (0, b), (1, a), (1, b), (a, b)]
    flat_start = q + q // 2
    pairs += [(0, flat_start + j) for j in range(q // 2)]
    return _graph_from_pairs(labels, pairs)


def edge_count(g: Graph) -> int:
    return len(g.edges())


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((g.degree(i) for i in range(g.n)), reverse=True))


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Components by breadth-first traversal, each sorted, smallest head first."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = [start]
        seen[start] = True
        comp = []
        while queue:
            v = queue.pop(0)
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


@dataclass(frozen=True)
class DecompositionReport:
    """Census of the pendant / 4-clique / rotation-part edge decomposition."""

    pendant_edges: tuple[tuple[GroupElement, GroupElement], ...]
    quad_blocks: tuple[tuple[GroupElement, ...], ...]
    incomplete_quads: tuple[tuple[GroupElement, ...], ...]
    rotation_part_edges: int
    uncovered_edges: tuple[tuple[GroupElement, GroupElement], ...]

    @property
    def pendant_count(self) -> int:
        return len(self.pendant_edges)

    @property
    def quad_count(self) -> int:
        return len(self.quad_blocks)

    @property
    def covered(self) -> bool:
        return not self.uncovered_edges


def verify_decomposition(g: Graph, k: int, p: int) -> DecompositionReport:
    """Classify every edge of g into the rotation subgraph, a pendant edge
    at the identity, or one of the 4-cliques on a flip pair plus the core.

    The core edge {identity, central rotation} counts toward the rotation
    part, so each complete 4-clique contributes exactly five edges here.
    Anything that fits none of the three buckets lands in uncovered_edges.
    """
    spec = SemidihedralType(k, p)
    if g.labels != canonical_order(spec):
        raise ValueError("graph does not carry the canonical vertex order for (k, p)")
    part = class_partition(spec)
    e = identity(spec)
    u = spec.central_rotation
    pairs = quartic_flip_pairs(spec)
    partner = {}
    block_of = {}
    for idx, (x, y) in enumerate(pairs):
        partner[x], partner[y] = y, x
        block_of[x] = block_of[y] = idx

    pendant = []
    rotation_edges = 0
    uncovered = []
    quad_edges: dict[int, set[frozenset[GroupElement]]] = {i: set() for i in range(len(pairs))}

    for i, j in g.edges():
        x, y = g.labels[i], g.labels[j]
        if x.a == 0 and y.a == 0:
            rotation_edges += 1
            continue
        flat = {v for v in (x, y) if v in part.order2_flips}
        if flat:
            other = y if x in flat else x
            if len(flat) == 1 and other == e:
                pendant.append((x, y) if x == e else (y, x))
            else:
                uncovered.append((x, y))
            continue
        # at least one endpoint is an order-4 flip here
        if x in part.order4_flips and y in part.order4_flips:
            if partner[x] == y:
                quad_edges[block_of[x]].add(frozenset((x, y)))
            else:
                uncovered.append((x, y))
            continue
        flip, other = (x, y) if x in part.order4_flips else (y, x)
        if other in (e, u):
            quad_edges[block_of[flip]].add(frozenset((flip, other)))
        else:
            uncovered.append((x, y))

    complete, incomplete = [], []
    for idx, (x, y) in enumerate(pairs):
        expected = {
            frozenset((e, x)),
            frozenset((e, y)),
            frozenset((u, x)),
            frozenset((u, y)),
            frozenset((x, y)),
        }
        block = (e, u, x, y)
        if quad_edges[idx] == expected:
            complete.append(block)
        elif quad_edges[idx]:
            incomplete.append(block)

    return DecompositionReport(
        pendant_edges=tuple(sorted(pendant)),
        quad_blocks=tuple(complete),
        incomplete_quads=tuple(incomplete),
        rotation_part_edges=rotation_edges,
        uncovered_edges=tuple(sorted(uncovered)),
    )


def graph_diff(g1: Graph, g2: Graph) -> tuple[tuple[GroupElement, GroupElement], ...]:
    """Symmetric difference of edge sets, as label pairs in vertex order."""
    if g1.labels != g2.labels or g1.directed != g2.directed:
        raise ValueError("graphs must share the same labelled vertex set")
    e1, e2 = set(g1.edges()), set(g2.edges())
    return tuple(
        (g1.labels[i], g1.labels[j]) for i, j in sorted(e1.symmetric_difference(e2))
    )


def to_dot(g: Graph) -> str:
    """Deterministic DOT rendering; byte-identical across runs."""
    kind, sep = ("digraph", "->") if g.directed else ("graph", "--")
    lines = [f"{kind} powergraph {{"]
    for i, lab in enumerate(g.labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i, j in g.edges():
        lines.append(f"  n{i} {sep} n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AdjacencySplit:
    """Additive split of the model adjacency used by the radius bound.

    full = clique_only + star_only + rest, with clique_plus_star the sum
    of the first two.  star_only is the star from the identity to every
    flip; rest holds the central rotation's links to the order-4 flips
    and the flip-pair edges.
    """

    full: IntMatrix
    clique_plus_star: IntMatrix
    clique_only: IntMatrix
    star_only: IntMatrix
    rest: IntMatrix


def model_adjacency_split(k: int, p: int) -> AdjacencySplit:
    spec = SemidihedralType(k, p)
    q = spec.rotation_order
    n = spec.order

    def blank():
        return [[0] * n for _ in range(n)]

    def put(m, i, j):
        m[i][j] = 1
        m[j][i] = 1

    clique = blank()
    for i in range(q):
        for j in range(i + 1, q):
            put(clique, i, j)
    star = blank()
    for j in range(q, n):
        put(star, 0, j)
    rest = blank()
    for t in range(q // 4):
        a, b = q + 2 * t, q + 2 * t + 1
        put(rest, 1, a)
        put(rest, 1, b)
        put(rest, a, b)

    y1 = IntMatrix.from_rows(clique)
    y2 = IntMatrix.from_rows(star)
    z = IntMatrix.from_rows(rest)
    y = y1 + y2
    return AdjacencySplit(full=y + z, clique_plus_star=y, clique_only=y1, star_only=y2, rest=z)
