"""Which influence graphs admit a realizable orientation.

An influence graph yields a polytope-realizable (equivalently, P-LCP
realizable) orientation exactly when it contains neither of two induced
patterns: a transitivity violation (edges x->y->z without x->z) or two
incomparable dimensions influencing a common third.  Both absent means
the graph is the transitive closure of a branching, i.e. a forest of
arborescences, and from that branching a realizing cyclic extension can
be written down directly.

Holt-Klee checking on 3-faces is the standard combinatorial screen for
non-realizability of concrete orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .cube import Face, Orientation, mask_to_dims
from .matousek import InfluenceGraph
from .matroid import Q, CyclicExtension


@dataclass(frozen=True)
class ForbiddenWitness:
    """An induced three-dimension pattern certifying non-realizability.

    kind "G1": edges (x, y) and (y, z) present, (x, z) missing.
    kind "G2": edges (y, x) and (z, x) present, y and z incomparable.
    """

    kind: str
    vertices: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.kind not in ("G1", "G2"):
            raise ValueError(f"witness kind must be 'G1' or 'G2', got {self.kind!r}")
        if len(self.vertices) != 3 or len(set(self.vertices)) != 3:
            raise ValueError(f"witness needs three distinct dimensions, got {self.vertices}")

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


def find_forbidden(g: InfluenceGraph) -> Optional[ForbiddenWitness]:
    """First forbidden pattern in lexicographic vertex order, or None.

    Transitivity violations are reported before incomparable-influencer
    pairs; within a kind the smallest (x, y, z) wins.
    """
    n = g.n
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if y == x or not g.has_edge(x, y):
                continue
            for z in range(1, n + 1):
                if z in (x, y):
                    continue
                if g.has_edge(y, z) and not g.has_edge(x, z):
                    return ForbiddenWitness("G1", (x, y, z))
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if y == x or not g.has_edge(y, x):
                continue
            for z in range(y + 1, n + 1):
                if z == x or not g.has_edge(z, x):
                    continue
                if not g.has_edge(y, z) and not g.has_edge(z, y):
                    return ForbiddenWitness("G2", (x, y, z))
    return None


class Branching:
    """A forest of arborescences on dimensions 1..n, given by parent links."""

    __slots__ = ("n", "parent")

    def __init__(self, n: int, parent: dict[int, int]) -> None:
        if n < 0:
            raise ValueError("branching size must be nonnegative")
        for child, par in parent.items():
            if not (1 <= child <= n and 1 <= par <= n):
                raise ValueError(f"parent link {child}->{par} outside 1..{n}")
            if child == par:
                raise ValueError(f"dimension {child} cannot be its own parent")
        self.n = n
        self.parent = dict(parent)
        for start in range(1, n + 1):
            seen = {start}
            v = start
            while v in self.parent:
                v = self.parent[v]
                if v in seen:
                    raise ValueError(f"parent links form a cycle through {v}")
                seen.add(v)

    def roots(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if v not in self.parent]

    def children(self, v: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == v)

    def ancestors(self, v: int) -> list[int]:
        """Path from v up to its root, excluding v itself."""
        out = []
        while v in self.parent:
            v = self.parent[v]
            out.append(v)
        return out

    def descendants(self, v: int) -> set[int]:
        """All strict descendants of v."""
        out: set[int] = set()
        stack = self.children(v)
        while stack:
            c = stack.pop()
            out.add(c)
            stack.extend(self.children(c))
        return out

    def transitive_closure(self) -> InfluenceGraph:
        edges = [(a, v) for v in range(1, self.n + 1) for a in self.ancestors(v)]
        return InfluenceGraph(self.n, edges)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Branching)
            and self.n == other.n
            and self.parent == other.parent
        )

    def __repr__(self) -> str:
        links = ", ".join(f"{c}->{p}" for c, p in sorted(self.parent.items()))
        return f"Branching(n={self.n}, {{{links}}})"


def is_branching_closure(g: InfluenceGraph) -> Optional[Branching]:
    """The branching whose transitive closure is g, or None.

    Exists iff g avoids both forbidden patterns: transitivity makes every
    in-neighbourhood an ancestor set, incomparability-freeness makes it a
    chain, and the chain's maximum is the parent.
    """
    n = g.n
    in_nbrs: list[set[int]] = [set() for _ in range(n + 1)]
    for d, d2 in g.edges:
        in_nbrs[d2].add(d)
    for d, d2 in g.edges:
        for d3 in range(1, n + 1):
            if d3 != d and g.has_edge(d2, d3) and not g.has_edge(d, d3):
                return None
    parent: dict[int, int] = {}
    for v in range(1, n + 1):
        chain = in_nbrs[v]
        if not chain:
            continue
        deepest = [u for u in chain if all(w == u or g.has_edge(w, u) for w in chain)]
        if len(deepest) != 1:
            return None
        parent[v] = deepest[0]
    b = Branching(n, parent)
    if b.transitive_closure() != g:
        return None
    return b


def _face_paths(o: Orientation, face: Face, src: int, dst: int) -> Iterator[tuple[int, ...]]:
    """All simple directed paths src -> dst inside the face."""
    path = [src]
    on_path = {src}

    def walk(v: int) -> Iterator[tuple[int, ...]]:
        if v == dst:
            yield tuple(path)
            return
        for d in mask_to_dims(face.spanning):
            if not o.outmap(v) >> (d - 1) & 1:
                continue
            w = v ^ (1 << (d - 1))
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            yield from walk(w)
            path.pop()
            on_path.remove(w)

    return walk(src)


def holt_klee_3face(o: Orientation, face: Face) -> bool:
    """Three internally vertex-disjoint source-to-sink paths in a 3-face?

    Requires the face to be three-dimensional with a unique source and a
    unique sink; realizable orientations pass this on every 3-face.
    """
    if face.dimension != 3:
        raise ValueError(f"Holt-Klee screening needs a 3-face, got dimension {face.dimension}")
    span = face.spanning
    sources = [v for v in face.vertices() if o.outmap(v) & span == span]
    sinks = [v for v in face.vertices() if not o.outmap(v) & span]
    if len(sources) != 1 or len(sinks) != 1:
        raise ValueError("face restriction must have a unique source and sink")
    src, dst = sources[0], sinks[0]
    paths = list(_face_paths(o, face, src, dst))
    interiors = [frozenset(p[1:-1]) for p in paths]
    for i in range(len(interiors)):
        for j in range(i + 1, len(interiors)):
            if interiors[i] & interiors[j]:
                continue
            ij = interiors[i] | interiors[j]
            for k in range(j + 1, len(interiors)):
                if not ij & interiors[k]:
                    return True
    return False


def synthesize_extension(b: Branching) -> CyclicExtension:
    """A realizing cyclic extension for a branching's closure graph.

    Each subtree contributes its root i, then its child subtrees in
    increasing label order, then the partner i+n; q goes last.  The flip
    set takes the partner of every dimension with an even number of
    strict descendants, which is exactly what the parity condition needs
    for this nesting.
    """
    n = b.n
    order: list = []

    def emit(v: int) -> None:
        order.append(v)
        for c in b.children(v):
            emit(c)
        order.append(v + n)

    for r in b.roots():
        emit(r)
    order.append(Q)
    flipped = [v + n for v in range(1, n + 1) if len(b.descendants(v)) % 2 == 0]
    return CyclicExtension(n, order, flipped)
