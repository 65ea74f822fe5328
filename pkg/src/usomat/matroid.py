"""Cyclic P-matroid extensions given by a permutation and a sign-flip set.

The ground set is E = {1..2n} plus one extra element q.  Elements i and
i+n form a complementary pair.  A permutation places all 2n+1 elements on
positions 1..2n+1 (points on the moment curve, in order); circuits of the
resulting rank-n uniform matroid are read off combinatorially: sort the
support by position, alternate signs starting with + at the smallest
position, then flip the sign of every support member of the flip set F.

Such a matroid is a P-matroid exactly when the pairs nest like balanced
parentheses and F hits each pair according to the parity of the number of
element pairs enclosed between its two members.  The nesting relation of
the pairs is a dimension influence graph, which ties these extensions to
Matousek-type orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence, Union

from .cube import Orientation
from .matousek import InfluenceGraph

Q = "q"
Element = Union[int, str]

P_MATROID_BRUTE_FORCE_CAP = 8  # n 2^(n-1) almost-complementary supports
CIRCUIT_AXIOM_CAP = 3  # full circuit list has 2 C(2n+1, n+1) members


@dataclass(frozen=True)
class SignedSet:
    """A pair of disjoint element sets carrying + and - signs."""

    plus: frozenset
    minus: frozenset

    def __post_init__(self) -> None:
        if self.plus & self.minus:
            raise ValueError("signed set has overlapping plus and minus parts")

    @property
    def support(self) -> frozenset:
        return self.plus | self.minus

    def __neg__(self) -> "SignedSet":
        return SignedSet(self.minus, self.plus)

    def sign(self, e: Element) -> int:
        if e in self.plus:
            return 1
        if e in self.minus:
            return -1
        return 0


def complement(e: int, n: int) -> int:
    """The partner of e in its complementary pair."""
    return e + n if e <= n else e - n


class CyclicExtension:
    """Permutation plus sign-flip data of a simple cyclic extension.

    ``order`` lists the 2n+1 element tokens by increasing position;
    ``flipped`` is the set F of sign-flipped elements (q is never in F:
    circuit normalisation absorbs a global q sign).  Structural validity
    is enforced here; the P-matroid conditions are a separate check,
    :func:`validate_conditions`, because invalid combinations must remain
    representable for the brute-force comparisons.
    """

    __slots__ = ("n", "order", "flipped", "__dict__")

    def __init__(self, n: int, order: Sequence[Element], flipped: Iterable[int]) -> None:
        if n < 1:
            raise ValueError("extension size must be at least 1")
        tokens = tuple(order)
        expected = set(range(1, 2 * n + 1)) | {Q}
        if len(tokens) != 2 * n + 1 or set(tokens) != expected:
            raise ValueError(
                f"order must list 1..{2*n} and '{Q}' exactly once, got {tokens!r}"
            )
        flip = frozenset(flipped)
        bad = [e for e in flip if not (isinstance(e, int) and 1 <= e <= 2 * n)]
        if bad:
            raise ValueError(f"flip set may only contain elements 1..{2*n}, got {bad}")
        self.n = n
        self.order = tokens
        self.flipped = flip

    @cached_property
    def position(self) -> dict:
        """Element token -> position 1..2n+1."""
        return {e: p for p, e in enumerate(self.order, start=1)}

    @cached_property
    def restricted_position(self) -> dict:
        """Positions 1..2n of the pair elements with q removed from the order."""
        return {
            e: p
            for p, e in enumerate((t for t in self.order if t != Q), start=1)
        }

    def complement(self, e: int) -> int:
        return complement(e, self.n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CyclicExtension)
            and self.n == other.n
            and self.order == other.order
            and self.flipped == other.flipped
        )

    def __hash__(self) -> int:
        return hash((self.n, self.order, self.flipped))

    def __repr__(self) -> str:
        return f"CyclicExtension(n={self.n}, order={self.order!r}, flipped={sorted(self.flipped)})"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "order": list(self.order), "F": sorted(self.flipped)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CyclicExtension":
        try:
            n = int(obj["n"])
            order = [t if t == Q else int(t) for t in obj["order"]]
            flipped = [int(e) for e in obj["F"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"extension JSON needs 'n', 'order', 'F': {exc}") from exc
        return cls(n, order, flipped)


def validate_conditions(ext: CyclicExtension) -> bool:
    """The two P-matroid conditions on (order, F), restricted to the pairs.

    Positions are taken with q removed: the conditions describe the deletion
    of q, and a q sitting between two pair members must not shift parities.

    Condition 1 (nesting): for every pair, any other pair lies either fully
    inside or fully outside its position interval.
    Condition 2 (parity): with k pairs enclosed between the two members of a
    pair, F contains exactly one member of the pair when k is even, and both
    or neither when k is odd.
    """
    n = ext.n
    pos = ext.restricted_position
    for e in range(1, n + 1):
        a, b = pos[e], pos[e + n]
        if a > b:
            a, b = b, a
        for f in range(1, n + 1):
            if (a <= pos[f] <= b) != (a <= pos[f + n] <= b):
                return False
        enclosed_pairs = (b - a - 1) // 2
        hits = (e in ext.flipped) + (e + n in ext.flipped)
        if enclosed_pairs % 2 == 0:
            if hits != 1:
                return False
        elif hits == 1:
            return False
    return True


def read_off_signs(ext: CyclicExtension, support: Iterable[Element]) -> SignedSet:
    """Circuit signs on a support: alternate along the position order, flip F.

    Starts with + at the smallest position; callers that need a particular
    normalisation negate afterwards.
    """
    ordered = sorted(support, key=ext.position.__getitem__)
    plus, minus = set(), set()
    for k, e in enumerate(ordered):
        positive = k % 2 == 0
        if e in ext.flipped:
            positive = not positive
        (plus if positive else minus).add(e)
    return SignedSet(frozenset(plus), frozenset(minus))


def fundamental_circuit(
    ext: CyclicExtension, basis: Iterable[Element], e: Element
) -> SignedSet:
    """The circuit supported on basis + {e}, normalised so that e is positive.

    The matroid is uniform of rank n, so every n-element set is a basis and
    every (n+1)-element support carries exactly one circuit up to negation.
    """
    base = frozenset(basis)
    if len(base) != ext.n:
        raise ValueError(f"basis must have {ext.n} elements, got {len(base)}")
    if e in base:
        raise ValueError(f"extending element {e!r} already lies in the basis")
    circuit = read_off_signs(ext, base | {e})
    return circuit if e in circuit.plus else -circuit


def is_p_matroid(ext: CyclicExtension) -> bool:
    """Brute-force search for an almost-complementary sign-reversing circuit.

    Enumerates every support containing exactly one complementary pair (the
    pair itself plus one member of each remaining pair) and reads off its
    signs; q never participates.  Must agree with validate_conditions.
    """
    n = ext.n
    if n > P_MATROID_BRUTE_FORCE_CAP:
        raise ValueError(f"brute force capped at n={P_MATROID_BRUTE_FORCE_CAP}")
    for i in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != i]
        for picks in product((0, n), repeat=n - 1):
            support = {i, i + n}
            support.update(j + off for j, off in zip(others, picks))
            circuit = read_off_signs(ext, support)
            if (i in circuit.plus) != (i + n in circuit.plus):
                return False
    return True


def containment_graph(ext: CyclicExtension) -> InfluenceGraph:
    """Influence graph of the pair nesting: edge (i, j) when pair j sits
    strictly inside the position interval of pair i."""
    if not validate_conditions(ext):
        raise ValueError("extension does not satisfy the P-matroid conditions")
    n = ext.n
    pos = ext.restricted_position
    edges = []
    for i in range(1, n + 1):
        a, b = sorted((pos[i], pos[i + n]))
        for j in range(1, n + 1):
            if j != i and a < pos[j] < b and a < pos[j + n] < b:
                edges.append((i, j))
    return InfluenceGraph(n, edges)


def extension_to_uso(ext: CyclicExtension) -> Orientation:
    """The orientation induced by the extension.

    Vertex v keeps the pair elements {i : i not in v} + {i+n : i in v} as its
    basis; the fundamental circuit through q (normalised q-positive) marks
    dimension i outgoing when the pair member in the support is negative.
    """
    if not validate_conditions(ext):
        raise ValueError("extension does not satisfy the P-matroid conditions")
    n = ext.n
    table = []
    for v in range(1 << n):
        basis = frozenset(
            i + n if v >> (i - 1) & 1 else i for i in range(1, n + 1)
        )
        circuit = fundamental_circuit(ext, basis, Q)
        out = 0
        for e in circuit.minus:
            if e != Q:
                i = e if e <= n else e - n
                out |= 1 << (i - 1)
        table.append(out)
    return Orientation(n, tuple(table))


def push_q_left(ext: CyclicExtension) -> tuple[CyclicExtension, int, bool]:
    """Swap q with its left neighbour in the order.

    Returns the new extension, the dimension i of the crossed pair element,
    and whether the element was the pair's second member i+n (in which case
    the induced orientation changes on the upper i-facet, else on the lower).
    """
    p = ext.position[Q]
    if p == 1:
        raise ValueError("q is already at the front of the order")
    tokens = list(ext.order)
    crossed = tokens[p - 2]
    tokens[p - 2], tokens[p - 1] = tokens[p - 1], tokens[p - 2]
    new_ext = CyclicExtension(ext.n, tokens, ext.flipped)
    if crossed <= ext.n:
        return new_ext, crossed, False
    return new_ext, crossed - ext.n, True


def all_circuits(ext: CyclicExtension) -> list[SignedSet]:
    """Every circuit of the extension: both sign choices on all (n+1)-supports."""
    ground = list(range(1, 2 * ext.n + 1)) + [Q]
    out = []
    for support in combinations(ground, ext.n + 1):
        c = read_off_signs(ext, support)
        out.append(c)
        out.append(-c)
    return out


def _axioms_hold(circuits: Sequence[SignedSet]) -> bool:
    """Circuit axioms on an explicit list: nonempty supports, symmetry,
    support incomparability, weak elimination."""
    pool = set(circuits)
    for c in circuits:
        if not c.support:
            return False  # C0
        if -c not in pool:
            return False  # C1
    for x in circuits:
        for y in circuits:
            if x.support <= y.support and x not in (y, -y):
                return False  # C2
    for x in circuits:
        for y in circuits:
            if x == -y:
                continue
            for e in x.plus & y.minus:
                allowed_plus = (x.plus | y.plus) - {e}
                allowed_minus = (x.minus | y.minus) - {e}
                if not any(
                    z.plus <= allowed_plus and z.minus <= allowed_minus
                    for z in circuits
                ):
                    return False  # C3
    return True


def verify_circuit_axioms(ext: CyclicExtension) -> bool:
    """Check the circuit axioms on the full read-off circuit list (tiny n only)."""
    if ext.n > CIRCUIT_AXIOM_CAP:
        raise ValueError(f"axiom enumeration capped at n={CIRCUIT_AXIOM_CAP}")
    return _axioms_hold(all_circuits(ext))
