"""Brute-force Wick-contraction enumeration at small order.

The order-m operator string carries 2m+1 annihilation and 2m+1 creation
slots: two of each per interaction vertex (the unprimed and primed
points, collapsed onto one graph node) plus one external slot on each
side.  A full contraction is a bijection from annihilation to creation
slots, stored as a tuple p with p[a] = c.  Slot 0 is the external slot
(X on the annihilation side, Y on the creation side); slots 2i-1 and 2i
belong to vertex i.

Everything here is ground truth by exhaustion: no counting formula is
consulted.  Costs grow as (2m+1)!, so orders above the default cap are
refused unless explicitly overridden, and the orbit census is never
attempted above the default cap.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

#: Largest order enumerated without an explicit override.
DEFAULT_ORDER_CAP = 4
#: Absolute ceiling; above this even an override is refused.
OVERRIDE_ORDER_CAP = 5

X_NODE = 0
Y_NODE = 1


class OrderCapError(Exception):
    """Requested order exceeds the enumeration cap."""


@dataclass(frozen=True)
class SlotModel:
    """Slot-to-node maps for the order-m operator string.

    Graph nodes are numbered X = 0, Y = 1, vertex i = i + 1; there are
    order + 2 of them.
    """

    order: int
    ann_nodes: tuple[int, ...]
    cre_nodes: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return self.order + 2


@dataclass(frozen=True)
class MatchCensus:
    """Exhaustive tally of full contractions at one order."""

    total: int
    connected: int


@dataclass(frozen=True)
class CanonicalDiagram:
    """Orbit representative: the lexicographically minimal pairing."""

    order: int
    pairing: tuple[int, ...]


@dataclass(frozen=True)
class OrbitCensus:
    """Decomposition of connected pairings under the diagram symmetry group."""

    order: int
    orbit_count: int
    orbit_sizes: dict[int, int]
    representatives: tuple[CanonicalDiagram, ...] | None


def slot_model(m: int) -> SlotModel:
    """Slot layout for order m: 2m+1 slots per side, two per vertex plus one external."""
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    vertex_nodes = tuple(1 + (s + 1) // 2 for s in range(1, 2 * m + 1))
    return SlotModel(m, (X_NODE,) + vertex_nodes, (Y_NODE,) + vertex_nodes)


def _check_cap(m: int, override: bool, *, census: bool) -> None:
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    if m <= DEFAULT_ORDER_CAP:
        return
    pairings = math.factorial(2 * m + 1)
    if census:
        group = (1 << m) * math.factorial(m)
        raise OrderCapError(
            f"orbit census at order {m} would act on {pairings} pairings with "
            f"{group} group elements each; the census cap is {DEFAULT_ORDER_CAP}"
        )
    if m > OVERRIDE_ORDER_CAP:
        raise OrderCapError(
            f"order {m} means enumerating (2m+1)! = {pairings} pairings; "
            f"the hard cap is {OVERRIDE_ORDER_CAP}"
        )
    if not override:
        raise OrderCapError(
            f"order {m} means enumerating (2m+1)! = {pairings} pairings; "
            f"pass override=True to proceed up to order {OVERRIDE_ORDER_CAP}"
        )


def iter_matchings(m: int, *, first_image: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield pairings in lexicographic order, optionally one shard.

    With `first_image` = c, only pairings sending annihilation slot 0 to
    creation slot c are produced; the 2m+1 shards partition the full
    stream and concatenating them in ascending c reproduces it exactly.
    """
    n = 2 * m + 1
    if first_image is None:
        yield from itertools.permutations(range(n))
        return
    if not 0 <= first_image < n:
        raise ValueError(f"first_image must be a creation slot index, got {first_image}")
    rest = [c for c in range(n) if c != first_image]
    head = (first_image,)
    for tail in itertools.permutations(rest):
        yield head + tail


def diagram_edges(pairing: tuple[int, ...], m: int) -> list[tuple[int, int]]:
    """Edge multiset of the induced multigraph, one edge per contraction.

    Edges are (annihilation node, creation node) in annihilation-slot
    order; self-loops appear as (v, v).  Always exactly 2m+1 edges.
    """
    _validate_pairing(pairing, m)
    model = slot_model(m)
    return [
        (model.ann_nodes[a], model.cre_nodes[c]) for a, c in enumerate(pairing)
    ]


def matching_is_connected(pairing: tuple[int, ...], m: int) -> bool:
    """Reference connectivity test: every node reachable from X.

    Walks the induced multigraph from the X node; the pairing is
    connected exactly when the walk covers all m + 2 nodes.
    """
    n_nodes = m + 2
    adjacency: list[list[int]] = [[] for _ in range(n_nodes)]
    for u, v in diagram_edges(pairing, m):
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = {X_NODE}
    frontier = [X_NODE]
    while frontier:
        node = frontier.pop()
        for nxt in adjacency[node]:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == n_nodes


def enumerate_matchings(
    m: int, *, override: bool = False, first_image: int | None = None
) -> MatchCensus:
    """Count all pairings and the connected ones by exhaustive enumeration.

    A pairing is connected when the multigraph it induces on the m+2
    nodes is a single component, equivalently when every node is
    reachable from X.  The external nodes X and Y can never split apart
    (each has odd degree 1, and component degree sums are even), which is
    asserted for every pairing visited.
    """
    _check_cap(m, override, census=False)
    model = slot_model(m)
    ann = model.ann_nodes
    cre = model.cre_nodes
    n_nodes = model.node_count
    slots = range(2 * m + 1)
    total = 0
    connected = 0
    for p in iter_matchings(m, first_image=first_image):
        total += 1
        parent = list(range(n_nodes))
        components = n_nodes
        for a in slots:
            x = ann[a]
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = cre[p[a]]
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x != y:
                parent[x] = y
                components -= 1
        x = X_NODE
        while parent[x] != x:
            x = parent[x]
        y = Y_NODE
        while parent[y] != y:
            y = parent[y]
        assert x == y, f"external nodes split apart in pairing {p}"
        if components == 1:
            connected += 1
    return MatchCensus(total, connected)


def enumerate_vacuum_matchings(m: int, *, override: bool = False) -> int:
    """Count full contractions of the vertex-only string by exhaustion: (2m)!.

    The vacuum slot model drops both external slots, leaving 2m per side.
    """
    _check_cap(m, override, census=False)
    count = 0
    for _ in itertools.permutations(range(2 * m)):
        count += 1
    return count


@lru_cache(maxsize=None)
def _symmetry_tables(m: int) -> tuple[tuple[int, ...], ...]:
    """Slot-permutation table per group element.

    The group combines vertex relabelings with per-vertex swaps of the
    primed and unprimed points, order 2**m * m! = (2m)!!.  External slot
    0 is always fixed; the same table applies to both slot sides.
    """
    tables = []
    for relabel in itertools.permutations(range(1, m + 1)):
        for flips in range(1 << m):
            table = [0] * (2 * m + 1)
            for i in range(1, m + 1):
                j = relabel[i - 1]
                flip = (flips >> (i - 1)) & 1
                table[2 * i - 1] = 2 * j - 1 + flip
                table[2 * i] = 2 * j - flip
            tables.append(tuple(table))
    return tuple(tables)


def _apply(table: tuple[int, ...], pairing: tuple[int, ...]) -> tuple[int, ...]:
    moved = [0] * len(pairing)
    for a, c in enumerate(pairing):
        moved[table[a]] = table[c]
    return tuple(moved)


def _validate_pairing(pairing: tuple[int, ...], m: int) -> None:
    n = 2 * m + 1
    if len(pairing) != n or sorted(pairing) != list(range(n)):
        raise ValueError(f"not a bijection on {n} slots: {pairing}")


def canonical_form(pairing: tuple[int, ...], m: int) -> CanonicalDiagram:
    """Lexicographic minimum of the pairing's orbit under the (2m)!! group.

    Two pairings have equal canonical forms exactly when some relabeling
    and point swap carries one onto the other.
    """
    _validate_pairing(pairing, m)
    best = min(_apply(table, pairing) for table in _symmetry_tables(m))
    return CanonicalDiagram(m, best)


def orbit_census(m: int, *, include_representatives: bool = True) -> OrbitCensus:
    """Group the connected pairings into symmetry orbits, exhaustively.

    Pairings are visited in lexicographic order and whole orbits are
    expanded from the first member encountered, so each kept
    representative is its orbit's lexicographic minimum (same result as
    canonicalizing every pairing, at a fraction of the work).  The size
    histogram records how many orbits have each size; every orbit of a
    connected pairing is expected to reach the full (2m)!!, but smaller
    sizes, if they ever occurred, would be reported rather than folded in.
    """
    _check_cap(m, False, census=True)
    model = slot_model(m)
    ann = model.ann_nodes
    cre = model.cre_nodes
    n_nodes = model.node_count
    tables = _symmetry_tables(m)
    slots = range(2 * m + 1)
    visited: set[tuple[int, ...]] = set()
    sizes: Counter[int] = Counter()
    representatives: list[CanonicalDiagram] = []
    connected = 0
    for p in iter_matchings(m):
        parent = list(range(n_nodes))
        components = n_nodes
        for a in slots:
            x = ann[a]
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = cre[p[a]]
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x != y:
                parent[x] = y
                components -= 1
        if components != 1:
            continue
        connected += 1
        if p in visited:
            continue
        orbit = {_apply(table, p) for table in tables}
        visited |= orbit
        sizes[len(orbit)] += 1
        representatives.append(CanonicalDiagram(m, p))
    assert sum(size * count for size, count in sizes.items()) == connected, (
        "orbit sizes do not add up to the connected count"
    )
    return OrbitCensus(
        order=m,
        orbit_count=len(representatives),
        orbit_sizes=dict(sorted(sizes.items())),
        representatives=tuple(representatives) if include_representatives else None,
    )


def export_diagram(diagram: CanonicalDiagram) -> str:
    """Render a diagram as DOT multigraph text.

    Nodes are X, Y, v1..vm in that order; one edge per contraction in
    annihilation-slot order, self-loops preserved.  The text depends only
    on the diagram, so repeated exports are byte-identical.
    """
    m = diagram.order
    names = ["X", "Y"] + [f"v{i}" for i in range(1, m + 1)]
    lines = [f"graph diagram_m{m} {{"]
    lines.extend(f"  {name};" for name in names)
    lines.extend(
        f"  {names[u]} -- {names[v]};" for u, v in diagram_edges(diagram.pairing, m)
    )
    lines.append("}")
    return "\n".join(lines) + "\n"
