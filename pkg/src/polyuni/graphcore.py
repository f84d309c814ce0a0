"""Fundamental graph and degree-sequence types, graphicality tests, and graph6 interchange.

Vertices are dense 0-indexed integers.  Degree sequences are stored
non-increasing.  Adjacency is kept both as sorted tuples (the public view)
and as per-vertex integer bitmasks (what the algorithms use).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class NotGraphical(ValueError):
    """Raised when a realization is requested for a non-graphical sequence."""


class MalformedGraph6(ValueError):
    """Raised on graph6 input that does not follow the format."""


class SequenceParseError(ValueError):
    """Raised on degree-sequence text that does not match the grammar."""


# ---------------------------------------------------------------------------
# Degree sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class DegreeSequence:
    """A non-increasing list of vertex degrees.

    Feasibility (graphical, polyhedral-necessary) is a query, not a
    construction invariant: infeasible sequences are representable.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.degrees) < 1:
            raise ValueError("a degree sequence has at least one term")
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees are non-negative integers")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def p(self) -> int:
        """Order: number of vertices."""
        return len(self.degrees)

    @property
    def total(self) -> int:
        """Sum of degrees (twice the edge count of any realization)."""
        return sum(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def __len__(self) -> int:
        return len(self.degrees)

    def text(self) -> str:
        """Plain comma-separated form, e.g. ``"5,5,5,4,4,4,3"``."""
        return ",".join(str(d) for d in self.degrees)

    def text_compact(self) -> str:
        """Caret-power form: runs of three or more collapse, e.g. ``"8,8,5,4^6,3"``."""
        out: list[str] = []
        i = 0
        while i < len(self.degrees):
            j = i
            while j < len(self.degrees) and self.degrees[j] == self.degrees[i]:
                j += 1
            run = j - i
            if run >= 3:
                out.append(f"{self.degrees[i]}^{run}")
            else:
                out.extend([str(self.degrees[i])] * run)
            i = j
        return ",".join(out)

    @classmethod
    def from_text(cls, text: str) -> "DegreeSequence":
        """Parse ``INT(,INT)*`` with optional ``^INT`` powers.

        ``"8,8,5,4^6,3"`` expands to ten terms; ``"6,5^3,4^3,3"`` equals
        ``6,5,5,5,4,4,4,3``.
        """
        terms: list[int] = []
        for part in text.strip().split(","):
            part = part.strip()
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", part)
            if m is None:
                raise SequenceParseError(f"bad degree term {part!r}")
            value = int(m.group(1))
            count = int(m.group(2)) if m.group(2) else 1
            if count < 1:
                raise SequenceParseError(f"power must be positive in {part!r}")
            terms.extend([value] * count)
        if not terms:
            raise SequenceParseError("empty sequence")
        return cls(tuple(terms))


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected labeled graph on vertices ``0..p-1``.

    Immutable after construction.  No loops, no multi-edges; symmetry is
    enforced by construction.  ``bits[v]`` is the neighbor set of ``v`` as an
    integer bitmask.
    """

    p: int
    bits: tuple[int, ...] = field(compare=True)

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("graphs here have at least one vertex")
        if len(self.bits) != self.p:
            raise ValueError("bitmask table must have one entry per vertex")
        full = (1 << self.p) - 1
        for v, bv in enumerate(self.bits):
            if bv & ~full:
                raise ValueError("neighbor index out of range")
            if bv >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.p):
            for u in _iter_bits(self.bits[v]):
                if not (self.bits[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        bits = [0] * p
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise ValueError(f"edge ({u},{v}) out of range for p={p}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return cls(p, tuple(bits))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.bits[v]))

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        return tuple(self.neighbors(v) for v in range(self.p))

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.bits[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) with u < v."""
        return [(u, v) for u in range(self.p) for v in _iter_bits(self.bits[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(b.bit_count() for b in self.bits) // 2

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under a vertex permutation: new vertex ``perm[v]`` is old ``v``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.p)):
            raise ValueError("not a permutation")
        return Graph.from_edges(self.p, [(perm[u], perm[v]) for u, v in self.edges()])

    def subgraph_without(self, removed: Iterable[int]) -> "Graph":
        """Induced subgraph with ``removed`` vertices deleted, relabeled densely."""
        removed = set(removed)
        keep = [v for v in range(self.p) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, edges={self.edges()})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree_sequence(g: Graph) -> DegreeSequence:
    """Multiset of vertex degrees of ``g``, sorted non-increasing."""
    return DegreeSequence(tuple(g.degree(v) for v in range(g.p)))


# ---------------------------------------------------------------------------
# Graphicality
# ---------------------------------------------------------------------------

def is_graphical(s: DegreeSequence) -> bool:
    """True iff some simple graph realizes ``s`` (Erdős–Gallai)."""
    d = list(s.degrees)
    n = len(d)
    if any(x >= n for x in d):
        return False
    if sum(d) % 2 != 0:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def havel_hakimi_realize(s: DegreeSequence) -> Graph:
    """Deterministic Havel–Hakimi realization of a graphical sequence.

    The highest-residual vertex is connected to the next-highest residual
    vertices; ties break toward the lowest index.  Raises NotGraphical when
    no simple graph realizes ``s``.
    """
    if not is_graphical(s):
        raise NotGraphical(f"{s.text()} is not graphical")
    residual = list(s.degrees)
    p = len(residual)
    edges: list[tuple[int, int]] = []
    while True:
        order = sorted(range(p), key=lambda v: (-residual[v], v))
        v = order[0]
        if residual[v] == 0:
            break
        need = residual[v]
        partners = [u for u in order[1:] if residual[u] > 0][:need]
        if len(partners) < need:
            raise NotGraphical(f"{s.text()} is not graphical")  # unreachable after EG
        for u in partners:
            edges.append((v, u))
            residual[u] -= 1
        residual[v] = 0
    return Graph.from_edges(p, edges)


# ---------------------------------------------------------------------------
# Polyhedral feasibility (necessary conditions only)
# ---------------------------------------------------------------------------

#: condition identifiers used in FeasibilityReport.violated_conditions
COND_SUM_PARITY = "sum-parity"
COND_MIN_DEGREE = "min-degree-3"
COND_MAX_DEGREE = "max-degree-bound"
COND_EULER_EDGES = "euler-edge-bound"
COND_MIN_EDGES = "min-edge-bound"
COND_ORDER = "order-bound"


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the necessary-condition screen for polyhedral realizability.

    ``polyhedral_necessary`` true means no necessary condition failed; it does
    not imply a realization exists (sufficiency is enumeration's job).
    """

    graphical: bool
    polyhedral_necessary: bool
    violated_conditions: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "graphical": self.graphical,
            "polyhedral_necessary": self.polyhedral_necessary,
            "violated_conditions": list(self.violated_conditions),
        }


def polyhedral_feasible(s: DegreeSequence) -> FeasibilityReport:
    """Screen ``s`` against conditions every polyhedron's sequence satisfies.

    Checks: p >= 4, min degree 3, max degree p-1, even degree sum, sum at
    most 6p-12 (planarity), sum at least 3p.
    """
    violated: list[str] = []
    p = s.p
    total = s.total
    if p < 4:
        violated.append(COND_ORDER)
    if any(d < 3 for d in s.degrees):
        violated.append(COND_MIN_DEGREE)
    if any(d > p - 1 for d in s.degrees):
        violated.append(COND_MAX_DEGREE)
    if total % 2 != 0:
        violated.append(COND_SUM_PARITY)
    if total > 6 * p - 12:
        violated.append(COND_EULER_EDGES)
    if total < 3 * p:
        violated.append(COND_MIN_EDGES)
    return FeasibilityReport(
        graphical=is_graphical(s),
        polyhedral_necessary=not violated,
        violated_conditions=tuple(violated),
    )


# ---------------------------------------------------------------------------
# graph6 (bit-exact interchange; short-order header form, p <= 62)
# ---------------------------------------------------------------------------

def graph6_encode(g: Graph) -> bytes:
    """Encode per the published graph6 format: upper triangle, column-major.

    Only the small-order header (single byte, p <= 62) is supported, which
    covers everything this artifact produces.
    """
    n = g.p
    if n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.bits[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    """Decode graph6 bytes (short-order form); raises MalformedGraph6."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise MalformedGraph6("empty input")
    head = data[0]
    if head == 126:
        raise MalformedGraph6("long-order graph6 headers are not supported")
    n = head - 63
    if not 0 <= n <= 62:
        raise MalformedGraph6(f"bad order byte {head}")
    if n == 0:
        raise MalformedGraph6("graph6 with zero vertices is not representable here")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise MalformedGraph6(f"expected {nbytes} body bytes, got {len(body)}")
    bitstream: list[int] = []
    for b in body:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b} outside graph6 range")
        v = b - 63
        bitstream.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bitstream[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)
