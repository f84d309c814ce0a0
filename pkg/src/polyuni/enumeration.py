"""Isomorph-free exhaustive enumeration of polyhedral realizations.

Two independent strategies cross-check each other:

* ``enumerate_generic``: edge-slot backtracking over vertices in
  non-increasing degree order, pruned by residual graphicality
  (Erdős–Gallai) and periodic partial-planarity tests.

* ``enumerate_apex``: for sequences with largest entry p-2.  Fix the apex
  y, branch over the degree class of its unique non-neighbor a, and use the
  structural fact that in F = G - y all remaining vertices lie on one face
  cycle C.  Arrangements of the C-degrees are enumerated as necklaces; the
  disk interior (chords plus the star at a, or a spliced into the cycle) is
  filled by a stack-based non-crossing search, so every candidate is planar
  by construction.  Candidates are filtered through ``is_polyhedral`` and
  deduplicated by canonical code.

Both return canonical representative graphs in ascending canonical-code
order, so equal outputs are byte-comparable.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .canon import CanonicalCode, canonical_form
from .graphcore import (
    DegreeSequence,
    Graph,
    degree_sequence,
    graph6_decode,
    graph6_encode,
    polyhedral_feasible,
)
from .planarity import (
    Embedding,
    _trace_faces_from_rotation,
    connectivity_at_least,
    is_planar,
    is_polyhedral,
    planarity_check,
)

UNIGRAPHIC = "UNIGRAPHIC"
NOT_UNIGRAPHIC = "NOT_UNIGRAPHIC"
NOT_POLYHEDRAL = "NOT_POLYHEDRAL"
TRUNCATED = "TRUNCATED"

METHOD_GENERIC = "GENERIC"
METHOD_APEX = "APEX"


class ApexPreconditionViolated(ValueError):
    """The apex reduction needs a sequence whose largest entry is p-2."""


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnigraphicReport:
    """Outcome of a unigraphicity decision for one degree sequence."""

    sequence: DegreeSequence
    realization_count: int
    count_is_lower_bound: bool
    canonical_codes: tuple[str, ...]
    verdict: str
    witnesses: tuple[str, ...]
    method: str
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "sequence": self.sequence.text(),
            "p": self.sequence.p,
            "verdict": self.verdict,
            "realization_count": self.realization_count,
            "count_is_lower_bound": self.count_is_lower_bound,
            "canonical_codes": list(self.canonical_codes),
            "witnesses": list(self.witnesses),
            "method": self.method,
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "UnigraphicReport":
        return cls(
            sequence=DegreeSequence.from_text(d["sequence"]),
            realization_count=d["realization_count"],
            count_is_lower_bound=d["count_is_lower_bound"],
            canonical_codes=tuple(d["canonical_codes"]),
            verdict=d["verdict"],
            witnesses=tuple(d["witnesses"]),
            method=d["method"],
            elapsed=d["elapsed"],
        )


@dataclass(frozen=True)
class ApexDecomposition:
    """Structure of a polyhedron around an apex vertex of degree p-2.

    ``cycle_c`` is the cyclic order of W = V minus {y, a} on the face of
    G - y that carries every W vertex; ``interior_edges`` are the edges of
    G - y that do not lie on that face boundary.
    """

    y: int
    a: int
    cycle_c: tuple[int, ...]
    interior_edges: tuple[tuple[int, int], ...]


def decompose_apex(g: Graph) -> ApexDecomposition:
    """Exhibit y, a, the W-face cycle, and the interior of F = G - y.

    Requires a polyhedral graph with a vertex of degree p-2.  The face is
    recovered from g's own embedding with y's rotation entries removed, so
    it always exists.
    """
    p = g.p
    apexes = [v for v in range(p) if g.degree(v) == p - 2]
    if not apexes:
        raise ApexPreconditionViolated("no vertex of degree p-2")
    emb = planarity_check(g)
    if not isinstance(emb, Embedding):
        raise ValueError("graph is not planar")
    y = apexes[0]
    non_nbrs = [v for v in range(p) if v != y and not g.has_edge(y, v)]
    a = non_nbrs[0]
    rot_f = {
        v: [u for u in emb.rotation[v] if u != y] for v in range(p) if v != y
    }
    faces = _trace_faces_from_rotation(rot_f)
    w_set = {v for v in range(p) if v not in (y, a)}
    boundary = None
    for face in faces:
        if w_set <= set(face):
            boundary = face
            break
    if boundary is None:
        raise AssertionError("W-face missing from the induced embedding")
    walk_edges = {
        (min(u, v), max(u, v)) for u, v in zip(boundary, boundary[1:] + boundary[:1])
    }
    f_edges = {(u, v) for u, v in g.edges() if y not in (u, v)}
    interior = tuple(sorted(f_edges - walk_edges))
    cycle = tuple(v for v in boundary if v != a)
    return ApexDecomposition(y=y, a=a, cycle_c=cycle, interior_edges=interior)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _eg_list(desc: list[int]) -> bool:
    """Erdős–Gallai for an already non-increasing list."""
    n = len(desc)
    if desc and desc[0] >= n:
        return False
    if sum(desc) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += desc[k - 1]
        tail = sum(min(x, k) for x in desc[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


class _Collector:
    """Canonical-code dedup with an optional early-exit limit.

    Every accepted graph is re-asserted against the target sequence and
    ``is_polyhedral``; the stored representative is the decoded canonical
    graph, so output is independent of which strategy found it first.
    """

    def __init__(self, s: DegreeSequence, limit: int | None):
        self.s = s
        self.limit = limit
        self.codes: dict[CanonicalCode, Graph] = {}

    def offer(self, g: Graph) -> bool:
        """Record g's isomorphism class; True when the limit is reached."""
        if degree_sequence(g) != self.s:
            raise AssertionError("enumerated graph has the wrong degree sequence")
        if not is_polyhedral(g):
            return False
        code = canonical_form(g)
        if code not in self.codes:
            rep = graph6_decode(code.g6)
            assert degree_sequence(rep) == self.s and is_polyhedral(rep)
            self.codes[code] = rep
        return self.limit is not None and len(self.codes) >= self.limit

    def result(self) -> list[Graph]:
        return [self.codes[c] for c in sorted(self.codes)]


# ---------------------------------------------------------------------------
# Generic strategy
# ---------------------------------------------------------------------------

def enumerate_generic(s: DegreeSequence, limit: int | None = None) -> list[Graph]:
    """All pairwise non-isomorphic polyhedral realizations of ``s``.

    Vertices are processed in non-increasing target-degree order; vertex v's
    remaining neighbors are chosen among later vertices.  Vertices that are
    interchangeable so far (same residual degree, same adjacency to the
    processed prefix) are only used as class prefixes, which removes most
    label symmetry without losing any isomorphism class.
    """
    if not polyhedral_feasible(s).polyhedral_necessary:
        return []
    p = s.p
    target = list(s.degrees)
    residual = target[:]
    bits = [0] * p
    edges: list[tuple[int, int]] = []
    collector = _Collector(s, limit)

    def planar_partial() -> bool:
        return is_planar(Graph.from_edges(p, edges))

    def rec(v: int) -> bool:
        if v == p:
            return collector.offer(Graph.from_edges(p, edges))
        need = residual[v]
        cands = [u for u in range(v + 1, p) if residual[u] > 0]
        if need > len(cands):
            return False
        if need == 0:
            return rec(v + 1)
        classes: dict[tuple[int, int], list[int]] = {}
        order: list[tuple[int, int]] = []
        prefix_mask = (1 << v) - 1
        for u in cands:
            key = (residual[u], bits[u] & prefix_mask)
            if key not in classes:
                classes[key] = []
                order.append(key)
            classes[key].append(u)

        def choose(ci: int, left: int, chosen: list[int]) -> bool:
            if left == 0:
                for u in chosen:
                    residual[u] -= 1
                    bits[u] |= 1 << v
                    bits[v] |= 1 << u
                    edges.append((v, u))
                residual[v] = 0
                ok = _eg_list(sorted(residual[v + 1:], reverse=True))
                if ok and len(edges) >= 8 and not planar_partial():
                    ok = False
                stop = rec(v + 1) if ok else False
                for u in chosen:
                    residual[u] += 1
                    bits[u] &= ~(1 << v)
                    bits[v] &= ~(1 << u)
                    edges.pop()
                residual[v] = need
                return stop
            if ci == len(order):
                return False
            members = classes[order[ci]]
            for take in range(min(left, len(members)), -1, -1):
                if choose(ci + 1, left - take, chosen + members[:take]):
                    return True
            return False

        return choose(0, need, [])

    rec(0)
    return collector.result()


# ---------------------------------------------------------------------------
# Apex strategy
# ---------------------------------------------------------------------------

def _distinct_permutations(items: list[int]) -> Iterator[tuple[int, ...]]:
    counts = Counter(items)
    values = sorted(counts, reverse=True)
    n = len(items)
    perm = [0] * n

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(perm)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                perm[k] = v
                yield from rec(k + 1)
                counts[v] += 1

    yield from rec(0)


def _necklace_canon(arr: tuple[int, ...], maxv: int) -> tuple[int, ...]:
    best = None
    for base in (arr, arr[::-1]):
        for i, b in enumerate(base):
            if b == maxv:
                rot = base[i:] + base[:i]
                if best is None or rot < best:
                    best = rot
    return best  # type: ignore[return-value]


def _necklaces(multiset: list[int]) -> Iterator[tuple[int, ...]]:
    """Cyclic arrangements of a multiset, one per rotation+reflection class."""
    items = sorted(multiset, reverse=True)
    if not items:
        return
    maxv = items[0]
    for perm in _distinct_permutations(items[1:]):
        arr = (maxv,) + perm
        if arr == _necklace_canon(arr, maxv):
            yield arr


def _linear_reflection_classes(multiset: list[int]) -> Iterator[tuple[int, ...]]:
    """Arrangements of a multiset up to reversal (for a marked cycle point)."""
    for perm in _distinct_permutations(sorted(multiset, reverse=True)):
        if perm <= perm[::-1]:
            yield perm


def _noncrossing_fills(
    res: list[int], star_budget: int
) -> Iterator[tuple[tuple[tuple[int, int], ...], tuple[int, ...]]]:
    """Ways to consume cycle residuals with non-crossing chords plus a star.

    Positions 0..n-1 sit on a cycle; a chord may not join cycle-adjacent
    positions and chords may not cross (scanline stack discipline).  The star
    marks positions joined to a single interior vertex: it is valid iff no
    chord strictly separates two starred positions.  Yields
    (chords, star_positions) with every residual consumed exactly.
    """
    n = len(res)
    total = sum(res)
    if (total - star_budget) % 2 or total < star_budget:
        return
    suffix_sum = [0] * (n + 1)
    suffix_pos = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_sum[i] = suffix_sum[i + 1] + res[i]
        suffix_pos[i] = suffix_pos[i + 1] + (1 if res[i] > 0 else 0)
    if star_budget > suffix_pos[0]:
        return

    chords: list[tuple[int, int]] = []
    stars: list[int] = []
    stack: list[int] = []

    def star_ok(i: int) -> bool:
        for u, v in chords:
            if u < i < v:
                if any(s < u or s > v for s in stars):
                    return False
            elif i != u and i != v:
                if any(u < s < v for s in stars):
                    return False
        return True

    def chord_ok(u: int, i: int) -> bool:
        if u == i - 1 or (u == 0 and i == n - 1):
            return False
        inside = outside = False
        for s in stars:
            if u < s < i:
                inside = True
            elif s != u and s != i:
                outside = True
        return not (inside and outside)

    def feasible_tail(i: int, height: int, budget: int) -> bool:
        rest = suffix_sum[i]
        if rest < height + budget:
            return False
        if (rest - height - budget) % 2:
            return False
        return budget <= suffix_pos[i]

    def rec(i: int, budget: int) -> Iterator[tuple]:
        if i == n:
            if not stack and budget == 0:
                yield tuple(chords), tuple(stars)
            return
        rem = res[i]

        def after_closes(rem_left: int) -> Iterator[tuple]:
            for use_star in (0, 1) if (budget and rem_left and i not in stars) else (0,):
                if use_star and not star_ok(i):
                    continue
                n_open = rem_left - use_star
                if n_open < 0:
                    continue
                new_height = len(stack) + n_open
                new_budget = budget - use_star
                if not feasible_tail(i + 1, new_height, new_budget):
                    continue
                if use_star:
                    stars.append(i)
                stack.extend([i] * n_open)
                yield from rec(i + 1, new_budget)
                for _ in range(n_open):
                    stack.pop()
                if use_star:
                    stars.pop()

        def closing(rem_left: int, last_closed: int | None) -> Iterator[tuple]:
            yield from after_closes(rem_left)
            if rem_left > 0 and stack:
                u = stack[-1]
                if u != last_closed and chord_ok(u, i):
                    stack.pop()
                    chords.append((u, i))
                    yield from closing(rem_left - 1, u)
                    chords.pop()
                    stack.append(u)

        yield from closing(rem, None)

    yield from rec(0, star_budget)


def _assemble_apex(
    p: int,
    arrangement: tuple[int, ...],
    chords: tuple[tuple[int, int], ...],
    stars: tuple[int, ...],
    a_on_cycle: bool,
) -> Graph:
    """Build G = y + F from a filled cycle.

    Positions become W vertices 0..n-1 (branch with interior a) or a=0 plus
    W at 1..n (branch with a on the cycle); a then y are appended.
    """
    n = len(arrangement)
    if a_on_cycle:
        a = 0
        w = list(range(1, n))
        y = n
        cyc = list(range(n))
    else:
        a = n
        w = list(range(n))
        y = n + 1
        cyc = list(range(n))
    edges = [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    edges += [(u, v) for u, v in chords]
    edges += [(a, i) for i in stars]
    edges += [(y, x) for x in w]
    return Graph.from_edges(y + 1, edges)


def enumerate_apex(
    s: DegreeSequence,
    limit: int | None = None,
    restrict_a_degree: int | None = None,
) -> list[Graph]:
    """Apex-reduction enumeration for sequences with s[0] = p-2.

    Branches over the degree class of the apex's non-neighbor a; within each
    class, over necklaces of the face-cycle degrees, with a either interior
    to the cycle (star fill) or spliced into it.  ``restrict_a_degree``
    limits the search to one class (used for staged verification of large
    orders).
    """
    p = s.p
    if p < 5 or s[0] != p - 2:
        raise ApexPreconditionViolated(
            f"apex enumeration needs d1 = p-2, got d1={s[0]} at p={p}"
        )
    if not polyhedral_feasible(s).polyhedral_necessary:
        return []
    collector = _Collector(s, limit)
    after_y = Counter(s.degrees)
    after_y[p - 2] -= 1
    if not after_y[p - 2]:
        del after_y[p - 2]

    for d_a in sorted(after_y, reverse=True):
        if restrict_a_degree is not None and d_a != restrict_a_degree:
            continue
        w_counts = after_y.copy()
        w_counts[d_a] -= 1
        m = sorted((d - 1 for d in w_counts.elements()), reverse=True)
        if any(x < 2 for x in m):
            continue

        # branch A: a strictly inside the all-W face cycle
        for neck in _necklaces(m):
            res = [x - 2 for x in neck]
            for chords, stars in _noncrossing_fills(res, d_a):
                g = _assemble_apex(p, neck, chords, stars, a_on_cycle=False)
                if _fast_polyhedral_screen(g):
                    if collector.offer(g):
                        return collector.result()

        # branch B: a lies on the face cycle itself
        for arr in _linear_reflection_classes(m):
            res = [d_a - 2] + [x - 2 for x in arr]
            for chords, stars in _noncrossing_fills(res, 0):
                g = _assemble_apex(p, (d_a,) + arr, chords, stars, a_on_cycle=True)
                if _fast_polyhedral_screen(g):
                    if collector.offer(g):
                        return collector.result()

    return collector.result()


def _fast_polyhedral_screen(g: Graph) -> bool:
    """Cheap necessary screen before the full is_polyhedral filter.

    For apex candidates, 3-connectivity of G is equivalent to
    2-connectivity of F = G minus its apex; testing F first rejects most
    bad fills without running planarity.
    """
    f = g.subgraph_without([g.p - 1])
    return connectivity_at_least(f, 2) is True


def enumerate_auto(s: DegreeSequence, limit: int | None = None) -> list[Graph]:
    """Dispatch: apex method when s[0] = p-2, generic otherwise."""
    if s.p >= 5 and s[0] == s.p - 2:
        return enumerate_apex(s, limit=limit)
    return enumerate_generic(s, limit=limit)


def auto_method(s: DegreeSequence) -> str:
    return METHOD_APEX if (s.p >= 5 and s[0] == s.p - 2) else METHOD_GENERIC


def feasible_sequences(
    p: int, prefix: tuple[int, ...] = (), min_value: int = 3
) -> list[DegreeSequence]:
    """All polyhedrally-feasible non-increasing sequences extending ``prefix``.

    Completions take values between ``min_value`` and the last prefix entry
    (or p-2 for an empty prefix), with even total at most 6p-12.  Results are
    sorted lexicographically descending.
    """
    rest = p - len(prefix)
    last = prefix[-1] if prefix else p - 2
    out: list[DegreeSequence] = []

    def rec(acc: list[int], lo_last: int, total: int) -> None:
        left = rest - len(acc)
        if left == 0:
            if total % 2 == 0 and total >= 3 * p:
                s = DegreeSequence(prefix + tuple(acc))
                if polyhedral_feasible(s).polyhedral_necessary:
                    out.append(s)
            return
        for d in range(min(lo_last, p - 2), min_value - 1, -1):
            if total + d + min_value * (left - 1) > 6 * p - 12:
                continue
            acc.append(d)
            rec(acc, d, total + d)
            acc.pop()

    rec([], last, sum(prefix))
    out.sort(key=lambda s: s.degrees, reverse=True)
    return out


# ---------------------------------------------------------------------------
# Unigraphicity
# ---------------------------------------------------------------------------

def unigraphic_check(
    s: DegreeSequence, limit: int = 2, method: str | None = None
) -> UnigraphicReport:
    """Decide whether ``s`` has exactly one polyhedral realization.

    Enumeration stops early at ``limit`` distinct realizations; the default
    of 2 suffices because only 0, 1, or >= 2 matters for the verdict.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    t0 = time.perf_counter()
    chosen = method or auto_method(s)
    if not polyhedral_feasible(s).polyhedral_necessary:
        graphs: list[Graph] = []
    elif chosen == METHOD_APEX:
        graphs = enumerate_apex(s, limit=limit)
    else:
        graphs = enumerate_generic(s, limit=limit)
    elapsed = time.perf_counter() - t0
    count = len(graphs)
    truncated = count == limit
    if count == 0:
        verdict = NOT_POLYHEDRAL
    elif count >= 2:
        verdict = NOT_UNIGRAPHIC
    elif truncated:
        verdict = TRUNCATED
    else:
        verdict = UNIGRAPHIC
    codes = tuple(canonical_form(g).text for g in graphs)
    witnesses = tuple(graph6_encode(g).decode("ascii") for g in graphs[:2])
    return UnigraphicReport(
        sequence=s,
        realization_count=count,
        count_is_lower_bound=truncated,
        canonical_codes=codes,
        verdict=verdict,
        witnesses=witnesses,
        method=chosen,
        elapsed=elapsed,
    )
