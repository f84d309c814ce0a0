"""Canonical labeling and isomorphism testing: the deduplication backbone.

Canonicalization runs iterated degree/neighbor-cell partition refinement,
then backtracks over the automorphism-pruned individualization tree and keeps
the lexicographically least adjacency encoding (in graph6 bit order, so the
canonical code *is* the least graph6 string reachable through the tree).
Equal codes therefore mean isomorphic, and the tree is isomorphism-invariant,
so isomorphic graphs get equal codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphcore import Graph, graph6_encode


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant byte encoding: the canonical graph6 string."""

    g6: bytes

    @property
    def text(self) -> str:
        return self.g6.decode("ascii")

    def __str__(self) -> str:
        return self.text


def _refine(bits: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts into every cell.

    Cell order is deterministic: a split cell is replaced in place by its
    parts sorted by signature, members stay in ascending vertex order.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((bits[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        if not changed:
            return new_cells
        cells = new_cells


def _orbit(v: int, gens: list[tuple[int, ...]]) -> set[int]:
    seen = {v}
    queue = [v]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@lru_cache(maxsize=65536)
def _canonical(g: Graph) -> tuple[tuple[int, ...], bytes]:
    p, bits = g.p, g.bits

    def leaf_code(lab: tuple[int, ...]) -> tuple[int, ...]:
        # upper triangle, column-major: the graph6 bit order
        out = []
        for j in range(1, p):
            row = bits[lab[j]]
            for i in range(j):
                out.append((row >> lab[i]) & 1)
        return tuple(out)

    best: dict = {"code": None, "lab": None}
    gens: list[tuple[int, ...]] = []

    def rec(cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        if all(len(c) == 1 for c in cells):
            lab = tuple(c[0] for c in cells)
            code = leaf_code(lab)
            if best["code"] is None or code < best["code"]:
                best["code"], best["lab"] = code, lab
            elif code == best["code"]:
                blab = best["lab"]
                sigma = [0] * p
                for i in range(p):
                    sigma[blab[i]] = lab[i]
                sigma_t = tuple(sigma)
                if sigma_t != tuple(range(p)) and sigma_t not in gens:
                    gens.append(sigma_t)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[ti]
        tried: set[int] = set()
        for v in cell:
            usable = [s for s in gens if all(s[x] == x for x in prefix)]
            if usable and _orbit(v, usable) & tried:
                tried.add(v)
                continue
            tried.add(v)
            child = cells[:ti] + [[v], [x for x in cell if x != v]] + cells[ti + 1:]
            rec(_refine(bits, child), prefix + (v,))

    rec(_refine(bits, [list(range(p))]), ())
    lab = best["lab"]
    perm = [0] * p  # perm[old] = canonical position
    for i, v in enumerate(lab):
        perm[v] = i
    return lab, graph6_encode(g.relabel(perm))


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Labeling realizing the canonical form: position i holds old vertex lab[i]."""
    return _canonical(g)[0]


def canonical_form(g: Graph) -> CanonicalCode:
    """Permutation-invariant code; equal codes iff isomorphic graphs."""
    return CanonicalCode(_canonical(g)[1])


def isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A vertex bijection g -> h mapping edges to edges exactly, or None.

    The bijection is rebuilt from the two canonical labelings and re-verified
    edge by edge before being returned, never assumed.
    """
    if g.p != h.p or g.edge_count != h.edge_count:
        return None
    if sorted(g.bits[v].bit_count() for v in range(g.p)) != sorted(
        h.bits[v].bit_count() for v in range(h.p)
    ):
        return None
    if _canonical(g)[1] != _canonical(h)[1]:
        return None
    lab_g = canonical_labeling(g)
    lab_h = canonical_labeling(h)
    mapping = [0] * g.p
    for i in range(g.p):
        mapping[lab_g[i]] = lab_h[i]
    for u in range(g.p):
        for v in range(u + 1, g.p):
            if g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v]):
                raise AssertionError("canonical labelings disagree with an edge")
    return tuple(mapping)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None
