"""Exact planarity testing with verifiable certificates, and k-connectivity for k <= 3.

Planarity uses face-based incremental embedding (Demoucron–Malgrange–Pertuiset)
per biconnected block: quadratic, exact, and it returns a rotation system,
which downstream face arguments need.  Every negative answer is certified by
an explicit K5/K3,3 subdivision obtained by reducing the graph to an
edge-minimal nonplanar subgraph.

Connectivity is tested by the definition (delete every (k-1)-subset, check
connectedness), which is trivially auditable at this artifact's scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphcore import Graph, _iter_bits

K5 = "K5"
K33 = "K33"


@dataclass(frozen=True)
class Embedding:
    """Combinatorial planarity certificate.

    ``rotation[v]`` is the cyclic order of v's neighbors.  Faces are traced by
    the rule: after traversing u->v, continue to the neighbor following u in
    ``rotation[v]``.  ``face_count`` uses the convention p - e + f = 1 + c for
    a graph with c connected components (so f = 2 - p + e when connected).
    """

    rotation: tuple[tuple[int, ...], ...]
    face_count: int


@dataclass(frozen=True)
class KuratowskiWitness:
    """A K5 or K3,3 subdivision certifying nonplanarity.

    ``paths`` realize the subdivision edges; they are internally disjoint and
    meet only at branch vertices.  For K33 the first three branch vertices
    form one side of the bipartition.
    """

    kind: str
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CutWitness:
    """At most k-1 vertices whose removal disconnects the graph.

    The empty set covers the degenerate negatives: the graph is already
    disconnected, or its order is too small (p <= k) for k-connectivity to
    hold by definition.
    """

    cut_vertices: frozenset[int]


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------

def _components(g: Graph, removed_mask: int = 0) -> list[int]:
    """Vertex-bitmask per connected component of g minus the removed vertices."""
    remaining = ((1 << g.p) - 1) & ~removed_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        visited = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.bits[low.bit_length() - 1]
                m ^= low
            frontier = nxt & remaining & ~visited
            visited |= frontier
        comps.append(visited)
        remaining &= ~visited
    return comps


def is_connected(g: Graph) -> bool:
    return len(_components(g)) <= 1


def connectivity_at_least(g: Graph, k: int):
    """True iff g is k-connected (k in 1..3), else a verifying CutWitness."""
    if not 1 <= k <= 3:
        raise ValueError("k must be in 1..3")
    if g.p <= k:
        return CutWitness(frozenset())
    if not is_connected(g):
        return CutWitness(frozenset())
    for size in range(1, k):
        for cut in combinations(range(g.p), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if len(_components(g, mask)) >= 2:
                return CutWitness(frozenset(cut))
    return True


def verify_cut_witness(g: Graph, k: int, w: CutWitness) -> bool:
    """Independent check that ``w`` certifies failure of k-connectivity."""
    if not w.cut_vertices:
        return g.p <= k or not is_connected(g)
    if len(w.cut_vertices) > k - 1:
        return False
    if any(not 0 <= v < g.p for v in w.cut_vertices):
        return False
    mask = 0
    for v in w.cut_vertices:
        mask |= 1 << v
    return len(_components(g, mask)) >= 2


# ---------------------------------------------------------------------------
# Embedding: DMP per biconnected block
# ---------------------------------------------------------------------------

def _blocks(g: Graph, comp_vertices: list[int]) -> list[list[tuple[int, int]]]:
    """Biconnected components (as edge lists) of one connected component."""
    index = {}
    low = {}
    parent: dict[int, int | None] = {}
    blocks: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    root = comp_vertices[0]
    parent[root] = None
    # iterative DFS, children explored in ascending order
    stack: list[tuple[int, list[int], int]] = []
    index[root] = low[root] = counter
    counter += 1
    stack.append((root, list(g.neighbors(root)), 0))
    while stack:
        v, nbrs, i = stack.pop()
        advanced = False
        while i < len(nbrs):
            w = nbrs[i]
            i += 1
            if w not in index:
                parent[w] = v
                edge_stack.append((v, w))
                index[w] = low[w] = counter
                counter += 1
                stack.append((v, nbrs, i))
                stack.append((w, list(g.neighbors(w)), 0))
                advanced = True
                break
            elif w != parent[v] and index[w] < index[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], index[w])
        if advanced:
            continue
        # v finished: propagate low to parent, maybe pop a block
        u = parent[v]
        if u is not None:
            low[u] = min(low[u], low[v])
            if low[v] >= index[u]:
                block = []
                while edge_stack:
                    e = edge_stack.pop()
                    block.append((min(e), max(e)))
                    if e == (u, v):
                        break
                blocks.append(sorted(block))
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    """Any cycle in a 2-connected graph, deterministic for fixed labels."""
    start = min(adj)
    parent: dict[int, int | None] = {start: None}
    order = [start]
    stack = [start]
    while stack:
        v = stack.pop()
        for w in sorted(adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
                stack.append(w)
            elif parent[v] != w:
                # back or cross edge: climb both endpoints to their meeting point
                anc_v = []
                x: int | None = v
                while x is not None:
                    anc_v.append(x)
                    x = parent[x]
                seen = set(anc_v)
                path_w = [w]
                y = w
                while y not in seen:
                    y = parent[y]  # type: ignore[assignment]
                    path_w.append(y)
                meet = path_w[-1]
                cycle = anc_v[: anc_v.index(meet) + 1]
                cycle.reverse()
                cycle.extend(path_w[:-1][::-1])
                if len(cycle) >= 3:
                    return cycle
    raise AssertionError("2-connected block without a cycle")


def _embed_block(edges: list[tuple[int, int]]) -> list[list[int]] | None:
    """DMP: faces of a planar embedding of a 2-connected block, or None.

    Faces come back as simple vertex cycles, consistently oriented: every
    directed edge of the block lies on exactly one face walk.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    all_edges = {(min(e), max(e)) for e in edges}
    nverts = len(adj)
    nedges = len(all_edges)
    if nedges > 3 * nverts - 6 and nverts >= 3:
        return None

    cycle = _find_cycle(adj)
    faces: list[list[int]] = [cycle[:], cycle[::-1]]
    embedded_v = set(cycle)
    embedded_e = {(min(a, b), max(a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])}

    while embedded_e != all_edges:
        # fragments: chords between embedded vertices, and bridges through
        # unembedded components with their attachment vertices
        fragments: list[tuple[frozenset[int], frozenset[int]]] = []  # (attachments, interior)
        for u, v in sorted(all_edges - embedded_e):
            if u in embedded_v and v in embedded_v:
                fragments.append((frozenset((u, v)), frozenset()))
        unembedded = sorted(set(adj) - embedded_v)
        seen: set[int] = set()
        for s in unembedded:
            if s in seen:
                continue
            comp = {s}
            queue = [s]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y not in embedded_v and y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            attach = frozenset(w for x in comp for w in adj[x] if w in embedded_v)
            fragments.append((attach, frozenset(comp)))

        best = None
        for frag in fragments:
            attach = frag[0]
            admissible = [f for f in faces if attach <= set(f)]
            if not admissible:
                return None
            if best is None or len(admissible) < len(best[1]):
                best = (frag, admissible)
            if len(admissible) == 1:
                break
        assert best is not None
        (attach, interior), admissible = best
        a1 = min(attach)
        if interior:
            # shortest path a1 -> interior -> a2 for some other attachment
            prev: dict[int, int | None] = {a1: None}
            queue = [a1]
            endpoint = None
            while queue and endpoint is None:
                nxt = []
                for x in queue:
                    for y in sorted(adj[x]):
                        if x == a1 and y not in interior:
                            continue
                        if y in prev:
                            continue
                        prev[y] = x
                        if y in interior:
                            nxt.append(y)
                        elif y != a1:
                            endpoint = y
                            break
                    if endpoint is not None:
                        break
                queue = nxt
            assert endpoint is not None
            path = [endpoint]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])  # type: ignore[arg-type]
            path.reverse()
        else:
            a2 = max(attach)
            path = [a1, a2]

        face = admissible[0]
        i1 = face.index(path[0])
        i2 = face.index(path[-1])
        n = len(face)
        seg1 = [face[(i1 + t) % n] for t in range((i2 - i1) % n + 1)]
        seg2 = [face[(i2 + t) % n] for t in range((i1 - i2) % n + 1)]
        inner = path[1:-1]
        faces.remove(face)
        faces.append(seg1 + inner[::-1])
        faces.append(seg2 + inner)
        embedded_v.update(path)
        embedded_e.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    return faces


def _planar_faces(g: Graph) -> list[list[list[int]]] | None:
    """Per-component face lists of some planar embedding, or None if nonplanar.

    Per-component faces are those of the sphere embedding of that component;
    single-edge blocks and isolated vertices contribute via rotation merging,
    so only blocks with >= 3 vertices run DMP.
    """
    per_component: list[list[list[int]]] = []
    for comp_mask in _components(g):
        comp_vertices = sorted(v for v in range(g.p) if (comp_mask >> v) & 1)
        rotations = _component_rotation(g, comp_vertices)
        if rotations is None:
            return None
        faces = _trace_faces_from_rotation(rotations)
        p_c = len(comp_vertices)
        e_c = sum(len(rotations[v]) for v in comp_vertices) // 2
        if e_c == 0:
            faces = [[comp_vertices[0]]]
        assert len(faces) == 2 - p_c + e_c or e_c == 0, "rotation merge lost planarity"
        per_component.append(faces)
    return per_component


def _component_rotation(g: Graph, comp_vertices: list[int]) -> dict[int, list[int]] | None:
    """Planar rotation of one connected component (None when nonplanar)."""
    rotations: dict[int, list[int]] = {v: [] for v in comp_vertices}
    if len(comp_vertices) == 1:
        return rotations
    for block in _blocks(g, comp_vertices):
        if len(block) == 1:
            (u, v) = block[0]
            rotations[u].append(v)
            rotations[v].append(u)
            continue
        faces = _embed_block(block)
        if faces is None:
            return None
        succ: dict[tuple[int, int], int] = {}
        for face in faces:
            n = len(face)
            for t in range(n):
                u, v, w = face[t], face[(t + 1) % n], face[(t + 2) % n]
                succ[(u, v)] = w
        block_adj: dict[int, set[int]] = {}
        for u, v in block:
            block_adj.setdefault(u, set()).add(v)
            block_adj.setdefault(v, set()).add(u)
        for v, nbrs in block_adj.items():
            start = min(nbrs)
            order = [start]
            while True:
                nxt = succ[(order[-1], v)]
                if nxt == start:
                    break
                order.append(nxt)
            assert len(order) == len(nbrs), "face successor map is not a rotation"
            rotations[v].extend(order)
    return rotations


def _trace_faces_from_rotation(rotations: dict[int, list[int]]) -> list[list[int]]:
    """Closed face walks under the next-after-arrival convention."""
    pos = {
        (u, v): i
        for v, order in rotations.items()
        for i, u in enumerate(order)
    }
    unused = set(pos)
    faces = []
    while unused:
        u, v = min(unused)
        walk = []
        edge = (u, v)
        while edge in unused:
            unused.remove(edge)
            a, b = edge
            walk.append(a)
            order = rotations[b]
            nxt = order[(pos[(a, b)] + 1) % len(order)]
            edge = (b, nxt)
        faces.append(walk)
    return faces


# ---------------------------------------------------------------------------
# Public planarity API
# ---------------------------------------------------------------------------

def is_planar(g: Graph) -> bool:
    return _planar_faces(g) is not None


def embedding_faces(emb: Embedding) -> list[list[int]]:
    """Face walks of an embedding under the tracing convention.

    For a disconnected graph each component contributes its own sphere's
    faces (so the merged-outer-face convention of ``face_count`` counts one
    less per extra component than this list has).
    """
    rotations = {v: list(order) for v, order in enumerate(emb.rotation)}
    return _trace_faces_from_rotation(rotations)


def planarity_check(g: Graph):
    """Embedding when planar, else a KuratowskiWitness; always verifiable."""
    per_component = _planar_faces(g)
    if per_component is None:
        return _extract_kuratowski(g)
    rotation: list[tuple[int, ...]] = [() for _ in range(g.p)]
    total_faces = 0
    n_components = 0
    for comp_mask in _components(g):
        comp_vertices = sorted(v for v in range(g.p) if (comp_mask >> v) & 1)
        rotations = _component_rotation(g, comp_vertices)
        assert rotations is not None
        for v in comp_vertices:
            rotation[v] = tuple(rotations[v])
        faces = _trace_faces_from_rotation(rotations)
        total_faces += len(faces) if faces else 1
        n_components += 1
    face_count = total_faces - (n_components - 1)
    return Embedding(rotation=tuple(rotation), face_count=face_count)


def verify_embedding(g: Graph, emb: Embedding) -> bool:
    """Certificate checker: rotations permute each neighborhood and Euler holds.

    A rotation system whose face count meets Euler's relation on every
    connected component is a genus-0 (planar) embedding, so passing this
    check proves planarity independently of how the embedding was found.
    """
    if len(emb.rotation) != g.p:
        return False
    for v in range(g.p):
        if tuple(sorted(emb.rotation[v])) != g.neighbors(v):
            return False
        if len(set(emb.rotation[v])) != len(emb.rotation[v]):
            return False
    total_faces = 0
    n_components = 0
    for comp_mask in _components(g):
        comp_vertices = sorted(v for v in range(g.p) if (comp_mask >> v) & 1)
        rotations = {v: list(emb.rotation[v]) for v in comp_vertices}
        faces = _trace_faces_from_rotation(rotations)
        p_c = len(comp_vertices)
        e_c = sum(len(emb.rotation[v]) for v in comp_vertices) // 2
        f_c = len(faces) if e_c else 1
        if f_c != 2 - p_c + e_c and e_c:
            return False
        total_faces += f_c
        n_components += 1
    return emb.face_count == total_faces - (n_components - 1)


def _extract_kuratowski(g: Graph) -> KuratowskiWitness:
    edges = g.edges()
    current = set(edges)

    def planar_subset(edge_set: set[tuple[int, int]]) -> bool:
        return _planar_faces(Graph.from_edges(g.p, edge_set)) is not None

    for e in edges:
        trial = current - {e}
        if not planar_subset(trial):
            current = trial

    # edge-minimal nonplanar graph = a Kuratowski subdivision (plus isolated
    # vertices, which the adjacency map simply omits)
    adj: dict[int, list[int]] = {}
    for u, v in sorted(current):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nbrs in adj.items() if len(nbrs) >= 3)
    paths: dict[tuple[int, ...], tuple[int, ...]] = {}
    for b in branch:
        for first in sorted(adj[b]):
            path = [b, first]
            while len(adj[path[-1]]) == 2:
                x, y = adj[path[-1]]
                path.append(y if x == path[-2] else x)
            if path[-1] < path[0]:
                path.reverse()
            paths[tuple(path)] = tuple(path)
    path_list = sorted(paths.values())

    degrees = {b: len(adj[b]) for b in branch}
    if len(branch) == 5 and all(degrees[b] == 4 for b in branch):
        return KuratowskiWitness(kind=K5, branch_vertices=tuple(branch), paths=tuple(path_list))
    if len(branch) == 6 and all(degrees[b] == 3 for b in branch):
        partners: dict[int, set[int]] = {b: set() for b in branch}
        for path in path_list:
            partners[path[0]].add(path[-1])
            partners[path[-1]].add(path[0])
        side = {branch[0]: 0}
        queue = [branch[0]]
        while queue:
            x = queue.pop()
            for y in partners[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
        left = sorted(b for b in branch if side[b] == 0)
        right = sorted(b for b in branch if side[b] == 1)
        return KuratowskiWitness(
            kind=K33, branch_vertices=tuple(left + right), paths=tuple(path_list)
        )
    raise AssertionError("edge-minimal nonplanar graph is not a Kuratowski subdivision")


def verify_kuratowski(g: Graph, w: KuratowskiWitness) -> bool:
    """Check the declared subdivision really sits inside g."""
    branch = w.branch_vertices
    if len(set(branch)) != len(branch):
        return False
    if any(not 0 <= b < g.p for b in branch):
        return False
    branch_set = set(branch)
    interiors: set[int] = set()
    endpoint_pairs: list[frozenset[int]] = []
    for path in w.paths:
        if len(path) < 2 or len(set(path)) != len(path):
            return False
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return False
        if path[0] not in branch_set or path[-1] not in branch_set:
            return False
        inner = set(path[1:-1])
        if inner & branch_set or inner & interiors:
            return False
        interiors |= inner
        endpoint_pairs.append(frozenset((path[0], path[-1])))
    if len(set(endpoint_pairs)) != len(endpoint_pairs):
        return False
    if w.kind == K5:
        if len(branch) != 5 or len(w.paths) != 10:
            return False
        wanted = {frozenset(c) for c in combinations(branch, 2)}
        return set(endpoint_pairs) == wanted
    if w.kind == K33:
        if len(branch) != 6 or len(w.paths) != 9:
            return False
        left, right = branch[:3], branch[3:]
        wanted = {frozenset((a, b)) for a in left for b in right}
        return set(endpoint_pairs) == wanted
    return False


# ---------------------------------------------------------------------------
# Polyhedrality
# ---------------------------------------------------------------------------

def is_polyhedral(g: Graph) -> bool:
    """Planar and 3-connected: the graph of a convex 3-polytope."""
    if g.p < 4:
        return False
    if any(g.degree(v) < 3 for v in range(g.p)):
        return False
    if g.edge_count > 3 * g.p - 6:
        return False
    if connectivity_at_least(g, 3) is not True:
        return False
    return _planar_faces(g) is not None
