"""A minimal ordinary-graph-complex engine (the GC^2 flavor).

Generators are connected loopless multigraphs; the orientation regime is
an edge order, so a graph with a pair of parallel edges is zero (swapping
them is a sign-reversing automorphism), and otherwise a class is zero iff
some vertex automorphism induces an odd permutation of the edge set.

The differential splits a vertex: incident edges are distributed over two
new vertices joined by a fresh edge, which is appended last in the edge
order.  Degree of a generator: |G| = 2d(V-1) + (1-2d)E.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .canonical import perm_sign
from .diff import FormalSum
from .linalg import SparseIntMatrix, assemble, certified_rank


GC_LOOP_ORDER_GUARD = 4


@dataclass(frozen=True)
class GCGraph:
    """Loopless multigraph on vertices 0..n_vertices-1; edges is a sorted
    tuple of sorted vertex pairs (parallel edges repeat)."""

    n_vertices: int
    edges: tuple

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise ValueError("loop edges are not allowed")
            if not (0 <= a < b < self.n_vertices):
                raise ValueError("edge endpoints out of range or unsorted")
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def loop_order(self) -> int:
        return self.n_edges - self.n_vertices + 1

    def valences(self) -> list[int]:
        val = [0] * self.n_vertices
        for a, b in self.edges:
            val[a] += 1
            val[b] += 1
        return val

    def has_parallel_edges(self) -> bool:
        return len(set(self.edges)) != len(self.edges)

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return False
        adj = [[] for _ in range(self.n_vertices)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def degree(self, d: int) -> int:
        return 2 * d * (self.n_vertices - 1) + (1 - 2 * d) * self.n_edges


def _relabeled_edges(g: GCGraph, perm) -> tuple:
    return tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in g.edges))


def _degree_compatible_perms(g: GCGraph):
    """Vertex permutations preserving the valence sequence (the search
    space for canonicalization and automorphisms)."""
    val = g.valences()
    groups: dict[int, list[int]] = {}
    for v, d in enumerate(val):
        groups.setdefault(d, []).append(v)
    keys = sorted(groups)
    pools = [groups[k] for k in keys]
    for parts in _product_perms(pools):
        perm = [0] * g.n_vertices
        for pool, images in zip(pools, parts):
            for src, dst in zip(pool, images):
                perm[src] = dst
        yield tuple(perm)


def _product_perms(pools):
    if not pools:
        yield ()
        return
    head, rest = pools[0], pools[1:]
    for p in permutations(head):
        for tail in _product_perms(rest):
            yield (p,) + tail


def gc_canonical(g: GCGraph) -> tuple[GCGraph, tuple]:
    """Canonical representative (lexicographically minimal relabeled edge
    tuple over valence-preserving vertex permutations) plus one optimal
    permutation old->new."""
    best = None
    best_perm = None
    for perm in _degree_compatible_perms(g):
        cand = _relabeled_edges(g, perm)
        if best is None or cand < best:
            best = cand
            best_perm = perm
    return GCGraph(g.n_vertices, best), best_perm


def gc_automorphisms(g: GCGraph) -> list[tuple]:
    edges = g.edges
    return [
        perm
        for perm in _degree_compatible_perms(g)
        if _relabeled_edges(g, perm) == edges
    ]


def _edge_perm_sign(g: GCGraph, perm) -> int:
    """Sign of the edge permutation induced by a vertex automorphism;
    requires distinct edges (no parallels)."""
    pos = {e: i for i, e in enumerate(g.edges)}
    images = [pos[tuple(sorted((perm[a], perm[b])))] for a, b in g.edges]
    return perm_sign(images)


@dataclass(frozen=True)
class GCClass:
    """Canonical multigraph class in the edge-order orientation regime."""

    n_vertices: int
    edges: tuple
    zero_flag: bool

    @property
    def graph(self) -> GCGraph:
        return GCGraph(self.n_vertices, self.edges)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def content_hash(self) -> str:
        import hashlib

        payload = "gc2|%d|%s|%d" % (self.n_vertices, self.edges, self.zero_flag)
        return hashlib.sha1(payload.encode()).hexdigest()

    def to_json(self) -> dict:
        return {
            "flavor": "gc2",
            "vertices": self.n_vertices,
            "edges": [list(e) for e in self.edges],
            "zero": self.zero_flag,
            "hash": self.content_hash(),
        }


def _zero_flag_gc(canon: GCGraph) -> bool:
    if canon.has_parallel_edges():
        return True
    return any(_edge_perm_sign(canon, a) < 0 for a in gc_automorphisms(canon))


def to_gc_class(g: GCGraph, edge_order=None) -> tuple[GCClass, int]:
    """Canonicalize; compare the given edge order (default: the graph's
    sorted edge tuple) against the canonical reference order.  The sign is
    +1 and meaningless for zero classes."""
    if edge_order is None:
        edge_order = g.edges
    canon, perm = gc_canonical(g)
    flag = _zero_flag_gc(canon)
    cls = GCClass(canon.n_vertices, canon.edges, flag)
    if flag:
        return cls, 1
    transported = [tuple(sorted((perm[a], perm[b]))) for a, b in edge_order]
    pos = {e: i for i, e in enumerate(canon.edges)}
    sign = perm_sign([pos[e] for e in transported])
    return cls, sign


def _edge_multisets(n_vertices: int, n_edges: int):
    pairs = [(a, b) for a in range(n_vertices) for b in range(a + 1, n_vertices)]
    out = []

    def rec(i, remaining, acc):
        if i == len(pairs):
            if remaining == 0:
                out.append(tuple(acc))
            return
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(remaining + 1):
            rec(i + 1, remaining - k, acc + [pairs[i]] * k)

    rec(0, n_edges, [])
    return out


def gc_enumerate(loop_order: int, n_edges: int, min_valence: int = 3):
    """Nonzero classes plus zero-class count at the given loop order and
    edge count: connected loopless multigraphs, valences >= min_valence,
    one representative per isomorphism class."""
    if loop_order > GC_LOOP_ORDER_GUARD:
        raise ValueError(
            "loop order guard is %d, got %d" % (GC_LOOP_ORDER_GUARD, loop_order)
        )
    n_vertices = n_edges - loop_order + 1
    if n_vertices < 1 or min_valence * n_vertices > 2 * n_edges:
        return [], 0
    seen: dict = {}
    for edges in _edge_multisets(n_vertices, n_edges):
        g = GCGraph(n_vertices, edges)
        if min(g.valences(), default=0) < min_valence:
            continue
        if not g.is_connected():
            continue
        canon, _ = gc_canonical(g)
        seen[canon.edges] = canon
    nonzero = []
    zero = 0
    for canon in seen.values():
        flag = _zero_flag_gc(canon)
        if flag:
            zero += 1
        else:
            nonzero.append(GCClass(canon.n_vertices, canon.edges, flag))
    nonzero.sort(key=lambda c: c.content_hash())
    return nonzero, zero


def gc_delta(x: GCClass, min_valence: int = 3) -> FormalSum:
    """Vertex splitting: distribute the incident edges of a vertex over
    two new vertices joined by a fresh edge (both parts nonempty), with
    the fresh edge appended last in the edge order.  Projected to the
    min_valence sector (terms with a smaller valence are dropped)."""
    out = FormalSum()
    g = x.graph
    for v in range(g.n_vertices):
        incident = [i for i, e in enumerate(g.edges) if v in e]
        m = len(incident)
        if m < 2:
            continue
        anchor = incident[0]
        rest = incident[1:]
        for mask in range(1 << len(rest)):
            part_a = {anchor} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
            if len(part_a) == m:
                continue
            # vertex v becomes v (part A) and a fresh vertex nv (part B)
            nv = g.n_vertices
            new_edges = []
            for i, (a, b) in enumerate(g.edges):
                if v in (a, b) and i not in part_a:
                    a, b = (nv if a == v else a), (nv if b == v else b)
                new_edges.append(tuple(sorted((a, b))))
            new_edges.append((v, nv))
            ng = GCGraph(nv + 1, tuple(new_edges))
            if min(ng.valences()) < min_valence:
                continue
            cls, sign = to_gc_class(ng, edge_order=tuple(new_edges))
            out.add_term(cls, sign)
    return out


def gc_cohomology(loop_order: int, d: int, e_range: tuple, min_valence: int = 3):
    """Per-degree cohomology of the fixed-loop-order slice; the grading is
    |G| = 2d(V-1)+(1-2d)E, and edges within e_range index the cells.

    Returns a list of row dicts (degree, edges, dim, rank_in, rank_out, h,
    status, certified) ordered by edge count."""
    e_min, e_max = e_range
    bases = {}
    for e in range(e_min, e_max + 1):
        bases[e], _ = gc_enumerate(loop_order, e, min_valence)
    mats = {}
    for e in range(e_min, e_max):
        op = lambda c: gc_delta(c, min_valence)
        mats[e] = assemble(bases[e], bases[e + 1], op)
    for e in range(e_min, e_max - 1):
        if not mats[e + 1].matmul(mats[e]).is_zero():
            raise ValueError("gc delta squared is nonzero at E=%d" % e)
    rows = []
    for e in range(e_min, e_max + 1):
        dim = len(bases[e])
        d_in = mats.get(e - 1)
        d_out = mats.get(e)
        rank_in = rank_out = 0
        cert_ok = True
        if d_in is not None:
            rank_in, ok = certified_rank(d_in)
            cert_ok = cert_ok and ok
        if d_out is not None:
            rank_out, ok = certified_rank(d_out)
            cert_ok = cert_ok and ok
        truncated = e in (e_min, e_max) and dim > 0
        status = "truncated" if truncated else ("certified" if cert_ok else "provisional")
        sample_deg = 2 * d * (e - loop_order) + (1 - 2 * d) * e
        rows.append(
            {
                "degree": sample_deg,
                "edges": e,
                "dim": dim,
                "rank_in": rank_in,
                "rank_out": rank_out,
                "h": dim - rank_in - rank_out,
                "status": status,
            }
        )
    return rows
