"""Canonical labeling, automorphisms and orientation signs for ribbon graphs.

Canonical form: for every root half-edge we relabel by a deterministic
traversal (scan discovered half-edges in label order, discovering first the
sigma0-image then the sigma1-partner) and keep the lexicographically
smallest relabeled pair of permutation arrays.  The traversal is rigid, so
the roots realising the minimum give exactly the automorphism group.

Orientation data depends on the parity of the degree-shift integer d:
an edge order for d even; a vertex order, boundary order, and a direction
per edge for d odd.  A class is zero when some automorphism acts on its
orientation with sign -1.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .ribbon import (
    RibbonGraph,
    DisconnectedGraph,
    boundaries,
    check_valid,
    edges,
    vertices,
)

EVEN, ODD = 0, 1


def _bfs_relabel(s0: tuple, s1: tuple, root: int):
    """Label half-edges in discovery order from root; return (key, labels)."""
    n = len(s0)
    lab = [-1] * n
    lab[root] = 0
    order = [root]
    cnt = 1
    i = 0
    while i < cnt:
        h = order[i]
        x = s0[h]
        if lab[x] < 0:
            lab[x] = cnt
            cnt += 1
            order.append(x)
        x = s1[h]
        if lab[x] < 0:
            lab[x] = cnt
            cnt += 1
            order.append(x)
        i += 1
    if cnt < n:
        return None, None
    t0 = [0] * n
    t1 = [0] * n
    for h in range(n):
        t0[lab[h]] = lab[s0[h]]
        t1[lab[h]] = lab[s1[h]]
    return (tuple(t0), tuple(t1)), lab


def _root_compare(s0: tuple, s1: tuple, root: int) -> int:
    """Compare the traversal key from ``root`` against (s0, s1) itself.

    Assumes (s0, s1) is already the key of root 0 (traversal normal form).
    Returns -1 / 0 / +1 as the root's key is smaller / equal / larger,
    aborting as early as the comparison is decided.
    """
    n = len(s0)
    lab = [-1] * n
    lab[root] = 0
    order = [root]
    cnt = 1
    t1cmp = 0
    i = 0
    while i < n:
        h = order[i]
        x = s0[h]
        v = lab[x]
        if v < 0:
            v = cnt
            lab[x] = cnt
            cnt += 1
            order.append(x)
        if v != s0[i]:
            return -1 if v < s0[i] else 1
        x = s1[h]
        v = lab[x]
        if v < 0:
            v = cnt
            lab[x] = cnt
            cnt += 1
            order.append(x)
        if t1cmp == 0 and v != s1[i]:
            t1cmp = -1 if v < s1[i] else 1
        i += 1
    return t1cmp


def is_minimal_form(s0: tuple, s1: tuple) -> bool:
    """True iff (s0, s1), assumed in traversal normal form from root 0,
    is its own canonical form.  Streaming filter for the enumerator; no
    caching, early abort per root."""
    return all(_root_compare(s0, s1, r) >= 0 for r in range(1, len(s0)))


_CANON_CACHE_CAP = 300000
_canon_cache: dict = {}


def _canonical_data(s0: tuple, s1: tuple):
    """(canonical (t0,t1), list of relabelings old->canonical achieving it)."""
    key = (s0, s1)
    hit = _canon_cache.get(key)
    if hit is not None:
        return hit
    n = len(s0)
    best = None
    maps = []
    for root in range(n):
        cand, lab = _bfs_relabel(s0, s1, root)
        if cand is None:
            raise DisconnectedGraph("canonical form requires a connected graph")
        if best is None or cand < best:
            best = cand
            maps = [lab]
        elif cand == best:
            maps.append(lab)
    result = (best, maps)
    if len(_canon_cache) >= _CANON_CACHE_CAP:
        _canon_cache.clear()
    _canon_cache[key] = result
    return result


def canonical_form(g: RibbonGraph) -> tuple[RibbonGraph, list[int]]:
    """Canonical representative plus one relabeling map old->new."""
    check_valid(g)
    (t0, t1), maps = _canonical_data(g.sigma0, g.sigma1)
    return RibbonGraph(t0, t1), maps[0]


def automorphisms(g: RibbonGraph) -> list[tuple]:
    """All permutations of half-edges commuting with sigma0 and sigma1."""
    check_valid(g)
    _, maps = _canonical_data(g.sigma0, g.sigma1)
    n = g.n_half_edges
    base = maps[0]
    auts = []
    for lab in maps:
        inv = [0] * n
        for h in range(n):
            inv[lab[h]] = h
        auts.append(tuple(inv[base[h]] for h in range(n)))
    return auts


def is_automorphism(g: RibbonGraph, a: tuple) -> bool:
    n = g.n_half_edges
    if sorted(a) != list(range(n)):
        return False
    return all(
        a[g.sigma0[h]] == g.sigma0[a[h]] and a[g.sigma1[h]] == g.sigma1[a[h]]
        for h in range(n)
    )


def perm_sign(perm: list[int]) -> int:
    """Sign of a permutation given as an image list."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class Orientation:
    """Orientation payload; exactly one regime populated per parity.

    even: edge_order is a tuple of unordered half-edge pairs, list position
    carries the ordering.  odd: vertex_order and boundary_order are tuples
    of frozensets of half-edges; edge_dirs holds one directed pair per edge.
    """

    parity: int
    edge_order: tuple | None = None
    vertex_order: tuple | None = None
    boundary_order: tuple | None = None
    edge_dirs: tuple | None = None

    def __post_init__(self):
        if self.parity == EVEN:
            assert self.edge_order is not None
            assert self.vertex_order is None and self.edge_dirs is None
        else:
            assert self.edge_order is None
            assert self.vertex_order is not None
            assert self.boundary_order is not None
            assert self.edge_dirs is not None

    def opposite(self) -> "Orientation":
        """Reverse one generator: swap the first two edges (even) or flip
        the first edge direction (odd)."""
        if self.parity == EVEN:
            eo = list(self.edge_order)
            if len(eo) < 2:
                raise ValueError("no transposition available on a single edge")
            eo[0], eo[1] = eo[1], eo[0]
            return Orientation(EVEN, edge_order=tuple(eo))
        dirs = list(self.edge_dirs)
        a, b = dirs[0]
        dirs[0] = (b, a)
        return Orientation(
            ODD,
            vertex_order=self.vertex_order,
            boundary_order=self.boundary_order,
            edge_dirs=tuple(dirs),
        )


def reference_orientation(g: RibbonGraph, parity: int) -> Orientation:
    """Deterministic reference: everything ordered by minimal half-edge
    label, edges directed from smaller to larger label."""
    if parity == EVEN:
        return Orientation(EVEN, edge_order=tuple(tuple(e) for e in edges(g)))
    return Orientation(
        ODD,
        vertex_order=tuple(frozenset(v) for v in vertices(g)),
        boundary_order=tuple(frozenset(b) for b in boundaries(g)),
        edge_dirs=tuple(tuple(e) for e in edges(g)),
    )


def _list_perm_sign(transported: list, reference: list) -> int:
    pos = {item: i for i, item in enumerate(reference)}
    if len(pos) != len(reference) or len(transported) != len(reference):
        raise ValueError("orientation payload does not match the graph")
    perm = [pos[item] for item in transported]
    return perm_sign(perm)


def _transport(or_: Orientation, lab: list[int]) -> Orientation:
    """Push an orientation through a half-edge relabeling."""
    if or_.parity == EVEN:
        return Orientation(
            EVEN,
            edge_order=tuple(tuple(sorted((lab[a], lab[b]))) for a, b in or_.edge_order),
        )
    return Orientation(
        ODD,
        vertex_order=tuple(frozenset(lab[h] for h in v) for v in or_.vertex_order),
        boundary_order=tuple(frozenset(lab[h] for h in b) for b in or_.boundary_order),
        edge_dirs=tuple((lab[a], lab[b]) for a, b in or_.edge_dirs),
    )


def _compare_sign(or_: Orientation, ref: Orientation) -> int:
    """Sign of or_ relative to ref on the same labeled graph."""
    if or_.parity == EVEN:
        tr = [tuple(sorted(e)) for e in or_.edge_order]
        return _list_perm_sign(tr, [tuple(e) for e in ref.edge_order])
    sv = _list_perm_sign(list(or_.vertex_order), list(ref.vertex_order))
    sb = _list_perm_sign(list(or_.boundary_order), list(ref.boundary_order))
    ref_dirs = {tuple(sorted(d)): d for d in ref.edge_dirs}
    flips = 0
    for a, b in or_.edge_dirs:
        want = ref_dirs[tuple(sorted((a, b)))]
        if (a, b) != want:
            flips += 1
    return sv * sb * (-1) ** (flips % 2)


def orientation_sign(g: RibbonGraph, a: tuple, or_: Orientation) -> int:
    """Sign of the action of automorphism a on the orientation."""
    if not is_automorphism(g, a):
        raise ValueError("not an automorphism of the graph")
    return _compare_sign(_transport(or_, list(a)), or_)


@dataclass(frozen=True)
class OrientedClass:
    """Canonical isomorphism-class representative with its reference
    orientation implied; zero_flag marks sign-reversing symmetry."""

    sigma0: tuple
    sigma1: tuple
    parity: int
    zero_flag: bool

    @property
    def graph(self) -> RibbonGraph:
        return RibbonGraph(self.sigma0, self.sigma1)

    @property
    def n_edges(self) -> int:
        return len(self.sigma0) // 2

    def reference(self) -> Orientation:
        return reference_orientation(self.graph, self.parity)

    def content_hash(self) -> str:
        payload = "%s|%s|%d|%d" % (self.sigma0, self.sigma1, self.parity, self.zero_flag)
        return hashlib.sha1(payload.encode()).hexdigest()

    def to_json(self) -> dict:
        return {
            "h": len(self.sigma0),
            "sigma0": list(self.sigma0),
            "sigma1": list(self.sigma1),
            "parity": self.parity,
            "zero": self.zero_flag,
            "hash": self.content_hash(),
        }


_zero_cache: dict = {}


def _zero_flag(canon: RibbonGraph, parity: int) -> bool:
    key = (canon.sigma0, canon.sigma1, parity)
    hit = _zero_cache.get(key)
    if hit is not None:
        return hit
    ref = reference_orientation(canon, parity)
    flag = any(
        _compare_sign(_transport(ref, list(a)), ref) < 0 for a in automorphisms(canon)
    )
    if len(_zero_cache) >= _CANON_CACHE_CAP:
        _zero_cache.clear()
    _zero_cache[key] = flag
    return flag


def to_oriented_class(g: RibbonGraph, or_: Orientation) -> tuple[OrientedClass, int]:
    """Canonicalize, transport the orientation, reduce to the reference one.

    Returns the class and the comparison sign; the sign is meaningless (and
    returned as +1) when the class is zero.
    """
    canon, lab = canonical_form(g)
    flag = _zero_flag(canon, or_.parity)
    cls = OrientedClass(canon.sigma0, canon.sigma1, or_.parity, flag)
    if flag:
        return cls, 1
    sign = _compare_sign(_transport(or_, lab), reference_orientation(canon, or_.parity))
    return cls, sign


def class_of(g: RibbonGraph, parity: int) -> OrientedClass:
    """Class of g equipped with its own reference orientation."""
    cls, _ = to_oriented_class(g, reference_orientation(g, parity))
    return cls


def clear_caches() -> None:
    _canon_cache.clear()
    _zero_cache.clear()
