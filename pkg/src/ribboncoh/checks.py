"""Self-verification suites: differential identities, structural term
invariants, enumeration oracle agreement, and rank oracle agreement.

Every suite returns a JSON-able report naming the first violating
generator, so a failure is actionable and a fault injected by the test
harness is pinpointed.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
import random

from .canonical import EVEN, ODD, class_of
from .diff import apply_linear, bridge, bridge_terms, delta, delta_terms
from .enumeration import (
    EnumSpec,
    enumerate_bruteforce,
    enumerate_classes,
    le2_classes,
)
from .linalg import SparseIntMatrix, assemble, rank, rank_modp, CERTIFICATION_PRIMES
from .ribbon import boundaries, genus, is_connected, validate, vertices


def parallel_map(fn, items, jobs: int = 1):
    """Order-preserving map; jobs > 1 uses a thread pool but the merge is
    by input order either way, so results are scheduling-independent."""
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class CheckBounds:
    """Scope of the verification sweep.  Separate edge bounds per valence
    sector keep the runtime at desk scale: the class counts grow roughly
    an order of magnitude per extra edge."""

    g_max: int = 2
    e_max_full: int = 4
    e_max_ge3: int = 5
    e_max_le2: int = 8
    e_max_oracle: int = 4
    parities: tuple = (EVEN, ODD)

    def to_json(self) -> dict:
        return asdict(self)


def iter_specs(bounds: CheckBounds):
    """All (EnumSpec, sector) pairs inside the bounds."""
    for parity in bounds.parities:
        for e in range(1, bounds.e_max_full + 1):
            for g in range(0, min(bounds.g_max, e // 2) + 1):
                for n in range(1, e + 2 - 2 * g):
                    yield EnumSpec(g, n, e, 1, parity), "full"
        for e in range(1, bounds.e_max_ge3 + 1):
            for g in range(0, min(bounds.g_max, e // 2) + 1):
                for n in range(1, e + 2 - 2 * g):
                    yield EnumSpec(g, n, e, 3, parity), "ge3"
        for e in range(bounds.e_max_full + 1, bounds.e_max_le2 + 1):
            for n in (1, 2):
                yield EnumSpec(0, n, e, 1, parity), "le2"


def iter_generators(bounds: CheckBounds):
    for spec, sector in iter_specs(bounds):
        if sector == "le2":
            nonzero, _ = le2_classes(spec)
        else:
            nonzero, _ = enumerate_classes(spec)
        for cls in nonzero:
            yield spec, cls


def _violation(suite: str, spec: EnumSpec, cls, detail: str) -> dict:
    return {
        "suite": suite,
        "spec": {
            "genus": spec.genus,
            "boundaries": spec.boundaries,
            "edges": spec.edges,
            "min_valence": spec.min_valence,
            "parity": spec.parity,
        },
        "generator": cls.content_hash(),
        "detail": detail,
    }


def identity_suite(
    bounds: CheckBounds, jobs: int = 1, delta_op=None, bridge_op=None
) -> dict:
    """delta^2 = 0, the corner operator squared = 0, and the
    anticommutator = 0 on every nonzero generator in scope.  The operator
    arguments exist so the harness can inject a fault."""
    d_op = delta_op or delta
    b_op = bridge_op or bridge
    gens = list(iter_generators(bounds))

    def check(item):
        spec, cls = item
        out = []
        dx = d_op(cls)
        bx = b_op(cls)
        if not apply_linear(d_op, dx).is_zero():
            out.append(_violation("delta_squared", spec, cls, "delta(delta(x)) != 0"))
        if not apply_linear(b_op, bx).is_zero():
            out.append(_violation("bridge_squared", spec, cls, "corner op squared != 0"))
        anti = apply_linear(d_op, bx) + apply_linear(b_op, dx)
        if not anti.is_zero():
            out.append(_violation("anticommutator", spec, cls, "delta and corner op do not anticommute"))
        return out

    violations = [v for vs in parallel_map(check, gens, jobs) for v in vs]
    return {
        "suite": "identities",
        "bounds": bounds.to_json(),
        "generators": len(gens),
        "violations": violations,
        "passed": not violations,
    }


def structural_suite(bounds: CheckBounds, jobs: int = 1) -> dict:
    """Raw-term invariants: vertex splitting adds one edge and one vertex
    keeping boundaries and genus; corner connecting adds one edge and one
    boundary keeping vertices and genus; every term is a valid connected
    graph."""
    gens = list(iter_generators(bounds))

    def check(item):
        spec, cls = item
        g = cls.graph
        e0, v0, b0, g0 = (
            g.n_edges,
            len(vertices(g)),
            len(boundaries(g)),
            genus(g),
        )
        out = []
        for out_g, _ in delta_terms(cls):
            if validate(out_g) is not None or not is_connected(out_g):
                out.append(_violation("delta_terms", spec, cls, "invalid term graph"))
                continue
            shape = (
                out_g.n_edges,
                len(vertices(out_g)),
                len(boundaries(out_g)),
                genus(out_g),
            )
            if shape != (e0 + 1, v0 + 1, b0, g0):
                out.append(
                    _violation(
                        "delta_terms", spec, cls,
                        "expected (E+1,V+1,B,g)=%s got %s" % ((e0 + 1, v0 + 1, b0, g0), shape),
                    )
                )
        for out_g, _ in bridge_terms(cls):
            if validate(out_g) is not None or not is_connected(out_g):
                out.append(_violation("bridge_terms", spec, cls, "invalid term graph"))
                continue
            shape = (
                out_g.n_edges,
                len(vertices(out_g)),
                len(boundaries(out_g)),
                genus(out_g),
            )
            if shape != (e0 + 1, v0, b0 + 1, g0):
                out.append(
                    _violation(
                        "bridge_terms", spec, cls,
                        "expected (E+1,V,B+1,g)=%s got %s" % ((e0 + 1, v0, b0 + 1, g0), shape),
                    )
                )
        return out

    violations = [v for vs in parallel_map(check, gens, jobs) for v in vs]
    return {
        "suite": "structural",
        "bounds": bounds.to_json(),
        "generators": len(gens),
        "violations": violations,
        "passed": not violations,
    }


def oracle_suite(bounds: CheckBounds, jobs: int = 1) -> dict:
    """Fast enumerator versus brute-force permutation scan, every spec
    with E <= e_max_oracle, all valence floors."""
    specs = []
    for e in range(1, bounds.e_max_oracle + 1):
        for g in range(0, e // 2 + 1):
            for n in range(1, e + 2 - 2 * g):
                for mv in (1, 2, 3):
                    specs.append(EnumSpec(g, n, e, mv, EVEN))

    def check(spec):
        fast_nz, fast_zero = enumerate_classes(spec)
        slow_nz, slow_zero = enumerate_bruteforce(spec)
        if [c.content_hash() for c in fast_nz] != [c.content_hash() for c in slow_nz]:
            return [
                {
                    "suite": "enumeration_oracle",
                    "spec": spec.__dict__ if hasattr(spec, "__dict__") else str(spec),
                    "detail": "class sets differ: %d fast vs %d brute"
                    % (len(fast_nz), len(slow_nz)),
                }
            ]
        if fast_zero != slow_zero:
            return [
                {
                    "suite": "enumeration_oracle",
                    "spec": str(spec),
                    "detail": "zero-class counts differ: %d vs %d" % (fast_zero, slow_zero),
                }
            ]
        return []

    violations = [v for vs in parallel_map(check, specs, jobs) for v in vs]
    return {
        "suite": "enumeration_oracle",
        "bounds": bounds.to_json(),
        "specs": len(specs),
        "violations": violations,
        "passed": not violations,
    }


def _dense_fraction_rank(m: SparseIntMatrix) -> int:
    """Independent textbook elimination over Fraction."""
    a = [[Fraction(0)] * m.cols for _ in range(m.rows)]
    for r, c, v in m.entries:
        a[r][c] = Fraction(v)
    rnk = 0
    pr = 0
    for c in range(m.cols):
        piv = next((r for r in range(pr, m.rows) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[pr], a[piv] = a[piv], a[pr]
        pv = a[pr][c]
        for r in range(m.rows):
            if r != pr and a[r][c] != 0:
                f = a[r][c] / pv
                for cc in range(c, m.cols):
                    a[r][cc] -= f * a[pr][cc]
        pr += 1
        rnk += 1
    return rnk


def rank_suite(jobs: int = 1, trials: int = 40, seed: int = 20240901) -> dict:
    """Sparse fraction-free rank versus dense rational elimination and
    two-prime modular ranks on seeded random matrices, plus one assembled
    differential matrix."""
    rng = random.Random(seed)
    mats = []
    for _ in range(trials):
        rows = rng.randint(0, 14)
        cols = rng.randint(0, 14)
        ent = {}
        for _ in range(rng.randint(0, max(rows * cols // 2, 0))):
            ent[(rng.randrange(rows), rng.randrange(cols))] = rng.randint(-20, 20)
        mats.append(SparseIntMatrix(rows, cols, tuple((r, c, v) for (r, c), v in ent.items())))
    dom, _ = enumerate_classes(EnumSpec(1, 1, 3, 3, EVEN))
    codom, _ = enumerate_classes(EnumSpec(1, 1, 4, 3, EVEN))
    mats.append(assemble(dom, codom, delta))

    def check(m):
        r = rank(m)
        out = []
        if r != _dense_fraction_rank(m):
            out.append({"suite": "rank_oracle", "detail": "dense oracle disagrees"})
        if r != rank(m.transpose()):
            out.append({"suite": "rank_oracle", "detail": "transpose rank differs"})
        for p in CERTIFICATION_PRIMES:
            if rank_modp(m, p) != r:
                out.append({"suite": "rank_oracle", "detail": "mod-%d rank differs" % p})
        return out

    violations = [v for vs in parallel_map(check, mats, jobs) for v in vs]
    return {
        "suite": "rank_oracle",
        "matrices": len(mats),
        "violations": violations,
        "passed": not violations,
    }


def run_check(bounds: CheckBounds, jobs: int = 1) -> dict:
    report = {
        "identities": identity_suite(bounds, jobs),
        "structural": structural_suite(bounds, jobs),
        "enumeration_oracle": oracle_suite(bounds, jobs),
        "rank_oracle": rank_suite(jobs),
    }
    report["passed"] = all(r["passed"] for r in report.values() if isinstance(r, dict))
    return report
