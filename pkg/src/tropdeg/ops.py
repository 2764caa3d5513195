"""Geometric operations between cycles.

Stable intersection implements the fan displacement rule with a verified
generic rational displacement: for every pair of faces meeting after the
infinitesimal displacement the direction spaces must span the ambient
space, otherwise the vector is re-drawn with an incremented seed.  All
constructed cycles are checked balanced before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import cycles as cyc
from . import linalg
from .cycles import BlockStructure, TropicalCycle, WeightedFacet
from .errors import (
    BadBlockIndexError,
    DimensionMismatchError,
    EmptySubsetError,
    InvariantError,
    SeedDependenceError,
    WrongCodimensionError,
    WrongDimensionError,
    WrongDimensionsError,
)
from .linalg import IntVec, is_zero_vec, primitive, rank, saturate, vsub
from .polyhedra import (
    Polyhedron,
    common_refinement,
    int_row,
    is_covered,
)

_MASK64 = (1 << 64) - 1
_SEED_STRIDE = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class DisplacementSeed:
    """Deterministic source of generic rational vectors."""

    seed: int = 0
    den_bound: int = 16

    def derived(self, salt: int) -> "DisplacementSeed":
        return DisplacementSeed((self.seed + salt * _SEED_STRIDE) & _MASK64,
                                self.den_bound)


class Rng:
    """splitmix64; deterministic across platforms and Python versions."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + _SEED_STRIDE) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next64() % (hi - lo + 1)

    def fraction(self, num_bound: int = 4096, den_bound: int = 16) -> Fraction:
        num = self.randint(1, num_bound)
        if self.next64() & 1:
            num = -num
        return Fraction(num, self.randint(1, den_bound))

    def vector(self, m: int, num_bound: int = 4096, den_bound: int = 16):
        return tuple(self.fraction(num_bound, den_bound) for _ in range(m))


def _as_seed(seed) -> DisplacementSeed:
    if isinstance(seed, DisplacementSeed):
        return seed
    return DisplacementSeed(int(seed))


# ---------------------------------------------------------------------------
# stable intersection
# ---------------------------------------------------------------------------

def stable_intersect(c1: TropicalCycle, c2: TropicalCycle, seed=0,
                     verify: bool = True) -> TropicalCycle:
    """Stable intersection with multiplicities from the displacement rule.

    With ``verify`` the computation runs under two independent seeds and
    the results are required to agree cell by cell.
    """
    if c1.m != c2.m:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {c1.m} vs {c2.m}")
    cyc.require_balanced(c1)
    cyc.require_balanced(c2)
    seed = _as_seed(seed)
    if c1.is_empty or c2.is_empty:
        return cyc.empty_cycle(c1.ambient)
    out_dim = c1.dim + c2.dim - c1.m
    if out_dim < 0:
        return cyc.empty_cycle(c1.ambient)
    result = _stable_once(c1, c2, seed, out_dim)
    if verify:
        again = _stable_once(c1, c2, seed.derived(101), out_dim)
        if result.key != again.key:
            raise SeedDependenceError(
                "stable intersection differs across displacement seeds")
    return result


def _stable_once(c1, c2, seed, out_dim):
    m = c1.m
    s1, s2 = c1.support_facets, c2.support_facets

    facet_pairs = []           # (i, j, P, Q, C, full_span, lattice index)
    span_cache: dict = {}
    for i, f1 in enumerate(s1):
        for j, f2 in enumerate(s2):
            inter = f1.poly.intersect(f2.poly)
            if inter.is_empty:
                continue
            full = _full_span(f1.poly, f2.poly, m, span_cache)
            index = None
            if full:
                index = linalg.lattice_index(
                    f1.poly.direction_basis() + f2.poly.direction_basis(), m)
            facet_pairs.append((i, j, f1.poly, f2.poly, inter, full, index))

    # Proper subspaces spanned by direction spaces of face pairs of meeting
    # facets.  A face pair meets after displacement by eps*v only when v
    # lies in Lin(F) + Lin(F'), so keeping v outside every proper such
    # span certifies that displaced meetings happen only with full span.
    low_spans = _low_face_spans(facet_pairs, m)

    rng = Rng(seed.seed)
    redraws = 0
    flags: dict = {}
    for attempt in range(64):
        v = rng.vector(m, den_bound=seed.den_bound)
        ok = all(not _in_rref_span(basis, v) for basis in low_spans)
        if ok:
            flags = {}
            disp_cache: dict = {}
            for i, j, p, q, _, full, _ in facet_pairs:
                if not full:
                    flags[i, j] = False
                    continue
                nonempty, qdim = _displaced(p, q, v, disp_cache)
                if nonempty and qdim != out_dim + 1:
                    ok = False
                    break
                flags[i, j] = nonempty
        if ok:
            break
        redraws += 1
    else:
        raise InvariantError("no generic displacement found in 64 draws")

    candidates = [(i, j, c, idx) for i, j, _, _, c, full, idx in facet_pairs
                  if full and c.dim == out_dim]
    pieces = common_refinement([c for _, _, c, _ in candidates])

    facets = []
    for piece in pieces:
        point = piece.relative_interior_point()
        weight = 0
        for i, j, c, idx in candidates:
            if flags[i, j] and c.contains(point):
                weight += s1[i].weight * s2[j].weight * idx
        if weight > 0:
            facets.append(WeightedFacet(piece, weight))
    out = cyc.mark_complex_by_construction(TropicalCycle(c1.ambient, facets))
    _assert_balanced(out, "stable intersection")
    out._cache["displacement_redraws"] = redraws
    return out


def _full_span(p: Polyhedron, q: Polyhedron, m: int, cache: dict) -> bool:
    key = (p.key, q.key)
    if key not in cache:
        cache[key] = rank(p.direction_basis() + q.direction_basis()) == m
    return cache[key]


def _low_face_spans(facet_pairs, m: int):
    """Canonical bases of the proper subspaces Lin(F)+Lin(F') over face pairs."""
    seen_pairs = set()
    spans: dict = {}
    for _, _, p, q, _, _, _ in facet_pairs:
        for fa in p.all_faces():
            for fb in q.all_faces():
                key = (fa.key, fb.key)
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                red, _ = linalg.rref(fa.direction_basis() + fb.direction_basis())
                if len(red) == m:
                    continue
                spans.setdefault(tuple(tuple(x) for x in red), red)
    return list(spans.values())


def _in_rref_span(rref_rows, v) -> bool:
    """Membership of v in the row span (rows in reduced echelon form)."""
    residual = list(v)
    for row in rref_rows:
        p = next(i for i, x in enumerate(row) if x != 0)
        if residual[p] != 0:
            f = residual[p]
            residual = [a - f * b for a, b in zip(residual, row)]
    return all(x == 0 for x in residual)


def _displaced(f: Polyhedron, g: Polyhedron, v, cache: dict):
    """Whether f meets g + eps*v for arbitrarily small eps > 0, and the
    dimension of the joint (x, eps) polyhedron."""
    key = (f.key, g.key)
    if key in cache:
        return cache[key]
    rows = [r + (0,) for r in f.ineqs]
    eqs = [r + (0,) for r in f.eqs]
    for r in g.ineqs:
        rows.append(int_row(r + (-sum(c * x for c, x in zip(r[1:], v)),)))
    for r in g.eqs:
        eqs.append(int_row(r + (-sum(c * x for c, x in zip(r[1:], v)),)))
    q = Polyhedron.from_hrep(f.m + 1, ineqs=rows, eqs=eqs)
    eps = f.m   # index of the eps coordinate
    if q.is_empty:
        result = (False, -1)
    else:
        nonempty = (any(vert[eps] > 0 for vert in q.vertices)
                    or any(ray[eps] > 0 for ray in q.rays)
                    or any(l[eps] != 0 for l in q.lineality))
        result = (nonempty, q.dim)
    cache[key] = result
    return result


def _assert_balanced(cycle: TropicalCycle, what: str) -> None:
    if not cycle.is_empty and not cyc.check_balancing(cycle).balanced:
        raise InvariantError(f"{what} produced an unbalanced cycle")


# ---------------------------------------------------------------------------
# transversality
# ---------------------------------------------------------------------------

def transverse_check(c1: TropicalCycle, c2: TropicalCycle) -> bool:
    """Direction spaces span the ambient space at every overlap point."""
    if c1.m != c2.m:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {c1.m} vs {c2.m}")
    m = c1.m
    faces1 = _support_faces(c1)
    faces2 = _support_faces(c2)
    span_cache: dict = {}
    for fa in faces1:
        for fb in faces2:
            inter = fa.intersect(fb)
            if inter.is_empty:
                continue
            point = inter.relative_interior_point()
            if fa.relint_contains(point) and fb.relint_contains(point):
                if not _full_span(fa, fb, m, span_cache):
                    return False
    return True


def _support_faces(cycle: TropicalCycle):
    seen: dict = {}
    for f in cycle.support_facets:
        for face in f.poly.all_faces():
            seen.setdefault(face.key, face)
    return list(seen.values())


# ---------------------------------------------------------------------------
# push-forwards along linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ImpurityReport:
    """Witness that an image is not pure-dimensional."""

    facet_index: int          # input facet whose image is the witness
    image: Polyhedron         # its (lower-dimensional, uncovered) image
    top_dim: int

    def __str__(self):
        return (f"image of facet {self.facet_index} has dimension "
                f"{self.image.dim} < {self.top_dim} and is not covered")


@dataclass(frozen=True)
class PushforwardResult:
    cycle: TropicalCycle | None
    impurity: ImpurityReport | None
    absorbed: tuple[int, ...] = ()

    @property
    def is_pure(self) -> bool:
        return self.impurity is None


def pushforward_linear(cycle: TropicalCycle, matrix,
                       out_blocks: BlockStructure) -> PushforwardResult:
    """Image cycle under an integer linear map (rows of length m).

    Pure images get the lattice-index weight rule on the top-dimensional
    part; image facets of lower dimension covered by the top-dimensional
    ones are absorbed and reported; an uncovered one yields an impurity
    report instead of a cycle.
    """
    cyc.require_balanced(cycle)
    m_out = out_blocks.m
    matrix = [tuple(int(e) for e in row) for row in matrix]
    if len(matrix) != m_out or any(len(r) != cycle.m for r in matrix):
        raise DimensionMismatchError("matrix shape does not match the map")
    support = cycle.support_facets
    if not support:
        return PushforwardResult(cyc.empty_cycle(out_blocks), None)
    images = [(idx, f.poly.linear_image(matrix, m_out), f.weight)
              for idx, f in enumerate(support)]
    d = max(img.dim for _, img, _ in images)
    top = [(idx, img, w) for idx, img, w in images if img.dim == d]
    absorbed = []
    for idx, img, _ in images:
        if img.dim == d:
            continue
        if is_covered(img, [t[1] for t in top]):
            absorbed.append(idx)
        else:
            return PushforwardResult(None, ImpurityReport(idx, img, d))

    pieces = common_refinement([img for _, img, _ in top])
    facets = []
    for piece in pieces:
        point = piece.relative_interior_point()
        ambient_basis = piece.direction_basis()
        weight = 0
        for idx, img, w in top:
            if not img.contains(point):
                continue
            gens = [tuple(sum(row[t] * b[t] for t in range(cycle.m))
                          for row in matrix)
                    for b in support[idx].poly.direction_basis()]
            weight += w * linalg.relative_lattice_index(ambient_basis, gens)
        if weight > 0:
            facets.append(WeightedFacet(piece, weight))
    out = cyc.mark_complex_by_construction(TropicalCycle(out_blocks, facets))
    _assert_balanced(out, "push-forward")
    return PushforwardResult(out, None, tuple(absorbed))


def minkowski_sum_subspace(cycle: TropicalCycle, span_gens) -> PushforwardResult:
    """Minkowski sum with the rational linear span of the given vectors."""
    cyc.require_balanced(cycle)
    m = cycle.m
    basis = saturate(span_gens, m)
    if not basis:
        return PushforwardResult(cycle, None)
    subspace = Polyhedron.from_generators(m, vertices=[(0,) * m],
                                          lineality=basis)
    w = TropicalCycle(BlockStructure((m,)), [WeightedFacet(subspace, 1)])
    prod = cyc.product(cycle, w)
    sum_map = [tuple(1 if (j == i or j == m + i) else 0 for j in range(2 * m))
               for i in range(m)]
    return pushforward_linear(prod, sum_map, cycle.ambient)


def projection_dim(cycle: TropicalCycle, subset) -> int:
    """Dimension of the image of the support under the block projection."""
    blocks = cycle.ambient
    subset = _check_subset(subset, blocks.k)
    if cycle.is_empty:
        raise WrongDimensionError("projection of an empty cycle")
    keep = set(blocks.coords_of(subset))
    kernel = [tuple(1 if t == j else 0 for t in range(cycle.m))
              for j in range(cycle.m) if j not in keep]
    best = 0
    for f in cycle.support_facets:
        dirs = f.poly.direction_basis()
        inter = len(dirs) + len(kernel) - rank(list(dirs) + kernel)
        best = max(best, len(dirs) - inter)
    return best


def projection_pushforward(cycle: TropicalCycle, subset) -> PushforwardResult:
    """Push the cycle forward along the coordinate projection onto blocks."""
    blocks = cycle.ambient
    subset = _check_subset(subset, blocks.k)
    coords = blocks.coords_of(subset)
    matrix = [tuple(1 if t == j else 0 for t in range(cycle.m)) for j in coords]
    out_blocks = BlockStructure(tuple(blocks.blocks[i - 1] for i in sorted(subset)))
    return pushforward_linear(cycle, matrix, out_blocks)


def _check_subset(subset, k: int) -> tuple[int, ...]:
    subset = tuple(sorted(set(int(i) for i in subset)))
    if not subset:
        raise EmptySubsetError("empty block subset")
    if subset[0] < 1 or subset[-1] > k:
        raise BadBlockIndexError(f"block indices {subset} out of 1..{k}")
    return subset


# ---------------------------------------------------------------------------
# divisors and positivity
# ---------------------------------------------------------------------------

def tropical_hyperplane(coeffs) -> TropicalCycle:
    """Locus where min(c0, c1+a1, ..., cm+am) is attained at least twice.

    All weights 1; for zero coefficients this is the standard fan with
    vertex at the origin.
    """
    coeffs = [Fraction(e) for e in coeffs]
    m = len(coeffs) - 1
    if m < 1:
        raise DimensionMismatchError("need at least two coefficients")

    def term_row(l: int):
        # c_l + a_l as (constant, linear) with a_0 == 0
        lin = [0] * m
        if l >= 1:
            lin[l - 1] = 1
        return coeffs[l], lin

    facets = []
    for i, j in combinations(range(m + 1), 2):
        ci, li = term_row(i)
        cj, lj = term_row(j)
        eq = int_row([ci - cj] + [a - b for a, b in zip(li, lj)])
        ineqs = []
        for l in range(m + 1):
            if l in (i, j):
                continue
            cl, ll = term_row(l)
            ineqs.append(int_row([cl - ci] + [a - b for a, b in zip(ll, li)]))
        cell = Polyhedron.from_hrep(m, ineqs=ineqs, eqs=[eq])
        if not cell.is_empty and cell.dim == m - 1:
            facets.append(WeightedFacet(cell, 1))
    return TropicalCycle(BlockStructure((m,)), facets)


def is_positive_divisor(cycle: TropicalCycle):
    """True when the facet direction spaces intersect only in the origin.

    Returns (flag, witness) with a primitive line direction contained in
    every facet when the divisor is not positive.
    """
    m = cycle.m
    if cycle.dim != m - 1:
        raise WrongCodimensionError(
            f"divisor must have codimension 1, got dim {cycle.dim} in R^{m}")
    rows = []
    for f in cycle.support_facets:
        rows.extend(r[1:] for r in f.poly.eqs)
    kernel = linalg.int_kernel(rows, m)
    if not kernel:
        return True, None
    return False, kernel[0]


def pair_positive(c1: TropicalCycle, c2: TropicalCycle):
    """Positivity of the stable intersection of complementary-dimension cycles.

    Equivalent to the existence of a facet pair whose direction spaces
    span the ambient space; the witness pair of facet indices is returned.
    """
    if c1.m != c2.m:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {c1.m} vs {c2.m}")
    if c1.is_empty or c2.is_empty:
        return False, None
    if c1.dim + c2.dim != c1.m:
        raise WrongDimensionsError(
            f"dimensions {c1.dim} + {c2.dim} != {c1.m}")
    cache: dict = {}
    for i, f1 in enumerate(c1.support_facets):
        for j, f2 in enumerate(c2.support_facets):
            if _full_span(f1.poly, f2.poly, c1.m, cache):
                return True, (i, j)
    return False, None


# ---------------------------------------------------------------------------
# translation-admissibility search
# ---------------------------------------------------------------------------

NO_COUNTEREXAMPLE_FOUND = "NoCounterexampleFound"
COUNTEREXAMPLE_FOUND = "CounterexampleFound"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of the refutation search.

    The search is sound but not complete: NoCounterexampleFound is not a
    proof of translation-admissibility, and the verdict records the
    strategy and how many subspaces were tested so callers cannot mistake
    it for one.
    """

    status: str
    witness: tuple[IntVec, ...] | None
    strategy: str
    tested: int

    @property
    def found(self) -> bool:
        return self.status == COUNTEREXAMPLE_FOUND


def check_admissible(cycle: TropicalCycle, strategy: str = "coords",
                     seed: int = 0, dim_bound: int | None = None,
                     span_size: int = 2) -> AdmissibilityVerdict:
    """Search candidate subspaces V for an impure Minkowski sum cycle+V."""
    cyc.require_balanced(cycle)
    m = cycle.m
    tested = 0
    seen = set()
    for cand in _candidates(cycle, strategy, seed, dim_bound, span_size):
        basis = saturate(cand, m)
        if not basis or len(basis) == m:
            continue        # V = 0 or V = R^m: the sum is trivially pure
        if basis in seen:
            continue
        seen.add(basis)
        result = minkowski_sum_subspace(cycle, basis)
        tested += 1
        if not result.is_pure:
            return AdmissibilityVerdict(COUNTEREXAMPLE_FOUND, basis,
                                        strategy, tested)
    return AdmissibilityVerdict(NO_COUNTEREXAMPLE_FOUND, None, strategy, tested)


def _candidates(cycle, strategy, seed, dim_bound, span_size):
    m = cycle.m
    for part in strategy.split("+"):
        part = part.strip()
        if part == "coords":
            bound = dim_bound if dim_bound is not None else m
            basis = [tuple(1 if t == j else 0 for t in range(m))
                     for j in range(m)]
            for size in range(1, bound + 1):
                for subset in combinations(range(m), size):
                    yield [basis[j] for j in subset]
        elif part == "spans":
            pool = _direction_pool(cycle)
            for size in range(1, span_size + 1):
                for subset in combinations(pool, size):
                    yield list(subset)
        elif part.startswith("random:"):
            n = int(part.split(":", 1)[1])
            rng = Rng(seed)
            lines = []
            for _ in range(n):
                vec = tuple(rng.randint(-9, 9) for _ in range(m))
                if not is_zero_vec(vec):
                    lines.append(primitive(vec))
            for line in lines:
                yield [line]
            for pair in combinations(lines, 2):
                yield list(pair)
        else:
            raise ValueError(f"unknown strategy {part!r}")


def _direction_pool(cycle):
    pool: set = set()
    for f in cycle.support_facets:
        p = f.poly
        pool.update(p.rays)
        pool.update(p.lineality)
        verts = p.vertices
        for a, b in combinations(verts, 2):
            diff = vsub(b, a)
            if not is_zero_vec(diff):
                pool.add(primitive(diff))
    base = sorted(pool)
    for a, b in combinations(base, 2):
        for vec in (tuple(x + y for x, y in zip(a, b)),
                    tuple(x - y for x, y in zip(a, b))):
            if not is_zero_vec(vec):
                pool.add(primitive(vec))
    return sorted(pool)
