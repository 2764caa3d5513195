"""Multidegrees, projection ranks, the positivity criterion, and MSupp.

The multidegree of type n is the degree of the iterated stable
intersection of a cycle with n_i generically translated pullbacks of a
positive divisor per block.  The rank function I -> dim pi_I tabulates
projection dimensions over all block subsets; the criterion compares the
two.  The criterion's positivity prediction is only valid for
translation-admissible cycles, and its result object says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import cycles as cyc
from . import ops
from .cycles import BlockStructure, TropicalCycle, WeightedFacet
from .errors import (
    NonPositiveDivisorError,
    SeedDependenceError,
    TypeMismatchError,
    WrongDimensionError,
)
from .linalg import rank as mat_rank
from .ops import DisplacementSeed, Rng
from .polyhedra import Polyhedron

ADMISSIBILITY_CAVEAT = (
    "positivity prediction is valid only for translation-admissible cycles")


@dataclass(frozen=True)
class DivisorSet:
    """One positive divisor per block; defaults to standard hyperplanes."""

    blocks: BlockStructure
    divisors: tuple[TropicalCycle, ...]

    @classmethod
    def standard(cls, blocks: BlockStructure) -> "DivisorSet":
        divs = tuple(ops.tropical_hyperplane([0] * (b + 1)) for b in blocks.blocks)
        return cls(blocks, divs)

    def replaced(self, i: int, divisor: TropicalCycle) -> "DivisorSet":
        divs = list(self.divisors)
        divs[i - 1] = divisor
        return DivisorSet(self.blocks, tuple(divs))

    def validate(self) -> None:
        for i, (b, d) in enumerate(zip(self.blocks.blocks, self.divisors), 1):
            if d.m != b:
                raise NonPositiveDivisorError(
                    f"divisor {i} lives in R^{d.m}, block has R^{b}")
            positive, witness = ops.is_positive_divisor(d)
            if not positive:
                raise NonPositiveDivisorError(
                    f"divisor {i} is not positive (witness line {witness})")


@dataclass(frozen=True)
class RankFunction:
    """I subset of [k] -> dim pi_I of the support; rank(empty) = 0."""

    k: int
    table: tuple[tuple[tuple[int, ...], int], ...]

    def rank(self, subset) -> int:
        key = tuple(sorted(subset))
        for s, r in self.table:
            if s == key:
                return r
        raise KeyError(f"subset {key} not tabulated")

    def subsets(self):
        return [s for s, _ in self.table]


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    violating_subset: tuple[int, ...] | None
    facet_witness: WeightedFacet | None
    caveat: str = ADMISSIBILITY_CAVEAT

    def __bool__(self):
        return self.holds


def _check_type(cycle: TropicalCycle, n) -> tuple[int, ...]:
    blocks = cycle.ambient
    n = tuple(int(e) for e in n)
    if len(n) != blocks.k:
        raise TypeMismatchError(f"type vector length {len(n)} for k={blocks.k}")
    if any(e < 0 for e in n):
        raise TypeMismatchError(f"negative entries in type vector {n}")
    if any(e > b for e, b in zip(n, blocks.blocks)):
        raise TypeMismatchError(f"type vector {n} exceeds block sizes {blocks.blocks}")
    if cycle.dim is None or sum(n) != cycle.dim:
        raise TypeMismatchError(
            f"type vector {n} sums to {sum(n)}, cycle dimension is {cycle.dim}")
    return n


def pullback(divisor: TropicalCycle, block: int,
             blocks: BlockStructure) -> TropicalCycle:
    """divisor x product of the other blocks' full spaces, as a cycle in R^m."""
    parts = []
    for i, b in enumerate(blocks.blocks, 1):
        if i == block:
            parts.append(divisor)
        else:
            full = TropicalCycle(BlockStructure((b,)),
                                 [WeightedFacet(Polyhedron.full_space(b), 1)])
            parts.append(full)
    out = parts[0]
    for part in parts[1:]:
        out = cyc.product(out, part)
    return TropicalCycle(blocks, out.facets)


def multidegree(cycle: TropicalCycle, n, divs: DivisorSet | None = None,
                seed=0) -> int:
    """Degree of cycle . prod_i (pullback of Lambda_i)^{n_i}.

    Each pullback copy is translated by a fresh generic vector; the whole
    computation runs under two independent translation seeds and the
    values must agree.
    """
    n = _check_type(cycle, n)
    if divs is None:
        divs = DivisorSet.standard(cycle.ambient)
    divs.validate()
    seed = ops._as_seed(seed)
    value = _multidegree_once(cycle, n, divs, seed)
    again = _multidegree_once(cycle, n, divs, seed.derived(211))
    if value != again:
        raise SeedDependenceError(
            f"multidegree differs across translation seeds: {value} vs {again}")
    return value


def _multidegree_once(cycle, n, divs, seed: DisplacementSeed):
    blocks = cycle.ambient
    rng = Rng(seed.seed)
    cur = cycle
    for i in range(1, blocks.k + 1):
        b = blocks.blocks[i - 1]
        for _ in range(n[i - 1]):
            shift = rng.vector(b, den_bound=seed.den_bound)
            lam = cyc.translate(divs.divisors[i - 1], shift)
            pb = pullback(lam, i, blocks)
            cur = ops.stable_intersect(cur, pb,
                                       seed=seed.derived(rng.randint(1, 1 << 30)),
                                       verify=False)
            if cur.is_empty:
                return 0
    return cyc.degree0(cur)


def rank_function(cycle: TropicalCycle) -> RankFunction:
    """Tabulate dim pi_I over every subset of [k]."""
    if cycle.is_empty:
        raise WrongDimensionError("rank function of an empty cycle")
    k = cycle.ambient.k
    table = [((), 0)]
    for size in range(1, k + 1):
        for subset in combinations(range(1, k + 1), size):
            table.append((subset, ops.projection_dim(cycle, subset)))
    return RankFunction(k, tuple(table))


def positivity_criterion(cycle: TropicalCycle, n,
                         ranks: RankFunction | None = None) -> CriterionResult:
    """n_I <= dim pi_I for all I, plus a facet witness when it holds."""
    n = _check_type(cycle, n)
    if ranks is None:
        ranks = rank_function(cycle)
    for subset in ranks.subsets():
        if not subset:
            continue
        n_i = sum(n[i - 1] for i in subset)
        if n_i > ranks.rank(subset):
            return CriterionResult(False, subset, None)
    return CriterionResult(True, None, facet_witness(cycle, n))


def facet_witness(cycle: TropicalCycle, n) -> WeightedFacet | None:
    """First facet (canonical order) with dim pi_I(facet) >= n_I for all I."""
    n = _check_type(cycle, n)
    blocks = cycle.ambient
    subsets = [s for size in range(1, blocks.k + 1)
               for s in combinations(range(1, blocks.k + 1), size)]
    for f in cycle.support_facets:
        if all(_facet_projection_dim(f.poly, blocks, s) >= sum(n[i - 1] for i in s)
               for s in subsets):
            return f
    return None


def _facet_projection_dim(poly: Polyhedron, blocks: BlockStructure, subset) -> int:
    keep = set(blocks.coords_of(subset))
    kernel = [tuple(1 if t == j else 0 for t in range(poly.m))
              for j in range(poly.m) if j not in keep]
    dirs = poly.direction_basis()
    inter = len(dirs) + len(kernel) - mat_rank(list(dirs) + kernel)
    return len(dirs) - inter


def type_vectors(cycle: TropicalCycle):
    """All n >= 0 with sum n_i = dim and n_i <= m_i."""
    d = cycle.dim
    if d is None:
        return []
    sizes = cycle.ambient.blocks

    def rec(i, remaining):
        if i == len(sizes) - 1:
            if remaining <= sizes[i]:
                yield (remaining,)
            return
        for v in range(min(remaining, sizes[i]) + 1):
            for rest in rec(i + 1, remaining - v):
                yield (v,) + rest

    return [t for t in rec(0, d)]


def msupp(cycle: TropicalCycle, divs: DivisorSet | None = None,
          mode: str = "criterion", seed=0) -> frozenset:
    """Type vectors with positive multidegree.

    criterion mode uses the projection ranks (exact for
    translation-admissible cycles); bruteforce computes every multidegree.
    """
    if cycle.is_empty:
        raise WrongDimensionError("msupp of an empty cycle")
    if mode == "criterion":
        ranks = rank_function(cycle)
        out = [n for n in type_vectors(cycle)
               if positivity_criterion(cycle, n, ranks).holds]
    elif mode == "bruteforce":
        out = [n for n in type_vectors(cycle)
               if multidegree(cycle, n, divs, seed) > 0]
    else:
        raise ValueError(f"unknown msupp mode {mode!r}")
    return frozenset(out)


def check_submodular(ranks: RankFunction):
    """rank(I&J) + rank(I|J) <= rank(I) + rank(J) over all subset pairs."""
    subsets = [frozenset(s) for s in ranks.subsets()]
    for a in subsets:
        for b in subsets:
            lhs = ranks.rank(a & b) + ranks.rank(a | b)
            rhs = ranks.rank(a) + ranks.rank(b)
            if lhs > rhs:
                return False, (tuple(sorted(a)), tuple(sorted(b)))
    return True, None


def exchange_property(vectors) -> bool:
    """Polymatroid-base exchange axiom, checked by brute force."""
    vecs = sorted(vectors)
    for n in vecs:
        for n2 in vecs:
            for i in range(len(n)):
                if n[i] <= n2[i]:
                    continue
                witness = False
                for j in range(len(n)):
                    if n[j] < n2[j]:
                        cand = list(n)
                        cand[i] -= 1
                        cand[j] += 1
                        if tuple(cand) in vectors:
                            witness = True
                            break
                if not witness:
                    return False
    return True
