"""tropdeg: exact computations with tropical cycles in block-decomposed space.

Weighted balanced polyhedral complexes over Q with the underlying lattice Z^m:
stable intersections with lattice-index multiplicities, linear push-forwards,
Minkowski sums, multidegrees against positive divisors, the projection-rank
positivity criterion, and polymatroid supports. All arithmetic is exact.
"""

from .cycles import BlockStructure, TropicalCycle, WeightedFacet
from .polyhedra import Polyhedron

__all__ = ["BlockStructure", "Polyhedron", "TropicalCycle", "WeightedFacet"]

__version__ = "0.1.0"
