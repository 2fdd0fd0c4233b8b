"""Exact computations with toric and quasi-ordinary singularities.

Lattices and cones, Newton polyhedra and their dual fans, truncated
fractional power series, affine semigroups, quasi-ordinary branches and
graded rings attached to monomial valuations.
"""
from .cyclotomic import CyclotomicNumber
from .errors import QotoricError
from .lattice import Cone, Sublattice
from .newton import Fan, IntegralPolyhedron
from .qo import CharacteristicData, QuasiOrdinaryBranch, WeierstrassPolynomial
from .semigroup import AffineSemigroup
from .series import INF, FractionalSeries

__all__ = [
    "AffineSemigroup",
    "CharacteristicData",
    "Cone",
    "CyclotomicNumber",
    "Fan",
    "FractionalSeries",
    "INF",
    "IntegralPolyhedron",
    "QotoricError",
    "QuasiOrdinaryBranch",
    "Sublattice",
    "WeierstrassPolynomial",
]

__version__ = "0.1.0"
