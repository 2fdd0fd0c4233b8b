"""Branches and semigroups used across the test-suite."""
from fractions import Fraction as Q

from qotoric.qo import branch_from_terms
from qotoric.semigroup import AffineSemigroup

h = Q(1, 2)

# name -> (terms, d)
BRANCHES = {
    "cusp": ({(Q(3, 2),): 1}, 1),
    "cusp_inverse": ({(Q(2, 3),): 1}, 1),
    "lipman": ({(h, 0): 1, (h, h): 1}, 2),
    "x1_sqrt_x2": ({(1, h): 1}, 2),
    "two_pairs": ({(Q(3, 2),): 1, (Q(7, 4),): 1}, 1),
    "cube_root": ({(Q(1, 3), Q(1, 3)): 1, (1, 1): 2}, 2),
    "threefold": ({(h, h, 0): 1, (h, h, h): -1}, 3),
    "smooth": ({(1, 1): 1, (2, 0): 3}, 2),
}


def branch(name):
    terms, d = BRANCHES[name]
    return branch_from_terms(terms, d)


TORIC = {
    "orthant": [(1, 0), (0, 1)],
    "g23": [(2,), (3,)],
    "fan_012": [(1, 0), (1, 1), (1, 2)],
    "veronese": [(2, 0), (1, 1), (0, 2)],
}


def toric(name):
    return AffineSemigroup.from_generators(TORIC[name])
