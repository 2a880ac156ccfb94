"""Hand-transcribed reference data for the published quantitative claims.

These tables are frozen literals, independent of the constructors in
:mod:`zecomm.channels` and :mod:`zecomm.quantum`; the verification harness and
the acceptance tests compare generated objects against them entrywise.
"""

from __future__ import annotations

from fractions import Fraction

# Stochastic matrix of the m=3 two-layer channel: inputs (i1,i2) in
# {0,1}x{0,1,2}, outputs (o1,o2) in {1..4}x{0,1,2}; every listed input gets
# weight 1/4 at the keyed output, everything else is 0.  Outputs absent from
# the published matrix (only (1,2)) are all-zero rows.
NM3_SUPPORT = {
    (1, 0): [(0, 0), (0, 1), (0, 2)],
    (1, 1): [(1, 0), (1, 1), (1, 2)],
    (2, 0): [(0, 0), (1, 0)],
    (2, 1): [(0, 1), (1, 1)],
    (2, 2): [(0, 2), (1, 2)],
    (3, 0): [(0, 0), (1, 2)],
    (3, 1): [(0, 1), (1, 0)],
    (3, 2): [(0, 2), (1, 1)],
    (4, 0): [(0, 0), (1, 1)],
    (4, 1): [(0, 2), (1, 0)],
    (4, 2): [(0, 1), (1, 2)],
}
NM3_WEIGHT = Fraction(1, 4)

# Stochastic matrix of the m=3 block channel: inputs (i1,i2) in
# {0,1,2}x{0,1}, outputs (o1,o2) in {1..7}x{0,1,2}; each keyed output carries
# weight 1/7 on exactly two inputs.
MM3_SUPPORT = {
    (1, 0): [(0, 0), (0, 1)],
    (1, 1): [(1, 0), (1, 1)],
    (1, 2): [(2, 0), (2, 1)],
    (2, 0): [(0, 0), (2, 1)],
    (2, 1): [(0, 1), (1, 0)],
    (2, 2): [(1, 1), (2, 0)],
    (3, 0): [(0, 0), (1, 1)],
    (3, 1): [(1, 0), (2, 1)],
    (3, 2): [(0, 1), (2, 0)],
    (4, 0): [(0, 0), (2, 1)],
    (4, 1): [(0, 1), (1, 1)],
    (4, 2): [(1, 0), (2, 0)],
    (5, 0): [(0, 0), (1, 0)],
    (5, 1): [(1, 1), (2, 1)],
    (5, 2): [(0, 1), (2, 0)],
    (6, 0): [(0, 0), (2, 0)],
    (6, 1): [(0, 1), (1, 0)],
    (6, 2): [(1, 1), (2, 1)],
    (7, 0): [(0, 0), (1, 1)],
    (7, 1): [(1, 0), (2, 0)],
    (7, 2): [(0, 1), (2, 1)],
}
MM3_WEIGHT = Fraction(1, 7)

# Singlet behavior with the published planar angles, 3 inputs and 2 outcomes
# per party: p(0,0|x,y) indexed [x][y]; p(1,1) equals it and
# p(0,1) = p(1,0) = 1/2 - p(0,0).
SINGLET_P00 = (
    (Fraction(3, 8), Fraction(3, 8), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1, 8), Fraction(3, 8)),
    (Fraction(3, 8), Fraction(1, 2), Fraction(1, 8)),
)


def singlet_reference_prob(x: int, y: int, a: int, b: int) -> Fraction:
    p00 = SINGLET_P00[x][y]
    return p00 if a == b else Fraction(1, 2) - p00


#: published success values
NM3_UNASSISTED_OPTIMUM = Fraction(7, 8)
MM3_UNASSISTED_OPTIMUM = Fraction(17, 21)
MM3_SINGLET_SUCCESS = Fraction(6, 7)
NM3_CGLMP_SUCCESS_APPROX = 0.9008
