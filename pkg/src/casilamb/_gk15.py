"""Gauss-Kronrod 15/7 rule on [-1, 1].

Nodes are sorted ascending; the embedded 7-point Gauss rule lives on the
odd-indexed nodes (G7_INDICES).  The constants were generated from the
Stieltjes-polynomial orthogonality conditions in exact rational arithmetic
and refined to 60 decimal digits; ``tests/test_quad.py`` re-checks the
polynomial exactness degrees (22 for K15, 13 for G7).
"""

K15_NODES = (
    -0.99145537112081264,
    -0.94910791234275852,
    -0.86486442335976907,
    -0.74153118559939444,
    -0.58608723546769113,
    -0.40584515137739717,
    -0.20778495500789847,
    0.0,
    0.20778495500789847,
    0.40584515137739717,
    0.58608723546769113,
    0.74153118559939444,
    0.86486442335976907,
    0.94910791234275852,
    0.99145537112081264,
)

K15_WEIGHTS = (
    0.022935322010529225,
    0.063092092629978553,
    0.10479001032225018,
    0.14065325971552592,
    0.16900472663926790,
    0.19035057806478541,
    0.20443294007529889,
    0.20948214108472783,
    0.20443294007529889,
    0.19035057806478541,
    0.16900472663926790,
    0.14065325971552592,
    0.10479001032225018,
    0.063092092629978553,
    0.022935322010529225,
)

G7_INDICES = (1, 3, 5, 7, 9, 11, 13)

G7_WEIGHTS = (
    0.12948496616886969,
    0.27970539148927667,
    0.38183005050511894,
    0.41795918367346939,
    0.38183005050511894,
    0.27970539148927667,
    0.12948496616886969,
)
