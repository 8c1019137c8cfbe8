"""Tropical determinants, tropical rank and Barvinok rank two on small matrices.

Run: python3 examples_scripts/01_tropical_rank.py
"""

from tropline import TropicalMatrix, barvinok_rank_le2, trop_det, tropical_rank

# Min-plus determinant: the minimum over permutations of the entry sums.
# A matrix is tropically singular when that minimum is attained twice.
M = TropicalMatrix(((0, 1, 1), (1, 0, 1), (1, 1, 0)))
status = trop_det(M)
print("det", status.value, "singular:", status.singular)
print("tropical rank:", tropical_rank(M))

# Rank one means M_ij = x_i + y_j.
outer = TropicalMatrix(tuple(tuple(x + y for y in (0, 3, 5)) for x in (0, 1, 2)))
print("outer sum has rank", tropical_rank(outer))

# Three unit vectors: every 3x3 permutation sum ties, so the tropical rank is
# two, yet no two columns span a segment through the third.
E = TropicalMatrix.from_columns([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
print("unit vectors: rank", tropical_rank(E), "| Barvinok <= 2:", barvinok_rank_le2(E)[0])

# With the origin in place of one unit vector the columns are collinear.
F = TropicalMatrix.from_columns([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
print("origin + two units: Barvinok <= 2 with witness columns", barvinok_rank_le2(F)[1])
