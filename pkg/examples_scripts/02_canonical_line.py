"""The canonical tropical line through collinear points, and where the points sit on it.

Six points in TP^7 are placed on a line whose tree has four internal nodes,
then recovered from their coordinates alone.
"""

from tropline import FaceDescriptor, TropicalMatrix, canonical_line, face_label
from tropline.complex_gen import configuration

splits = ((3, 4, 5, 6, 7, 8), (5, 6, 7, 8), (7, 8))  # internal edges, by the side away from leaf 1
cell = FaceDescriptor(8, splits, tuple(("leaf", i) for i in (2, 3, 4, 5, 7, 8)))
cols = configuration(cell, leaf_offset={j: j + 1 for j in range(6)}, edge_gaps={s: [2] for s in splits})
M = TropicalMatrix.from_columns(cols)
print("input matrix (columns are points):")
for row in M.entries:
    print("  ", row)

line = canonical_line(M)
internal = [v for v in range(len(line.tree.nodes)) if line.degree(v) >= 3]
print("internal nodes:", [line.tree.nodes[v] for v in internal])
print("zero tension holds:", line.check_zero_tension())
print("recovered cell equals the one we started from:", face_label(M) == cell)
print()
print(line.to_dot())

# For d = 3 the face label is a string over 0..3: 0 for the apex, i for leaf i.
print(face_label(TropicalMatrix.from_columns([(0, 0, 0), (1, 0, 0), (0, 1, 0)])).to_string())
