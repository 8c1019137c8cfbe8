"""d = 4: the three tree shapes, T_{4,4} counts and homology, and the Barvinok class strings."""

from tropline import build_complex, enumerate_facets, enumerate_leaf_trees, reduced_homology
from tropline.barvinok_classes import class_adjacency, class_dimension, class_intersect
from tropline.complex_gen import is_simplicial_cell

print("trivalent trees on 4 leaves:", [t.splits for t in enumerate_leaf_trees(4)])
cells = enumerate_facets(4, 4, refined=False)
print("cells:", len(cells), "non-simplicial:", sum(not is_simplicial_cell(f) for f in cells))

T = build_complex(4, 4)
print("refined:", len(T.facets), "simplices on", T.vertex_count, "vertices")
print("H~(T_4,4) =", reduced_homology(T).as_strings())

B = build_complex(4, 4, "B")
print("H~(B_4,4) =", reduced_homology(B).as_strings())
print("each class borders", {len(v) for v in class_adjacency(B).values()}, "others")

for s, t in (("1122", "12AB"), ("1111", "2222"), ("13", "31")):
    u = class_intersect(s, t)
    print(f"{s} & {t} = {u}", "" if u is None else f"(dim {class_dimension(u)})")
