"""B_{3,n}: three crosspolytope pieces glued along missing facets, and the torsion they create."""

from tropline import build_complex, crosspolytope_check, reduced_homology
from tropline.barvinok_classes import crosspolytope_part, missing_facet_boundary, sign_chain
from tropline.homology import Chain, boundary

for n in range(3, 7):
    B = build_complex(3, n, "B")
    print(f"n={n}: {len(B.facets)} facets, crosspolytopes ok={crosspolytope_check(n, B)},"
          f" H~={reduced_homology(B).as_strings()}")

# The signed sum of one crosspolytope piece has boundary [1] +- [2]; for even n this
# doubles a cycle that does not bound, which is where Z/2 appears.
n = 4
B = build_complex(3, n, "B")
d = boundary(Chain(n - 1, sign_chain(crosspolytope_part(B, (1, 2)))))
one, two = (Chain(n - 2, missing_facet_boundary(B, a, n)) for a in (1, 2))
print("boundary equals [1] + [2]:", d == one + two)
