"""T_{3,n}: counts, the snake shelling and top homology for n = 2..6."""

from math import comb

from tropline import build_complex, f_vector, reduced_homology, shelling_top_betti, snake_order
from tropline.shelling import is_shelling, ternary_string_complex

print("snake order for n=2:", ["".join(map(str, s)) for s in snake_order(2)])
for n in range(2, 7):
    K = build_complex(3, n)
    fv = f_vector(K)
    assert fv[: n - 1] == [3 ** (k + 1) * comb(n, k + 1) for k in range(n - 1)]
    S, order = ternary_string_complex(n)
    ok, _ = is_shelling(S, order)
    print(f"n={n}: f={fv}  shells={ok}  homology spheres={shelling_top_betti(S, order)}"
          f"  H~={reduced_homology(K).as_strings()}")
