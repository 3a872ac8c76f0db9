"""Elements of Z[sqrt(-5)] factor in two ways; ideals factor in one.

Run: python demos/01_unique_factorization.py
"""

from dedekind import OrderSpec, Poly, content, factor_ideal, ideal_from_generators, principal

R = OrderSpec(-5)
w = R.omega

# 6 = 2 * 3 = (1 + w)(1 - w), and none of the four factors splits further
print("2 * 3       =", R.element(2) * 3)
print("(1+w)(1-w)  =", (1 + w) * (1 - w))
for x in (R.element(2), R.element(3), 1 + w, 1 - w):
    print(f"  norm({x}) = {x.norm()}")

# the ideal 6R has a single factorization into primes
print("\n6R =", factor_ideal(principal(R.element(6))))
print("(1+w)R =", factor_ideal(principal(1 + w)))
print("(1-w)R =", factor_ideal(principal(1 - w)))

# the two primes above 3 multiply to 3R; the product can be read off a polynomial
A = ideal_from_generators([3, 1 + 2 * w])
B = ideal_from_generators([3, 1 - 2 * w])
f, g = Poly([1 + 2 * w, 3], R), Poly([1 - 2 * w, 3], R)
print("\nA =", A, "  B =", B)
print("basis polynomials multiply to", " + ".join(f"({c})X^{i}" for i, c in enumerate((f * g).coeffs)))
print("content of the product =", content(f * g))
print("A*B                    =", A * B, "(that is 3R)" if A * B == principal(R.element(3)) else "")
