"""What breaks in Z[sqrt(-3)], the order of index 2 in the Eisenstein integers.

Run: python demos/02_singular_order.py
"""

from dedekind import (
    OrderSpec,
    colon,
    ideal_from_generators,
    ideal_inverse,
    ideal_mul,
    is_invertible,
    multiplier_ring,
    primary_decomposition,
    principal,
    singular_primes,
)
from dedekind.verifier import default_profile, run_suite

R = OrderSpec(-3, 2)
print(R.describe(), " discriminant", R.discriminant)

m = ideal_from_generators([2, 1 + R.omega])
print("\nm          =", m)
print("m * m^-1   =", ideal_mul(m, ideal_inverse(m)), "(not R)")
print("invertible:", is_invertible(m))
print("R(m)       =", multiplier_ring(m), "a ring strictly larger than R")
print("singular primes:", ", ".join(str(P) for P in singular_primes(R)))

# cancellation fails: m*m = m*2R although m != 2R
two = principal(R.element(2))
print("\nm*m == m*2R:", ideal_mul(m, m) == ideal_mul(m, two), "  m == 2R:", m == two)
print("(m*m : m) =", colon(ideal_mul(m, m), m))

# primary decomposition still works
print("\nprimary components of 6R:")
for c in primary_decomposition(principal(R.element(6))):
    print("  ", c)

print("\nverifier suites, seed 0:")
prof = default_profile(R, seed=0)
for name in ("invertibility", "divisibility", "cancellation", "primary"):
    print("  ", run_suite(name, prof, 40).lines()[0])
