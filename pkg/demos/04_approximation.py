"""Chinese remaindering, approximation and two generators in Z[sqrt(-5)].

Run: python demos/04_approximation.py
"""

from dedekind import (
    ApproximationSpec,
    CongruenceSystem,
    OrderSpec,
    approximate,
    approximate_exact,
    crt_system,
    element_valuation,
    ideal_from_generators,
    ideal_pow,
    primes_above,
    two_generators,
)

R = OrderSpec(-5)
w = R.omega
(P2,) = primes_above(R, 2)
P3, Q3 = primes_above(R, 3)
(P7, Q7) = primes_above(R, 7)

sys_ = CongruenceSystem.of(R, [(ideal_pow(P2.as_ideal(), 3), 1), (P3.as_ideal(), w), (Q7.as_ideal(), 2 - w)])
x = crt_system(sys_)
print("x = 1 mod P2^3, x = w mod P3, x = 2-w mod Q7  ->", x, " ok:", sys_.satisfied_by(x))

spec = ApproximationSpec.of(R, [(P2, 0, 3), (P3, 1, 2)])
y = approximate(spec)
print("v_P2(y) >= 3, v_P3(y - 1) >= 2                  ->", y,
      (element_valuation(y, P2), element_valuation(y - 1, P3)))

z = approximate_exact([P2, P3, Q7], [-1, 2, 1])
print("exact valuations -1, 2, 1 at P2, P3, Q7        ->", z,
      [element_valuation(z, P) for P in (P2, P3, Q7)])

I = ideal_pow(P3.as_ideal(), 3) * P7.as_ideal() * P2.as_ideal()
a, b = two_generators(I)
print(f"\nI = {I} is generated by {a} and {b}:", ideal_from_generators([a, b]) == I)
