"""Ideal classes of a few imaginary quadratic orders, found by enumeration.

Run: python demos/03_class_monoid.py
"""

from dedekind import OrderSpec, class_monoid, class_table, ideal_mul, is_principal, principal_complement

for d, f in [(-1, 1), (-5, 1), (-14, 1), (-23, 1), (-3, 2), (-1, 3)]:
    R = OrderSpec(d, f)
    classes = class_monoid(R, 30)
    inv = sum(C.invertible for C in classes)
    print(f"{R.describe():30s} {len(classes)} classes ({inv} invertible)")

R = OrderSpec(-14)
classes = class_monoid(R, 30)
print("\nZ[sqrt(-14)] class table (rows times columns):")
for C, row in zip(classes, class_table(classes)):
    print(f"  {str(C.representative):18s}", row)

print("\nprincipal complements:")
for C in classes:
    I = C.representative
    J = principal_complement(I)
    print(f"  {I}  *  {J}  =  ({is_principal(ideal_mul(I, J))})")
