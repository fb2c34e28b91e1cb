"""Free-group words, presentations, and exact integer lattice algebra."""

from twisthom import IntMatrix, cokernel, hnf, kernel_lattice, parse_presentation, snf
from twisthom.words import format_word

# A presentation is a generator line plus labelled relations.
pres = parse_presentation("""
generators: x y
rel (braid): x y x = y x y
rel (order): (x y)^6 = 1
""")
w = pres.word("(x y)^2 y^-1 x^-1")
print("reduced word:", format_word(w, pres.generators))
print("relations:")
for rel in pres.relations:
    print("  ", pres.format_relation(rel))

# Hermite form: U @ A == H with U unimodular.
A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
H, U = hnf(A)
print("\nHermite form:\n" + str(H))

# Smith form: u @ A @ v is diagonal with a divisibility chain.
res = snf(A)
print("invariant factors:", res.d)
assert res.u @ A @ res.v == res.diagonal_matrix()

print("cokernel Z^3 / im A =", cokernel(A))
K = kernel_lattice(IntMatrix.from_rows([[2, 4, 6]]))
print("saturated kernel basis of [2 4 6]:", K.columns())
