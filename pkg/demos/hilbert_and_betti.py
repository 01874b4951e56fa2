"""Hilbert numerators and Betti tables of corner-interval minors.

Run: python demos/hilbert_and_betti.py
"""
from cornerminors import MinorCollection, betti_koszul, ideal_of, regularity_of, hilbert_formula_check
from cornerminors.hilbert import determinantal_ideal
from cornerminors.poly import Ring

print("closed formula check, numerators over (1-z)^(mn)")
print("m n  computed == formula  computed == formula with star tail")
for m in range(2, 5):
    for n in range(2, 5):
        r = hilbert_formula_check(m, n)
        print(f"{m} {n}  {str(r.equal):18s} {r.proof_form_equal}")

r = hilbert_formula_check(2, 2)
print("\n2x2 computed:", r.lhs, "  formula:", r.rhs, "  star tail:", r.rhs_proof)

print("\nBetti table of the full 3x3 corner collection")
t = betti_koszul(ideal_of(MinorCollection.full_corner(3, 3)))
print(t.render())
print("regularity:", t.regularity)

print("\nBetti table of all 2-minors of a 3x3 matrix")
d = determinantal_ideal(Ring.grid(3, 3), range(1, 4), range(1, 4))
print(regularity_of(d).table.render())

# for corner-interval minors (not only corner ones) the regularity is smaller
for m, n in [(2, 3), (3, 3), (3, 4)]:
    reg = regularity_of(ideal_of(MinorCollection.full_corner_interval(m, n)))
    print(f"all corner-interval minors of {m}x{n}: reg {reg.value}")
