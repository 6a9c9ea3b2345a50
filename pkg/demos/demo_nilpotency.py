"""Computing exact nilpotency degrees of the algebra with identity x^n = 0.

The nilpotency degree C(n,d,p) is the least c such that every product of c
elements of the free d-generated algebra (over a field of characteristic p)
vanishes modulo the identity x^n = 0.  The engine works one multidegree at a
time: the relation ideal's component is spanned by bordered instances of the
polarizations of x^n, built recursively, and the component vanishes exactly
when the elimination reaches full rank.
"""

from nilalg import ideal as I

print(__doc__)

print("Small cases from the known-values table:")
for n, d, p in [(2, 2, 0), (2, 3, 2), (3, 2, 0), (3, 2, 3)]:
    r = I.nilpotency_degree(n, d, p, max_deg=12)
    print("  C(%d,%d,%d) = %d, witness word of top degree: %s"
          % (n, d, p, r.degree, r.witness))

print()
print("The headline computation, n = 4 with two letters over Q:")
r = I.nilpotency_degree(4, 2, 0, max_deg=11)
print("  C(4,2,0) =", r.degree)
print("  last nonzero word:", r.witness, "(degree %d)" % len(r.witness))
print("  per-degree log (multidegree, #words, rank, quotient dim):")
for row in r.per_degree[-6:]:
    print("   ", row)

print()
print("Characteristic 3 behaves identically here:")
r3 = I.nilpotency_degree(4, 2, 3, max_deg=11)
print("  C(4,2,3) =", r3.degree)
