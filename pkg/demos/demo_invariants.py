"""Finite generating sets for invariants of tuples of matrices.

The ring of polynomial functions of d generic n x n matrices invariant
under simultaneous conjugation is generated by sigma_t(X_a), where sigma_t
is the t-th characteristic-polynomial coefficient and X_a runs over products
of the generic matrices along words a.  The nilpotency degree C(floor(n/t),d)
caps the word degrees one needs: that is the bridge between nil algebras and
invariant theory exercised here.
"""

from nilalg import invariants as V

print(__doc__)

print("Generator set for n = 2, d = 2 over Q:")
gs = V.generator_set(2, 2, 0)
for g in gs.all():
    print("  sigma_%d(X_%s)" % (g.t, ".".join("x%d" % k for k in g.word)))
print("word-degree caps used:", gs.degree_sources)

print()
print("Degreewise generation evidence (two extra degrees beyond the cap):")
for p in (0, 2, 3):
    rep = V.generation_check(2, 2, p, extra_deg=2)
    s = rep["summary"]
    print("  p=%d: %d/%d reductions succeeded" % (p, s["passed"], s["total"]))

print()
print("Newton's identities tie sigma_t to power traces when t < p or p = 0:")
print("  sigma_2 vs Newton at n=2, p=0:", V.newton_sigma_check(2, 2, 0))
print("  sigma_3 vs Newton at n=3, p=0:", V.newton_sigma_check(3, 3, 0))
print("  sigma_2 vs Newton at n=3, p=5:", V.newton_sigma_check(3, 2, 5))

print()
print("Numeric sanity: sigma_1(X_x1.x2) is unchanged by conjugation.")
from fractions import Fraction

A = [[[1, 2], [3, 4]], [[0, 1], [-1, 2]]]
g = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
inv = V.sigma_of_word(2, 2, 1, (1, 2), 0)
before = inv.poly.evaluate(V.matrix_values(2, 2, A))
conj = V.conjugate_tuple([[[Fraction(x) for x in r] for r in M] for M in A], g)
after = inv.poly.evaluate(V.matrix_values(2, 2, conj))
print("  before: %s   after: %s   equal: %s" % (before, after, before == after))
