"""Canonical supports in the nil algebra of index 4.

For x^4 = 0 (characteristic not 2) every element is congruent, modulo the
relation ideal, to a combination of words whose per-letter run vectors come
from the list (), (1), (1,1), (1,1,1), (2), (2,1), (3), (3,1), (1,3), (3,2),
(3,2,1), subject to three cross-letter exclusions.  Counting degrees over
those profiles explains why C(4,d) stays close to 3d.
"""

from nilalg import rewrite4 as R
from nilalg.formal import format_sum, parse_sum

print(__doc__)

print("Rewriting x1^2.x2.x1^2 (run vector (2,2) is not allowed):")
f = parse_sum("x1^2.x2.x1^2", 2, 0)
g = R.canonicalize(2, 0, f)
print("  ->", format_sum(g))

print()
print("A messier input, three letters:")
f = parse_sum("x1^2.x2.x1^2.x3 + 2*x1.x3.x1^3.x2 - x2.x1^4.x3", 3, 0)
g = R.canonicalize(3, 0, f)
print("  ->", format_sum(g))
print("  every surviving word has canonical run vectors:",
      all(R.is_canonical_word(w, 3) for w in g.terms))

print()
print("Degree arithmetic over the allowed profiles (d letters):")
for d in range(2, 7):
    print("  d=%d: %4d admissible profiles, max total degree %2d = 3d+3"
          % (d, len(R.canonical_profiles(d)), R.max_profile_degree(d)))

print()
print("Witness search at d = 2 over Q: the top nonzero degree is 9,")
print("one below C(4,2,0) = 10:")
w = R.witness_search(2, 0, range(1, 11))
print("  witness:", w, "(degree %d)" % len(w))
