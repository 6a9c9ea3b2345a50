"""Upper and lower bounds on the nilpotency degree C(n,d,p).

The centerpiece is the recursion C(n,d) <= d * sum_{i=2..n} (i-1) *
C(floor(n/i), d) + 1, valid for p = 0 or p > n/2.  Feeding it the known
small values yields linear-in-d bounds for n <= 9 and a half-exponential
bound ~ 2^(n/2) d in general -- far below the classical exponential
Nagata-Higman bound 2^n - 1 and astronomically below earlier bounds that
hold in every characteristic.
"""

from nilalg import bounds as B

print(__doc__)

print("Recursive bound at n = 5 is 12d + 1:")
for d in (2, 3, 10):
    print("  d=%2d: %d" % (d, B.recursive_bound(5, d, 7)))

print()
print("Linear coefficients a_n with C(n,d) <= a_n d + 1 for n = 4..9 (p = 7):")
for n, a in sorted(B.LINEAR_COEFF.items()):
    got = B.recursive_bound(n, 2, 7)
    print("  n=%d: a_n=%2d   (check at d=2: %3d = %d*2+1)" % (n, a, got, a))

print()
print("Everything the bounds engine knows about (n,d,p) = (6,3,0):")
summary = B.best_bounds(6, 3, 0)
for b in summary.all:
    val = b.value_exact if b.value_exact is not None else "10^%.2f" % b.value_log10
    print("  %-28s %-5s %-20s [%s]" % (b.formula_id, b.direction, val, b.citation))
print("best upper:", summary.best_upper.value_exact,
      "via", summary.best_upper.formula_id)
print("best lower:", summary.best_lower.value_exact,
      "via", summary.best_lower.formula_id)

print()
print("How much better is the half-exponential bound than the")
print("any-characteristic comparators?  In log10, over n = 4..2000:")
table = B.comparator_table(4, 2000, d=2)
print("  minimum log10 ratio = %.2f  (i.e. at least 10^%d times smaller)"
      % (table["min_log10_ratio"], int(table["min_log10_ratio"])))
