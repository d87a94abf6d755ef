"""Conjugacy invariants as certificates, and sorting orbits into classes.

Each invariant is constant on equivalence classes, so a mismatch is a
machine-checkable proof of non-equivalence. The partition routine applies
the pairwise decision to a whole list of orbits and reports honest
"unresolved" pairs instead of guessing.
"""

import snbraid as sb
from snbraid.invariants import standard_reports

n, m = 2, 1
A1 = sb.BraidWord.parse(3, "s2 s1 s1 S2")
A2 = sb.BraidWord.parse(3, "s2 s2")

print("invariant battery for the loop around puncture 1:")
for rep in standard_reports(sb.MixedBraid(n, m, A1)):
    print(f"  {rep.name}: {rep.value}")
print()

# linking numbers see which puncture the orbit strand wraps
from snbraid.invariants import linking_matrix

print("linking entries, A_1:", linking_matrix(sb.MixedBraid(n, m, A1)))
print("linking entries, A_2:", linking_matrix(sb.MixedBraid(n, m, A2)))
print()

beta_A = sb.BraidWord.identity(2)
orbits = [
    A1,
    sb.free_reduce(A2 * A1 * sb.invert(A2)),  # conjugate copy of A_1
    A2,
    sb.free_reduce(A2 * A2),                  # doubled loop: exponent differs
    sb.invert(A2),
]
res = sb.partition_sn_classes(n, m, beta_A, orbits)
print(f"classes:    {[list(c) for c in res.classes]}")
print(f"unresolved: {[list(p) for p in res.unresolved]}")
