"""The mixed braid group B_{n,m} and its split exact sequence.

Braids on n+m strands whose permutation keeps the first n strands (the
invariant set A) and the last m strands (the periodic orbit) in their own
blocks. Deleting the orbit strands is a homomorphism onto B_n; it splits,
and every mixed braid factors uniquely as section(base) * kernel_part.
"""

import snbraid as sb

n, m = 2, 1
b = sb.validate(n, m, sb.BraidWord.parse(3, "s1 s2 s2"))
print(f"mixed braid:  {b.word}  with blocks ({n}, {m})")

base = sb.project(b)
print(f"projection to B_{n}: {base}")

d = sb.decompose(b)
print(f"decomposition: base = {d.base}, kernel part = {d.kernel_part}")
rebuilt = sb.compose(sb.section(n, m, d.base).word, d.kernel_part)
print(f"reconstruction check: {sb.equal(rebuilt, b.word)}")
print()

# the kernel is the braid group of the orbit inside the punctured disc;
# for m = 1 it is free on loops around the punctures
gens = sb.kernel_generators(n, m)
for i, g in enumerate(gens, start=1):
    print(f"kernel generator A_{i} = {g}")
print()

# the base group acts on the kernel by conjugation through the section
beta = sb.BraidWord.parse(2, "s1")
gamma = gens[1]  # loop around puncture 2
moved = sb.act(beta, gamma, m)
print(f"phi_{{s1}}(A_2) = {moved}")
print(f"equals A_1?  {sb.equal(moved, gens[0])}")
print("(crossing the two punctures carries one loop to the other)")
