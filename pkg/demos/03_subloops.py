"""Subloop structure: every proper subloop turns out to be a group, and no
proper nontrivial subloop is normal."""
from nafil import construct_nafil, enumerate_subloops, is_simple, lagrange_violations, subgroup_census

for m in (2, 3, 4, 5):
    loop, _ = construct_nafil(m)
    subs = enumerate_subloops(loop)
    census = subgroup_census(subs)
    print(f"order {loop.n:2d}: subgroups {dict(sorted(census.items()))}, "
          f"simple: {is_simple(loop, subs)}, "
          f"orders not dividing n: {sorted({o for o, _ in lagrange_violations(loop, subs)})}")

# The order-9 loop has a subgroup of order 4, which does not divide 9.
loop9, _ = construct_nafil(4)
for s in enumerate_subloops(loop9).proper_nontrivial():
    print(sorted(s.elements), "group" if s.is_group else "not a group")
