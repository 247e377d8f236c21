"""Which identities does the order-5 loop satisfy?

Every check is an exhaustive sweep.  A failing check returns the
lexicographically first counterexample so it can be re-verified by hand.
"""
from nafil import PropertyId, check, construct_nafil, full_report, inverse_map, multiply

loop, _ = construct_nafil(2)

print("inverses:", inverse_map(loop).as_dict())

report = full_report(loop)
for pid, result in report.results.items():
    status = "holds" if result.holds else f"fails at {result.witness}"
    print(f"{pid:8s} {status}")

# The associativity witness, checked element by element.
x, y, z = check(loop, PropertyId.ASSOC).witness
lhs = multiply(loop, multiply(loop, x, y), z)
rhs = multiply(loop, x, multiply(loop, y, z))
print(f"({x}*{y})*{z} = {lhs}  but  {x}*({y}*{z}) = {rhs}")

# Power associativity across the family.
bad = [m for m in range(2, 21) if not check(construct_nafil(m)[0], PropertyId.PAP).holds]
print("PAP failures for m = 2..20:", bad or "none")
