"""Build the smallest members of the family and look at how they are put together.

Each loop of order n = 2m + 1 is glued from four blocks: a group of order m in
the top-left corner, two trimmed cyclic blocks on the off-diagonal, and a
counter-cyclic block (with k = m + 1 entries swapped out) in the bottom-right.
"""
from nafil import construct_nafil, format_table
from nafil.construct import format_trace, starred_positions

loop, trace = construct_nafil(2)
print("order 5:")
print(format_table(loop.table))

# The trace keeps every intermediate block, which is handy when a table looks off.
loop9, trace9 = construct_nafil(4)
print(format_trace(trace9))

# The swapped-out entries in the bottom-right block follow a closed path.
print("substituted positions for k = 5:", starred_positions(5))

# Larger orders are cheap.
for m in (10, 25, 50):
    big, _ = construct_nafil(m)
    print(f"m = {m:2d}: order {big.n}, identity {big.identity}")
