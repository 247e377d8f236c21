"""The loop algebra over the integers and its commutator bracket.

For the order-5 loop the bracket satisfies the Jacobi identity.  For the
order-9 loop it does not, and the first failing triple is reported.
"""
from nafil import commutator_constants, construct_nafil, jacobi_holds, structure_constants
from nafil.algebra import format_commutator_table

for m in (2, 4):
    loop, _ = construct_nafil(m)
    d = commutator_constants(structure_constants(loop))
    if m == 2:
        print(format_commutator_table(d))
    r = jacobi_holds(d)
    print(f"order {loop.n}: Jacobi", "holds" if r.holds else f"fails at {r.witness}")
