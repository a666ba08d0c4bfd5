"""After deleting one edge, a 5-block partition stays equitable.

The script builds both deletion types in C3(3, 6), prints the exact 5x5
quotient and its characteristic polynomial, and checks that the negated
polynomial equals the closed-form quintic. It then shows that exactly one
eigenvalue is negative.
"""

from hyperseidel import closedform as cf
from hyperseidel.equitable import format_partition, quotient_matrix, type1_blocks, type2_blocks
from hyperseidel.hypergraph import EdgeType
from hyperseidel.linalg import char_poly_exact, inertia_of
from hyperseidel.poly import negate_variable, sign_variations
from hyperseidel.seidel import seidel_matrix, seidel_spectrum

p = cf.C3Params(3, 6)
for kind, blocks in ((EdgeType.TYPE_I, type1_blocks(p.m, p.n)), (EdgeType.TYPE_II, type2_blocks(p.m, p.n))):
    edge = cf.canonical_edge(p, kind)
    h = cf.c3_minus_edge(p, kind)
    q = quotient_matrix(seidel_matrix(h), blocks)
    poly = char_poly_exact(q)
    xi = cf.xi_for(p, kind)
    print(f"Type {kind.value}: delete {{{','.join(str(v + 1) for v in edge)}}}, "
          f"blocks {format_partition(blocks)}")
    for row in q:
        print("   ", row)
    print(f"  det(xI - Q) = {poly}")
    print(f"  closed-form quintic equals -det(xI - Q): {xi == -poly}")
    spec = seidel_spectrum(h)
    print(f"  inertia {tuple(inertia_of(spec))}, sign changes of xi(-x): "
          f"{sign_variations(negate_variable(xi))}")
    print(f"  energy {spec.energy:.6f} (intact {seidel_spectrum(cf.c3(p)).energy:.6f})\n")

print("xi1(2m - 3) on a few cells:",
      {(m, n): cf.check_factorization_claim((m, n)).value for m in (3, 4) for n in (3, 5)})
