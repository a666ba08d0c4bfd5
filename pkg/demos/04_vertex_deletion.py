"""Strong and weak vertex deletion on the six-vertex example H*.

Strong deletion drops every edge through the vertex. Weak deletion only
removes the vertex from its edges. Keeping vertex 4 as an isolated vertex
gives six eigenvalues and energy about 18.336. Removing the vertex outright
leaves five eigenvalues, and the energy still goes up.
"""

from hyperseidel import closedform as cf
from hyperseidel.hypergraph import load_fixture, strong_delete_vertex, weak_delete_vertex
from hyperseidel.seidel import seidel_spectrum

hs = load_fixture("hstar")
v = 3  # vertex 4 in 1-based labels


def line(label, h):
    s = seidel_spectrum(h)
    print(f"{label:<28} n={h.n} edges={len(h.edges)}  E={s.energy:.4f}  "
          f"spectrum {[round(x, 3) for x in s.values]}")


line("H*", hs)
line("strong, vertex isolated", strong_delete_vertex(hs, v, keep_vertex=True))
line("strong, vertex removed", strong_delete_vertex(hs, v))
line("weak", weak_delete_vertex(hs, v))

print("\nC3(m, n): deleting a vertex of V2 lowers the energy")
for m, n in [(3, 3), (3, 6), (5, 4)]:
    print(f"  E(C3({m},{n})) = {cf.energy_formula_c3((m, n)):.4f}  ->  "
          f"E(C3({m},{n - 1})) = {cf.energy_formula_c3((m, n - 1)):.4f}")
