"""Deleting one hyperedge can raise, lower or keep the Seidel energy.

Three small hypergraphs show each outcome. For each one we print the
spectrum before and after deleting every edge in turn.
"""

from hyperseidel import load_fixture, seidel_spectrum
from hyperseidel.hypergraph import Hypergraph, delete_hyperedge


def show(name: str, h: Hypergraph) -> None:
    base = seidel_spectrum(h)
    print(f"{name}: n={h.n}, {len(h.edges)} edges, energy {base.energy:.7f}")
    print("  spectrum", [round(v, 4) for v in base.values])
    for e in h.edges:
        after = seidel_spectrum(delete_hyperedge(h, e))
        label = "{" + ",".join(str(v + 1) for v in e) + "}"
        print(f"  minus {label:<12} energy {after.energy:.7f}  change {after.energy - base.energy:+.7f}")
    print()


show("H1 (increase)", load_fixture("h1_increase"))
show("H2 (decrease)", load_fixture("h2_decrease"))
show("single edge on 5 vertices (equal)", load_fixture("single_edge_5"))
