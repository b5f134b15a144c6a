#!/usr/bin/env python3
"""Effective resistances of small graphs, computed exactly.

Every value below is an exact rational: the library never touches floating
point, so spectra can be compared with plain equality.
"""

from resspec import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    kmn_spectrum_closed_form,
    path_graph,
    resistance,
    resistance_diameter,
    resistance_matrix,
    resistance_spectrum,
    spanning_tree_count,
    to_graph6,
)

# A path of unit resistors behaves like resistors in series.
p4 = path_graph(4)
print("P4 end-to-end resistance:", resistance(p4, 0, 3))

# A cycle gives two parallel paths between any two vertices.
c4 = cycle_graph(4)
print("C4 adjacent:", resistance(c4, 0, 1), " opposite:", resistance(c4, 0, 2))

# The full matrix shares one exact matrix inverse across all pairs.
k23 = complete_bipartite(2, 3)
print("\nK_{2,3} =", to_graph6(k23), "with", spanning_tree_count(k23), "spanning trees")
rm = resistance_matrix(k23)
for row in rm.rows:
    print("  ", [str(x) for x in row])

# The resistance spectrum is the sorted multiset of all pairwise values.
print("\nspectrum of K_{2,3}:", resistance_spectrum(k23))
print("resistance diameter:", resistance_diameter(k23))

# For complete bipartite graphs the spectrum has a closed form:
#   2/m  (pairs inside the size-n part),
#   1/m + 1/n - 1/(mn)  (cross pairs),
#   2/n  (pairs inside the size-m part),
# with equal values merged. It matches the direct computation exactly.
for m, n in [(1, 1), (2, 2), (2, 3), (3, 3), (4, 6)]:
    closed = kmn_spectrum_closed_form(m, n)
    direct = resistance_spectrum(complete_bipartite(m, n))
    status = "ok" if closed == direct else "MISMATCH"
    print(f"K_{{{m},{n}}}: {closed}  [{status}]")

# Complete graphs are the most conductive on a given vertex count.
for n in range(2, 7):
    print(f"K_{n} pairwise resistance:", resistance(complete_graph(n), 0, 1))
