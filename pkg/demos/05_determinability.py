#!/usr/bin/env python3
"""Which complete bipartite graphs are pinned down by their spectrum?

A graph is determined by its resistance spectrum when every graph sharing
the spectrum is isomorphic to it. The spectrum fixes the vertex count
(C(n,2) entries) and forces connectedness (all entries finite), so the
check is exhaustive over connected classes of the same order.
"""

from resspec import complete_bipartite, verify_drs
from resspec.drs import check_theorems, classify_kmn

# Shape tags: Thm3.1 = equal parts, Thm3.2 = parts differing by one,
# Thm3.3 = a part of size two, Thm3.4 = one part beyond triple-plus-one
# of the other. Everything else is covered only by the conjecture.
for m, n in [(3, 3), (3, 4), (2, 6), (1, 7), (3, 5)]:
    print(f"K_{{{m},{n}}} classifies as: {classify_kmn(m, n)}")

print("\nverdicts at small orders:")
for m, n in [(2, 2), (1, 3), (2, 3), (3, 3)]:
    v = verify_drs(complete_bipartite(m, n))
    print(f"  K_{{{m},{n}}}: tag={v.theorem_tag:15s} determined={v.determined}")

# The sweep checks every K_{m,n} with at most 7 vertices against all
# connected classes of equal order (853 classes at n=7).
print("\nfull sweep of complete bipartite graphs with <= 7 vertices:")
for v in check_theorems(7):
    mark = "ok " if v.determined else "!! "
    print(f"  {mark}{v.target_graph6:10s} order={v.order} tag={v.theorem_tag:15s} "
          f"impostors={list(v.impostors)}")
