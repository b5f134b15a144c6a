#!/usr/bin/env python3
"""The classical resistance-distance facts as executable properties.

Each check returns pass/fail with a concrete witness on failure. Running
them exhaustively over all small connected graphs is a machine check of
the underlying theory (and, in practice, of this library's arithmetic).
"""

from resspec import complete_bipartite, cycle_graph, new_graph, path_graph, run_all_checks
from resspec.lemmas import (
    check_cut_additivity,
    check_cycle_bound,
    check_foster,
    check_local_sum,
    check_lower_bound,
    check_rayleigh,
    check_triangle,
)

k23 = complete_bipartite(2, 3)

print("triangle inequality on K_{2,3}: ", check_triangle(k23).passed)
print("edge-sum identity (sums to n-1):", check_foster(k23).passed)
print("local sum identity at a cross pair:", check_local_sum(k23, 0, 2).passed)
print("degree lower bound + equality cases:", check_lower_bound(k23).passed)
print("cycle edges stay below 1 ohm:", check_cycle_bound(k23).passed)

# Edge deletion can only raise resistances; deleting a bridge is vacuous.
c4 = cycle_graph(4)
print("\ndeleting a C4 edge:", check_rayleigh(c4, (0, 1)).passed)
bridge_case = check_rayleigh(path_graph(3), (0, 1))
print("deleting a bridge:", bridge_case.passed, "-", bridge_case.note)

# Resistances add across cut vertices.
bowtie = new_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
print("\ncut-vertex additivity on the bowtie:", check_cut_additivity(bowtie).passed)

# The exhaustive sweep: every check, every connected graph up to 5 vertices.
summary = run_all_checks(5)
print(
    f"\nexhaustive sweep: {summary['failures_total']} failures over "
    f"{summary['graphs_checked']} connected graphs "
    f"(per order: {summary['classes_per_order']})"
)
