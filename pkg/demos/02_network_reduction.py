#!/usr/bin/env python3
"""Step-by-step electrical network reductions, each certified exact.

Weighted networks are multigraphs (parallel edges allowed); each transform
is a single explicit step that provably preserves the resistance between
every surviving pair of vertices.
"""

from fractions import Fraction

from resspec import (
    cycle_graph,
    eliminate_block,
    network_to_text,
    new_graph,
    new_network,
    parallel_reduce,
    resistance_matrix,
    series_reduce,
    substitute,
    unit_network,
    weighted_resistance,
)

# Series rule: a degree-2 vertex folds into one edge carrying the sum.
chain = new_network(3, [(0, 1, Fraction(1, 2)), (1, 2, Fraction(1, 3))])
print("chain 1/2 + 1/3, ends:", weighted_resistance(chain, 0, 2))
print("after series_reduce:", network_to_text(series_reduce(chain, 1)).strip())

# Parallel rule: a bundle collapses to the reciprocal of reciprocal sums.
bundle = new_network(2, [(0, 1, Fraction(1, 2)), (0, 1, Fraction(1, 3)), (0, 1, Fraction(1, 6))])
print("\nbundle 1/2 | 1/3 | 1/6 collapses to:",
      network_to_text(parallel_reduce(bundle, 0, 1)).strip().splitlines()[-1])

# Elimination: a pendant block hangs off one cut vertex and is invisible
# to resistances among the rest of the graph.
g = new_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
print("\ntriangle with a triangle hung off vertex 0")
before = resistance_matrix(g)
reduced = eliminate_block(g, {0, 3, 4}, 0)
after = resistance_matrix(reduced)
for u in range(3):
    for v in range(u + 1, 3):
        assert before.value(u, v) == after.value(u, v)
print("surviving pairwise resistances unchanged after eliminate_block: ok")

# Substitution: any sub-network may be swapped for one that agrees on all
# terminal resistances; the precondition is checked by direct computation.
host = unit_network(cycle_graph(4))
half = new_network(2, [(0, 1, Fraction(1, 2))])
try:
    substitute(host, [0, 1], half)
except Exception as exc:
    print("\nsubstituting a 1/2-ohm edge for a unit edge is rejected:")
    print("  ", exc)

# An equivalent replacement passes: a unit edge vs two 1/2-ohm resistors
# in series through a fresh internal vertex.
split = new_network(3, [(0, 2, Fraction(1, 2)), (2, 1, Fraction(1, 2))])
bigger = substitute(host, [0, 1], split)
print("\nunit edge replaced by two half-ohm resistors in series:")
print(network_to_text(bigger).strip())
for u in range(4):
    for v in range(u + 1, 4):
        assert weighted_resistance(host, u, v) == weighted_resistance(bigger, u, v)
print("all original pairwise resistances preserved: ok")
