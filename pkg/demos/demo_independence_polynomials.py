"""
Independence polynomials and their value at -1
==============================================

Exact independence polynomials for paths, stars and a cycle, computed three
ways: the tree dynamic program, the general vertex-splitting recursion and
brute-force enumeration.
"""

from indtree import (
    enumerate_ind_sets,
    eval_at,
    graph_ind_poly,
    path_graph,
    path_poly,
    path_value_at_minus1,
    star_graph,
    tree_ind_poly,
)
from indtree.graph import cycle_graph

# %%
# Paths follow the recurrence I(P_n) = I(P_{n-1}) + x I(P_{n-2}).
for n in range(8):
    p = path_poly(n)
    print(f"P_{n}: {p}    I(-1) = {eval_at(p, -1)} (table: {path_value_at_minus1(n)})")

# %%
# The value at -1 repeats with period six.
print([path_value_at_minus1(n) for n in range(18)])

# %%
# Coefficients are exact Python ints; they grow quickly.
big = path_poly(200)
print("largest coefficient of I(P_200):", max(big.coeffs))

# %%
# Three independent routes to the same polynomial.
star = star_graph(5)
print("K_{1,5}:", tree_ind_poly(star), "|", graph_ind_poly(star), "|", enumerate_ind_sets(star))

# %%
# The general recursion also handles graphs with cycles.
c6 = cycle_graph(6)
print("C_6:", graph_ind_poly(c6), " I(-1) =", eval_at(graph_ind_poly(c6), -1))
