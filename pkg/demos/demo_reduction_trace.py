"""
Reducing a tree to a path
=========================

Walk through the truncation moves on a 13-vertex tree made of two
"forks" joined at their roots, then classify a few more trees.
"""

import random

from indtree import Graph, classify, reduce_tree, spider_graph, star_graph
from indtree.polynomial import eval_at, tree_ind_poly
from indtree.reduction import render_trace

edges = [(1, 8), (1, 2), (2, 3), (2, 4), (1, 5), (5, 6), (5, 7),
         (8, 9), (9, 10), (9, 11), (8, 12), (12, 13)]
tree = Graph(edges=edges)

# %%
# Three cherries collapse first (even moves), then two pairs of length-2
# branches (odd moves). The result is P_6 after an even number of odd moves.
trace = reduce_tree(tree)
print(render_trace(trace))

# %%
# The classification agrees with direct evaluation of the polynomial.
c = classify(tree)
print("classified:", c.value, " direct:", eval_at(tree_ind_poly(tree), -1))
print("contractible:", c.contractible, " sphere Euler parity:", c.sphere_euler_parity.value)

# %%
# A type-1 and a type-2 branch at one vertex force the value to zero.
spider = spider_graph([1, 1, 2])
print(render_trace(reduce_tree(spider)))

# %%
# Any move order gives the same value; only the trace changes.
big_star = star_graph(7)
for seed in range(3):
    t = reduce_tree(big_star, random.Random(seed))
    print(f"seed {seed}: {len(t.moves)} moves, P_{t.terminal_path_n}, value {t.value}")
