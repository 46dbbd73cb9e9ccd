"""
Reading and writing graphs
==========================

Edge lists keep the original vertex labels; graph6 relabels to 0..n-1.
"""

from indtree import TreeGenSpec, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, random_tree

# %%
text = """# a small caterpillar
10 20
20 30
20 40
v 99
"""
g = parse_edge_list(text)
print(g.vertices, g.edges())

# %%
# graph6 compacts labels in ascending order.
s = emit_graph6(g)
print(s, parse_graph6(s).edges())

# %%
tree = random_tree(TreeGenSpec(n=12, seed=2024, shape="caterpillar"))
print(emit_edge_list(tree))
print(emit_graph6(tree))
assert parse_graph6(emit_graph6(tree)) == tree
