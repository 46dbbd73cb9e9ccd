"""
Checking the classifier on every small tree
===========================================

Enumerate all labeled trees on up to six vertices, classify each one and
compare with brute-force counting of independent sets. Then run the seeded
fuzzer on larger random trees.
"""

from collections import Counter

from indtree import all_labeled_trees, classify, enumerate_ind_sets, eval_at, fuzz_equivalence

# %%
for n in range(1, 7):
    tally = Counter()
    for g in all_labeled_trees(n):
        c = classify(g)
        assert c.value == eval_at(enumerate_ind_sets(g), -1)
        tally[c.value] += 1
    print(f"n={n}: {sum(tally.values())} trees, values {dict(sorted(tally.items()))}")

# %%
# Random uniform, spider and caterpillar trees, all from one seed.
report = fuzz_equivalence(count=300, max_n=18, seed=11)
print(report.render_text())
