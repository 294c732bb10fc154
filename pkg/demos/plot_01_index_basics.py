"""
Inequality indices on small distributions
=========================================

Each index reads a vector of nonnegative holdings. We start with a few
hand-made vectors where the answers are easy to check by eye.
"""

import numpy as np

from epifair import indices as ix

# one agent holds everything
monopoly = [1.0, 0.0, 0.0, 0.0]
print("gini   ", ix.gini(monopoly))    # 0.75, the largest value for four agents
print("hoover ", ix.hoover(monopoly))  # share of the total that must move
print("jain   ", ix.jain(monopoly))    # 1/N for full concentration

# %%
# Indices are scale invariant: doubling every holding changes nothing.
rng = np.random.default_rng(1)
x = rng.lognormal(0.0, 0.8, size=200)
for name, fn in [("gini", ix.gini), ("theil_t", ix.theil_t), ("palma", ix.palma)]:
    print(f"{name:8s} {fn(x):.6f}  {fn(2 * x):.6f}")

# %%
# The generalized entropy family trades off sensitivity to the two tails.
# Low alpha reacts to the poor end, high alpha to the rich end.
for alpha in (-1, 0, 1, 2):
    print(f"GE({alpha:+d}) = {ix.generalized_entropy(x, alpha):.4f}")

# Atkinson with larger epsilon weighs the bottom more heavily
for eps in (0.5, 1, 2):
    print(f"A({eps}) = {ix.atkinson(x, eps):.4f}")

# %%
# Zeros are legal for most indices, but not where a log or negative power
# of a holding is taken.
try:
    ix.theil_l([0.0, 1.0, 2.0])
except ix.ZeroWithLogBranch as exc:
    print("theil_l refused:", exc)
print("A(2) with a zero:", ix.atkinson([0.0, 1.0, 2.0], 2))

# %%
# A panel collects everything at once and keeps per-index errors apart.
groups = np.where(np.arange(200) < 100, "A", "B")
x[:100] *= 0.5  # group A holds less
panel = ix.compute_panel(ix.Distribution(x, groups), n_bins=10)
for name, param, value, err in panel.rows():
    print(f"{name:14s}{param:4s}{value:10.4f} {err}")
