"""
From ideal and actual conditions to a deficit distribution
==========================================================

A deficit is the gap between what an agent is epistemically owed and what
they receive. Per-agent deficits form an ordinary distribution that the
indices can audit.
"""

import numpy as np

from epifair import indices as ix
from epifair.deficits import catalog, deficit, deficit_profile, lookup

for kind in catalog():
    print(f"{kind.key:34s} {kind.deficit_expr:24s} {kind.direction.value}")

# %%
# Testimonial credibility: speakers deserve credence r_s but hearers
# assign c. Suppose hearers discount group B speakers.
kind = lookup("testimonial")
print(kind.ideal_symbol, kind.actual_symbol)
print(deficit(0.9, 0.6))

rng = np.random.default_rng(7)
reliability = rng.uniform(0.6, 0.95, size=60)
credence = reliability.copy()
credence[30:] *= 0.7  # the discounted half

profile = deficit_profile(kind, reliability, credence)
print("tag:", profile.tag)

# Only half of the agents carry any deficit, so the deficits themselves
# are highly concentrated.
print("gini of deficits:", round(ix.gini(profile), 4))
print("hoover of deficits:", round(ix.hoover(profile), 4))

# %%
# Over-supply counts as well: exploitation asks too much of an agent.
ex = lookup("epistemic_exploitation")
print(ex.name, "->", ex.direction.value)
print(deficit_profile(ex, [1.0, 1.0], [1.5, 1.0]).values)
