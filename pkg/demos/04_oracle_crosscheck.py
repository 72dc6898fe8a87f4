"""The definition-level oracle, and the formula agreeing with it.

    python3 demos/04_oracle_crosscheck.py
"""

from mixedmetric import (
    CactusSpec,
    brute_force_mdim,
    build_graph,
    element_profiles,
    forced_vertices,
    is_mixed_generator,
    mdim_exact,
    random_cactus,
)

p3 = build_graph(3, [(0, 1), (1, 2)])

# The center alone cannot tell the two endpoints apart.
ok, pair = is_mixed_generator(p3, {1})
print("P3 with {1}:", ok, "| first failing pair:", pair)

# Both endpoints do the job; the profile table shows why.
ok, _ = is_mixed_generator(p3, {0, 2})
print("P3 with {0, 2}:", ok)
for profile in element_profiles(p3, {0, 2}):
    print("   ", profile.element, "->", profile.distances)

# Leaves are forced: dropping one leaves its pendant edge and neighbor
# indistinguishable, so the search only ranges over the non-leaf vertices.
tadpole = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)])
print("\ntadpole forced vertices:", sorted(forced_vertices(tadpole)))
result = brute_force_mdim(tadpole)
print("tadpole exhaustive search:", result.value, "witness", result.witness)
print("tadpole formula:", mdim_exact(tadpole).total)

# The acceptance suite does this over hundreds of random cacti; here is a
# fully worked one.
g = random_cactus(CactusSpec(cycle_count=2, cycle_length_range=(3, 5),
                             extra_tree_edges=2, seed=2024))
print(f"\nrandom cactus: {g}")
print("formula:", mdim_exact(g).total, "| oracle:", brute_force_mdim(g).value)
