"""Hyperspaces of nonempty subsets of a small discrete space.

The lower and strong lower constructions coincide here, and both order subsets by
reverse inclusion; the upper construction orders them by inclusion.
"""
from alexandroff import (
    Variant,
    build_hyperspace,
    compare_topologies,
    discrete_space,
    intersection_of_all_opens,
    minimal_hyper_neighborhood,
)

base = discrete_space((1, 2, 3))
lower = build_hyperspace(base, Variant.LOWER)
strong = build_hyperspace(base, Variant.STRONG_LOWER)
upper = build_hyperspace(base, Variant.UPPER)

print("carrier:", ", ".join(lower.space.elements))
print("lower vs strong lower:", compare_topologies(lower.space, strong.space).value)
print("lower vs upper:", compare_topologies(lower.space, upper.space).value)

for pt in ({1}, {1, 2}):
    def show(sets):
        return sorted("".join(map(str, sorted(s))) for s in sets)
    print(f"smallest lower neighborhood of {pt}:", show(minimal_hyper_neighborhood(lower, pt)))
    print(f"smallest upper neighborhood of {pt}:", show(minimal_hyper_neighborhood(upper, pt)))

# every nonempty lower-open set contains the whole base
print("common point of all nonempty lower opens:", [sorted(s) for s in intersection_of_all_opens(lower)])
