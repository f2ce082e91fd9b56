"""Finite topologies and preorders carry the same information.

Walks through the Sierpinski space, shows its specialization order, rebuilds the
topology from that order, and counts topologies on up to four points.
"""
from alexandroff import (
    PointMap,
    is_continuous,
    is_order_preserving,
    is_T0,
    is_T1,
    specialization_preorder,
    topology_from_preorder,
    validate_space,
)
from alexandroff.enumeration import enumerate_topologies
from alexandroff.dot import to_dot

sierpinski = validate_space(["a", "b"], [[], ["a"], ["a", "b"]])
order = specialization_preorder(sierpinski)
print("opens:", [sierpinski.labels_of(o) for o in sierpinski.sorted_opens()])
print("a <= b:", order.le(0, 1), " b <= a:", order.le(1, 0))
print("round trip recovers the space:", topology_from_preorder(order, sierpinski.elements) == sierpinski)
print("T0:", is_T0(sierpinski), " T1:", is_T1(sierpinski))

# a map is continuous exactly when it respects the order
swap = PointMap(2, 2, (1, 0))
print("swap continuous:", is_continuous(sierpinski, sierpinski, swap),
      " order preserving:", is_order_preserving(sierpinski, sierpinski, swap))

for n in range(1, 5):
    spaces = list(enumerate_topologies(n))
    print(f"n={n}: {len(spaces)} topologies, {sum(map(is_T0, spaces))} of them T0")

print()
print(to_dot(sierpinski))
