"""Every T0 finite space sits inside an upper hyperspace.

Each point goes to its smallest open neighborhood; the map is a topological
embedding.  A space that is not T0 has two points with the same neighborhood, so
the map cannot be injective.
"""
from alexandroff import NotT0, embed_into_upper, validate_space

chain = validate_space(["a", "b", "c"], [[], ["a"], ["a", "b"], ["a", "b", "c"]])
f, h = embed_into_upper(chain)
for i, x in enumerate(chain.elements):
    print(f"{x} -> {h.space.elements[f.image[i]]}")
print("hyperspace has", h.space.n, "points")

glued = validate_space(["a", "b"], [[], ["a", "b"]])
try:
    embed_into_upper(glued)
except NotT0 as exc:
    print("indiscrete pair:", exc)
