"""Hasse diagrams of specialization preorders, rendered as Graphviz DOT."""
from __future__ import annotations

from .space import FiniteSpace, Preorder, specialization_preorder


def hasse_edges(p: Preorder) -> list[tuple[int, int]]:
    """Covering pairs (u, v): u < v strictly with nothing strictly between.

    Points equivalent under the preorder are not joined here; see `equivalent_pairs`.
    """
    n = p.size
    lt = [[p.le(u, v) and not p.le(v, u) for v in range(n)] for u in range(n)]
    return [
        (u, v)
        for u in range(n)
        for v in range(n)
        if lt[u][v] and not any(lt[u][w] and lt[w][v] for w in range(n))
    ]


def equivalent_pairs(p: Preorder) -> list[tuple[int, int]]:
    n = p.size
    return [(u, v) for u in range(n) for v in range(u + 1, n) if p.le(u, v) and p.le(v, u)]


def _quote(label) -> str:
    return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(space: FiniteSpace, name: str = "hasse") -> str:
    p = specialization_preorder(space)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for label in space.elements:
        lines.append(f"  {_quote(label)};")
    for u, v in hasse_edges(p):
        lines.append(f"  {_quote(space.elements[u])} -> {_quote(space.elements[v])};")
    for u, v in equivalent_pairs(p):
        lines.append(f"  {_quote(space.elements[u])} -> {_quote(space.elements[v])} [dir=both, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
