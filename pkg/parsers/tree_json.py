"""
JSON form of rooted trees.

A vertex is {"color": "black" | "white", "edges": [{"weight": w, "child": vertex}, ...]}
with edges in plane order; the root is black and colours alternate. The
single-vertex tree is {"color": null, "edges": []}.
"""
from typing import Any, Dict, Optional

from logic.dyck import WeightedDyckWord, render_text
from logic.errors import TreeError
from logic.tree import (
    Color, RootedTree, SINGLE_VERTEX, aut_order, canonical_code, from_dyck,
    passport, to_dyck, vertex_degrees, weight_distribution,
)


def tree_to_json(t: RootedTree) -> Dict[str, Any]:
    return {
        'color': t.color.value if t.color is not None else None,
        'edges': [{'weight': weight, 'child': tree_to_json(child)} for weight, child in t.branches],
    }


def _vertex_from_json(obj: Any, expected: Color, path: str) -> RootedTree:
    if not isinstance(obj, dict):
        raise TreeError(f"{path}: expected an object, got {type(obj).__name__}")
    color = obj.get('color')
    if color != expected.value:
        raise TreeError(f"{path}: expected colour {expected.value!r}, got {color!r}")
    edges = obj.get('edges', [])
    if not isinstance(edges, list):
        raise TreeError(f"{path}.edges: expected a list")
    branches = []
    for index, edge in enumerate(edges):
        where = f"{path}.edges[{index}]"
        if not isinstance(edge, dict) or 'child' not in edge:
            raise TreeError(f"{where}: expected an object with 'weight' and 'child'")
        weight = edge.get('weight')
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise TreeError(f"{where}.weight: expected a positive integer, got {weight!r}")
        branches.append((weight, _vertex_from_json(edge['child'], expected.swapped, f"{where}.child")))
    return RootedTree(expected, tuple(branches))


def tree_from_json(obj: Any) -> RootedTree:
    if isinstance(obj, dict) and 'tree' in obj:
        obj = obj['tree']
    if isinstance(obj, dict) and obj.get('color') is None and not obj.get('edges'):
        return SINGLE_VERTEX
    tree = _vertex_from_json(obj, Color.BLACK, "tree")
    if tree.is_trivial:
        raise TreeError("tree: a coloured root needs at least one edge")
    return tree


def decode_projection(w: WeightedDyckWord) -> Dict[str, Any]:
    """Everything `decode` reports about the tree of a word"""
    t = from_dyck(w)
    projection: Dict[str, Optional[Any]] = {
        'word': render_text(w),
        'n': w.weight,
        'm': w.edge_count,
        'passport': None,
        'degrees': None,
        'weight_distribution': None,
        'aut_order': None,
        'canonical_code': None,
    }
    if not t.is_trivial:
        p = passport(t)
        degrees = vertex_degrees(t)
        projection.update({
            'passport': {'black': list(p.alpha.parts), 'white': list(p.beta.parts)},
            'degrees': {'black': degrees[Color.BLACK], 'white': degrees[Color.WHITE]},
            'weight_distribution': list(weight_distribution(t).parts),
            'aut_order': aut_order(t),
            'canonical_code': render_text(canonical_code(t)),
        })
    projection['tree'] = tree_to_json(t)
    return projection


def encode_json(obj: Any) -> WeightedDyckWord:
    return to_dyck(tree_from_json(obj))
