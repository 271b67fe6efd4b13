"""
Rooted weighted bicolored plane trees and their unrooted classes.

A RootedTree is a vertex with a colour and an ordered tuple of branches
(edge weight, subtree). The root is the black end of the root edge and the
root edge is its first branch. For a non-root vertex the branches are listed
in the order they follow the edge to the parent.

Automorphism orders come from re-rooting: a tree with m edges has m rootings
and m / |Aut(T)| of them are distinct.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .dyck import WeightedDyckWord, decompose, down, enumerate_words, up
from .errors import InvariantViolation, TreeError
from .partition import Partition, Passport, make_partition

logger = logging.getLogger(__name__)


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def swapped(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


@dataclass(frozen=True)
class RootedTree:
    color: Optional[Color]
    branches: Tuple[Tuple[int, "RootedTree"], ...] = ()

    @property
    def is_trivial(self) -> bool:
        """The single-vertex tree, which carries no colour"""
        return not self.branches

    @property
    def edge_count(self) -> int:
        return sum(1 + child.edge_count for _, child in self.branches)

    @property
    def weight(self) -> int:
        return sum(weight + child.weight for weight, child in self.branches)


SINGLE_VERTEX = RootedTree(None, ())


def _vertex_from_word(w: WeightedDyckWord, color: Color) -> RootedTree:
    branches = []
    rest = w
    while not rest.is_empty:
        weight, u, rest = decompose(rest)
        branches.append((weight, _vertex_from_word(u, color.swapped)))
    return RootedTree(color, tuple(branches))


def from_dyck(w: WeightedDyckWord) -> RootedTree:
    if w.is_empty:
        return SINGLE_VERTEX
    return _vertex_from_word(w, Color.BLACK)


def to_dyck(t: RootedTree) -> WeightedDyckWord:
    tokens = []
    _append_tokens(t, tokens)
    return WeightedDyckWord(tuple(tokens))


def _append_tokens(t: RootedTree, tokens: list) -> None:
    for weight, child in t.branches:
        tokens.append(up(weight))
        _append_tokens(child, tokens)
        tokens.append(down(weight))


def _require_edges(t: RootedTree, operation: str) -> None:
    if t.is_trivial:
        raise TreeError(f"{operation} is undefined for the single-vertex tree")


def _degrees(t: RootedTree, parent_weight: int, out: Dict[Color, List[int]]) -> None:
    out[t.color].append(parent_weight + sum(weight for weight, _ in t.branches))
    for weight, child in t.branches:
        _degrees(child, weight, out)


def vertex_degrees(t: RootedTree) -> Dict[Color, List[int]]:
    _require_edges(t, "vertex_degrees")
    degrees: Dict[Color, List[int]] = {Color.BLACK: [], Color.WHITE: []}
    _degrees(t, 0, degrees)
    return degrees


def passport(t: RootedTree) -> Passport:
    """Black degrees and white degrees, each sorted decreasingly"""
    degrees = vertex_degrees(t)
    return Passport(make_partition(degrees[Color.BLACK]), make_partition(degrees[Color.WHITE]))


def _edge_weights(t: RootedTree) -> Iterator[int]:
    for weight, child in t.branches:
        yield weight
        yield from _edge_weights(child)


def weight_distribution(t: RootedTree) -> Partition:
    _require_edges(t, "weight_distribution")
    return make_partition(_edge_weights(t))


def swap_colors(t: RootedTree) -> RootedTree:
    """
    Exchange black and white. The plane orientation is kept; the new root is
    the former white end of the root edge.
    """
    _require_edges(t, "swap_colors")
    embedding = PlaneEmbedding.from_tree(t)
    black, white, _ = embedding.edges[0]
    return from_dyck(embedding.code_from(white, black))


class PlaneEmbedding:
    """
    The unrooted plane tree behind a RootedTree: vertex colours plus the
    cyclic order of (neighbour, weight) around each vertex.
    """

    def __init__(self):
        self.colors: List[Color] = []
        self.rotation: List[List[Tuple[int, int]]] = []
        # (black end, white end, weight) in the order the edges are first met
        self.edges: List[Tuple[int, int, int]] = []

    @classmethod
    def from_tree(cls, t: RootedTree) -> "PlaneEmbedding":
        _require_edges(t, "PlaneEmbedding")
        embedding = cls()
        embedding._add_vertex(t, None, 0)
        return embedding

    def _add_vertex(self, t: RootedTree, parent: Optional[int], parent_weight: int) -> int:
        vertex = len(self.colors)
        self.colors.append(t.color)
        self.rotation.append([])
        if parent is not None:
            self.rotation[vertex].append((parent, parent_weight))
        for weight, child in t.branches:
            edge_index = len(self.edges)
            self.edges.append((-1, -1, weight))
            child_vertex = self._add_vertex(child, vertex, weight)
            self.rotation[vertex].append((child_vertex, weight))
            if t.color is Color.BLACK:
                self.edges[edge_index] = (vertex, child_vertex, weight)
            else:
                self.edges[edge_index] = (child_vertex, vertex, weight)
        return vertex

    def _branches_after(self, vertex: int, previous: int) -> List[Tuple[int, int]]:
        ring = self.rotation[vertex]
        start = next(index for index, (neighbour, _) in enumerate(ring) if neighbour == previous)
        return ring[start + 1:] + ring[:start]

    def code_from(self, root: int, first: int) -> WeightedDyckWord:
        """Word of the tree rooted at edge (root, first), root edge listed first"""
        tokens = []
        ring = self.rotation[root]
        start = next(index for index, (neighbour, _) in enumerate(ring) if neighbour == first)
        for neighbour, weight in ring[start:] + ring[:start]:
            tokens.append(up(weight))
            self._append_subtree(neighbour, root, tokens)
            tokens.append(down(weight))
        return WeightedDyckWord(tuple(tokens))

    def _append_subtree(self, vertex: int, parent: int, tokens: list) -> None:
        for neighbour, weight in self._branches_after(vertex, parent):
            tokens.append(up(weight))
            self._append_subtree(neighbour, vertex, tokens)
            tokens.append(down(weight))

    def rooted_codes(self, swapped: bool = False) -> List[WeightedDyckWord]:
        """One code per edge, oriented black to white (white to black if swapped)"""
        if swapped:
            return [self.code_from(white, black) for black, white, _ in self.edges]
        return [self.code_from(black, white) for black, white, _ in self.edges]


def reroot_all(t: RootedTree) -> List[WeightedDyckWord]:
    return PlaneEmbedding.from_tree(t).rooted_codes()


def _orbit_order(m: int, codes: List[WeightedDyckWord]) -> int:
    distinct = len(set(codes))
    if m % distinct != 0:
        raise InvariantViolation(f"{distinct} distinct rootings do not divide {m} edges")
    return m // distinct


def aut_order(t: RootedTree) -> int:
    """Order of the colour-preserving automorphism group"""
    codes = reroot_all(t)
    return _orbit_order(len(codes), codes)


def canonical_code(t: RootedTree) -> WeightedDyckWord:
    return min(reroot_all(t), key=lambda code: code.sort_key)


@dataclass(frozen=True)
class UnrootedClass:
    canonical_code: WeightedDyckWord
    aut_order: int
    edge_count: int
    weight: int
    self_dual: bool = False

    @property
    def rootings(self) -> int:
        return self.edge_count // self.aut_order

    @property
    def mass(self) -> Fraction:
        return Fraction(1, self.aut_order)


def classify(code: WeightedDyckWord) -> Tuple[UnrootedClass, List[WeightedDyckWord]]:
    embedding = PlaneEmbedding.from_tree(from_dyck(code))
    codes = embedding.rooted_codes()
    canonical = min(codes, key=lambda c: c.sort_key)
    swapped_canonical = min(embedding.rooted_codes(swapped=True), key=lambda c: c.sort_key)
    unrooted = UnrootedClass(
        canonical_code=canonical,
        aut_order=_orbit_order(len(codes), codes),
        edge_count=code.edge_count,
        weight=code.weight,
        self_dual=swapped_canonical == canonical,
    )
    return unrooted, codes


def unrooted_census(n: int, shards: int = 1) -> List[UnrootedClass]:
    """
    Group the rooted trees of weight n into unrooted classes.

    The rooted stream is split round-robin into `shards` parts. The shards
    are processed in turn in this process, each building its own class map,
    and the maps are merged in shard order; the result does not depend on
    the number of shards. Classes are returned sorted by canonical
    code.
    """
    if n < 1:
        raise TreeError(f"The unrooted census needs weight >= 1, got {n}")
    if shards < 1:
        raise ValueError(f"shards must be positive, got {shards}")

    shard_maps: List[Dict[WeightedDyckWord, UnrootedClass]] = [{} for _ in range(shards)]
    seen: List[Dict[WeightedDyckWord, WeightedDyckWord]] = [{} for _ in range(shards)]
    for index, word in enumerate(enumerate_words(n)):
        shard = index % shards
        if word in seen[shard]:
            continue
        unrooted, codes = classify(word)
        for code in codes:
            seen[shard][code] = unrooted.canonical_code
        shard_maps[shard][unrooted.canonical_code] = unrooted

    merged: Dict[WeightedDyckWord, UnrootedClass] = {}
    for shard_map in shard_maps:
        merged.update(shard_map)
    classes = sorted(merged.values(), key=lambda c: c.canonical_code.sort_key)
    logger.debug("Weight %d: %d unrooted classes", n, len(classes))
    return classes


def census_mass(classes: List[UnrootedClass]) -> Fraction:
    return sum((c.mass for c in classes), Fraction(0))


def symmetry_profile(classes: List[UnrootedClass]) -> Dict[int, int]:
    """Number of classes per automorphism order"""
    return dict(sorted(Counter(c.aut_order for c in classes).items()))


def color_exchange_summary(n: int) -> Tuple[int, int, int]:
    """(unrooted classes, self-dual classes, classes up to colour exchange)"""
    classes = unrooted_census(n)
    self_dual = sum(1 for c in classes if c.self_dual)
    return len(classes), self_dual, self_dual + (len(classes) - self_dual) // 2
