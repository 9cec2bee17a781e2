"""Canonically labelled ordered binary trees and their right-path data.

Nodes carry the labels 1..r assigned by the traversal root, left subtree,
right subtree, so a tree's structure determines its labelling.  The
serialized form is a balanced-parenthesis string with 'L'/'R' child
markers, e.g. "(L()R(R()))"; all trees on r nodes serialize to the same
length, which makes lexicographic ordering unambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .gf2 import GF2Matrix


@dataclass(frozen=True)
class BinaryTree:
    """Ordered binary tree on r nodes labelled in preorder.

    ``left[i-1]`` / ``right[i-1]`` hold the label of node i's left/right
    son, or 0 when absent.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.left)

    def left_son(self, v: int) -> int:
        return self.left[v - 1]

    def right_son(self, v: int) -> int:
        return self.right[v - 1]

    def __repr__(self) -> str:
        return f"BinaryTree({serialize(self)!r})"


def serialize(tree: BinaryTree) -> str:
    def rec(v: int) -> str:
        out = "("
        if tree.left[v - 1]:
            out += "L" + rec(tree.left[v - 1])
        if tree.right[v - 1]:
            out += "R" + rec(tree.right[v - 1])
        return out + ")"

    return rec(1)


def parse(text: str) -> BinaryTree:
    """Inverse of :func:`serialize`; labels are re-derived from preorder."""
    text = text.strip()
    left: list[int] = []
    right: list[int] = []
    pos = 0

    def fail(msg: str):
        raise ValueError(f"bad tree at position {pos}: {msg} in {text!r}")

    def rec() -> int:
        nonlocal pos
        if pos >= len(text) or text[pos] != "(":
            fail("expected '('")
        pos += 1
        label = len(left) + 1
        left.append(0)
        right.append(0)
        if pos < len(text) and text[pos] == "L":
            pos += 1
            left[label - 1] = rec()
        if pos < len(text) and text[pos] == "R":
            pos += 1
            right[label - 1] = rec()
        if pos >= len(text) or text[pos] != ")":
            fail("expected ')'")
        pos += 1
        return label

    rec()
    if pos != len(text):
        fail("trailing characters")
    return BinaryTree(tuple(left), tuple(right))


def is_canonical(tree: BinaryTree) -> bool:
    """Check that labels 1..r coincide with the preorder traversal."""
    r = tree.r
    seen = []

    def visit(v: int):
        seen.append(v)
        if tree.left[v - 1]:
            visit(tree.left[v - 1])
        if tree.right[v - 1]:
            visit(tree.right[v - 1])

    children = [c for c in tree.left + tree.right if c]
    if len(set(children)) != len(children):
        return False
    roots = set(range(1, r + 1)) - set(children)
    if roots != {1}:
        return False
    visit(1)
    return seen == list(range(1, r + 1))


def catalan(r: int) -> int:
    return math.comb(2 * r, r) // (r + 1)


@lru_cache(maxsize=None)
def _shapes(m: int):
    """All tree shapes on m nodes as nested (left, right) pairs."""
    if m == 0:
        return (None,)
    out = []
    for nl in range(m):
        for ls in _shapes(nl):
            for rs in _shapes(m - 1 - nl):
                out.append((ls, rs))
    return tuple(out)


def _label_shape(shape) -> BinaryTree:
    left: list[int] = []
    right: list[int] = []

    def rec(node) -> int:
        label = len(left) + 1
        left.append(0)
        right.append(0)
        ls, rs = node
        if ls is not None:
            left[label - 1] = rec(ls)
        if rs is not None:
            right[label - 1] = rec(rs)
        return label

    rec(shape)
    return BinaryTree(tuple(left), tuple(right))


@lru_cache(maxsize=None)
def enumerate_trees(r: int) -> tuple[BinaryTree, ...]:
    """All binary trees on r nodes, sorted by their serialized form.

    The count is the r-th Catalan number.
    """
    if r < 1:
        raise ValueError("need at least one node")
    trees = [_label_shape(s) for s in _shapes(r)]
    trees.sort(key=serialize)
    return tuple(trees)


def left_chain(r: int) -> BinaryTree:
    """The tree whose r right paths are all singletons (identity permutation)."""
    left = tuple(v + 1 if v < r else 0 for v in range(1, r + 1))
    return BinaryTree(left, (0,) * r)


def right_chain(r: int) -> BinaryTree:
    """The tree with a single right path (1, 2, ..., r)."""
    right = tuple(v + 1 if v < r else 0 for v in range(1, r + 1))
    return BinaryTree((0,) * r, right)


@dataclass(frozen=True)
class RightPathDecomposition:
    """The maximal right paths of a tree, ordered by their start nodes.

    Each path (v0, ..., vs) satisfies: v0 is nobody's right son, each
    later node is the right son of its predecessor, and vs has no right
    son.  The paths partition {1, ..., r}.
    """

    paths: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.paths)

    def starts(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.paths)

    def finishes(self) -> tuple[int, ...]:
        return tuple(p[-1] for p in self.paths)

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.paths)

    def path_of(self, node: int) -> tuple[int, ...]:
        for p in self.paths:
            if node in p:
                return p
        raise ValueError(f"node {node} not covered")


def maximal_right_paths(tree: BinaryTree) -> RightPathDecomposition:
    right_sons = {c for c in tree.right if c}
    paths = []
    for start in range(1, tree.r + 1):
        if start in right_sons:
            continue
        path = [start]
        while tree.right[path[-1] - 1]:
            path.append(tree.right[path[-1] - 1])
        paths.append(tuple(path))
    return RightPathDecomposition(tuple(paths))


def permutation_of(tree: BinaryTree) -> tuple[int, ...]:
    """The permutation given by the product of right-path cycles.

    Returned as an image array: entry i-1 is the image of node i.  Within
    a path (v0, ..., vs) the cycle maps v0 -> v1 -> ... -> vs -> v0.
    """
    image = [0] * tree.r
    for p in maximal_right_paths(tree).paths:
        for a, b in zip(p, p[1:]):
            image[a - 1] = b
        image[p[-1] - 1] = p[0]
    return tuple(image)


def cycle_form(image: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Cycle presentation of an image array, smallest start first."""
    seen: set[int] = set()
    cycles = []
    for v in range(1, len(image) + 1):
        if v in seen:
            continue
        cyc = [v]
        seen.add(v)
        w = image[v - 1]
        while w != v:
            cyc.append(w)
            seen.add(w)
            w = image[w - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def r_matrix(tree: BinaryTree) -> GF2Matrix:
    """r x t path-indicator matrix: column j marks the nodes of path j."""
    decomp = maximal_right_paths(tree)
    dense = [[0] * decomp.t for _ in range(tree.r)]
    for j, p in enumerate(decomp.paths):
        for v in p:
            dense[v - 1][j] = 1
    return GF2Matrix.from_dense(dense)


def d_matrix(tree: BinaryTree) -> GF2Matrix:
    """r x r prefix matrix: column j marks nodes i <= j on j's right path."""
    decomp = maximal_right_paths(tree)
    dense = [[0] * tree.r for _ in range(tree.r)]
    for j in range(1, tree.r + 1):
        for v in decomp.path_of(j):
            if v <= j:
                dense[v - 1][j - 1] = 1
    return GF2Matrix.from_dense(dense)


def v_space_dimension(tree: BinaryTree) -> int:
    """Dimension of the null space of the transposed path-indicator matrix.

    The t indicator columns have disjoint nonzero supports, so the rank is
    t and the null-space dimension is r - t.
    """
    return tree.r - maximal_right_paths(tree).t


def singleton_path_nodes(tree: BinaryTree) -> set[int]:
    """Nodes that form a one-node maximal right path."""
    right_sons = {c for c in tree.right if c}
    return {v for v in range(1, tree.r + 1) if v not in right_sons and not tree.right[v - 1]}


def delete_singleton(tree: BinaryTree, node: int) -> BinaryTree:
    """Remove a node that is a one-node right path, relabelling by shift.

    The node's left subtree (if any) takes its place, which preserves
    both preorder labelling and every other maximal right path.
    """
    if node not in singleton_path_nodes(tree):
        raise ValueError(f"node {node} is not a singleton right path")
    if tree.r == 1:
        raise ValueError("cannot delete the only node")

    def shift(v: int) -> int:
        return v - 1 if v > node else v

    promoted = tree.left[node - 1]
    left = []
    right = []
    for v in range(1, tree.r + 1):
        if v == node:
            continue
        lson = tree.left[v - 1]
        if lson == node:
            lson = promoted
        left.append(shift(lson) if lson else 0)
        rson = tree.right[v - 1]
        right.append(shift(rson) if rson else 0)
    return BinaryTree(tuple(left), tuple(right))


def attach_singleton_root(tree: BinaryTree) -> BinaryTree:
    """Add a new root whose left subtree is the old tree.

    The new node has no right son and is nobody's right son, so it forms a
    fresh one-node right path labelled 1; old labels shift up by one.
    """
    left = [2] + [v + 1 if v else 0 for v in tree.left]
    right = [0] + [v + 1 if v else 0 for v in tree.right]
    return BinaryTree(tuple(left), tuple(right))
