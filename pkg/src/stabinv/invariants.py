"""Binary-side invariant engines.

The degree-r invariant attached to a code and an n-tuple of binary trees
is the GF(2) kernel dimension of a stacked Kronecker matrix: block i is
(path matrix of tree i)^T tensor (2 x k qubit subblock i).  Equivalently
it counts, on a log scale, the r-tuples of codewords whose per-path sums
are supported inside the path's allowed qubit set.  Both routes are
implemented; the second doubles as an enumeration cross-check.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from . import trees as trees_mod
from .errors import BudgetError
from .gf2 import GF2Matrix, kron, stack_rows
from .stabilizer import GeneratorMatrix, qubit_subblock
from .trees import (
    BinaryTree,
    attach_singleton_root,
    catalan,
    delete_singleton,
    enumerate_trees,
    left_chain,
    maximal_right_paths,
    r_matrix,
    right_chain,
    serialize,
    singleton_path_nodes,
)

DEFAULT_MAX_ENUM = 2**16
DEFAULT_MAX_RECORDS = 200_000
MAX_GLOBAL_QUBITS = 8


@dataclass(frozen=True)
class TreeTuple:
    """One binary tree per qubit, all on the same number of nodes."""

    trees: tuple[BinaryTree, ...]

    def __post_init__(self):
        if not self.trees:
            raise ValueError("need at least one tree")
        degrees = {t.r for t in self.trees}
        if len(degrees) != 1:
            raise ValueError(f"trees have mixed node counts {sorted(degrees)}")

    @property
    def n(self) -> int:
        return len(self.trees)

    @property
    def r(self) -> int:
        return self.trees[0].r

    def id(self) -> str:
        return ";".join(serialize(t) for t in self.trees)

    def __repr__(self) -> str:
        return f"TreeTuple({self.id()!r})"


def parse_tuple(text: str) -> TreeTuple:
    parts = [p for p in text.strip().split(";") if p]
    return TreeTuple(tuple(trees_mod.parse(p) for p in parts))


def uniform_tuple(tree: BinaryTree, n: int) -> TreeTuple:
    return TreeTuple((tree,) * n)


def identity_tuple(n: int, r: int) -> TreeTuple:
    """All trees a left chain: every node its own right path."""
    return uniform_tuple(left_chain(r), n)


def degree2_tuple(n: int, omega) -> TreeTuple:
    """The degree-2 tuple encoding a qubit subset: the two-node tree with a
    right son at positions in the subset, a left son elsewhere."""
    omega = set(omega)
    if omega and not omega <= set(range(1, n + 1)):
        raise ValueError("omega must be a subset of 1..n")
    return TreeTuple(
        tuple(right_chain(2) if i in omega else left_chain(2) for i in range(1, n + 1))
    )


def all_tuples(n: int, r: int):
    """All tree tuples in canonical (per-qubit lexicographic) order."""
    return (TreeTuple(combo) for combo in itertools.product(enumerate_trees(r), repeat=n))


def invariant_matrix(gen: GeneratorMatrix, tup: TreeTuple) -> GF2Matrix:
    """The stacked Kronecker matrix whose kernel dimension is the invariant.

    Block i is (r x t_i path matrix)^T kron (2 x k subblock of qubit i);
    the stack has 2*(sum of t_i) rows and r*k columns.
    """
    if tup.n != gen.n:
        raise ValueError(f"tuple is for {tup.n} qubits, code has {gen.n}")
    blocks = [
        kron(r_matrix(tree).transpose(), qubit_subblock(gen, i))
        for i, tree in enumerate(tup.trees, start=1)
    ]
    return stack_rows(blocks)


def invariant_dim(gen: GeneratorMatrix, tup: TreeTuple) -> int:
    """Kernel dimension of the stacked Kronecker matrix."""
    return invariant_matrix(gen, tup).kernel_dimension()


def degree2_dim(gen: GeneratorMatrix, omega) -> int:
    """Dimension of the codeword subspace supported inside omega.

    Computed by rank, as the kernel dimension of the stacked qubit
    subblocks outside omega; agrees with the degree-2 invariant for the
    tuple encoding omega.
    """
    omega = set(omega)
    if omega and not omega <= set(range(1, gen.n + 1)):
        raise ValueError("omega must be a subset of 1..n")
    outside = [j for j in range(1, gen.n + 1) if j not in omega]
    if not outside:
        return gen.k
    return stack_rows([qubit_subblock(gen, j) for j in outside]).kernel_dimension()


def _union_paths(tup: TreeTuple) -> list[tuple[tuple[int, ...], set[int]]]:
    """Distinct right paths across the tuple, each with the qubit set on
    which its codeword sum may be supported (qubits whose tree lacks it)."""
    path_sets = [set(maximal_right_paths(t).paths) for t in tup.trees]
    union = sorted(set().union(*path_sets))
    return [
        (p, {i for i in range(1, tup.n + 1) if p not in path_sets[i - 1]})
        for p in union
    ]


def theorem2_dim(
    gen: GeneratorMatrix, tup: TreeTuple, max_points: int = DEFAULT_MAX_ENUM
) -> int:
    """Invariant dimension by direct enumeration of codeword r-tuples.

    Counts tuples (y1, ..., yr) of codewords such that for every right
    path p in the union over the trees, the support of sum(y_j, j in p)
    lies inside p's allowed qubit set.  The count is always a power of 2;
    returns its log2.  Intended as an independent cross-check at small
    r*k.
    """
    if tup.n != gen.n:
        raise ValueError(f"tuple is for {tup.n} qubits, code has {gen.n}")
    r, k, n = tup.r, gen.k, gen.n
    points = 1 << (r * k)
    if points > max_points:
        raise BudgetError(f"enumeration of 2^{r * k} tuples exceeds budget {max_points}")

    # codewords indexed by coefficient vectors
    dense = gen.matrix.to_dense()
    if k == 0:
        words = np.zeros((1, 2 * n), dtype=np.uint8)
    else:
        coeffs = np.array(list(itertools.product((0, 1), repeat=k)), dtype=np.uint8)
        words = (coeffs @ dense.T) % 2

    idx = np.arange(points, dtype=np.int64)
    digit_shift = k * np.arange(r - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] >> digit_shift[None, :]) & ((1 << k) - 1)

    ok = np.ones(points, dtype=bool)
    for path, allowed in _union_paths(tup):
        total = np.zeros((points, 2 * n), dtype=np.uint8)
        for j in path:
            total ^= words[digits[:, j - 1]]
        for q in range(1, n + 1):
            if q not in allowed:
                ok &= (total[:, q - 1] == 0) & (total[:, n + q - 1] == 0)
    count = int(ok.sum())
    assert count & (count - 1) == 0, "solution set must be a linear space"
    return count.bit_length() - 1


def reduce_singleton(tup: TreeTuple) -> TreeTuple | None:
    """Drop a node that forms a one-node right path in every tree.

    Returns the degree r-1 tuple, or None when no common singleton path
    exists.  The invariant dimension is unchanged by this reduction.
    """
    if tup.r < 2:
        raise ValueError("need degree at least 2 to reduce")
    common = set.intersection(*(singleton_path_nodes(t) for t in tup.trees))
    if not common:
        return None
    node = min(common)
    return TreeTuple(tuple(delete_singleton(t, node) for t in tup.trees))


def pad_degree(tup: TreeTuple) -> TreeTuple:
    """Append a fresh one-node right path to every tree (degree r+1).

    The new node becomes the root with the old tree as its left subtree,
    so reduce_singleton inverts this exactly and the invariant dimension
    is unchanged.
    """
    return TreeTuple(tuple(attach_singleton_root(t) for t in tup.trees))


@dataclass(frozen=True)
class InvariantRecord:
    r: int
    tuple_id: str
    dim: int


@dataclass(frozen=True)
class Fingerprint:
    """All invariant dimensions of one code for degrees 2..r_max."""

    n: int
    r_max: int
    records: tuple[InvariantRecord, ...]

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "r_max": self.r_max,
            "records": [
                {"r": rec.r, "tuple": rec.tuple_id, "dim": rec.dim} for rec in self.records
            ],
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Fingerprint":
        payload = json.loads(text)
        records = tuple(
            InvariantRecord(rec["r"], rec["tuple"], rec["dim"]) for rec in payload["records"]
        )
        return cls(payload["n"], payload["r_max"], records)


def record_count(n: int, r_max: int) -> int:
    return sum(catalan(r) ** n for r in range(2, r_max + 1))


def fingerprint(
    gen: GeneratorMatrix, r_max: int, max_records: int = DEFAULT_MAX_RECORDS
) -> Fingerprint:
    """Invariant dimensions for every tree tuple of degree 2..r_max,
    in canonical order."""
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    total = record_count(gen.n, r_max)
    if total > max_records:
        raise BudgetError(f"{total} records exceed budget {max_records}")
    records = []
    for r in range(2, r_max + 1):
        for tup in all_tuples(gen.n, r):
            records.append(InvariantRecord(r, tup.id(), invariant_dim(gen, tup)))
    return Fingerprint(gen.n, r_max, tuple(records))


def compare(f1: Fingerprint, f2: Fingerprint):
    """None if equal; otherwise the first differing pair of records."""
    if f1.n != f2.n or f1.r_max != f2.r_max:
        raise ValueError("fingerprints cover different ranges")
    for a, b in zip(f1.records, f2.records):
        if a != b:
            return (a, b)
    return None


def compare_global(
    gen1: GeneratorMatrix,
    gen2: GeneratorMatrix,
    r_max: int,
    max_records: int = DEFAULT_MAX_RECORDS,
):
    """Search for a qubit relabelling of the second code matching all records.

    Returns the first permutation (as a tuple p with new qubit i taking
    old qubit p[i-1]) whose fingerprint matches, or None if every
    permutation is distinguished.  Matching fingerprints make the codes
    equivalence candidates; they are not a proof of equivalence.
    """
    if gen1.n != gen2.n:
        raise ValueError("codes have different lengths")
    n = gen1.n
    if n > MAX_GLOBAL_QUBITS:
        raise BudgetError(f"global comparison limited to {MAX_GLOBAL_QUBITS} qubits")
    f1 = fingerprint(gen1, r_max, max_records)
    dims2 = {}
    for r in range(2, r_max + 1):
        for tup in all_tuples(n, r):
            sers = tuple(serialize(t) for t in tup.trees)
            dims2[(r, sers)] = invariant_dim(gen2, tup)
    by_key = {}
    for rec in f1.records:
        sers = tuple(rec.tuple_id.split(";"))
        by_key[(rec.r, sers)] = rec.dim
    for perm in itertools.permutations(range(n)):
        # perm maps record positions of the first code onto tree slots of
        # the second; it is the inverse of the qubit relabelling searched.
        if all(
            dim == dims2[(r, tuple(sers[perm[j]] for j in range(n)))]
            for (r, sers), dim in by_key.items()
        ):
            relabel = [0] * n
            for j, pj in enumerate(perm):
                relabel[pj] = j + 1
            return tuple(relabel)
    return None
