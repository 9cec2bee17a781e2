"""Binary symplectic representation of stabilizer codes.

A code of length n and dimension k is a 2n x k full-rank GF(2) matrix S
whose columns are the generators, written as (z-part, x-part) vectors and
satisfying S^T P S = 0 for the symplectic form P = [[0, I], [I, 0]].
Generator phases are not represented; they do not affect the local
equivalence class, and the dense oracle fixes its own +1 convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ParseError
from .gf2 import GF2Matrix, stack_rows

_PAULI_TO_BITS = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}
_BITS_TO_PAULI = {v: k for k, v in _PAULI_TO_BITS.items()}


@dataclass(frozen=True)
class GeneratorMatrix:
    """A stabilizer code as its 2n x k binary generator matrix."""

    matrix: GF2Matrix

    def __post_init__(self):
        if self.matrix.rows % 2 != 0:
            raise ValueError("generator matrix must have an even number of rows")

    @property
    def n(self) -> int:
        return self.matrix.rows // 2

    @property
    def k(self) -> int:
        return self.matrix.cols

    @classmethod
    def from_dense(cls, array) -> "GeneratorMatrix":
        return cls(GF2Matrix.from_dense(array))

    @classmethod
    def from_pauli_strings(cls, strings) -> "GeneratorMatrix":
        """Build from k Pauli strings of uniform length n, e.g. ["XZ", "ZX"]."""
        strings = [s.strip().upper() for s in strings]
        if not strings:
            raise ValueError("need n from at least one Pauli string")
        n = len(strings[0])
        cols = []
        for s in strings:
            if len(s) != n:
                raise ValueError(f"Pauli string length mismatch: {s!r}")
            u = [0] * n
            v = [0] * n
            for i, ch in enumerate(s):
                if ch not in _PAULI_TO_BITS:
                    raise ValueError(f"bad Pauli letter {ch!r} in {s!r}")
                u[i], v[i] = _PAULI_TO_BITS[ch]
            cols.append(u + v)
        return cls.from_dense(np.array(cols, dtype=np.uint8).T)

    def pauli_strings(self) -> list[str]:
        dense = self.matrix.to_dense()
        n = self.n
        out = []
        for j in range(self.k):
            col = dense[:, j]
            out.append("".join(_BITS_TO_PAULI[(int(col[i]), int(col[n + i]))] for i in range(n)))
        return out

    def column(self, j: int) -> np.ndarray:
        return self.matrix.to_dense()[:, j]


def validate(gen: GeneratorMatrix) -> str | None:
    """Return None if valid, else the first violated property.

    Violations, checked in order: "bad-shape" (k > n), "not-full-rank",
    "not-self-orthogonal" (some pair of columns has symplectic product 1).
    """
    if gen.k > gen.n:
        return "bad-shape"
    if gen.matrix.rank() != gen.k:
        return "not-full-rank"
    p = _symplectic_form(gen.n)
    prod = gen.matrix.transpose() @ p @ gen.matrix
    if prod != GF2Matrix.zeros(gen.k, gen.k):
        return "not-self-orthogonal"
    return None


def _symplectic_form(n: int) -> GF2Matrix:
    dense = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    dense[:n, n:] = np.eye(n, dtype=np.uint8)
    dense[n:, :n] = np.eye(n, dtype=np.uint8)
    return GF2Matrix.from_dense(dense)


def symplectic_product(a, b) -> int:
    """a^T P b mod 2; zero exactly when the two Pauli operators commute."""
    a = np.asarray(a, dtype=np.int64) % 2
    b = np.asarray(b, dtype=np.int64) % 2
    if a.shape != b.shape or a.ndim != 1 or a.shape[0] % 2 != 0:
        raise ValueError("need two equal-length vectors of even length")
    n = a.shape[0] // 2
    return int(a[:n] @ b[n:] + a[n:] @ b[:n]) % 2


def qubit_subblock(gen: GeneratorMatrix, i: int) -> GF2Matrix:
    """Rows i and n+i of the generator matrix as a 2 x k block (1-based i)."""
    if not (1 <= i <= gen.n):
        raise IndexError(f"qubit index {i} out of range 1..{gen.n}")
    dense = gen.matrix.to_dense()
    return GF2Matrix.from_dense(dense[[i - 1, gen.n + i - 1], :])


def support(v) -> set[int]:
    """Qubits where the (z, x) coordinate pair of v is nonzero (1-based)."""
    v = np.asarray(v, dtype=np.uint8) % 2
    if v.ndim != 1 or v.shape[0] % 2 != 0:
        raise ValueError("need an even-length vector")
    n = v.shape[0] // 2
    return {i + 1 for i in range(n) if v[i] or v[n + i]}


def code_space(gen: GeneratorMatrix) -> np.ndarray:
    """All 2^k codewords as the rows of a (2^k, 2n) uint8 array."""
    dense = gen.matrix.to_dense()
    if gen.k == 0:
        return np.zeros((1, 2 * gen.n), dtype=np.uint8)
    coeffs = np.array(list(itertools.product((0, 1), repeat=gen.k)), dtype=np.uint8)
    return (coeffs @ dense.T) % 2


def restrict_to(gen: GeneratorMatrix, omega) -> GeneratorMatrix:
    """Generator matrix of the code traced down to the qubit subset omega.

    Solves for the coefficient space {x : S_j x = 0 for all j outside
    omega}, maps a basis through S, and drops the coordinate pairs outside
    omega.  S being full rank makes that map injective, so the result is a
    valid code on |omega| qubits.
    """
    omega = sorted(set(omega))
    if omega and not (1 <= omega[0] and omega[-1] <= gen.n):
        raise ValueError("omega must be a subset of 1..n")
    outside = [j for j in range(1, gen.n + 1) if j not in omega]
    if outside:
        constraints = stack_rows([qubit_subblock(gen, j) for j in outside])
    else:
        constraints = GF2Matrix.zeros(0, gen.k)
    basis = constraints.kernel_basis()  # k x d
    inside = (gen.matrix @ basis).to_dense()  # 2n x d
    rows = [i - 1 for i in omega] + [gen.n + i - 1 for i in omega]
    return GeneratorMatrix.from_dense(inside[rows, :] if rows else inside[:0, :])


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric zero-diagonal n x n matrix of a simple graph."""

    theta: GF2Matrix

    def __post_init__(self):
        t = self.theta
        if t.rows != t.cols:
            raise ValueError("adjacency matrix must be square")
        dense = t.to_dense()
        if np.any(dense != dense.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(dense)):
            raise ValueError("adjacency matrix must have a zero diagonal")

    @property
    def n(self) -> int:
        return self.theta.rows

    @classmethod
    def from_edges(cls, n: int, edges) -> "AdjacencyMatrix":
        dense = np.zeros((n, n), dtype=np.uint8)
        for a, b in edges:
            if a == b:
                raise ValueError("no loops in a simple graph")
            dense[a - 1, b - 1] = dense[b - 1, a - 1] = 1
        return cls(GF2Matrix.from_dense(dense))

    @classmethod
    def empty(cls, n: int) -> "AdjacencyMatrix":
        return cls(GF2Matrix.zeros(n, n))

    @classmethod
    def complete(cls, n: int) -> "AdjacencyMatrix":
        dense = np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8)
        return cls(GF2Matrix.from_dense(dense))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "AdjacencyMatrix":
        dense = np.zeros((n, n), dtype=np.uint8)
        for i in range(n):
            for j in range(i + 1, n):
                dense[i, j] = dense[j, i] = rng.integers(0, 2)
        return cls(GF2Matrix.from_dense(dense))


def all_graphs(n: int):
    """All 2^(n(n-1)/2) simple graphs on n vertices."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for mask in itertools.product((0, 1), repeat=len(pairs)):
        edges = [p for p, keep in zip(pairs, mask) if keep]
        yield AdjacencyMatrix.from_edges(n, edges)


def graph_generator(adj: AdjacencyMatrix) -> GeneratorMatrix:
    """The generator matrix [theta; I] of a graph state; always valid."""
    dense = np.vstack([adj.theta.to_dense(), np.eye(adj.n, dtype=np.uint8)])
    return GeneratorMatrix.from_dense(dense)


# The 6 invertible 2x2 matrices over GF(2), in a fixed order.
INVERTIBLE_2X2: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = tuple(
    sorted(
        ((a, b), (c, d))
        for a, b, c, d in itertools.product((0, 1), repeat=4)
        if (a * d + b * c) % 2 == 1
    )
)


@dataclass(frozen=True)
class LocalCliffordOp:
    """Per-qubit invertible 2x2 binary blocks, one per qubit."""

    blocks: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def __post_init__(self):
        for blk in self.blocks:
            if blk not in INVERTIBLE_2X2:
                raise ValueError(f"block {blk} is not invertible over GF(2)")

    @property
    def n(self) -> int:
        return len(self.blocks)

    @classmethod
    def identity(cls, n: int) -> "LocalCliffordOp":
        return cls((((1, 0), (0, 1)),) * n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "LocalCliffordOp":
        picks = rng.integers(0, len(INVERTIBLE_2X2), size=n)
        return cls(tuple(INVERTIBLE_2X2[int(p)] for p in picks))

    def inverse(self) -> "LocalCliffordOp":
        inv = []
        for (a, b), (c, d) in self.blocks:
            # adjugate equals inverse when the determinant is 1
            inv.append(((d, b), (c, a)))
        return LocalCliffordOp(tuple(inv))


def apply_local_clifford(op: LocalCliffordOp, gen: GeneratorMatrix) -> GeneratorMatrix:
    """Left-multiply by the block matrix with diagonal A, B, C, D parts.

    Row i (z-part) becomes a_i*z_i + b_i*x_i and row n+i becomes
    c_i*z_i + d_i*x_i; each invertible block preserves the per-qubit
    symplectic form, so validity is preserved.
    """
    if op.n != gen.n:
        raise ValueError("qubit count mismatch")
    dense = gen.matrix.to_dense()
    n = gen.n
    out = np.zeros_like(dense)
    for i in range(n):
        (a, b), (c, d) = op.blocks[i]
        out[i] = (a * dense[i] + b * dense[n + i]) % 2
        out[n + i] = (c * dense[i] + d * dense[n + i]) % 2
    return GeneratorMatrix.from_dense(out)


def permute_qubits(gen: GeneratorMatrix, perm) -> GeneratorMatrix:
    """Relabel qubits: qubit i of the result is qubit perm[i-1] of the input."""
    perm = list(perm)
    if sorted(perm) != list(range(1, gen.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    dense = gen.matrix.to_dense()
    rows = [p - 1 for p in perm] + [gen.n + p - 1 for p in perm]
    return GeneratorMatrix.from_dense(dense[rows, :])


def same_code_space(a: GeneratorMatrix, b: GeneratorMatrix) -> bool:
    """Column-space equality; codes are compared as spaces, not matrices."""
    if a.n != b.n:
        return False
    if a.k != b.k:
        return False
    joint = np.hstack([a.matrix.to_dense(), b.matrix.to_dense()])
    return GF2Matrix.from_dense(joint).rank() == a.matrix.rank()


def canonical_form(gen: GeneratorMatrix) -> GeneratorMatrix:
    """Reduced-echelon basis of the column space; a convenience normal form.

    Two generator matrices describe the same code exactly when their
    canonical forms are equal.
    """
    echelon, pivots = gen.matrix.transpose().reduced_echelon()
    dense = echelon.to_dense()
    return GeneratorMatrix.from_dense(dense[: len(pivots)].T)


def random_code(n: int, k: int, seed) -> GeneratorMatrix:
    """Deterministic random valid code: a local-Clifford image of the
    first k generators of a random graph code."""
    if not (0 <= k <= n):
        raise ValueError("need 0 <= k <= n")
    rng = np.random.default_rng(seed)
    adj = AdjacencyMatrix.random(n, rng)
    dense = graph_generator(adj).matrix.to_dense()[:, :k]
    gen = GeneratorMatrix.from_dense(dense)
    return apply_local_clifford(LocalCliffordOp.random(n, rng), gen)


# -- code files --------------------------------------------------------------
#
# Bits format:   header "n k", then 2n rows of k characters '0'/'1'.
# Pauli format:  header "pauli", then k Pauli strings of length n.


def parse_code(text: str, fmt: str = "auto") -> GeneratorMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty code file", line=1)
    header = lines[0]
    detected = "pauli" if header.lower() == "pauli" else "bits"
    if fmt != "auto" and fmt != detected:
        raise ParseError(f"expected {fmt} format but found {detected} header", line=1)
    if detected == "pauli":
        if len(lines) == 1:
            raise ParseError("pauli header with no generators", line=1)
        try:
            return GeneratorMatrix.from_pauli_strings(lines[1:])
        except ValueError as exc:
            raise ParseError(str(exc), line=2) from exc
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected header 'n k', got {header!r}", line=1)
    n, k = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != 2 * n:
        raise ParseError(f"expected {2 * n} bit rows, found {len(body)}", line=len(lines))
    rows = []
    for off, ln in enumerate(body):
        if len(ln) != k or set(ln) - {"0", "1"}:
            raise ParseError(f"expected {k} bits, got {ln!r}", line=off + 2)
        rows.append([int(ch) for ch in ln])
    dense = np.array(rows, dtype=np.uint8) if rows else np.zeros((0, k), dtype=np.uint8)
    dense = dense.reshape(2 * n, k)
    return GeneratorMatrix.from_dense(dense)


def format_code(gen: GeneratorMatrix, fmt: str = "bits") -> str:
    if fmt == "pauli":
        return "\n".join(["pauli"] + gen.pauli_strings()) + "\n"
    if fmt != "bits":
        raise ValueError(f"unknown format {fmt!r}")
    header = f"{gen.n} {gen.k}"
    body = gen.matrix.to_text()
    return header + ("\n" + body if body else "") + "\n"
