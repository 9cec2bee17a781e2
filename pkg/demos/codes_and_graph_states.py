#!/usr/bin/env python3
"""Stabilizer codes in the binary symplectic picture.

A code is a 2n x k full-rank matrix over GF(2) whose columns pairwise
commute under the symplectic product; graph states are the special case
[theta; I] for an adjacency matrix theta.
"""

import numpy as np

from stabinv.stabilizer import (
    AdjacencyMatrix,
    LocalCliffordOp,
    apply_local_clifford,
    code_space,
    format_code,
    graph_generator,
    random_code,
    restrict_to,
    same_code_space,
    support,
    symplectic_product,
    validate,
)

# A Bell-pair-like graph code: two vertices joined by an edge.
edge = AdjacencyMatrix.from_edges(2, [(1, 2)])
gen = graph_generator(edge)
print("generator matrix (columns = generators):")
print(gen.matrix.to_text())
print("as Pauli strings:", gen.pauli_strings())
print("validates:", validate(gen) is None)

# The symplectic product detects (anti)commutation: X and Z on the same
# qubit anticommute.
print("X1 vs Z1:", symplectic_product([0, 1], [1, 0]))

# Codewords and supports.
for word in code_space(gen):
    print("codeword", word, "support", support(word))

# Tracing down to qubit 1 leaves nothing: the pair is entangled, so the
# one-qubit reduction is maximally mixed (a dimension-0 code).
reduced = restrict_to(gen, {1})
print("restricted to {1}: n =", reduced.n, " k =", reduced.k)

# Local Clifford operations act per qubit by invertible 2x2 blocks and
# never change validity or the invariants.
rng = np.random.default_rng(1)
op = LocalCliffordOp.random(2, rng)
moved = apply_local_clifford(op, gen)
print("after a random local Clifford:", moved.pauli_strings())
back = apply_local_clifford(op.inverse(), moved)
print("inverse restores the code space:", same_code_space(back, gen))

# Seeded random codes for experiments; k = 0 is the trivial code.
sample = random_code(3, 2, seed=7)
print("random [[3, 2]] code:\n" + format_code(sample), end="")
print("reproducible:", random_code(3, 2, seed=7).matrix == sample.matrix)
