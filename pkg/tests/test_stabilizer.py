"""Tests for generator matrices, supports, restriction, and the local
Clifford action."""

import itertools

import numpy as np
import pytest

from stabinv import oracle
from stabinv.errors import ParseError
from stabinv.gf2 import GF2Matrix
from stabinv.stabilizer import (
    INVERTIBLE_2X2,
    AdjacencyMatrix,
    GeneratorMatrix,
    LocalCliffordOp,
    all_graphs,
    apply_local_clifford,
    canonical_form,
    code_space,
    format_code,
    graph_generator,
    parse_code,
    permute_qubits,
    qubit_subblock,
    random_code,
    restrict_to,
    same_code_space,
    support,
    symplectic_product,
    validate,
)

EDGE2 = graph_generator(AdjacencyMatrix.from_edges(2, [(1, 2)]))


def test_graph_generators_validate():
    rng = np.random.default_rng(1)
    for n in range(1, 6):
        adj = AdjacencyMatrix.random(n, rng)
        assert validate(graph_generator(adj)) is None


def test_duplicate_columns_not_full_rank():
    col = [0, 1, 1, 0]
    gen = GeneratorMatrix.from_dense(np.array([col, col]).T)
    assert validate(gen) == "not-full-rank"


def test_anticommuting_pair_not_self_orthogonal():
    # X on qubit 1 and Z on qubit 1 of a 2-qubit system
    x1 = [0, 0, 1, 0]
    z1 = [1, 0, 0, 0]
    assert symplectic_product(x1, z1) == 1
    gen = GeneratorMatrix.from_dense(np.array([x1, z1]).T)
    assert validate(gen) == "not-self-orthogonal"


def test_too_many_generators_bad_shape():
    gen = GeneratorMatrix.from_dense(np.eye(2, dtype=np.uint8))  # n=1, k=2
    assert validate(gen) == "bad-shape"


def test_symplectic_self_product_zero():
    rng = np.random.default_rng(2)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        a = rng.integers(0, 2, 2 * n)
        assert symplectic_product(a, a) == 0


def test_symplectic_single_qubit_anticommute():
    assert symplectic_product([1, 0], [0, 1]) == 1


def test_symplectic_two_qubit_example():
    assert symplectic_product([1, 0, 0, 1], [0, 1, 1, 0]) == 0


def test_symplectic_matches_dense_commutator():
    rng = np.random.default_rng(3)
    for _ in range(30):
        n = int(rng.integers(1, 4))
        a = rng.integers(0, 2, 2 * n)
        b = rng.integers(0, 2, 2 * n)
        pa = oracle.pauli_from_vector(a)
        pb = oracle.pauli_from_vector(b)
        commute = (pa @ pb).same_as(pb @ pa)
        assert commute == (symplectic_product(a, b) == 0)


def test_qubit_subblock_graph_structure():
    adj = AdjacencyMatrix.from_edges(3, [(1, 2), (2, 3)])
    gen = graph_generator(adj)
    theta = adj.theta.to_dense()
    for j in range(1, 4):
        block = qubit_subblock(gen, j).to_dense()
        assert np.array_equal(block[0], theta[j - 1])
        expected = np.zeros(3, dtype=np.uint8)
        expected[j - 1] = 1
        assert np.array_equal(block[1], expected)


def test_qubit_subblock_trivial_code():
    gen = GeneratorMatrix(GF2Matrix.zeros(4, 0))
    block = qubit_subblock(gen, 2)
    assert (block.rows, block.cols) == (2, 0)


def test_qubit_subblock_single_qubit():
    gen = GeneratorMatrix.from_dense([[0], [1]])
    assert qubit_subblock(gen, 1).to_dense().tolist() == [[0], [1]]
    with pytest.raises(IndexError):
        qubit_subblock(gen, 2)


def test_support_examples():
    assert support([0, 0, 0, 0]) == set()
    assert support([1, 0, 1, 0]) == {1}  # pairs (1,1) and (0,0)
    assert support([0, 1]) == {1}


def test_restrict_full_set_keeps_space():
    rng = np.random.default_rng(5)
    for trial in range(10):
        n = int(rng.integers(1, 5))
        k = int(rng.integers(0, n + 1))
        gen = random_code(n, k, (trial, n, k))
        out = restrict_to(gen, range(1, n + 1))
        assert same_code_space(out, gen)


def test_restrict_empty_set():
    out = restrict_to(EDGE2, set())
    assert (out.n, out.k) == (0, 0)


def test_restrict_entangled_edge():
    out = restrict_to(EDGE2, {1})
    assert (out.n, out.k) == (1, 0)


def test_restrict_matches_filtered_enumeration():
    rng = np.random.default_rng(6)
    for trial in range(15):
        n = int(rng.integers(1, 5))
        k = int(rng.integers(0, n + 1))
        gen = random_code(n, k, (trial, 99))
        for size in range(n + 1):
            for omega in itertools.combinations(range(1, n + 1), size):
                out = restrict_to(gen, omega)
                assert validate(out) is None
                keep = [i - 1 for i in omega] + [n + i - 1 for i in omega]
                filtered = {
                    word[keep].tobytes()
                    for word in code_space(gen)
                    if support(word) <= set(omega)
                }
                restricted = {word.tobytes() for word in code_space(out)}
                assert filtered == restricted


def test_graph_generator_examples():
    single = graph_generator(AdjacencyMatrix.empty(1))
    assert single.matrix.to_dense().tolist() == [[0], [1]]
    pair = graph_generator(AdjacencyMatrix.complete(2))
    assert pair.matrix.to_dense().tolist() == [[0, 1], [1, 0], [1, 0], [0, 1]]
    triple = graph_generator(AdjacencyMatrix.empty(3))
    assert np.array_equal(triple.matrix.to_dense()[3:], np.eye(3, dtype=np.uint8))


def test_adjacency_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        AdjacencyMatrix(GF2Matrix.from_dense([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        AdjacencyMatrix(GF2Matrix.from_dense([[1, 0], [0, 0]]))


def test_six_invertible_blocks():
    assert len(INVERTIBLE_2X2) == 6


def test_identity_clifford_fixes_code():
    op = LocalCliffordOp.identity(2)
    assert apply_local_clifford(op, EDGE2).matrix == EDGE2.matrix


def test_swap_block_exchanges_roles():
    gen = GeneratorMatrix.from_dense([[0], [1]])  # X generator
    op = LocalCliffordOp((((0, 1), (1, 0)),))
    out = apply_local_clifford(op, gen)
    assert out.matrix.to_dense().tolist() == [[1], [0]]  # now Z


def test_clifford_preserves_validity():
    rng = np.random.default_rng(7)
    for trial in range(25):
        n = int(rng.integers(1, 5))
        k = int(rng.integers(0, n + 1))
        gen = random_code(n, k, (trial, 3))
        op = LocalCliffordOp.random(n, rng)
        out = apply_local_clifford(op, gen)
        assert (out.n, out.k) == (gen.n, gen.k)
        assert validate(out) is None


def test_clifford_inverse_restores_space():
    rng = np.random.default_rng(8)
    for trial in range(25):
        n = int(rng.integers(1, 5))
        gen = random_code(n, int(rng.integers(0, n + 1)), (trial, 4))
        op = LocalCliffordOp.random(n, rng)
        back = apply_local_clifford(op.inverse(), apply_local_clifford(op, gen))
        assert same_code_space(back, gen)


def test_full_rank_column_subsets_validate():
    rng = np.random.default_rng(9)
    for trial in range(20):
        n = int(rng.integers(1, 5))
        gen = random_code(n, n, (trial, 5))
        dense = gen.matrix.to_dense()
        for size in range(n + 1):
            for pick in itertools.combinations(range(n), size):
                sub = GeneratorMatrix.from_dense(dense[:, list(pick)])
                if sub.matrix.rank() == sub.k:
                    assert validate(sub) is None


def test_random_code_deterministic():
    a = random_code(4, 2, 123)
    b = random_code(4, 2, 123)
    assert a.matrix == b.matrix
    assert random_code(4, 2, 124).matrix != a.matrix


def test_random_code_trivial_and_full():
    empty = random_code(3, 0, 0)
    assert (empty.n, empty.k) == (3, 0)
    assert validate(empty) is None
    full = random_code(3, 3, 0)
    assert (full.n, full.k) == (3, 3)
    assert validate(full) is None


def test_permute_qubits_roundtrip():
    gen = random_code(4, 3, 42)
    perm = (3, 1, 4, 2)
    inverse = tuple(perm.index(i) + 1 for i in range(1, 5))
    back = permute_qubits(permute_qubits(gen, perm), inverse)
    assert back.matrix == gen.matrix


def test_canonical_form_identifies_spaces():
    rng = np.random.default_rng(10)
    gen = random_code(4, 3, 77)
    # right-multiply by an invertible change of basis: same column space
    while True:
        basis = GF2Matrix.random(3, 3, rng)
        if basis.rank() == 3:
            break
    other = GeneratorMatrix(gen.matrix @ basis)
    assert same_code_space(gen, other)
    assert canonical_form(gen).matrix == canonical_form(other).matrix


def test_pauli_string_roundtrip():
    gen = GeneratorMatrix.from_pauli_strings(["XZ", "ZY"])
    assert gen.pauli_strings() == ["XZ", "ZY"]
    assert (gen.n, gen.k) == (2, 2)
    with pytest.raises(ValueError):
        GeneratorMatrix.from_pauli_strings(["XQ"])


def test_code_file_roundtrip_bits():
    text = format_code(EDGE2, "bits")
    back = parse_code(text)
    assert back.matrix == EDGE2.matrix


def test_code_file_roundtrip_pauli():
    text = format_code(EDGE2, "pauli")
    back = parse_code(text)
    assert same_code_space(back, EDGE2)


def test_parse_code_errors():
    with pytest.raises(ParseError):
        parse_code("")
    with pytest.raises(ParseError):
        parse_code("2 2\n01\n10\n")  # truncated body
    with pytest.raises(ParseError):
        parse_code("2 2\n01\n10\n1x\n01\n")
    with pytest.raises(ParseError):
        parse_code("pauli\nXZ\n", fmt="bits")


def test_all_graphs_count():
    assert len(list(all_graphs(3))) == 8
    assert len(list(all_graphs(1))) == 1
