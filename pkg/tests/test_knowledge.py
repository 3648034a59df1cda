import numpy as np
import pytest

from gaptour.knowledge import M, S, Knowledge, build_knowledge, ks_move
from gaptour.sat import SatInstance, complement, evaluate


def test_fresh_structure():
    K = Knowledge(3)
    assert K.header(S) == (8, 1) and K.header(M) == (0, 0)
    assert K.forward(S) == list(range(8))
    assert K.backward(S) == list(range(7, -1, -1))
    assert K.check()


def test_paper_move_sequence():
    K = Knowledge(3)
    ks_move(K, 0b011, S, M)
    assert K.header(S) == (8, 1) and K.header(M) == (4, 4)
    assert K.links(M, 0b011) == (4, 4)
    assert K.links(S, 0b011) == (0, 0)
    assert K.links(S, 0b010) == (2, 5) and K.links(S, 0b100) == (3, 6)

    ks_move(K, 0b001, S, M)
    assert K.header(S) == (8, 1) and K.header(M) == (4, 2)
    assert K.links(M, 0b001) == (4, 4) and K.links(M, 0b011) == (2, 2)
    assert K.links(S, 0b000) == (8, 3) and K.links(S, 0b010) == (1, 5)

    ks_move(K, 0b000, S, M)
    assert K.header(S) == (8, 3) and K.header(M) == (4, 1)
    assert K.links(M, 0b000) == (4, 2)
    assert K.links(M, 0b001) == (1, 4)
    assert K.links(M, 0b011) == (2, 1)
    assert K.links(S, 0b010) == (8, 5) and K.links(S, 0b111) == (7, 3)
    K.check()


def test_table_rows_mark_empty_slots():
    K = Knowledge(2)
    ks_move(K, 2, S, M)
    rows = K.table(S)
    assert rows[2] == (3, "- - -", 0, 0)
    assert K.table(M)[2] == (3, "10", 3, 3)


def test_move_errors():
    K = Knowledge(2)
    with pytest.raises(ValueError):
        K.move(1, M, S)
    with pytest.raises(ValueError):
        K.move(1, S, S)
    with pytest.raises(ValueError):
        K.move(4, S, M)


def test_emptying_a_list():
    K = Knowledge(1)
    K.move(0, S, M)
    K.move(1, S, M)
    assert K.header(S) == (0, 0) and K.forward(S) == []
    K.move(0, M, S)
    assert K.forward(S) == [0] and K.header(S) == (1, 1)
    K.check()


def test_random_moves_small():
    rng = np.random.default_rng(0)
    K = Knowledge(4)
    where = {v: S for v in range(16)}
    for _ in range(2000):
        v = int(rng.integers(16))
        src = where[v]
        K.move(v, src, 1 - src)
        where[v] = 1 - src
    K.check()
    assert K.members(M) == {v for v, l in where.items() if l == M}


def test_build_knowledge_paper():
    K = build_knowledge(SatInstance(6, ("000000", "000001", "111110", "011011")))
    assert 0 in K.Y
    assert K.Y <= K.members(M)
    K.check()


def test_build_knowledge_full_coverage():
    K = build_knowledge(SatInstance.from_numbers(2, [0, 1, 2, 3]))
    assert K.counts[S] == 0 and K.Y == set()


@pytest.mark.parametrize("seed", range(30))
def test_build_knowledge_invariants(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    inst = SatInstance.from_numbers(n, rng.integers(0, 2**n, int(rng.integers(1, 2**n + 1))).tolist())
    K = build_knowledge(inst)
    K.check()
    free, blocked = K.members(S), K.members(M)
    assert free | blocked == set(range(2**n)) and K.Y <= blocked
    assert all(evaluate(inst, y) == 1 for y in K.Y)
    # values left free evaluate to 1, except complements of solutions found in Y,
    # which the construction never removes
    ybar = {complement(y, n) for y in K.Y}
    for s in free - ybar:
        assert evaluate(inst, s) == 1
    for s in free & ybar:
        assert evaluate(inst, s) == 0
