import random

import pytest

from gf2lie import gf2
from gf2lie.cohomology import (Cochain2, CochainError, coboundary_of, compute_h2, d1, d2,
                               h2_weight_table, is_coboundary, parse_cocycle)
from gf2lie.constructions import build_hI, build_hamiltonian, build_tensor_example
from gf2lie.liealg import AlgebraError


HP = build_hamiltonian(1, (2, 2), "derived")


def test_d1_of_identity_is_bracket():
    # three terms collapse to one copy of the bracket in characteristic 2
    images = [1 << i for i in range(HP.dim)]
    c = d1(HP, images)
    T = HP.pair_table()
    for (i, j), v in c.terms.items():
        assert v == T[i * HP.dim + j]
    assert any(c.terms.values())


def test_d1_of_ad_is_zero():
    # inner derivations are 1-cocycles: d1(ad_z) = 0 is the Jacobi identity
    for z in range(0, HP.dim, 5):
        images = HP.ad_rows(1 << z)
        assert not d1(HP, images)
    assert not d1(HP, [0] * HP.dim)


def test_d2_after_d1_vanishes():
    rng = random.Random(0)
    for _ in range(100):
        images = [rng.getrandbits(HP.dim) for _ in range(HP.dim)]
        assert not d2(d1(HP, images))


def test_random_cochain_usually_not_cocycle():
    rng = random.Random(1)
    hits = 0
    for _ in range(20):
        terms = {}
        for _ in range(6):
            i, j = sorted(rng.sample(range(HP.dim), 2))
            terms[(i, j)] = rng.getrandbits(HP.dim)
        if d2(Cochain2(HP, terms)):
            hits += 1
    assert hits >= 18


def test_compute_h2_blocks_gh21():
    table = {(4, -2): 1, (0, -4): 1, (2, 0): 1, (0, -2): 1, (-2, -2): 1}
    for w, want in table.items():
        blk = compute_h2(HP, weight_filter=w, mode="z")
        assert blk.dim == want, w
        for c in blk.representatives:
            assert not d2(c)
            assert not is_coboundary(c)
            assert c.weight("z") == w


def test_full_h2_gh21_golden():
    full = compute_h2(HP)
    assert full.dims == (185, 176, 9)  # golden: 5 printed weights + 4 mirrors
    tab = h2_weight_table(HP, "z")
    assert {w: b.dim for w, b in tab.items()} == {
        (4, -2): 1, (-2, 4): 1, (0, -4): 1, (-4, 0): 1, (2, 0): 1, (0, 2): 1,
        (0, -2): 1, (-2, 0): 1, (-2, -2): 1}


def test_weight_filtered_agrees_with_full():
    # weight additivity: the filtered block equals the block of the full table
    tab = h2_weight_table(HP, "z")
    total = sum(b.dim for b in tab.values())
    assert total == compute_h2(HP).dims[2]


def test_budget_guard():
    big = build_hamiltonian(1, (3, 2), "derived")
    with pytest.raises(AlgebraError):
        compute_h2(big, budget=1000)


def test_tensor_example_cocycle():
    ex = build_tensor_example()
    c = Cochain2(ex, {(1, 3): 1 << 2})  # e10 (x) d(e01)^d(e11)
    assert not d2(c)
    assert not is_coboundary(c)
    blk = compute_h2(ex)
    assert blk.dim >= 1


def test_coboundary_of_roundtrip():
    rng = random.Random(2)
    images = [rng.getrandbits(HP.dim) for _ in range(HP.dim)]
    cb = d1(HP, images)
    sol = coboundary_of(cb)
    assert sol is not None
    assert d1(HP, sol).terms == cb.terms


def test_parser_roundtrip_and_errors():
    text = "p^(3) (x) d(q)^d(q^(2)) + p^(3) q (x) d(q)^d(q^(3))"
    c = parse_cocycle(text, HP)
    assert parse_cocycle(c.text(), HP) == c
    assert parse_cocycle("", HP).terms == {}
    with pytest.raises(CochainError):
        parse_cocycle("p^(9) (x) d(q)^d(q)", HP)  # exponent range + repeated differential
    with pytest.raises(CochainError):
        parse_cocycle("p (x) d(q)^d(z)", HP)  # unknown generating function
    with pytest.raises(CochainError):
        parse_cocycle("p (x) d(q)", HP)  # odd arity
    with pytest.raises(CochainError):
        # the constant is not a basis function of h'
        parse_cocycle("1 (x) d(p)^d(q)", HP)


def test_hI_block_13_classes():
    hi = build_hI(2, (2, 2))
    blk = compute_h2(hi, weight_filter=(0, 0), mode="mod2")
    assert blk.dims == (63, 50, 13)
    degrees = {}
    for d in (-4, -2, 0, 2, 6):
        sub = compute_h2(hi, constraints=[("mod2", (0, 0)), ("outer", (d,))])
        degrees[d] = sub.dim
    assert degrees == {-4: 3, -2: 4, 0: 1, 2: 4, 6: 1}
