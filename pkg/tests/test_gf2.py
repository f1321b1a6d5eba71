import random

from gf2lie import gf2


def test_rref_and_rank():
    rows = [0b101, 0b011, 0b110]
    red, piv = gf2.rref(rows)
    assert gf2.rank(rows) == 2
    assert len(red) == 2
    # pivots distinct, each pivot occurs in exactly one row
    for r, p in zip(red, piv):
        assert (r >> p) & 1
        assert sum(((r2 >> p) & 1) for r2 in red) == 1


def test_span_membership():
    s = gf2.Span([0b1100, 0b0110])
    assert 0b1010 in s
    assert 0b1000 not in s
    assert not s.add(0b1010)
    assert s.add(0b0001)
    assert s.dim == 3


def test_kernel():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randrange(2, 10)
        rows = [rng.getrandbits(n) for _ in range(rng.randrange(1, 6))]
        ker = gf2.kernel(rows, n)
        assert len(ker) == n - gf2.rank(rows)
        for x in ker:
            assert all(gf2.dot(r, x) == 0 for r in rows)


def test_solve():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randrange(1, 9)
        rows = [rng.getrandbits(n) for _ in range(rng.randrange(1, 9))]
        x0 = rng.getrandbits(n)
        rhs = [gf2.dot(r, x0) for r in rows]
        x = gf2.solve(rows, rhs, n)
        assert x is not None
        assert all(gf2.dot(r, x) == b for r, b in zip(rows, rhs))
    # inconsistent system
    assert gf2.solve([0b01, 0b01], [0, 1], 2) is None


def test_invert_and_compose():
    rng = random.Random(2)
    n = 7
    for _ in range(30):
        rows = [rng.getrandbits(n) for _ in range(n)]
        inv = gf2.invert(rows, n)
        if gf2.rank(rows) < n:
            assert inv is None
            continue
        both = gf2.compose(rows, inv)
        assert both == [1 << i for i in range(n)]


def test_combination_kernel():
    images = [0b101, 0b011, 0b110, 0b000]
    ker = gf2.combination_kernel(images, 3)
    # 0b110 = xor of the first two; the zero image is a kernel vector
    assert len(ker) == 2
    for mask in ker:
        acc = 0
        for i in gf2.bits(mask):
            acc ^= images[i]
        assert acc == 0


def test_tagged_span_solve():
    span = gf2.TaggedSpan(4)
    vals = [0b1001, 0b0011, 0b0110]
    for v in vals:
        span.add(v)
    t = vals[0] ^ vals[2]
    sol = span.solve(t)
    assert sol is not None
    acc = 0
    for i in gf2.bits(sol):
        acc ^= vals[i]
    assert acc == t
    assert span.solve(0b1000) is None
