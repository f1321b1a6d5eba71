import random

import pytest

from gf2lie.fields import (
    DEFAULT_MODULUS, GF2, FieldError, GF2k, PolyRing, Scalar,
    field_make, poly2_irreducible, poly_coeffs, poly_eval, scalar_sqrt,
)


def test_gf2_basics():
    assert GF2.add(1, 1) == 0
    one = GF2.one
    assert (one + one).value == 0
    assert GF2.mul(1, 1) == 1


def test_unique_irreducible_quadratic():
    # x^2 + x + 1 is the only irreducible quadratic over GF(2)
    f = field_make("gf2k:2:0b111")
    assert f.order == 4
    with pytest.raises(FieldError):
        GF2k(2, 0b101)  # x^2 + 1 = (x+1)^2


def test_default_moduli_all_irreducible():
    for k, m in DEFAULT_MODULUS.items():
        assert poly2_irreducible(m), "k=%d" % k
        GF2k(k)  # constructor re-checks


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8])
def test_inverse_exhaustive(k):
    f = GF2k(k)
    for a in range(1, f.order):
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8])
def test_frobenius_bijection_and_sqrt(k):
    f = GF2k(k)
    squares = sorted(f.mul(a, a) for a in range(f.order))
    assert squares == list(range(f.order))  # Frobenius is onto
    for a in range(f.order):
        assert f.sqrt(f.mul(a, a)) == a


def test_sqrt_examples():
    f = GF2k(2)
    t = f.gen()
    assert scalar_sqrt(f.one) == f.one
    assert scalar_sqrt(f.zero) == f.zero
    # exhaustive over the 4 elements: sqrt(t) = t^2 since (t^2)^2 = t^4 = t
    assert scalar_sqrt(t) == t * t
    for a in range(4):
        s = f.sqrt(a)
        assert f.mul(s, s) == a


def test_sqrt_rejected_in_poly_ring():
    R = PolyRing()
    with pytest.raises(FieldError):
        scalar_sqrt(R.gen())


def test_poly_eval():
    R = PolyRing()
    h = R.gen()
    p = h * h + h  # h^2 + h
    one = GF2.one
    assert poly_eval(p, one).value == 0
    assert poly_eval(R.one, one).value == 1
    f4 = GF2k(2)
    t = f4.gen()
    assert poly_eval(h, t) == t
    assert poly_coeffs(p) == [0, 1, 1]


def test_poly_eval_is_ring_hom():
    R = PolyRing()
    f4 = GF2k(2)
    rng = random.Random(0)
    for _ in range(50):
        p = Scalar(R, rng.getrandbits(6))
        q = Scalar(R, rng.getrandbits(6))
        at = Scalar(f4, rng.randrange(4))
        assert poly_eval(p + q, at) == poly_eval(p, at) + poly_eval(q, at)
        assert poly_eval(p * q, at) == poly_eval(p, at) * poly_eval(q, at)


def test_no_inverse_of_zero():
    with pytest.raises(FieldError):
        GF2.inv(0)


def test_field_make_specs():
    assert field_make("gf2") is GF2
    assert field_make("gf4").order == 4
    assert field_make("gf2k:3").order == 8
    assert isinstance(field_make("poly"), PolyRing)
    with pytest.raises(FieldError):
        field_make("whatever")
