import pytest

from gf2lie import gf2
from gf2lie.constructions import QuadraticFormSpec, build_kap2, build_kap4A
from gf2lie.liealg import AlgebraError
from gf2lie.superize import (equivalence_of_superizations, nonlinear_reduction_check,
                             parity_nonlinearity_witness, restricted_closure,
                             seven_families, superize_linear, superize_nonlinear)


def test_closure_dims_and_axioms():
    for m in (1, 2):
        clo = restricted_closure(build_kap2(2 * m))
        assert clo.dim == (1 << (2 * m)) - 1 + 2 * m
        assert clo.algebra.validate().ok
        assert clo.check_restricted()


def test_closure_squaring_values():
    # e_u^[2] evaluated on v gives B(u, v)
    clo = restricted_closure(build_kap2(4))
    B = clo.B
    base = clo.base.dim
    for i, u in enumerate(clo.gamma):
        sq = clo.squaring[i]
        for t in range(clo.n):
            assert ((sq >> (base + t)) & 1) == B.pair(u, 1 << t)
    # [e_u^[2], e_v] = B(u,v) e_v = [e_u, [e_u, e_v]]
    g = clo.algebra
    for i in range(len(clo.gamma)):
        for j in range(len(clo.gamma)):
            lhs = g.bracket(clo.squaring[i], 1 << j)
            rhs = g.bracket(1 << i, g.bracket(1 << i, 1 << j))
            assert lhs == rhs


def test_closure_needs_jsystem():
    from gf2lie.constructions import build_classical
    with pytest.raises(AlgebraError):
        restricted_closure(build_classical("gl", 2))


def test_kap40_2_closure_excluded():
    with pytest.raises(AlgebraError):
        restricted_closure(build_kap4A(2, 0))


def test_linear_superization_axioms():
    clo = restricted_closure(build_kap2(4))
    for v in (1, 2, 5):
        s = superize_linear(clo, v)
        ok, msg = s.check_super_axioms()
        assert ok, msg
        assert s.even_subspace().is_subalgebra()
    with pytest.raises(AlgebraError):
        superize_linear(clo, 0)


def test_nonlinear_superization_structure():
    clo = restricted_closure(build_kap2(4))
    Q = QuadraticFormSpec.standard(2, 0)
    s = superize_nonlinear(clo, Q)
    assert (s.even_dim, s.odd_dim) == (6 + 4, 9)
    ok, msg = s.check_super_axioms()
    assert ok, msg
    assert parity_nonlinearity_witness(s) is not None
    # even part = Kap_{4,0}(4) + V* is bracket-closed
    assert s.even_subspace().is_subalgebra()


def test_nonlinear_needs_kap2_closure():
    clo = restricted_closure(build_kap4A(4, 1))
    with pytest.raises(AlgebraError):
        superize_nonlinear(clo, QuadraticFormSpec.standard(2, 1))


def test_seven_families_m2_axioms():
    fams = seven_families(2)
    assert len(fams) == 7
    for name, s in fams.items():
        ok, msg = s.check_super_axioms()
        assert ok, (name, msg)


def test_exceptional_m1_superization():
    fams = seven_families(1)
    assert "oo'_II(1|2)" in {s.name for s in fams.values()}


def test_linear_superizations_of_kap2_all_equivalent():
    clo = restricted_closure(build_kap2(4))
    s1 = superize_linear(clo, 1)
    for v in range(2, 16):
        r = equivalence_of_superizations(s1, superize_linear(clo, v))
        assert r.kind == "equivalent", v
    # self-equivalence via the identity
    r = equivalence_of_superizations(s1, s1)
    assert r.kind == "equivalent"


def test_kap4_superizations_split_by_q_value():
    base = build_kap4A(4, 1)
    clo = restricted_closure(base)
    Q = base.meta["quadratic_form"]
    vs = {0: [], 1: []}
    for v in range(1, 16):
        vs[Q.value(v)].append(v)
    same = equivalence_of_superizations(superize_linear(clo, vs[1][0]),
                                        superize_linear(clo, vs[1][1]), quadratic=Q)
    assert same.kind == "equivalent"
    cross = equivalence_of_superizations(superize_linear(clo, vs[0][0]),
                                         superize_linear(clo, vs[1][0]), quadratic=Q)
    assert cross.kind == "exhausted-no-map"


def test_nonlinear_reduction():
    Q0 = QuadraticFormSpec.standard(2, 0)
    Q1 = QuadraticFormSpec.standard(2, 1)
    rep = nonlinear_reduction_check(2, Q0, Q1)
    assert rep["additive"] and rep["matches_linear"]
    trivial = nonlinear_reduction_check(2, Q0, Q0)
    assert trivial["trivial"]
