import pytest

from gf2lie.constructions import build_hamiltonian, build_jurman
from gf2lie.grading import associated_graded, cochain_weight, weisfeiler_filtration
from gf2lie.liealg import Algebra, AlgebraError, LinearMap, Subspace, verify_morphism
from gf2lie.fields import GF2


def jurman_L0(j):
    idx = [i for i, lbl in enumerate(j.labels) if not lbl.startswith("Y-1")]
    return Subspace(j, [1 << i for i in idx])


def test_weisfeiler_jurman_21():
    j = build_jurman(2, 1)
    f = weisfeiler_filtration(j, jurman_L0(j))
    assert f.l0_maximal
    assert f.depth == 1
    assert f.layer_dims() == [14, 12, 9, 5, 2]
    assert f.codims() == [2, 3, 4, 3, 2]
    assert f.check_compatible()


def test_weisfeiler_rejects_non_subalgebra():
    j = build_jurman(2, 1)
    # [Y_{-1}(0), Y_0(1)] = Y_{-1}(1), outside the span of the two
    a = j.labels.index("Y-1(0)")
    b = j.labels.index("Y0(1)")
    sub = Subspace(j, [1 << a, 1 << b])
    assert not sub.is_subalgebra()
    with pytest.raises(AlgebraError):
        weisfeiler_filtration(j, sub)


def test_abelian_filtration_stabilizes():
    ab = Algebra(GF2, ["a", "b", "c"], {})
    sub = Subspace(ab, [1, 2])
    with pytest.raises(AlgebraError):
        # an abelian algebra never exhausts: L_{-1} = module closure = L0 + v,
        # then [L-1, L-1] adds nothing and the chain cannot reach the top
        weisfeiler_filtration(ab, sub)


def test_gr_of_graded_algebra_is_itself():
    # filter h' by its own total grading: gr must reproduce the algebra
    hp = build_hamiltonian(1, (2, 2), "derived")
    tot = [sum(w) for w in hp.grading]
    los = [i for i, d in enumerate(tot) if d >= 0]
    f = weisfeiler_filtration(hp, Subspace(hp, [1 << i for i in los]))
    gr = associated_graded(f)
    assert gr.validate().ok
    ident = LinearMap(gr, hp, [1 << hp.labels.index(l) for l in gr.labels])
    assert verify_morphism(ident, "isomorphism")


@pytest.mark.parametrize("g,h", [(2, 1), (3, 1), (2, 2)])
def test_gr_jurman_is_hamiltonian(g, h):
    j = build_jurman(g, h)
    f = weisfeiler_filtration(j, jurman_L0(j))
    gr = associated_graded(f)
    assert gr.validate().ok
    hp = build_hamiltonian(1, (g, h + 1), "derived")
    eta = (1 << g) - 1
    mono_idx = {m: k for k, m in enumerate(hp.meta["mono_degrees"])}
    images = []
    for lbl in gr.labels:
        i_str, s_str = lbl[1:].split("(")
        i, s = int(i_str), int(s_str[:-1])
        a, beta = divmod(i + 1 + s, eta + 1)
        images.append(1 << mono_idx[(beta, 2 * a + 1 - s)])
    assert verify_morphism(LinearMap(gr, hp, images), "isomorphism")
    # dimension is preserved layerwise
    assert sum(f.codims()) == j.dim
    # maximal divided-power degrees: N(p) = g, N(q) = h+1
    assert max(m[0] for m in hp.meta["mono_degrees"]) == (1 << g) - 1
    assert max(m[1] for m in hp.meta["mono_degrees"]) == (1 << (h + 1)) - 1


def test_cochain_weight_modes():
    from gf2lie.cohomology import parse_cocycle
    hp = build_hamiltonian(1, (2, 2), "derived")
    c = parse_cocycle("p^(3) (x) d(q)^d(q^(2))", hp)
    assert cochain_weight(c, "z") == (4, -2)
    assert cochain_weight(c, "mod2") == (1, 1)
    assert cochain_weight(c, "outer") == (3 - 1 - 2 + 2,)
    zero = parse_cocycle("", hp)
    assert cochain_weight(zero, "z") == (0, 0)


def test_cochain_weight_nonhomogeneous_errors():
    from gf2lie.cohomology import parse_cocycle
    hp = build_hamiltonian(1, (2, 2), "derived")
    c = parse_cocycle("p^(3) (x) d(q)^d(q^(2)) + q^(3) (x) d(p)^d(p^(2))", hp)
    with pytest.raises(AlgebraError):
        cochain_weight(c, "z")
