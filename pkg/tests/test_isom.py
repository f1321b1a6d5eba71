from gf2lie.constructions import (build_classical, build_div_free_hI, build_jurman,
                                  build_kap1, build_kap2, build_kap3, build_kap4A,
                                  build_kap4B, build_poisson)
from gf2lie.isom import fingerprint, search_isomorphism
from gf2lie.liealg import Algebra, direct_sum, verify_morphism
from gf2lie.fields import GF2


def test_self_isomorphism():
    j = build_jurman(2, 1)
    r = search_isomorphism(j, j)
    assert r.kind == "iso"
    assert verify_morphism(r.map, "isomorphism")


def test_distinguished_by_solvability():
    # Kap_{4,B}(2) has a 3-dim simple quotient; po_Pi(2;1_s) is solvable
    k = build_kap4B(2)
    po = build_poisson(1, (1, 1))
    r = search_isomorphism(k, po)
    assert r.kind == "distinguished"
    fk, fp = fingerprint(k), fingerprint(po)
    assert fk["derived_dims"] != fp["derived_dims"]


def test_kaplansky_identifications():
    o3 = build_classical("oPi", 3, "derived")
    assert search_isomorphism(build_kap4A(2, 1), o3).kind == "iso"
    assert search_isomorphism(build_kap4A(4, 0), direct_sum(o3, o3)).kind == "iso"
    o5 = build_classical("oPi", 5, "derived")
    assert search_isomorphism(build_kap4A(4, 1), o5).kind == "iso"
    assert search_isomorphism(o5, build_kap3(5)).kind == "iso"


def test_torus_engine_kap1():
    kap1 = build_kap1(4)
    lhp = build_div_free_hI(4, (1, 1, 1, 1), "derived")
    r = search_isomorphism(kap1, lhp)
    assert r.kind == "iso" and r.engine == "torus"


def test_found_maps_reverify():
    pairs = [(build_kap4A(4, 1), build_kap3(5)),
             (build_kap1(4), build_div_free_hI(4, (1, 1, 1, 1), "derived"))]
    for a, b in pairs:
        r = search_isomorphism(a, b)
        assert r.kind == "iso"
        assert verify_morphism(r.map, "isomorphism")
        fa, fb = fingerprint(a), fingerprint(b)
        assert fa == fb  # fingerprint equality is necessary


def test_dim_mismatch_distinguished():
    r = search_isomorphism(build_kap2(4), build_kap2(6))
    assert r.kind == "distinguished"
