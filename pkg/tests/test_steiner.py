import pytest
from hypothesis import given, settings, strategies as st

from chromsurf.complex import classify_closed_manifold, euler_characteristic
from chromsurf.gf2d import eval_permutation_polynomial, frobenius, make_field
from chromsurf.perm import Permutation
from chromsurf.steiner import (BadOrderError, DomainMismatchError, OddSOrientableError, PairDoubleCoveredError,
                               PairUncoveredError, affine_sts, bose, bose_transversal, cyclic_sts, is_transversal,
                               projective_sts, quasigroup_of, steiner_euler, steiner_surface, sts_from_triples)
from chromsurf.library import FANO_TRIPLES

from oracles import xor_triples


def test_fano():
    S = sts_from_triples(FANO_TRIPLES)
    assert S.n == 7 and len(S.triples) == 7
    assert quasigroup_of(S).check_axioms()


def test_errors():
    with pytest.raises(BadOrderError):
        sts_from_triples([(1, 2, 3)], 5)
    with pytest.raises(PairUncoveredError):
        sts_from_triples(list(FANO_TRIPLES)[:-1], 7)
    with pytest.raises(PairDoubleCoveredError):
        sts_from_triples(list(FANO_TRIPLES)[:-1] + [(1, 2, 4)], 7)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_projective_matches_xor_oracle(d):
    assert set(projective_sts(make_field(d)).triples) == set(xor_triples(d))


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
def test_bose_is_sts(s):
    S = bose(s)
    assert S.n == 6 * s + 3 and len(S.triples) == S.n * (S.n - 1) // 6


def test_other_families():
    assert affine_sts(2).n == 9 and len(affine_sts(2).triples) == 12
    assert cyclic_sts(13, [(0, 1, 4), (0, 2, 7)]).n == 13


@pytest.mark.parametrize("s", [2, 4])
def test_bose_orientable_transversal(s):
    mu = quasigroup_of(bose(s))
    rep = is_transversal(mu, bose_transversal(s, "orientable"))
    assert rep.is_transversal and rep.orientable
    K = steiner_surface(mu, bose_transversal(s, "orientable"))
    assert euler_characteristic(K) == steiner_euler(mu.n)
    assert classify_closed_manifold(K).orientable


@pytest.mark.parametrize("s", [1, 2, 3])
def test_bose_nonorientable_transversal(s):
    mu = quasigroup_of(bose(s))
    rep = is_transversal(mu, bose_transversal(s, "nonorientable"))
    assert rep.is_transversal and rep.orientable is False


def test_odd_s_orientable_refused():
    with pytest.raises(OddSOrientableError):
        bose_transversal(3, "orientable")


@pytest.mark.parametrize("j", [0, 1, 2, 3])
def test_additive_maps_are_not_transversal(j):
    # an additive bijection maps the XOR system to itself, so triangles coincide
    F = make_field(4)
    mu = quasigroup_of(projective_sts(F))
    assert not is_transversal(mu, frobenius(F, j), orientation=False).is_transversal


def test_subfield_power_is_not_transversal():
    # x -> x^7 on F_16 restricts to F_4, which then forces a short cycle
    F = make_field(4)
    mu = quasigroup_of(projective_sts(F))
    assert not is_transversal(mu, eval_permutation_polynomial(F, 7), orientation=False).is_transversal


def test_domain_mismatch():
    mu = quasigroup_of(sts_from_triples(FANO_TRIPLES))
    with pytest.raises(DomainMismatchError):
        is_transversal(mu, Permutation(range(5)))


@settings(max_examples=40)
@given(st.permutations(list(range(1, 8))))
def test_transversal_check_consistent_with_surface(perm):
    mu = quasigroup_of(sts_from_triples(FANO_TRIPLES))
    T = Permutation([0] + list(perm))
    rep = is_transversal(mu, T)
    if rep.is_transversal:
        K = steiner_surface(mu, T)
        c = classify_closed_manifold(K)
        assert c.euler == steiner_euler(7) and c.orientable == rep.orientable
