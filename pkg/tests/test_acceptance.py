"""End-to-end acceptance checks, one test group per numbered criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import time
from math import comb

import pytest

from chromsurf.census import common_symmetries, enumerate_transversal_cosets_d3, singer_normalizer_search
from chromsurf.coloring import ColoringProblem, chromatic_number, search_coloring, verify_coloring
from chromsurf.complex import (classify_closed_manifold, cyclic_polytope_boundary, euler_characteristic,
                               f_vector, is_neighborly, vertex_link, is_2_sphere)
from chromsurf.embedding import complete_to_triangulation, embed_max_genus, expected_f_vector, surface_genus
from chromsurf.gf2d import eval_permutation_polynomial, make_field, multiplication, parse_polynomial
from chromsurf.library import FANO_TRIPLES, rp2_6, torus7
from chromsurf.coloring import remove_facets
from chromsurf.sphere import K5_VERTICES, build_sphere, verify_k5_obstruction
from chromsurf.steiner import (affine_sts, bose, bose_transversal, cyclic_sts, is_transversal,
                               projective_sts, quasigroup_of, shift_permutation, steiner_euler,
                               steiner_surface, sts_from_triples)
from chromsurf.perm import Permutation

from oracles import brute_colorable

crit = pytest.mark.criterion


def colorable(K, k, **kw):
    return search_coloring(ColoringProblem(K, k, **kw)).colorable


def pg(d):
    F = make_field(d)
    return F, quasigroup_of(projective_sts(F))


def pg_transversal(d, poly):
    F, mu = pg(d)
    P = parse_polynomial(poly, F) if isinstance(poly, str) else poly
    return F, mu, eval_permutation_polynomial(F, P)


SURFACE_CASES = {
    "pg8": (3, 3), "pg16": (4, "a*X^11 + X^6 + X"), "pg32": (5, 5), "pg128": (7, 7),
}


def pg_surface(key):
    d, poly = SURFACE_CASES[key]
    F, mu, T = pg_transversal(d, poly)
    return steiner_surface(mu, T)


# 1 ---------------------------------------------------------------------------

@crit(1)
def test_c01_torus7_obstruction():
    t0 = time.perf_counter()
    K = torus7()
    assert f_vector(K) == (7, 21, 14)
    assert not colorable(K, 2)
    assert not colorable(remove_facets(K, [(1, 3, 4)]), 2)
    assert not colorable(K, 2, removed_facets=frozenset({(1, 3, 4)}))
    assert colorable(K, 3)
    assert time.perf_counter() - t0 < 1.0


# 2 ---------------------------------------------------------------------------

@crit(2)
def test_c02_rp2_6():
    t0 = time.perf_counter()
    K = rp2_6()
    c = classify_closed_manifold(K)
    assert not c.orientable and c.genus == 1
    assert not colorable(K, 2)
    out = search_coloring(ColoringProblem(K, 2, removed_facets=frozenset({(4, 5, 6)})))
    assert out.colorable
    assert chromatic_number(K) == 3
    assert time.perf_counter() - t0 < 1.0


# 3 ---------------------------------------------------------------------------

@crit(3)
def test_c03_cyclic_polytope_parity():
    t0 = time.perf_counter()
    for m in range(5, 11):
        K = cyclic_polytope_boundary(m, 4)
        r = classify_closed_manifold(K)
        assert r.is_closed_manifold and r.vertex_links_spheres and r.euler == 0
        assert is_neighborly(K)
        assert chromatic_number(K) == (2 if m % 2 == 0 else 3), m
    assert time.perf_counter() - t0 < 10.0


# 4 ---------------------------------------------------------------------------

@crit(4)
def test_c04_pg8_double_cosets():
    t0 = time.perf_counter()
    c = enumerate_transversal_cosets_d3()
    assert c.group_order == 168
    assert len(c.classes) == 4
    assert sum(x.size for x in c.classes) == 5040
    assert len(c.transversal) == 1 and c.transversal[0].orientable is True
    ident = [x for x in c.classes if x.representative.is_identity()]
    assert len(ident) == 1 and not ident[0].is_transversal
    assert time.perf_counter() - t0 < 300


# 5 ---------------------------------------------------------------------------

@crit(5)
@pytest.mark.parametrize("key,orientable", [("pg8", True), ("pg16", True), ("pg32", False), ("pg128", False)])
def test_c05_pg_transversals(key, orientable):
    t0 = time.perf_counter()
    d, poly = SURFACE_CASES[key]
    F, mu, T = pg_transversal(d, poly)
    rep = is_transversal(mu, T)
    assert rep.is_transversal and rep.orientable is orientable
    if key == "pg16":
        order5 = multiplication(F, F.a_pow(3))
        assert order5.order() == 5
        assert common_symmetries(mu, T, [order5]) == [order5]
    assert time.perf_counter() - t0 < 10.0


@crit(5)
@pytest.mark.parametrize("s,kind,orientable", [(2, "orientable", True), (4, "orientable", True),
                                               (1, "nonorientable", False), (2, "nonorientable", False),
                                               (3, "nonorientable", False)])
def test_c05_bose_transversals(s, kind, orientable):
    t0 = time.perf_counter()
    rep = is_transversal(quasigroup_of(bose(s)), bose_transversal(s, kind))
    assert rep.is_transversal and rep.orientable is orientable
    assert time.perf_counter() - t0 < 10.0


# 6 ---------------------------------------------------------------------------

@crit(6)
def test_c06_surface_f_vectors():
    t0 = time.perf_counter()
    expect = {"pg8": ((7, 21, 14), True, 1), "pg32": ((31, 465, 310), False, 126),
              "pg128": ((127, 8001, 5334), False, 2542)}
    for key, (f, ori, g) in expect.items():
        K = pg_surface(key)
        c = classify_closed_manifold(K)
        assert (f_vector(K), c.orientable, c.genus) == (f, ori, g), key
    s = 2
    K = steiner_surface(quasigroup_of(bose(s)), bose_transversal(s, "orientable"))
    c = classify_closed_manifold(K)
    assert c.orientable and c.genus == 11 == s * (6 * s - 1) // 2
    assert time.perf_counter() - t0 < 30.0


# 7 ---------------------------------------------------------------------------

@crit(7)
def test_c07_pg_surface_chromatic_numbers():
    assert chromatic_number(pg_surface("pg8")) == 3
    assert chromatic_number(pg_surface("pg16")) == 3
    K = pg_surface("pg32")
    assert not colorable(K, 3)
    assert colorable(K, 4)
    assert chromatic_number(K) == 4


@crit(7)
@pytest.mark.parametrize("s", [2, 4])
def test_c07_bose_surface_chromatic_number(s):
    K = steiner_surface(quasigroup_of(bose(s)), bose_transversal(s, "orientable"))
    assert chromatic_number(K) == 3


# 8 ---------------------------------------------------------------------------

@crit(8)
def test_c08_pg64_not_3_colorable():
    K = projective_sts(make_field(6)).as_complex()
    out = search_coloring(ColoringProblem(K, 3))
    assert out.status == "not_colorable"


@crit(8)
def test_c08_pg128_surface_6_colorable(long_ok):
    K = pg_surface("pg128")
    problem = ColoringProblem(K, 6)
    out = search_coloring(problem)
    assert out.colorable and verify_coloring(problem, out.witness) is None


# 9 ---------------------------------------------------------------------------

@crit(9)
def test_c09_sts7_embedding_trace():
    t0 = time.perf_counter()
    sts = sts_from_triples(FANO_TRIPLES)
    state = embed_max_genus(sts, star_order=[(1, 2, 4), (1, 3, 7), (1, 5, 6)])
    words = ["".join(map(str, h.word)) for h in state.history]
    assert "".join(map(str, state.history[0].word)) == "123715241356"
    assert words[-1] == "127524715435641362376"
    K = complete_to_triangulation(state)
    c = classify_closed_manifold(K)
    assert f_vector(K) == (29, 105, 70) and c.orientable and c.genus == 4
    assert time.perf_counter() - t0 < 1.0


# 10 --------------------------------------------------------------------------

def _sts_sources():
    return {
        7: sts_from_triples(FANO_TRIPLES),
        9: affine_sts(2),
        13: cyclic_sts(13, [(0, 1, 4), (0, 2, 7)]),
        15: projective_sts(make_field(4)),
        63: projective_sts(make_field(6)),
    }


@crit(10)
def test_c10_embedding_f_vector_law():
    t0 = time.perf_counter()
    for n, sts in _sts_sources().items():
        L = comb(n, 2)
        for ori in (True, False):
            K = complete_to_triangulation(embed_max_genus(sts, orientable=ori))
            f = f_vector(K)
            assert f == expected_f_vector(n) == (n + L + 1, 5 * L, 10 * L // 3)
            c = classify_closed_manifold(K)
            assert c.orientable is ori and c.genus == surface_genus(n, ori)
            if n == 63 and ori:
                assert f == (2017, 9765, 6510) and c.genus == 620
    assert time.perf_counter() - t0 < 60.0


# 11 --------------------------------------------------------------------------

@crit(11)
def test_c11_singer_search_d5():
    c = singer_normalizer_search(make_field(5))
    assert len(c.transversal) == 2
    assert all(x.orientable is False for x in c.transversal)


# 12 --------------------------------------------------------------------------

@pytest.fixture(scope="module")
def sphere_build():
    return build_sphere()


@crit(12)
def test_c12_sphere_structure(sphere_build):
    K = sphere_build.complex
    assert f_vector(K) == (167, 1579, 2824, 1412)
    r = classify_closed_manifold(K)
    assert r.is_closed_manifold and r.vertex_links_spheres and r.euler == 0
    assert all(is_2_sphere(vertex_link(K, v)) for v in K.vertices)


@crit(12)
def test_c12_sphere_obstruction_and_colorings(sphere_build):
    K = sphere_build.complex
    t0 = time.perf_counter()
    rep = verify_k5_obstruction(K, ball_vertex_sets=sphere_build.ball_vertex_sets())
    assert rep.holds
    assert time.perf_counter() - t0 < 10.0  # ten balls, each well under a second
    p5 = ColoringProblem(K, 5)
    out = search_coloring(p5)
    assert out.colorable and verify_coloring(p5, out.witness) is None
    # direct certificate: branching on the K5 first makes the exhaustive search short
    out4 = search_coloring(ColoringProblem(K, 4, start=(151, 152, 153), priority=K5_VERTICES))
    assert out4.status == "not_colorable"


@crit(12)
def test_c12_sphere_direct_4_default_order(sphere_build, long_ok):
    out = search_coloring(ColoringProblem(sphere_build.complex, 4))
    assert out.status == "not_colorable"


# 13 --------------------------------------------------------------------------

@crit(13)
def test_c13_sts_axioms():
    for s in range(1, 7):
        sts = bose(s)
        assert len(sts.triples) == sts.n * (sts.n - 1) // 6
        assert quasigroup_of(sts).check_axioms()
    for d in range(2, 8):
        sts = projective_sts(make_field(d))
        assert len(sts.triples) == sts.n * (sts.n - 1) // 6
        assert quasigroup_of(sts).check_axioms()
    for k in range(1, 6):
        sts = affine_sts(k)
        assert len(sts.triples) == sts.n * (sts.n - 1) // 6
    assert len(affine_sts(5).triples) == 9801


@crit(13)
def test_c13_shift_identities():
    F, mu = pg(4)
    ident = Permutation.identity(F.order)
    T = eval_permutation_polynomial(F, parse_polynomial("a*X^11 + X^6 + X", F))
    for x in range(1, F.order):
        assert shift_permutation(mu, x, ident).is_identity()
        s = shift_permutation(mu, x, T)
        assert s(0) == 0 and s(x) == x
    # equivariance under the Singer cycle for a monomial transversal
    F, mu = pg(5)
    T = eval_permutation_polynomial(F, 5)
    a = multiplication(F, F.a)
    Ta = T.conjugate(a)
    for x in range(1, F.order):
        assert shift_permutation(mu, a(x), Ta) == shift_permutation(mu, x, T).conjugate(a)


def _small_corpus():
    items = [("torus7", torus7()), ("rp2_6", rp2_6()), ("fano", sts_from_triples(FANO_TRIPLES).as_complex()),
             ("sts9", affine_sts(2).as_complex()), ("pg8_surface", pg_surface("pg8"))]
    items += [(f"cp{m}", cyclic_polytope_boundary(m, 4)) for m in range(5, 11)]
    return items


@crit(13)
@pytest.mark.parametrize("name,K", [pytest.param(n, K, id=n) for n, K in _small_corpus()])
def test_c13_search_matches_brute_force(name, K):
    assert len(K.vertices) <= 12
    for k in (2, 3):
        assert colorable(K, k) == brute_colorable(K.facets, k), (name, k)


@crit(13)
def test_c13_euler_identity_on_all_transversals():
    found = []
    for key in SURFACE_CASES:
        d, poly = SURFACE_CASES[key]
        found.append(pg_transversal(d, poly)[1:])
    for s, kind in [(1, "nonorientable"), (2, "orientable"), (2, "nonorientable"), (3, "nonorientable"),
                    (4, "orientable"), (4, "nonorientable")]:
        found.append((quasigroup_of(bose(s)), bose_transversal(s, kind)))
    mu8 = pg(3)[1]
    found += [(mu8, c.representative) for c in enumerate_transversal_cosets_d3().transversal]
    for d in (5, 7):
        mu = pg(d)[1]
        found += [(mu, c.representative) for c in singer_normalizer_search(make_field(d)).transversal]
    assert len(found) == 4 + 6 + 1 + 2 + 8
    for mu, T in found:
        K = steiner_surface(mu, T)
        assert euler_characteristic(K) == steiner_euler(mu.n) == -mu.n * (mu.n - 7) // 6
