from hypothesis import given, strategies as st

from chromsurf.perm import Permutation, generate_group, group_orbits

perms = st.permutations(list(range(6))).map(Permutation)


@given(perms, perms, perms)
def test_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perms, st.integers(0, 5))
def test_right_action(p, x):
    q = Permutation([1, 2, 3, 4, 5, 0])
    assert (p * q)(x) == q(p(x))
    assert (p * p.inverse()).is_identity()


def test_cycles_and_order():
    p = Permutation.from_cycles(6, [(0, 1, 2), (3, 4)])
    assert p.cycle_type() == (1, 2, 3)
    assert p.order() == 6
    assert p.orbit(3) == frozenset({3, 4})
    assert (p ** 6).is_identity() and p ** -1 == p.inverse()


def test_group_generation():
    s = Permutation([1, 2, 3, 0])
    t = Permutation([1, 0, 2, 3])
    assert len(generate_group([s, t])) == 24
    assert group_orbits([Permutation([1, 0, 2, 3])], range(4)) == [frozenset({0, 1}), frozenset({2}),
                                                                  frozenset({3})]
