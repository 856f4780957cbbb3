"""Invariant checks beyond the acceptance property suites: exhaustive action
law at small orders, orbit symmetry, and round trips."""

from hypothesis import given, settings
from hypothesis import strategies as st

from circiso.circulant import Circulant, detect_circulant, is_connected, realize
from circiso.residue import units
from circiso.type1 import adams_apply, type1_set
from circiso.products import product_c4, product_prism

from conftest import brute_edges


def test_action_law_exhaustive_small():
    for n, conn in ((16, (1, 2, 7)), (27, (1, 3, 8, 10)), (64, (2, 3, 8, 9))):
        g = Circulant(n, conn)
        for x in units(n):
            for y in units(n):
                assert adams_apply(adams_apply(g, x), y) == adams_apply(g, (x * y) % n)


@st.composite
def graphs(draw, max_n=96):
    n = draw(st.integers(3, max_n))
    half = n // 2
    conn = draw(st.sets(st.integers(1, half), min_size=1, max_size=half))
    return Circulant(n, tuple(sorted(conn)))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=48))
def test_realize_matches_brute_force(g):
    assert set(realize(g).edges) == brute_edges(g.n, set(g.conn))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=48))
def test_detect_round_trip(g):
    assert detect_circulant(realize(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=40), st.integers(0, 10**6))
def test_orbit_membership_symmetry(g, seed):
    orbit = type1_set(g)
    member = orbit.members[seed % len(orbit.members)]
    assert set(type1_set(member).members) == set(orbit.members)
    assert is_connected(member) == is_connected(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=64), st.integers(0, 10**6))
def test_orbit_stabilizer_relation(g, seed):
    orbit = type1_set(g)
    assert len(orbit.members) * len(orbit.stabilizer) == len(units(g.n))
    # recorded representative really lands on the member
    i = seed % len(orbit.members)
    assert adams_apply(g, orbit.reps[i]) == orbit.members[i]


def test_layer_products_verified_at_all_small_orders():
    # the constructors run the oracle internally for orders <= 60
    for n in (3, 5, 7, 9, 11, 13):
        product_prism(Circulant(n, (1,)))
        product_c4(Circulant(n, (1,)))
    product_prism(Circulant(9, (1, 2, 4)))
    product_c4(Circulant(7, (1, 3)))
