from fractions import Fraction as Q
from itertools import product

import pytest
from hypothesis import given, strategies as st

from euphotic.apartment import (
    affine_simple_values,
    alcove_orbit_points,
    exceptional_base_points,
    facet,
    frac_signature,
    in_closed_alcove,
    marks,
    orbit_contains,
    orbit_points,
)
from euphotic.errors import InputError
from euphotic.exact import solve
from euphotic.roots import build

from .conftest import ALL_TYPES, SMALL_TYPES


def E(rs, *v):
    return rs.from_classical([Q(c) for c in v])


def translation(rs, coeffs, lattice):
    """Value coordinates of sum k_j alpha_j^vee, or the integer vector itself."""
    if lattice == "adjoint":
        return tuple(Q(k) for k in coeffs)
    return tuple(sum(k * rs.cartan[j][i] for j, k in enumerate(coeffs)) for i in range(rs.rank))


def in_lattice_oracle(rs, v, lattice):
    if any(Q(c).denominator != 1 for c in v):
        return False
    if lattice == "adjoint":
        return True
    lam = solve([[rs.cartan[j][i] for j in range(rs.rank)] for i in range(rs.rank)], v)
    return all(c.denominator == 1 for c in lam)


def test_marks_examples():
    assert marks(build("A4")) == (1,) * 5
    assert marks(build("G2")) == (1, 2, 3)
    assert facet(build("F4"), [0, 1, 3, 4]).m == 3


@pytest.mark.parametrize("key", ALL_TYPES)
def test_marks_identity(key):
    import random

    rs = build(*key)
    n = marks(rs)
    rng = random.Random(hash(key) & 0xFFFF)
    for _ in range(20):
        x = tuple(Q(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(rs.rank))
        assert sum(k * v for k, v in zip(n, affine_simple_values(rs, x))) == 1


def test_barycenter_examples():
    a3 = build("A3")
    F = facet(a3, [2, 3])
    assert F.m == 2
    assert a3.to_classical(F.barycenter) == (Q(3, 8), Q(-1, 8), Q(-1, 8), Q(-1, 8))
    for n in (3, 4, 5):
        c = build("C", n)
        F = facet(c, range(1, n))
        assert F.m == 2 and c.to_classical(F.barycenter) == (Q(1, 4),) * n
    g2 = build("G2")
    assert facet(g2, [0, 2]).m == 2
    F = facet(g2, [0])
    assert F.m == 5 and F.barycenter == (Q(1, 5), Q(1, 5))


@pytest.mark.parametrize("key", ALL_TYPES)
def test_barycenters_of_all_vertices(key):
    rs = build(*key)
    hs = facet(rs, range(1, rs.rank + 1))
    assert hs.m == 1 and hs.barycenter == (0,) * rs.rank and hs.hyperspecial
    for off in range(rs.rank + 1):
        F = facet(rs, [i for i in range(rs.rank + 1) if i != off])
        vals = affine_simple_values(rs, F.barycenter)
        assert all(v == (Q(1, F.m) if i == off else 0) for i, v in enumerate(vals))
        assert in_closed_alcove(rs, F.barycenter)


def test_full_set_is_not_a_facet():
    with pytest.raises(InputError):
        facet(build("G2"), [0, 1, 2])


def test_in_closed_alcove():
    g2 = build("G2")
    assert in_closed_alcove(g2, (0, 0))
    assert not in_closed_alcove(g2, (1, 0))


def test_orbit_points_b3_listed():
    b3 = build("B3")
    x = E(b3, "1/2", "1/2", "0")
    pts = [y for y, _ in orbit_points(b3, x, "simply_connected", 4)]
    assert E(b3, 1, "1/2", "1/2") in pts
    assert E(b3, 2, "3/2", "1/2") in pts
    # theta = e1 + e2 is 7/2 on the second point
    assert b3.pairing(b3.highest_root, E(b3, 2, "3/2", "1/2")) == Q(7, 2)


def test_orbit_points_c3_listed():
    c3 = build("C3")
    x = E(c3, "1/3", "1/3", "0")
    pts = [y for y, _ in orbit_points(c3, x, "simply_connected", 4)]
    for p in [("2/3", "2/3", "0"), ("1", "2/3", "1/3"), ("4/3", "2/3", "0"), ("1", "1/3", "1/3"),
              ("4/3", "1", "1/3")]:
        assert E(c3, *p) in pts
    assert E(c3, 2, "1/3", 0) not in pts


def test_orbit_points_bound_at_theta():
    g2 = build("G2")
    x = (Q(1, 5), Q(1, 5))
    assert [y for y, _ in orbit_points(g2, x, "simply_connected", 1)] == [x]
    with pytest.raises(InputError):
        orbit_points(g2, x, "simply_connected", 0)


def test_orbit_contains_b3():
    b3 = build("B3")
    x = E(b3, "1/2", "1/2", "0")
    assert orbit_contains(b3, x, x, "simply_connected").word == ()
    y = E(b3, 1, "1/2", "1/2")
    w = orbit_contains(b3, x, y, "simply_connected")
    z = b3.apply_word(w.word, x)
    assert tuple(a + b for a, b in zip(z, w.translation)) == y
    assert in_lattice_oracle(b3, w.translation, "simply_connected")
    assert orbit_contains(b3, x, E(b3, "1/2", "1/2", "1/2"), "simply_connected") is None


def test_exceptional_base_points():
    g2 = build("G2")
    xq = facet(g2, [0]).barycenter
    FP = facet(g2, [0, 2])
    assert exceptional_base_points(g2, xq, FP, "simply_connected") == FP.orbit(xq)
    a1 = build("A1")
    hs = facet(a1, [1])
    # the midpoint is the only alcove point of its orbit; W_P = W adds its mirror image
    assert alcove_orbit_points(a1, (Q(1, 2),), "adjoint") == [(Q(1, 2),)]
    assert exceptional_base_points(a1, (Q(1, 2),), hs, "adjoint") == {(Q(1, 2),), (Q(-1, 2),)}
    # the vertex orbit meets both ends of the alcove, one per element of Omega
    assert set(alcove_orbit_points(a1, (Q(0),), "adjoint")) == {(Q(0),), (Q(1),)}
    assert set(alcove_orbit_points(a1, (Q(0),), "simply_connected")) == {(Q(0),)}


@pytest.mark.parametrize("key", [("A", 2), ("B", 2), ("G", 2), ("C", 3)])
@pytest.mark.parametrize("lattice", ["simply_connected", "adjoint"])
def test_orbit_points_are_members(key, lattice):
    rs = build(*key)
    x = facet(rs, [0]).barycenter
    out = orbit_points(rs, x, lattice, 3)
    ys = [y for y, _ in out]
    assert ys == sorted(set(ys))
    for y, w in out:
        assert all(c >= 0 for c in y)
        z = rs.apply_word(w.word, x)
        assert tuple(a + b for a, b in zip(z, w.translation)) == y
        assert in_lattice_oracle(rs, w.translation, lattice)


@st.composite
def orbit_case(draw):
    key = draw(st.sampled_from([k for k in SMALL_TYPES if k[1] <= 3]))
    lattice = draw(st.sampled_from(["simply_connected", "adjoint"]))
    rs = build(*key)
    x = tuple(draw(st.fractions(-2, 2, max_denominator=6)) for _ in range(rs.rank))
    word = draw(st.lists(st.integers(1, rs.rank), max_size=8))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank))
    return rs, lattice, x, word, coeffs


@given(orbit_case())
def test_signature_never_prunes_a_member(case):
    rs, lattice, x, word, coeffs = case
    y = tuple(a + b for a, b in zip(rs.apply_word(word, x), translation(rs, coeffs, lattice)))
    sx, sy = frac_signature(rs, x, lattice), frac_signature(rs, y, lattice)
    assert sx == sy
    w = orbit_contains(rs, x, y, lattice)
    assert w is not None
    z = rs.apply_word(w.word, x)
    assert tuple(a + b for a, b in zip(z, w.translation)) == y


@pytest.mark.parametrize("key", [("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3), ("B", 3)])
@pytest.mark.parametrize("lattice", ["simply_connected", "adjoint"])
def test_membership_matches_brute_force(key, lattice):
    rs = build(*key)
    x = facet(rs, [0]).barycenter if rs.rank > 2 else tuple(Q(1, 3) for _ in range(rs.rank))
    orbit = rs.weyl_orbit(x)
    grid = [Q(k, 3) for k in range(-3, 4)] if rs.rank <= 2 else [Q(k, 4) for k in range(-2, 3)]
    for y in product(grid, repeat=rs.rank):
        truth = any(in_lattice_oracle(rs, tuple(a - b for a, b in zip(y, z)), lattice) for z in orbit)
        assert (orbit_contains(rs, x, y, lattice) is not None) == truth, y
