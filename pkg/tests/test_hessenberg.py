from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from euphotic.apartment import facet
from euphotic.errors import CapabilityError, InputError
from euphotic.grading import grade
from euphotic.hessenberg import (
    Predicate,
    datum,
    enumerate_candidates,
    g2_region,
    g2_rules,
    halfspace_empty,
    in_region,
    qw_roots,
    rule_empty,
    simple_root_meager,
    vw_perp,
)
from euphotic.roots import build

G2 = build("G2")
FP = facet(G2, [0, 2])
XQ = facet(G2, [0]).barycenter
BETA = (1, 3)


def E(rs, *v):
    return rs.from_classical([Q(c) for c in v])


def reflect_in(rs, gamma, x):
    """s_gamma(x) from the Gram form: x - <gamma, x> gamma^vee."""
    val = rs.pairing(gamma, x)
    gg = rs.form(gamma, gamma)
    return tuple(x[j] - val * 2 * rs.form(rs.simple(j), gamma) / gg for j in range(rs.rank))


def test_g2_listed_gradients():
    y = reflect_in(G2, (1, 1), XQ)
    assert y == (Q(-1), Q(3, 5))
    _, grads = vw_perp(FP, y)
    assert grads == {(1, 0), (1, 1), (1, 2), (1, 3), (-1, -2), (-1, -3)}


def test_vw_perp_full_at_x_q():
    aff, grads = vw_perp(FP, XQ)
    assert aff == grade(FP).vp_dual_weights
    assert len(aff) == grade(FP).dims[1] == 8


def test_vw_perp_hyperspecial_a2():
    a2 = build("A2")
    hs = facet(a2, [1, 2])
    y = E(a2, "5/3", "-1/3", "-4/3")
    _, grads = vw_perp(hs, y)
    assert grads == {r for r in a2.roots if a2.pairing(r, y) < 1}


def test_qw_roots():
    a3 = build("A3")
    hs = facet(a3, [1, 2, 3])
    neg = {r for r in a3.roots if sum(r) < 0}
    y = (Q(1, 7), Q(2, 7), Q(1, 7))
    assert {a.gradient for a in qw_roots(hs, y)} == neg
    xq = facet(a3, [2, 3]).barycenter
    lq = {r for r in a3.roots if r[0] == 0}
    assert {a.gradient for a in qw_roots(hs, xq)} == neg | lq
    # y = x_P: every Levi root vanishes, so Q_w is all of L
    assert qw_roots(FP, FP.barycenter) == grade(FP).levi_roots


def test_halfspace_gate():
    assert halfspace_empty([(1, 0)], 2) is not None
    assert halfspace_empty([(1, 1), (-1, -1), (1, 0)], 2) is None


def test_simple_root_gate():
    b3, c3 = build("B3"), build("C3")
    hs_b, hs_c = facet(b3, [1, 2, 3]), facet(c3, [1, 2, 3])
    xq = facet(c3, [1, 3]).barycenter
    assert not simple_root_meager(hs_c, xq)
    y = E(c3, 2, "1/3", 0)
    assert y[0] == Q(5, 3)
    assert simple_root_meager(hs_c, y)
    assert not simple_root_meager(hs_b, E(b3, "1/2", "1/2", "1/2"))
    with pytest.raises(CapabilityError):
        simple_root_meager(FP, XQ)


def test_rule_gate():
    rules = g2_rules()
    assert rule_empty({(1, 0), (-1, -3)}, rules)
    assert not rule_empty({(1, 0), (-1, -3)}, [])
    assert not rule_empty({(1, 0), (-1, 0), (1, 3), (-1, -3)}, rules)


def test_g2_region_claim():
    data, summary = enumerate_candidates(FP, XQ, "simply_connected", 3, rules=g2_rules())
    assert summary["enumerated"] == len(data) > 0
    region = g2_region()
    fired = False
    for d in data:
        if not (d.halfspace_empty or d.rule_empty or d.exceptional):
            assert in_region(G2, region, d.y), d.y
        dom, _ = G2.dominant_rep(d.y)
        if d.halfspace_empty and dom[0] >= 1 and G2.pairing(BETA, dom) >= 1:
            fired = True
        if d.exceptional:
            assert not d.halfspace_empty
    assert fired


def test_b3_enumeration_and_bound_zero():
    b3 = build("B3")
    hs = facet(b3, [1, 2, 3])
    x = E(b3, "1/2", "1/2", "0")
    ys = [d.y for d in enumerate_candidates(hs, x, "simply_connected", 4)[0]]
    assert E(b3, 1, "1/2", "1/2") in ys and E(b3, 2, "3/2", "1/2") in ys
    assert enumerate_candidates(hs, x, "simply_connected", 0)[0] == []
    with pytest.raises(InputError):
        enumerate_candidates(hs, x, "simply_connected", -1)


def test_predicates_are_applied_last():
    b3 = build("B3")
    hs = facet(b3, [1, 2, 3])
    x = E(b3, "1/2", "1/2", "0")
    p = Predicate((1, 0, 0), "<", Q(1))
    kept, summary = enumerate_candidates(hs, x, "simply_connected", 4, [p])
    assert all(d.y[0] < 1 for d in kept)
    assert summary["removed_by_predicates"] + len(kept) == summary["enumerated"]
    with pytest.raises(InputError):
        Predicate((1, 0, 0), "!=", Q(1))


@pytest.mark.parametrize("key", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)])
def test_hyperspecial_oracle(key):
    rs = build(*key)
    hs = facet(rs, range(1, rs.rank + 1))
    x = facet(rs, [0]).barycenter
    data, _ = enumerate_candidates(hs, x, "simply_connected", 2)
    assert data
    levi = grade(hs).levi_roots
    for d in data:
        assert d.vw_perp_gradients == {r for r in rs.roots if rs.pairing(r, d.y) < 1}
        assert d.vw_perp <= grade(hs).vp_dual_weights
        pos = {a for a in levi if a.value(rs, d.y) > 0}
        assert len(d.qw_roots) + len(pos) == len(levi)
        if d.exceptional:
            assert not d.halfspace_empty


@given(st.fractions(-3, 3, max_denominator=10), st.fractions(-3, 3, max_denominator=10))
def test_vw_perp_forms_agree_g2(a, b):
    y = (a, b)
    aff, grads = vw_perp(FP, y)  # raises on disagreement
    assert {g.gradient for g in aff} == grads
    d = datum(FP, y, g2_rules())
    assert d.vw_perp == aff and d.qw_roots <= grade(FP).levi_roots


@given(st.lists(st.integers(1, 2), max_size=6))
def test_weight_data_depends_on_point_only(word):
    # w and w s_0 send x_Q to the same point, since s_0 fixes x_Q
    FQ = facet(G2, [0])
    assert FQ.reflect(0, XQ) == XQ
    y1 = G2.apply_word(word, XQ)
    y2 = G2.apply_word(word, FQ.reflect(0, XQ))
    assert y1 == y2
    assert vw_perp(FP, y1) == vw_perp(FP, y2)
    assert qw_roots(FP, y1) == qw_roots(FP, y2)
