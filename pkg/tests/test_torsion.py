import pytest
from hypothesis import given, settings

import oracle as O
import strategies as sts
from modgrob import (
    QQ,
    ZZ,
    DegRevLex,
    Lex,
    NonMember,
    Polynomial,
    buchberger_z,
    change_domain,
    gb_equal,
    ideal_member,
    minimal_multiplier,
    normal_form,
    parse_polynomial,
    saturation_contraction,
    torsion_exponent,
)
from modgrob.groebner import buchberger_field
from modgrob.intarith import factorize
from modgrob.polyring import poly_scale, ring, with_domain
from modgrob.torsion import _rational_view

R1 = ring(("x",), Lex(), ZZ)
R3 = ring(("z", "y", "x"), DegRevLex(), ZZ)
CHAIN = [parse_polynomial(s, R3) for s in ("3z-y", "3y-x", "3x")]


def P(text, ring_=R1):
    return parse_polynomial(text, ring_)


# ---------------------------------------------------------------------------
# saturation / contraction

def test_zero_ideal_contracts_to_nothing():
    assert saturation_contraction([Polynomial.zero(R1)]) == []


def test_contraction_of_scaled_variable():
    assert saturation_contraction([P("3x")]) == [P("x")]


def test_chain_contraction_is_full_linear_ideal():
    contracted = saturation_contraction(CHAIN)
    assert [str(g) for g in contracted] == ["z", "y", "x"]
    # same QQ-ideal as the generators themselves
    ring_q = with_domain(R3, QQ)
    basis_q = buchberger_field([change_domain(g, QQ) for g in CHAIN], ring=ring_q)
    sat_q = buchberger_field([change_domain(g, QQ) for g in contracted], ring=ring_q)
    assert gb_equal(basis_q, sat_q)


@given(sts.ring_and_polys(count=2, domains=(ZZ,), max_degree=2, max_coeff=5,
                          order_pool=(DegRevLex(),)))
@settings(max_examples=25, deadline=None)
def test_contraction_generates_same_rational_ideal(data):
    ring_, polys = data
    if all(p.is_zero for p in polys):
        return
    contracted = saturation_contraction(polys)
    ring_q = with_domain(ring_, QQ)
    basis_q = buchberger_field([change_domain(g, QQ) for g in polys], ring=ring_q)
    for g in contracted:
        assert normal_form(change_domain(g, QQ), basis_q).is_zero
    sat_q = buchberger_field([change_domain(g, QQ) for g in contracted], ring=ring_q) \
        if contracted else None
    if sat_q is not None:
        assert gb_equal(basis_q, sat_q)
    else:
        assert len(basis_q) == 0


# ---------------------------------------------------------------------------
# minimal multipliers

def test_multiplier_of_member_is_one():
    basis_z = buchberger_z([P("3x")])
    assert minimal_multiplier(P("3x"), basis_z, _rational_view(basis_z)) == 1


def test_multiplier_of_saturated_variable():
    basis_z = buchberger_z([P("3x")])
    assert minimal_multiplier(P("x"), basis_z, _rational_view(basis_z)) == 3


def test_multiplier_in_chain():
    basis_z = buchberger_z(CHAIN)
    view = _rational_view(basis_z)
    z = parse_polynomial("z", R3)
    assert minimal_multiplier(z, basis_z, view) == 27


def test_multiplier_rejects_non_members():
    basis_z = buchberger_z([P("x2")])
    with pytest.raises(NonMember):
        minimal_multiplier(P("x+1"), basis_z, _rational_view(basis_z))


def test_multiplier_rejects_monic_rational_basis():
    # the rational basis must consist of integer polynomials inside J;
    # handing it the monic reduced QQ-basis would silently give k0 = 1
    basis_z = buchberger_z([P("3x")])
    ring_q = with_domain(R1, QQ)
    monic_basis = buchberger_field([change_domain(P("3x"), QQ)], ring=ring_q)
    with pytest.raises(ValueError):
        minimal_multiplier(P("x"), basis_z, monic_basis)


# ---------------------------------------------------------------------------
# torsion exponent

def test_torsion_free_quotient():
    assert torsion_exponent([P("x")]).exponent == 1


def test_scaled_variable():
    report = torsion_exponent([P("3x")])
    assert report.exponent == 3
    assert [(str(g), m) for g, m in report.multipliers] == [("x", 3)]


def test_chain_exponent_and_multipliers():
    report = torsion_exponent(CHAIN)
    assert report.exponent == 27
    assert [(str(g), m) for g, m in report.multipliers] == \
        [("z", 27), ("y", 9), ("x", 3)]


def test_constant_in_ideal_no_special_casing():
    report = torsion_exponent([P("x"), P("4")])
    assert report.exponent == 4
    assert [(str(g), m) for g, m in report.multipliers] == [("1", 4)]


def test_exponent_cross_checked_by_lattice_oracle():
    og = [O.from_pkg(g) for g in CHAIN]
    z_mono, y_mono, x_mono = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert O.z_member_bounded(og, {x_mono: 3}, 2)
    assert not O.z_member_bounded(og, {x_mono: 1}, 2)
    assert O.z_member_bounded(og, {y_mono: 9}, 2)
    assert not O.z_member_bounded(og, {y_mono: 3}, 2)
    assert O.z_member_bounded(og, {z_mono: 27}, 2)
    assert not O.z_member_bounded(og, {z_mono: 9}, 2)


def test_minimality_witnesses():
    report = torsion_exponent(CHAIN)
    basis_z = buchberger_z(CHAIN)
    m = report.exponent
    for g, _ in report.multipliers:
        assert ideal_member(poly_scale(g, m), basis_z)
    for p, _ in factorize(m):
        assert any(not ideal_member(poly_scale(g, m // p), basis_z)
                   for g, _ in report.multipliers)


def test_generator_order_does_not_matter():
    forward = torsion_exponent(CHAIN).exponent
    backward = torsion_exponent(list(reversed(CHAIN))).exponent
    assert forward == backward == 27


@given(sts.ring_and_polys(count=2, domains=(ZZ,), max_degree=2, max_coeff=4,
                          order_pool=(DegRevLex(),)))
@settings(max_examples=20, deadline=None)
def test_exponent_invariants_random(data):
    _, polys = data
    if all(p.is_zero for p in polys):
        return
    report = torsion_exponent(polys)
    basis_z = buchberger_z(polys)
    assert report.exponent >= 1
    for g, m_g in report.multipliers:
        assert ideal_member(poly_scale(g, m_g), basis_z)
        for p, _ in factorize(m_g):
            assert not ideal_member(poly_scale(g, m_g // p), basis_z)
    assert report.exponent == 1 or report.multipliers
