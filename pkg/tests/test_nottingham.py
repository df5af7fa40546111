"""Automorphism group: membership, order, conductor, conjugation, the
conductor-2 normal form; the base action checked against a squaring oracle."""

import pytest

from defo5.artin.rings import RingError, build_ring
from defo5.nottingham import (Automorphism, ConductorUndefinedError,
                              NotAnAutomorphismError, base_sigma, conjugate,
                              hasse_conductor, normal_form_o5c2, order, power)
from defo5.series import TruncatedSeries


def test_membership_conditions():
    R = build_ring("F5[e]/(e^2)")
    e = R.generator("e")
    t = TruncatedSeries.t(R, 4)
    Automorphism(t + TruncatedSeries.constant(R, e, 4))  # nilpotent c0: fine
    with pytest.raises(NotAnAutomorphismError):
        Automorphism(TruncatedSeries.constant(R, 1, 4) + t)  # unit c0
    with pytest.raises(NotAnAutomorphismError):
        Automorphism(TruncatedSeries(R, [0, e], prec=4))  # non-unit c1


def test_base_sigma_against_squaring_oracle():
    """sigma = t/sqrt(t^2+1) must satisfy (sigma/t)^2 * (t^2 + 1) = 1; over
    F5 the expansion starts t + 2t^3 + t^5 (the t^5 coefficient is 1, as the
    oracle forces)."""
    R = build_ring("F5")
    sigma = base_sigma(R, 8)
    ratio = sigma.series.shift_down(1)
    one = TruncatedSeries.constant(R, 1, ratio.prec)
    t = TruncatedSeries.t(R, ratio.prec)
    assert (ratio * ratio * (t * t + one)).agrees_with(one)
    assert str(sigma.series.truncate(6)) == "t + 2*t^3 + t^5 @prec=6"


def test_order_of_sigma_is_five():
    R = build_ring("F5")
    n, prec = order(base_sigma(R, 16), 10)
    assert n == 5 and prec == 16


def test_power_five_is_identity():
    for desc in ("F5", "F25"):
        R = build_ring(desc)
        p5 = power(base_sigma(R, 12), 5)
        assert p5.series == TruncatedSeries.t(R, p5.prec)


def test_order_of_scaling():
    R = build_ring("F5")
    two_t = Automorphism(TruncatedSeries(R, [0, 2], prec=8))
    n, _ = order(two_t, 10)
    assert n == 4  # 2 has multiplicative order 4 in F5


def test_hasse_conductor():
    R = build_ring("F5")
    m, lead = hasse_conductor(base_sigma(R, 8))
    assert (m, lead) == (2, R.from_int(2))
    with pytest.raises(ConductorUndefinedError):
        hasse_conductor(Automorphism.identity(R, 8))


def test_conductor_via_residue_reduction():
    R = build_ring("F5[e]/(e^3)")
    m, lead = hasse_conductor(base_sigma(R, 8))
    assert m == 2
    assert lead == build_ring("F5").from_int(2)


def test_conjugation_invariance():
    R = build_ring("F5")
    sigma = base_sigma(R, 14)
    xi = Automorphism(TruncatedSeries(R, [0, 2, 1, 0, 3], prec=12))
    conj = conjugate(sigma, xi)
    assert order(conj, 10)[0] == 5
    assert hasse_conductor(conj)[0] == 2


def test_inverse_round_trip():
    R = build_ring("F5")
    sigma = base_sigma(R, 12)
    both = sigma(sigma.inverse())
    assert both.series == TruncatedSeries.t(R, both.prec)


def test_normal_form_recovers_conjugator():
    R = build_ring("F5")
    sigma = base_sigma(R, 14)
    xi = Automorphism(TruncatedSeries(R, [0, 1, 1], prec=12))
    target = conjugate(sigma, xi)
    found = normal_form_o5c2(Automorphism(target.series.truncate(8)), 8)
    assert found is not None
    assert conjugate(base_sigma(R, 10), found).series.agrees_with(
        target.series, 8)


def test_normal_form_of_sigma_itself():
    R = build_ring("F5")
    found = normal_form_o5c2(base_sigma(R, 8), 8)
    # lexicographically least conjugator fixing sigma is t itself
    assert found.series.agrees_with(TruncatedSeries.t(R, 8))


def test_normal_form_preconditions():
    R = build_ring("F5")
    with pytest.raises(RingError):
        normal_form_o5c2(Automorphism(TruncatedSeries(R, [0, 2], prec=8)), 8)
