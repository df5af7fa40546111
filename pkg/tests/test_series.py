"""Truncated series arithmetic against independent closed-form oracles:
geometric series, binomial series (rational coefficients with 2-power
denominators reduced into the ring), and Lagrange inversion."""

from fractions import Fraction
from math import comb

import pytest

from defo5.artin.rings import build_ring
from defo5.series import PrecisionError, TruncatedSeries


def frac_in(ring, q: Fraction):
    return ring.from_int(q.numerator) * ring.from_int(q.denominator).inv()


def binomial_coeff(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= (alpha - i)
        out /= (i + 1)
    return out


# -- oracles -----------------------------------------------------------------------

def test_geometric_series_oracle():
    """1/(1 - t) = sum t^k, exactly, over several rings."""
    for desc in ("F5", "Z/25", "F5[e]/(e^2)"):
        R = build_ring(desc)
        one = TruncatedSeries.constant(R, 1, 10)
        t = TruncatedSeries.t(R, 10)
        inv = (one - t).inverse_unit()
        assert inv.coeffs == tuple(R.one for _ in range(10))


def test_binomial_series_oracle_sqrt():
    """sqrt(1 + t) has coefficients binom(1/2, k), denominators all 2-powers."""
    for desc in ("F5", "Z/25", "cyclo(3)"):
        R = build_ring(desc)
        one = TruncatedSeries.constant(R, 1, 8)
        t = TruncatedSeries.t(R, 8)
        s = (one + t).sqrt()
        for k in range(8):
            assert s.coeffs[k] == frac_in(R, binomial_coeff(Fraction(1, 2), k))
        assert (s * s).agrees_with(one + t)


def test_sqrt_one_plus_t_squared():
    R = build_ring("F5")
    one = TruncatedSeries.constant(R, 1, 6)
    t = TruncatedSeries.t(R, 6)
    s = (one + t * t).sqrt()
    assert str(s) == "1 + 3*t^2 + 3*t^4 @prec=6"


def test_lagrange_inversion_oracle():
    """comp_inverse of f = t/(1-t) = sum_{k>=1} t^k is t/(1+t), whose
    coefficients alternate; checked against the Lagrange inversion formula
    for f = t + t^2: [t^n] f^{-1} = (1/n) [w^{n-1}] (w/(w + w^2))^n
    = (1/n) * binom(2n-2, n-1) * (-1)^(n-1) / ... computed directly."""
    R = build_ring("F5")
    t = TruncatedSeries.t(R, 8)
    one = TruncatedSeries.constant(R, 1, 8)
    f = t.div(one - t)
    g = f.comp_inverse()
    expected = t.div(one + t)  # exact closed form
    assert g.agrees_with(expected, g.prec)
    # Lagrange inversion for f = t + t^2: the inverse's t^n coefficient is
    # (1/n) * [w^{n-1}] (1 + w)^{-n} = (1/n) * binom(-n, n-1).
    f2 = t + t * t
    g2 = f2.comp_inverse()
    for n in range(1, g2.prec):
        c = Fraction(1, n) * binomial_coeff(Fraction(-n), n - 1)
        assert g2.coeffs[n] == frac_in(R, c)
    assert g2.coeffs[0] == R.zero


def test_division_examples():
    R = build_ring("F5")
    t = TruncatedSeries.t(R, 4)
    one = TruncatedSeries.constant(R, 1, 4)
    q = t.div(one + t)
    assert str(q) == "t + 4*t^2 + t^3 @prec=4"
    # re-multiplication closes
    assert (q * (one + t)).agrees_with(t)


# -- precision tracking ---------------------------------------------------------------

def test_precision_min_rule():
    R = build_ring("F5")
    a = TruncatedSeries.t(R, 9)
    b = TruncatedSeries.constant(R, 1, 6)
    assert (a + b).prec == 6
    assert (a * b).prec == 6


def test_compose_precision_loss_nilpotent_constant():
    R = build_ring("F5[e]/(e^3)")  # nilpotency index 3
    e = R.generator("e")
    outer = TruncatedSeries.t(R, 6)
    inner_no_c0 = TruncatedSeries.t(R, 6)
    inner_with_c0 = TruncatedSeries(R, [e, R.one], prec=6)
    assert outer.compose(inner_no_c0).prec == 6       # no loss when c0 = 0
    assert outer.compose(inner_with_c0).prec == 6 - (e.nilpotency_order() - 1)


def test_comp_inverse_precision_rule():
    R = build_ring("F5[e]/(e^2)")
    t = TruncatedSeries.t(R, 10)
    assert t.comp_inverse().prec == 10 - 2 * (R.nilpotency_index - 1)
    with pytest.raises(PrecisionError):
        TruncatedSeries.t(R, 2).comp_inverse()


def test_truncation_soundness():
    """Computing at higher precision then truncating agrees with computing
    at lower precision."""
    R = build_ring("Z/25")
    one = TruncatedSeries.constant(R, 1, 12)
    t = TruncatedSeries.t(R, 12)
    hi = (one + t * t + t).sqrt() * (one - t).inverse_unit()
    lo = ((one + t * t + t).truncate(7).sqrt()
          * (one - t).truncate(7).inverse_unit())
    assert hi.truncate(7) == lo


# -- structure helpers ---------------------------------------------------------------

def test_t_order_and_shift():
    R = build_ring("F5")
    s = TruncatedSeries(R, [0, 0, 3, 1], prec=6)
    assert s.t_order() == 2
    assert TruncatedSeries.zero(R, 5).t_order() is None
    shifted = s.shift_down(2)
    assert shifted.coeffs[0] == R.from_int(3)
    assert shifted.prec == 4


def test_derivative():
    R = build_ring("Z/25")
    s = TruncatedSeries(R, [1, 2, 3, 4], prec=4)
    d = s.derivative()
    assert d.coeffs[:3] == (R.from_int(2), R.from_int(6), R.from_int(12))


def test_exact_extension_polynomial():
    R = build_ring("F5")
    p = TruncatedSeries(R, [1, 1], prec=2)
    ext = p.exact_extension(6)
    assert ext.prec == 6
    assert ext.coeffs[2:] == (R.zero,) * 4


# -- serialization ----------------------------------------------------------------------

def test_literal_round_trip():
    R = build_ring("F5[e]/(e^2)")
    s = TruncatedSeries.from_literal(R, "(1+e) + 2*t + e*t^3 @prec=5")
    assert s.prec == 5
    assert TruncatedSeries.from_literal(R, str(s)) == s


def test_binary_round_trip():
    for desc in ("F5", "Z/25", "cyclo(3)"):
        R = build_ring(desc)
        t = TruncatedSeries.t(R, 7)
        one = TruncatedSeries.constant(R, 1, 7)
        s = (one + t).sqrt() * t
        assert TruncatedSeries.from_bytes(s.to_bytes()) == s


def test_binary_bad_magic():
    R = build_ring("F5")
    s = TruncatedSeries.t(R, 3)
    with pytest.raises(Exception):
        TruncatedSeries.from_bytes(b"XXXX" + s.to_bytes()[4:])
