"""Symbolic t-expansion of the conjugation identity

    g(t) / sqrt(g(t)^2 + y1)  =  g( t / sqrt(t^2 + y2) ),

with g = a0 + a1*t + a2*t^2 + a3*t^3, through t^3.  The left surd is
expanded as s1 * sqrt(1 + u) with u = (g^2 - a0^2)/(a0^2 + y1) (a series
with zero constant term), via the exact binomial series for (1+u)^(-1/2);
the right side substitutes the inner series t * (1/s2) * (1 + t^2/y2)^(-1/2).
Every t-coefficient is a SurdExpression; all binomial denominators are
powers of 2, units in the catalog rings.

g carries the extension symbol a3 even though the source writes
g = a0 + a1*t + a2*t^2 + O(t^3): the raw t^3 coefficients do involve a3,
and they are recorded as data rather than forced into the a3-free
third-order display (whose exact bookkeeping the source leaves implicit).
"""

from __future__ import annotations

import random

import sympy as sp

from ..artin.rings import build_ring
from ..deformation.proofchain import proof_chain_check
from ..series import TruncatedSeries
from .surd import A0, A1, A2, A3, Y1, Y2, SurdExpression

_HALF = sp.Rational(1, 2)


def _binomial_series_coeffs(alpha, n):
    """c_0..c_{n-1} of (1 + u)^alpha."""
    out = [sp.Integer(1)]
    for k in range(1, n):
        out.append(out[-1] * (alpha - (k - 1)) / k)
    return out


def _poly_mul(a, b, prec):
    out = [SurdExpression.of(0) for _ in range(prec)]
    for i, x in enumerate(a):
        if i >= prec:
            break
        for j, y in enumerate(b):
            if i + j >= prec:
                break
            out[i + j] = out[i + j] + x * y
    return out


def _g_coeffs():
    return [SurdExpression.of(s) for s in (A0, A1, A2, A3)]


def expand_lhs(prec: int = 4):
    """t^0..t^(prec-1) coefficients of g(t)/sqrt(g(t)^2 + y1)."""
    g = _g_coeffs()
    g_sq = _poly_mul(g, g, prec)
    r = SurdExpression.of(A0 ** 2 + Y1)
    u = [(g_sq[i] - (g_sq[0] if i == 0 else 0)) / r for i in range(prec)]
    u[0] = SurdExpression.of(0)  # g^2 - a0^2 has no constant term
    coeffs = _binomial_series_coeffs(-_HALF, prec)
    inv_sqrt = [SurdExpression.of(0) for _ in range(prec)]
    upow = [SurdExpression.of(1)] + [SurdExpression.of(0)] * (prec - 1)
    for k, c in enumerate(coeffs):
        if k:
            upow = _poly_mul(upow, u, prec)
        for i in range(prec):
            inv_sqrt[i] = inv_sqrt[i] + c * upow[i]
    inv_s1 = SurdExpression.s1() / r  # 1/s1 = s1/(a0^2+y1)
    return [c * inv_s1 for c in _poly_mul(g, inv_sqrt, prec)]


def inner_series(prec: int = 4):
    """t^0..t^(prec-1) coefficients of t/sqrt(t^2 + y2)."""
    coeffs = _binomial_series_coeffs(-_HALF, prec)
    inv_s2 = SurdExpression.s2() / SurdExpression.of(Y2)
    out = [SurdExpression.of(0) for _ in range(prec)]
    # (1 + t^2/y2)^(-1/2) has only even powers; multiply by t * (1/s2).
    for k, c in enumerate(coeffs):
        deg = 2 * k + 1
        if deg >= prec:
            break
        out[deg] = inv_s2 * (c / Y2 ** k)
    return out


def expand_rhs(prec: int = 4):
    """t^0..t^(prec-1) coefficients of g(t/sqrt(t^2 + y2))."""
    inner = inner_series(prec)
    out = [SurdExpression.of(0) for _ in range(prec)]
    power = [SurdExpression.of(1)] + [SurdExpression.of(0)] * (prec - 1)
    for k, gk in enumerate(_g_coeffs()):
        if k:
            power = _poly_mul(power, inner, prec)
        for i in range(prec):
            out[i] = out[i] + gk * power[i]
    return out


# -- the displayed equations ------------------------------------------------------

def displayed_eq3():
    """a0/s1 = a0 as (LHS, RHS)."""
    inv_s1 = SurdExpression.s1() / SurdExpression.of(A0 ** 2 + Y1)
    return SurdExpression.of(A0) * inv_s1, SurdExpression.of(A0)


def displayed_eq4():
    """a1/s1 - a0^2*a1/s1^3 = a1/s2 as (LHS, RHS)."""
    r = SurdExpression.of(A0 ** 2 + Y1)
    inv_s1 = SurdExpression.s1() / r
    inv_s1_cu = inv_s1 * inv_s1 * inv_s1
    lhs = (SurdExpression.of(A1) * inv_s1
           - SurdExpression.of(A0 ** 2 * A1) * inv_s1_cu)
    rhs = SurdExpression.of(A1) * (SurdExpression.s2() / SurdExpression.of(Y2))
    return lhs, rhs


def displayed_third_order():
    """The third-order display as (LHS, RHS)."""
    r = SurdExpression.of(A0 ** 2 + Y1)
    inv_s1 = SurdExpression.s1() / r
    inv_s1_cu = inv_s1 * inv_s1 * inv_s1
    lhs = (SurdExpression.of(A0 * A1 ** 2) * inv_s1_cu
           - SurdExpression.of(A0) * inv_s1
           * (SurdExpression.of(A0 ** 2 * A1 ** 2 / (A0 ** 2 + Y1) ** 2)
              + _HALF * (SurdExpression.of(A0 ** 2 * A1 ** 2
                                           / (A0 ** 2 + Y1) ** 2)
                         - SurdExpression.of((A1 ** 2 + 2 * A0 * A2)
                                             / (A0 ** 2 + Y1)))))
    rhs = (SurdExpression.of(A2) * inv_s1
           - SurdExpression.of(A2 / Y2))
    return lhs, rhs


def verify_displayed_equations():
    """Certify the t^0/t^1 coefficient equations symbolically against the
    displayed Eqs. (t^0: a0/s1 = a0; t^1: a1/s1 - a0^2*a1/s1^3 = a1/s2),
    record the raw t^2/t^3 coefficients, and report the downstream equations
    (Eq5, Eq6, the third-order display) as oracle-verified on finite rings
    via the proof chain, not symbolically derived."""
    lhs = expand_lhs(4)
    rhs = expand_rhs(4)
    eq3_l, eq3_r = displayed_eq3()
    eq4_l, eq4_r = displayed_eq4()
    t0_matches = (lhs[0] == eq3_l) and (rhs[0] == eq3_r)
    t1_matches = (lhs[1] == eq4_l) and (rhs[1] == eq4_r)
    # Third-order display vs. the raw t^3 coefficients: recorded, not asserted
    # (the source's a3-elimination bookkeeping is implicit).
    d3_l, d3_r = displayed_third_order()
    raw_t3_equals_display = ((lhs[3] - rhs[3]) == (d3_l - d3_r))
    oracle_rings = ("F5[e]/(e^2)", "F5[e]/(e^3)", "cyclo(2)", "cyclo(3)")
    oracle = {d: proof_chain_check(build_ring(d))["passed"]
              for d in oracle_rings}
    return {
        "t0_matches_eq3": t0_matches,
        "t1_matches_eq4": t1_matches,
        "eq3": {"lhs": eq3_l.canonical_str(), "rhs": eq3_r.canonical_str()},
        "eq4": {"lhs": eq4_l.canonical_str(), "rhs": eq4_r.canonical_str()},
        "raw_t2": {"lhs": lhs[2].canonical_str(),
                   "rhs": rhs[2].canonical_str()},
        "raw_t3": {"lhs": lhs[3].canonical_str(),
                   "rhs": rhs[3].canonical_str()},
        "third_order_display": {"lhs": d3_l.canonical_str(),
                                "rhs": d3_r.canonical_str()},
        "raw_t3_difference_equals_display_difference": raw_t3_equals_display,
        "downstream_verification": "oracle-verified",
        "oracle_proof_chain_passed": oracle,
        "passed": t0_matches and t1_matches and all(oracle.values()),
    }


# -- consistency with the concrete series engine ------------------------------------

_SAMPLE_RINGS = ("F5", "F25", "Z/25", "F5[e]/(e^2)", "F5[e]/(e^3)",
                 "cyclo(2)", "cyclo(3)")


def _sample_witness(ring, rng):
    one = ring.one
    mideal = list(ring.enumerate("maximal-ideal"))
    units = list(ring.enumerate("units"))
    elements = list(ring.enumerate())
    while True:
        a0 = rng.choice(mideal)
        a1 = rng.choice(units)
        a2 = rng.choice(elements)
        a3 = rng.choice(elements)
        y1 = one + rng.choice(mideal)
        y2 = one + rng.choice(mideal)
        base1, base2 = a0 * a0 + y1, y2
        try:
            roots1 = [base1.sqrt(b) for b in (ring.residue_ring.one,
                                              -ring.residue_ring.one)]
            roots2 = [base2.sqrt(b) for b in (ring.residue_ring.one,
                                              -ring.residue_ring.one)]
        except Exception:
            continue
        s1 = rng.choice(roots1)
        s2 = rng.choice(roots2)
        return dict(a0=a0, a1=a1, a2=a2, a3=a3, y1=y1, y2=y2, s1=s1, s2=s2)


def _engine_coefficients(ring, w, prec=4):
    """The same two sides computed directly by the series engine."""
    t = TruncatedSeries.t(ring, prec)
    g = TruncatedSeries(ring, [w["a0"], w["a1"], w["a2"], w["a3"]], prec=prec)
    body = g * g + TruncatedSeries.constant(ring, w["y1"], prec)
    lhs = g.div(body.sqrt(w["s1"].residue()))
    inner_body = t * t + TruncatedSeries.constant(ring, w["y2"], prec)
    inner = t.div(inner_body.sqrt(w["s2"].residue()))
    rhs = g.compose(inner)
    return lhs.coeffs, rhs.coeffs


def consistency_sample(n: int = 1000, seed: int = 20260823, prec: int = 4):
    """Evaluate every symbolic t^i coefficient at >= n random witnesses
    spread across the sample rings and compare with the series engine."""
    lhs_sym = expand_lhs(prec)
    rhs_sym = expand_rhs(prec)
    rng = random.Random(seed)
    per_ring = -(-n // len(_SAMPLE_RINGS))
    checked = 0
    mismatches = []
    for desc in _SAMPLE_RINGS:
        ring = build_ring(desc)
        for _ in range(per_ring):
            w = _sample_witness(ring, rng)
            lhs_eng, rhs_eng = _engine_coefficients(ring, w, prec)
            for i in range(prec):
                if (lhs_sym[i].evaluate(ring, w) != lhs_eng[i]
                        or rhs_sym[i].evaluate(ring, w) != rhs_eng[i]):
                    mismatches.append({"ring": desc, "t_power": i,
                                       "witness": {k: str(v)
                                                   for k, v in w.items()}})
            checked += 1
    return {
        "witnesses": checked,
        "coefficients_per_witness": 2 * prec,
        "mismatches": mismatches,
        "passed": not mismatches,
    }
