"""Randomized property suites (fixed seed corpus, derandomized): ring
axioms, re-multiplication checks, composition associativity, precision
soundness, conjugation invariance, and the chain rule."""

from hypothesis import given, settings, strategies as st

from defo5.artin.rings import build_ring
from defo5.nottingham import Automorphism, base_sigma, conjugate, \
    hasse_conductor, order
from defo5.series import TruncatedSeries

_RING_DESCS = ("F5", "F25", "Z/25", "F5[e]/(e^2)", "F5[e]/(e^3)", "cyclo(3)")
_RINGS = {d: build_ring(d) for d in _RING_DESCS}
_ELEMENTS = {d: list(r.enumerate()) for d, r in _RINGS.items()}
_UNITS = {d: list(r.enumerate("units")) for d, r in _RINGS.items()}

_SETTINGS = settings(max_examples=60, derandomize=True, deadline=None)

ring_desc = st.sampled_from(_RING_DESCS)


def element(draw, desc):
    return draw(st.sampled_from(_ELEMENTS[desc]))


@st.composite
def three_elements(draw):
    desc = draw(ring_desc)
    return (desc, element(draw, desc), element(draw, desc),
            element(draw, desc))


@_SETTINGS
@given(three_elements())
def test_ring_axioms(data):
    desc, a, b, c = data
    R = _RINGS[desc]
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + R.zero == a
    assert a * R.one == a
    assert a + (-a) == R.zero


@st.composite
def unit_and_element(draw):
    desc = draw(ring_desc)
    return desc, draw(st.sampled_from(_UNITS[desc])), element(draw, desc)


@_SETTINGS
@given(unit_and_element())
def test_inverse_and_sqrt_remultiplication(data):
    desc, u, a = data
    R = _RINGS[desc]
    assert u * u.inv() == R.one
    sq = u * u
    root = sq.sqrt(u.residue())
    assert root * root == sq
    assert root.residue() == u.residue()
    # local ring dichotomy
    assert a.is_unit() != a.in_maximal_ideal()


@st.composite
def series_pair(draw):
    desc = draw(ring_desc)
    R = _RINGS[desc]
    prec = draw(st.integers(min_value=3, max_value=7))
    els = _ELEMENTS[desc]
    f = TruncatedSeries(R, [draw(st.sampled_from(els)) for _ in range(prec)],
                        prec=prec)
    g = TruncatedSeries(R, [draw(st.sampled_from(els)) for _ in range(prec)],
                        prec=prec)
    return f, g


@_SETTINGS
@given(series_pair())
def test_series_ring_laws(pair):
    f, g = pair
    assert f * g == g * f
    assert (f + g) - g == f.truncate((f + g).prec)


@_SETTINGS
@given(series_pair())
def test_division_remultiplies(pair):
    f, g = pair
    if not g.coeffs[0].is_unit():
        return
    q = f.div(g)
    assert (q * g).agrees_with(f, q.prec)


@st.composite
def automorphism_triple(draw):
    R = _RINGS["F5"]
    prec = 8
    units = [R.from_int(v) for v in range(1, 5)]
    scalars = [R.from_int(v) for v in range(5)]

    def one_aut():
        coeffs = [R.zero, draw(st.sampled_from(units))]
        coeffs += [draw(st.sampled_from(scalars)) for _ in range(prec - 2)]
        return Automorphism(TruncatedSeries(R, coeffs, prec=prec))

    return one_aut(), one_aut(), one_aut()


@_SETTINGS
@given(automorphism_triple())
def test_composition_associativity(triple):
    a, b, c = triple
    left = a(b)(c)
    right = a(b(c))
    assert left.series.agrees_with(right.series,
                                   min(left.prec, right.prec))


@_SETTINGS
@given(automorphism_triple())
def test_composition_inverse_round_trip(triple):
    a, _, _ = triple
    both = a(a.inverse()).series
    assert both.agrees_with(TruncatedSeries.t(a.ring, both.prec))


@_SETTINGS
@given(automorphism_triple())
def test_precision_soundness_of_composition(triple):
    """Truncating inputs first never changes the agreed prefix."""
    a, b, _ = triple
    full = a(b)
    trunc = Automorphism(a.series.truncate(5))(
        Automorphism(b.series.truncate(5)))
    assert full.series.agrees_with(trunc.series, trunc.prec)


@_SETTINGS
@given(automorphism_triple())
def test_conjugation_invariance(triple):
    xi, _, _ = triple
    R = _RINGS["F5"]
    sigma = base_sigma(R, 12)
    conj = conjugate(sigma, Automorphism(xi.series.exact_extension(12)))
    assert order(conj, 6)[0] == 5
    assert hasse_conductor(conj)[0] == 2


@_SETTINGS
@given(series_pair())
def test_chain_rule(pair):
    f, g = pair
    R = f.ring
    inner = TruncatedSeries(R, [R.zero] + list(g.coeffs[1:]), prec=g.prec)
    composed = f.compose(inner)
    lhs = composed.derivative()
    rhs = f.derivative().compose(inner) * inner.derivative()
    assert lhs.agrees_with(rhs, min(lhs.prec, rhs.prec))
