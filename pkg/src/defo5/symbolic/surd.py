"""Exact rational expressions in a0, a1, a2, a3, y1, y2 with the two surds
s1 = sqrt(a0^2 + y1) and s2 = sqrt(y2) adjoined.

A SurdExpression is a rank-4 module element

    c00 + c10*s1 + c01*s2 + c11*s1*s2

whose components are exact rational functions over Q; the relations
s1^2 = a0^2 + y1 and s2^2 = y2 are applied eagerly, so surd exponents never
exceed 1.  Inversion rationalizes through the four sign-conjugates
(s1 -> +-s1, s2 -> +-s2): an expression is invertible exactly when its
algebra norm (the product of the conjugates, a plain rational function) is
nonzero.  All coefficient arithmetic is characteristic 0; specialization to
the finite catalog rings happens only in evaluate(), where the denominators
that actually occur (powers of a0^2 + y1, y2 and 2) are units.
"""

from __future__ import annotations

from numbers import Rational as _PyRational

import sympy as sp

A0, A1, A2, A3, Y1, Y2 = sp.symbols("a0 a1 a2 a3 y1 y2")
SYMBOLS = (A0, A1, A2, A3, Y1, Y2)

_S1_SQ = A0 ** 2 + Y1
_S2_SQ = Y2


class SurdError(ValueError):
    pass


def _norm(e):
    return sp.cancel(sp.together(sp.sympify(e)))


class SurdExpression:
    """c00 + c10*s1 + c01*s2 + c11*s1*s2 with rational-function components."""

    __slots__ = ("c00", "c10", "c01", "c11")

    def __init__(self, c00=0, c10=0, c01=0, c11=0):
        self.c00 = _norm(c00)
        self.c10 = _norm(c10)
        self.c01 = _norm(c01)
        self.c11 = _norm(c11)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def s1(cls):
        return cls(0, 1, 0, 0)

    @classmethod
    def s2(cls):
        return cls(0, 0, 1, 0)

    @classmethod
    def of(cls, expr):
        """A surd-free expression (symbol, rational, or combination)."""
        return cls(expr, 0, 0, 0)

    # -- ring structure -------------------------------------------------------

    def _components(self):
        return (self.c00, self.c10, self.c01, self.c11)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return all(sp.cancel(a - b) == 0
                   for a, b in zip(self._components(), other._components()))

    def __hash__(self):
        return hash(tuple(self._components()))

    def is_zero(self):
        return all(c == 0 for c in self._components())

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SurdExpression(*(a + b for a, b in
                                zip(self._components(), other._components())))

    __radd__ = __add__

    def __neg__(self):
        return SurdExpression(*(-c for c in self._components()))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        x00, x10, x01, x11 = self._components()
        y00, y10, y01, y11 = other._components()
        r, s = _S1_SQ, _S2_SQ
        return SurdExpression(
            x00 * y00 + r * x10 * y10 + s * x01 * y01 + r * s * x11 * y11,
            x00 * y10 + x10 * y00 + s * (x01 * y11 + x11 * y01),
            x00 * y01 + x01 * y00 + r * (x10 * y11 + x11 * y10),
            x00 * y11 + x11 * y00 + x10 * y01 + x01 * y10,
        )

    __rmul__ = __mul__

    # -- conjugates, norm, inversion -------------------------------------------

    def conj_s1(self):
        return SurdExpression(self.c00, -self.c10, self.c01, -self.c11)

    def conj_s2(self):
        return SurdExpression(self.c00, self.c10, -self.c01, -self.c11)

    def algebra_norm(self):
        """Product of the four sign-conjugates; a plain rational function."""
        z = self * self.conj_s1()
        w = z * z.conj_s2()
        if w.c10 != 0 or w.c01 != 0 or w.c11 != 0:
            raise SurdError("norm failed to rationalize")  # pragma: no cover
        return w.c00

    def is_invertible(self):
        return self.algebra_norm() != 0

    def inverse(self):
        n = self.algebra_norm()
        if n == 0:
            raise SurdError(f"{self} is not invertible (zero norm)")
        z = self * self.conj_s1()
        return self.conj_s1() * z.conj_s2() * SurdExpression.of(1 / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    # -- presentation -----------------------------------------------------------

    def canonical_str(self):
        parts = []
        for comp, tag in zip(self._components(), ("", "s1", "s2", "s1*s2")):
            if comp == 0:
                continue
            body = sp.sstr(sp.cancel(comp), order="lex")
            parts.append(f"({body})*{tag}" if tag else f"({body})")
        return " + ".join(parts) if parts else "(0)"

    def __repr__(self):
        return f"SurdExpression[{self.canonical_str()}]"

    def subs_sign(self, flip_s1=False, flip_s2=False):
        """The expression on the other square-root branch(es)."""
        out = self
        if flip_s1:
            out = out.conj_s1()
        if flip_s2:
            out = out.conj_s2()
        return out

    # -- specialization -----------------------------------------------------------

    def evaluate(self, ring, witness):
        """Exact value in a catalog ring.  ``witness`` maps the symbol names
        a0, a1, a2, a3, y1, y2 to ring elements and s1, s2 to the chosen
        square roots of a0^2 + y1 and y2 (both must square correctly).
        Denominators must evaluate to units."""
        s1v, s2v = witness["s1"], witness["s2"]
        a0v, y1v, y2v = witness["a0"], witness["y1"], witness["y2"]
        if s1v * s1v != a0v * a0v + y1v:
            raise SurdError("witness s1 is not a square root of a0^2 + y1")
        if s2v * s2v != y2v:
            raise SurdError("witness s2 is not a square root of y2")
        vals = [_eval_rational(c, ring, witness) for c in self._components()]
        return (vals[0] + vals[1] * s1v + vals[2] * s2v
                + vals[3] * s1v * s2v)


def _coerce(x):
    if isinstance(x, SurdExpression):
        return x
    if isinstance(x, (int, _PyRational, sp.Expr)):
        return SurdExpression.of(x)
    return NotImplemented


_NAMES = tuple(str(s) for s in SYMBOLS)
_terms_cache: dict = {}


def _poly_terms(poly_expr):
    """[(numerator, denominator, monomial exponents), ...], cached."""
    terms = _terms_cache.get(poly_expr)
    if terms is None:
        poly = sp.Poly(poly_expr, *SYMBOLS)
        terms = tuple((int(sp.Rational(c).p), int(sp.Rational(c).q), m)
                      for m, c in poly.terms())
        _terms_cache[poly_expr] = terms
    return terms


def _eval_poly(poly_expr, ring, witness):
    total = ring.zero
    for num, den, monom in _poly_terms(poly_expr):
        term = ring.from_int(num)
        if den != 1:
            term = term * ring.from_int(den).inv()
        for name, exp in zip(_NAMES, monom):
            base = witness[name]
            for _ in range(exp):
                term = term * base
        total = total + term
    return total


_fraction_cache: dict = {}


def _eval_rational(expr, ring, witness):
    pair = _fraction_cache.get(expr)
    if pair is None:
        pair = _fraction_cache[expr] = sp.fraction(sp.cancel(sp.together(expr)))
    num_v = _eval_poly(pair[0], ring, witness)
    den_v = _eval_poly(pair[1], ring, witness)
    return num_v * den_v.inv()
