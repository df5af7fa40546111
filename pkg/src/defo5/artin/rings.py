"""Finite Artinian local rings with residue characteristic 5.

Rings come from a fixed constructor catalog:

    F5                          the prime field
    F25                         the quadratic extension F5[w]/(w^2 - 2)
    Z/5^n                       truncated Witt vectors (n >= 1)
    <base>[e]/(e^m)             nilpotent extension by a fresh generator
    cyclo(m)                    Z[u]/(Phi5(1+u), u^m)

Every ring is stored as a free presentation: a monomial basis, integer
structure constants for basis products, and a full-rank integer lattice of
additive relations kept in row Hermite normal form.  Elements are canonical
coordinate vectors over that basis; the canonical representative of a coset
has 0 <= c[j] < hnf[j][j] for every coordinate.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterator

ENUMERATION_BOUND = 1 << 24

# Phi5(1+u) = 5 + 10u + 10u^2 + 5u^3 + u^4
_PHI5_SHIFTED = (5, 10, 10, 5, 1)


class RingError(Exception):
    """Base class for ring-level failures."""


class DescriptorError(RingError):
    """The descriptor string does not parse or is out of documented bounds."""


class MismatchError(RingError):
    """Operands belong to different rings."""


class NotAUnitError(RingError):
    """Inversion (or square root) of a non-unit was requested."""


class NoSquareRootError(RingError):
    """The residue of the element is not a nonzero square."""


class EnumerationBoundError(RingError):
    """Enumeration was requested beyond the configured cardinality bound."""


def _hnf_rows(rows, dim):
    """Row Hermite normal form (upper triangular, positive pivots) of the
    lattice spanned by ``rows``.  Raises if the lattice is not full rank,
    which would mean the presented ring is infinite."""
    work = [list(r) for r in rows if any(r)]
    out = []
    for col in range(dim):
        pivots = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not pivots:
            raise RingError("additive relation lattice is not full rank")
        # Reduce all rows with a nonzero entry in `col` down to one via gcd.
        while len(pivots) > 1:
            pivots.sort(key=lambda r: abs(r[col]))
            a = pivots[0]
            for r in pivots[1:]:
                q = r[col] // a[col]
                for k in range(dim):
                    r[k] -= q * a[k]
            moved = [r for r in pivots[1:] if r[col] == 0]
            rest.extend(r for r in moved if any(r))
            pivots = [pivots[0]] + [r for r in pivots[1:] if r[col] != 0]
        pivot = pivots[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        out.append(pivot)
        work = [r for r in rest if any(r)]
    # Normalize entries above each pivot.
    for i in range(dim - 1, -1, -1):
        for k in range(i):
            q = out[k][i] // out[i][i]
            if q:
                for c in range(dim):
                    out[k][c] -= q * out[i][c]
    return tuple(tuple(r) for r in out)


class Ring:
    """A finite Artinian local ring from the constructor catalog."""

    def __init__(self, descriptor, basis, mul_basis, hnf, residue_ring,
                 residue_vecs, section_vecs, generators):
        self.descriptor = descriptor
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.mul_basis = mul_basis  # dim x dim table of canonical vectors
        self.hnf = hnf
        self.diag = tuple(hnf[i][i] for i in range(self.dim))
        # residue_ring is None for fields (they are their own residue field)
        self._residue_ring = residue_ring
        self._residue_vecs = residue_vecs
        self._section_vecs = section_vecs
        self._generator_vecs = dict(generators)
        self.cardinality = 1
        for d in self.diag:
            self.cardinality *= d
        self.zero = Element(self, self.reduce([0] * self.dim))
        one = [0] * self.dim
        one[0] = 1
        self.one = Element(self, self.reduce(one))
        self.char = self._additive_order_of_one()
        self.maximal_ideal_generators = self._mideal_generators()
        self.nilpotency_index = self._nilpotency_index()

    # -- construction helpers -------------------------------------------------

    def _additive_order_of_one(self):
        x = self.one
        n = 1
        while x.coords != self.zero.coords:
            x = x + self.one
            n += 1
            if n > self.cardinality:
                raise RingError("additive order overflow")
        return n

    def _mideal_generators(self):
        gens = []
        five = self.from_int(5)
        if five != self.zero:
            gens.append(five)
        for i in range(self.dim):
            vec = [0] * self.dim
            vec[i] = 1
            el = Element(self, self.reduce(vec))
            if el != self.zero and el.residue() == self.residue_ring.zero:
                gens.append(el)
        return tuple(gens)

    def _nilpotency_index(self):
        gens = [g for g in self.maximal_ideal_generators if g != self.zero]
        if not gens:
            return 1
        layer = set(g.coords for g in gens)
        e = 1
        while layer:
            e += 1
            nxt = set()
            for g in gens:
                for c in layer:
                    p = g * Element(self, c)
                    if p != self.zero:
                        nxt.add(p.coords)
            layer = nxt
            if e > self.cardinality:
                raise RingError("nilpotency index overflow")
        return e

    # -- canonical form --------------------------------------------------------

    def reduce(self, vec):
        v = list(vec)
        for j in range(self.dim):
            q = v[j] // self.hnf[j][j]
            if q:
                row = self.hnf[j]
                for k in range(j, self.dim):
                    v[k] -= q * row[k]
        return tuple(v)

    # -- element construction --------------------------------------------------

    @property
    def residue_ring(self):
        return self._residue_ring if self._residue_ring is not None else self

    @property
    def is_field(self):
        return self._residue_ring is None

    def element(self, coords):
        if len(coords) != self.dim:
            raise RingError("coordinate vector has wrong length")
        return Element(self, self.reduce(coords))

    def from_int(self, n):
        vec = [0] * self.dim
        vec[0] = n
        return Element(self, self.reduce(vec))

    def generator(self, name):
        try:
            return Element(self, self._generator_vecs[name])
        except KeyError:
            raise DescriptorError(
                f"ring {self.descriptor!r} has no generator {name!r}") from None

    @property
    def generator_names(self):
        return tuple(self._generator_vecs)

    def section(self, res):
        """A multiplicative-basis lift of a residue-field element."""
        if res.ring is not self.residue_ring:
            raise MismatchError("section argument must live in the residue field")
        acc = self.zero
        for i, c in enumerate(res.coords):
            if c:
                acc = acc + Element(self, self._section_vecs[i]) * c
        return acc

    # -- enumeration -----------------------------------------------------------

    def enumerate(self, which="all", bound=None):
        """Yield ring elements in the deterministic mixed-radix order.

        ``which`` is one of ``all``, ``maximal-ideal``, ``units``.
        """
        limit = ENUMERATION_BOUND if bound is None else bound
        if self.cardinality > limit:
            raise EnumerationBoundError(
                f"cardinality {self.cardinality} exceeds bound {limit}")
        if which not in ("all", "maximal-ideal", "units"):
            raise RingError(f"unknown enumeration filter {which!r}")
        rzero = self.residue_ring.zero
        for coords in itertools.product(*(range(d) for d in self.diag)):
            el = Element(self, coords)
            if which == "maximal-ideal" and el.residue() != rzero:
                continue
            if which == "units" and el.residue() == rzero:
                continue
            yield el

    # -- residue-field data ----------------------------------------------------

    @property
    def residue_square_roots(self):
        """Map residue-field element -> tuple of its square roots there."""
        if not hasattr(self, "_res_sqrt"):
            k = self.residue_ring
            table = {}
            for x in k.enumerate():
                table.setdefault((x * x).coords, []).append(x)
            self._res_sqrt = {c: tuple(v) for c, v in table.items()}
        return self._res_sqrt

    def __repr__(self):
        return f"Ring({self.descriptor!r})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)


class Element:
    """An element of a catalog ring, stored as a canonical coordinate vector."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = tuple(coords)

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, Element):
            return NotImplemented
        if other.ring != self.ring:
            raise MismatchError(
                f"elements of {self.ring.descriptor!r} and {other.ring.descriptor!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.reduce(
            [a + b for a, b in zip(self.coords, other.coords)]))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring.reduce(
            [a - b for a, b in zip(self.coords, other.coords)]))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return Element(self.ring, self.ring.reduce([-a for a in self.coords]))

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, self.ring.reduce(
                [a * other for a in self.coords]))
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring
        acc = [0] * ring.dim
        for i, ai in enumerate(self.coords):
            if not ai:
                continue
            row = ring.mul_basis[i]
            for j, bj in enumerate(other.coords):
                if not bj:
                    continue
                c = ai * bj
                vec = row[j]
                for k, vk in enumerate(vec):
                    if vk:
                        acc[k] += c * vk
        return Element(ring, ring.reduce(acc))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash((self.ring.descriptor, self.coords))

    def residue(self):
        ring = self.ring
        if ring.is_field:
            return self
        k = ring.residue_ring
        acc = [0] * k.dim
        for i, c in enumerate(self.coords):
            if c:
                for j, v in enumerate(ring._residue_vecs[i]):
                    acc[j] += c * v
        return Element(k, k.reduce(acc))

    def is_unit(self):
        return self.residue() != self.ring.residue_ring.zero

    def in_maximal_ideal(self):
        return self.residue() == self.ring.residue_ring.zero

    def nilpotency_order(self):
        """Least n with self**n == 0; raises for units."""
        if self.is_unit():
            raise NotAUnitError("units are not nilpotent")
        x = self
        n = 1
        while x != self.ring.zero:
            x = x * self
            n += 1
            if n > self.ring.nilpotency_index + 1:
                raise RingError("nilpotency order overflow")
        return n

    def inv(self):
        """Exact inverse of a unit (Newton lift of the residue inverse)."""
        if not self.is_unit():
            raise NotAUnitError(f"{self} is not a unit")
        k = self.ring.residue_ring
        res = self.residue()
        rinv = None
        for cand in k.enumerate():
            if res * cand == k.one:
                rinv = cand
                break
        r = self.ring.section(rinv)
        two = self.ring.from_int(2)
        for _ in range(64):
            prod = self * r
            if prod == self.ring.one:
                return r
            r = r * (two - prod)
        raise RingError("unit inversion did not converge")

    def sqrt(self, branch=None):
        """Exact square root of a unit whose residue is a nonzero square.

        ``branch`` selects the residue-field root (an Element of the residue
        field, or an int for F5).  Default: the principal branch, i.e. the
        root with the lexicographically smallest canonical coordinates.
        """
        if not self.is_unit():
            raise NotAUnitError("square roots are only taken of units")
        k = self.ring.residue_ring
        res = self.residue()
        roots = self.ring.residue_square_roots.get(res.coords, ())
        roots = [r for r in roots if r != k.zero]
        if not roots:
            raise NoSquareRootError(
                f"residue {res} is not a nonzero square in {k.descriptor}")
        if branch is None:
            pick = min(roots, key=lambda r: r.coords)
        else:
            if isinstance(branch, int):
                branch = k.from_int(branch)
            if branch.ring != k:
                raise MismatchError("branch must live in the residue field")
            if branch not in roots:
                raise NoSquareRootError(
                    f"{branch} is not a square root of residue {res}")
            pick = branch
        r = self.ring.section(pick)
        half = self.ring.from_int(2).inv()
        for _ in range(64):
            if r * r == self:
                return r
            r = (r + self * r.inv()) * half
        raise RingError("square-root Newton iteration did not converge")

    def __repr__(self):
        return f"<{self} in {self.ring.descriptor}>"

    def __str__(self):
        parts = []
        for c, name in zip(self.coords, self.ring.basis):
            if not c:
                continue
            if name == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts) if parts else "0"


# -- constructors --------------------------------------------------------------


def _make_f5():
    return Ring(
        descriptor="F5",
        basis=("1",),
        mul_basis=(((1,),),),
        hnf=((5,),),
        residue_ring=None,
        residue_vecs=((1,),),
        section_vecs=((1,),),
        generators={},
    )


def _make_f25():
    # F25 = F5[w]/(w^2 - 2); 2 is a non-square mod 5.
    mul = (
        ((1, 0), (0, 1)),
        ((0, 1), (2, 0)),
    )
    return Ring(
        descriptor="F25",
        basis=("1", "w"),
        mul_basis=mul,
        hnf=((5, 0), (0, 5)),
        residue_ring=None,
        residue_vecs=((1, 0), (0, 1)),
        section_vecs=((1, 0), (0, 1)),
        generators={"w": (0, 1)},
    )


def _make_zmod(n, f5):
    if n < 1:
        raise DescriptorError("Z/5^n needs n >= 1")
    if n == 1:
        return f5
    return Ring(
        descriptor=f"Z/5^{n}",
        basis=("1",),
        mul_basis=(((1,),),),
        hnf=((5 ** n,),),
        residue_ring=f5,
        residue_vecs=((1,),),
        section_vecs=((1,),),
        generators={},
    )


def _make_nilpotent_extension(base, name, m):
    if m < 2:
        raise DescriptorError("nilpotent extension needs exponent >= 2")
    if name in base.generator_names or name in ("w", "u"):
        raise DescriptorError(f"generator name {name!r} already in use")
    d = base.dim
    dim = d * m
    basis = []
    for s in range(m):
        for b in base.basis:
            if s == 0:
                basis.append(b)
            else:
                pw = name if s == 1 else f"{name}^{s}"
                basis.append(pw if b == "1" else f"{b}*{pw}")
    mul = [[None] * dim for _ in range(dim)]
    zero = tuple([0] * dim)
    for s in range(m):
        for i in range(d):
            for r in range(m):
                for j in range(d):
                    if s + r >= m:
                        vec = zero
                    else:
                        bvec = base.mul_basis[i][j]
                        out = [0] * dim
                        off = (s + r) * d
                        for k, v in enumerate(bvec):
                            out[off + k] = v
                        vec = tuple(out)
                    mul[s * d + i][r * d + j] = vec
    hnf = [[0] * dim for _ in range(dim)]
    for s in range(m):
        for i in range(d):
            for j in range(d):
                hnf[s * d + i][s * d + j] = base.hnf[i][j]
    res = base.residue_ring
    res_vecs = []
    for s in range(m):
        for i in range(d):
            if s == 0:
                res_vecs.append(base._residue_vecs[i])
            else:
                res_vecs.append(tuple([0] * res.dim))
    section_vecs = []
    for i in range(res.dim):
        v = [0] * dim
        v[:d] = list(base._section_vecs[i])
        section_vecs.append(tuple(v))
    gens = {}
    for g, vec in base._generator_vecs.items():
        v = [0] * dim
        v[:d] = list(vec)
        gens[g] = tuple(v)
    gv = [0] * dim
    gv[d] = 1
    gens[name] = tuple(gv)
    ring = Ring(
        descriptor=f"{base.descriptor}[{name}]/({name}^{m})",
        basis=basis,
        mul_basis=tuple(tuple(r) for r in mul),
        hnf=tuple(tuple(r) for r in hnf),
        residue_ring=res,
        residue_vecs=tuple(res_vecs),
        section_vecs=tuple(section_vecs),
        generators=gens,
    )
    return ring


def _cyclo_reduce_poly(coeffs, m):
    """Reduce an integer polynomial in u using u^4 -> -5-10u-10u^2-5u^3 (when
    the basis has degree 4) and u^m -> 0, down to length min(m, 4)."""
    d = min(m, 4)
    work = list(coeffs)
    if m >= 5:
        while len(work) > 4:
            top = work.pop()
            if top:
                # u^(len) = u^(len-4) * u^4
                k = len(work) - 4
                for i, c in enumerate(_PHI5_SHIFTED[:4]):
                    work[k + i] -= top * c
        while len(work) < 4:
            work.append(0)
    else:
        work = work[:m] + [0] * max(0, m - len(work))
        work = work[:d]
        while len(work) < d:
            work.append(0)
    return work[:d] + [0] * (d - len(work))


def _make_cyclo(m, f5):
    if m < 1:
        raise DescriptorError("cyclo(m) needs m >= 1")
    if m > 8:
        raise DescriptorError("cyclo(m) supported for m <= 8 (25 = 0 there)")
    d = min(m, 4)
    rel_rows = []
    if m >= 5:
        for j in range(4):
            rel_rows.append(_cyclo_reduce_poly([0] * (m + j) + [1], m))
    else:
        phi = list(_PHI5_SHIFTED)
        for j in range(d):
            rel_rows.append(_cyclo_reduce_poly([0] * j + phi, m))
    hnf = _hnf_rows(rel_rows, d)

    def reduce_vec(vec):
        v = list(vec)
        for j in range(d):
            q = v[j] // hnf[j][j]
            if q:
                for k in range(j, d):
                    v[k] -= q * hnf[j][k]
        return tuple(v)

    mul = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(reduce_vec(_cyclo_reduce_poly([0] * (i + j) + [1], m)))
        mul.append(tuple(row))
    if m == 1:
        gens = {}
    else:
        gens = {"u": reduce_vec([0, 1] + [0] * (d - 2)) if d >= 2 else (0,)}
    res_vecs = [(1,)] + [(0,)] * (d - 1)
    return Ring(
        descriptor=f"cyclo({m})",
        basis=tuple("1" if i == 0 else ("u" if i == 1 else f"u^{i}")
                    for i in range(d)),
        mul_basis=tuple(mul),
        hnf=hnf,
        residue_ring=f5,
        residue_vecs=tuple(res_vecs),
        section_vecs=(tuple([1] + [0] * (d - 1)),),
        generators=gens,
    )


# -- descriptor grammar ---------------------------------------------------------

_ATOM_RE = re.compile(
    r"^(?:(F5|F25)|Z/5\^(\d+)|Z/(\d+)|cyclo\((\d+)\))")
_SUFFIX_RE = re.compile(r"^\[([A-Za-z][A-Za-z0-9]*)\]/\(([A-Za-z][A-Za-z0-9]*)\^(\d+)\)")


@lru_cache(maxsize=None)
def build_ring(descriptor: str) -> Ring:
    """Build a catalog ring from its descriptor string.

    Grammar: ``F5``, ``F25``, ``Z/5^<n>`` (also ``Z/<5^n>`` literals),
    ``cyclo(<m>)``, and nilpotent extensions ``<base>[e]/(e^<m>)``.
    """
    text = descriptor.replace(" ", "")
    f5 = _F5
    m = _ATOM_RE.match(text)
    if not m:
        raise DescriptorError(f"cannot parse ring descriptor {descriptor!r}")
    if m.group(1) == "F5":
        ring = f5
    elif m.group(1) == "F25":
        ring = _F25
    elif m.group(2) is not None:
        ring = _make_zmod(int(m.group(2)), f5)
    elif m.group(3) is not None:
        n = int(m.group(3))
        e = 0
        while n > 1 and n % 5 == 0:
            n //= 5
            e += 1
        if n != 1 or e < 1:
            raise DescriptorError(f"Z/<n> must have n a power of 5: {descriptor!r}")
        ring = _make_zmod(e, f5)
    else:
        ring = _make_cyclo(int(m.group(4)), f5)
    rest = text[m.end():]
    while rest:
        sm = _SUFFIX_RE.match(rest)
        if not sm:
            raise DescriptorError(f"cannot parse ring descriptor {descriptor!r}")
        name, name2, power = sm.group(1), sm.group(2), int(sm.group(3))
        if name != name2:
            raise DescriptorError(
                f"generator names disagree in {descriptor!r}: {name} vs {name2}")
        ring = _make_nilpotent_extension(ring, name, power)
        rest = rest[sm.end():]
    return ring


_F5 = _make_f5()
_F25 = _make_f25()
