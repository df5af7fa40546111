"""Obstruction to deforming sigma over Z/5^n (n >= 2).

The versal ring has no points in Z/5^n for n >= 2, so sigma admits no lift
there.  For n = 2 this is certified directly: any candidate lift over Z/25
is sigma_W + 5*d with sigma_W the principal-branch t/sqrt(t^2+1) over Z/25
and d over F5, and since (5d)^2 = 0 the order-5 condition is the
inhomogeneous linear system Z*d = -(sigma_W^5 - t)/5 over F5, with Z the
tangent-space cocycle matrix.  The system is certified inconsistent by
exact row reduction.
"""

from __future__ import annotations

import re

from .. import gf5
from ..artin.rings import DescriptorError, RingError, build_ring
from ..nottingham import base_sigma, power
from ..series import TruncatedSeries
from .tangent import COCYCLE_SHIFT, cocycle_matrix
from .versal import hom_points

_ZMOD_RE = re.compile(r"Z/5\^(\d+)$|Z/(\d+)$")


def _zmod_exponent(descriptor: str) -> int:
    m = _ZMOD_RE.match(descriptor.strip())
    if not m:
        raise DescriptorError(f"{descriptor!r} is not a Z/5^n descriptor")
    if m.group(1) is not None:
        return int(m.group(1))
    q = int(m.group(2))
    n = 0
    while q > 1 and q % 5 == 0:
        q //= 5
        n += 1
    if q != 1:
        raise DescriptorError(f"{descriptor!r} is not a Z/5^n descriptor")
    return n


def sigma_w(prec: int):
    """The principal-branch t/sqrt(t^2+1) over Z/25."""
    return base_sigma(build_ring("Z/25"), prec)


def defect_vector(prec: int):
    """(sigma_W^5 - t)/5 over F5 through t^(prec-1)."""
    ring = build_ring("Z/25")
    internal = prec + 4
    aut = sigma_w(internal)
    t = TruncatedSeries.t(ring, internal)
    diff = power(aut, 5).series - t
    out = []
    for i in range(prec):
        v = diff.coeffs[i].coords[0]
        if v % 5 != 0:
            raise RingError(f"sigma_W^5 - t has a unit coefficient at t^{i}")
        out.append((v // 5) % 5)
    return out


def obstruction_check(descriptor: str, prec: int):
    """Report that sigma has no lift over Z/5^n: hom_points empty for any
    n >= 2, and for n = 2 the linear order-5 system certified inconsistent."""
    n = _zmod_exponent(descriptor)
    if n < 2:
        raise RingError("obstruction_check expects n >= 2")
    ring = build_ring(descriptor)
    pts = hom_points(ring)
    report = {
        "ring": ring.descriptor,
        "prec": prec,
        "hom_points": len(pts),
        "hom_points_empty": not pts,
    }
    if n == 2:
        rows = prec + COCYCLE_SHIFT
        defect = defect_vector(rows)
        lead = next((i for i, v in enumerate(defect) if v), None)
        Z = cocycle_matrix(prec)
        consistent = gf5.solvable(Z, [(-v) % 5 for v in defect])
        report.update({
            "defect_leading_order": lead,
            "defect_leading_coeff": defect[lead] if lead is not None else None,
            "linear_system_consistent": consistent,
        })
        report["obstructed"] = report["hom_points_empty"] and not consistent
    else:
        report["obstructed"] = report["hom_points_empty"]
    return report
