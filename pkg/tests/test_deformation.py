"""Versal points, lifts, equivalence scans, obstruction, and the proof
chain; the proof chain is cross-checked against an independent brute force
that evaluates the literal displayed equations over every witness."""

import numpy as np
import pytest

from defo5.artin.rings import build_ring
from defo5.deformation.equivalence import (conjugator_search, equivalent,
                                           ring_table, universality_scan)
from defo5.deformation.obstruction import defect_vector, obstruction_check
from defo5.deformation.proofchain import (CATALOG, catalog_rings,
                                          locality_example_z25,
                                          proof_chain_check, proof_chain_scan)
from defo5.deformation.versal import (VersalPoint, hom_points, is_lift,
                                      iterate_closed_form, lift_certificate,
                                      phi5, versal_family)
from defo5.nottingham import Automorphism, base_sigma, conjugate, power
from defo5.series import TruncatedSeries


# -- versal points -----------------------------------------------------------------

@pytest.mark.parametrize("desc,count", [
    ("F5", 1), ("F25", 1), ("Z/25", 0), ("Z/125", 0),
    ("F5[e]/(e^2)", 5), ("F5[e]/(e^3)", 25), ("cyclo(2)", 5), ("cyclo(3)", 25),
])
def test_hom_point_counts(desc, count):
    assert len(hom_points(build_ring(desc))) == count


def test_versal_point_validation():
    R = build_ring("F5[e]/(e^2)")
    with pytest.raises(Exception):
        VersalPoint(R, R.from_int(2))  # Phi5(2) = 31 != 0 and 2 != 1 mod m


def test_versal_family_reduction_is_sigma():
    R = build_ring("F5[e]/(e^2)")
    sig = base_sigma(build_ring("F5"), 8)
    for p in hom_points(R):
        fam = versal_family(p, 8)
        assert fam.reduce_residue().series == sig.series


def test_lift_certificates_cyclo():
    for m in (2, 3, 4, 5):
        R = build_ring(f"cyclo({m})")
        p = VersalPoint(R, R.one + R.generator("u"))
        ok, detail = lift_certificate(p, 16)
        assert ok, detail


def test_iterates_closed_form():
    for desc in ("F5", "F25", "F5[e]/(e^2)", "cyclo(3)"):
        R = build_ring(desc)
        for p in hom_points(R):
            fam = versal_family(p, 12)
            for k in range(6):
                closed = iterate_closed_form(p, k, 12)
                direct = power(fam, k)
                assert closed.series.agrees_with(direct.series, direct.prec)


def test_fifth_iterate_is_identity():
    R = build_ring("F5[e]/(e^2)")
    for p in hom_points(R):
        it5 = iterate_closed_form(p, 5, 10)
        assert it5.series == TruncatedSeries.t(R, 10)


def test_is_lift_rejects_wrong_reduction():
    R = build_ring("F5[e]/(e^2)")
    # 2t + ... reduces to 2t, not sigma
    bad = Automorphism(TruncatedSeries(R, [0, 2], prec=20))
    ok, detail = is_lift(bad, 12)
    assert not ok and "reduction" in detail


# -- equivalence --------------------------------------------------------------------

def test_universality_scan_dual_numbers():
    rep = universality_scan(build_ring("F5[e]/(e^2)"), 4)
    assert rep["diagonal_equivalent"] == 5
    assert rep["off_diagonal_refuted"] == 20
    assert rep["all_as_predicted"]


def test_universality_scan_e3():
    rep = universality_scan(build_ring("F5[e]/(e^3)"), 4)
    assert rep["diagonal_equivalent"] == 25
    assert rep["off_diagonal_refuted"] == 600
    assert rep["all_as_predicted"]


def test_plant_and_recover_conjugator():
    R = build_ring("F5[e]/(e^2)")
    e = R.generator("e")
    p = hom_points(R)[1]
    prec = 4
    slack = R.nilpotency_index - 1
    fam = versal_family(p, 12)
    xi = Automorphism(TruncatedSeries(R, [e, R.one + e, e], prec=10))
    planted = conjugate(fam, xi)
    found = equivalent(fam, Automorphism(planted.series), prec)
    assert found is not None
    left = found.series.exact_extension(prec + slack).compose(
        fam.series.truncate(prec))
    right = planted.series.truncate(prec + slack).compose(
        found.series.exact_extension(prec + slack))
    assert left.agrees_with(right, prec)


def test_equivalence_symmetry_and_transitivity():
    R = build_ring("F5[e]/(e^2)")
    pts = hom_points(R)
    fams = [versal_family(p, 8) for p in pts]
    xi01, _ = conjugator_search(fams[0], fams[0], 4)
    assert xi01 is not None  # reflexive
    assert conjugator_search(fams[0], fams[1], 4)[0] is None
    assert conjugator_search(fams[1], fams[0], 4)[0] is None  # symmetric


# -- obstruction ---------------------------------------------------------------------

def test_defect_vector_leading_term():
    d = defect_vector(8)
    assert d[:4] == [0, 0, 0, 2]  # -t^3/2 = 2 t^3 over F5


def test_obstruction_z25():
    rep = obstruction_check("Z/25", 8)
    assert rep["hom_points_empty"]
    assert rep["defect_leading_order"] == 3
    assert not rep["linear_system_consistent"]
    assert rep["obstructed"]


def test_obstruction_higher_n():
    rep = obstruction_check("Z/125", 8)
    assert rep["hom_points_empty"] and rep["obstructed"]


# -- proof chain ---------------------------------------------------------------------

def test_catalog_contents():
    rings = catalog_rings()
    assert [r.descriptor for r in rings] == [
        build_ring(d).descriptor for d in CATALOG]
    assert all(r.cardinality <= 625 for r in rings)


def test_proof_chain_zero_counterexamples_small():
    for desc in ("F5", "F25", "F5[e]/(e^2)", "cyclo(2)", "Z/25"):
        rep = proof_chain_check(desc)
        assert rep["passed"], rep
        assert rep["counterexamples"] == 0


def test_proof_chain_scan_parallel_matches_serial():
    serial = proof_chain_scan(max_cardinality=125, jobs=1)
    parallel = proof_chain_scan(max_cardinality=125, jobs=2)
    assert serial == parallel
    assert serial["passed"]


def test_displayed_sign_of_final_identity():
    """The source's closing display a0*(1/s2 - 1) = a0^3 holds only up to
    sign; the corrected statement a0*(1 - 1/s2) = a0^3 is what step (iv)
    verifies.  The displayed sign fails exactly where a0^3 can be nonzero."""
    iv = {d: next(s for s in proof_chain_check(d)["steps"]
                  if s["step"] == "iv") for d in
          ("F5[e]/(e^3)", "F5[e]/(e^4)", "cyclo(4)")}
    assert iv["F5[e]/(e^3)"]["displayed_sign_holds"]  # a0^3 = 0 there
    assert not iv["F5[e]/(e^4)"]["displayed_sign_holds"]
    assert not iv["cyclo(4)"]["displayed_sign_holds"]
    assert all(v["counterexamples"] == 0 for v in iv.values())


def test_locality_example_z25():
    rows = locality_example_z25()
    assert len(rows) == 5
    assert all(r["implication_holds"] for r in rows)


def test_proof_chain_brute_force_cross_check():
    """Independent oracle: evaluate the literal displayed equations over
    every witness of F5[e]/(e^2) with direct table arithmetic and confirm
    each implication, without the factored-form and unit-collapse
    reductions used by proof_chain_check."""
    ring = build_ring("F5[e]/(e^2)")
    T = ring_table(ring)
    MUL, ADD, INV, NEG, SQ = T.MUL, T.ADD, T.INV, T.NEG, T.SQ
    one, zero = T.one, T.zero
    ys = [T.index(p.y) for p in hom_points(ring)]
    half = INV[T.from_int(2)]
    threehalf = MUL[T.from_int(3), half]
    a2s = np.arange(T.n, dtype=np.int32)
    failures = []
    for y1 in ys:
        for a0 in T.mideal:
            a0sq, a0cu = SQ[a0], MUL[a0, SQ[a0]]
            for s1 in T.roots[ADD[a0sq, y1]]:
                i1 = INV[s1]
                i1c = MUL[i1, SQ[i1]]
                i1_5 = MUL[i1c, SQ[i1]]
                eq3 = MUL[a0, s1] == a0
                for y2 in ys:
                    iy2 = INV[y2]
                    for s2 in T.roots[y2]:
                        i2 = INV[s2]
                        eq5 = ADD[i1, NEG[i2]] == a0sq
                        # step (vi)
                        if SQ[a0] == zero and eq5 and y1 != y2:
                            failures.append(("vi", a0, y1, y2))
                        # step (iv), corrected sign
                        if eq3 and eq5 and \
                                MUL[a0, ADD[one, NEG[i2]]] != a0cu:
                            failures.append(("iv", a0, y1, y2))
                        for a1 in T.units:
                            a1sq = SQ[a1]
                            eq4 = ADD[MUL[a1, i1],
                                      NEG[MUL[a0sq, MUL[a1, i1c]]]] \
                                == MUL[a1, i2]
                            if eq3 and eq4 and not eq5:
                                failures.append(("i", a0, a1, y1, y2))
                            # literal third-order display, vectorized in a2
                            lhs3 = ADD[
                                MUL[MUL[a0, a1sq], i1c],
                                NEG[MUL[MUL[a0, i1], ADD[
                                    MUL[MUL[a0sq, a1sq], SQ[SQ[i1]]],
                                    MUL[half, ADD[
                                        MUL[MUL[a0sq, a1sq], SQ[SQ[i1]]],
                                        NEG[MUL[ADD[a1sq,
                                                    MUL[T.from_int(2),
                                                        MUL[a0, a2s]]],
                                                SQ[i1]]]]]]]]]
                            rhs3 = ADD[MUL[a2s, i1], NEG[MUL[a2s, iy2]]]
                            third = lhs3 == rhs3
                            eq6 = MUL[a2s, MUL[i2, ADD[i2, NEG[one]]]] \
                                == MUL[threehalf,
                                       MUL[ADD[a0sq, NEG[one]],
                                           MUL[a0, a1sq]]]
                            if eq3 and eq5:
                                bad = third & ~eq6
                                if bad.any():
                                    failures.append(
                                        ("ii", a0, a1, int(a2s[bad][0])))
                            # step (iii): Eq6 -> membership
                            z = ADD[i2, NEG[one]]
                            in_ideal = (MUL[a2s, 0] * 0 + (
                                MUL[np.arange(T.n, dtype=np.int32), z]
                                == a0)).any()
                            if eq6.any() and not in_ideal:
                                failures.append(("iii", a0, y2, s2))
    # step (v) standalone
    for a0 in T.mideal:
        member = (MUL[np.arange(T.n, dtype=np.int32),
                      MUL[a0, SQ[a0]]] == SQ[a0]).any()
        if member and SQ[a0] != zero:
            failures.append(("v", a0))
    assert not failures, failures[:5]
