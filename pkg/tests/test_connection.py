"""Formal connections, exp/log checks, certified spectra, induced maps,
cohomology actions, and weight classification."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrmono import (
    FactorizationFailed,
    NotIdentityAtOne,
    RingMatrix,
    char_poly,
    classify_weights,
    cohomology_action,
    eigen_linear_forms,
    eigen_monomials,
    evaluate_matrix,
    exponent_log_bookkeeping,
    formal_connection,
    gauss_manin_matrix,
    induced_map,
    laurent_ring,
    phi1,
    phi2_from_certificate,
    poly_ring,
    spectra_correspond,
    verify_chain_map,
    verify_exp_relation,
    verify_projection,
)
from conftest import (
    OMEGA1,
    OMEGA2,
    OMEGABAR_NONRES,
    OMEGABAR_RES,
    PHIBAR_NONRES,
    PHIBAR_RES,
    mat,
    random_certified_endo,
)

L = laurent_ring(4, var="x")
R = poly_ring(4, var="y")


# -- formal connection ----------------------------------------------------------


def test_formal_connection_matches_display(pencil):
    fc = pencil["fc"]
    assert fc.degree(1) == mat(R, OMEGA1)
    assert fc.degree(2) == mat(R, OMEGA2)
    assert fc.degree(0).is_zero()


def test_formal_connection_of_identity():
    phis = {1: RingMatrix.identity(L, 3)}
    fc = formal_connection(phis, R)
    assert fc.degree(1).is_zero()


def test_formal_connection_rejects_non_identity_at_one(pencil):
    bad = mat(L, [["x1", "0"], ["0", "1"]])  # value at 1 is I, but shift it
    bad = mat(L, [["x1 + 1", "0"], ["0", "1"]])
    with pytest.raises(NotIdentityAtOne):
        formal_connection({1: bad}, R)


# -- exp relation ------------------------------------------------------------------


def test_exp_relation_passes_on_twist_matrices(pencil):
    for q in (1, 2):
        rep = verify_exp_relation(pencil["phis"][q], pencil["fc"].degree(q))
        assert rep.identity_at_one and rep.linear_part_matches
        assert rep.gauge_degree2 and rep.passed
        # The two sides are gauge conjugate but NOT equal entry by entry:
        # e.g. degree-2 terms of Phi1[0][0] and exp(Omega1)[0][0] differ.
        assert not rep.entrywise_degree2


def test_exp_relation_identity_case():
    rep = verify_exp_relation(RingMatrix.identity(L, 2), RingMatrix.zero(R, 2, 2))
    assert rep.passed and rep.entrywise_degree2


def test_exp_relation_scalar_case():
    phi = mat(L, [["x1*x2"]])
    om = mat(R, [["y1+y2"]])
    rep = verify_exp_relation(phi, om)
    assert rep.passed and rep.entrywise_degree2


def test_exp_relation_detects_wrong_linear_part(pencil):
    rep = verify_exp_relation(pencil["phis"][1], pencil["fc"].degree(1).scale(2))
    assert not rep.linear_part_matches and not rep.passed


def test_chain_identities_in_both_rings(pencil):
    verify_chain_map(pencil["cx"].boundaries, pencil["phis"])
    omegas = {q: pencil["fc"].degree(q) for q in (0, 1, 2)}
    verify_chain_map(pencil["aomoto"].boundaries, omegas)


# -- gauss-manin specialization -------------------------------------------------------


def test_gauss_manin_values(pencil):
    lam = [Fraction(1, 3), Fraction(1, 5), Fraction(2, 7), Fraction(1, 2)]
    ombar = mat(R, OMEGABAR_NONRES)
    gm = gauss_manin_matrix(ombar, lam)
    assert gm.entries[0][0] == Fraction(8, 15)
    assert gm.entries[1][0] == Fraction(1, 5)
    assert gm.entries[0][1] == 0 and gm.entries[1][1] == 0
    assert gauss_manin_matrix(pencil["fc"].degree(1), [0, 0, 0, 0]).is_zero()
    res = gauss_manin_matrix(mat(R, [["y1+y2"]]), lam)
    assert res.entries[0][0] == Fraction(8, 15)


# -- certified eigen structure ---------------------------------------------------------


def test_eigen_monomials_twist(pencil):
    assert eigen_monomials(pencil["phis"][1]).multiset() == {
        (0, 0, 0, 0): 3, (1, 1, 0, 0): 1}
    assert eigen_monomials(pencil["phis"][2]).multiset() == {
        (0, 0, 0, 0): 3, (1, 1, 0, 0): 2}


def test_eigen_linear_forms_twist(pencil):
    assert eigen_linear_forms(pencil["fc"].degree(1)).multiset() == {
        (0, 0, 0, 0): 3, (1, 1, 0, 0): 1}
    assert eigen_linear_forms(pencil["fc"].degree(2)).multiset() == {
        (0, 0, 0, 0): 3, (1, 1, 0, 0): 2}


def test_eigen_edge_cases():
    assert eigen_monomials(RingMatrix.identity(L, 3)).multiset() == {(0, 0, 0, 0): 3}
    assert eigen_linear_forms(RingMatrix.zero(R, 4, 4)).multiset() == {(0, 0, 0, 0): 4}


def test_eigen_monomials_negative_exponents():
    m = mat(L, [["x1^-1*x2^-1", "0"], ["x2 - 1", "1"]])
    assert eigen_monomials(m).multiset() == {(-1, -1, 0, 0): 1, (0, 0, 0, 0): 1}


def test_eigen_monomials_requires_identity_at_one():
    with pytest.raises(NotIdentityAtOne):
        eigen_monomials(mat(L, [["x1 + x2"]]))


def test_eigen_monomials_factorization_failure():
    from arrmono import NonIntegerRootAtProbe
    # Identity at 1, but the eigenvalues 1 +- sqrt((x1-1)(x2-1)) are not
    # Laurent monomials.
    m = mat(L, [["1", "x1 - 1"], ["x2 - 1", "1"]])
    assert evaluate_matrix(m, [1, 1, 1, 1]).is_identity()
    with pytest.raises((FactorizationFailed, NonIntegerRootAtProbe)):
        eigen_monomials(m)


def test_eigen_linear_forms_rejects_nonlinear():
    with pytest.raises(ValueError):
        eigen_linear_forms(mat(R, [["y1*y2"]]))


def test_eigen_linear_forms_failure():
    # Eigenvalues +-sqrt(y1*y2) are not linear forms.
    m = mat(R, [["0", "y1"], ["y2", "0"]])
    with pytest.raises(FactorizationFailed):
        eigen_linear_forms(m)


def test_spectra_correspondence(pencil):
    for q in (1, 2):
        er = eigen_monomials(pencil["phis"][q])
        eo = eigen_linear_forms(pencil["fc"].degree(q))
        assert spectra_correspond(er, eo)


def test_monomial_factors_evaluate_to_specialized_eigenvalues(pencil):
    """Expanding prod (z - r(t))^k over the certified factors must rebuild
    the characteristic polynomial of the specialized matrix exactly."""
    t = [Fraction(2), Fraction(3), Fraction(5), Fraction(7)]
    er = eigen_monomials(pencil["phis"][1])
    cp = char_poly(evaluate_matrix(pencil["phis"][1], t))
    coeffs = [Fraction(1)]
    for f in er.factors:
        v = Fraction(1)
        for base, e in zip(t, f.data):
            v *= base ** e
        for _ in range(f.multiplicity):
            # multiply the coefficient list by (z - v)
            coeffs = [Fraction(0)] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= v * coeffs[i + 1]
    assert coeffs == list(cp.coeffs)


def test_linear_form_factors_hit_gauss_manin_eigenvalues(pencil):
    """Each certified linear-form factor of Omega, evaluated at weights, is
    an eigenvalue of the specialized connection matrix."""
    lam = [Fraction(2, 3), Fraction(-1, 2), Fraction(5, 7), Fraction(3)]
    for q in (1, 2):
        om = pencil["fc"].degree(q)
        gm = gauss_manin_matrix(om, lam)
        cp = char_poly(gm)
        for f in eigen_linear_forms(om).factors:
            value = sum(Fraction(c) * l for c, l in zip(f.data, lam))
            assert _eval_list(list(cp.coeffs), value) == 0


def test_exponent_log_bookkeeping_one_by_one(pencil):
    """x1*x2 pairs with y1 + y2: exponents equal coefficients, so the formal
    substitution x = exp(-2 pi i lambda) sends one factor to the other."""
    er = eigen_monomials(mat(L, [["x1*x2"]]))
    eo = eigen_linear_forms(mat(R, [["y1+y2"]]))
    assert exponent_log_bookkeeping(er.factors[0].data, eo.factors[0].data)


# -- induced maps -----------------------------------------------------------------------


def test_nonresonant_projection_and_induced(pencil):
    proj = pencil["proj_nonres"]
    verify_projection(pencil["cx"].boundaries[1], pencil["aomoto"].boundary(1), proj)
    phibar = induced_map(proj.xi, pencil["phis"][2])
    ombar = induced_map(proj.upsilon, pencil["fc"].degree(2))
    assert phibar == mat(L, PHIBAR_NONRES)
    assert ombar == mat(R, OMEGABAR_NONRES)


def test_resonant_projection_and_induced(pencil):
    proj = pencil["proj_res"]
    assert proj.locus is not None
    verify_projection(pencil["cx"].boundaries[1], pencil["aomoto"].boundary(1), proj)
    phibar = induced_map(proj.xi, pencil["phis"][2])
    ombar = induced_map(proj.upsilon, pencil["fc"].degree(2))
    assert phibar == mat(L, PHIBAR_RES)
    assert ombar == mat(R, OMEGABAR_RES)


def test_resonant_projection_fails_without_locus(pencil):
    from arrmono import ProjectionData, VerificationFailed
    proj = pencil["proj_res"]
    bare = ProjectionData(xi=proj.xi, upsilon=proj.upsilon, locus=None)
    with pytest.raises(VerificationFailed):
        verify_projection(pencil["cx"].boundaries[1], pencil["aomoto"].boundary(1), bare)


def test_induced_map_identity_projection(pencil):
    eye = RingMatrix.identity(L, 5)
    assert induced_map(eye, pencil["phis"][2]) == pencil["phis"][2]


def test_induced_eigenvalues(pencil):
    phibar = mat(L, PHIBAR_NONRES)
    assert eigen_monomials(phibar).multiset() == {(1, 1, 0, 0): 1, (0, 0, 0, 0): 1}
    ombar_res = mat(R, OMEGABAR_RES)
    assert eigen_linear_forms(ombar_res).multiset() == {(1, 1, 0, 0): 2, (0, 0, 0, 0): 1}


# -- cohomology action --------------------------------------------------------------------


def _action_at(pencil, t):
    cx = pencil["cx"].specialize(t)
    maps = {q: evaluate_matrix(m, t) for q, m in pencil["phis"].items()}
    return cohomology_action(cx, maps)


def test_cohomology_action_nonresonant(pencil):
    t = [Fraction(2)] * 4
    act = _action_at(pencil, t)
    assert act.betti == [0, 0, 2]
    cp = char_poly(act.matrices[2])
    # eigenvalues {t1 t2, 1} = {4, 1}
    assert list(cp.coeffs) == [Fraction(4), Fraction(-5), Fraction(1)]


def test_cohomology_action_resonant(pencil):
    t = [Fraction(2), Fraction(3), Fraction(1, 6), Fraction(1)]
    act = _action_at(pencil, t)
    assert act.betti == [0, 1, 3]
    assert act.matrices[1].entries == [[Fraction(6)]]
    cp2 = char_poly(act.matrices[2])
    # eigenvalues {t1 t2 = 6 (twice), 1}: (z-6)^2 (z-1)
    assert list(cp2.coeffs) == [Fraction(-36), Fraction(48), Fraction(-13), Fraction(1)]


def test_cohomology_action_identity_maps(pencil):
    from arrmono import QQ
    t = [Fraction(2)] * 4
    cx = pencil["cx"].specialize(t)
    maps = {q: RingMatrix.identity(QQ, r) for q, r in enumerate(cx.ranks)}
    act = cohomology_action(cx, maps)
    for m in act.matrices.values():
        assert m.is_identity()


def test_cohomology_eigenvalues_are_monomial_evaluations(pencil):
    """Eigenvalues of the induced cohomology action at t are evaluations of
    the certified monomial factors of the chain-level matrices."""
    t = [Fraction(3), Fraction(5), Fraction(2), Fraction(7)]
    act = _action_at(pencil, t)
    er = eigen_monomials(pencil["phis"][2])
    allowed = set()
    for f in er.factors:
        v = Fraction(1)
        for base, e in zip(t, f.data):
            v *= base ** e
        allowed.add(v)
    cp = char_poly(act.matrices[2])
    # all roots of cp lie in the allowed set
    remaining = list(cp.coeffs)
    for v in sorted(allowed):
        while len(remaining) > 1 and _eval_list(remaining, v) == 0:
            remaining = _deflate(remaining, v)
    assert len(remaining) == 1


def _eval_list(coeffs, v):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * v + c
    return acc


def _deflate(coeffs, v):
    out = []
    carry = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        out.append(carry)
        carry = coeffs[i] + v * carry
    assert carry == 0
    return list(reversed(out))


# -- classification -----------------------------------------------------------------------


def test_classify_weights(pencil):
    cx = pencil["cx"]
    nonres = classify_weights(cx, [2, 2, 2, 2])
    assert nonres.verdict() == "non-resonant"
    assert nonres.betti == [0, 0, 2] and nonres.top_matches_euler and nonres.euler == 2
    res = classify_weights(cx, [2, 3, Fraction(1, 6), 1])
    assert res.verdict() == "resonant" and res.betti == [0, 1, 3]
    triv = classify_weights(cx, [1, 1, 1, 1])
    assert triv.verdict() == "trivial" and triv.betti == [1, 4, 5]


# -- randomized loop suite ------------------------------------------------------------------


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 100_000))
def test_random_certified_loops_full_pipeline(pencil, certified_generators, seed):
    rng = random.Random(seed)
    pres, cx = pencil["pres"], pencil["cx"]
    endo, cert = random_certified_endo(rng, pres, certified_generators)
    p1 = phi1(endo, L)
    p2 = phi2_from_certificate(pres, endo, cert, L)
    phis = {0: RingMatrix.identity(L, 1), 1: p1, 2: p2}
    fc = formal_connection(phis, R)
    verify_chain_map(cx.boundaries, phis)
    verify_chain_map(pencil["aomoto"].boundaries,
                     {q: fc.degree(q) for q in (0, 1, 2)})
    for q in (1, 2):
        er = eigen_monomials(phis[q])
        eo = eigen_linear_forms(fc.degree(q))
        assert spectra_correspond(er, eo)
        assert er.multiset() == {f.data: f.multiplicity for f in eo.factors}
