import pytest

import builders as B
import oracles
from colourlie import covariant_psi, mathews_verify
from colourlie.altmaps import action_pairing, check_alternating, compare, scalar_pairing, wedge
from colourlie.catalog import centralizer_psi_closed_form, preset
from colourlie.covariants import covariant_checks, covariants, mathews_sides

FUNDAMENTAL = ["k2", "so3", "hyperbolic2", "osp12"]
WITNESS = (0, 0, 0, 0, 0, 0, 3, 3, 3, 3, 3, 3)


@pytest.mark.parametrize("name", FUNDAMENTAL)
def test_fundamental_reps_have_vanishing_covariants(name):
    r = preset("fundamental_so", name).rep
    cs = covariants(r)
    assert not list(cs.psi.items()) and not list(cs.Q.items())


@pytest.mark.parametrize("name", FUNDAMENTAL)
def test_identities_reduce_to_zero_equals_zero(name):
    r = preset("fundamental_so", name).rep
    for ident in "abcd":
        assert mathews_verify(r, ident, budget=5000).ok


def test_covariants_are_alternating():
    r = B.hyperbolic_tensor()
    cs = covariants(r)
    assert check_alternating(r.space, 3, cs.psi.raw).ok
    assert check_alternating(r.space, 4, cs.Q.raw).ok


@pytest.mark.parametrize("name", ["hyperbolic2", "hyperbolic2_lambda4", "gl3"])
def test_centralizer_psi_closed_form(name):
    e = preset("centralizer_J", name)
    ev = centralizer_psi_closed_form(e.rep, e.params["J"], e.params["lambda"])
    psi = covariant_psi(e.rep)
    n = e.rep.space.dim
    for t in [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]:
        assert list(psi(t)) == ev(t)


def test_non_special_rep_gets_only_the_general_formulas():
    r = B.abelian_nonspecial()
    verdicts, _ = covariant_checks(r)
    assert [v.name for v in verdicts] == ["psi:three-term=half-sum", "Q:definition=half-sum"]
    assert all(v.ok for v in verdicts)


def test_mathews_refuses_non_special_input():
    with pytest.raises(ValueError, match="not special"):
        mathews_verify(B.abelian_nonspecial(), "a")


def test_mathews_budget():
    with pytest.raises(ValueError, match="budget"):
        mathews_verify(B.hyperbolic_tensor(), "c", budget=100)
    v = mathews_verify(B.hyperbolic_tensor(), "c", sample=5, budget=100)
    assert v.name == "MATHEWS c sampled:5"


def test_sampled_identities_on_the_three_dimensional_tensor_fixture():
    r = preset("so_tensor_sl2", "so3").rep
    for ident in "ab":
        assert mathews_verify(r, ident, sample=10, seed=3).ok
    assert mathews_verify(r, "c", sample=4, seed=3).ok


def test_second_identity_against_the_literal_composition():
    r = B.hyperbolic_tensor()
    cs = covariants(r)
    lhs, _ = mathews_sides(r, "b", cs)
    cf = r.space.cf
    for t in [(0, 0, 1, 2, 3, 3), (0, 1, 1, 2, 2, 3), (0, 0, 0, 3, 3, 3)]:
        degs = [r.space.degrees[i] for i in t]
        assert list(lhs(t)) == oracles.compose_literal(cs.mu, cs.psi, t, degs, cf, r.algebra.dim)


def test_first_identity_against_the_literal_wedge():
    r = B.hyperbolic_tensor()
    cs = covariants(r)
    lhs, _ = mathews_sides(r, "a", cs)
    pair = action_pairing(r.algebra.space, r.space, r.action)
    cf = r.space.cf
    for t in [(0, 0, 1, 2, 3), (0, 1, 2, 3, 3), (1, 1, 2, 2, 3)]:
        degs = [r.space.degrees[i] for i in t]
        assert list(lhs(t)) == oracles.wedge_literal(cs.mu, cs.psi, pair, t, degs, cf)


def test_triple_wedge_of_Q_against_the_literal_wedge():
    r = B.hyperbolic_tensor()
    Q = covariants(r).Q
    cf = r.space.cf
    times = scalar_pairing(cf)
    QxQ = wedge(Q, Q, times)
    degs = [r.space.degrees[i] for i in WITNESS]
    lit = oracles.wedge_literal(QxQ, Q, times, WITNESS, degs, cf)
    assert list(wedge(QxQ, Q, times)(WITNESS)) == lit == [-111974400]


def test_fourth_identity_holds_with_the_opposite_sign():
    # Q o psi = +54 Q^Q^Q on the hyperbolic tensor fixture (sampled, plus a fixed witness)
    r = B.hyperbolic_tensor()
    cs = covariants(r)
    lhs, rhs = mathews_sides(r, "d", cs)
    assert list(lhs(WITNESS)) == [-6046617600]
    assert list(rhs(WITNESS)) == [6046617600]
    assert compare(lhs, rhs.scale(r.field(-1)), sample=25, seed=1).ok
