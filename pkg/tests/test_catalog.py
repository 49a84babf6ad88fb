import pytest

from colourlie import FormEps, GradedSpace, catalog_centralizer_J, super_sign
from colourlie.altmaps import compare
from colourlie.catalog import (PRESETS, all_presets, centralizer, entry_validate, preset, q_ppqq)
from colourlie.covariants import covariant_Q


@pytest.mark.parametrize("entry", list(all_presets()), ids=lambda e: e.name)
def test_presets_validate(entry):
    assert entry_validate(entry).ok
    assert entry.rep.algebra.form is not None


def test_preset_listing_matches_lookup():
    for fam, names in PRESETS.items():
        for name in names:
            assert preset(fam, name).name == f"{fam}/{name}"
    with pytest.raises(KeyError):
        preset("fundamental_so", "nonexistent")


def hyperbolic(n):
    cf = super_sign()
    names = [f"u{k}" for k in range(1, n + 1)] + [f"w{k}" for k in range(1, n + 1)]
    V = GradedSpace(cf, names, [0] * (2 * n))
    B = FormEps(V, [[1 if abs(i - j) == n else 0 for j in range(2 * n)] for i in range(2 * n)])
    J = [[(1 if i < n else -1) if i == j else 0 for j in range(2 * n)] for i in range(2 * n)]
    return V, B, J


def test_centralizer_of_a_polarisation_is_gl():
    V, B, J = hyperbolic(3)
    mats, _ = centralizer(V, B, J)
    assert len(mats) == 9


def test_centralizer_in_dimension_four_has_no_form():
    # with dim V = 4 the moment formula lands in the derived algebra and cannot be matched
    V, B, J = hyperbolic(2)
    with pytest.raises(ValueError, match="no form on m"):
        catalog_centralizer_J(V, B, J, 1)


def test_centralizer_input_checks():
    V, B, J = hyperbolic(3)
    with pytest.raises(ValueError, match="lambda"):
        catalog_centralizer_J(V, B, J, 0)
    with pytest.raises(ValueError, match="lambda Id"):
        catalog_centralizer_J(V, B, J, 4)
    not_skew = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    with pytest.raises(ValueError, match="so_eps"):
        catalog_centralizer_J(V, B, not_skew, 1)


def test_closed_form_Q_on_the_three_dimensional_tensor_fixture():
    r = preset("so_tensor_sl2", "so3").rep
    base = preset("fundamental_so", "so3").rep
    Q = covariant_Q(r)
    idx = {n: i for i, n in enumerate(r.space.names)}
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    n = [base.space.names[x] for x in (a, b, c, d)]
                    t = (idx[n[0] + "⊗p"], idx[n[1] + "⊗p"], idx[n[2] + "⊗q"], idx[n[3] + "⊗q"])
                    assert Q(t)[0] == q_ppqq(base.space, base.form, 1, a, b, c, d)


def test_two_routes_to_the_lambda_four_moment():
    r = preset("centralizer_J", "hyperbolic2_lambda4").rep
    assert compare(r.moment, r.formula_moment).ok
