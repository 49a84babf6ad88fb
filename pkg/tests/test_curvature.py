import random

import pytest

import builders as B
from colourlie import QQ, is_special
from colourlie.catalog import all_presets, preset
from colourlie.curvature import (CurvatureTensor, bianchi, bianchi_is_alternating, bianchi_tensor,
                                 curvature_can, curvature_from, curvature_validate,
                                 project_curvature, random_curvature, special_criteria)


@pytest.mark.parametrize("field", [QQ, B.F7])
def test_random_tensors_have_both_symmetries(field):
    rng = random.Random(41)
    for _ in range(8):
        V, _ = B.random_form_space(rng, B.random_cf(rng, field), max_dim=3)
        R = random_curvature(V, rng)
        assert curvature_validate(R).ok
        assert project_curvature(V, R.values) == R
        assert bianchi_is_alternating(R).ok


def test_canonical_curvature_is_the_fundamental_curvature():
    for name in ("k2", "so3", "hyperbolic2", "osp12"):
        r = preset("fundamental_so", name).rep
        R = curvature_from(r.moment, None, r.algebra.form, r.form)
        assert R == curvature_can(r.space, r.form)
        assert not any(v[0] for _, v in bianchi(R).items())


def test_non_symmetric_tensor_is_rejected():
    V = B.so3_fundamental().space
    vals = {(0, 1, 0, 1): QQ(1)}
    assert not curvature_validate(CurvatureTensor(V, vals)).ok


def test_every_preset_is_special_and_the_criteria_agree():
    for e in all_presets():
        assert is_special(e.rep).ok, e.name
        assert special_criteria(e.rep) == (True, True)


def test_non_special_verdict_lists_violating_triples():
    v = is_special(B.abelian_nonspecial())
    assert not v.ok
    assert v.witness == ("a", "a", "b")
    assert len(v.witnesses) == 6


def test_rescaling_the_algebra_form_breaks_specialness():
    r = B.so3_fundamental()
    scaled = r.with_forms(alg_form=r.algebra.form.scaled(QQ(3)))
    assert special_criteria(scaled) == (False, False)


def test_curvature_is_linear_in_the_bianchi_map():
    rng = random.Random(5)
    V, _ = B.random_form_space(rng, B.cf_super(), max_dim=3)
    R, S = random_curvature(V, rng), random_curvature(V, rng)
    total = CurvatureTensor(V, {t: R.values[t] + S.values[t] for t in R.values})
    lhs = bianchi_tensor(total)
    rhs = CurvatureTensor(V, {t: bianchi_tensor(R).values[t] + bianchi_tensor(S).values[t]
                              for t in R.values})
    assert lhs == rhs
