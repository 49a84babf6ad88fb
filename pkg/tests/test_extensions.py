import warnings

import pytest

import builders as B
from colourlie import QQ, OrthRep, extend, extend_sl2, heisenberg_grading, phi_validate
from colourlie.altmaps import StoredAltMap, alt_from_function
from colourlie.catalog import preset
from colourlie.colour_lie import cla_validate
from colourlie.extensions import z2_lie_check


def test_cubic_map_on_the_odd_plane_is_invalid():
    # V = k^2 odd: phi(p, p) = q has degree 0 + 1, not 0
    r = B.sl2_k2()
    V = r.space
    phi = StoredAltMap(V, V, 2, {(0, 0): (QQ(0), QQ(1))})
    v = phi_validate(r, phi)
    assert not v.ok and v.name == "phi degree"
    with pytest.raises(ValueError, match="phi is invalid"):
        extend(r, phi)


def test_non_invariant_phi_is_rejected():
    so3 = B.so3_fundamental()
    V = so3.space

    def ev(t):
        a, b = t
        return [QQ(1) if (a, b) == (0, 1) and k == 0 else QQ(-1) if (a, b) == (1, 0) and k == 0
                else QQ(0) for k in range(3)]

    phi = alt_from_function(V, V, 2, ev, V.cf.group.zero())
    assert not phi_validate(so3, phi).ok


def test_bracket_of_sl2_extends_the_zero_algebra():
    r, phi = B.sl2_killing_module()
    assert phi_validate(r, phi).ok
    cand, tv = extend(r, phi)
    assert tv.ok
    assert cand.algebra.dim == 3


def test_sum_of_two_three_forms_in_five_dimensions_fails_everywhere():
    r, phi = B.three_form_module(5, [(0, 1, 2), (2, 3, 4)])
    _, tv = extend(r, phi)
    assert [v.ok for v in tv.records()] == [False, False, False]
    assert tv.jacobi.witness is not None and tv.norm_zero.witness is not None


def test_osp_and_sl2_are_of_lie_type():
    assert z2_lie_check(B.sl2_k2()).ok
    assert z2_lie_check(preset("fundamental_so", "osp12").rep).ok
    assert not z2_lie_check(B.hyperbolic_tensor()).ok


def test_sl2_extension_and_its_heisenberg_grading():
    for fam, name in (("so_tensor_sl2", "hyperbolic2"), ("centralizer_J", "gl3"),
                      ("fundamental_so", "osp12")):
        alg, v = extend_sl2(preset(fam, name).rep, [1])
        assert v.ok
        assert cla_validate(alg).ok
        H = alg.space.basis_vector(alg.sl2_triple[1])
        hv, dims = heisenberg_grading(alg, H)
        assert hv.ok and dims[2] == dims[-2] == 1
        V = preset(fam, name).rep.space
        assert dims[1] == dims[-1] == V.dim


def test_sl2_extension_on_the_odd_plane():
    # sl2 acting on odd k^2 is special; the result is a colour Lie algebra of dim 3 + 3 + 4
    alg, v = extend_sl2(B.sl2_k2(), [1])
    assert v.ok and alg.dim == 10


def test_unfaithful_input_warns():
    so3 = B.so3_fundamental()
    silent = OrthRep(so3.algebra, so3.space, so3.form, [[[QQ(0)] * 3] * 3] * 3)
    with pytest.warns(UserWarning, match="not faithful"):
        extend_sl2(silent, [1])


def test_even_gamma_is_rejected():
    with pytest.raises(ValueError):
        extend_sl2(B.so3_fundamental(), [0])


def test_faithful_input_does_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        extend_sl2(B.so3_fundamental(), [1])
