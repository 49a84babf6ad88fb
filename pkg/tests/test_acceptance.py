"""One test per acceptance criterion; each prints a single ACCEPTANCE line."""

import io
import json
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

import builders as B
from colourlie import QQ, load_document, mathews_verify, moment_map, mu_can, so_eps
from colourlie.altmaps import StoredAltMap, alt_from_function, compare, form_pairing, norm, zero_map
from colourlie.catalog import preset, q_ppqq
from colourlie.cli import main
from colourlie.covariants import covariant_checks, covariant_Q
from colourlie.curvature import (CurvatureTensor, bianchi, bianchi_tensor, curvature_from, random_curvature,
                                 special_criteria)
from colourlie.extensions import assemble_extension, embed, extend, extend_sl2
from colourlie.graded_linalg import eps_trace_matrix, scalar_line
from colourlie.matrix import matmul
from colourlie.representations import fundamental_rep, mu_can_matrix

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def announce(capsys):
    def say(number, ok, detail=""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, detail
    return say


def extension_fixtures():
    """(name, rep, phi or None) covering both outcomes of the extension test."""
    so3 = B.so3_fundamental()
    out = [
        ("so3 phi=0", so3, None),
        ("so3 phi=5 cross", so3, B.cross_phi(so3.space, 5)),
        ("sl2 on odd k^2 phi=0", B.sl2_k2(), None),
        ("osp(1|2) phi=0", preset("fundamental_so", "osp12").rep, None),
        ("hyperbolic so(2) phi=0", preset("fundamental_so", "hyperbolic2").rep, None),
        ("abelian on hyperbolic plane", B.abelian_nonspecial(), None),
    ]
    r, phi = B.sl2_killing_module()
    out.append(("g=0, V=sl2, phi=bracket", r, phi))
    r, phi = B.sl2_killing_module(2)
    out.append(("g=0, V=sl2 with doubled form", r, phi))
    r, phi = B.three_form_module(4, [(0, 1, 2), (0, 1, 3)])
    out.append(("g=0, k^4, e123+e124", r, phi))
    r, phi = B.three_form_module(5, [(0, 1, 2), (2, 3, 4)])
    out.append(("g=0, k^5, e123+e345", r, phi))
    out.append(("so(V)+sl2 on V(x)k^2 phi=0", B.hyperbolic_tensor(), None))
    return out


def test_1_sl2_moment_matrices(announce):
    t0 = time.perf_counter()
    path = str(FIXTURES / "sl2_k2.json")
    buf = io.StringIO()
    code = main(["moment", path, "rho"], out=buf)
    emitted = json.loads(buf.getvalue())
    r = load_document(path).rep("rho")
    names = r.algebra.space.names
    expected = {("p", "p"): [[0, -2], [0, 0]], ("q", "q"): [[0, 0], [2, 0]],
                ("p", "q"): [[1, 0], [0, -1]]}
    got = {}
    for item in emitted["values"]:
        x = [Fraction(0)] * len(names)
        for term in item["value"]:
            x[names.index(term["k"])] = Fraction(term["c"])
        got[tuple(item["tuple"])] = r.operator(x)
    elapsed = time.perf_counter() - t0
    ok = code == 0 and got == expected and elapsed < 1
    announce(1, ok, f"sl2 moment matrices {got} in {elapsed:.2f}s")


def test_2_canonical_moment_two_ways(announce):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    failures = []
    for k in range(20):
        field = QQ if k % 2 == 0 else B.F7
        V, form = B.random_form_space(rng, B.random_cf(rng, field))
        so = so_eps(V, form)
        closed = mu_can(V, form, so)
        dual = moment_map(fundamental_rep(so))
        v = compare(closed, dual, name=f"space {k}")
        if not v.ok:
            failures.append(v.describe())
    elapsed = time.perf_counter() - t0
    announce(2, not failures and elapsed < 10,
             f"20 random spaces, {len(failures)} disagreements in {elapsed:.2f}s {failures[:1]}")


def test_3_trace_identity(announce):
    rng = random.Random(3)
    checked, bad = 0, []
    for k in range(12):
        field = QQ if k % 3 else B.F7
        V, form = B.random_form_space(rng, B.random_cf(rng, field))
        so = so_eps(V, form)
        for X in so.matrices:
            for u in range(V.dim):
                for v in range(V.dim):
                    lhs = eps_trace_matrix(V, matmul(X, mu_can_matrix(V, form, u, v), V.field.zero))
                    Xu = [row[u] for row in X]
                    rhs = -2 * form(Xu, V.basis_vector(v))
                    checked += 1
                    if lhs != rhs:
                        bad.append((k, u, v, lhs, rhs))
    announce(3, not bad, f"{checked} (X, u, v) triples, {len(bad)} mismatches {bad[:1]}")


def test_4_three_way_equivalence(announce):
    rows, outcomes = [], set()
    for name, r, phi in extension_fixtures():
        _, tv = extend(r, phi)
        verdicts = [v.ok for v in tv.records()]
        outcomes.add(verdicts[0])
        rows.append((name, verdicts))
    agree = all(len(set(v)) == 1 for _, v in rows)
    announce(4, agree and outcomes == {True, False} and len(rows) >= 6,
             f"{len(rows)} fixtures, verdicts {rows}")


def _norm_of_sum(r, phi):
    phi = phi if phi is not None else zero_map(r.space, r.space, 2)
    alg = assemble_extension(r, r.moment, phi)
    total = (embed(r.moment, alg.space, 0) + embed(phi, alg.space, r.algebra.dim)).materialize()
    return norm(total, form_pairing(alg.form)), phi


def test_5_norm_equals_twice_bianchi(announce):
    bad = []
    fixtures = extension_fixtures() + [(n, r, None) for n, r in B.special_fixtures()]
    for name, r, phi in fixtures:
        N, phi = _norm_of_sum(r, phi)
        R = curvature_from(r.moment, phi, r.algebra.form, r.form)
        v = compare(N, bianchi(R).scale(2), name=name)
        if not v.ok:
            bad.append(v.describe())
    announce(5, not bad, f"{len(fixtures)} fixtures {bad[:1]}")


def test_6_projection_property(announce):
    rng = random.Random(6)
    bad = 0
    for k in range(20):
        field = QQ if k % 2 else B.F7
        V, _ = B.random_form_space(rng, B.random_cf(rng, field), max_dim=3)
        three = V.field(3)
        b = bianchi_tensor(random_curvature(V, rng))
        if bianchi_tensor(b) != b.scale(three):
            bad += 1
        line = scalar_line(V.cf)
        alt = alt_from_function(V, line, 4, lambda t: (V.field(rng.randint(-4, 4)),))
        A = CurvatureTensor.from_altmap(alt)
        if bianchi_tensor(A) != A.scale(three):
            bad += 1
    announce(6, bad == 0, f"20 random curvature tensors and 20 alternating ones, {bad} failures")


def test_7_special_criteria_agree(announce):
    rows = []
    fixtures = [(n, r) for n, r, _ in extension_fixtures()] + B.special_fixtures()
    for name, r in fixtures:
        b, curv = special_criteria(r)
        rows.append((name, b, curv))
    agree = all(b == c for _, b, c in rows)
    both = {b for _, b, _ in rows} == {True, False}
    announce(7, agree and both, f"{len(rows)} fixtures, special: {[(n, b) for n, b, _ in rows]}")


def test_8_sl2_extension(announce):
    t0 = time.perf_counter()
    special = [("fundamental so, dim 2", preset("fundamental_so", "hyperbolic2").rep),
               ("fundamental so, dim 3", preset("fundamental_so", "so3").rep),
               ("so(V)+sl2 hyperbolic", B.hyperbolic_tensor()),
               ("centralizer, lambda 1", preset("centralizer_J", "hyperbolic2").rep)]
    results = []
    for name, r in special:
        _, v = extend_sl2(r, [1])
        results.append((name, v.ok))
    _, bad = extend_sl2(B.abelian_nonspecial(), [1])
    w = bad.witness
    ppq = (w is not None and len(w) == 3 and w[0].endswith("⊗p") and w[1].endswith("⊗p")
           and w[2].endswith("⊗q"))
    elapsed = time.perf_counter() - t0
    ok = all(ok for _, ok in results) and not bad.ok and ppq and elapsed < 60
    announce(8, ok, f"{results}, non-special witness {w} in {elapsed:.1f}s")


def test_9_covariant_formulas_agree(announce):
    bad, count = [], 0
    for name, r in B.special_fixtures():
        verdicts, _ = covariant_checks(r, special=True)
        count += len(verdicts)
        bad += [f"{name}: {v.describe()}" for v in verdicts if not v.ok]
    announce(9, not bad, f"{count} formula comparisons {bad[:1]}")


def test_10_hyperbolic_q_values(announce):
    r = B.hyperbolic_tensor()
    Q = covariant_Q(r)
    idx = {n: i for i, n in enumerate(r.space.names)}
    base = preset("fundamental_so", "hyperbolic2").rep
    V, BV = base.space, base.form

    def q(*names):
        return Q(*[idx[n] for n in names])[0]

    mismatches = []
    for v in [(a, b, c, d) for a in range(2) for b in range(2) for c in range(2) for d in range(2)]:
        n = [V.names[i] for i in v]
        pppp = q(*[x + "⊗p" for x in n])
        pppq = q(n[0] + "⊗p", n[1] + "⊗p", n[2] + "⊗p", n[3] + "⊗q")
        ppqq = q(n[0] + "⊗p", n[1] + "⊗p", n[2] + "⊗q", n[3] + "⊗q")
        if pppp != 0 or pppq != 0 or ppqq != q_ppqq(V, BV, 1, *v):
            mismatches.append((v, pppp, pppq, ppqq))
    value = q("u1⊗p", "u2⊗p", "u1⊗q", "u2⊗q")
    announce(10, not mismatches and value == 12,
             f"Q(u1p,u2p,u1q,u2q)={value}, {len(mismatches)} pattern mismatches")


SIGN_NOTE = ("Q o psi equals +54 Q^Q^Q on this fixture; the stated -54 fails on every nonzero "
             "tuple (see the decisions ledger and test_covariants)")


@pytest.mark.parametrize("identity", ["a", "b", "c",
                                      pytest.param("d", marks=pytest.mark.xfail(strict=True,
                                                                                reason=SIGN_NOTE))])
def test_11_mathews_identities(announce, identity):
    r = B.hyperbolic_tensor()
    t0 = time.perf_counter()
    v = mathews_verify(r, identity)
    elapsed = time.perf_counter() - t0
    announce(f"11{identity}", v.ok, f"{v.describe()} in {elapsed:.1f}s")


def test_12_mutation(announce):
    r = B.hyperbolic_tensor()
    mu = r.moment
    idx = {n: i for i, n in enumerate(r.space.names)}
    target = tuple(idx[n] for n in ("u1⊗p", "u2⊗p", "u1⊗q", "u2⊗q"))
    one = r.field.one
    survivors, caught = [], 0
    for t in mu.canonical_tuples():
        value = mu.value(t)
        for k in range(len(value)):
            if mu.codomain.degrees[k] != mu.domain.degree_of_tuple(t):
                continue
            vals = dict(mu.items())
            bumped = list(value)
            bumped[k] = bumped[k] + one
            vals[t] = tuple(bumped)
            mutant = StoredAltMap(mu.domain, mu.codomain, 2, vals, mu.degree)
            verdicts, cs = covariant_checks(r, mutant, special=True)
            failed = [v for v in verdicts if not v.ok]
            if not failed and cs.Q(*target)[0] != 12:
                failed = ["Q value"]
            if not failed:
                a = mathews_verify(r, "a", mu=mutant, require_special=False)
                failed = [a] if not a.ok else []
            if failed and (not hasattr(failed[0], "witness") or failed[0].witness is not None):
                caught += 1
            else:
                survivors.append((t, k))
    announce(12, not survivors and caught > 0,
             f"{caught} single-constant mutants caught, survivors {survivors}")
