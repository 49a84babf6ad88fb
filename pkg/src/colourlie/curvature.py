"""Curvature-like 4-tensors, the Bianchi map, and the specialness test."""

from __future__ import annotations

import random
from itertools import product

from .altmaps import StoredAltMap, canonical_tuples, check_alternating
from .graded_linalg import FormEps, GradedSpace, fmt_vec, scalar_line
from .verdict import InternalInconsistency, Verdict


class CurvatureTensor:
    """Values R(e_a, e_b, e_c, e_d) on every basis 4-tuple."""

    def __init__(self, space: GradedSpace, values):
        self.space = space
        zero = space.field.zero
        self.values = {t: values.get(t, zero) for t in product(range(space.dim), repeat=4)}

    def __call__(self, a, b, c, d):
        return self.values[(a, b, c, d)]

    def __eq__(self, other):
        return isinstance(other, CurvatureTensor) and self.space == other.space and self.values == other.values

    def __sub__(self, other):
        return CurvatureTensor(self.space, {t: v - other.values[t] for t, v in self.values.items()})

    def scale(self, c):
        return CurvatureTensor(self.space, {t: c * v for t, v in self.values.items()})

    @classmethod
    def from_altmap(cls, f) -> CurvatureTensor:
        """An eps-alternating scalar 4-form, viewed as an element of R(V)."""
        sp = f.domain
        return cls(sp, {t: f(t)[0] for t in product(range(sp.dim), repeat=4)})

    def to_altmap(self) -> StoredAltMap:
        sp = self.space
        vals = {t: (self.values[t],) for t in canonical_tuples(sp, 4)}
        return StoredAltMap(sp, scalar_line(sp.cf), 4, vals, sp.cf.group.zero())


def curvature_validate(R: CurvatureTensor) -> Verdict:
    sp = R.space
    eps = sp.eps_table
    f = sp.field
    for (a, b, c, d), v in R.values.items():
        w = -eps[a][b] * R(b, a, c, d)
        if v != w:
            return Verdict("curvature antisymmetry", False, (a, b, c, d), f.format(v), f.format(w))
        w = eps[a][c] * eps[a][d] * eps[b][c] * eps[b][d] * R(c, d, a, b)
        if v != w:
            return Verdict("curvature pair symmetry", False, (a, b, c, d), f.format(v), f.format(w))
    return Verdict.passed("curvature")


def curvature_from(mu, phi, B_g: FormEps, form_V: FormEps) -> CurvatureTensor:
    """R(A,B,C,D) = B_g(mu(A,B), mu(C,D)) + (phi(A,B), phi(C,D))."""
    sp = form_V.space
    n = sp.dim
    pairs_mu = {(a, b): mu(a, b) for a in range(n) for b in range(n)}
    pairs_phi = {(a, b): phi(a, b) for a in range(n) for b in range(n)} if phi is not None else None
    vals = {}
    for a, b, c, d in product(range(n), repeat=4):
        v = B_g(pairs_mu[(a, b)], pairs_mu[(c, d)])
        if pairs_phi is not None:
            v = v + form_V(pairs_phi[(a, b)], pairs_phi[(c, d)])
        vals[(a, b, c, d)] = v
    R = CurvatureTensor(sp, vals)
    ver = curvature_validate(R)
    if not ver.ok:
        raise ValueError(f"inputs do not give a curvature tensor: {ver.describe()}")
    return R


def curvature_can(space: GradedSpace, form: FormEps) -> CurvatureTensor:
    """(mu_can(A,B)(C), D) = eps(B,C)(A,C)(B,D) - (B,C)(A,D)."""
    G = form.gram
    eps = space.eps_table
    n = space.dim
    vals = {}
    for a, b, c, d in product(range(n), repeat=4):
        vals[(a, b, c, d)] = eps[b][c] * G[a][c] * G[b][d] - G[b][c] * G[a][d]
    return CurvatureTensor(space, vals)


def _bianchi_value(R: CurvatureTensor, a, b, c, d):
    eps = R.space.eps_table
    return (R(a, b, c, d)
            + eps[a][b] * eps[a][c] * R(b, c, a, d)
            + eps[a][c] * eps[b][c] * R(c, a, b, d))


def bianchi_tensor(R: CurvatureTensor) -> CurvatureTensor:
    n = R.space.dim
    return CurvatureTensor(R.space, {t: _bianchi_value(R, *t) for t in product(range(n), repeat=4)})


def bianchi(R: CurvatureTensor) -> StoredAltMap:
    sp = R.space
    vals = {t: (_bianchi_value(R, *t),) for t in canonical_tuples(sp, 4)}
    return StoredAltMap(sp, scalar_line(sp.cf), 4, vals, sp.cf.group.zero())


def bianchi_is_alternating(R: CurvatureTensor) -> Verdict:
    return check_alternating(R.space, 4, lambda t: (_bianchi_value(R, *t),), name="bianchi alternating")


def project_curvature(space: GradedSpace, tensor) -> CurvatureTensor:
    """Impose both symmetries on an arbitrary 4-tensor by averaging."""
    eps = space.eps_table
    half = space.field(1) / 2
    n = space.dim
    tuples = list(product(range(n), repeat=4))
    t1 = {(a, b, c, d): half * (tensor[(a, b, c, d)] - eps[a][b] * tensor[(b, a, c, d)])
          for a, b, c, d in tuples}
    t2 = {(a, b, c, d): half * (t1[(a, b, c, d)] - eps[c][d] * t1[(a, b, d, c)])
          for a, b, c, d in tuples}
    t3 = {(a, b, c, d): half * (t2[(a, b, c, d)]
                                + eps[a][c] * eps[a][d] * eps[b][c] * eps[b][d] * t2[(c, d, a, b)])
          for a, b, c, d in tuples}
    return CurvatureTensor(space, t3)


def random_curvature(space: GradedSpace, rng: random.Random, spread: int = 5) -> CurvatureTensor:
    """A random element of R(V) of degree 0."""
    g = space.cf.group
    f = space.field
    raw = {}
    for t in product(range(space.dim), repeat=4):
        if space.degree_of_tuple(t) == g.zero():
            raw[t] = f(rng.randint(-spread, spread))
        else:
            raw[t] = f.zero
    return project_curvature(space, raw)


def _condition_b(r, mu, cap):
    """mu(A,B)(C) + eps(B,C) mu(A,C)(B) = (A,B)C + eps(B,C)(A,C)B - 2(B,C)A."""
    V = r.space
    n = V.dim
    G = r.form.gram
    eps = V.eps_table
    f = r.field
    bad = []
    first = None
    ops = {(a, b): r.operator(mu(a, b)) for a in range(n) for b in range(n)}
    for a, b, c in product(range(n), repeat=3):
        e = eps[b][c]
        lhs = [ops[(a, b)][k][c] + e * ops[(a, c)][k][b] for k in range(n)]
        rhs = [f.zero] * n
        rhs[c] = rhs[c] + G[a][b]
        rhs[b] = rhs[b] + e * G[a][c]
        rhs[a] = rhs[a] - 2 * G[b][c]
        if lhs != rhs:
            w = (V.names[a], V.names[b], V.names[c])
            bad.append(w)
            if first is None:
                first = (w, fmt_vec(f, lhs), fmt_vec(f, rhs))
            if len(bad) >= cap:
                break
    return bad, first


def is_special(r, mu=None, cap: int = 20) -> Verdict:
    """Condition (b) on all basis triples, cross-checked against the curvature criterion."""
    mu = r.moment if mu is None else mu
    bad, first = _condition_b(r, mu, cap)
    V = r.space
    R = curvature_from(mu, None, r.algebra.form, r.form)
    third = V.field(1) / 3
    lhs = R - bianchi_tensor(R).scale(third)
    curv_ok = lhs == curvature_can(V, r.form)
    if curv_ok != (not bad):
        raise InternalInconsistency(
            f"condition (b) says {'special' if not bad else 'not special'} "
            f"but the curvature criterion says {'special' if curv_ok else 'not special'}")
    if bad:
        return Verdict("special", False, first[0], first[1], first[2],
                       f"{len(bad)} violating triples (cap {cap})", bad)
    return Verdict.passed("special")


def special_criteria(r, mu=None):
    """Both criteria separately, without the agreement assertion: (condition_b, curvature)."""
    mu = r.moment if mu is None else mu
    bad, _ = _condition_b(r, mu, 1)
    R = curvature_from(mu, None, r.algebra.form, r.form)
    third = r.field(1) / 3
    curv_ok = (R - bianchi_tensor(R).scale(third)) == curvature_can(r.space, r.form)
    return (not bad), curv_ok
