"""Extensions g + V of a representation by its moment map plus an extra V-valued bracket."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from . import matrix as mx
from .altmaps import (AltMap, StoredAltMap, canonical_tuples, check_alternating, compare,
                      form_pairing, norm, zero_map)
from .colour_lie import (ColourLieAlgebra, cla_validate, is_quadratic_colour_lie, jacobi_residual,
                         quad_validate, sl2_make)
from .graded_linalg import FormEps, fmt_vec, form_dsum, space_dsum
from .representations import OrthRep, fundamental_rep, is_faithful, rep_tensor
from .verdict import InternalInconsistency, Verdict, all_of


@dataclass
class ExtensionCandidate:
    rep: OrthRep
    phi: AltMap
    algebra: ColourLieAlgebra


@dataclass
class TripleVerdict:
    jacobi: Verdict
    norm_zero: Verdict
    norm_balance: Verdict

    @property
    def ok(self) -> bool:
        return self.jacobi.ok

    def records(self):
        return [self.jacobi, self.norm_zero, self.norm_balance]


def phi_validate(r: OrthRep, phi: AltMap) -> Verdict:
    V, g = r.space, r.algebra
    f = r.field
    gr = V.cf.group
    if phi.arity != 2 or phi.domain != V or phi.codomain != V:
        return Verdict("phi", False, None, None, None, "phi must be a bilinear map V x V -> V")
    for a in range(V.dim):
        for b in range(V.dim):
            target = gr.add(V.degrees[a], V.degrees[b])
            for k, c in enumerate(phi(a, b)):
                if c and V.degrees[k] != target:
                    return Verdict("phi degree", False, (V.names[a], V.names[b]), None, None,
                                   "phi is not of degree 0")
    alt = check_alternating(V, 2, phi.raw, name="phi alternating")
    if not alt.ok:
        return alt
    eps = V.eps_table
    pv = {(a, b): phi(a, b) for a in range(V.dim) for b in range(V.dim)}

    def phi_vec(x, b, left=True):
        out = [f.zero] * V.dim
        for k, c in enumerate(x):
            if c:
                val = pv[(k, b)] if left else pv[(b, k)]
                out = [o + c * y for o, y in zip(out, val)]
        return out

    for x in range(g.dim):
        dx = g.space.degrees[x]
        for a in range(V.dim):
            e = V.cf(dx, V.degrees[a])
            xa = r.act_basis(x, a)
            for b in range(V.dim):
                xb = r.act_basis(x, b)
                lhs = r.act(g.space.basis_vector(x), pv[(a, b)])
                rhs = [p + e * q for p, q in zip(phi_vec(xa, b), phi_vec(xb, a, left=False))]
                if lhs != rhs:
                    return Verdict("phi equivariance", False, (g.space.names[x], V.names[a], V.names[b]),
                                   fmt_vec(f, lhs), fmt_vec(f, rhs))
    for u in range(V.dim):
        for v in range(V.dim):
            for w in range(V.dim):
                lhs = r.form(pv[(u, v)], V.basis_vector(w))
                rhs = -eps[u][v] * r.form(V.basis_vector(v), pv[(u, w)])
                if lhs != rhs:
                    return Verdict("phi invariance", False, (V.names[u], V.names[v], V.names[w]),
                                   f.format(lhs), f.format(rhs))
    return Verdict.passed("phi")


def embed(f: AltMap, target, offset: int) -> StoredAltMap:
    """Push the values of f into a larger space, starting at coordinate ``offset``."""
    z = target.field.zero
    vals = {}
    for t, v in f.items():
        out = [z] * target.dim
        out[offset:offset + len(v)] = v
        vals[t] = out
    return StoredAltMap(f.domain, target, f.arity, vals, f.degree)


def assemble_extension(r: OrthRep, mu: AltMap, phi: AltMap | None) -> ColourLieAlgebra:
    """g + V with {x,v} = x(v), {v,x} = -eps(v,x){x,v}, {v,w} = mu(v,w) + phi(v,w)."""
    g, V = r.algebra, r.space
    n, m = g.dim, V.dim
    sp = space_dsum(g.space, V)
    z = sp.field.zero
    N = n + m
    eps = sp.eps_table
    table = [[None] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            table[i][j] = list(g.table[i][j]) + [z] * m
        for b in range(m):
            table[i][n + b] = [z] * n + r.act_basis(i, b)
    for a in range(m):
        for j in range(n):
            table[n + a][j] = [-eps[n + a][j] * c for c in table[j][n + a]]
        for b in range(m):
            vv = list(mu(a, b)) + (list(phi(a, b)) if phi is not None else [z] * m)
            table[n + a][n + b] = vv
    form = None
    if g.form is not None:
        form = FormEps(sp, form_dsum(g.form, r.form).gram)
    return ColourLieAlgebra(sp, table, form)


def extend(r: OrthRep, phi: AltMap | None = None, check_phi: bool = True):
    """Assemble g + V and decide the three equivalent conditions independently."""
    V = r.space
    if phi is None:
        phi = zero_map(V, V, 2)
    if check_phi:
        pv = phi_validate(r, phi)
        if not pv.ok:
            raise ValueError(f"phi is invalid: {pv.describe()}")
    mu = r.moment
    alg = assemble_extension(r, mu, phi)
    jac = is_quadratic_colour_lie(alg)
    jac.name = "jacobi"
    pairing = form_pairing(alg.form)
    n = r.algebra.dim
    mu_t = embed(mu, alg.space, 0)
    phi_t = embed(phi, alg.space, n)
    total = (mu_t + phi_t).materialize()
    nz = compare(norm(total, pairing), zero_map(V, pairing.target, 4), name="norm_zero")
    nb = compare(norm(mu_t, pairing), -norm(phi_t, pairing), name="norm_balance")
    tv = TripleVerdict(jac, nz, nb)
    if not (jac.ok == nz.ok == nb.ok):
        raise InternalInconsistency(
            f"Jacobi {jac.ok}, N(mu+phi)=0 {nz.ok}, N(mu)=-N(phi) {nb.ok} disagree")
    return ExtensionCandidate(r, phi, alg), tv


def z2_lie_check(r: OrthRep) -> Verdict:
    _, tv = extend(r, None)
    v = tv.jacobi
    return Verdict("z2 lie type", v.ok, v.witness, v.lhs, v.rhs, v.detail, v.witnesses)


def extend_sl2(r: OrthRep, gamma):
    """g + sl2 + V(x)k^2 with bracket mu_{V(x)W} on V(x)W; passes iff r is special."""
    cf = r.space.cf
    sl2, W, omega = sl2_make(cf, gamma)
    if not is_faithful(r):
        warnings.warn("representation is not faithful; the classification hypothesis fails",
                      stacklevel=2)
    T = rep_tensor(r, fundamental_rep(sl2))
    alg = assemble_extension(T, T.moment, None)
    ng = r.algebra.dim
    alg.sl2_triple = (ng, ng + 1, ng + 2)
    verdict = all_of("extend_sl2", [cla_validate(alg), quad_validate(alg)])
    if not verdict.ok:
        w = _ppq_witness(alg, r, ng + 3)
        if w is not None:
            verdict.witness, verdict.lhs, verdict.rhs = w
    return alg, verdict


def _ppq_witness(alg: ColourLieAlgebra, r: OrthRep, offset: int):
    """First failing Jacobi triple of the shape (v(x)p, v'(x)p, v''(x)q)."""
    f = alg.field
    nv = r.space.dim
    ps = [offset + 2 * a for a in range(nv)]
    qs = [offset + 2 * a + 1 for a in range(nv)]
    for x in ps:
        for y in ps:
            for z in qs:
                res = jacobi_residual(alg, x, y, z)
                if any(res):
                    names = tuple(alg.space.names[i] for i in (x, y, z))
                    return names, fmt_vec(f, res), fmt_vec(f, [f.zero] * alg.dim)
    return None


def heisenberg_grading(alg: ColourLieAlgebra, H):
    """Eigenspaces of ad(H); pass iff eigenvalues lie in {-2..2} with dim g_{+-2} = 1."""
    f = alg.field
    n = alg.dim
    ad = alg.ad(H)
    if f.kind == "rational":
        bound = max((sum(abs(x) for x in row) for row in ad), default=0)
        bound = int(bound) + 1
        candidates = range(-bound, bound + 1)
    else:
        candidates = range(-(f.p // 2), f.p // 2 + 1)
    dims = {}
    total = 0
    for lam in candidates:
        shifted = [[x - (f(lam) if i == j else f.zero) for j, x in enumerate(row)] for i, row in enumerate(ad)]
        d = n - mx.rank(shifted, f.zero, f.one) if n else 0
        if d:
            dims[lam] = d
            total += d
    if total != n:
        raise ValueError("ad(H) is not diagonalizable with integer eigenvalues")
    ok = set(dims) <= {-2, -1, 0, 1, 2} and dims.get(2, 0) == 1 and dims.get(-2, 0) == 1
    detail = " ".join(f"{k}:{v}" for k, v in sorted(dims.items()))
    if ok:
        return Verdict("heisenberg", True, detail=detail), dims
    return Verdict("heisenberg", False, None, None, None, f"eigenspace dimensions {detail}"), dims
