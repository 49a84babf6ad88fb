"""eps-orthogonal representations, their moment maps, and tensor products."""

from __future__ import annotations

from functools import cached_property

from . import matrix as mx
from .altmaps import StoredAltMap, alt_from_function, canonical_tuples
from .colour_lie import ColourLieAlgebra, cla_dsum, so_eps
from .graded_linalg import FormEps, GradedSpace, dual_basis, fmt_vec, form_tensor, space_tensor
from .verdict import Verdict


class OrthRep:
    """A quadratic colour Lie algebra acting on (V, ( , )); ``action[k]`` is the matrix of e_k."""

    def __init__(self, algebra: ColourLieAlgebra, space: GradedSpace, form: FormEps, action):
        f = space.field
        if algebra.space.cf != space.cf:
            raise ValueError("algebra and module carry different gradings")
        if form.space != space:
            raise ValueError("form lives on a different space")
        if len(action) != algebra.dim:
            raise ValueError("one action matrix per algebra basis element is required")
        self.algebra = algebra
        self.space = space
        self.form = form
        self.action = [[[f(x) for x in row] for row in m] for m in action]
        for m in self.action:
            if len(m) != space.dim or any(len(r) != space.dim for r in m):
                raise ValueError("action matrix has the wrong shape")

    @property
    def field(self):
        return self.space.field

    def act(self, x, v):
        """rho(x) v for coordinate vectors x in g and v in V."""
        zero = self.field.zero
        out = [zero] * self.space.dim
        for k, xk in enumerate(x):
            if xk:
                for r, row in enumerate(self.action[k]):
                    s = zero
                    for c, vc in enumerate(v):
                        if vc and row[c]:
                            s = s + row[c] * vc
                    if s:
                        out[r] = out[r] + xk * s
        return out

    def act_basis(self, k, c):
        """rho(e_k) e_c."""
        return [row[c] for row in self.action[k]]

    def operator(self, x):
        """Matrix of rho(x)."""
        zero = self.field.zero
        n = self.space.dim
        m = mx.zeros(n, n, zero)
        for k, xk in enumerate(x):
            if xk:
                a = self.action[k]
                for r in range(n):
                    for c in range(n):
                        if a[r][c]:
                            m[r][c] = m[r][c] + xk * a[r][c]
        return m

    @cached_property
    def moment(self) -> StoredAltMap:
        return moment_map(self)

    def with_forms(self, alg_form: FormEps | None = None, form: FormEps | None = None) -> OrthRep:
        alg = self.algebra if alg_form is None else self.algebra.with_form(alg_form)
        if form is None:
            return OrthRep(alg, self.space, self.form, self.action)
        return OrthRep(alg, self.space, form, self.action)


def rep_validate(r: OrthRep, min_dim: int = 2) -> Verdict:
    V, g = r.space, r.algebra
    f = r.field
    gr = V.cf.group
    if V.dim < min_dim:
        return Verdict("rep", False, None, None, None, f"dim V = {V.dim} < {min_dim}")
    for k in range(g.dim):
        deg = g.space.degrees[k]
        m = r.action[k]
        for a in range(V.dim):
            for b in range(V.dim):
                if m[a][b] and V.degrees[a] != gr.add(V.degrees[b], deg):
                    return Verdict("rep degree", False, (g.space.names[k], V.names[a], V.names[b]), None, None,
                                   "action is not homogeneous of the element's degree")
    eps_g = g.space.eps_table
    zero = f.zero
    for x in range(g.dim):
        for y in range(g.dim):
            lhs = r.operator(g.table[x][y])
            xy = mx.matmul(r.action[x], r.action[y], zero)
            yx = mx.matmul(r.action[y], r.action[x], zero)
            e = eps_g[x][y]
            rhs = [[p - e * q for p, q in zip(r1, r2)] for r1, r2 in zip(xy, yx)]
            if lhs != rhs:
                return Verdict("rep morphism", False, (g.space.names[x], g.space.names[y]), None, None,
                               "rho({x,y}) != [rho(x), rho(y)]")
    G = r.form.gram
    for x in range(g.dim):
        m = r.action[x]
        dx = g.space.degrees[x]
        for a in range(V.dim):
            e = V.cf(dx, V.degrees[a])
            for b in range(V.dim):
                lhs = sum((m[k][a] * G[k][b] for k in range(V.dim) if m[k][a]), zero)
                rhs = sum((G[a][k] * m[k][b] for k in range(V.dim) if m[k][b]), zero)
                if lhs + e * rhs:
                    return Verdict("rep skew", False, (g.space.names[x], V.names[a], V.names[b]),
                                   f.format(lhs), f.format(-e * rhs),
                                   "(x v, w) + eps(x,v)(v, x w) != 0")
    return Verdict.passed("rep")


def is_faithful(r: OrthRep) -> bool:
    f = r.field
    rows = [[x for row in m for x in row] for m in r.action]
    return not rows or mx.rank(rows, f.zero, f.one) == len(rows)


def moment_map(r: OrthRep) -> StoredAltMap:
    """mu(v, w) = sum_i (e_i(v), w) e^i with B_g(e_i, e^j) = delta_ij."""
    g = r.algebra
    if g.form is None:
        raise ValueError("the algebra needs an invariant form")
    dual = dual_basis(g.form)
    V = r.space
    G = r.form.gram
    f = r.field
    zero = f.zero
    vals = {}
    for a, b in canonical_tuples(V, 2):
        out = [zero] * g.dim
        for i in range(g.dim):
            m = r.action[i]
            c = zero
            for k in range(V.dim):
                if m[k][a] and G[k][b]:
                    c = c + m[k][a] * G[k][b]
            if c:
                out = [o + c * d for o, d in zip(out, dual[i])]
        vals[(a, b)] = out
    return StoredAltMap(V, g.space, 2, vals, V.cf.group.zero())


def moment_identity(r: OrthRep, mu) -> Verdict:
    """B_g(x, mu(v, w)) = (x(v), w) on all basis elements."""
    g, V = r.algebra, r.space
    f = r.field
    for x in range(g.dim):
        ex = g.space.basis_vector(x)
        for a in range(V.dim):
            xa = r.act_basis(x, a)
            for b in range(V.dim):
                lhs = g.form(ex, mu(a, b))
                rhs = r.form(xa, V.basis_vector(b))
                if lhs != rhs:
                    return Verdict("moment identity", False, (g.space.names[x], V.names[a], V.names[b]),
                                   f.format(lhs), f.format(rhs))
    return Verdict.passed("moment identity")


def moment_equivariance(r: OrthRep, mu) -> Verdict:
    """{x, mu(v,w)} = mu(x v, w) + eps(x, v) mu(v, x w)."""
    g, V = r.algebra, r.space
    f = r.field
    for x in range(g.dim):
        ex = g.space.basis_vector(x)
        dx = g.space.degrees[x]
        for a in range(V.dim):
            e = V.cf(dx, V.degrees[a])
            xa = r.act_basis(x, a)
            for b in range(V.dim):
                xb = r.act_basis(x, b)
                lhs = g.bracket(ex, mu(a, b))
                rhs = [f.zero] * g.dim
                for k, c in enumerate(xa):
                    if c:
                        rhs = [p + c * q for p, q in zip(rhs, mu(k, b))]
                for k, c in enumerate(xb):
                    if c:
                        rhs = [p + e * c * q for p, q in zip(rhs, mu(a, k))]
                if list(lhs) != rhs:
                    return Verdict("moment equivariance", False,
                                   (g.space.names[x], V.names[a], V.names[b]),
                                   fmt_vec(f, lhs), fmt_vec(f, rhs))
    return Verdict.passed("moment equivariance")


def mu_can_matrix(V: GradedSpace, B: FormEps, a: int, b: int):
    """Matrix of mu_can(e_a, e_b): w -> eps(b, w)(a, w) e_b - (b, w) e_a."""
    f = V.field
    G = B.gram
    m = mx.zeros(V.dim, V.dim, f.zero)
    eps = V.eps_table
    for c in range(V.dim):
        if G[a][c]:
            m[b][c] = m[b][c] + eps[b][c] * G[a][c]
        if G[b][c]:
            m[a][c] = m[a][c] - G[b][c]
    return m


def mu_can(V: GradedSpace, B: FormEps, so: ColourLieAlgebra | None = None) -> StoredAltMap:
    """The closed-form canonical moment map, in the coordinates of ``so``."""
    so = so if so is not None else so_eps(V, B)
    coord = so.coordinatizer

    def ev(t):
        a, b = t
        m = mu_can_matrix(V, B, a, b)
        c = coord.coords([x for row in m for x in row])
        if c is None:
            raise ValueError(f"mu_can({V.names[a]}, {V.names[b]}) is not in so_eps")
        return c

    return alt_from_function(V, so.space, 2, ev, V.cf.group.zero())


def fundamental_rep(so: ColourLieAlgebra) -> OrthRep:
    return OrthRep(so, so.module_space, so.module_form, so.matrices)


def rep_tensor(r: OrthRep, s: OrthRep) -> OrthRep:
    """g + h acting on V (x) W by x (x) 1 + eps(y, .) 1 (x) y."""
    V, W = r.space, s.space
    if V.cf != W.cf:
        raise ValueError("representations carry different gradings")
    alg = cla_dsum(r.algebra, s.algebra)
    T = space_tensor(V, W)
    form = form_tensor(r.form, s.form)
    form = FormEps(T, form.gram)
    f = V.field
    nv, nw = V.dim, W.dim
    action = []
    for m in r.action:
        big = mx.zeros(T.dim, T.dim, f.zero)
        for a2 in range(nv):
            for a in range(nv):
                if m[a2][a]:
                    for b in range(nw):
                        big[a2 * nw + b][a * nw + b] = m[a2][a]
        action.append(big)
    for k, m in enumerate(s.action):
        dy = s.algebra.space.degrees[k]
        big = mx.zeros(T.dim, T.dim, f.zero)
        for a in range(nv):
            e = V.cf(dy, V.degrees[a])
            for b2 in range(nw):
                for b in range(nw):
                    if m[b2][b]:
                        big[a * nw + b2][a * nw + b] = e * m[b2][b]
        action.append(big)
    return OrthRep(alg, T, form, action)


def mu_tensor_formula(r: OrthRep, s: OrthRep, T: OrthRep) -> StoredAltMap:
    """eps(w, v')(mu_V(v, v')(w, w')_W + (v, v')_V mu_W(w, w')) on V (x) W."""
    V, W = r.space, s.space
    muV, muW = r.moment, s.moment
    nw = W.dim
    ng = r.algebra.dim
    GV, GW = r.form.gram, s.form.gram
    cf = V.cf

    def ev(t):
        i, j = t
        a, b = divmod(i, nw)
        c, d = divmod(j, nw)
        e = cf(W.degrees[b], V.degrees[c])
        left = [GW[b][d] * x for x in muV(a, c)]
        right = [GV[a][c] * x for x in muW(b, d)]
        return [e * x for x in left + right]

    return alt_from_function(T.space, T.algebra.space, 2, ev, cf.group.zero())
