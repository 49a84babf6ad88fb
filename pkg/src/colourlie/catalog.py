"""Built-in example families of special eps-orthogonal representations, plus named presets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import matrix as mx
from .altmaps import alt_from_function
from .colour_lie import in_so, matrix_algebra, quad_validate, sl2_make, so_condition_rows, so_degrees, so_eps
from .graded_linalg import FormEps, GradedSpace, form_validate
from .grading import super_sign
from .representations import OrthRep, fundamental_rep, mu_can_matrix, rep_tensor, rep_validate
from .scalars import QQ
from .verdict import Verdict


@dataclass
class CatalogEntry:
    name: str
    params: dict
    rep: OrthRep
    expected: list = field(default_factory=list)


def catalog_fundamental_so(V: GradedSpace, B: FormEps, basis=None) -> OrthRep:
    """so_eps(V, B) on V, with B_so = -1/2 Tr_eps."""
    return fundamental_rep(so_eps(V, B, basis=basis))


def catalog_so_tensor_sl2(V: GradedSpace, BV: FormEps, gamma) -> OrthRep:
    """so_eps(V) + so_eps(W, Omega) on V (x) W, forms 1/4 Tr_eps and -1/2 Tr_eps."""
    so_v = so_eps(V, BV, form_scale=Fraction(1, 4), allow_small=True)
    sl2, _, _ = sl2_make(V.cf, gamma)
    return rep_tensor(fundamental_rep(so_v), fundamental_rep(sl2))


def _flat(m):
    return [x for row in m for x in row]


def centralizer(V: GradedSpace, B: FormEps, J):
    """Matrices and degrees spanning {f in so_eps(V, B) : fJ = Jf}."""
    f = V.field
    n = V.dim
    mats, degs = [], []
    for d in so_degrees(V):
        allowed, rows = so_condition_rows(V, B, d)
        pos = {rs: k for k, rs in enumerate(allowed)}
        for r in range(n):
            for s in range(n):
                row = [f.zero] * len(allowed)
                for k in range(n):
                    if (r, k) in pos and J[k][s]:
                        row[pos[(r, k)]] += J[k][s]
                    if (k, s) in pos and J[r][k]:
                        row[pos[(k, s)]] -= J[r][k]
                if any(row):
                    rows.append(row)
        for vec in mx.kernel(rows, len(allowed), f.zero, f.one):
            m = mx.zeros(n, n, f.zero)
            for (r, s), x in zip(allowed, vec):
                m[r][s] = x
            mats.append(m)
            degs.append(d)
    return mats, degs


def centralizer_moment_matrix(V, B, J, lam, a, b):
    """mu_can(v,w) - mu_can(Jv, Jw)/lambda + (Jv, w) J / lambda on basis vectors, as a matrix."""
    f = V.field
    n = V.dim
    G = B.gram
    inv = f.one / lam
    out = mu_can_matrix(V, B, a, b)
    # mu_can is bilinear, so expand Jv and Jw in the basis
    for c in range(n):
        if not J[c][a]:
            continue
        for d in range(n):
            if J[d][b]:
                m = mu_can_matrix(V, B, c, d)
                s = inv * J[c][a] * J[d][b]
                out = [[x - s * y for x, y in zip(r1, r2)] for r1, r2 in zip(out, m)]
    jvw = sum((J[c][a] * G[c][b] for c in range(n) if J[c][a]), f.zero)
    if jvw:
        s = inv * jvw
        out = [[x + s * y for x, y in zip(r1, r2)] for r1, r2 in zip(out, J)]
    return out


def catalog_centralizer_J(V: GradedSpace, B: FormEps, J, lam, names=None) -> OrthRep:
    """The centralizer m of J in so_eps(V) acting on V, with its form solved from the moment formula."""
    f = V.field
    n = V.dim
    lam = f(lam)
    J = [[f(x) for x in row] for row in J]
    fv = form_validate(B)
    if not fv.ok:
        raise ValueError(f"invalid form: {fv.describe()}")
    if not lam:
        raise ValueError("lambda must be nonzero")
    zero_deg = V.cf.group.zero()
    if not in_so(V, B, J, zero_deg):
        raise ValueError("J is not a degree-0 element of so_eps(V)")
    JJ = mx.matmul(J, J, f.zero)
    if JJ != [[lam if i == j else f.zero for j in range(n)] for i in range(n)]:
        raise ValueError("J^2 is not lambda Id")
    n0 = sum(1 for e in V.even if e)
    if f(n0 - (n - n0)) == f.zero:
        raise ValueError("dim V_0 = dim V_1 modulo the characteristic")
    mats, degs = centralizer(V, B, J)
    names = names or [f"M{k + 1}" for k in range(len(mats))]
    m_alg = matrix_algebra(V, mats, degs, names)
    coord = m_alg.coordinatizer

    def mu_ev(t):
        c = coord.coords(_flat(centralizer_moment_matrix(V, B, J, lam, *t)))
        if c is None:
            raise ValueError(f"moment formula leaves m at {V.names[t[0]]}, {V.names[t[1]]}")
        return c

    mu = alt_from_function(V, m_alg.space, 2, mu_ev, zero_deg)
    gram = solve_invariant_form(m_alg, V, B, mats, mu)
    alg = m_alg.with_form(FormEps(m_alg.space, gram))
    for v in (form_validate(alg.form, "B_m"), quad_validate(alg)):
        if not v.ok:
            raise ValueError(f"solved form on m is not invariant: {v.describe()}")
    alg.matrices = m_alg.matrices
    alg.coordinatizer = coord
    alg.module_space = V
    r = OrthRep(alg, V, B, mats)
    r.formula_moment = mu
    return r


def solve_invariant_form(m_alg, V, B, mats, mu):
    """The Gram matrix G_m with G_m(x, mu(v, w)) = (x(v), w) for all basis x, v, w."""
    f = V.field
    k = m_alg.dim
    n = V.dim
    G = B.gram
    rows, rhs = [], []
    for x in range(k):
        for a, b in product(range(n), repeat=2):
            val = mu(a, b)
            row = [f.zero] * (k * k)
            for j, c in enumerate(val):
                if c:
                    row[x * k + j] = c
            target = sum((mats[x][r][a] * G[r][b] for r in range(n) if mats[x][r][a]), f.zero)
            if any(row) or target:
                rows.append(row)
                rhs.append(target)
    sol = mx.solve(rows, rhs, f.zero, f.one) if rows else None
    if sol is None:
        raise ValueError("no form on m reproduces the moment formula")
    kern = mx.kernel(rows, k * k, f.zero, f.one) if rows else [None] * (k * k)
    if kern:
        raise ValueError("the form on m is not determined by the moment formula")
    return [[sol[i * k + j] for j in range(k)] for i in range(k)]


def centralizer_psi_closed_form(r: OrthRep, J, lam):
    """(3/lambda)((Jv1,v2)Jv3 + eps(v1+v2,v3)(Jv3,v1)Jv2 + (Jv2,v3)Jv1)."""
    V = r.space
    f = V.field
    n = V.dim
    G = r.form.gram
    eps = V.eps_table
    J = [[f(x) for x in row] for row in J]
    s = f(3) / f(lam)

    def jpair(a, b):
        return sum((J[c][a] * G[c][b] for c in range(n) if J[c][a]), f.zero)

    def ev(t):
        a, b, c = t
        e = eps[a][c] * eps[b][c]
        x, y, z = jpair(a, b), e * jpair(c, a), jpair(b, c)
        return [s * (x * J[k][c] + y * J[k][b] + z * J[k][a]) for k in range(n)]

    return ev


def q_ppqq(V: GradedSpace, BV: FormEps, gamma, v1, v2, v3, v4):
    """24 eps(p,v2+v3)(v1,v2)(v3,v4) - 12 eps(p,v3)^2 eps(v3,v4)(v1,v3)(v2,v4)
    - 12 eps(p,v3+v4)(v2,v3)(v1,v4), for basis indices of V."""
    cf = V.cf
    g = cf.group
    p = g.elem(gamma)
    G = BV.gram
    d = V.degrees
    e = cf
    return (24 * e(p, d[v2]) * e(p, d[v3]) * G[v1][v2] * G[v3][v4]
            - 12 * e(p, d[v3]) ** 2 * e(d[v3], d[v4]) * G[v1][v3] * G[v2][v4]
            - 12 * e(p, d[v3]) * e(p, d[v4]) * G[v2][v3] * G[v1][v4])


# ----------------------------------------------------------------- presets

def _super():
    return super_sign(QQ)


def preset(family: str, name: str) -> CatalogEntry:
    cf = _super()
    if family == "fundamental_so":
        if name == "k2":
            sl2, W, omega = sl2_make(cf, 1)
            return CatalogEntry("fundamental_so/k2", {}, fundamental_rep(sl2), ["special", "psi=0", "Q=0"])
        if name == "so3":
            V = GradedSpace(cf, ("e1", "e2", "e3"), (0, 0, 0))
            B = FormEps(V, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
            return CatalogEntry("fundamental_so/so3", {}, catalog_fundamental_so(V, B),
                                ["special", "psi=0", "Q=0"])
        if name == "hyperbolic2":
            V = GradedSpace(cf, ("u1", "u2"), (0, 0))
            B = FormEps(V, [[0, 1], [1, 0]])
            return CatalogEntry("fundamental_so/hyperbolic2", {}, catalog_fundamental_so(V, B),
                                ["special", "psi=0", "Q=0"])
        if name == "osp12":
            V = GradedSpace(cf, ("e", "p", "q"), (0, 1, 1))
            B = FormEps(V, [[1, 0, 0], [0, 0, 1], [0, -1, 0]])
            return CatalogEntry("fundamental_so/osp12", {}, catalog_fundamental_so(V, B),
                                ["special", "psi=0", "Q=0"])
    if family == "so_tensor_sl2":
        if name == "hyperbolic2":
            V = GradedSpace(cf, ("u1", "u2"), (0, 0))
            B = FormEps(V, [[0, 1], [1, 0]])
            return CatalogEntry("so_tensor_sl2/hyperbolic2", {"gamma": [1]},
                                catalog_so_tensor_sl2(V, B, 1), ["special", "Q(u1p,u2p,u1q,u2q)=12"])
        if name == "so3":
            V = GradedSpace(cf, ("e1", "e2", "e3"), (0, 0, 0))
            B = FormEps(V, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
            return CatalogEntry("so_tensor_sl2/so3", {"gamma": [1]},
                                catalog_so_tensor_sl2(V, B, 1), ["special"])
    if family == "centralizer_J":
        if name == "hyperbolic2":
            V = GradedSpace(cf, ("u1", "u2"), (0, 0))
            B = FormEps(V, [[0, 1], [1, 0]])
            J = [[1, 0], [0, -1]]
            return CatalogEntry("centralizer_J/hyperbolic2", {"lambda": "1", "J": J},
                                catalog_centralizer_J(V, B, J, 1), ["special", "m=gl(1)"])
        if name == "gl3":
            names = ("u1", "u2", "u3", "w1", "w2", "w3")
            V = GradedSpace(cf, names, (0,) * 6)
            B = FormEps(V, [[1 if abs(i - j) == 3 else 0 for j in range(6)] for i in range(6)])
            J = [[(1 if i < 3 else -1) if i == j else 0 for j in range(6)] for i in range(6)]
            return CatalogEntry("centralizer_J/gl3", {"lambda": "1", "J": J},
                                catalog_centralizer_J(V, B, J, 1), ["special", "m=gl(3)"])
        if name == "hyperbolic2_lambda4":
            V = GradedSpace(cf, ("u1", "u2"), (0, 0))
            B = FormEps(V, [[0, 1], [1, 0]])
            J = [[2, 0], [0, -2]]
            return CatalogEntry("centralizer_J/hyperbolic2_lambda4", {"lambda": "4", "J": J},
                                catalog_centralizer_J(V, B, J, 4), ["special"])
    raise KeyError(f"unknown catalog entry {family}/{name}")


PRESETS = {
    "fundamental_so": ["k2", "so3", "hyperbolic2", "osp12"],
    "so_tensor_sl2": ["hyperbolic2", "so3"],
    "centralizer_J": ["hyperbolic2", "gl3", "hyperbolic2_lambda4"],
}


def all_presets():
    for family, names in PRESETS.items():
        for name in names:
            yield preset(family, name)


def entry_validate(entry: CatalogEntry) -> Verdict:
    return rep_validate(entry.rep, min_dim=1)
