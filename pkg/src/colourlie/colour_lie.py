"""Colour Lie algebras as structure-constant tables, with the standard constructors."""

from __future__ import annotations

from fractions import Fraction

from . import matrix as mx
from .graded_linalg import (FormEps, GradedSpace, eps_trace_matrix, fmt_vec, form_dsum,
                            form_validate, space_dsum)
from .grading import CommutationFactor
from .verdict import Verdict, all_of


class ColourLieAlgebra:
    """``table[i][j]`` is the coordinate vector of {e_i, e_j}."""

    def __init__(self, space: GradedSpace, table, form: FormEps | None = None, matrices=None):
        n = space.dim
        f = space.field
        if len(table) != n or any(len(r) != n for r in table):
            raise ValueError("bracket table must be dim x dim")
        self.space = space
        self.table = [[tuple(f(c) for c in v) for v in row] for row in table]
        for row in self.table:
            for v in row:
                if len(v) != n:
                    raise ValueError("bracket value has the wrong length")
        self.form = form
        # optional matrix realisation, used by the matrix constructors
        self.matrices = matrices
        self.sparse = [[[(k, c) for k, c in enumerate(v) if c] for v in row] for row in self.table]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self):
        return self.space.field

    def bracket(self, x, y):
        zero = self.field.zero
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, t in self.sparse[i][j]:
                    out[k] = out[k] + c * t
        return out

    def bracket_basis_sparse(self, i, w):
        """{e_i, w} for a sparse vector w given as (index, coeff) pairs; returns a dict."""
        out = {}
        for j, c in w:
            for k, t in self.sparse[i][j]:
                out[k] = out[k] + c * t if k in out else c * t
        return out

    def ad(self, x):
        """Matrix of ad(x); column j is {x, e_j}."""
        cols = [self.bracket(x, self.space.basis_vector(j)) for j in range(self.dim)]
        return mx.transpose(cols) if cols else []

    def with_form(self, form: FormEps | None) -> ColourLieAlgebra:
        return ColourLieAlgebra(self.space, self.table, form, self.matrices)


def _names(g: ColourLieAlgebra, *idx):
    return tuple(g.space.names[i] for i in idx)


def cla_validate(g: ColourLieAlgebra, max_witnesses: int = 20) -> Verdict:
    sp = g.space
    n = sp.dim
    gr = sp.cf.group
    eps = sp.eps_table
    f = sp.field
    for i in range(n):
        for j in range(n):
            target = gr.add(sp.degrees[i], sp.degrees[j])
            for k, c in g.sparse[i][j]:
                if sp.degrees[k] != target:
                    return Verdict("grading", False, _names(g, i, j), None, None,
                                   f"component {sp.names[k]} has the wrong degree")
            lhs = g.table[i][j]
            rhs = tuple(-eps[i][j] * c for c in g.table[j][i])
            if lhs != rhs:
                return Verdict("antisymmetry", False, _names(g, i, j), fmt_vec(f, lhs), fmt_vec(f, rhs))
    bad = []
    first = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                acc = {}
                for (a, b, c, e) in ((x, y, z, eps[z][x]), (y, z, x, eps[x][y]), (z, x, y, eps[y][z])):
                    inner = g.sparse[b][c]
                    if not inner:
                        continue
                    for k, t in g.bracket_basis_sparse(a, inner).items():
                        acc[k] = acc[k] + e * t if k in acc else e * t
                resid = {k: t for k, t in acc.items() if t}
                if resid:
                    bad.append(_names(g, x, y, z))
                    if first is None:
                        vec = [f.zero] * n
                        for k, t in resid.items():
                            vec[k] = t
                        first = (_names(g, x, y, z), fmt_vec(f, vec))
                    if len(bad) >= max_witnesses:
                        break
            if len(bad) >= max_witnesses:
                break
        if len(bad) >= max_witnesses:
            break
    if bad:
        return Verdict("jacobi", False, first[0], first[1], fmt_vec(f, [f.zero] * n),
                       "Jacobi residual is nonzero", bad)
    return Verdict.passed("jacobi")


def quad_validate(g: ColourLieAlgebra) -> Verdict:
    if g.form is None:
        raise ValueError("algebra carries no form")
    fv = form_validate(g.form, "quadratic")
    if not fv.ok:
        return fv
    n = g.dim
    eps = g.space.eps_table
    G = g.form.gram
    f = g.field

    def B(sparse_x, z):
        s = f.zero
        for k, c in sparse_x:
            if G[k][z]:
                s = s + c * G[k][z]
        return s

    def Bl(y, sparse_w):
        s = f.zero
        for k, c in sparse_w:
            if G[y][k]:
                s = s + G[y][k] * c
        return s

    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = B(g.sparse[x][y], z)
                rhs = -eps[x][y] * Bl(y, g.sparse[x][z])
                if lhs != rhs:
                    return Verdict("quadratic", False, _names(g, x, y, z), f.format(lhs), f.format(rhs),
                                   "form is not ad-invariant")
    return Verdict.passed("quadratic")


def is_quadratic_colour_lie(g: ColourLieAlgebra) -> Verdict:
    checks = [cla_validate(g)]
    if g.form is not None:
        checks.append(quad_validate(g))
    return all_of("quadratic colour Lie algebra", checks)


# ----------------------------------------------------------- constructors

def _flat(m):
    return [x for row in m for x in row]


def commutator(V: GradedSpace, a, b, deg_a, deg_b):
    """ab - eps(a,b) ba for homogeneous matrices."""
    zero = V.field.zero
    ab = mx.matmul(a, b, zero)
    ba = mx.matmul(b, a, zero)
    e = V.cf(deg_a, deg_b)
    return [[x - e * y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def matrix_algebra(V: GradedSpace, mats, degrees, names, form_scale=None) -> ColourLieAlgebra:
    """The algebra spanned by homogeneous matrices on V under the eps-commutator.

    With ``form_scale`` = c the algebra carries B(x, y) = c Tr_eps(xy).
    """
    f = V.field
    space = GradedSpace(V.cf, names, degrees)
    coord = mx.Coordinatizer([_flat(m) for m in mats], f.zero, f.one)
    n = len(mats)
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = commutator(V, mats[i], mats[j], space.degrees[i], space.degrees[j])
            co = coord.coords(_flat(c))
            if co is None:
                raise ValueError(f"span is not closed under the bracket at {(names[i], names[j])}")
            table[i][j] = co
    form = None
    if form_scale is not None:
        s = f(form_scale)
        gram = [[s * eps_trace_matrix(V, mx.matmul(a, b, f.zero)) for b in mats] for a in mats]
        form = FormEps(space, gram)
    alg = ColourLieAlgebra(space, table, form, matrices=[[list(r) for r in m] for m in mats])
    alg.coordinatizer = coord
    alg.module_space = V
    return alg


def elementary(V: GradedSpace, r: int, s: int):
    m = mx.zeros(V.dim, V.dim, V.field.zero)
    m[r][s] = V.field.one
    return m


def gl_eps(V: GradedSpace) -> ColourLieAlgebra:
    g = V.cf.group
    mats, degs, names = [], [], []
    for r in range(V.dim):
        for s in range(V.dim):
            mats.append(elementary(V, r, s))
            degs.append(g.sub(V.degrees[r], V.degrees[s]))
            names.append(f"E({V.names[r]},{V.names[s]})")
    return matrix_algebra(V, mats, degs, names, form_scale=1)


def so_condition_rows(V: GradedSpace, B: FormEps, delta):
    """Linear equations on the entries f[r][s] (row-major) of a degree-delta f in so_eps."""
    n = V.dim
    g = V.cf.group
    f = V.field
    allowed = [(r, s) for r in range(n) for s in range(n)
               if V.degrees[r] == g.add(V.degrees[s], delta)]
    pos = {rs: k for k, rs in enumerate(allowed)}
    G = B.gram
    rows = []
    for a in range(n):
        e = V.cf(delta, V.degrees[a])
        for b in range(n):
            row = [f.zero] * len(allowed)
            # (f(e_a), e_b) = sum_r f[r][a] G[r][b]
            for r in range(n):
                if (r, a) in pos and G[r][b]:
                    row[pos[(r, a)]] += G[r][b]
            # eps(f, e_a) (e_a, f(e_b)) = eps * sum_r G[a][r] f[r][b]
            for r in range(n):
                if (r, b) in pos and G[a][r]:
                    row[pos[(r, b)]] += e * G[a][r]
            if any(row):
                rows.append(row)
    return allowed, rows


def in_so(V: GradedSpace, B: FormEps, m, deg) -> bool:
    allowed, rows = so_condition_rows(V, B, deg)
    vals = {rs: m[rs[0]][rs[1]] for rs in allowed}
    for r in range(V.dim):
        for s in range(V.dim):
            if m[r][s] and (r, s) not in vals:
                return False
    x = [vals[rs] for rs in allowed]
    return all(not sum((c * xi for c, xi in zip(row, x)), V.field.zero) for row in rows)


def so_degrees(V: GradedSpace):
    g = V.cf.group
    seen = []
    for r in range(V.dim):
        for s in range(V.dim):
            d = g.sub(V.degrees[r], V.degrees[s])
            if d not in seen:
                seen.append(d)
    return seen


def so_eps(V: GradedSpace, B: FormEps, form_scale=Fraction(-1, 2), basis=None,
           allow_small=False) -> ColourLieAlgebra:
    """so_eps(V, B) with the form form_scale * Tr_eps(fg).

    Without ``basis`` the algebra is the kernel of the skew condition, one
    degree at a time. ``basis`` is a list of (name, degree, matrix) triples
    that must span the same space.
    """
    if V.dim < 2 and not allow_small:
        raise ValueError("so_eps needs dim V >= 2")
    fv = form_validate(B)
    if not fv.ok:
        raise ValueError(f"invalid form: {fv.describe()}")
    f = V.field
    kernel_mats, kernel_degs = [], []
    for d in so_degrees(V):
        allowed, rows = so_condition_rows(V, B, d)
        for vec in mx.kernel(rows, len(allowed), f.zero, f.one):
            m = mx.zeros(V.dim, V.dim, f.zero)
            for (r, s), x in zip(allowed, vec):
                m[r][s] = x
            kernel_mats.append(m)
            kernel_degs.append(d)
    if basis is None:
        names = [f"X{k + 1}" for k in range(len(kernel_mats))]
        alg = matrix_algebra(V, kernel_mats, kernel_degs, names, form_scale)
    else:
        names = [b[0] for b in basis]
        degs = [V.cf.group.elem(b[1]) for b in basis]
        mats = [[[f(x) for x in row] for row in b[2]] for b in basis]
        if len(mats) != len(kernel_mats):
            raise ValueError("supplied basis has the wrong size")
        for nm, d, m in zip(names, degs, mats):
            if not in_so(V, B, m, d):
                raise ValueError(f"{nm} does not lie in so_eps")
        alg = matrix_algebra(V, mats, degs, names, form_scale)
    alg.module_form = B
    return alg


def sl2_make(cf: CommutationFactor, gamma):
    """so_eps of a 2-dim space W = <p, q>, |p| = gamma, |q| = -gamma, Omega(p, q) = 1."""
    g = cf.group
    gamma = g.elem(gamma)
    if cf.parity(gamma) != -1:
        raise ValueError("no odd degree available: eps(gamma, gamma) must be -1")
    W = GradedSpace(cf, ("p", "q"), (gamma, g.neg(gamma)))
    omega = FormEps(W, [[0, 1], [-1, 0]])
    two_g = g.add(gamma, gamma)
    basis = [
        ("E", two_g, [[0, 1], [0, 0]]),
        ("H", g.zero(), [[1, 0], [0, -1]]),
        ("F", g.neg(two_g), [[0, 0], [1, 0]]),
    ]
    alg = so_eps(W, omega, basis=basis)
    return alg, W, omega


def cla_dsum(g: ColourLieAlgebra, h: ColourLieAlgebra) -> ColourLieAlgebra:
    if g.space.cf != h.space.cf:
        raise ValueError("algebras carry different gradings")
    sp = space_dsum(g.space, h.space)
    n, m = g.dim, h.dim
    z = sp.field.zero
    table = [[None] * (n + m) for _ in range(n + m)]
    for i in range(n + m):
        for j in range(n + m):
            if i < n and j < n:
                table[i][j] = tuple(g.table[i][j]) + (z,) * m
            elif i >= n and j >= n:
                table[i][j] = (z,) * n + tuple(h.table[i - n][j - n])
            else:
                table[i][j] = (z,) * (n + m)
    form = None
    if g.form is not None and h.form is not None:
        form = form_dsum(g.form, h.form)
        form = FormEps(sp, form.gram)
    return ColourLieAlgebra(sp, table, form)


def abelian(space: GradedSpace, form: FormEps | None = None) -> ColourLieAlgebra:
    z = space.field.zero
    n = space.dim
    return ColourLieAlgebra(space, [[(z,) * n for _ in range(n)] for _ in range(n)], form)


def jacobi_residual(g: ColourLieAlgebra, x: int, y: int, z: int):
    """eps(z,x){x,{y,z}} + eps(x,y){y,{z,x}} + eps(y,z){z,{x,y}} for basis indices."""
    eps = g.space.eps_table
    acc = [g.field.zero] * g.dim
    for (a, b, c, e) in ((x, y, z, eps[z][x]), (y, z, x, eps[x][y]), (z, x, y, eps[y][z])):
        for k, t in g.bracket_basis_sparse(a, g.sparse[b][c]).items():
            acc[k] = acc[k] + e * t
    return acc
