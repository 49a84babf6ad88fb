"""Graded vector spaces, homogeneous maps and eps-symmetric bilinear forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import matrix as mx
from .grading import CommutationFactor, GroupElem
from .scalars import Field
from .verdict import Verdict


@dataclass(frozen=True)
class GradedSpace:
    cf: CommutationFactor
    names: tuple
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(self.cf.group.elem(d) for d in self.degrees))
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be unique")

    @classmethod
    def make(cls, cf: CommutationFactor, basis) -> GradedSpace:
        """``basis`` is a list of (name, degree) pairs."""
        basis = list(basis)
        return cls(cf, [n for n, _ in basis], [d for _, d in basis])

    @property
    def field(self) -> Field:
        return self.cf.field

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def zero_scalar(self):
        return self.cf.field.zero

    @cached_property
    def eps_table(self):
        """eps_table[i][j] = eps(e_i, e_j)."""
        cf = self.cf
        return [[cf(a, b) for b in self.degrees] for a in self.degrees]

    @cached_property
    def swap_table(self):
        """swap_table[i][j] = -eps(e_i, e_j), the adjacent-transposition factor."""
        return [[-x for x in row] for row in self.eps_table]

    @cached_property
    def parities(self):
        return tuple(self.cf.parity(d) for d in self.degrees)

    @cached_property
    def even(self):
        return tuple(p == 1 for p in self.parities)

    def degree_of_tuple(self, idx) -> GroupElem:
        g = self.cf.group
        d = g.zero()
        for i in idx:
            d = g.add(d, self.degrees[i])
        return d

    def zero(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int):
        v = self.zero()
        v[i] = self.field.one
        return v

    def index(self, name: str) -> int:
        return self.names.index(name)

    def same_grading(self, other: GradedSpace) -> bool:
        return self.cf == other.cf


def scalar_line(cf: CommutationFactor) -> GradedSpace:
    """The ground field as a one-dimensional space of degree 0."""
    return GradedSpace(cf, ("1",), (cf.group.zero(),))


def _check_compatible(a: GradedSpace, b: GradedSpace):
    if a.cf != b.cf:
        raise ValueError("spaces carry different fields or commutation factors")


def space_dsum(a: GradedSpace, b: GradedSpace) -> GradedSpace:
    _check_compatible(a, b)
    names = list(a.names)
    for n in b.names:
        names.append(n if n not in a.names else n + "'")
    return GradedSpace(a.cf, names, a.degrees + b.degrees)


def space_tensor(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    """Basis e_a (x) f_b ordered with the V index outermost."""
    _check_compatible(v, w)
    g = v.cf.group
    names, degs = [], []
    for a in range(v.dim):
        for b in range(w.dim):
            names.append(f"{v.names[a]}⊗{w.names[b]}")
            degs.append(g.add(v.degrees[a], w.degrees[b]))
    return GradedSpace(v.cf, names, degs)


# ---------------------------------------------------------------- vectors

def vadd(x, y):
    return [a + b for a, b in zip(x, y)]


def vsub(x, y):
    return [a - b for a, b in zip(x, y)]


def vscale(c, x):
    return [c * a for a in x]


def vaxpy(acc, c, x):
    """acc + c*x, skipping zero entries."""
    if not c:
        return acc
    return [a + c * b if b else a for a, b in zip(acc, x)]


def is_zero(x) -> bool:
    return not any(x)


def fmt_vec(field: Field, x) -> str:
    return "[" + ",".join(field.format(c) for c in x) + "]"


# ------------------------------------------------------------ linear maps

@dataclass
class GradedLinearMap:
    source: GradedSpace
    target: GradedSpace
    matrix: list
    degree: GroupElem | None = None

    def __post_init__(self):
        if len(self.matrix) != self.target.dim or any(len(r) != self.source.dim for r in self.matrix):
            raise ValueError("matrix shape does not match source/target")
        if self.degree is not None:
            self.degree = self.source.cf.group.elem(self.degree)
            bad = self.degree_violation(self.degree)
            if bad is not None:
                raise ValueError(f"entry {bad} breaks declared degree {self.degree}")

    def degree_violation(self, delta):
        g = self.source.cf.group
        for i, row in enumerate(self.matrix):
            for j, x in enumerate(row):
                if x and self.target.degrees[i] != g.add(self.source.degrees[j], delta):
                    return (i, j)
        return None

    def apply(self, v):
        return mx.matvec(self.matrix, v, self.source.field.zero)


def map_apply(f: GradedLinearMap, v):
    return f.apply(v)


def map_compose(f: GradedLinearMap, g: GradedLinearMap) -> GradedLinearMap:
    """f after g."""
    if g.target != f.source:
        raise ValueError("cannot compose: g's target is not f's source")
    deg = None
    if f.degree is not None and g.degree is not None:
        deg = f.source.cf.group.add(f.degree, g.degree)
    return GradedLinearMap(g.source, f.target, mx.matmul(f.matrix, g.matrix, f.source.field.zero), deg)


def matrix_degree(space: GradedSpace, m):
    """Degree of a square matrix on ``space`` if homogeneous and nonzero, else None."""
    g = space.cf.group
    deg = None
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if x:
                d = g.sub(space.degrees[i], space.degrees[j])
                if deg is None:
                    deg = d
                elif d != deg:
                    return None
    return deg


def eps_trace_matrix(space: GradedSpace, m):
    s = space.field.zero
    for i, p in enumerate(space.parities):
        if m[i][i]:
            s = s + m[i][i] if p == 1 else s - m[i][i]
    return s


def eps_trace(f: GradedLinearMap):
    if f.source != f.target:
        raise ValueError("eps-trace needs an endomorphism")
    return eps_trace_matrix(f.source, f.matrix)


# ------------------------------------------------------------------ forms

@dataclass
class FormEps:
    space: GradedSpace
    gram: list

    def __post_init__(self):
        n = self.space.dim
        f = self.space.field
        self.gram = [[f(x) for x in row] for row in self.gram]
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("gram matrix shape does not match the space")

    def __call__(self, x, y):
        s = self.space.field.zero
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                for j, yj in enumerate(y):
                    if yj and row[j]:
                        s = s + xi * row[j] * yj
        return s

    def validate(self) -> Verdict:
        return form_validate(self)

    @cached_property
    def inverse_gram(self):
        f = self.space.field
        return mx.inverse(self.gram, f.zero, f.one)

    def scaled(self, c) -> FormEps:
        return FormEps(self.space, [[c * x for x in row] for row in self.gram])


def form_validate(b: FormEps, name: str = "form") -> Verdict:
    sp = b.space
    g = sp.cf.group
    G = b.gram
    eps = sp.eps_table
    for i in range(sp.dim):
        for j in range(sp.dim):
            if G[i][j] and g.add(sp.degrees[i], sp.degrees[j]) != g.zero():
                return Verdict(name, False, (i, j), G[i][j], 0, "form is not of degree 0")
            if G[i][j] != eps[i][j] * G[j][i]:
                return Verdict(name, False, (i, j), G[i][j], eps[i][j] * G[j][i],
                               "form is not eps-symmetric")
    f = sp.field
    if mx.rank(G, f.zero, f.one) < sp.dim:
        return Verdict(name, False, None, None, None, "form is degenerate")
    return Verdict.passed(name)


def _restrict(b: FormEps, idx) -> FormEps:
    sp = b.space
    sub = GradedSpace(sp.cf, [sp.names[i] for i in idx], [sp.degrees[i] for i in idx])
    return FormEps(sub, [[b.gram[i][j] for j in idx] for i in idx])


def form_split(b: FormEps):
    """Restrictions of b to the even and the odd basis vectors."""
    sp = b.space
    ev = [i for i in range(sp.dim) if sp.even[i]]
    od = [i for i in range(sp.dim) if not sp.even[i]]
    for i in ev:
        for j in od:
            if b.gram[i][j] or b.gram[j][i]:
                raise ValueError(f"even and odd parts not orthogonal at {(i, j)}")
    return _restrict(b, ev), _restrict(b, od)


def dual_basis(b: FormEps):
    """Coordinate vectors e^j with b(e_i, e^j) = delta_ij."""
    try:
        inv = b.inverse_gram
    except mx.SingularMatrix:
        raise mx.SingularMatrix("form is degenerate; no dual basis") from None
    return mx.transpose(inv) if inv else []


def form_dsum(a: FormEps, b: FormEps) -> FormEps:
    sp = space_dsum(a.space, b.space)
    z = sp.field.zero
    n, m = a.space.dim, b.space.dim
    gram = [list(r) + [z] * m for r in a.gram] + [[z] * n + list(r) for r in b.gram]
    return FormEps(sp, gram)


def form_tensor(bv: FormEps, bw: FormEps) -> FormEps:
    """(v(x)w, v'(x)w') = eps(w, v') (v,v')_V (w,w')_W."""
    V, W = bv.space, bw.space
    T = space_tensor(V, W)
    cf = V.cf
    nw = W.dim
    gram = [[T.field.zero] * T.dim for _ in range(T.dim)]
    for a in range(V.dim):
        for b in range(nw):
            for c in range(V.dim):
                if not bv.gram[a][c]:
                    continue
                for d in range(nw):
                    if bw.gram[b][d]:
                        gram[a * nw + b][c * nw + d] = (
                            cf(W.degrees[b], V.degrees[c]) * bv.gram[a][c] * bw.gram[b][d])
    return FormEps(T, gram)
