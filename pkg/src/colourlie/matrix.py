"""Dense exact matrices as lists of rows, reduced by Gauss-Jordan elimination."""

from __future__ import annotations


class SingularMatrix(ValueError):
    pass


def zeros(rows: int, cols: int, zero):
    return [[zero] * cols for _ in range(rows)]


def identity(n: int, zero, one):
    m = zeros(n, n, zero)
    for i in range(n):
        m[i][i] = one
    return m


def matmul(a, b, zero):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [zero] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] = acc[j] + x * bk[j]
        out.append(acc)
    return out


def matvec(a, v, zero):
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def transpose(a):
    return [list(r) for r in zip(*a)]


def rref(a, zero, one):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                mr = m[r]
                m[i] = [x - f * y for x, y in zip(m[i], mr)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, zero, one) -> int:
    return len(rref(a, zero, one)[1])


def kernel(a, ncols: int, zero, one):
    """Basis of {x : a x = 0}, one vector per free column (that entry set to 1)."""
    if not a:
        basis = []
        for f in range(ncols):
            v = [zero] * ncols
            v[f] = one
            basis.append(v)
        return basis
    m, pivots = rref(a, zero, one)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(m, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(a, zero, one):
    n = len(a)
    if n == 0:
        return []
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug, zero, one)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in m]


def solve(a, b, zero, one):
    """One solution x of a x = b, or None when the system is inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug, zero, one)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for row, pc in zip(m, pivots):
        x[pc] = row[ncols]
    return x


class Coordinatizer:
    """Coordinates of vectors with respect to a fixed linearly independent list."""

    def __init__(self, basis, zero, one):
        self.zero, self.one = zero, one
        self.basis = [list(b) for b in basis]
        k = len(self.basis)
        self.k = k
        if k == 0:
            self.pivots, self.reduced, self.transform = [], [], []
            return
        n = len(self.basis[0])
        aug = [b + [one if i == j else zero for j in range(k)] for i, b in enumerate(self.basis)]
        m, pivots = rref(aug, zero, one)
        if len(pivots) < k or any(p >= n for p in pivots):
            raise SingularMatrix("basis vectors are linearly dependent")
        self.pivots = pivots
        self.reduced = [row[:n] for row in m]
        self.transform = [row[n:] for row in m]

    def coords(self, x):
        """Coordinates of x, or None if x is outside the span."""
        zero = self.zero
        c = [x[p] for p in self.pivots]
        resid = list(x)
        for ci, row in zip(c, self.reduced):
            if ci:
                resid = [r - ci * y for r, y in zip(resid, row)]
        if any(resid):
            return None
        out = [zero] * self.k
        for ci, trow in zip(c, self.transform):
            if ci:
                out = [o + ci * t for o, t in zip(out, trow)]
        return out
