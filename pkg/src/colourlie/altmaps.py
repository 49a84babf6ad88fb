"""eps-alternating multilinear maps Alt^n(V, W) with exterior products and composition.

Maps are stored on canonical basis tuples: non-decreasing, with an even
basis index appearing at most once. Products and compositions are lazy and
memoized per canonical tuple; evaluation on any other tuple goes through the
signed sort.
"""

from __future__ import annotations

import multiprocessing
import os
import random
from itertools import combinations, combinations_with_replacement, product

from .graded_linalg import GradedSpace, fmt_vec, scalar_line
from .permutations import sort_with_sign
from .verdict import Verdict


class AltMapError(ValueError):
    pass


def canonical_tuples(space: GradedSpace, n: int):
    even = space.even
    for t in combinations_with_replacement(range(space.dim), n):
        if all(not (t[k] == t[k + 1] and even[t[k]]) for k in range(n - 1)):
            yield t


def count_canonical(space: GradedSpace, n: int) -> int:
    return sum(1 for _ in canonical_tuples(space, n))


def is_canonical(space: GradedSpace, t) -> bool:
    even = space.even
    return all(t[k] < t[k + 1] or (t[k] == t[k + 1] and not even[t[k]]) for k in range(len(t) - 1))


def _split_table(space: GradedSpace, t, k):
    """Group the k-subsets A of positions of t by the pair (t_A, t_rest).

    Each group carries the summed Koszul sign of moving t_A to the front, that
    is the product of -eps(t_a, t_b) over a < b with a outside A and b in A.
    This is p(sigma; t) for the shuffle sending the first k slots onto A.
    """
    cache = space.__dict__.setdefault("_split_cache", {})
    key = (t, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    swap = space.swap_table
    one = space.field.one
    n = len(t)
    groups = {}
    for chosen in combinations(range(n), k):
        cs = set(chosen)
        s = one
        for b in chosen:
            tb = t[b]
            for a in range(b):
                if a not in cs:
                    s = s * swap[t[a]][tb]
        sub = tuple(t[i] for i in chosen)
        rest = tuple(t[i] for i in range(n) if i not in cs)
        gk = (sub, rest)
        groups[gk] = groups[gk] + s if gk in groups else s
    out = [(sub, rest, s) for (sub, rest), s in groups.items() if s]
    cache[key] = out
    return out


class AltMap:
    """Base class. Subclasses supply ``value`` on canonical tuples."""

    def __init__(self, domain: GradedSpace, codomain: GradedSpace, arity: int, degree=None):
        if codomain.cf != domain.cf:
            raise AltMapError("domain and codomain use different gradings")
        self.domain = domain
        self.codomain = codomain
        self.arity = arity
        self.degree = degree
        self._zero = tuple([domain.field.zero] * codomain.dim)

    @property
    def field(self):
        return self.domain.field

    @property
    def zero_value(self):
        return self._zero

    def value(self, t):
        """Value on a canonical tuple."""
        raise NotImplementedError

    def __call__(self, *idx):
        if len(idx) == 1 and isinstance(idx[0], (tuple, list)):
            idx = tuple(idx[0])
        return alt_eval(self, idx)

    def scalar(self, *idx):
        return self(*idx)[0]

    def canonical_tuples(self):
        return canonical_tuples(self.domain, self.arity)

    def items(self):
        for t in self.canonical_tuples():
            v = self.value(t)
            if any(v):
                yield t, v

    def materialize(self) -> StoredAltMap:
        return StoredAltMap(self.domain, self.codomain, self.arity, dict(self.items()), self.degree)

    def raw(self, idx):
        """Evaluate on an arbitrary tuple. Lazy maps override with their definition."""
        return alt_eval(self, idx)

    def __add__(self, other):
        return linear_combination([(self.field.one, self), (self.field.one, other)])

    def __sub__(self, other):
        return linear_combination([(self.field.one, self), (-self.field.one, other)])

    def __neg__(self):
        return linear_combination([(-self.field.one, self)])

    def scale(self, c):
        return linear_combination([(c, self)])


def alt_eval(f: AltMap, idx):
    if len(idx) != f.arity:
        raise AltMapError(f"expected {f.arity} arguments, got {len(idx)}")
    sp = f.domain
    t, sign = sort_with_sign(idx, sp.swap_table, sp.field.one)
    even = sp.even
    for k in range(len(t) - 1):
        if t[k] == t[k + 1] and even[t[k]]:
            return f._zero
    v = f.value(t)
    if sign == 1:
        return v
    return tuple(sign * x for x in v)


class StoredAltMap(AltMap):
    def __init__(self, domain, codomain, arity, values, degree=None):
        super().__init__(domain, codomain, arity, degree)
        clean = {}
        for t, v in values.items():
            t = tuple(t)
            if not is_canonical(domain, t) or len(t) != arity:
                raise AltMapError(f"{t} is not a canonical {arity}-tuple")
            v = tuple(v)
            if len(v) != codomain.dim:
                raise AltMapError(f"value at {t} has the wrong length")
            if any(v):
                clean[t] = v
        self.values = clean

    def value(self, t):
        return self.values.get(t, self._zero)

    def items(self):
        return iter(sorted(self.values.items()))


class LazyAltMap(AltMap):
    """Defined by an evaluator valid on arbitrary tuples; memoized on canonical ones."""

    def __init__(self, domain, codomain, arity, evaluator, degree=None):
        super().__init__(domain, codomain, arity, degree)
        self._eval = evaluator
        self._memo = {}

    def value(self, t):
        v = self._memo.get(t)
        if v is None:
            v = tuple(self._eval(t))
            self._memo[t] = v
        return v

    def raw(self, idx):
        idx = tuple(idx)
        if is_canonical(self.domain, idx):
            return self.value(idx)
        return tuple(self._eval(idx))


def zero_map(domain, codomain, arity) -> StoredAltMap:
    return StoredAltMap(domain, codomain, arity, {}, domain.cf.group.zero())


def identity_map(space: GradedSpace) -> StoredAltMap:
    vals = {(i,): space.basis_vector(i) for i in range(space.dim)}
    return StoredAltMap(space, space, 1, vals, space.cf.group.zero())


def linear_combination(terms) -> LazyAltMap:
    terms = list(terms)
    f0 = terms[0][1]
    for _, f in terms:
        if f.domain != f0.domain or f.codomain != f0.codomain or f.arity != f0.arity:
            raise AltMapError("linear combination of incompatible maps")
    zero = f0._zero

    def ev(t):
        acc = list(zero)
        for c, f in terms:
            if c:
                v = f.raw(t)
                acc = [a + c * x if x else a for a, x in zip(acc, v)]
        return acc

    return LazyAltMap(f0.domain, f0.codomain, f0.arity, ev, f0.degree)


def alt_from_function(domain, codomain, n, evaluator, degree=None, validate=False,
                      sample=None, seed=0) -> StoredAltMap:
    """Tabulate an evaluator on canonical tuples.

    With ``validate`` the evaluator is also checked for eps-alternation on
    arbitrary tuples (all of them, or ``sample`` random ones).
    """
    if validate:
        v = check_alternating(domain, n, evaluator, sample=sample, seed=seed)
        if not v.ok:
            raise AltMapError(f"evaluator is not eps-alternating: {v.describe()}")
    vals = {t: tuple(evaluator(t)) for t in canonical_tuples(domain, n)}
    return StoredAltMap(domain, codomain, n, vals, degree)


def check_alternating(domain: GradedSpace, n: int, evaluator, sample=None, seed=0,
                      name="alternating") -> Verdict:
    """Adjacent-swap rule f(..,x,y,..) = -eps(x,y) f(..,y,x,..) on basis tuples."""
    swap = domain.swap_table
    if sample is None:
        tuples = product(range(domain.dim), repeat=n)
    else:
        rng = random.Random(seed)
        tuples = [tuple(rng.randrange(domain.dim) for _ in range(n)) for _ in range(sample)]
    for t in tuples:
        base = tuple(evaluator(t))
        for k in range(n - 1):
            u = t[:k] + (t[k + 1], t[k]) + t[k + 2:]
            other = tuple(evaluator(u))
            c = swap[t[k]][t[k + 1]]
            expect = tuple(c * x for x in other)
            if base != expect:
                f = domain.field
                return Verdict(name, False, tuple(domain.names[i] for i in t), fmt_vec(f, base),
                               fmt_vec(f, expect), f"adjacent swap rule broken at position {k}")
    return Verdict.passed(name)


# ---------------------------------------------------------------- pairings

class Pairing:
    """A bilinear map U x V' -> W on coordinate vectors."""

    def __init__(self, left: GradedSpace, right: GradedSpace, target: GradedSpace, fn):
        self.left, self.right, self.target, self.fn = left, right, target, fn

    def __call__(self, x, y):
        return self.fn(x, y)


def form_pairing(form) -> Pairing:
    """(x, y) -> B(x, y), scalar valued."""
    sp = form.space
    return Pairing(sp, sp, scalar_line(sp.cf), lambda x, y: (form(x, y),))


def scalar_pairing(cf, space: GradedSpace | None = None) -> Pairing:
    """(a, x) -> a x. With ``space`` omitted this is multiplication of scalars."""
    line = scalar_line(cf)
    space = space or line
    return Pairing(line, space, space, lambda a, x: tuple(a[0] * c for c in x))


def action_pairing(algebra_space: GradedSpace, space: GradedSpace, action) -> Pairing:
    """(x, v) -> rho(x) v where ``action[k]`` is the matrix of basis element k."""
    zero = space.field.zero

    def fn(x, v):
        out = [zero] * space.dim
        for k, xk in enumerate(x):
            if not xk:
                continue
            m = action[k]
            for r in range(space.dim):
                row = m[r]
                s = zero
                for c, vc in enumerate(v):
                    if vc and row[c]:
                        s = s + row[c] * vc
                if s:
                    out[r] = out[r] + xk * s
        return tuple(out)

    return Pairing(algebra_space, space, space, fn)


# ------------------------------------------------------ products and norms

def _add_into(acc, c, v):
    for k, x in enumerate(v):
        if x:
            acc[k] = acc[k] + c * x


def wedge(f: AltMap, g: AltMap, pairing: Pairing) -> LazyAltMap:
    """f ^ g: sum over the (i, j)-shuffles sigma of p(sigma) phi(f(..), g(..))."""
    if f.domain != g.domain:
        raise AltMapError("wedge needs a shared domain")
    if f.codomain != pairing.left or g.codomain != pairing.right:
        raise AltMapError("pairing does not match the codomains")
    sp = f.domain
    i = f.arity
    zero = pairing.target.field.zero
    tdim = pairing.target.dim

    def ev(t):
        acc = [zero] * tdim
        for sub, rest, s in _split_table(sp, t, i):
            x = f(sub)
            if not any(x):
                continue
            y = g(rest)
            if not any(y):
                continue
            _add_into(acc, s, pairing(x, y))
        return acc

    deg = None
    if f.degree is not None and g.degree is not None:
        deg = sp.cf.group.add(f.degree, g.degree)
    return LazyAltMap(sp, pairing.target, f.arity + g.arity, ev, deg)


def norm(f: AltMap, pairing: Pairing) -> LazyAltMap:
    return wedge(f, f, pairing)


def compose(f: AltMap, g: AltMap) -> LazyAltMap:
    """f o g: sum over shuffles into blocks of size j of p(sigma) f(g(..), ..., g(..)).

    The shuffle sum is organised block by block. For a tuple t,
    T_m(t) = sum over the first block A of sign(A) g(t_A) (x) T_{m-1}(t minus A)
    is the tensor of all ordered block images, and f o g (t) = <f, T_i(t)>.
    T is memoized on the remaining sub-tuple, which is sorted whenever t is.
    """
    if g.codomain != f.domain:
        raise AltMapError("compose needs codomain(g) = domain(f)")
    sp = g.domain
    i, j = f.arity, g.arity
    zero = sp.field.zero
    tensors = {}
    fvals = {}

    def block_tensor(t, m):
        key = (t, m)
        hit = tensors.get(key)
        if hit is not None:
            return hit
        out = {}
        if m == 1:
            for k, c in enumerate(g(t)):
                if c:
                    out[(k,)] = c
        else:
            for sub, rest, s in _split_table(sp, t, j):
                head = g(sub)
                if not any(head):
                    continue
                tail = block_tensor(rest, m - 1)
                if not tail:
                    continue
                for k, c in enumerate(head):
                    if not c:
                        continue
                    sc = s * c
                    for key2, d in tail.items():
                        kk = (k,) + key2
                        out[kk] = out[kk] + sc * d if kk in out else sc * d
            out = {k: v for k, v in out.items() if v}
        tensors[key] = out
        return out

    def fval(key):
        v = fvals.get(key)
        if v is None:
            v = f(key)
            fvals[key] = v
        return v

    def ev(t):
        acc = [zero] * f.codomain.dim
        if i == 0:
            return list(f(()))
        for key, c in block_tensor(t, i).items():
            _add_into(acc, c, fval(key))
        return acc

    deg = None
    if f.degree is not None and g.degree is not None:
        gr = sp.cf.group
        deg = f.degree
        for _ in range(i):
            deg = gr.add(deg, g.degree)
    return LazyAltMap(sp, f.codomain, i * j, ev, deg)


# -------------------------------------------------------------- comparison

_WORK = None


def _compare_chunk(chunk):
    lhs, rhs = _WORK
    bad = []
    for t in chunk:
        a, b = lhs.value(t), rhs.value(t)
        if a != b:
            bad.append((t, a, b))
    return bad


def compare(lhs: AltMap, rhs: AltMap, name="equal", sample=None, seed=0, budget=None,
            threads=1) -> Verdict:
    """Exact equality on all canonical tuples, or on ``sample`` random ones."""
    global _WORK
    if lhs.arity != rhs.arity or lhs.codomain != rhs.codomain or lhs.domain != rhs.domain:
        raise AltMapError("comparing maps of different shapes")
    tuples = list(lhs.canonical_tuples())
    if sample is not None:
        rng = random.Random(seed)
        tuples = sorted(rng.sample(tuples, min(sample, len(tuples))))
    elif budget is not None and len(tuples) > budget:
        raise AltMapError(f"{len(tuples)} canonical tuples exceed the budget of {budget}")
    bad = []
    if threads > 1 and len(tuples) > 1 and "fork" in multiprocessing.get_all_start_methods():
        _WORK = (lhs, rhs)
        try:
            step = max(1, len(tuples) // (4 * threads))
            chunks = [tuples[k:k + step] for k in range(0, len(tuples), step)]
            with multiprocessing.get_context("fork").Pool(threads) as pool:
                for part in pool.map(_compare_chunk, chunks):
                    bad.extend(part)
        finally:
            _WORK = None
    else:
        for t in tuples:
            a, b = lhs.value(t), rhs.value(t)
            if a != b:
                bad.append((t, a, b))
                if len(bad) >= 20:
                    break
    f = lhs.field
    detail = f"{len(tuples)} tuples"
    if bad:
        t, a, b = bad[0]
        names = tuple(lhs.domain.names[i] for i in t)
        return Verdict(name, False, names, fmt_vec(f, a), fmt_vec(f, b), detail,
                       [w[0] for w in bad[:20]])
    return Verdict(name, True, detail=detail)


def default_threads() -> int:
    return max(1, min(8, os.cpu_count() or 1))
