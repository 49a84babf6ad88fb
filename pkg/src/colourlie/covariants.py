"""The covariants psi (trilinear) and Q (quadrilinear) of a representation, and the
four identities relating them to the moment map."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .altmaps import (AltMap, StoredAltMap, action_pairing, alt_from_function, compare,
                      count_canonical, form_pairing, identity_map, norm, scalar_pairing, wedge,
                      compose)
from .curvature import bianchi_tensor, curvature_from, is_special
from .graded_linalg import fmt_vec, scalar_line
from .permutations import p_sign
from .verdict import InternalInconsistency, Verdict


class _Ops:
    """Cached rho(mu(a, b)) matrices and the forms needed by every covariant formula."""

    def __init__(self, r, mu):
        self.r = r
        self.mu = mu
        V = r.space
        self.V = V
        self.n = V.dim
        self.eps = V.eps_table
        self.G = r.form.gram
        self.zero = r.field.zero
        self.ops = {(a, b): r.operator(mu(a, b)) for a in range(self.n) for b in range(self.n)}

    def mu_act(self, a, b, c):
        """mu(e_a, e_b)(e_c) as a list."""
        m = self.ops[(a, b)]
        return [row[c] for row in m]

    def pair(self, a, vec):
        """(e_a, vec)."""
        row = self.G[a]
        s = self.zero
        for k, x in enumerate(vec):
            if x and row[k]:
                s = s + row[k] * x
        return s


def _psi_three_term(o: _Ops, t):
    a, b, c = t
    eps = o.eps
    e1 = eps[a][c] * eps[b][c]
    e2 = eps[a][b] * eps[a][c]
    x, y, z = o.mu_act(a, b, c), o.mu_act(c, a, b), o.mu_act(b, c, a)
    return [p + e1 * q + e2 * s for p, q, s in zip(x, y, z)]


def _psi_half_sum(o: _Ops, t):
    V = o.V
    degs = [V.degrees[i] for i in t]
    half = V.field(1) / 2
    acc = [o.zero] * o.n
    for sigma in permutations(range(3)):
        c = p_sign(sigma, degs, V.cf)
        u = [t[s] for s in sigma]
        acc = [p + c * q for p, q in zip(acc, o.mu_act(u[0], u[1], u[2]))]
    return [half * x for x in acc]


def _mu_can_act(o: _Ops, a, b, c):
    """mu_can(e_a, e_b)(e_c) = eps(b,c)(a,c) e_b - (b,c) e_a."""
    out = [o.zero] * o.n
    out[b] = out[b] + o.eps[b][c] * o.G[a][c]
    out[a] = out[a] - o.G[b][c]
    return out


def _psi_special(o: _Ops, t):
    a, b, c = t
    return [3 * (x - y) for x, y in zip(o.mu_act(a, b, c), _mu_can_act(o, a, b, c))]


def _q_definition(o: _Ops, psi, t):
    a, b, c, d = t
    eps = o.eps
    e2 = eps[a][d] * eps[b][d] * eps[c][d]
    e3 = eps[a][c] * eps[a][d] * eps[b][c] * eps[b][d]
    e4 = eps[a][b] * eps[a][c] * eps[a][d]
    return (o.pair(a, psi(b, c, d)) - e2 * o.pair(d, psi(a, b, c))
            + e3 * o.pair(c, psi(d, a, b)) - e4 * o.pair(b, psi(c, d, a)))


def _q_half_sum(o: _Ops, t):
    V = o.V
    degs = [V.degrees[i] for i in t]
    acc = o.zero
    for sigma in permutations(range(4)):
        c = p_sign(sigma, degs, V.cf)
        u = [t[s] for s in sigma]
        acc = acc + c * o.pair(u[0], o.mu_act(u[1], u[2], u[3]))
    return acc / 2


@dataclass
class CovariantSet:
    mu: AltMap
    psi: StoredAltMap
    Q: StoredAltMap


def _tabulate(V, codomain, n, fn):
    return alt_from_function(V, codomain, n, fn, V.cf.group.zero())


def covariant_checks(r, mu=None, special: bool | None = None):
    """Every redundant formula for psi and Q, compared on all basis tuples.

    Returns (verdicts, CovariantSet). The special-case formulas are included
    when ``special`` is true (computed when None).
    """
    mu = r.moment if mu is None else mu
    o = _Ops(r, mu)
    V = r.space
    f = r.field
    if special is None:
        special = is_special(r, mu).ok
    verdicts = []

    def agree(name, fa, fb, arity, fmt):
        for t in product(range(V.dim), repeat=arity):
            x, y = fa(t), fb(t)
            if x != y:
                verdicts.append(Verdict(name, False, tuple(V.names[i] for i in t), fmt(x), fmt(y)))
                return
        verdicts.append(Verdict.passed(name))

    vec = lambda x: fmt_vec(f, x)  # noqa: E731
    agree("psi:three-term=half-sum", lambda t: _psi_three_term(o, t),
          lambda t: _psi_half_sum(o, t), 3, vec)
    if special:
        agree("psi:3(mu-mu_can)", lambda t: _psi_three_term(o, t),
              lambda t: _psi_special(o, t), 3, vec)
    psi = _tabulate(V, V, 3, lambda t: _psi_three_term(o, t))
    line = scalar_line(V.cf)
    agree("Q:definition=half-sum", lambda t: _q_definition(o, psi, t),
          lambda t: _q_half_sum(o, t), 4, f.format)
    Q = _tabulate(V, line, 4, lambda t: (_q_definition(o, psi, t),))
    if special:
        agree("Q:4(v1,psi(v2,v3,v4))", lambda t: Q(t)[0],
              lambda t: 4 * o.pair(t[0], psi(t[1:])), 4, f.format)
        nmu = norm(mu, form_pairing(r.algebra.form))
        agree("Q:-2N(mu)", lambda t: Q(t)[0], lambda t: -2 * nmu(t)[0], 4, f.format)
        R = curvature_from(mu, None, r.algebra.form, r.form)
        beta = bianchi_tensor(R)
        agree("Q:-4beta(R_mu)", lambda t: Q(t)[0], lambda t: -4 * beta(*t), 4, f.format)
    return verdicts, CovariantSet(mu, psi, Q)


def covariants(r, mu=None) -> CovariantSet:
    verdicts, cs = covariant_checks(r, mu)
    for v in verdicts:
        if not v.ok:
            raise InternalInconsistency(v.describe())
    return cs


def covariant_psi(r, mu=None) -> StoredAltMap:
    return covariants(r, mu).psi


def covariant_Q(r, mu=None) -> StoredAltMap:
    return covariants(r, mu).Q


# ------------------------------------------------------- Mathews identities

IDENTITY_ARITY = {"a": 5, "b": 6, "c": 9, "d": 12}


def mathews_sides(r, identity: str, cs: CovariantSet):
    """Both sides of identity a, b, c or d as lazy maps."""
    V = r.space
    cf = V.cf
    f = r.field
    mu, psi, Q = cs.mu, cs.psi, cs.Q
    times_V = scalar_pairing(cf, V)
    times_k = scalar_pairing(cf)
    if identity == "a":
        lhs = wedge(mu, psi, action_pairing(r.algebra.space, V, r.action))
        rhs = wedge(Q, identity_map(V), times_V).scale(f(Fraction(-3, 2)))
    elif identity == "b":
        lhs = compose(mu, psi)
        rhs = wedge(Q, mu, scalar_pairing(cf, r.algebra.space)).scale(f(3))
    elif identity == "c":
        lhs = compose(psi, psi)
        rhs = wedge(wedge(Q, Q, times_k), identity_map(V), times_V).scale(f(Fraction(-27, 2)))
    elif identity == "d":
        lhs = compose(Q, psi)
        rhs = wedge(wedge(Q, Q, times_k), Q, times_k).scale(f(-54))
    else:
        raise ValueError(f"unknown identity {identity!r}")
    return lhs, rhs


def mathews_verify(r, identity: str, sample: int | None = None, seed: int = 0, budget: int = 500,
                   threads: int = 1, mu=None, require_special: bool = True) -> Verdict:
    """Compare both sides exactly on all canonical tuples (or ``sample`` random ones)."""
    mu = r.moment if mu is None else mu
    if require_special:
        sv = is_special(r, mu)
        if not sv.ok:
            raise ValueError(f"representation is not special: {sv.describe()}")
    if identity not in IDENTITY_ARITY:
        raise ValueError(f"unknown identity {identity!r}")
    n = IDENTITY_ARITY[identity]
    if sample is None and count_canonical(r.space, n) > budget:
        raise ValueError(f"{count_canonical(r.space, n)} canonical tuples exceed the budget {budget}")
    if require_special:
        cs = covariants(r, mu)
    else:
        cs = covariant_checks(r, mu, special=False)[1]
    lhs, rhs = mathews_sides(r, identity, cs)
    mode = "full" if sample is None else f"sampled:{sample}"
    return compare(lhs, rhs, name=f"MATHEWS {identity} {mode}", sample=sample, seed=seed, threads=threads)
