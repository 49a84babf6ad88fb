"""Finitely generated abelian groups and commutation factors on them."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .scalars import Field, QQ
from .verdict import Verdict

GroupElem = tuple  # integer coordinates, torsion part reduced


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank x Z/m_1 x ... x Z/m_t."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or any(m < 2 for m in self.torsion):
            raise ValueError("invalid group presentation")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def elem(self, coords) -> GroupElem:
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise ValueError(f"expected {self.ngens} coordinates, got {len(coords)}")
        r = self.free_rank
        return coords[:r] + tuple(c % m for c, m in zip(coords[r:], self.torsion))

    def zero(self) -> GroupElem:
        return (0,) * self.ngens

    def add(self, a: GroupElem, b: GroupElem) -> GroupElem:
        return self.elem(x + y for x, y in zip(a, b))

    def neg(self, a: GroupElem) -> GroupElem:
        return self.elem(-x for x in a)

    def sub(self, a: GroupElem, b: GroupElem) -> GroupElem:
        return self.elem(x - y for x, y in zip(a, b))

    def random_elem(self, rng: random.Random, spread: int = 3) -> GroupElem:
        free = [rng.randint(-spread, spread) for _ in range(self.free_rank)]
        tors = [rng.randrange(m) for m in self.torsion]
        return self.elem(free + tors)


@dataclass(frozen=True)
class CommutationFactor:
    """A bimultiplicative eps : G x G -> k*, given by its values on generators."""

    group: AbelianGroup
    gen_values: tuple
    field: Field = QQ

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in row) for row in self.gen_values)
        object.__setattr__(self, "gen_values", rows)
        n = self.group.ngens
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"epsilon matrix must be {n}x{n}")
        object.__setattr__(self, "_cache", {})

    def validate(self) -> Verdict:
        return epsilon_validate(self)

    def __call__(self, a: GroupElem, b: GroupElem):
        key = (a, b)
        cache = self._cache
        if key not in cache:
            one = self.field.one
            val = one
            E = self.gen_values
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            val = val * E[i][j] ** (ai * bj)
            cache[key] = val
        return cache[key]

    def parity(self, a: GroupElem) -> int:
        return 1 if self(a, a) == self.field.one else -1


def epsilon_validate(cf: CommutationFactor) -> Verdict:
    E = cf.gen_values
    one = cf.field.one
    n = len(E)
    for i in range(n):
        if E[i][i] != one and E[i][i] != -one:
            return Verdict("epsilon", False, (i, i), E[i][i], "+-1", "diagonal value not +-1")
        for j in range(n):
            if E[i][j] * E[j][i] != one:
                return Verdict("epsilon", False, (i, j), E[i][j] * E[j][i], one,
                               "eps(g_i,g_j)eps(g_j,g_i) != 1")
    r = cf.group.free_rank
    for t, m in enumerate(cf.group.torsion):
        i = r + t
        for j in range(n):
            if E[i][j] ** m != one or E[j][i] ** m != one:
                return Verdict("epsilon", False, (i, j), None, None,
                               f"value incompatible with generator order {m}")
    return Verdict.passed("epsilon")


def epsilon_eval(cf: CommutationFactor, a: GroupElem, b: GroupElem):
    return cf(a, b)


def parity(cf: CommutationFactor, a: GroupElem) -> int:
    return cf.parity(a)


def super_sign(field: Field = QQ) -> CommutationFactor:
    """Z/2 with eps(a,b) = (-1)^(ab)."""
    return CommutationFactor(AbelianGroup(0, (2,)), ((-1,),), field)


def trivial_sign(field: Field = QQ) -> CommutationFactor:
    """Z/2 with eps identically 1: ordinary Lie theory, everything even."""
    return CommutationFactor(AbelianGroup(0, (2,)), ((1,),), field)
