import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

import builders as B
import oracles
from colourlie.permutations import (p_sign, perm_compose, perm_inverse, perm_sign, shuffle_count,
                                    shuffle_iter, signed_shuffles, sort_with_sign)

CFS = [B.cf_super(), B.cf_klein(), B.cf_integer()]


@pytest.mark.parametrize("n", range(1, 7))
def test_sign_matches_inversion_count(n):
    for sigma in permutations(range(n)):
        assert perm_sign(sigma) == oracles.inversion_sign(sigma)


@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_sign_is_multiplicative(s, t):
    assert perm_sign(perm_compose(s, t)) == perm_sign(s) * perm_sign(t)
    assert perm_compose(s, perm_inverse(s)) == tuple(range(6))


@pytest.mark.parametrize("cf", CFS)
@given(st.permutations(list(range(5))), st.randoms(use_true_random=False))
def test_p_sign_matches_oracle(cf, sigma, rnd):
    degs = [cf.group.random_elem(rnd) for _ in sigma]
    assert p_sign(tuple(sigma), degs, cf) == oracles.koszul(tuple(sigma), degs, cf)


@pytest.mark.parametrize("cf", CFS)
def test_adjacent_swap_is_minus_eps(cf):
    rng = random.Random(1)
    for _ in range(30):
        degs = [cf.group.random_elem(rng) for _ in range(4)]
        i = rng.randrange(3)
        swap = list(range(4))
        swap[i], swap[i + 1] = i + 1, i
        assert p_sign(tuple(swap), degs, cf) == -cf(degs[i], degs[i + 1])


@pytest.mark.parametrize("sizes", [(1,), (2, 1), (1, 2), (2, 2), (3, 1, 2), (2, 2, 2), (1, 1, 1, 1)])
def test_shuffles_match_oracle(sizes):
    mine = list(shuffle_iter(sizes))
    assert len(mine) == len(set(mine)) == shuffle_count(sizes) == oracles.multinomial(sizes)
    assert set(mine) == set(oracles.block_shuffles(sizes))


def test_shuffle_count_of_three_blocks_of_four():
    assert shuffle_count((4, 4, 4)) == 34650
    assert shuffle_count((3,) * 4) == 369600


@pytest.mark.parametrize("cf", CFS)
@pytest.mark.parametrize("sizes", [(2, 1), (2, 2), (1, 2, 1), (3, 2)])
def test_signed_shuffles_carry_the_koszul_sign(cf, sizes):
    rng = random.Random(sum(sizes))
    n = sum(sizes)
    for _ in range(5):
        degs_of = [cf.group.random_elem(rng) for _ in range(3)]
        idx = tuple(rng.randrange(3) for _ in range(n))
        swap = [[-cf(a, b) for b in degs_of] for a in degs_of]
        degs = [degs_of[i] for i in idx]
        seen = 0
        for blocks, sign in signed_shuffles(sizes, idx, swap, cf.field.one):
            sigma = tuple(x for b in blocks for x in b)
            assert sign == oracles.koszul(sigma, degs, cf)
            seen += 1
        assert seen == shuffle_count(sizes)


@pytest.mark.parametrize("cf", CFS)
@settings(max_examples=40)
@given(st.randoms(use_true_random=False))
def test_sorting_sign_agrees_with_an_antisymmetrized_function(cf, rnd):
    degs_of = [cf.group.random_elem(rnd, spread=1) for _ in range(3)]
    table = {}

    def g(t):
        return [table.setdefault(t, cf.field(rnd.randint(-3, 3)))]

    def F(t):
        return oracles.antisymmetrize(g, t, [degs_of[i] for i in t], cf, cf.field.zero)

    idx = tuple(rnd.randrange(3) for _ in range(3))
    swap = [[-cf(a, b) for b in degs_of] for a in degs_of]
    srt, c = sort_with_sign(idx, swap, cf.field.one)
    assert list(srt) == sorted(idx)
    assert F(idx) == [c * x for x in F(srt)]
