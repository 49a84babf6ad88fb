"""Signed permutation machinery: the multiplier p(sigma; v), shuffles, signed sorting.

Permutations are 0-based image tuples: ``sigma[i]`` is the image of ``i``.
"""

from __future__ import annotations

from itertools import combinations
from math import comb


def perm_inverse(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def perm_compose(sigma, tau):
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t] for t in tau)


def perm_sign(sigma) -> int:
    seen = [False] * len(sigma)
    s = 1
    for i in range(len(sigma)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = sigma[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def p_sign(sigma, degs, cf):
    """sgn(sigma) times eps(v_i, v_j) over pairs i<j with sigma^-1(i) > sigma^-1(j)."""
    n = len(sigma)
    if len(degs) != n:
        raise ValueError("permutation and degree tuple differ in length")
    inv = perm_inverse(sigma)
    val = cf.field.one
    for i in range(n):
        for j in range(i + 1, n):
            if inv[i] > inv[j]:
                val = val * cf(degs[i], degs[j])
    return val if perm_sign(sigma) == 1 else -val


def shuffle_count(block_sizes) -> int:
    left = sum(block_sizes)
    out = 1
    for b in block_sizes:
        out *= comb(left, b)
        left -= b
    return out


def _block_choices(free, sizes):
    if not sizes:
        yield ()
        return
    for chosen in combinations(free, sizes[0]):
        rest = [x for x in free if x not in chosen]
        for tail in _block_choices(rest, sizes[1:]):
            yield (chosen,) + tail


def shuffle_iter(block_sizes):
    """Every permutation that is increasing on each consecutive block of positions."""
    sizes = list(block_sizes)
    if not sizes:
        raise ValueError("need at least one block")
    if any(s <= 0 for s in sizes):
        raise ValueError("block sizes must be positive")
    for blocks in _block_choices(list(range(sum(sizes))), sizes):
        yield tuple(x for b in blocks for x in b)


def signed_shuffles(block_sizes, idx, swap, one):
    """Yield (blocks, sign) for the shuffles acting on the basis tuple ``idx``.

    ``blocks[k]`` lists the positions of ``idx`` that feed block ``k`` and
    ``sign`` is p(sigma; e_idx). The sign is carried down the recursion: the
    factor for a block depends only on the positions chosen at that level.
    ``swap[a][b]`` must be -eps(e_a, e_b).
    """
    def rec(free, sizes, sign):
        if not sizes:
            yield (), sign
            return
        k = sizes[0]
        for chosen in combinations(range(len(free)), k):
            s = sign
            chosen_set = set(chosen)
            for pos in chosen:
                b = idx[free[pos]]
                for a_pos in range(pos):
                    if a_pos not in chosen_set:
                        s = s * swap[idx[free[a_pos]]][b]
            rest = [free[i] for i in range(len(free)) if i not in chosen_set]
            block = tuple(free[i] for i in chosen)
            for tail, t in rec(rest, sizes[1:], s):
                yield (block,) + tail, t

    yield from rec(list(range(len(idx))), list(block_sizes), one)


def sort_with_sign(indices, swap, one):
    """Stable insertion sort of a basis tuple.

    Returns (sorted tuple, c) with f(indices) = c * f(sorted) for any
    eps-alternating f. Equal indices are never swapped.
    """
    a = list(indices)
    sign = one
    for i in range(1, len(a)):
        j = i
        while j > 0 and a[j - 1] > a[j]:
            x, y = a[j - 1], a[j]
            f = swap[x][y]
            sign = sign * f
            a[j - 1], a[j] = y, x
            j -= 1
    return tuple(a), sign


def sort_with_sign_degs(indices, degs, cf):
    """sort_with_sign with the swap factors computed from explicit degrees."""
    table = {}
    for i, d in zip(indices, degs):
        table[i] = d
    keys = sorted(table)
    swap = {x: {y: -cf(table[x], table[y]) for y in keys} for x in keys}
    return sort_with_sign(indices, swap, cf.field.one)
