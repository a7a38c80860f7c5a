"""Symmetric group combinatorics: permutations in one-line notation,
reduced words, Bruhat order, Young subgroups and minimal coset
representatives.

A permutation of {1..n} is a tuple of its images: ``w[i-1] == w(i)``.

>>> reduced_word((2, 3, 1))
[1, 2]
>>> length((3, 2, 1))
3
>>> bruhat_leq((2, 1, 3), (2, 3, 1))
True
"""

from __future__ import annotations

import itertools
from functools import lru_cache

__all__ = [
    "Perm",
    "identity",
    "compose",
    "inverse",
    "length",
    "transposition",
    "adjacent",
    "apply_to_tuple",
    "reduced_word",
    "all_reduced_words",
    "perm_from_word",
    "bruhat_leq",
    "all_perms",
    "Composition",
    "compositions",
    "check_composition",
    "block_of",
    "young_gens",
    "young_members",
    "coset_reps",
    "coset_factorize",
    "prefix_sums",
]

Perm = tuple[int, ...]
Composition = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(u: Perm, v: Perm) -> Perm:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversions; the Coxeter length."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def adjacent(n: int, i: int) -> Perm:
    """The simple transposition s_i swapping i and i+1, 1 <= i <= n-1."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def transposition(n: int, a: int, b: int) -> Perm:
    w = list(range(1, n + 1))
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def mult_right_s(w: Perm, i: int) -> Perm:
    """w * s_i: swap the entries at positions i, i+1."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def mult_left_s(i: int, w: Perm) -> Perm:
    """s_i * w: swap the values i, i+1."""
    lst = list(w)
    a, b = lst.index(i), lst.index(i + 1)
    lst[a], lst[b] = lst[b], lst[a]
    return tuple(lst)


def apply_to_tuple(w: Perm, t: tuple) -> tuple:
    """Place-permutation action: (w.t)[w(i)] = t[i], i.e. entry at position
    j of the result is t[w^{-1}(j)]."""
    wi = inverse(w)
    return tuple(t[wi[j] - 1] for j in range(len(t)))


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """Canonical reduced word for w (leftmost-descent bubble sort); the
    product s_{i_1} ... s_{i_k} of the returned letters equals w."""
    letters = []
    v = w
    n = len(w)
    ident = identity(n)
    while v != ident:
        for i in range(1, n):
            if v[i - 1] > v[i]:
                letters.append(i)
                v = mult_right_s(v, i)
                break
    return tuple(reversed(letters))


def perm_from_word(n: int, word) -> Perm:
    w = identity(n)
    for i in word:
        w = compose(w, adjacent(n, i))
    return w


def all_reduced_words(w: Perm):
    """Every reduced word of w (tuples of letters)."""
    n = len(w)
    if w == identity(n):
        yield ()
        return
    for i in range(1, n):
        if w[i - 1] > w[i]:  # right descent
            for word in all_reduced_words(mult_right_s(w, i)):
                yield word + (i,)


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat order via prefix dominance (the rank-matrix criterion),
    equivalent to the subword criterion on reduced words."""
    n = len(u)
    if len(w) != n:
        raise ValueError("permutations of different ranks")
    for i in range(1, n):
        for a, b in zip(sorted(u[:i], reverse=True), sorted(w[:i], reverse=True)):
            if a > b:
                return False
    return True


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# compositions, Young subgroups, cosets
# ---------------------------------------------------------------------------

def compositions(parts: int, total: int) -> list[Composition]:
    """All weak compositions of `total` into exactly `parts` parts, in
    lexicographic order."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in compositions(parts - 1, total - first):
            out.append((first,) + rest)
    return out


def check_composition(mu: Composition, n: int, parts: int | None = None) -> None:
    if any(m < 0 for m in mu):
        raise ValueError(f"negative part in composition {mu}")
    if sum(mu) != n:
        raise ValueError(f"composition {mu} does not sum to {n}")
    if parts is not None and len(mu) != parts:
        raise ValueError(f"composition {mu} does not have {parts} parts")


def prefix_sums(mu: Composition) -> list[int]:
    """[0, mu_1, mu_1+mu_2, ...]; entry k is the last position of block k."""
    out = [0]
    for m in mu:
        out.append(out[-1] + m)
    return out


def block_of(mu: Composition, j: int) -> int:
    """1-based index of the block containing position j."""
    ps = prefix_sums(mu)
    for k in range(1, len(ps)):
        if ps[k - 1] < j <= ps[k]:
            return k
    raise ValueError(f"position {j} outside composition {mu}")


def young_gens(mu: Composition) -> list[int]:
    """Indices i such that s_i lies in the Young subgroup S_mu (positions
    i, i+1 in the same block)."""
    ps = prefix_sums(mu)
    cuts = set(ps[1:-1])
    n = ps[-1]
    return [i for i in range(1, n) if i not in cuts]


def young_members(mu: Composition) -> list[Perm]:
    """All elements of S_mu, each permuting positions within blocks."""
    ps = prefix_sums(mu)
    n = ps[-1]
    blocks = [range(ps[k] + 1, ps[k + 1] + 1) for k in range(len(mu))]
    members = []
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        w = list(range(1, n + 1))
        for blk, perm in zip(blocks, parts):
            for pos, val in zip(blk, perm):
                w[pos - 1] = val
        members.append(tuple(w))
    return members


def coset_reps(mu: Composition) -> list[Perm]:
    """Minimal-length representatives of the left cosets w*S_mu, i.e. the
    permutations increasing on every block, sorted lexicographically.
    Lengths are additive across the factorization: l(tau*u) = l(tau) + l(u)
    for u in S_mu."""
    ps = prefix_sums(mu)
    n = ps[-1]
    cuts = [(ps[k] + 1, ps[k + 1]) for k in range(len(mu))]
    reps = []
    for w in itertools.permutations(range(1, n + 1)):
        ok = True
        for a, b in cuts:
            for j in range(a, b):
                if w[j - 1] > w[j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            reps.append(tuple(w))
    reps.sort()
    return reps


def coset_factorize(w: Perm, mu: Composition) -> tuple[Perm, Perm]:
    """Unique factorization w = tau * u with tau a minimal coset
    representative (increasing on blocks) and u in S_mu;
    l(w) = l(tau) + l(u)."""
    ps = prefix_sums(mu)
    n = ps[-1]
    tau = list(w)
    for k in range(len(mu)):
        a, b = ps[k], ps[k + 1]
        tau[a:b] = sorted(tau[a:b])
    tau = tuple(tau)
    u = compose(inverse(tau), w)
    return tau, u
