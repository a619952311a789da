"""Independent oracles for the test suite.

Everything here is deliberately written from scratch against concrete group
models (permutations, signed permutations, dihedral pairs) or naive
closures, so it shares no code path with the package implementations it
checks.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import permutations

from coxwords.system import INF, CoxeterSystem, build_system


# ---------------------------------------------------------------------------
# Cayley-graph length oracles in concrete finite models


def _bfs_lengths(identity, gen_action, num_gens):
    dist = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in range(num_gens):
            y = gen_action(x, g)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


class PermModel:
    """Type A_n as adjacent transpositions of 0..n."""

    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(n + 1))
        self.dist = _bfs_lengths(self.identity, self.apply, n)

    def apply(self, perm, g):
        p = list(perm)
        p[g], p[g + 1] = p[g + 1], p[g]
        return tuple(p)

    def element(self, word):
        x = self.identity
        for g in word:
            x = self.apply(x, g)
        return x

    def length(self, word):
        return self.dist[self.element(word)]


class SignedPermModel:
    """Type B3 with the strength-4 bond on generators 0, 1.

    Generator 0 negates the first coordinate; generators 1, 2 swap adjacent
    coordinates.
    """

    def __init__(self):
        self.identity = (1, 2, 3)
        self.dist = _bfs_lengths(self.identity, self.apply, 3)

    def apply(self, x, g):
        v = list(x)
        if g == 0:
            v[0] = -v[0]
        else:
            v[g - 1], v[g] = v[g], v[g - 1]
        return tuple(v)

    def element(self, word):
        x = self.identity
        for g in word:
            x = self.apply(x, g)
        return x

    def length(self, word):
        return self.dist[self.element(word)]


class DihedralModel:
    """I2(m) as pairs (rotation mod m, flip); generator 0 is the flip,
    generator 1 is rotation-then-flip."""

    def __init__(self, m: int):
        self.m = m
        self.identity = (0, 0)
        self.dist = _bfs_lengths(self.identity, self.apply, 2)

    def apply(self, x, g):
        # right multiplication by the reflection r^g * f
        rot, flip = x
        grot = g  # 0 or 1
        if flip:
            return ((rot - grot) % self.m, 0)
        return ((rot + grot) % self.m, 1)

    def element(self, word):
        x = self.identity
        for g in word:
            x = self.apply(x, g)
        return x

    def length(self, word):
        return self.dist[self.element(word)]


# ---------------------------------------------------------------------------
# naive word-combinatorics oracles


def naive_commutation_class(system: CoxeterSystem, word, cap=200000):
    seen = {tuple(word)}
    frontier = [tuple(word)]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if a != b and system.bond(a, b) == 2:
                    u = w[:i] + (b, a) + w[i + 2:]
                    if u not in seen:
                        if len(seen) > cap:
                            raise RuntimeError("oracle cap")
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return seen


def has_bad_block(system: CoxeterSystem, w) -> bool:
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            return True
        m = system.bond(w[i], w[i + 1])
        if m != INF and m >= 3 and i + m <= len(w):
            block = w[i:i + int(m)]
            good = all(c == (w[i] if k % 2 == 0 else w[i + 1])
                       for k, c in enumerate(block))
            if good:
                return True
    return False


def naive_is_fc(system: CoxeterSystem, word) -> bool:
    """FC-expression test by scanning the whole commutation class."""
    return not any(has_bad_block(system, u)
                   for u in naive_commutation_class(system, word))


def contains_block(system: CoxeterSystem, word, block) -> bool:
    """Does some member of the commutation class contain the block?"""
    k = len(block)
    for u in naive_commutation_class(system, word):
        for i in range(len(u) - k + 1):
            if u[i:i + k] == tuple(block):
                return True
    return False


# ---------------------------------------------------------------------------
# numeric positive-definiteness oracle for finiteness


def gram_matrix(system: CoxeterSystem, subset):
    import numpy as np

    vs = sorted(subset)
    n = len(vs)
    g = np.eye(n)
    for a in range(n):
        for b in range(n):
            if a != b:
                m = system.bond(vs[a], vs[b])
                c = 1.0 if m == INF else math.cos(math.pi / m)
                g[a, b] = -c
    return g


def is_positive_definite(system: CoxeterSystem, subset) -> bool:
    import numpy as np

    vs = sorted(subset)
    if not vs:
        return True
    eig = np.linalg.eigvalsh(gram_matrix(system, subset))
    return bool(eig.min() > 1e-9)


# ---------------------------------------------------------------------------
# random instances


def random_system(rng, rank=None, bond_pool=(2, 2, 3, 3, 3, 4, 5, 6, INF)):
    if rank is None:
        rank = rng.randint(2, 6)
    decls = []
    for i in range(rank):
        for j in range(i + 1, rank):
            m = rng.choice(bond_pool)
            if m != 2:
                decls.append((i, j, m))
    return build_system(decls, rank)


def random_word(rng, rank, length):
    return tuple(rng.randrange(rank) for _ in range(length))


def all_words(rank, max_len):
    """Every word over the alphabet up to the given length, including ()."""
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g in range(rank):
                nxt.append(w + (g,))
        out.extend(nxt)
        frontier = nxt
    return out


def coxeter_words(rank):
    return list(permutations(range(rank)))
