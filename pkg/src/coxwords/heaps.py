"""Heaps of words over a Coxeter alphabet.

The heap of a word is the partial order on its letter positions generated by
putting p below q whenever p comes earlier and their letters do not commute.
Linear extensions of the heap are exactly the commutation class, which gives
two workhorses used everywhere downstream:

* a word is commutation equivalent to one containing letters p_1 .. p_r as a
  consecutive block exactly when those positions form a convex chain (a chain
  whose interval contains nothing else);
* a word is a reduced expression of a fully commutative element exactly when
  its commutation class avoids both s s and the alternating braid word of
  length m(s, t); since any such offending block is a convex chain ending at
  its last letter, the test can be run letter by letter as the heap grows.

Only integer bookkeeping happens here; no root arithmetic is involved.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from functools import lru_cache

from .system import INF, CoxeterSystem, Word


@lru_cache(maxsize=None)
def _clash_table(system: CoxeterSystem) -> tuple[tuple[int, ...], ...]:
    """Per generator: all generators it does not commute with (itself included)."""
    return tuple(
        tuple(b for b in system.generators() if system.bond(a, b) != 2)
        for a in system.generators()
    )


@lru_cache(maxsize=None)
def _finite_braid_neighbors(system: CoxeterSystem) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per generator: (neighbor, m) pairs with 3 <= m finite."""
    out = []
    for a in system.generators():
        pairs = []
        for b in system.neighbors(a):
            m = system.bond(a, b)
            if m != INF:
                pairs.append((b, int(m)))
        out.append(tuple(pairs))
    return tuple(out)


class HeapWord:
    """A word together with its heap, grown one letter at a time."""

    __slots__ = ("system", "letters", "preds", "last", "level", "pos_of")

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.letters: list[int] = []
        self.preds: list[tuple[int, ...]] = []
        self.last = [-1] * system.rank
        self.level: list[int] = []
        self.pos_of: list[list[int]] = [[] for _ in range(system.rank)]

    @classmethod
    def of(cls, system: CoxeterSystem, word: Word) -> "HeapWord":
        h = cls(system)
        for s in word:
            h.append(s)
        return h

    def __len__(self) -> int:
        return len(self.letters)

    def count(self, g: int) -> int:
        return len(self.pos_of[g])

    def _new_preds(self, s: int) -> tuple[int, ...]:
        last = self.last
        return tuple(p for p in (last[b] for b in _clash_table(self.system)[s])
                     if p >= 0)

    def new_level(self, s: int) -> int:
        pv = self._new_preds(s)
        return 1 + max((self.level[p] for p in pv), default=0)

    def append(self, s: int) -> None:
        pv = self._new_preds(s)
        pos = len(self.letters)
        self.letters.append(s)
        self.preds.append(pv)
        self.level.append(1 + max((self.level[p] for p in pv), default=0))
        self.last[s] = pos
        self.pos_of[s].append(pos)

    # -- order queries ------------------------------------------------------

    def _down_closure(self, starts) -> list[bool]:
        """Positions below-or-equal to one of the given positions."""
        mark = [False] * len(self.letters)
        stack = list(starts)
        while stack:
            p = stack.pop()
            if not mark[p]:
                mark[p] = True
                stack.extend(self.preds[p])
        return mark

    def _strictly_between(self, bottom: int, down: list[bool]) -> set[int]:
        """Positions q with bottom < q in the heap and down[q] set.

        ``down`` should mark the strict down-set of the (possibly virtual)
        top element, so the result is the open interval (bottom, top).
        """
        n = len(self.letters)
        up = [False] * n
        out: set[int] = set()
        for q in range(bottom + 1, n):
            for p in self.preds[q]:
                if p == bottom or (p > bottom and up[p]):
                    up[q] = True
                    break
            if up[q] and down[q]:
                out.add(q)
        return out

    # -- fully commutative extension test ------------------------------------

    def violates(self, s: int) -> bool:
        """Would appending s create a forbidden block somewhere in the
        commutation class (s s, or the length-m(s,t) alternating word)?"""
        down = self._down_closure(self._new_preds(s))
        p = self.last[s]
        if p >= 0 and not self._strictly_between(p, down):
            return True
        for t, m in _finite_braid_neighbors(self.system)[s]:
            chain = self._alternating_below(s, t, m - 1, len(self.letters))
            if chain is None:
                continue
            bottom = chain[-1]
            if self._strictly_between(bottom, down) == set(chain[:-1]):
                return True
        return False

    def _alternating_below(self, s: int, t: int, count: int,
                           limit: int) -> list[int] | None:
        """Positions of the latest alternating run t, s, t, ... strictly below
        ``limit``, descending; None if fewer than ``count`` letters exist."""
        seq: list[int] = []
        expect = t
        for _ in range(count):
            occ = self.pos_of[expect]
            k = bisect_left(occ, limit)
            if k == 0:
                return None
            p = occ[k - 1]
            seq.append(p)
            limit = p
            expect = s if expect == t else t
        return seq

    # -- canonical form -------------------------------------------------------

    def level_buckets(self) -> list[list[int]]:
        """Letters grouped by heap level, each group sorted; concatenating the
        groups is the normal form reached by repeatedly pulling to the front
        the sorted set of letters that can be commuted there."""
        if not self.letters:
            return []
        buckets: list[list[int]] = [[] for _ in range(max(self.level))]
        for pos, s in enumerate(self.letters):
            insort(buckets[self.level[pos] - 1], s)
        return buckets


def fc_reduced(system: CoxeterSystem, word: Word) -> bool:
    """True when the word is a reduced expression of a fully commutative
    element, i.e. its commutation class avoids every forbidden block."""
    h = HeapWord(system)
    for s in word:
        if h.violates(s):
            return False
        h.append(s)
    return True


def canonical_word(system: CoxeterSystem, word: Word) -> Word:
    """Canonical representative of the commutation class of the word."""
    h = HeapWord.of(system, word)
    return tuple(s for bucket in h.level_buckets() for s in bucket)


def find_pattern_chain(h: HeapWord, a: int, b: int, r: int) -> list[int] | None:
    """A convex chain spelling the alternating word a b a b ... of length r
    (bottom letter a), as positions bottom to top; None if absent.

    Meaningful only for noncommuting a, b: then consecutive block letters
    are comparable in the heap, so a block exists in the commutation class
    exactly when such a chain does.
    """
    if r < 2:
        raise ValueError("pattern length must be at least 2")
    if h.system.bond(a, b) == 2:
        raise ValueError("pattern letters must not commute")
    top_letter = a if r % 2 == 1 else b
    other = b if top_letter == a else a
    for top in reversed(h.pos_of[top_letter]):
        seq = h._alternating_below(top_letter, other, r - 1, top)
        if seq is None:
            continue
        bottom = seq[-1]
        down = h._down_closure(h.preds[top])
        if h._strictly_between(bottom, down) == set(seq[:-1]):
            return list(reversed(seq)) + [top]
    return None


def witness_with_block(h: HeapWord, chain: list[int]) -> Word:
    """A commutation equivalent word in which the chain appears as a
    consecutive block, in chain order."""
    top = chain[-1]
    in_chain = set(chain)
    down = h._down_closure(h.preds[top])
    before = [q for q in range(len(h.letters)) if down[q] and q not in in_chain]
    after = [q for q in range(len(h.letters))
             if q not in in_chain and not down[q] and q != top]
    order = sorted(before) + chain + sorted(after)
    return tuple(h.letters[q] for q in order)
