"""The root automaton: generator action on root coordinates.

A word s_{x_1} ... s_{x_m} walks the automaton starting at the unit vector
e_{x_1}; the generator s_i sends z to z with coordinate i replaced by
-z_i + sum over neighbors j of 2cos(pi/m_ij) z_j.  A word is reduced exactly
when every root in the root sequence of every suffix stays positive, and a
non-reduced word shrinks by deleting the two letters that bracket the first
sign change.  All coordinates are exact field elements; every sign decision
is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .field import FieldContext, FieldElement
from .system import CoxeterSystem, Word

RootVector = tuple[FieldElement, ...]
Matrix = tuple[tuple[FieldElement, ...], ...]


@lru_cache(maxsize=None)
def _actions(system: CoxeterSystem, ctx: FieldContext):
    """Per generator: list of (neighbor, weight 2cos(pi/m))."""
    out = []
    for i in system.generators():
        out.append(tuple((j, ctx.embed_bond(system.bond(i, j)))
                         for j in system.neighbors(i)))
    return tuple(out)


def unit_root(system: CoxeterSystem, ctx: FieldContext, i: int) -> RootVector:
    return tuple(ctx.one() if j == i else ctx.zero()
                 for j in system.generators())


def apply_generator(system: CoxeterSystem, ctx: FieldContext,
                    i: int, v: RootVector) -> RootVector:
    """Image of v under the reflection for generator i."""
    acc = -v[i]
    for j, w in _actions(system, ctx)[i]:
        if not v[j].is_zero():
            acc = acc + w * v[j]
    return v[:i] + (acc,) + v[i + 1:]


def root_sign(v: RootVector) -> int:
    """Sign shared by the nonzero coordinates of a root (0 for the zero vector)."""
    s = 0
    for c in v:
        if not c.is_zero():
            s = c.sign()
            break
    assert all(c.is_zero() or c.sign() == s for c in v), \
        "mixed signs: vector is not a root"
    return s


def root_sequence(system: CoxeterSystem, ctx: FieldContext,
                  word: Word) -> list[RootVector]:
    """Roots of all prefixes: element j is the root of s_{x_1}..s_{x_j}."""
    if not word:
        raise ValueError("root sequence of the empty word is undefined")
    v = unit_root(system, ctx, word[0])
    seq = [v]
    for s in word[1:]:
        v = apply_generator(system, ctx, s, v)
        seq.append(v)
    return seq


def is_reduced(system: CoxeterSystem, ctx: FieldContext, word: Word) -> bool:
    """Suffix criterion: every root of every suffix root sequence is positive."""
    n = len(word)
    for i in range(n):
        v = unit_root(system, ctx, word[i])
        for j in range(i + 1, n):
            v = apply_generator(system, ctx, word[j], v)
            if root_sign(v) < 0:
                return False
    return True


def reduce_word(system: CoxeterSystem, ctx: FieldContext, word: Word) -> Word:
    """Shrink to a reduced word for the same element by the exchange property.

    Scans suffix start positions in order; at the first pair (i, j) whose
    root turns negative, letters i and j are deleted and the scan restarts.
    The first such pair is chosen, so the output is deterministic.
    """
    w = list(word)
    while True:
        hit = None
        for i in range(len(w)):
            v = unit_root(system, ctx, w[i])
            for j in range(i + 1, len(w)):
                v = apply_generator(system, ctx, w[j], v)
                if root_sign(v) < 0:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            return tuple(w)
        i, j = hit
        del w[j]
        del w[i]


def length(system: CoxeterSystem, ctx: FieldContext, word: Word) -> int:
    return len(reduce_word(system, ctx, word))


def equal_elements(system: CoxeterSystem, ctx: FieldContext,
                   u: Word, w: Word) -> bool:
    """u and w define the same group element (generators are involutions,
    so the inverse of u is its reverse)."""
    return length(system, ctx, tuple(reversed(u)) + tuple(w)) == 0


def descents(system: CoxeterSystem, ctx: FieldContext, word: Word,
             side: str = "left") -> frozenset[int]:
    """Generators s with l(s w) < l(w) (or l(w s) < l(w) for side="right")."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    w = reduce_word(system, ctx, word)
    out = set()
    for s in system.generators():
        cand = (s,) + w if side == "left" else w + (s,)
        if not is_reduced(system, ctx, cand):
            out.add(s)
    return frozenset(out)


def power_length(system: CoxeterSystem, ctx: FieldContext,
                 word: Word, k: int) -> int:
    """Length of the k-th power of the element spelled by the word."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    return length(system, ctx, tuple(word) * k)


def is_logarithmic_up_to(system: CoxeterSystem, ctx: FieldContext,
                         word: Word, bound: int) -> bool:
    """Bounded check of l(w^k) = k l(w) for 1 <= k <= bound."""
    base = length(system, ctx, word)
    return all(power_length(system, ctx, word, k) == k * base
               for k in range(1, bound + 1))


# ---------------------------------------------------------------------------
# matrices of the geometric representation


def generator_matrix(system: CoxeterSystem, ctx: FieldContext, i: int) -> Matrix:
    rows = []
    weights = dict(_actions(system, ctx)[i])
    for r in system.generators():
        if r != i:
            rows.append(tuple(ctx.one() if c == r else ctx.zero()
                              for c in system.generators()))
        else:
            row = []
            for c in system.generators():
                if c == i:
                    row.append(ctx.rational(-1))
                else:
                    row.append(weights.get(c, ctx.zero()))
            rows.append(tuple(row))
    return tuple(rows)


def identity_matrix(system: CoxeterSystem, ctx: FieldContext) -> Matrix:
    return tuple(tuple(ctx.one() if i == j else ctx.zero()
                       for j in system.generators())
                 for i in system.generators())


def matrix_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(1, n)),
                  start=a[i][0] * b[0][j])
              for j in range(n))
        for i in range(n))


def apply_matrix(m: Matrix, v: RootVector) -> RootVector:
    n = len(m)
    return tuple(
        sum((m[i][k] * v[k] for k in range(1, n)), start=m[i][0] * v[0])
        for i in range(n))


def word_matrix(system: CoxeterSystem, ctx: FieldContext, word: Word) -> Matrix:
    """Matrix of the composed action, first letter applied first."""
    m = identity_matrix(system, ctx)
    for s in word:
        m = matrix_mul(generator_matrix(system, ctx, s), m)
    return m


@lru_cache(maxsize=None)
def bilinear_form(system: CoxeterSystem, ctx: FieldContext) -> Matrix:
    """Gram matrix B(e_i, e_j) = -cos(pi / m_ij)."""
    from fractions import Fraction
    rows = []
    for i in system.generators():
        row = []
        for j in system.generators():
            if i == j:
                row.append(ctx.one())
            else:
                row.append(ctx.embed_bond(system.bond(i, j)) * Fraction(-1, 2))
        rows.append(tuple(row))
    return tuple(rows)


def form_value(b: Matrix, u: RootVector, v: RootVector) -> FieldElement:
    n = len(b)
    acc = None
    for i in range(n):
        if u[i].is_zero():
            continue
        for j in range(n):
            term = u[i] * b[i][j] * v[j]
            acc = term if acc is None else acc + term
    if acc is None:
        return u[0].ctx.zero()
    return acc
