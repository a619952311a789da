"""Word-level combinatorics: commutation classes, FC and CFC tests, cyclic
shifts, torsion-freeness, band detection, and the logarithmic decision.

An expression is called FC when it is a reduced expression of a fully
commutative element; equivalently (and this is how it is computed) its
commutation class contains neither s s nor the alternating word of length
m(s, t) as a consecutive block.  CFC asks the same of every cyclic shift:
for a non-CFC element, some cyclic shift of any given reduced expression
already fails, so checking the supplied expression's shifts suffices.  An
exhaustive mode that ranges over the full braid closure is provided for
cross-validation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from . import heaps, roots
from .field import FieldContext
from .system import INF, CoxeterSystem, Word, endpoints, is_torsion_free_support


class CapExceeded(RuntimeError):
    """A closure search grew past its configured cap."""


DEFAULT_CLASS_CAP = 10 ** 6
DEFAULT_CLOSURE_CAP = 10 ** 6


def cyclic_shifts(word: Word) -> list[Word]:
    """All |w| rotations of the word, starting with the word itself."""
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(len(w))]


def support(word: Word) -> frozenset[int]:
    return frozenset(word)


def is_full_support(system: CoxeterSystem, word: Word) -> bool:
    return support(word) == frozenset(system.generators())


def commutation_class(system: CoxeterSystem, word: Word,
                      cap: int = DEFAULT_CLASS_CAP) -> set[Word]:
    """Closure of the word under swaps of adjacent commuting letters."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and system.bond(a, b) == 2:
                u = w[:i] + (b, a) + w[i + 2:]
                if u not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"commutation class exceeded {cap} words")
                    seen.add(u)
                    queue.append(u)
    return seen


def braid_closure(system: CoxeterSystem, word: Word,
                  cap: int = DEFAULT_CLOSURE_CAP) -> set[Word]:
    """Closure under every finite braid move <s,t>_m <-> <t,s>_m (m >= 2)."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a == b:
                continue
            m = system.bond(a, b)
            if m == INF:
                continue
            m = int(m)
            if i + m > len(w):
                continue
            block = w[i:i + m]
            if all(c == (a if k % 2 == 0 else b) for k, c in enumerate(block)):
                flipped = tuple(b if k % 2 == 0 else a for k in range(m))
                u = w[:i] + flipped + w[i + m:]
                if u not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"braid closure exceeded {cap} words")
                    seen.add(u)
                    queue.append(u)
    return seen


def canonical_form(system: CoxeterSystem, word: Word) -> Word:
    """Normal form of the commutation class: repeatedly extract the sorted
    set of letters that can be commuted to the front."""
    return heaps.canonical_word(system, tuple(word))


def is_fc(system: CoxeterSystem, word: Word) -> bool:
    """Is the word a reduced expression of a fully commutative element?"""
    return heaps.fc_reduced(system, tuple(word))


def is_fc_brute(system: CoxeterSystem, word: Word,
                cap: int = DEFAULT_CLASS_CAP) -> bool:
    """Slow oracle for is_fc: enumerate the commutation class and scan each
    member for a forbidden block."""
    w = tuple(word)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        if _has_forbidden_block(system, u):
            return False
        for i in range(len(u) - 1):
            a, b = u[i], u[i + 1]
            if a != b and system.bond(a, b) == 2:
                v = u[:i] + (b, a) + u[i + 2:]
                if v not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"commutation class exceeded {cap} words")
                    seen.add(v)
                    queue.append(v)
    return True


def _has_forbidden_block(system: CoxeterSystem, w: Word) -> bool:
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a == b:
            return True
        m = system.bond(a, b)
        if m == INF or m < 3:
            continue
        m = int(m)
        if i + m <= len(w):
            block = w[i:i + m]
            if all(c == (a if k % 2 == 0 else b) for k, c in enumerate(block)):
                return True
    return False


def is_cyclically_reduced(system: CoxeterSystem, ctx: FieldContext, word: Word,
                          closure_cap: int = DEFAULT_CLOSURE_CAP) -> bool:
    """Every cyclic shift of every reduced expression of the element is
    reduced.  The reduced expressions are the braid closure of the input.

    A shift whose commutation class avoids forbidden blocks is reduced
    outright; only shifts containing a block go to the root automaton.
    """
    w = tuple(word)
    if not roots.is_reduced(system, ctx, w):
        raise ValueError("input word must be reduced")
    for expr in sorted(braid_closure(system, w, cap=closure_cap)):
        for u in cyclic_shifts(expr):
            if heaps.fc_reduced(system, u):
                continue
            if not roots.is_reduced(system, ctx, u):
                return False
    return True


def is_cfc(system: CoxeterSystem, word: Word, exhaustive: bool = False,
           closure_cap: int = DEFAULT_CLOSURE_CAP) -> bool:
    """Is every cyclic shift an FC expression?

    The default checks the shifts of the given expression, which decides the
    element-level property: a non-CFC element has a failing shift for any of
    its reduced expressions.  With exhaustive=True all reduced expressions
    are generated and checked, for cross-validation on small inputs.
    """
    w = tuple(word)
    if not heaps.fc_reduced(system, w):
        return False
    if exhaustive:
        return all(heaps.fc_reduced(system, u)
                   for expr in braid_closure(system, w, cap=closure_cap)
                   for u in cyclic_shifts(expr))
    return all(heaps.fc_reduced(system, u) for u in cyclic_shifts(w))


def is_torsion_free(system: CoxeterSystem, word: Word) -> bool:
    """Every irreducible component of the support generates an infinite group."""
    return is_torsion_free_support(system, support(word))


# ---------------------------------------------------------------------------
# bands


@dataclass(frozen=True)
class Band:
    """An alternating run of length m(s,t)-1 hiding in some cyclic shift.

    s is the odd endpoint of the support subsystem, t its neighbor;
    direction records whether the run starts with s or with t.  The witness
    is (shift index, commutation equivalent word showing the run as a block).
    """

    s: int
    t: int
    direction: str  # "st" | "ts"
    strength: int
    is_large: bool
    witness: tuple[int, Word]


def detect_bands(system: CoxeterSystem, word: Word) -> list[Band]:
    """All bands of a CFC word, one record per (s, t, direction).

    For each ordered pair (a, b) with odd finite bond m >= 3, exactly one of
    a, b an odd endpoint of the support subsystem, and a, b occurring in the
    word exactly as often as in the alternating word of length m - 1, every
    cyclic shift's commutation class is searched for that alternating block.
    """
    w = tuple(word)
    if not is_cfc(system, w):
        raise ValueError("bands are defined only for CFC words")
    supp = support(w)
    odd_ends = {e.generator for e in endpoints(system, supp) if e.is_odd}
    found: dict[tuple[int, int, str], Band] = {}
    shifts = cyclic_shifts(w)
    for a in sorted(supp):
        for b in sorted(supp):
            if a == b:
                continue
            m = system.bond(a, b)
            if m == INF or m < 3 or int(m) % 2 == 0:
                continue
            m = int(m)
            if (a in odd_ends) == (b in odd_ends):
                continue
            need_a = (m - 1 + 1) // 2
            need_b = (m - 1) // 2
            if w.count(a) != need_a or w.count(b) != need_b:
                continue
            ep = a if a in odd_ends else b
            other = b if ep == a else a
            direction = "st" if a == ep else "ts"
            key = (ep, other, direction)
            if key in found:
                continue
            for k, u in enumerate(shifts):
                h = heaps.HeapWord.of(system, u)
                chain = heaps.find_pattern_chain(h, a, b, m - 1)
                if chain is not None:
                    found[key] = Band(
                        s=ep, t=other, direction=direction, strength=m,
                        is_large=m > 3,
                        witness=(k, heaps.witness_with_block(h, chain)))
                    break
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# the logarithmic decision


class Outcome(Enum):
    LOGARITHMIC = "Logarithmic"
    NOT_LOGARITHMIC = "NotLogarithmic"
    UNKNOWN = "Unknown"


class Reason(Enum):
    NOT_CYCLICALLY_REDUCED = "NotCyclicallyReduced"
    NOT_TORSION_FREE = "NotTorsionFree"
    CFC_NO_LARGE_BANDS = "CFCNoLargeBands"
    BOUNDED_CHECK_FAILED = "BoundedCheckFailed"
    BOUNDED_CHECK_INCONCLUSIVE = "BoundedCheckInconclusive"


@dataclass(frozen=True)
class LogVerdict:
    outcome: Outcome
    reason: Reason
    k: int | None = None

    def describe(self) -> str:
        extra = f"({self.k})" if self.k is not None else ""
        return f"{self.outcome.value} [{self.reason.value}{extra}]"


def decide_logarithmic(system: CoxeterSystem, ctx: FieldContext, word: Word,
                       bound: int = 6,
                       closure_cap: int = DEFAULT_CLOSURE_CAP) -> LogVerdict:
    """Decide whether l(w^k) = k l(w) holds for all k.

    Cyclically reduced and torsion-free are necessary.  A CFC element with
    no large band is logarithmic exactly when torsion-free.  Outside that
    theorem-backed branch only the bounded check up to ``bound`` runs: a
    failure refutes, success is inconclusive.
    """
    w = tuple(word)
    if not roots.is_reduced(system, ctx, w):
        raise ValueError("input word must be reduced")
    if not is_cyclically_reduced(system, ctx, w, closure_cap=closure_cap):
        return LogVerdict(Outcome.NOT_LOGARITHMIC, Reason.NOT_CYCLICALLY_REDUCED)
    if not is_torsion_free(system, w):
        return LogVerdict(Outcome.NOT_LOGARITHMIC, Reason.NOT_TORSION_FREE)
    if is_cfc(system, w):
        bands = detect_bands(system, w)
        if not any(b.is_large for b in bands):
            return LogVerdict(Outcome.LOGARITHMIC, Reason.CFC_NO_LARGE_BANDS)
    base = roots.length(system, ctx, w)
    for k in range(1, bound + 1):
        if roots.power_length(system, ctx, w, k) != k * base:
            return LogVerdict(Outcome.NOT_LOGARITHMIC,
                              Reason.BOUNDED_CHECK_FAILED, k)
    return LogVerdict(Outcome.UNKNOWN, Reason.BOUNDED_CHECK_INCONCLUSIVE, bound)
