"""Exhaustive enumeration of FC and CFC elements.

Both enumerations walk the element graph: starting from the identity, extend
a canonical representative on the right by each generator, keep the
extension when it stays a reduced FC expression (an O(word) heap check, no
root arithmetic), and deduplicate by the canonical form of the commutation
class, which determines an FC element completely.

For the CFC count in a group from the seven finite families the walk is
clipped by multiplicity bounds: a generator can repeat only when it sits on
a bond of strength at least 5, and then at most (m - 1) // 2 times.  The CFC
elements are then filtered from the FC candidates by the cyclic-shift test;
a word with no repeated letter is CFC outright.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import heaps, orientations, words
from .system import INF, CoxeterSystem, Word, is_cfc_finite, named_family


@dataclass(frozen=True)
class EnumerationResult:
    system_name: str
    kind: str  # "fc" | "cfc"
    count: int
    elements: tuple[Word, ...] | None
    max_length: int | None
    exhaustive: bool


def _multiplicity_bounds(system: CoxeterSystem) -> list[int]:
    bounds = [1] * system.rank
    for i in system.generators():
        for j in system.neighbors(i):
            m = system.bond(i, j)
            if m != INF and m >= 5:
                bounds[i] = max(bounds[i], (int(m) - 1) // 2)
    return bounds


def _walk_fc_elements(system: CoxeterSystem,
                      bounds: list[int] | None,
                      max_length: int | None):
    """Yield canonical words of FC elements; the final value of the
    ``cut`` cell reports whether the length cap ever clipped the walk."""
    if system.rank >= 256:
        raise ValueError("rank too large for byte-keyed deduplication")
    cut = [False]
    visited = {b""}
    queue: deque[Word] = deque([()])
    yield (), cut
    while queue:
        w = queue.popleft()
        h = heaps.HeapWord.of(system, w)
        buckets = h.level_buckets()
        for s in system.generators():
            if bounds is not None and h.count(s) >= bounds[s]:
                continue
            if h.violates(s):
                continue
            if max_length is not None and len(w) >= max_length:
                cut[0] = True
                continue
            lvl = h.new_level(s)
            word = []
            for k, bucket in enumerate(buckets, start=1):
                letters = list(bucket)
                if k == lvl:
                    letters.append(s)
                    letters.sort()
                word.extend(letters)
            if lvl > len(buckets):
                word.append(s)
            key = bytes(word)
            if key in visited:
                continue
            visited.add(key)
            canon = tuple(word)
            queue.append(canon)
            yield canon, cut


def enumerate_fc(system: CoxeterSystem, max_length: int | None = None,
                 collect: bool = False) -> EnumerationResult:
    """Count (and optionally list) the FC elements, identity included.

    Runs to the natural fixed point when the system is from the seven
    finite families; otherwise a length cap is required and the result is
    flagged non-exhaustive if the cap clipped anything.
    """
    if max_length is None and not is_cfc_finite(system):
        raise ValueError("system has infinitely many FC elements; "
                         "pass max_length")
    count = 0
    elems: list[Word] = []
    cut = [False]
    for w, cut in _walk_fc_elements(system, None, max_length):
        count += 1
        if collect:
            elems.append(w)
    return EnumerationResult(
        system_name=system.name or f"rank{system.rank}", kind="fc",
        count=count, elements=tuple(elems) if collect else None,
        max_length=max_length, exhaustive=not cut[0])


def enumerate_cfc(system: CoxeterSystem, max_length: int | None = None,
                  collect: bool = False) -> EnumerationResult:
    """Count (and optionally list) the CFC elements, identity included.

    Exhaustive mode (no max_length) requires a system whose components all
    come from the seven finite families; multiplicity bounds then clip the
    search.  With max_length the search is a plain length-capped walk.
    """
    if max_length is None:
        if not is_cfc_finite(system):
            raise ValueError(
                "exhaustive CFC enumeration requires every component to lie "
                "in one of the seven finite families; pass max_length instead")
        bounds = _multiplicity_bounds(system)
    else:
        bounds = None
    count = 0
    elems: list[Word] = []
    cut = [False]
    for w, cut in _walk_fc_elements(system, bounds, max_length):
        if len(set(w)) != len(w):
            if not words.is_cfc(system, w):
                continue
        count += 1
        if collect:
            elems.append(w)
    return EnumerationResult(
        system_name=system.name or f"rank{system.rank}", kind="cfc",
        count=count, elements=tuple(elems) if collect else None,
        max_length=max_length, exhaustive=not cut[0])


def cfc_count_via_orientations(system: CoxeterSystem) -> int:
    """Independent CFC count for systems with all bonds at most 4.

    There every CFC element uses each generator at most once, hence is a
    Coxeter element of its support, so the count is the sum over generator
    subsets of the number of acyclic orientations of the induced graph.
    """
    for i in system.generators():
        for j in system.neighbors(i):
            if system.bond(i, j) == INF or system.bond(i, j) >= 5:
                raise ValueError("orientation counting needs all bonds <= 4")
    if system.rank > 20:
        raise ValueError("rank too large for subset enumeration")
    total = 0
    for mask in range(1 << system.rank):
        sub = frozenset(i for i in system.generators() if (mask >> i) & 1)
        graph = orientations.system_graph(system, sub)
        total += len(orientations.acyclic_orientations(graph))
    return total


FAMILY_MIN_RANK = {"A": 1, "B": 1, "D": 1, "E": 3, "F": 1, "H": 1}


def family_cfc_count(family: str, n: int) -> int:
    return enumerate_cfc(named_family(family, n)).count


def verify_recurrence(family: str, n_lo: int = 4, n_hi: int = 9) -> bool:
    """Check count(n) = 3 count(n-1) - count(n-2) across the given ranks.

    Ranks where n - 2 falls below the family's smallest constructible rank
    are skipped (family E starts at rank 3).
    """
    lo = max(n_lo, FAMILY_MIN_RANK[family] + 2)
    counts = {n: family_cfc_count(family, n) for n in range(lo - 2, n_hi + 1)}
    return all(counts[n] == 3 * counts[n - 1] - counts[n - 2]
               for n in range(lo, n_hi + 1))


def pattern_avoidance_count(n: int) -> int:
    """Permutations of n+1 symbols avoiding both 321 and 3412."""
    from itertools import permutations

    if n > 8:
        raise ValueError("factorial enumeration capped at n = 8")
    count = 0
    for p in permutations(range(n + 1)):
        if not _contains_321(p) and not _contains_3412(p):
            count += 1
    return count


def _contains_321(p) -> bool:
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[j] >= p[i]:
                continue
            for k in range(j + 1, n):
                if p[k] < p[j]:
                    return True
    return False


def _contains_3412(p) -> bool:
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[j] <= p[i]:
                continue
            for k in range(j + 1, n):
                if p[k] >= p[i]:
                    continue
                for l in range(k + 1, n):
                    if p[k] < p[l] < p[i]:
                        return True
    return False


def fibonacci_check(n_max: int) -> bool:
    """Type A CFC counts match the odd-indexed Fibonacci numbers F(2n+1)
    (F1 = F2 = 1), the sequence seeded by 2, 5 under c(n) = 3c(n-1) - c(n-2)."""
    fib = [0, 1]
    while len(fib) <= 2 * n_max + 1:
        fib.append(fib[-1] + fib[-2])
    return all(family_cfc_count("A", n) == fib[2 * n + 1]
               for n in range(1, n_max + 1))


def affine_spotchecks(bound: int = 6) -> dict[str, bool]:
    """Powers of distinguished affine words stay reduced and FC.

    Checks l(w^k) = k l(w) and that w^k is an FC expression for k up to the
    bound, for a Coxeter element of the affine triangle and for two full
    support CFC words on the affC4 path.
    """
    from .field import context_for
    from . import roots

    cases = {
        "affA2-coxeter": (named_family("affA", 2), (0, 1, 2)),
        "affC4-coxeter": (named_family("affC", 4), (0, 2, 4, 1, 3)),
        "affC4-zigzag": (named_family("affC", 4), (0, 1, 2, 3, 4, 3, 2, 1)),
    }
    report = {}
    for name, (system, word) in cases.items():
        ctx = context_for(system)
        base = roots.length(system, ctx, word)
        ok = base == len(word)
        for k in range(1, bound + 1):
            ok = ok and roots.power_length(system, ctx, word, k) == k * base
            ok = ok and heaps.fc_reduced(system, word * k)
        report[name] = ok
    return report
