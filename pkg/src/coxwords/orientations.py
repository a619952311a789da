"""Coxeter elements as acyclic orientations of the Coxeter graph.

A Coxeter element (each generator exactly once) orients every graph edge
from the earlier letter to the later one; conjugating by the initial letter
rotates the word and, on the graph side, turns that source into a sink.
Closing under such flips partitions the acyclic orientations into kappa
classes, counted by the Tutte polynomial at (1, 0), while (2, 0) counts the
orientations themselves.  On finite systems the conjugacy classes of Coxeter
elements can also be computed directly by brute force in the group.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import heaps, roots
from .field import FieldContext, context_for
from .system import CoxeterSystem, Word, classify_finite
from .words import CapExceeded

Graph = tuple[tuple[int, ...], tuple[tuple[int, int], ...]]  # vertices, edges

DEFAULT_GROUP_CAP = 10 ** 5


def system_graph(system: CoxeterSystem,
                 subset: frozenset[int] | None = None) -> Graph:
    """The underlying simple graph of the Coxeter graph (labels dropped)."""
    verts = tuple(sorted(subset)) if subset is not None else tuple(system.generators())
    vset = set(verts)
    edges = tuple((i, j) for i, j in system.edges() if i in vset and j in vset)
    return verts, edges


@dataclass(frozen=True)
class AcyclicOrientation:
    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]  # (tail, head), sorted

    def sources(self) -> list[int]:
        heads = {h for _, h in self.arcs}
        return [v for v in self.vertices if v not in heads]


def _is_acyclic(vertices, arcs) -> bool:
    out: dict[int, list[int]] = {v: [] for v in vertices}
    indeg = {v: 0 for v in vertices}
    for t, h in arcs:
        out[t].append(h)
        indeg[h] += 1
    queue = deque(v for v in vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return seen == len(vertices)


def coxeter_to_orientation(system: CoxeterSystem,
                           word: Word) -> AcyclicOrientation:
    """Orient each edge from the generator appearing first in the word."""
    w = tuple(word)
    if sorted(w) != list(system.generators()):
        raise ValueError("not a Coxeter element word: "
                         "each generator must appear exactly once")
    pos = {s: i for i, s in enumerate(w)}
    arcs = tuple(sorted((i, j) if pos[i] < pos[j] else (j, i)
                        for i, j in system.edges()))
    return AcyclicOrientation(tuple(system.generators()), arcs)


def orientation_to_coxeter(o: AcyclicOrientation) -> Word:
    """Lexicographically least linear extension of the orientation."""
    out: dict[int, list[int]] = {v: [] for v in o.vertices}
    indeg = {v: 0 for v in o.vertices}
    for t, h in o.arcs:
        out[t].append(h)
        indeg[h] += 1
    avail = sorted(v for v in o.vertices if indeg[v] == 0)
    word = []
    while avail:
        v = avail.pop(0)
        word.append(v)
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                avail.append(u)
        avail.sort()
    if len(word) != len(o.vertices):
        raise ValueError("orientation has a directed cycle")
    return tuple(word)


def acyclic_orientations(graph: Graph) -> list[AcyclicOrientation]:
    """All acyclic orientations, in a fixed order."""
    verts, edges = graph
    res = []
    n = len(edges)
    for mask in range(1 << n):
        arcs = tuple(sorted(
            (e[0], e[1]) if not (mask >> k) & 1 else (e[1], e[0])
            for k, e in enumerate(edges)))
        if _is_acyclic(verts, arcs):
            res.append(AcyclicOrientation(verts, arcs))
    return res


def source_to_sink(o: AcyclicOrientation, v: int) -> AcyclicOrientation:
    """Reverse all arcs at a source vertex; acyclicity is preserved."""
    if v not in o.vertices:
        raise ValueError(f"vertex {v} not in orientation")
    if any(h == v for _, h in o.arcs):
        raise ValueError(f"vertex {v} is not a source")
    arcs = tuple(sorted((h, t) if t == v else (t, h) for t, h in o.arcs))
    flipped = AcyclicOrientation(o.vertices, arcs)
    assert _is_acyclic(flipped.vertices, flipped.arcs)
    return flipped


def kappa_classes(graph: Graph) -> int:
    """Number of equivalence classes of acyclic orientations under
    source-to-sink flips."""
    all_os = acyclic_orientations(graph)
    remaining = set(all_os)
    classes = 0
    while remaining:
        classes += 1
        seed = remaining.pop()
        queue = deque([seed])
        while queue:
            o = queue.popleft()
            for v in o.sources():
                nxt = source_to_sink(o, v)
                if nxt in remaining:
                    remaining.remove(nxt)
                    queue.append(nxt)
    return classes


# ---------------------------------------------------------------------------
# Tutte polynomial by deletion and contraction


def tutte_polynomial(graph: Graph) -> dict[tuple[int, int], int]:
    """Coefficients {(i, j): c} of the Tutte polynomial sum c x^i y^j."""
    _, edges = graph
    memo: dict[tuple, dict] = {}

    def go(es: tuple[tuple[int, int], ...]) -> dict[tuple[int, int], int]:
        if not es:
            return {(0, 0): 1}
        key = es
        hit = memo.get(key)
        if hit is not None:
            return hit
        e = es[0]
        rest = es[1:]
        if e[0] == e[1]:  # loop
            res = _poly_shift(go(rest), 0, 1)
        elif _is_bridge(es, e):
            res = _poly_shift(go(_contract(rest, e)), 1, 0)
        else:
            a = go(rest)
            b = go(_contract(rest, e))
            res = _poly_add(a, b)
        memo[key] = res
        return res

    return go(tuple(sorted(tuple(sorted(e)) for e in edges)))


def _contract(edges, e):
    u, v = e
    out = []
    for a, b in edges:
        a2 = u if a == v else a
        b2 = u if b == v else b
        out.append((a2, b2) if a2 <= b2 else (b2, a2))
    return tuple(sorted(out))


def _is_bridge(edges, e) -> bool:
    verts = {x for ed in edges for x in ed}
    adj: dict[int, set[int]] = {v: set() for v in verts}
    skipped = False  # drop exactly one copy; parallel edges are no bridges
    for a, b in edges:
        if not skipped and (a, b) == e:
            skipped = True
            continue
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    seen = {e[0]}
    stack = [e[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return e[1] not in seen


def _poly_shift(p: dict, dx: int, dy: int) -> dict:
    return {(i + dx, j + dy): c for (i, j), c in p.items()}


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def tutte(graph: Graph, x, y):
    """Evaluate the Tutte polynomial at (x, y)."""
    return sum(c * x ** i * y ** j for (i, j), c in tutte_polynomial(graph).items())


# ---------------------------------------------------------------------------
# conjugacy of Coxeter elements in finite systems


def _enumerate_group(system: CoxeterSystem, ctx: FieldContext,
                     cap: int) -> list:
    gens = [roots.generator_matrix(system, ctx, i) for i in system.generators()]
    ident = roots.identity_matrix(system, ctx)
    seen = {ident}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            nm = roots.matrix_mul(g, m)
            if nm not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"group enumeration exceeded {cap} elements")
                seen.add(nm)
                queue.append(nm)
    return list(seen)


def conjugacy_classes_of_coxeter_elements(
        system: CoxeterSystem, ctx: FieldContext | None = None,
        cap: int = DEFAULT_GROUP_CAP) -> list[list[Word]]:
    """Partition of the Coxeter elements of a finite system by conjugacy.

    Returns canonical word representatives, one per group element, grouped
    into classes and deterministically ordered.
    """
    from itertools import permutations

    if not classify_finite(system).finite:
        raise ValueError("conjugacy brute force requires a finite system")
    if ctx is None:
        ctx = context_for(system)
    gens = [roots.generator_matrix(system, ctx, i) for i in system.generators()]

    elem_word: dict = {}
    for perm in permutations(system.generators()):
        m = roots.word_matrix(system, ctx, perm)
        if m not in elem_word:
            elem_word[m] = heaps.canonical_word(system, perm)
    group = set(_enumerate_group(system, ctx, cap))

    remaining = set(elem_word)
    classes = []
    while remaining:
        seed = remaining.pop()
        # full conjugation orbit inside the group; generator conjugations
        # generate all of them, but intermediate conjugates need not be
        # Coxeter elements themselves
        orbit = {seed}
        queue = deque([seed])
        while queue:
            m = queue.popleft()
            for g in gens:
                c = roots.matrix_mul(g, roots.matrix_mul(m, g))
                if c not in orbit:
                    assert c in group
                    orbit.add(c)
                    queue.append(c)
        cox_orbit = orbit & set(elem_word)
        remaining -= cox_orbit
        classes.append(sorted(elem_word[m] for m in cox_orbit))
    return sorted(classes)
