"""Coxeter systems as edge-labeled graphs.

A rank-n system stores the full symmetric matrix of bond strengths m(s, t):
1 on the diagonal, 2 for commuting pairs, and 3, 4, ... or infinity for the
edges of the Coxeter graph.  Infinite bonds are kept as the float infinity
sentinel, never as a large integer.  Systems are immutable and hashable, so
derived data (neighbor tables, field contexts) can be memoized safely.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

INF = math.inf

Word = tuple[int, ...]

Bond = int | float  # an int >= 1, or INF


@dataclass(frozen=True)
class CoxeterSystem:
    """Generators 0..rank-1 with a symmetric bond matrix."""

    rank: int
    bonds: tuple[tuple[Bond, ...], ...]
    labels: tuple[str, ...]
    name: str | None = None

    def bond(self, i: int, j: int) -> Bond:
        return self.bonds[i][j]

    def generators(self) -> range:
        return range(self.rank)

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Vertices joined to i in the Coxeter graph (bond >= 3)."""
        return _neighbor_table(self)[i]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Undirected Coxeter graph edges (i, j) with i < j."""
        return _edge_table(self)

    def finite_bonds(self) -> list[int]:
        out = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                m = self.bonds[i][j]
                if m != INF:
                    out.append(int(m))
        return out

    def with_bond(self, i: int, j: int, m: Bond) -> "CoxeterSystem":
        """A copy of the system with one bond replaced."""
        rows = [list(r) for r in self.bonds]
        rows[i][j] = rows[j][i] = m
        return CoxeterSystem(self.rank, tuple(tuple(r) for r in rows),
                             self.labels, None)

    def __repr__(self) -> str:
        tag = self.name or f"rank {self.rank}"
        return f"CoxeterSystem({tag})"


@lru_cache(maxsize=None)
def _neighbor_table(system: CoxeterSystem) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(j for j in range(system.rank) if j != i and system.bonds[i][j] >= 3)
        for i in range(system.rank)
    )


@lru_cache(maxsize=None)
def _edge_table(system: CoxeterSystem) -> tuple[tuple[int, int], ...]:
    return tuple((i, j)
                 for i in range(system.rank)
                 for j in range(i + 1, system.rank)
                 if system.bonds[i][j] >= 3)


def _valid_bond(m: Bond) -> bool:
    if m == INF:
        return True
    return isinstance(m, int) and m >= 2


def build_system(spec: Iterable[tuple[int, int, Bond]], rank: int,
                 labels: Sequence[str] | None = None,
                 name: str | None = None) -> CoxeterSystem:
    """Build a system from (i, j, m) bond declarations.

    Undeclared pairs default to m = 2.  Raises ValueError on an index out of
    range, i == j, m < 2, or a duplicated unordered pair.
    """
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    rows = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        rows[i][i] = 1
    seen: set[tuple[int, int]] = set()
    for i, j, m in spec:
        if not (0 <= i < rank and 0 <= j < rank):
            raise ValueError(f"generator index out of range: ({i}, {j})")
        if i == j:
            raise ValueError(f"bond declared on the diagonal: ({i}, {j})")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ValueError(f"duplicate bond declaration for pair {key}")
        seen.add(key)
        if not _valid_bond(m):
            raise ValueError(f"bond strength must be an integer >= 2 or inf, got {m!r}")
        rows[i][j] = rows[j][i] = m if m == INF else int(m)
    if labels is None:
        labels = tuple(str(i) for i in range(rank))
    else:
        labels = tuple(labels)
        if len(labels) != rank:
            raise ValueError("label count does not match rank")
    return CoxeterSystem(rank, tuple(tuple(r) for r in rows), labels, name)


# ---------------------------------------------------------------------------
# named families


def named_family(family: str, n: int) -> CoxeterSystem:
    """Construct a catalog system: A, B, D, E, F, H, I2, affA, affC, affE."""
    f = family
    if f == "A":
        if n < 1:
            raise ValueError("A requires rank >= 1")
        return _path_system([3] * (n - 1), f"A{n}")
    if f == "B":
        if n < 1:
            raise ValueError("B requires rank >= 1")
        return _path_system([4] + [3] * (n - 2) if n >= 2 else [], f"B{n}")
    if f == "H":
        if n < 1:
            raise ValueError("H requires rank >= 1")
        return _path_system([5] + [3] * (n - 2) if n >= 2 else [], f"H{n}")
    if f == "F":
        if n < 1:
            raise ValueError("F requires rank >= 1")
        if n <= 2:
            return _path_system([3] * (n - 1), f"F{n}")
        seq = [3] * (n - 1)
        seq[1] = 4
        return _path_system(seq, f"F{n}")
    if f == "D":
        if n < 1:
            raise ValueError("D requires rank >= 1")
        if n == 1:
            return _path_system([], "D1")
        if n == 2:
            return build_system([], 2, labels=["1", "2"], name="D2")
        # path 1..n-1 with vertex n hanging off vertex 2
        bonds = [(i, i + 1, 3) for i in range(n - 2)]
        bonds.append((1, n - 1, 3))
        return build_system(bonds, n, labels=[str(i + 1) for i in range(n)],
                            name=f"D{n}")
    if f == "E":
        if n < 3:
            raise ValueError("E requires rank >= 3")
        if n == 3:
            return build_system([(0, 1, 3)], 3, labels=["1", "2", "3"], name="E3")
        # path 1..n-1 with vertex n hanging off vertex 3
        bonds = [(i, i + 1, 3) for i in range(n - 2)]
        bonds.append((2, n - 1, 3))
        return build_system(bonds, n, labels=[str(i + 1) for i in range(n)],
                            name=f"E{n}")
    if f == "I2":
        if not (_valid_bond(n) and (n == INF or n >= 2)):
            raise ValueError("I2 requires a bond strength >= 2 or inf")
        tag = "I2(inf)" if n == INF else f"I2({n})"
        return build_system([(0, 1, n)], 2, labels=["1", "2"], name=tag)
    if f == "affA":
        if n == 1:
            return build_system([(0, 1, INF)], 2, labels=["0", "1"], name="affA1")
        if n < 2:
            raise ValueError("affA requires rank parameter >= 1")
        bonds = [(i, (i + 1) % (n + 1), 3) for i in range(n + 1)]
        return build_system(bonds, n + 1,
                            labels=[str(i) for i in range(n + 1)], name=f"affA{n}")
    if f == "affC":
        if n < 2:
            raise ValueError("affC requires rank parameter >= 2")
        seq = [3] * n
        seq[0] = 4
        seq[-1] = 4
        return _path_system(seq, f"affC{n}", labels=[str(i) for i in range(n + 1)])
    if f == "affE":
        if n == 6:
            # s1..s5 in a path, s6 above s3, s0 above s6
            bonds = [(1, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (3, 6, 3), (6, 0, 3)]
            return build_system(bonds, 7, labels=[str(i) for i in range(7)],
                                name="affE6")
        if n == 7:
            bonds = [(i, i + 1, 3) for i in range(1, 7)]
            bonds.append((4, 0, 3))
            return build_system(bonds, 8, labels=[str(i) for i in range(8)],
                                name="affE7")
        if n == 8:
            bonds = [(i, i + 1, 3) for i in range(1, 8)]
            bonds.append((6, 0, 3))
            return build_system(bonds, 9, labels=[str(i) for i in range(9)],
                                name="affE8")
        raise ValueError("affE requires n in {6, 7, 8}")
    raise ValueError(f"unknown family {family!r}")


def _path_system(bond_seq: Sequence[Bond], name: str,
                 labels: Sequence[str] | None = None) -> CoxeterSystem:
    n = len(bond_seq) + 1
    bonds = [(i, i + 1, bond_seq[i]) for i in range(len(bond_seq))]
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    return build_system(bonds, n, labels=labels, name=name)


_NAME_RE = re.compile(r"^(aff)?([ABCDEFH])(\d+)$")
_I2_RE = re.compile(r"^I2\((\d+|inf)\)$")


def named_system(name: str) -> CoxeterSystem:
    """Parse a compact family name: A3, B4, I2(7), affA2, affC4, affE6."""
    s = name.strip()
    m = _I2_RE.match(s)
    if m:
        arg = m.group(1)
        return named_family("I2", INF if arg == "inf" else int(arg))
    m = _NAME_RE.match(s)
    if m:
        aff, fam, n = m.groups()
        return named_family(("aff" if aff else "") + fam, int(n))
    raise ValueError(f"unknown system name {name!r}")


def parse_graph_file(text: str) -> CoxeterSystem:
    """Parse the line-oriented graph format.

    First line: ``rank N``.  Then ``bond i j m`` lines where m is an integer
    >= 2 or the literal ``inf``.  Lines starting with # are comments.
    """
    rank = None
    decls: list[tuple[int, int, Bond]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "rank":
            if rank is not None:
                raise ValueError(f"line {lineno}: duplicate rank line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: malformed rank line")
            rank = int(parts[1])
        elif parts[0] == "bond":
            if rank is None:
                raise ValueError(f"line {lineno}: bond before rank")
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: malformed bond line")
            i, j = parts[1], parts[2]
            if not (i.isdigit() and j.isdigit()):
                raise ValueError(f"line {lineno}: malformed bond indices")
            if parts[3] == "inf":
                m: Bond = INF
            elif parts[3].isdigit():
                m = int(parts[3])
            else:
                raise ValueError(f"line {lineno}: malformed bond strength")
            decls.append((int(i), int(j), m))
        else:
            raise ValueError(f"line {lineno}: unrecognized directive {parts[0]!r}")
    if rank is None:
        raise ValueError("missing rank line")
    return build_system(decls, rank, name="custom")


def parse_word(system: CoxeterSystem, text: str) -> Word:
    """Parse a whitespace-separated word of generator labels."""
    index = {lab: i for i, lab in enumerate(system.labels)}
    out = []
    for tok in text.split():
        if tok not in index:
            raise ValueError(
                f"unknown generator {tok!r}; valid labels: {' '.join(system.labels)}")
        out.append(index[tok])
    return tuple(out)


def format_word(system: CoxeterSystem, word: Word) -> str:
    return " ".join(system.labels[i] for i in word)


# ---------------------------------------------------------------------------
# structural queries


class Endpoint(NamedTuple):
    generator: int
    weight: Bond
    is_large: bool
    is_odd: bool


def endpoints(system: CoxeterSystem,
              subset: frozenset[int] | None = None) -> list[Endpoint]:
    """Degree-1 vertices of the (induced) Coxeter graph with their bond weight.

    An infinite weight counts as large but never as odd.
    """
    verts = sorted(subset) if subset is not None else list(system.generators())
    vset = set(verts)
    out = []
    for v in verts:
        nbrs = [u for u in system.neighbors(v) if u in vset]
        if len(nbrs) == 1:
            w = system.bond(v, nbrs[0])
            is_large = w == INF or w > 3
            is_odd = w != INF and int(w) % 2 == 1
            out.append(Endpoint(v, w, is_large, is_odd))
    return out


def irreducible_components(system: CoxeterSystem,
                           subset: Iterable[int] | None = None
                           ) -> list[frozenset[int]]:
    """Connected components of the induced Coxeter graph, sorted."""
    verts = set(subset) if subset is not None else set(system.generators())
    seen: set[int] = set()
    comps = []
    for v in sorted(verts):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in system.neighbors(u):
                if w in verts and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=lambda c: sorted(c))


# ---------------------------------------------------------------------------
# finite-type recognition (labeled-tree catalog matching)


@dataclass(frozen=True)
class FiniteTypeReport:
    """Verdict plus per-component catalog matches (None = unmatched)."""

    finite: bool
    components: tuple[tuple[frozenset[int], str | None], ...]

    @property
    def verdict(self) -> str:
        return "Finite" if self.finite else "Infinite"


def _induced_edges(system: CoxeterSystem,
                   comp: frozenset[int]) -> list[tuple[int, int, Bond]]:
    vs = sorted(comp)
    return [(i, j, system.bonds[i][j])
            for a, i in enumerate(vs) for j in vs[a + 1:]
            if system.bonds[i][j] >= 3]


def _tree_code(vertices: list[int], edges: list[tuple[int, int, Bond]]):
    """Canonical code of an edge-labeled tree (None if the graph is no tree)."""
    n = len(vertices)
    if len(edges) != n - 1:
        return None
    adj: dict[int, list[tuple[int, Bond]]] = {v: [] for v in vertices}
    for i, j, m in edges:
        adj[i].append((j, m))
        adj[j].append((i, m))
    if n == 1:
        return ("v",)
    # peel leaves to find the one or two centers
    deg = {v: len(adj[v]) for v in vertices}
    layer = [v for v in vertices if deg[v] == 1]
    remaining = n
    removed = set()
    while remaining > 2:
        nxt = []
        for v in layer:
            removed.add(v)
            remaining -= 1
            for u, _ in adj[v]:
                if u not in removed:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in vertices if v not in removed]

    def code(v: int, parent: int):
        kids = sorted(
            ((1, 0) if m == INF else (0, int(m)), code(u, v))
            for u, m in adj[v] if u != parent
        )
        return ("v", tuple(kids))

    return min(code(c, -1) for c in centers)


def _catalog_members(rank: int, bond_values: set[Bond]):
    """Catalog systems of the given rank (finite Coxeter groups)."""
    if rank >= 1:
        yield f"A{rank}", named_family("A", rank)
    if rank >= 2:
        yield f"B{rank}", named_family("B", rank)
    if rank >= 4:
        yield f"D{rank}", named_family("D", rank)
    if rank in (6, 7, 8):
        yield f"E{rank}", named_family("E", rank)
    if rank == 4:
        yield "F4", named_family("F", 4)
    if rank in (3, 4):
        yield f"H{rank}", named_family("H", rank)
    if rank == 2:
        for m in sorted(v for v in bond_values if v != INF):
            if m >= 5:
                yield f"I2({m})", named_family("I2", int(m))


def classify_finite(system: CoxeterSystem,
                    subset: Iterable[int] | None = None) -> FiniteTypeReport:
    """Match every irreducible component against the finite catalog.

    The verdict is Finite exactly when every component matches.  Matching is
    by canonical codes of edge-labeled trees; non-trees never match.
    """
    comps = irreducible_components(system, subset)
    results = []
    all_finite = True
    for comp in comps:
        name = _match_component(system, comp)
        if name is None:
            all_finite = False
        results.append((comp, name))
    return FiniteTypeReport(all_finite, tuple(results))


@lru_cache(maxsize=None)
def _classify_component_cached(system: CoxeterSystem,
                               comp: frozenset[int]) -> str | None:
    edges = _induced_edges(system, comp)
    code = _tree_code(sorted(comp), edges)
    if code is None:
        return None
    labels = {m for _, _, m in edges}
    if INF in labels:
        return None
    for name, cand in _catalog_members(len(comp), labels):
        cand_code = _tree_code(list(cand.generators()),
                               [(i, j, cand.bonds[i][j]) for i, j in cand.edges()])
        if cand_code == code:
            return name
    return None


def _match_component(system: CoxeterSystem, comp: frozenset[int]) -> str | None:
    return _classify_component_cached(system, comp)


def is_torsion_free_support(system: CoxeterSystem,
                            support: Iterable[int]) -> bool:
    """True when no irreducible component of the support is a finite group."""
    report = classify_finite(system, support)
    return all(name is None for _, name in report.components)


# ---------------------------------------------------------------------------
# recognition of the seven families with finitely many FC and CFC elements


def cfc_finite_family(system: CoxeterSystem,
                      comp: frozenset[int]) -> tuple[str, int] | None:
    """Match one component against A/B/D/E/F/H/I2 at any rank, else None."""
    vs = sorted(comp)
    r = len(vs)
    edges = _induced_edges(system, comp)
    if any(m == INF for _, _, m in edges):
        return None
    if r == 1:
        return ("A", 1)
    if len(edges) != r - 1:
        return None  # cycle
    adj: dict[int, list[tuple[int, Bond]]] = {v: [] for v in vs}
    for i, j, m in edges:
        adj[i].append((j, m))
        adj[j].append((i, m))
    degs = sorted(len(adj[v]) for v in vs)
    if degs[-1] > 3:
        return None
    branch = [v for v in vs if len(adj[v]) == 3]
    if len(branch) > 1:
        return None
    heavy = [(i, j, m) for i, j, m in edges if m > 3]
    if len(heavy) > 1:
        return None
    if branch and heavy:
        return None
    if branch:
        # tree with one degree-3 vertex, all bonds 3: arms decide D vs E
        arms = sorted(_arm_length(adj, branch[0], u) for u, _ in adj[branch[0]])
        if arms[0] == 1 and arms[1] == 1:
            return ("D", r)
        if arms[0] == 1 and arms[1] == 2 and arms[2] >= 2:
            return ("E", r)
        return None
    # path
    if not heavy:
        return ("A", r)
    if r == 2:
        return ("I2", int(heavy[0][2]))
    m = int(heavy[0][2])
    ends = [v for v in vs if len(adj[v]) == 1]
    d = min(_edge_depth(adj, ends[0], heavy[0]), _edge_depth(adj, ends[1], heavy[0]))
    if m == 4 and d == 0:
        return ("B", r)
    if m == 4 and d == 1:
        return ("F", r)
    if m == 5 and d == 0:
        return ("H", r)
    return None


def _arm_length(adj, branch: int, first: int) -> int:
    length = 1
    prev, cur = branch, first
    while True:
        nxt = [u for u, _ in adj[cur] if u != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def _edge_depth(adj, end: int, edge: tuple[int, int, Bond]) -> int:
    """Number of edges along the path from a path-end to the given edge."""
    target = {edge[0], edge[1]}
    prev, cur = -1, end
    depth = 0
    while True:
        nxt = [u for u, _ in adj[cur] if u != prev]
        if not nxt:
            raise ValueError("edge not on the path")
        if {cur, nxt[0]} == target:
            return depth
        prev, cur = cur, nxt[0]
        depth += 1


def is_cfc_finite(system: CoxeterSystem) -> bool:
    """True when every component has finitely many CFC (and FC) elements."""
    return all(cfc_finite_family(system, comp) is not None
               for comp in irreducible_components(system))
