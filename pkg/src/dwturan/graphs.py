"""Simple undirected graphs with bitset adjacency.

Vertices are 0..n-1. Each adjacency row is a Python int used as a bitset,
which gives O(1) edge queries and one-instruction row intersections; both
are load-bearing for the subgraph search and the exhaustive enumerator.

Containment throughout this package means *subgraph* containment (an
injective map preserving edges), not induced containment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence


def _bits(mask: int):
    """Yield set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph: no loops, symmetric adjacency, cached degrees."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.degrees = tuple(m.bit_count() for m in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        return cls(n, edges)

    @classmethod
    def _from_adj(cls, n: int, adj: Sequence[int]) -> "Graph":
        # trusted internal path: rows already symmetric and loop-free
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g.degrees = tuple(m.bit_count() for m in adj)
        return g

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for k in _bits(rest):
                out.append((u, u + 1 + k))
        return out

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the permutation v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        adj = [0] * self.n
        for u in range(self.n):
            row = 0
            for w in _bits(self.adj[u]):
                row |= 1 << perm[w]
            adj[perm[u]] = row
        return Graph._from_adj(self.n, adj)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in the given vertex order."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise ValueError("duplicate vertices")
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for w in _bits(self.adj[v]):
                j = pos.get(w)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph._from_adj(len(vertices), adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


class PartSizes:
    """Multiset of part sizes of a complete multipartite graph.

    Stored canonically in non-increasing order; zero-size parts are kept.
    """

    __slots__ = ("sizes",)

    def __init__(self, sizes: Iterable[int]):
        tup = tuple(sorted((int(s) for s in sizes), reverse=True))
        if any(s < 0 for s in tup):
            raise ValueError("part sizes must be non-negative")
        self.sizes = tup

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __getitem__(self, i):
        return self.sizes[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, PartSizes):
            return self.sizes == other.sizes
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.sizes)

    def __repr__(self) -> str:
        return f"PartSizes{self.sizes}"


@dataclass(frozen=True)
class ObjectiveValue:
    """A weighted-degree total, carried in float and, when possible, exactly.

    Comparisons use the exact values whenever both sides have them.
    """

    approx: float
    exact: Optional[Fraction] = None

    @classmethod
    def of(cls, exact) -> "ObjectiveValue":
        frac = Fraction(exact)
        return cls(approx=float(frac), exact=frac)

    @classmethod
    def approximate(cls, value: float) -> "ObjectiveValue":
        return cls(approx=float(value), exact=None)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def _cmp_key(self, other: "ObjectiveValue"):
        if self.exact is not None and other.exact is not None:
            return self.exact, other.exact
        return self.approx, other.approx

    def __eq__(self, other) -> bool:
        if not isinstance(other, ObjectiveValue):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a == b

    def __lt__(self, other: "ObjectiveValue") -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other: "ObjectiveValue") -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other: "ObjectiveValue") -> bool:
        return not self <= other

    def __ge__(self, other: "ObjectiveValue") -> bool:
        return not self < other

    def __hash__(self):
        return hash(self.exact if self.exact is not None else self.approx)

    def as_json(self):
        """int when exactly integral, else float."""
        if self.exact is not None and self.exact.denominator == 1:
            return int(self.exact)
        return self.approx

    def __repr__(self) -> str:
        if self.exact is not None:
            return f"ObjectiveValue({self.exact})"
        return f"ObjectiveValue(~{self.approx})"


def e_f(G: Graph, f) -> ObjectiveValue:
    """Sum of f over the degree sequence of G."""
    approx = math.fsum(f(d) for d in G.degrees)
    if getattr(f, "supports_exact", False):
        total = Fraction(0)
        for d in G.degrees:
            x = f.exact(d)
            if x is None:
                break
            total += x
        else:
            return ObjectiveValue(approx=float(total), exact=total)
    return ObjectiveValue.approximate(approx)


# ---------------------------------------------------------------------------
# constructions


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(r: int) -> Graph:
    full = (1 << r) - 1
    return Graph._from_adj(r, [full ^ (1 << v) for v in range(r)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m: int) -> Graph:
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def complete_multipartite(parts: Iterable[int] | PartSizes) -> Graph:
    """Complete multipartite graph; u ~ v iff u and v lie in different parts.

    Zero-size parts are permitted and contribute nothing. Every vertex in a
    part of size s has degree total - s.
    """
    sizes = list(parts)
    n = sum(sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be non-negative")
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part_mask = ((1 << s) - 1) << start
        row = full & ~part_mask
        adj.extend([row] * s)
        start += s
    return Graph._from_adj(n, adj)


def turan_graph(k: int, n: int) -> Graph:
    """Complete k-partite graph on n vertices with part sizes as equal as possible."""
    if k < 1:
        raise ValueError("need at least one part")
    q, r = divmod(n, k)
    return complete_multipartite([q + 1] * r + [q] * (k - r))


def turan_part_sizes(k: int, n: int) -> PartSizes:
    q, r = divmod(n, k)
    return PartSizes([q + 1] * r + [q] * (k - r))


def blowup_k3(s: int) -> Graph:
    """Triangle with every vertex duplicated s times: complete 3-partite (s,s,s)."""
    if s < 1:
        raise ValueError("class size must be positive")
    return complete_multipartite([s, s, s])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# subgraph containment


class SubgraphMatcher:
    """Backtracking search for (not necessarily induced) copies of a pattern.

    Pattern vertices are assigned in descending-degree order (ties by index).
    A candidate must have enough host degree and be a common neighbor of the
    images of its already-assigned pattern neighbors. Interchangeable pattern
    vertices (equal neighborhoods, as twins) are forced onto ascending host
    images, which removes the factorial blow-up on blow-up patterns without
    losing any copy.
    """

    def __init__(self, F: Graph):
        self.pattern = F
        k = F.n
        order = sorted(range(k), key=lambda v: (-F.degrees[v], v))
        pos_of = {v: i for i, v in enumerate(order)}
        self.order = order
        self.pos_of = pos_of
        self.deg = [F.degrees[v] for v in order]
        self.nbr_positions = [
            [pos_of[w] for w in F.neighbors(v)] for v in order
        ]
        # twin pairs as (earlier position, later position); ascending images
        twins = []
        for u, v in combinations(range(k), 2):
            mu, mv = F.adj[u], F.adj[v]
            if mu >> v & 1:
                same = (mu ^ (1 << v)) == (mv ^ (1 << u))
            else:
                same = mu == mv
            if same:
                pu, pv = pos_of[u], pos_of[v]
                twins.append((min(pu, pv), max(pu, pv)))
        self.twin_constraints: list[list[int]] = [[] for _ in range(k)]
        self.twin_reverse: list[list[int]] = [[] for _ in range(k)]
        for lo, hi in twins:
            self.twin_constraints[hi].append(lo)
            self.twin_reverse[lo].append(hi)

    def exists_in(self, host: Graph) -> bool:
        k = self.pattern.n
        if k > host.n:
            return False
        return self._search(host.adj, host.degrees, host.n, [-1] * k, 0)

    def exists_using_edge(self, adj: Sequence[int], degs: Sequence[int],
                          n: int, a: int, b: int) -> bool:
        """Is there a copy whose image covers the host edge (a, b)?

        Sound only when (a, b) is an edge of the host; used for incremental
        forbidden-subgraph checks where the host just gained that edge.
        """
        k = self.pattern.n
        if k > n:
            return False
        F = self.pattern
        for x, y in F.edges():
            for px, py in ((x, y), (y, x)):
                ix = self.pos_of[px]
                iy = self.pos_of[py]
                if degs[a] < self.deg[ix] or degs[b] < self.deg[iy]:
                    continue
                assigned = [-1] * k
                assigned[ix] = a
                assigned[iy] = b
                if not self._consistent(adj, assigned, ix) or not self._consistent(adj, assigned, iy):
                    continue
                if self._search(adj, degs, n, assigned, 0):
                    return True
        return False

    def _consistent(self, adj: Sequence[int], assigned: list[int], i: int) -> bool:
        hi = assigned[i]
        for j in self.nbr_positions[i]:
            hj = assigned[j]
            if hj >= 0 and not (adj[hi] >> hj & 1):
                return False
        for j in self.twin_constraints[i]:
            hj = assigned[j]
            if hj >= 0 and hj >= hi:
                return False
        for j in self.twin_reverse[i]:
            hj = assigned[j]
            if hj >= 0 and hj <= hi:
                return False
        return True

    def _search(self, adj: Sequence[int], degs: Sequence[int], n: int,
                assigned: list[int], i: int) -> bool:
        k = len(assigned)
        while i < k and assigned[i] >= 0:
            i += 1
        if i == k:
            return True
        cand = (1 << n) - 1
        for j in self.nbr_positions[i]:
            hj = assigned[j]
            if hj >= 0:
                cand &= adj[hj]
        floor = -1
        for j in self.twin_constraints[i]:
            hj = assigned[j]
            if hj > floor:
                floor = hj
        if floor >= 0:
            cand &= ~((1 << (floor + 1)) - 1)
        ceiling = n
        for j in self.twin_reverse[i]:
            hj = assigned[j]
            if 0 <= hj < ceiling:
                ceiling = hj
        if ceiling < n:
            cand &= (1 << ceiling) - 1
        for j in range(k):
            hj = assigned[j]
            if hj >= 0:
                cand &= ~(1 << hj)
        need = self.deg[i]
        for h in _bits(cand):
            if degs[h] < need:
                continue
            assigned[i] = h
            if self._search(adj, degs, n, assigned, i + 1):
                assigned[i] = -1
                return True
            assigned[i] = -1
        return False


def contains_subgraph(G: Graph, F: Graph) -> bool:
    """True iff some injective map V(F) -> V(G) sends edges of F to edges of G."""
    return SubgraphMatcher(F).exists_in(G)


def mask_has_clique(adj: Sequence[int], mask: int, size: int) -> bool:
    """Does the vertex set given by mask span a clique of the given size?"""
    if size <= 0:
        return True
    if size == 1:
        return mask != 0
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        # cliques through v using only later vertices keep enumeration canonical
        if mask.bit_count() + 1 >= size and mask_has_clique(adj, adj[v] & mask, size - 1):
            return True
        if mask.bit_count() < size:
            return False
    return False


def creates_clique(adj: Sequence[int], a: int, b: int, r: int) -> bool:
    """Would the host containing edge (a, b) have a K_r through that edge?"""
    if r <= 2:
        return True
    common = adj[a] & adj[b]
    return mask_has_clique(adj, common, r - 2)


# ---------------------------------------------------------------------------
# chromatic number


def _max_clique_size(adj: Sequence[int], n: int) -> int:
    best = 0

    def grow(mask: int, size: int):
        nonlocal best
        if size + mask.bit_count() <= best:
            return
        if mask == 0:
            best = max(best, size)
            return
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if size + mask.bit_count() <= best:
                return
            mask ^= low
            grow(adj[v] & mask, size + 1)

    grow((1 << n) - 1, 0)
    return best


def chromatic_number(F: Graph) -> int:
    """Least k admitting a proper k-coloring; exact backtracking from a clique bound."""
    n = F.n
    if n == 0:
        raise ValueError("chromatic number of the empty-order graph is undefined")
    if F.num_edges == 0:
        return 1
    lower = _max_clique_size(F.adj, n)
    order = sorted(range(n), key=lambda v: (-F.degrees[v], v))
    adj = F.adj

    def colorable(k: int) -> bool:
        colors = [-1] * n

        def place(idx: int, used: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            forbidden = 0
            for w in _bits(adj[v]):
                c = colors[w]
                if c >= 0:
                    forbidden |= 1 << c
            limit = min(k, used + 1)
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                colors[v] = c
                if place(idx + 1, max(used, c + 1)):
                    return True
            colors[v] = -1
            return False

        return place(0, 0)

    k = lower
    while not colorable(k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# graph6 serialization (printable interchange format, 63-offset bytes,
# upper triangle in column-major order)

_G6_MAX_SHORT = 62
_G6_MAX = 258047


def _g6_encode_n(n: int) -> str:
    if n <= _G6_MAX_SHORT:
        return chr(n + 63)
    if n <= _G6_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"order {n} exceeds supported graph6 range")


def graph6_encode(G: Graph) -> str:
    header = _g6_encode_n(G.n)
    bits = []
    for j in range(1, G.n):
        col = G.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    chunks = []
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6] + [0] * (6 - len(bits[i:i + 6]))
        val = 0
        for b in group:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return header + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise ValueError("graph6 bytes must be in the printable range 63..126")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 orders above 258047 are not supported")
        if len(s) < 4:
            raise ValueError("truncated graph6 order field")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ValueError(
            f"graph6 body for order {n} needs {expected} bytes, got {len(body)}"
        )
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph._from_adj(n, adj)
