"""Exhaustive maximization of weighted degrees over forbidden-subgraph-free graphs.

The search decides the C(n,2) edge slots in a fixed lexicographic order,
include branch first. A branch dies as soon as the partial graph acquires a
copy of the forbidden graph (containment is monotone under edge addition,
so only copies through the newly added edge are searched). Two further
prunings apply whenever the weight is non-decreasing on 0..n-1:

  * bound: each vertex can finish with degree at most current degree plus
    its undecided slots, so the weight sum of those caps bounds every leaf
    below; subtrees strictly under the incumbent are cut.
  * maximality: some maximal forbidden-free graph attains the optimum, so
    leaves that still accept an edge are not evaluated.

Among evaluated optimal leaves the reported witness is the one whose edge
bitstring (fixed slot order) is lexicographically smallest; with the
maximality rule active that means smallest among maximal witnesses. Results
are independent of the worker count: parallel runs partition the tree by
the first few slot decisions and reduce with the same value-then-bitstring
comparison.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, ScaleLimitError
from .graphs import (
    Graph,
    ObjectiveValue,
    SubgraphMatcher,
    chromatic_number,
    complete_graph,
    contains_subgraph,
    creates_clique,
    e_f,
)
from .partitions import ex_prime
from .weights import WeightFunction, is_nondecreasing

DEFAULT_LIMIT = 8
_FLOAT_PRUNE_MARGIN = 1e-9


@dataclass(frozen=True)
class SearchResult:
    value: ObjectiveValue
    witness: Graph
    nodes_explored: int
    n: int
    forbidden: Graph
    f: WeightFunction


def _weight_table(f: WeightFunction, n: int):
    """f on 0..n-1 in the fastest faithful arithmetic: int, Fraction, or float."""
    if getattr(f, "supports_exact", False):
        vals = []
        for d in range(n):
            x = f.exact(d)
            if x is None:
                break
            vals.append(x)
        else:
            if all(x.denominator == 1 for x in vals):
                return [int(x) for x in vals], "int"
            return vals, "fraction"
    return [f(d) for d in range(n)], "float"


def _slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _search_tree(n: int, F: Graph, f: WeightFunction,
                 prefix: tuple[int, ...] = ()):
    """Run the pruned enumeration below one prefix of slot decisions.

    Returns (best value or None, best bitstring, nodes) in the numeric mode
    chosen by _weight_table. The bitstring int has slot 0 at the highest
    bit so that integer order equals lexicographic order on slot decisions.
    """
    slots = _slots(n)
    M = len(slots)
    table, mode = _weight_table(f, n)
    monotone = n <= 1 or is_nondecreasing(f, (0, n - 1))
    prune_margin = 0 if mode != "float" else _FLOAT_PRUNE_MARGIN
    zero = 0.0 if mode == "float" else 0

    is_clique = F.n >= 2 and F.num_edges == F.n * (F.n - 1) // 2
    r = F.n
    matcher = None if is_clique else SubgraphMatcher(F)

    adj = [0] * n
    deg = [0] * n
    free = [n - 1] * n
    nodes = 0
    best = None
    best_bits = 0

    def creates_forbidden(u: int, v: int) -> bool:
        # called with the edge already present in adj
        if is_clique:
            return creates_clique(adj, u, v, r)
        return matcher.exists_using_edge(adj, deg, n, u, v)

    def add(u, v):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        free[u] -= 1
        free[v] -= 1

    def undo_add(u, v):
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        deg[u] -= 1
        deg[v] -= 1
        free[u] += 1
        free[v] += 1

    def leaf_is_maximal() -> bool:
        for u, v in slots:
            if adj[u] >> v & 1:
                continue
            add(u, v)
            creates = creates_forbidden(u, v)
            undo_add(u, v)
            if not creates:
                return False
        return True

    def rec(i: int, bits: int):
        nonlocal nodes, best, best_bits
        nodes += 1
        if monotone and best is not None:
            bound = sum(table[deg[x] + free[x]] for x in range(n))
            if bound < best - prune_margin:
                return
        if i == M:
            if monotone and not leaf_is_maximal():
                return
            value = sum((table[deg[x]] for x in range(n)), zero)
            if best is None or value > best or (value == best and bits < best_bits):
                best = value
                best_bits = bits
            return
        u, v = slots[i]
        add(u, v)
        if not creates_forbidden(u, v):
            rec(i + 1, bits | (1 << (M - 1 - i)))
        undo_add(u, v)
        free[u] -= 1
        free[v] -= 1
        rec(i + 1, bits)
        free[u] += 1
        free[v] += 1

    # apply the prefix decisions, bailing out if they already force a copy
    bits0 = 0
    live = True
    for i, decision in enumerate(prefix):
        u, v = slots[i]
        if decision:
            add(u, v)
            if creates_forbidden(u, v):
                live = False
                break
            bits0 |= 1 << (M - 1 - i)
        else:
            free[u] -= 1
            free[v] -= 1
    if live:
        rec(len(prefix), bits0)
    return best, best_bits, nodes, mode


def _subtree_job(args):
    n, F, f, prefix = args
    best, bits, nodes, mode = _search_tree(n, F, f, prefix)
    return best, bits, nodes


def _bits_to_graph(n: int, bits: int) -> Graph:
    slots = _slots(n)
    M = len(slots)
    edges = [slots[i] for i in range(M) if bits >> (M - 1 - i) & 1]
    return Graph(n, edges)


def ex_exact(n: int, F: Graph, f: WeightFunction, *,
             limit: int = DEFAULT_LIMIT, workers: int = 1) -> SearchResult:
    """Exact maximum of the weighted degree sum over F-free graphs of order n.

    Refuses orders above the limit (the tree has up to 2**C(n,2) leaves).
    With workers > 1 the first few slot decisions are farmed out to a
    process pool; value and witness do not depend on the worker count.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > limit:
        raise ScaleLimitError(
            f"order {n} above limit {limit}: up to 2^{n * (n - 1) // 2} "
            f"labeled graphs; raise the limit explicitly to proceed"
        )
    if F.n == 0:
        raise ValueError("forbidden graph must have at least one vertex")
    if F.num_edges == 0 and n >= F.n:
        raise ValueError(
            "every graph of this order contains the edgeless forbidden graph"
        )

    M = n * (n - 1) // 2
    if workers > 1 and M > 2:
        depth = min(M, max(2, math.ceil(math.log2(4 * workers))))
        prefixes = []
        for p in range(1 << depth):
            decisions = tuple((p >> (depth - 1 - j)) & 1 for j in range(depth))
            prefixes.append((n, F, f, decisions))
        best = None
        best_bits = 0
        nodes = 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for value, bits, sub_nodes in pool.map(_subtree_job, prefixes):
                nodes += sub_nodes
                if value is None:
                    continue
                if best is None or value > best or (value == best and bits < best_bits):
                    best = value
                    best_bits = bits
    else:
        best, best_bits, nodes, _mode = _search_tree(n, F, f)

    if best is None:
        raise InvariantViolation("search evaluated no leaf; this cannot happen")

    witness = _bits_to_graph(n, best_bits)
    if contains_subgraph(witness, F):
        raise InvariantViolation("witness failed the forbidden-subgraph re-check")
    value = e_f(witness, f)
    if isinstance(best, float):
        # the search and e_f may group float additions differently
        if not math.isclose(value.approx, best, rel_tol=1e-12, abs_tol=1e-12):
            raise InvariantViolation("witness does not reproduce the optimal value")
    else:
        # int/Fraction search modes imply exact evaluation succeeded on 0..n-1
        if value.exact != Fraction(best):
            raise InvariantViolation("witness does not reproduce the optimal value")
    return SearchResult(value=value, witness=witness, nodes_explored=nodes,
                        n=n, forbidden=F, f=f)


def verify_theorem1(n: int, r: int, f: WeightFunction, *,
                    limit: int = DEFAULT_LIMIT, workers: int = 1) -> bool:
    """Does the unrestricted optimum equal the complete multipartite optimum?

    Compares the exhaustive K_r-free maximum against the best complete
    (r-1)-partite value, exactly whenever the weight evaluates exactly.
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if not is_nondecreasing(f, (0, max(n, 1))):
        raise ValueError("equality is only guaranteed for non-decreasing weights")
    full = ex_exact(n, complete_graph(r), f, limit=limit, workers=workers)
    multi = ex_prime(n, r - 1, f)
    a, b = full.value, multi.value
    if a.is_exact and b.is_exact:
        return a.exact == b.exact
    return math.isclose(a.approx, b.approx, rel_tol=1e-9, abs_tol=1e-9)


@dataclass(frozen=True)
class RatioRow:
    n: int
    ex_value: ObjectiveValue
    ex_prime_value: ObjectiveValue
    ratio: float


def ratio_table(n_range: tuple[int, int], F: Graph, f: WeightFunction, *,
                limit: int = DEFAULT_LIMIT, workers: int = 1) -> list[RatioRow]:
    """Rows (n, unrestricted optimum, multipartite optimum, ratio).

    Requires a non-bipartite forbidden graph; every ratio must come out
    >= 1 because multipartite graphs are a subfamily of the F-free graphs.
    """
    chi = chromatic_number(F)
    if chi < 3:
        raise ValueError(
            "ratio table requires a non-bipartite forbidden graph "
            f"(chromatic number >= 3, got {chi})"
        )
    lo, hi = n_range
    rows = []
    for n in range(lo, hi + 1):
        full = ex_exact(n, F, f, limit=limit, workers=workers)
        multi = ex_prime(n, chi - 1, f)
        if full.value < multi.value:
            raise InvariantViolation(
                f"multipartite optimum exceeded the unrestricted optimum at n={n}"
            )
        if multi.value.approx != 0:
            ratio = full.value.approx / multi.value.approx
        else:
            ratio = 1.0 if full.value.approx == 0 else math.inf
        rows.append(RatioRow(n=n, ex_value=full.value,
                             ex_prime_value=multi.value, ratio=ratio))
    return rows
