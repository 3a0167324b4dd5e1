"""Exact minimum IO-code computation.

``solve_oracle`` is a deliberately naive exhaustive search kept
independent of the real solver for cross-validation.  ``solve`` reduces
the problem to a minimum hitting set: a set S is an IO-code exactly when
it intersects N(v) for every vertex v (total domination) and the
symmetric difference N(u) ^ N(v) for every vertex pair (separation).
The branch-and-bound search propagates unit requirements (which forces
every support vertex immediately), branches on a smallest open
requirement with candidates ordered by how many open requirements they
resolve, and prunes with a greedy disjoint-requirement lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NoCode, TooLarge
from .graphs import Graph, VertexSet, find_open_twins, min_degree
from .verify import is_io_code

__all__ = ["SolveResult", "solve", "solve_oracle", "solve_with_budget"]

ORACLE_CAP = 24


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    code: VertexSet
    nodes_explored: int
    method: str


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _require_admissible(g: Graph) -> None:
    if g.n == 0 or min_degree(g) == 0:
        isolate = next((v for v in range(g.n) if g.adj[v] == 0), None)
        raise NoCode("graph has an isolated vertex", witness=isolate)
    twins = find_open_twins(g)
    if twins:
        raise NoCode(f"open twins {twins[0]}", witness=twins[0])


def _requirements(g: Graph) -> list[int]:
    """Deduplicated, dominance-reduced requirement masks.

    Any requirement that contains another as a subset is redundant for a
    hitting set and dropped.
    """
    reqs = set(g.adj)
    for u in range(g.n):
        au = g.adj[u]
        for v in range(u + 1, g.n):
            reqs.add(au ^ g.adj[v])
    ordered = sorted(reqs, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for r in ordered:
        if not any(k & r == k for k in kept):
            kept.append(r)
    return kept


def _propagate_units(reqs: list[int], chosen: int) -> tuple[int, list[int]]:
    """Force the sole candidate of every 1-element open requirement."""
    open_reqs = [r for r in reqs if r & chosen == 0]
    while True:
        units = 0
        for r in open_reqs:
            if r.bit_count() == 1:
                units |= r
        if not units:
            return chosen, open_reqs
        chosen |= units
        open_reqs = [r for r in open_reqs if r & chosen == 0]


def _greedy_cover(reqs: list[int], chosen: int) -> int:
    """Any hitting set extending ``chosen``; initial incumbent."""
    open_reqs = [r for r in reqs if r & chosen == 0]
    while open_reqs:
        counts: dict[int, int] = {}
        for r in open_reqs:
            for v in _bits(r):
                counts[v] = counts.get(v, 0) + 1
        best_v = min(counts, key=lambda v: (-counts[v], v))
        chosen |= 1 << best_v
        open_reqs = [r for r in open_reqs if r & chosen == 0]
    return chosen


def _disjoint_bound(open_reqs: list[int]) -> int:
    """Greedy count of pairwise disjoint requirements; each costs >= 1."""
    used = 0
    count = 0
    for r in sorted(open_reqs, key=lambda m: (m.bit_count(), m)):
        if r & used == 0:
            count += 1
            used |= r
    return count


def _search(g: Graph, cap: int | None, first_hit: bool):
    """Core branch and bound; returns (best_mask or None, nodes explored)."""
    reqs = _requirements(g)
    root_chosen, root_open = _propagate_units(reqs, 0)
    best_mask = None
    best_size = (cap + 1) if cap is not None else (g.n + 1)
    greedy = _greedy_cover(reqs, root_chosen)
    if greedy.bit_count() < best_size:
        best_mask, best_size = greedy, greedy.bit_count()
    nodes = 0

    def recurse(chosen: int, size: int, open_reqs: list[int]) -> None:
        nonlocal best_mask, best_size, nodes
        nodes += 1
        if not open_reqs:
            if size < best_size:
                best_mask, best_size = chosen, size
            return
        if size + _disjoint_bound(open_reqs) >= best_size:
            return
        branch_req = min(open_reqs, key=lambda m: (m.bit_count(), m))
        candidates = sorted(
            _bits(branch_req),
            key=lambda v: (-sum(1 for r in open_reqs if r >> v & 1), v),
        )
        for v in candidates:
            if first_hit and best_mask is not None:
                return
            nxt, nxt_open = _propagate_units(open_reqs, chosen | 1 << v)
            recurse(nxt, nxt.bit_count(), nxt_open)

    if not (first_hit and best_mask is not None):
        recurse(root_chosen, root_chosen.bit_count(), root_open)
    return best_mask, nodes


def solve(g: Graph) -> SolveResult:
    """Exact minimum IO-code via branch and bound."""
    _require_admissible(g)
    best_mask, nodes = _search(g, cap=None, first_hit=False)
    code = VertexSet(g.n, mask=best_mask)
    assert is_io_code(g, code).ok
    return SolveResult(len(code), code, nodes, "branch_and_bound")


def solve_with_budget(g: Graph, max_size: int) -> VertexSet | None:
    """Some IO-code of size <= max_size, or None (exact decision)."""
    _require_admissible(g)
    if max_size < 0:
        return None
    best_mask, _ = _search(g, cap=max_size, first_hit=True)
    if best_mask is None:
        return None
    code = VertexSet(g.n, mask=best_mask)
    assert is_io_code(g, code).ok
    return code


def solve_oracle(g: Graph, cap: int = ORACLE_CAP) -> SolveResult:
    """Brute force: subsets in increasing cardinality; exact by exhaustion.

    Kept free of the solver's reductions so the two routes stay
    independent checks of each other.
    """
    if g.n > cap:
        raise TooLarge(f"oracle capped at n <= {cap}, got {g.n}")
    _require_admissible(g)
    nodes = 0
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            nodes += 1
            candidate = VertexSet(g.n, subset)
            if is_io_code(g, candidate).ok:
                return SolveResult(size, candidate, nodes, "oracle")
    raise NoCode("exhausted all subsets")  # unreachable for admissible graphs
