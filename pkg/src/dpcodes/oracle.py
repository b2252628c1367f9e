"""Exhaustive ground truth at desk scale.

Maximum codes and anticodes are maximum cliques in a threshold graph on
J_q(n,w); perfect codes are exact covers of the space by balls.  Both
searches are deterministic and report ``inconclusive`` instead of silently
truncating when the budget runs out.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation, ParamsOutOfRange
from .space import Anticode, Code, as_array, ball, canonical_word, diameter, enumerate_space, min_distance, space_size

ENUMERATION_LIMIT = 10 ** 6
# a dense adjacency bitset over this many vertices is already ~100 MB
ADJACENCY_LIMIT = 30_000


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_limit <= 0:
            raise ValueError("search budget must be positive")


@dataclass
class SearchResult:
    status: str  # "exact" | "inconclusive"
    value: int
    witness: object = None  # Code, Anticode, or None
    proof_of_optimality: bool = False
    nodes: int = 0
    reason: str = ""

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def manifest(self) -> dict:
        return {"status": self.status, "value": self.value,
                "proof_of_optimality": str(self.proof_of_optimality).lower(),
                "nodes": self.nodes, "reason": self.reason}


class _OutOfBudget(Exception):
    pass


class _Counter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget(f"node limit {self.budget.max_nodes} reached")
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget(f"time limit {self.budget.time_limit}s reached")


def _check_params(n, w, q):
    if not (0 <= w <= n and q >= 2):
        raise ParamsOutOfRange(f"invalid J_q(n,w) parameters n={n}, w={w}, q={q}")
    size = space_size(n, w, q)
    if size > ENUMERATION_LIMIT:
        raise ParamsOutOfRange(f"|J_{q}({n},{w})| = {size} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    return size


def _threshold_graph(words, keep) -> list[int]:
    """Adjacency bitsets: bit j of adj[i] is set when keep(d(i,j)) and i != j."""
    if len(words) > ADJACENCY_LIMIT:
        raise ParamsOutOfRange(f"{len(words)} vertices exceed the adjacency limit {ADJACENCY_LIMIT}")
    arr = as_array(words)
    adj = []
    for i in range(len(words)):
        dist = (arr != arr[i]).sum(axis=1)
        row = keep(dist)
        row[i] = False
        adj.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _max_clique(adj: list[int], cand: int, counter: _Counter) -> tuple[list[int], bool, str]:
    """Branch and bound with a greedy colouring bound.  Returns (best clique,
    exhausted, reason)."""
    # relabel so low bit indices are high-degree vertices: colouring in
    # index order then tends to give tighter bounds
    verts = list(_bits(cand))
    verts.sort(key=lambda v: (-(adj[v] & cand).bit_count(), v))
    pos = {v: i for i, v in enumerate(verts)}
    local = []
    for v in verts:
        m = 0
        for u in _bits(adj[v] & cand):
            m |= 1 << pos[u]
        local.append(m)
    best: list[int] = []

    def colour(p: int):
        order, colours = [], []
        uncoloured = p
        k = 0
        while uncoloured:
            k += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~local[v] & ~low
                uncoloured &= ~low
                order.append(v)
                colours.append(k)
        return order, colours

    def expand(r: list[int], p: int):
        nonlocal best
        counter.tick()
        order, colours = colour(p)
        for idx in range(len(order) - 1, -1, -1):
            if len(r) + colours[idx] <= len(best):
                return
            v = order[idx]
            r.append(v)
            np_ = p & local[v]
            if np_:
                expand(r, np_)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    try:
        if verts:
            expand([], (1 << len(verts)) - 1)
        exhausted, reason = True, "search tree exhausted"
    except _OutOfBudget as exc:
        exhausted, reason = False, str(exc)
    return sorted(verts[i] for i in best), exhausted, reason


def _clique_search(n, w, q, keep, budget) -> tuple[list, bool, int, str]:
    words = list(enumerate_space(n, w, q))
    adj = _threshold_graph(words, keep)
    # the symmetry group is transitive on J_q(n,w): fix the canonical word
    root = words.index(canonical_word(n, w))
    counter = _Counter(budget or SearchBudget())
    clique, exhausted, reason = _max_clique(adj, adj[root], counter)
    chosen = sorted([words[root]] + [words[i] for i in clique])
    return chosen, exhausted, counter.nodes, reason


def max_code_search(n: int, d: int, w: int, q: int, budget: SearchBudget | None = None) -> SearchResult:
    """A_q(n,d,w): the largest code in J_q(n,w) with minimum distance >= d."""
    size = _check_params(n, w, q)
    if d <= 1:
        words = list(enumerate_space(n, w, q))
        return SearchResult("exact", size, Code(words, q=q, n=n, weight=w), True, 0, "d <= 1 imposes nothing")
    chosen, exhausted, nodes, reason = _clique_search(n, w, q, lambda dist: dist >= d, budget)
    code = Code(chosen, q=q, n=n, weight=w)
    if len(code) >= 2 and min_distance(code.words) < d:
        raise InvariantViolation("witness violates the distance requirement")
    return SearchResult("exact" if exhausted else "inconclusive", len(code), code, exhausted, nodes, reason)


def max_anticode_search(n: int, D: int, w: int, q: int, budget: SearchBudget | None = None) -> SearchResult:
    """Largest word set in J_q(n,w) with all pairwise distances <= D."""
    size = _check_params(n, w, q)
    if D < 0:
        raise ParamsOutOfRange("diameter must be non-negative")
    if D >= min(2 * w, n):
        words = list(enumerate_space(n, w, q))
        return SearchResult("exact", size, Anticode(words, q=q, n=n, weight=w), True, 0,
                            "D reaches the largest possible distance")
    chosen, exhausted, nodes, reason = _clique_search(n, w, q, lambda dist: dist <= D, budget)
    a = Anticode(chosen, q=q, n=n, weight=w)
    if diameter(a.words) > D:
        raise InvariantViolation("witness violates the diameter requirement")
    return SearchResult("exact" if exhausted else "inconclusive", len(a), a, exhausted, nodes, reason)


def _in_space_ball_size(n, w, q, e) -> int:
    return len(ball(canonical_word(n, w), e, q))


def perfect_code_prescreen(n: int, w: int, q: int, e: int) -> str | None:
    """Reason the ball size cannot tile the space, or None if no obstruction.

    For e <= 1 every in-space ball stays inside one support class, so each
    class of (q-1)^w words must be divisible by the ball size on its own."""
    total = space_size(n, w, q)
    b = _in_space_ball_size(n, w, q, e)
    if e <= 1 and (q - 1) ** w % b:
        return f"support class of {(q - 1) ** w} words is not divisible by ball size {b}"
    if total % b:
        return f"|J| = {total} is not divisible by ball size {b}"
    return None


def _exact_cover(columns: dict, rows: dict, primary: set, counter: _Counter, forced=()):
    """Algorithm X on dict-of-sets.  ``columns`` maps column -> set of rows;
    only primary columns must be covered, the rest at most once."""
    solution = []

    def select(r):
        removed = []
        for j in rows[r]:
            for i in columns[j]:
                for k in rows[i]:
                    if k != j:
                        columns[k].discard(i)
            removed.append(columns.pop(j))
        return removed

    def deselect(r, removed):
        for j in reversed(rows[r]):
            columns[j] = removed.pop()
            for i in columns[j]:
                for k in rows[i]:
                    if k != j:
                        columns[k].add(i)

    for r in forced:
        select(r)
        solution.append(r)

    def search():
        counter.tick()
        open_primary = [c for c in primary if c in columns]
        if not open_primary:
            return True
        c = min(open_primary, key=lambda c: (len(columns[c]), c))
        for r in sorted(columns[c]):
            solution.append(r)
            removed = select(r)
            if search():
                return True
            deselect(r, removed)
            solution.pop()
        return False

    return (list(solution) if search() else None)


def perfect_code_search(n: int, w: int, q: int, e: int, budget: SearchBudget | None = None) -> SearchResult:
    """Search for an e-perfect code in J_q(n,w).

    Rows are candidate codewords; each must cover its in-space radius-e ball
    exactly once (primary columns) and its ambient radius-e ball in Z_q^n at
    most once (secondary columns), so chosen codewords are at distance
    >= 2e+1.  The canonical word is forced into the code (transitivity)."""
    _check_params(n, w, q)
    if e < 0:
        raise ParamsOutOfRange("radius must be non-negative")
    obstruction = perfect_code_prescreen(n, w, q, e)
    if obstruction:
        return SearchResult("exact", 0, None, True, 0, "nonexistence: " + obstruction)
    words = list(enumerate_space(n, w, q))
    rows, columns = {}, {}
    primary = set()
    for x in words:
        inside = sorted(("J", y) for y in ball(x, e, q))
        ambient = sorted(("Q", y) for y in ball(x, e, q, restrict_weight=False))
        rows[x] = inside + ambient
        for col in rows[x]:
            columns.setdefault(col, set()).add(x)
        primary.update(inside)
    counter = _Counter(budget or SearchBudget())
    try:
        sol = _exact_cover(columns, rows, primary, counter, forced=[canonical_word(n, w)])
    except _OutOfBudget as exc:
        return SearchResult("inconclusive", 0, None, False, counter.nodes, str(exc))
    if sol is None:
        return SearchResult("exact", 0, None, True, counter.nodes, "nonexistence: exact cover search exhausted")
    code = Code(sol, q=q, n=n, weight=w)
    if len(code) >= 2 and min_distance(code.words) < 2 * e + 1:
        raise InvariantViolation("witness balls overlap")
    return SearchResult("exact", len(code), code, True, counter.nodes, "witness found")
