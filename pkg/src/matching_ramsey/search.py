"""Exhaustive, symmetry-pruned search over edge colorings of small complete graphs.

The Ramsey number of the matchings n_1 K_2, ..., n_c K_2 is

    r = n_1 + 1 + sum_i (n_i - 1),

and verifying it at a parameter point means two finite facts: some free
coloring of K_{r-1} exists, and no free coloring of K_r exists.  Both are
settled by enumerating free colorings up to symmetry.

The generator is level-wise orderly generation.  Colorings of K_m are words
in colex edge order (see :mod:`matching_ramsey.canon`), so a K_m word is the
prefix of every K_{m+1} word extending it, and the canonical (lex-min) word
of a class always truncates to a canonical word.  The engine therefore keeps
one canonical representative per class of K_m colorings and, per level,
colors the m edges to a new vertex in all c^m ways, keeping exactly the
extensions whose full word is again canonical.  Two prunes keep the tree
small:

* freeness is antitone under edge addition, so a partial row dies as soon as
  the color just used completes a matching of its target size;
* candidate extensions that are not lex-minimal in their orbit are discarded
  (and with them their entire subtree, since canonicity is prefix-inherited).

Work distribution splits a level's representatives across worker processes;
representative order is preserved when merging, so reports are byte-for-byte
deterministic regardless of the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .canon import color_permutations, edge_list, is_canonical
from .coloring import EdgeColoring, MatchParams, StructureWitness, find_structure, is_free
from .graph import Graph, complete_graph, graph_from_edges, is_connected
from .matching import has_k_matching_on_masks

DEFAULT_ORDER_GUARD = 8

Progress = Callable[[int, int], None]


def ramsey_value(p: MatchParams) -> int:
    """n_1 + 1 + sum_i (n_i - 1)."""
    return p.sizes[0] + 1 + sum(s - 1 for s in p.sizes)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive run at one order.

    ``total_canonical_colorings`` counts the canonical classes materialised
    at ``order_checked``; when freeness pruning is active (it always is for
    the verification entry points) only free classes are materialised, so the
    count coincides with ``free_count``.  ``critical_classes`` holds the free
    canonical representatives of the extremal order r - 1.
    """

    params: MatchParams
    order_checked: int
    total_canonical_colorings: int
    free_count: int
    critical_classes: tuple[EdgeColoring, ...]
    structure_failures: tuple[EdgeColoring, ...] = ()
    elapsed: float = 0.0
    witnesses: tuple[StructureWitness | None, ...] = field(default=(), repr=False)

    @property
    def verified(self) -> bool:
        """Upper bound (no free coloring at the checked order) plus lower
        bound (free colorings exist one order below)."""
        return self.free_count == 0 and len(self.critical_classes) > 0

    @property
    def structure_ok(self) -> bool:
        return not self.structure_failures

    def as_dict(self) -> dict:
        from .formats import coloring_to_dict

        return {
            "params": list(self.params.sizes),
            "order_checked": self.order_checked,
            "total_canonical_colorings": self.total_canonical_colorings,
            "free_count": self.free_count,
            "critical_classes": [coloring_to_dict(ec) for ec in self.critical_classes],
            "structure_failures": [coloring_to_dict(ec) for ec in self.structure_failures],
            "elapsed_seconds": self.elapsed,
        }


# ---------------------------------------------------------------------------
# Level-wise orderly generation
# ---------------------------------------------------------------------------


def _extend_representative(
    word: bytes,
    m: int,
    c: int,
    color_perms: tuple[np.ndarray, ...],
    sizes: tuple[int, ...] | None,
) -> list[bytes]:
    """Canonical words of K_{m+1} whose K_m prefix is ``word``.

    With ``sizes`` given, a partial row is abandoned as soon as the color
    just assigned completes a matching of its target size (checked on the
    class minus the fresh edge's endpoints, which is exact because the class
    was free before the assignment).
    """
    base = np.frombuffer(word, dtype=np.uint8)
    prune = sizes is not None
    masks: list[list[int]] = []
    if prune:
        masks = [[0] * (m + 1) for _ in range(c)]
        for e, (u, v) in enumerate(edge_list(m)):
            col = int(base[e])
            masks[col][u] |= 1 << v
            masks[col][v] |= 1 << u
    out: list[bytes] = []
    cand = np.empty(len(base) + m, dtype=np.uint8)
    cand[: len(base)] = base
    row = cand[len(base):]

    def dead(col: int, u: int) -> bool:
        # would edge (u, m) in this color complete a matching of size sizes[col]?
        need = sizes[col] - 1  # type: ignore[index]
        if need <= 0:
            return True
        drop = ~((1 << u) | (1 << m))
        rows = [masks[col][v] & drop for v in range(m + 1)]
        rows[u] = 0
        rows[m] = 0
        return has_k_matching_on_masks(rows, m + 1, need)

    def assign(u: int) -> None:
        if u == m:
            if is_canonical(cand, m + 1, color_perms):
                out.append(cand.tobytes())
            return
        for col in range(c):
            if prune:
                if dead(col, u):
                    continue
                masks[col][u] |= 1 << m
                masks[col][m] |= 1 << u
                row[u] = col
                assign(u + 1)
                masks[col][u] &= ~(1 << m)
                masks[col][m] &= ~(1 << u)
            else:
                row[u] = col
                assign(u + 1)

    assign(0)
    return out


def _extend_worker(args: tuple) -> list[bytes]:
    word, m, c, perms, sizes = args
    return _extend_representative(word, m, c, perms, sizes)


def _generate_levels(
    n: int,
    c: int,
    *,
    sizes: tuple[int, ...] | None,
    color_perms: tuple[np.ndarray, ...],
    jobs: int = 1,
    progress: Progress | None = None,
) -> list[list[bytes]]:
    """Canonical representatives of K_m colorings for every m <= n.

    ``levels[m]`` lists the canonical words of order m in increasing
    lexicographic order.  With ``sizes`` set, only free colorings survive.
    """
    levels: list[list[bytes]] = [[b""], [b""]]  # K_0 and K_1: no edges
    if n <= 1:
        del levels[n + 1:]
        return levels
    for m in range(1, n):
        reps = levels[m]
        tasks = [(word, m, c, color_perms, sizes) for word in reps]
        if jobs > 1 and len(tasks) > 2 * jobs:
            chunksize = max(1, len(tasks) // (4 * jobs))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_extend_worker, tasks, chunksize=chunksize))
        else:
            results = [_extend_worker(t) for t in tasks]
        nxt = [w for sub in results for w in sub]
        levels.append(nxt)
        if progress is not None:
            progress(m + 1, len(nxt))
    return levels


def _coloring_from_word(word: bytes, n: int, c: int) -> EdgeColoring:
    table = tuple(int(b) + 1 for b in word)
    return EdgeColoring(complete_graph(n), c, table)


def _word_from_coloring(ec: EdgeColoring) -> bytes:
    return bytes(col - 1 for col in ec.colors)


def _check_guard(order: int, guard: int) -> None:
    if order > guard:
        raise ValueError(
            f"order {order} exceeds the enumeration guard {guard}; "
            "raise the guard explicitly to proceed at your own risk"
        )


def enumerate_colorings(
    n: int,
    c: int,
    visitor: Callable[[EdgeColoring], None] | None = None,
    *,
    params: MatchParams | None = None,
    guard: int = DEFAULT_ORDER_GUARD,
    jobs: int = 1,
) -> int:
    """Visit every c-edge-coloring of K_n once per canonical class.

    The acting group is vertex permutations crossed with the color
    permutations allowed by ``params`` (all of them when no parameters are
    attached).  Returns the number of classes.
    """
    _check_guard(n, guard)
    if params is not None and params.c != c:
        raise ValueError("params color count must match c")
    perms = color_permutations(c, params.sizes if params is not None else None)
    levels = _generate_levels(n, c, sizes=None, color_perms=perms, jobs=jobs)
    words = levels[n]
    if visitor is not None:
        for word in words:
            visitor(_coloring_from_word(word, n, c))
    return len(words)


def free_coloring_classes(
    p: MatchParams,
    order: int,
    *,
    guard: int = DEFAULT_ORDER_GUARD,
    jobs: int = 1,
    progress: Progress | None = None,
) -> list[EdgeColoring]:
    """All free colorings of K_order up to vertex/color symmetry."""
    _check_guard(order, guard)
    perms = color_permutations(p.c, p.sizes)
    levels = _generate_levels(
        order, p.c, sizes=p.sizes, color_perms=perms, jobs=jobs, progress=progress
    )
    return [_coloring_from_word(w, order, p.c) for w in levels[order]]


def enumerate_critical(
    p: MatchParams,
    *,
    guard: int = DEFAULT_ORDER_GUARD,
    jobs: int = 1,
    progress: Progress | None = None,
) -> SearchReport:
    """Enumerate the critical classes: free colorings of K_{r-1}.

    Every class is re-checked through the public freeness test (a pruning
    bug cannot fabricate freeness) and then searched for a block-structure
    witness; classes without one are reported in ``structure_failures``.
    """
    started = time.perf_counter()
    order = ramsey_value(p) - 1
    classes = free_coloring_classes(p, order, guard=guard, jobs=jobs, progress=progress)
    witnesses: list[StructureWitness | None] = []
    failures = []
    for ec in classes:
        assert is_free(ec, p), "generator emitted a non-free coloring"
        w = find_structure(ec, p)
        witnesses.append(w)
        if w is None:
            failures.append(ec)
    return SearchReport(
        params=p,
        order_checked=order,
        total_canonical_colorings=len(classes),
        free_count=len(classes),
        critical_classes=tuple(classes),
        structure_failures=tuple(failures),
        elapsed=time.perf_counter() - started,
        witnesses=tuple(witnesses),
    )


def verify_ramsey_exhaustive(
    p: MatchParams,
    *,
    guard: int = DEFAULT_ORDER_GUARD,
    jobs: int = 1,
    progress: Progress | None = None,
) -> SearchReport:
    """Confirm the Ramsey value exhaustively at one parameter point.

    Upper bound: no free coloring of K_r survives generation (freeness is
    antitone in the order, so larger orders need no separate check).  Lower
    bound: the free classes of K_{r-1} are nonempty.
    """
    started = time.perf_counter()
    r = ramsey_value(p)
    _check_guard(r, guard)
    perms = color_permutations(p.c, p.sizes)
    levels = _generate_levels(
        r, p.c, sizes=p.sizes, color_perms=perms, jobs=jobs, progress=progress
    )
    critical = tuple(_coloring_from_word(w, r - 1, p.c) for w in levels[r - 1])
    return SearchReport(
        params=p,
        order_checked=r,
        total_canonical_colorings=len(levels[r]),
        free_count=len(levels[r]),
        critical_classes=critical,
        elapsed=time.perf_counter() - started,
    )


# ---------------------------------------------------------------------------
# Plain-graph enumeration (two colors, color group trivial)
# ---------------------------------------------------------------------------


def enumerate_graphs(
    n: int,
    *,
    connected_only: bool = False,
    guard: int = DEFAULT_ORDER_GUARD,
    jobs: int = 1,
) -> list[Graph]:
    """All graphs on n vertices up to isomorphism.

    A graph is a 2-coloring of K_n (present/absent) whose color group is
    trivial, so the coloring engine enumerates isomorphism classes directly.
    """
    _check_guard(n, guard)
    identity = (np.arange(2, dtype=np.uint8),)
    levels = _generate_levels(n, 2, sizes=None, color_perms=identity, jobs=jobs)
    out = []
    pairs = edge_list(n)
    for word in levels[n]:
        edges = [pairs[e] for e, b in enumerate(word) if b == 1]
        g = graph_from_edges(n, edges)
        if not connected_only or is_connected(g):
            out.append(g)
    return out
