"""Star-critical Ramsey numbers for matchings.

For n = r(n_1 K_2, ..., n_c K_2), the host K_{n-1} + K_{1,k} is K_{n-1} with
one extra vertex joined to k of its vertices.  The star-critical value

    r* = 1 + sum_{i >= 2} (n_i - 1)

is the least k forcing a monochromatic target in every coloring of that
host.  Both directions are verified exhaustively at desk scale:

* lower bound: the Cockayne-Lorimer coloring extends to a free coloring with
  m = r* - 1 spokes, one per vertex of each part V_i (i >= 2), colored i;
* upper bound: for every critical base coloring of K_{n-1} (non-critical
  bases already contain a target), every placement of m + 1 spokes and every
  spoke coloring yields a non-free coloring.

A corollary of the structure theorem is also asserted along the way: in any
free coloring with m spokes, no spoke into the monochromatic clique V_1 of
the base carries that clique's color (such a spoke would extend an
(n_1 - 1)-matching inside the clique to an n_1-matching).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product

from .canon import edge_index
from .coloring import (
    EdgeColoring,
    MatchParams,
    construct_critical,
    critical_parts,
    find_structure,
    is_free,
)
from .graph import Graph, VertexSet, complete_graph
from .search import DEFAULT_ORDER_GUARD, Progress, enumerate_critical, ramsey_value


@dataclass(frozen=True)
class StarHost:
    """K_{base_order} plus a center vertex joined to ``spokes``."""

    base_order: int
    spokes: VertexSet

    def __post_init__(self) -> None:
        if not all(0 <= v < self.base_order for v in self.spokes):
            raise ValueError("spokes must attach to base vertices")

    @property
    def center(self) -> int:
        return self.base_order

    def to_graph(self) -> Graph:
        base = complete_graph(self.base_order)
        rows = list(base.rows) + [0]
        for v in self.spokes:
            rows[v] |= 1 << self.center
            rows[self.center] |= 1 << v
        return Graph(self.base_order + 1, tuple(rows))


def star_critical_value(p: MatchParams) -> int:
    """1 + sum_{i >= 2} (n_i - 1)."""
    return 1 + sum(s - 1 for s in p.sizes[1:])


def _attach_center(
    base: EdgeColoring, spokes: tuple[int, ...], spoke_colors: tuple[int, ...]
) -> EdgeColoring:
    """Extend a coloring of K_{n-1} by a center with colored spokes."""
    nb = base.host.n
    host = StarHost(nb, frozenset(spokes)).to_graph()
    table = [0] * (host.n * (host.n - 1) // 2)
    for u, v, col in base.edges_with_colors():
        table[edge_index(u, v)] = col
    for v, col in zip(spokes, spoke_colors):
        table[edge_index(v, nb)] = col
    return EdgeColoring(host, base.c, tuple(table))


def construct_star_free(p: MatchParams) -> EdgeColoring:
    """Free coloring of K_{n-1} + K_{1,m} with m = r* - 1 spokes.

    The base is the Cockayne-Lorimer coloring; the center sends one spoke to
    every vertex of each part V_i with i >= 2, colored i.  Color i keeps
    vertex cover V_i, so freeness survives the extension.
    """
    base = construct_critical(p)
    parts = critical_parts(p)
    spokes = []
    spoke_colors = []
    for i, part in enumerate(parts[1:], start=2):
        for v in sorted(part):
            spokes.append(v)
            spoke_colors.append(i)
    return _attach_center(base, tuple(spokes), tuple(spoke_colors))


@dataclass(frozen=True)
class StarReport:
    """Outcome of the two-sided star-critical verification."""

    params: MatchParams
    star_value: int
    lower_ok: bool
    upper_ok: bool
    clique_spoke_color_ok: bool
    base_class_count: int
    placements_checked: int
    colorings_checked: int
    order_identity_ok: bool
    slack_ok: bool
    elapsed: float = 0.0

    @property
    def verified(self) -> bool:
        return self.lower_ok and self.upper_ok

    def as_dict(self) -> dict:
        return {
            "params": list(self.params.sizes),
            "star_value": self.star_value,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "clique_spoke_color_ok": self.clique_spoke_color_ok,
            "base_class_count": self.base_class_count,
            "placements_checked": self.placements_checked,
            "colorings_checked": self.colorings_checked,
            "order_identity_ok": self.order_identity_ok,
            "slack_ok": self.slack_ok,
            "elapsed_seconds": self.elapsed,
        }


def verify_star_exhaustive(
    p: MatchParams,
    *,
    guard: int = DEFAULT_ORDER_GUARD,
    jobs: int = 1,
    progress: Progress | None = None,
) -> StarReport:
    """Verify r* at one parameter point by exhausting spoke configurations.

    Spoke placements are enumerated over all base vertices and spoke
    colorings over all colors; base colorings range over the critical classes
    only, which suffices because a free host coloring restricts to a free
    base coloring and freeness is isomorphism-invariant.
    """
    started = time.perf_counter()
    r = ramsey_value(p)
    nb = r - 1
    m = star_critical_value(p) - 1

    # r - 1 - m = 2 n_1 - 1 ties the spoke budget to the clique order; it is
    # asserted rather than assumed by the cross-checks below.
    identity_ok = nb - m == 2 * p.sizes[0] - 1
    slack_ok = m + 1 <= nb - 1

    star = construct_star_free(p)
    lower_ok = (
        is_free(star, p)
        and star.host.n == nb + 1
        and star.host.degree(nb) == m
    )

    crit = enumerate_critical(p, guard=guard, jobs=jobs, progress=progress)
    bases = crit.critical_classes

    upper_ok = True
    placements = 0
    colorings = 0
    for base in bases:
        for spokes in combinations(range(nb), m + 1):
            placements += 1
            for spoke_colors in product(range(1, p.c + 1), repeat=m + 1):
                colorings += 1
                if is_free(_attach_center(base, spokes, spoke_colors), p):
                    upper_ok = False

    clique_ok = True
    for base in bases:
        witness = find_structure(base, p)
        if witness is None:
            clique_ok = False
            continue
        v1 = witness.parts[0]
        clique_color = witness.color_relabel.index(1) + 1
        for spokes in combinations(range(nb), m):
            for spoke_colors in product(range(1, p.c + 1), repeat=m):
                if not is_free(_attach_center(base, spokes, spoke_colors), p):
                    continue
                if any(v in v1 and col == clique_color for v, col in zip(spokes, spoke_colors)):
                    clique_ok = False

    return StarReport(
        params=p,
        star_value=m + 1,
        lower_ok=lower_ok,
        upper_ok=upper_ok,
        clique_spoke_color_ok=clique_ok,
        base_class_count=len(bases),
        placements_checked=placements,
        colorings_checked=colorings,
        order_identity_ok=identity_ok,
        slack_ok=slack_ok,
        elapsed=time.perf_counter() - started,
    )
