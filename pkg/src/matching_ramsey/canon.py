"""Canonical forms for edge colorings of complete graphs.

A coloring of K_n is a word over the color alphabet indexed by the edges of
K_n in *colex* order: edge {u, v} with u < v sits at index v(v-1)/2 + u.
Colex order has the property the level-wise generator relies on: the first
C(m, 2) positions of a K_n word are exactly the edges of K_m, so deleting the
last vertex is word truncation.

The acting group is (vertex permutations) x (an allowed set of color
permutations).  A word is canonical when it is the lexicographic minimum of
its orbit.  Orbits are small enough at desk scale that the minimum is taken
by brute force over all n! vertex permutations, vectorised through a
precomputed (n!, C(n,2)) edge-permutation table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain, permutations

import numpy as np

MAX_TABLE_ORDER = 10  # n! * C(n,2) table memory; 10 -> ~160 MB, built lazily


def edge_index(u: int, v: int) -> int:
    """Colex index of the edge {u, v}."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_list(n: int) -> list[tuple[int, int]]:
    """Edges of K_n in colex order; the first C(m,2) entries are E(K_m)."""
    return [(u, v) for v in range(n) for u in range(v)]


@lru_cache(maxsize=None)
def perm_edge_table(n: int) -> np.ndarray:
    """Row p, column e: colex index of the image of edge e under permutation p.

    Permutations are enumerated in itertools order; row 0 is the identity.
    """
    if n > MAX_TABLE_ORDER:
        raise ValueError(f"canonical forms supported up to n = {MAX_TABLE_ORDER}, got {n}")
    if n < 2:
        return np.zeros((1, 0), dtype=np.uint8)
    perms = np.fromiter(
        chain.from_iterable(permutations(range(n))), dtype=np.int64
    ).reshape(-1, n)
    edges = edge_list(n)
    us = np.array([u for u, _ in edges])
    vs = np.array([v for _, v in edges])
    pu = perms[:, us]
    pv = perms[:, vs]
    lo = np.minimum(pu, pv)
    hi = np.maximum(pu, pv)
    return (hi * (hi - 1) // 2 + lo).astype(np.uint8)


def color_permutations(c: int, sizes: tuple[int, ...] | None) -> tuple[np.ndarray, ...]:
    """Allowed color permutations as lookup arrays over 0-based colors.

    With ``sizes`` given (one target size per color), only permutations that
    preserve the size multiset are allowed; otherwise all of S_c.
    """
    out = []
    for perm in permutations(range(c)):
        if sizes is None or all(sizes[perm[i]] == sizes[i] for i in range(c)):
            out.append(np.array(perm, dtype=np.uint8))
    return tuple(out)


def _has_smaller_row(imgs: np.ndarray, word: np.ndarray) -> bool:
    neq = imgs != word
    any_neq = neq.any(axis=1)
    if not any_neq.any():
        return False
    rows = np.flatnonzero(any_neq)
    first = neq[rows].argmax(axis=1)
    return bool((imgs[rows, first] < word[first]).any())


def is_canonical(word: np.ndarray, n: int, color_perms: tuple[np.ndarray, ...]) -> bool:
    """Is ``word`` the lexicographic minimum of its orbit?"""
    if word.size == 0:
        return True
    table = perm_edge_table(n)
    for pi in color_perms:
        recolored = pi[word]
        if _has_smaller_row(recolored[table], word):
            return False
    return True


def canonical_form(word: np.ndarray, n: int, color_perms: tuple[np.ndarray, ...]) -> bytes:
    """The lexicographic minimum of the orbit of ``word``, as bytes."""
    if word.size == 0:
        return b""
    table = perm_edge_table(n)
    best: bytes | None = None
    for pi in color_perms:
        imgs = pi[word][table]
        cur = imgs
        for e in range(cur.shape[1]):
            col = cur[:, e]
            cur = cur[col == col.min()]
            if cur.shape[0] == 1:
                break
        cand = cur[0].tobytes()
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best
