import json

import pytest

from matching_ramsey import (
    MatchParams,
    construct_critical,
    enumerate_colorings,
    enumerate_critical,
    enumerate_graphs,
    free_coloring_classes,
    is_connected,
    is_free,
    ramsey_value,
    verify_ramsey_exhaustive,
)
from matching_ramsey.canon import canonical_form, color_permutations
from matching_ramsey.search import _word_from_coloring

import numpy as np

from helpers import coloring_word, naive_orbit_reps


def test_ramsey_value_table():
    cases = {(2, 2): 5, (3, 2): 7, (3, 3): 8, (2, 2, 2): 6, (3, 2, 2): 8}
    for sizes, want in cases.items():
        assert ramsey_value(MatchParams(sizes)) == want
    for n1 in range(1, 6):
        assert ramsey_value(MatchParams((n1,))) == 2 * n1


def test_enumerate_colorings_counts():
    # one edge, interchangeable colors
    assert enumerate_colorings(2, 2) == 1
    # a single color admits a single coloring
    assert enumerate_colorings(4, 1) == 1
    # triangle with two colors: 2 classes under the full action, 4 when the
    # attached parameters make the colors non-interchangeable
    assert enumerate_colorings(3, 2) == 2
    assert enumerate_colorings(3, 2, params=MatchParams((2, 1))) == 4


def test_enumerate_against_naive_orbit_oracle():
    for n in range(1, 5):
        for c in (1, 2):
            collected = []
            count = enumerate_colorings(n, c, lambda ec: collected.append(coloring_word(ec)))
            naive = naive_orbit_reps(n, c)
            assert count == len(collected) == len(naive)
            assert set(collected) == naive


def test_free_enumeration_against_naive_oracle():
    p = MatchParams((2, 2))
    for order in (3, 4, 5):
        engine = {coloring_word(ec) for ec in free_coloring_classes(p, order)}
        naive = naive_orbit_reps(order, 2, params=p, free_only=True)
        assert engine == naive


def test_visited_classes_are_canonical_words():
    p = MatchParams((2, 2))
    perms = color_permutations(2, p.sizes)
    for ec in free_coloring_classes(p, 4):
        word = np.frombuffer(coloring_word(ec), dtype=np.uint8)
        assert canonical_form(word, 4, perms) == word.tobytes()


def test_verify_ramsey_small():
    for sizes in [(2, 2), (2, 2, 2), (3, 2), (1,), (2,)]:
        p = MatchParams(sizes)
        report = verify_ramsey_exhaustive(p)
        assert report.verified, sizes
        assert report.free_count == 0
        assert report.order_checked == ramsey_value(p)
        assert all(is_free(ec, p) for ec in report.critical_classes)


def test_verify_monotone_above_r():
    # freeness is antitone in the order: nothing survives past r either
    p = MatchParams((2, 2))
    assert free_coloring_classes(p, ramsey_value(p)) == []
    assert free_coloring_classes(p, ramsey_value(p) + 1) == []


def test_critical_classes_for_2_2():
    p = MatchParams((2, 2))
    report = enumerate_critical(p)
    # the naive orbit oracle over all 2^6 colorings of K_4 finds one class
    naive = naive_orbit_reps(4, 2, params=p, free_only=True)
    assert len(naive) == 1
    assert report.total_canonical_colorings == len(naive) == 1
    assert report.structure_failures == ()

    # the explicit construction lands in the enumerated class
    word = np.frombuffer(_word_from_coloring(construct_critical(p)), dtype=np.uint8)
    cf = canonical_form(word, 4, color_permutations(2, p.sizes))
    assert cf in {coloring_word(ec) for ec in report.critical_classes}


def test_reports_are_deterministic():
    p = MatchParams((2, 2, 2))

    def stable(report):
        d = report.as_dict()
        d.pop("elapsed_seconds")
        return json.dumps(d, sort_keys=True)

    assert stable(enumerate_critical(p)) == stable(enumerate_critical(p))
    assert stable(enumerate_critical(p, jobs=2)) == stable(enumerate_critical(p, jobs=1))


def test_guard_violations():
    with pytest.raises(ValueError):
        enumerate_colorings(9, 2)
    with pytest.raises(ValueError):
        verify_ramsey_exhaustive(MatchParams((4, 4)))  # r = 12 > default guard
    with pytest.raises(ValueError):
        enumerate_critical(MatchParams((5, 5)), guard=8)


def test_enumerate_graphs_counts():
    # classes on n vertices and connected classes, n <= 6
    assert [len(enumerate_graphs(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]
    connected = [len(enumerate_graphs(n, connected_only=True)) for n in range(1, 7)]
    assert connected == [1, 1, 2, 6, 21, 112]
    assert all(is_connected(g) for g in enumerate_graphs(5, connected_only=True))


def test_structure_report_fields():
    p = MatchParams((3, 2))
    report = enumerate_critical(p)
    assert report.order_checked == 6
    assert report.structure_ok
    assert len(report.witnesses) == report.free_count
    payload = report.as_dict()
    assert payload["params"] == [3, 2]
    assert payload["critical_classes"][0]["n"] == 6


def test_recolored_critical_colorings_stay_inside_the_structured_family():
    # recoloring a single edge of a critical coloring either destroys
    # freeness or lands on another structured coloring; the only edges with
    # two legal colors run between small parts (structure clause for
    # V_i-V_j, i, j >= 2), so with two colors every flip must break freeness
    from matching_ramsey import EdgeColoring, find_structure
    from matching_ramsey.canon import edge_list

    for sizes in [(2, 2), (3, 3), (2, 2, 2)]:
        p = MatchParams(sizes)
        for ec in enumerate_critical(p).critical_classes:
            pairs = edge_list(ec.host.n)
            for idx, col in enumerate(ec.colors):
                for other in range(1, p.c + 1):
                    if other == col:
                        continue
                    flipped = list(ec.colors)
                    flipped[idx] = other
                    recolored = EdgeColoring(ec.host, ec.c, tuple(flipped))
                    if not is_free(recolored, p):
                        continue
                    if p.c == 2:
                        raise AssertionError("two-color flips can never stay free")
                    witness = find_structure(recolored, p)
                    assert witness is not None
                    part_of = {}
                    for label, part in enumerate(witness.parts, start=1):
                        for v in part:
                            part_of[v] = label
                    u, v = pairs[idx]
                    assert part_of[u] >= 2 and part_of[v] >= 2 and part_of[u] != part_of[v]
