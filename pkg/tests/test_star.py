import pytest

from matching_ramsey import (
    MatchParams,
    StarHost,
    construct_star_free,
    is_free,
    ramsey_value,
    star_critical_value,
    verify_star_exhaustive,
)


def test_star_critical_values():
    assert star_critical_value(MatchParams((2, 2))) == 2
    assert star_critical_value(MatchParams((3, 2))) == 2
    assert star_critical_value(MatchParams((2, 2, 2))) == 3
    assert star_critical_value(MatchParams((3,))) == 1
    # r*(s K_2, t K_2) = t for s >= t
    for s in range(1, 5):
        for t in range(1, s + 1):
            assert star_critical_value(MatchParams((s, t))) == t


def test_star_host():
    host = StarHost(4, frozenset({0, 2})).to_graph()
    assert host.n == 5
    assert host.degree(4) == 2
    assert host.has_edge(0, 4) and host.has_edge(2, 4) and not host.has_edge(1, 4)
    with pytest.raises(ValueError):
        StarHost(3, frozenset({3}))


def test_construct_star_free():
    for sizes in [(2, 2), (3, 2), (2, 2, 2), (3, 3), (3,)]:
        p = MatchParams(sizes)
        ec = construct_star_free(p)
        m = star_critical_value(p) - 1
        assert ec.host.n == ramsey_value(p)
        assert ec.host.degree(ec.host.n - 1) == m
        assert is_free(ec, p), sizes


def test_verify_star_22():
    report = verify_star_exhaustive(MatchParams((2, 2)))
    assert report.verified
    assert report.star_value == 2
    assert report.lower_ok and report.upper_ok
    assert report.clique_spoke_color_ok
    assert report.order_identity_ok  # r - 1 - m = 2 n_1 - 1
    assert report.slack_ok
    assert report.base_class_count == 1
    # one base, C(4,2) spoke placements, 2^2 spoke colorings
    assert report.placements_checked == 6
    assert report.colorings_checked == 24


def test_verify_star_single_color():
    report = verify_star_exhaustive(MatchParams((3,)))
    assert report.verified and report.star_value == 1


def test_star_report_serialization():
    d = verify_star_exhaustive(MatchParams((2, 2))).as_dict()
    assert d["params"] == [2, 2] and d["star_value"] == 2
    assert d["lower_ok"] and d["upper_ok"]


def test_construct_star_free_over_small_parameter_universe():
    # freeness of the spoke construction needs no enumeration, so it can be
    # checked well past the search guard
    import itertools

    universe = []
    for c in range(1, 4):
        for sizes in itertools.product(range(1, 4), repeat=c):
            if all(sizes[i] >= sizes[i + 1] for i in range(c - 1)):
                universe.append(MatchParams(sizes))
    universe += [MatchParams((4, 3, 2)), MatchParams((5,)), MatchParams((4, 4))]
    for p in universe:
        ec = construct_star_free(p)
        assert is_free(ec, p), p.sizes
        assert ec.host.degree(ec.host.n - 1) == star_critical_value(p) - 1


def test_star_value_slack_below_ramsey():
    # for n_1 >= 2 the star threshold sits strictly below the full degree:
    # r* < r - 1, i.e. the last vertex never needs all its edges back
    import itertools

    for c in range(1, 4):
        for sizes in itertools.product(range(2, 5), repeat=c):
            if all(sizes[i] >= sizes[i + 1] for i in range(c - 1)):
                p = MatchParams(sizes)
                assert star_critical_value(p) < ramsey_value(p) - 1
