from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from wcds import (
    ExtensionTables,
    RootedGraph,
    boxes_brute,
    boxes_count,
    build_extension_wcds,
    build_family,
    count_complete,
    count_cycle_top,
    count_extension_table,
    count_join,
    count_path_closed,
    count_path_recurrence,
    count_star,
    count_table,
    count_wheel,
    gamma_w_corona,
    gamma_w_cycle,
    gamma_w_extension,
    gamma_w_join,
    gamma_w_path,
    join,
    make_graph,
)
from wcds.verify import REFERENCE_PATH_TABLE


def test_closed_form_reproduces_reference_rows():
    for n, row in REFERENCE_PATH_TABLE.items():
        assert tuple(count_path_closed(n, j) for j in range(1, n + 1)) == row


def test_recurrence_reproduces_reference_rows():
    for n, row in REFERENCE_PATH_TABLE.items():
        assert count_path_recurrence(n).counts == row


def test_closed_form_is_zero_outside_the_window():
    assert count_path_closed(6, 2) == 0
    assert count_path_closed(6, 0) == 0
    assert count_path_closed(6, 7) == 0


@given(st.integers(1, 12), st.integers(0, 13))
def test_closed_form_equals_recurrence(n, j):
    assert count_path_closed(n, j) == count_path_recurrence(n).count(j)


@given(st.integers(1, 10), st.integers(0, 11))
def test_complete_counts_are_binomials(n, i):
    expected = comb(n, i) if 1 <= i <= n else 0
    assert count_complete(n, i) == expected


def test_star_counts():
    # center plus any leaves; leaf-only sets work only when every leaf is in
    assert tuple(count_star(3, i) for i in range(1, 5)) == (1, 3, 4, 1)
    assert count_star(5, 5) == 6
    assert count_star(5, 6) == 1
    assert count_star(5, 7) == 0


def test_cycle_top_cells():
    assert count_cycle_top(12, 12) == 1
    assert count_cycle_top(12, 11) == 12
    assert count_cycle_top(12, 10) == 66
    assert count_cycle_top(12, 9) == 208
    assert count_cycle_top(6, 3) == 14


def test_cycle_top_rejects_cells_off_the_diagonal():
    with pytest.raises(ValueError):
        count_cycle_top(10, 5)
    with pytest.raises(ValueError):
        count_cycle_top(5, 2)
    with pytest.raises(ValueError):
        count_cycle_top(3, 1)


def test_join_composition_where_it_holds():
    k2 = count_table(build_family("complete", 2))
    assert tuple(count_join(k2, k2, i) for i in range(1, 5)) == (4, 6, 4, 1)


def test_join_composition_states_the_published_rule():
    # transcription check, not ground truth: the one-part terms use the
    # weakly connected counts even though that undercounts some joins
    p1 = count_table(build_family("path", 1))
    p4 = count_table(build_family("path", 4))
    assert count_join(p1, p4, 2) == 7
    realized = join(build_family("path", 1), build_family("path", 4))
    assert count_table(realized).count(2) == 8


def test_wheel_composition_contract():
    c9 = count_table(build_family("cycle", 9))
    assert count_wheel(10, 4, c9) == 93
    assert count_wheel(10, 1, c9) == 1
    assert count_wheel(10, 10, c9) == comb(9, 9)
    assert count_wheel(10, 11, c9) == 0
    with pytest.raises(ValueError):
        count_wheel(10, 4, count_table(build_family("cycle", 8)))


@pytest.mark.parametrize("n,value", [(1, 1), (2, 1), (3, 1), (7, 3), (20, 10)])
def test_half_order_values(n, value):
    assert gamma_w_path(n) == value
    assert gamma_w_cycle(n) == value


def test_corona_rule_takes_the_base_order():
    assert gamma_w_corona(build_family("cycle", 4)) == 4
    with pytest.raises(ValueError):
        gamma_w_corona(build_family("path", 1))
    with pytest.raises(ValueError):
        gamma_w_corona(make_graph(4, [(1, 2), (3, 4)]))


def test_join_rule_needs_one_dominating_vertex():
    assert gamma_w_join(1, 3) == 1
    assert gamma_w_join(3, 1) == 1
    assert gamma_w_join(2, 2) == 2
    assert gamma_w_join(4, 5) == 2


def test_extension_shift_rule():
    assert gamma_w_extension(2, True, 0) == 2
    assert gamma_w_extension(1, True, 2) == 1
    assert gamma_w_extension(1, False, 2) == 2
    assert gamma_w_extension(2, True, 5) == 4
    assert gamma_w_extension(2, False, 5) == 4


def test_extension_table_rows_frozen():
    # base is the 3-path rooted at its center; rows checked against the
    # exhaustive counter once and pinned here
    tabs = count_extension_table(RootedGraph(build_family("path", 3), 2, 4))
    assert tabs.base0.counts == (1, 3, 1)
    assert tabs.base1.counts == (1, 3, 4, 1)
    assert tabs.row(2).counts == (0, 2, 6, 5, 1)
    assert tabs.row(3).counts == (0, 1, 5, 10, 6, 1)
    assert tabs.row(4).counts == (0, 0, 3, 11, 15, 7, 1)
    assert tabs.m == 4


def test_extension_table_needs_two_steps():
    with pytest.raises(ValueError):
        count_extension_table(RootedGraph(build_family("path", 3), 2, 1))


def test_extension_tables_validate_order_chain():
    t3 = count_table(build_family("path", 3))
    t4 = count_table(build_family("path", 4))
    with pytest.raises(ValueError):
        ExtensionTables(t3, t4, (t3,))


def test_built_families_frozen():
    rg = RootedGraph(build_family("path", 3), 1, 2)
    assert build_extension_wcds(rg, 2) == [(2, 4)]
    assert build_extension_wcds(rg, 3) == [
        (1, 2, 4),
        (1, 2, 5),
        (1, 3, 4),
        (1, 3, 5),
        (2, 3, 4),
        (2, 4, 5),
    ]


def test_built_family_from_a_single_vertex_base():
    rg = RootedGraph(build_family("complete", 1), 1, 2)
    assert build_extension_wcds(rg, 2) == [(1, 2), (1, 3), (2, 3)]
    # only one branch of the recurrence exists at the top cardinality
    assert build_extension_wcds(rg, 3) == [(1, 2, 3)]


def test_boxes_small_cases():
    assert boxes_brute(1, 0) == 1
    assert boxes_count(1, 0) == 1
    assert boxes_brute(2, 0) == 0
    assert boxes_brute(3, 2) == 3
    assert boxes_count(3, 2) == 3
    assert boxes_brute(4, 4) == 1


@given(st.integers(1, 9), st.integers(0, 9))
def test_boxes_enumeration_matches_binomial(n, j):
    assume(j <= n)
    assert boxes_brute(n, j) == boxes_count(n, j)


@given(st.integers(2, 14))
def test_path_row_total_is_fibonacci(n):
    a, b = 0, 1
    for _ in range(n + 2):
        a, b = b, a + b
    assert sum(count_path_closed(n, j) for j in range(1, n + 1)) == a
