import pytest
from hypothesis import given

from simplicial_lines.utils.graphs import friendship_graph, make_graph, star_graph, triangles, wheel_graph
from simplicial_lines.utils.indices import (
    IndexKind,
    anti_gallai_indices,
    face_notation,
    gallai_indices,
    index_family,
    line_indices,
)
from strategies import simple_graphs


def test_triangle_with_pendant(triangle_with_pendant):
    g = triangle_with_pendant
    assert line_indices(g).to_list() == [[1, 2, 3], [1, 3, 4], [2, 3, 4]]
    # (1,2) has only triangle-spanning neighbours, so it is isolated in Γ
    assert gallai_indices(g).to_list() == [[1, 2], [1, 3, 4], [2, 3, 4]]
    assert anti_gallai_indices(g).to_list() == [[1, 2, 3]]


def test_isolated_edge_contributes_a_pair():
    g = make_graph(4, [(1, 2), (3, 4)])
    assert line_indices(g).to_list() == [[1, 2], [3, 4]]
    assert gallai_indices(g).to_list() == [[1, 2], [3, 4]]
    assert len(anti_gallai_indices(g)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_friendship_anti_gallai_is_the_blades(n):
    hub = 2 * n + 1
    expected = {(2 * k - 1, 2 * k, hub) for k in range(1, n + 1)}
    assert anti_gallai_indices(friendship_graph(n)).members == expected


def test_star_line_indices():
    family = line_indices(star_graph(3))
    assert family.to_list() == [[1, 2, 4], [1, 3, 4], [2, 3, 4]]
    assert (4, 2, 1) in family


@given(simple_graphs())
def test_anti_gallai_indices_are_triangles(g):
    assert anti_gallai_indices(g).members == set(triangles(g))


@given(simple_graphs())
def test_three_sets_split_between_gallai_and_anti_gallai(g):
    line3 = {m for m in line_indices(g).members if len(m) == 3}
    gallai3 = {m for m in gallai_indices(g).members if len(m) == 3}
    anti = anti_gallai_indices(g).members
    assert not gallai3 & anti
    assert gallai3 | anti == line3


def test_notation_and_dispatch():
    family = index_family(wheel_graph(4), "anti-gallai")
    assert family.kind is IndexKind.ANTI_GALLAI
    assert family.notation()[0] == "F_{1,2,5}"
    assert family.notation() == [face_notation(m) for m in family]
    assert len(family) == 4
