"""Hypothesis strategies for labeled simple graphs."""

from itertools import combinations

import hypothesis.strategies as st

from simplicial_lines.utils.graphs import SimpleGraph, make_graph


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 6) -> SimpleGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    candidates = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(candidates), unique=True)) if candidates else []
    return make_graph(n, chosen)


def graphs_without_isolated(max_n: int = 6):
    return simple_graphs(min_n=2, max_n=max_n).filter(lambda g: g.min_degree >= 1)
