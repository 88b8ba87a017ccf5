import random

from hypothesis import given, settings, strategies as st

from oracles import all_biracks_of_size, brute_labelings, random_code
from test_birack import commuting_pair, constant_action
from birackpoly import datasets
from birackpoly.birack import validate_birack
from birackpoly.diagram import add_kinks, build_diagram, framing_tile, parse_gauss_code
from birackpoly.labeling import (
    basic_counting, enumerate_labelings, integral_counting, is_labeling, tile_labelings,
)

SIZE2 = [validate_birack(U, L) for U, L in all_biracks_of_size(2)]


def raw(code):
    return [[(t.over, t.crossing, t.sign) for t in comp] for comp in code.components]


@st.composite
def small_codes(draw, max_semiarcs=6):
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    c = draw(st.integers(0, max_semiarcs // 2))
    if c == 0:
        return parse_gauss_code("()")
    return random_code(rng, c, draw(st.integers(1, min(3, 2 * c))))


class TestReferenceCounts:
    def test_figure_eight_and_unknot(self, rank2):
        for name in ("figure_eight", "unknot"):
            d = datasets.link(name)
            per_parity = [basic_counting(dd, rank2) for _, dd in framing_tile(d, 2)]
            assert per_parity == [2, 0]
            assert integral_counting(d, rank2) == 2

    def test_singleton(self, singleton):
        for name in ("figure_eight", "trefoil", "hopf", "virtual_trefoil"):
            assert integral_counting(datasets.link(name), singleton) == 1

    def test_unlink_of_free_loops(self, rank2):
        d = build_diagram(parse_gauss_code("()\n()"))
        assert basic_counting(d, rank2) == 4
        assert integral_counting(d, rank2) == 4 * 1


class TestBruteForce:
    @settings(max_examples=150, deadline=None)
    @given(small_codes(), st.sampled_from(SIZE2))
    def test_size_two(self, code, b):
        d = build_diagram(code)
        want = brute_labelings(raw(code), *b.tables())
        got = [f.assignment for f in enumerate_labelings(d, b)]
        assert got == want

    @settings(max_examples=60, deadline=None)
    @given(small_codes(max_semiarcs=4), commuting_pair(max_n=3))
    def test_constant_action_size_three(self, code, pair):
        b = validate_birack(*constant_action(*pair))
        d = build_diagram(code)
        want = brute_labelings(raw(code), *b.tables())
        assert [f.assignment for f in enumerate_labelings(d, b)] == want
        assert all(is_labeling(d, b, a) for a in want)


class TestInvariance:
    @settings(max_examples=40, deadline=None)
    @given(small_codes(), st.sampled_from(SIZE2), st.integers(0, 3))
    def test_phone_cord(self, code, b, k):
        # N extra positive kinks on a component do not change the counts
        d = build_diagram(code)
        e = add_kinks(d, 0, b.rank * k)
        assert basic_counting(e, b) == basic_counting(d, b)

    def test_tile_labelings_writhe(self, rank2):
        d = datasets.link("hopf")
        seen = {w for w, _ in tile_labelings(d, rank2)}
        for w, f in tile_labelings(d, rank2):
            assert tuple(x % 2 for x in f.diagram.writhe) == w
        assert seen <= {(a, b) for a in range(2) for b in range(2)}

    def test_relabelled_birack_same_count(self, rank2):
        c = rank2.relabel([1, 0])
        for name in ("figure_eight", "trefoil", "virtual_trefoil", "hopf"):
            d = datasets.link(name)
            assert integral_counting(d, c) == integral_counting(d, rank2)
