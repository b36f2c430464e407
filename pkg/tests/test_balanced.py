from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlecolor.balanced import PaletteTooSmall, build_balanced, colors_needed
from circlecolor.pillars import check_condition1, make_state, max_degree
from helpers import gap_points, systems


def trace(result):
    return [(p.pos, p.color, p.order_key) for p in result.ordered_pillars]


def test_single():
    r = build_balanced([F(1, 2)], [7])
    assert trace(r) == [(F(1, 2), 7, 0)] and r.k_used == 1


def test_three():
    a, b, c = F(1, 4), F(1, 2), F(3, 4)
    r = build_balanced([c, a, b], [1, 2])
    assert trace(r) == [(b, 2, 0), (a, 1, 1), (c, 1, 2)]


def test_seven_preorder():
    pts = [F(i, 8) for i in range(1, 8)]
    r = build_balanced(pts, [1, 2, 3])
    assert [p.pos for p in r.ordered_pillars] == [F(4, 8), F(2, 8), F(1, 8), F(3, 8), F(6, 8), F(5, 8), F(7, 8)]
    assert [p.color for p in r.ordered_pillars] == [3, 2, 1, 1, 2, 1, 1]


def test_even_block_takes_lower_median():
    r = build_balanced([F(1, 3), F(2, 3)], [1, 2])
    assert trace(r) == [(F(1, 3), 2, 0), (F(2, 3), 1, 1)]


def test_palette_too_small():
    with pytest.raises(PaletteTooSmall):
        build_balanced([F(i, 5) for i in range(1, 5)], [1, 2])


def test_empty():
    assert build_balanced([], []).ordered_pillars == ()


@pytest.mark.parametrize("m,k", [(1, 1), (2, 2), (3, 2), (4, 3), (7, 3), (8, 4), (15, 4), (16, 5)])
def test_colors_needed(m, k):
    assert colors_needed(m) == k


def _blocks_ok(pillars):
    """Each pillar precedes every pillar in its recursion block (checked by re-splitting)."""
    by_pos = sorted(pillars, key=lambda p: p.pos)

    def ok(block):
        if not block:
            return True
        root = min(block, key=lambda p: p.order_key)
        t = block.index(root)
        return ok(block[:t]) and ok(block[t + 1 :]) and t == (len(block) + 1) // 2 - 1

    return ok(by_pos)


@settings(max_examples=150)
@given(systems(max_n=12), st.data())
def test_balanced_properties(system, data):
    gaps = gap_points(system)
    pts = data.draw(st.lists(st.sampled_from(gaps), unique=True, max_size=min(15, len(gaps))))
    k = data.draw(st.integers(colors_needed(len(pts)), 5)) if pts else data.draw(st.integers(1, 4))
    palette = list(range(10, 10 + k))
    r = build_balanced(pts, palette)
    state = make_state(system, r.ordered_pillars)
    assert check_condition1(state) == []
    assert max_degree(state) <= k
    assert r.colors <= set(palette) and len(r.colors) <= k
    assert _blocks_ok(list(r.ordered_pillars))
    if pts and k == colors_needed(len(pts)):
        assert len(r.colors) == k
