from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlecolor.augment import (
    AugmentConfig,
    BudgetViolated,
    PaletteExhausted,
    augment_step,
    color_system,
    complete_assignment,
    compute_P1,
    default_constants,
    find_uncovered,
    greedy_quota_pillars,
)
from circlecolor.generator import gen_crossing_clique, gen_nested_chain, gen_uniform_matching
from circlecolor.intervals import IntervalSystem, Segment, normalize
from circlecolor.oracles import chromatic_number_exact, clique_number_exact
from circlecolor.pillars import Pillar, check_condition1, make_state, max_degree, ordered_degree, p_degree
from helpers import systems, triangle

WHOLE = Segment(F(0), F(1))


class TestFindUncovered:
    def test_empty_pillar_set(self):
        assert find_uncovered(make_state(triangle(), [])) == (0, WHOLE)

    def test_done(self):
        assert find_uncovered(make_state(triangle(), [Pillar(F(1, 2), 1, 0)])) is None

    def test_disjoint_pair(self):
        s = normalize([[1, 2], [3, 4]])  # (1/5,2/5), (3/5,4/5)
        state = make_state(s, [Pillar(F(3, 10), 1, 0)])
        assert find_uncovered(state) == (1, Segment(F(3, 10), F(1)))


class TestComputeP1:
    def test_no_pillars(self):
        assert compute_P1(make_state(triangle(), []), WHOLE) == frozenset()

    def test_straddling_interval(self):
        s = normalize([[1, 4], [2, 3]])  # (1/5,4/5) holds (2/5,3/5)
        state = make_state(s, [Pillar(F(7, 10), 1, 0)])
        S = state.segments[1]
        assert S == Segment(F(7, 10), F(1))
        assert compute_P1(state, S) == frozenset({0})

    def test_two_straddlers_one_pillar(self):
        state = make_state(triangle(), [Pillar(F(1, 2), 4, 0)])
        assert compute_P1(state, state.segments[1]) == frozenset({0})
        assert compute_P1(state, state.segments[0]) == frozenset({0})


class TestGreedyQuota:
    # (1/9,6/9), (2/9,7/9), (3/9,8/9), (4/9,5/9); one pillar at 11/18 inside the first three
    system = normalize([[1, 8], [2, 9], [3, 10], [4, 5]])
    S = Segment(F(0), F(11, 18))

    def test_empty_p1(self):
        assert greedy_quota_pillars(triangle(), [], WHOLE, 1) == []

    def test_count_never_reaches_quota(self):
        assert greedy_quota_pillars(self.system, [F(11, 18)], self.S, 2) == []

    def test_cuts_after_each_reaching_endpoint(self):
        # the cut after 3/9 would leave an empty tail, so it is dropped
        assert greedy_quota_pillars(self.system, [F(11, 18)], self.S, 1) == [F(3, 18), F(5, 18)]


def _config(system, quota=None):
    """Default profile, or a custom one with a small quota so that cuts actually happen."""
    omega = max(2, clique_number_exact(system))
    if quota is None:
        return AugmentConfig.for_omega(omega)
    return AugmentConfig.for_omega(omega, "custom", quota=quota, budget=10 * omega + 40, palette=40 * omega + 100)


class TestAugmentStep:
    def test_first_step_single_interval(self):
        s = normalize([[1, 2]])
        after = augment_step(make_state(s, []), _config(s))
        assert after.pillars == (Pillar(F(1, 2), 1, 0),) and after.assignment == (0,)

    def test_triangle_single_pillar(self):
        after = augment_step(make_state(triangle(), []), _config(triangle()))
        assert [p.pos for p in after.pillars] == [F(7, 14)]
        assert after.assignment == (0, 0, 0)

    def test_palette_exhausted(self):
        s = normalize([[1, 3], [2, 5], [4, 6]])
        config = AugmentConfig.for_omega(2, "custom", quota=10, budget=12, palette=1)
        state = augment_step(make_state(s, []), config)
        with pytest.raises(PaletteExhausted):
            augment_step(state, config)

    def test_budget_violated(self):
        s = normalize([[1, 3], [2, 4]])
        config = AugmentConfig.for_omega(2, "custom", quota=10, budget=0, palette=14)
        with pytest.raises(BudgetViolated):
            augment_step(make_state(s, []), config)


def _check_step(before, after, ctx, config):
    system = before.system
    assert ctx.covered_after > ctx.covered_before == before.covered
    assert after.assignment[ctx.I] is not None
    for i, a in enumerate(before.assignment):
        if a is not None:
            assert after.assignment[i] == a
    assert check_condition1(after) == []
    assert max_degree(after) <= config.budget
    assert not set(ctx.fresh_colors) & ctx.p1_colors
    assert (config.quota - config.omega) * len(ctx.quota_pillars) < config.omega * config.budget

    S = ctx.S
    p1 = sorted(before.pillars[k].pos for k in ctx.P1)
    cuts = [S.lo, *ctx.quota_pillars, S.hi]
    d = [p_degree(system, p1, a, b) for a, b in zip(cuts, cuts[1:])]
    assert all(v == config.quota for v in d[:-1])
    assert d[-1] <= config.quota
    if ctx.quota_pillars:
        assert d[-1] >= 1

    k = ctx.balanced.k_used
    old_segments = {(seg.lo, seg.hi): ordered_degree(before, seg) for seg in before.segments}
    for seg in after.segments:
        if seg.hi <= S.lo or seg.lo >= S.hi:
            assert ordered_degree(after, seg) == old_segments[(seg.lo, seg.hi)]
        else:
            assert S.lo <= seg.lo and seg.hi <= S.hi
            assert ordered_degree(after, seg) <= p_degree(system, p1, seg.lo, seg.hi) + k <= config.quota + k


def _run_checked(system, config):
    state = make_state(system, [])
    steps = 0
    while not state.is_complete:
        trace = []
        after = augment_step(state, config, trace, paranoid=True)
        _check_step(state, after, trace[0], config)
        state = after
        steps += 1
    assert steps <= system.n
    return state


class TestAugmentInvariants:
    @settings(max_examples=60, deadline=None)
    @given(systems(min_n=1, max_n=14))
    def test_default_profile(self, system):
        _run_checked(system, _config(system))

    @settings(max_examples=60, deadline=None)
    @given(systems(min_n=1, max_n=16), st.integers(1, 3))
    def test_small_quota_exercises_cuts(self, system, quota):
        _run_checked(system, _config(system, quota))

    def test_small_quota_cuts_happen(self):
        cuts = 0
        for seed in range(20):
            system = gen_uniform_matching(40, seed)
            config = _config(system, 2)
            trace = []
            complete_assignment(system, config, trace)
            cuts += sum(len(c.quota_pillars) for c in trace)
        assert cuts > 0

    @pytest.mark.parametrize("seed", range(5))
    def test_larger_instances(self, seed):
        system = gen_uniform_matching(60, seed)
        _run_checked(system, _config(system, 2))


class TestDefaultConstants:
    def test_omega2_matches_profile(self):
        assert default_constants(2) == (10, 12, 14)
        assert AugmentConfig.for_omega(2, "omega2") == AugmentConfig(2, 10, 12, 14, "omega2")

    def test_omega3(self):
        assert default_constants(3) == (11, 15, 19)

    def test_closure_of_defaults(self):
        for omega in range(2, 200):
            assert AugmentConfig.for_omega(omega).closure_problems() == []

    def test_profile_errors(self):
        with pytest.raises(ValueError):
            AugmentConfig.for_omega(3, "omega2")
        with pytest.raises(ValueError):
            AugmentConfig.for_omega(3, "custom", quota=4)
        with pytest.raises(ValueError):
            AugmentConfig.for_omega(3, "default", quota=4)


class TestColorSystem:
    def test_empty(self):
        state, coloring = color_system(IntervalSystem(()))
        assert coloring.n == 0 and coloring.num_final_colors == 0

    def test_triangle(self):
        state, coloring = color_system(triangle())
        assert coloring.num_classes == 1
        assert coloring.num_final_colors == 3 == chromatic_number_exact(triangle())

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_nested_chain_one_color(self, k):
        state, coloring = color_system(gen_nested_chain(k))
        assert coloring.num_final_colors == 1 and state.is_complete

    @pytest.mark.parametrize("k", [2, 3, 6])
    def test_crossing_clique(self, k):
        _, coloring = color_system(gen_crossing_clique(k))
        assert coloring.num_final_colors == k

    @pytest.mark.parametrize("seed", range(10))
    def test_random_bounds(self, seed):
        system = gen_uniform_matching(30 + seed, seed)
        omega = clique_number_exact(system)
        state, coloring = color_system(system, paranoid=True)
        assert len(state.colors) <= 7 * omega
        assert coloring.num_final_colors <= 7 * omega * omega
