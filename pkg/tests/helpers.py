from fractions import Fraction

from hypothesis import strategies as st

from circlecolor.intervals import Interval, IntervalSystem, normalize


def triangle() -> IntervalSystem:
    return IntervalSystem(
        (
            Interval(Fraction(2, 14), Fraction(8, 14)),
            Interval(Fraction(4, 14), Fraction(10, 14)),
            Interval(Fraction(6, 14), Fraction(12, 14)),
        )
    )


def gap_points(system: IntervalSystem) -> list[Fraction]:
    """One legal pillar position per endpoint gap of a normalized system."""
    den = 2 * (2 * system.n + 1)
    return [Fraction(2 * r + 1, den) for r in range(2 * system.n + 1)]


@st.composite
def systems(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(1, 2 * n + 1)))
    return normalize([sorted(perm[2 * t : 2 * t + 2]) for t in range(n)])


@st.composite
def systems_with_points(draw, min_n=0, max_n=12, max_points=8):
    system = draw(systems(min_n, max_n))
    gaps = gap_points(system)
    pts = draw(st.lists(st.sampled_from(gaps), unique=True, max_size=min(max_points, len(gaps))))
    return system, sorted(pts)
