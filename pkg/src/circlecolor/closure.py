"""Arithmetic check that the built-in constant profiles can never run out of room.

For each clique number the counting bound caps the quota pillars of a step,
which caps the fresh colours ``k_max`` a step may need.  A profile is closed
when ``budget >= quota + k_max``, ``palette >= budget + k_max`` and the
palette fits in ``7 * omega`` colours.
"""

from __future__ import annotations

from .augment import AugmentConfig


def profile_problems(omega: int, profile: str = "default") -> list[str]:
    return AugmentConfig.for_omega(omega, profile).closure_problems()


def check_closure(max_omega: int = 10**6) -> dict[str, list]:
    """Failures per profile: default over ``3..max_omega``, omega2 at 2."""
    failures: dict[str, list] = {"default": [], "omega2": []}
    for omega in range(3, max_omega + 1):
        problems = profile_problems(omega)
        if problems:
            failures["default"].append((omega, problems))
    problems = profile_problems(2, "omega2")
    if problems:
        failures["omega2"].append((2, problems))
    return failures


def main(argv=None) -> int:
    import argparse

    parser = argparse.ArgumentParser(description="Check the quota/budget/palette profiles for closure.")
    parser.add_argument("--max-omega", type=int, default=10**6)
    args = parser.parse_args(argv)
    failures = check_closure(args.max_omega)
    for name, bad in failures.items():
        status = "ok" if not bad else f"{len(bad)} failures, first {bad[0]}"
        print(f"{name}: {status}")
    return 0 if not any(failures.values()) else 1


if __name__ == "__main__":
    raise SystemExit(main())
