"""Balanced ordering and colouring of a pillar set.

The median pillar of a block goes first and takes the block's top colour; the
two halves are handled recursively with the remaining colours, left half
before right half.  Any two pillars on opposite sides of a median are then
separated by an earlier pillar whose colour nobody else in the block uses, so
the result is a pillar assignment whose segments each feed at most ``k``
pillars when ``m <= 2**k - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .pillars import Pillar


class PaletteTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class BalancedOrderResult:
    ordered_pillars: tuple[Pillar, ...]
    k_used: int

    @property
    def colors(self) -> set[int]:
        return {p.color for p in self.ordered_pillars}


def colors_needed(m: int) -> int:
    """Smallest k with ``m <= 2**k - 1``."""
    return m.bit_length()


def build_balanced(positions: Sequence[Fraction], palette: Sequence[int]) -> BalancedOrderResult:
    """Order and colour ``positions`` with colours drawn from ``palette``.

    Recursion depth ``d`` (root block at depth 0) uses ``palette[k - 1 - d]``,
    so the last palette entry marks the overall median.  Order keys start at 0
    and follow a pre-order walk: median, then left block, then right block.
    """
    pts = sorted(positions)
    if len(set(pts)) != len(pts):
        raise ValueError("positions must be distinct")
    k = len(palette)
    if len(set(palette)) != k:
        raise ValueError("palette colours must be distinct")
    if len(pts) > 2**k - 1:
        raise PaletteTooSmall(f"{len(pts)} pillars need at least {colors_needed(len(pts))} colours, got {k}")

    out: list[Pillar] = []

    def place(block: Sequence[Fraction], depth: int) -> None:
        if not block:
            return
        mid = (len(block) + 1) // 2 - 1
        out.append(Pillar(block[mid], palette[k - 1 - depth], len(out)))
        place(block[:mid], depth + 1)
        place(block[mid + 1 :], depth + 1)

    place(pts, 0)
    return BalancedOrderResult(tuple(out), k)
