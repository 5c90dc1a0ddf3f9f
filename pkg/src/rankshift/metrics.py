"""Rank-perturbation error measures over two rankings of one element set.

epsilon counts positions whose elements differ (permutation Hamming
distance). epsilon_n scores each element by how many of its two ranking
neighbors (predecessor/successor, with a boundary sentinel at the ends)
changed between the rankings: 1 if both, 1/2 if one, 0 if none.

Two neighbor rules are provided. The default "example" rule treats the
boundary sentinel as an ordinary comparable neighbor on both sides. The
"literal" rule instead scores a full point for any boundary element of the
first ranking whose single real neighbor changed; it is kept only for
sensitivity analysis, since the two rules disagree on boundary elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

__all__ = ["EN_RULES", "ErrorPair", "epsilon", "epsilon_n", "error_pair"]

EN_RULES = ("example", "literal")

_BOUNDARY = object()


@dataclass(frozen=True)
class ErrorPair:
    """Both error measures, raw and normalized by the ranking length."""

    epsilon_raw: float
    epsilon_n_raw: float
    epsilon_norm: float
    epsilon_n_norm: float


def _check_pair(baseline: Sequence[Hashable], perturbed: Sequence[Hashable]) -> None:
    if len(baseline) == 0:
        raise ValueError("rankings must be non-empty")
    if len(baseline) != len(perturbed):
        raise ValueError(
            f"rankings differ in length: {len(baseline)} vs {len(perturbed)}")
    seen = set(baseline)
    if len(seen) != len(baseline):
        raise ValueError("baseline ranking contains duplicate elements")
    if seen != set(perturbed):
        raise ValueError("rankings are not permutations of the same element set")


def epsilon(baseline: Sequence[Hashable], perturbed: Sequence[Hashable]) -> int:
    """Number of positions at which the two rankings hold different elements."""
    _check_pair(baseline, perturbed)
    return sum(1 for a, b in zip(baseline, perturbed) if a != b)


def _neighbors(seq: Sequence[Hashable], i: int) -> tuple[object, object]:
    pred = seq[i - 1] if i > 0 else _BOUNDARY
    succ = seq[i + 1] if i < len(seq) - 1 else _BOUNDARY
    return pred, succ


def epsilon_n(baseline: Sequence[Hashable], perturbed: Sequence[Hashable],
              rule: str = "example") -> float:
    """Sum over elements of the moved-neighbor score (see module docstring)."""
    _check_pair(baseline, perturbed)
    if rule not in EN_RULES:
        raise ValueError(f"rule must be one of {EN_RULES}, got {rule!r}")
    position = {x: i for i, x in enumerate(perturbed)}
    total = 0.0
    for i, x in enumerate(baseline):
        p1, s1 = _neighbors(baseline, i)
        p2, s2 = _neighbors(perturbed, position[x])
        pred_changed = p1 != p2
        succ_changed = s1 != s2
        score = 0.5 * (pred_changed + succ_changed)
        if rule == "literal":
            # a baseline boundary element scores a full point as soon as its
            # single real neighbor changed, even if the other side agrees
            if (p1 is _BOUNDARY and succ_changed) or (s1 is _BOUNDARY and pred_changed):
                score = 1.0
        total += score
    return total


def error_pair(baseline: Sequence[Hashable], perturbed: Sequence[Hashable],
               rule: str = "example") -> ErrorPair:
    """Both measures, normalized by the common ranking length."""
    eps = epsilon(baseline, perturbed)
    eps_n = epsilon_n(baseline, perturbed, rule=rule)
    n = len(baseline)
    return ErrorPair(
        epsilon_raw=float(eps),
        epsilon_n_raw=eps_n,
        epsilon_norm=eps / n,
        epsilon_n_norm=eps_n / n,
    )
