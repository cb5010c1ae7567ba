"""Richardson extrapolation of symmetric (even-order) sequences."""

from __future__ import annotations

from typing import Callable, Sequence


def richardson_even(
    f: Callable[[float], complex], steps: Sequence[float]
) -> complex:
    """Limit of g(h) = (f(h) + f(-h))/2 as h -> 0.

    For analytic f the symmetrized values expand in powers of h^2, so a
    standard Richardson tableau in h^2 applies.  steps must be strictly
    decreasing positive values (e.g. 0.1, 0.05, 0.025).
    """
    hs = list(steps)
    if any(h <= 0 for h in hs) or any(a <= b for a, b in zip(hs, hs[1:])):
        raise ValueError("steps must be positive and strictly decreasing")
    table = [0.5 * (f(h) + f(-h)) for h in hs]
    n = len(table)
    for k in range(1, n):
        nxt = []
        for i in range(n - k):
            r = (hs[i] / hs[i + k]) ** 2
            nxt.append((r * table[i + 1] - table[i]) / (r - 1.0))
        table = nxt
    return table[0]
