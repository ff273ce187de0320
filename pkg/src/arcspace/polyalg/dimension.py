"""Krull dimension of a quotient by a monomial ideal.

dim k[x_1..x_n]/(m_1..m_r) is the size of the largest variable subset S such
that no generator's support is contained in S; equivalently n minus the size
of a minimum vertex cover of the supports.  Branch and bound is plenty at the
scales this library works at.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .poly import Monomial, monomial_support


def monomial_dim(leading_monomials: Iterable[Monomial], nvars: int) -> int:
    supports = []
    for m in leading_monomials:
        s = monomial_support(m)
        if not s:
            raise ValueError("a constant monomial generates the unit ideal")
        supports.append(s)
    # drop non-minimal supports: a superset is covered whenever the subset is
    supports.sort(key=len)
    minimal: list[frozenset[int]] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return nvars - _min_cover(minimal)


def _min_cover(supports: Sequence[frozenset[int]]) -> int:
    best = len({v for s in supports for v in s}) if supports else 0

    def search(remaining: list[frozenset[int]], chosen: int) -> None:
        nonlocal best
        if chosen >= best:
            return
        if not remaining:
            best = chosen
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            rest = [s for s in remaining if v not in s]
            search(rest, chosen + 1)

    search(list(supports), 0)
    return best
