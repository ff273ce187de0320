"""Mora's tangent cone algorithm: weak normal forms and standard bases.

Under the local order a leading term has minimal total degree.  Reduction uses
the ecart trick: intermediate remainders join the reducer pool, which makes
the division terminate even though the order is not well-founded.  The weak
normal form h of f satisfies u*f = sum q_i g_i + h for a unit u of the local
ring, and either h = 0 or no leading monomial of the pool divides LM(h).
"""

from __future__ import annotations

from ..errors import ResourceLimitError
from .orders import ANTIGRLEX, MonomialOrder, ecart, leading_monomial, make_monic
from .groebner import interreduce, normal_form, spolynomial, term_mul
from .poly import Poly, monomial_div, monomial_divides, monomial_lcm, monomial_mul

DEFAULT_WORK_LIMIT = 20_000_000


class _Budget:
    """Shared work countdown across one basis computation.

    Work is counted in reducer terms touched, so a computation on huge
    polynomials trips the limit after comparable effort to one on many small
    ones; the cutoff is deterministic and machine-independent.
    """

    __slots__ = ("remaining",)

    def __init__(self, work: int):
        self.remaining = work

    def spend(self, cost: int = 1) -> None:
        self.remaining -= cost
        if self.remaining < 0:
            raise ResourceLimitError("standard-basis reduction work budget exhausted")


def mora_normal_form(f: Poly, basis: list[Poly], order: MonomialOrder = ANTIGRLEX,
                     work_limit: int = DEFAULT_WORK_LIMIT,
                     budget: _Budget | None = None) -> Poly:
    """Weak normal form of f against basis (Mora reduction).

    Reducer selection: minimal ecart, ties by leading monomial under the
    order, then by position in the pool.
    """
    if f.is_zero():
        return f
    if budget is None:
        budget = _Budget(work_limit)
    pool = [g for g in basis if not g.is_zero()]
    data = [(ecart(g, order), leading_monomial(g, order), i, g) for i, g in enumerate(pool)]
    h = f
    while not h.is_zero():
        lm = leading_monomial(h, order)
        candidates = [d for d in data if monomial_divides(d[1], lm)]
        if not candidates:
            return h
        eh = ecart(h, order)
        eg, lmg, _, g = min(candidates, key=lambda d: (d[0], order.key(d[1]), d[2]))
        if eg > eh:
            data.append((eh, lm, len(data), h))
        # the step scans h for its leading term and subtracts a multiple of g
        budget.spend(len(g.terms) + len(h.terms))
        factor = h.terms[lm] / g.terms[lmg]
        h = h - term_mul(g, monomial_div(lm, lmg), factor)
    return h


def _minimalize_local(basis: list[Poly], order: MonomialOrder) -> list[Poly]:
    # under the local order a proper divisor has the larger key, so scan descending
    kept: list[Poly] = []
    kept_lms: list = []
    for f in sorted(basis, key=lambda g: order.key(leading_monomial(g, order)), reverse=True):
        lmf = leading_monomial(f, order)
        if any(monomial_divides(lm, lmf) for lm in kept_lms):
            continue
        kept.append(f)
        kept_lms.append(lmf)
    return kept


def mora_standard_basis(gens: list[Poly], order: MonomialOrder = ANTIGRLEX,
                        work_limit: int = DEFAULT_WORK_LIMIT) -> list[Poly]:
    """Standard basis of the ideal generated by gens in the localization at 0.

    Leading terms of the output generate the leading-term ideal.  The result
    is minimal and monic; tails are fully interreduced only when every element
    is homogeneous (tail reduction need not terminate under a local order).
    """
    if not order.is_local:
        raise ValueError("mora_standard_basis needs the local order")
    from .groebner import _update_pairs

    budget = _Budget(work_limit)
    seeds = [make_monic(g, order) for g in gens if not g.is_zero()]
    # progressive interreduction of the input: each seed is replaced by its
    # weak normal form against the ones already kept, which stays in the ideal
    # (unit multipliers) and makes the reducers in the pair loop smaller
    pre: list[Poly] = []
    for g in seeds:
        h = mora_normal_form(g, pre, order, budget=budget) if pre else g
        if not h.is_zero():
            pre.append(make_monic(h, order))
    G: list[Poly] = []
    lmG: list = []
    pairs: set = set()
    for g in pre:
        G.append(g)
        lmG.append(leading_monomial(g, order))
        pairs = _update_pairs(G, lmG, pairs, len(G) - 1, order)
    if not G:
        return []
    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(monomial_lcm(lmG[p[0]], lmG[p[1]])), p))
        pairs.remove((i, j))
        s = spolynomial(G[i], G[j], order)
        h = mora_normal_form(s, G, order, budget=budget)
        if not h.is_zero():
            G.append(make_monic(h, order))
            lmG.append(leading_monomial(h, order))
            pairs = _update_pairs(G, lmG, pairs, len(G) - 1, order)
    G = _minimalize_local(G, order)
    if all(g.is_homogeneous() for g in G):
        G = interreduce(G, order)
    return sorted(G, key=lambda g: order.key(leading_monomial(g, order)), reverse=True)


def canonical_initial_forms(basis: list[Poly], order: MonomialOrder = ANTIGRLEX) -> list[Poly]:
    """Interreduced lowest-degree forms of a standard basis.

    The forms of a standard basis are themselves a Groebner basis of the
    initial ideal (their leading monomials generate its leading-term ideal),
    and being homogeneous they admit full interreduction.
    """
    forms = [g.initial_form() for g in basis]
    return interreduce(_minimalize_local(forms, order), order)


def initial_ideal(gens: list[Poly], at_origin: bool = True,
                  order: MonomialOrder = ANTIGRLEX,
                  work_limit: int = DEFAULT_WORK_LIMIT) -> list[Poly]:
    """Generators of the initial ideal: lowest-degree forms of a standard basis.

    The ideal must already be centered at the origin (translate first).  The
    returned forms are a Groebner basis of ini(a) for the same local order and
    are interreduced degreewise.
    """
    if not at_origin:
        raise ValueError("translate the ideal to the origin first")
    basis = mora_standard_basis(gens, order, work_limit)
    return canonical_initial_forms(basis, order)


def leading_monomials_of_ideal(gens: list[Poly], order: MonomialOrder = ANTIGRLEX,
                               work_limit: int = DEFAULT_WORK_LIMIT) -> list:
    basis = mora_standard_basis(gens, order, work_limit)
    return [leading_monomial(g, order) for g in basis]


def mora_reduces_to_zero(f: Poly, basis: list[Poly], order: MonomialOrder = ANTIGRLEX) -> bool:
    return mora_normal_form(f, basis, order).is_zero()
