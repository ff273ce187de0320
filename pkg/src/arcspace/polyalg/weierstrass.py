"""Truncated Weierstrass division and regularizing coordinate changes.

Division by an f that is y-regular of order d writes g = q*f + r with
deg_y(r) < d, working modulo total degree `trunc` in the non-y variables.
When the restriction of f to the y-axis is exactly c*y^d the division
terminates and is exact modulo that truncation.  Otherwise the true quotient
is an infinite series in y (already for f = y^2 + y^3, g = y^2); pass y_trunc
to obtain its truncation, or get a ResourceLimitError explaining the problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotRegularError, ResourceLimitError
from .poly import Poly, monomial_degree
from .varset import VarId, VarSet


def _restrict_to_axis(f: Poly, ypos: int) -> dict[int, Fraction]:
    """Coefficients of f with every variable except y set to 0, keyed by y-power."""
    out: dict[int, Fraction] = {}
    for mono, c in f.terms.items():
        if monomial_degree(mono) == mono[ypos]:
            out[mono[ypos]] = out.get(mono[ypos], Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def y_regular_order(f: Poly, y: VarId | str) -> int | None:
    """Order of f's restriction to the y-axis, or None if the restriction is 0."""
    axis = _restrict_to_axis(f, f.varset.position(y))
    return min(axis) if axis else None


def _split_nony_degree(mono, ypos: int) -> int:
    return monomial_degree(mono) - mono[ypos]


def weierstrass_divide(g: Poly, f: Poly, y: VarId | str, trunc: int,
                       y_trunc: int | None = None) -> tuple[Poly, Poly]:
    """g = q*f + r modulo non-y total degree > trunc, with deg_y(r) < d."""
    varset = g.varset
    if f.varset != varset:
        raise ValueError("dividend and divisor over different varsets")
    ypos = varset.position(y)
    axis = _restrict_to_axis(f, ypos)
    if not axis:
        raise NotRegularError("restriction of the divisor to the y-axis is zero")
    d = min(axis)
    if d > f.degree_in(y):
        raise NotRegularError("axis order exceeds the y-degree of the divisor")
    c = axis[d]
    # the part of f other than c*y^d: every term has non-y degree >= 1
    # or is a pure power y^k with k > d
    yd = tuple(d if i == ypos else 0 for i in range(len(varset)))
    f_rest = f - Poly(varset, {yd: c})
    pure_tail = len(axis) > 1

    y_detect = g.degree_in(y) + d + (trunc + 2) * max(1, f.degree_in(y))

    def clip(p: Poly) -> Poly:
        kept = {}
        for mono, coeff in p.terms.items():
            if _split_nony_degree(mono, ypos) > trunc:
                continue
            if y_trunc is not None and mono[ypos] >= y_trunc + d:
                continue
            kept[mono] = coeff
        return Poly(varset, kept)

    h = clip(g)
    quot = Poly.zero(varset)
    rem = Poly.zero(varset)
    while not h.is_zero():
        low = {m: co for m, co in h.terms.items() if m[ypos] < d}
        rem = rem + Poly(varset, low)
        hi = {m: co for m, co in h.terms.items() if m[ypos] >= d}
        if not hi:
            break
        if y_trunc is None and pure_tail and max(m[ypos] for m in hi) > y_detect:
            raise ResourceLimitError(
                "Weierstrass quotient is an infinite series in the regular "
                "variable; pass y_trunc to truncate it"
            )
        qstep = Poly(varset, {
            m[:ypos] + (m[ypos] - d,) + m[ypos + 1:]: co / c for m, co in hi.items()
        })
        quot = quot + qstep
        h = clip(-(qstep * f_rest))
    return quot, rem


@dataclass(frozen=True)
class CoordinateSubstitution:
    """Invertible shift x_i -> x_i + y^(a_i) (identity when exponents is empty)."""

    varset: VarSet
    y: VarId
    exponents: tuple[tuple[VarId, int], ...]

    @property
    def is_identity(self) -> bool:
        return not self.exponents

    def _mapping(self, sign: int) -> dict:
        ypoly = Poly.variable(self.varset, self.y)
        out = {}
        for v, a in self.exponents:
            out[v] = Poly.variable(self.varset, v) + (ypoly ** a).scale(sign)
        return out

    def apply(self, p: Poly) -> Poly:
        if self.is_identity:
            return p
        return p.substitute(self._mapping(+1))

    def apply_inverse(self, p: Poly) -> Poly:
        if self.is_identity:
            return p
        return p.substitute(self._mapping(-1))


def regularize(f: Poly, y: VarId | str, varset: VarSet | None = None) -> CoordinateSubstitution:
    """Substitution making f y-regular; identity if it already is.

    Tries x_i -> x_i + y^(c^(i-1)) for c = 2, 3, ... over the variables in f's
    support, falling back to the always-sufficient staggering a_i = (deg f+1)^i.
    """
    if f.is_zero():
        raise ValueError("cannot regularize the zero polynomial")
    vs = varset or f.varset
    yvar = vs[vs.position(y)]
    ypos = vs.position(y)
    if y_regular_order(f, yvar) is not None:
        return CoordinateSubstitution(vs, yvar, ())
    support = sorted({i for mono in f.terms for i, e in enumerate(mono) if e and i != ypos})
    deg = f.total_degree()

    def attempt(exponents: list[int]) -> CoordinateSubstitution | None:
        sub = CoordinateSubstitution(
            vs, yvar, tuple((vs[i], a) for i, a in zip(support, exponents)))
        if y_regular_order(sub.apply(f), yvar) is not None:
            return sub
        return None

    for c in range(2, deg + 2):
        found = attempt([c ** k for k in range(len(support))])
        if found is not None:
            return found
    base = deg + 1
    found = attempt([base ** (k + 1) for k in range(len(support))])
    if found is None:
        raise AssertionError("staggered substitution failed; unreachable for f != 0")
    return found
