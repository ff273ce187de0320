"""Univariate polynomials in t whose coefficients are multivariate Polys.

Used for congruences mod q(t) and mod q(t)^2: division by a monic divisor is
exact over any commutative coefficient ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import NotMonicError, VarsetMismatchError
from .poly import Poly
from .varset import VarSet


class TPoly:
    __slots__ = ("varset", "coeffs")

    def __init__(self, varset: VarSet, coeffs: Sequence[Poly]):
        cs = list(coeffs)
        for c in cs:
            if c.varset != varset:
                raise VarsetMismatchError("coefficient over a different varset")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.varset = varset
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, varset: VarSet) -> "TPoly":
        return cls(varset, ())

    @classmethod
    def constant(cls, c: Poly) -> "TPoly":
        return cls(c.varset, (c,))

    @classmethod
    def from_scalars(cls, varset: VarSet, scalars: Sequence[Fraction | int]) -> "TPoly":
        return cls(varset, [Poly.const(varset, s) for s in scalars])

    @classmethod
    def t_power(cls, varset: VarSet, k: int) -> "TPoly":
        return cls(varset, [Poly.zero(varset)] * k + [Poly.one(varset)])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == Poly.one(self.varset)

    def coefficient(self, k: int) -> Poly:
        if k < len(self.coeffs):
            return self.coeffs[k]
        return Poly.zero(self.varset)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TPoly)
            and self.varset == other.varset
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self.varset, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    def __sub__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(self.varset, [self.coefficient(i) - other.coefficient(i) for i in range(n)])

    def __neg__(self) -> "TPoly":
        return TPoly(self.varset, [-c for c in self.coeffs])

    def __mul__(self, other: "TPoly") -> "TPoly":
        if self.is_zero() or other.is_zero():
            return TPoly.zero(self.varset)
        out = [Poly.zero(self.varset) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TPoly(self.varset, out)

    def scale(self, c: Poly) -> "TPoly":
        return TPoly(self.varset, [x * c for x in self.coeffs])

    def __pow__(self, n: int) -> "TPoly":
        if n < 0:
            raise ValueError("negative power")
        result = TPoly.constant(Poly.one(self.varset))
        for _ in range(n):
            result = result * self
        return result

    def div_monic(self, q: "TPoly") -> tuple["TPoly", "TPoly"]:
        """Exact division by a monic divisor: self = quot*q + rem, deg rem < deg q."""
        if not q.is_monic():
            raise NotMonicError("divisor is not monic in t")
        dq = q.degree()
        rem = list(self.coeffs)
        if len(rem) <= dq:
            return TPoly.zero(self.varset), self
        quot = [Poly.zero(self.varset)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            quot[k - dq] = c
            rem[k] = Poly.zero(self.varset)
            for j in range(dq):
                rem[k - dq + j] = rem[k - dq + j] - c * q.coeffs[j]
        return TPoly(self.varset, quot), TPoly(self.varset, rem[:dq])


def div_monic_t(g: TPoly, q: TPoly) -> tuple[TPoly, TPoly]:
    """g = quot*q + rem with deg_t(rem) < deg_t(q), exact over the coefficient ring."""
    if g.varset != q.varset:
        raise VarsetMismatchError("operands over different varsets")
    return g.div_monic(q)


def substitute_tpoly(f: Poly, values: Sequence[TPoly]) -> TPoly:
    """Evaluate a multivariate polynomial at t-polynomial values.

    `values` is aligned with f's varset; all values share one target varset.
    """
    if len(values) != len(f.varset):
        raise ValueError("need one value per variable")
    if not values:
        raise ValueError("empty varset")
    target = values[0].varset
    for v in values:
        if v.varset != target:
            raise VarsetMismatchError("values over different varsets")
    powers: list[dict[int, TPoly]] = [dict() for _ in values]
    total = TPoly.zero(target)
    for mono, c in f.terms.items():
        term = TPoly.constant(Poly.const(target, c))
        for i, e in enumerate(mono):
            if not e:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = values[i] ** e
            term = term * cache[e]
        total = total + term
    return total
