"""Named q-products: Pochhammer symbols, Euler functions, eta-quotients,
Ramanujan theta functions and the partition generating functions built
from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

import numpy as np

from . import _kernels as K
from .errors import PreconditionError, StructuralError
from .series import (
    ZZ,
    CoefficientRing,
    Series,
    add,
    divide,
    invert,
    make_series,
    mul,
    one,
    power,
    scale,
    shift,
    zero,
)


@dataclass(frozen=True)
class PochhammerFactor:
    """``(a; q**step)_inf ** exponent`` with ``a = sign * q**offset``."""

    sign: int
    offset: int
    step: int
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise StructuralError(f"sign must be +1 or -1, got {self.sign}")
        if self.step < 1:
            raise StructuralError(f"step must be >= 1, got {self.step}")
        # offset 0 gives (1;q)=0 or (-1;q) with constant term 2: never a unit
        if self.offset < 1:
            raise StructuralError(f"offset must be >= 1, got {self.offset}")

    @property
    def is_euler(self) -> bool:
        """True for ``f_k = (q^k; q^k)_inf`` factors."""
        return self.sign == 1 and self.offset == self.step


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[PochhammerFactor, ...] = ()

    @classmethod
    def eta(cls, exponents: Mapping[int, int]) -> "ProductSpec":
        """Eta-quotient ``prod f_k ** e_k`` from a ``{k: e_k}`` mapping."""
        return cls(tuple(PochhammerFactor(1, k, k, e) for k, e in sorted(exponents.items()) if e))

    def eta_exponents(self) -> dict[int, int] | None:
        """``{k: e_k}`` when every factor is an Euler function, else None."""
        out: dict[int, int] = {}
        for f in self.factors:
            if not f.is_euler:
                return None
            out[f.step] = out.get(f.step, 0) + f.exponent
        return {k: e for k, e in out.items() if e}


@dataclass(frozen=True)
class EtaTerm:
    """``coeff * q**shift * prod f_k ** e_k``."""

    exponents: tuple[tuple[int, int], ...]
    coeff: int = 1
    shift: int = 0

    @classmethod
    def of(cls, exponents: Mapping[int, int], coeff: int = 1, shift: int = 0) -> "EtaTerm":
        return cls(tuple(sorted((k, e) for k, e in exponents.items() if e)), coeff, shift)

    @property
    def spec(self) -> ProductSpec:
        return ProductSpec.eta(dict(self.exponents))

    def times(self, extra: Mapping[int, int]) -> "EtaTerm":
        merged = dict(self.exponents)
        for k, e in extra.items():
            merged[k] = merged.get(k, 0) + e
        return EtaTerm.of(merged, self.coeff, self.shift)

    def __str__(self):
        def fk(k, e):
            return f"f{k}" if e == 1 else f"f{k}^{e}"
        num = "*".join(fk(k, e) for k, e in self.exponents if e > 0) or "1"
        den = "*".join(fk(k, -e) for k, e in self.exponents if e < 0)
        body = num if not den else f"{num}/({den})"
        pre = "" if self.coeff == 1 else ("-" if self.coeff == -1 else f"{self.coeff}*")
        q = "" if self.shift == 0 else ("q*" if self.shift == 1 else f"q^{self.shift}*")
        return f"{pre}{q}{body}"


@dataclass(frozen=True)
class ThetaSpec:
    """Ramanujan's ``f(a, b)`` with ``a = a_sign q**a_exp`` and ``b = b_sign q**b_exp``."""

    a_sign: int
    a_exp: int
    b_sign: int
    b_exp: int

    def __post_init__(self):
        if self.a_sign not in (1, -1) or self.b_sign not in (1, -1):
            raise StructuralError("theta signs must be +1 or -1")
        if self.a_exp < 0 or self.b_exp < 0:
            raise StructuralError("theta exponents must be nonnegative")
        if self.a_exp + self.b_exp < 1:
            raise StructuralError("f(a, b) diverges when a*b has no positive q-power")


# -- Pochhammer symbols and Euler functions -------------------------------

def _pochhammer_positive(sign: int, offset: int, step: int, order: int, ring: CoefficientRing) -> np.ndarray:
    # (z; Q)_inf = sum_k (-z)^k Q^{k(k-1)/2} / (Q; Q)_k with z = sign q^offset,
    # Q = q^step.  Each term follows from the previous one by a shift and one
    # division by (1 - Q^k); only O(sqrt(order)) terms reach below the cutoff.
    m = ring.modulus
    total = K.zeros(order, m)
    total[0] = 1
    term = total.copy()
    k = 1
    while True:
        low = offset * k + step * k * (k - 1) // 2
        if low >= order:
            break
        s = offset + step * (k - 1)
        moved = K.zeros(order, m)
        moved[s:] = term[:order - s] * (-sign)
        term = K.div_binomial(K.normalize(moved, m), step * k, 1, m)
        total += term
        K.normalize(total, m)
        k += 1
    return total


def pochhammer(factor: PochhammerFactor, order: int, ring: CoefficientRing = ZZ) -> Series:
    """Expansion of ``(sign q^offset; q^step)_inf ** exponent`` to ``order``."""
    if factor.exponent == 0:
        return one(order, ring)
    base = Series(ring, _pochhammer_positive(factor.sign, factor.offset, factor.step, order, ring))
    p = power(base, abs(factor.exponent))
    return p if factor.exponent > 0 else invert(p)


def euler(k: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    """``f_k = (q^k; q^k)_inf`` from the pentagonal number theorem."""
    if k < 1:
        raise StructuralError(f"k must be >= 1, got {k}")
    terms = []
    j = 0
    while True:
        hit = False
        for jj in ((0,) if j == 0 else (j, -j)):
            e = k * jj * (3 * jj - 1) // 2
            if e < order:
                terms.append((e, -1 if jj % 2 else 1))
                hit = True
        if not hit:
            break
        j += 1
    return make_series(ring, order, terms)


def eta_quotient(spec: ProductSpec, order: int, ring: CoefficientRing = ZZ) -> Series:
    """Expand a product of Pochhammer factors.

    Euler-function factors are applied one sparse multiplication or division
    at a time.  Other factors with negative exponent are multiplied into a
    single denominator that is divided out once at the end.
    """
    m = ring.modulus
    acc = K.zeros(order, m)
    acc[0] = 1
    denominator = None
    for f in spec.factors:
        if f.exponent == 0:
            continue
        if f.is_euler:
            fk = euler(f.step, order, ring).coeffs
            for _ in range(abs(f.exponent)):
                acc = K.mul(acc, fk, order, m) if f.exponent > 0 else K.divide(acc, fk, order, m)
            continue
        base = Series(ring, _pochhammer_positive(f.sign, f.offset, f.step, order, ring))
        p = power(base, abs(f.exponent))
        if f.exponent > 0:
            acc = K.mul(acc, p.coeffs, order, m)
        else:
            denominator = p if denominator is None else mul(denominator, p)
    result = Series(ring, acc)
    if denominator is not None:
        result = divide(result, denominator)
    return result


def eta(exponents: Mapping[int, int], order: int, ring: CoefficientRing = ZZ) -> Series:
    """Shorthand for ``eta_quotient(ProductSpec.eta(exponents), ...)``."""
    return eta_quotient(ProductSpec.eta(exponents), order, ring)


def expand_term(term: EtaTerm, order: int, ring: CoefficientRing = ZZ) -> Series:
    if term.shift >= order:
        return zero(order, ring)
    body = eta(dict(term.exponents), order - term.shift, ring)
    return shift(scale(body, term.coeff), term.shift, order)


def expand_terms(terms: Iterable[EtaTerm], order: int, ring: CoefficientRing = ZZ) -> Series:
    total = zero(order, ring)
    for t in terms:
        total = add(total, expand_term(t, order, ring))
    return total


# -- partition generating functions ---------------------------------------

def grs_spec(r: int, s: int) -> ProductSpec:
    """``(-q;q)(-q^rs;q^rs) / ((-q^r;q^r)(-q^s;q^s))`` as Pochhammer factors."""
    return ProductSpec((
        PochhammerFactor(-1, 1, 1, 1),
        PochhammerFactor(-1, r * s, r * s, 1),
        PochhammerFactor(-1, r, r, -1),
        PochhammerFactor(-1, s, s, -1),
    ))


def grs_generating(r: int, s: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    """Generating function of (r,s)-regular partitions into distinct parts."""
    if r < 2 or s < 2:
        raise PreconditionError(f"need r, s >= 2, got ({r}, {s})")
    if gcd(r, s) != 1:
        raise PreconditionError(f"r and s must be coprime, got ({r}, {s})")
    return eta_quotient(grs_spec(r, s), order, ring)


def partition_generating(order: int, ring: CoefficientRing = ZZ) -> Series:
    """``1/f_1 = sum p(n) q^n``."""
    return eta({1: -1}, order, ring)


def lregular_generating(ell: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    """``f_ell/f_1``: partitions with no part divisible by ``ell``."""
    if ell < 2:
        raise PreconditionError(f"ell must be >= 2, got {ell}")
    return eta({ell: 1, 1: -1}, order, ring)


# -- theta functions ------------------------------------------------------

def theta_sum(spec: ThetaSpec, order: int, ring: CoefficientRing = ZZ) -> Series:
    """``f(a, b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2}`` truncated below ``q**order``."""
    coeffs: dict[int, int] = {}

    def add_term(n: int) -> bool:
        ea, eb = n * (n + 1) // 2, n * (n - 1) // 2
        e = spec.a_exp * ea + spec.b_exp * eb
        if e >= order:
            return False
        c = (spec.a_sign ** (ea % 2)) * (spec.b_sign ** (eb % 2))
        coeffs[e] = coeffs.get(e, 0) + c
        return True

    n = 0
    while add_term(n):
        n += 1
    n = -1
    while add_term(n):
        n -= 1
    return make_series(ring, order, sorted(coeffs.items()))


def theta_factors(spec: ThetaSpec) -> ProductSpec:
    """The triple-product form ``(-a; ab)(-b; ab)(ab; ab)`` of ``f(a, b)``."""
    if spec.a_exp < 1 or spec.b_exp < 1:
        raise StructuralError("triple-product form needs positive a and b exponents")
    ab = spec.a_exp + spec.b_exp
    sigma = spec.a_sign * spec.b_sign
    xs = ((-spec.a_sign, spec.a_exp), (-spec.b_sign, spec.b_exp), (sigma, ab))
    if sigma == 1:
        return ProductSpec(tuple(PochhammerFactor(sg, e, ab) for sg, e in xs))
    # Base -q^ab: split by parity, (x; -Q) = (x; Q^2)(-xQ; Q^2).
    factors = []
    for sg, e in xs:
        factors.append(PochhammerFactor(sg, e, 2 * ab))
        factors.append(PochhammerFactor(-sg, e + ab, 2 * ab))
    return ProductSpec(tuple(factors))


def theta_product(spec: ThetaSpec, order: int, ring: CoefficientRing = ZZ) -> Series:
    return eta_quotient(theta_factors(spec), order, ring)


PHI = ThetaSpec(1, 1, 1, 1)
PSI = ThetaSpec(1, 1, 1, 3)
F_MINUS_Q = ThetaSpec(-1, 1, -1, 2)
# A, B, C of the 7-dissection of f_1
THETA_A = ThetaSpec(-1, 3, -1, 4)
THETA_B = ThetaSpec(-1, 2, -1, 5)
THETA_C = ThetaSpec(-1, 1, -1, 6)


# -- Rogers-Ramanujan ratio -----------------------------------------------

RR_NUMERATOR = ((1, 2, 5), (1, 3, 5))
RR_DENOMINATOR = ((1, 1, 5), (1, 4, 5))


def _rr(top, bottom, order, ring):
    factors = [PochhammerFactor(sg, off, st, 1) for sg, off, st in top]
    factors += [PochhammerFactor(sg, off, st, -1) for sg, off, st in bottom]
    return eta_quotient(ProductSpec(tuple(factors)), order, ring)


def rr_ratio(order: int, ring: CoefficientRing = ZZ) -> Series:
    """``R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5))``."""
    return _rr(RR_NUMERATOR, RR_DENOMINATOR, order, ring)


def rr_ratio_inverse(order: int, ring: CoefficientRing = ZZ) -> Series:
    """``1/R(q)`` expanded from the swapped product, not by series inversion."""
    return _rr(RR_DENOMINATOR, RR_NUMERATOR, order, ring)


def rr_pair(order: int, ring: CoefficientRing = ZZ) -> tuple[Series, Series]:
    return rr_ratio(order, ring), rr_ratio_inverse(order, ring)


def pochhammer_product(factors: Iterable[tuple[int, int, int]], order: int, ring: CoefficientRing = ZZ) -> Series:
    """Product of ``(sign q^offset; q^step)_inf`` over ``(sign, offset, step)`` triples."""
    return eta_quotient(ProductSpec(tuple(PochhammerFactor(*f) for f in factors)), order, ring)
