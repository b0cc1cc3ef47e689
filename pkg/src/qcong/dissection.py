"""Coefficient dissection and bounded-order checks of the dissection identities."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt

from . import _kernels as K
from .errors import PreconditionError, StructuralError
from .qproducts import (
    THETA_A,
    THETA_B,
    THETA_C,
    EtaTerm,
    ThetaSpec,
    euler,
    expand_terms,
    pochhammer_product,
    theta_product,
    theta_sum,
)
from .reports import FAIL, PASS, VerificationReport
from .series import ZZ, Series, add, first_difference, mul, scale, shift, sub, zero


@dataclass(frozen=True)
class Progression:
    """The exponents ``A*n + B``."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise StructuralError(f"need 0 <= B < A, got A={self.modulus}, B={self.residue}")


def extract(a: Series, prog: Progression) -> Series:
    """Series whose ``n``-th coefficient is coefficient ``A*n + B`` of ``a``."""
    A, B = prog.modulus, prog.residue
    n = -(-(a.order - B) // A)
    if n < 1:
        raise PreconditionError(f"order {a.order} series has no coefficient at {B}")
    return Series(a.ring, a.coeffs[B::A][:n].copy())


def substitute_power(a: Series, k: int, order: int) -> Series:
    """``a(q**k)`` truncated to ``order``."""
    if k < 1:
        raise StructuralError(f"k must be >= 1, got {k}")
    need = -(-order // k)
    if a.order < need:
        raise PreconditionError(f"need input order >= {need}, got {a.order}")
    arr = K.zeros(order, a.ring.modulus)
    arr[::k] = a.coeffs[:need]
    return Series(a.ring, arr)


def gen_pentagonal_index(n: int) -> int | None:
    """The integer ``k`` with ``k(3k-1)/2 == n``, or None."""
    if n < 0:
        raise PreconditionError("n must be >= 0")
    d = 1 + 24 * n
    s = isqrt(d)
    if s * s != d:
        return None
    if (1 + s) % 6 == 0:
        return (1 + s) // 6
    if (1 - s) % 6 == 0:
        return (1 - s) // 6
    return None


# -- eta-product identities -----------------------------------------------

def _t(exps, coeff=1, shift=0):
    return EtaTerm.of(exps, coeff, shift)


# Each entry: (left terms, right terms); every side is a sum of eta terms.
ETA_IDENTITIES: dict[str, tuple[tuple[EtaTerm, ...], tuple[EtaTerm, ...]]] = {
    "t1": (
        (_t({1: -2}),),
        (_t({8: 5, 2: -5, 16: -2}), _t({4: 2, 16: 2, 2: -5, 8: -1}, 2, 1)),
    ),
    "t2": (
        (_t({9: 1, 1: -1}),),
        (_t({12: 3, 18: 1, 2: -2, 6: -1, 36: -1}), _t({4: 2, 6: 1, 36: 1, 2: -3, 12: -1}, 1, 1)),
    ),
    "t3": (
        (_t({1: 1, 5: 3}),),
        (
            _t({2: 3, 10: 1}),
            _t({2: 2, 10: 2, 20: 1, 4: -1}, -1, 1),
            _t({4: 1, 20: 3}, 2, 2),
            _t({4: 4, 10: 1, 40: 2, 2: -1, 8: -2}, -2, 3),
        ),
    ),
    "t4": (
        (_t({5: 1, 1: -1}),),
        (_t({8: 1, 20: 2, 2: -2, 40: -1}), _t({4: 3, 10: 1, 40: 1, 2: -3, 8: -1, 20: -1}, 1, 1)),
    ),
    "t5": (
        (_t({3: 3, 1: -1}),),
        (_t({4: 3, 6: 2, 2: -2, 12: -1}), _t({12: 3, 4: -1}, 1, 1)),
    ),
    "t6": (
        (_t({1: 1, 7: 1}),),
        (
            _t({2: 1, 14: 1, 16: 2, 56: 5, 4: -1, 8: -1, 28: -3, 112: -2}),
            _t({4: 1, 28: 1}, -1, 1),
            _t({2: 1, 8: 5, 14: 1, 112: 2, 4: -3, 16: -2, 28: -1, 56: -1}, 1, 6),
        ),
    ),
}

IDENTITY_TEXT = {
    "t1": "1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)",
    "t2": "f9/f1 = f12^3 f18/(f2^2 f6 f36) + q f4^2 f6 f36/(f2^3 f12)",
    "t3": "f1 f5^3 = f2^3 f10 - q f2^2 f10^2 f20/f4 + 2q^2 f4 f20^3 - 2q^3 f4^4 f10 f40^2/(f2 f8^2)",
    "t4": "f5/f1 = f8 f20^2/(f2^2 f40) + q f4^3 f10 f40/(f2^3 f8 f20)",
    "t5": "f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4",
    "t6": "f1 f7 = f2 f14 f16^2 f56^5/(f4 f8 f28^3 f112^2) - q f4 f28 + q^6 f2 f8^5 f14 f112^2/(f4^3 f16^2 f28 f56)",
    "g1": "f1 = f25 (R(q^5) - q - q^2/R(q^5))",
    "u7": "f1 = f49 (B(q^7)/C(q^7) - q A(q^7)/B(q^7) - q^2 + q^5 C(q^7)/A(q^7))",
}

IDENTITY_IDS = tuple(IDENTITY_TEXT)
MIN_IDENTITY_ORDER = 8


def clear_denominators(terms):
    """Multiply every term by the least eta product that makes all exponents nonnegative."""
    lcd: dict[int, int] = {}
    for t in terms:
        for k, e in t.exponents:
            if e < 0:
                lcd[k] = max(lcd.get(k, 0), -e)
    return [t.times(lcd) for t in terms], lcd


def cross_multiplied_sides(left, right, order: int):
    cleared, _ = clear_denominators(list(left) + list(right))
    lhs = expand_terms(cleared[:len(left)], order, ZZ)
    rhs = expand_terms(cleared[len(left):], order, ZZ)
    return lhs, rhs


def _g1_sides(order: int):
    # Multiplying through by P1(q^5) P2(q^5), where R = P2/P1, removes every
    # inverse: f1 P1 P2 = f25 (P2^2 - q P1 P2 - q^2 P1^2), all products at q^5.
    p1 = pochhammer_product([(1, 5, 25), (1, 20, 25)], order)
    p2 = pochhammer_product([(1, 10, 25), (1, 15, 25)], order)
    f25 = euler(25, order)
    lhs = mul(mul(euler(1, order), p1), p2)
    inner = sub(sub(mul(p2, p2), shift(mul(p1, p2), 1)), shift(mul(p1, p1), 2))
    return lhs, mul(f25, inner)


def _scaled_theta(spec: ThetaSpec, k: int, order: int) -> Series:
    return theta_sum(ThetaSpec(spec.a_sign, spec.a_exp * k, spec.b_sign, spec.b_exp * k), order)


def _u7_sides(order: int):
    # Multiplied through by A B C (all at q^7):
    # f1 A B C = f49 (A B^2 - q A^2 C - q^2 A B C + q^5 B C^2)
    a = _scaled_theta(THETA_A, 7, order)
    b = _scaled_theta(THETA_B, 7, order)
    c = _scaled_theta(THETA_C, 7, order)
    abc = mul(mul(a, b), c)
    lhs = mul(euler(1, order), abc)
    inner = mul(a, mul(b, b))
    inner = sub(inner, shift(mul(mul(a, a), c), 1))
    inner = sub(inner, shift(abc, 2))
    inner = add(inner, shift(mul(b, mul(c, c)), 5))
    return lhs, mul(euler(49, order), inner)


def identity_sides(identity: str, order: int) -> tuple[Series, Series]:
    """Both sides of a named identity, cross-multiplied, over the integers."""
    if identity in ETA_IDENTITIES:
        return cross_multiplied_sides(*ETA_IDENTITIES[identity], order)
    if identity == "g1":
        return _g1_sides(order)
    if identity == "u7":
        return _u7_sides(order)
    raise KeyError(identity)


def compare_sides(claim: str, family: str, params: dict, lhs: Series, rhs: Series, order: int, t0: float) -> VerificationReport:
    diff = first_difference(lhs, rhs, order)
    counterexamples = [] if diff is None else [{"exponent": diff, "lhs": lhs[diff], "rhs": rhs[diff]}]
    return VerificationReport(
        claim=claim,
        family=family,
        params=params,
        n_checked=order,
        outcome=PASS if diff is None else FAIL,
        counterexamples=counterexamples,
        order=order,
        millis=round((time.perf_counter() - t0) * 1000, 3),
    )


def verify_identity(identity: str, order: int) -> VerificationReport:
    if identity not in IDENTITY_TEXT:
        raise KeyError(f"unknown identity {identity!r}; known: {', '.join(IDENTITY_IDS)}")
    if order < MIN_IDENTITY_ORDER:
        raise PreconditionError(f"order must be >= {MIN_IDENTITY_ORDER}")
    t0 = time.perf_counter()
    lhs, rhs = identity_sides(identity, order)
    return compare_sides(IDENTITY_TEXT[identity], "identity", {"id": identity}, lhs, rhs, order, t0)


# -- p-dissection of f_1 --------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


@dataclass(frozen=True)
class PDissectionInstance:
    p: int
    p_star: int
    exceptional_k: int

    @classmethod
    def for_prime(cls, p: int) -> "PDissectionInstance":
        if p < 5 or not _is_prime(p):
            raise PreconditionError(f"p must be a prime >= 5, got {p}")
        p_star = p if p % 6 == 1 else -p
        assert (p_star - 1) % 6 == 0
        k = (p_star - 1) // 6
        assert -(p - 1) // 2 <= k <= (p - 1) // 2
        return cls(p, p_star, k)

    @property
    def k_range(self) -> range:
        h = (self.p - 1) // 2
        return range(-h, h + 1)

    @property
    def tail_exponent(self) -> int:
        return (self.p * self.p - 1) // 24

    def theta_spec(self, k: int) -> ThetaSpec:
        p = self.p
        a2 = 3 * p * p + (6 * k + 1) * p
        b2 = 3 * p * p - (6 * k + 1) * p
        assert a2 % 2 == 0 and b2 % 2 == 0
        return ThetaSpec(-1, a2 // 2, -1, b2 // 2)

    def residue_violations(self) -> list[int]:
        """``k`` values whose pentagonal exponent hits the excluded residue class."""
        p = self.p
        target = self.tail_exponent % p
        return [k for k in self.k_range
                if k != self.exceptional_k and ((3 * k * k + k) // 2) % p == target]

    def expansion(self, order: int) -> Series:
        total = zero(order)
        for k in self.k_range:
            if k == self.exceptional_k:
                continue
            e = (3 * k * k + k) // 2
            if e >= order:
                continue
            term = shift(theta_product(self.theta_spec(k), order - e), e, order)
            total = add(total, scale(term, -1 if k % 2 else 1))
        tail = shift(euler(self.p * self.p, order), self.tail_exponent) if self.tail_exponent < order else zero(order)
        return add(total, scale(tail, -1 if self.exceptional_k % 2 else 1))


def verify_p_dissection(p: int, order: int) -> VerificationReport:
    """Check the p-dissection of ``f_1`` and its residue-exclusion property."""
    inst = PDissectionInstance.for_prime(p)
    if order < p * p:
        raise PreconditionError(f"order must be >= p^2 = {p * p}")
    t0 = time.perf_counter()
    rhs = inst.expansion(order)
    lhs = euler(1, order)
    params = {"p": p, "p_star": inst.p_star, "exceptional_k": inst.exceptional_k}
    report = compare_sides(f"p-dissection of f1 for p={p}", "p-dissection", params, lhs, rhs, order, t0)
    bad = inst.residue_violations()
    if bad:
        report.outcome = FAIL
        report.counterexamples += [{"k": k, "residue": ((3 * k * k + k) // 2) % p} for k in bad]
    return report
