"""Truncated power series in one variable over Z or Z/mZ.

A :class:`Series` of order ``N`` knows the coefficients of ``q**0`` through
``q**(N-1)``.  Binary operations truncate to the smaller operand order so no
coefficient past the reliable range is ever produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import InversionError, PreconditionError, StructuralError

# Residues live in int64 arrays; products of up to ~10**6 residue pairs must
# not overflow before reduction.
MAX_MODULUS = 1 << 20


@dataclass(frozen=True)
class CoefficientRing:
    """Either the exact integers (``modulus is None``) or ``Z/mZ``."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not 2 <= self.modulus <= MAX_MODULUS:
            raise StructuralError(f"modulus must lie in [2, 2**20], got {self.modulus}")

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def normalize(self, value: int) -> int:
        return int(value) if self.modulus is None else int(value) % self.modulus

    def __str__(self):
        return "ZZ" if self.modulus is None else f"Z/{self.modulus}Z"


ZZ = CoefficientRing()


def IntegersMod(m: int) -> CoefficientRing:
    return CoefficientRing(int(m))


def _as_array(values, ring: CoefficientRing) -> np.ndarray:
    if ring.modulus is None:
        arr = np.empty(len(values), dtype=object)
        arr[:] = [int(v) for v in values]
        return arr
    return np.array([int(v) % ring.modulus for v in values], dtype=np.int64)


class Series:
    """Immutable truncated power series.

    Construct through :func:`make_series`, :func:`from_coefficients` or the
    constructors in :mod:`qcong.qproducts`; the raw initializer trusts its
    input.
    """

    __slots__ = ("ring", "_c")

    def __init__(self, ring: CoefficientRing, coeffs: np.ndarray):
        if len(coeffs) < 1:
            raise StructuralError("series order must be >= 1")
        coeffs.setflags(write=False)
        self.ring = ring
        self._c = coeffs

    # -- inspection -------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, index = exponent."""
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, k: int) -> int:
        return int(self._c[k])

    def tolist(self) -> list[int]:
        return [int(v) for v in self._c]

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(int(e), int(self._c[e])) for e in np.flatnonzero(self._c)]

    def __repr__(self):
        terms = self.nonzero_terms()[:8]
        body = " + ".join(f"{v}*q^{e}" for e, v in terms) or "0"
        more = " + ..." if len(self.nonzero_terms()) > 8 else ""
        return f"Series({body}{more}; order={self.order}, ring={self.ring})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and first_difference(self, other) is None)

    __hash__ = None

    # -- operators --------------------------------------------------------
    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __neg__(self):
        return scale(self, -1)

    def __pow__(self, e: int):
        return power(self, e)

    def truncate(self, order: int) -> "Series":
        if not 1 <= order <= self.order:
            raise PreconditionError(f"cannot truncate order {self.order} series to {order}")
        return Series(self.ring, self._c[:order].copy())


# -- construction ---------------------------------------------------------

def make_series(ring: CoefficientRing, order: int, terms: Iterable[tuple[int, int]]) -> Series:
    """Series with the given sparse ``(exponent, value)`` terms, zero elsewhere."""
    if order < 1:
        raise StructuralError(f"order must be >= 1, got {order}")
    arr = K.zeros(order, ring.modulus)
    seen = set()
    for e, v in terms:
        if e in seen:
            raise StructuralError(f"duplicate exponent {e}")
        if not 0 <= e < order:
            raise StructuralError(f"exponent {e} outside [0, {order})")
        seen.add(e)
        arr[e] = ring.normalize(v)
    return Series(ring, arr)


def from_coefficients(ring: CoefficientRing, values: Sequence[int]) -> Series:
    return Series(ring, _as_array(list(values), ring))


def one(order: int, ring: CoefficientRing = ZZ) -> Series:
    return make_series(ring, order, [(0, 1)])


def zero(order: int, ring: CoefficientRing = ZZ) -> Series:
    return make_series(ring, order, [])


def monomial(coeff: int, exponent: int, order: int, ring: CoefficientRing = ZZ) -> Series:
    """``coeff * q**exponent``; an exponent at or past ``order`` gives zero."""
    if exponent < 0:
        raise StructuralError("negative exponent")
    return make_series(ring, order, [(exponent, coeff)] if exponent < order else [])


# -- arithmetic -----------------------------------------------------------

def _check_rings(a: Series, b: Series) -> None:
    if a.ring != b.ring:
        raise StructuralError(f"ring mismatch: {a.ring} vs {b.ring}")


def add(a: Series, b: Series) -> Series:
    _check_rings(a, b)
    n = min(a.order, b.order)
    return Series(a.ring, K.normalize(a._c[:n] + b._c[:n], a.ring.modulus))


def sub(a: Series, b: Series) -> Series:
    _check_rings(a, b)
    n = min(a.order, b.order)
    return Series(a.ring, K.normalize(a._c[:n] - b._c[:n], a.ring.modulus))


def scale(a: Series, c: int) -> Series:
    return Series(a.ring, K.normalize(a._c * a.ring.normalize(c), a.ring.modulus))


def shift(a: Series, k: int, order: int | None = None) -> Series:
    """Multiply by ``q**k``; the result keeps ``a.order`` unless told otherwise."""
    if k < 0:
        raise StructuralError("negative shift")
    n = a.order if order is None else order
    arr = K.zeros(n, a.ring.modulus)
    if k < n:
        m = min(n - k, a.order)
        arr[k:k + m] = a._c[:m]
    return Series(a.ring, arr)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to ``min(a.order, b.order)``.

    Runs one vectorized pass per nonzero of the sparser operand when it has
    few nonzeros (pentagonal-type factors); dense operands are multiplied by
    packing coefficients into a single big integer.
    """
    _check_rings(a, b)
    n = min(a.order, b.order)
    return Series(a.ring, K.mul(a._c, b._c, n, a.ring.modulus))


def power(a: Series, e: int) -> Series:
    if e < 0:
        raise StructuralError("use invert() for negative powers")
    result = one(a.order, a.ring)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def invert(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a unit of the ring."""
    return divide(one(a.order, a.ring), a)


def divide(a: Series, b: Series) -> Series:
    """``a / b`` truncated to ``min(a.order, b.order)``; ``b[0]`` must be a unit."""
    _check_rings(a, b)
    n = min(a.order, b.order)
    if K.unit_inverse(int(b._c[0]), b.ring.modulus) is None:
        raise InversionError(f"constant term {b._c[0]} is not a unit in {b.ring}")
    return Series(a.ring, K.divide(a._c, b._c, n, a.ring.modulus))


def reduce_mod(a: Series, m: int) -> Series:
    """Coefficientwise reduction into ``Z/mZ``.

    Accepts exact series, or series over ``Z/MZ`` with ``m`` dividing ``M``.
    """
    if m < 2:
        raise StructuralError(f"modulus must be >= 2, got {m}")
    if a.ring.modulus is not None and a.ring.modulus % m:
        raise StructuralError(f"cannot reduce {a.ring} modulo {m}")
    ring = IntegersMod(m)
    return Series(ring, _as_array(a._c.tolist(), ring))


def lift(a: Series) -> Series:
    """Reinterpret residues in ``[0, m)`` as exact integers."""
    return from_coefficients(ZZ, a.tolist())


def equal_up_to(a: Series, b: Series, n: int) -> bool:
    """True iff the coefficients of ``q**0 .. q**(n-1)`` agree."""
    return first_difference(a, b, n) is None


def first_difference(a: Series, b: Series, n: int | None = None) -> int | None:
    _check_rings(a, b)
    limit = min(a.order, b.order)
    if n is None:
        n = limit
    if n > limit:
        raise PreconditionError(f"cannot compare {n} coefficients of order-{limit} series")
    diff = np.flatnonzero(a._c[:n] != b._c[:n])
    return int(diff[0]) if len(diff) else None
