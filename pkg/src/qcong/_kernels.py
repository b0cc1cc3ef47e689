"""Array kernels behind :mod:`qcong.series`.

Coefficient arrays are either ``int64`` (residues modulo a small ``m``, always
kept in ``[0, m)`` on return) or ``object`` (exact Python integers).  Every
kernel takes the modulus explicitly; ``None`` means exact arithmetic.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

# Leaf size of the blocked division; below it the recurrence runs in Python.
LEAF = 32


def zeros(n: int, modulus: int | None) -> np.ndarray:
    if modulus is None:
        out = np.empty(n, dtype=object)
        out.fill(0)
        return out
    return np.zeros(n, dtype=np.int64)


def normalize(arr: np.ndarray, modulus: int | None) -> np.ndarray:
    if modulus is not None:
        np.remainder(arr, modulus, out=arr)
    return arr


def sparse_limit(n: int) -> int:
    """Largest nonzero count for which the per-term product path is used."""
    return 32 + 2 * isqrt(max(n, 0))


def _mul_sparse(dense: np.ndarray, sparse: np.ndarray, n: int, modulus: int | None) -> np.ndarray:
    out = zeros(n, modulus)
    ld = len(dense)
    for count, e in enumerate(np.flatnonzero(sparse[:n])):
        e = int(e)
        v = sparse[e] if modulus is None else int(sparse[e])
        length = min(ld, n - e)
        if length <= 0:
            break
        out[e:e + length] += v * dense[:length]
        if modulus is not None and count % 512 == 511:
            np.remainder(out, modulus, out=out)
    return normalize(out, modulus)


def _slot_dtype(bound: int) -> np.dtype | None:
    for width in (1, 2, 4, 8):
        if bound < 1 << (8 * width - 1):
            return np.dtype(f"<u{width}")
    return None


def _pack_unsigned(values, width: int) -> int:
    return int.from_bytes(b"".join(int(v).to_bytes(width, "little") for v in values), "little")


def _unpack_unsigned(big: int, width: int, count: int) -> list[int]:
    raw = big.to_bytes(width * count, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(count)]


def _mul_kronecker_mod(a: np.ndarray, b: np.ndarray, n: int, modulus: int) -> np.ndarray | None:
    # Pack residues into fixed-width slots of one big integer, multiply once.
    bound = min(len(a), len(b)) * (modulus - 1) ** 2
    dt = _slot_dtype(bound)
    if dt is None:
        return None
    x = int.from_bytes(a.astype(dt).tobytes(), "little")
    y = int.from_bytes(b.astype(dt).tobytes(), "little")
    slots = len(a) + len(b)
    raw = (x * y).to_bytes(dt.itemsize * slots, "little")
    out = np.frombuffer(raw, dtype=dt)[:n].astype(np.int64)
    if len(out) < n:
        out = np.concatenate([out, np.zeros(n - len(out), dtype=np.int64)])
    return normalize(out, modulus)


def _mul_kronecker_exact(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    la, lb = len(a), len(b)
    ma = max(abs(int(v)) for v in a)
    mb = max(abs(int(v)) for v in b)
    width = (min(la, lb) * ma * mb).bit_length() // 8 + 1
    a_pos = _pack_unsigned((v if v > 0 else 0 for v in a), width)
    a_neg = _pack_unsigned((-v if v < 0 else 0 for v in a), width)
    b_pos = _pack_unsigned((v if v > 0 else 0 for v in b), width)
    b_neg = _pack_unsigned((-v if v < 0 else 0 for v in b), width)
    slots = la + lb
    plus = _unpack_unsigned(a_pos * b_pos + a_neg * b_neg, width, slots)
    minus = _unpack_unsigned(a_pos * b_neg + a_neg * b_pos, width, slots)
    out = zeros(n, None)
    m = min(n, slots)
    out[:m] = [p - q for p, q in zip(plus[:m], minus[:m])]
    return out


def mul(a: np.ndarray, b: np.ndarray, n: int, modulus: int | None) -> np.ndarray:
    """Cauchy product of ``a`` and ``b`` truncated to ``n`` coefficients."""
    a = a[:n]
    b = b[:n]
    if len(a) == 0 or len(b) == 0:
        return zeros(n, modulus)
    na = int(np.count_nonzero(a))
    nb = int(np.count_nonzero(b))
    if na == 0 or nb == 0:
        return zeros(n, modulus)
    if min(na, nb) <= sparse_limit(n):
        return _mul_sparse(a, b, n, modulus) if nb <= na else _mul_sparse(b, a, n, modulus)
    if modulus is not None:
        out = _mul_kronecker_mod(a, b, n, modulus)
        if out is not None:
            return out
        return _mul_sparse(a, b, n, modulus)
    return _mul_kronecker_exact(a, b, n)


def unit_inverse(u: int, modulus: int | None) -> int | None:
    """Inverse of ``u`` in the ring, or ``None`` when ``u`` is not a unit."""
    if modulus is None:
        return u if u in (1, -1) else None
    try:
        return pow(u % modulus, -1, modulus)
    except ValueError:
        return None


def divide(a: np.ndarray, f: np.ndarray, n: int, modulus: int | None) -> np.ndarray:
    """Return ``c`` with ``c * f == a`` modulo ``q**n``.

    ``f[0]`` must be a unit.  Evaluates the recurrence
    ``c[k] = f[0]^-1 * (a[k] - sum_{e>=1} f[e] c[k-e])`` by splitting the index
    range in halves: once the left half is final, its whole contribution to
    the right half is applied as one (sparse or packed) product.
    """
    f = f[:n]
    uinv = unit_inverse(int(f[0]), modulus)
    if uinv is None:
        raise ZeroDivisionError(f"constant term {f[0]} is not a unit")
    c = zeros(n, modulus)
    m = min(n, len(a))
    c[:m] = a[:m]
    nz = [int(e) for e in np.flatnonzero(f[1:]) + 1]
    sparse = len(nz) <= sparse_limit(n)
    terms = [(e, f[e] if modulus is None else int(f[e])) for e in nz]
    leaf_terms = [(e, v) for e, v in terms if e < LEAF]

    def leaf(lo: int, hi: int) -> None:
        vals = c[lo:hi].tolist()
        for i in range(hi - lo):
            s = vals[i]
            for e, v in leaf_terms:
                if e > i:
                    break
                s -= v * vals[i - e]
            s *= uinv
            vals[i] = s % modulus if modulus is not None else s
        c[lo:hi] = vals

    def solve(lo: int, hi: int) -> None:
        if hi - lo <= LEAF:
            leaf(lo, hi)
            return
        mid = (lo + hi) // 2
        solve(lo, mid)
        width = hi - lo
        if sparse:
            for e, v in terms:
                if e >= width:
                    break
                t0 = max(mid, lo + e)
                t1 = min(hi, mid + e)
                if t0 < t1:
                    c[t0:t1] -= v * c[t0 - e:t1 - e]
        else:
            part = mul(c[lo:mid], f[:width], width, modulus)
            c[mid:hi] -= part[mid - lo:width]
        if modulus is not None:
            np.remainder(c[mid:hi], modulus, out=c[mid:hi])
        solve(mid, hi)

    if n:
        solve(0, n)
    return c


def div_binomial(a: np.ndarray, e: int, sign: int, modulus: int | None) -> np.ndarray:
    """Divide by ``1 - sign * q**e`` (a strided running sum)."""
    n = len(a)
    if e >= n:
        return a.copy()
    rows = -(-n // e)
    grid = zeros(rows * e, modulus)
    grid[:n] = a
    grid = grid.reshape(rows, e)
    if sign == 1:
        grid = np.cumsum(grid, axis=0)
    else:
        alt = np.where(np.arange(rows) % 2 == 0, 1, -1).reshape(rows, 1)
        if modulus is None:
            alt = alt.astype(object)
        grid = np.cumsum(grid * alt, axis=0) * alt
    out = np.ascontiguousarray(grid).reshape(-1)[:n]
    if modulus is None:
        return out.astype(object)
    return normalize(out.astype(np.int64), modulus)
