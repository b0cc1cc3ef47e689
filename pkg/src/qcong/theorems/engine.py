"""Claim instantiation and the verification engine."""

from __future__ import annotations

import os
import re
import threading
import time
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

import numpy as np

from ..dissection import gen_pentagonal_index
from ..errors import InstantiationError, ResourceError
from ..qproducts import EtaTerm, expand_term, grs_generating, partition_generating
from ..reports import FAIL, PASS, SKIPPED, VerificationReport
from ..series import ZZ, CoefficientRing, IntegersMod, Series
from .formula import evaluate, linear_in_n
from .numtheory import is_prime, legendre_symbol, primes_up_to
from .registry import (
    EXPONENT_PARAMS,
    FAMILIES,
    FAMILY_BY_ID,
    GENERALIZED_PENTAGONAL,
    PRIME_CONDITIONS,
    PROFILE_BUDGETS,
    PROFILES,
    SERIES,
    VANISHING,
    TheoremFamily,
)

BUDGET_ENV = "QC_BUDGET"
MAX_COUNTEREXAMPLES = 25
# Failing coefficients below this index are also reported as exact integers.
EXACT_LIFT_LIMIT = 4000


@dataclass(frozen=True)
class CongruenceClaim:
    family: str
    kind: str
    target: str
    A: int
    B: int
    modulus: int
    params: tuple[tuple[str, int], ...] = ()
    rhs: EtaTerm | None = None
    predicate: str | None = None

    def __post_init__(self):
        if self.A < 1 or self.B < 0 or self.modulus < 2:
            raise InstantiationError(f"invalid progression {self.A}n+{self.B} mod {self.modulus}")

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    def argument(self, n: int) -> int:
        return self.A * n + self.B

    def order_needed(self, n_max: int) -> int:
        return self.A * n_max + self.B + 1

    @property
    def description(self) -> str:
        lhs = f"{self.target}({self.A}n+{self.B})"
        if self.kind == VANISHING:
            return f"{lhs} = 0 (mod {self.modulus})"
        if self.kind == SERIES:
            return f"sum {lhs} q^n = {self.rhs} (mod {self.modulus})"
        return f"{lhs} odd iff n is a generalized pentagonal number"


# -- primes and instantiation ---------------------------------------------

def _condition_for(family_id: str):
    theorem = family_id.split("/")[0]
    if family_id in FAMILY_BY_ID:
        return FAMILY_BY_ID[family_id].prime
    if theorem in PRIME_CONDITIONS:
        return PRIME_CONDITIONS[theorem]
    if any(f.theorem == theorem for f in FAMILIES):
        return None
    raise KeyError(f"unknown family {family_id!r}")


def qualifying_primes(family_id: str, limit: int) -> list[int]:
    """Primes ``p <= limit`` meeting the family's hypothesis (empty when it has none)."""
    cond = _condition_for(family_id)
    if cond is None:
        return []
    return [p for p in primes_up_to(limit)
            if p > cond.bound and legendre_symbol(cond.residue, p) == -1]


def get_family(family_id: str) -> TheoremFamily:
    try:
        return FAMILY_BY_ID[family_id]
    except KeyError:
        raise KeyError(f"unknown family {family_id!r}") from None


def instantiate(family: TheoremFamily | str, params: Mapping[str, int] | None = None) -> CongruenceClaim:
    if isinstance(family, str):
        family = get_family(family)
    params = dict(params or {})
    missing = set(family.params) - set(params)
    extra = set(params) - set(family.params)
    if missing or extra:
        raise InstantiationError(f"{family.id} takes {family.params}; missing {sorted(missing)}, unexpected {sorted(extra)}")
    for name, value in params.items():
        if not isinstance(value, int):
            raise InstantiationError(f"{name} must be an integer")
        if name in EXPONENT_PARAMS and value < 0:
            raise InstantiationError(f"{name} must be >= 0")
        if name in family.choices and value not in family.choices[name]:
            raise InstantiationError(f"{name} must be one of {family.choices[name]}")
    if family.prime is not None:
        p = params["p"]
        if not is_prime(p) or p <= family.prime.bound:
            raise InstantiationError(f"{family.id} needs a prime p > {family.prime.bound}, got {p}")
        if legendre_symbol(family.prime.residue, p) != -1:
            raise InstantiationError(f"{family.id} needs ({family.prime.residue}/{p}) = -1")
    if "j" in params and not 1 <= params["j"] <= params["p"] - 1:
        raise InstantiationError(f"j must lie in [1, p-1], got {params['j']}")

    A, B = linear_in_n(family.progression, params)
    rhs = None
    if family.rhs is not None:
        exps: dict[int, int] = {}
        for k_expr, e in family.rhs.factors:
            k = evaluate(k_expr, params)
            exps[k] = exps.get(k, 0) + e
        rhs = EtaTerm.of(exps, family.rhs.coeff, family.rhs.shift)
    return CongruenceClaim(
        family=family.id,
        kind=family.kind,
        target=family.target,
        A=A,
        B=B,
        modulus=family.modulus,
        params=tuple((name, params[name]) for name in family.params),
        rhs=rhs,
        predicate=family.predicate,
    )


# -- target series --------------------------------------------------------

_GRS = re.compile(r"a\((\d+),(\d+)\)$")


def build_target(target: str, order: int, ring: CoefficientRing) -> Series:
    if target == "p":
        return partition_generating(order, ring)
    m = _GRS.match(target)
    if not m:
        raise KeyError(f"unknown target {target!r}")
    return grs_generating(int(m.group(1)), int(m.group(2)), order, ring)


class SeriesCache:
    """Target expansions keyed by ``(target, ring)``.

    The largest expansion computed so far is kept and truncated on demand,
    which is sound because truncation commutes with every operation.
    Readers never block each other; one lock serializes insertion.
    """

    def __init__(self):
        self._store: dict[tuple[str, CoefficientRing], Series] = {}
        self._lock = threading.Lock()

    def get(self, target: str, ring: CoefficientRing, order: int) -> Series:
        key = (target, ring)
        hit = self._store.get(key)
        if hit is not None and hit.order >= order:
            return hit if hit.order == order else hit.truncate(order)
        with self._lock:
            hit = self._store.get(key)
            if hit is None or hit.order < order:
                hit = build_target(target, order, ring)
                self._store[key] = hit
        return hit if hit.order == order else hit.truncate(order)

    def peek(self, target: str, ring: CoefficientRing, order: int) -> Series | None:
        hit = self._store.get((target, ring))
        if hit is not None and hit.order >= order:
            return hit
        return None

    def clear(self):
        with self._lock:
            self._store.clear()


DEFAULT_CACHE = SeriesCache()


def resolve_budget(budget: int | None = None, profile: str = "quick") -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return PROFILE_BUDGETS[profile]


# -- verification ---------------------------------------------------------

def predicted_residues(claim: CongruenceClaim, n_max: int) -> np.ndarray:
    """What the claim asserts for ``n = 0..n_max``, reduced mod ``claim.modulus``."""
    n = n_max + 1
    if claim.kind == VANISHING:
        return np.zeros(n, dtype=np.int64)
    if claim.kind == SERIES:
        return np.asarray(expand_term(claim.rhs, n, IntegersMod(claim.modulus)).coeffs, dtype=np.int64)
    if claim.predicate == GENERALIZED_PENTAGONAL:
        return np.array([1 if gen_pentagonal_index(k) is not None else 0 for k in range(n)], dtype=np.int64)
    raise ValueError(f"unknown predicate {claim.predicate!r}")


def verify_claim(claim: CongruenceClaim, n_max: int, budget: int | None = None,
                 cache: SeriesCache | None = None) -> VerificationReport:
    """Check ``claim`` for ``n = 0..n_max`` against the expanded target series."""
    cache = cache or DEFAULT_CACHE
    budget = resolve_budget(budget)
    order = claim.order_needed(n_max)
    if order > budget:
        raise ResourceError(f"{claim.family} needs series order {order} > budget {budget}")
    t0 = time.perf_counter()
    ring = IntegersMod(claim.modulus)
    series = cache.get(claim.target, ring, order)
    observed = np.asarray(series.coeffs[claim.B::claim.A][:n_max + 1], dtype=np.int64)
    expected = predicted_residues(claim, n_max)
    bad = np.flatnonzero(observed != expected)
    counterexamples = []
    if len(bad):
        shown = [int(k) for k in bad[:MAX_COUNTEREXAMPLES]]
        exact = None
        top = claim.argument(shown[-1]) + 1
        if top <= EXACT_LIFT_LIMIT:
            exact = cache.get(claim.target, ZZ, top)
        for k in shown:
            arg = claim.argument(k)
            entry: dict[str, Any] = {"n": k, "argument": arg,
                                     "observed": int(observed[k]), "expected": int(expected[k])}
            if exact is not None:
                entry["exact"] = exact[arg]
            counterexamples.append(entry)
    return VerificationReport(
        claim=claim.description,
        family=claim.family,
        params=claim.param_dict,
        n_checked=n_max + 1,
        outcome=FAIL if len(bad) else PASS,
        counterexamples=counterexamples,
        order=order,
        millis=round((time.perf_counter() - t0) * 1000, 3),
    )


def plan_for(profile: str = "quick", theorem: str | None = None, n_max: int | None = None):
    """The ``(claim, n_max)`` pairs a profile checks, optionally for one theorem."""
    if profile not in PROFILES:
        raise KeyError(f"unknown profile {profile!r}")
    out = []
    for family_id, params, n in PROFILES[profile]:
        if theorem not in (None, "all") and family_id.split("/")[0] != theorem and family_id != theorem:
            continue
        out.append((instantiate(family_id, params), n if n_max is None else n_max))
    if not out:
        raise KeyError(f"no claims registered for {theorem!r}")
    return out


def _skipped(claim: CongruenceClaim, n_max: int, reason: str) -> VerificationReport:
    return VerificationReport(
        claim=claim.description, family=claim.family, params=claim.param_dict,
        n_checked=0, outcome=SKIPPED, order=claim.order_needed(n_max), reason=reason,
    )


def verify_all(profile: str = "quick", theorem: str | None = None, n_max: int | None = None,
               budget: int | None = None, cache: SeriesCache | None = None) -> list[VerificationReport]:
    """Run the registry plan; reports come back in registry order."""
    cache = cache or DEFAULT_CACHE
    budget = resolve_budget(budget, profile)
    plan = plan_for(profile, theorem, n_max)
    # Expand each target once, at the largest order any claim needs.
    need: dict[tuple[str, int], int] = {}
    for claim, n in plan:
        order = claim.order_needed(n)
        if order <= budget:
            key = (claim.target, claim.modulus)
            need[key] = max(need.get(key, 0), order)
    for (target, modulus), order in sorted(need.items()):
        cache.get(target, IntegersMod(modulus), order)
    reports = []
    for claim, n in plan:
        try:
            reports.append(verify_claim(claim, n, budget, cache))
        except ResourceError as exc:
            reports.append(_skipped(claim, n, str(exc)))
    return reports


def summarize(reports: Iterable[VerificationReport]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for r in reports:
        counts[r.outcome] += 1
    return counts
