"""Intermediate identities and congruences used on the way to the theorems.

Each step says: extracting ``A*n + B`` from a target series gives a sum of
eta terms, either exactly (``modulus=None``) or modulo a small integer.  The
left side always comes from the Pochhammer form of the target, the right side
from eta quotients, so a pass compares two independent expansions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..dissection import Progression, compare_sides, extract
from ..errors import PreconditionError
from ..qproducts import EtaTerm, expand_terms
from ..reports import VerificationReport
from ..series import ZZ, IntegersMod
from .engine import DEFAULT_CACHE, SeriesCache

DEFAULT_STEP_ORDER = 300


def _e(exps, coeff=1, shift=0):
    return EtaTerm.of(exps, coeff, shift)


@dataclass(frozen=True)
class ProofStep:
    id: str
    target: str
    A: int
    B: int
    terms: tuple[EtaTerm, ...] = ()
    modulus: int | None = None
    # For a step comparing two progressions of the same target.
    other: tuple[int, int] | None = None

    @property
    def exact(self) -> bool:
        return self.modulus is None

    @property
    def description(self) -> str:
        lhs = f"sum {self.target}({self.A}n+{self.B}) q^n"
        if self.other is not None:
            rhs = f"sum {self.target}({self.other[0]}n+{self.other[1]}) q^n"
        else:
            rhs = " + ".join(str(t) for t in self.terms).replace("+ -", "- ")
        tail = "" if self.exact else f" (mod {self.modulus})"
        return f"{lhs} = {rhs}{tail}"


A25, A27, A45, A49 = "a(2,5)", "a(2,7)", "a(4,5)", "a(4,9)"

PROOF_STEPS: tuple[ProofStep, ...] = (
    ProofStep("s1", A25, 1, 0, (_e({2: 2, 5: 1, 20: 1, 1: -1, 4: -1, 10: -2}),)),
    ProofStep("j1", A25, 1, 0, (
        _e({8: 1, 20: 3, 4: -1, 10: -2, 40: -1}),
        _e({4: 2, 40: 1, 2: -1, 8: -1, 10: -1}, shift=1),
    )),
    ProofStep("s2", A25, 2, 0, (_e({4: 1, 10: 3, 2: -1, 5: -2, 20: -1}),)),
    ProofStep("s3", A25, 2, 0, (_e({2: 1}),), 2),
    ProofStep("s4", A25, 2, 1, (_e({2: 2, 20: 1, 1: -1, 4: -1, 5: -1}),)),
    ProofStep("s5", A25, 2, 1, (_e({1: 1, 5: 3, 2: -1}),), 2),
    ProofStep("s6", A25, 2, 1, (
        _e({2: 2, 10: 1}),
        _e({2: 1, 10: 2, 20: 1, 4: -1}, coeff=-1, shift=1),
    ), 2),
    ProofStep("s7", A25, 4, 1, (_e({2: 1, 5: 1}),), 2),
    ProofStep("s14", A25, 2, 0, (
        _e({4: 1, 40: 5, 2: -1, 10: -2, 20: -1, 80: -2}),
        _e({4: 1, 20: 1, 80: 2, 2: -1, 10: -2, 40: -1}, coeff=2, shift=5),
    )),
    ProofStep("s15", A25, 4, 2, (_e({2: 1, 10: 1, 40: 2, 1: -1, 5: -2, 20: -1}, coeff=2, shift=2),)),
    ProofStep("s16", A25, 4, 2, (_e({1: 1, 20: 3}, coeff=2, shift=2),), 4),
    ProofStep("s20", A27, 1, 0, (_e({2: 2, 7: 1, 28: 1, 1: -1, 4: -1, 14: -2}),)),
    ProofStep("s21", A27, 1, 0, (_e({1: 1, 7: 1, 2: -1}),), 2),
    ProofStep("s22", A27, 1, 0, (
        _e({14: 1, 16: 2, 56: 5, 4: -1, 8: -1, 28: -3, 112: -2}),
        _e({4: 1, 28: 1, 2: -1}, coeff=-1, shift=1),
        _e({8: 5, 14: 1, 112: 2, 4: -3, 16: -2, 28: -1, 56: -1}, shift=6),
    ), 2),
    ProofStep("s23", A27, 2, 1, (_e({1: 1, 14: 1}),), 2),
    ProofStep("s29", A45, 1, 0, (_e({2: 1, 4: 1, 5: 1, 40: 1, 1: -1, 8: -1, 10: -1, 20: -1}),)),
    ProofStep("s30", A45, 1, 0, (
        _e({4: 1, 20: 1, 2: -1, 10: -1}),
        _e({4: 4, 40: 2, 2: -2, 8: -2, 20: -2}, shift=1),
    )),
    ProofStep("s31", A45, 2, 0, (_e({2: 1, 10: 1, 1: -1, 5: -1}),)),
    ProofStep("s32", A45, 2, 0, (_e({1: 1, 5: 1}),), 2),
    ProofStep("s36", A49, 1, 0, (_e({2: 1, 4: 1, 9: 1, 72: 1, 1: -1, 8: -1, 18: -1, 36: -1}),)),
    ProofStep("s37", A49, 1, 0, (
        _e({4: 1, 12: 3, 72: 1, 2: -1, 6: -1, 8: -1, 36: -2}),
        _e({4: 3, 6: 1, 72: 1, 2: -2, 8: -1, 12: -1, 18: -1}, shift=1),
    )),
    ProofStep("s38", A49, 2, 1, (_e({9: 3, 3: -1}),), 2),
    ProofStep("s39", A49, 6, 1, (_e({3: 3, 1: -1}),), 2),
    ProofStep("s40", A49, 6, 1, (
        _e({4: 3, 6: 2, 2: -2, 12: -1}),
        _e({12: 3, 4: -1}, shift=1),
    ), 2),
    ProofStep("s41", A49, 12, 7, (_e({6: 3, 2: -1}),), 2),
    ProofStep("s42", A49, 24, 7, (_e({3: 3, 1: -1}),), 2),
    ProofStep("s43", A49, 24, 7, modulus=2, other=(6, 1)),
    # The alpha = 1 case of the induction built on s43 (alpha = 0 is s43 itself).
    ProofStep("s44", A49, 96, 31, modulus=2, other=(6, 1)),
    ProofStep("s45", A49, 12, 1, (_e({4: 1}),), 2),
)

PROOF_STEP_BY_ID = {s.id: s for s in PROOF_STEPS}
PROOF_STEP_IDS = tuple(PROOF_STEP_BY_ID)
# The unconditional ones singled out for the acceptance gate.
CORE_STEP_IDS = ("j1", "s2", "s4", "s14", "s15", "s30", "s31", "s37", "s40", "s41", "s45")


def verify_proof_step(step_id: str, order: int = DEFAULT_STEP_ORDER,
                      cache: SeriesCache | None = None) -> VerificationReport:
    """Compare the first ``order`` coefficients of both sides of a proof step."""
    try:
        step = PROOF_STEP_BY_ID[step_id]
    except KeyError:
        raise KeyError(f"unknown proof step {step_id!r}") from None
    if order < 1:
        raise PreconditionError("order must be >= 1")
    cache = cache or DEFAULT_CACHE
    t0 = time.perf_counter()
    ring = ZZ if step.exact else IntegersMod(step.modulus)
    A, B = step.A, step.B
    if step.other is not None:
        A2, B2 = step.other
        top = max(A * (order - 1) + B, A2 * (order - 1) + B2) + 1
        full = cache.get(step.target, ring, top)
        lhs = extract(full, Progression(A, B)).truncate(order)
        rhs = extract(full, Progression(A2, B2)).truncate(order)
    else:
        full = cache.get(step.target, ring, A * (order - 1) + B + 1)
        lhs = extract(full, Progression(A, B))
        rhs = expand_terms(step.terms, order, ring)
    return compare_sides(step.description, "proof-step", {"id": step.id}, lhs, rhs, order, t0)
