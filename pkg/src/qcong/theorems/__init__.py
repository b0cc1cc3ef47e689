"""Congruence families, their instantiation and verification."""

from ..reports import VerificationReport
from .engine import (
    CongruenceClaim,
    SeriesCache,
    instantiate,
    plan_for,
    predicted_residues,
    qualifying_primes,
    verify_all,
    verify_claim,
)
from .numtheory import legendre_symbol
from .proofsteps import CORE_STEP_IDS, PROOF_STEP_IDS, verify_proof_step
from .registry import FAMILIES, FAMILY_BY_ID, THEOREM_IDS, TheoremFamily

__all__ = [
    "CORE_STEP_IDS",
    "FAMILIES",
    "FAMILY_BY_ID",
    "PROOF_STEP_IDS",
    "THEOREM_IDS",
    "CongruenceClaim",
    "SeriesCache",
    "TheoremFamily",
    "VerificationReport",
    "instantiate",
    "legendre_symbol",
    "plan_for",
    "predicted_residues",
    "qualifying_primes",
    "verify_all",
    "verify_claim",
    "verify_proof_step",
]
