"""The congruence families as data.

Each family stores its progression as a formula in ``n`` and the family
parameters; instantiation (see :mod:`qcong.theorems.engine`) evaluates it
exactly.  Adding a family never requires touching the engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

VANISHING = "vanishing"
SERIES = "series"
CHARACTERIZATION = "characterization"

GENERALIZED_PENTAGONAL = "generalized_pentagonal"

EXPONENT_PARAMS = ("alpha", "beta", "gamma")


@dataclass(frozen=True)
class PrimeCondition:
    """``p > bound`` and Legendre symbol ``(residue/p) == -1``."""

    bound: int
    residue: int

    def __str__(self):
        return f"p > {self.bound}, ({self.residue}/p) = -1"


@dataclass(frozen=True)
class RhsSpec:
    """``coeff * q**shift * prod f_k ** e`` where each ``k`` may depend on parameters."""

    factors: tuple[tuple[str, int], ...]
    coeff: int = 1
    shift: int = 0


@dataclass(frozen=True)
class TheoremFamily:
    id: str
    target: str
    kind: str
    modulus: int
    progression: str
    params: tuple[str, ...] = ()
    choices: dict[str, tuple[int, ...]] = field(default_factory=dict)
    prime: PrimeCondition | None = None
    rhs: RhsSpec | None = None
    predicate: str | None = None

    @property
    def theorem(self) -> str:
        return self.id.split("/")[0]


def _rhs(*factors, coeff=1, shift=0):
    return RhsSpec(tuple((str(k), e) for k, e in factors), coeff, shift)


THM3 = PrimeCondition(5, -10)
THM5 = PrimeCondition(7, -14)
THM8 = PrimeCondition(5, -5)

A25, A27, A45, A49, P = "a(2,5)", "a(2,7)", "a(4,5)", "a(4,9)", "p"

FAMILIES: tuple[TheoremFamily, ...] = (
    # a(2,5) modulo 2: even arguments
    TheoremFamily("thm1/e1", A25, VANISHING, 2, "4*n+2"),
    TheoremFamily("thm1/e2", A25, CHARACTERIZATION, 2, "4*n", predicate=GENERALIZED_PENTAGONAL),
    # a(2,5) modulo 2: primes with (-10/p) = -1
    TheoremFamily("thm3/e8", A25, SERIES, 2, "4*p**(2*gamma)*n + (7*p**(2*gamma)-1)/6",
                  ("p", "gamma"), prime=THM3, rhs=_rhs((2, 1), (5, 1))),
    TheoremFamily("thm3/e9", A25, VANISHING, 2, "4*p**(2*gamma+1)*(p*n+j) + (7*p**(2*gamma+2)-1)/6",
                  ("p", "gamma", "j"), prime=THM3),
    TheoremFamily("thm3/e8a", A25, SERIES, 2, "20*p**(2*gamma)*n + (55*p**(2*gamma)-1)/6",
                  ("p", "gamma"), prime=THM3, rhs=_rhs((1, 1), (10, 1))),
    TheoremFamily("thm3/e9b", A25, VANISHING, 2, "20*p**(2*gamma+1)*(p*n+j) + (55*p**(2*gamma+2)-1)/6",
                  ("p", "gamma", "j"), prime=THM3),
    TheoremFamily("thm3/s12", A25, SERIES, 2, "4*p**(2*gamma+1)*n + (7*p**(2*gamma+2)-1)/6",
                  ("p", "gamma"), prime=THM3, rhs=_rhs(("2*p", 1), ("5*p", 1))),
    TheoremFamily("thm3/yu1", A25, SERIES, 2, "20*p**(2*gamma+1)*n + (55*p**(2*gamma+2)-1)/6",
                  ("p", "gamma"), prime=THM3, rhs=_rhs(("p", 1), ("10*p", 1))),
    # a(2,5) modulo 4: powers of 5
    TheoremFamily("thm4/e10", A25, SERIES, 4, "4*5**(2*beta)*n + (13*5**(2*beta)-1)/6",
                  ("beta",), rhs=_rhs((1, 1), (20, 3), coeff=2, shift=2)),
    TheoremFamily("thm4/e11", A25, SERIES, 4, "4*5**(2*beta+1)*n + (17*5**(2*beta+1)-1)/6",
                  ("beta",), rhs=_rhs((4, 3), (5, 1), coeff=2)),
    TheoremFamily("thm4/e12", A25, VANISHING, 4, "4*5**(2*beta+1)*n + (w1*5**(2*beta)-1)/6",
                  ("beta", "w1"), choices={"w1": (13, 37)}),
    TheoremFamily("thm4/e13", A25, VANISHING, 4, "4*5**(2*(beta+1))*n + (w3*5**(2*beta+1)-1)/6",
                  ("beta", "w3"), choices={"w3": (41, 89)}),
    TheoremFamily("thm4/abstract", A25, VANISHING, 4, "4*5**(2*beta+1)*n + (37*5**(2*beta)-1)/6",
                  ("beta",)),
    # a(2,7) modulo 2: primes with (-14/p) = -1
    TheoremFamily("thm5/f1", A27, SERIES, 2, "2*p**(2*alpha)*n + (5*p**(2*alpha)-1)/4",
                  ("p", "alpha"), prime=THM5, rhs=_rhs((1, 1), (14, 1))),
    TheoremFamily("thm5/f2", A27, VANISHING, 2, "2*p**(2*alpha+1)*(p*n+j) + (5*p**(2*alpha+2)-1)/4",
                  ("p", "alpha", "j"), prime=THM5),
    TheoremFamily("thm5/f1a", A27, SERIES, 2, "14*p**(2*alpha)*n + (21*p**(2*alpha)-1)/4",
                  ("p", "alpha"), prime=THM5, rhs=_rhs((2, 1), (7, 1))),
    TheoremFamily("thm5/f2a", A27, VANISHING, 2, "14*p**(2*alpha+1)*(p*n+j) + (21*p**(2*alpha+2)-1)/4",
                  ("p", "alpha", "j"), prime=THM5),
    TheoremFamily("thm5/s27", A27, SERIES, 2, "2*p**(2*alpha+1)*n + (5*p**(2*alpha+2)-1)/4",
                  ("p", "alpha"), prime=THM5, rhs=_rhs(("p", 1), ("14*p", 1))),
    TheoremFamily("thm5/jk1", A27, SERIES, 2, "14*p**(2*alpha+1)*n + (21*p**(2*alpha+2)-1)/4",
                  ("p", "alpha"), prime=THM5, rhs=_rhs(("2*p", 1), ("7*p", 1))),
    # a(4,5) modulo 2: powers of 5
    TheoremFamily("thm7/c3", A45, SERIES, 2, "2*5**alpha*n + (5**alpha-1)/2",
                  ("alpha",), rhs=_rhs((1, 1), (5, 1))),
    TheoremFamily("thm7/c4", A45, VANISHING, 2, "2*5**(alpha+1)*n + (w*5**alpha-1)/2",
                  ("alpha", "w"), choices={"w": (13, 17)}),
    # a(4,5) modulo 2: primes with (-5/p) = -1
    TheoremFamily("thm8/c1", A45, SERIES, 2, "2*p**(2*alpha)*n + (p**(2*alpha)-1)/2",
                  ("p", "alpha"), prime=THM8, rhs=_rhs((1, 1), (5, 1))),
    TheoremFamily("thm8/c2", A45, VANISHING, 2, "2*p**(2*alpha+1)*(p*n+j) + (p**(2*alpha+2)-1)/2",
                  ("p", "alpha", "j"), prime=THM8),
    TheoremFamily("thm8/s34", A45, SERIES, 2, "2*p**(2*alpha+1)*n + (p**(2*alpha+2)-1)/2",
                  ("p", "alpha"), prime=THM8, rhs=_rhs(("p", 1), ("5*p", 1))),
    # a(4,9) modulo 2
    TheoremFamily("thm9/i1", A49, VANISHING, 2, "6*n+w1", ("w1",), choices={"w1": (3, 5)}),
    TheoremFamily("thm9/i2", A49, VANISHING, 2, "24*n+19"),
    TheoremFamily("thm9/i3", A49, VANISHING, 2, "6*4**(alpha+2)*n + 20*4**(alpha+1) - 1", ("alpha",)),
    TheoremFamily("thm9/i4", A49, VANISHING, 2, "48*n+w2", ("w2",), choices={"w2": (13, 25, 37)}),
    TheoremFamily("thm9/i5", A49, CHARACTERIZATION, 2, "48*n+1", predicate=GENERALIZED_PENTAGONAL),
    # Ramanujan's congruences for p(n)
    TheoremFamily("classics/p5", P, VANISHING, 5, "5*n+4"),
    TheoremFamily("classics/p7", P, VANISHING, 7, "7*n+5"),
    TheoremFamily("classics/p11", P, VANISHING, 11, "11*n+6"),
)

FAMILY_BY_ID = {f.id: f for f in FAMILIES}
THEOREM_IDS = tuple(dict.fromkeys(f.theorem for f in FAMILIES))
PRIME_CONDITIONS = {"thm3": THM3, "thm5": THM5, "thm8": THM8}


# -- verification plans ---------------------------------------------------
# (family id, parameters, n_max): coefficients n = 0..n_max are checked.

def _quick_plan():
    plan = [
        ("thm1/e1", {}, 2000),
        ("thm1/e2", {}, 500),
        ("thm3/e8", {"p": 17, "gamma": 0}, 499),
        ("thm3/e8", {"p": 17, "gamma": 1}, 40),
        *[("thm3/e9", {"p": 17, "gamma": 0, "j": j}, 30) for j in range(1, 17)],
        ("thm3/e8a", {"p": 17, "gamma": 0}, 499),
        *[("thm3/e9b", {"p": 17, "gamma": 0, "j": j}, 8) for j in range(1, 17)],
        ("thm3/s12", {"p": 17, "gamma": 0}, 199),
        ("thm3/yu1", {"p": 17, "gamma": 0}, 99),
        ("thm4/e10", {"beta": 0}, 499),
        ("thm4/e10", {"beta": 1}, 15),
        ("thm4/e11", {"beta": 0}, 499),
        *[("thm4/e12", {"beta": 0, "w1": w}, 400) for w in (13, 37)],
        *[("thm4/e13", {"beta": 0, "w3": w}, 400) for w in (41, 89)],
        ("thm4/abstract", {"beta": 0}, 1000),
        ("thm5/f1", {"p": 11, "alpha": 0}, 499),
        *[("thm5/f2", {"p": 11, "alpha": 0, "j": j}, 30) for j in range(1, 11)],
        ("thm5/f1a", {"p": 11, "alpha": 0}, 499),
        *[("thm5/f2a", {"p": 11, "alpha": 0, "j": j}, 30) for j in range(1, 11)],
        ("thm5/s27", {"p": 11, "alpha": 0}, 499),
        ("thm5/jk1", {"p": 11, "alpha": 0}, 199),
        *[("thm7/c3", {"alpha": a}, 499) for a in (0, 1, 2)],
        *[("thm7/c4", {"alpha": a, "w": w}, 400) for a in (0, 1) for w in (13, 17)],
        ("thm8/c1", {"p": 11, "alpha": 0}, 499),
        *[("thm8/c2", {"p": 11, "alpha": 0, "j": j}, 30) for j in range(1, 11)],
        ("thm8/s34", {"p": 11, "alpha": 0}, 499),
        *[("thm9/i1", {"w1": w}, 800) for w in (3, 5)],
        ("thm9/i2", {}, 800),
        *[("thm9/i3", {"alpha": a}, 100) for a in (0, 1)],
        *[("thm9/i4", {"w2": w}, 800) for w in (13, 25, 37)],
        ("thm9/i5", {}, 500),
        ("classics/p5", {}, 199),
        ("classics/p7", {}, 142),
        ("classics/p11", {}, 90),
    ]
    return tuple(plan)


def _full_plan():
    plan = [
        ("thm1/e1", {}, 20000),
        ("thm1/e2", {}, 20000),
        *[("thm3/e8", {"p": 17, "gamma": g}, n) for g, n in ((0, 20000), (1, 80))],
        *[("thm3/e9", {"p": 17, "gamma": 0, "j": j}, 80) for j in range(1, 17)],
        ("thm3/e8a", {"p": 17, "gamma": 0}, 4000),
        *[("thm3/e9b", {"p": 17, "gamma": 0, "j": j}, 15) for j in range(1, 17)],
        *[("thm3/e9", {"p": 29, "gamma": 0, "j": j}, 25) for j in range(1, 29)],
        ("thm3/s12", {"p": 17, "gamma": 0}, 1400),
        ("thm3/s12", {"p": 29, "gamma": 0}, 700),
        ("thm3/yu1", {"p": 17, "gamma": 0}, 280),
        *[("thm4/e10", {"beta": b}, n) for b, n in ((0, 20000), (1, 900), (2, 30))],
        *[("thm4/e11", {"beta": b}, n) for b, n in ((0, 4000), (1, 150))],
        *[("thm4/e12", {"beta": b, "w1": w}, n) for b, n in ((0, 4000), (1, 150)) for w in (13, 37)],
        *[("thm4/e13", {"beta": b, "w3": w}, n) for b, n in ((0, 900), (1, 30)) for w in (41, 89)],
        *[("thm4/abstract", {"beta": b}, n) for b, n in ((0, 4000), (1, 150))],
        ("thm5/f1", {"p": 11, "alpha": 0}, 40000),
        ("thm5/f1", {"p": 11, "alpha": 1}, 300),
        *[("thm5/f2", {"p": 11, "alpha": 0, "j": j}, 300) for j in range(1, 11)],
        *[("thm5/f2", {"p": 17, "alpha": 0, "j": j}, 150) for j in range(1, 17)],
        ("thm5/f1a", {"p": 11, "alpha": 0}, 7000),
        *[("thm5/f2a", {"p": 11, "alpha": 0, "j": j}, 50) for j in range(1, 11)],
        *[("thm5/f2a", {"p": 17, "alpha": 0, "j": j}, 20) for j in range(1, 17)],
        ("thm5/s27", {"p": 11, "alpha": 0}, 4000),
        ("thm5/jk1", {"p": 11, "alpha": 0}, 600),
        *[("thm7/c3", {"alpha": a}, n) for a, n in ((0, 40000), (1, 9000), (2, 1900), (3, 390), (4, 75))],
        *[("thm7/c4", {"alpha": a, "w": w}, n) for a, n in ((0, 9000), (1, 1900), (2, 390)) for w in (13, 17)],
        *[("thm8/c1", {"p": p, "alpha": a}, n) for p, a, n in ((11, 0, 40000), (11, 1, 300), (13, 1, 200))],
        *[("thm8/c2", {"p": 11, "alpha": 0, "j": j}, 300) for j in range(1, 11)],
        *[("thm8/c2", {"p": 13, "alpha": 0, "j": j}, 200) for j in range(1, 13)],
        ("thm8/s34", {"p": 13, "alpha": 0}, 3500),
        *[("thm9/i1", {"w1": w}, 15000) for w in (3, 5)],
        ("thm9/i2", {}, 4000),
        *[("thm9/i3", {"alpha": a}, n) for a, n in ((0, 1000), (1, 250), (2, 60))],
        *[("thm9/i4", {"w2": w}, 2000) for w in (13, 25, 37)],
        ("thm9/i5", {}, 2000),
        ("classics/p5", {}, 19000),
        ("classics/p7", {}, 14000),
        ("classics/p11", {}, 9000),
    ]
    return tuple(plan)


PROFILES = {"quick": _quick_plan(), "full": _full_plan()}
PROFILE_BUDGETS = {"quick": 60_000, "full": 100_000}
