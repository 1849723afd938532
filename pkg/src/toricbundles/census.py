"""The counting step function kappa -> N(a; kappa).

A bundle tuple (b; kappa) exists only for kappa strictly above
K_b = sigma_1(b) - s, so the number of toric structures on the deformation
class of a at a given kappa is the number of class members b with K_b < kappa.
The census groups the class by these thresholds into breakpoints; for s >= 2
the function stabilizes at the finite class size once kappa passes
(r + 1 - 1/r) sigma_1(a) - s, while for s = 1 it grows without bound.
"""

from dataclasses import dataclass
from fractions import Fraction

from .equiv import deformation_class, k_min
from .errors import CapRequired, ZeroVector
from .symfun import Vec, exponent_vector


class InfiniteMarker:
    """Singleton standing for an infinite limit count (the s = 1 case)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "InfiniteMarker()"

    def __str__(self):
        return "infinite"


INFINITE = InfiniteMarker()


@dataclass(frozen=True)
class Breakpoint:
    """One jump of the step function: the members whose threshold equals kappa
    (they are counted for every kappa' > kappa)."""

    kappa: int
    new_members: tuple[Vec, ...]


@dataclass(frozen=True)
class StepReport:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CensusResult:
    """The step function of one deformation class, as sorted breakpoints."""

    r: int
    s: int
    query: Vec
    breakpoints: tuple[Breakpoint, ...]
    stable_count: "int | InfiniteMarker"
    stabilization_threshold: "Fraction | None"
    complete: bool
    members: tuple[tuple[Vec, int], ...]

    @property
    def vectors(self) -> tuple[Vec, ...]:
        """The member vectors without their shifts."""
        return tuple(b for b, _ in self.members)

    def count(self, kappa) -> int:
        """N(kappa): members with threshold strictly below kappa."""
        kappa = Fraction(kappa)
        return sum(len(bp.new_members) for bp in self.breakpoints if bp.kappa < kappa)


def census(a, s: int, sigma1_cap=None, prune: bool = True) -> CensusResult:
    """Group the deformation class of a by the thresholds K_b = sigma_1(b) - s."""
    a = exponent_vector(a)
    cls = deformation_class(a, s, sigma1_cap, prune)
    groups: dict[int, list[Vec]] = {}
    for b, _ in cls.members:
        groups.setdefault(sum(b) - s, []).append(b)
    breakpoints = tuple(
        Breakpoint(kap, tuple(sorted(groups[kap]))) for kap in sorted(groups)
    )
    if s == 1:
        stable: "int | InfiniteMarker" = INFINITE
        threshold = None
    else:
        stable = len(cls.members)
        r = len(a)
        threshold = (r + 1 - Fraction(1, r)) * sum(a) - s
    return CensusResult(
        len(a), s, a, breakpoints, stable, threshold, cls.complete, cls.members
    )


def count_at(a, s: int, kappa, sigma1_cap=None, prune: bool = True) -> int:
    """N(a; kappa) exactly; for s = 1 the cap must reach kappa + s so that no
    member below the threshold is missed."""
    kappa = Fraction(kappa)
    if s == 1 and (sigma1_cap is None or sigma1_cap < kappa + s):
        raise CapRequired(
            f"counting at kappa = {kappa} with s = 1 needs sigma1_cap >= "
            f"kappa + s = {kappa + s}"
        )
    return census(a, s, sigma1_cap, prune).count(kappa)


def count_at_infinity(a, s: int, prune: bool = True):
    """The limit count: the class size for s >= 2, infinite for s = 1."""
    a = exponent_vector(a)
    if not any(a):
        raise ZeroVector(
            "a = 0 is a product of projective spaces; counting applies to "
            "nonzero a only"
        )
    if s == 1:
        return INFINITE
    return len(deformation_class(a, s, prune=prune).members)


def is_fano(a, s: int) -> bool:
    """Whether the bundle with twisting a over base dimension s is Fano."""
    return k_min(a, s) < 1


def is_monotone(kappa) -> bool:
    """Whether the symplectic form is monotone (kappa = 1 exactly)."""
    return Fraction(kappa) == 1


def verify_step_structure(res: CensusResult) -> StepReport:
    """Check the step-function shape for s >= 2: all breakpoints congruent to
    the smallest one mod r+1, and jumps of size at most 1 when r = s."""
    if res.s == 1:
        raise ValueError("the step structure is established for s >= 2 only")
    if not res.breakpoints:
        return StepReport(True)
    base = res.breakpoints[0].kappa
    mod = res.r + 1
    for bp in res.breakpoints:
        if (bp.kappa - base) % mod:
            return StepReport(
                False,
                f"breakpoint {bp.kappa} is not congruent to the smallest "
                f"breakpoint {base} mod {mod}",
            )
        if res.r == res.s and len(bp.new_members) > 1:
            return StepReport(
                False,
                f"jump of size {len(bp.new_members)} at kappa = {bp.kappa} "
                f"although r = s = {res.r}",
            )
    return StepReport(True)
