"""Action-dimension bounds for the Artin group of a Coxeter matrix.

The report combines: the exact value for spherical systems; the
cohomological-dimension lower bound d+1 from a top-dimensional abelian
subgroup; the obstructor lower bound 2d+2 fired by nonvanishing reduced
top homology mod 2; and, conditionally on the K(pi,1) property, the upper
bounds 2d+2 (double the geometric dimension) and 2d+1 (when top integral
cohomology vanishes and d != 2).  Every bound carries the name of the
criterion that produced it and the hypotheses it rides on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import is_spherical
from .complexes import is_flag, nerve
from .coxeter import CoxeterMatrix
from .errors import InputError
from .homology import TopCohomology, integral_cohomology_top, reduced_betti_mod2

PROVED_SPHERICAL = "ProvedSpherical"
PROVED_FLAG_NERVE = "ProvedFlagNerve"
ASSUMED = "Assumed"
UNKNOWN = "Unknown"

TAG_SPHERICAL = "spherical-exact-formula"
TAG_CD = "top-simplex-abelian-rank"
TAG_OBSTRUCTOR = "doubled-subdivision-obstructor"
TAG_DOUBLE_GD = "twice-geometric-dimension"
TAG_COHOM_REFINEMENT = "integral-top-cohomology-vanishing"
TAG_SALVETTI = "aspherical-presentation-complex"


@dataclass(frozen=True)
class Bound:
    value: int | None
    theorem: str | None = None
    hypotheses: tuple[str, ...] = ()

    def to_dict(self):
        return {"value": self.value, "theorem": self.theorem, "hypotheses": list(self.hypotheses)}


@dataclass
class ActdimReport:
    d: int
    spherical: bool
    k: int
    cd_lower: Bound
    gd: dict
    kpi1_status: str
    betti_top_mod2_reduced: int
    h_top_integral: TopCohomology
    obdim_lower: Bound
    actdim_lower: Bound
    actdim_upper: Bound
    actdim_exact: Bound
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "spherical": self.spherical,
            "k": self.k,
            "cd_lower": self.cd_lower.to_dict(),
            "gd": self.gd,
            "kpi1_status": self.kpi1_status,
            "betti_top_mod2_reduced": self.betti_top_mod2_reduced,
            "h_top_integral": {"rank": self.h_top_integral.rank,
                               "torsion": list(self.h_top_integral.torsion)},
            "obdim_lower": self.obdim_lower.to_dict(),
            "actdim_lower": self.actdim_lower.to_dict(),
            "actdim_upper": self.actdim_upper.to_dict(),
            "actdim_exact": self.actdim_exact.to_dict(),
            "notes": list(self.notes),
        }


def spherical_actdim(M: CoxeterMatrix) -> int:
    """k + sum of 2*d_i over the k irreducible components (exact value)."""
    if not is_spherical(M, M.generators):
        raise InputError("the whole generating set is not spherical")
    blocks = M.components(M.generators)
    return len(blocks) + sum(2 * (len(b) - 1) for b in blocks)


def kpi1_sufficient(M: CoxeterMatrix, assume: bool = False) -> str:
    """Which sufficient condition (if any) settles the K(pi,1) property.

    Spherical systems are covered by asphericity of the reflection
    arrangement complement; flag nerves by the standard flag-complex case.
    No other criterion is consulted; `assume` records a user override.
    """
    if is_spherical(M, M.generators):
        return PROVED_SPHERICAL
    if is_flag(nerve(M)):
        return PROVED_FLAG_NERVE
    return ASSUMED if assume else UNKNOWN


def action_dimension_report(M: CoxeterMatrix, assume_kpi1: bool = False) -> ActdimReport:
    L = nerve(M)
    d = L.dim
    blocks = M.components(M.generators)
    k = len(blocks)
    spherical = is_spherical(M, M.generators)
    status = kpi1_sufficient(M, assume=assume_kpi1)
    betti = reduced_betti_mod2(L)
    top_betti = betti[d]
    top_cohom = integral_cohomology_top(L)
    notes: list[str] = []

    cd_lower = Bound(d + 1, TAG_CD)

    if spherical:
        exact = spherical_actdim(M)
        gd = {"value": d + 1, "theorem": TAG_SALVETTI, "hypotheses": []}
        obdim_lower = Bound(exact, TAG_SPHERICAL)
        return ActdimReport(
            d=d, spherical=True, k=k,
            cd_lower=cd_lower, gd=gd, kpi1_status=status,
            betti_top_mod2_reduced=top_betti, h_top_integral=top_cohom,
            obdim_lower=obdim_lower,
            actdim_lower=Bound(exact, TAG_SPHERICAL),
            actdim_upper=Bound(exact, TAG_SPHERICAL),
            actdim_exact=Bound(exact, TAG_SPHERICAL),
            notes=notes,
        )

    if top_betti != 0:
        obdim_lower = Bound(2 * d + 2, TAG_OBSTRUCTOR)
        actdim_lower = Bound(2 * d + 2, TAG_OBSTRUCTOR)
    else:
        obdim_lower = Bound(None)
        actdim_lower = Bound(d + 1, TAG_CD)

    kpi1_ok = status in (PROVED_SPHERICAL, PROVED_FLAG_NERVE, ASSUMED)
    hyp = ("K(pi,1) property",) if status == ASSUMED else ()
    if kpi1_ok:
        gd = {"value": d + 1, "theorem": TAG_SALVETTI, "hypotheses": list(hyp)}
        upper_value = 2 * d + 2
        upper_tag = TAG_DOUBLE_GD
        if top_cohom.rank == 0 and not top_cohom.torsion:
            if d != 2:
                upper_value = 2 * d + 1
                upper_tag = TAG_COHOM_REFINEMENT
            else:
                notes.append("top-cohomology refinement requires d != 2; kept the 2d+2 upper bound")
        actdim_upper = Bound(upper_value, upper_tag, hyp)
    else:
        gd = {"value": None, "lower": d + 1, "theorem": TAG_CD, "hypotheses": []}
        actdim_upper = Bound(None)

    exact_value = actdim_lower.value if (
        actdim_upper.value is not None and actdim_lower.value == actdim_upper.value
    ) else None
    actdim_exact = Bound(exact_value, actdim_upper.theorem if exact_value is not None else None,
                         actdim_upper.hypotheses if exact_value is not None else ())

    return ActdimReport(
        d=d, spherical=False, k=k,
        cd_lower=cd_lower, gd=gd, kpi1_status=status,
        betti_top_mod2_reduced=top_betti, h_top_integral=top_cohom,
        obdim_lower=obdim_lower,
        actdim_lower=actdim_lower,
        actdim_upper=actdim_upper,
        actdim_exact=actdim_exact,
        notes=notes,
    )
