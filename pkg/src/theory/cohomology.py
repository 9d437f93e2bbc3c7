"""
Cohomological relations that the numerical data of a fake quadric pins down.

Nothing here returns h0 or h1 as a bare number outside the Kodaira
vanishing regime; elsewhere only lower bounds and relations between h0 and
h1 are reported.
"""
from __future__ import annotations
from typing import Optional
import logging

from ..models.errors import PreconditionError
from ..models.lattice import DivisorClass, SurfaceModel
from ..models.reports import (
    BoundedCohomologyCase,
    CaseTag,
    CohomologyBounds,
    Relation,
    RelationKind,
)
from .positivity import curve_class_admissible, effective_necessary
from .riemann_roch import euler_characteristic

logger = logging.getLogger(__name__)

PENCIL_H0_BOUND = 2
KODAIRA_SEARCH_BOX = 20


def h2_vanishes(model: SurfaceModel, d: DivisorClass) -> bool:
    """
    Serre duality: h2(D) = h0(K - D), which is zero whenever K - D fails the
    effectiveness condition. False means "not decided here", never "nonzero".
    """
    return not effective_necessary(model, model.canonical - d)


def h0_lower_bound(model: SurfaceModel, d: DivisorClass) -> Optional[int]:
    """
    Lower bound h0(D) >= chi(D) where h2(D) vanishes and chi(D) > 0.

    Holds for x, y >= 2 on the even model and for x + y > 1, x - y > 2 on the
    odd model, in both cases excluding D = K.

    Returns:
        chi(D), or None when the hypotheses fail.
    """
    if d == model.canonical:
        return None
    x, y = d.x, d.y
    if model.is_even:
        applies = x >= 2 and y >= 2
    else:
        applies = x + y > 1 and x - y > 2
    return euler_characteristic(model, d) if applies else None


def kodaira_exact_h0(model: SurfaceModel, d: DivisorClass) -> Optional[int]:
    """
    h0(D) = chi(D) when D - K is ample (Kodaira vanishing kills h1 and h2).
    The even condition is x, y >= 3, the odd one x - 3 > |y + 1|.
    """
    x, y = d.x, d.y
    if model.is_even:
        applies = x >= 3 and y >= 3
    else:
        applies = x - 3 > abs(y + 1)
    return euler_characteristic(model, d) if applies else None


def cohomology_bounds(model: SurfaceModel, d: DivisorClass) -> CohomologyBounds:
    return CohomologyBounds(
        h2_zero=h2_vanishes(model, d),
        h0_lower=h0_lower_bound(model, d),
        h0_exact=kodaira_exact_h0(model, d),
        chi=euler_characteristic(model, d),
    )


def kodaira_minimum(model: SurfaceModel) -> int:
    """
    Smallest h0 attained in the Kodaira regime: 4 at (3,3) on the even model,
    3 at (4,-1) on the odd model. chi grows away from the regime boundary,
    so a small box around K is exhaustive.
    """
    best: Optional[int] = None
    best_class: Optional[DivisorClass] = None
    for x in range(0, KODAIRA_SEARCH_BOX + 1):
        for y in range(-KODAIRA_SEARCH_BOX, KODAIRA_SEARCH_BOX + 1):
            d = DivisorClass(x, y)
            value = kodaira_exact_h0(model, d)
            if value is not None and (best is None or value < best):
                best, best_class = value, d
    logger.debug(f"Kodaira minimum on the {model.lattice.value} model: {best} at {best_class}")
    return best


def _pencil_relation(chi: int) -> Relation:
    # D = kR on a pencil ray: chi = -(k - 1) for kH, kF, k(H - F); h1 - h0 = -chi.
    return Relation(RelationKind.H1_EQ_H0_PLUS_SHIFT, shift=-chi, h0_at_most=PENCIL_H0_BOUND, conditional=True)


def bounded_cohomology_case(model: SurfaceModel, c: DivisorClass) -> BoundedCohomologyCase:
    """
    Classify an admissible curve class by the relation between h0 and h1 it
    satisfies. The cases are tried in order and the first match wins.

    Even model:
        x, y >= 2      -> ChiPositive, h1 < h0
        x = 1 or y = 1 -> ChiZero, h1 = h0
        x = 0 or y = 0 -> PencilRay, h1 = h0 + (k - 1), h0 <= 2
    Odd model:
        x + y > 1 and x - y > 2 -> ChiPositive
        x + y = 1 or x - y = 2  -> ChiZero
        x = y or x = -y         -> PencilRay, h1 = h0 + (2k - 1), h0 <= 2
        x = y + 1               -> UndeterminedOddDiagonalShift, h0 - h1 = chi

    Raises:
        PreconditionError: If c is not an admissible curve class.
    """
    if not curve_class_admissible(model, c):
        raise PreconditionError(f"Class {c} is not an admissible curve class on the {model.lattice.value} model")

    chi = euler_characteristic(model, c)
    x, y = c.x, c.y

    if model.is_even:
        if x >= 2 and y >= 2:
            tag, relation, rule = CaseTag.CHI_POSITIVE, Relation(RelationKind.H1_LT_H0), "x >= 2 and y >= 2"
        elif x == 1 or y == 1:
            tag, relation, rule = CaseTag.CHI_ZERO, Relation(RelationKind.H1_EQ_H0), "x = 1 or y = 1"
        else:
            tag, relation, rule = CaseTag.PENCIL_RAY, _pencil_relation(chi), "x = 0 or y = 0"
    else:
        if x + y > 1 and x - y > 2:
            tag, relation, rule = CaseTag.CHI_POSITIVE, Relation(RelationKind.H1_LT_H0), "x + y > 1 and x - y > 2"
        elif x + y == 1 or x - y == 2:
            tag, relation, rule = CaseTag.CHI_ZERO, Relation(RelationKind.H1_EQ_H0), "x + y = 1 or x - y = 2"
        elif x == y or x == -y:
            tag, relation, rule = CaseTag.PENCIL_RAY, _pencil_relation(chi), "x = y or x = -y"
        else:
            tag = CaseTag.UNDETERMINED_ODD_DIAGONAL_SHIFT
            relation = Relation(RelationKind.H0_MINUS_H1_EQ_CHI)
            rule = "x = y + 1"

    logger.debug(f"{c} on the {model.lattice.value} model: {tag.wire_name} (chi={chi})")
    return BoundedCohomologyCase(case_tag=tag, chi=chi, relation=relation, lattice=model.lattice, divisor=c, rule=rule)
