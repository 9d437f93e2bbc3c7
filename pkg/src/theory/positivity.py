from __future__ import annotations
from typing import List
import logging

from ..models.errors import ModelMismatchError, PreconditionError
from ..models.lattice import DivisorClass, SurfaceModel
from ..models.reports import ConeRays, ExclusionReport, NegativeCurveReport, PositivityVerdict
from .intersection import intersect, k_dot, self_intersection
from .riemann_roch import arithmetic_genus

logger = logging.getLogger(__name__)

# Citation tags for PositivityVerdict.governing_rule. Part i is the effectiveness
# condition, part ii the ampleness criterion.
RULE_EVEN_EFFECTIVE = "thm-2.2-i"
RULE_EVEN_AMPLE = "thm-2.2-ii"
RULE_ODD_EFFECTIVE = "thm-3.8-i"
RULE_ODD_AMPLE = "thm-3.8-ii"

# Genus-zero instantiation of K.C <= Delta + 2g - 2 - chi_top.
RATIONAL_CURVE_GENUS = 0
RATIONAL_CURVE_CHI_TOP = 2

_EVEN_RAYS = [DivisorClass(0, 1), DivisorClass(1, 0)]
_ODD_RAYS = [DivisorClass(1, -1), DivisorClass(1, 1)]


def extremal_rays(model: SurfaceModel) -> List[DivisorClass]:
    """Primitive generators of the closed cone of curves, sorted lexicographically."""
    return list(_EVEN_RAYS if model.is_even else _ODD_RAYS)


def curve_class_admissible(model: SurfaceModel, c: DivisorClass) -> bool:
    """
    Whether c can be the class of a reduced irreducible curve.

    Even: (x >= 0 and y > 0) or (x > 0 and y >= 0).
    Odd:  x >= |y| and c != 0 (no negative curves exist on the odd model).
    """
    x, y = c.x, c.y
    if model.is_even:
        return (x >= 0 and y > 0) or (x > 0 and y >= 0)
    return x >= abs(y) and not c.is_zero


def rational_curve_exclusion(model: SurfaceModel, c: DivisorClass) -> ExclusionReport:
    """
    Apply K.C <= Delta + 2g - 2 - chi_top to a genus-zero class. Since
    Delta = 4, g = 0 and chi_top = 2 the bound is 0, so any rational class with
    K.C > 0 is excluded because K is ample.

    Raises:
        PreconditionError: If p_a(c) != 0.
    """
    p_a = arithmetic_genus(model, c)
    if p_a != 0:
        raise PreconditionError(
            f"rational_curve_exclusion needs arithmetic genus 0, class {c} has p_a = {p_a}")
    bound = model.delta + 2 * RATIONAL_CURVE_GENUS - 2 - RATIONAL_CURVE_CHI_TOP
    degree = k_dot(model, c)
    return ExclusionReport(divisor=c, p_a=p_a, k_dot=degree, lm95_bound=bound, excluded=degree > bound)


def effective_necessary(model: SurfaceModel, d: DivisorClass) -> bool:
    """
    Necessary numerical condition for D to be effective
    (even: x >= 0 and y >= 0; odd: x >= |y|). True for the zero class.
    """
    if model.is_even:
        return d.x >= 0 and d.y >= 0
    return d.x >= abs(d.y)


def is_ample(model: SurfaceModel, d: DivisorClass) -> bool:
    if model.is_even:
        return d.x > 0 and d.y > 0
    return d.x > abs(d.y)


def is_nef(model: SurfaceModel, d: DivisorClass) -> bool:
    """D is nef iff it meets both extremal curve rays non-negatively."""
    return all(intersect(model, d, ray) >= 0 for ray in extremal_rays(model))


def is_big(model: SurfaceModel, d: DivisorClass) -> bool:
    return self_intersection(model, d) > 0 and effective_necessary(model, d)


def positivity_verdict(model: SurfaceModel, d: DivisorClass) -> PositivityVerdict:
    """
    All positivity flags of D. The governing rule is the effectiveness
    condition when D fails it, and the ampleness criterion otherwise.
    """
    effective = effective_necessary(model, d)
    if model.is_even:
        rule = RULE_EVEN_AMPLE if effective else RULE_EVEN_EFFECTIVE
    else:
        rule = RULE_ODD_AMPLE if effective else RULE_ODD_EFFECTIVE
    return PositivityVerdict(
        effective_necessary=effective,
        nef=is_nef(model, d),
        big=is_big(model, d),
        ample=is_ample(model, d),
        governing_rule=rule,
    )


def cone_rays(model: SurfaceModel) -> ConeRays:
    """
    Rays of the effective and nef cones. They coincide on both models: the
    even rays are H and F, the odd rays are H + F and H - F.
    """
    rays = extremal_rays(model)
    return ConeRays(effective_rays=list(rays), nef_rays=list(rays))


def nef_not_ample_rays(model: SurfaceModel) -> List[DivisorClass]:
    """Primitive classes spanning the nef-but-not-ample boundary (all have D^2 = 0)."""
    return [ray for ray in extremal_rays(model) if is_nef(model, ray) and not is_ample(model, ray)]


def negative_curve_hypothesis(model: SurfaceModel, x0: int) -> NegativeCurveReport:
    """
    Evaluate the hypothetical negative curve C = x0*H + (x0+1)*F on the odd
    model: C^2 = -(2*x0 + 1) < 0 while p_a(C) = x0 + 1 > 0, which is
    incompatible with contracting C to a rational singularity (that needs p_a = 0).

    Raises:
        ModelMismatchError: For the even model.
        PreconditionError: If x0 < 0.
    """
    if model.is_even:
        raise ModelMismatchError("negative_curve_hypothesis applies to the odd lattice type only")
    if x0 < 0:
        raise PreconditionError(f"x0 must be a nonnegative integer, got {x0}")

    c = DivisorClass(x0, x0 + 1)
    self_int = self_intersection(model, c)
    p_a = arithmetic_genus(model, c)
    return NegativeCurveReport(x0=x0, divisor=c, self_int=self_int, p_a=p_a,
                               contradiction=self_int < 0 and p_a > 0)


def low_canonical_degree_classes(model: SurfaceModel, max_k_dot: int = 2) -> List[DivisorClass]:
    """
    Admissible curve classes with K.C <= max_k_dot, sorted.

    On the admissible region K.C >= x + y (even) and K.C >= 2x (odd), so
    the search box below is exhaustive.

    Raises:
        PreconditionError: If max_k_dot < 0.
    """
    if max_k_dot < 0:
        raise PreconditionError(f"max_k_dot must be nonnegative, got {max_k_dot}")

    found = []
    limit = max_k_dot
    for x in range(0, limit + 1):
        for y in range(-limit, limit + 1):
            c = DivisorClass(x, y)
            if curve_class_admissible(model, c) and k_dot(model, c) <= max_k_dot:
                found.append(c)
    logger.debug(f"{len(found)} admissible classes with K.C <= {max_k_dot} on the {model.lattice.value} model")
    return sorted(found)
