"""
Intersection theory on the two rank-2 unimodular Neron-Severi lattices.

Even type: H^2 = 0, F^2 = 0, H.F = 1, K = 2H + 2F.
Odd type:  H^2 = 1, F^2 = -1, H.F = 0, K = 3H - F.
"""
from __future__ import annotations
from fractions import Fraction
import logging

from ..models.errors import ModelMismatchError
from ..models.lattice import DivisorClass, LatticeType, RationalClass, SurfaceModel
from ..models.reports import SplittingReport

logger = logging.getLogger(__name__)

EVEN_TO_ODD_H = RationalClass(Fraction(1), Fraction(-1))
EVEN_TO_ODD_F = RationalClass(Fraction(1, 2), Fraction(1, 2))


def intersect(model: SurfaceModel, a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number a.b under the model's Gram matrix."""
    return model.lattice.pairing(a.x, a.y, b.x, b.y)


def self_intersection(model: SurfaceModel, d: DivisorClass) -> int:
    return intersect(model, d, d)


def canonical_class(model: SurfaceModel) -> DivisorClass:
    """K = (2, 2) on the even model and (3, -1) on the odd model."""
    return model.canonical


def k_dot(model: SurfaceModel, d: DivisorClass) -> int:
    """Canonical degree K.D."""
    return intersect(model, model.canonical, d)


def gram_determinant(lattice: LatticeType) -> int:
    return lattice.determinant


def embed_even_into_odd(d: DivisorClass) -> RationalClass:
    """
    Map an even-basis class into odd coordinates via H -> H - F, F -> (H + F)/2.
    The image is half-integral in general; the map preserves all pairings.
    """
    return RationalClass(
        d.x * EVEN_TO_ODD_H.x + d.y * EVEN_TO_ODD_F.x,
        d.x * EVEN_TO_ODD_H.y + d.y * EVEN_TO_ODD_F.y,
    )


def intersect_rational(lattice: LatticeType, a: RationalClass, b: RationalClass) -> Fraction:
    """Pairing of two rational classes, computed with exact fractions."""
    return Fraction(lattice.pairing(a.x, a.y, b.x, b.y))


def tangent_splitting_check(model: SurfaceModel) -> SplittingReport:
    """
    Check the numerical shape of a split tangent bundle T_S = L1 + L2 on the
    odd model: L1 = H + F, L2 = 2(H - F), L1 + L2 = K, L1^2 = L2^2 = 0 and
    2 L1.L2 = c1^2 = 2 c2.

    Raises:
        ModelMismatchError: For the even model.
    """
    if model.is_even:
        raise ModelMismatchError("tangent_splitting_check applies to the odd lattice type only")

    l1 = DivisorClass(1, 1)
    l2 = DivisorClass(2, -2)
    sum_is_canonical = (l1 + l2) == model.canonical
    l1_squared = self_intersection(model, l1)
    l2_squared = self_intersection(model, l2)
    twice_l1_l2 = 2 * intersect(model, l1, l2)
    holds = (
        sum_is_canonical
        and l1_squared == 0
        and l2_squared == 0
        and twice_l1_l2 == model.k_squared == 2 * model.c2
    )
    logger.debug(f"Tangent splitting check on odd model: holds={holds}")
    return SplittingReport(
        l1=l1,
        l2=l2,
        sum_is_canonical=sum_is_canonical,
        l1_squared=l1_squared,
        l2_squared=l2_squared,
        twice_l1_l2=twice_l1_l2,
        c1_squared=model.k_squared,
        holds=holds,
    )
