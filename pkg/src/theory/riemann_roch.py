from __future__ import annotations
from typing import Optional
import logging

from ..models.errors import ConsistencyFault
from ..models.lattice import DivisorClass, SurfaceModel
from ..models.reports import GenusReport
from ..utils.helpers import in_consistency_sample
from ..utils.settings import get_settings
from .intersection import intersect, k_dot, self_intersection

logger = logging.getLogger(__name__)


def _halve(product: int, quantity: str, model: SurfaceModel, d: DivisorClass) -> int:
    """Divide an odd-type product by 2, refusing to round."""
    if product % 2 != 0:
        raise ConsistencyFault(
            quantity, f"{product}/2", "an integer",
            detail=f"odd product at {d} on the {model.lattice.value} model")
    return product // 2


def _should_check(d: DivisorClass, mode: Optional[str]) -> bool:
    settings = get_settings()
    resolved = mode or settings.effective_consistency_mode
    return in_consistency_sample(d, resolved, settings.consistency_sample_stride)


def generic_euler_characteristic(model: SurfaceModel, d: DivisorClass) -> int:
    """Riemann-Roch: chi(O(D)) = D.(D - K)/2 + chi(O_S)."""
    twice = intersect(model, d, d - model.canonical)
    return _halve(twice, "euler_characteristic", model, d) + model.chi_structure_sheaf


def generic_arithmetic_genus(model: SurfaceModel, d: DivisorClass) -> int:
    """Adjunction: p_a(D) = (K.D + D^2)/2 + 1."""
    twice = k_dot(model, d) + self_intersection(model, d)
    return _halve(twice, "arithmetic_genus", model, d) + 1


def euler_characteristic(model: SurfaceModel, d: DivisorClass, consistency: Optional[str] = None) -> int:
    """
    Euler characteristic of O(D) from the closed forms
    (x-1)(y-1) on the even model and (x+y-1)(x-y-2)/2 on the odd model.

    Args:
        model: The surface model.
        d: The divisor class.
        consistency: Override of the configured cross-check mode ("always", "sampled", "off").

    Raises:
        ConsistencyFault: If the closed form disagrees with D.(D-K)/2 + 1.
    """
    x, y = d.x, d.y
    if model.is_even:
        value = (x - 1) * (y - 1)
    else:
        value = _halve((x + y - 1) * (x - y - 2), "euler_characteristic", model, d)

    if _should_check(d, consistency):
        generic = generic_euler_characteristic(model, d)
        if generic != value:
            logger.error(f"Euler characteristic mismatch at {d} ({model.lattice.value}): {value} vs {generic}")
            raise ConsistencyFault("euler_characteristic", value, generic,
                                   detail=f"class {d}, {model.lattice.value} model")
    return value


def arithmetic_genus(model: SurfaceModel, d: DivisorClass, consistency: Optional[str] = None) -> int:
    """
    Arithmetic genus from the closed forms (x+1)(y+1) on the even model and
    (x+y+1)(x-y+2)/2 on the odd model.

    Raises:
        ConsistencyFault: If the closed form disagrees with (K.D + D^2)/2 + 1.
    """
    x, y = d.x, d.y
    if model.is_even:
        value = (x + 1) * (y + 1)
    else:
        value = _halve((x + y + 1) * (x - y + 2), "arithmetic_genus", model, d)

    if _should_check(d, consistency):
        generic = generic_arithmetic_genus(model, d)
        if generic != value:
            logger.error(f"Arithmetic genus mismatch at {d} ({model.lattice.value}): {value} vs {generic}")
            raise ConsistencyFault("arithmetic_genus", value, generic,
                                   detail=f"class {d}, {model.lattice.value} model")
    return value


def genus_report(model: SurfaceModel, d: DivisorClass) -> GenusReport:
    """Bundle p_a, chi, K.D and D^2 for one class."""
    return GenusReport(
        p_a=arithmetic_genus(model, d),
        chi=euler_characteristic(model, d),
        k_dot=k_dot(model, d),
        self_int=self_intersection(model, d),
    )
