from __future__ import annotations
from typing import Dict, List, Optional
import logging

from sympy import divisors

from ..models.certificate import H0_AT_MOST_1, GenusClassList
from ..models.errors import PreconditionError
from ..models.lattice import DivisorClass, SurfaceModel
from ..theory.positivity import curve_class_admissible
from ..theory.riemann_roch import arithmetic_genus
from ..utils.settings import get_settings

logger = logging.getLogger(__name__)

MIN_GENUS = 2
MAX_GENUS = 100

# Classes with h0 = 0 on a simply connected fake quadric.
_NON_EFFECTIVE_EVEN = {DivisorClass(1, 0), DivisorClass(0, 1), DivisorClass(1, 1)}
_NON_EFFECTIVE_ODD = {DivisorClass(1, -1)}

_AT_MOST_ONE_SECTION_ODD = {DivisorClass(2, -1), DivisorClass(1, 0)}


def classes_of_genus(model: SurfaceModel, genus: int) -> List[DivisorClass]:
    """
    All admissible classes with arithmetic genus `genus`, sorted.

    Even: p_a = (x+1)(y+1), so every factorisation genus = a*b gives (a-1, b-1).
    Odd: 2 p_a = s*t with s = x+y+1 >= 1 and t = x-y+2 >= 2; the class
    ((s+t-3)/2, (s-t+1)/2) is integral iff s + t is odd.
    """
    found = set()
    if model.is_even:
        for a in divisors(genus):
            found.add(DivisorClass(a - 1, genus // a - 1))
    else:
        for s in divisors(2 * genus):
            t = 2 * genus // s
            if t < 2 or (s + t) % 2 == 0:
                continue
            found.add(DivisorClass((s + t - 3) // 2, (s - t + 1) // 2))

    classes = sorted(c for c in found if curve_class_admissible(model, c))
    for c in classes:
        assert arithmetic_genus(model, c) == genus, f"{c} does not have genus {genus}"
    return classes


def _is_ray_multiple(c: DivisorClass, ray: DivisorClass) -> bool:
    return any(c == k * ray for k in range(2, max(abs(c.x), abs(c.y)) + 1))


def _simply_connected_tags(model: SurfaceModel, c: DivisorClass) -> List[str]:
    if model.is_even:
        rays = (DivisorClass(1, 0), DivisorClass(0, 1))
        return [H0_AT_MOST_1] if any(_is_ray_multiple(c, ray) for ray in rays) else []
    rays = (DivisorClass(1, 1), DivisorClass(1, -1))
    if c in _AT_MOST_ONE_SECTION_ODD or any(_is_ray_multiple(c, ray) for ray in rays):
        return [H0_AT_MOST_1]
    return []


def enumerate_low_genus(model: SurfaceModel, g_max: Optional[int] = None,
                        simply_connected: bool = False) -> List[GenusClassList]:
    """
    List the admissible curve classes of arithmetic genus 2..g_max.

    Args:
        model: The surface model.
        g_max: Largest genus to list; defaults to the configured g_max.
        simply_connected: Remove the classes with no sections on a simply
            connected fake quadric and tag those with h0 <= 1.

    Returns:
        One GenusClassList per genus, in increasing genus.

    Raises:
        PreconditionError: If g_max is outside 2..100.
    """
    limit = g_max if g_max is not None else get_settings().g_max
    if not MIN_GENUS <= limit <= MAX_GENUS:
        raise PreconditionError(
            f"--g-max must lie in {MIN_GENUS}..{MAX_GENUS} (no admissible class has p_a < 2), got {limit}")

    non_effective = _NON_EFFECTIVE_EVEN if model.is_even else _NON_EFFECTIVE_ODD
    result = []
    for genus in range(MIN_GENUS, limit + 1):
        classes = classes_of_genus(model, genus)
        annotations: Dict[DivisorClass, List[str]] = {}
        excluded: List[DivisorClass] = []
        if simply_connected:
            excluded = [c for c in classes if c in non_effective]
            classes = [c for c in classes if c not in non_effective]
            for c in classes:
                tags = _simply_connected_tags(model, c)
                if tags:
                    annotations[c] = tags
        result.append(GenusClassList(genus=genus, classes=classes, annotations=annotations, excluded=excluded))

    logger.info(f"Enumerated genus 2..{limit} on the {model.lattice.value} model "
                f"({sum(len(r.classes) for r in result)} classes, simply_connected={simply_connected})")
    return result
