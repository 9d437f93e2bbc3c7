from __future__ import annotations
from typing import List, Optional, Tuple
import logging

from ..models.certificate import (
    INCONCLUSIVE,
    NO_SOLUTION,
    SOLUTION_FOUND,
    Certificate,
    EdgeCase,
    RegionEntry,
    SweepSummary,
)
from ..models.errors import PreconditionError
from ..models.lattice import DivisorClass, SurfaceModel
from ..theory.positivity import is_ample
from ..utils.helpers import ceil_sqrt, exact_sqrt, quadratic_integer_roots
from ..utils.settings import get_settings
from .diophantine import double_point_residual, edge_lines, edge_reductions, equation_id, specialized_residual

logger = logging.getLogger(__name__)

MIN_BOX_BOUND = 100

# h0 of a hyperplane section of a non-degenerate surface in P^4 is below binom(4, 2).
ZAK_H0_BOUND = 6


def _even_finite_region() -> List[RegionEntry]:
    """Ample classes with x, y >= 3 and h0 = (x-1)(y-1) < 6."""
    entries = []
    x = 3
    while (x - 1) * 2 < ZAK_H0_BOUND:
        y = 3
        while (x - 1) * (y - 1) < ZAK_H0_BOUND:
            d = DivisorClass(x, y)
            entries.append(RegionEntry(divisor=d, residual=specialized_residual(SurfaceModel.even(), d)))
            y += 1
        x += 1
    return entries


def _odd_finite_region() -> Tuple[List[RegionEntry], List[Tuple[int, int]]]:
    """
    Classes with s = x+y-1 >= 1, t = x-y-2 >= 1 and s*t <= 10, i.e. h0 = s*t/2 < 6.
    x = (s+t+3)/2 and y = (s-t-1)/2 are integral iff s + t is odd; the other
    factor pairs are returned as skipped.
    """
    model = SurfaceModel.odd()
    product_bound = 2 * (ZAK_H0_BOUND - 1)
    entries = []
    skipped = []
    for s in range(1, product_bound + 1):
        for t in range(1, product_bound // s + 1):
            if (s + t) % 2 == 0:
                skipped.append((s, t))
                continue
            d = DivisorClass((s + t + 3) // 2, (s - t - 1) // 2)
            entries.append(RegionEntry(divisor=d, residual=specialized_residual(model, d), factors=(s, t)))
    return sorted(entries, key=lambda e: e.divisor), skipped


def _even_row_roots(x: int) -> List[int]:
    """Integer y with 2x^2 y^2 - (10x+5) y - (5x+2) = 0, the even residual on row x."""
    return quadratic_integer_roots(2 * x * x, -(10 * x + 5), -(5 * x + 2))


def _sweep_even(box_bound: int) -> SweepSummary:
    """
    Row x of the box turns 2x^2y^2 - 10xy - 5x - 5y - 2 = 0 into a
    quadratic in y, solved exactly.
    """
    model = SurfaceModel.even()
    hits = []
    evaluated = 0
    for x in range(1, box_bound + 1):
        for y in _even_row_roots(x):
            if 1 <= y <= box_bound:
                evaluated += 1
                d = DivisorClass(x, y)
                if specialized_residual(model, d) == 0:
                    hits.append(d)
    return SweepSummary(box_bound=box_bound, rows=box_bound, candidates_evaluated=evaluated, hits=sorted(hits))


def _sweep_odd(box_bound: int) -> SweepSummary:
    """
    Row x covers the ample classes -x < y < x. With u = x^2 - y^2 - 5 the
    equation reads u^2 = 15x + 5y + 29 <= 20x + 29, so |u| <= isqrt(20x + 29)
    and y^2 lies in a band of that width around x^2 - 5. Every class in the
    band is evaluated.
    """
    model = SurfaceModel.odd()
    hits = []
    evaluated = 0
    for x in range(1, box_bound + 1):
        reach, _ = exact_sqrt(20 * x + 29)
        centre = x * x - 5
        low, high = max(0, centre - reach), centre + reach
        if high < 0:
            continue
        top, _ = exact_sqrt(high)
        for m in range(ceil_sqrt(low), min(top, x - 1) + 1):
            for y in sorted({m, -m}):
                evaluated += 1
                d = DivisorClass(x, y)
                if specialized_residual(model, d) == 0:
                    hits.append(d)
        if x % 1000 == 0:
            logger.debug(f"Odd sweep reached row {x}, {evaluated} candidates so far")
    return SweepSummary(box_bound=box_bound, rows=box_bound, candidates_evaluated=evaluated, hits=sorted(hits))


def _edge_hits(model: SurfaceModel, edges: List[EdgeCase]) -> List[DivisorClass]:
    hits = []
    for line, edge in zip(edge_lines(model), edges):
        for value in edge.integer_roots:
            d = line.class_at(value)
            if is_ample(model, d):
                hits.append(d)
    return hits


def verify_no_p4_embedding(model: SurfaceModel, box_bound: Optional[int] = None) -> Certificate:
    """
    Build the certificate that no ample class of the model satisfies the
    double point formula for P^4.

    The search has three parts: the finite region left by the h0 bound,
    the boundary lines of the ample cone reduced to quadratics, and an
    independent sweep over the ample classes of the box. The canonical class,
    which the h0 bound does not cover, is evaluated separately.

    Args:
        model: The surface model.
        box_bound: Upper bound of the sweep box; defaults to the configured box_bound.

    Returns:
        The Certificate. Its conclusion is "no solution" only if no residual
        vanishes, no edge discriminant is a square and the sweep is clean.

    Raises:
        PreconditionError: If box_bound < 100.
    """
    bound = box_bound if box_bound is not None else get_settings().box_bound
    if bound < MIN_BOX_BOUND:
        raise PreconditionError(f"--box-bound must be at least {MIN_BOX_BOUND}, got {bound}")

    logger.info(f"Verifying P^4 non-embedding on the {model.lattice.value} model with box bound {bound}")

    if model.is_even:
        region, skipped = _even_finite_region(), []
    else:
        region, skipped = _odd_finite_region()

    k = model.canonical
    exceptional = RegionEntry(divisor=k, residual=double_point_residual(model, k))
    edges = edge_reductions(model)
    sweep = _sweep_even(bound) if model.is_even else _sweep_odd(bound)

    hits = [e.divisor for e in region if e.residual == 0 and is_ample(model, e.divisor)]
    hits += _edge_hits(model, edges)
    hits += sweep.hits
    if exceptional.residual == 0:
        hits.append(k)

    if hits:
        conclusion = SOLUTION_FOUND
        logger.error(f"Residual vanishes at {sorted(set(hits))} on the {model.lattice.value} model")
    elif any(edge.is_perfect_square for edge in edges):
        conclusion = INCONCLUSIVE
        logger.warning("An edge discriminant is a perfect square without an ample root")
    else:
        conclusion = NO_SOLUTION

    logger.info(f"Sweep of {sweep.rows} rows evaluated {sweep.candidates_evaluated} candidates; conclusion: {conclusion}")
    return Certificate(
        model=model.lattice,
        equation_id=equation_id(model),
        finite_region=region,
        skipped_pairs=skipped,
        edge_cases=edges,
        exceptional=exceptional,
        sweep=sweep,
        conclusion=conclusion,
    )
