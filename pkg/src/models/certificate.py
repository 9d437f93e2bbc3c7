from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .lattice import DivisorClass, LatticeType

NO_SOLUTION = "no solution"
SOLUTION_FOUND = "solution found"
INCONCLUSIVE = "inconclusive"

EXCLUDED_SIMPLY_CONNECTED = "excluded_simply_connected"
H0_AT_MOST_1 = "h0_at_most_1"


@dataclass(frozen=True)
class RegionEntry:
    """One class of the finite region together with its residual."""
    divisor: DivisorClass
    residual: int
    factors: Optional[Tuple[int, int]] = None  # (x+y-1, x-y-2) for the odd model

    def to_dict(self) -> Dict:
        data: Dict = {"class": self.divisor.to_dict(), "residual": self.residual}
        if self.factors is not None:
            data["factors"] = list(self.factors)
        return data


@dataclass(frozen=True)
class EdgeCase:
    """
    A boundary line of the ample cone on which the embedding equation
    collapses to a quadratic in one variable.
    """
    constraint: str
    variable: str
    raw_coefficients: Tuple[int, int, int]
    content: int
    reduced_coefficients: Tuple[int, int, int]
    discriminant: int
    is_perfect_square: bool
    integer_roots: Tuple[int, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "constraint": self.constraint,
            "variable": self.variable,
            "raw_coefficients": list(self.raw_coefficients),
            "content": self.content,
            "reduced_coefficients": list(self.reduced_coefficients),
            "discriminant": self.discriminant,
            "is_perfect_square": self.is_perfect_square,
            "integer_roots": list(self.integer_roots),
        }


@dataclass(frozen=True)
class SweepSummary:
    """Statistics of the row-by-row sweep over the ample classes of the box."""
    box_bound: int
    rows: int
    candidates_evaluated: int
    hits: List[DivisorClass] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.hits

    def to_dict(self) -> Dict:
        return {
            "box_bound": self.box_bound,
            "rows": self.rows,
            "candidates_evaluated": self.candidates_evaluated,
            "hits": [h.to_dict() for h in self.hits],
        }


@dataclass(frozen=True)
class Certificate:
    """Auditable record of the P^4 embedding search for one lattice type."""
    model: LatticeType
    equation_id: str
    finite_region: List[RegionEntry]
    skipped_pairs: List[Tuple[int, int]]
    edge_cases: List[EdgeCase]
    exceptional: RegionEntry
    sweep: SweepSummary
    conclusion: str

    @property
    def search_box(self) -> int:
        return self.sweep.box_bound

    @property
    def exhaustive_box_clean(self) -> bool:
        return self.sweep.clean

    def to_dict(self) -> Dict:
        return {
            "model": self.model.value,
            "equation_id": self.equation_id,
            "finite_region": [entry.to_dict() for entry in self.finite_region],
            "skipped_pairs": [list(pair) for pair in self.skipped_pairs],
            "edge_cases": [edge.to_dict() for edge in self.edge_cases],
            "exceptional_class": self.exceptional.to_dict(),
            "search_box": self.search_box,
            "sweep": self.sweep.to_dict(),
            "exhaustive_box_clean": self.exhaustive_box_clean,
            "conclusion": self.conclusion,
        }


@dataclass(frozen=True)
class GenusClassList:
    """All admissible classes of one arithmetic genus, with simply-connected annotations."""
    genus: int
    classes: List[DivisorClass]
    annotations: Dict[DivisorClass, List[str]] = field(default_factory=dict)
    excluded: List[DivisorClass] = field(default_factory=list)

    def labels(self) -> List[str]:
        return [c.label() for c in self.classes]

    def to_dict(self) -> Dict:
        return {
            "genus": self.genus,
            "classes": [
                {**c.to_dict(), "label": c.label(), "annotations": sorted(self.annotations.get(c, []))}
                for c in self.classes
            ],
            "excluded": [
                {**c.to_dict(), "label": c.label(), "annotations": [EXCLUDED_SIMPLY_CONNECTED]}
                for c in self.excluded
            ],
        }
