from __future__ import annotations
from dataclasses import dataclass
from enum import Enum, auto
from typing import Dict, List, Optional

from .lattice import DivisorClass, LatticeType


@dataclass(frozen=True)
class GenusReport:
    """Arithmetic genus, Euler characteristic, K.D and D^2 of one class."""
    p_a: int
    chi: int
    k_dot: int
    self_int: int

    def to_dict(self) -> Dict[str, int]:
        return {"p_a": self.p_a, "chi": self.chi, "k_dot": self.k_dot, "self_int": self.self_int}


@dataclass(frozen=True)
class PositivityVerdict:
    """
    Positivity flags for one class. `effective_necessary` is the numerical
    necessary condition for effectiveness only, never a proof of it.
    """
    effective_necessary: bool
    nef: bool
    big: bool
    ample: bool
    governing_rule: str

    def to_dict(self) -> Dict:
        return {
            "effective_necessary": self.effective_necessary,
            "nef": self.nef,
            "big": self.big,
            "ample": self.ample,
            "governing_rule": self.governing_rule,
        }


@dataclass(frozen=True)
class ExclusionReport:
    """Outcome of the rational-curve inequality K.C <= Delta + 2g - 2 - chi_top for g = 0."""
    divisor: DivisorClass
    p_a: int
    k_dot: int
    lm95_bound: int
    excluded: bool

    def to_dict(self) -> Dict:
        return {
            "class": self.divisor.to_dict(),
            "p_a": self.p_a,
            "k_dot": self.k_dot,
            "lm95_bound": self.lm95_bound,
            "excluded": self.excluded,
        }


@dataclass(frozen=True)
class ConeRays:
    effective_rays: List[DivisorClass]
    nef_rays: List[DivisorClass]

    def to_dict(self) -> Dict:
        return {
            "effective_rays": [r.to_dict() for r in self.effective_rays],
            "nef_rays": [r.to_dict() for r in self.nef_rays],
        }


@dataclass(frozen=True)
class NegativeCurveReport:
    """The contradiction obtained for a hypothetical negative curve x0*H + (x0+1)*F."""
    x0: int
    divisor: DivisorClass
    self_int: int
    p_a: int
    contradiction: bool

    def to_dict(self) -> Dict:
        return {
            "x0": self.x0,
            "class": self.divisor.to_dict(),
            "self_int": self.self_int,
            "p_a": self.p_a,
            "contradiction": self.contradiction,
        }


@dataclass(frozen=True)
class SplittingReport:
    """Numerical check of the tangent bundle splitting T_S = L1 + L2 on the odd model."""
    l1: DivisorClass
    l2: DivisorClass
    sum_is_canonical: bool
    l1_squared: int
    l2_squared: int
    twice_l1_l2: int
    c1_squared: int
    holds: bool

    def to_dict(self) -> Dict:
        return {
            "l1": self.l1.to_dict(),
            "l2": self.l2.to_dict(),
            "sum_is_canonical": self.sum_is_canonical,
            "l1_squared": self.l1_squared,
            "l2_squared": self.l2_squared,
            "twice_l1_l2": self.twice_l1_l2,
            "c1_squared": self.c1_squared,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class CohomologyBounds:
    h2_zero: bool
    h0_lower: Optional[int]
    h0_exact: Optional[int]
    chi: int

    def to_dict(self) -> Dict:
        return {"h2_zero": self.h2_zero, "h0_lower": self.h0_lower, "h0_exact": self.h0_exact, "chi": self.chi}


class CaseTag(Enum):
    CHI_POSITIVE = auto()
    CHI_ZERO = auto()
    PENCIL_RAY = auto()
    UNDETERMINED_ODD_DIAGONAL_SHIFT = auto()

    @property
    def wire_name(self) -> str:
        return {
            CaseTag.CHI_POSITIVE: "ChiPositive",
            CaseTag.CHI_ZERO: "ChiZero",
            CaseTag.PENCIL_RAY: "PencilRay",
            CaseTag.UNDETERMINED_ODD_DIAGONAL_SHIFT: "UndeterminedOddDiagonalShift",
        }[self]


class RelationKind(Enum):
    H1_LT_H0 = "h1 < h0"
    H1_EQ_H0 = "h1 = h0"
    H1_EQ_H0_PLUS_SHIFT = "h1 = h0 + shift, h0 <= 2"
    H0_MINUS_H1_EQ_CHI = "h0 - h1 = chi (sign undetermined)"


@dataclass(frozen=True)
class Relation:
    """A proven relation between h0 and h1; `shift` is only set for pencil rays."""
    kind: RelationKind
    shift: Optional[int] = None
    h0_at_most: Optional[int] = None
    conditional: bool = False

    def text(self) -> str:
        if self.kind is RelationKind.H1_EQ_H0_PLUS_SHIFT:
            return f"h1 = h0 + {self.shift}, h0 <= {self.h0_at_most}"
        return self.kind.value

    def to_dict(self) -> Dict:
        data: Dict = {"kind": self.kind.name.lower(), "conditional": self.conditional}
        if self.shift is not None:
            data["shift"] = self.shift
        if self.h0_at_most is not None:
            data["h0_at_most"] = self.h0_at_most
        return data


@dataclass(frozen=True)
class BoundedCohomologyCase:
    case_tag: CaseTag
    chi: int
    relation: Relation
    lattice: LatticeType
    divisor: DivisorClass
    rule: str = ""

    def to_dict(self) -> Dict:
        return {
            "case_tag": self.case_tag.wire_name,
            "chi": self.chi,
            "relation": self.relation.to_dict(),
            "relation_text": self.relation.text(),
            "lattice": self.lattice.value,
            "class": self.divisor.to_dict(),
            "rule": self.rule,
        }
