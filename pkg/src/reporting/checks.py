from __future__ import annotations
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional
import logging

from ..data.output_generator import OutputGenerator
from ..models.certificate import NO_SOLUTION, Certificate
from ..models.lattice import DivisorClass, SurfaceModel
from ..models.reports import CaseTag
from ..search.diophantine import double_point_residual, specialized_residual
from ..search.enumerator import enumerate_low_genus
from ..search.verifier import verify_no_p4_embedding
from ..theory.cohomology import bounded_cohomology_case
from ..theory.intersection import k_dot, self_intersection
from ..theory.positivity import curve_class_admissible, is_ample, is_big, is_nef
from ..theory.riemann_roch import (
    arithmetic_genus,
    euler_characteristic,
    generic_arithmetic_genus,
    generic_euler_characteristic,
)
from ..utils.settings import Settings

logger = logging.getLogger(__name__)

MODELS = (SurfaceModel.even(), SurfaceModel.odd())


@dataclass
class CheckResult:
    """Outcome of one acceptance check."""
    number: int
    name: str
    passed: bool
    detail: str = ""
    discrepancies: List[str] = field(default_factory=list)
    artifacts: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "number": self.number,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "discrepancies": list(self.discrepancies),
        }


def box(bound: int) -> Iterator[DivisorClass]:
    """All classes with |x|, |y| <= bound in lexicographic order."""
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            yield DivisorClass(x, y)


class Check(ABC):
    """
    Abstract base class for acceptance checks.
    Each check reproduces one numbered statement and reports discrepancies.
    """
    number: int = 0
    name: str = ""

    # Discrepancy lists are cut here so a broken build still produces a readable report.
    max_reported = 20

    @abstractmethod
    def run(self, settings: Settings) -> CheckResult:
        """
        Run the check.

        Args:
            settings: Box sizes and bounds to use

        Returns:
            CheckResult: The outcome, with any discrepancies found
        """
        pass

    def _result(self, discrepancies: List[str], detail: str = "", **artifacts: Any) -> CheckResult:
        if len(discrepancies) > self.max_reported:
            extra = len(discrepancies) - self.max_reported
            discrepancies = discrepancies[:self.max_reported] + [f"... and {extra} more"]
        return CheckResult(number=self.number, name=self.name, passed=not discrepancies,
                           detail=detail, discrepancies=discrepancies, artifacts=artifacts)


class CanonicalInvariantsCheck(Check):
    number = 1
    name = "canonical invariants"

    def run(self, settings: Settings) -> CheckResult:
        problems = []
        for model in MODELS:
            k = model.canonical
            observed = {
                "K^2": self_intersection(model, k),
                "chi(K)": euler_characteristic(model, k),
                "p_a(K)": arithmetic_genus(model, k),
                "K ample": is_ample(model, k),
            }
            expected = {"K^2": 8, "chi(K)": 1, "p_a(K)": 9, "K ample": True}
            for key, value in expected.items():
                if observed[key] != value:
                    problems.append(f"{model.lattice.value}: {key} = {observed[key]}, expected {value}")
        return self._result(problems, detail="K^2 = 8, chi(K) = 1, p_a(K) = 9, K ample on both models")


class ClosedFormAgreementCheck(Check):
    number = 2
    name = "closed forms agree with Riemann-Roch and adjunction"

    def run(self, settings: Settings) -> CheckResult:
        problems = []
        count = 0
        for model in MODELS:
            for d in box(settings.acceptance_box):
                count += 1
                chi = euler_characteristic(model, d, consistency="off")
                p_a = arithmetic_genus(model, d, consistency="off")
                if chi != generic_euler_characteristic(model, d):
                    problems.append(f"{model.lattice.value} {d}: chi {chi}")
                if p_a != generic_arithmetic_genus(model, d):
                    problems.append(f"{model.lattice.value} {d}: p_a {p_a}")
        return self._result(problems, detail=f"{count} classes compared")


class ConeLawCheck(Check):
    number = 3
    name = "ample iff nef and big; admissible iff p_a >= 1, K.C > 0, C^2 >= 0"

    def run(self, settings: Settings) -> CheckResult:
        problems = []
        for model in MODELS:
            for d in box(settings.acceptance_box):
                if is_ample(model, d) != (is_nef(model, d) and is_big(model, d)):
                    problems.append(f"{model.lattice.value} {d}: ample/nef/big")
                numerical = (arithmetic_genus(model, d, consistency="off") >= 1
                             and k_dot(model, d) > 0 and self_intersection(model, d) >= 0)
                if curve_class_admissible(model, d) != numerical:
                    problems.append(f"{model.lattice.value} {d}: admissibility")
        return self._result(problems)


class GenusFloorCheck(Check):
    number = 4
    name = "admissible classes have p_a >= 2"

    def run(self, settings: Settings) -> CheckResult:
        problems = []
        for model in MODELS:
            for d in box(settings.acceptance_box):
                if curve_class_admissible(model, d):
                    p_a = arithmetic_genus(model, d, consistency="off")
                    if p_a < 2:
                        problems.append(f"{model.lattice.value} {d}: p_a = {p_a}")
        return self._result(problems)


class EmbeddingCertificateCheck(Check):
    """P^4 verifier for one model, pinned to the expected finite region and discriminants."""

    def __init__(self, model: SurfaceModel, number: int, expected_discriminants: List[int],
                 expected_region: Optional[Dict[DivisorClass, int]] = None):
        self.model = model
        self.number = number
        self.name = f"P^4 verifier, {model.lattice.value} model"
        self.expected_discriminants = expected_discriminants
        self.expected_region = expected_region

    def run(self, settings: Settings) -> CheckResult:
        certificate: Certificate = verify_no_p4_embedding(self.model, settings.box_bound)
        problems = []

        discriminants = [edge.discriminant for edge in certificate.edge_cases]
        if discriminants != self.expected_discriminants:
            problems.append(f"edge discriminants {discriminants}, expected {self.expected_discriminants}")
        problems += [f"square discriminant on {e.constraint}" for e in certificate.edge_cases if e.is_perfect_square]

        if self.expected_region is not None:
            region = {entry.divisor: entry.residual for entry in certificate.finite_region}
            if region != self.expected_region:
                problems.append(f"finite region {region}, expected {self.expected_region}")
        problems += [f"residual zero at {e.divisor}" for e in certificate.finite_region if e.residual == 0]

        if not certificate.exhaustive_box_clean:
            problems.append(f"box sweep hits {[str(h) for h in certificate.sweep.hits]}")
        if certificate.conclusion != NO_SOLUTION:
            problems.append(f"conclusion '{certificate.conclusion}'")

        return self._result(problems, detail=f"box bound {certificate.search_box}", certificate=certificate)


class LowGenusListCheck(Check):
    """Class lists of genus 3, 4, 5 against the expected labels."""

    def __init__(self, model: SurfaceModel, number: int, simply_connected: bool,
                 expected: Dict[int, List[str]]):
        self.model = model
        self.number = number
        self.simply_connected = simply_connected
        self.expected = expected
        filtered = ", simply connected" if simply_connected else ""
        self.name = f"low-genus class lists, {model.lattice.value} model{filtered}"

    def run(self, settings: Settings) -> CheckResult:
        lists = enumerate_low_genus(self.model, max(self.expected), self.simply_connected)
        by_genus = {entry.genus: sorted(entry.labels()) for entry in lists}
        problems = []
        for genus, labels in sorted(self.expected.items()):
            if by_genus.get(genus) != sorted(labels):
                problems.append(f"p_a = {genus}: {by_genus.get(genus)}, expected {sorted(labels)}")
        return self._result(problems)


class SpecializationIdentityCheck(Check):
    number = 9
    name = "double point residual matches its coordinate form"

    def run(self, settings: Settings) -> CheckResult:
        problems = []
        for model in MODELS:
            factor = 2 if model.is_even else 1
            for d in box(settings.specialization_box):
                if double_point_residual(model, d) != factor * specialized_residual(model, d):
                    problems.append(f"{model.lattice.value} {d}")
        return self._result(problems)


class BoundedCohomologyPartitionCheck(Check):
    number = 10
    name = "bounded cohomology case partition"

    def run(self, settings: Settings) -> CheckResult:
        problems = []
        for model in MODELS:
            for d in box(settings.acceptance_box):
                if not curve_class_admissible(model, d):
                    continue
                case = bounded_cohomology_case(model, d)
                tag, chi = case.case_tag, case.chi
                if tag is CaseTag.CHI_POSITIVE and chi < 1:
                    problems.append(f"{model.lattice.value} {d}: ChiPositive with chi = {chi}")
                elif tag is CaseTag.CHI_ZERO and chi != 0:
                    problems.append(f"{model.lattice.value} {d}: ChiZero with chi = {chi}")
                elif tag is CaseTag.PENCIL_RAY and model.is_even and chi != 1 - max(d.x, d.y):
                    problems.append(f"{model.lattice.value} {d}: PencilRay with chi = {chi}")
                elif tag is CaseTag.UNDETERMINED_ODD_DIAGONAL_SHIFT and model.is_even:
                    problems.append(f"even {d}: undetermined case")
        return self._result(problems)


class DeterminismCheck(Check):
    number = 11
    name = "certificates are byte-identical across runs"

    def run(self, settings: Settings) -> CheckResult:
        generator = OutputGenerator()
        problems = []
        for model in MODELS:
            first = generator.digest(generator.certificate_document(verify_no_p4_embedding(model, settings.box_bound)))
            second = generator.digest(generator.certificate_document(verify_no_p4_embedding(model, settings.box_bound)))
            if first != second:
                problems.append(f"{model.lattice.value}: {first} != {second}")
        return self._result(problems, detail="SHA-256 of the canonical JSON of two consecutive runs")


def default_checks() -> List[Check]:
    """The acceptance suite, in numbered order."""
    return [
        CanonicalInvariantsCheck(),
        ClosedFormAgreementCheck(),
        ConeLawCheck(),
        GenusFloorCheck(),
        EmbeddingCertificateCheck(SurfaceModel.even(), 5, [281, 1009], {DivisorClass(3, 3): 40}),
        EmbeddingCertificateCheck(SurfaceModel.odd(), 6, [281, 109, 1124]),
        LowGenusListCheck(SurfaceModel.even(), 7, True, {3: ["2H", "2F"], 4: ["3H", "3F"], 5: ["4H", "4F"]}),
        LowGenusListCheck(SurfaceModel.odd(), 8, False,
                          {3: ["2H-2F", "H", "H+F"], 4: ["3H-3F"], 5: ["4H-4F", "2H+2F", "2H-F"]}),
        SpecializationIdentityCheck(),
        BoundedCohomologyPartitionCheck(),
        DeterminismCheck(),
    ]
