from pathlib import Path
from typing import Any, Dict, List, Optional
import hashlib
import json
import logging

import pandas as pd

from ..models.certificate import EXCLUDED_SIMPLY_CONNECTED, Certificate, GenusClassList
from ..models.errors import PreconditionError
from ..models.lattice import DivisorClass, SurfaceModel
from ..models.reports import BoundedCohomologyCase, CohomologyBounds, GenusReport, PositivityVerdict

logger = logging.getLogger(__name__)

SCHEMA = "fq-divisors/1"
TABLE_SUFFIXES = ('.csv', '.xlsx')


class OutputGenerator:
    """
    Builds the versioned JSON documents emitted by the command line, renders
    them as plain text, and writes certificate and class-list tables as CSV
    or Excel files.
    """

    def document(self, kind: str, body: Dict[str, Any]) -> Dict[str, Any]:
        """Wrap a payload with the schema version and document kind."""
        return {"schema": SCHEMA, "kind": kind, **body}

    def classify_document(self, model: SurfaceModel, d: DivisorClass, verdict: PositivityVerdict,
                          genus: GenusReport, bounds: CohomologyBounds,
                          case: Optional[BoundedCohomologyCase],
                          extras: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        return self.document("classify", {
            **(extras or {}),
            "model": model.lattice.value,
            "class": {**d.to_dict(), "label": d.label()},
            "positivity": verdict.to_dict(),
            "genus": genus.to_dict(),
            "cohomology": bounds.to_dict(),
            # Only admissible curve classes are classified.
            "bounded_cohomology": case.to_dict() if case is not None else None,
        })

    def scalar_document(self, kind: str, model: SurfaceModel, d: DivisorClass, value: int) -> Dict[str, Any]:
        return self.document(kind, {"model": model.lattice.value, "class": d.to_dict(), "value": value})

    def certificate_document(self, certificate: Certificate) -> Dict[str, Any]:
        return self.document("certificate", certificate.to_dict())

    def class_lists_document(self, model: SurfaceModel, lists: List[GenusClassList],
                             simply_connected: bool) -> Dict[str, Any]:
        return self.document("class_lists", {
            "model": model.lattice.value,
            "simply_connected": simply_connected,
            "lists": [entry.to_dict() for entry in lists],
        })

    def report_document(self, report: Any) -> Dict[str, Any]:
        """Document for an acceptance run: one entry per check plus every certificate."""
        return self.document("report", {
            "passed": report.passed,
            "checks": [result.to_dict() for result in report.results],
            "certificates": [certificate.to_dict() for certificate in report.certificates],
        })

    def to_json(self, document: Dict[str, Any]) -> str:
        """Canonical JSON: sorted keys, two-space indent, ASCII only."""
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=True) + "\n"

    def digest(self, document: Dict[str, Any]) -> str:
        """SHA-256 of the canonical JSON bytes."""
        return hashlib.sha256(self.to_json(document).encode("utf-8")).hexdigest()

    def render_text(self, document: Dict[str, Any]) -> str:
        """
        Plain-text rendering with one `path: value` fact per line, in the
        same order as the canonical JSON.
        """
        lines: List[str] = []
        self._flatten(document, "", lines)
        return "\n".join(lines) + "\n"

    def _flatten(self, value: Any, prefix: str, lines: List[str]) -> None:
        if isinstance(value, dict):
            if not value:
                lines.append(f"{prefix}: {{}}")
            for key in sorted(value):
                self._flatten(value[key], f"{prefix}.{key}" if prefix else str(key), lines)
        elif isinstance(value, list):
            if not value:
                lines.append(f"{prefix}: []")
            for index, item in enumerate(value):
                self._flatten(item, f"{prefix}[{index}]", lines)
        else:
            lines.append(f"{prefix}: {json.dumps(value)}")

    def certificate_table(self, certificate: Certificate) -> pd.DataFrame:
        """One row per finite-region class, edge case and the exceptional class."""
        rows = []
        for entry in certificate.finite_region:
            rows.append({
                "Section": "finite region",
                "Class": entry.divisor.label(),
                "x": entry.divisor.x,
                "y": entry.divisor.y,
                "Residual": entry.residual,
                "Constraint": "",
                "Reduced Quadratic": "",
                "Discriminant": None,
                "Perfect Square": None,
            })
        for edge in certificate.edge_cases:
            rows.append({
                "Section": "edge case",
                "Class": "",
                "x": None,
                "y": None,
                "Residual": None,
                "Constraint": edge.constraint,
                "Reduced Quadratic": " ".join(str(c) for c in edge.reduced_coefficients),
                "Discriminant": edge.discriminant,
                "Perfect Square": edge.is_perfect_square,
            })
        k = certificate.exceptional
        rows.append({
            "Section": "exceptional",
            "Class": k.divisor.label(),
            "x": k.divisor.x,
            "y": k.divisor.y,
            "Residual": k.residual,
            "Constraint": "D = K",
            "Reduced Quadratic": "",
            "Discriminant": None,
            "Perfect Square": None,
        })
        return pd.DataFrame(rows)

    def class_list_table(self, lists: List[GenusClassList]) -> pd.DataFrame:
        rows = []
        for entry in lists:
            for c in entry.classes:
                rows.append({"Genus": entry.genus, "Class": c.label(), "x": c.x, "y": c.y, "Excluded": False,
                             "Annotations": ", ".join(sorted(entry.annotations.get(c, [])))})
            for c in entry.excluded:
                rows.append({"Genus": entry.genus, "Class": c.label(), "x": c.x, "y": c.y, "Excluded": True,
                             "Annotations": EXCLUDED_SIMPLY_CONNECTED})
        if not rows:
            return pd.DataFrame(columns=["Genus", "Class", "x", "y", "Excluded", "Annotations"])
        return pd.DataFrame(rows)

    def generate_file(self, df: pd.DataFrame, output_path: str | Path) -> None:
        """
        Write a table to disk.

        Args:
            df: The table to write
            output_path: Destination; the suffix selects CSV or Excel

        Raises:
            PreconditionError: If the suffix is neither .csv nor .xlsx
            IOError: If there are issues writing the file
        """
        output_path = Path(output_path)
        suffix = output_path.suffix.lower()
        if suffix not in TABLE_SUFFIXES:
            raise PreconditionError(f"--table must end in .csv or .xlsx, got '{output_path.name}'")

        try:
            if suffix == '.csv':
                df.to_csv(output_path, index=False)
            else:
                df.to_excel(output_path, index=False)
            logger.info(f"Successfully generated table file: {output_path}")
        except Exception as e:
            logger.error(f"Error generating table file: {e}")
            raise IOError(f"Failed to generate table file: {e}")
