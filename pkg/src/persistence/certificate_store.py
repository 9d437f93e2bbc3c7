import logging
from typing import Any, Dict, Optional
from pathlib import Path

from .store import DocumentStore
from ..data.output_generator import SCHEMA, OutputGenerator

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ("model", "equation_id", "finite_region", "edge_cases", "exceptional_class",
                 "search_box", "sweep", "exhaustive_box_clean", "conclusion")


class CertificateStore(DocumentStore):
    """Handles saving and loading of P^4 verification certificates."""

    def __init__(self, file_path: str | Path, generator: Optional[OutputGenerator] = None):
        super().__init__(file_path)
        self.generator = generator or OutputGenerator()
        logger.debug(f"CertificateStore initialized with file path: {self.file_path.resolve()}")

    def save(self, document: Dict[str, Any]) -> None:
        """
        Write a certificate document as canonical JSON.

        Args:
            document: A document produced by OutputGenerator.certificate_document.

        Raises:
            IOError: If the file cannot be written.
        """
        self._write_text(self.generator.to_json(document))
        logger.info(f"Saved {document.get('model')} certificate to {self.file_path}")

    def load(self) -> Optional[Dict[str, Any]]:
        """
        Load a certificate document.

        Returns:
            The document, or None if the file is missing, is not valid JSON,
            or does not have the certificate shape of the current schema.
        """
        document = self._read_object()
        if document is None:
            return None

        if document.get("schema") != SCHEMA or document.get("kind") != "certificate":
            logger.error(f"Invalid certificate file {self.file_path}: schema {document.get('schema')!r}, "
                         f"kind {document.get('kind')!r}.")
            return None
        missing = [key for key in REQUIRED_KEYS if key not in document]
        if missing:
            logger.error(f"Invalid certificate file {self.file_path}: missing {missing}.")
            return None

        logger.info(f"Loaded {document['model']} certificate from {self.file_path}")
        return document

    def matches(self, document: Dict[str, Any]) -> bool:
        """Whether the stored certificate is byte-identical to `document` once serialized."""
        stored = self.load()
        if stored is None:
            return False
        return self.generator.digest(stored) == self.generator.digest(document)
