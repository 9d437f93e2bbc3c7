from abc import ABC, abstractmethod
from typing import Any, Dict, Optional
from pathlib import Path
import json
import logging

logger = logging.getLogger(__name__)


class DocumentStore(ABC):
    """Abstract base class for stores that keep one JSON document per file."""

    def __init__(self, file_path: str | Path):
        self.file_path = Path(file_path)
        try:
            self.file_path.parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Error creating directory {self.file_path.parent}: {e}")

    @abstractmethod
    def save(self, document: Dict[str, Any]) -> None:
        """Save a document to the store's file."""
        pass

    @abstractmethod
    def load(self) -> Optional[Dict[str, Any]]:
        """Load the stored document, or None if it is missing or malformed."""
        pass

    def _write_text(self, text: str) -> None:
        """
        Replace the file contents with `text` by writing a sibling temporary
        file and moving it into place.

        Raises:
            IOError: If the file cannot be written.
        """
        tmp_path = self.file_path.with_name(self.file_path.name + ".tmp")
        try:
            tmp_path.write_text(text, encoding="utf-8")
            tmp_path.replace(self.file_path)
        except OSError as e:
            logger.error(f"Error writing {self.file_path}: {e}")
            tmp_path.unlink(missing_ok=True)
            raise IOError(f"Failed to write {self.file_path}: {e}")

    def _read_object(self) -> Optional[Dict[str, Any]]:
        """The file parsed as a JSON object, or None when it is missing, unreadable or not an object."""
        if not self.file_path.exists():
            logger.warning(f"File not found at {self.file_path}.")
            return None
        try:
            with open(self.file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"Error decoding JSON from {self.file_path}: {e}")
            return None
        except OSError as e:
            logger.error(f"Error reading {self.file_path}: {e}")
            return None
        if not isinstance(data, dict):
            logger.error(f"Invalid file {self.file_path}: expected a JSON object, got {type(data).__name__}.")
            return None
        return data
