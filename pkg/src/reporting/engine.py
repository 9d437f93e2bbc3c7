import logging
from dataclasses import dataclass, field
from typing import List, Optional

from .checks import Check, CheckResult
from ..models.certificate import Certificate
from ..models.errors import ConsistencyFault
from ..utils.settings import Settings, get_settings

logger = logging.getLogger(__name__)


@dataclass
class AcceptanceReport:
    """Results of one acceptance run plus the certificates it produced."""
    results: List[CheckResult] = field(default_factory=list)
    certificates: List[Certificate] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    @property
    def failed(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]


class AcceptanceEngine:
    """
    Runs the registered acceptance checks in order and collects their results.

    A check that raises is recorded as failed and the run continues, except
    for ConsistencyFault, which stops the run because every later number
    would rest on the faulty formula.
    """

    def __init__(self, settings: Optional[Settings] = None):
        """
        Initializes the engine.

        Args:
            settings: Box sizes and bounds passed to every check. Defaults to the configured settings.
        """
        self.settings: Settings = settings or get_settings()
        self.checks: List[Check] = []

    def add_check(self, check: Check) -> None:
        """
        Registers a check. Checks run in registration order.

        Args:
            check: The check instance to add.
        """
        self.checks.append(check)
        logger.debug(f"Registered check {check.number}: {check.name}")

    def run(self) -> AcceptanceReport:
        """
        Runs every registered check.

        Returns:
            The AcceptanceReport with one result per check.

        Raises:
            RuntimeError: If no check has been registered.
            ConsistencyFault: If a closed form disagrees with its generic formula.
        """
        if not self.checks:
            logger.error("Cannot run acceptance suite: no checks registered.")
            raise RuntimeError("No checks registered with the engine")

        logger.info(f"Running {len(self.checks)} acceptance checks")
        report = AcceptanceReport()
        for check in self.checks:
            try:
                result = check.run(self.settings)
            except ConsistencyFault:
                logger.error(f"Consistency fault during check {check.number} ({check.name})")
                raise
            except Exception as e:
                logger.error(f"Check {check.number} ({check.name}) raised: {e}", exc_info=True)
                result = CheckResult(number=check.number, name=check.name, passed=False, detail=f"raised {e!r}")

            certificate = result.artifacts.get("certificate")
            if certificate is not None:
                report.certificates.append(certificate)

            status = "passed" if result.passed else "FAILED"
            log = logger.info if result.passed else logger.error
            log(f"Check {result.number} {status}: {result.name}")
            report.results.append(result)

        logger.info(f"Acceptance suite finished: {len(report.results) - len(report.failed)}/{len(report.results)} passed")
        return report
