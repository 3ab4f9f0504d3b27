"""
Acceptance suite runner
"""

import logging
import math
import os
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator
from tqdm import tqdm

from ..qcore.errors import QKernelError
from ..qcore.types import CheckReport, TruncationPolicy
from .quadrature import QuadratureConfig
from .registry import RegisteredCheck, SuiteContext, default_registry

logger = logging.getLogger(__name__)


class SuiteConfig(BaseModel):
    """
    Which checks run and how.

    ``include`` None means every registered check and an empty list means
    none; ``exclude`` is applied after it. Slow checks only run with
    ``include_slow`` or when named in ``include``.
    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(default_factory=lambda: int(os.getenv("QKERNEL_SEED", "42")))
    samples: int = 100
    include: Optional[List[str]] = None
    exclude: List[str] = Field(default_factory=list)
    include_slow: bool = True
    tolerances: Dict[str, float] = Field(default_factory=dict)
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    policy: TruncationPolicy = Field(default_factory=TruncationPolicy)

    @field_validator("samples")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("samples >= 0")
        return value

    @field_validator("tolerances")
    @classmethod
    def _finite_tolerances(cls, value: Dict[str, float]) -> Dict[str, float]:
        for name, tol in value.items():
            if not (math.isfinite(tol) and tol >= 0):
                raise ValueError(f"tolerance for {name} must be finite and >= 0")
        return value

    def selects(self, check: RegisteredCheck) -> bool:
        if check.name in self.exclude:
            return False
        if self.include is not None:
            return check.name in self.include
        return self.include_slow or not check.slow


def _failure(check: RegisteredCheck, code: str, invariant: str, detail: Optional[str]) -> CheckReport:
    return CheckReport.build(
        identity_id=check.name,
        observed_error=math.inf,
        tolerance=check.tolerance,
        witness={},
        diagnostics={"code": code, "invariant": invariant, "detail": detail},
    )


class SuiteRunner:
    """
    Runs registered checks one after another and collects their reports.
    An exception inside a check becomes a failed report, never an abort.
    """

    def __init__(self,
                 config: Optional[SuiteConfig] = None,
                 registry: Optional[List[RegisteredCheck]] = None,
                 progress: bool = True):
        """
        Args:
            config: Suite configuration (defaults from the environment if None)
            registry: Checks to choose from (the full acceptance registry if None)
            progress: Whether to show a progress bar
        """
        self.config = config or SuiteConfig()
        self.registry = default_registry() if registry is None else registry
        self.progress = progress
        self.context = SuiteContext(
            quadrature=self.config.quadrature,
            policy=self.config.policy,
            seed=self.config.seed,
            samples=self.config.samples,
        )

    def selected(self) -> List[RegisteredCheck]:
        """Registered checks chosen by the configuration, tolerance overrides applied."""
        chosen = []
        for check in self.registry:
            if not self.config.selects(check):
                continue
            override = self.config.tolerances.get(check.name)
            if override is not None:
                check = check.model_copy(update={"tolerance": override})
            chosen.append(check)
        return chosen

    def run_check(self, check: RegisteredCheck) -> List[CheckReport]:
        try:
            return check.run(self.context)
        except QKernelError as e:
            logger.warning("%s raised %s: %s", check.name, e.code, e)
            return [_failure(check, e.code, e.invariant, e.detail)]
        except Exception as e:
            logger.exception("%s crashed", check.name)
            return [_failure(check, type(e).__name__, "unexpected error", str(e))]

    def run(self) -> List[CheckReport]:
        checks = self.selected()
        if not checks:
            logger.info("no checks selected")
            return []

        logger.info("running %d checks with seed %d", len(checks), self.config.seed)
        reports: List[CheckReport] = []
        for check in tqdm(checks, desc="Running checks", disable=not self.progress):
            results = self.run_check(check)
            failed = sum(1 for report in results if not report.passed)
            if failed:
                logger.warning("%s: %d of %d reports failed", check.name, failed, len(results))
            reports.extend(results)

        # stable sort keeps each check's own report order
        reports.sort(key=lambda report: report.identity_id)
        return reports


def run_suite(config: Optional[SuiteConfig] = None,
              registry: Optional[List[RegisteredCheck]] = None,
              progress: bool = True) -> List[CheckReport]:
    """Run the selected checks; failures are reports, not exceptions."""
    return SuiteRunner(config, registry, progress).run()


def all_passed(reports: List[CheckReport]) -> bool:
    return all(report.passed for report in reports)
