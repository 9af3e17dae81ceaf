"""
Машиночитаемый отчёт о запуске команды
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..config import get_config
from ..morphisms.verification import VerificationReport


class RunReport(BaseModel):
    """Отчёт команды; порядок полей фиксирован"""
    command: str
    family: Optional[str] = None
    verdict: str = "pass"
    window_sizes: List[int] = Field(default_factory=list)
    verdicts: List[Dict[str, Any]] = Field(default_factory=list)
    violations: List[List[str]] = Field(default_factory=list)
    total_violations: int = 0
    data: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    elapsed_seconds: float = 0.0

    def add_verification(self, report: VerificationReport) -> None:
        """Добавить итог проверки; свидетели нарушений обрезаются по TWINBENCH_VIOLATION_CAP"""
        self.verdicts.append(report.summary())
        if report.window_size not in self.window_sizes:
            self.window_sizes.append(report.window_size)
        self.total_violations += report.total_violations
        cap = get_config().violation_cap
        for kind, count in report.violation_counts.items():
            if not count:
                continue
            for witness in getattr(report, f"{kind}_violations"):
                if len(self.violations) >= cap:
                    break
                self.violations.append([kind, *witness])
        self.notes.extend(note for note in report.notes if note not in self.notes)
        if not report.passed:
            self.verdict = "fail"

    def to_text(self) -> str:
        return self.model_dump_json(indent=2) + "\n"
