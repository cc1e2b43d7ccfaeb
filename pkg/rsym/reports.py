#!/usr/bin/env python3
"""
RSym - Informes de verificación
Desarrollado por: Vicente Alonso

Modelos pydantic para los resultados de las comprobaciones. Cada
comprobación produce un CheckResult; un VerificationReport los agrupa y
calcula el estado global.
"""

import logging
from typing import Iterable, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "skip"]


class CheckResult(BaseModel):
    """Resultado de una comprobación individual"""
    check_id: str
    anchor: str = ""
    status: Status
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def line(self) -> str:
        text = f"[{self.status.upper():4}] {self.check_id}"
        if self.anchor:
            text += f" - {self.anchor}"
        if self.witness:
            text += f" | {self.witness}"
        return text


class VerificationReport(BaseModel):
    """
    Conjunto de comprobaciones con estado global
    """
    title: str = ""
    checks: List[CheckResult] = Field(default_factory=list)

    @computed_field
    @property
    def status(self) -> Status:
        if any(c.status == "fail" for c in self.checks):
            return "fail"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def add(
        self,
        check_id: str,
        ok: bool,
        anchor: str = "",
        witness: Optional[str] = None,
    ) -> CheckResult:
        """Registrar una comprobación pass/fail"""
        result = CheckResult(
            check_id=check_id,
            anchor=anchor,
            status="pass" if ok else "fail",
            witness=witness,
        )
        self.checks.append(result)
        if ok:
            logger.debug(f"OK {check_id}")
        else:
            logger.warning(f"Fallo en {check_id}: {witness or 'sin testigo'}")
        return result

    def skip(self, check_id: str, anchor: str = "", reason: str = "") -> CheckResult:
        result = CheckResult(check_id=check_id, anchor=anchor, status="skip", witness=reason or None)
        self.checks.append(result)
        return result

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def get(self, check_id: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.check_id == check_id:
                return check
        return None

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    def sorted_checks(self) -> List[CheckResult]:
        return sorted(self.checks, key=lambda c: c.check_id)

    def render(self) -> str:
        """Texto plano, una línea por comprobación"""
        lines = []
        if self.title:
            lines.append(self.title)
        lines.extend(c.line() for c in self.sorted_checks())
        passed = sum(1 for c in self.checks if c.status == "pass")
        failed = sum(1 for c in self.checks if c.status == "fail")
        skipped = len(self.checks) - passed - failed
        lines.append(
            f"RESULTADO: {self.status.upper()} ({passed} ok, {failed} fallos, {skipped} omitidas)"
        )
        return "\n".join(lines)

    def to_json(self) -> str:
        ordered = self.model_copy(update={"checks": self.sorted_checks()})
        return ordered.model_dump_json(indent=2)


def merge_reports(title: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    merged = VerificationReport(title=title)
    for report in reports:
        merged.extend(report)
    return merged
