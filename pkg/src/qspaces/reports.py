"""Machine-readable check reports."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
ANOMALY = "anomaly"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification step.

    result 'anomaly' is reserved for documented discrepancies between the
    derivation machinery and the stated presentations (the exotic graded
    family); pass implies an empty residual list.
    """

    kind: str
    objects: tuple = ()
    result: str = PASS
    residuals: tuple = ()  # of (location, printed element)
    notes: tuple = ()

    def __post_init__(self):
        if self.result not in (PASS, FAIL, ANOMALY):
            raise ValueError(f"bad result {self.result!r}")
        if self.result == PASS and self.residuals:
            raise ValueError("a passing report cannot carry residuals")

    @property
    def passed(self):
        return self.result == PASS

    def to_dict(self):
        return {
            "kind": self.kind,
            "objects": list(self.objects),
            "result": self.result,
            "residuals": [[loc, expr] for loc, expr in self.residuals],
            "notes": list(self.notes),
        }

    def summary(self):
        objs = " ".join(self.objects)
        line = f"[{self.result.upper():7s}] {self.kind}: {objs}"
        if self.residuals:
            line += f" ({len(self.residuals)} residual(s))"
        return line


def worst_exit_code(reports):
    """0 all pass, 1 any fail, 3 anomalies only."""
    results = {r.result for r in reports}
    if FAIL in results:
        return 1
    if ANOMALY in results:
        return 3
    return 0
