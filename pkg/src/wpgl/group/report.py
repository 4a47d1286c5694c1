from __future__ import annotations

from dataclasses import dataclass, field

from wpgl.util.wpgl_types import Axiom


@dataclass(frozen=True)
class Violation:
    axiom: Axiom
    witness: tuple
    message: str
    # "source"/"target" for the crossed modules inside a butterfly, else empty
    scope: str = ""

    def to_json(self):
        data = {"axiom": self.axiom.value, "witness": [int(w) if isinstance(w, int) or hasattr(w, "item") else w for w in self.witness], "message": self.message}
        if self.scope:
            data["scope"] = self.scope
        return data

    def __str__(self):
        prefix = f"{self.scope} " if self.scope else ""
        return f"{prefix}{self.axiom.value}: {self.message} at {self.witness}"


@dataclass
class ValidationReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: Axiom, witness, message: str):
        self.violations.append(Violation(axiom, tuple(int(w) if hasattr(w, "item") else w for w in witness), message))

    def include(self, other: ValidationReport, scope: str):
        for v in other.violations:
            self.violations.append(Violation(v.axiom, v.witness, v.message, scope))

    def axioms(self) -> set[Axiom]:
        return {v.axiom for v in self.violations}

    def to_json(self):
        return {"subject": self.subject, "valid": self.ok, "violations": [v.to_json() for v in self.violations]}

    def lines(self, limit: int = 20) -> list[str]:
        if self.ok:
            return [f"{self.subject}: valid"]
        head = [f"{self.subject}: {len(self.violations)} violation(s)"]
        shown = [str(v) for v in self.violations[:limit]]
        if len(self.violations) > limit:
            shown.append(f"... {len(self.violations) - limit} more")
        return head + shown
