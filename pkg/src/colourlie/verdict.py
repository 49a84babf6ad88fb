from __future__ import annotations

from dataclasses import dataclass, field


class InternalInconsistency(AssertionError):
    """Two computations that must agree did not. Always a bug, never bad input."""


@dataclass
class Verdict:
    name: str
    ok: bool
    witness: object = None
    lhs: object = None
    rhs: object = None
    detail: str = ""
    witnesses: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, name: str, detail: str = "") -> Verdict:
        return cls(name, True, detail=detail)

    def describe(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        if self.ok:
            return f"{self.name} {status}"
        w = self.witness
        if isinstance(w, (tuple, list)):
            w = "(" + ", ".join(str(x) for x in w) + ")"
        parts = [f"witness: {w}"]
        if self.lhs is not None or self.rhs is not None:
            parts.append(f"lhs={self.lhs} rhs={self.rhs}")
        if self.detail:
            parts.append(self.detail)
        return f"{self.name} {status} ({' '.join(parts)})"


def all_of(name: str, verdicts) -> Verdict:
    """Combine sub-verdicts; the first failure supplies the witness."""
    verdicts = list(verdicts)
    for v in verdicts:
        if not v.ok:
            return Verdict(name, False, v.witness, v.lhs, v.rhs,
                           f"{v.name}: {v.detail}".rstrip(": "), v.witnesses)
    return Verdict.passed(name)
