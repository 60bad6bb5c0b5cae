"""Outcome record shared by every check."""

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
XFAIL = "expected-fail-reproduced"
REJECTED = "rejected"

STATUSES = (PASS, FAIL, XFAIL, REJECTED)


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    params: dict
    status: str
    lhs: tuple = ()
    rhs: tuple = ()
    modulus: int | None = None
    message: str = ""
    statement: str = field(default="", compare=False)

    @property
    def ok(self):
        """Pass, reproduced expected failure, or hypothesis rejection."""
        return self.status != FAIL

    def sort_key(self):
        return (self.check_id, tuple(sorted(self.params.items())))

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "lhs": [str(c) for c in self.lhs],
            "rhs": [str(c) for c in self.rhs],
            "modulus": self.modulus,
            "message": self.message,
        }
