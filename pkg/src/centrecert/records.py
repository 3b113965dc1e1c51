"""Pass/fail records shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one verification.

    ``anchor`` names the mathematical claim being certified (or the tag
    ``"plumbing"``).  ``witnesses`` hold recomputable values rendered as
    text, in a fixed order.  ``elapsed`` is wall time in seconds and is
    kept out of serialised reports so that they stay reproducible.
    """

    check_id: str
    anchor: str
    passed: bool
    witnesses: tuple[tuple[str, str], ...] = ()
    message: str = ""
    elapsed: float = field(default=0.0, compare=False)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def witness(self, key: str) -> str:
        for k, v in self.witnesses:
            if k == key:
                return v
        raise KeyError(key)

    def __bool__(self) -> bool:
        return self.passed


def record(check_id: str, anchor: str, failures: list[str], witnesses, elapsed: float = 0.0) -> CheckRecord:
    """Build a record that passes iff ``failures`` is empty."""
    return CheckRecord(
        check_id=check_id,
        anchor=anchor,
        passed=not failures,
        witnesses=tuple((str(k), str(v)) for k, v in witnesses),
        message="; ".join(failures),
        elapsed=elapsed,
    )
