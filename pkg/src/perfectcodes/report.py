"""Claim-by-claim verification reports."""

from __future__ import annotations

import json
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from typing import Any

from .errors import ResourceLimit, TheoryViolation

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class ClaimResult:
    claim: str
    anchor: str
    status: str
    measured: Any = None
    expected: Any = None
    lhs_order: int | None = None
    rhs_order: int | None = None
    witnesses: list = field(default_factory=list)
    provenance: str = "DERIVED"
    note: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class VerificationReport:
    suite: str
    instance: dict
    claims: list[ClaimResult] = field(default_factory=list)
    version: str = ""

    def __post_init__(self):
        if not self.version:
            from . import __version__

            self.version = __version__

    def add(self, claim: ClaimResult) -> ClaimResult:
        self.claims.append(claim)
        return claim

    def extend(self, other: VerificationReport) -> None:
        self.claims.extend(other.claims)

    def check(
        self,
        claim: str,
        anchor: str,
        fn: Callable[[], bool | tuple],
        expected: Any = True,
        provenance: str = "DERIVED",
    ) -> ClaimResult:
        """Run ``fn`` and record the outcome.

        ``fn`` returns either a boolean or a tuple (ok, measured[, extra dict]);
        the extra dict may carry lhs_order, rhs_order, witnesses or note.
        ResourceLimit marks the claim skipped.
        """
        t0 = time.perf_counter()
        extra: dict = {}
        try:
            out = fn()
        except ResourceLimit as exc:
            return self.add(
                ClaimResult(claim, anchor, SKIPPED, expected=expected, provenance=provenance,
                            note=f"resource limit: {exc}", seconds=time.perf_counter() - t0)
            )
        except TheoryViolation as exc:
            return self.add(
                ClaimResult(claim, anchor, FAIL, expected=expected, provenance=provenance,
                            note=f"theory violation: {exc}", seconds=time.perf_counter() - t0)
            )
        if isinstance(out, tuple):
            ok, measured = out[0], out[1]
            if len(out) > 2:
                extra = out[2]
        else:
            ok, measured = out, out
        return self.add(
            ClaimResult(claim, anchor, PASS if ok else FAIL, measured=measured, expected=expected,
                        provenance=provenance, seconds=time.perf_counter() - t0, **extra)
        )

    @property
    def failures(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.status == FAIL]

    @property
    def skipped(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.status == SKIPPED]

    @property
    def passed(self) -> bool:
        return not self.failures

    def exit_code(self) -> int:
        if not self.failures:
            return 0
        return 3 if self.skipped else 1

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "suite": self.suite,
            "instance": self.instance,
            "passed": self.passed,
            # timings are left out so that reports are reproducible
            "claims": [_jsonable({k: v for k, v in asdict(c).items() if k != "seconds"}) for c in self.claims],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def text(self) -> str:
        lines = [f"{self.suite} {json.dumps(self.instance, sort_keys=True)}"]
        for c in self.claims:
            orders = ""
            if c.lhs_order is not None or c.rhs_order is not None:
                orders = f" [{c.lhs_order} vs {c.rhs_order}]"
            lines.append(f"  {c.status.upper():7} {c.claim}{orders}  measured={_short(c.measured)}")
            if c.note:
                lines.append(f"          {c.note}")
        n_fail, n_skip = len(self.failures), len(self.skipped)
        lines.append(f"{len(self.claims)} claims, {n_fail} failed, {n_skip} skipped")
        return "\n".join(lines)


def _short(x: Any) -> str:
    s = json.dumps(_jsonable(x))
    return s if len(s) <= 80 else s[:77] + "..."


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return repr(x)
