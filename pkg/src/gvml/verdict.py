"""Three-valued verdicts for finite-scale checks.

Every check in this package answers relative to explicit finite evidence:
SATISFIED_AT_SCALE and REFUTED_AT_SCALE carry the witness that produced
them, INCONCLUSIVE means the search budget ran out without a decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Status(Enum):
    SATISFIED_AT_SCALE = "SATISFIED_AT_SCALE"
    REFUTED_AT_SCALE = "REFUTED_AT_SCALE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a finite-scale check.

    witness holds structured evidence (points, indices, values); a refuted
    verdict must always carry one so the violation can be re-evaluated.
    certificate holds quantitative margins that are informative but not
    required to reproduce the verdict.
    """

    status: Status
    witness: dict[str, Any] | None = None
    certificate: dict[str, Any] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.status is Status.REFUTED_AT_SCALE and self.witness is None:
            raise ValueError("a refuted verdict must carry a witness")

    @property
    def satisfied(self) -> bool:
        return self.status is Status.SATISFIED_AT_SCALE

    @property
    def refuted(self) -> bool:
        return self.status is Status.REFUTED_AT_SCALE

    @property
    def inconclusive(self) -> bool:
        return self.status is Status.INCONCLUSIVE


def satisfied(witness: dict[str, Any] | None = None,
              certificate: dict[str, Any] | None = None) -> Verdict:
    return Verdict(Status.SATISFIED_AT_SCALE, witness, certificate)


def refuted(witness: dict[str, Any],
            certificate: dict[str, Any] | None = None) -> Verdict:
    return Verdict(Status.REFUTED_AT_SCALE, witness, certificate)


def inconclusive(witness: dict[str, Any] | None = None,
                 certificate: dict[str, Any] | None = None) -> Verdict:
    return Verdict(Status.INCONCLUSIVE, witness, certificate)
