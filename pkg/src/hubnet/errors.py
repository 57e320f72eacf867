from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class IssueCode(str, Enum):
    UNKNOWN_VERTEX = "UnknownVertex"
    DUPLICATE_VERTEX = "DuplicateVertex"
    TOO_FEW_CANDIDATES = "TooFewCandidates"
    NEGATIVE_COST = "NegativeCost"
    DISCONNECTED_NETWORK = "DisconnectedNetwork"
    EMPTY_ROLE = "EmptyRole"
    SELF_LOOP = "SelfLoop"
    DUPLICATE_EDGE = "DuplicateEdge"
    HEAVY_BELOW_LIGHT = "HeavyBelowLight"
    INVALID_VALUE = "InvalidValue"
    MISSING_FIELD = "MissingField"


@dataclass(frozen=True)
class Issue:
    code: IssueCode
    message: str

    def __str__(self) -> str:
        return f"{self.code.value}: {self.message}"


class ValidationError(Exception):
    """Every violation found in one pass; never raised with an empty list."""

    def __init__(self, issues: list[Issue]):
        if not issues:
            raise ValueError("ValidationError requires at least one issue")
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))

    @property
    def codes(self) -> set[IssueCode]:
        return {i.code for i in self.issues}


class NegativeCycle(Exception):
    def __init__(self, vertex: int, via: int):
        self.vertex = vertex
        self.via = via
        super().__init__(f"negative cycle through vertex {vertex} (detected at stage {via})")


class UnreachableLeg(Exception):
    pass


class NoFeasibleChain(Exception):
    def __init__(self, location: int):
        self.location = location
        super().__init__(f"no production/storage chain reaches location {location}")


class MissingMargin(Exception):
    def __init__(self, location: int):
        self.location = location
        super().__init__(f"per-location margin has no entry for vertex {location}")
