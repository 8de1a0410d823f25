"""Pydantic models for run configuration and verification reports."""

from pathlib import Path
from typing import Dict, List, Literal, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)

from building_model import check_prime
from config.config import (
    BUILDING_DIMENSION,
    DEFAULT_PRIME,
    DEFAULT_RANK,
    MAX_RANK,
    REPORT_SCHEMA_VERSION,
)
from graph_engine import ConditionReport

ModelName = Literal["lattice", "building", "synthetic"]
CheckName = Literal[
    "triangle",
    "quadrangle",
    "local-wm",
    "height-formula",
    "edge-forms",
    "square-lemma",
    "apartment-embed",
    "completions",
]
GraphName = Literal["c5", "c6", "cube"]
BallFormat = Literal["json", "dot", "text"]

# Smallest radius each check can run on
MIN_RADIUS: Dict[str, int] = {
    "triangle": 3,
    "quadrangle": 3,
    "local-wm": 3,
    "height-formula": 1,
    "edge-forms": 1,
    "square-lemma": 2,
    "apartment-embed": 1,
    "completions": 2,
}

SUPPORTED_CHECKS: Dict[str, frozenset] = {
    "lattice": frozenset(MIN_RADIUS),
    "building": frozenset(MIN_RADIUS) - {"completions"},
    "synthetic": frozenset({"triangle", "quadrangle", "local-wm"}),
}

DEFAULT_CHECKS: Dict[str, List[str]] = {
    "lattice": ["triangle", "quadrangle"],
    "building": ["local-wm"],
    "synthetic": ["triangle", "quadrangle"],
}

# Checks whose statement only makes sense for rank 3 / dimension 4
RANK_THREE_CHECKS = frozenset({"square-lemma", "apartment-embed"})


class RunConfig(BaseModel):
    """One invocation of ``ball`` or ``verify``."""

    model_config = ConfigDict(extra="forbid")
    model: ModelName = "lattice"
    n: int = DEFAULT_RANK
    p: int = DEFAULT_PRIME
    radius: int = Field(default=3, ge=0)
    checks: List[CheckName] = Field(default_factory=list)
    graph: Optional[GraphName] = None
    output: Optional[Path] = None
    format: BallFormat = "json"
    all_centers: bool = False
    fail_fast: bool = False
    max_vertices: Optional[int] = Field(default=None, gt=0)
    quiet: bool = False
    building_dim: int = BUILDING_DIMENSION
    experimental: bool = False

    @field_validator("n")
    @classmethod
    def _rank_in_range(cls, n: int) -> int:
        if not 2 <= n <= MAX_RANK:
            raise ValueError(f"rank must be between 2 and {MAX_RANK}, got {n}")
        return n

    @field_validator("p")
    @classmethod
    def _prime_supported(cls, p: int) -> int:
        check_prime(p)
        return p

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.model == "synthetic" and self.graph is None:
            raise ValueError("--model synthetic needs --graph")
        if self.model != "synthetic" and self.graph is not None:
            raise ValueError("--graph only applies to --model synthetic")
        if self.building_dim != BUILDING_DIMENSION and not self.experimental:
            raise ValueError(
                f"building dimension {self.building_dim} needs --experimental"
            )
        if self.building_dim < 2:
            raise ValueError("building dimension must be at least 2")
        unsupported = [c for c in self.checks if c not in SUPPORTED_CHECKS[self.model]]
        if unsupported:
            raise ValueError(f"checks {unsupported} do not apply to the {self.model} model")
        for check in self.checks:
            if self.radius < MIN_RADIUS[check]:
                raise ValueError(
                    f"check '{check}' needs radius >= {MIN_RADIUS[check]}, got {self.radius}"
                )
            if check in RANK_THREE_CHECKS:
                if self.model == "lattice" and self.n != 3:
                    raise ValueError(f"check '{check}' needs --n 3")
                if self.model == "building" and self.building_dim != 4:
                    raise ValueError(f"check '{check}' needs building dimension 4")
        return self


class SuiteResult(BaseModel):
    """Outcome of one named check."""

    model_config = ConfigDict(extra="forbid")
    name: CheckName
    instances_checked: int
    mismatches: List[List[str]] = Field(default_factory=list)
    reports: List[ConditionReport] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.mismatches and all(r.passed for r in self.reports)


class VerificationReport(BaseModel):
    """Everything ``verify`` found, in a versioned schema."""

    model_config = ConfigDict(extra="forbid")
    schema_version: str = REPORT_SCHEMA_VERSION
    model: ModelName
    parameters: Dict[str, int]
    radius: int
    ball_vertices: int
    experimental: bool = False
    suites: List[SuiteResult]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)
