"""Job configuration: one JSON document fully determines a run."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .polyfield import is_prime
from .quotient import RingPresentation

TASKS = ("hk", "rsig", "csig", "fsig", "chain", "deform", "report")
OUTPUTS = ("table", "csv", "json")


@dataclass
class DeformSpec:
    parameter: str
    quotient_sop: list


@dataclass
class JobConfig:
    p: int
    vars: list
    relations: list = field(default_factory=list)
    sop: list = field(default_factory=list)
    task: str = "report"
    name: str = ""
    weights: list | None = None
    e_max: int = 4
    ideal: list | None = None
    max_subspaces: int = 10**5
    output: str = "table"
    seed: int = 0
    cm_asserted: bool = True
    multiplicity: int | None = None
    deform: DeformSpec | None = None

    def __post_init__(self):
        self.vars = list(self.vars)
        self.relations = list(self.relations)
        self.sop = list(self.sop)
        if isinstance(self.deform, dict):
            self.deform = DeformSpec(**self.deform)
        self.validate()

    def validate(self):
        if not is_prime(int(self.p)):
            raise ValueError(f"p = {self.p} is not prime")
        if self.task not in TASKS:
            raise ValueError(f"task must be one of {TASKS}, got {self.task!r}")
        if self.output not in OUTPUTS:
            raise ValueError(f"output must be one of {OUTPUTS}, got {self.output!r}")
        if self.e_max < 1:
            raise ValueError("e_max must be positive")
        if self.max_subspaces < 1:
            raise ValueError("search.max_subspaces must be positive")
        if self.task == "deform" and self.deform is None:
            raise ValueError("task 'deform' needs a 'deform' section")

    @classmethod
    def from_dict(cls, data: dict) -> JobConfig:
        data = dict(data)
        search = data.pop("search", None) or {}
        if "max_subspaces" in search:
            data["max_subspaces"] = search["max_subspaces"]
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path) -> JobConfig:
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["search"] = {"max_subspaces": d.pop("max_subspaces")}
        return d

    def ring(self) -> RingPresentation:
        return RingPresentation(
            self.p, self.vars, self.relations, cm_asserted=self.cm_asserted,
            weights=self.weights, name=self.name,
        )
