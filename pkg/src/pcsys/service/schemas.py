"""Pydantic request and response models for the analysis service."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class SystemSource(BaseModel):
    """Either an inline system document or the name of a bundled fixture."""

    system: Optional[dict] = None
    fixture: Optional[str] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.system is None) == (self.fixture is None):
            raise ValueError("provide exactly one of 'system' or 'fixture'")
        return self


class AnalyzeRequest(SystemSource):
    uniform: bool = False
    dcs: bool = False
    spectral: bool = False
    order: int = Field(default=0, ge=0, le=64)
    tol: Optional[float] = Field(default=None, gt=0)


class SimulateRequest(SystemSource):
    state: str
    steps: int = Field(ge=1, le=1_000_000)
    seed: int = 0
    valuation: Any = "uniform"  # "uniform" | "dominant" | inline valuation doc


class ExportDotRequest(SystemSource):
    graph: Literal["coxeter", "states", "cliques", "sc"]
    mark_null: Any = None  # None | "uniform" | "dominant" | inline valuation doc


class PetriRequest(BaseModel):
    net: dict


class ErrorPayload(BaseModel):
    error: str
    kind: str
    exit_code: int
    witness: Any = None
