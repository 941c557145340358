"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class EvalRequest(BaseModel):
    expr: str
    digits: int = Field(default=12, ge=1)
    fuel: int = Field(default=60, ge=1)


class EvalResponse(BaseModel):
    expr: str
    digits: int
    value: str


class CompareRequest(BaseModel):
    left: str
    right: str
    fuel: int = Field(default=60, ge=1)


class CompareResponse(BaseModel):
    result: Literal["LT", "GT", "UNKNOWN"]
    last_probe: str


class LawsRequest(BaseModel):
    samples: int = Field(default=200, ge=1)
    epsilon: str = "1/1000000000"
    seed: int = 0
    fuel: int = Field(default=60, ge=1)


class ViolationModel(BaseModel):
    law: str
    detail: str


class LawsResponse(BaseModel):
    checked: int
    violations: list[ViolationModel]


class ErrorDetail(BaseModel):
    kind: Literal["parse", "domain", "apartness", "indeterminate"]
    message: str
