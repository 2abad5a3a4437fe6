"""Request/response models for the verification service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class RunConfig(BaseModel):
    two_adic_prec: int = Field(default=6, ge=2, le=10)
    u1_cap: int = Field(default=14, ge=4, le=32)
    z_cap: int = Field(default=64, ge=16, le=260)
    t_window: int = Field(default=48, ge=8, le=64)
    s_max: int = Field(default=8, ge=1, le=10)
    digits: str | None = None


class CheckRecord(BaseModel):
    check_id: str
    ref: str
    status: str                  # pass / fail / skipped
    computed: str = ""
    expected: str = ""
    ideal: str = ""
    elapsed: float = 0.0


class RunRequest(BaseModel):
    suites: list[str] = Field(default_factory=lambda: ["all"])
    config: RunConfig = Field(default_factory=RunConfig)


class RunSummary(BaseModel):
    total: int
    passed: int
    failed: int
    skipped: int


class RunReport(BaseModel):
    config: RunConfig
    checks: list[CheckRecord]
    summary: RunSummary

    def to_stable_json(self) -> str:
        """Deterministic rendering: timing fields are omitted so reports
        with identical config are byte-identical."""
        import json
        payload = {
            "config": self.config.model_dump(),
            "checks": [
                {k: v for k, v in c.model_dump().items() if k != "elapsed"}
                for c in self.checks
            ],
            "summary": self.summary.model_dump(),
        }
        return json.dumps(payload, sort_keys=True, indent=1)


class SuiteInfo(BaseModel):
    suite: str
    checks: list[str]
