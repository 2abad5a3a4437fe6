"""HTTP verification service.

Suites are compute-heavy and solver results are cached in-process, so a
long-running service amortizes the expensive builds across runs; the CLI is
a thin client that talks to this app, in-process by default.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .checks import REGISTRY, SUITES, run_digit_checks, run_suites
from .schemas import RunReport, RunRequest, SuiteInfo

app = FastAPI(title="ellstab verifier", version="0.1.0")


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/checks", response_model=list[SuiteInfo])
def list_checks():
    out = []
    for suite in SUITES:
        out.append(SuiteInfo(suite=suite,
                             checks=sorted(d.check_id for d in REGISTRY
                                           if d.suite == suite)))
    return out


@app.post("/run", response_model=RunReport)
def run(req: RunRequest) -> RunReport:
    bad = [s for s in req.suites if s != "all" and s not in SUITES]
    if bad:
        raise HTTPException(status_code=422, detail=f"unknown suites: {bad}")
    if req.config.digits:
        return run_digit_checks(req.config.digits, req.config)
    return run_suites(req.suites, req.config)
