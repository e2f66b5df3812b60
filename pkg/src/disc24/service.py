"""HTTP service exposing the verification suites.

POST /run executes one suite and returns its certificate; configuration
errors map to HTTP 400.  Run standalone with
``uvicorn disc24.service:app``; the bundled CLI talks to this app through an
in-process transport by default.
"""

from __future__ import annotations

from typing import Any, Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .certificates import Certificate
from .errors import ConfigError, VerifierError
from .suites import SUITES, SuiteConfig, run_suite


class RunRequest(BaseModel):
    suite: Literal["lattice", "mukai", "hilbert", "scroll", "geometry", "all"]
    prime: int | None = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    threads: int = Field(default=1, ge=1)
    retries: int = Field(default=5, ge=0)


class CheckModel(BaseModel):
    name: str
    status: Literal["pass", "fail", "flagged"]
    expected: Any
    actual: Any
    provenance: str
    paper_ref: str


class CertificateModel(BaseModel):
    suite: str
    tool_version: str
    config: dict
    checks: list[CheckModel]
    notes: list[str]
    status: Literal["pass", "fail"]
    timings_ms: dict


app = FastAPI(title="disc24 verifier", version=__version__)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/suites")
def suites() -> dict:
    return {"suites": list(SUITES)}


@app.post("/run", response_model=CertificateModel)
def run(request: RunRequest) -> dict:
    config = SuiteConfig(
        suite=request.suite,
        prime=request.prime,
        seed=request.seed,
        threads=request.threads,
        retries=request.retries,
    )
    try:
        certificate: Certificate = run_suite(config)
    except ConfigError as err:
        raise HTTPException(status_code=400, detail=str(err))
    except VerifierError as err:
        raise HTTPException(status_code=500, detail=f"{type(err).__name__}: {err}")
    return certificate.to_dict()
