"""Thin command-line client for the verification service.

With no ``--server`` the request runs against the FastAPI app through an
in-process transport, so no network or daemon is needed.  Exit codes:
0 every check passed (flags allowed), 1 some check failed, 2 configuration
or transport error.
"""

from __future__ import annotations

import argparse
import os
import sys

import httpx

from .certificates import canonical_json, render
from .suites import SUITES

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verifier",
        description="Run a verification suite and emit its JSON certificate.",
    )
    parser.add_argument("suite", choices=SUITES, help="suite to run")
    parser.add_argument("--prime", type=int, default=None,
                        help="field characteristic (geometry suite only)")
    parser.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker count for the enumeration scans "
                             "(default: VERIFIER_THREADS or 1)")
    parser.add_argument("--retries", type=int, default=5,
                        help="genericity retry budget")
    parser.add_argument("--out", type=str, default=None,
                        help="write the JSON certificate here instead of stdout")
    parser.add_argument("--server", type=str, default=None,
                        help="base URL of a running verifier service "
                             "(default: in-process)")
    return parser


def resolve_threads(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("VERIFIER_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(EXIT_CONFIG)
    return 1


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # in-process ASGI transport: the CLI stays a client of the service
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)

def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        print("error: seed must fit in an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_CONFIG
    try:
        threads = resolve_threads(args.threads)
    except SystemExit:
        print("error: VERIFIER_THREADS must be an integer", file=sys.stderr)
        return EXIT_CONFIG
    payload = {
        "suite": args.suite,
        "prime": args.prime,
        "seed": args.seed,
        "threads": threads,
        "retries": args.retries,
    }
    try:
        with _client(args.server) as client:
            response = client.post("/run", json=payload)
    except httpx.HTTPError as err:
        print(f"error: cannot reach the verifier service: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if response.status_code == 400 or response.status_code == 422:
        detail = response.json().get("detail", "invalid configuration")
        print(f"error: {detail}", file=sys.stderr)
        return EXIT_CONFIG
    if response.status_code != 200:
        print(f"error: service returned {response.status_code}: {response.text}",
              file=sys.stderr)
        return EXIT_CONFIG
    certificate = response.json()
    document = canonical_json(certificate)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(document)
        sys.stdout.write(render(certificate))
    else:
        sys.stdout.write(document)
        sys.stderr.write(render(certificate))
    return EXIT_PASS if certificate.get("status") == "pass" else EXIT_FAIL


def entrypoint() -> None:
    sys.exit(main())
