"""Command-line client for the exactreal service.

By default each command talks to an in-process instance of the FastAPI app
over an ASGI transport, so no server needs to be running; pass --url to
target a remote instance instead. `serve` starts the HTTP service.

Exit codes: 0 success, 1 violation (or UNKNOWN comparison under --strict),
2 usage/parse error, 3 apartness-fuel error.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_APARTNESS = 3

_ERROR_EXIT_CODES = {
    "parse": EXIT_USAGE,
    "domain": EXIT_USAGE,
    "apartness": EXIT_APARTNESS,
    "indeterminate": EXIT_VIOLATION,
}


async def _post(url: str | None, path: str, payload: dict) -> httpx.Response:
    if url:
        async with httpx.AsyncClient(base_url=url, timeout=None) as client:
            return await client.post(path, json=payload)
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://exactreal", timeout=None
    ) as client:
        return await client.post(path, json=payload)


def _call(url: str | None, path: str, payload: dict) -> dict:
    try:
        response = asyncio.run(_post(url, path, payload))
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VIOLATION)
    body = response.json()
    if response.status_code >= 400:
        detail = body.get("detail", {})
        if isinstance(detail, dict) and "kind" in detail:
            print(f"error: {detail['message']}", file=sys.stderr)
            raise SystemExit(_ERROR_EXIT_CODES.get(detail["kind"], EXIT_VIOLATION))
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return body


def cmd_eval(args) -> int:
    body = _call(
        args.url,
        "/eval",
        {"expr": args.expr, "digits": args.digits, "fuel": args.fuel},
    )
    print(body["value"])
    return EXIT_OK


def cmd_compare(args) -> int:
    body = _call(
        args.url,
        "/compare",
        {"left": args.left, "right": args.right, "fuel": args.fuel},
    )
    if body["result"] == "UNKNOWN":
        print(f"UNKNOWN({body['last_probe']})")
        return EXIT_VIOLATION if args.strict else EXIT_OK
    print(body["result"])
    return EXIT_OK


def cmd_laws(args) -> int:
    body = _call(
        args.url,
        "/laws",
        {
            "samples": args.samples,
            "epsilon": args.epsilon,
            "seed": args.seed,
            "fuel": args.fuel,
        },
    )
    for violation in body["violations"]:
        print(f"violation [{violation['law']}] {violation['detail']}")
    print(f"{len(body['violations'])} violations in {body['checked']} checks")
    return EXIT_OK if not body["violations"] else EXIT_VIOLATION


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("exactreal.service:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactreal", description="Exact real calculator"
    )
    parser.add_argument("--url", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression to decimals")
    p_eval.add_argument("expr")
    p_eval.add_argument("--digits", type=int, default=12)
    p_eval.add_argument("--fuel", type=int, default=60)
    p_eval.set_defaults(func=cmd_eval)

    p_cmp = sub.add_parser("compare", help="compare two expressions")
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")
    p_cmp.add_argument("--fuel", type=int, default=60)
    p_cmp.add_argument("--strict", action="store_true",
                       help="exit 1 when the comparison stays UNKNOWN")
    p_cmp.set_defaults(func=cmd_compare)

    p_laws = sub.add_parser("laws", help="run the ordered-field law suite")
    p_laws.add_argument("--samples", type=int, default=200)
    p_laws.add_argument("--epsilon", default="1/1000000000")
    p_laws.add_argument("--seed", type=int, default=0)
    p_laws.add_argument("--fuel", type=int, default=60)
    p_laws.set_defaults(func=cmd_laws)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
