"""Command-line front end; a thin client of the service app.

By default requests are served in-process through the ASGI transport, so no
server needs to be running; ``--server`` (or PLM_SERVER) points the same
commands at a remote instance instead.  PLM_CAP overrides the default bound
on content-class enumeration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

import httpx


def _make_client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    # in-process transport: same routes, no running server required
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service import app

    return TestClient(app)


def _cap(args) -> Optional[int]:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("PLM_CAP")
    return int(env) if env else None


def _basis_items(spec: str) -> list:
    if os.path.isfile(spec):
        with open(spec) as handle:
            return [
                line.strip()
                for line in handle
                if line.strip() and not line.lstrip().startswith("#")
            ]
    return [b.strip() for b in spec.split(",") if b.strip()]


def _fail(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    print(f"error: {detail}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plm",
        description="Plactic-like monoids: word equivalence, identity "
        "classification, bounded deduction, and the variety lattices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=os.environ.get("PLM_SERVER"),
                        help="base URL of a running service (default: in-process)")
    common.add_argument("--strict", action="store_true",
                        help="exit 1 on negative domain results")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("classify", help="classify an identity against the 26 varieties")
    p.add_argument("identity")
    p.add_argument("--format", choices=("text", "json"), default="json")

    p = add_parser("equiv", help="decide congruence of two letter words")
    p.add_argument("kind", help="sylv, sylvh, baxt, hypo, lst, rst, mst, jst, hs, ms")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--cap", type=int)

    p = add_parser("consequence", help="derive an identity from a basis")
    p.add_argument("identity")
    p.add_argument("--basis", required=True,
                   help="comma-separated identity tags or 'u = v' strings, "
                        "or a file with one identity per line")
    p.add_argument("--cap", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add_parser("isoterm", help="check a word is an isoterm for a variety")
    p.add_argument("variety")
    p.add_argument("word")
    p.add_argument("--cap", type=int)

    p = add_parser("monoid", help="inspect a built-in finite monoid")
    p.add_argument("name")
    p.add_argument("--table", action="store_true", help="print the Cayley table")
    p.add_argument("--check", metavar="IDENTITY", help="test an identity")

    p = add_parser("lattice", help="inspect or verify one of the lattices")
    p.add_argument("name", choices=("L1", "L2", "L3"))
    p.add_argument("--dot", action="store_true", help="emit DOT")
    p.add_argument("--verify", action="store_true", help="run the verification report")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", choices=("paper", "quick"), default="paper")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.verb == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    with _make_client(args.server) as client:
        return _dispatch(args, client)


def _dispatch(args, client: httpx.Client) -> int:
    strict_failure = False

    if args.verb == "classify":
        response = client.post("/classify", json={"identity": args.identity})
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, indent=2))
        else:
            print(f"identity:   {data['identity']}")
            print(f"balanced:   {data['balanced']}")
            print(f"properties: {', '.join(data['properties']) or '-'}")
            print(f"varieties:  {', '.join(data['varieties']) or '-'}")

    elif args.verb == "equiv":
        payload = {"kind": args.kind, "left": args.left, "right": args.right}
        if _cap(args):
            payload["cap"] = _cap(args)
        response = client.post("/equiv", json=payload)
        if response.status_code != 200:
            return _fail(response)
        equivalent = response.json()["equivalent"]
        print("equivalent" if equivalent else "not equivalent")
        strict_failure = not equivalent

    elif args.verb == "consequence":
        payload = {
            "identity": args.identity,
            "basis": _basis_items(args.basis),
        }
        if _cap(args):
            payload["cap"] = _cap(args)
        response = client.post("/consequence", json=payload)
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, indent=2))
        elif data["derivable"]:
            print(f"derivable: {data['identity']}")
            for i, step in enumerate(data["trace"], start=1):
                subst = ", ".join(f"{k} -> {v}" for k, v in sorted(step["substitution"].items()))
                print(
                    f"  step {i}: {step['basis']} ({step['direction']}; {subst}) "
                    f"=> {step['result']}"
                )
        else:
            print("not derivable (complete within content class)")
        strict_failure = not data["derivable"]

    elif args.verb == "isoterm":
        payload = {"variety": args.variety, "word": args.word}
        if _cap(args):
            payload["cap"] = _cap(args)
        response = client.post("/isoterm", json=payload)
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if data["isoterm"]:
            print(f"isoterm for {data['variety']}")
        else:
            print(f"not an isoterm: satisfies {data['counterexample']}")
        strict_failure = not data["isoterm"]

    elif args.verb == "monoid":
        if args.check:
            response = client.post(
                "/monoid/check", json={"name": args.name, "identity": args.check}
            )
            if response.status_code != 200:
                return _fail(response)
            data = response.json()
            if data["satisfies"]:
                print(f"{args.name} satisfies {data['identity']}")
            else:
                falsifier = ", ".join(
                    f"{k} -> {v}" for k, v in sorted(data["falsifier"].items())
                )
                print(f"{args.name} falsifies {data['identity']} via {falsifier}")
            strict_failure = not data["satisfies"]
        else:
            response = client.get(f"/monoid/{args.name}")
            if response.status_code != 200:
                return _fail(response)
            data = response.json()
            print(f"{args.name}: {data['size']} elements, identity {data['identity_element']}"
                  + (f", zero {data['zero_element']}" if data["zero_element"] else ""))
            if args.table:
                names = data["elements"]
                width = max(len(n) for n in names)
                header = " " * (width + 3) + "  ".join(n.rjust(width) for n in names)
                print(header)
                for name, row in zip(names, data["table"]):
                    print(f"{name.rjust(width)} |  " + "  ".join(x.rjust(width) for x in row))

    elif args.verb == "lattice":
        if args.dot:
            response = client.get(f"/lattice/{args.name}/dot")
            if response.status_code != 200:
                return _fail(response)
            print(response.text, end="")
        elif args.verify:
            response = client.post(f"/lattice/{args.name}/verify")
            if response.status_code != 200:
                return _fail(response)
            data = response.json()
            if args.format == "json":
                print(json.dumps(data, indent=2))
            else:
                for check in data["checks"]:
                    mark = "ok" if check["passed"] else "FAIL"
                    detail = f" -- {check['detail']}" if check["detail"] else ""
                    print(f"[{mark}] {check['name']}{detail}")
                print(f"{data['name']}: {'pass' if data['ok'] else 'FAIL'}")
            strict_failure = not data["ok"]
        else:
            response = client.get(f"/lattice/{args.name}")
            if response.status_code != 200:
                return _fail(response)
            data = response.json()
            if args.format == "json":
                print(json.dumps(data, indent=2))
            else:
                print(f"{data['name']}: {len(data['nodes'])} nodes, "
                      f"{len(data['cover_edges'])} cover edges, "
                      f"top {data['top']}, bottom {data['bottom']}")

    elif args.verb == "verify":
        response = client.post("/verify", json={"suite": args.suite})
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, indent=2))
        else:
            for item in data["items"]:
                mark = "PASS" if item["passed"] else "FAIL"
                extra = f" -- {item['detail']}" if not item["passed"] and item["detail"] else ""
                print(f"[{mark}] criterion {item['id']:2d} ({item['seconds']:7.2f}s): "
                      f"{item['description']}{extra}")
            print(f"suite {data['suite']}: {'pass' if data['passed'] else 'FAIL'}")
        strict_failure = not data["passed"]

    if strict_failure and args.strict:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
