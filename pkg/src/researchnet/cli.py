"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
from dataclasses import replace

import uvicorn

from .api.app import create_app
from .config import load_app_config
from .platform import Platform


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="researchnet",
        description="Research-instrumented community platform",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--config", help="path to a YAML config file")
    serve.add_argument("--host", help="bind address (overrides config)")
    serve.add_argument("--port", type=int, help="bind port (overrides config)")
    return parser


def main(argv: list[str] | None = None) -> None:
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        config = load_app_config(args.config)
        if args.host:
            config = replace(config, host=args.host)
        if args.port:
            config = replace(config, port=args.port)
        platform = Platform(config)
        try:
            uvicorn.run(create_app(platform), host=config.host, port=config.port)
        finally:
            platform.close()


if __name__ == "__main__":
    main()
