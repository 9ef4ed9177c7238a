import argparse
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from src.commands.decide import router as decide_router
from src.commands.generate import router as generate_router
from src.commands.probe import router as probe_router
from src.commands.router import CommandRouter
from src.commands.theory import router as theory_router
from src.config import settings
from src.core.errors import ResourceLimit, SdepthError
from src.models.command import CommandOptions

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_LIMIT = 3

COMMON_KEYS = {"command", "handler", "format", "budget", "workers", "verbose", "log_dir"}

# ルーター登録
ROUTERS: List[CommandRouter] = [decide_router, theory_router, generate_router, probe_router]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "machine"], default=None, help="出力形式")
    common.add_argument("--budget", type=int, default=None, help="探索ノード数の上限")
    common.add_argument("--workers", type=int, default=None, help="分割探索の並列数")
    common.add_argument("-v", "--verbose", action="count", default=0, help="診断ログを増やす（-vv で DEBUG）")
    common.add_argument("--log-dir", default=None, help="探索結果の CSV ログを置くディレクトリ")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdepth-check",
        description=f"{settings.app_name} {settings.app_version}: 平方自由単項式イデアルの Stanley depth",
    )
    common = _common_options()
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for router in ROUTERS:
        for spec in router.commands:
            sub = subparsers.add_parser(spec.name, help=spec.help, description=spec.help, parents=[common])
            for flags, kwargs in spec.arguments:
                sub.add_argument(*flags, **kwargs)
            sub.set_defaults(handler=spec.handler)
    return parser


def configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _fail(code: str, message: str) -> None:
    print(f"error: {code}: {message}", file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse は使い方の誤りで 2、--help で 0 を返す
        return int(exc.code or 0)

    configure_logging(args.verbose)
    try:
        options = CommandOptions(
            command=args.command,
            output_format=args.format or settings.output_format,
            budget=args.budget if args.budget is not None else settings.node_budget,
            workers=args.workers if args.workers is not None else settings.solver_workers,
            verbose=args.verbose,
            log_dir=args.log_dir,
            params={k: v for k, v in vars(args).items() if k not in COMMON_KEYS},
        )
    except ValidationError as e:
        first = e.errors()[0]
        _fail("INVALID_ARGUMENT", f"{'.'.join(str(p) for p in first['loc'])}: {first['msg']}")
        return EXIT_INPUT_ERROR

    logger.debug("command=%s options=%s", options.command, options.model_dump(exclude={"params"}))
    try:
        result = args.handler(options)
    except ResourceLimit as e:
        _fail(e.code, e.message)
        return EXIT_RESOURCE_LIMIT
    except SdepthError as e:
        _fail(e.code, e.message)
        return EXIT_INPUT_ERROR

    sys.stdout.write(result.render(options.output_format))
    return result.exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
