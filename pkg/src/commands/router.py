import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from src.core.complexes import (
    MonomialIdeal,
    SimplicialComplex,
    complement_complex,
    complement_ideal,
)
from src.core.errors import InvalidArgument
from src.models.command import CommandOptions, CommandResult
from src.utils.textio import parse_ideal_text, parse_input

Handler = Callable[[CommandOptions], CommandResult]
Argument = Tuple[Tuple[str, ...], Dict[str, Any]]


def argument(*flags: str, **kwargs: Any) -> Argument:
    return flags, kwargs


@dataclass
class CommandSpec:
    name: str
    handler: Handler
    help: str = ""
    arguments: List[Argument] = field(default_factory=list)


class CommandRouter:
    """サブコマンドの登録先。main で argparse のサブパーサに展開する"""

    def __init__(self) -> None:
        self.commands: List[CommandSpec] = []

    def command(self, name: str, help: str = "", arguments: Tuple[Argument, ...] = ()) -> Callable[[Handler], Handler]:
        def decorator(func: Handler) -> Handler:
            self.commands.append(CommandSpec(name=name, handler=func, help=help, arguments=list(arguments)))
            return func

        return decorator


def read_source(path: str) -> str:
    """`-` は標準入力"""
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidArgument(f"ファイルを読めません: {path} ({e.strerror})")


def load_ideal(path: str) -> MonomialIdeal:
    """イデアルとして読む。複体なら補イデアルに変換する"""
    parsed = parse_input(read_source(path))
    if isinstance(parsed, SimplicialComplex):
        return complement_ideal(parsed)
    return parsed


def load_complex(path: str, strict_ideal: bool = False) -> SimplicialComplex:
    """複体として読む。イデアルなら補複体に変換する（strict_ideal ならイデアルだけを受け付ける）"""
    text = read_source(path)
    if strict_ideal:
        return complement_complex(parse_ideal_text(text))
    parsed = parse_input(text)
    if isinstance(parsed, MonomialIdeal):
        return complement_complex(parsed)
    return parsed
