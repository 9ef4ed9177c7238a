"""
テキスト形式の読み書き

イデアル:   1行目 `n=<int>`、以降1行に1生成元（`x1*x3` または `1 3`、`1` は単位元）
複体:       1行目 `complex n=<int>`、以降1行に1 facet（書式はイデアルと同じ）
証明書:     `SDR` の後に `facet <集合> drop <v>`、または `VIOLATOR` の後に facet を1行ずつ
区間分割:   `interval <下端> -> <上端>`
`#` 以降はコメント。変数1個の集合は `x<i>` と書く（`3` だけの行は受け付けない）。
"""

import re
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from src.core.collapse import CertificateKind, CollapseCertificate
from src.core.complexes import (
    MonomialIdeal,
    SimplicialComplex,
    make_complex,
    normalize_ideal,
)
from src.core.errors import ParseError
from src.core.poset import IntervalPartition, render_interval
from src.utils.bitset import MAX_VERTICES, VertexSet, make_set, members, size, sort_key

IDEAL_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
COMPLEX_HEADER = re.compile(r"^complex\s+n\s*=\s*(\d+)$")
VARIABLE = re.compile(r"^x(\d+)$")

Parsed = Union[MonomialIdeal, SimplicialComplex]


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    """(行番号, コメントを除いた内容) を空行を飛ばして返す"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_set(token: str, line: int, n: Optional[int] = None) -> VertexSet:
    token = token.strip()
    if token == "1":
        return 0
    if "x" in token:
        indexes = []
        for part in token.split("*"):
            match = VARIABLE.match(part.strip())
            if not match:
                raise ParseError(f"単項式として読めません: {token!r}", line)
            indexes.append(int(match.group(1)))
    else:
        try:
            indexes = [int(part) for part in token.split()]
        except ValueError:
            raise ParseError(f"添字の並びとして読めません: {token!r}", line)
        if len(indexes) == 1:
            raise ParseError(f"変数1個の集合は x{indexes[0]} と書いてください", line)
    for idx in indexes:
        if idx < 1 or (n is not None and idx > n):
            raise ParseError(f"添字 {idx} が範囲外です" + (f" (n={n})" if n is not None else ""), line)
    if len(set(indexes)) != len(indexes):
        raise ParseError(f"添字が重複しています: {token!r}", line)
    return make_set(indexes)


def _parse_header(text: str) -> Tuple[str, int, List[Tuple[int, str]]]:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("入力が空です")
    number, header = lines[0]
    match = COMPLEX_HEADER.match(header)
    if match:
        return "complex", int(match.group(1)), lines[1:]
    match = IDEAL_HEADER.match(header)
    if match:
        return "ideal", int(match.group(1)), lines[1:]
    raise ParseError(f"ヘッダ `n=<int>` または `complex n=<int>` がありません: {header!r}", number)


def _parse_body(text: str, expected: str) -> Tuple[int, List[VertexSet]]:
    kind, n, lines = _parse_header(text)
    if kind != expected:
        if expected == "ideal":
            raise ParseError("イデアルのファイル（ヘッダ `n=<int>`）が必要です", 1)
        raise ParseError("複体のファイル（ヘッダ `complex n=<int>`）が必要です", 1)
    if not 1 <= n <= MAX_VERTICES:
        raise ParseError(f"n は 1 以上 {MAX_VERTICES} 以下です (n={n})", 1)
    sets = [parse_set(line, number, n) for number, line in lines]
    if not sets:
        raise ParseError("生成元または facet が1つもありません")
    return n, sets


def parse_ideal_text(text: str) -> MonomialIdeal:
    n, sets = _parse_body(text, "ideal")
    return normalize_ideal(sets, n)


def parse_complex_text(text: str) -> SimplicialComplex:
    n, sets = _parse_body(text, "complex")
    return make_complex(sets, n)


def parse_input(text: str) -> Parsed:
    """ヘッダを見てイデアルか複体かを判別する"""
    kind, _, _ = _parse_header(text)
    if kind == "complex":
        return parse_complex_text(text)
    return parse_ideal_text(text)


def render_indexes(value: VertexSet) -> str:
    return " ".join(str(i) for i in members(value))


def format_monomial(value: VertexSet) -> str:
    if value == 0:
        return "1"
    return "*".join(f"x{i}" for i in members(value))


def format_face(value: VertexSet) -> str:
    if value == 0:
        return "1"
    if size(value) == 1:
        return format_monomial(value)
    return render_indexes(value)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"n={ideal.n}"]
    lines.extend(format_monomial(g) for g in sorted(ideal.generators, key=sort_key))
    return "\n".join(lines) + "\n"


def format_complex(complex_: SimplicialComplex) -> str:
    lines = [f"complex n={complex_.n}"]
    lines.extend(format_face(f) for f in sorted(complex_.facets, key=sort_key))
    return "\n".join(lines) + "\n"


def format_certificate(certificate: CollapseCertificate) -> str:
    lines = [certificate.kind.value]
    if certificate.kind == CertificateKind.SDR:
        for facet in sorted(certificate.drops, key=sort_key):
            lines.append(f"facet {render_indexes(facet)} drop {certificate.drops[facet]}")
    else:
        lines.extend(render_indexes(f) for f in certificate.violator)
    return "\n".join(lines) + "\n"


def format_partition(partition: IntervalPartition) -> str:
    return "".join(
        f"interval {render_interval(interval)}\n" for interval in partition.intervals
    )


def _parse_index_list(token: str, line: int) -> VertexSet:
    token = token.strip()
    if not token:
        return 0
    try:
        indexes = [int(part) for part in token.split()]
    except ValueError:
        raise ParseError(f"添字の並びとして読めません: {token!r}", line)
    if any(i < 1 or i > MAX_VERTICES for i in indexes):
        raise ParseError(f"添字が範囲外です: {token!r}", line)
    return make_set(indexes)


def parse_certificate(text: str) -> CollapseCertificate:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("証明書が空です")
    number, header = lines[0]
    if header == CertificateKind.SDR.value:
        drops: Dict[VertexSet, int] = {}
        for number, line in lines[1:]:
            match = re.match(r"^facet\s+(.*?)\s+drop\s+(\d+)$", line)
            if not match:
                raise ParseError(f"`facet <集合> drop <v>` の形ではありません: {line!r}", number)
            facet = _parse_index_list(match.group(1), number)
            if facet in drops:
                raise ParseError("同じ facet が2回現れました", number)
            drops[facet] = int(match.group(2))
        return CollapseCertificate(kind=CertificateKind.SDR, drops=drops)
    if header == CertificateKind.VIOLATOR.value:
        violator = tuple(_parse_index_list(line, number) for number, line in lines[1:])
        return CollapseCertificate(kind=CertificateKind.VIOLATOR, violator=violator)
    raise ParseError(f"証明書のヘッダは SDR か VIOLATOR です: {header!r}", number)


def parse_partition(text: str) -> IntervalPartition:
    intervals = []
    for number, line in _lines(text):
        if not line.startswith("interval") or "->" not in line:
            raise ParseError(f"`interval <下端> -> <上端>` の形ではありません: {line!r}", number)
        bottom, top = line[len("interval"):].split("->", 1)
        intervals.append((_parse_index_list(bottom, number), _parse_index_list(top, number)))
    if not intervals:
        raise ParseError("区間が1つもありません")
    return IntervalPartition(k=size(intervals[0][1]), intervals=tuple(intervals))


def is_partition_text(text: str) -> bool:
    first = next(_lines(text), None)
    return first is not None and first[1].startswith("interval")


def flatten(tree: Any, prefix: str = "") -> List[Tuple[str, str]]:
    """入れ子の dict/list を `a.b.0` 形式のキーに平らにする（挿入順を保つ）"""
    if isinstance(tree, dict):
        pairs: List[Tuple[str, str]] = []
        for key, value in tree.items():
            pairs.extend(flatten(value, f"{prefix}.{key}" if prefix else str(key)))
        return pairs
    if isinstance(tree, (list, tuple)):
        pairs = []
        for i, value in enumerate(tree):
            pairs.extend(flatten(value, f"{prefix}.{i}" if prefix else str(i)))
        return pairs
    if isinstance(tree, bool):
        return [(prefix, "true" if tree else "false")]
    if tree is None:
        return [(prefix, "none")]
    return [(prefix, str(tree))]


def format_machine(tree: Dict[str, Any]) -> str:
    return "".join(f"{key} = {value}\n" for key, value in flatten(tree))

