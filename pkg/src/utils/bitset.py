"""
頂点集合（VertexSet）のビット表現

部分集合 S ⊂ [n] は整数マスクで表す。要素 i はビット i に対応し、
ビット 0 は使わない。同じ大きさの集合どうしでは、rev-lex 順序と
マスクの整数比較が一致する。
"""

from itertools import combinations
from typing import Iterable, Iterator, List, Tuple

VertexSet = int

MAX_VERTICES = 64


def make_set(indexes: Iterable[int]) -> VertexSet:
    value = 0
    for idx in indexes:
        value |= 1 << idx
    return value


def members(value: VertexSet) -> List[int]:
    """昇順の要素リスト"""
    result = []
    while value:
        lsb = value & -value
        result.append(lsb.bit_length() - 1)
        value ^= lsb
    return result


def size(value: VertexSet) -> int:
    return value.bit_count()


def full_set(n: int) -> VertexSet:
    """[n] = {1, ..., n}"""
    return ((1 << n) - 1) << 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def within(value: VertexSet, n: int) -> bool:
    return value & ~full_set(n) == 0


def submasks(value: VertexSet) -> Iterator[VertexSet]:
    """value のすべての部分集合（value 自身と空集合を含む）"""
    sub = value
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & value


def next_same_size(value: VertexSet) -> VertexSet:
    """同じ大きさで次に大きいマスク（Gosper's hack）

    ビット 0 は頂点ではないので、1 ビット右に寄せてから計算して戻す。
    """
    value >>= 1
    lsb = value & -value
    ripple = value + lsb
    return (ripple | (((value ^ ripple) >> 2) // lsb)) << 1


def subsets_of_size(ground: VertexSet, k: int) -> List[VertexSet]:
    """ground の k 元部分集合を rev-lex 昇順で返す"""
    found = [make_set(c) for c in combinations(members(ground), k)]
    found.sort()
    return found


def sort_key(value: VertexSet) -> Tuple[int, int]:
    """大きさ優先、同じ大きさでは rev-lex"""
    return (value.bit_count(), value)
