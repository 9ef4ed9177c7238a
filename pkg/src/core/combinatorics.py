"""
整数組合せ計算モジュール

二項係数、Macaulay 表現、影のサイズ関数 ∂_{k-1}、しきい値 ξ_δ、
反射原理による格子路の数え上げ。すべての結果は 64 ビット符号なし整数の
範囲で検査され、超えた場合は ArithmeticOverflow を送出する。
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.core.errors import ArithmeticOverflow, InvalidArgument

logger = logging.getLogger(__name__)

U64_MAX = (1 << 64) - 1


def _checked(value: int, what: str) -> int:
    if value > U64_MAX:
        raise ArithmeticOverflow(f"{what} が64ビットの範囲を超えました")
    return value


def binomial(n: int, k: int) -> int:
    """binom(n, k)。k > n なら 0、負の k も 0 とする"""
    if n < 0:
        raise InvalidArgument(f"binomial: n は非負である必要があります (n={n})")
    if k < 0 or k > n:
        return 0
    return _checked(math.comb(n, k), f"binom({n},{k})")


@dataclass(frozen=True)
class MacaulayRep:
    """x の k 次 Macaulay 表現

    coeffs は (a_k, ..., a_1)。実際の項は j >= lowest の部分で、
    それより下は a_j = j-1 で埋めてある（binom(a_j, j) = 0）。
    """

    x: int
    k: int
    coeffs: Tuple[int, ...]
    lowest: int

    def coefficient(self, j: int) -> int:
        return self.coeffs[self.k - j]

    def terms(self) -> List[Tuple[int, int]]:
        """(a_j, j) の組。j は k から lowest まで降順"""
        return [(self.coefficient(j), j) for j in range(self.k, self.lowest - 1, -1)]

    def value(self) -> int:
        return sum(binomial(a, j) for a, j in self.terms())

    def __str__(self) -> str:
        return "+".join(f"C({a},{j})" for a, j in self.terms())


def _largest_top(x: int, j: int) -> int:
    """binom(a, j) <= x となる最大の a（a >= j）"""
    lo, hi = j, x + j - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if math.comb(mid, j) <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def macaulay_rep(x: int, k: int) -> MacaulayRep:
    """貪欲法による k 次 Macaulay 表現"""
    if x < 1 or k < 1:
        raise InvalidArgument(f"macaulay_rep: x >= 1, k >= 1 が必要です (x={x}, k={k})")
    _checked(x, "x")

    coeffs: List[int] = []
    rest = x
    j = k
    while rest > 0:
        a = _largest_top(rest, j)
        coeffs.append(a)
        rest -= math.comb(a, j)
        j -= 1
    lowest = j + 1
    # 残りは a_j = j-1 で埋める
    coeffs.extend(i - 1 for i in range(j, 0, -1))
    return MacaulayRep(x=x, k=k, coeffs=tuple(coeffs), lowest=lowest)


def shadow_size(x: int, k: int) -> int:
    """∂_{k-1}(x) = Σ binom(a_j, j-1)。k = 1 のときは空面 1 個"""
    rep = macaulay_rep(x, k)
    total = sum(math.comb(a, j - 1) for a, j in rep.terms())
    return _checked(total, f"∂_{k - 1}({x})")


def xi(delta: int) -> int:
    """ξ_δ = Σ_{j=1}^{δ} binom(2j-1, j)"""
    if delta < 1:
        raise InvalidArgument(f"xi: δ >= 1 が必要です (δ={delta})")
    total = 0
    for j in range(1, delta + 1):
        total = _checked(total + binomial(2 * j - 1, j), f"ξ_{delta}")
    return total


class BoundBranch(str, Enum):
    XI = "Xi"
    BINOM = "Binom"


def min_bound(n: int, delta: int) -> Tuple[int, BoundBranch]:
    """min(ξ_δ, binom(n, δ-1)) と、どちらの値が採用されたか

    等号のときは Xi を返す（n = 2δ はこちらの場合に属する）。
    """
    if not 1 <= delta < n:
        raise InvalidArgument(f"min_bound: 1 <= δ < n が必要です (n={n}, δ={delta})")
    threshold = xi(delta)
    top = binomial(n, delta - 1)
    if threshold <= top:
        return threshold, BoundBranch.XI
    return top, BoundBranch.BINOM


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def compare_by_macaulay(x: int, y: int, k: int) -> Ordering:
    """埋め込み済み係数列の辞書式比較"""
    left = macaulay_rep(x, k).coeffs
    right = macaulay_rep(y, k).coeffs
    if left > right:
        return Ordering.GREATER
    if left < right:
        return Ordering.LESS
    return Ordering.EQUAL


def path_count(start_height: int, steps: int, end_height: int) -> int:
    """(0, k) から (n, m) への、X 軸に触れない U/D 路の数"""
    if start_height < 0 or steps < 0 or end_height < 0:
        raise InvalidArgument("path_count: 引数は非負である必要があります")
    n, k, m = steps, start_height, end_height
    if (n - k - m) % 2 != 0:
        return 0
    l_1 = (n - k - m) // 2
    l_2 = (n - m + k) // 2
    count = _binomial_or_zero(n, l_2) - _binomial_or_zero(n, l_1)
    return max(count, 0)


def _binomial_or_zero(n: int, k: int) -> int:
    return binomial(n, k) if k >= 0 else 0


def catalan(n: int) -> int:
    """C_n = binom(2n, n) - binom(2n, n+1)（除算なし）"""
    if n < 0:
        raise InvalidArgument(f"catalan: n >= 0 が必要です (n={n})")
    return binomial(2 * n, n) - binomial(2 * n, n + 1)


@dataclass
class KeyLemmaReport:
    """∂_{k-1}(x) >= x (x <= ξ_k) の検証結果"""

    k: int
    xi: int
    checked: int = 0
    counterexample: Optional[int] = None
    sharpness_value: int = 0
    sharp: bool = False
    telescoping_value: int = 0
    telescoping_ok: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.sharp and self.telescoping_ok


def telescoping_difference(k: int) -> int:
    """binom(2k-2,k-1) - binom(2k-2,k) - Σ_{j=1}^{k-1} (binom(k-2+j,j) - binom(k-2+j,j-1))"""
    value = binomial(2 * k - 2, k - 1) - binomial(2 * k - 2, k)
    for j in range(1, k):
        value -= binomial(k - 2 + j, j) - binomial(k - 2 + j, j - 1)
    return value


def verify_key_lemma(k: int) -> KeyLemmaReport:
    if k < 1:
        raise InvalidArgument(f"verify_key_lemma: k >= 1 が必要です (k={k})")
    threshold = xi(k)
    report = KeyLemmaReport(k=k, xi=threshold)

    for x in range(1, threshold + 1):
        report.checked += 1
        if shadow_size(x, k) < x:
            report.counterexample = x
            report.notes.append(f"∂_{k - 1}({x}) < {x}")
            break

    report.sharpness_value = shadow_size(threshold + 1, k)
    report.sharp = report.sharpness_value == threshold
    if not report.sharp:
        report.notes.append(f"∂_{k - 1}(ξ_{k}+1) = {report.sharpness_value} != ξ_{k}")

    report.telescoping_value = telescoping_difference(k)
    report.telescoping_ok = report.telescoping_value == 1

    logger.debug("key lemma k=%d: checked=%d passed=%s", k, report.checked, report.passed)
    return report
