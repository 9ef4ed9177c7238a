"""
小さなパラメータでの全数探索

- probe_star: 純な (δ-1) 次元複体で f_{δ-2} >= f_{δ-1} なのに一様崩壊できないもの
- probe_xi_min: Ξ の極小元（一様崩壊できないが、facet を一つ除くと崩壊できる補複体）

[n] の δ 元部分集合族をビット列で全列挙し、Hall 条件
|Γ(A)| >= |A| がすべての部分族 A で成り立つかを表で求める。
部分族の判定結果は一つ要素を除いた族から引き継げるので、
族の数を N として O(N log N) 程度の手間で済む。
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.config import settings
from src.core.collapse import CertificateKind, is_uniformly_collapsible
from src.core.combinatorics import binomial, xi
from src.core.complexes import (
    MonomialIdeal,
    SimplicialComplex,
    complement_ideal,
)
from src.core.errors import InvalidArgument, ResourceLimit
from src.utils.bitset import VertexSet, full_set, members, subsets_of_size

logger = logging.getLogger(__name__)


class HallTable:
    """δ 元部分集合族ごとの影の大きさと、Hall 条件の成否"""

    def __init__(self, n: int, delta: int, limit: Optional[int] = None):
        limit = settings.probe_family_limit if limit is None else limit
        self.n = n
        self.delta = delta
        self.sets = subsets_of_size(full_set(n), delta)
        total = 1 << len(self.sets)
        if total - 1 > limit:
            raise ResourceLimit(
                f"族の数 2^{len(self.sets)}-1 が上限 {limit} を超えます (n={n}, δ={delta})"
            )
        ridges = sorted({s & ~(1 << v) for s in self.sets for v in members(s)})
        index = {r: j for j, r in enumerate(ridges)}
        self._ridge_bits = [
            sum(1 << index[s & ~(1 << v)] for v in members(s)) for s in self.sets
        ]
        self.shadow: List[int] = [0] * total
        self.blocked = bytearray(total)
        self._fill(total)

    def _fill(self, total: int) -> None:
        shadow, blocked = self.shadow, self.blocked
        for family in range(1, total):
            low = family & -family
            shadow[family] = shadow[family ^ low] | self._ridge_bits[low.bit_length() - 1]
            if shadow[family].bit_count() < family.bit_count():
                blocked[family] = 1
                continue
            rest = family
            while rest:
                bit = rest & -rest
                if blocked[family ^ bit]:
                    blocked[family] = 1
                    break
                rest ^= bit

    def __len__(self) -> int:
        return len(self.shadow) - 1

    def facets(self, family: int) -> Tuple[VertexSet, ...]:
        return tuple(s for i, s in enumerate(self.sets) if family >> i & 1)

    def faces(self, family: int) -> Tuple[int, int]:
        """(f_{δ-1}, f_{δ-2})"""
        return family.bit_count(), self.shadow[family].bit_count()

    def collapsible(self, family: int) -> bool:
        return not self.blocked[family]


@dataclass
class StarProbeReport:
    """f_{δ-2} >= f_{δ-1} ⇒ 一様崩壊可能、の全数検査"""

    n: int
    delta: int
    families: int = 0
    candidates: int = 0
    counterexamples: int = 0
    at_threshold: int = 0
    examples: List[SimplicialComplex] = field(default_factory=list)

    @property
    def property_holds(self) -> bool:
        return self.counterexamples == 0


def probe_star(n: int, delta: int, limit: Optional[int] = None) -> StarProbeReport:
    if not 1 <= delta <= n:
        raise InvalidArgument(f"probe_star: 1 <= δ <= n が必要です (n={n}, δ={delta})")
    logger.info("probe-star: n=%d δ=%d families=2^%d-1", n, delta, binomial(n, delta))
    table = HallTable(n, delta, limit)
    report = StarProbeReport(n=n, delta=delta, families=len(table))
    threshold = xi(delta) + 1

    for family in range(1, len(table) + 1):
        top, ridges = table.faces(family)
        if ridges < top:
            continue
        report.candidates += 1
        if table.collapsible(family):
            continue
        report.counterexamples += 1
        if top == threshold:
            report.at_threshold += 1
        if len(report.examples) < settings.probe_example_limit:
            complex_ = SimplicialComplex(n=n, facets=table.facets(family))
            ok, certificate = is_uniformly_collapsible(complex_)
            if ok or certificate.kind != CertificateKind.VIOLATOR:
                raise AssertionError(f"Hall 表とマッチングの判定が一致しません: {members(family)}")
            report.examples.append(complex_)

    logger.info(
        "probe-star: candidates=%d counterexamples=%d", report.candidates, report.counterexamples
    )
    return report


@dataclass
class XiMinProbeReport:
    """Ξ の極小元の全数探索"""

    n: int
    d: int
    families: int = 0
    minimal: int = 0
    mu_histogram: Dict[int, int] = field(default_factory=dict)
    max_mu: int = 0
    max_example: Optional[MonomialIdeal] = None
    lower_bound: int = 0
    below_bound: int = 0

    @property
    def bound_holds(self) -> bool:
        return self.below_bound == 0


def probe_xi_min(n: int, d: int, limit: Optional[int] = None) -> XiMinProbeReport:
    """次数 d の純なイデアル（補複体の facet は n-d 元）を全列挙する"""
    if not (1 <= d < n and n <= 2 * d):
        raise InvalidArgument(f"probe_xi_min: n/2 <= d < n が必要です (n={n}, d={d})")
    delta = n - d
    logger.info("probe-xi-min: n=%d d=%d δ=%d", n, d, delta)
    table = HallTable(n, delta, limit)
    report = XiMinProbeReport(n=n, d=d, families=len(table), lower_bound=xi(delta) + 1)
    histogram: Counter = Counter()

    for family in range(1, len(table) + 1):
        if table.collapsible(family):
            continue
        if not _every_deletion_collapsible(table, family):
            continue
        mu = family.bit_count()
        histogram[mu] += 1
        if mu < report.lower_bound:
            report.below_bound += 1
        if mu > report.max_mu:
            report.max_mu = mu
            report.max_example = complement_ideal(SimplicialComplex(n=n, facets=table.facets(family)))

    report.minimal = sum(histogram.values())
    report.mu_histogram = dict(sorted(histogram.items()))
    logger.info("probe-xi-min: minimal=%d max μ=%d", report.minimal, report.max_mu)
    return report


def _every_deletion_collapsible(table: HallTable, family: int) -> bool:
    rest = family
    while rest:
        bit = rest & -rest
        if not table.collapsible(family ^ bit):
            return False
        rest ^= bit
    return True
