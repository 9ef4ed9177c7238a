"""
Stanley depth の計算と定理の検証

sdepth(I) >= k ⇔ P_I^k が分割可能、という判定を k について昇順に適用して
厳密な値を求める。加えて、次数 d の生成元の個数による十分条件
μ_d(I) <= min(binom(n,d+1), ξ_{n-d}) ⇒ sdepth(I) >= d+1 を具体例で確かめ、
予想される下界や Ξ の極小元の判定を行う。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from src.core.collapse import (
    CollapseCertificate,
    is_uniformly_collapsible,
)
from src.core.combinatorics import BoundBranch, binomial, min_bound
from src.core.complexes import MonomialIdeal, complement_complex, gen_veronese
from src.core.errors import InvalidArgument, NotPure
from src.core.poset import IntervalPartition, build_reduced_poset, is_partitionable

logger = logging.getLogger(__name__)

CONJECTURE_MAX_N = 8


def stanley_depth(
    ideal: MonomialIdeal,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[int, IntervalPartition]:
    """最小生成次数 d から k を増やし、分割可能な最大の k とその証拠を返す"""
    d = ideal.min_degree
    value = d
    witness: Optional[IntervalPartition] = None
    for k in range(d, ideal.n + 1):
        ok, partition = is_partitionable(build_reduced_poset(ideal, k), budget, workers)
        if not ok:
            break
        value, witness = k, partition
    assert witness is not None
    logger.info("sdepth: n=%d d=%d -> %d", ideal.n, d, value)
    return value, witness


def theorem_bound(n: int, d: int) -> Tuple[int, BoundBranch]:
    """min(binom(n,d+1), ξ_{n-d})"""
    if not 0 <= d <= n:
        raise InvalidArgument(f"theorem_bound: 0 <= d <= n が必要です (n={n}, d={d})")
    if d == n:
        return 0, BoundBranch.BINOM
    if d == 0:
        return n, BoundBranch.BINOM
    return min_bound(n, n - d)


@dataclass
class MainTheoremReport:
    """μ_d(I) <= min(binom(n,d+1), ξ_{n-d}) ⇒ sdepth(I) >= d+1 の検証結果"""

    n: int
    d: int
    mu_d: int
    bound: int
    branch: BoundBranch
    hypothesis_met: bool
    small_case: bool
    collapsible: bool
    certificate: Optional[CollapseCertificate] = None
    notes: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.collapsible or not self.hypothesis_met


def verify_main_theorem(ideal: MonomialIdeal) -> MainTheoremReport:
    """次数 d の部分イデアル I_d に還元して補複体の一様崩壊可能性を調べる"""
    d = ideal.min_degree
    part = ideal.degree_part(d)
    mu_d = part.mu()
    bound, branch = theorem_bound(ideal.n, d)
    report = MainTheoremReport(
        n=ideal.n,
        d=d,
        mu_d=mu_d,
        bound=bound,
        branch=branch,
        hypothesis_met=mu_d <= bound,
        small_case=ideal.n >= 2 * d + 1,
        collapsible=False,
    )

    if d == ideal.n:
        report.notes.append("d = n なので sdepth(I) = n で、d+1 には届きません")
        return report

    report.collapsible, report.certificate = is_uniformly_collapsible(complement_complex(part))
    if not report.hypothesis_met:
        report.notes.append("仮定を満たしません")
    elif not report.collapsible:
        report.notes.append("仮定を満たすのに補複体が一様に崩壊できません")
        logger.error("main theorem check failed: n=%d d=%d μ_d=%d", ideal.n, d, mu_d)
    return report


@dataclass
class ConjectureRow:
    label: str
    n: int
    d: int
    sdepth: int
    lower_bound: int
    upper_bound: Optional[int] = None
    witness: Optional[IntervalPartition] = None

    @property
    def meets_lower(self) -> bool:
        return self.sdepth >= self.lower_bound

    @property
    def equals_upper(self) -> Optional[bool]:
        if self.upper_bound is None:
            return None
        return self.sdepth == self.upper_bound


@dataclass
class ConjectureReport:
    n: int
    d: int
    rows: List[ConjectureRow] = field(default_factory=list)

    @property
    def all_meet_lower(self) -> bool:
        return all(row.meets_lower for row in self.rows)


def conjectured_bound(n: int, d: int) -> int:
    """d + ⌊binom(n,d+1) / binom(n,d)⌋"""
    return d + binomial(n, d + 1) // binomial(n, d)


def probe_conjecture(
    n: int,
    d: int,
    ideals: Sequence[Tuple[str, MonomialIdeal]] = (),
    budget: Optional[int] = None,
) -> ConjectureReport:
    """Veronese イデアル I_{n,d}（と追加のイデアル）で厳密な sdepth と予想下界を比べる"""
    if not 1 <= d <= n <= CONJECTURE_MAX_N:
        raise InvalidArgument(f"probe_conjecture: 1 <= d <= n <= {CONJECTURE_MAX_N} が必要です (n={n}, d={d})")
    report = ConjectureReport(n=n, d=d)
    bound = conjectured_bound(n, d)

    value, witness = stanley_depth(gen_veronese(n, d), budget=budget)
    report.rows.append(
        ConjectureRow(
            label=f"I_{{{n},{d}}}",
            n=n,
            d=d,
            sdepth=value,
            lower_bound=bound,
            upper_bound=bound,
            witness=witness,
        )
    )

    for label, ideal in ideals:
        if ideal.n > CONJECTURE_MAX_N:
            raise InvalidArgument(f"probe_conjecture: n <= {CONJECTURE_MAX_N} が必要です ({label})")
        own_d = ideal.min_degree
        value, witness = stanley_depth(ideal, budget=budget)
        report.rows.append(
            ConjectureRow(
                label=label,
                n=ideal.n,
                d=own_d,
                sdepth=value,
                lower_bound=conjectured_bound(ideal.n, own_d),
                witness=witness,
            )
        )
    logger.info("probe-conjecture n=%d d=%d rows=%d", n, d, len(report.rows))
    return report


def check_minimal_in_Xi(ideal: MonomialIdeal) -> bool:
    """I が Ξ の極小元か

    Ξ は sdepth(I) = d の純な次数 d のイデアル全体。どの生成元を一つ除いても
    sdepth が d+1 以上になれば極小。sdepth >= d+1 は補複体の一様崩壊可能性で判定する。
    """
    if not ideal.is_pure:
        raise NotPure(f"イデアルが純ではありません (次数: {ideal.degrees})")
    d = ideal.min_degree
    if not (ideal.n <= 2 * d and d < ideal.n):
        raise InvalidArgument(f"check_minimal_in_Xi: n/2 <= d < n が必要です (n={ideal.n}, d={d})")

    complex_ = complement_complex(ideal)
    collapsible, _ = is_uniformly_collapsible(complex_)
    if collapsible:
        return False
    for facet in complex_.facets:
        if not is_uniformly_collapsible(complex_.remove_facet(facet))[0]:
            return False
    return True
