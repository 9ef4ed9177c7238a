"""
半順序集合 P_I^k と区間分割

P_I^k = {A ⊂ [n] : x^A ∈ I, |A| <= k} を段ごとに構成し、
すべての上端が大きさ k の区間 [A, B] への分割が存在するかを
バックトラックで厳密に判定する。sdepth(I) >= k ⇔ P_I^k が分割可能。

探索の枝刈りは必要条件だけを使うので、探索の完全性は保たれる。
  - 数え上げ: 未被覆の段ごとの個数が、非負の区間数 β_j で
    u_i = Σ_{j<=i} β_j binom(k-j, i-j) と書けること
  - マッチング: 最下段の未被覆元はそれぞれ別の区間の下端になるので、
    相異なる空き上端へのマッチングが存在すること
"""

import logging
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from math import comb
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from src.config import settings
from src.core.complexes import MonomialIdeal
from src.core.errors import InvalidArgument, ResourceLimit
from src.utils.bitset import VertexSet, full_set, is_subset, members, size, sort_key, submasks

logger = logging.getLogger(__name__)

Interval = Tuple[VertexSet, VertexSet]


@dataclass(frozen=True)
class ReducedPoset:
    """P_I^k。levels[j] は大きさ j の元（rev-lex 昇順）"""

    n: int
    k: int
    levels: Tuple[Tuple[VertexSet, ...], ...]
    element_set: FrozenSet[VertexSet] = field(repr=False, compare=False, default=frozenset())

    @property
    def elements(self) -> List[VertexSet]:
        return [e for level in self.levels for e in level]

    def __contains__(self, item: VertexSet) -> bool:
        return item in self.element_set

    def __len__(self) -> int:
        return len(self.element_set)


@dataclass(frozen=True)
class IntervalPartition:
    """区間 [A, B] の列。分割可能性の証拠"""

    k: int
    intervals: Tuple[Interval, ...]

    def tops(self) -> List[VertexSet]:
        return [b for _, b in self.intervals]

    def __len__(self) -> int:
        return len(self.intervals)


def build_reduced_poset(ideal: MonomialIdeal, k: int) -> ReducedPoset:
    if not ideal.min_degree <= k <= ideal.n:
        raise InvalidArgument(
            f"build_reduced_poset: {ideal.min_degree} <= k <= {ideal.n} が必要です (k={k})"
        )
    full = full_set(ideal.n)
    found: Set[VertexSet] = set()
    for g in ideal.generators:
        if size(g) > k:
            continue
        spare = k - size(g)
        for extra in submasks(full & ~g):
            if size(extra) <= spare:
                found.add(g | extra)
    levels: List[List[VertexSet]] = [[] for _ in range(k + 1)]
    for element in found:
        levels[size(element)].append(element)
    return ReducedPoset(
        n=ideal.n,
        k=k,
        levels=tuple(tuple(sorted(level)) for level in levels),
        element_set=frozenset(found),
    )


def verify_partition(poset: ReducedPoset, partition: IntervalPartition) -> bool:
    """区間の中身を列挙して、互いに素・ちょうど被覆・上端の大きさ k を確認する"""
    if partition.k != poset.k:
        return False
    seen: Set[VertexSet] = set()
    for bottom, top in partition.intervals:
        if not is_subset(bottom, top) or size(top) != poset.k:
            return False
        for extra in submasks(top & ~bottom):
            element = bottom | extra
            if element not in poset or element in seen:
                return False
            seen.add(element)
    return seen == set(poset.element_set)


class PartitionSearch:
    """P_I^k の区間分割を探すバックトラック探索"""

    def __init__(self, poset: ReducedPoset, budget: int):
        self.poset = poset
        self.k = poset.k
        self.budget = budget
        self.order = sorted(poset.element_set, key=sort_key)
        self.full = full_set(poset.n)
        self.covered: Set[VertexSet] = set()
        self.uncovered = [len(level) for level in poset.levels]
        self.intervals: List[Interval] = []
        self.nodes = 0
        self.pruned_counting = 0
        self.pruned_matching = 0
        self._tops: Dict[VertexSet, List[VertexSet]] = {}

    def run(self, first_top: Optional[VertexSet] = None) -> Optional[IntervalPartition]:
        start = 0
        if first_top is not None:
            first = self.order[0]
            if not self._is_free(first, first_top):
                return None
            self._cover(first, first_top)
            start = 1
        found = self._search(start)
        logger.debug(
            "partition search k=%d: found=%s nodes=%d pruned(counting=%d, matching=%d)",
            self.k, found, self.nodes, self.pruned_counting, self.pruned_matching,
        )
        if not found:
            return None
        return IntervalPartition(k=self.k, intervals=tuple(self.intervals))

    def candidate_tops(self, bottom: VertexSet) -> List[VertexSet]:
        """bottom を含む大きさ k の集合（rev-lex 昇順）"""
        cached = self._tops.get(bottom)
        if cached is None:
            need = self.k - size(bottom)
            cached = sorted(
                bottom | extra for extra in submasks(self.full & ~bottom) if size(extra) == need
            )
            self._tops[bottom] = cached
        return cached

    def free_tops(self, bottom: VertexSet) -> List[VertexSet]:
        return [top for top in self.candidate_tops(bottom) if self._is_free(bottom, top)]

    def _is_free(self, bottom: VertexSet, top: VertexSet) -> bool:
        return not any((bottom | extra) in self.covered for extra in submasks(top & ~bottom))

    def _cover(self, bottom: VertexSet, top: VertexSet) -> None:
        for extra in submasks(top & ~bottom):
            element = bottom | extra
            self.covered.add(element)
            self.uncovered[size(element)] -= 1
        self.intervals.append((bottom, top))

    def _uncover(self, bottom: VertexSet, top: VertexSet) -> None:
        for extra in submasks(top & ~bottom):
            element = bottom | extra
            self.covered.discard(element)
            self.uncovered[size(element)] += 1
        self.intervals.pop()

    def _search(self, start: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimit(f"探索ノード数が上限 {self.budget} を超えました")

        index = start
        while index < len(self.order) and self.order[index] in self.covered:
            index += 1
        if index == len(self.order):
            return True

        bottom = self.order[index]
        level = size(bottom)
        if level == self.k:
            # 残りはすべて最上段なので一点区間で埋まる
            for element in self.order[index:]:
                if element not in self.covered:
                    self.intervals.append((element, element))
            return True

        if not self._counts_feasible(level):
            self.pruned_counting += 1
            return False
        if not self._bottoms_matchable(level):
            self.pruned_matching += 1
            return False

        for top in self.free_tops(bottom):
            self._cover(bottom, top)
            if self._search(index + 1):
                return True
            self._uncover(bottom, top)
        return False

    def _counts_feasible(self, lowest: int) -> bool:
        beta: Dict[int, int] = {}
        for i in range(lowest, self.k + 1):
            remaining = self.uncovered[i] - sum(
                count * comb(self.k - j, i - j) for j, count in beta.items()
            )
            if remaining < 0:
                return False
            beta[i] = remaining
        return True

    def _bottoms_matchable(self, level: int) -> bool:
        bottoms = [e for e in self.poset.levels[level] if e not in self.covered]
        graph = nx.Graph()
        graph.add_nodes_from(range(len(bottoms)))
        top_ids: Dict[VertexSet, int] = {}
        for i, bottom in enumerate(bottoms):
            tops = self.free_tops(bottom)
            if not tops:
                return False
            for top in tops:
                node = top_ids.setdefault(top, len(bottoms) + len(top_ids))
                graph.add_edge(i, node)
        if len(bottoms) == 1:
            return True
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=range(len(bottoms)))
        matched = sum(1 for node in matching if node < len(bottoms))
        return matched == len(bottoms)


def _search_branch(poset: ReducedPoset, first_top: VertexSet, budget: int) -> Optional[IntervalPartition]:
    return PartitionSearch(poset, budget).run(first_top=first_top)


def _parallel_search(poset: ReducedPoset, budget: int, workers: int) -> Optional[IntervalPartition]:
    root = PartitionSearch(poset, budget)
    first = root.order[0]
    if size(first) == poset.k:
        return root.run()
    branches = root.candidate_tops(first)
    logger.debug("parallel search: %d branches on %d workers", len(branches), workers)

    limit_hit: Optional[ResourceLimit] = None
    found: Optional[IntervalPartition] = None
    executor = ProcessPoolExecutor(max_workers=workers)
    try:
        pending = {executor.submit(_search_branch, poset, top, budget) for top in branches}
        while pending and found is None:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                try:
                    result = future.result()
                except ResourceLimit as exc:
                    limit_hit = exc
                    continue
                if result is not None:
                    found = result
                    break
    finally:
        # 証拠が見つかったら残りの枝は待たない
        executor.shutdown(wait=found is None, cancel_futures=True)
    if found is not None:
        return found
    if limit_hit is not None:
        raise limit_hit
    return None


def is_partitionable(
    poset: ReducedPoset,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[bool, Optional[IntervalPartition]]:
    budget = settings.node_budget if budget is None else budget
    workers = settings.solver_workers if workers is None else workers
    if workers > 1:
        partition = _parallel_search(poset, budget, workers)
    else:
        partition = PartitionSearch(poset, budget).run()
    return partition is not None, partition


def render_interval(interval: Interval) -> str:
    bottom, top = interval
    return f"{' '.join(map(str, members(bottom)))} -> {' '.join(map(str, members(top)))}"
