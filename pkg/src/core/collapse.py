"""
一様崩壊可能性の判定

純な複体 Δ（facet の大きさ δ）について、facet と ridge（大きさ δ-1 の面）の
二部グラフで最大マッチングを取り、facet 側が完全に埋まれば SDR、
埋まらなければ Hall 条件を破る facet 集合を証明書として返す。
証明書は判定とは独立に検証できる。

SDR はイデアル側では P_I^{d+1} の区間分割に対応し、
補集合をとる操作で別のイデアルへ移すこともできる。
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Set, Tuple

import networkx as nx

from src.core.complexes import (
    MonomialIdeal,
    SimplicialComplex,
    complement_complex,
)
from src.core.errors import InvalidArgument, InvalidCertificate, NotPure
from src.core.poset import (
    IntervalPartition,
    build_reduced_poset,
    verify_partition,
)
from src.utils.bitset import (
    VertexSet,
    full_set,
    members,
    size,
    sort_key,
    subsets_of_size,
)

logger = logging.getLogger(__name__)


def _pure_size(complex_: SimplicialComplex) -> int:
    if not complex_.is_pure:
        raise NotPure(f"複体が純ではありません (facet の大きさ: {complex_.facet_sizes})")
    return size(complex_.facets[0])


def _ridges_of(facet: VertexSet) -> List[VertexSet]:
    return [facet & ~(1 << v) for v in members(facet)]


@dataclass(frozen=True)
class FacetRidgeGraph:
    """facet X と ridge Y の包含二部グラフ

    adjacency[i] は facets[i] に含まれる ridge の添字（rev-lex 昇順）。
    """

    delta: int
    facets: Tuple[VertexSet, ...]
    ridges: Tuple[VertexSet, ...]
    adjacency: Tuple[Tuple[int, ...], ...]

    def neighbors(self, facet_index: int) -> List[VertexSet]:
        return [self.ridges[j] for j in self.adjacency[facet_index]]


class CertificateKind(str, Enum):
    SDR = "SDR"
    VIOLATOR = "VIOLATOR"


@dataclass(frozen=True)
class CollapseCertificate:
    """SDR（facet → 落とす頂点）または Hall 条件の違反集合"""

    kind: CertificateKind
    drops: Dict[VertexSet, int] = field(default_factory=dict)
    violator: Tuple[VertexSet, ...] = ()

    def faces(self) -> Dict[VertexSet, VertexSet]:
        """facet F → F̃ = F ∖ {v}"""
        return {facet: facet & ~(1 << v) for facet, v in self.drops.items()}


def build_facet_ridge_graph(complex_: SimplicialComplex) -> FacetRidgeGraph:
    delta = _pure_size(complex_)
    if delta == 0:
        raise InvalidArgument("次元 -1 の複体（空の facet のみ）には ridge がありません")
    facets = tuple(sorted(complex_.facets))
    ridges = tuple(sorted({r for f in facets for r in _ridges_of(f)}))
    index = {r: j for j, r in enumerate(ridges)}
    adjacency = tuple(tuple(sorted(index[r] for r in _ridges_of(f))) for f in facets)
    return FacetRidgeGraph(delta=delta, facets=facets, ridges=ridges, adjacency=adjacency)


def _as_networkx(graph: FacetRidgeGraph) -> nx.Graph:
    # 節点は整数: facet は 0..m-1、ridge は m..m+r-1
    m = len(graph.facets)
    g = nx.Graph()
    g.add_nodes_from(range(m), bipartite=0)
    g.add_nodes_from(range(m, m + len(graph.ridges)), bipartite=1)
    for i, neighbors in enumerate(graph.adjacency):
        g.add_edges_from((i, m + j) for j in neighbors)
    return g


def max_matching(graph: FacetRidgeGraph) -> Dict[VertexSet, VertexSet]:
    """Hopcroft-Karp による最大マッチング（facet → ridge）"""
    m = len(graph.facets)
    matching = nx.bipartite.hopcroft_karp_matching(_as_networkx(graph), top_nodes=range(m))
    return {graph.facets[u]: graph.ridges[v - m] for u, v in matching.items() if u < m}


def _violator_from(graph: FacetRidgeGraph, matching: Dict[VertexSet, VertexSet]) -> Tuple[VertexSet, ...]:
    """未マッチの facet から交互路でたどれる facet 全体"""
    matched_by = {ridge: facet for facet, ridge in matching.items()}
    index = {f: i for i, f in enumerate(graph.facets)}
    start = next(f for f in graph.facets if f not in matching)

    reached: Set[VertexSet] = {start}
    queue = deque([start])
    while queue:
        facet = queue.popleft()
        for ridge in graph.neighbors(index[facet]):
            partner = matched_by.get(ridge)
            if partner is not None and partner not in reached:
                reached.add(partner)
                queue.append(partner)
    return tuple(sorted(reached))


def is_uniformly_collapsible(complex_: SimplicialComplex) -> Tuple[bool, CollapseCertificate]:
    graph = build_facet_ridge_graph(complex_)
    matching = max_matching(graph)
    logger.debug(
        "facet-ridge matching: facets=%d ridges=%d matched=%d",
        len(graph.facets), len(graph.ridges), len(matching),
    )
    if len(matching) == len(graph.facets):
        drops = {facet: (facet ^ ridge).bit_length() - 1 for facet, ridge in sorted(matching.items())}
        return True, CollapseCertificate(kind=CertificateKind.SDR, drops=drops)
    violator = _violator_from(graph, matching)
    return False, CollapseCertificate(kind=CertificateKind.VIOLATOR, violator=violator)


def verify_certificate(complex_: SimplicialComplex, certificate: CollapseCertificate) -> bool:
    """証明書を複体だけから検証する（マッチングの結果は使わない）"""
    _pure_size(complex_)
    facets = set(complex_.facets)

    if certificate.kind == CertificateKind.SDR:
        if set(certificate.drops) != facets:
            return False
        seen: Set[VertexSet] = set()
        for facet, vertex in certificate.drops.items():
            if not 1 <= vertex or not facet >> vertex & 1:
                return False
            face = facet & ~(1 << vertex)
            if face in seen:
                return False
            seen.add(face)
        return True

    chosen = set(certificate.violator)
    if not chosen or not chosen <= facets:
        return False
    gamma = {r for f in chosen for r in _ridges_of(f)}
    return len(gamma) < len(chosen)


def _pure_degree(ideal: MonomialIdeal) -> int:
    if not ideal.is_pure:
        raise NotPure(f"イデアルが純ではありません (次数: {ideal.degrees})")
    return ideal.min_degree


def interval_partition_from_sdr(ideal: MonomialIdeal, certificate: CollapseCertificate) -> IntervalPartition:
    """SDR から P_I^{d+1} の区間分割を作る

    生成元 m（facet F = [n] ∖ m, 落とす頂点 v）ごとに区間 [m, m ∪ {v}]、
    残りの大きさ d+1 の元は一点区間 [C, C] とする。
    """
    d = _pure_degree(ideal)
    if d >= ideal.n:
        raise InvalidArgument(f"次数 d={d} が n={ideal.n} 以上なので P_I^{{d+1}} は作れません")
    complex_ = complement_complex(ideal)
    if certificate.kind != CertificateKind.SDR or not verify_certificate(complex_, certificate):
        raise InvalidCertificate("補複体の SDR として正しくない証明書です")

    full = full_set(ideal.n)
    intervals = []
    tops: Set[VertexSet] = set()
    for generator in ideal.generators:
        top = generator | (1 << certificate.drops[full ^ generator])
        intervals.append((generator, top))
        tops.add(top)

    poset = build_reduced_poset(ideal, d + 1)
    intervals.extend((c, c) for c in poset.levels[d + 1] if c not in tops)
    intervals.sort(key=lambda pair: (sort_key(pair[0]), pair[1]))
    return IntervalPartition(k=d + 1, intervals=tuple(intervals))


def complement_transfer(ideal: MonomialIdeal, partition: IntervalPartition) -> MonomialIdeal:
    """J = ⟨x^{[n] ∖ m̃} : m ∈ G(I)⟩。m̃ は生成元 m を下端とする区間の上端"""
    k = _pure_degree(ideal)
    if partition.k != k + 1:
        raise InvalidCertificate(f"区間分割の上端の大きさ {partition.k} が k+1={k + 1} ではありません")
    if not verify_partition(build_reduced_poset(ideal, k + 1), partition):
        raise InvalidCertificate("P_I^{k+1} の区間分割として正しくありません")

    top_of = {bottom: top for bottom, top in partition.intervals}
    full = full_set(ideal.n)
    generators = tuple(sorted(full ^ top_of[g] for g in ideal.generators))
    transferred = MonomialIdeal(n=ideal.n, generators=generators)
    logger.debug("complement transfer: μ=%d 次数 %d -> %d", ideal.mu(), k, ideal.n - k - 1)
    return transferred


def max_mu_in_xi_complement(n: int, d: int) -> Tuple[MonomialIdeal, IntervalPartition]:
    """Ξ^∁ の中で μ が最大 binom(n, d+1) となるイデアル J と、sdepth(J) >= d+1 の証拠

    J は Veronese イデアル I_{n,n-d-1} を補集合転送して得る。
    """
    if not 1 <= d < n or 2 * d < n - 1:
        raise InvalidArgument(f"max_mu_in_xi_complement: (n-1)/2 <= d < n が必要です (n={n}, d={d})")
    source_degree = n - d - 1
    source = MonomialIdeal(n=n, generators=tuple(subsets_of_size(full_set(n), source_degree)))

    ok, certificate = is_uniformly_collapsible(complement_complex(source))
    if not ok:
        raise InvalidCertificate(f"I_{{{n},{source_degree}}} の補複体が一様に崩壊できません")
    transferred = complement_transfer(source, interval_partition_from_sdr(source, certificate))

    ok, certificate = is_uniformly_collapsible(complement_complex(transferred))
    if not ok:
        raise InvalidCertificate("転送後のイデアルの補複体が一様に崩壊できません")
    logger.info("witness-largest: n=%d d=%d μ(J)=%d", n, d, transferred.mu())
    return transferred, interval_partition_from_sdr(transferred, certificate)


def violator_neighbors(complex_: SimplicialComplex, violator: Tuple[VertexSet, ...]) -> List[VertexSet]:
    """Γ(A)：A のいずれかの facet に含まれる ridge"""
    _pure_size(complex_)
    return sorted({r for f in violator for r in _ridges_of(f)})

