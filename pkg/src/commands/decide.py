import logging
from pathlib import Path
from typing import Any, Dict

from src.commands.router import CommandRouter, argument, load_complex, load_ideal, read_source
from src.core.collapse import (
    CertificateKind,
    CollapseCertificate,
    complement_transfer,
    interval_partition_from_sdr,
    is_uniformly_collapsible,
    verify_certificate,
    violator_neighbors,
)
from src.core.complexes import complement_complex, f_vector
from src.core.poset import IntervalPartition, build_reduced_poset, verify_partition
from src.core.sdepth import stanley_depth, verify_main_theorem
from src.models.command import CommandOptions, CommandResult
from src.utils.bitset import size
from src.utils.textio import (
    format_certificate,
    format_ideal,
    format_partition,
    is_partition_text,
    parse_certificate,
    parse_partition,
    render_indexes,
)

logger = logging.getLogger(__name__)

router = CommandRouter()

FILE_ARGUMENT = argument("file", help="イデアルまたは複体のファイル（- は標準入力）")


def certificate_tree(certificate: CollapseCertificate) -> Dict[str, Any]:
    if certificate.kind == CertificateKind.SDR:
        return {
            "kind": certificate.kind.value,
            "drops": [
                {"facet": render_indexes(facet), "drop": vertex}
                for facet, vertex in certificate.drops.items()
            ],
        }
    return {
        "kind": certificate.kind.value,
        "violator": [render_indexes(facet) for facet in certificate.violator],
    }


def partition_tree(partition: IntervalPartition) -> Dict[str, Any]:
    return {
        "k": partition.k,
        "intervals": [
            {"bottom": render_indexes(bottom), "top": render_indexes(top)}
            for bottom, top in partition.intervals
        ],
    }


@router.command(
    "sdepth",
    help="厳密な Stanley depth と、その証拠の区間分割",
    arguments=(
        FILE_ARGUMENT,
        argument("--witness", metavar="FILE", help="区間分割を interval 形式で書き出す"),
    ),
)
def sdepth_command(options: CommandOptions) -> CommandResult:
    ideal = load_ideal(options.params["file"])
    value, witness = stanley_depth(ideal, budget=options.budget, workers=options.workers)
    if options.params.get("witness"):
        Path(options.params["witness"]).write_text(format_partition(witness), encoding="utf-8")
    return CommandResult(
        text=f"{value}\n{format_partition(witness)}",
        report={
            "command": "sdepth",
            "n": ideal.n,
            "min_degree": ideal.min_degree,
            "mu": ideal.mu(),
            "sdepth": value,
            "witness": partition_tree(witness),
        },
    )


@router.command(
    "collapsible",
    help="純な複体（またはイデアルの補複体）の一様崩壊可能性と証明書",
    arguments=(
        FILE_ARGUMENT,
        argument("--ideal", action="store_true", help="入力をイデアルとして読み、その補複体を調べる"),
    ),
)
def collapsible_command(options: CommandOptions) -> CommandResult:
    complex_ = load_complex(options.params["file"], strict_ideal=options.params.get("ideal", False))
    ok, certificate = is_uniformly_collapsible(complex_)
    fv = f_vector(complex_)
    delta = size(complex_.facets[0])
    report: Dict[str, Any] = {
        "command": "collapsible",
        "n": complex_.n,
        "delta": delta,
        "facets": fv.f(delta - 1),
        "ridges": fv.f(delta - 2),
        "collapsible": ok,
    }
    if not ok:
        # Hall 条件の破れ |Γ(A)| < |A|
        report["violator_size"] = len(certificate.violator)
        report["violator_neighbors"] = len(violator_neighbors(complex_, certificate.violator))
    report["certificate"] = certificate_tree(certificate)
    return CommandResult(exit_code=0 if ok else 1, text=format_certificate(certificate), report=report)


@router.command(
    "verify-theorem",
    help="μ_d(I) <= min(binom(n,d+1), ξ_{n-d}) ⇒ sdepth(I) >= d+1 を確かめる",
    arguments=(FILE_ARGUMENT,),
)
def verify_theorem_command(options: CommandOptions) -> CommandResult:
    ideal = load_ideal(options.params["file"])
    report = verify_main_theorem(ideal)
    lines = [
        f"n = {report.n}, d = {report.d}",
        f"mu_d = {report.mu_d}, bound = {report.bound} ({report.branch.value})",
        f"hypothesis: {'met' if report.hypothesis_met else 'not met'}",
        f"small case (n >= 2d+1): {str(report.small_case).lower()}",
        f"collapsible: {str(report.collapsible).lower()}",
    ]
    if report.hypothesis_met:
        lines.append(f"sdepth >= {report.d + 1}: {'confirmed' if report.collapsible else 'FAILED'}")
    lines.extend(f"note: {note}" for note in report.notes)
    tree: Dict[str, Any] = {
        "command": "verify-theorem",
        "n": report.n,
        "d": report.d,
        "mu_d": report.mu_d,
        "bound": report.bound,
        "branch": report.branch.value,
        "hypothesis_met": report.hypothesis_met,
        "small_case": report.small_case,
        "collapsible": report.collapsible,
        "consistent": report.consistent,
    }
    if report.certificate is not None:
        tree["certificate"] = certificate_tree(report.certificate)
    return CommandResult(exit_code=0 if report.consistent else 1, text="\n".join(lines), report=tree)


@router.command("fvector", help="f ベクトル（イデアルなら補複体のもの）", arguments=(FILE_ARGUMENT,))
def fvector_command(options: CommandOptions) -> CommandResult:
    complex_ = load_complex(options.params["file"])
    fv = f_vector(complex_)
    return CommandResult(
        text=str(fv),
        report={"command": "fvector", "n": complex_.n, "dimension": fv.dimension, "f": list(fv.entries)},
    )


@router.command(
    "check",
    help="証明書（SDR / VIOLATOR / interval）を独立に検証する",
    arguments=(FILE_ARGUMENT, argument("certificate", help="証明書のファイル")),
)
def check_command(options: CommandOptions) -> CommandResult:
    certificate_text = read_source(options.params["certificate"])
    if is_partition_text(certificate_text):
        ideal = load_ideal(options.params["file"])
        partition = parse_partition(certificate_text)
        kind = "interval"
        valid = ideal.min_degree <= partition.k <= ideal.n and verify_partition(
            build_reduced_poset(ideal, partition.k), partition
        )
    else:
        complex_ = load_complex(options.params["file"])
        certificate = parse_certificate(certificate_text)
        kind = certificate.kind.value
        valid = verify_certificate(complex_, certificate)
    logger.debug("check: kind=%s valid=%s", kind, valid)
    return CommandResult(
        exit_code=0 if valid else 1,
        text="valid" if valid else "invalid",
        report={"command": "check", "kind": kind, "valid": valid},
    )


@router.command(
    "transfer",
    help="純なイデアルの SDR から補集合転送したイデアル J を出力する",
    arguments=(FILE_ARGUMENT,),
)
def transfer_command(options: CommandOptions) -> CommandResult:
    ideal = load_ideal(options.params["file"])
    ok, certificate = is_uniformly_collapsible(complement_complex(ideal))
    if not ok:
        return CommandResult(
            exit_code=1,
            text=format_certificate(certificate),
            report={"command": "transfer", "collapsible": False, "certificate": certificate_tree(certificate)},
        )
    transferred = complement_transfer(ideal, interval_partition_from_sdr(ideal, certificate))
    return CommandResult(
        text=format_ideal(transferred),
        report={
            "command": "transfer",
            "collapsible": True,
            "source_degree": ideal.min_degree,
            "degree": transferred.min_degree,
            "mu": transferred.mu(),
            "generators": [render_indexes(g) for g in transferred.generators],
        },
    )
