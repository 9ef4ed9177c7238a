import logging
from typing import Any, Dict

from src.commands.router import CommandRouter, argument, load_ideal
from src.config import settings
from src.core.errors import InvalidArgument
from src.core.probes import probe_star, probe_xi_min
from src.core.sdepth import probe_conjecture
from src.models.command import CommandOptions, CommandResult
from src.utils.probe_logger import ProbeLogger, probe_logger_for
from src.utils.textio import format_complex, format_ideal, render_indexes

logger = logging.getLogger(__name__)

router = CommandRouter()


def _record(options: CommandOptions, row: Dict[str, Any]) -> None:
    probe_logger = probe_logger_for(options.log_dir or settings.probe_log_dir)
    if probe_logger is not None:
        probe_logger.log_probe(row)


@router.command(
    "probe-conjecture",
    help="I_{n,d}（と追加のイデアル）で sdepth と予想下界 d + ⌊binom(n,d+1)/binom(n,d)⌋ を比べる",
    arguments=(
        argument("n", type=int),
        argument("d", type=int),
        argument("--extra", action="append", default=[], metavar="FILE", help="追加で調べるイデアル"),
    ),
)
def probe_conjecture_command(options: CommandOptions) -> CommandResult:
    n, d = options.params["n"], options.params["d"]
    extra = [(path, load_ideal(path)) for path in options.params.get("extra") or []]
    report = probe_conjecture(n, d, extra, budget=options.budget)

    lines = []
    rows = []
    for row in report.rows:
        upper = "" if row.upper_bound is None else f", upper {row.upper_bound}"
        verdict = "meets" if row.meets_lower else "BELOW"
        lines.append(f"{row.label}: sdepth {row.sdepth}, bound {row.lower_bound}{upper} ({verdict})")
        rows.append(
            {
                "label": row.label,
                "n": row.n,
                "d": row.d,
                "sdepth": row.sdepth,
                "lower_bound": row.lower_bound,
                "upper_bound": row.upper_bound,
                "meets_lower": row.meets_lower,
            }
        )
    _record(
        options,
        {"探索": "probe-conjecture", "n": n, "次数": d, "列挙した族": len(report.rows),
         "判定": "meets" if report.all_meet_lower else "below"},
    )
    return CommandResult(
        text="\n".join(lines),
        report={"command": "probe-conjecture", "n": n, "d": d, "all_meet_lower": report.all_meet_lower, "rows": rows},
    )


@router.command(
    "probe-star",
    help="f_{δ-2} >= f_{δ-1} なのに一様崩壊できない純な複体を全数探索する",
    arguments=(argument("n", type=int), argument("delta", type=int)),
)
def probe_star_command(options: CommandOptions) -> CommandResult:
    n, delta = options.params["n"], options.params["delta"]
    report = probe_star(n, delta)

    lines = [
        f"n = {n}, delta = {delta}",
        f"families = {report.families}, candidates = {report.candidates}",
        f"counterexamples = {report.counterexamples} (at xi+1: {report.at_threshold})",
        "property holds" if report.property_holds else "property fails",
    ]
    for example in report.examples:
        lines.append("")
        lines.append(format_complex(example).rstrip("\n"))
    _record(
        options,
        {"探索": "probe-star", "n": n, "次数": delta, "列挙した族": report.families,
         "候補": report.candidates, "反例": report.counterexamples, "閾値での反例": report.at_threshold,
         "判定": "holds" if report.property_holds else "fails"},
    )
    return CommandResult(
        text="\n".join(lines),
        report={
            "command": "probe-star",
            "n": n,
            "delta": delta,
            "families": report.families,
            "candidates": report.candidates,
            "counterexamples": report.counterexamples,
            "at_threshold": report.at_threshold,
            "property_holds": report.property_holds,
            "examples": [[render_indexes(f) for f in example.facets] for example in report.examples],
        },
    )


@router.command(
    "probe-xi-min",
    help="Ξ の極小元を全数探索し、μ の分布と下界 μ >= ξ_δ+1 を確かめる",
    arguments=(argument("n", type=int), argument("d", type=int)),
)
def probe_xi_min_command(options: CommandOptions) -> CommandResult:
    n, d = options.params["n"], options.params["d"]
    report = probe_xi_min(n, d)

    histogram = ", ".join(f"{mu}: {count}" for mu, count in report.mu_histogram.items())
    lines = [
        f"n = {n}, d = {d}",
        f"families = {report.families}, minimal = {report.minimal}",
        f"mu histogram: {histogram}",
        f"max mu = {report.max_mu}",
        f"lower bound xi+1 = {report.lower_bound}: {'holds' if report.bound_holds else 'fails'}",
    ]
    if report.max_example is not None:
        lines.append("")
        lines.append(format_ideal(report.max_example).rstrip("\n"))
    _record(
        options,
        {"探索": "probe-xi-min", "n": n, "次数": d, "列挙した族": report.families,
         "極小元": report.minimal, "最大μ": report.max_mu, "下界": report.lower_bound,
         "判定": "holds" if report.bound_holds else "fails"},
    )
    return CommandResult(
        text="\n".join(lines),
        report={
            "command": "probe-xi-min",
            "n": n,
            "d": d,
            "families": report.families,
            "minimal": report.minimal,
            "mu_histogram": {str(mu): count for mu, count in report.mu_histogram.items()},
            "max_mu": report.max_mu,
            "lower_bound": report.lower_bound,
            "bound_holds": report.bound_holds,
        },
    )


@router.command(
    "probe-log",
    help="--log-dir の probe_log.csv を集計する",
    arguments=(argument("--recent", type=int, default=10, metavar="N", help="表示する最近の記録の数"),),
)
def probe_log_command(options: CommandOptions) -> CommandResult:
    log_dir = options.log_dir or settings.probe_log_dir
    if not log_dir:
        raise InvalidArgument("ログの置き場所を --log-dir か SDEPTH_PROBE_LOG_DIR で指定してください")
    recent = options.params.get("recent", 10)
    if recent < 0:
        raise InvalidArgument(f"--recent は 0 以上です ({recent})")
    probe_logger = ProbeLogger(log_dir)
    stats = probe_logger.get_statistics()

    lines = [f"total = {stats['total_probes']}"]
    distribution = {str(k): int(v) for k, v in stats.get("probe_distribution", {}).items()}
    for name, count in distribution.items():
        lines.append(f"{name}: {count}")
    rows = []
    if recent:
        for _, row in probe_logger.get_recent_probes(recent).fillna("").iterrows():
            rows.append({column: str(row[column]) for column in ("記録日時", "探索", "n", "次数", "判定")})
    for row in rows:
        lines.append(" ".join(row.values()).strip())
    return CommandResult(
        text="\n".join(lines),
        report={
            "command": "probe-log",
            "total": stats["total_probes"],
            "distribution": distribution,
            "latest": stats.get("latest_probe"),
            "recent": rows,
        },
    )
