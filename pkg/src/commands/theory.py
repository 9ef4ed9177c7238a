from src.commands.router import CommandRouter, argument
from src.core.combinatorics import (
    catalan,
    compare_by_macaulay,
    macaulay_rep,
    path_count,
    shadow_size,
    verify_key_lemma,
    xi,
)
from src.core.sdepth import theorem_bound
from src.models.command import CommandOptions, CommandResult

router = CommandRouter()


@router.command(
    "macaulay",
    help="x の k 次 Macaulay 表現と影の大きさ ∂_{k-1}(x)",
    arguments=(
        argument("x", type=int),
        argument("k", type=int),
        argument("--compare", type=int, action="append", default=[], metavar="Y",
                 help="係数列の辞書式比較の相手（複数可）"),
    ),
)
def macaulay_command(options: CommandOptions) -> CommandResult:
    x, k = options.params["x"], options.params["k"]
    rep = macaulay_rep(x, k)
    shadow = shadow_size(x, k)
    lines = [f"{x} = {rep}; shadow {shadow}"]
    comparisons = []
    for y in options.params.get("compare") or []:
        ordering = compare_by_macaulay(x, y, k)
        lines.append(f"{x} {ordering.value} {y}")
        comparisons.append({"y": y, "ordering": ordering.value})
    return CommandResult(
        text="\n".join(lines),
        report={
            "command": "macaulay",
            "x": x,
            "k": k,
            "coefficients": list(rep.coeffs),
            "lowest": rep.lowest,
            "representation": str(rep),
            "shadow": shadow,
            "comparisons": comparisons,
        },
    )


@router.command("xi", help="ξ_δ = Σ binom(2j-1, j)", arguments=(argument("delta", type=int),))
def xi_command(options: CommandOptions) -> CommandResult:
    delta = options.params["delta"]
    value = xi(delta)
    return CommandResult(text=str(value), report={"command": "xi", "delta": delta, "xi": value})


@router.command(
    "bound",
    help="sdepth(I) >= d+1 を保証する μ_d(I) の上限 min(binom(n,d+1), ξ_{n-d})",
    arguments=(argument("n", type=int), argument("d", type=int)),
)
def bound_command(options: CommandOptions) -> CommandResult:
    n, d = options.params["n"], options.params["d"]
    value, branch = theorem_bound(n, d)
    return CommandResult(
        text=f"{value} ({branch.value})",
        report={"command": "bound", "n": n, "d": d, "bound": value, "branch": branch.value},
    )


@router.command(
    "key-lemma",
    help="x <= ξ_k なら ∂_{k-1}(x) >= x、その鋭さ、望遠鏡和の恒等式",
    arguments=(argument("k", type=int),),
)
def key_lemma_command(options: CommandOptions) -> CommandResult:
    report = verify_key_lemma(options.params["k"])
    lines = [
        f"k = {report.k}, xi = {report.xi}, checked = {report.checked}",
        f"counterexample: {report.counterexample if report.counterexample is not None else 'none'}",
        f"shadow(xi+1) = {report.sharpness_value} ({'sharp' if report.sharp else 'not sharp'})",
        f"telescoping = {report.telescoping_value}",
        "pass" if report.passed else "fail",
    ]
    return CommandResult(
        exit_code=0 if report.passed else 1,
        text="\n".join(lines),
        report={
            "command": "key-lemma",
            "k": report.k,
            "xi": report.xi,
            "checked": report.checked,
            "counterexample": report.counterexample,
            "sharpness_value": report.sharpness_value,
            "sharp": report.sharp,
            "telescoping_value": report.telescoping_value,
            "passed": report.passed,
        },
    )


@router.command(
    "paths",
    help="高さ start から steps 歩で高さ end へ、X 軸に触れない U/D 路の数",
    arguments=(argument("start", type=int), argument("steps", type=int), argument("end", type=int)),
)
def paths_command(options: CommandOptions) -> CommandResult:
    start, steps, end = options.params["start"], options.params["steps"], options.params["end"]
    count = path_count(start, steps, end)
    return CommandResult(
        text=str(count),
        report={"command": "paths", "start": start, "steps": steps, "end": end, "count": count},
    )


@router.command("catalan", help="C_n = binom(2n,n) - binom(2n,n+1)", arguments=(argument("n", type=int),))
def catalan_command(options: CommandOptions) -> CommandResult:
    n = options.params["n"]
    value = catalan(n)
    return CommandResult(text=str(value), report={"command": "catalan", "n": n, "catalan": value})
