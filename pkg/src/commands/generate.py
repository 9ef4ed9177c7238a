import logging
from typing import Callable, Dict, List, Tuple, Union

from src.commands.decide import partition_tree
from src.commands.router import CommandRouter, argument
from src.core.collapse import max_mu_in_xi_complement
from src.core.complexes import (
    MonomialIdeal,
    SimplicialComplex,
    gen_compressed_ideal,
    gen_cycle_with_chord,
    gen_not_uc,
    gen_padded_counterexample,
    gen_veronese,
)
from src.core.errors import InvalidArgument
from src.models.command import CommandOptions, CommandResult
from src.utils.textio import format_complex, format_ideal, format_partition

logger = logging.getLogger(__name__)

router = CommandRouter()

Generated = Union[MonomialIdeal, SimplicialComplex]

# 名前 → (引数名, 生成器)
GENERATORS: Dict[str, Tuple[List[str], Callable[..., Generated]]] = {
    "veronese": (["n", "d"], gen_veronese),
    "compressed": (["n", "d", "l"], gen_compressed_ideal),
    "not-uc": (["n", "delta"], gen_not_uc),
    "padded": (["n", "delta"], gen_padded_counterexample),
    "cycle-chord": (["n"], gen_cycle_with_chord),
}


def generate(name: str, params: List[int]) -> Generated:
    names, factory = GENERATORS[name]
    if len(params) != len(names):
        raise InvalidArgument(f"gen {name} の引数は {' '.join(names)} です（{len(params)} 個与えられました）")
    return factory(*params)


@router.command(
    "gen",
    help="名前付きのイデアル・複体をファイル形式で出力する",
    arguments=(
        argument("name", choices=sorted(GENERATORS)),
        argument("values", type=int, nargs="*", metavar="PARAM"),
    ),
)
def gen_command(options: CommandOptions) -> CommandResult:
    generated = generate(options.params["name"], options.params.get("values") or [])
    if isinstance(generated, MonomialIdeal):
        return CommandResult(text=format_ideal(generated))
    return CommandResult(text=format_complex(generated))


@router.command(
    "witness-largest",
    help="Ξ^∁ で μ = binom(n,d+1) を達成するイデアル J と sdepth(J) >= d+1 の区間分割",
    arguments=(argument("n", type=int), argument("d", type=int)),
)
def witness_largest_command(options: CommandOptions) -> CommandResult:
    n, d = options.params["n"], options.params["d"]
    ideal, partition = max_mu_in_xi_complement(n, d)
    return CommandResult(
        text=format_ideal(ideal) + "".join(f"# {line}\n" for line in format_partition(partition).splitlines()),
        report={
            "command": "witness-largest",
            "n": n,
            "d": d,
            "mu": ideal.mu(),
            "ideal": format_ideal(ideal).strip().replace("\n", "; "),
            "witness": partition_tree(partition),
        },
    )
