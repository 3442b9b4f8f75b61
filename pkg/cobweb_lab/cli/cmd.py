import json
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import click
from pydantic import ValidationError

from cobweb_lab.cobweb import (
    adjacency_matrix,
    biadjacency_diag,
    chain_from_blocks,
    complete_chain,
    delete_arcs,
    is_cobweb,
    is_complete,
    natural_join,
    strict_order_matrix,
    to_dot,
    zeta_matrix,
)
from cobweb_lab.constants import (
    DEFAULT_EXP_TOL,
    DEFAULT_FERRERS_MAX_D,
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
)
from cobweb_lab.counting import (
    compositions,
    fubini,
    multinomial,
    relations_of_type,
    relations_total,
    stirling2,
    surjection_count,
    tuples_of_type,
)
from cobweb_lab.ferrers import ferrers_dimension, is_ferrers_dim1, min_completion_to_ferrers
from cobweb_lab.matrix_core import (
    boolean_geometric_series,
    direct_sum,
    kronecker_sum,
    real_exp,
    warshall_closure,
)
from cobweb_lab.models.app import CommandResult, CommandStatus
from cobweb_lab.models.chain import CobwebChain, LevelSequence
from cobweb_lab.models.counting import CompositionType
from cobweb_lab.models.custom_errors import CobwebDomainError, MatrixParseError
from cobweb_lab.models.ferrers import FerrersReport
from cobweb_lab.models.matrix import BoolMatrix, RealMatrix
from cobweb_lab.models.oracle import ChainConstraint
from cobweb_lab.oracle import (
    VerificationSuite,
    enum_graded_chains,
    enum_graded_total,
    iter_graded_chains,
    iter_ordered_partitions,
    iter_ordered_partitions_of_type,
)
from cobweb_lab.reporter import VerificationReporter
from cobweb_lab.utils.formats import format_bool_matrix, format_chain, format_real_matrix
from cobweb_lab.utils.fs import (
    read_blocks_file,
    read_bool_matrix_file,
    read_chain_file,
    read_config_from_file,
    read_real_matrix_file,
    write_chain_file,
)
from cobweb_lab.utils.logger import get_logger, init_logger

logger = get_logger(__name__)

CONSTRAINTS = [c.value for c in ChainConstraint]


# payload helpers


def _matrix_payload(m: BoolMatrix) -> Dict[str, Any]:
    return {"rows": m.rows, "cols": m.cols, "data": m.to_strings()}


def _real_payload(m: RealMatrix) -> Dict[str, Any]:
    return {"rows": m.rows, "cols": m.cols, "data": m.to_rows()}


def _chain_payload(c: CobwebChain) -> Dict[str, Any]:
    return {
        "k": c.k,
        "sizes": list(c.levels.sizes),
        "blocks": [_matrix_payload(b) for b in c.blocks],
    }


def _ferrers_payload(report: FerrersReport) -> Dict[str, Any]:
    return report.model_dump(mode="json")


def _is_json(ctx: click.Context) -> bool:
    return bool(ctx.find_root().obj and ctx.find_root().obj.get("json"))


def _finish(ctx: click.Context, payload: Any, text: str) -> CommandResult:
    """Print the text rendering or the JSON document and wrap the payload."""
    result = CommandResult(payload=payload)
    if _is_json(ctx):
        click.echo(json.dumps(_document(result), indent=2))
    else:
        click.echo(text, nl=not text.endswith("\n"))
    return result


def _document(result: CommandResult) -> Dict[str, Any]:
    return {
        "status": result.status.value,
        "payload": result.payload,
        "message": result.message,
    }


def _parse_type(text: str) -> CompositionType:
    return CompositionType.parse(text)


def _count_payload(formula: str, inputs: Dict[str, Any], value: int) -> Dict[str, Any]:
    # counts are arbitrary precision, JSON carries them as decimal strings
    return {"formula": formula, "inputs": inputs, "value": str(value)}


# chain sources


def _parse_delete(entry: str) -> Tuple[int, int, int]:
    try:
        block, cell = entry.split(":", 1)
        row, col = cell.split(",", 1)
        return int(block), int(row), int(col)
    except ValueError:
        raise click.BadParameter(f"'{entry}' is not BLOCK:ROW,COL", param_hint="--delete")


def _load_chain(
    levels: Optional[str],
    complete: bool,
    blocks: Optional[str],
    delete: Sequence[str],
    chain: Optional[str],
) -> CobwebChain:
    if chain:
        if levels or blocks or complete:
            raise click.UsageError("--chain cannot be combined with --levels, --blocks or --complete")
        c = read_chain_file(chain)
    elif levels:
        f = LevelSequence.parse(levels)
        if blocks and complete:
            raise click.UsageError("use either --complete or --blocks, not both")
        if blocks:
            c = chain_from_blocks(f, read_blocks_file(blocks))
        elif complete or f.k == 1:
            c = complete_chain(f)
        else:
            raise click.UsageError("--levels needs --complete or --blocks FILE")
    else:
        raise click.UsageError("give a chain with --levels or --chain")

    for entry in delete:
        block, row, col = _parse_delete(entry)
        c = delete_arcs(c, block, [(row, col)])
    return c


def chain_options(func):
    func = click.option(
        "--chain", "chain", default=None, help="Chain file (k, sizes, blocks)."
    )(func)
    func = click.option(
        "--delete",
        "delete",
        multiple=True,
        help="Delete the arc ROW->COL of block BLOCK, written BLOCK:ROW,COL (0-based).",
    )(func)
    func = click.option(
        "--blocks", "blocks", default=None, help="File with the k-1 blocks in matrix text."
    )(func)
    func = click.option(
        "--complete", is_flag=True, help="Use all-ones blocks between consecutive levels."
    )(func)
    func = click.option(
        "--levels", "-l", default=None, help="Comma separated level sizes, e.g. 2,3,1."
    )(func)
    return func


# command tree


@click.group(context_settings={"show_default": True})
@click.option("--json", "as_json", is_flag=True, help="Emit one JSON document on stdout.")
@click.option("-v", "--verbose", count=True, help="Increase verbosity of output.")
@click.option("--log-dir", default=None, help="Also write a debug log (run.log) to this directory.")
@click.pass_context
def main(ctx, as_json: bool = False, verbose: int = 0, log_dir: Optional[str] = None):
    init_logger(log_dir, verbose >= 2)
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json


@main.group(help="Build and inspect cobweb chains")
def cobweb():
    pass


@cobweb.command(help="Print the chain in chain file format")
@chain_options
@click.option("--output", "-o", default=None, help="Also write the chain to this file.")
@click.pass_context
def build(ctx, levels, complete, blocks, delete, chain, output):
    c = _load_chain(levels, complete, blocks, delete, chain)
    if output:
        write_chain_file(c, output)
        logger.info("Chain written to %s", output)
    return _finish(ctx, _chain_payload(c), format_chain(c))


@cobweb.command(help="Print the zeta matrix (reflexive-transitive closure)")
@chain_options
@click.option("--strict", is_flag=True, help="Drop the diagonal (strict order).")
@click.pass_context
def zeta(ctx, levels, complete, blocks, delete, chain, strict):
    c = _load_chain(levels, complete, blocks, delete, chain)
    m = strict_order_matrix(c) if strict else zeta_matrix(c)
    return _finish(ctx, _matrix_payload(m), format_bool_matrix(m))


@cobweb.command(help="Print the Hasse adjacency matrix")
@chain_options
@click.pass_context
def adjacency(ctx, levels, complete, blocks, delete, chain):
    m = adjacency_matrix(_load_chain(levels, complete, blocks, delete, chain))
    return _finish(ctx, _matrix_payload(m), format_bool_matrix(m))


@cobweb.command(help="Print the block-diagonal biadjacency matrix")
@chain_options
@click.pass_context
def biadjacency(ctx, levels, complete, blocks, delete, chain):
    m = biadjacency_diag(_load_chain(levels, complete, blocks, delete, chain))
    return _finish(ctx, _matrix_payload(m), format_bool_matrix(m))


@cobweb.command(help="Print the Hasse digraph in Graphviz DOT")
@chain_options
@click.option("--name", default="cobweb", help="Graph name.")
@click.pass_context
def dot(ctx, levels, complete, blocks, delete, chain, name):
    text = to_dot(_load_chain(levels, complete, blocks, delete, chain), name)
    return _finish(ctx, {"dot": text}, text)


@cobweb.command(help="Naturally join two chain files (FIRST below SECOND)")
@click.argument("first")
@click.argument("second")
@click.pass_context
def join(ctx, first, second):
    c = natural_join(read_chain_file(first), read_chain_file(second))
    return _finish(ctx, _chain_payload(c), format_chain(c))


@cobweb.command(help="Summarize a chain: sizes, completeness and cobweb property")
@chain_options
@click.pass_context
def info(ctx, levels, complete, blocks, delete, chain):
    c = _load_chain(levels, complete, blocks, delete, chain)
    payload = {
        "k": c.k,
        "n": c.n,
        "sizes": list(c.levels.sizes),
        "is_complete": is_complete(c),
        "is_cobweb": is_cobweb(c),
    }
    text = (
        f"k: {c.k}\n"
        f"n: {c.n}\n"
        f"sizes: {c.levels}\n"
        f"is_complete: {str(payload['is_complete']).lower()}\n"
        f"is_cobweb: {str(payload['is_cobweb']).lower()}\n"
    )
    return _finish(ctx, payload, text)


@main.group(help="Ferrers analysis of a 0/1 matrix file")
def ferrers():
    pass


def _witness_text(witness) -> str:
    return " ".join(str(x) for x in witness)


@ferrers.command(help="Decide Ferrers dimension 1 and print a witness otherwise")
@click.argument("matrix_file")
@click.pass_context
def check(ctx, matrix_file):
    report = is_ferrers_dim1(read_bool_matrix_file(matrix_file))
    lines = [f"is_dim1: {str(report.is_dim1).lower()}"]
    if report.witness is not None:
        lines.append(f"witness: {_witness_text(report.witness)}")
    return _finish(ctx, _ferrers_payload(report), "\n".join(lines) + "\n")


@ferrers.command(help="Ferrers dimension by exhaustive search")
@click.argument("matrix_file")
@click.option("--max-d", type=int, default=DEFAULT_FERRERS_MAX_D, help="Largest dimension tried.")
@click.pass_context
def dim(ctx, matrix_file, max_d):
    b = read_bool_matrix_file(matrix_file)
    dimension = ferrers_dimension(b, max_d)
    base = is_ferrers_dim1(b)
    report = FerrersReport(is_dim1=base.is_dim1, witness=base.witness, dimension=dimension)
    payload = _ferrers_payload(report)
    payload["max_d"] = max_d
    text = str(dimension) if dimension is not None else f"none (more than {max_d})"
    return _finish(ctx, payload, text + "\n")


@ferrers.command(name="complete", help="Fewest added arcs that make the matrix Ferrers")
@click.argument("matrix_file")
@click.pass_context
def complete_cmd(ctx, matrix_file):
    b = read_bool_matrix_file(matrix_file)
    completion = min_completion_to_ferrers(b)
    base = is_ferrers_dim1(b)
    report = FerrersReport(
        is_dim1=base.is_dim1,
        witness=base.witness,
        dimension=base.dimension,
        completion_arcs=completion.arcs,
    )
    payload = _ferrers_payload(report)
    payload["completed"] = _matrix_payload(completion.completed)
    lines = [f"arcs: {completion.count}"]
    lines += [f"{i},{j}" for i, j in completion.arcs]
    text = "\n".join(lines) + "\n" + format_bool_matrix(completion.completed)
    return _finish(ctx, payload, text)


@main.group(help="Matrix algebra on matrix files")
def matrix():
    pass


@matrix.command(help="Reflexive-transitive closure of a square 0/1 matrix")
@click.argument("matrix_file")
@click.option("--warshall", is_flag=True, help="Use Warshall's algorithm instead of the series.")
@click.pass_context
def closure(ctx, matrix_file, warshall):
    a = read_bool_matrix_file(matrix_file)
    m = warshall_closure(a) if warshall else boolean_geometric_series(a)
    return _finish(ctx, _matrix_payload(m), format_bool_matrix(m))


@matrix.command(name="direct-sum", help="Block-diagonal sum of 0/1 matrix files")
@click.argument("matrix_files", nargs=-1, required=True)
@click.pass_context
def direct_sum_cmd(ctx, matrix_files):
    m = direct_sum([read_bool_matrix_file(path) for path in matrix_files])
    return _finish(ctx, _matrix_payload(m), format_bool_matrix(m))


@matrix.command(name="kron-sum", help="Kronecker sum of two square real matrix files")
@click.argument("first")
@click.argument("second")
@click.pass_context
def kron_sum(ctx, first, second):
    m = kronecker_sum(read_real_matrix_file(first), read_real_matrix_file(second))
    return _finish(ctx, _real_payload(m), format_real_matrix(m))


@matrix.command(help="Matrix exponential of a square real matrix file")
@click.argument("matrix_file")
@click.option("--tol", type=float, default=DEFAULT_EXP_TOL, help="Bound on the truncated tail.")
@click.pass_context
def exp(ctx, matrix_file, tol):
    m = real_exp(read_real_matrix_file(matrix_file), tol)
    return _finish(ctx, _real_payload(m), format_real_matrix(m))


@main.group(help="Evaluate counting formulas (exact integers)")
def count():
    pass


@count.command(name="cobweb-type", help="Complete cobweb posets of type PARTS (multinomial)")
@click.argument("parts")
@click.pass_context
def cobweb_type(ctx, parts):
    t = _parse_type(parts)
    value = multinomial(t.total, t)
    return _finish(ctx, _count_payload("multinomial", {"type": list(t.parts)}, value), f"{value}\n")


@count.command(name="cobweb-k", help="Complete cobweb posets with K levels on N vertices")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.pass_context
def cobweb_k(ctx, n, k):
    value = surjection_count(n, k)
    return _finish(ctx, _count_payload("surjection_count", {"n": n, "k": k}, value), f"{value}\n")


@count.command(name="cobweb-total", help="All complete cobweb posets on N vertices (Fubini)")
@click.argument("n", type=int)
@click.pass_context
def cobweb_total(ctx, n):
    value = fubini(n)
    return _finish(ctx, _count_payload("fubini", {"n": n}, value), f"{value}\n")


@count.command(name="relations-type", help="Non-empty k-ary relations on a product of type PARTS")
@click.argument("parts")
@click.pass_context
def relations_type(ctx, parts):
    t = _parse_type(parts)
    value = relations_of_type(t)
    payload = _count_payload("relations_of_type", {"type": list(t.parts)}, value)
    return _finish(ctx, payload, f"{value}\n")


@count.command(name="relations-total", help="Relations summed over every composition of N")
@click.argument("n", type=int)
@click.pass_context
def relations_total_cmd(ctx, n):
    value = relations_total(n)
    return _finish(ctx, _count_payload("relations_total", {"n": n}, value), f"{value}\n")


@count.command(name="tuples-type", help="Tuples of a product of type PARTS")
@click.argument("parts")
@click.pass_context
def tuples_type(ctx, parts):
    t = _parse_type(parts)
    value = tuples_of_type(t)
    return _finish(ctx, _count_payload("tuples_of_type", {"type": list(t.parts)}, value), f"{value}\n")


@count.command(name="stirling2", help="Stirling number of the second kind S(N, K)")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.pass_context
def stirling(ctx, n, k):
    value = stirling2(n, k)
    return _finish(ctx, _count_payload("stirling2", {"n": n, "k": k}, value), f"{value}\n")


@count.command(name="graded-type", help="Experimental: graded relation chains of type PARTS")
@click.argument("parts")
@click.option("--constraint", type=click.Choice(CONSTRAINTS), default=CONSTRAINTS[0])
@click.pass_context
def graded_type(ctx, parts, constraint):
    t = _parse_type(parts)
    value = enum_graded_chains(t, ChainConstraint(constraint))
    inputs = {"type": list(t.parts), "constraint": constraint}
    payload = _count_payload("graded_chains", inputs, value)
    payload["experimental"] = True
    return _finish(ctx, payload, f"{value}\n")


@count.command(name="graded-total", help="Experimental: graded relation chains summed over types")
@click.argument("n", type=int)
@click.option("--constraint", type=click.Choice(CONSTRAINTS), default=CONSTRAINTS[0])
@click.pass_context
def graded_total(ctx, n, constraint):
    value = enum_graded_total(n, ChainConstraint(constraint))
    payload = _count_payload("graded_total", {"n": n, "constraint": constraint}, value)
    payload["experimental"] = True
    return _finish(ctx, payload, f"{value}\n")


@main.group(name="enumerate", help="Stream combinatorial objects in lexicographic order")
def enumerate_cmd():
    pass


def _stream(ctx: click.Context, kind: str, items: Iterable[Tuple[Any, str]], limit: Optional[int]):
    """Echo each item's text as it is produced, or collect them for one JSON document."""
    as_json = _is_json(ctx)
    collected: List[Any] = []
    emitted = 0
    for payload, text in items:
        if limit is not None and emitted >= limit:
            break
        if as_json:
            collected.append(payload)
        else:
            click.echo(text, nl=not text.endswith("\n"))
        emitted += 1
    result = CommandResult(payload={"object": kind, "count": emitted, "items": collected})
    if as_json:
        click.echo(json.dumps(_document(result), indent=2))
    logger.debug("%d %s streamed", emitted, kind)
    return result


limit_option = click.option("--limit", type=int, default=None, help="Stop after this many items.")


@enumerate_cmd.command(help="Ordered partitions of {0..N-1}, optionally with K blocks")
@click.argument("n", type=int)
@click.option("--k", "k", type=int, default=None, help="Number of blocks.")
@limit_option
@click.pass_context
def partitions(ctx, n, k, limit):
    items = (([list(b) for b in p.blocks], str(p)) for p in iter_ordered_partitions(n, k))
    return _stream(ctx, "ordered_partitions", items, limit)


@enumerate_cmd.command(name="typed-partitions", help="Ordered partitions whose blocks have sizes PARTS")
@click.argument("parts")
@limit_option
@click.pass_context
def typed_partitions(ctx, parts, limit):
    t = _parse_type(parts)
    items = (
        ([list(b) for b in p.blocks], str(p))
        for p in iter_ordered_partitions_of_type(t.total, t)
    )
    return _stream(ctx, "typed_partitions", items, limit)


@enumerate_cmd.command(name="compositions", help="Compositions of N, optionally into K parts")
@click.argument("n", type=int)
@click.option("--k", "k", type=int, default=None, help="Number of parts.")
@limit_option
@click.pass_context
def compositions_cmd(ctx, n, k, limit):
    items = ((list(t.parts), str(t)) for t in compositions(n, k))
    return _stream(ctx, "compositions", items, limit)


@enumerate_cmd.command(help="Experimental: graded relation chains of type PARTS, in chain file format")
@click.argument("parts")
@click.option("--constraint", type=click.Choice(CONSTRAINTS), default=CONSTRAINTS[0])
@limit_option
@click.pass_context
def chains(ctx, parts, constraint, limit):
    t = _parse_type(parts)
    items = (
        (_chain_payload(g.to_chain()), format_chain(g.to_chain()) + "\n")
        for g in iter_graded_chains(t, ChainConstraint(constraint))
    )
    return _stream(ctx, "graded_chains", items, limit)


@main.command(help="Run every formula against its enumeration oracle")
@click.option("--config", "-c", default=None, help="Path to a YAML config file.")
@click.option(
    "--param",
    "-p",
    multiple=True,
    help="Override a config value in key=value format, e.g. -p max_n=5.",
)
@click.option("--seed", "-s", type=int, default=None, help="Random seed. Overrides the config.")
@click.option("--max-n", type=int, default=None, help="Largest n of the exhaustive sweeps.")
@click.option("--output", "-o", default=None, help="Also save the report (.json or .yaml).")
@click.pass_context
def verify(ctx, config, param, seed, max_n, output):
    overrides = list(param)
    if seed is not None:
        overrides.append(f"seed={seed}")
    if max_n is not None:
        overrides.append(f"max_n={max_n}")
    parsed = read_config_from_file(config, overrides)
    logger.info("Running verification suite (seed %d)", parsed.verify.seed)

    report = VerificationSuite(parsed.verify).run()
    reporter = VerificationReporter(report, parsed.verify)
    if output:
        reporter.save(output)

    payload = reporter.generate_summary()
    if _is_json(ctx):
        status = CommandStatus.ok if report.passed else CommandStatus.error
        message = None if report.passed else _failure_message(report)
        click.echo(json.dumps({"status": status.value, "payload": payload, "message": message}, indent=2))
    else:
        click.echo(reporter.render_table(), nl=False)
    if not report.passed:
        return CommandResult(
            status=CommandStatus.error,
            payload=payload,
            message=_failure_message(report),
            exit_code=EXIT_DOMAIN,
        )
    return CommandResult(payload=payload)


def _failure_message(report) -> str:
    names = ", ".join(check.name for check in report.failed_checks)
    return f"{len(report.failed_checks)} verification check(s) failed: {names}"


# process entry


def _error(argv: Sequence[str], message: str, exit_code: int) -> CommandResult:
    result = CommandResult(status=CommandStatus.error, message=message, exit_code=exit_code)
    click.echo(f"Error: {message}", err=True)
    if "--json" in argv:
        click.echo(json.dumps(_document(result), indent=2))
    return result


def run(argv: Sequence[str]) -> CommandResult:
    """
    Dispatch argv to the command tree and map failures to exit codes:
    1 usage, 2 parse, 3 domain.
    """
    argv = list(argv)
    try:
        outcome = main.main(args=argv, prog_name="cobweb_lab", standalone_mode=False)
    except click.UsageError as err:
        return _error(argv, err.format_message(), EXIT_USAGE)
    except click.Abort:
        return _error(argv, "aborted", EXIT_USAGE)
    except MatrixParseError as err:
        return _error(argv, f"malformed input: {err}", EXIT_PARSE)
    except OSError as err:
        return _error(argv, f"cannot read file: {err}", EXIT_PARSE)
    except (CobwebDomainError, ValidationError) as err:
        return _error(argv, str(err), EXIT_DOMAIN)

    if isinstance(outcome, CommandResult):
        if outcome.status == CommandStatus.error:
            click.echo(f"Error: {outcome.message}", err=True)
        return outcome
    # --help and a bare group return a click exit code
    return CommandResult(exit_code=outcome if isinstance(outcome, int) else EXIT_OK)


def entrypoint():
    sys.exit(run(sys.argv[1:]).exit_code)
