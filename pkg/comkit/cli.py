#!/usr/bin/env python3
"""
Command line interface.

Commands that produce a system print it in .svs form; checks print a JSON
report document.  Exit codes: 0 success or property holds, 1 property
fails (witness in the report), 2 parse or configuration error, 3 guard
exceeded, 4 internal-consistency error.
"""
from __future__ import absolute_import, division, print_function

from functools import wraps

import logging

import click

from comkit.amalgam import amalgamate, decompose, verify_amalgam
from comkit.axioms import AxiomId, Redundancy, check_axiom, check_nonredundancy, classify
from comkit.comkit_configuration import get_config
from comkit.euler import euler_inclusion_exclusion, euler_poincare, euler_zero_sets, lopsided_by_euler, rank_table
from comkit.exceptions import ComkitException, ParseError
from comkit.export import dump_json, export_dot, face_poset, input_digest, report_document
from comkit.formats import emit_svs, parse_arrangement, parse_poset, parse_svs
from comkit.generation import cocircuits, conformal_closure, lopsided_envelope
from comkit.minors import MinorSpec, semisimplify, simplify
from comkit.ranking import ranking_com
from comkit.realize import enumerate_cells
from comkit.signs import SignSystem
from comkit.topes import is_partial_cube, tope_graph, topes
from comkit.utils import setup_logging

_LOG = logging.getLogger(__name__)

FORMATS = click.Choice(["dot", "json"])


def _reset_config():
    get_config(refresh=True)


@click.group()
@click.option("--verbose", is_flag=True, default=False, help="Log at DEBUG level to stderr.")
@click.option("--guard", type=click.IntRange(min=1), default=None,
              help="Override the enumeration guard on the ground set size.")
@click.pass_context
def cli(ctx, verbose, guard):
    """Sign-vector systems: axioms, minors, topes, generation, amalgams, Euler sums, rankings, realizations."""
    ctx.ensure_object(dict)
    ctx.obj["payloads"] = []
    try:
        cfg = get_config(refresh=True)
    except ComkitException as e:
        click.echo(dump_json(report_document(ctx.info_name, input_digest(), e.report(), e.exit_code)), nl=False)
        ctx.exit(e.exit_code)
    if guard is not None:
        cfg.enumeration_guard = guard
    ctx.call_on_close(_reset_config)
    setup_logging("DEBUG" if verbose else cfg.log_level)


def _finish(results, status=0):
    ctx = click.get_current_context()
    doc = report_document(ctx.info_name, input_digest(*ctx.obj["payloads"]), results, status)
    click.echo(dump_json(doc), nl=False)
    ctx.exit(status)


def _emit_system(system):
    click.echo(emit_svs(system), nl=False)


def reported(func):
    """Turn library exceptions into a JSON report and the matching exit code."""
    @wraps(func)
    def report_wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ComkitException as e:
            _LOG.debug("%s failed: %s", func.__name__, e)
            _finish(e.report(), e.exit_code)
    return report_wrapper


def _load(path, parser):
    with open(path, "rb") as f:
        payload = f.read()
    click.get_current_context().obj["payloads"].append(payload)
    try:
        text = payload.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError("%s is not UTF-8 text" % path, locator=path)
    return parser(text)


def _labels(value):
    if not value:
        return ()
    return tuple(v.strip() for v in value.split(",") if v.strip())


INPUT = click.Path(exists=True, dir_okay=False)


@cli.command("classify")
@click.argument("path", type=INPUT)
@reported
def classify_cmd(path):
    system = _load(path, parse_svs)
    _finish(classify(system).as_dict())


@cli.command("axioms")
@click.argument("path", type=INPUT)
@click.option("--which", "which", multiple=True,
              help="Axiom or non-redundancy id (C, FS, FS_LE, FS_PREC, SE, ..., N1*, RN2*). Repeatable.")
@reported
def axioms_cmd(path, which):
    system = _load(path, parse_svs)
    names = which or [a.value for a in AxiomId]
    results = {}
    for name in names:
        try:
            report = check_axiom(system, name)
        except KeyError:
            report = check_nonredundancy(system, Redundancy.parse(name))
        results[name] = report.as_dict()
    _finish(results, 0 if all(r["holds"] for r in results.values()) else 1)


@cli.command("minor")
@click.argument("path", type=INPUT)
@click.option("--delete", "to_delete", default="", help="Comma-separated elements to delete.")
@click.option("--contract", "to_contract", default="", help="Comma-separated elements to contract.")
@reported
def minor_cmd(path, to_delete, to_contract):
    system = _load(path, parse_svs)
    _emit_system(MinorSpec(_labels(to_delete), _labels(to_contract)).apply(system))


@cli.command("simplify")
@click.argument("path", type=INPUT)
@click.option("--semi", is_flag=True, default=False, help="Semisimplify instead.")
@reported
def simplify_cmd(path, semi):
    system = _load(path, parse_svs)
    _emit_system(semisimplify(system) if semi else simplify(system))


@cli.command("topes")
@click.argument("path", type=INPUT)
@reported
def topes_cmd(path):
    system = _load(path, parse_svs)
    found = topes(system)
    _finish({"topes": [str(t) for t in found], "count": len(found)})


@cli.command("tope-graph")
@click.argument("path", type=INPUT)
@click.option("--format", "fmt", type=FORMATS, default="json")
@reported
def tope_graph_cmd(path, fmt):
    system = _load(path, parse_svs)
    graph = tope_graph(system)
    if fmt == "dot":
        click.echo(export_dot(graph), nl=False)
        return
    data = graph.as_dict()
    data["partial_cube"] = is_partial_cube(graph)
    _finish(data)


@cli.command("cocircuits")
@click.argument("path", type=INPUT)
@reported
def cocircuits_cmd(path):
    system = _load(path, parse_svs)
    _finish(cocircuits(system).as_dict())


@cli.command("generate")
@click.argument("path", type=INPUT)
@reported
def generate_cmd(path):
    _emit_system(conformal_closure(_load(path, parse_svs)))


@cli.command("envelope")
@click.argument("path", type=INPUT)
@reported
def envelope_cmd(path):
    _emit_system(lopsided_envelope(_load(path, parse_svs)))


@cli.command("decompose")
@click.argument("path", type=INPUT)
@reported
def decompose_cmd(path):
    system = _load(path, parse_svs)
    decomposition = decompose(system)
    if decomposition is None:
        _finish({"decomposition": None})
        return
    report = verify_amalgam(decomposition.lower, decomposition.upper, system)
    _finish({
        "decomposition": decomposition.as_dict(),
        "amalgam": report.as_dict(),
        "euler_inclusion_exclusion": euler_inclusion_exclusion(decomposition),
    })


@cli.command("amalgam")
@click.argument("lower", type=INPUT)
@click.argument("upper", type=INPUT)
@reported
def amalgam_cmd(lower, upper):
    _emit_system(amalgamate(_load(lower, parse_svs), _load(upper, parse_svs)))


@cli.command("euler")
@click.argument("path", type=INPUT)
@click.option("--zero-sets", is_flag=True, default=False, help="Sum over zero-set sizes instead of ranks.")
@click.option("--lopsided", type=click.Choice(["ii", "iii"]), default=None,
              help="Also decide lopsidedness through the zero-set formula on topal fibers.")
@reported
def euler_cmd(path, zero_sets, lopsided):
    system = _load(path, parse_svs)
    total = euler_zero_sets(system) if zero_sets else euler_poincare(system)
    results = {"sum": total}
    holds = total == 1
    if lopsided:
        results["lopsided"] = lopsided_by_euler(system, lopsided)
        holds = results["lopsided"]
    _finish(results, 0 if holds else 1)


@cli.command("rank")
@click.argument("path", type=INPUT)
@reported
def rank_cmd(path):
    _finish(rank_table(_load(path, parse_svs)).as_dict())


@cli.command("ranking-com")
@click.argument("path", type=INPUT)
@click.option("--no-simplify", is_flag=True, default=False, help="Keep every 2-subset of the poset.")
@reported
def ranking_com_cmd(path, no_simplify):
    poset = _load(path, parse_poset)
    _emit_system(ranking_com(poset, simplify_system=not no_simplify))


@cli.command("realize")
@click.argument("path", type=INPUT)
@click.option("--witnesses", is_flag=True, default=False, help="Report a rational point for every covector.")
@reported
def realize_cmd(path, witnesses):
    problem = _load(path, parse_arrangement)
    cells = enumerate_cells(problem)
    if witnesses:
        _finish({str(x): [str(v) for v in point] for x, point in cells.items()})
    _emit_system(SignSystem(problem.ground, cells.keys()))


@cli.command("face-poset")
@click.argument("path", type=INPUT)
@click.option("--format", "fmt", type=FORMATS, default="dot")
@reported
def face_poset_cmd(path, fmt):
    poset = face_poset(_load(path, parse_svs))
    if fmt == "dot":
        click.echo(export_dot(poset), nl=False)
        return
    _finish(poset.as_dict())


def main():
    cli()  # pylint: disable=no-value-for-parameter


if __name__ == '__main__':
    main()
