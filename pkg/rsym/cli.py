#!/usr/bin/env python3
"""
RSym - Interfaz de línea de comandos
Desarrollado por: Vicente Alonso

Códigos de salida: 0 éxito / identidad, 1 comprobación fallida / no
identidad, 2 error de uso o de entrada.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

import click
import numpy as np
from pydantic import ValidationError

from .algebra_core import Algebra, make_algebra, save_algebra, with_field
from .config import RSymSettings, load_settings, setup_logging
from .counterexample import build_construction, hall_construction_element
from .errors import (
    DegreeCapExceeded,
    DuplicateBasisName,
    IndexOutOfRange,
    InvalidN,
    NonPrimeModulus,
    ParseError,
    RSymError,
)
from .fields import Field, parse_field_list
from .free_variety import normal_form
from .identities import check_variety_R, format_assignment, identity_witness, is_identity
from .operator_engine import (
    e0_algebra,
    e0_report,
    hall_matrix_check,
    is_v_identity,
    reduce_to_operator_identities,
)
from .parser import parse_term
from .pn_family import PnAlgebra, emit_spec, make_pn, verify_pn
from .reports import VerificationReport
from .verification import algebra_file_report, counterexample_report, property2_report, verify_paper

logger = logging.getLogger(__name__)

USAGE_ERRORS = (ParseError, InvalidN, NonPrimeModulus, DegreeCapExceeded, IndexOutOfRange, DuplicateBasisName)


# =============================================================================
# UTILIDADES
# =============================================================================

def _fail(message: str, code: int) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _read_text(value: str) -> str:
    """Texto literal o contenido de un archivo si value es una ruta existente"""
    path = Path(value)
    if path.suffix and path.is_file():
        return path.read_text(encoding="utf-8").strip()
    return value


def resolve_algebra(ref: str, field: Field, max_n: int) -> Tuple[Algebra, Optional[PnAlgebra]]:
    """
    'pn:<n>' o ruta a un archivo de especificación
    """
    if ref.startswith("pn:"):
        try:
            n = int(ref[3:])
        except ValueError:
            raise ParseError(f"Referencia de álgebra no válida: {ref!r}") from None
        P = make_pn(n, field, max_n)
        return P.alg, P
    path = Path(ref)
    if not path.is_file():
        raise ParseError(f"No existe el archivo de álgebra {ref!r}")
    algebra = make_algebra(path)
    if algebra.field != field:
        algebra = with_field(algebra, field)
    return algebra, None


def _emit(report: VerificationReport, as_json: bool) -> None:
    click.echo(report.to_json() if as_json else report.render())
    sys.exit(0 if report.passed else 1)


def _merge_option(ctx: click.Context, param: click.Parameter, value):
    """Opción repetida tras el subcomando: prevalece sobre la del grupo"""
    if value is None or value is False:
        return value
    obj = ctx.obj
    if param.name == "as_json":
        obj["json"] = True
        return value
    try:
        settings = RSymSettings.model_validate({**obj["settings"].model_dump(), param.name: value})
    except (RSymError, ValidationError) as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param) from e
    obj["settings"] = settings
    obj["field"] = settings.scalar_field
    return value


def common_options(f):
    """--field, --degree-cap y --json también después del subcomando"""
    options = [
        click.option("--field", "field", default=None, expose_value=False, callback=_merge_option,
                     help="Cuerpo: Q, F2, F3, Fp:<p>"),
        click.option("--degree-cap", "degree_cap", type=int, default=None, expose_value=False,
                     callback=_merge_option, help="Tope de grado de la forma normal"),
        click.option("--json", "as_json", is_flag=True, default=False, expose_value=False,
                     callback=_merge_option, help="Informe en JSON"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


class RSymGroup(click.Group):
    """Convierte los errores del dominio en códigos de salida"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except USAGE_ERRORS as e:
            _fail(str(e), 2)
        except RSymError as e:
            _fail(str(e), 1)


# =============================================================================
# GRUPO PRINCIPAL
# =============================================================================

@click.group(cls=RSymGroup)
@click.option("--field", "field_tag", default=None, help="Cuerpo: Q, F2, F3, Fp:<p>")
@click.option("--degree-cap", type=int, default=None, help="Tope de grado de la forma normal")
@click.option("--json", "as_json", is_flag=True, help="Informe en JSON")
@click.option("-v", "--verbose", is_flag=True, help="Logging DEBUG")
@click.pass_context
def cli(ctx: click.Context, field_tag: Optional[str], degree_cap: Optional[int], as_json: bool, verbose: bool):
    """RSym: álgebras right-simétricas de la variedad R"""
    try:
        settings = load_settings(field=field_tag, degree_cap=degree_cap,
                                 log_level="DEBUG" if verbose else None)
    except (RSymError, ValidationError) as e:
        _fail(str(e), 2)
    setup_logging(settings.log_level, settings.log_file)
    ctx.obj = {"settings": settings, "field": settings.scalar_field, "json": as_json}


@cli.command("verify-paper")
@click.option("--fields", default="Q,F2,F3", help="Lista de cuerpos separada por comas")
@click.option("--n-max", type=int, default=3)
@click.option("--quick", is_flag=True, help="Muestreos reducidos")
@click.option("--algebra-file", "algebra_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Comprobar solo la variedad de esta especificación")
@common_options
@click.pass_context
def verify_paper_cmd(ctx: click.Context, fields: str, n_max: int, quick: bool, algebra_file: Optional[str]):
    """Ejecutar la batería completa de comprobaciones"""
    field_list = parse_field_list(fields.split(","))
    if algebra_file:
        _emit(algebra_file_report(make_algebra(Path(algebra_file)), field_list), ctx.obj["json"])
    report = verify_paper(field_list, n_max, ctx.obj["settings"], quick=quick)
    _emit(report, ctx.obj["json"])


@cli.command("pn")
@click.option("--n", "n", type=int, required=True)
@click.option("--verify", "verify", type=click.Choice(["all", "variety"]), default="all")
@click.option("--emit-spec", "emit_path", type=click.Path(dir_okay=False), default=None)
@common_options
@click.pass_context
def pn_cmd(ctx: click.Context, n: int, verify: str, emit_path: Optional[str]):
    """Comprobar P_n (y opcionalmente escribir su especificación)"""
    P = make_pn(n, ctx.obj["field"], ctx.obj["settings"].pn_max_n)
    if emit_path:
        save_algebra(P.alg, emit_path)
        click.echo(f"Especificación escrita en {emit_path}", err=True)
    if verify == "variety":
        report = check_variety_R(P.alg, P.name)
    else:
        report = verify_pn(P)
    _emit(report, ctx.obj["json"])


@cli.command("emit-spec")
@click.option("--n", "n", type=int, required=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@common_options
@click.pass_context
def emit_spec_cmd(ctx: click.Context, n: int, output: Optional[str]):
    """Especificación JSON de P_n"""
    P = make_pn(n, ctx.obj["field"], ctx.obj["settings"].pn_max_n)
    if output:
        save_algebra(P.alg, output)
        click.echo(output)
    else:
        click.echo(json.dumps(emit_spec(P), indent=2, ensure_ascii=False))


@cli.command("normal-form")
@click.argument("term")
@common_options
@click.pass_context
def normal_form_cmd(ctx: click.Context, term: str):
    """Forma normal de un término (texto o archivo)"""
    settings = ctx.obj["settings"]
    value = normal_form(parse_term(_read_text(term)), ctx.obj["field"], settings.degree_cap)
    click.echo(str(value))


@cli.command("is-identity")
@click.option("--algebra", "algebra_ref", required=True, help="pn:<n> o archivo de especificación")
@click.argument("term")
@common_options
@click.pass_context
def is_identity_cmd(ctx: click.Context, algebra_ref: str, term: str):
    """¿Es term = 0 una identidad del álgebra?"""
    settings = ctx.obj["settings"]
    algebra, _ = resolve_algebra(algebra_ref, ctx.obj["field"], settings.pn_max_n)
    expression = parse_term(_read_text(term))
    witness = identity_witness(algebra, expression)
    if witness is None:
        if is_identity(algebra, expression):
            click.echo("identidad")
            sys.exit(0)
        click.echo("no es identidad (sin testigo concreto en el cuerpo base)")
        sys.exit(1)
    values = {i: u.coeffs for i, u in witness.items()}
    click.echo(f"no es identidad: {format_assignment(algebra, values)}")
    sys.exit(1)


@cli.command("e0")
@click.option("--algebra", "algebra_ref", required=True)
@click.option("--report", "full_report", is_flag=True, help="Informe completo para P_n")
@common_options
@click.pass_context
def e0_cmd(ctx: click.Context, algebra_ref: str, full_report: bool):
    """Dimensión y estructura de E0(A)"""
    algebra, P = resolve_algebra(algebra_ref, ctx.obj["field"], ctx.obj["settings"].pn_max_n)
    if full_report:
        if P is None:
            raise InvalidN("El informe completo de E0 solo está definido para P_n")
        _emit(e0_report(P), ctx.obj["json"])
    ma = e0_algebra(algebra)
    click.echo(f"dim E0({algebra.name or algebra_ref}) = {ma.dim}")


@cli.command("hall")
@click.option("--check", "algebra_ref", default="pn:2")
@click.option("--trials", type=int, default=None)
@click.option("--n", "n", type=int, default=1, help="n del elemento de Hall de la construcción")
@common_options
@click.pass_context
def hall_cmd(ctx: click.Context, algebra_ref: str, trials: Optional[int], n: int):
    """Identidad de Hall en M_2, M_3 y como V-identidad"""
    settings = ctx.obj["settings"]
    field = ctx.obj["field"]
    trials = trials or settings.hall_trials
    rng = np.random.default_rng(settings.random_seed)
    report = VerificationReport(title="Identidad de Hall")
    zeros, _ = hall_matrix_check(2, trials, field, rng)
    report.add(f"hall.{field.tag}.M2", zeros == trials, "Hall en M_2", f"{zeros}/{trials}")
    _, witness = hall_matrix_check(3, trials, field, rng)
    report.add(f"hall.{field.tag}.M3_witness", witness is not None, "Hall falla en M_3")
    algebra, _ = resolve_algebra(algebra_ref, field, settings.pn_max_n)
    S = hall_construction_element(n, field)
    report.add(f"hall.{field.tag}.v_identity", is_v_identity(algebra, S),
               f"S es V-identidad de {algebra.name or algebra_ref}")
    _emit(report, ctx.obj["json"])


@cli.command("reduce")
@click.option("--identity", "identity", required=True, help="Término (texto o archivo)")
@click.option("--algebra", "algebra_ref", default="pn:2")
@common_options
@click.pass_context
def reduce_cmd(ctx: click.Context, identity: str, algebra_ref: str):
    """Reducir una identidad de P_n a identidades z·g = 0"""
    settings = ctx.obj["settings"]
    _, P = resolve_algebra(algebra_ref, ctx.obj["field"], settings.pn_max_n)
    if P is None:
        raise InvalidN("La reducción solo está definida para P_n")
    f = normal_form(parse_term(_read_text(identity)), P.field, None)
    result = reduce_to_operator_identities(f, P, degree_cap=None)
    click.echo(f"m = {result.m}, cota {result.bound}, salidas {len(result.operators)}")
    for key in ("r0", "r1", "r2", "r3"):
        click.echo(f"  {key}: {result.counts[key]} (cota {result.bounds[key]})")
    click.echo(f"  parte de grado <= 3: {result.low_part}")
    for k, g in enumerate(result.operators, start=1):
        click.echo(f"g{k} = {g}")
    sys.exit(0 if result.within_bound() and result.low_part.is_zero() else 1)


@cli.command("counterexample")
@click.option("--n", "n", type=int, default=1)
@click.option("--verify", "verify", is_flag=True, help="Incluir la tabla de la propiedad (2)")
@click.option("--subsets", type=int, default=None, help="Número máximo de subconjuntos")
@common_options
@click.pass_context
def counterexample_cmd(ctx: click.Context, n: int, verify: bool, subsets: Optional[int]):
    """Construcción B = L/N' y propiedades (1) y (2)"""
    field = ctx.obj["field"]
    C = build_construction(n, field, ctx.obj["settings"].closure_max_rounds)
    click.echo(f"ambiente {C.ambient.dim}, L {C.L.dim}, N' {C.N_prime.dim}, B {C.B.dim}", err=True)
    report = counterexample_report(C)
    if verify:
        report.extend(property2_report(C, subsets))
    _emit(report, ctx.obj["json"])


def main() -> None:
    cli(prog_name="rsym")
