#!/usr/bin/env python3
"""
RSym - Batería de verificación
Desarrollado por: Vicente Alonso

Reúne las comprobaciones de todos los módulos en un único informe:
variedad y estructura de P_n, E0(P_n), identidad de Hall, corrección de la
forma normal, independencia de la base, reducción a identidades de
operadores, la construcción B y la sensibilidad a mutaciones.
"""

import logging
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .algebra_core import Algebra, with_field
from .counterexample import (
    BConstruction,
    build_construction,
    construction_report,
    default_subsets,
    hall_construction_element,
    property2_table,
    verify_property1,
)
from .config import RSymSettings
from .errors import InvalidNormalWord
from .fields import Field, QQ_FIELD
from .free_variety import independence_certificate, multilinear_basis, normal_form, random_term
from .identities import check_variety_R, evaluate_coeffs
from .operator_engine import (
    e0_report,
    hall_element,
    hall_matrix_check,
    ideal_membership_expand,
    is_v_identity,
    reduce_to_operator_identities,
    verify_membership,
)
from .pn_family import PnAlgebra, make_pn, verify_pn
from .reports import VerificationReport
from .terms import FreeElement, NormalWord, OperatorElement

logger = logging.getLogger(__name__)


# =============================================================================
# FORMA NORMAL Y BASE
# =============================================================================

def soundness_check(
    P: PnAlgebra,
    count: int,
    assignments: int,
    rng: np.random.Generator,
    max_degree: int = 6,
    n_vars: int = 4,
    degree_cap: Optional[int] = None,
) -> VerificationReport:
    """evaluate(t) = evaluate(normal_form(t)) para términos aleatorios"""
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Forma normal en {P.name}")
    alg = P.alg
    witness = None
    for _ in range(count):
        term = random_term(rng, max_degree, n_vars)
        nf = normal_form(term, P.field, degree_cap)
        for _ in range(assignments):
            values = {
                i: {k: P.field.random_element(rng) for k in range(alg.dim)}
                for i in range(1, n_vars + 1)
            }
            values = {i: {k: c for k, c in v.items() if c} for i, v in values.items()}
            if evaluate_coeffs(alg, term, values) != evaluate_coeffs(alg, nf, values):
                witness = f"{term} -> {nf}"
                break
        if witness:
            break
    report.add(f"normal_form.{tag}.soundness", witness is None,
               f"{count} términos de grado <= {max_degree}", witness)
    return report


def brute_force_basis_size(m: int) -> int:
    """
    Contar las palabras normales multilineales construyendo todas las formas
    posibles sobre permutaciones de x_1..x_m
    """
    found = set()
    for order in permutations(range(1, m + 1)):
        for with_r in (False, True):
            for with_l in (False, True):
                rest = m - 1 - with_r - with_l
                if rest < 0 or rest % 2:
                    continue
                head = order[0]
                r = order[1] if with_r else None
                middle = order[1 + with_r: 1 + with_r + rest]
                l = order[-1] if with_l else None
                vs = tuple((middle[2 * k], middle[2 * k + 1]) for k in range(rest // 2))
                try:
                    word = NormalWord(head, r, vs, l)
                except InvalidNormalWord:
                    continue
                # en grado 2 solo x_i L[x_j]; x_i R[x_j] se reescribe
                if word.degree == 2 and word.r is not None:
                    continue
                found.add(word)
    return len(found)


def basis_report(max_m: int = 5, field: Field = QQ_FIELD) -> VerificationReport:
    """Tamaños de la base multilineal y certificados de independencia"""
    report = VerificationReport(title="Base multilineal")
    expected = {1: 1, 2: 2, 3: 6, 4: 18, 5: 60}
    for m in range(1, max_m + 1):
        size = len(multilinear_basis(m))
        if m in expected:
            report.add(f"basis.m{m}.size", size == expected[m], f"|B_{m}| = {expected[m]}", f"{size}")
        if m in (3, 4):
            brute = brute_force_basis_size(m)
            report.add(f"basis.m{m}.brute_force", brute == size, "enumeración directa", f"{brute}")
        certificate = independence_certificate(m, field)
        report.add(f"basis.m{m}.independence", certificate.valid,
                   f"rango completo en P{certificate.n}", f"rango {certificate.rank}/{len(certificate.words)}")
    return report


# =============================================================================
# REDUCCIÓN
# =============================================================================

def _attach(g: OperatorElement, head: int, r: Optional[int] = None, l: Optional[int] = None) -> FreeElement:
    """x_head [R_r] g [L_l] como combinación de palabras normales"""
    return FreeElement(g.field, {NormalWord(head, r, word, l): c for word, c in g})


def sample_p2_identities(field: Field = QQ_FIELD) -> List[Tuple[str, FreeElement]]:
    """
    Identidades de P_2 en x1, x2, x3 construidas con la identidad de Hall sobre
    V[x1,x2], V[x1,x3], V[x2,x3], con las cuatro formas de palabra
    """
    A = OperatorElement.generator(1, 2, field)
    B = OperatorElement.generator(1, 3, field)
    C = OperatorElement.generator(2, 3, field)
    halls = {
        "ABACB": hall_element(A, B, A, C, B),
        "ABABC": hall_element(A, B, A, B, C),
        "ACBCA": hall_element(A, C, B, C, A),
        "BCABC": hall_element(B, C, A, B, C),
    }
    return [
        ("x1.ABACB", _attach(halls["ABACB"], 1)),
        ("x2.ABABC", _attach(halls["ABABC"], 2)),
        ("x3.ACBCA", _attach(halls["ACBCA"], 3)),
        ("x1.BCABC", _attach(halls["BCABC"], 1)),
        ("x1_L3.ABACB", _attach(halls["ABACB"], 1, l=3)),
        ("x3_L2.ABABC", _attach(halls["ABABC"], 3, l=2)),
        ("x1R2.ABACB", _attach(halls["ABACB"], 1, r=2)),
        ("x2R3.ACBCA", _attach(halls["ACBCA"], 2, r=3)),
        ("x1R2_L3.ABABC", _attach(halls["ABABC"], 1, r=2, l=3)),
        ("x2R3_L1.BCABC", _attach(halls["BCABC"], 2, r=3, l=1)),
        ("mixed", _attach(halls["ABACB"], 1) + _attach(halls["ACBCA"], 2, r=3)),
    ]


def reduction_report(P: PnAlgebra, identities: Iterable[Tuple[str, FreeElement]]) -> VerificationReport:
    """Cota 2m(m+3) y V-identidades para cada salida de la reducción"""
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Reducción en {P.name}")
    for label, f in identities:
        result = reduce_to_operator_identities(f, P, degree_cap=None)
        report.add(f"reduction.{tag}.{label}.bound", result.within_bound(),
                   f"{len(result.operators)} <= {result.bound}", f"{result.counts}")
        bad = [str(g) for g in result.operators if not is_v_identity(P.alg, g)]
        report.add(f"reduction.{tag}.{label}.v_identities", not bad,
                   "cada g_i es V-identidad", "; ".join(bad) or None)
        report.add(f"reduction.{tag}.{label}.low_zero", result.low_part.is_zero(),
                   "parte de grado <= 3 nula", None if result.low_part.is_zero() else str(result.low_part))
    return report


# =============================================================================
# HALL, MUTACIONES Y CONSTRUCCIÓN
# =============================================================================

def hall_report(field: Field, trials: int, rng: np.random.Generator) -> VerificationReport:
    tag = field.tag
    report = VerificationReport(title=f"Identidad de Hall sobre {field.display_name}")
    zeros, _ = hall_matrix_check(2, trials, field, rng)
    report.add(f"hall.{tag}.M2", zeros == trials, "Hall en M_2", f"{zeros}/{trials}")
    _, witness = hall_matrix_check(3, trials, field, rng)
    report.add(f"hall.{tag}.M3_witness", witness is not None, "Hall falla en M_3")
    P2 = make_pn(2, field)
    report.add(f"hall.{tag}.P2_v_identity", is_v_identity(P2.alg, hall_construction_element(1, field)),
               "S es V-identidad de P2")
    return report


def mutate_constant(algebra: Algebra, key: Tuple[int, int], target: int) -> Algebra:
    """Copia del álgebra con el coeficiente de e_target en e_i e_j cambiado de signo"""
    products = {k: dict(v) for k, v in algebra.sc.items()}
    products[key][target] = -products[key][target]
    return Algebra(algebra.field, algebra.basis_names, products, name=f"{algebra.name}*")


def mutation_report(P: PnAlgebra) -> VerificationReport:
    """Cada mutación de signo de una constante de estructura se detecta"""
    report = VerificationReport(title=f"Mutaciones de {P.name}")
    names = P.alg.basis_names
    for (i, j), entry in sorted(P.alg.sc.items()):
        for k in sorted(entry):
            mutated = mutate_constant(P.alg, (i, j), k)
            check = check_variety_R(mutated, mutated.name)
            failure = next(iter(check.failures()), None)
            label = f"{names[i]}.{names[j]}.{names[k]}"
            report.add(f"mutation.{P.name}.{label}", failure is not None,
                       f"{names[i]}·{names[j]} con signo cambiado se detecta",
                       failure.line() if failure else None)
    return report


def algebra_file_report(algebra: Algebra, fields: Sequence[Field]) -> VerificationReport:
    """
    Variedad de un álgebra externa, repetida en cada cuerpo

    Una comprobación fallida lleva como testigo la sustitución concreta.
    """
    label = algebra.name or "A"
    report = VerificationReport(title=f"Variedad de {label}")
    for field in fields:
        target = algebra if algebra.field == field else with_field(algebra, field)
        report.extend(check_variety_R(target, label))
    return report


def membership_report(field: Field, degree_cap: int = 6, support: int = 1) -> VerificationReport:
    """Certificados de pertenencia al ideal generado por G en casos conocidos"""
    tag = field.tag
    report = VerificationReport(title=f"Pertenencia al ideal sobre {field.display_name}")
    A, B = OperatorElement.generator(1, 2, field), OperatorElement.generator(3, 4, field)
    cases = {
        "left_product": (B * A, [A]),
        "two_sided": (B * A * B, [A]),
        "substitution": (OperatorElement.generator(1, 3, field) * B, [A * B]),
    }
    for label, (g, G) in cases.items():
        certificate = ideal_membership_expand(g, G, degree_cap, support)
        ok = certificate is not None and verify_membership(g, G, certificate)
        report.add(f"ideal.{tag}.{label}", ok, f"{g} en el ideal de {G[0]}")
    return report


def property2_report(C: BConstruction, subsets_limit: Optional[int] = None, trials: int = 0) -> VerificationReport:
    """Tabla de la propiedad (2) para el elemento de Hall de la construcción"""
    tag = f"B{C.n}.{C.field.tag}"
    report = VerificationReport(title=f"Propiedad (2), n={C.n}")
    S = hall_construction_element(C.n, C.field)
    for names, ok in property2_table(C, S, default_subsets(C, subsets_limit), trials):
        report.add(f"property2.{tag}.{'+'.join(names)}", ok, "S se anula en la subálgebra")
    return report


def counterexample_report(C: BConstruction) -> VerificationReport:
    """Construcción y propiedad (1)"""
    report = construction_report(C)
    report.extend(verify_property1(C).report)
    return report


# =============================================================================
# BATERÍA COMPLETA
# =============================================================================

def verify_paper(
    fields: Sequence[Field],
    n_max: int = 3,
    settings: Optional[RSymSettings] = None,
    quick: bool = False,
) -> VerificationReport:
    """
    Ejecutar todas las comprobaciones

    Args:
        fields: Cuerpos en los que se repiten las comprobaciones
        n_max: Mayor n de P_n comprobado
        settings: Configuración (semilla, número de pruebas)
        quick: Reducir los muestreos y omitir la propiedad (2) completa
    """
    settings = settings or RSymSettings()
    rng = np.random.default_rng(settings.random_seed)
    report = VerificationReport(title="Verificación completa")
    terms = 25 if quick else settings.soundness_terms

    for field in fields:
        logger.info(f"Verificando sobre {field.display_name}")
        for n in range(1, n_max + 1):
            P = make_pn(n, field, settings.pn_max_n)
            report.extend(verify_pn(P))
            report.extend(e0_report(P))
            if n in (2, 3):
                report.extend(soundness_check(P, terms, settings.soundness_assignments, rng))
        report.extend(hall_report(field, 20 if quick else settings.hall_trials, rng))
        report.extend(membership_report(field, settings.ideal_degree_cap, settings.ideal_support))
        if n_max >= 2:
            report.extend(reduction_report(make_pn(2, field), sample_p2_identities(field)))
        for n in (1,) if quick else (1, 2):
            report.extend(counterexample_report(build_construction(n, field, settings.closure_max_rounds)))

    report.extend(basis_report(4 if quick else 5))
    if n_max >= 2:
        report.extend(mutation_report(make_pn(2, QQ_FIELD)))
    report.extend(property2_report(build_construction(1, QQ_FIELD), 3 if quick else None))
    logger.info(f"Verificación completa: {report.status}")
    return report
