#!/usr/bin/env python3
"""
RSym - Álgebra de operadores E0
Desarrollado por: Vicente Alonso

Evaluación de elementos de E0 (palabras en los operadores V) como matrices
sobre un álgebra concreta, cálculo del álgebra E0(A) por clausura,
reconocimiento de álgebras de matrices completas, identidad de Hall,
V-identidades y reducción de una identidad arbitraria de P_n a un sistema
de identidades z·g = 0 con g en E0.
"""

import logging
from itertools import combinations, product
from typing import Any, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.matrices import DomainMatrix

from .algebra_core import Algebra, Element, LinOp, Subspace
from .errors import InvalidN, NotAnIdentity
from .fields import Field, QQ_FIELD
from .free_variety import (
    DEFAULT_DEGREE_CAP,
    FreeInput,
    as_free,
    decompose,
    delta,
    mul,
    split_heads,
)
from .identities import (
    GenericSubstitution,
    apply_v,
    eval_operator_coeffs,
    is_identity,
)
from .linalg import EchelonBasis, SparseVector, solve_in_span
from .pn_family import PnAlgebra
from .reports import VerificationReport
from .terms import FreeElement, OperatorElement, OperatorWord, commutator_op, jordan_op

logger = logging.getLogger(__name__)


# =============================================================================
# EVALUACIÓN DE OPERADORES
# =============================================================================

def compose(first: LinOp, second: LinOp) -> LinOp:
    """first seguido de second, fila a fila"""
    return LinOp(first.algebra, {i: second.apply_coeffs(row) for i, row in first.rows.items()})


def v_matrix(algebra: Algebra, x: Mapping[int, Any], y: Mapping[int, Any]) -> LinOp:
    """V_{x,y} como operador: e_i -> (x e_i) y"""
    one = algebra.field.one
    return LinOp(algebra, {i: apply_v(algebra, {i: one}, x, y) for i in range(algebra.dim)})


def eval_operator(g: OperatorElement, algebra: Algebra, assignment: Mapping[int, Element]) -> LinOp:
    """
    Matriz de g bajo x_i -> assignment[i]

    Raises:
        UnboundVariable: si falta alguna variable de g
    """
    values = {i: u.coeffs for i, u in assignment.items()}
    one = algebra.field.one
    rows = {i: eval_operator_coeffs(algebra, g, {i: one}, values) for i in range(algebra.dim)}
    return LinOp(algebra, rows)


# =============================================================================
# ÁLGEBRAS DE MATRICES
# =============================================================================

class MatrixAlgebra:
    """
    Subálgebra de End(A) dada por un conjunto generador linealmente independiente
    """

    def __init__(self, algebra: Algebra, elements: Sequence[LinOp] = (), generators: int = 0):
        self.algebra = algebra
        self.elements: List[LinOp] = list(elements)
        self.generators = generators
        self._basis = EchelonBasis(algebra.field.domain)
        for op in self.elements:
            self._basis.add(op.flatten())

    @property
    def dim(self) -> int:
        return len(self.elements)

    def contains(self, op: LinOp) -> bool:
        return self._basis.contains(op.flatten())

    def is_closed(self) -> bool:
        """Cerrada por producto sobre el conjunto generador"""
        return all(self.contains(compose(a, b)) for a in self.elements for b in self.elements)

    def image(self) -> Subspace:
        """Span de A·E: suma de las imágenes de todos los operadores"""
        vectors = [row for op in self.elements for row in op.rows.values()]
        return Subspace(self.algebra, vectors)

    def annihilates(self, subspace: Subspace) -> bool:
        return all(not op.apply_coeffs(v) for op in self.elements for v in subspace.vectors)

    def leaves_invariant(self, subspace: Subspace) -> bool:
        return all(subspace.contains(op.apply_coeffs(v)) for op in self.elements for v in subspace.vectors)

    def __repr__(self) -> str:
        return f"<MatrixAlgebra dim={self.dim} sobre {self.algebra.name or 'A'}>"


def e0_algebra(algebra: Algebra) -> MatrixAlgebra:
    """
    E0(A): álgebra generada por los operadores V(e_i, e_j)

    Returns:
        MatrixAlgebra con una base de E0(A)
    """
    dim = algebra.dim
    one = algebra.field.one
    units = [{k: one} for k in range(dim)]
    basis = EchelonBasis(algebra.field.domain)
    generators: List[LinOp] = []
    for i in range(dim):
        for j in range(dim):
            op = v_matrix(algebra, units[i], units[j])
            if not op.is_zero() and basis.add(op.flatten()):
                generators.append(op)

    elements = list(generators)
    worklist = list(generators)
    while worklist:
        current = worklist.pop()
        for g in generators:
            candidate = compose(current, g)
            if not candidate.is_zero() and basis.add(candidate.flatten()):
                elements.append(candidate)
                worklist.append(candidate)
    logger.info(f"E0({algebra.name or 'A'}): {len(generators)} generadores, dimensión {len(elements)}")
    return MatrixAlgebra(algebra, elements, generators=len(generators))


class FullMatrixResult(NamedTuple):
    """Resultado del reconocimiento de M_n"""
    ok: bool
    units: Dict[Tuple[int, int], LinOp]
    reason: str = ""


def _flatten_matrix(matrix: DomainMatrix) -> SparseVector:
    size = matrix.shape[1]
    return {i * size + j: v for (i, j), v in matrix.to_dok().items() if v}


def is_full_matrix_algebra(
    ma: MatrixAlgebra,
    n: int,
    invariant: Optional[Subspace] = None,
) -> FullMatrixResult:
    """
    ¿Es ma isomorfa a M_n actuando sobre un subespacio invariante de dimensión n?

    Sin subespacio dado se usa la imagen A·E. Método: se restringen los
    elementos de ma a U y, para cada E_ij de End(U), se resuelve un sistema
    lineal exacto que lo expresa en ese span; la combinación correspondiente
    de elementos de ma es la unidad (i, j). No hay búsqueda de idempotentes
    de rango 1 ni división de idempotentes.

    Returns:
        FullMatrixResult con las unidades (i, j) indexadas desde 1
    """
    if ma.dim != n * n:
        return FullMatrixResult(False, {}, f"dimensión {ma.dim} != {n * n}")
    if n == 0:
        return FullMatrixResult(True, {})
    space = invariant if invariant is not None else ma.image()
    if space.dim != n:
        return FullMatrixResult(False, {}, f"subespacio invariante de dimensión {space.dim} != {n}")
    if not ma.leaves_invariant(space):
        return FullMatrixResult(False, {}, "el subespacio no es invariante")

    domain = ma.algebra.field.domain
    restricted = [_flatten_matrix(op.restrict(space)) for op in ma.elements]
    units: Dict[Tuple[int, int], LinOp] = {}
    for i in range(n):
        for j in range(n):
            target = {i * n + j: domain.one}
            coeffs = solve_in_span(target, restricted, n * n, domain)
            if coeffs is None:
                return FullMatrixResult(False, {}, f"E_{i + 1}{j + 1} no está en la restricción")
            unit = LinOp(ma.algebra)
            for c, op in zip(coeffs, ma.elements):
                if c:
                    unit = unit + op.scale(c)
            units[(i + 1, j + 1)] = unit
    return FullMatrixResult(True, units)


def pn_matrix_units(P: PnAlgebra) -> Dict[Tuple[int, int], LinOp]:
    """Operadores V(b_ij, a_ij), que actúan sobre C_n como E_ij"""
    return {
        (i, j): v_matrix(P.alg, P.b(i, j).coeffs, P.a(i, j).coeffs)
        for i in range(1, P.n + 1)
        for j in range(1, P.n + 1)
    }


def verify_matrix_units(P: PnAlgebra, units: Mapping[Tuple[int, int], LinOp]) -> VerificationReport:
    """c_k E_ij = δ_ki c_j y E_ij E_kl = δ_jk E_il"""
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Unidades matriciales de {P.name}")
    n = P.n
    witness = None
    for (i, j), op in units.items():
        for k in range(1, n + 1):
            expected = P.c(j).coeffs if k == i else {}
            if op.apply_coeffs(P.c(k).coeffs) != expected:
                witness = f"c{k} V(b{i}{j},a{i}{j}) incorrecto"
                break
        if witness:
            break
    report.add(f"e0.{tag}.units_on_C", witness is None, "c_k E_ij = δ_ki c_j", witness)

    witness = None
    zero = LinOp(P.alg)
    for (i, j), (k, l) in product(units, units):
        expected = units[(i, l)] if j == k else zero
        if compose(units[(i, j)], units[(k, l)]) != expected:
            witness = f"E{i}{j} E{k}{l} incorrecto"
            break
    report.add(f"e0.{tag}.units_products", witness is None, "E_ij E_kl = δ_jk E_il", witness)
    return report


def e0_report(P: PnAlgebra) -> VerificationReport:
    """E0(P_n) ≅ M_n, anula A_n + C̄_n y deja C_n invariante"""
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"E0({P.name})")
    ma = e0_algebra(P.alg)
    n = P.n
    report.add(f"e0.{tag}.dimension", ma.dim == n * n, f"dim E0 = {n * n}",
               None if ma.dim == n * n else f"dim {ma.dim}")
    full = is_full_matrix_algebra(ma, n, P.C)
    report.add(f"e0.{tag}.full_matrix", full.ok, f"E0 ≅ M_{n}", full.reason or None)
    report.add(f"e0.{tag}.annihilates_A_Cbar", ma.annihilates(P.A + P.Cbar), "(A+C̄)E0 = 0")
    report.add(f"e0.{tag}.C_invariant", ma.leaves_invariant(P.C), "C E0 ⊆ C")
    units = pn_matrix_units(P)
    report.add(f"e0.{tag}.units_in_E0", all(ma.contains(u) for u in units.values()),
               "V(b_ij,a_ij) ∈ E0")
    report.extend(verify_matrix_units(P, units))
    return report


# =============================================================================
# IDENTIDAD DE HALL
# =============================================================================

def hall_element(
    f1: OperatorElement,
    f2: OperatorElement,
    f3: OperatorElement,
    f4: OperatorElement,
    f5: OperatorElement,
) -> OperatorElement:
    """[[f1,f2]∘[f3,f4],f5] con a∘b = ab+ba"""
    return commutator_op(jordan_op(commutator_op(f1, f2), commutator_op(f3, f4)), f5)


def hall_matrices(ms: Sequence[DomainMatrix]) -> DomainMatrix:
    """[[A,B]∘[C,D],E] sobre matrices"""
    a, b, c, d, e = ms

    def bracket(x, y):
        return x * y - y * x

    left, right = bracket(a, b), bracket(c, d)
    jordan = left * right + right * left
    return bracket(jordan, e)


def _random_matrix(size: int, field: Field, rng: np.random.Generator, bound: int) -> DomainMatrix:
    rows = [[field.random_element(rng, bound) for _ in range(size)] for _ in range(size)]
    return DomainMatrix(rows, (size, size), field.domain)


def hall_matrix_check(
    size: int,
    trials: int,
    field: Field = QQ_FIELD,
    rng: Optional[np.random.Generator] = None,
    bound: int = 3,
) -> Tuple[int, Optional[List[DomainMatrix]]]:
    """
    Evaluar la identidad de Hall en quíntuplas aleatorias de M_size

    Returns:
        (número de evaluaciones nulas, primera quíntupla que no se anula)
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    zeros = 0
    witness = None
    for _ in range(trials):
        ms = [_random_matrix(size, field, rng, bound) for _ in range(5)]
        if hall_matrices(ms).is_zero_matrix:
            zeros += 1
        elif witness is None:
            witness = ms
    logger.info(f"Hall en M_{size}({field.display_name}): {zeros}/{trials} nulas")
    return zeros, witness


# =============================================================================
# V-IDENTIDADES
# =============================================================================

def is_v_identity(algebra: Algebra, g: OperatorElement) -> bool:
    """
    z·g = 0 es identidad de A (sustitución genérica de z y de las variables)
    """
    if g.is_zero() or algebra.dim == 0:
        return True
    one = algebra.field.one
    units = [{k: one} for k in range(algebra.dim)]
    substitution = GenericSubstitution(algebra, g.variables(), extra=[("z", units)])
    value = eval_operator_coeffs(algebra, g, substitution.values["z"], substitution.values)
    return not value


# =============================================================================
# REDUCCIÓN A IDENTIDADES DE OPERADORES
# =============================================================================

class ReductionResult(NamedTuple):
    """Salida de la reducción con el recuento por componente"""
    m: int
    operators: List[OperatorElement]
    counts: Dict[str, int]
    bounds: Dict[str, int]
    low_part: FreeElement

    @property
    def bound(self) -> int:
        return 2 * self.m * (self.m + 3)

    def within_bound(self) -> bool:
        return len(self.operators) <= self.bound and all(
            self.counts[k] <= self.bounds[k] for k in self.counts
        )


def _strip(f: FreeElement) -> List[OperatorElement]:
    return [g for g in split_heads(f).values() if not g.is_zero()]


def reduce_to_operator_identities(
    f: FreeInput,
    P: PnAlgebra,
    degree_cap: Optional[int] = DEFAULT_DEGREE_CAP,
) -> ReductionResult:
    """
    Sistema de elementos g_i de E0 tal que f = 0 en P_n equivale a z·g_i = 0

    Raises:
        InvalidN: si n < 2
        NotAnIdentity: si f = 0 no es identidad de P_n
    """
    if P.n < 2:
        raise InvalidN("La reducción necesita n >= 2")
    f = as_free(f, P.field, degree_cap)
    if not is_identity(P.alg, f):
        raise NotAnIdentity(f"f no es identidad de {P.name}")
    m = max(f.variables(), default=0)
    field = f.field
    x = lambda i: FreeElement.variable(i, field)  # noqa: E731
    parts = decompose(f)
    if not parts.low.is_zero():
        logger.warning(f"Parte de grado bajo no nula en una identidad de {P.name}: {parts.low}")

    outputs: Dict[str, List[OperatorElement]] = {"r0": [], "r1": [], "r2": [], "r3": []}
    if not parts.r0.is_zero():
        outputs["r0"] = _strip(parts.r0)
    if not parts.r1.is_zero():
        outputs["r1"] = _strip(mul(parts.r1, x(m + 1), degree_cap))
    if not parts.r2.is_zero():
        y = mul(x(m + 1), x(m + 2), degree_cap)
        for i in range(1, m + 1):
            outputs["r2"].extend(_strip(delta(parts.r2, i, 1, y, degree_cap=degree_cap)))
    if not parts.r3.is_zero():
        shifted = mul(parts.r3, x(m + 1), degree_cap)
        y = mul(x(m + 2), x(m + 3), degree_cap)
        for i in range(1, m + 1):
            outputs["r3"].extend(_strip(delta(shifted, i, 1, y, degree_cap=degree_cap)))

    counts = {k: len(v) for k, v in outputs.items()}
    bounds = {"r0": m, "r1": m, "r2": m * (m + 2), "r3": m * (m + 2)}
    operators = [g for k in ("r0", "r1", "r2", "r3") for g in outputs[k]]
    logger.info(f"Reducción (m={m}): {counts} -> {len(operators)} operadores")
    return ReductionResult(m, operators, counts, bounds, parts.low)


# =============================================================================
# PERTENENCIA ACOTADA AL IDEAL
# =============================================================================

class MembershipTerm(NamedTuple):
    """coeff · u · φ(h) · v"""
    coeff: Any
    left: OperatorWord
    generator: int
    substitution: Tuple[Tuple[int, Tuple[int, ...]], ...]
    right: OperatorWord

    def describe(self, G: Sequence[OperatorElement]) -> str:
        phi = ", ".join(f"x{k}->" + "+".join(f"x{v}" for v in vs) for k, vs in self.substitution)
        u = " ".join(f"V[x{p},x{q}]" for p, q in self.left) or "1"
        v = " ".join(f"V[x{p},x{q}]" for p, q in self.right) or "1"
        return f"{self.coeff} * ({u}) φ(g{self.generator}) ({v}) con φ: {phi or 'id'}"


def substitute_operator(
    h: OperatorElement,
    mapping: Mapping[int, Sequence[int]],
) -> OperatorElement:
    """Imagen de h por x_k -> Σ_{v in mapping[k]} x_v (lineal en cada argumento de V)"""
    field = h.field
    result = OperatorElement(field)
    for word, coeff in h:
        term: Optional[OperatorElement] = None
        for p, q in word:
            factor = OperatorElement(field)
            for a in mapping.get(p, (p,)):
                for b in mapping.get(q, (q,)):
                    factor = factor + OperatorElement.generator(a, b, field)
            term = factor if term is None else term * factor
        result = result + term.scale(coeff)
    return result


def _words(pairs: Sequence[Tuple[int, int]], max_length: int) -> List[OperatorWord]:
    words: List[OperatorWord] = [()]
    for length in range(1, max_length + 1):
        words.extend(product(pairs, repeat=length))
    return words


def _substitutions(variables: Sequence[int], pool: Sequence[int], support: int):
    images = [combo for size in range(1, support + 1) for combo in combinations(pool, size)]
    for choice in product(images, repeat=len(variables)):
        yield tuple(zip(variables, choice))


def ideal_membership_expand(
    g: OperatorElement,
    G: Sequence[OperatorElement],
    degree_cap: int = 6,
    support: int = 1,
) -> Optional[List[MembershipTerm]]:
    """
    Buscar g = Σ c · u φ(h) v con h en G, u, v palabras de E0 (o 1)

    Las sustituciones φ envían cada variable a una suma de hasta support
    variables de g. Una respuesta None significa "desconocido con este tope".

    Returns:
        Lista de términos del certificado o None
    """
    if g.is_zero():
        return []
    field = g.field
    pool = g.variables()
    pairs = [(p, q) for p, q in combinations(pool, 2)]
    target_degree = min(g.degree(), degree_cap)

    candidates: List[Tuple[MembershipTerm, OperatorElement]] = []
    for index, h in enumerate(G):
        if h.is_zero() or h.degree() > target_degree:
            continue
        for phi in _substitutions(h.variables(), pool, support):
            image = substitute_operator(h, dict(phi))
            if image.is_zero():
                continue
            spare = target_degree - image.degree()
            for left in _words(pairs, spare):
                for right in _words(pairs, spare - len(left)):
                    value = image
                    if left:
                        value = OperatorElement(field, {left: field.one}) * value
                    if right:
                        value = value * OperatorElement(field, {right: field.one})
                    candidates.append((MembershipTerm(field.one, left, index, phi, right), value))

    if not candidates:
        return None
    columns: Dict[OperatorWord, int] = {}
    for _, value in candidates:
        for word in value.terms:
            columns.setdefault(word, len(columns))
    if any(word not in columns for word in g.terms):
        return None
    vectors = [{columns[w]: c for w, c in value} for _, value in candidates]
    target = {columns[w]: c for w, c in g}
    coeffs = solve_in_span(target, vectors, len(columns), field.domain)
    if coeffs is None:
        logger.info(f"Pertenencia desconocida con tope {degree_cap} ({len(candidates)} candidatos)")
        return None
    certificate = [
        term._replace(coeff=c) for c, (term, _) in zip(coeffs, candidates) if c
    ]
    logger.info(f"Certificado de pertenencia con {len(certificate)} términos")
    return certificate


def verify_membership(
    g: OperatorElement,
    G: Sequence[OperatorElement],
    certificate: Iterable[MembershipTerm],
) -> bool:
    """Reconstruir g a partir del certificado"""
    field = g.field
    total = OperatorElement(field)
    for term in certificate:
        value = substitute_operator(G[term.generator], dict(term.substitution))
        if term.left:
            value = OperatorElement(field, {term.left: field.one}) * value
        if term.right:
            value = value * OperatorElement(field, {term.right: field.one})
        total = total + value.scale(term.coeff)
    return total == g
