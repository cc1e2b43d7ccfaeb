#!/usr/bin/env python3
"""
RSym - Identidades polinómicas de álgebras concretas
Desarrollado por: Vicente Alonso

Una expresión f(x1..xm) es identidad de A si se anula al sustituir cada
x_i por el vector genérico Σ_k t_{i,k} e_k, con t indeterminadas
conmutativas: se compara como polinomio, no como función. La misma
maquinaria evalúa términos, palabras normales y palabras de operadores V.
"""

import logging
from itertools import islice
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.polys.rings import ring

from .algebra_core import Algebra, Element, v_op
from .errors import UnboundVariable
from .linalg import SparseVector, add_scaled
from .reports import VerificationReport
from .terms import (
    FreeElement,
    NormalWord,
    OperatorElement,
    OperatorWord,
    Prod,
    Term,
    TermCombination,
    Var,
    mul_terms,
)

logger = logging.getLogger(__name__)

Expression = Union[Term, TermCombination, FreeElement]
Values = Mapping[int, Mapping[int, Any]]


# =============================================================================
# EVALUACIÓN SOBRE VECTORES DE COEFICIENTES
# =============================================================================

def _value(values: Values, index: int) -> Mapping[int, Any]:
    try:
        return values[index]
    except KeyError:
        raise UnboundVariable(f"La variable x{index} no tiene valor asignado") from None


def eval_term(algebra: Algebra, term: Term, values: Values, memo: Optional[Dict] = None) -> Dict[int, Any]:
    """Valor de un término (árbol de productos)"""
    if memo is None:
        memo = {}
    if term in memo:
        return memo[term]
    if isinstance(term, Var):
        result = dict(_value(values, term.index))
    else:
        left = eval_term(algebra, term.left, values, memo)
        right = eval_term(algebra, term.right, values, memo)
        result = algebra.product_coeffs(left, right)
    memo[term] = result
    return result


def apply_v(algebra: Algebra, vector: Mapping[int, Any], x: Mapping[int, Any], y: Mapping[int, Any]) -> Dict[int, Any]:
    """u V_{x,y} = (x u) y"""
    return algebra.product_coeffs(algebra.product_coeffs(x, vector), y)


def apply_operator_word(
    algebra: Algebra,
    vector: Mapping[int, Any],
    word: OperatorWord,
    values: Values,
) -> Dict[int, Any]:
    result = dict(vector)
    for p, q in word:
        if not result:
            break
        result = apply_v(algebra, result, _value(values, p), _value(values, q))
    return result


def eval_normal_word(algebra: Algebra, word: NormalWord, values: Values) -> Dict[int, Any]:
    """Valor de x_i R_{x_r} V...V L_{x_l} aplicando los operadores en orden"""
    result = dict(_value(values, word.head))
    if word.r is not None:
        result = algebra.product_coeffs(result, _value(values, word.r))
    result = apply_operator_word(algebra, result, word.vs, values)
    if word.l is not None and result:
        result = algebra.product_coeffs(_value(values, word.l), result)
    return result


def evaluate_coeffs(algebra: Algebra, f: Expression, values: Values) -> Dict[int, Any]:
    """
    Valor de una expresión bajo una asignación de vectores de coeficientes

    Args:
        algebra: Álgebra de destino
        f: Término, combinación de términos o elemento libre
        values: Variable -> vector (escalares o polinomios)

    Returns:
        Vector de coeficientes del resultado
    """
    field = algebra.field
    result: Dict[int, Any] = {}
    if isinstance(f, (Var, Prod)):
        return eval_term(algebra, f, values)
    if isinstance(f, TermCombination):
        memo: Dict = {}
        for term, coeff in f:
            add_scaled(result, eval_term(algebra, term, values, memo), field.convert(coeff))
        return result
    if isinstance(f, FreeElement):
        for word, coeff in f:
            add_scaled(result, eval_normal_word(algebra, word, values), field.convert(coeff))
        return result
    raise TypeError(f"Expresión no soportada: {type(f).__name__}")


def eval_operator_coeffs(
    algebra: Algebra,
    g: OperatorElement,
    vector: Mapping[int, Any],
    values: Values,
) -> Dict[int, Any]:
    """z·g para un vector z dado"""
    result: Dict[int, Any] = {}
    for word, coeff in g:
        add_scaled(result, apply_operator_word(algebra, vector, word, values), algebra.field.convert(coeff))
    return result


def expression_variables(f: Union[Expression, OperatorElement]) -> Tuple[int, ...]:
    if isinstance(f, Var):
        return (f.index,)
    if isinstance(f, Prod):
        return TermCombination.of(f).variables()
    return f.variables()


# =============================================================================
# SUSTITUCIÓN GENÉRICA
# =============================================================================

class GenericSubstitution:
    """
    Sustitución x_i -> Σ_r t_{i,r} w_r con indeterminadas sobre el cuerpo

    Por defecto w_r recorre la base del álgebra; con spaces se restringe
    cada variable a un subespacio dado por sus vectores generadores.
    """

    def __init__(
        self,
        algebra: Algebra,
        variables: Sequence[int],
        spaces: Optional[Mapping[int, Sequence[SparseVector]]] = None,
        extra: Sequence[Tuple[str, Sequence[SparseVector]]] = (),
    ):
        """
        Inicializar la sustitución

        Args:
            algebra: Álgebra de destino
            variables: Índices de las variables
            spaces: Generadores del rango de cada variable (opcional)
            extra: Vectores genéricos adicionales con nombre (p. ej. z)
        """
        self.algebra = algebra
        self.variables = tuple(variables)
        units = [{k: algebra.field.one} for k in range(algebra.dim)]
        ranges: List[Tuple[Any, Sequence[SparseVector]]] = [
            (index, (spaces or {}).get(index, units)) for index in self.variables
        ]
        ranges.extend(extra)

        names: List[str] = []
        self._origin: List[Tuple[Any, int]] = []
        for key, vectors in ranges:
            for r in range(len(vectors)):
                names.append(f"t_{key}_{r}")
                self._origin.append((key, r))
        self._ranges = dict(ranges)

        if names:
            self.ring, *gens = ring(names, algebra.field.domain)
        else:
            self.ring, gens = None, []
        self.values: Dict[Any, Dict[int, Any]] = {}
        position = 0
        for key, vectors in ranges:
            vector: Dict[int, Any] = {}
            for r, w in enumerate(vectors):
                add_scaled(vector, w, gens[position])
                position += 1
            self.values[key] = vector
        logger.debug(f"Sustitución genérica con {len(names)} indeterminadas")

    def origin(self, generator_index: int) -> Tuple[Any, int]:
        """(variable, posición en su rango) de la indeterminada i-ésima"""
        return self._origin[generator_index]

    def range_of(self, key: Any) -> Sequence[SparseVector]:
        return self._ranges[key]


def _monomial_assignments(
    substitution: GenericSubstitution,
    polys: Sequence[Any],
    limit: int = 64,
) -> List[Dict[int, SparseVector]]:
    """Asignaciones concretas sugeridas por monomios no nulos"""
    algebra = substitution.algebra
    one = algebra.field.one
    found = []
    for poly in polys:
        for monom, _ in islice(poly.terms(), limit):
            assignment: Dict[int, SparseVector] = {i: {} for i in substitution.variables}
            for position, exponent in enumerate(monom):
                if not exponent:
                    continue
                key, r = substitution.origin(position)
                if key in assignment:
                    add_scaled(assignment[key], substitution.range_of(key)[r], one)
            found.append(assignment)
            if len(found) >= limit:
                return found
    return found


def _random_assignments(algebra: Algebra, variables: Sequence[int], count: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield {
            i: {k: algebra.field.random_element(rng) for k in range(algebra.dim)}
            for i in variables
        }


def find_nonvanishing(
    algebra: Algebra,
    substitution: GenericSubstitution,
    polys: Sequence[Any],
    evaluate: Callable[[Values], Mapping[int, Any]],
) -> Optional[Dict[int, SparseVector]]:
    """
    Asignación concreta con valor no nulo, derivada de los monomios

    Returns:
        Asignación o None si no se encuentra (posible sobre cuerpos finitos)
    """
    candidates = _monomial_assignments(substitution, polys)
    for assignment in candidates:
        if evaluate(assignment):
            return assignment
    for assignment in _random_assignments(algebra, substitution.variables, 32):
        if evaluate(assignment):
            return assignment
    return None


def format_assignment(algebra: Algebra, assignment: Mapping[int, Mapping[int, Any]]) -> str:
    return ", ".join(
        f"x{i}={Element(algebra, dict(assignment[i]))}" for i in sorted(assignment)
    )


# =============================================================================
# IDENTIDADES
# =============================================================================

def generic_value(algebra: Algebra, f: Expression) -> Tuple[GenericSubstitution, Dict[int, Any]]:
    """Valor de f bajo la sustitución genérica"""
    variables = expression_variables(f)
    substitution = GenericSubstitution(algebra, variables)
    return substitution, evaluate_coeffs(algebra, f, substitution.values)


def is_identity(algebra: Algebra, f: Expression) -> bool:
    """
    f = 0 es identidad de A (como polinomio en las indeterminadas)

    Args:
        algebra: Álgebra
        f: Término, combinación de términos o elemento libre

    Returns:
        True si todos los coeficientes polinómicos se anulan
    """
    _, value = generic_value(algebra, f)
    return not value


def identity_witness(algebra: Algebra, f: Expression) -> Optional[Dict[int, Element]]:
    """
    Sustitución concreta que no anula f, o None si f es identidad

    Sobre cuerpos finitos puede no existir aunque f no sea identidad
    polinómica; en ese caso también se devuelve None.
    """
    substitution, value = generic_value(algebra, f)
    if not value:
        return None
    found = find_nonvanishing(
        algebra,
        substitution,
        list(value.values()),
        lambda assignment: evaluate_coeffs(algebra, f, assignment),
    )
    if found is None:
        logger.info("Identidad no polinómica sin testigo concreto en el cuerpo base")
        return None
    return {i: Element(algebra, vector) for i, vector in found.items()}


def check_identity(
    report: VerificationReport,
    algebra: Algebra,
    f: Expression,
    check_id: str,
    anchor: str = "",
) -> bool:
    """Añadir al informe la comprobación de una identidad, con testigo si falla"""
    substitution, value = generic_value(algebra, f)
    if not value:
        report.add(check_id, True, anchor)
        return True
    found = find_nonvanishing(
        algebra,
        substitution,
        list(value.values()),
        lambda assignment: evaluate_coeffs(algebra, f, assignment),
    )
    witness = format_assignment(algebra, found) if found else "no nula como polinomio"
    report.add(check_id, False, anchor, witness)
    return False


X1, X2, X3, X4, X5 = (Var(i) for i in range(1, 6))


def commutator_term(a: Term, b: Term) -> TermCombination:
    return TermCombination.of(Prod(a, b)) - TermCombination.of(Prod(b, a))


def defining_identities() -> Dict[str, Tuple[str, TermCombination]]:
    """Identidades que definen la variedad"""
    inner = commutator_term(X1, X2)
    double_commutator = inner.product(TermCombination.of(X3)) - TermCombination.of(X3).product(inner)
    return {
        "commutator_central": ("[[a,b],c]=0", double_commutator),
        "ab_a": ("(ab)a=0", TermCombination.of(mul_terms(X1, X2, X1))),
        "metabelian": ("(ab)(cd)=0", TermCombination.of(Prod(Prod(X1, X2), Prod(X3, X4)))),
    }


def check_variety_R(algebra: Algebra, label: str = "") -> VerificationReport:
    """
    Comprobar las tres identidades que definen la variedad

    Returns:
        Informe con una entrada por identidad
    """
    label = label or algebra.name or "A"
    report = VerificationReport(title=f"Variedad: {label} sobre {algebra.field.display_name}")
    for key, (anchor, f) in defining_identities().items():
        check_identity(report, algebra, f, f"variety.{label}.{algebra.field.tag}.{key}", anchor)
    logger.info(f"Variedad {label}: {report.status}")
    return report


def in_variety(algebra: Algebra) -> bool:
    """Pertenencia a la variedad, memorizada en el álgebra"""
    cached = getattr(algebra, "_in_variety", None)
    if cached is None:
        cached = check_variety_R(algebra).passed
        algebra._in_variety = cached
    return cached


def check_consequences(algebra: Algebra, label: str = "") -> VerificationReport:
    """Consecuencias multilineales (ab)c+(cb)a=0 y ((ab)c)d=0"""
    label = label or algebra.name or "A"
    report = VerificationReport(title=f"Consecuencias: {label}")
    linear = TermCombination.of(mul_terms(X1, X2, X3)) + TermCombination.of(mul_terms(X3, X2, X1))
    check_identity(report, algebra, linear, f"consequence.{label}.{algebra.field.tag}.linearized",
                   "(ab)c+(cb)a=0")
    check_identity(report, algebra, TermCombination.of(mul_terms(X1, X2, X3, X4)),
                   f"consequence.{label}.{algebra.field.tag}.right_nilpotent", "((ab)c)d=0")
    return report


# =============================================================================
# COMPROBACIONES SOBRE LA BASE
# =============================================================================

def check_right_nilpotent(algebra: Algebra, label: str = "") -> VerificationReport:
    """((uv)w)t = 0 para toda cuaterna de la base, vía spans de productos"""
    label = label or algebra.name or "A"
    report = VerificationReport()
    one = algebra.field.one
    units = [{k: one} for k in range(algebra.dim)]
    witness = None
    seen = set()
    level: List[Tuple[Tuple[int, ...], Dict[int, Any]]] = []
    for (i, j), entry in algebra.sc.items():
        for k in range(algebra.dim):
            value = algebra.product_coeffs(entry, units[k])
            key = frozenset(value.items())
            if value and key not in seen:
                seen.add(key)
                level.append(((i, j, k), value))
    for (i, j, k), value in level:
        for t in range(algebra.dim):
            if algebra.product_coeffs(value, units[t]):
                witness = (i, j, k, t)
                break
        if witness:
            break
    names = algebra.basis_names
    text = None
    if witness:
        i, j, k, t = witness
        text = f"(({names[i]} {names[j]}) {names[k]}) {names[t]} != 0"
    report.add(f"basis.{label}.{algebra.field.tag}.right_nilpotent_4", witness is None,
               "((uv)w)t=0 en la base", text)
    return report


def check_right_symmetric(algebra: Algebra, label: str = "") -> VerificationReport:
    """(u,v,w) = (u,w,v) para toda terna de la base"""
    label = label or algebra.name or "A"
    report = VerificationReport()
    one = algebra.field.one
    dim = algebra.dim
    units = [{k: one} for k in range(dim)]
    products = {key: entry for key, entry in algebra.sc.items()}

    def prod(i: int, j: int) -> Dict[int, Any]:
        return products.get((i, j), {})

    witness = None
    for u in range(dim):
        for v in range(dim):
            uv = prod(u, v)
            for w in range(v + 1, dim):
                uw = prod(u, w)
                vw = prod(v, w)
                wv = prod(w, v)
                if not (uv or uw or vw or wv):
                    continue
                lhs = algebra.product_coeffs(uv, units[w])
                add_scaled(lhs, algebra.product_coeffs(units[u], vw), -one)
                rhs = algebra.product_coeffs(uw, units[v])
                add_scaled(rhs, algebra.product_coeffs(units[u], wv), -one)
                if lhs != rhs:
                    witness = (u, v, w)
                    break
            if witness:
                break
        if witness:
            break
    text = None
    if witness:
        names = algebra.basis_names
        text = "(u,v,w)=({}, {}, {})".format(*(names[i] for i in witness))
    report.add(f"basis.{label}.{algebra.field.tag}.right_symmetric", witness is None,
               "(u,v,w)=(u,w,v) en la base", text)
    return report


# =============================================================================
# RELACIONES ENTRE OPERADORES
# =============================================================================

def _operator_relations(algebra: Algebra):
    """Pares (nombre, descripción, función de valores) con valor nulo esperado"""
    prod = algebra.product_coeffs
    one = algebra.field.one

    def R(vec, x):
        return prod(vec, x)

    def L(vec, x):
        return prod(x, vec)

    def V(vec, x, y):
        return prod(prod(x, vec), y)

    def diff(*parts):
        total: Dict[int, Any] = {}
        for sign, vec in parts:
            add_scaled(total, vec, one if sign > 0 else -one)
        return total

    return [
        ("v_xx", "V_{x,x}=0", ("u", "x"),
         lambda s: V(s["u"], s["x"], s["x"])),
        ("v_antisymmetric", "V_{x,y}=-V_{y,x}", ("u", "x", "y"),
         lambda s: diff((1, V(s["u"], s["x"], s["y"])), (1, V(s["u"], s["y"], s["x"])))),
        ("rll", "xR_yL_zL_t=yV_{x,z}L_t-xR_yV_{t,z}", ("x", "y", "z", "t"),
         lambda s: diff(
             (1, L(L(R(s["x"], s["y"]), s["z"]), s["t"])),
             (-1, L(V(s["y"], s["x"], s["z"]), s["t"])),
             (1, V(R(s["x"], s["y"]), s["t"], s["z"])),
         )),
        ("rl", "xR_yL_z=xV_{z,y}+yR_xL_z-yV_{z,x}", ("x", "y", "z"),
         lambda s: diff(
             (1, L(R(s["x"], s["y"]), s["z"])),
             (-1, V(s["x"], s["z"], s["y"])),
             (-1, L(R(s["y"], s["x"]), s["z"])),
             (1, V(s["y"], s["z"], s["x"])),
         )),
        ("rv", "xR_yV_{z,t}=yR_xV_{z,t}", ("x", "y", "z", "t"),
         lambda s: diff(
             (1, V(R(s["x"], s["y"]), s["z"], s["t"])),
             (-1, V(R(s["y"], s["x"]), s["z"], s["t"])),
         )),
        ("vr", "V_{x,y}R_z=0", ("u", "x", "y", "z"),
         lambda s: R(V(s["u"], s["x"], s["y"]), s["z"])),
        ("vll", "V_{x,y}(L_zL_t+V_{t,z})=0", ("u", "x", "y", "z", "t"),
         lambda s: diff(
             (1, L(L(V(s["u"], s["x"], s["y"]), s["z"]), s["t"])),
             (1, V(V(s["u"], s["x"], s["y"]), s["t"], s["z"])),
         )),
    ]


def check_operator_relations(algebra: Algebra, label: str = "", explicit_matrices: bool = True) -> VerificationReport:
    """
    Relaciones entre operadores R, L, V como identidades simbólicas

    Con explicit_matrices se comprueban además V_{x,x}=0 y la antisimetría
    como matrices para todos los pares de la base.
    """
    label = label or algebra.name or "A"
    report = VerificationReport(title=f"Relaciones de operadores: {label}")
    for key, anchor, names, relation in _operator_relations(algebra):
        substitution = GenericSubstitution(algebra, (), extra=[
            (name, [{k: algebra.field.one} for k in range(algebra.dim)]) for name in names
        ])
        value = relation(substitution.values)
        witness = None
        if value:
            witness = _relation_witness(algebra, names, relation)
        report.add(f"operators.{label}.{algebra.field.tag}.{key}", not value, anchor, witness)

    if explicit_matrices:
        witness = None
        for i in range(algebra.dim):
            x = algebra.basis(i)
            if not v_op(algebra, x, x).is_zero():
                witness = f"V({algebra.basis_names[i]},{algebra.basis_names[i]}) != 0"
                break
            for j in range(i + 1, algebra.dim):
                y = algebra.basis(j)
                if not (v_op(algebra, x, y) + v_op(algebra, y, x)).is_zero():
                    witness = f"V({algebra.basis_names[i]},{algebra.basis_names[j]}) + V(y,x) != 0"
                    break
            if witness:
                break
        report.add(f"operators.{label}.{algebra.field.tag}.matrices", witness is None,
                   "V_{x,x}=0 y V_{x,y}=-V_{y,x} como matrices", witness)
    return report


def _relation_witness(algebra: Algebra, names: Sequence[str], relation) -> Optional[str]:
    dim = algebra.dim
    one = algebra.field.one
    # relaciones multilineales: basta recorrer la base
    total = dim ** len(names)
    if total > 200000:
        return "no nula como polinomio"
    for flat in range(total):
        values = {}
        rest = flat
        for name in names:
            rest, k = divmod(rest, dim)
            values[name] = {k: one}
        if relation(values):
            return ", ".join(f"{name}={algebra.basis_names[values[name].popitem()[0]]}" for name in names)
    return None
