#!/usr/bin/env python3
"""
RSym - Álgebra libre de la variedad en grado acotado
Desarrollado por: Vicente Alonso

Reescritura de términos a combinaciones de palabras normales
    x_i,  x_i [R_{x_j}] L_{x_s},  x_i [R_{x_j}] V...V [L_{x_s}]
multiplicando palabra a palabra por variables, cálculo Δ de linealización,
descomposición por forma, evaluación en álgebras concretas y certificado
de independencia de la base multilineal.
"""

import logging
from functools import lru_cache
from itertools import combinations, permutations
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra_core import Algebra, Element
from .errors import AlgebraNotInVariety, DegreeCapExceeded, InvalidN, InvalidNormalWord
from .fields import Field, QQ_FIELD
from .identities import eval_normal_word, evaluate_coeffs, in_variety, is_identity
from .linalg import SparseVector, rank
from .pn_family import PnAlgebra, make_pn
from .reports import VerificationReport
from .terms import (
    FreeElement,
    NormalWord,
    OperatorElement,
    Prod,
    RkTag,
    Term,
    TermCombination,
    Var,
    sorted_pair,
)

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 12

Signed = List[Tuple[int, NormalWord]]
FreeInput = Union[Term, TermCombination, FreeElement]


# =============================================================================
# PRODUCTO DE PALABRAS POR VARIABLES
# =============================================================================

def _append_v(word: NormalWord, p: int, q: int, sign: int = 1) -> Signed:
    """word sin L seguido de V_{p,q}"""
    pair = sorted_pair(p, q)
    if pair is None:
        return []
    s, ordered = pair
    return [(sign * s, NormalWord(word.head, word.r, word.vs + (ordered,)))]


def _v_word(head: int, p: int, q: int, sign: int = 1, l: Optional[int] = None) -> Signed:
    """x_head V_{p,q} [L_l]"""
    pair = sorted_pair(p, q)
    if pair is None:
        return []
    s, ordered = pair
    return [(sign * s, NormalWord(head, vs=(ordered,), l=l))]


def times_right(word: NormalWord, r: int) -> Signed:
    """word·x_r (operador R_{x_r})"""
    if word.degree == 1:
        return [(1, NormalWord(r, l=word.head))]
    if word.l is None:
        # V_{x,y}R_z = 0
        return []
    # L_s R_r = V_{s,r}
    return _append_v(NormalWord(word.head, word.r, word.vs), word.l, r)


def times_left(word: NormalWord, r: int) -> Signed:
    """x_r·word (operador L_{x_r})"""
    i = word.head
    if word.degree == 1:
        return [(1, NormalWord(i, l=r))]
    if not word.vs:
        s = word.l
        if word.r is None:
            # x_r(x_s x_i) = x_s R_i L_r
            if s <= i:
                return [(1, NormalWord(s, r=i, l=r))]
            return (
                [(1, NormalWord(i, r=s, l=r))]
                + _v_word(s, r, i)
                + _v_word(i, r, s, sign=-1)
            )
        # x_i R_j L_s L_r = x_j V_{i,s} L_r - x_i R_j V_{r,s}
        j = word.r
        return _v_word(j, i, s, l=r) + _append_v(NormalWord(i, j, ()), r, s, sign=-1)
    if word.l is None:
        return [(1, NormalWord(i, word.r, word.vs, r))]
    # V L_s L_r = -V V_{r,s}
    return _append_v(NormalWord(i, word.r, word.vs), r, word.l, sign=-1)


def _accumulate(target: Dict[NormalWord, Any], signed: Signed, coeff: Any, field: Field) -> None:
    for sign, word in signed:
        value = coeff if sign == 1 else -coeff if sign == -1 else coeff * field.convert(sign)
        new = target.get(word, field.zero) + value
        if new:
            target[word] = new
        else:
            target.pop(word, None)


def mul(f: FreeElement, g: FreeElement, degree_cap: Optional[int] = DEFAULT_DEGREE_CAP) -> FreeElement:
    """
    Producto en el álgebra libre de dos combinaciones de palabras normales

    Raises:
        DegreeCapExceeded: si algún producto supera el tope de grado
    """
    if f.field != g.field:
        f._check(g)
    field = f.field
    result: Dict[NormalWord, Any] = {}
    for u, a in f:
        for v, b in g:
            if degree_cap is not None and u.degree + v.degree > degree_cap:
                raise DegreeCapExceeded(
                    f"Grado {u.degree + v.degree} por encima del tope {degree_cap}"
                )
            if u.degree >= 2 and v.degree >= 2:
                # (ab)(cd) = 0
                continue
            if v.degree == 1:
                signed = times_right(u, v.head)
            else:
                signed = times_left(v, u.head)
            _accumulate(result, signed, a * b, field)
    return FreeElement(field, result)


# =============================================================================
# FORMA NORMAL
# =============================================================================

@lru_cache(maxsize=65536)
def _term_normal_form(term: Term, field: Field, degree_cap: Optional[int]) -> FreeElement:
    if isinstance(term, Var):
        return FreeElement.variable(term.index, field)
    left = _term_normal_form(term.left, field, degree_cap)
    if left.is_zero():
        return left
    right = _term_normal_form(term.right, field, degree_cap)
    return mul(left, right, degree_cap)


def word_to_term(word: NormalWord) -> Term:
    """Término que representa una palabra normal"""
    term: Term = Var(word.head)
    if word.r is not None:
        term = Prod(term, Var(word.r))
    for p, q in word.vs:
        term = Prod(Prod(Var(p), term), Var(q))
    if word.l is not None:
        term = Prod(Var(word.l), term)
    return term


def normal_form(
    t: FreeInput,
    field: Field = QQ_FIELD,
    degree_cap: Optional[int] = DEFAULT_DEGREE_CAP,
) -> FreeElement:
    """
    Forma normal de un término o combinación

    Args:
        t: Término, combinación de términos o elemento libre
        field: Cuerpo de coeficientes (el de t si es FreeElement)
        degree_cap: Tope de grado (None sin tope)

    Returns:
        Combinación de palabras normales
    """
    if isinstance(t, (Var, Prod)):
        return _term_normal_form(t, field, degree_cap)
    if isinstance(t, TermCombination):
        result = FreeElement(field)
        for term, coeff in t:
            result = result + _term_normal_form(term, field, degree_cap).scale(field.convert(coeff))
        return result
    if isinstance(t, FreeElement):
        result = FreeElement(t.field)
        for word, coeff in t:
            result = result + _term_normal_form(word_to_term(word), t.field, degree_cap).scale(coeff)
        return result
    raise TypeError(f"No se puede normalizar {type(t).__name__}")


def as_free(t: FreeInput, field: Field = QQ_FIELD, degree_cap: Optional[int] = DEFAULT_DEGREE_CAP) -> FreeElement:
    """Normalizar solo si la entrada aún no es un FreeElement"""
    if isinstance(t, FreeElement):
        return t
    return normal_form(t, field, degree_cap)


def operator_to_free(g: OperatorElement, head: int) -> FreeElement:
    """x_head · g"""
    return FreeElement(g.field, {NormalWord(head, vs=word): c for word, c in g})


# =============================================================================
# BASE MULTILINEAL
# =============================================================================

def _pair_sequences(indices: Sequence[int], k: int):
    """Sucesiones ordenadas de k pares disjuntos (p<q) que agotan indices"""
    if k == 0:
        if not indices:
            yield ()
        return
    for p, q in combinations(indices, 2):
        rest = [i for i in indices if i not in (p, q)]
        for tail in _pair_sequences(rest, k - 1):
            yield ((p, q),) + tail


def multilinear_basis(m: int) -> List[NormalWord]:
    """
    Palabras normales de multigrado (1,...,1) en x_1..x_m

    Returns:
        Lista en orden canónico
    """
    if m < 1:
        return []
    variables = list(range(1, m + 1))
    words = set()
    if m == 1:
        words.add(NormalWord(1))
    elif m == 2:
        words.update({NormalWord(1, l=2), NormalWord(2, l=1)})
    else:
        for head in variables:
            rest = [v for v in variables if v != head]
            for use_r in (False, True):
                r_choices = [v for v in rest if v > head] if use_r else [None]
                for r in r_choices:
                    after_r = [v for v in rest if v != r]
                    for use_l in (False, True):
                        l_choices = after_r if use_l else [None]
                        for l in l_choices:
                            pool = [v for v in after_r if v != l]
                            if len(pool) % 2:
                                continue
                            k = len(pool) // 2
                            if k == 0:
                                if r is not None and l is not None:
                                    words.add(NormalWord(head, r=r, l=l))
                                continue
                            for vs in _pair_sequences(pool, k):
                                words.add(NormalWord(head, r, vs, l))
    return sorted(words, key=lambda w: w.sort_key())


# =============================================================================
# LINEALIZACIÓN
# =============================================================================

def _coerce_y(y: FreeInput, field: Field, degree_cap: Optional[int]) -> FreeElement:
    return as_free(y, field, degree_cap)


def _delta_term(
    term: Term,
    i: int,
    k: int,
    y: FreeElement,
    degree_cap: Optional[int],
    memo: Dict[Tuple[Term, int], FreeElement],
) -> FreeElement:
    key = (term, k)
    if key in memo:
        return memo[key]
    field = y.field
    if isinstance(term, Var):
        if k == 0:
            result = FreeElement.variable(term.index, field)
        elif k == 1 and term.index == i:
            result = y
        else:
            result = FreeElement(field)
    else:
        result = FreeElement(field)
        for r in range(k + 1):
            left = _delta_term(term.left, i, r, y, degree_cap, memo)
            if left.is_zero():
                continue
            right = _delta_term(term.right, i, k - r, y, degree_cap, memo)
            if right.is_zero():
                continue
            result = result + mul(left, right, degree_cap)
    memo[key] = result
    return result


def delta(
    f: FreeInput,
    i: int,
    k: int,
    y: FreeInput,
    field: Field = QQ_FIELD,
    degree_cap: Optional[int] = DEFAULT_DEGREE_CAP,
) -> FreeElement:
    """
    f Δ^k_{x_i}(y), con resultado en forma normal

    Args:
        f: Elemento a linealizar
        i: Índice de la variable sustituida
        k: Número de apariciones sustituidas (k >= 0)
        y: Elemento que se inserta
    """
    if k < 0:
        raise ValueError("k debe ser >= 0")
    f = as_free(f, field, degree_cap)
    y = _coerce_y(y, f.field, degree_cap)
    memo: Dict[Tuple[Term, int], FreeElement] = {}
    result = FreeElement(f.field)
    for word, coeff in f:
        result = result + _delta_term(word_to_term(word), i, k, y, degree_cap, memo).scale(coeff)
    return result


def full_linearization(
    f: FreeInput,
    i: int,
    field: Field = QQ_FIELD,
    degree_cap: Optional[int] = DEFAULT_DEGREE_CAP,
) -> Tuple[FreeElement, Tuple[int, ...]]:
    """
    Linealización completa de f en x_i con variables nuevas

    Returns:
        (resultado, índices de las variables nuevas y_1..y_k)
    """
    f = as_free(f, field, degree_cap)
    k = f.degree_in(i)
    if k < 1:
        raise ValueError(f"x{i} no aparece en el elemento")
    start = max(f.variables()) + 1
    fresh = tuple(range(start, start + k))
    result = f
    for y in fresh:
        result = delta(result, i, 1, FreeElement.variable(y, f.field), degree_cap=degree_cap)
    logger.debug(f"Linealización en x{i}: grado {k}, variables nuevas {fresh}")
    return result, fresh


def substitute(
    f: FreeInput,
    mapping: Mapping[int, FreeInput],
    field: Field = QQ_FIELD,
    degree_cap: Optional[int] = DEFAULT_DEGREE_CAP,
) -> FreeElement:
    """Imagen de f por el endomorfismo x_i -> mapping[i] (el resto fijo)"""
    f = as_free(f, field, degree_cap)
    images = {i: as_free(v, f.field, degree_cap) for i, v in mapping.items()}
    memo: Dict[Term, FreeElement] = {}

    def image(term: Term) -> FreeElement:
        if term in memo:
            return memo[term]
        if isinstance(term, Var):
            value = images.get(term.index, FreeElement.variable(term.index, f.field))
        else:
            left = image(term.left)
            value = FreeElement(f.field) if left.is_zero() else mul(left, image(term.right), degree_cap)
        memo[term] = value
        return value

    result = FreeElement(f.field)
    for word, coeff in f:
        result = result + image(word_to_term(word)).scale(coeff)
    return result


# =============================================================================
# DESCOMPOSICIÓN
# =============================================================================

class Decomposition(NamedTuple):
    """f = r0 + r1 + r2 + r3 + low"""
    r0: FreeElement
    r1: FreeElement
    r2: FreeElement
    r3: FreeElement
    low: FreeElement

    def parts(self) -> Dict[RkTag, FreeElement]:
        return {RkTag.R0: self.r0, RkTag.R1: self.r1, RkTag.R2: self.r2,
                RkTag.R3: self.r3, RkTag.LOW: self.low}


def decompose(f: FreeElement) -> Decomposition:
    """Separar f por la forma de sus palabras"""
    return Decomposition(
        f.component(RkTag.R0),
        f.component(RkTag.R1),
        f.component(RkTag.R2),
        f.component(RkTag.R3),
        f.component(RkTag.LOW),
    )


def split_heads(f: FreeElement) -> Dict[int, OperatorElement]:
    """
    Escribir f en R0 como Σ x_i g_i con g_i en E0

    Raises:
        InvalidNormalWord: si alguna palabra no es de la forma x_i V...V
    """
    grouped: Dict[int, Dict] = {}
    for word, coeff in f:
        if word.tag != RkTag.R0:
            raise InvalidNormalWord(f"La palabra {word} no es de la forma x_i V...V")
        grouped.setdefault(word.head, {})[word.vs] = coeff
    return {head: OperatorElement(f.field, terms) for head, terms in sorted(grouped.items())}


# =============================================================================
# EVALUACIÓN
# =============================================================================

def evaluate(f: FreeInput, algebra: Algebra, assignment: Mapping[int, Element]) -> Element:
    """
    Imagen de f por el homomorfismo que extiende la asignación

    Raises:
        UnboundVariable: si falta alguna variable
        AlgebraNotInVariety: si f está en forma normal y A no está en la variedad
    """
    if isinstance(f, FreeElement) and not in_variety(algebra):
        raise AlgebraNotInVariety(
            f"{algebra.name or 'El álgebra'} no satisface las identidades de la variedad"
        )
    values = {i: u.coeffs for i, u in assignment.items()}
    return Element(algebra, evaluate_coeffs(algebra, f, values))


def random_term(rng: np.random.Generator, max_degree: int, n_vars: int, min_degree: int = 1) -> Term:
    """Árbol de productos aleatorio con grado en [min_degree, max_degree]"""
    degree = int(rng.integers(min_degree, max_degree + 1))

    def build(size: int) -> Term:
        if size == 1:
            return Var(int(rng.integers(1, n_vars + 1)))
        split = int(rng.integers(1, size))
        return Prod(build(split), build(size - split))

    return build(degree)


def random_assignment(algebra: Algebra, variables: Sequence[int], rng: np.random.Generator, bound: int = 2) -> Dict[int, Element]:
    return {
        i: Element(algebra, {k: algebra.field.random_element(rng, bound) for k in range(algebra.dim)})
        for i in variables
    }


# =============================================================================
# INDEPENDENCIA DE LA BASE
# =============================================================================

class IndependenceCertificate(NamedTuple):
    """Matriz de evaluación de la base multilineal y su rango"""
    m: int
    n: int
    words: List[NormalWord]
    rows: List[SparseVector]
    rank: int

    @property
    def valid(self) -> bool:
        return self.rank == len(self.words)


def _certificate_substitution(P: PnAlgebra, word: NormalWord) -> Dict[int, SparseVector]:
    """Sustitución que separa a word del resto de palabras multilineales"""
    minus = -P.field.one
    values: Dict[int, Element] = {}
    if word.degree == 1:
        values[word.head] = P.c(1)
    elif word.degree == 2:
        values[word.head] = P.c(1)
        values[word.l] = P.a(1, 1)
    else:
        if word.r is not None:
            values[word.head] = P.d(1, 2)
            values[word.r] = P.b(1, 2).scale(minus)
        else:
            values[word.head] = P.c(2)
        for position, (p, q) in enumerate(word.vs, start=1):
            values[p] = P.a(position + 1, position + 2)
            values[q] = P.b(position + 1, position + 2).scale(minus)
        k = len(word.vs)
        if word.l is not None:
            values[word.l] = P.a(k + 2, k + 3)
    return {i: u.coeffs for i, u in values.items()}


def independence_certificate(m: int, field: Field = QQ_FIELD) -> IndependenceCertificate:
    """
    Matriz (sustitución, coordenada) x palabra de la base multilineal

    El certificado es válido si el rango coincide con el número de palabras.
    """
    words = multilinear_basis(m)
    n = (m - 1) // 2 + 3
    P = make_pn(n, field, max_n=None)
    columns = {word: position for position, word in enumerate(words)}
    rows: List[SparseVector] = []
    for source in words:
        values = _certificate_substitution(P, source)
        full = {i: values.get(i, {}) for i in range(1, m + 1)}
        evaluated = {word: eval_normal_word(P.alg, word, full) for word in words}
        for coordinate in range(P.dim):
            row = {columns[w]: vec[coordinate] for w, vec in evaluated.items() if vec.get(coordinate)}
            if row:
                rows.append(row)
    result_rank = rank(rows, len(words), field.domain)
    logger.info(f"Certificado m={m}: {result_rank}/{len(words)} en P{n}")
    return IndependenceCertificate(m, n, words, rows, result_rank)


# =============================================================================
# GRADO BAJO Y COMPONENTES
# =============================================================================

def low_degree_obstruction(f: FreeInput, P: PnAlgebra) -> Optional[Dict[int, Element]]:
    """
    Sustitución en P_n (n >= 2) que no anula f, usando los patrones de grado <= 3

    Returns:
        Asignación concreta o None si ningún patrón sirve
    """
    if P.n < 2:
        raise InvalidN("Se necesita n >= 2")
    f = as_free(f, P.field)
    low = f.component(RkTag.LOW)
    if low.is_zero():
        return None
    variables = f.variables()
    alg = P.alg
    a11, b11, c1, d11, a12 = P.a(1, 1), P.b(1, 1), P.c(1), P.d(1, 1), P.a(1, 2)

    patterns: List[Dict[int, Element]] = []
    for i in variables:
        patterns.append({i: c1})
        patterns.append({i: a11 + c1})
        patterns.append({i: b11 + d11})
    for i, j in permutations(variables, 2):
        patterns.append({i: a11, j: c1})
        patterns.append({i: b11, j: d11})
        patterns.append({i: d11, j: b11})
    for i, j, k in permutations(variables, 3):
        patterns.append({i: b11, j: d11, k: a12})
        patterns.append({i: d11, j: b11, k: b11})

    zero = alg.zero()
    for pattern in patterns:
        assignment = {v: pattern.get(v, zero) for v in variables}
        values = {v: u.coeffs for v, u in assignment.items()}
        if evaluate_coeffs(alg, f, values):
            return assignment
    return None


def verify_component_identities(f: FreeInput, P: PnAlgebra) -> VerificationReport:
    """
    Si f es identidad de P_n (n >= 2), cada componente f0..f3 también lo es
    y la parte de grado bajo se anula
    """
    if P.n < 2:
        raise InvalidN("Se necesita n >= 2")
    f = as_free(f, P.field)
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Componentes en {P.name}")
    if not is_identity(P.alg, f):
        report.skip(f"components.{tag}.premise", "f es identidad", "f no es identidad")
        return report
    parts = decompose(f)
    report.add(f"components.{tag}.low_zero", parts.low.is_zero(), "parte de grado <= 3 nula",
               None if parts.low.is_zero() else str(parts.low))
    for tag_name, part in (("r0", parts.r0), ("r1", parts.r1), ("r2", parts.r2), ("r3", parts.r3)):
        ok = part.is_zero() or is_identity(P.alg, part)
        report.add(f"components.{tag}.{tag_name}", ok, f"f_{tag_name[1]} es identidad")
    return report
