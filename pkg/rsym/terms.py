#!/usr/bin/env python3
"""
RSym - Tipos de términos del álgebra libre
Desarrollado por: Vicente Alonso

Términos como árboles binarios de productos, combinaciones lineales de
términos, palabras normales de la base del álgebra libre de la variedad,
elementos libres (combinaciones de palabras normales) y palabras de
operadores V (elementos del álgebra asociativa E0).
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple, Union

from sympy.polys.domains import QQ

from .errors import FieldMismatch, InvalidNormalWord
from .fields import Field, QQ_FIELD, format_linear_combination

logger = logging.getLogger(__name__)


# =============================================================================
# TÉRMINOS
# =============================================================================

@dataclass(frozen=True)
class Var:
    """Variable x_index"""
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise InvalidNormalWord(f"Índice de variable no válido: {self.index}")

    def __str__(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True)
class Prod:
    """Producto (left right)"""
    left: "Term"
    right: "Term"

    def __str__(self) -> str:
        return f"({self.left} {self.right})"


Term = Union[Var, Prod]


def term_degree(term: Term) -> int:
    if isinstance(term, Var):
        return 1
    return term_degree(term.left) + term_degree(term.right)


def term_degree_in(term: Term, index: int) -> int:
    if isinstance(term, Var):
        return 1 if term.index == index else 0
    return term_degree_in(term.left, index) + term_degree_in(term.right, index)


def term_variables(term: Term) -> Tuple[int, ...]:
    found = set()
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.index)
        else:
            stack.extend((node.left, node.right))
    return tuple(sorted(found))


def mul_terms(*terms: Term) -> Term:
    """Producto asociado a la izquierda ((t1 t2) t3)..."""
    result = terms[0]
    for term in terms[1:]:
        result = Prod(result, term)
    return result


class TermCombination:
    """
    Combinación lineal de términos con coeficientes racionales
    """

    def __init__(self, terms: Optional[Dict[Term, Any]] = None):
        self.terms: Dict[Term, Any] = {}
        for term, coeff in (terms or {}).items():
            coeff = QQ.convert(coeff)
            if coeff:
                self.terms[term] = coeff

    @classmethod
    def of(cls, term: Term) -> "TermCombination":
        return cls({term: QQ.one})

    def __iter__(self) -> Iterator[Tuple[Term, Any]]:
        return iter(self.terms.items())

    def __add__(self, other: "TermCombination") -> "TermCombination":
        result = dict(self.terms)
        for term, coeff in other.terms.items():
            result[term] = result.get(term, QQ.zero) + coeff
        return TermCombination(result)

    def __neg__(self) -> "TermCombination":
        return TermCombination({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "TermCombination") -> "TermCombination":
        return self + (-other)

    def scale(self, factor: Any) -> "TermCombination":
        factor = QQ.convert(factor)
        return TermCombination({t: c * factor for t, c in self.terms.items()})

    def product(self, other: "TermCombination") -> "TermCombination":
        """Extensión bilineal del producto de términos"""
        result: Dict[Term, Any] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                key = Prod(left, right)
                result[key] = result.get(key, QQ.zero) + a * b
        return TermCombination(result)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> Tuple[int, ...]:
        found = set()
        for term in self.terms:
            found.update(term_variables(term))
        return tuple(sorted(found))

    def degree(self) -> int:
        return max((term_degree(t) for t in self.terms), default=0)

    def __str__(self) -> str:
        ordered = sorted(self.terms.items(), key=lambda item: str(item[0]))
        return format_linear_combination(QQ_FIELD, [(c, str(t)) for t, c in ordered])


# =============================================================================
# PALABRAS NORMALES
# =============================================================================

class RkTag(Enum):
    """Clasificación de las palabras normales por forma"""
    R0 = "R0"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    LOW = "LowDegree"


VPair = Tuple[int, int]


@dataclass(frozen=True)
class NormalWord:
    """
    Palabra x_head [R_{x_r}] V_{p1,q1}...V_{pk,qk} [L_{x_l}]

    El índice de R cumple head <= r; cada par V cumple p < q; sin pares V,
    la presencia de R exige la de L.
    """
    head: int
    r: Optional[int] = None
    vs: Tuple[VPair, ...] = ()
    l: Optional[int] = None

    def __post_init__(self):
        indices = [self.head]
        if self.r is not None:
            indices.append(self.r)
        if self.l is not None:
            indices.append(self.l)
        for p, q in self.vs:
            if p >= q:
                raise InvalidNormalWord(f"Par V no ordenado: ({p},{q})")
            indices.extend((p, q))
        if min(indices) < 1:
            raise InvalidNormalWord("Los índices de variable empiezan en 1")
        if self.r is not None and self.head > self.r:
            raise InvalidNormalWord(
                f"R exige head <= r: x{self.head} R[x{self.r}]"
            )
        if not self.vs and self.r is not None and self.l is None:
            raise InvalidNormalWord("x_i R[x_j] sin V ni L no es una palabra normal")

    @property
    def degree(self) -> int:
        return 1 + (self.r is not None) + 2 * len(self.vs) + (self.l is not None)

    @property
    def tag(self) -> RkTag:
        if not self.vs:
            return RkTag.LOW
        if self.r is None:
            return RkTag.R1 if self.l is not None else RkTag.R0
        return RkTag.R3 if self.l is not None else RkTag.R2

    def multidegree(self) -> Counter:
        counts = Counter([self.head])
        if self.r is not None:
            counts[self.r] += 1
        for p, q in self.vs:
            counts[p] += 1
            counts[q] += 1
        if self.l is not None:
            counts[self.l] += 1
        return counts

    def variables(self) -> Tuple[int, ...]:
        return tuple(sorted(self.multidegree()))

    def sort_key(self) -> Tuple:
        return (self.degree, self.head, self.r or 0, self.vs, self.l or 0)

    def __str__(self) -> str:
        parts = [f"x{self.head}"]
        if self.r is not None:
            parts.append(f"R[x{self.r}]")
        parts.extend(f"V[x{p},x{q}]" for p, q in self.vs)
        if self.l is not None:
            parts.append(f"L[x{self.l}]")
        return " ".join(parts)


def sorted_pair(p: int, q: int) -> Optional[Tuple[int, VPair]]:
    """(signo, par ordenado) para V_{p,q}, o None si p == q"""
    if p == q:
        return None
    if p < q:
        return 1, (p, q)
    return -1, (q, p)


# =============================================================================
# ELEMENTOS LIBRES Y DE OPERADORES
# =============================================================================

class _SparseCombination:
    """Base común: combinación lineal dispersa sobre un cuerpo"""

    key_order = staticmethod(lambda key: key)

    def __init__(self, field: Field = QQ_FIELD, terms: Optional[Dict[Any, Any]] = None):
        self.field = field
        self.terms: Dict[Any, Any] = {}
        for key, coeff in (terms or {}).items():
            coeff = field.convert(coeff)
            if coeff:
                self.terms[key] = coeff

    def _new(self, terms: Dict[Any, Any]):
        return type(self)(self.field, terms)

    def _check(self, other) -> None:
        if other.field != self.field:
            raise FieldMismatch(
                f"Cuerpos distintos: {self.field.display_name} y {other.field.display_name}"
            )

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other):
        self._check(other)
        result = dict(self.terms)
        for key, coeff in other.terms.items():
            value = result.get(key, self.field.zero) + coeff
            if value:
                result[key] = value
            else:
                result.pop(key, None)
        return self._new(result)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: Any):
        factor = self.field.convert(factor)
        return self._new({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.field, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: Any) -> Any:
        return self.terms.get(key, self.field.zero)

    def sorted_items(self) -> List[Tuple[Any, Any]]:
        return sorted(self.terms.items(), key=lambda item: self.key_order(item[0]))

    def __str__(self) -> str:
        return format_linear_combination(
            self.field, [(coeff, self.format_key(key)) for key, coeff in self.sorted_items()]
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def format_key(self, key: Any) -> str:
        return str(key)


class FreeElement(_SparseCombination):
    """
    Combinación lineal de palabras normales
    """

    key_order = staticmethod(lambda word: word.sort_key())

    @classmethod
    def word(cls, word: NormalWord, field: Field = QQ_FIELD, coeff: Any = 1) -> "FreeElement":
        return cls(field, {word: coeff})

    @classmethod
    def variable(cls, index: int, field: Field = QQ_FIELD) -> "FreeElement":
        return cls(field, {NormalWord(index): 1})

    def words(self) -> List[NormalWord]:
        return [word for word, _ in self.sorted_items()]

    def degree(self) -> int:
        return max((w.degree for w in self.terms), default=0)

    def variables(self) -> Tuple[int, ...]:
        found = set()
        for word in self.terms:
            found.update(word.variables())
        return tuple(sorted(found))

    def degree_in(self, index: int) -> int:
        return max((w.multidegree()[index] for w in self.terms), default=0)

    def component(self, tag: RkTag) -> "FreeElement":
        return self._new({w: c for w, c in self.terms.items() if w.tag == tag})

    def support_tags(self) -> Tuple[RkTag, ...]:
        return tuple(sorted({w.tag for w in self.terms}, key=lambda t: t.value))


OperatorWord = Tuple[VPair, ...]


class OperatorElement(_SparseCombination):
    """
    Combinación lineal de palabras V_{p1,q1}...V_{pk,qk} (p_r < q_r, k >= 1)
    """

    key_order = staticmethod(lambda word: (len(word), word))

    def __init__(self, field: Field = QQ_FIELD, terms: Optional[Dict[Any, Any]] = None):
        for word in (terms or {}):
            if not word:
                raise InvalidNormalWord("Las palabras de E0 tienen longitud >= 1")
            for p, q in word:
                if p >= q:
                    raise InvalidNormalWord(f"Par V no ordenado: ({p},{q})")
        super().__init__(field, terms)

    @classmethod
    def generator(cls, p: int, q: int, field: Field = QQ_FIELD) -> "OperatorElement":
        """V_{x_p,x_q} con la antisimetría aplicada"""
        normalized = sorted_pair(p, q)
        if normalized is None:
            return cls(field)
        sign, pair = normalized
        return cls(field, {(pair,): sign})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], field: Field = QQ_FIELD) -> "OperatorElement":
        """Producto V_{p1,q1}...V_{pk,qk} de pares arbitrarios"""
        result = None
        for p, q in pairs:
            factor = cls.generator(p, q, field)
            result = factor if result is None else result * factor
        if result is None:
            raise InvalidNormalWord("Se necesita al menos un par V")
        return result

    def __mul__(self, other: "OperatorElement") -> "OperatorElement":
        self._check(other)
        result: Dict[OperatorWord, Any] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                key = left + right
                value = result.get(key, self.field.zero) + a * b
                if value:
                    result[key] = value
                else:
                    result.pop(key, None)
        return self._new(result)

    def variables(self) -> Tuple[int, ...]:
        found = set()
        for word in self.terms:
            for p, q in word:
                found.update((p, q))
        return tuple(sorted(found))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def format_key(self, word: OperatorWord) -> str:
        return " ".join(f"V[x{p},x{q}]" for p, q in word)


def commutator_op(a: OperatorElement, b: OperatorElement) -> OperatorElement:
    return a * b - b * a


def jordan_op(a: OperatorElement, b: OperatorElement) -> OperatorElement:
    return a * b + b * a

