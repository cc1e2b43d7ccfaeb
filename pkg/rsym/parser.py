#!/usr/bin/env python3
"""
RSym - Gramáticas de entrada
Desarrollado por: Vicente Alonso

Tres gramáticas lark (LALR):
- términos: x1, (t u), yuxtaposición, R[..], L[..], V[..,..], [a,b], (a,b,c)
- elementos de un álgebra: 3/2*a11 - c1
- elementos de E0: V[x1,x2] V[x3,x4] - 2*V[x1,x3]
"""

import logging
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import LarkError, VisitError

from .algebra_core import Algebra, Element
from .errors import ParseError, RSymError
from .fields import QQ_FIELD, Field
from .terms import OperatorElement, TermCombination, Var

logger = logging.getLogger(__name__)

_COMMON = r"""
    SCALAR: /\d+(\/\d+)?/
    %import common.WS
    %ignore WS
"""

_VARS = r"""
    VAR: /x\d+/
"""

TERM_GRAMMAR = r"""
    ?start: sum
    ?sum: signed
        | sum "+" signed -> add
        | sum "-" signed -> sub
    ?signed: "-" signed -> neg
        | "+" signed
        | scaled
    ?scaled: SCALAR "*"? product -> scale
        | product
    ?product: postfix
        | product postfix -> juxt
    ?postfix: atom
        | postfix "R" "[" sum "]" -> rop
        | postfix "L" "[" sum "]" -> lop
        | postfix "V" "[" sum "," sum "]" -> vop
    ?atom: VAR -> var
        | "(" sum ")"
        | "(" sum "," sum "," sum ")" -> associator
        | "[" sum "," sum "]" -> commutator
""" + _VARS + _COMMON

ELEMENT_GRAMMAR = r"""
    ?start: sum
    ?sum: signed
        | sum "+" signed -> add
        | sum "-" signed -> sub
    ?signed: "-" signed -> neg
        | "+" signed
        | SCALAR "*"? NAME -> scaled
        | NAME -> name
        | "(" sum ")"
    NAME: /[A-Za-z_][A-Za-z0-9_]*/
""" + _COMMON

OPERATOR_GRAMMAR = r"""
    ?start: sum
    ?sum: signed
        | sum "+" signed -> add
        | sum "-" signed -> sub
    ?signed: "-" signed -> neg
        | "+" signed
        | SCALAR "*"? word -> scaled
        | word
        | "(" sum ")"
    word: vgen+
    vgen: "V" "[" VAR "," VAR "]"
""" + _VARS + _COMMON


def _var_index(token) -> int:
    return int(str(token)[1:])


@v_args(inline=True)
class _TermBuilder(Transformer):
    """Construye TermCombination con coeficientes racionales"""

    def var(self, token):
        return TermCombination.of(Var(_var_index(token)))

    def juxt(self, left, right):
        return left.product(right)

    def rop(self, u, y):
        return u.product(y)

    def lop(self, u, y):
        return y.product(u)

    def vop(self, u, x, y):
        return x.product(u).product(y)

    def associator(self, a, b, c):
        return a.product(b).product(c) - a.product(b.product(c))

    def commutator(self, a, b):
        return a.product(b) - b.product(a)

    def scale(self, scalar, value):
        return value.scale(QQ_FIELD.parse(str(scalar)))

    def neg(self, value):
        return -value

    def add(self, left, right):
        return left + right

    def sub(self, left, right):
        return left - right


@v_args(inline=True)
class _ElementBuilder(Transformer):
    """Construye Element de un álgebra dada"""

    def __init__(self, algebra: Algebra):
        super().__init__()
        self.algebra = algebra

    def name(self, token):
        return self.algebra.basis(str(token))

    def scaled(self, scalar, token):
        return self.algebra.basis(str(token)).scale(self.algebra.field.parse(str(scalar)))

    def neg(self, value):
        return -value

    def add(self, left, right):
        return left + right

    def sub(self, left, right):
        return left - right


@v_args(inline=True)
class _OperatorBuilder(Transformer):
    """Construye OperatorElement sobre un cuerpo"""

    def __init__(self, field: Field):
        super().__init__()
        self.field = field

    def vgen(self, p, q):
        return OperatorElement.generator(_var_index(p), _var_index(q), self.field)

    def word(self, *factors):
        result = factors[0]
        for factor in factors[1:]:
            result = result * factor
        return result

    def scaled(self, scalar, value):
        return value.scale(self.field.parse(str(scalar)))

    def neg(self, value):
        return -value

    def add(self, left, right):
        return left + right

    def sub(self, left, right):
        return left - right


@lru_cache(maxsize=None)
def _parser(grammar: str) -> Lark:
    return Lark(grammar, parser="lalr")


def _run(grammar: str, text: str, builder: Transformer, what: str):
    try:
        tree = _parser(grammar).parse(text)
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ParseError):
            raise e.orig_exc from None
        if isinstance(e.orig_exc, RSymError):
            raise ParseError(f"{what} no válido: {e.orig_exc.message}") from None
        raise ParseError(f"{what} no válido: {e.orig_exc}") from None
    except LarkError as e:
        raise ParseError(f"{what} mal formado: {text!r} ({e.__class__.__name__})") from None


def parse_term(text: str) -> TermCombination:
    """
    Interpretar una combinación lineal de términos

    Args:
        text: Texto en la gramática de términos, p. ej. '(x1 x2) x3 + (x3 x2) x1'

    Returns:
        TermCombination con coeficientes racionales
    """
    result = _run(TERM_GRAMMAR, text, _TermBuilder(), "Término")
    logger.debug(f"Término interpretado: {result}")
    return result


def parse_element(algebra: Algebra, text: str) -> Element:
    """Interpretar un elemento '3/2*a11 - c1' con los nombres de la base"""
    return _run(ELEMENT_GRAMMAR, text, _ElementBuilder(algebra), "Elemento")


def parse_operator(text: str, field: Field = QQ_FIELD) -> OperatorElement:
    """Interpretar un elemento de E0 'V[x1,x2] V[x3,x4] - V[x3,x4] V[x1,x2]'"""
    return _run(OPERATOR_GRAMMAR, text, _OperatorBuilder(field), "Operador")
