#!/usr/bin/env python3
"""
RSym - Cuerpos de escalares exactos
Desarrollado por: Vicente Alonso

Envoltorio sobre los dominios de sympy (QQ y GF(p)). Los escalares de RSym
son directamente elementos de esos dominios: la aritmética es exacta y no
existe modo de coma flotante.
"""

import logging
import re
from functools import lru_cache
from typing import Any, Iterable, Tuple

import numpy as np
from sympy import isprime
from sympy.polys.domains import GF, QQ

from .errors import NonPrimeModulus, ParseError

logger = logging.getLogger(__name__)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Field:
    """
    Cuerpo de escalares: racionales o GF(p)
    """

    def __init__(self, characteristic: int = 0):
        """
        Inicializar el cuerpo

        Args:
            characteristic: 0 para los racionales, p primo para GF(p)
        """
        if characteristic == 0:
            self.domain = QQ
        else:
            if characteristic < 2 or not isprime(characteristic):
                raise NonPrimeModulus(f"El módulo {characteristic} no es primo")
            self.domain = GF(characteristic)
        self.characteristic = characteristic
        self.zero = self.domain.zero
        self.one = self.domain.one

    @property
    def tag(self) -> str:
        """Etiqueta canónica usada en ficheros de especificación"""
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    @property
    def display_name(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("Field", self.characteristic))

    def __repr__(self) -> str:
        return f"Field({self.tag})"

    # =========================================================================
    # CONVERSIONES
    # =========================================================================

    def convert(self, value: Any) -> Any:
        """
        Convertir enteros, racionales de QQ o elementos del propio dominio

        Args:
            value: Valor a convertir

        Returns:
            Elemento del dominio
        """
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.domain.convert(value)
        if isinstance(value, str):
            return self.parse(value)
        if self.characteristic == 0:
            return self.domain.convert(value)
        try:
            return self.domain.convert(value)
        except Exception:
            # racional de QQ hacia GF(p)
            numerator, denominator = int(value.numerator), int(value.denominator)
            return self.fraction(numerator, denominator)

    def fraction(self, numerator: int, denominator: int = 1) -> Any:
        """Construir numerator/denominator en el cuerpo"""
        den = self.domain.convert(denominator)
        if not den:
            raise ParseError(
                f"El denominador {denominator} se anula en {self.display_name}"
            )
        return self.domain.convert(numerator) / den

    def parse(self, text: str) -> Any:
        """
        Interpretar un literal racional '3', '-2', '3/2'

        Args:
            text: Literal a interpretar

        Returns:
            Elemento del dominio
        """
        match = _RATIONAL_RE.match(text)
        if not match:
            raise ParseError(f"Escalar no válido: {text!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ParseError(f"Denominador nulo en {text!r}")
        return self.fraction(numerator, denominator)

    def format(self, value: Any) -> str:
        """Texto canónico de un escalar (residuos simétricos en GF(p))"""
        if self.characteristic == 0:
            return str(value)
        return str(self.domain.to_int(value))

    def is_one(self, value: Any) -> bool:
        return value == self.one

    def is_minus_one(self, value: Any) -> bool:
        return value == -self.one

    def random_element(self, rng: np.random.Generator, bound: int = 2) -> Any:
        """Escalar aleatorio con numerador en [-bound, bound]"""
        return self.domain.convert(int(rng.integers(-bound, bound + 1)))

    def elements(self, bound: int = 1) -> Tuple[Any, ...]:
        """Escalares no nulos pequeños (todos si el cuerpo es finito y pequeño)"""
        if self.characteristic and self.characteristic <= 2 * bound + 1:
            return tuple(self.domain.convert(k) for k in range(1, self.characteristic))
        values = []
        for k in range(1, bound + 1):
            values.extend([self.domain.convert(k), self.domain.convert(-k)])
        return tuple(values)


@lru_cache(maxsize=None)
def _field_for(characteristic: int) -> Field:
    return Field(characteristic)


def parse_field(tag: Any) -> Field:
    """
    Interpretar una etiqueta de cuerpo: 'Q', 'F2', 'F3', 'Fp:<p>', 'GF(p)'

    Args:
        tag: Etiqueta (o un Field ya construido)

    Returns:
        Field correspondiente
    """
    if isinstance(tag, Field):
        return tag
    text = str(tag).strip()
    if text.upper() in ("Q", "QQ"):
        return _field_for(0)
    match = (
        re.fullmatch(r"[Ff]p:(\d+)", text)
        or re.fullmatch(r"[Ff](\d+)", text)
        or re.fullmatch(r"GF\((\d+)\)", text)
    )
    if not match:
        raise ParseError(f"Etiqueta de cuerpo no reconocida: {text!r}")
    return _field_for(int(match.group(1)))


def parse_field_list(tags: Iterable[str]) -> Tuple[Field, ...]:
    """Interpretar una lista de etiquetas separadas por comas"""
    fields = []
    for tag in tags:
        for piece in str(tag).split(","):
            if piece.strip():
                fields.append(parse_field(piece))
    return tuple(fields)


QQ_FIELD = _field_for(0)


def format_linear_combination(field: Field, items: Iterable[Tuple[Any, str]]) -> str:
    """
    Texto 'c1*w1 + c2*w2 - w3' de una combinación lineal

    Args:
        field: Cuerpo de los coeficientes
        items: Pares (coeficiente, texto del vector) en el orden de salida

    Returns:
        Texto canónico ('0' si no hay términos)
    """
    out = []
    for coeff, body in items:
        text = field.format(coeff)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text
        piece = body if magnitude == "1" else f"{magnitude}*{body}"
        if not out:
            out.append(f"-{piece}" if negative else piece)
        else:
            out.append(f" - {piece}" if negative else f" + {piece}")
    return "".join(out) if out else "0"
