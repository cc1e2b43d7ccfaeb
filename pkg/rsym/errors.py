#!/usr/bin/env python3
"""
RSym - Excepciones del dominio
Desarrollado por: Vicente Alonso

Jerarquía de errores de la librería. Las funciones de librería lanzan estas
excepciones; solo la CLI las traduce a códigos de salida.
"""

from typing import Any, Optional


class RSymError(Exception):
    """
    Error base de RSym
    """

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class IndexOutOfRange(RSymError):
    """Índice de constante de estructura fuera de rango"""


class NonPrimeModulus(RSymError):
    """Módulo no primo para un cuerpo finito"""


class DuplicateBasisName(RSymError):
    """Nombres de base repetidos"""


class MixedAlgebras(RSymError):
    """Operandos que pertenecen a álgebras distintas"""


class FieldMismatch(RSymError):
    """Coeficientes en un cuerpo incompatible"""


class UnboundVariable(RSymError):
    """Variable sin valor asignado"""


class NotAnIdeal(RSymError):
    """El subespacio no es un ideal bilátero"""


class NotASubalgebra(RSymError):
    """El subespacio no es cerrado para el producto"""


class LeftFactorNotCommutativeAssociative(RSymError):
    """El factor izquierdo del producto tensorial no es conmutativo y asociativo"""


class InvalidN(RSymError):
    """Valor de n no admitido"""


class DegreeCapExceeded(RSymError):
    """Grado por encima del tope configurado"""


class AlgebraNotInVariety(RSymError):
    """El álgebra no satisface las identidades de la variedad"""


class NotAnIdentity(RSymError):
    """El polinomio no es identidad del álgebra"""


class ClosureDiverged(RSymError):
    """La iteración de clausura no se estabilizó"""


class GNotInT(RSymError):
    """El operador no es V-identidad de P_2"""


class SubsetTooLarge(RSymError):
    """Subconjunto de generadores mayor que el permitido"""


class ParseError(RSymError):
    """Texto de entrada mal formado"""


class InvalidNormalWord(RSymError):
    """Palabra que no tiene una de las formas normales admitidas"""


__all__ = [
    'RSymError',
    'IndexOutOfRange',
    'NonPrimeModulus',
    'DuplicateBasisName',
    'MixedAlgebras',
    'FieldMismatch',
    'UnboundVariable',
    'NotAnIdeal',
    'NotASubalgebra',
    'LeftFactorNotCommutativeAssociative',
    'InvalidN',
    'DegreeCapExceeded',
    'AlgebraNotInVariety',
    'NotAnIdentity',
    'ClosureDiverged',
    'GNotInT',
    'SubsetTooLarge',
    'ParseError',
    'InvalidNormalWord',
]
