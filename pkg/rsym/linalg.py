#!/usr/bin/env python3
"""
RSym - Álgebra lineal exacta y dispersa
Desarrollado por: Vicente Alonso

Vectores dispersos como diccionarios índice -> escalar. Las operaciones en
bloque (forma escalonada reducida, rango, núcleo, resolución en un span) se
delegan en DomainMatrix de sympy; las clausuras usan una base escalonada
incremental.
"""

import bisect
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

SparseVector = Dict[int, Any]


def to_domain_matrix(rows: Sequence[SparseVector], ncols: int, domain) -> DomainMatrix:
    data = {i: dict(row) for i, row in enumerate(rows) if row}
    return DomainMatrix(data, (len(rows), ncols), domain)


def rows_of(matrix: DomainMatrix) -> List[SparseVector]:
    nrows = matrix.shape[0]
    grouped: List[SparseVector] = [dict() for _ in range(nrows)]
    for (i, j), value in matrix.to_dok().items():
        if value:
            grouped[i][j] = value
    return grouped


def add_scaled(target: SparseVector, source: SparseVector, factor: Any) -> None:
    """target += factor * source, sin dejar ceros almacenados"""
    for index, value in source.items():
        new = target[index] + factor * value if index in target else factor * value
        if new:
            target[index] = new
        else:
            target.pop(index, None)


def rref(rows: Sequence[SparseVector], ncols: int, domain) -> Tuple[List[SparseVector], Tuple[int, ...]]:
    """
    Forma escalonada reducida de un conjunto de filas

    Args:
        rows: Filas dispersas
        ncols: Número de columnas
        domain: Dominio de sympy

    Returns:
        (filas no nulas en forma escalonada reducida, pivotes)
    """
    nonzero = [row for row in rows if row]
    if not nonzero or ncols == 0:
        return [], ()
    reduced, pivots = to_domain_matrix(nonzero, ncols, domain).rref()
    result = [row for row in rows_of(reduced) if row]
    return result, tuple(pivots)


def rank(rows: Sequence[SparseVector], ncols: int, domain) -> int:
    nonzero = [row for row in rows if row]
    if not nonzero or ncols == 0:
        return 0
    return to_domain_matrix(nonzero, ncols, domain).rank()


def left_kernel(rows: Sequence[SparseVector], ncols: int, domain) -> List[SparseVector]:
    """
    Base de {x : x·M = 0} para la matriz M cuyas filas se dan

    Args:
        rows: Filas de M (una por coordenada de x)
        ncols: Columnas de M
        domain: Dominio

    Returns:
        Vectores x en forma escalonada reducida
    """
    nrows = len(rows)
    if nrows == 0:
        return []
    transposed: Dict[int, SparseVector] = {}
    for i, row in enumerate(rows):
        for j, value in row.items():
            transposed.setdefault(j, {})[i] = value
    if not transposed:
        return [{i: domain.one} for i in range(nrows)]
    matrix = DomainMatrix(transposed, (ncols, nrows), domain)
    kernel = matrix.nullspace()
    basis = [row for row in rows_of(kernel) if row]
    reduced, _ = rref(basis, nrows, domain)
    return reduced


def solve_in_span(
    target: SparseVector,
    vectors: Sequence[SparseVector],
    ncols: int,
    domain,
) -> Optional[List[Any]]:
    """
    Coeficientes λ con Σ λ_k v_k = target, o None si target no está en el span

    Args:
        target: Vector objetivo
        vectors: Generadores del span
        ncols: Longitud de los vectores
        domain: Dominio

    Returns:
        Lista de coeficientes o None
    """
    nvec = len(vectors)
    if not target:
        return [domain.zero] * nvec
    if nvec == 0:
        return None
    columns: Dict[int, SparseVector] = {}
    for k, vec in enumerate(vectors):
        for i, value in vec.items():
            columns.setdefault(i, {})[k] = value
    for i, value in target.items():
        columns.setdefault(i, {})[nvec] = value
    matrix = DomainMatrix(columns, (ncols, nvec + 1), domain)
    reduced, pivots = matrix.rref()
    if nvec in pivots:
        return None
    dok = reduced.to_dok()
    coefficients = [domain.zero] * nvec
    for row, col in enumerate(pivots):
        coefficients[col] = dok.get((row, nvec), domain.zero)
    return coefficients


class EchelonBasis:
    """
    Base escalonada incremental para iteraciones de clausura
    """

    def __init__(self, domain):
        self.domain = domain
        self._rows: Dict[int, SparseVector] = {}
        self._pivots: List[int] = []

    def __len__(self) -> int:
        return len(self._pivots)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Resto de vector módulo el span actual"""
        remainder = {k: v for k, v in vector.items() if v}
        if not remainder:
            return remainder
        for pivot in self._pivots:
            value = remainder.get(pivot)
            if value:
                add_scaled(remainder, self._rows[pivot], -value)
        return remainder

    def add(self, vector: SparseVector) -> bool:
        """
        Añadir un vector si es nuevo

        Returns:
            True si el span ha crecido
        """
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = min(remainder)
        inverse = self.domain.one / remainder[pivot]
        row = {k: v * inverse for k, v in remainder.items()}
        self._rows[pivot] = row
        bisect.insort(self._pivots, pivot)
        return True

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    def vectors(self) -> List[SparseVector]:
        return [dict(self._rows[p]) for p in self._pivots]
