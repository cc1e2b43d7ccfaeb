#!/usr/bin/env python3
"""
RSym - Álgebras dadas por constantes de estructura
Desarrollado por: Vicente Alonso

Núcleo de la librería:
- Algebra: base con nombres y constantes de estructura dispersas
- Element: vector de coeficientes disperso sobre la base
- LinOp: operador lineal (convenio de filas, u·(XY) = (uX)Y)
- Subspace: subespacio en forma escalonada reducida
- Clausuras (subálgebra, ideal), cocientes y productos tensoriales
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ValidationError
from sympy.polys.matrices import DomainMatrix

from .errors import (
    ClosureDiverged,
    DuplicateBasisName,
    FieldMismatch,
    IndexOutOfRange,
    LeftFactorNotCommutativeAssociative,
    MixedAlgebras,
    NotAnIdeal,
    NotASubalgebra,
    ParseError,
)
from .fields import Field, QQ_FIELD, format_linear_combination, parse_field
from .linalg import EchelonBasis, SparseVector, add_scaled, left_kernel, rows_of, rref

logger = logging.getLogger(__name__)

ProductTable = Dict[Tuple[int, int], Dict[int, Any]]
BasisKey = Union[int, str]


class Algebra:
    """
    Álgebra de dimensión finita con constantes de estructura dispersas
    """

    def __init__(
        self,
        field: Field,
        basis_names: Sequence[str],
        products: Optional[Mapping[Tuple[int, int], Any]] = None,
        name: str = "",
    ):
        """
        Inicializar y validar el álgebra

        Args:
            field: Cuerpo de escalares
            basis_names: Nombres de la base (distintos dos a dos)
            products: (i, j) -> {k: c} o lista de pares (k, c) con e_i e_j = Σ c e_k
            name: Nombre descriptivo
        """
        names = [str(n) for n in basis_names]
        seen = set()
        for basis_name in names:
            if basis_name in seen:
                raise DuplicateBasisName(f"Nombre de base repetido: {basis_name}")
            seen.add(basis_name)

        self.field = field
        self.basis_names: Tuple[str, ...] = tuple(names)
        self.dim = len(names)
        self.name = name
        self._index = {basis_name: i for i, basis_name in enumerate(names)}

        self.sc: ProductTable = {}
        for (i, j), result in (products or {}).items():
            for idx in (i, j):
                if not 0 <= idx < self.dim:
                    raise IndexOutOfRange(f"Índice {idx} fuera de rango (dim {self.dim})")
            pairs = result.items() if isinstance(result, Mapping) else result
            entry: Dict[int, Any] = {}
            for k, coeff in pairs:
                if not 0 <= k < self.dim:
                    raise IndexOutOfRange(f"Índice {k} fuera de rango (dim {self.dim})")
                value = entry.get(k, field.zero) + field.convert(coeff)
                if value:
                    entry[k] = value
                else:
                    entry.pop(k, None)
            if entry:
                self.sc[(i, j)] = entry

        self._right_cache: Dict[int, "LinOp"] = {}
        self._left_cache: Dict[int, "LinOp"] = {}
        logger.debug(f"Álgebra {name or '?'} creada: dim={self.dim}, productos={len(self.sc)}")

    def __repr__(self) -> str:
        label = self.name or "Algebra"
        return f"<{label} dim={self.dim} over {self.field.display_name}>"

    # =========================================================================
    # ELEMENTOS
    # =========================================================================

    def index(self, basis_name: str) -> int:
        try:
            return self._index[basis_name]
        except KeyError:
            raise ParseError(f"Elemento de base desconocido: {basis_name!r}") from None

    def basis(self, key: Union[int, str]) -> "Element":
        """Elemento de base por índice o nombre"""
        index = self.index(key) if isinstance(key, str) else key
        if not 0 <= index < self.dim:
            raise IndexOutOfRange(f"Índice {index} fuera de rango (dim {self.dim})")
        return Element(self, {index: self.field.one})

    def basis_elements(self) -> List["Element"]:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, {})

    def element(self, coeffs: Mapping[Union[int, str], Any]) -> "Element":
        """Elemento a partir de coeficientes por índice o nombre"""
        vector: SparseVector = {}
        for key, coeff in coeffs.items():
            index = self.index(key) if isinstance(key, str) else key
            value = vector.get(index, self.field.zero) + self.field.convert(coeff)
            vector[index] = value
        return Element(self, vector)

    # =========================================================================
    # PRODUCTO
    # =========================================================================

    def product_coeffs(self, u: Mapping[int, Any], v: Mapping[int, Any]) -> Dict[int, Any]:
        """
        Producto bilineal de vectores de coeficientes

        Los coeficientes pueden ser escalares o polinomios sobre el mismo
        dominio; se recorre el lado más barato (pares de soportes o tabla).
        """
        result: Dict[int, Any] = {}
        if not u or not v:
            return result
        if len(u) * len(v) <= len(self.sc):
            for i, a in u.items():
                for j, b in v.items():
                    entry = self.sc.get((i, j))
                    if entry is None:
                        continue
                    ab = a * b
                    for k, c in entry.items():
                        result[k] = result[k] + ab * c if k in result else ab * c
        else:
            for (i, j), entry in self.sc.items():
                if i in u and j in v:
                    ab = u[i] * v[j]
                    for k, c in entry.items():
                        result[k] = result[k] + ab * c if k in result else ab * c
        return {k: c for k, c in result.items() if c}

    def basis_product(self, i: int, j: int) -> Dict[int, Any]:
        return dict(self.sc.get((i, j), {}))

    def is_zero_algebra(self) -> bool:
        return not self.sc


class Element:
    """
    Vector de coeficientes disperso sobre la base de un álgebra
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Optional[Mapping[int, Any]] = None):
        self.algebra = algebra
        self.coeffs: SparseVector = {}
        for index, coeff in (coeffs or {}).items():
            if not 0 <= index < algebra.dim:
                raise IndexOutOfRange(f"Índice {index} fuera de rango (dim {algebra.dim})")
            if coeff:
                self.coeffs[index] = coeff

    def _same(self, other: "Element") -> None:
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise MixedAlgebras("Los operandos pertenecen a álgebras distintas")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        result = dict(self.coeffs)
        add_scaled(result, other.coeffs, self.algebra.field.one)
        return Element(self.algebra, result)

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        result = dict(self.coeffs)
        add_scaled(result, other.coeffs, -self.algebra.field.one)
        return Element(self.algebra, result)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def scale(self, factor: Any) -> "Element":
        factor = self.algebra.field.convert(factor)
        return Element(self.algebra, {i: c * factor for i, c in self.coeffs.items()})

    def __mul__(self, other: Any) -> "Element":
        if isinstance(other, Element):
            return mul(self.algebra, self, other)
        return self.scale(other)

    def __rmul__(self, factor: Any) -> "Element":
        return self.scale(factor)

    def __matmul__(self, op: "LinOp") -> "Element":
        return op.apply(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return other.algebra is self.algebra and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((id(self.algebra), frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, key: Union[int, str]) -> Any:
        index = self.algebra.index(key) if isinstance(key, str) else key
        return self.coeffs.get(index, self.algebra.field.zero)

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.coeffs))

    def __str__(self) -> str:
        names = self.algebra.basis_names
        return format_linear_combination(
            self.algebra.field,
            [(self.coeffs[i], names[i]) for i in sorted(self.coeffs)],
        )

    def __repr__(self) -> str:
        return f"Element({self})"


class LinOp:
    """
    Operador lineal sobre un álgebra, con la fila i imagen de e_i
    """

    def __init__(self, algebra: Algebra, rows: Optional[Mapping[int, SparseVector]] = None):
        self.algebra = algebra
        self.rows: Dict[int, SparseVector] = {
            i: dict(row) for i, row in (rows or {}).items() if row
        }

    @classmethod
    def from_matrix(cls, algebra: Algebra, matrix: DomainMatrix) -> "LinOp":
        return cls(algebra, {i: row for i, row in enumerate(rows_of(matrix)) if row})

    @classmethod
    def identity(cls, algebra: Algebra) -> "LinOp":
        return cls(algebra, {i: {i: algebra.field.one} for i in range(algebra.dim)})

    @property
    def matrix(self) -> DomainMatrix:
        dim = self.algebra.dim
        return DomainMatrix(self.rows, (dim, dim), self.algebra.field.domain)

    def _same(self, other: "LinOp") -> None:
        if other.algebra is not self.algebra:
            raise MixedAlgebras("Operadores sobre álgebras distintas")

    def apply(self, u: Element) -> Element:
        """u·Op"""
        if u.algebra is not self.algebra:
            raise MixedAlgebras("El elemento no pertenece al álgebra del operador")
        return Element(self.algebra, self.apply_coeffs(u.coeffs))

    def apply_coeffs(self, coeffs: Mapping[int, Any]) -> SparseVector:
        result: SparseVector = {}
        for i, a in coeffs.items():
            row = self.rows.get(i)
            if row:
                add_scaled(result, row, a)
        return result

    def __matmul__(self, other: "LinOp") -> "LinOp":
        """Composición en orden de palabra: u·(self @ other) = (u·self)·other"""
        self._same(other)
        if not self.rows or not other.rows:
            return LinOp(self.algebra)
        return LinOp.from_matrix(self.algebra, self.matrix * other.matrix)

    def __add__(self, other: "LinOp") -> "LinOp":
        self._same(other)
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, row in other.rows.items():
            target = rows.setdefault(i, {})
            add_scaled(target, row, self.algebra.field.one)
        return LinOp(self.algebra, rows)

    def __neg__(self) -> "LinOp":
        return self.scale(-self.algebra.field.one)

    def __sub__(self, other: "LinOp") -> "LinOp":
        return self + (-other)

    def scale(self, factor: Any) -> "LinOp":
        factor = self.algebra.field.convert(factor)
        return LinOp(self.algebra, {
            i: {k: v * factor for k, v in row.items()} for i, row in self.rows.items()
        })

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinOp):
            return NotImplemented
        return other.algebra is self.algebra and other.rows == self.rows

    def __hash__(self) -> int:
        return hash((id(self.algebra), frozenset((i, frozenset(r.items())) for i, r in self.rows.items())))

    def is_zero(self) -> bool:
        return not self.rows

    def flatten(self) -> SparseVector:
        """Vector de longitud dim² (fila mayor) para cálculos de span"""
        dim = self.algebra.dim
        return {i * dim + k: v for i, row in self.rows.items() for k, v in row.items()}

    @classmethod
    def unflatten(cls, algebra: Algebra, vector: Mapping[int, Any]) -> "LinOp":
        rows: Dict[int, SparseVector] = {}
        for index, value in vector.items():
            i, k = divmod(index, algebra.dim)
            rows.setdefault(i, {})[k] = value
        return cls(algebra, rows)

    def restrict(self, subspace: "Subspace") -> DomainMatrix:
        """
        Matriz de la restricción a un subespacio invariante, en su base escalonada

        Raises:
            NotASubalgebra: si el subespacio no es invariante
        """
        size = subspace.dim
        data: Dict[int, SparseVector] = {}
        for r, vector in enumerate(subspace.vectors):
            image = self.apply_coeffs(vector)
            coords = subspace.coordinates(image)
            if coords is None:
                raise NotASubalgebra("El subespacio no es invariante por el operador")
            if coords:
                data[r] = coords
        return DomainMatrix(data, (size, size), self.algebra.field.domain)

    def __str__(self) -> str:
        names = self.algebra.basis_names
        lines = []
        for i in sorted(self.rows):
            image = Element(self.algebra, self.rows[i])
            lines.append(f"{names[i]} -> {image}")
        return "; ".join(lines) if lines else "0"


class Subspace:
    """
    Subespacio con base en forma escalonada reducida
    """

    def __init__(self, algebra: Algebra, vectors: Iterable[Mapping[int, Any]] = ()):
        self.algebra = algebra
        rows = [dict(v) for v in vectors if v]
        reduced, pivots = rref(rows, algebra.dim, algebra.field.domain)
        self.vectors: List[SparseVector] = reduced
        self.pivots: Tuple[int, ...] = pivots

    @classmethod
    def span(cls, algebra: Algebra, elements: Iterable[Element]) -> "Subspace":
        vectors = []
        for element in elements:
            if element.algebra is not algebra:
                raise MixedAlgebras("Generadores de álgebras distintas")
            vectors.append(element.coeffs)
        return cls(algebra, vectors)

    @classmethod
    def of_basis(cls, algebra: Algebra, names: Iterable[Union[int, str]]) -> "Subspace":
        return cls.span(algebra, [algebra.basis(n) for n in names])

    @classmethod
    def whole(cls, algebra: Algebra) -> "Subspace":
        return cls.of_basis(algebra, range(algebra.dim))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def basis(self) -> List[Element]:
        return [Element(self.algebra, v) for v in self.vectors]

    def reduce(self, coeffs: Mapping[int, Any]) -> SparseVector:
        """Resto de un vector módulo el subespacio (nulo en los pivotes)"""
        remainder = {k: v for k, v in coeffs.items() if v}
        for pivot, row in zip(self.pivots, self.vectors):
            value = remainder.get(pivot)
            if value:
                add_scaled(remainder, row, -value)
        return remainder

    def coordinates(self, coeffs: Mapping[int, Any]) -> Optional[SparseVector]:
        """Coordenadas en la base escalonada, o None si no pertenece"""
        coords = {r: coeffs[p] for r, p in enumerate(self.pivots) if coeffs.get(p)}
        rebuilt: SparseVector = {}
        for r, value in coords.items():
            add_scaled(rebuilt, self.vectors[r], value)
        cleaned = {k: v for k, v in coeffs.items() if v}
        return coords if rebuilt == cleaned else None

    def contains(self, u: Union[Element, Mapping[int, Any]]) -> bool:
        coeffs = u.coeffs if isinstance(u, Element) else u
        return not self.reduce(coeffs)

    def __contains__(self, u: Element) -> bool:
        return self.contains(u)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            other.algebra is self.algebra
            and other.pivots == self.pivots
            and other.vectors == self.vectors
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.pivots))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.algebra is not self.algebra:
            raise MixedAlgebras("Subespacios de álgebras distintas")
        return Subspace(self.algebra, self.vectors + other.vectors)

    def is_zero(self) -> bool:
        return not self.vectors

    def __str__(self) -> str:
        if not self.vectors:
            return "span{}"
        return "span{" + ", ".join(str(e) for e in self.basis) + "}"

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, {self})"


# =============================================================================
# CONSTRUCCIÓN Y E/S
# =============================================================================

class AlgebraSpec(BaseModel):
    """
    Descripción serializable de un álgebra

    products: entradas [izquierda, derecha, [[coeficiente, resultado], ...]]
    con elementos de base por nombre o por índice
    """
    field: str = "Q"
    basis: List[str] = []
    products: List[Tuple[BasisKey, BasisKey, List[Tuple[Union[int, str], BasisKey]]]] = []
    name: str = ""


def make_algebra(spec: Union[Mapping[str, Any], str, Path], name: str = "") -> Algebra:
    """
    Construir un álgebra a partir de su descripción

    Args:
        spec: Diccionario {field, basis, products}, texto JSON o ruta a un fichero
        name: Nombre descriptivo

    Returns:
        Algebra validada
    """
    if isinstance(spec, Path) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        path = Path(spec)
        name = name or path.stem
        spec = path.read_text(encoding="utf-8")
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as e:
            raise ParseError(f"Especificación JSON no válida: {e}") from e
    try:
        parsed = AlgebraSpec.model_validate(spec)
    except ValidationError as e:
        raise ParseError(f"Especificación mal formada: {e.errors()[0]['msg']}") from e

    field = parse_field(parsed.field)
    basis = parsed.basis
    index = {}
    for position, basis_name in enumerate(basis):
        if basis_name in index:
            raise DuplicateBasisName(f"Nombre de base repetido: {basis_name}")
        index[basis_name] = position

    def resolve(key: Any) -> int:
        if isinstance(key, int):
            return key
        if key not in index:
            raise IndexOutOfRange(f"Elemento de base desconocido: {key!r}")
        return index[key]

    products: Dict[Tuple[int, int], List[Tuple[int, Any]]] = {}
    for left, right, terms in parsed.products:
        target = products.setdefault((resolve(left), resolve(right)), [])
        for coeff, result in terms:
            scalar = field.parse(coeff) if isinstance(coeff, str) else field.convert(coeff)
            target.append((resolve(result), scalar))

    return Algebra(field, basis, products, name=name or parsed.name)


def dump_algebra(algebra: Algebra) -> Dict[str, Any]:
    """Descripción {field, basis, products} serializable a JSON"""
    names = algebra.basis_names
    products = []
    for (i, j) in sorted(algebra.sc):
        entry = algebra.sc[(i, j)]
        products.append([
            names[i],
            names[j],
            [[algebra.field.format(entry[k]), names[k]] for k in sorted(entry)],
        ])
    spec: Dict[str, Any] = {"field": algebra.field.tag, "basis": list(names), "products": products}
    if algebra.name:
        spec["name"] = algebra.name
    return spec


def save_algebra(algebra: Algebra, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(dump_algebra(algebra), indent=2) + "\n", encoding="utf-8")
    logger.info(f"Especificación guardada en {path}")
    return path


def with_field(algebra: Algebra, field: Field) -> Algebra:
    """Reinterpretar las constantes de estructura en otro cuerpo"""
    spec = dump_algebra(algebra)
    spec["field"] = field.tag
    return make_algebra(spec, name=algebra.name)


# =============================================================================
# PRODUCTOS Y OPERADORES
# =============================================================================

def _check(algebra: Algebra, *elements: Element) -> None:
    for element in elements:
        if not isinstance(element, Element) or element.algebra is not algebra:
            raise MixedAlgebras("El operando no pertenece al álgebra")


def mul(algebra: Algebra, u: Element, v: Element) -> Element:
    _check(algebra, u, v)
    return Element(algebra, algebra.product_coeffs(u.coeffs, v.coeffs))


def right_mul(algebra: Algebra, x: Element) -> LinOp:
    """R_x: u -> ux"""
    _check(algebra, x)
    if len(x.coeffs) == 1:
        (index, coeff), = x.coeffs.items()
        if index not in algebra._right_cache:
            algebra._right_cache[index] = LinOp(algebra, {
                i: algebra.product_coeffs({i: algebra.field.one}, {index: algebra.field.one})
                for i in range(algebra.dim)
            })
        return algebra._right_cache[index].scale(coeff)
    return LinOp(algebra, {
        i: algebra.product_coeffs({i: algebra.field.one}, x.coeffs) for i in range(algebra.dim)
    })


def left_mul(algebra: Algebra, x: Element) -> LinOp:
    """L_x: u -> xu"""
    _check(algebra, x)
    if len(x.coeffs) == 1:
        (index, coeff), = x.coeffs.items()
        if index not in algebra._left_cache:
            algebra._left_cache[index] = LinOp(algebra, {
                i: algebra.product_coeffs({index: algebra.field.one}, {i: algebra.field.one})
                for i in range(algebra.dim)
            })
        return algebra._left_cache[index].scale(coeff)
    return LinOp(algebra, {
        i: algebra.product_coeffs(x.coeffs, {i: algebra.field.one}) for i in range(algebra.dim)
    })


def v_op(algebra: Algebra, x: Element, y: Element) -> LinOp:
    """V_{x,y} = L_x R_y: u -> (xu)y"""
    return left_mul(algebra, x) @ right_mul(algebra, y)


def commutator(algebra: Algebra, u: Element, v: Element) -> Element:
    return mul(algebra, u, v) - mul(algebra, v, u)


def associator(algebra: Algebra, u: Element, v: Element, w: Element) -> Element:
    return mul(algebra, mul(algebra, u, v), w) - mul(algebra, u, mul(algebra, v, w))


def product_span(algebra: Algebra, left: Subspace, right: Subspace) -> Subspace:
    """span{st : s en left, t en right}"""
    vectors = [
        algebra.product_coeffs(s, t) for s in left.vectors for t in right.vectors
    ]
    return Subspace(algebra, vectors)


def left_annihilator(algebra: Algebra) -> Subspace:
    """{x : xA = 0}"""
    dim = algebra.dim
    rows: List[SparseVector] = [dict() for _ in range(dim)]
    for (i, j), entry in algebra.sc.items():
        for k, c in entry.items():
            rows[i][j * dim + k] = c
    kernel = left_kernel(rows, dim * dim, algebra.field.domain)
    return Subspace(algebra, kernel)


def right_annihilator(algebra: Algebra) -> Subspace:
    """{x : Ax = 0}"""
    dim = algebra.dim
    rows: List[SparseVector] = [dict() for _ in range(dim)]
    for (i, j), entry in algebra.sc.items():
        for k, c in entry.items():
            rows[j][i * dim + k] = c
    kernel = left_kernel(rows, dim * dim, algebra.field.domain)
    return Subspace(algebra, kernel)


# =============================================================================
# CLAUSURAS
# =============================================================================

def _close(
    algebra: Algebra,
    generators: Iterable[Mapping[int, Any]],
    two_sided_ideal: bool,
    max_rounds: Optional[int],
) -> Subspace:
    basis = EchelonBasis(algebra.field.domain)
    accepted: List[SparseVector] = []
    frontier: List[SparseVector] = []
    for vector in generators:
        if basis.add(vector):
            frontier.append(dict(vector))

    limit = max_rounds if max_rounds is not None else algebra.dim + 1
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > limit:
            raise ClosureDiverged(
                f"La clausura no se estabilizó en {limit} rondas (dim actual {basis.dim})"
            )
        fresh: List[SparseVector] = []
        if two_sided_ideal:
            others = [{j: algebra.field.one} for j in range(algebra.dim)]
            for vector in frontier:
                for other in others:
                    for product in (algebra.product_coeffs(vector, other),
                                    algebra.product_coeffs(other, vector)):
                        if basis.add(product):
                            fresh.append(product)
        else:
            accepted.extend(frontier)
            for vector in frontier:
                for other in accepted:
                    for product in (algebra.product_coeffs(vector, other),
                                    algebra.product_coeffs(other, vector)):
                        if basis.add(product):
                            fresh.append(product)
        logger.debug(f"Clausura ronda {rounds}: dim={basis.dim}, nuevos={len(fresh)}")
        frontier = fresh

    return Subspace(algebra, basis.vectors())


def subalgebra(algebra: Algebra, gens: Iterable[Element], max_rounds: Optional[int] = None) -> Subspace:
    """Subálgebra generada por gens"""
    gens = list(gens)
    _check(algebra, *gens)
    result = _close(algebra, [g.coeffs for g in gens], False, max_rounds)
    logger.info(f"Subálgebra generada por {len(gens)} elementos: dim={result.dim}")
    return result


def ideal(algebra: Algebra, gens: Iterable[Element], max_rounds: Optional[int] = None) -> Subspace:
    """Ideal bilátero generado por gens"""
    gens = list(gens)
    _check(algebra, *gens)
    result = _close(algebra, [g.coeffs for g in gens], True, max_rounds)
    logger.info(f"Ideal generado por {len(gens)} elementos: dim={result.dim}")
    return result


def is_closed(algebra: Algebra, subspace: Subspace) -> bool:
    return all(
        subspace.contains(algebra.product_coeffs(u, v))
        for u in subspace.vectors for v in subspace.vectors
    )


def is_ideal(algebra: Algebra, subspace: Subspace) -> bool:
    for vector in subspace.vectors:
        for j in range(algebra.dim):
            unit = {j: algebra.field.one}
            if not subspace.contains(algebra.product_coeffs(vector, unit)):
                return False
            if not subspace.contains(algebra.product_coeffs(unit, vector)):
                return False
    return True


# =============================================================================
# SUBÁLGEBRAS, COCIENTES Y TENSORES
# =============================================================================

class SubalgebraMap:
    """Inclusión de una subálgebra realizada como álgebra propia"""

    def __init__(self, source: Algebra, target: Algebra, subspace: Subspace):
        self.source = source
        self.target = target
        self.subspace = subspace

    def embed(self, u: Element) -> Element:
        """Imagen en el álgebra ambiente"""
        coeffs: SparseVector = {}
        for r, value in u.coeffs.items():
            add_scaled(coeffs, self.subspace.vectors[r], value)
        return Element(self.target, coeffs)

    def pull(self, u: Element) -> Element:
        """Coordenadas en la subálgebra de un elemento del ambiente"""
        coords = self.subspace.coordinates(u.coeffs)
        if coords is None:
            raise NotASubalgebra(f"{u} no pertenece a la subálgebra")
        return Element(self.source, coords)

    def pull_subspace(self, subspace: Subspace) -> Subspace:
        return Subspace.span(self.source, [self.pull(u) for u in subspace.basis])


def restrict(algebra: Algebra, subspace: Subspace, name: str = "") -> Tuple[Algebra, SubalgebraMap]:
    """
    Realizar un subespacio cerrado como álgebra sobre su base escalonada

    Returns:
        (álgebra, inclusión)
    """
    names = []
    for vector in subspace.vectors:
        element = Element(algebra, vector)
        if len(vector) == 1 and algebra.field.is_one(next(iter(vector.values()))):
            names.append(str(element))
        else:
            names.append(f"u{len(names) + 1}")
    if len(set(names)) != len(names):
        names = [f"u{r + 1}" for r in range(subspace.dim)]

    products: Dict[Tuple[int, int], Dict[int, Any]] = {}
    for r, u in enumerate(subspace.vectors):
        for s, v in enumerate(subspace.vectors):
            product = algebra.product_coeffs(u, v)
            if not product:
                continue
            coords = subspace.coordinates(product)
            if coords is None:
                raise NotASubalgebra("El subespacio no es cerrado para el producto")
            products[(r, s)] = coords
    sub = Algebra(algebra.field, names, products, name=name)
    return sub, SubalgebraMap(sub, algebra, subspace)


class QuotientMap:
    """Proyección A -> A/I sobre el complemento de los pivotes de I"""

    def __init__(self, source: Algebra, target: Algebra, kernel: Subspace, kept: Sequence[int]):
        self.source = source
        self.target = target
        self.kernel = kernel
        self.kept = tuple(kept)
        self._position = {index: r for r, index in enumerate(self.kept)}

    def project_coeffs(self, coeffs: Mapping[int, Any]) -> SparseVector:
        remainder = self.kernel.reduce(coeffs)
        return {self._position[i]: v for i, v in remainder.items()}

    def project(self, u: Element) -> Element:
        if u.algebra is not self.source:
            raise MixedAlgebras("El elemento no pertenece al álgebra de partida")
        return Element(self.target, self.project_coeffs(u.coeffs))

    def __call__(self, u: Element) -> Element:
        return self.project(u)

    def lift(self, u: Element) -> Element:
        """Sección lineal canónica"""
        return Element(self.source, {self.kept[r]: v for r, v in u.coeffs.items()})


def quotient(algebra: Algebra, ideal_space: Subspace, name: str = "") -> Tuple[Algebra, QuotientMap]:
    """
    Álgebra cociente A/I

    Raises:
        NotAnIdeal: si I no es un ideal bilátero
    """
    if ideal_space.algebra is not algebra:
        raise MixedAlgebras("El subespacio no pertenece al álgebra")
    if not is_ideal(algebra, ideal_space):
        raise NotAnIdeal("El subespacio no es un ideal bilátero")

    pivots = set(ideal_space.pivots)
    kept = [i for i in range(algebra.dim) if i not in pivots]
    position = {index: r for r, index in enumerate(kept)}
    products: Dict[Tuple[int, int], Dict[int, Any]] = {}
    for a in kept:
        for b in kept:
            entry = algebra.sc.get((a, b))
            if not entry:
                continue
            remainder = ideal_space.reduce(entry)
            if remainder:
                products[(position[a], position[b])] = {position[k]: v for k, v in remainder.items()}
    target = Algebra(algebra.field, [algebra.basis_names[i] for i in kept], products, name=name)
    logger.info(f"Cociente: dim {algebra.dim} -> {target.dim}")
    return target, QuotientMap(algebra, target, ideal_space, kept)


def is_commutative_associative(algebra: Algebra) -> bool:
    one = algebra.field.one
    units = [{i: one} for i in range(algebra.dim)]
    for (i, j), entry in algebra.sc.items():
        if algebra.sc.get((j, i)) != entry:
            return False
    for (i, j) in list(algebra.sc):
        for k in range(algebra.dim):
            left = algebra.product_coeffs(algebra.sc[(i, j)], units[k])
            right = algebra.product_coeffs(units[i], algebra.product_coeffs(units[j], units[k]))
            if left != right:
                return False
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            if (i, j) in algebra.sc:
                continue
            for k in range(algebra.dim):
                if algebra.product_coeffs(units[i], algebra.product_coeffs(units[j], units[k])):
                    return False
    return True


def tensor(left: Algebra, right: Algebra, name: str = "") -> Algebra:
    """
    Producto tensorial C ⊗ A con (c⊗a)(c'⊗a') = cc'⊗aa'

    La base es c-mayor y se nombra '{c}_{a}'.
    """
    if left.field != right.field:
        raise FieldMismatch("Los factores están definidos sobre cuerpos distintos")
    if not is_commutative_associative(left):
        raise LeftFactorNotCommutativeAssociative(
            f"{left.name or 'El factor izquierdo'} no es conmutativo y asociativo"
        )
    width = right.dim
    names = [f"{c}_{a}" for c in left.basis_names for a in right.basis_names]
    products: Dict[Tuple[int, int], Dict[int, Any]] = {}
    for (c1, c2), c_entry in left.sc.items():
        for (a1, a2), a_entry in right.sc.items():
            entry: Dict[int, Any] = {}
            for ck, cv in c_entry.items():
                for ak, av in a_entry.items():
                    entry[ck * width + ak] = cv * av
            products[(c1 * width + a1, c2 * width + a2)] = entry
    result = Algebra(left.field, names, products, name=name or f"{left.name}⊗{right.name}")
    logger.info(f"Producto tensorial: dim {left.dim}·{right.dim} = {result.dim}")
    return result


def tensor_element(algebra: Algebra, left: Algebra, right: Algebra, c: Element, a: Element) -> Element:
    """c⊗a como elemento del producto tensorial"""
    width = right.dim
    coeffs: SparseVector = {}
    for ci, cv in c.coeffs.items():
        for ai, av in a.coeffs.items():
            coeffs[ci * width + ai] = cv * av
    return Element(algebra, coeffs)


def field_algebra(field: Field = QQ_FIELD) -> Algebra:
    """El propio cuerpo como álgebra de dimensión 1"""
    return Algebra(field, ["1"], {(0, 0): {0: field.one}}, name="F")
