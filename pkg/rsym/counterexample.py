#!/usr/bin/env python3
"""
RSym - Construcción del álgebra B = L/N'
Desarrollado por: Vicente Alonso

Dentro de H'⊗P_3, con H' = F[h_1..h_n]/(h_i²), se toma la subálgebra L
generada por
    1⊗c1, 1⊗a11, 1⊗b11, 1⊗a12, 1⊗b12, h_i⊗a22, 1⊗b22, 1⊗a23, 1⊗b23
y se factoriza por N' = W'⊗c3 (W' = monomios distintos de v = h_1···h_n).
Sobre B se comprueba que el elemento de Hall, identidad de E0(P_2), deja de
ser V-identidad, mientras que subconjuntos pequeños de generadores no
bastan para detectarlo.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .algebra_core import (
    Algebra,
    Element,
    LinOp,
    QuotientMap,
    SubalgebraMap,
    Subspace,
    is_ideal,
    quotient,
    restrict,
    subalgebra,
    tensor,
    tensor_element,
)
from .errors import GNotInT, InvalidN, SubsetTooLarge
from .fields import Field, QQ_FIELD
from .identities import GenericSubstitution, check_variety_R, eval_operator_coeffs
from .operator_engine import compose, hall_element, is_v_identity, v_matrix
from .pn_family import PnAlgebra, make_pn
from .reports import VerificationReport
from .terms import OperatorElement

logger = logging.getLogger(__name__)


# =============================================================================
# ÁLGEBRA DE MONOMIOS LIBRES DE CUADRADOS
# =============================================================================

def _monomial_name(monomial: Tuple[int, ...]) -> str:
    if not monomial:
        return "one"
    return "".join(f"h{i}" for i in monomial)


class SquarefreeAlgebra:
    """
    H' = F[h_1..h_n]/(h_i²), conmutativa, asociativa y unitaria
    """

    def __init__(self, n: int, field: Field = QQ_FIELD):
        if n < 1:
            raise InvalidN(f"n debe ser >= 1 (recibido {n})")
        self.n = n
        self.field = field
        self.monomials: List[Tuple[int, ...]] = [
            combo for size in range(n + 1) for combo in combinations(range(1, n + 1), size)
        ]
        self._index = {m: k for k, m in enumerate(self.monomials)}
        products: Dict[Tuple[int, int], Dict[int, Any]] = {}
        for a, left in enumerate(self.monomials):
            for b, right in enumerate(self.monomials):
                if set(left) & set(right):
                    continue
                merged = tuple(sorted(left + right))
                products[(a, b)] = {self._index[merged]: field.one}
        self.alg = Algebra(field, [_monomial_name(m) for m in self.monomials], products, name=f"H{n}")

    def monomial(self, *indices: int) -> Element:
        return self.alg.basis(self._index[tuple(sorted(indices))])

    @property
    def one(self) -> Element:
        return self.monomial()

    @property
    def v(self) -> Element:
        """h_1···h_n"""
        return self.monomial(*range(1, self.n + 1))

    @property
    def w_prime(self) -> Subspace:
        """Monomios distintos de v"""
        top = self._index[tuple(range(1, self.n + 1))]
        return Subspace.of_basis(self.alg, [k for k in range(self.alg.dim) if k != top])


# =============================================================================
# CONSTRUCCIÓN
# =============================================================================

@dataclass
class BConstruction:
    """Datos de la construcción para un n fijo"""
    n: int
    field: Field
    H: SquarefreeAlgebra
    P: PnAlgebra
    ambient: Algebra
    generator_names: List[str]
    generators: List[Element]
    L: Subspace
    N: Subspace
    N_prime: Subspace
    L_alg: Algebra
    inclusion: SubalgebraMap
    B: Algebra
    projection: QuotientMap
    images: List[Element] = dataclass_field(default_factory=list)

    @property
    def s(self) -> int:
        return self.n + 5

    def tensor(self, h: Element, p: Element) -> Element:
        return tensor_element(self.ambient, self.H.alg, self.P.alg, h, p)

    def basis(self, h_name: str, p_name: str) -> Element:
        return self.ambient.basis(f"{h_name}_{p_name}")

    def to_b(self, u: Element) -> Element:
        """Proyección en B de un elemento de L dado en el ambiente"""
        return self.projection(self.inclusion.pull(u))

    def image(self, name: str) -> Element:
        return self.images[self.generator_names.index(name)]


def _generator_names(n: int) -> List[str]:
    names = ["one_c1", "one_a11", "one_b11", "one_a12", "one_b12"]
    names.extend(f"h{i}_a22" for i in range(1, n + 1))
    names.extend(["one_b22", "one_a23", "one_b23"])
    return names


def build_construction(n: int, field: Field = QQ_FIELD, max_rounds: Optional[int] = None) -> BConstruction:
    """
    Construir H'⊗P_3, L, N, N' y B = L/N'

    Args:
        n: Número de variables h_i (n >= 1)
        field: Cuerpo
        max_rounds: Tope de rondas de la clausura de L (None: dim + 1)
    """
    H = SquarefreeAlgebra(n, field)
    P = make_pn(3, field)
    ambient = tensor(H.alg, P.alg, name=f"H{n}⊗P3")
    names = _generator_names(n)
    generators = [ambient.basis(name) for name in names]

    L = subalgebra(ambient, generators, max_rounds)
    c3 = P.c(3)
    N = Subspace.span(ambient, [tensor_element(ambient, H.alg, P.alg, h, c3) for h in H.alg.basis_elements()])
    N_prime = Subspace.span(ambient, [tensor_element(ambient, H.alg, P.alg, h, c3) for h in H.w_prime.basis])

    L_alg, inclusion = restrict(ambient, L, name=f"L{n}")
    B, projection = quotient(L_alg, inclusion.pull_subspace(N_prime), name=f"B{n}")
    construction = BConstruction(
        n=n, field=field, H=H, P=P, ambient=ambient,
        generator_names=names, generators=generators,
        L=L, N=N, N_prime=N_prime, L_alg=L_alg, inclusion=inclusion,
        B=B, projection=projection,
    )
    construction.images = [construction.to_b(g) for g in generators]
    logger.info(
        f"Construcción n={n}: ambiente {ambient.dim}, L {L.dim}, N' {N_prime.dim}, B {B.dim}"
    )
    return construction


# =============================================================================
# COMPROBACIONES DE LA CONSTRUCCIÓN
# =============================================================================

def generator_chain(C: BConstruction) -> VerificationReport:
    """
    Reproducir h⊗c2 y h⊗c3 para todo monomio h a partir de los generadores
    """
    tag = f"B{C.n}.{C.field.tag}"
    report = VerificationReport(title=f"Cadena de generadores (n={C.n})")
    P = C.P
    b12, a12, b22, a23, b23 = (C.basis("one", x) for x in ("b12", "a12", "b22", "a23", "b23"))
    c1 = C.basis("one", "c1")

    chain: Dict[Tuple[int, ...], Element] = {(): -(b12 * (a12 * c1))}
    for monomial in C.H.monomials[1:]:
        first, rest = monomial[0], monomial[1:]
        h_a22 = C.basis(f"h{first}", "a22")
        chain[monomial] = -(b22 * (h_a22 * chain[rest]))

    for monomial in C.H.monomials:
        name = _monomial_name(monomial)
        h = C.H.monomial(*monomial)
        expected_c2 = C.tensor(h, P.c(2))
        value_c2 = chain[monomial]
        ok = value_c2 == expected_c2 and C.L.contains(value_c2)
        report.add(f"chain.{tag}.{name}_c2", ok, f"{name}⊗c2 ∈ L por la cadena",
                   None if ok else f"obtenido {value_c2}")
        value_c3 = -(b23 * (a23 * value_c2))
        ok = value_c3 == C.tensor(h, P.c(3)) and C.L.contains(value_c3)
        report.add(f"chain.{tag}.{name}_c3", ok, f"{name}⊗c3 = -(1⊗b23)((1⊗a23)({name}⊗c2))",
                   None if ok else f"obtenido {value_c3}")
    return report


def support_containment(C: BConstruction) -> VerificationReport:
    """L ⊆ H'⊗(D3 + Σ_{i<=j, (i,j)≠(3,3)} (F a_ij + F b_ij)) y h⊗c3 anula L"""
    tag = f"B{C.n}.{C.field.tag}"
    report = VerificationReport(title=f"Soporte de L (n={C.n})")
    P = C.P
    allowed_p = set(P.D.pivots)
    for (i, j), index in list(P.a_index.items()) + list(P.b_index.items()):
        if i <= j and (i, j) != (3, 3):
            allowed_p.add(index)
    width = P.dim
    outside = [
        C.ambient.basis_names[k]
        for vector in C.L.vectors for k in vector if k % width not in allowed_p
    ]
    report.add(f"support.{tag}.L_contained", not outside, "soporte de L permitido",
               ", ".join(sorted(set(outside))) or None)

    witness = None
    for u in C.N.vectors:
        for w in C.L.vectors:
            if C.ambient.product_coeffs(u, w) or C.ambient.product_coeffs(w, u):
                witness = f"{Element(C.ambient, u)} no anula {Element(C.ambient, w)}"
                break
        if witness:
            break
    report.add(f"support.{tag}.N_annihilates_L", witness is None, "h⊗c3 anula L por ambos lados", witness)
    return report


def construction_report(C: BConstruction) -> VerificationReport:
    """Invariantes de L, N, N' y B"""
    tag = f"B{C.n}.{C.field.tag}"
    report = VerificationReport(title=f"Construcción B (n={C.n}) sobre {C.field.display_name}")
    report.add(f"construction.{tag}.Nprime_in_N", C.N_prime <= C.N, "N' ⊆ N")
    report.add(f"construction.{tag}.N_in_L", C.N <= C.L, "N ⊆ L")
    report.add(f"construction.{tag}.Nprime_ideal",
               is_ideal(C.L_alg, C.inclusion.pull_subspace(C.N_prime)), "N' ideal de L")
    v_c3 = C.tensor(C.H.v, C.P.c(3))
    report.add(f"construction.{tag}.v_c3_outside",
               C.L.contains(v_c3) and not C.N_prime.contains(v_c3), "v⊗c3 ∈ L \\ N'")
    report.add(f"construction.{tag}.dim_B", C.B.dim == C.L.dim - C.N_prime.dim,
               "dim B = dim L - dim N'", f"{C.B.dim}, {C.L.dim}, {C.N_prime.dim}")
    report.extend(generator_chain(C))
    report.extend(support_containment(C))
    report.extend(check_variety_R(C.B, f"B{C.n}"))
    return report


# =============================================================================
# PROPIEDAD (1)
# =============================================================================

def hall_construction_element(n: int, field: Field = QQ_FIELD) -> OperatorElement:
    """
    S = [[f1,f2]∘[f3,f4],f5] con
        f1 = V[x1,x2] Π_{i=2..n} V[x5,x_{7+i}],  f2 = f5 = V[x3,x4],
        f3 = V[x5,x6],  f4 = V[x7,x8]
    """
    f1 = OperatorElement.from_pairs([(1, 2)] + [(5, 7 + i) for i in range(2, n + 1)], field)
    f2 = OperatorElement.generator(3, 4, field)
    f3 = OperatorElement.generator(5, 6, field)
    f4 = OperatorElement.generator(7, 8, field)
    return hall_element(f1, f2, f3, f4, f2)


def hall_assignment_names(n: int) -> Dict[int, str]:
    """Variable -> generador de L"""
    names = {1: "one_b12", 2: "one_a12", 3: "one_b11", 4: "one_a11",
             5: "one_b22", 6: "h1_a22", 7: "one_b23", 8: "one_a23"}
    for i in range(2, n + 1):
        names[7 + i] = f"h{i}_a22"
    return names


class Property1Result(NamedTuple):
    ok: bool
    witness: Optional[Element]
    report: VerificationReport


def _display_operators(C: BConstruction):
    one_b = lambda name: C.basis("one", name).coeffs  # noqa: E731
    f1 = v_matrix(C.ambient, one_b("b12"), one_b("a12"))
    for i in range(1, C.n + 1):
        f1 = compose(f1, v_matrix(C.ambient, one_b("b22"), C.basis(f"h{i}", "a22").coeffs))
    f2 = v_matrix(C.ambient, one_b("b11"), one_b("a11"))
    f3 = v_matrix(C.ambient, one_b("b22"), one_b("a22"))
    f4 = v_matrix(C.ambient, one_b("b23"), one_b("a23"))
    return f1, f2, f3, f4


def _agree_on(space: Subspace, first, second) -> bool:
    return all(first.apply_coeffs(u) == second.apply_coeffs(u) for u in space.vectors)


def verify_property1(C: BConstruction, check_p2: bool = True) -> Property1Result:
    """
    El elemento de Hall S es V-identidad de P_2 pero (1⊗c1)S^φ = v⊗c3 ≠ 0 en B

    Args:
        C: Construcción
        check_p2: Comprobar simbólicamente que S es V-identidad de P_2
    """
    tag = f"B{C.n}.{C.field.tag}"
    report = VerificationReport(title=f"Propiedad (1), n={C.n}")
    S = hall_construction_element(C.n, C.field)

    if check_p2:
        P2 = make_pn(2, C.field)
        report.add(f"property1.{tag}.S_in_T", is_v_identity(P2.alg, S), "S es V-identidad de P2")
    else:
        report.skip(f"property1.{tag}.S_in_T", "S es V-identidad de P2", "omitida")

    # productos de la exposición, como operadores sobre L
    f1, f2, f3, f4 = _display_operators(C)
    zero = LinOp(C.ambient)
    v_a12 = C.tensor(C.H.v, C.P.a(1, 2)).coeffs
    expected_21 = v_matrix(C.ambient, C.basis("one", "b12").coeffs, v_a12)
    expected_34 = v_matrix(C.ambient, C.basis("one", "b23").coeffs, C.basis("one", "a23").coeffs)
    report.add(f"property1.{tag}.f1f2_zero", _agree_on(C.L, compose(f1, f2), zero), "f1 f2 = 0 en L")
    report.add(f"property1.{tag}.f2f1", _agree_on(C.L, compose(f2, f1), expected_21),
               "f2 f1 = V(1⊗b12, v⊗a12) en L")
    report.add(f"property1.{tag}.f3f4", _agree_on(C.L, compose(f3, f4), expected_34),
               "f3 f4 = V(1⊗b23, 1⊗a23) en L")
    report.add(f"property1.{tag}.f4f3_zero", _agree_on(C.L, compose(f4, f3), zero), "f4 f3 = 0 en L")

    assignment = {i: C.image(name).coeffs for i, name in hall_assignment_names(C.n).items()}
    start = C.image("one_c1")
    value = Element(C.B, eval_operator_coeffs(C.B, S, start.coeffs, assignment))
    expected = C.to_b(C.tensor(C.H.v, C.P.c(3)))
    ok = bool(value) and value == expected
    report.add(f"property1.{tag}.witness", ok, "(1⊗c1)S^φ = v⊗c3 ≠ 0 en B",
               f"obtenido {value}")
    result = Property1Result(report.passed, value if bool(value) else None, report)
    logger.info(f"Propiedad (1) n={C.n}: {report.status}, testigo {value}")
    return result


# =============================================================================
# PROPIEDAD (2)
# =============================================================================

def spot_check_property2(
    C: BConstruction,
    subset_indices: Sequence[int],
    g: OperatorElement,
    trials: int = 0,
    enforce_bound: bool = True,
    rng: Optional[np.random.Generator] = None,
    check_g: bool = True,
) -> bool:
    """
    t·g(c_1..c_k) = 0 para t genérico en B y c_i genéricos en la subálgebra
    generada por los generadores elegidos

    Raises:
        SubsetTooLarge: más de s = n+5 generadores con enforce_bound
        GNotInT: si g no es V-identidad de P_2
    """
    subset = sorted(set(subset_indices))
    if enforce_bound and len(subset) > C.s:
        raise SubsetTooLarge(f"{len(subset)} generadores superan s = {C.s}")
    if check_g and not is_v_identity(make_pn(2, C.field).alg, g):
        raise GNotInT("g no es V-identidad de P2")

    B = C.B
    sub = subalgebra(B, [C.images[k] for k in subset])
    variables = g.variables()
    if g.is_zero() or sub.is_zero():
        return True
    units = [{k: B.field.one} for k in range(B.dim)]
    substitution = GenericSubstitution(
        B, variables, spaces={i: sub.vectors for i in variables}, extra=[("t", units)]
    )
    value = eval_operator_coeffs(B, g, substitution.values["t"], substitution.values)
    if value:
        logger.info(f"Subconjunto {subset}: g no se anula")
        return False

    rng = rng if rng is not None else np.random.default_rng(0)
    for _ in range(trials):
        t = {k: B.field.random_element(rng) for k in range(B.dim)}
        values = {}
        for i in variables:
            vector: Dict[int, Any] = {}
            for w in sub.vectors:
                factor = B.field.random_element(rng)
                for k, c in w.items():
                    vector[k] = vector.get(k, B.field.zero) + factor * c
            values[i] = {k: c for k, c in vector.items() if c}
        if eval_operator_coeffs(B, g, t, values):
            return False
    return True


def property2_table(
    C: BConstruction,
    g: OperatorElement,
    subsets: Sequence[Sequence[int]],
    trials: int = 0,
) -> List[Tuple[Tuple[str, ...], bool]]:
    """Resultados de spot_check_property2 por subconjunto (g comprobado una vez)"""
    if not is_v_identity(make_pn(2, C.field).alg, g):
        raise GNotInT("g no es V-identidad de P2")
    rows = []
    for subset in subsets:
        names = tuple(C.generator_names[k] for k in subset)
        rows.append((names, spot_check_property2(C, subset, g, trials, check_g=False)))
    return rows


def default_subsets(C: BConstruction, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Subconjuntos de s generadores en orden lexicográfico"""
    found = list(combinations(range(len(C.generators)), C.s))
    return found if limit is None else found[:limit]
