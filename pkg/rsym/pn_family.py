#!/usr/bin/env python3
"""
RSym - Familia de álgebras P_n
Desarrollado por: Vicente Alonso

P_n tiene base a_ij, b_ij, c_i, d_ij, e_ij (1 <= i, j <= n) y productos no
nulos
    a_ij c_i = d_ij,  b_ij c_i = e_ij,
    a_ij e_ij = e_ij a_ij = -b_ij d_ij = -d_ij b_ij = c_j.
Subespacios: A = <a, b>, D = <c, d, e>, C = <c>, C̄ = <d, e>.
"""

import logging
from typing import Any, Dict, Optional, Tuple

from .algebra_core import (
    Algebra,
    Element,
    Subspace,
    commutator,
    dump_algebra,
    is_ideal,
    left_annihilator,
    product_span,
)
from .errors import InvalidN
from .fields import Field, QQ_FIELD
from .identities import (
    check_consequences,
    check_operator_relations,
    check_right_nilpotent,
    check_right_symmetric,
    check_variety_R,
)
from .reports import VerificationReport

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6


def _label(letter: str, n: int, *indices: int) -> str:
    if n < 10:
        return letter + "".join(str(i) for i in indices)
    return letter + "_".join(str(i) for i in indices)


class PnAlgebra:
    """
    Álgebra P_n con sus tablas de nombres y subespacios distinguidos
    """

    def __init__(self, n: int, field: Field = QQ_FIELD):
        """
        Construir P_n

        Args:
            n: Orden (n >= 1)
            field: Cuerpo de escalares
        """
        if n < 1:
            raise InvalidN(f"n debe ser >= 1 (recibido {n})")
        self.n = n
        self.field = field

        pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        names = []
        self.a_index: Dict[Tuple[int, int], int] = {}
        self.b_index: Dict[Tuple[int, int], int] = {}
        self.c_index: Dict[int, int] = {}
        self.d_index: Dict[Tuple[int, int], int] = {}
        self.e_index: Dict[Tuple[int, int], int] = {}
        for letter, table in (("a", self.a_index), ("b", self.b_index)):
            for pair in pairs:
                table[pair] = len(names)
                names.append(_label(letter, n, *pair))
        for i in range(1, n + 1):
            self.c_index[i] = len(names)
            names.append(_label("c", n, i))
        for letter, table in (("d", self.d_index), ("e", self.e_index)):
            for pair in pairs:
                table[pair] = len(names)
                names.append(_label(letter, n, *pair))

        one, minus = field.one, -field.one
        products: Dict[Tuple[int, int], Dict[int, Any]] = {}
        for (i, j) in pairs:
            a, b = self.a_index[(i, j)], self.b_index[(i, j)]
            d, e = self.d_index[(i, j)], self.e_index[(i, j)]
            ci, cj = self.c_index[i], self.c_index[j]
            products[(a, ci)] = {d: one}
            products[(b, ci)] = {e: one}
            products[(a, e)] = {cj: one}
            products[(e, a)] = {cj: one}
            products[(b, d)] = {cj: minus}
            products[(d, b)] = {cj: minus}

        self.alg = Algebra(field, names, products, name=f"P{n}")
        self.A = Subspace.of_basis(self.alg, list(self.a_index.values()) + list(self.b_index.values()))
        self.C = Subspace.of_basis(self.alg, list(self.c_index.values()))
        self.Cbar = Subspace.of_basis(self.alg, list(self.d_index.values()) + list(self.e_index.values()))
        self.D = self.C + self.Cbar
        logger.info(f"P{n} construida sobre {field.display_name}: dim={self.alg.dim}")

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def name(self) -> str:
        return self.alg.name

    def a(self, i: int, j: int) -> Element:
        return self.alg.basis(self.a_index[(i, j)])

    def b(self, i: int, j: int) -> Element:
        return self.alg.basis(self.b_index[(i, j)])

    def c(self, i: int) -> Element:
        return self.alg.basis(self.c_index[i])

    def d(self, i: int, j: int) -> Element:
        return self.alg.basis(self.d_index[(i, j)])

    def e(self, i: int, j: int) -> Element:
        return self.alg.basis(self.e_index[(i, j)])

    def __repr__(self) -> str:
        return f"<PnAlgebra n={self.n} dim={self.dim} over {self.field.display_name}>"


def make_pn(n: int, field: Field = QQ_FIELD, max_n: Optional[int] = DEFAULT_MAX_N) -> PnAlgebra:
    """
    Construir P_n validando n

    Args:
        n: Orden
        field: Cuerpo
        max_n: Tope de n (None para desactivarlo)

    Returns:
        PnAlgebra
    """
    if n < 1:
        raise InvalidN(f"n debe ser >= 1 (recibido {n})")
    if max_n is not None and n > max_n:
        raise InvalidN(f"n={n} supera el tope configurado ({max_n})")
    return PnAlgebra(n, field)


def emit_spec(P: PnAlgebra) -> Dict[str, Any]:
    """Descripción JSON de P_n"""
    return dump_algebra(P.alg)


# =============================================================================
# COMPROBACIONES
# =============================================================================

def verify_structure_relations(P: PnAlgebra) -> VerificationReport:
    """
    Igualdades entre spans de productos de los subespacios distinguidos

    Returns:
        Informe con una entrada por igualdad
    """
    alg = P.alg
    whole = Subspace.whole(alg)
    zero = Subspace(alg)
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Relaciones de estructura: {P.name}")

    equations = [
        ("PP_eq_D", "P^2=D", product_span(alg, whole, whole), P.D),
        ("AA_zero", "A^2=0", product_span(alg, P.A, P.A), zero),
        ("DD_zero", "D^2=0", product_span(alg, P.D, P.D), zero),
        ("DP_eq_C", "DP=C", product_span(alg, P.D, whole), P.C),
        ("PA_eq_C", "PA=C", product_span(alg, whole, P.A), P.C),
        ("PC_eq_Cbar", "PC=C̄", product_span(alg, whole, P.C), P.Cbar),
        ("CP_zero", "CP=0", product_span(alg, P.C, whole), zero),
        ("PCbar_eq_C", "PC̄=C", product_span(alg, whole, P.Cbar), P.C),
    ]
    for key, anchor, computed, expected in equations:
        ok = computed == expected
        report.add(f"structure.{tag}.{key}", ok, anchor, None if ok else f"obtenido {computed}")

    direct = P.C.dim + P.Cbar.dim == P.D.dim and (P.C + P.Cbar) == P.D
    report.add(f"structure.{tag}.D_direct_sum", direct, "D=C⊕C̄")
    report.add(f"structure.{tag}.P_direct_sum", P.A.dim + P.D.dim == P.dim and (P.A + P.D) == whole,
               "P=A⊕D")
    report.add(f"structure.{tag}.D_ideal", is_ideal(alg, P.D), "D es ideal")
    return report


def verify_v_action(P: PnAlgebra) -> VerificationReport:
    """
    (A+C̄)V_{x,y}=0 y V_{d,y}=V_{y,d}=0 para x, y de la base y d en D
    """
    alg = P.alg
    one = alg.field.one
    dim = alg.dim
    units = [{k: one} for k in range(dim)]
    names = alg.basis_names
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Acción de V: {P.name}")

    witness = None
    killed = P.A.pivots + P.Cbar.pivots
    for u in killed:
        for x in range(dim):
            xu = alg.product_coeffs(units[x], units[u])
            if not xu:
                continue
            for y in range(dim):
                if alg.product_coeffs(xu, units[y]):
                    witness = f"{names[u]} V({names[x]},{names[y]}) != 0"
                    break
            if witness:
                break
        if witness:
            break
    report.add(f"v_action.{tag}.A_Cbar_killed", witness is None, "(A+C̄)V_{x,y}=0", witness)

    witness = None
    for d in P.D.pivots:
        for u in range(dim):
            du = alg.product_coeffs(units[d], units[u])
            for y in range(dim):
                if du and alg.product_coeffs(du, units[y]):
                    witness = f"{names[u]} V({names[d]},{names[y]}) != 0"
                    break
                yu = alg.product_coeffs(units[y], units[u])
                if yu and alg.product_coeffs(yu, units[d]):
                    witness = f"{names[u]} V({names[y]},{names[d]}) != 0"
                    break
            if witness:
                break
        if witness:
            break
    report.add(f"v_action.{tag}.D_vanishes", witness is None, "V_{d,y}=V_{y,d}=0", witness)

    # C no queda anulado: c1 V(b11, a11) = c1
    c1 = P.c(1)
    image = alg.product_coeffs(alg.product_coeffs(P.b(1, 1).coeffs, c1.coeffs), P.a(1, 1).coeffs)
    expected = image == c1.coeffs
    report.add(f"v_action.{tag}.C_not_killed", expected, "c1 V(b11,a11)=c1 (no nulo)",
               None if expected else f"obtenido {Element(alg, image)}")
    return report


def verify_left_annihilator(P: PnAlgebra) -> bool:
    """Ann_l P_n = C_n como subespacios escalonados"""
    return left_annihilator(P.alg) == P.C


def verify_commutators(P: PnAlgebra) -> VerificationReport:
    """[P,P] = C̄ y C̄ es central"""
    alg = P.alg
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport()
    basis = alg.basis_elements()
    commutators = [commutator(alg, u, v) for u in basis for v in basis]
    span = Subspace.span(alg, commutators)
    report.add(f"commutators.{tag}.span_eq_Cbar", span == P.Cbar, "[P,P]=C̄",
               None if span == P.Cbar else f"obtenido {span}")
    witness = None
    for cbar in P.Cbar.basis:
        for x in basis:
            if (cbar * x) != (x * cbar):
                witness = f"{cbar} no conmuta con {x}"
                break
        if witness:
            break
    report.add(f"commutators.{tag}.Cbar_central", witness is None, "C̄ central", witness)
    return report


def verify_pn(P: PnAlgebra) -> VerificationReport:
    """Todas las comprobaciones sobre P_n"""
    tag = f"{P.name}.{P.field.tag}"
    report = VerificationReport(title=f"Verificación de {P.name} sobre {P.field.display_name}")
    report.extend(check_variety_R(P.alg, P.name))
    report.extend(check_consequences(P.alg, P.name))
    report.extend(check_right_nilpotent(P.alg, P.name))
    report.extend(check_right_symmetric(P.alg, P.name))
    report.extend(check_operator_relations(P.alg, P.name))
    report.extend(verify_structure_relations(P))
    report.extend(verify_v_action(P))
    report.extend(verify_commutators(P))
    ok = verify_left_annihilator(P)
    report.add(f"annihilator.{tag}.left_eq_C", ok, "Ann_l P = C",
               None if ok else f"obtenido {left_annihilator(P.alg)}")
    logger.info(f"{P.name}: {report.status}")
    return report
