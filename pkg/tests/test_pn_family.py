#!/usr/bin/env python3
"""
RSym - Tests de la familia P_n
Desarrollado por: Vicente Alonso

Tests unitarios para la construcción de P_n, la pertenencia a la variedad
y las comprobaciones de identidades
"""

import os
import sys
import unittest

# Añadir el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rsym.algebra_core import Algebra
from rsym.errors import InvalidN
from rsym.fields import QQ_FIELD, parse_field
from rsym.identities import (
    check_operator_relations,
    check_right_nilpotent,
    check_right_symmetric,
    check_variety_R,
    identity_witness,
    in_variety,
    is_identity,
)
from rsym.parser import parse_term
from rsym.pn_family import (
    emit_spec,
    make_pn,
    verify_left_annihilator,
    verify_pn,
    verify_structure_relations,
    verify_v_action,
)

FIELDS = ("Q", "F2", "F3")


class TestPnConstruction(unittest.TestCase):
    """
    Tests para make_pn y sus subespacios
    """

    def test_dimensions(self):
        """
        Test: dim P_n = 4n² + n
        """
        self.assertEqual(make_pn(1).dim, 5)
        self.assertEqual(make_pn(2).dim, 18)
        self.assertEqual(make_pn(3).dim, 39)

    def test_p1_basis(self):
        """
        Test: Base de P1
        """
        self.assertEqual(make_pn(1).alg.basis_names, ("a11", "b11", "c1", "d11", "e11"))

    def test_subspace_dimensions(self):
        """
        Test: A, C, C̄ y D
        """
        P = make_pn(2)
        self.assertEqual(P.A.dim, 8)
        self.assertEqual(P.C.dim, 2)
        self.assertEqual(P.Cbar.dim, 8)
        self.assertEqual(P.D.dim, 10)

    def test_invalid_n(self):
        """
        Test: n < 1 y n por encima del tope
        """
        with self.assertRaises(InvalidN):
            make_pn(0)
        with self.assertRaises(InvalidN):
            make_pn(7)
        self.assertEqual(make_pn(7, max_n=None).n, 7)

    def test_emit_spec(self):
        """
        Test: Especificación con el cuerpo y los nombres
        """
        spec = emit_spec(make_pn(1, parse_field("F3")))
        self.assertEqual(spec["field"], "Fp:3")
        self.assertIn(["a11", "c1", [["1", "d11"]]], spec["products"])


class TestVariety(unittest.TestCase):
    """
    Tests para la pertenencia a la variedad
    """

    def test_pn_in_variety(self):
        """
        Test: P1, P2, P3 sobre Q, GF(2), GF(3)
        """
        for tag in FIELDS:
            for n in (1, 2, 3):
                report = check_variety_R(make_pn(n, parse_field(tag)).alg)
                self.assertTrue(report.passed, report.render())

    def test_idempotent_fails(self):
        """
        Test: e·e = e no cumple (ab)a = 0
        """
        alg = Algebra(QQ_FIELD, ["e", "f"], {(0, 0): {0: 1}}, name="E")
        report = check_variety_R(alg)
        self.assertFalse(report.passed)
        failure = report.get("variety.E.Q.ab_a")
        self.assertEqual(failure.status, "fail")
        self.assertIn("x1=e", failure.witness)
        self.assertFalse(in_variety(alg))

    def test_nilpotent_square_passes(self):
        """
        Test: e·e = f con el resto nulo está en la variedad
        """
        alg = Algebra(QQ_FIELD, ["e", "f"], {(0, 0): {1: 1}})
        self.assertTrue(check_variety_R(alg).passed)


class TestIdentities(unittest.TestCase):
    """
    Tests para is_identity y los testigos
    """

    def setUp(self):
        self.P = make_pn(2)

    def test_identities_of_p2(self):
        """
        Test: (x1 x2) x1 y [[x1,x2],x3] son identidades
        """
        self.assertTrue(is_identity(self.P.alg, parse_term("(x1 x2) x1")))
        self.assertTrue(is_identity(self.P.alg, parse_term("[[x1,x2],x3]")))
        self.assertTrue(is_identity(self.P.alg, parse_term("((x1 x2) x3) x4")))

    def test_product_not_identity(self):
        """
        Test: x1 x2 no es identidad y el testigo la anula
        """
        f = parse_term("x1 x2")
        self.assertFalse(is_identity(self.P.alg, f))
        witness = identity_witness(self.P.alg, f)
        self.assertIsNotNone(witness)
        self.assertFalse((witness[1] * witness[2]).is_zero())

    def test_witness_none_for_identity(self):
        """
        Test: Sin testigo para una identidad
        """
        self.assertIsNone(identity_witness(self.P.alg, parse_term("(x1 x2)(x3 x4)")))


class TestStructure(unittest.TestCase):
    """
    Tests para las relaciones de estructura y operadores
    """

    def test_verify_pn(self):
        """
        Test: Batería completa para n = 1, 2, 3 sobre Q
        """
        for n in (1, 2, 3):
            report = verify_pn(make_pn(n))
            self.assertTrue(report.passed, report.render())

    def test_verify_pn_finite_fields(self):
        """
        Test: Batería completa para P2 sobre GF(2) y GF(3)
        """
        for tag in ("F2", "F3"):
            report = verify_pn(make_pn(2, parse_field(tag)))
            self.assertTrue(report.passed, report.render())

    def test_structure_relations(self):
        """
        Test: P² = D, CP = 0, PA = C
        """
        report = verify_structure_relations(make_pn(2))
        self.assertEqual(report.get("structure.P2.Q.PP_eq_D").status, "pass")
        self.assertEqual(report.get("structure.P2.Q.CP_zero").status, "pass")
        report = verify_structure_relations(make_pn(1))
        self.assertEqual(report.get("structure.P1.Q.PA_eq_C").status, "pass")

    def test_v_action(self):
        """
        Test: (A+C̄)V = 0, V_{d,y} = 0 y c1 V(b11,a11) = c1
        """
        report = verify_v_action(make_pn(1))
        self.assertTrue(report.passed, report.render())
        self.assertEqual(report.get("v_action.P1.Q.C_not_killed").status, "pass")

    def test_left_annihilator(self):
        """
        Test: Ann_l P_n = C_n
        """
        for n in (1, 2, 3):
            self.assertTrue(verify_left_annihilator(make_pn(n)))

    def test_basis_level_checks(self):
        """
        Test: Nilpotencia por la derecha y simetría por la derecha en P3
        """
        P3 = make_pn(3)
        self.assertTrue(check_right_nilpotent(P3.alg).passed)
        self.assertTrue(check_right_symmetric(P3.alg).passed)

    def test_operator_relations(self):
        """
        Test: Relaciones entre R, L y V en P2 y P3
        """
        for n in (2, 3):
            report = check_operator_relations(make_pn(n).alg)
            self.assertTrue(report.passed, report.render())


if __name__ == '__main__':
    unittest.main(verbosity=2)
