#!/usr/bin/env python3
"""
RSym - Tests del motor de operadores
Desarrollado por: Vicente Alonso

Tests unitarios para E0, la identidad de Hall, las V-identidades, la
reducción de identidades y la búsqueda acotada en el ideal
"""

import os
import sys
import unittest

import numpy as np

# Añadir el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rsym.algebra_core import Algebra
from rsym.counterexample import hall_construction_element
from rsym.errors import InvalidN, NotAnIdentity
from rsym.fields import QQ_FIELD, parse_field
from rsym.free_variety import operator_to_free
from rsym.operator_engine import (
    compose,
    e0_algebra,
    e0_report,
    eval_operator,
    hall_element,
    hall_matrix_check,
    ideal_membership_expand,
    is_full_matrix_algebra,
    is_v_identity,
    pn_matrix_units,
    reduce_to_operator_identities,
    substitute_operator,
    verify_matrix_units,
    verify_membership,
)
from rsym.parser import parse_term
from rsym.pn_family import make_pn
from rsym.terms import FreeElement, NormalWord, OperatorElement

V = OperatorElement.generator


class TestEvalOperator(unittest.TestCase):
    """
    Tests para la evaluación de elementos de E0 en P2
    """

    def setUp(self):
        self.P = make_pn(2)

    def test_matrix_unit(self):
        """
        Test: V[x1,x2] con x1=b12, x2=a12 envía c1 a c2 y anula el resto
        """
        P = self.P
        op = eval_operator(V(1, 2), P.alg, {1: P.b(1, 2), 2: P.a(1, 2)})
        self.assertEqual(P.c(1) @ op, P.c(2))
        self.assertEqual(len(op.rows), 1)

    def test_equal_arguments(self):
        """
        Test: V[x1,x2] con x1 = x2 es nulo
        """
        P = self.P
        x = P.a(1, 2) + P.b(1, 2).scale(3) + P.c(2)
        self.assertTrue(eval_operator(V(1, 2), P.alg, {1: x, 2: x}).is_zero())

    def test_multiplicative(self):
        """
        Test: eval(g h) = eval(g) eval(h)
        """
        P = self.P
        assignment = {1: P.b(1, 2), 2: P.a(1, 2), 3: P.b(2, 1), 4: P.a(2, 1)}
        g, h = V(1, 2), V(3, 4)
        product = eval_operator(g * h, P.alg, assignment)
        self.assertEqual(product, compose(eval_operator(g, P.alg, assignment),
                                          eval_operator(h, P.alg, assignment)))
        # E12 E21 = E11
        self.assertEqual(P.c(1) @ product, P.c(1))


class TestE0(unittest.TestCase):
    """
    Tests para E0(P_n) ≅ M_n
    """

    def test_dimensions(self):
        """
        Test: dim E0(P_n) = n²
        """
        for n in (1, 2, 3):
            self.assertEqual(e0_algebra(make_pn(n).alg).dim, n * n)

    def test_zero_algebra(self):
        """
        Test: E0 del álgebra nula
        """
        self.assertEqual(e0_algebra(Algebra(QQ_FIELD, ["u", "v"])).dim, 0)

    def test_full_matrix_algebra(self):
        """
        Test: Reconocimiento de M_n sobre C_n
        """
        P2 = make_pn(2)
        ma = e0_algebra(P2.alg)
        result = is_full_matrix_algebra(ma, 2, P2.C)
        self.assertTrue(result.ok)
        self.assertEqual(len(result.units), 4)
        self.assertEqual(P2.c(1) @ result.units[(1, 2)], P2.c(2))
        self.assertFalse(is_full_matrix_algebra(ma, 3).ok)
        P1 = make_pn(1)
        self.assertTrue(is_full_matrix_algebra(e0_algebra(P1.alg), 1, P1.C).ok)

    def test_matrix_units(self):
        """
        Test: V(b_ij, a_ij) actúa como E_ij y E12 E21 = E11
        """
        P = make_pn(3)
        units = pn_matrix_units(P)
        self.assertEqual(len(units), 9)
        self.assertEqual(P.c(2) @ units[(2, 3)], P.c(3))
        self.assertTrue((P.c(1) @ units[(2, 3)]).is_zero())
        self.assertEqual(compose(units[(1, 2)], units[(2, 1)]).apply_coeffs(P.c(1).coeffs), P.c(1).coeffs)
        report = verify_matrix_units(P, units)
        self.assertTrue(report.passed, report.render())

    def test_annihilates_and_invariant(self):
        """
        Test: (A+C̄)E0 = 0 y C E0 ⊆ C
        """
        P = make_pn(2)
        ma = e0_algebra(P.alg)
        self.assertTrue(ma.annihilates(P.A + P.Cbar))
        self.assertTrue(ma.leaves_invariant(P.C))
        self.assertTrue(ma.is_closed())

    def test_reports(self):
        """
        Test: Informe de E0 para n = 1, 2, 3 y GF(2)
        """
        for P in (make_pn(1), make_pn(2), make_pn(3), make_pn(2, parse_field("F2"))):
            report = e0_report(P)
            self.assertTrue(report.passed, report.render())


class TestHall(unittest.TestCase):
    """
    Tests para la identidad de Hall
    """

    def test_expansion_size(self):
        """
        Test: 16 términos con generadores distintos
        """
        g = hall_element(V(1, 2), V(3, 4), V(5, 6), V(7, 8), V(9, 10))
        self.assertEqual(len(g), 16)
        self.assertEqual(g.degree(), 5)

    def test_equal_first_arguments(self):
        """
        Test: f1 = f2 anula el elemento
        """
        self.assertTrue(hall_element(V(1, 2), V(1, 2), V(3, 4), V(5, 6), V(7, 8)).is_zero())

    def test_m2_and_m3(self):
        """
        Test: Se anula en M2 y falla en M3
        """
        rng = np.random.default_rng(0)
        for field in (QQ_FIELD, parse_field("F3")):
            zeros, witness = hall_matrix_check(2, 200, field, rng)
            self.assertEqual(zeros, 200)
            self.assertIsNone(witness)
        _, witness = hall_matrix_check(3, 50, QQ_FIELD, rng)
        self.assertIsNotNone(witness)

    def test_v_identity_of_p2(self):
        """
        Test: El elemento de Hall de la construcción es V-identidad de P2
        """
        P2 = make_pn(2)
        self.assertTrue(is_v_identity(P2.alg, hall_construction_element(1)))
        self.assertFalse(is_v_identity(P2.alg, V(1, 2)))

    def test_not_v_identity_of_p3(self):
        """
        Test: En P3 la identidad de Hall no se cumple
        """
        P3 = make_pn(3)
        self.assertFalse(is_v_identity(P3.alg, hall_element(V(1, 2), V(3, 4), V(1, 2), V(3, 4), V(5, 6))))

    def test_zero_algebra(self):
        """
        Test: Todo es V-identidad del álgebra nula
        """
        self.assertTrue(is_v_identity(Algebra(QQ_FIELD, ["u"]), V(1, 2)))


class TestReduction(unittest.TestCase):
    """
    Tests para la reducción a identidades de operadores
    """

    def setUp(self):
        self.P2 = make_pn(2)
        A, B, C = V(1, 2), V(1, 3), V(2, 3)
        self.hall = hall_element(A, B, A, C, B)

    def test_r0_input(self):
        """
        Test: f = x1 g devuelve exactamente g
        """
        f = operator_to_free(self.hall, 1)
        result = reduce_to_operator_identities(f, self.P2, degree_cap=None)
        self.assertEqual(result.operators, [self.hall])
        self.assertEqual(result.m, 3)
        self.assertEqual(result.bound, 36)
        self.assertTrue(result.within_bound())
        self.assertTrue(result.low_part.is_zero())

    def test_r1_input(self):
        """
        Test: Parte R1: salidas acotadas y V-identidades
        """
        base = operator_to_free(self.hall, 1)
        f = FreeElement(QQ_FIELD, {NormalWord(w.head, vs=w.vs, l=3): c for w, c in base})
        result = reduce_to_operator_identities(f, self.P2, degree_cap=None)
        self.assertTrue(result.within_bound())
        self.assertLessEqual(result.counts["r1"], result.bounds["r1"])
        self.assertTrue(result.low_part.is_zero())
        for g in result.operators:
            self.assertTrue(is_v_identity(self.P2.alg, g))

    def test_not_identity(self):
        """
        Test: x1 x2 no es identidad de P2
        """
        with self.assertRaises(NotAnIdentity):
            reduce_to_operator_identities(parse_term("x1 x2"), self.P2)

    def test_requires_n2(self):
        """
        Test: n = 1 no admite la reducción
        """
        with self.assertRaises(InvalidN):
            reduce_to_operator_identities(parse_term("(x1 x2) x1"), make_pn(1))


class TestIdealMembership(unittest.TestCase):
    """
    Tests para la búsqueda acotada en el ideal generado por G
    """

    def test_substitute_operator(self):
        """
        Test: Sustitución lineal de variables en V
        """
        image = substitute_operator(V(1, 2), {1: (3,), 2: (1, 2)})
        self.assertEqual(image, -V(1, 3) - V(2, 3))

    def test_member_of_g(self):
        """
        Test: g en G tiene certificado trivial
        """
        h = V(1, 2) * V(3, 4)
        certificate = ideal_membership_expand(h, [h])
        self.assertIsNotNone(certificate)
        self.assertTrue(verify_membership(h, [h], certificate))

    def test_one_step_product(self):
        """
        Test: g = V[x3,x4] h con h en G
        """
        h = V(1, 2)
        g = V(3, 4) * h
        certificate = ideal_membership_expand(g, [h], degree_cap=2)
        self.assertIsNotNone(certificate)
        self.assertTrue(verify_membership(g, [h], certificate))

    def test_hall_unknown(self):
        """
        Test: Hall frente a cuadrados de generadores queda sin certificado
        """
        A, B, C = V(1, 2), V(1, 3), V(2, 3)
        g = hall_element(A, B, A, C, B)
        self.assertIsNone(ideal_membership_expand(g, [V(1, 2) * V(1, 2)], degree_cap=5))


if __name__ == '__main__':
    unittest.main(verbosity=2)
