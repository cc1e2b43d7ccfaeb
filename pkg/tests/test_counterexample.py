#!/usr/bin/env python3
"""
RSym - Tests de la construcción B = L/N'
Desarrollado por: Vicente Alonso

Tests unitarios para H', la construcción de L, N, N' y B y las
propiedades (1) y (2)
"""

import os
import sys
import unittest

# Añadir el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rsym.counterexample import (
    SquarefreeAlgebra,
    build_construction,
    construction_report,
    default_subsets,
    generator_chain,
    hall_assignment_names,
    hall_construction_element,
    property2_table,
    spot_check_property2,
    support_containment,
    verify_property1,
)
from rsym.errors import GNotInT, InvalidN, SubsetTooLarge
from rsym.identities import check_variety_R
from rsym.terms import OperatorElement


class TestSquarefreeAlgebra(unittest.TestCase):
    """
    Tests para H' = F[h_1..h_n]/(h_i²)
    """

    def test_dimension(self):
        """
        Test: dim H' = 2^n
        """
        self.assertEqual(SquarefreeAlgebra(1).alg.dim, 2)
        self.assertEqual(SquarefreeAlgebra(3).alg.dim, 8)

    def test_products(self):
        """
        Test: h_i² = 0, h1 h2 = h2 h1 y la unidad
        """
        H = SquarefreeAlgebra(2)
        h1, h2 = H.monomial(1), H.monomial(2)
        self.assertTrue((h1 * h1).is_zero())
        self.assertEqual(h1 * h2, h2 * h1)
        self.assertEqual(h1 * h2, H.v)
        self.assertEqual(H.one * h1, h1)

    def test_w_prime(self):
        """
        Test: W' omite solo v
        """
        H = SquarefreeAlgebra(2)
        self.assertEqual(H.w_prime.dim, 3)
        self.assertFalse(H.w_prime.contains(H.v))

    def test_invalid_n(self):
        """
        Test: n = 0 rechazado
        """
        with self.assertRaises(InvalidN):
            SquarefreeAlgebra(0)


class TestConstruction(unittest.TestCase):
    """
    Tests para L, N, N' y B con n = 1
    """

    @classmethod
    def setUpClass(cls):
        cls.C = build_construction(1)

    def test_dimensions(self):
        """
        Test: ambiente 78, L 24, N' 1, B 23
        """
        C = self.C
        self.assertEqual(C.ambient.dim, 78)
        self.assertEqual(C.L.dim, 24)
        self.assertEqual(C.N_prime.dim, 1)
        self.assertEqual(C.B.dim, 23)

    def test_generators(self):
        """
        Test: 9 generadores y s = 6
        """
        C = self.C
        self.assertEqual(len(C.generators), 9)
        self.assertEqual(C.s, 6)
        self.assertEqual(C.generator_names[0], "one_c1")
        self.assertIn("h1_a22", C.generator_names)

    def test_construction_report(self):
        """
        Test: Inclusiones, ideal, cadena, soporte y variedad
        """
        report = construction_report(self.C)
        self.assertTrue(report.passed, report.render())

    def test_chain_and_support(self):
        """
        Test: Cadena de generadores y soporte de L
        """
        self.assertTrue(generator_chain(self.C).passed)
        self.assertTrue(support_containment(self.C).passed)

    def test_b_in_variety(self):
        """
        Test: B está en la variedad
        """
        self.assertTrue(check_variety_R(self.C.B).passed)

    def test_v_c3_survives(self):
        """
        Test: v⊗c3 es no nulo en B y h⊗c3 con h ∈ W' se anula
        """
        C = self.C
        self.assertFalse(C.to_b(C.tensor(C.H.v, C.P.c(3))).is_zero())
        self.assertTrue(C.to_b(C.tensor(C.H.one, C.P.c(3))).is_zero())


class TestProperty1(unittest.TestCase):
    """
    Tests para la propiedad (1): S no se anula en B
    """

    def test_hall_element_shape(self):
        """
        Test: S usa 8 variables para n = 1 y 9 para n = 2
        """
        self.assertEqual(hall_construction_element(1).variables(), tuple(range(1, 9)))
        self.assertEqual(len(hall_construction_element(2).variables()), 9)
        self.assertEqual(hall_assignment_names(2)[9], "h2_a22")

    def test_n1(self):
        """
        Test: (1⊗c1)S^φ = v⊗c3 para n = 1
        """
        C = build_construction(1)
        result = verify_property1(C)
        self.assertTrue(result.ok, result.report.render())
        self.assertEqual(result.witness, C.to_b(C.tensor(C.H.v, C.P.c(3))))

    def test_n2(self):
        """
        Test: Ambiente de dimensión 156 y testigo no nulo para n = 2
        """
        C = build_construction(2)
        self.assertEqual(C.ambient.dim, 156)
        self.assertEqual(C.N_prime.dim, 3)
        result = verify_property1(C, check_p2=False)
        self.assertTrue(result.ok, result.report.render())
        self.assertIsNotNone(result.witness)


class TestProperty2(unittest.TestCase):
    """
    Tests para la propiedad (2) en subconjuntos de generadores
    """

    @classmethod
    def setUpClass(cls):
        cls.C = build_construction(1)
        cls.S = hall_construction_element(1)

    def test_subset_without_c1(self):
        """
        Test: Seis generadores sin 1⊗c1
        """
        self.assertTrue(spot_check_property2(self.C, range(1, 7), self.S))

    def test_full_set_fails(self):
        """
        Test: Con los 9 generadores S no se anula
        """
        self.assertFalse(spot_check_property2(self.C, range(9), self.S, enforce_bound=False))

    def test_subset_too_large(self):
        """
        Test: Más de s generadores
        """
        with self.assertRaises(SubsetTooLarge):
            spot_check_property2(self.C, range(7), self.S)

    def test_g_not_in_t(self):
        """
        Test: V[x1,x2] no es V-identidad de P2
        """
        with self.assertRaises(GNotInT):
            spot_check_property2(self.C, range(1, 7), OperatorElement.generator(1, 2))

    def test_table(self):
        """
        Test: Primeras filas de la tabla
        """
        subsets = default_subsets(self.C, 2)
        self.assertEqual(len(subsets), 2)
        self.assertEqual(len(default_subsets(self.C)), 84)
        rows = property2_table(self.C, self.S, subsets)
        self.assertEqual(len(rows), 2)
        for names, ok in rows:
            self.assertEqual(len(names), 6)
            self.assertTrue(ok, names)


if __name__ == '__main__':
    unittest.main(verbosity=2)
