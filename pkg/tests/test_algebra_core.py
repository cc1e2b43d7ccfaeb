#!/usr/bin/env python3
"""
RSym - Tests del núcleo de álgebras
Desarrollado por: Vicente Alonso

Tests unitarios para cuerpos, álgebras, subespacios, cocientes y tensores
"""

import json
import os
import sys
import tempfile
import unittest

# Añadir el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rsym.algebra_core import (
    Algebra,
    Subspace,
    associator,
    commutator,
    dump_algebra,
    field_algebra,
    ideal,
    is_ideal,
    left_annihilator,
    make_algebra,
    quotient,
    save_algebra,
    subalgebra,
    tensor,
    v_op,
)
from rsym.errors import (
    DuplicateBasisName,
    IndexOutOfRange,
    LeftFactorNotCommutativeAssociative,
    MixedAlgebras,
    NonPrimeModulus,
    NotAnIdeal,
    ParseError,
)
from rsym.fields import QQ_FIELD, parse_field, parse_field_list
from rsym.identities import check_variety_R
from rsym.pn_family import make_pn


class TestFields(unittest.TestCase):
    """
    Tests para la interpretación de cuerpos y escalares
    """

    def test_parse_tags(self):
        """
        Test: Etiquetas de cuerpo reconocidas
        """
        self.assertEqual(parse_field("Q").characteristic, 0)
        self.assertEqual(parse_field("F2").characteristic, 2)
        self.assertEqual(parse_field("Fp:7").characteristic, 7)
        self.assertEqual(parse_field("GF(3)").tag, "Fp:3")
        self.assertEqual(len(parse_field_list(["Q,F2", "F3"])), 3)

    def test_non_prime_modulus(self):
        """
        Test: Módulo no primo rechazado
        """
        with self.assertRaises(NonPrimeModulus):
            parse_field("Fp:4")

    def test_bad_tag(self):
        """
        Test: Etiqueta desconocida
        """
        with self.assertRaises(ParseError):
            parse_field("R")

    def test_scalar_parsing(self):
        """
        Test: Literales racionales y reducción módulo p
        """
        F3 = parse_field("F3")
        self.assertEqual(F3.parse("4"), F3.one)
        self.assertEqual(QQ_FIELD.format(QQ_FIELD.parse("3/2")), "3/2")
        with self.assertRaises(ParseError):
            F3.parse("1/3")


class TestAlgebraConstruction(unittest.TestCase):
    """
    Tests para make_algebra y la validación de especificaciones
    """

    def test_pn_spec_roundtrip(self):
        """
        Test: La especificación de P2 reconstruye un álgebra de dimensión 18
        """
        P2 = make_pn(2)
        spec = dump_algebra(P2.alg)
        rebuilt = make_algebra(spec)
        self.assertEqual(rebuilt.dim, 18)
        self.assertEqual(rebuilt.sc, P2.alg.sc)

    def test_load_from_file(self):
        """
        Test: Carga idempotente desde archivo
        """
        P1 = make_pn(1)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "p1.json")
            save_algebra(P1.alg, path)
            first = make_algebra(path)
            second = make_algebra(path)
        self.assertEqual(first.basis_names, second.basis_names)
        self.assertEqual(first.sc, second.sc)

    def test_zero_algebra(self):
        """
        Test: Especificación sin productos
        """
        alg = make_algebra({"field": "Q", "basis": ["u", "v", "w"], "products": []})
        self.assertEqual(alg.dim, 3)
        self.assertTrue(alg.is_zero_algebra())

    def test_index_out_of_range(self):
        """
        Test: Índice de resultado igual a la dimensión
        """
        spec = {"basis": ["u", "v", "w"], "products": [[0, 0, [[1, 3]]]]}
        with self.assertRaises(IndexOutOfRange):
            make_algebra(spec)

    def test_duplicate_names(self):
        """
        Test: Nombres de base repetidos
        """
        with self.assertRaises(DuplicateBasisName):
            make_algebra({"basis": ["u", "u"], "products": []})

    def test_bad_json(self):
        """
        Test: Texto JSON mal formado
        """
        with self.assertRaises(ParseError):
            make_algebra('{"basis": [')

    def test_malformed_product_entry(self):
        """
        Test: Entrada de producto sin factores ni coeficientes
        """
        with self.assertRaises(ParseError):
            make_algebra({"basis": ["u"], "products": [["u"]]})

    def test_spec_is_json_serializable(self):
        """
        Test: dump_algebra produce JSON válido
        """
        text = json.dumps(dump_algebra(make_pn(1).alg))
        self.assertIn("a11", text)


class TestProducts(unittest.TestCase):
    """
    Tests para productos y operadores de multiplicación en P2
    """

    def setUp(self):
        self.P = make_pn(2)

    def test_table_products(self):
        """
        Test: a11 c1 = d11, d11 b11 = -c1, c1 a11 = 0
        """
        P = self.P
        self.assertEqual(P.a(1, 1) * P.c(1), P.d(1, 1))
        self.assertEqual(P.d(1, 1) * P.b(1, 1), -P.c(1))
        self.assertTrue((P.c(1) * P.a(1, 1)).is_zero())

    def test_bilinearity(self):
        """
        Test: Linealidad en el primer argumento
        """
        P = self.P
        u = P.a(1, 1).scale(3) + P.b(1, 2)
        w = P.c(1)
        self.assertEqual(u * w, (P.a(1, 1) * w).scale(3) + P.b(1, 2) * w)

    def test_v_operator_moves_c(self):
        """
        Test: c1 V(a12, -b12) = c2 y c1 V(b12, a12) = c2
        """
        P = self.P
        self.assertEqual(P.c(1) @ v_op(P.alg, P.a(1, 2), -P.b(1, 2)), P.c(2))
        self.assertEqual(P.c(1) @ v_op(P.alg, P.b(1, 2), P.a(1, 2)), P.c(2))

    def test_v_diagonal_vanishes(self):
        """
        Test: V(x, x) = 0
        """
        P = self.P
        x = P.a(1, 2) + P.b(2, 1).scale(2) + P.c(1)
        self.assertTrue(v_op(P.alg, x, x).is_zero())

    def test_associator_symmetry(self):
        """
        Test: (a,b,c) = (a,c,b) en un caso de la tabla
        """
        P = self.P
        a, b, c = P.a(1, 1), P.c(1), P.b(1, 1)
        self.assertTrue((associator(P.alg, a, b, c) - associator(P.alg, a, c, b)).is_zero())

    def test_commutators(self):
        """
        Test: [u,u] = 0 y [a11, e11] = 0
        """
        P = self.P
        u = P.a(2, 1) + P.d(1, 2)
        self.assertTrue(commutator(P.alg, u, u).is_zero())
        self.assertTrue(commutator(P.alg, P.a(1, 1), P.e(1, 1)).is_zero())

    def test_mixed_algebras(self):
        """
        Test: Operandos de álgebras distintas
        """
        other = make_pn(1)
        with self.assertRaises(MixedAlgebras):
            _ = self.P.a(1, 1) + other.a(1, 1)


class TestSubspaces(unittest.TestCase):
    """
    Tests para aniquiladores, clausuras, cocientes y tensores
    """

    def test_left_annihilator(self):
        """
        Test: Ann_l P_n = C_n
        """
        for n in (1, 2, 3):
            P = make_pn(n)
            ann = left_annihilator(P.alg)
            self.assertEqual(ann, P.C)
            self.assertEqual(ann.dim, n)

    def test_zero_algebra_annihilator(self):
        """
        Test: En el álgebra nula el aniquilador es todo
        """
        alg = Algebra(QQ_FIELD, ["u", "v", "w"])
        self.assertEqual(left_annihilator(alg).dim, 3)

    def test_subalgebra_closure(self):
        """
        Test: subálgebra generada por a11 y c1
        """
        P = make_pn(2)
        sub = subalgebra(P.alg, [P.a(1, 1), P.c(1)])
        self.assertEqual(sub, Subspace.span(P.alg, [P.a(1, 1), P.c(1), P.d(1, 1)]))
        self.assertTrue(subalgebra(P.alg, []).is_zero())

    def test_ideal_closure(self):
        """
        Test: El ideal generado por c1 contiene d11 y e11
        """
        P = make_pn(2)
        I = ideal(P.alg, [P.c(1)])
        self.assertTrue(I.contains(P.d(1, 1)))
        self.assertTrue(I.contains(P.e(1, 1)))
        self.assertTrue(is_ideal(P.alg, I))

    def test_quotient_by_square(self):
        """
        Test: P2 / D2 tiene dimensión 8 y producto nulo
        """
        P = make_pn(2)
        Q, projection = quotient(P.alg, P.D)
        self.assertEqual(Q.dim, 8)
        self.assertTrue(Q.is_zero_algebra())
        self.assertTrue(projection(P.c(1)).is_zero())

    def test_quotient_by_zero(self):
        """
        Test: A / 0 = A
        """
        P = make_pn(1)
        Q, _ = quotient(P.alg, Subspace(P.alg))
        self.assertEqual(Q.dim, P.dim)
        self.assertEqual(Q.sc, P.alg.sc)

    def test_quotient_requires_ideal(self):
        """
        Test: Un subespacio que no es ideal
        """
        P = make_pn(1)
        with self.assertRaises(NotAnIdeal):
            quotient(P.alg, Subspace.of_basis(P.alg, ["a11"]))

    def test_tensor_with_field(self):
        """
        Test: F ⊗ A tiene la misma tabla que A
        """
        P = make_pn(1)
        T = tensor(field_algebra(), P.alg)
        self.assertEqual(T.dim, P.dim)
        self.assertEqual(T.sc, P.alg.sc)

    def test_tensor_requires_commutative_left(self):
        """
        Test: El factor izquierdo debe ser conmutativo y asociativo
        """
        P = make_pn(1)
        with self.assertRaises(LeftFactorNotCommutativeAssociative):
            tensor(P.alg, P.alg)

    def test_tensor_stays_in_variety(self):
        """
        Test: H'⊗P3 (n=1) tiene dimensión 78 y está en la variedad
        """
        from rsym.counterexample import SquarefreeAlgebra

        H = SquarefreeAlgebra(1)
        T = tensor(H.alg, make_pn(3).alg)
        self.assertEqual(T.dim, 78)
        self.assertTrue(check_variety_R(T).passed)


if __name__ == '__main__':
    unittest.main(verbosity=2)
