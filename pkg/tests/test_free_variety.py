#!/usr/bin/env python3
"""
RSym - Tests del álgebra libre
Desarrollado por: Vicente Alonso

Tests unitarios para la gramática de términos, la forma normal, la base
multilineal, la linealización y la descomposición por formas
"""

import os
import sys
import unittest

import numpy as np

# Añadir el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rsym.algebra_core import Algebra
from rsym.errors import AlgebraNotInVariety, DegreeCapExceeded, InvalidN, InvalidNormalWord, ParseError
from rsym.fields import QQ_FIELD, parse_field
from rsym.free_variety import (
    decompose,
    delta,
    evaluate,
    full_linearization,
    independence_certificate,
    low_degree_obstruction,
    mul,
    multilinear_basis,
    normal_form,
    random_term,
    split_heads,
    substitute,
    verify_component_identities,
)
from rsym.parser import parse_element, parse_operator, parse_term
from rsym.pn_family import make_pn
from rsym.terms import FreeElement, NormalWord, OperatorElement, RkTag, commutator_op
from rsym.verification import brute_force_basis_size, sample_p2_identities, soundness_check


def nf(text):
    return normal_form(parse_term(text), QQ_FIELD, None)


def word(*args, **kwargs):
    return FreeElement.word(NormalWord(*args, **kwargs))


class TestParser(unittest.TestCase):
    """
    Tests para las gramáticas de términos, elementos y operadores
    """

    def test_operator_sugar(self):
        """
        Test: R, L y V como azúcar sintáctico de productos
        """
        self.assertEqual(nf("x1 R[x2] L[x3]"), nf("x3 (x1 x2)"))
        self.assertEqual(nf("x1 V[x2,x3]"), nf("(x2 x1) x3"))

    def test_commutator_and_associator(self):
        """
        Test: [a,b] y (a,b,c) se expanden
        """
        self.assertEqual(nf("[x1,x2]"), nf("x1 x2 - x2 x1"))
        self.assertEqual(nf("(x1,x2,x3)"), nf("(x1 x2) x3 - x1 (x2 x3)"))

    def test_scalars(self):
        """
        Test: Prefijos escalares
        """
        self.assertEqual(nf("2 x2 x1"), word(1, l=2).scale(2))
        self.assertEqual(str(nf("3/2*x2 x1 - x2 x1")), "1/2*x1 L[x2]")

    def test_bad_term(self):
        """
        Test: Texto mal formado
        """
        with self.assertRaises(ParseError):
            parse_term("(x1 x2")
        with self.assertRaises(ParseError):
            parse_term("y1 x2")

    def test_parse_element(self):
        """
        Test: Elementos por nombre de base
        """
        P = make_pn(2)
        u = parse_element(P.alg, "3/2*a11 - c1")
        self.assertEqual(u, P.a(1, 1).scale(QQ_FIELD.parse("3/2")) - P.c(1))
        with self.assertRaises(ParseError):
            parse_element(P.alg, "z9")

    def test_parse_operator(self):
        """
        Test: Operadores de E0 con antisimetría
        """
        g = parse_operator("V[x1,x2] V[x3,x4] - V[x3,x4] V[x1,x2]")
        expected = commutator_op(OperatorElement.generator(1, 2), OperatorElement.generator(3, 4))
        self.assertEqual(g, expected)
        self.assertEqual(parse_operator("V[x2,x1]"), -OperatorElement.generator(1, 2))


class TestNormalForm(unittest.TestCase):
    """
    Tests para la reescritura a palabras normales
    """

    def test_linearized_identity(self):
        """
        Test: (x1 x2) x3 + (x3 x2) x1 = 0
        """
        self.assertTrue(nf("(x1 x2) x3 + (x3 x2) x1").is_zero())
        self.assertEqual(str(nf("(x1 x2) x3 + (x3 x2) x1")), "0")

    def test_right_nilpotency(self):
        """
        Test: ((x1 x2) x3) x4 = 0
        """
        self.assertTrue(nf("((x1 x2) x3) x4").is_zero())

    def test_basis_words(self):
        """
        Test: Formas ya normales
        """
        self.assertEqual(str(nf("x2 x1")), "x1 L[x2]")
        self.assertEqual(str(nf("x3 (x1 x2)")), "x1 R[x2] L[x3]")
        self.assertEqual(str(nf("x1 x1")), "x1 L[x1]")

    def test_defining_identities_vanish(self):
        """
        Test: Las identidades de la variedad se anulan en el álgebra libre
        """
        self.assertTrue(nf("(x1 x2) x1").is_zero())
        self.assertTrue(nf("[[x1,x2],x3]").is_zero())
        self.assertTrue(nf("(x1 x2)(x3 x4)").is_zero())
        self.assertTrue(nf("(x1,x2,x3) - (x1,x3,x2)").is_zero())

    def test_v_antisymmetry(self):
        """
        Test: V[x2,x1] = -V[x1,x2] y V[x2,x2] = 0
        """
        self.assertEqual(nf("x1 V[x3,x2]"), -nf("x1 V[x2,x3]"))
        self.assertTrue(nf("x1 V[x2,x2]").is_zero())

    def test_idempotent(self):
        """
        Test: normal_form(normal_form(t)) = normal_form(t)
        """
        rng = np.random.default_rng(7)
        for _ in range(60):
            t = random_term(rng, 8, 4)
            once = normal_form(t, QQ_FIELD, None)
            self.assertEqual(normal_form(once, QQ_FIELD, None), once)

    def test_degree_cap(self):
        """
        Test: Tope de grado
        """
        with self.assertRaises(DegreeCapExceeded):
            normal_form(parse_term("((x1 x2) x3) x4"), QQ_FIELD, 3)

    def test_normal_word_invariants(self):
        """
        Test: Palabras que no son normales
        """
        with self.assertRaises(InvalidNormalWord):
            NormalWord(2, r=1, l=3)
        with self.assertRaises(InvalidNormalWord):
            NormalWord(1, vs=((3, 2),))
        with self.assertRaises(InvalidNormalWord):
            NormalWord(1, r=2)

    def test_soundness_in_p2_and_p3(self):
        """
        Test: Términos y formas normales evalúan igual en P2 y P3
        """
        rng = np.random.default_rng(0)
        for field in (QQ_FIELD, parse_field("F3")):
            for n in (2, 3):
                report = soundness_check(make_pn(n, field), 40, 2, rng)
                self.assertTrue(report.passed, report.render())


class TestMultilinearBasis(unittest.TestCase):
    """
    Tests para la base multilineal y su independencia
    """

    def test_sizes(self):
        """
        Test: Tamaños 1, 2, 6, 18, 60
        """
        sizes = [len(multilinear_basis(m)) for m in range(1, 6)]
        self.assertEqual(sizes, [1, 2, 6, 18, 60])

    def test_brute_force(self):
        """
        Test: Enumeración directa de las formas
        """
        self.assertEqual(brute_force_basis_size(3), 6)
        self.assertEqual(brute_force_basis_size(4), 18)

    def test_multidegree(self):
        """
        Test: Cada palabra usa cada variable una vez
        """
        for w in multilinear_basis(4):
            self.assertEqual(sorted(w.multidegree().elements()), [1, 2, 3, 4])

    def test_independence(self):
        """
        Test: Rango completo de la matriz de evaluación
        """
        expected = {1: 1, 2: 2, 3: 6, 4: 18}
        for m, size in expected.items():
            certificate = independence_certificate(m)
            self.assertEqual(certificate.rank, size)
            self.assertTrue(certificate.valid)


class TestLinearization(unittest.TestCase):
    """
    Tests para Δ y la linealización completa
    """

    def setUp(self):
        self.y = parse_term("x5 x6")

    def test_delta_on_variables(self):
        """
        Test: x1 Δ_{x1}(y) = y y x2 Δ_{x1}(y) = 0
        """
        self.assertEqual(delta(parse_term("x1"), 1, 1, self.y), nf("x5 x6"))
        self.assertTrue(delta(parse_term("x2"), 1, 1, self.y).is_zero())
        self.assertEqual(delta(parse_term("x2"), 1, 0, self.y), nf("x2"))

    def test_delta_product_rule(self):
        """
        Test: (x1 x2) Δ_{x1}(y) = y x2
        """
        self.assertEqual(delta(parse_term("x1 x2"), 1, 1, self.y), nf("(x5 x6) x2"))

    def test_delta_linearity(self):
        """
        Test: Δ es lineal
        """
        f = nf("x1 V[x1,x2]")
        g = nf("x3 R[x1] L[x1]")
        left = delta(f.scale(3) + g, 1, 1, self.y)
        right = delta(f, 1, 1, self.y).scale(3) + delta(g, 1, 1, self.y)
        self.assertEqual(left, right)

    def test_full_linearization(self):
        """
        Test: x1 x1 linealizado en x1
        """
        result, fresh = full_linearization(parse_term("x1 x1"), 1)
        self.assertEqual(fresh, (2, 3))
        self.assertEqual(result, nf("x2 x3 + x3 x2"))
        back = substitute(result, {2: parse_term("x1"), 3: parse_term("x1")})
        self.assertEqual(back, nf("x1 x1").scale(2))

    def test_linear_input_unchanged(self):
        """
        Test: Elementos ya lineales en x_i
        """
        result, fresh = full_linearization(parse_term("x1 x2"), 1)
        self.assertEqual(fresh, (3,))
        self.assertEqual(result, nf("x3 x2"))
        result, fresh = full_linearization(nf("x1 V[x2,x3]"), 2)
        self.assertEqual(result, nf("x1 V[x4,x3]"))


class TestDecomposition(unittest.TestCase):
    """
    Tests para la separación por formas R0..R3
    """

    def test_tags(self):
        """
        Test: Clasificación de palabras
        """
        self.assertEqual(NormalWord(1, r=2, vs=((3, 4),)).tag, RkTag.R2)
        self.assertEqual(NormalWord(1, vs=((2, 3),), l=4).tag, RkTag.R1)
        self.assertEqual(NormalWord(1, l=2).tag, RkTag.LOW)
        self.assertEqual(NormalWord(1, vs=((2, 3),)).tag, RkTag.R0)
        self.assertEqual(NormalWord(1, r=2, vs=((3, 4),), l=5).tag, RkTag.R3)

    def test_direct_sum(self):
        """
        Test: Las componentes suman f y tienen soportes disjuntos
        """
        f = nf("x1 R[x2] V[x3,x4] + x1 V[x2,x3] L[x4] - x2 x1 + 2 x1 V[x2,x3]")
        parts = decompose(f)
        total = FreeElement(QQ_FIELD)
        seen = set()
        for part in parts:
            total = total + part
            words = set(part.terms)
            self.assertFalse(words & seen)
            seen |= words
        self.assertEqual(total, f)
        self.assertEqual(parts.low, nf("-x2 x1"))

    def test_shift_of_r1_r3(self):
        """
        Test: f x_{m+1} cae en R0 + R2 para f en R1 + R3
        """
        f = nf("x1 V[x2,x3] L[x4] + x1 R[x2] V[x3,x4] L[x5]")
        shifted = mul(f, FreeElement.variable(6), None)
        self.assertTrue(set(shifted.support_tags()) <= {RkTag.R0, RkTag.R2})

    def test_delta_of_r2(self):
        """
        Test: f Δ_i(x_{m+1} x_{m+2}) cae en R0 para f en R2
        """
        f = nf("x1 R[x2] V[x3,x4]")
        y = mul(FreeElement.variable(5), FreeElement.variable(6), None)
        for i in range(1, 5):
            result = delta(f, i, 1, y, degree_cap=None)
            self.assertTrue(set(result.support_tags()) <= {RkTag.R0})

    def test_split_heads(self):
        """
        Test: Σ x_i g_i se separa por cabeza
        """
        f = nf("x1 V[x2,x3] - x2 V[x1,x3] V[x1,x2]")
        heads = split_heads(f)
        self.assertEqual(heads[1], OperatorElement.generator(2, 3))
        self.assertEqual(heads[2], -OperatorElement.from_pairs([(1, 3), (1, 2)]))
        with self.assertRaises(InvalidNormalWord):
            split_heads(nf("x2 x1"))


class TestEvaluation(unittest.TestCase):
    """
    Tests para la evaluación de palabras normales
    """

    def test_certificate_substitution(self):
        """
        Test: x1 R[x2] V[x3,x4] con x1=d12, x2=-b12, x3=a23, x4=-b23 da c3
        """
        P = make_pn(3)
        value = evaluate(
            word(1, r=2, vs=((3, 4),)),
            P.alg,
            {1: P.d(1, 2), 2: -P.b(1, 2), 3: P.a(2, 3), 4: -P.b(2, 3)},
        )
        self.assertEqual(value, P.c(3))

    def test_zero_assignment(self):
        """
        Test: La asignación nula da 0
        """
        P = make_pn(2)
        f = nf("x1 R[x2] L[x3] + x1 V[x2,x3]")
        zero = P.alg.zero()
        self.assertTrue(evaluate(f, P.alg, {1: zero, 2: zero, 3: zero}).is_zero())

    def test_outside_variety(self):
        """
        Test: Formas normales en un álgebra fuera de la variedad
        """
        idempotent = Algebra(QQ_FIELD, ["e"], {(0, 0): {0: 1}}, name="E")
        with self.assertRaises(AlgebraNotInVariety):
            evaluate(nf("x2 x1"), idempotent, {1: idempotent.basis(0), 2: idempotent.basis(0)})


class TestComponents(unittest.TestCase):
    """
    Tests para la parte de grado bajo y las componentes f0..f3
    """

    def setUp(self):
        self.P = make_pn(2)

    def test_low_degree_obstruction(self):
        """
        Test: x1 x2 tiene una sustitución que no la anula
        """
        f = nf("x1 x2")
        assignment = low_degree_obstruction(f, self.P)
        self.assertIsNotNone(assignment)
        self.assertFalse(evaluate(f, self.P.alg, assignment).is_zero())

    def test_no_low_part(self):
        """
        Test: Sin parte de grado bajo no hay obstrucción
        """
        self.assertIsNone(low_degree_obstruction(word(1, r=2, vs=((3, 4),)), self.P))
        with self.assertRaises(InvalidN):
            low_degree_obstruction(nf("x1 x2"), make_pn(1))

    def test_component_identities(self):
        """
        Test: Cada componente de una identidad de P2 es identidad
        """
        f = dict(sample_p2_identities())["mixed"]
        report = verify_component_identities(f, self.P)
        self.assertTrue(report.passed, report.render())
        self.assertEqual(report.get("components.P2.Q.r0").status, "pass")
        self.assertEqual(report.get("components.P2.Q.r2").status, "pass")

    def test_component_premise(self):
        """
        Test: Si f no es identidad la comprobación se omite
        """
        report = verify_component_identities(nf("x1 x2"), self.P)
        self.assertEqual(report.get("components.P2.Q.premise").status, "skip")


if __name__ == '__main__':
    unittest.main(verbosity=2)
