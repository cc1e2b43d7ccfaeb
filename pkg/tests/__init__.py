#!/usr/bin/env python3
"""
RSym - Tests
Desarrollado por: Vicente Alonso

Módulo de tests para RSym
"""

# Tests disponibles
from .test_algebra_core import TestAlgebraConstruction, TestFields, TestProducts, TestSubspaces
from .test_config_cli import TestCLI, TestSettings
from .test_counterexample import TestConstruction, TestProperty1, TestProperty2, TestSquarefreeAlgebra
from .test_free_variety import (
    TestDecomposition,
    TestEvaluation,
    TestLinearization,
    TestMultilinearBasis,
    TestNormalForm,
    TestComponents,
    TestParser,
)
from .test_operator_engine import TestE0, TestEvalOperator, TestHall, TestIdealMembership, TestReduction
from .test_pn_family import TestIdentities, TestPnConstruction, TestStructure, TestVariety
from .test_verification import (
    TestBasisAndSoundness,
    TestHallAndMutations,
    TestReductionReport,
    TestReports,
    TestFullBattery,
)

__all__ = [
    'TestFields',
    'TestAlgebraConstruction',
    'TestProducts',
    'TestSubspaces',
    'TestSettings',
    'TestCLI',
    'TestSquarefreeAlgebra',
    'TestConstruction',
    'TestProperty1',
    'TestProperty2',
    'TestParser',
    'TestNormalForm',
    'TestMultilinearBasis',
    'TestLinearization',
    'TestDecomposition',
    'TestEvaluation',
    'TestComponents',
    'TestEvalOperator',
    'TestE0',
    'TestHall',
    'TestReduction',
    'TestIdealMembership',
    'TestPnConstruction',
    'TestVariety',
    'TestIdentities',
    'TestStructure',
    'TestReports',
    'TestBasisAndSoundness',
    'TestReductionReport',
    'TestHallAndMutations',
    'TestFullBattery',
]
