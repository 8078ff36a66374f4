# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import json
import unittest

from kctesttools import TestCertifiedCyclic

# -- Test Data
import example

# -- SUT
from kazcert import errors
from kazcert.presets import preset_complex
from kazcert.oracle import builtin_module, parse_module, trivial_module
from kazcert.oracle import regular_module, reg0_module, sign_module
from kazcert.oracle import bar_cohomology, bar_homology
from kazcert.oracle import complex_cohomology, laplacian_spectrum
from kazcert.oracle import cayley_spectrum, cross_check, consistency_check
from kazcert.oracle import PASS, FAIL, SKIP


def verdicts(report, degree):
    return dict((n, v) for n, v, _ in report.results[degree].verdicts)


class TestModules(unittest.TestCase):

    def setUp(self):
        self.c = preset_complex(example.cyclic3.preset)
        self.ball = self.c.ball

    def test_dimensions(self):
        self.assertEqual(1, trivial_module(self.ball).dimension)
        self.assertEqual(3, regular_module(self.ball).dimension)
        self.assertEqual(2, reg0_module(self.ball).dimension)
        self.assertTrue(reg0_module(self.ball).is_unitary)

    def test_unknown_builtin(self):
        with self.assertRaises(errors.KazcertError):
            builtin_module('adjoint', self.ball)

    def test_relator_violation(self):
        for text in ('t = 2\n', 't = -1\n', 't = 0,1;1,0\n'):
            with self.assertRaises(errors.ModuleRelatorViolation):
                parse_module(text, self.ball)

    def test_parse_errors(self):
        for text in ('', 's = 1\n', 't 1\n', 't = 1,2\n', 't = x\n'):
            with self.assertRaises(errors.ParseError):
                parse_module(text, self.ball)

    def test_sign_module_file(self):
        ball = preset_complex('cyclic:2').ball
        V = parse_module(example.sign_module_z2, ball, name='sign-file')
        W = sign_module(ball)
        self.assertEqual(W.generator_matrices[0][0, 0],
                         V.generator_matrices[0][0, 0])

    def test_needs_the_whole_group(self):
        c = preset_complex(example.z.preset)
        with self.assertRaises(errors.KazcertError):
            trivial_module(c.ball)


class TestBarComplex(unittest.TestCase):

    def test_cyclic3(self):
        c = preset_complex(example.cyclic3.preset)
        p = c.presentation
        V = trivial_module(c.ball)
        self.assertEqual([1, 0, 0], [bar_cohomology(p, V, k)
                                     for k in range(3)])
        self.assertEqual([1, 0, 0], [bar_homology(p, V, k)
                                     for k in range(3)])
        W = regular_module(c.ball)
        self.assertEqual(1, bar_cohomology(p, W, 0))
        self.assertEqual(0, bar_cohomology(p, W, 1))
        U = reg0_module(c.ball)
        self.assertEqual(0, bar_cohomology(p, U, 0))

    def test_sign_of_s3(self):
        c = preset_complex('s3')
        V = sign_module(c.ball)
        self.assertEqual(0, bar_cohomology(c.presentation, V, 0))
        self.assertEqual(0, bar_cohomology(c.presentation, V, 1))

    def test_caps(self):
        c = preset_complex(example.cyclic3.preset)
        V = trivial_module(c.ball)
        with self.assertRaises(errors.CapExceeded):
            bar_cohomology(c.presentation, V, 2, cap=10)
        with self.assertRaises(errors.CapExceeded):
            bar_cohomology(c.presentation, V, 3)

    def test_infinite_group_refused(self):
        c = preset_complex(example.cyclic3.preset)
        V = trivial_module(c.ball)
        with self.assertRaises(errors.KazcertError):
            bar_cohomology(preset_complex('z').presentation, V, 0)


class TestSpectra(unittest.TestCase):

    def test_delta0_on_regular(self):
        c = preset_complex(example.cyclic3.preset)
        spectrum = laplacian_spectrum(c, regular_module(c.ball), 0)
        for want, got in zip(example.cyclic3.delta0_spectrum, spectrum):
            self.assertAlmostEqual(want, got)

    def test_cayley(self):
        c = preset_complex(example.cyclic3.preset)
        for want, got in zip(example.cyclic3.delta0_spectrum,
                             cayley_spectrum(c.ball)):
            self.assertAlmostEqual(want, got)

    def test_complex_cohomology(self):
        c = preset_complex(example.cyclic3.preset)
        V = trivial_module(c.ball)
        self.assertEqual(1, complex_cohomology(c, V, 0))
        self.assertEqual(0, complex_cohomology(c, V, 1))

    def test_not_unitary(self):
        ball = preset_complex('cyclic:2').ball
        V = parse_module('t = 1,1;0,-1\n', ball)
        self.assertFalse(V.is_unitary)
        with self.assertRaises(errors.NotUnitary):
            laplacian_spectrum(preset_complex('cyclic:2'), V, 0)


class TestCrossCheck(unittest.TestCase):

    def test_reg0_on_the_zoo(self):
        for name in example.oracle_presets:
            c = preset_complex(name, 3)
            report = cross_check(c, reg0_module(c.ball), [0, 1, 2])
            self.assertTrue(report.passed, report.format())
            for k in range(3):
                self.assertEqual(0, report.results[k].kernel, (name, k))
                self.assertEqual(PASS, verdicts(report, k)
                                 ['vanishing-implies-gap'])

    def test_trivial_module(self):
        c = preset_complex(example.cyclic3.preset, 3)
        report = cross_check(c, trivial_module(c.ball), [0, 1])
        self.assertTrue(report.passed, report.format())
        self.assertEqual(1, report.results[0].kernel)
        self.assertEqual(PASS, verdicts(report, 0)['kernel-equals-cohomology'])

    def test_regular_module_cayley(self):
        c = preset_complex(example.cyclic3.preset, 3)
        report = cross_check(c, regular_module(c.ball), [0])
        self.assertEqual(PASS, verdicts(report, 0)['cayley-spectrum'])

    def test_beyond_the_top(self):
        c = preset_complex(example.cyclic3.preset, 2)
        report = cross_check(c, reg0_module(c.ball), [3])
        self.assertFalse(report.passed)
        self.assertEqual(FAIL, verdicts(report, 0)['degree-in-complex'])

    def test_non_unitary_skips(self):
        c = preset_complex('cyclic:2', 3)
        V = parse_module('t = 1,1;0,-1\n', c.ball)
        report = cross_check(c, V, [0])
        self.assertEqual(SKIP, verdicts(report, 0)['kernel-equals-cohomology'])

    def test_outputs(self):
        c = preset_complex(example.cyclic3.preset, 3)
        report = cross_check(c, reg0_module(c.ball), [0, 1])
        doc = json.loads(report.to_json())
        self.assertTrue(doc['passed'])
        self.assertEqual([0, 1], [d['degree'] for d in doc['degrees']])
        self.assertIn('verdict: PASS', report.format())


class TestConsistency(TestCertifiedCyclic):

    def test_certified_eps_below_the_gap(self):
        ok, least = consistency_check(self.cert, self.complex)
        self.assertTrue(ok)
        self.assertAlmostEqual(3.0, least)

    def test_infinite_group_refused(self):
        with self.assertRaises(errors.KazcertError):
            consistency_check(self.cert, preset_complex('z'))

#
# -- end of file
