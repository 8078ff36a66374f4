# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import unittest
from argparse import Namespace
from unittest import mock

import numpy as np

from kctesttools import fast_solver

# -- Test Data
import example

# -- SUT
from kazcert import errors
from kazcert.presets import preset_complex
from kazcert.encoder import SOSMode, OZAWA, BRACKET, encode
from kazcert.encoder import SOSProblem, Constraint
from kazcert.solver import SolverConfig, solve, measure
from kazcert.solver import export_solution, import_solution
from kazcert.solver import CONVERGED, DIVERGED, DEGENERATE, MAXITER


class TestSolverConfig(unittest.TestCase):

    def test_defaults(self):
        cfg = SolverConfig()
        self.assertEqual(50000, cfg.max_iter)
        self.assertEqual(0, cfg.seed)

    def test_refusals(self):
        for kwargs in (dict(tol=0), dict(alpha=2.0), dict(alpha=0.5),
                       dict(rho=-1.0), dict(max_iter=0)):
            with self.assertRaises(ValueError):
                SolverConfig(**kwargs)
        with self.assertRaises(TypeError):
            SolverConfig(frobnicate=1)

    def test_params(self):
        params = SolverConfig(seed=4).params()
        self.assertEqual(4, params['solver-seed'])
        self.assertIn('solver-max-iter', params)

    def test_fromconfig(self):
        config = Namespace(solver_max_iter=7, solver_tol=None)
        cfg = SolverConfig.fromconfig(config)
        self.assertEqual(7, cfg.max_iter)
        self.assertEqual(SolverConfig.fields['tol'], cfg.tol)


class TestSolveCyclic3(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        c = preset_complex(example.cyclic3.preset)
        cls.problem = encode(c, SOSMode(OZAWA))
        cls.solution = solve(cls.problem, SolverConfig(**fast_solver))

    def test_converged_to_the_optimum(self):
        s = self.solution
        self.assertEqual(CONVERGED, s.status)
        self.assertAlmostEqual(float(example.cyclic3.ozawa_optimum),
                               s.epsilon, places=5)
        self.assertEqual(self.problem.gram_size, s.gram_size)

    def test_residuals_recomputed(self):
        residual, violation = measure(self.problem, self.solution.gram,
                                      self.solution.epsilon)
        self.assertEqual(residual, self.solution.residual)
        self.assertLess(violation, 1e-8)

    def test_report(self):
        report = self.solution.report()
        self.assertEqual(CONVERGED, report['status'])
        self.assertIn('psd-violation', report)

    def test_iteration_limit(self):
        s = solve(self.problem, SolverConfig(max_iter=1))
        self.assertEqual(MAXITER, s.status)
        self.assertEqual(1, s.iterations)

    def test_dense_limit(self):
        with self.assertRaises(errors.CapExceeded):
            solve(self.problem, SolverConfig(max_gram=1))

    def test_bracket(self):
        p = encode(preset_complex(example.cyclic3.preset), SOSMode(BRACKET))
        s = solve(p, SolverConfig(**fast_solver))
        self.assertEqual(CONVERGED, s.status)
        self.assertGreaterEqual(s.epsilon,
                                float(example.cyclic3.bracket_floor) - 1e-6)


class TestSolverInvariants(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        c = preset_complex(example.cyclic3.preset)
        cls.problem = encode(c, SOSMode(OZAWA))
        cls.solution = solve(cls.problem, SolverConfig(**fast_solver))

    def scaled(self, factor):
        p = self.problem
        constraints = [Constraint(c.key, c.coeffs, factor * c.c0, c.c1)
                       for c in p.constraints]
        return SOSProblem(p.mode, p.basis, constraints, factor * p.cap,
                          p.fingerprint, p.convention)

    def test_scale_equivariance(self):
        s = solve(self.scaled(4), SolverConfig(**fast_solver))
        self.assertEqual(CONVERGED, s.status)
        self.assertAlmostEqual(4 * self.solution.epsilon, s.epsilon,
                               places=5)
        self.assertTrue(np.allclose(4 * self.solution.gram, s.gram,
                                    atol=1e-5))

    def test_same_seed_same_solution(self):
        s = solve(self.problem, SolverConfig(**fast_solver))
        self.assertEqual(self.solution.iterations, s.iterations)
        self.assertEqual(self.solution.epsilon, s.epsilon)
        self.assertTrue(np.array_equal(self.solution.gram, s.gram))

    def test_recomputed_residual_overrides_convergence(self):
        tol = fast_solver['tol']
        with mock.patch('kazcert.solver.measure',
                        return_value=(20 * tol, 0.0)):
            s = solve(self.problem, SolverConfig(**fast_solver))
        self.assertEqual(MAXITER, s.status)
        self.assertEqual(20 * tol, s.residual)
        with mock.patch('kazcert.solver.measure',
                        return_value=(5 * tol, 0.0)):
            s = solve(self.problem, SolverConfig(**fast_solver))
        self.assertEqual(CONVERGED, s.status)


class TestDegenerate(unittest.TestCase):

    def test_trivial_group(self):
        p = encode(preset_complex('trivial'), SOSMode(OZAWA))
        self.assertTrue(p.degenerate)
        s = solve(p)
        self.assertEqual(DEGENERATE, s.status)
        self.assertEqual(0, s.gram_size)


class TestSolutionFiles(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        c = preset_complex(example.cyclic3.preset)
        cls.problem = encode(c, SOSMode(OZAWA))

    def test_exact_optimum(self):
        s = import_solution(self.problem, 'epsilon 3\n0\n0\n0\n')
        self.assertEqual(CONVERGED, s.status)
        self.assertEqual(0.0, s.residual)

    def test_round_trip(self):
        s = solve(self.problem, SolverConfig(**fast_solver))
        t = import_solution(self.problem, export_solution(s))
        self.assertEqual(s.epsilon, t.epsilon)
        self.assertTrue(np.allclose(s.gram, t.gram))
        self.assertEqual(s.status, t.status)

    def test_comments_and_dimension(self):
        text = '# from elsewhere\nepsilon 3\ndimension 2\n0 0\n0\n'
        s = import_solution(self.problem, text)
        self.assertEqual(3.0, s.epsilon)

    def test_negative_gram(self):
        s = import_solution(self.problem, 'epsilon 3\n-1\n0\n-1\n')
        self.assertEqual(DIVERGED, s.status)
        self.assertAlmostEqual(1.0, s.psd_violation)

    def test_parse_errors(self):
        for text in ('', 'eps 3\n', 'epsilon x\n', 'epsilon 1\n0\n',
                     'epsilon 1\n0\nzero\n0\n', 'epsilon 1\ndimension x\n'):
            with self.assertRaises(errors.ParseError):
                import_solution(self.problem, text)

    def test_dimension_errors(self):
        for text in ('epsilon 1\ndimension 5\n', 'epsilon 1\n0\n0\n0\n0\n'):
            with self.assertRaises(errors.DimensionMismatch):
                import_solution(self.problem, text)

#
# -- end of file
