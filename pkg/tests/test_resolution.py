# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import unittest
from fractions import Fraction

# -- Test Data
import example

# -- SUT
from kazcert import errors
from kazcert.ball import enumerate_ball, FULL
from kazcert.presentation import parse_presentation
from kazcert.presets import preset_complex
from kazcert.groupring import GroupRingElement, GroupRingMatrix
from kazcert.groupring import mat_mul, mat_star, mat_lift, unit, zero
from kazcert.groupring import augmentation
from kazcert.resolution import fox_derivative, build_presentation_complex
from kazcert.resolution import cyclic_resolution, attach_user_differential
from kazcert.resolution import laplacian, delta0, check_complex
from kazcert.resolution import extend_finite_resolution
from kazcert.resolution import serialize_complex, parse_complex
from kazcert.resolution import convention_string


class TestFoxDerivative(unittest.TestCase):

    def test_commutator(self):
        p = parse_presentation(example.free2.text)
        ball = enumerate_ball(p, 2)
        w = p.word('a b a^-1 b^-1')
        # -- d/da (a b a^-1 b^-1) = 1 - a b a^-1, which needs radius 3
        aba = ball.find(p.backend.evaluate(p.word('a b a^-1').letters))
        self.assertIsNone(aba)
        wide = enumerate_ball(p, 3)
        da = fox_derivative(w, 0, wide)
        aba = wide.find(p.backend.evaluate(p.word('a b a^-1').letters))
        self.assertEqual(GroupRingElement(wide, {0: 1, aba: -1}), da)

    def test_power(self):
        p = parse_presentation(example.cyclic3.text)
        ball = enumerate_ball(p, FULL)
        d = fox_derivative(p.relators[0], 0, ball)
        # -- d/dt t^3 = 1 + t + t^2, the norm element
        self.assertEqual(GroupRingElement(ball, {0: 1, 1: 1, 2: 1}), d)


class TestComplexes(unittest.TestCase):

    def test_identities_on_the_zoo(self):
        for name in example.identity_presets:
            c = preset_complex(name, 3 if name.startswith(('cyclic', 's3'))
                               else 2)
            report = check_complex(c)
            self.assertTrue(report.ok, (name, report.format()))

    def test_presentation_complex_shape(self):
        c = preset_complex('z2')
        self.assertEqual([1, 2, 1], c.ranks)
        self.assertEqual(1, c.exact_through)
        self.assertFalse(c.complete)
        free = preset_complex('free:2')
        self.assertEqual([1, 2], free.ranks)
        self.assertTrue(free.complete)

    def test_cyclic_resolution(self):
        c = preset_complex('cyclic:4', 4)
        self.assertEqual([1] * 5, c.ranks)
        self.assertEqual(3, c.exact_through)
        norm = c.differentials[2].entries[0][0]
        self.assertEqual(Fraction(4), sum(norm.coeffs.values()))

    def test_trivial_group(self):
        c = preset_complex('trivial', 2)
        self.assertTrue(check_complex(c).ok)
        self.assertEqual(Fraction(0), sum(c.differentials[1]
                                          .entries[0][0].coeffs.values()))

    def test_cyclic_needs_whole_group(self):
        p = parse_presentation(example.cyclic3.text)
        ball = enumerate_ball(p, 0)
        with self.assertRaises(errors.KazcertError):
            cyclic_resolution(3, 2, ball)

    def test_radius_too_small(self):
        p = parse_presentation(example.z2.text)
        with self.assertRaises(errors.RadiusTooSmall):
            build_presentation_complex(p, enumerate_ball(p, 1))

    def test_extend_s3(self):
        c = preset_complex('s3', 3)
        self.assertEqual(3, c.top)
        self.assertEqual(2, c.exact_through)
        self.assertTrue(check_complex(c).ok)

    def test_extend_needs_finite_group(self):
        with self.assertRaises(errors.KazcertError):
            extend_finite_resolution(preset_complex('z2'), 3)


class TestAttachUserDifferential(unittest.TestCase):

    def setUp(self):
        self.c = preset_complex('cyclic:3', 1)
        self.ball = self.c.ball

    def test_norm_is_accepted(self):
        norm = GroupRingMatrix(self.ball, [[GroupRingElement(
            self.ball, {0: 1, 1: 1, 2: 1})]])
        c = attach_user_differential(self.c, 2, norm)
        self.assertEqual(2, c.top)
        self.assertEqual(0, c.exact_through)
        c = attach_user_differential(self.c, 2, norm, exact=True)
        self.assertEqual(1, c.exact_through)

    def test_non_complex_refused(self):
        bad = GroupRingMatrix(self.ball, [[unit(self.ball)]])
        with self.assertRaises(errors.NotAComplex) as ctx:
            attach_user_differential(self.c, 2, bad)
        self.assertEqual(1, ctx.exception.degree)

    def test_shapes(self):
        with self.assertRaises(errors.ShapeMismatch):
            attach_user_differential(self.c, 2, GroupRingMatrix(
                self.ball, [[zero(self.ball)], [zero(self.ball)]]))
        with self.assertRaises(errors.ShapeMismatch):
            attach_user_differential(self.c, 5, GroupRingMatrix(
                self.ball, [[zero(self.ball)]]))


class TestLaplacian(unittest.TestCase):

    def test_delta0_of_cyclic3(self):
        c = preset_complex('cyclic:3')
        d = delta0(c)
        self.assertEqual(GroupRingElement(c.ball, {0: 2, 1: -1, 2: -1}), d)

    def test_delta0_of_free2(self):
        c = preset_complex('free:2')
        d = delta0(c)
        self.assertEqual(Fraction(4), d.coefficient(0))
        self.assertEqual(Fraction(0), sum(d.coeffs.values()))
        self.assertEqual(1, d.radius())

    def test_delta1_of_cyclic3(self):
        # -- (2 - t - t^2) + 3 (1 + t + t^2), since N* = N and N^2 = 3N
        c = preset_complex('cyclic:3')
        d1 = laplacian(c, 1).matrix.entries[0][0]
        self.assertEqual(GroupRingElement(c.ball, {0: 5, 1: 2, 2: 2}), d1)

    def test_cyclic_periodicity(self):
        for name in ('cyclic:3', 'cyclic:4'):
            c = preset_complex(name, 5)
            for k in (1, 2):
                self.assertEqual(laplacian(c, k).matrix,
                                 laplacian(c, k + 2).matrix, (name, k))

    def test_delta0_is_augmented(self):
        for name in ('cyclic:3', 's3', 'z2', 'free:2'):
            c = preset_complex(name)
            self.assertEqual(Fraction(0), augmentation(delta0(c)), name)
            d1 = c.boundary(1)
            for j in range(d1.cols):
                self.assertEqual(Fraction(0),
                                 augmentation(d1.entries[0][j]), (name, j))

    def test_self_adjoint(self):
        for name in ('cyclic:3', 's3', 'z2'):
            c = preset_complex(name)
            for k in range(c.top + 1):
                L = laplacian(c, k).matrix
                self.assertEqual(L, mat_star(L), (name, k))

    def test_chain_map_identity(self):
        # -- M_k Delta_{k-1} = Delta_k M_k
        for name in ('cyclic:4', 's3', 'z2'):
            c = preset_complex(name, 3 if name != 'z2' else 2)
            ball = c.product_ball(factors=3)
            for k in range(1, c.top):
                M = mat_lift(c.boundary(k), ball)
                lower = mat_lift(laplacian(c, k - 1, ball).matrix, ball)
                upper = mat_lift(laplacian(c, k, ball).matrix, ball)
                self.assertEqual(mat_mul(M, lower, ball),
                                 mat_mul(upper, M, ball), (name, k))

    def test_truncated_flag(self):
        c = preset_complex('cyclic:3', 2)
        self.assertTrue(laplacian(c, 2).truncated)
        self.assertFalse(laplacian(c, 1).truncated)
        with self.assertRaises(errors.TruncatedDegree):
            laplacian(c, 3)


class TestSerialization(unittest.TestCase):

    def test_round_trip_keeps_fingerprint(self):
        for name in ('cyclic:3', 's3', 'z2', 'free:2'):
            c = preset_complex(name)
            d = parse_complex(serialize_complex(c))
            self.assertEqual(c.fingerprint, d.fingerprint)
            self.assertEqual(c.ranks, d.ranks)
            self.assertEqual(c.exact_through, d.exact_through)

    def test_fingerprints_differ(self):
        a = preset_complex('cyclic:3', 2)
        b = preset_complex('cyclic:3', 3)
        self.assertNotEqual(a.fingerprint, b.fingerprint)

    def test_convention(self):
        c = preset_complex('z2')
        self.assertIn('S = a b', convention_string(c.presentation))

    def test_garbage(self):
        for text in ('', '[complex]\nnonsense\n', 'd 1 0 0 1*g[0]\n'):
            with self.assertRaises(errors.ParseError):
                parse_complex(text)

#
# -- end of file
