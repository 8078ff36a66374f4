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
from kazcert.encoder import SOSMode, OZAWA, BRACKET, PAREN, IDEAL, GROUP
from kazcert.encoder import build_support_basis, encode, interior_problem
from kazcert.encoder import export_sdpa, import_sdpa, product_terms


def gram_from_unit(problem):
    N = problem.gram_size
    gram = [[Fraction(0)] * N for _ in range(N)]
    for (a, b), v in problem.order_unit.items():
        gram[a][b] = gram[b][a] = v
    return gram


class TestSOSMode(unittest.TestCase):

    def test_names(self):
        self.assertEqual('ozawa', SOSMode(OZAWA, 5).name)
        self.assertEqual(0, SOSMode(OZAWA, 5).degree)
        self.assertEqual('bracket(1)', SOSMode(BRACKET).name)
        self.assertEqual('paren(2)', SOSMode(PAREN, 2).name)

    def test_equations(self):
        self.assertEqual('Δ₀(Δ₀ − 5/2) = Σᵢ pivotᵢ yᵢ*yᵢ',
                         SOSMode(OZAWA).equation(Fraction(5, 2)))
        self.assertTrue(SOSMode(BRACKET, 12).equation(1).startswith(
            'Δ₁₂ − 1 ='))
        self.assertTrue(SOSMode(PAREN, 1).equation(1).startswith(
            'Δ₀(Δ₁ − 1)Δ₀'))

    def test_bad_modes(self):
        for kind, degree in (('nosuch', 1), (BRACKET, 0), (PAREN, 0)):
            with self.assertRaises(errors.KazcertError):
                SOSMode(kind, degree)
        self.assertEqual(0, SOSMode(PAREN, 0, allow_paren_zero=True).degree)

    def test_basis_kinds(self):
        self.assertEqual(IDEAL, SOSMode(OZAWA).basis_kind)
        self.assertEqual(IDEAL, SOSMode(PAREN, 1).basis_kind)
        self.assertEqual(GROUP, SOSMode(BRACKET, 1).basis_kind)


class TestSupportBasis(unittest.TestCase):

    def setUp(self):
        p = parse_presentation(example.free2.text)
        self.ball = enumerate_ball(p, 2)

    def test_ideal_drops_identity(self):
        basis = build_support_basis(self.ball, SOSMode(OZAWA), 1)
        self.assertEqual(16, len(basis))
        self.assertNotIn((0, 0), list(basis))

    def test_group_rows(self):
        basis = build_support_basis(self.ball, SOSMode(BRACKET), 2,
                                    half_radius=1)
        self.assertEqual(10, len(basis))
        # -- row major: every element of row 0 before row 1
        self.assertEqual([0] * 5 + [1] * 5, [j for _, j in basis])


class TestEncodeCyclic3(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.c = preset_complex(example.cyclic3.preset)
        cls.problem = encode(cls.c, SOSMode(OZAWA))

    def test_shape(self):
        p = self.problem
        self.assertEqual(2, p.gram_size)
        self.assertEqual(1, p.half_radius)
        self.assertFalse(p.degenerate)
        self.assertEqual(self.c.fingerprint, p.fingerprint)
        self.assertEqual(self.c.convention, p.convention)

    def test_optimum_needs_no_squares(self):
        # -- D0^2 = 3 D0 for Z/3, so Q = 0 solves the equation at eps = 3
        eps = example.cyclic3.ozawa_optimum
        for c in self.problem.constraints:
            self.assertEqual(0, c.c0 + eps * c.c1, c)

    def test_order_unit_expands_to_minus_t1(self):
        gram = gram_from_unit(self.problem)
        for c in self.problem.constraints:
            self.assertEqual(-c.c1, c.value(gram), c)

    def test_cap(self):
        # -- twice the l1 norm of 2 - t - t^2
        self.assertEqual(Fraction(8), self.problem.cap)

    def test_interior_problem(self):
        q = interior_problem(self.problem)
        self.assertEqual(self.problem.basis, q.basis)
        identity = self.problem.identity_image()
        for c, x, orig in zip(q.constraints, identity,
                              self.problem.constraints):
            self.assertEqual(-orig.c1, c.c0)
            self.assertEqual(-x, c.c1)


class TestEncodeOrderUnit(unittest.TestCase):

    def test_units_on_the_zoo(self):
        cases = [('cyclic:4', SOSMode(OZAWA)),
                 ('cyclic:3', SOSMode(BRACKET, 1)),
                 ('cyclic:3', SOSMode(PAREN, 1)),
                 ('s3', SOSMode(OZAWA)),
                 ('z2', SOSMode(OZAWA)),
                 ('free:2', SOSMode(BRACKET, 1))]
        for name, mode in cases:
            p = encode(preset_complex(name, 3 if name != 'z2' else 2), mode)
            gram = gram_from_unit(p)
            for c in p.constraints:
                self.assertEqual(-c.c1, c.value(gram), (name, mode, c))


class TestEncodeSymmetry(unittest.TestCase):

    cases = [('cyclic:3', SOSMode(BRACKET, 1)),
             ('z2', SOSMode(OZAWA)),
             ('free:2', SOSMode(BRACKET, 1)),
             ('s3', SOSMode(PAREN, 1))]

    def test_swapping_factors_inverts_the_product(self):
        # -- w_b* w_a is the adjoint of w_a* w_b
        for name, mode in self.cases:
            p = encode(preset_complex(name, 3 if name != 'z2' else 2), mode)
            inv = p.ball.inverse_index
            for a in range(p.gram_size):
                for b in range(p.gram_size):
                    ab = sorted((inv[g], q) for g, q in
                                product_terms(p.basis, a, b, p.ball))
                    ba = sorted(product_terms(p.basis, b, a, p.ball))
                    self.assertEqual(ab, ba, (name, a, b))

    def test_one_constraint_per_adjoint_pair(self):
        for name, mode in self.cases:
            p = encode(preset_complex(name, 3 if name != 'z2' else 2), mode)
            inv = p.ball.inverse_index
            keys = set(c.key for c in p.constraints)
            for i, j, g in keys:
                self.assertLessEqual(i, j)
                if i == j and g != inv[g]:
                    self.assertNotIn((j, i, inv[g]), keys, (name, i, g))


class TestEncodeRefusals(unittest.TestCase):

    def test_radius_too_small(self):
        c = preset_complex(example.z.preset)
        with self.assertRaises(errors.RadiusTooSmall) as ctx:
            encode(c, SOSMode(OZAWA), d=0)
        self.assertEqual(1, ctx.exception.minimal_half_radius)

    def test_full_needs_finite_group(self):
        with self.assertRaises(errors.RadiusTooSmall):
            encode(preset_complex(example.z.preset), SOSMode(OZAWA), d=FULL)

    def test_beyond_top_degree(self):
        c = preset_complex(example.cyclic3.preset, 2)
        with self.assertRaises(errors.TruncatedDegree):
            encode(c, SOSMode(BRACKET, 3))

    def test_resolution_must_be_asserted(self):
        c = preset_complex(example.cyclic3.preset, 2)
        with self.assertRaises(errors.ResolutionNotAsserted):
            encode(c, SOSMode(BRACKET, 2))
        with self.assertRaises(errors.TruncatedDegree):
            encode(c, SOSMode(BRACKET, 2), assert_resolution=True)
        p = encode(c, SOSMode(BRACKET, 2), assert_resolution=True,
                   allow_truncated=True)
        self.assertEqual(2, p.degree)

    def test_ozawa_ignores_exactness(self):
        p = encode(preset_complex('z2'), SOSMode(OZAWA))
        self.assertEqual(0, p.degree)


class TestSDPA(unittest.TestCase):

    def test_round_trip(self):
        cases = list()
        for name in ('trivial', 'cyclic:2', 'cyclic:3', 'cyclic:4',
                     'cyclic:5', 's3'):
            c = preset_complex(name, 3)
            cases.append((c, SOSMode(OZAWA)))
            cases.append((c, SOSMode(BRACKET, 1)))
            cases.append((c, SOSMode(PAREN, 1)))
        cases.append((preset_complex('z'), SOSMode(OZAWA)))
        cases.append((preset_complex('z2'), SOSMode(OZAWA)))
        self.assertEqual(20, len(cases))
        for c, mode in cases:
            p = encode(c, mode)
            self.assertEqual(p, import_sdpa(export_sdpa(p)), (c, mode))

    def test_header(self):
        p = encode(preset_complex(example.cyclic3.preset), SOSMode(OZAWA))
        text = export_sdpa(p)
        numeric = [x for x in text.splitlines() if not x.startswith('*')]
        self.assertEqual(str(len(p.constraints)), numeric[0])
        self.assertEqual('3', numeric[1])
        self.assertEqual('2 1 1', numeric[2])

    def test_garbage(self):
        for text in ('', '* mode ozawa 0\n1\n', '2\n3\n2 1 1\n1\n',
                     '1\n3\n2 1 1\n0\n1 1 x 1 1\n'):
            with self.assertRaises(errors.ParseError):
                import_sdpa(text)

#
# -- end of file
