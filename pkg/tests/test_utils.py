# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import os
import gzip
import unittest
from fractions import Fraction
from tempfile import NamedTemporaryFile as ntf

from kctesttools import TestToolsFilesystem, opj

# -- SUT
from kazcert.utils import arg_isreadablefile, isreadablefile
from kazcert.utils import arg_isloglevel, arg_isnonnegint
from kazcert.utils import arg_isradius, arg_isdegrees
from kazcert.utils import format_rational, sha256text
from kazcert.utils import writetext, readtext


class Test_isreadablefile_and_friends(unittest.TestCase):

    def test_isreadablefile(self):
        f = ntf(prefix='readable-file')
        self.assertTrue(isreadablefile(f.name))
        mode = os.stat(f.name).st_mode
        os.chmod(f.name, 0)
        if 0 == os.getuid():
            self.assertTrue(isreadablefile(f.name))
        else:
            self.assertFalse(isreadablefile(f.name))
        os.chmod(f.name, mode)

    def test_arg_isreadablefile(self):
        f = ntf(prefix='readable-file')
        self.assertEqual(f.name, arg_isreadablefile(f.name))
        self.assertIsNone(arg_isreadablefile('/no/such/file/anywhere'))


class Test_arg_isloglevel(unittest.TestCase):

    def test_arg_isloglevel_integer(self):
        self.assertEqual(7, arg_isloglevel(7))
        self.assertEqual(40, arg_isloglevel('frobnitz'))
        self.assertEqual(20, arg_isloglevel('INFO'))
        self.assertEqual(10, arg_isloglevel('DEBUG'))


class Test_numeric_arguments(unittest.TestCase):

    def test_nonnegint(self):
        self.assertEqual(3, arg_isnonnegint('3'))
        with self.assertRaises(ValueError):
            arg_isnonnegint('-3')
        with self.assertRaises(ValueError):
            arg_isnonnegint('three')

    def test_radius(self):
        self.assertEqual('full', arg_isradius('FULL'))
        self.assertEqual(2, arg_isradius('2'))

    def test_degrees(self):
        self.assertEqual([0, 1, 2], arg_isdegrees('0..2'))
        self.assertEqual([1, 3], arg_isdegrees('3,1,3'))
        self.assertEqual([2], arg_isdegrees(['2']))
        with self.assertRaises(ValueError):
            arg_isdegrees('3..1')


class Test_rationals_and_hashes(unittest.TestCase):

    def test_format_rational(self):
        self.assertEqual('5/2', format_rational(Fraction(5, 2)))
        self.assertEqual('-3', format_rational(Fraction(-6, 2)))
        self.assertEqual('0', format_rational(0))

    def test_sha256text(self):
        self.assertEqual('e3b0c44298fc1c149afbf4c8996fb924'
                         '27ae41e4649b934ca495991b7852b855', sha256text(''))


class Test_writetext(TestToolsFilesystem):

    def test_plain(self):
        fname = writetext(opj(self.tempdir, 'a.txt'), 'Δ₀\n')
        self.assertEqual('Δ₀\n', readtext(fname))

    def test_gzip_by_name(self):
        fname = writetext(opj(self.tempdir, 'a.txt.gz'), 'certificate\n')
        with gzip.open(fname, 'rt') as f:
            self.assertEqual('certificate\n', f.read())
        self.assertEqual('certificate\n', readtext(fname))

    def test_gzip_is_reproducible(self):
        a = writetext(opj(self.tempdir, 'a.gz'), 'x' * 100)
        b = writetext(opj(self.tempdir, 'b'), 'x' * 100, compress=True)
        with open(a, 'rb') as fa, open(b, 'rb') as fb:
            self.assertEqual(fa.read(), fb.read())

#
# -- end of file
