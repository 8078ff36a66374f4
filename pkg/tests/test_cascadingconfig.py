# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import io
import unittest
import argparse
from argparse import Namespace

from kctesttools import CCTestTools

# -- SUT
from kazcert.cascadingconfig import CascadingConfig
from kazcert.cascadingconfig import DefaultFreeArgumentParser
from kazcert.cascadingconfig import StoreTrueOrNargBool
from kazcert.cascadingconfig import argv_from_env, argv_from_cfg
from kazcert.cascadingconfig import convert_multivalues, strip_tag
from kazcert.cascadingconfig import dict_to_argv_longform, envdict_from_ns


def solverparser():
    ap = DefaultFreeArgumentParser()
    ap.add_argument('--configfile', default=None, type=str)
    ap.add_argument('--solver-max-iter', default=9, type=int)
    ap.add_argument('--preset', default='cyclic:3')
    ap.add_argument('--gzip', action=StoreTrueOrNargBool, default=False)
    return ap


class TestHelpers(unittest.TestCase):

    def test_longform(self):
        d = {'solver-tol': '1e-8', 'degree': ['1', '2']}
        self.assertEqual(['--degree', '1', '--degree', '2',
                          '--solver-tol', '1e-8'], dict_to_argv_longform(d))

    def test_only_listkeys_are_split(self):
        d = {'oracle-degrees': '0,1', 'radius': 'full', 'names': 'a, b'}
        d = convert_multivalues(d, listkeys=('names',))
        self.assertEqual('0,1', d['oracle-degrees'])
        self.assertEqual(['a', 'b'], d['names'])

    def test_strip_tag(self):
        d = strip_tag('kazcert', {'kazcert-preset': 's3', 'other': 1})
        self.assertEqual({'preset': 's3', 'other': 1}, d)

    def test_argv_from_env(self):
        env = {'KAZCERT_SOLVER_TOL': '1e-8', 'KAZCERT_PRESET': 'cyclic:3',
               'HOME': '/root', 'KAZCERT_OUT': ''}
        self.assertEqual(['--out', None, '--preset', 'cyclic:3',
                          '--solver-tol', '1e-8'],
                         argv_from_env(env, 'kazcert'))

    def test_argv_from_cfg(self):
        f = io.StringIO('[kazcert]\npreset = s3\n\n[kazcert-solver]\n'
                        'tol = 1e-8\n\n[unrelated]\nx = 1\n')
        self.assertEqual(['--preset', 's3', '--solver-tol', '1e-8'],
                         argv_from_cfg(f, 'kazcert'))

    def test_envdict_from_ns(self):
        ns = Namespace(solver_tol=1e-8, preset=None, degrees=[0, 1])
        d = envdict_from_ns('kazcert', ns)
        self.assertEqual('', d['KAZCERT_PRESET'])
        self.assertEqual('0,1', d['KAZCERT_DEGREES'])


class TestStoreTrueOrNargBool(unittest.TestCase):

    def setUp(self):
        self.ap = argparse.ArgumentParser()
        self.ap.add_argument('--gzip', action=StoreTrueOrNargBool,
                             default=False)

    def test_bare_flag(self):
        self.assertTrue(self.ap.parse_args(['--gzip']).gzip)
        self.assertFalse(self.ap.parse_args([]).gzip)

    def test_values(self):
        for value, want in (('yes', True), ('On', True), ('0', False),
                            ('false', False)):
            self.assertEqual(want, self.ap.parse_args(['--gzip',
                                                       value]).gzip)

    def test_garbage(self):
        with self.assertRaises(ValueError):
            self.ap.parse_args(['--gzip', 'perhaps'])


class TestCascadingConfig(CCTestTools):

    def parse(self, argv='', env=None, cfg=None):
        case = Namespace(tag='kazcert', cfg=cfg, configfile=None)
        argv = argv.split()
        if cfg is not None:
            self.writeconfig(case)
            argv.extend(['--configfile', case.configfile])
        cc = CascadingConfig('kazcert', solverparser(), argv=argv,
                             env=env or dict())
        return cc.parse()

    def test_defaults_returned(self):
        config, args = self.parse()
        self.assertEqual(9, config.solver_max_iter)
        self.assertFalse(config.gzip)
        self.assertEqual([], args)

    def test_cfg_is_read_passed_by_env(self):
        case = Namespace(tag='kazcert',
                         cfg='[kazcert-solver]\nmax-iter = 8\n')
        self.writeconfig(case)
        env = dict(KAZCERT_CONFIGFILE=case.configfile)
        cc = CascadingConfig('kazcert', solverparser(), argv=[], env=env)
        config, _ = cc.parse()
        self.assertEqual(8, config.solver_max_iter)

    def test_cfg_is_read_passed_by_argv(self):
        config, _ = self.parse(cfg='[kazcert-solver]\nmax-iter = 8\n')
        self.assertEqual(8, config.solver_max_iter)

    def test_precedence_env_cfg(self):
        config, _ = self.parse(env=dict(KAZCERT_SOLVER_MAX_ITER='7'),
                               cfg='[kazcert-solver]\nmax-iter = 8\n')
        self.assertEqual(7, config.solver_max_iter)

    def test_precedence_argv_env_cfg(self):
        config, _ = self.parse('--solver-max-iter 6',
                               env=dict(KAZCERT_SOLVER_MAX_ITER='7'),
                               cfg='[kazcert-solver]\nmax-iter = 8\n')
        self.assertEqual(6, config.solver_max_iter)

    def test_boolean_from_file(self):
        config, _ = self.parse(cfg='[kazcert]\ngzip = yes\n')
        self.assertTrue(config.gzip)

    def test_command_left_over(self):
        config, args = self.parse('--preset s3 certify')
        self.assertEqual('s3', config.preset)
        self.assertEqual(['certify'], args)

    def test_dump_cli(self):
        out = io.StringIO()
        cc = CascadingConfig('kazcert', solverparser(),
                             argv=['--preset', 's3', '--dump-cli'],
                             env=dict(), file=out)
        with self.assertRaises(SystemExit) as ctx:
            cc.parse()
        self.assertEqual(0, ctx.exception.code)
        self.assertIn('--preset s3', out.getvalue())

    def test_dump_cfg(self):
        out = io.StringIO()
        cc = CascadingConfig('kazcert', solverparser(),
                             argv=['--solver-max-iter', '5', '--dump-cfg'],
                             env=dict(), file=out)
        with self.assertRaises(SystemExit):
            cc.parse()
        text = out.getvalue()
        self.assertIn('[kazcert-solver]', text)
        self.assertIn('max-iter = 5', text)

    def test_dump_env(self):
        out = io.StringIO()
        cc = CascadingConfig('kazcert', solverparser(), argv=['--dump_env'],
                             env=dict(), file=out)
        with self.assertRaises(SystemExit):
            cc.parse()
        self.assertIn('KAZCERT_PRESET=cyclic:3', out.getvalue())

#
# -- end of file
