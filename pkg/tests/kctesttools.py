# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import os
import codecs
import shutil
import unittest
from tempfile import mkdtemp
from tempfile import NamedTemporaryFile as ntf

from kazcert.encoder import SOSMode, OZAWA
from kazcert.presets import preset_complex
from kazcert.solver import SolverConfig
from kazcert.pipeline import CertificationRun

# -- short names
#
opj = os.path.join

# -- the certifying run many tests share; tight enough to converge on the
#    small finite presets in a few thousand iterations
#
fast_solver = dict(max_iter=20000, tol=1e-9, seed=1)


def certified_run(preset='cyclic:3', mode=OZAWA, degree=None, top_degree=2,
                  **kwargs):
    c = preset_complex(preset, top_degree)
    run = CertificationRun(c, SOSMode(mode, degree),
                           solver=SolverConfig(**fast_solver), **kwargs)
    run.generate()
    return run


class TestToolsFilesystem(unittest.TestCase):

    def setUp(self):
        self.makeTempdir()

    def tearDown(self):
        self.removeTempdir()

    def makeTempdir(self):
        self.tempdir = mkdtemp(prefix='kazcert-test-')

    def removeTempdir(self):
        shutil.rmtree(self.tempdir)

    def adddir(self, reldir):
        absdir = opj(self.tempdir, reldir)
        if not os.path.isdir(absdir):
            os.makedirs(absdir)
        return absdir

    def addfile(self, name, content, reldir='.'):
        '''write content to tempdir/reldir/name and return its path'''
        dirname = self.adddir(reldir)
        fname = opj(dirname, name)
        with codecs.open(fname, 'w', encoding='utf-8') as f:
            f.write(content)
        return fname


class CCTestTools(TestToolsFilesystem):

    def writeconfig(self, case):
        tf = ntf(prefix=case.tag, suffix=".cfg", dir=self.tempdir,
                 delete=False)
        tf.close()
        with codecs.open(tf.name, 'w', encoding='utf-8') as f:
            f.write(case.cfg)
        case.configfile = tf.name


class TestCertifiedCyclic(TestToolsFilesystem):
    '''one certified Ozawa run on Z/3, computed once per class'''

    @classmethod
    def setUpClass(cls):
        cls.certified = certified_run('cyclic:3')
        cls.complex = cls.certified.complex
        cls.problem = cls.certified.problem
        cls.cert = cls.certified.certificate

#
# -- end of file
