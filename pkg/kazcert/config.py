#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging

from kazcert.ball import DEFAULT_BALL_CAP
from kazcert.utils import arg_isloglevel, arg_isreadablefile
from kazcert.utils import arg_isnonnegint, arg_isradius
from kazcert.cascadingconfig import CascadingConfig, DefaultFreeArgumentParser
from kazcert.cascadingconfig import StoreTrueOrNargBool
from kazcert.encoder import OZAWA, BRACKET, PAREN
from kazcert.solver import SolverConfig
from kazcert.certifier import CertifierConfig
from kazcert.oracle import OracleConfig

logger = logging.getLogger(__name__)

DEFAULT_CONFIGFILE = '/etc/kazcert/kazcert.ini'

# -- classes contributing an argparse(cls, p) fragment
#
fragments = (SolverConfig, CertifierConfig, OracleConfig)


def collectconfiguration(tag, argv, env=None, file=None):
    '''main shape of the command-line (and config file)

    Returns the merged configuration and the leftover arguments; the first
    leftover argument names the command.
    '''

    ap = DefaultFreeArgumentParser(prog=tag)

    # -- where the group and its complex come from
    #
    ap.add_argument('--preset', '-g',
                    default=None,
                    help='a preset group, see the "presets" command')

    ap.add_argument('--presentation', '-P',
                    default=None,
                    help='a file holding a group presentation')

    ap.add_argument('--complex', '-C',
                    default=None,
                    help='a complex file, as written by "certify"')

    ap.add_argument('--top-degree',
                    default=None, type=arg_isnonnegint,
                    help='resolve the group through this degree '
                         '[degree + 1, at least 2]')

    ap.add_argument('--ball-cap',
                    default=DEFAULT_BALL_CAP, type=arg_isnonnegint,
                    help='largest ball enumerated [%(default)s]')

    # -- which equation to certify
    #
    ap.add_argument('--mode', '-m',
                    default=OZAWA, choices=(OZAWA, BRACKET, PAREN),
                    help='certificate equation [%(default)s]')

    ap.add_argument('--degree', '-k',
                    default=None, type=arg_isnonnegint,
                    help='Laplacian degree; ozawa certifies degree 0 and '
                         'bracket/paren default to 1')

    ap.add_argument('--radius', '--half-radius', '-r',
                    default=None, type=arg_isradius,
                    help='half radius of the support basis, an integer or '
                         '"full" [smallest that fits]')

    ap.add_argument('--assert-resolution',
                    action=StoreTrueOrNargBool, default=False,
                    help='trust a user complex to be exact [%(default)s]')

    ap.add_argument('--allow-truncated',
                    action=StoreTrueOrNargBool, default=False,
                    help='certify the top degree of a truncated complex '
                         '[%(default)s]')

    ap.add_argument('--allow-paren-zero',
                    action=StoreTrueOrNargBool, default=False,
                    help='accept paren mode at degree 0 [%(default)s]')

    # -- files exchanged with the outside world
    #
    ap.add_argument('--out', '--outdir', '-o',
                    default='kazcert-out',
                    help='output directory of "certify" [%(default)s]')

    ap.add_argument('--certificate', '--cert',
                    default=None,
                    help='a certificate file (may be gzipped)')

    ap.add_argument('--problem',
                    default=None,
                    help='an SDPA problem file')

    ap.add_argument('--solution',
                    default=None,
                    help='a numeric solution file')

    ap.add_argument('--gzip',
                    action=StoreTrueOrNargBool, default=False,
                    help='write certificate.txt.gz [%(default)s]')

    ap.add_argument('--json',
                    action=StoreTrueOrNargBool, default=False,
                    help='oracle report as JSON [%(default)s]')

    ap.add_argument('--configfile', '--config-file', '--cfg',
                    '-c',
                    default=DEFAULT_CONFIGFILE,
                    type=arg_isreadablefile,
                    help='a configuration file')

    ap.add_argument('--loglevel',
                    default=logging.ERROR, type=arg_isloglevel,
                    help='set the loglevel')

    # -- collect up the distributed configuration fragments
    #
    for cls in fragments:
        argparse_method = getattr(cls, 'argparse', None)
        if argparse_method:
            argparse_method(ap)

    cc = CascadingConfig(tag, ap, argv, env=env, file=file)
    config, args = cc.parse()
    return config, args

#
# -- end of file
