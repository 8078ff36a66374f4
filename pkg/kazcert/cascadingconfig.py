#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import os
import sys
import inspect
import argparse
from argparse import ArgumentParser, ArgumentError, Namespace
from argparse import _UNRECOGNIZED_ARGS_ATTR
from configparser import ConfigParser

import logging
logger = logging.getLogger(__name__)

ENVSEP = NSSEP = '_'    # -- underscore _
CLISEP = CFGSEP = '-'   # -- dash -
MULTIVALUESEP = ','


class StoreTrueOrNargBool(argparse._StoreAction):
    '''a flag that also accepts yes/no values from environment and files'''

    _boolean_states = {'1': True, 'yes': True, 'true': True, 'on': True,
                       '0': False, 'no': False, 'false': False, 'off': False}

    def __init__(self, *args, **kwargs):
        kwargs.setdefault('nargs', '?')
        super(StoreTrueOrNargBool, self).__init__(*args, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        if values is None:
            setattr(namespace, self.dest, True)
            return
        boolval = self._boolean_states.get(str(values).lower(), None)
        if boolval is None:
            message = "Non-boolean value: %r for option %r, aborting..."
            message = message % (values, option_string)
            logger.critical(message)
            raise ValueError(message)
        setattr(namespace, self.dest, boolval)


def dict_to_argv_longform(d):
    '''turn {'solver-tol': '1e-8'} into ['--solver-tol', '1e-8']

    List values repeat the option once per element.
    '''
    args = list()
    for opt, arg in sorted(d.items()):
        if isinstance(arg, (tuple, list)):
            for x in arg:
                args.extend(("--" + opt, x))
        else:
            args.extend(("--" + opt, arg))
    return args


def empty2none_values(d):
    '''replace values holding the empty string with None'''
    for k, v in d.items():
        if v == '':
            d[k] = None
    return d


def convert_multivalues(d, multivaluesep=MULTIVALUESEP, listkeys=()):
    '''split the values of listkeys on the separator

    Only named keys are split: matrix and degree values contain commas
    that belong to the value itself.
    '''
    for k, v in d.items():
        if k in listkeys and multivaluesep in v:
            d[k] = [x.strip() for x in v.split(multivaluesep)]
    return d


def dict_from_cfg(f, base=None, cfgsep=CFGSEP, clisep=CLISEP):
    '''read a configuration file into {'section-field': value}

    Section and field names are lowercased.  With base given, sections
    not starting with base are skipped.  The file

      [kazcert-solver]
      tol = 1e-8

    gives {'kazcert-solver-tol': '1e-8'}.
    '''
    d = dict()
    parser = ConfigParser()
    if hasattr(f, 'readline'):
        parser.read_file(f)
    else:
        parser.read(f)

    for section in parser.sections():
        if base is not None:
            if not section.startswith(base):
                logger.debug("Skipping sect [%s] in %s (not prefixed with %s)",
                             section, f, base)
                continue
        sectname = section.lower().replace(cfgsep, clisep)
        for name, value in parser.items(section):
            keyname = name.lower().replace(cfgsep, clisep)
            d[clisep.join((sectname, keyname))] = value
    return d


def dict_from_envdict(env=os.environ, base=None, envsep=ENVSEP, clisep=CLISEP):
    '''select environment variables starting with base, in CLI form

    With base 'KAZCERT', KAZCERT_SOLVER_TOL=1e-8 becomes
    {'kazcert-solver-tol': '1e-8'}.
    '''
    d = dict()
    if base is None:
        tag = ''
    else:
        tag = base + envsep
    for k, v in env.items():
        if k.startswith(tag):
            k = k.lower().replace(envsep, clisep)
            d[k] = str(v)
    return d


def prepend_tag(base, d, sep=CLISEP):
    tag = ''.join((base, sep))
    return dict((''.join((tag, k)), v) for k, v in d.items())


def strip_tag(base, d, clisep=CLISEP):
    if not base:
        return d
    newd = dict()
    tag = base + clisep
    for oldk, v in d.items():
        if oldk.startswith(tag):
            newk = oldk[len(tag):]
            if newk in newd:
                logger.debug("Duplicate key found when stripping %s from %s.",
                             tag, oldk)
                logger.info("strip_tag: returning unchanged dict().")
                return d
            newd[newk] = v
        else:
            newd[oldk] = v
    return newd


def envdict_from_ns(tag, ns):
    d = prepend_tag(tag, vars(ns), sep=ENVSEP)
    d = dict([(k.upper(), v) for k, v in d.items()])
    for k, v in sorted(d.items()):
        if v is None:
            d[k] = ''
        if isinstance(v, (list, tuple)):
            d[k] = MULTIVALUESEP.join([str(x) for x in v])
    return d


def clilist_from_ns(ns):
    cli = list()
    for k, v in sorted(vars(ns).items()):
        k = ''.join(('--', k.replace(NSSEP, CLISEP)))
        if isinstance(v, (list, tuple)):
            for val in v:
                cli.extend((k, str(val)))
        else:
            cli.extend((k, str(v)))
    return cli


def argv_from_env(env, tag, listkeys=()):
    '''environment entries prefixed with TAG_, as an argparse argv

    {'KAZCERT_SOLVER_TOL': '1e-8', 'KAZCERT_PRESET': 'cyclic:3'} with tag
    'kazcert' gives ['--preset', 'cyclic:3', '--solver-tol', '1e-8'].
    '''
    d = dict_from_envdict(env, base=tag.upper())
    d = convert_multivalues(d, listkeys=listkeys)
    d = empty2none_values(d)
    d = strip_tag(tag, d)
    return dict_to_argv_longform(d)


def argv_from_cfg(f, tag, listkeys=()):
    '''config file sections prefixed with tag, as an argparse argv

    The file

      [kazcert]
      preset = cyclic:3

      [kazcert-solver]
      tol = 1e-8

    read with tag 'kazcert' gives
    ['--preset', 'cyclic:3', '--solver-tol', '1e-8'].
    '''
    d = dict_from_cfg(f, base=tag)
    d = convert_multivalues(d, listkeys=listkeys)
    d = empty2none_values(d)
    d = strip_tag(tag, d)
    return dict_to_argv_longform(d)


class DefaultFreeArgumentParser(ArgumentParser):
    '''an ArgumentParser that can parse without filling in defaults

    CascadingConfig parses every source separately and needs to know which
    options a source actually set; see parse_known_args_no_defaults().
    '''

    def parse_known_args_no_defaults(self, args=None, namespace=None):
        '''parse_known_args() without the step that installs defaults'''
        if args is None:
            args = sys.argv[1:]
        else:
            args = list(args)

        if namespace is None:
            namespace = Namespace()

        try:
            extra = ()
            # -- newer argparse takes an intermixed flag
            if 'intermixed' in inspect.signature(
                    self._parse_known_args).parameters:
                extra = (False,)
            namespace, args = self._parse_known_args(args, namespace, *extra)
            if hasattr(namespace, _UNRECOGNIZED_ARGS_ATTR):
                args.extend(getattr(namespace, _UNRECOGNIZED_ARGS_ATTR))
                delattr(namespace, _UNRECOGNIZED_ARGS_ATTR)
            return namespace, args
        except ArgumentError:
            err = sys.exc_info()[1]
            self.error(str(err))


class CascadingConfig(object):
    '''configuration merged from CLI, environment and config files

    Sources, highest precedence first:

      - cli:  command-line options
      - environment:  TAG_* variables
      - userconfig:  the file named by --configfile (CLI or environment)
      - systemconfig:  the file named by the --configfile default
      - defaults:  defaults set in the parser

    argparse does all type conversion, so every source passes through the
    same checks.
    '''
    order = ['cli', 'environment', 'userconfig', 'systemconfig', 'defaults']
    mine = ['--dump_cli', '--dump_env', '--dump_cfg', '--debug_options']

    def __init__(self, tag, argparser, argv=None, env=None,
                 configfile='configfile', order=order, listkeys=(),
                 file=None):
        '''argparser must be a DefaultFreeArgumentParser with every option

        listkeys names the CLI keys whose environment and file values are
        split on commas.
        '''
        assert hasattr(argparser, 'parse_known_args_no_defaults')
        for opt in self.mine:
            synonym = opt.replace(NSSEP, CLISEP)
            argparser.add_argument(opt, synonym, action='store_true')

        self.tag = tag
        self.argparser = argparser
        self.argv = sys.argv[1:] if argv is None else argv
        self.env = os.environ if env is None else env
        self.configfile = configfile
        self.order = order
        self.listkeys = listkeys
        self.file = file or sys.stdout

    def parse(self):
        self.read_defaults()
        self.read_cli()
        self.read_environment()
        self.read_systemconfig()
        self.read_userconfig()
        self.set_config()
        self.handle_ccrequest()
        return self.config, self.cli_extras

    def read_defaults(self):
        self.defaults = self.argparser.parse_args([])

    def read_cli(self):
        parser = self.argparser.parse_known_args_no_defaults
        self.cli, self.cli_extras = parser(self.argv)

    def read_environment(self):
        parser = self.argparser.parse_known_args_no_defaults
        argv = argv_from_env(self.env, self.tag, self.listkeys)
        self.environment, self.environment_extras = parser(argv)

    def read_systemconfig(self):
        parser = self.argparser.parse_known_args_no_defaults
        syscfg = getattr(self.defaults, self.configfile, None)
        self.syscfg = syscfg
        if syscfg is not None:
            argv = argv_from_cfg(syscfg, self.tag, self.listkeys)
            self.systemconfig, self.systemconfig_extras = parser(argv)
        else:
            self.systemconfig = Namespace()
            self.systemconfig_extras = list()

    def read_userconfig(self):
        parser = self.argparser.parse_known_args_no_defaults
        usrcfg = None
        for source, candidate in (
                ('cli', getattr(self.cli, self.configfile, None)),
                ('env', getattr(self.environment, self.configfile, None))):
            if candidate is None:
                continue
            if candidate == self.syscfg:
                logger.info("Skipping systemconfig file %s in userconfig (%s)",
                            self.syscfg, source)
                continue
            logger.debug("Using %s for user config", candidate)
            usrcfg = candidate
            break
        if usrcfg is None:
            self.userconfig = Namespace()
            self.userconfig_extras = list()
        else:
            argv = argv_from_cfg(usrcfg, self.tag, self.listkeys)
            self.userconfig, self.userconfig_extras = parser(argv)

    def set_config(self, order=None):
        if order is not None:
            logger.debug("Installing custom resolution order %r", order)
        else:
            order = self.order
        sources = [(x, getattr(self, x)) for x in order]
        sources.reverse()
        config = Namespace()
        for sourcename, source in sources:
            for name in vars(source):
                newval = getattr(source, name)
                oldval = getattr(config, name, None)
                if oldval is not None and oldval != newval:
                    logger.debug("Source %s: replacing %s=%s with %s",
                                 sourcename, name, oldval, newval)
                setattr(config, name, newval)
        self.config = config

    def dump_env(self):
        d = envdict_from_ns(self.tag, self.config)
        for k, v in sorted(d.items()):
            print('{}={}'.format(k, v), file=self.file)
        return 0

    def dump_cfg(self):
        '''print the merged configuration as a kazcert config file'''
        d = prepend_tag(self.tag, vars(self.config), sep=CFGSEP)
        cfg = ConfigParser()
        for k, v in sorted(d.items()):
            k = k.replace(NSSEP, CFGSEP)
            parts = k.split(CFGSEP)
            assert len(parts) >= 2
            if len(parts) == 2:
                sect, field = parts[0], parts[1]
            else:
                sect = CFGSEP.join(parts[0:2])
                field = CFGSEP.join(parts[2:])
            if not cfg.has_section(sect):
                cfg.add_section(sect)
            if v is None:
                v = ''
            if isinstance(v, (list, tuple)):
                cfg.set(sect, field, ',\n'.join([str(x) for x in v]))
            else:
                cfg.set(sect, field, str(v).replace('%', '%%'))
        cfg.write(self.file)
        return 0

    def dump_cli(self):
        print(' '.join(clilist_from_ns(self.config)), file=self.file)
        return 0

    def debug_options(self):
        import pprint
        for k, v in sorted(vars(self).items()):
            print('\n'.join(('', k, '----------')), file=self.file)
            if isinstance(v, Namespace):
                v = vars(v)
            pprint.pprint(v, stream=self.file)
        return 0

    def handle_ccrequest(self):
        diagfunc = False
        for opt in self.mine:
            opt = opt.lstrip(CLISEP)
            if getattr(self.config, opt, False):
                diagfunc = getattr(self, opt)
            delattr(self.config, opt)
        if diagfunc:
            sys.exit(diagfunc())

#
# -- end of file
