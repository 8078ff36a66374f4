#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import os
import sys
import errno
import signal
import logging
import inspect

from kazcert.registry import knownbackends
from kazcert.presets import presets, preset_complex, complex_for_presentation
from kazcert.presentation import parse_presentation
from kazcert.resolution import parse_complex, check_complex
from kazcert.encoder import SOSMode, encode, export_sdpa, import_sdpa
from kazcert.solver import SolverConfig, solve, import_solution
from kazcert.solver import export_solution
from kazcert.certifier import CertifierConfig, round_and_repair
from kazcert.certifier import parse_certificate, serialize_certificate
from kazcert.certifier import verify_certificate
from kazcert.oracle import OracleConfig, builtin_module, parse_module
from kazcert.oracle import cross_check
from kazcert.pipeline import CertificationRun, run_failures
from kazcert.config import collectconfiguration
from kazcert.utils import arg_isloglevel, isreadablefile, format_rational
from kazcert.utils import readtext, writetext
from kazcert import errors

# -- Don't freak out with IOError when our STDOUT, handled with
#    head, sed, awk, grep, etc; and, also deal with a user's ctrl-C
#    the same way (i.e. no traceback, just stop)
#
signal.signal(signal.SIGPIPE, signal.SIG_DFL)
signal.signal(signal.SIGINT, signal.SIG_DFL)

logformat = '%(levelname)-9s %(name)s %(filename)s#%(lineno)s ' \
    + '%(funcName)s %(message)s'
logging.basicConfig(stream=sys.stderr, format=logformat, level=logging.ERROR)
logger = logging.getLogger(__name__)

# -- short names
#
opa = os.path.abspath
opj = os.path.join

# -- exit codes beyond os.EX_*
#
EXIT_NOCERT = 1
EXIT_IDENTITY = 2
EXIT_PSD = 3
EXIT_MISMATCH = 4

# -- error message prefixes
#
ERR_NEEDGROUP = "Option --preset, --presentation or --complex required "
ERR_NEEDFILE = "Option %s required "
ERR_NOSUCHFILE = "No such readable file: "
ERR_UNKNOWNARGS = "Unknown arguments received: "
ERR_EXTRAARGS = "Extra arguments received: "
ERR_NOCOMMAND = "No command given; use one of: "
ERR_NOCERT = "No certificate found: "

# -- exceptions raised by bad input; anything else is a failed run
#
usage_errors = (errors.UnknownPreset, errors.RadiusTooSmall,
                errors.TruncatedDegree, errors.ResolutionNotAsserted,
                errors.BallBudgetExceeded, errors.CapExceeded,
                errors.UsageError)
data_errors = (errors.ParseError, errors.PresentationError,
               errors.DimensionMismatch, errors.NotAComplex,
               errors.ModuleRelatorViolation)


def complain(prefix, detail, code=os.EX_USAGE):
    print(prefix + detail, file=sys.stderr)
    return code


def needfile(config, option):
    '''the value of a file option; UsageError when unset or unreadable'''
    fname = getattr(config, option.lstrip('-').replace('-', '_'))
    if not fname:
        raise errors.UsageError(ERR_NEEDFILE % (option,))
    if not isreadablefile(fname):
        raise errors.UsageError(ERR_NOSUCHFILE + fname)
    return fname


def default_top_degree(config, degree):
    if config.top_degree is not None:
        return config.top_degree
    return max(2, degree + 1)


def load_complex(config, top_degree):
    '''the complex named by --complex, --presentation or --preset'''
    cap = config.ball_cap
    if config.complex:
        return parse_complex(readtext(needfile(config, '--complex')), cap=cap)
    if config.presentation:
        p = parse_presentation(readtext(needfile(config, '--presentation')))
        return complex_for_presentation(p, top_degree, cap=cap)
    if config.preset:
        return preset_complex(config.preset, top_degree, cap=cap)
    raise errors.UsageError(ERR_NEEDGROUP)


def mode_from_config(config):
    try:
        return SOSMode(config.mode, config.degree,
                       allow_paren_zero=config.allow_paren_zero)
    except errors.KazcertError as e:
        raise errors.UsageError(str(e))


def show_backends(config, *args, **kwargs):
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    print("Supported group backends:", file=file)
    print('', file=file)
    for backend in knownbackends:
        fname = os.path.abspath(inspect.getmodule(backend).__file__)
        print('{}'.format(backend.__name__), file=file)
        print('          keyword: {}'.format(backend.keyword), file=file)
        print('           finite: {}'.format(backend.finite), file=file)
        print('    code location: {}'.format(fname), file=file)
        print('', file=file)
    return os.EX_OK


def show_presets(config, *args, **kwargs):
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    width = 2 + max([len(x) for x in presets])
    print("Preset groups:", file=file)
    print('', file=file)
    for name, (_, descrip) in presets.items():
        fmt = '{name:>{width}}:  {descrip}'
        print(fmt.format(name=name, descrip=descrip, width=width), file=file)
    print('', file=file)
    return os.EX_OK


def cmd_certify(config, *args, **kwargs):
    '''encode, solve, round and verify; write the artifacts to --out'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    mode = mode_from_config(config)
    c = load_complex(config, default_top_degree(config, mode.degree))
    job = CertificationRun(c, mode, half_radius=config.radius,
                           solver=SolverConfig.fromconfig(config),
                           certifier=CertifierConfig.fromconfig(config),
                           assert_resolution=config.assert_resolution,
                           allow_truncated=config.allow_truncated,
                           ball_cap=config.ball_cap)
    result = job.generate()

    outdir = config.out
    if not os.path.isdir(outdir):
        os.makedirs(outdir)
    writetext(opj(outdir, 'complex.txt'), c.text)
    writetext(opj(outdir, 'summary.txt'), job.summary())
    if not result:
        writetext(opj(outdir, 'diagnostics.txt'), job.diagnostics())
        radius = '?' if job.problem is None else job.problem.half_radius
        print("no certificate at radius %s: %s" % (radius, job.failure),
              file=file)
        return EXIT_NOCERT
    fname = 'certificate.txt.gz' if config.gzip else 'certificate.txt'
    writetext(opj(outdir, fname), serialize_certificate(job.certificate),
              compress=config.gzip)
    print('certified: %s' % (job.report.equation,), file=file)
    print('epsilon: %s' % (format_rational(job.certificate.epsilon),),
          file=file)
    print('written: %s' % (opj(outdir, fname),), file=file)
    return os.EX_OK


def cmd_verify(config, *args, **kwargs):
    '''exact check of a certificate against a complex'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    cert = parse_certificate(readtext(needfile(config, '--certificate')))
    c = load_complex(config, default_top_degree(config, cert.mode.degree))
    try:
        report = verify_certificate(cert, c)
    except (errors.FingerprintMismatch, errors.ConventionMismatch) as e:
        print('rejected: %s' % (e,), file=file)
        return EXIT_MISMATCH
    print(report.format(), file=file)
    if not report.identity_ok:
        return EXIT_IDENTITY
    if not report.psd_ok:
        return EXIT_PSD
    print('verified: %s' % (report.equation,), file=file)
    return os.EX_OK


def cmd_oracle(config, *args, **kwargs):
    '''brute-force cross-check of spectra and cohomology'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    degrees = OracleConfig.degrees(config)
    c = load_complex(config, default_top_degree(config, max(degrees)))
    if not c.ball.is_full:
        raise errors.UsageError("The oracle needs a finite group")
    if config.oracle_module_file:
        V = parse_module(readtext(needfile(config, '--oracle-module-file')),
                         c.ball, name=os.path.basename(
                             config.oracle_module_file))
    else:
        V = builtin_module(config.oracle_module, c.ball)
    report = cross_check(c, V, degrees, cap=config.oracle_bar_cap)
    if config.json:
        file.write(report.to_json())
    else:
        file.write(report.format())
    return os.EX_OK if report.passed else EXIT_NOCERT


def cmd_export_sdpa(config, *args, **kwargs):
    '''write the SDP of a certificate equation in SDPA sparse format'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    mode = mode_from_config(config)
    c = load_complex(config, default_top_degree(config, mode.degree))
    p = encode(c, mode, d=config.radius,
               assert_resolution=config.assert_resolution,
               allow_truncated=config.allow_truncated,
               ball_cap=config.ball_cap)
    text = export_sdpa(p)
    if config.problem:
        writetext(config.problem, text)
        print('written: %s' % (config.problem,), file=file)
    else:
        file.write(text)
    return os.EX_OK


def cmd_solve(config, *args, **kwargs):
    '''solve an exported problem with the built-in solver'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    p = import_sdpa(readtext(needfile(config, '--problem')))
    s = solve(p, SolverConfig.fromconfig(config))
    text = export_solution(s)
    if config.solution:
        writetext(config.solution, text)
    else:
        file.write(text)
    logger.info("Solver status %s", s.status)
    return os.EX_OK if s.converged else EXIT_NOCERT


def cmd_import_solution(config, *args, **kwargs):
    '''round an external solution of an exported problem to a certificate'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    p = import_sdpa(readtext(needfile(config, '--problem')))
    s = import_solution(p, readtext(needfile(config, '--solution')),
                        SolverConfig.fromconfig(config))
    print('solution: %s' % (' '.join('%s=%s' % x
                                     for x in s.report().items()),),
          file=file)
    try:
        cert = round_and_repair(s, p, CertifierConfig.fromconfig(config))
    except run_failures as e:
        print(ERR_NOCERT + str(e), file=file)
        return EXIT_NOCERT
    fname = config.certificate or opj(config.out, 'certificate.txt')
    if not os.path.isdir(os.path.dirname(opa(fname))):
        os.makedirs(os.path.dirname(opa(fname)))
    writetext(fname, serialize_certificate(cert))
    print('epsilon: %s' % (format_rational(cert.epsilon),), file=file)
    print('written: %s' % (fname,), file=file)
    return os.EX_OK


def cmd_check(config, *args, **kwargs):
    '''exact algebraic identities of the complex'''
    if args:
        return ERR_EXTRAARGS + ' '.join(args)
    file = kwargs.get('file', sys.stdout)
    c = load_complex(config, default_top_degree(config, 1))
    report = check_complex(c)
    print(report.format(), file=file)
    return os.EX_OK if report.ok else EXIT_NOCERT


commands = dict([
    ('certify', cmd_certify),
    ('verify', cmd_verify),
    ('oracle', cmd_oracle),
    ('export-sdpa', cmd_export_sdpa),
    ('import-solution', cmd_import_solution),
    ('solve', cmd_solve),
    ('check', cmd_check),
    ('presets', show_presets),
    ('backends', show_backends),
])


def handleArgs(config, args, **kwargs):

    if not args:
        return complain(ERR_NOCOMMAND, ', '.join(sorted(commands)))

    command, rest = args[0], args[1:]
    unknown = [x for x in args if x.startswith('-')]
    if unknown:
        return complain(ERR_UNKNOWNARGS, ' '.join(unknown))
    func = commands.get(command)
    if func is None:
        return complain(ERR_UNKNOWNARGS, command)

    try:
        result = func(config, *rest, **kwargs)
    except usage_errors as e:
        return complain('', str(e))
    except data_errors as e:
        return complain('', str(e), code=os.EX_DATAERR)
    except (IOError, OSError) as e:
        if e.errno in (errno.ENOENT, errno.EACCES):
            return complain(ERR_NOSUCHFILE, str(e.filename))
        raise
    except errors.KazcertError as e:
        return complain('', str(e), code=EXIT_NOCERT)

    if isinstance(result, str):
        return complain('', result)
    return result


def run(argv, env=None, **kwargs):
    # -- may want to see option parsing, so set --loglevel as
    #    soon as possible
    if '--loglevel' in argv:
        levelarg = 1 + argv.index('--loglevel')
        if levelarg < len(argv):
            level = arg_isloglevel(argv[levelarg])
            logging.getLogger().setLevel(level)

    # -- produce a configuration from CLI, ENV and CFG
    #
    tag = 'kazcert'
    config, args = collectconfiguration(tag, argv, env=env,
                                        file=kwargs.get('file'))

    # -- and reset the loglevel (after reading envar, and config)
    #
    logging.getLogger().setLevel(config.loglevel)

    logger.debug("Received the following configuration:")
    for param, value in sorted(vars(config).items()):
        logger.debug("  %s = %r", param, value)
    logger.debug("  args: %r", args)

    return handleArgs(config, args, **kwargs)


def main():
    sys.exit(run(sys.argv[1:]))

if __name__ == '__main__':
    main()

#
# -- end of file
