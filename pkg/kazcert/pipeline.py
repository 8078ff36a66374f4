#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import time
import inspect
import logging
from functools import wraps
from collections import OrderedDict

import networkx as nx

from kazcert.encoder import encode, interior_problem
from kazcert.solver import SolverConfig, solve
from kazcert.certifier import CertifierConfig, round_and_repair
from kazcert.certifier import verify_certificate
from kazcert.errors import NotConverged, PSDFailedAfterRetries
from kazcert.errors import RepairSingular
from kazcert.utils import logtimings, format_rational

logger = logging.getLogger(__name__)

# -- failures that end a run without a certificate; everything else
#    (radius, degree, parse trouble) is the caller's problem
#
run_failures = (NotConverged, PSDFailedAfterRetries, RepairSingular)


def depends(*predecessors):
    '''decorator to be used for constructing the stage order graph'''
    def anon(f):
        @wraps(f)
        def method(self, *args, **kwargs):
            return f(self, *args, **kwargs)
        method.depends = [x.__name__ for x in predecessors]
        return method
    return anon


class CertificationRun(object):
    '''encode, solve, round and verify one certificate equation

    Every stage returns True to let the run continue.  A stage that
    returns False leaves its reason in self.failure; the exception behind
    it, if any, in self.error.
    '''

    def __repr__(self):
        return '<%s:%s>' % (self.__class__.__name__, self.mode.name)

    def __init__(self, c, mode, half_radius=None, solver=None,
                 certifier=None, assert_resolution=False,
                 allow_truncated=False, ball_cap=None):
        self.complex = c
        self.mode = mode
        self.half_radius = half_radius
        self.solver = solver or SolverConfig()
        self.certifier = certifier or CertifierConfig()
        self.assert_resolution = assert_resolution
        self.allow_truncated = allow_truncated
        self.ball_cap = ball_cap
        self.problem = None
        self.solution = None
        self.interior = None
        self.certificate = None
        self.report = None
        self.failure = None
        self.error = None
        self.timings = OrderedDict()

    def params(self):
        '''every setting that shaped the certificate, defaults included'''
        params = OrderedDict()
        params['half-radius-requested'] = 'auto' if self.half_radius is None \
            else str(self.half_radius)
        params['assert-resolution'] = self.assert_resolution
        params['allow-truncated'] = self.allow_truncated
        params['allow-paren-zero'] = self.mode.allow_paren_zero
        params.update(self.solver.params())
        return params

    def fail(self, reason, error=None):
        logger.error("%r: %s", self, reason)
        self.failure = reason
        self.error = error
        return False

    def encode_problem(self):
        self.problem = encode(self.complex, self.mode, d=self.half_radius,
                              assert_resolution=self.assert_resolution,
                              allow_truncated=self.allow_truncated,
                              ball_cap=self.ball_cap)
        return True

    @depends(encode_problem)
    def solve_problem(self):
        if self.problem.degenerate:
            return self.fail("degenerate problem: the target does not "
                             "depend on epsilon, every epsilon is feasible "
                             "and nothing is certified")
        self.solution = solve(self.problem, self.solver)
        logger.info("%r: %r", self, self.solution)
        return True

    @depends(encode_problem)
    def solve_interior(self):
        if self.certifier.no_interior or self.problem.degenerate:
            logger.debug("%r: no interior direction requested", self)
            return True
        self.interior = solve(interior_problem(self.problem), self.solver)
        if not self.interior.converged:
            logger.info("%r: interior solve ended %s; retreating along the "
                        "order unit", self, self.interior.status)
        return True

    @depends(solve_problem, solve_interior)
    def certify_solution(self):
        try:
            self.certificate = round_and_repair(
                self.solution, self.problem, self.certifier,
                interior=self.interior, params=self.params())
        except run_failures as e:
            return self.fail(str(e), e)
        return True

    @depends(certify_solution)
    def verify_result(self):
        self.report = verify_certificate(self.certificate, self.complex)
        if not self.report.accepted:
            return self.fail("rounded certificate was rejected: %s"
                             % (self.report.first_failure,))
        return True

    def determinebuildorder(self):
        graph = nx.DiGraph()
        d = dict(inspect.getmembers(self, inspect.ismethod))
        for name, member in d.items():
            predecessors = getattr(member, 'depends', None)
            if predecessors is None:
                continue
            graph.add_node(name)
            for pred in predecessors:
                assert pred in d
                graph.add_edge(pred, name)
        order = nx.lexicographical_topological_sort(graph)
        return [d[name] for name in order]

    @logtimings(logger.debug)
    def run_stages(self):
        order = self.determinebuildorder()
        logger.debug("%r stage order %r", self, [m.__name__ for m in order])
        for method in order:
            logger.info("%r calling stage %s", self, method.__name__)
            start = time.time()
            ok = method()
            self.timings[method.__name__] = time.time() - start
            if not ok:
                logger.error("%r stage %s failed, stopping", self,
                             method.__name__)
                return False
        return True

    @logtimings(logger.info)
    def generate(self):
        '''run every stage; True when a verified certificate resulted'''
        return self.run_stages()

    def summary(self, group=None):
        '''human-readable account of the run, written to summary.txt'''
        p = self.problem
        lines = ['group: %s' % (group or self.complex.presentation.text
                                .strip().replace('\n', '; '),),
                 'mode: %s' % (self.mode.name,),
                 'degree: %d' % (self.mode.degree,),
                 'fingerprint: %s' % (self.complex.fingerprint,)]
        if p is not None:
            lines.extend(['gram-size: %d' % (p.gram_size,),
                          'half-radius: %d' % (p.half_radius,),
                          'ball-radius: %s' % (p.ball.radius,),
                          'constraints: %d' % (len(p.constraints),),
                          'epsilon-cap: %s' % (format_rational(p.cap),)])
        if self.solution is not None:
            for k, v in self.solution.report().items():
                lines.append('solver-%s: %s' % (k, v))
        if self.certificate is not None:
            lines.append('epsilon: %s' % (format_rational(
                self.certificate.epsilon),))
            lines.append('equation: %s' % (self.mode.equation(
                self.certificate.epsilon),))
        if self.failure:
            lines.append('failure: %s' % (self.failure,))
        for stage, seconds in self.timings.items():
            lines.append('time-%s: %.3f s' % (stage, seconds))
        lines.append('timestamp: %s' % (time.strftime('%Y-%m-%dT%H:%M:%S'),))
        return '\n'.join(lines) + '\n'

    def diagnostics(self):
        '''what went wrong, for diagnostics.txt'''
        lines = ['failure: %s' % (self.failure,)]
        if self.solution is not None:
            for k, v in self.solution.report().items():
                lines.append('solver-%s: %s' % (k, v))
        if self.interior is not None:
            lines.append('interior-status: %s' % (self.interior.status,))
            lines.append('interior-t: %r' % (self.interior.epsilon,))
        if isinstance(self.error, PSDFailedAfterRetries):
            for k, v in self.error.diagnostics.items():
                lines.append('%s: %s' % (k, v))
        if isinstance(self.error, RepairSingular):
            lines.append('rank-defect: %d' % (self.error.rank_defect,))
            lines.append('constraint: %r' % (self.error.constraint,))
        return '\n'.join(lines) + '\n'

#
# -- end of file
