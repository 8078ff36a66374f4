#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging
from collections import OrderedDict

import numpy as np
from scipy import sparse

from kazcert.errors import CapExceeded, ParseError, DimensionMismatch
from kazcert.utils import logtimings, arg_isnonnegint

logger = logging.getLogger(__name__)

CONVERGED = 'Converged'
MAXITER = 'MaxIter'
DIVERGED = 'Diverged'
DEGENERATE = 'Degenerate'
statuses = (CONVERGED, MAXITER, DIVERGED, DEGENERATE)

ADAPT_EVERY = 25
PINV_CUTOFF = 1e-12


class SolverConfig(object):
    '''settings of the splitting solver, with their defaults'''

    fields = OrderedDict([
        ('max_iter', 50000),
        ('tol', 1e-9),
        ('rho', 1.0),
        ('alpha', 1.6),
        ('seed', 0),
        ('log_every', 1000),
        ('max_gram', 4000),
    ])

    def __init__(self, **kwargs):
        for name, default in self.fields.items():
            value = kwargs.pop(name, None)
            setattr(self, name, default if value is None else value)
        if kwargs:
            raise TypeError("Unknown solver settings: %s"
                            % (', '.join(sorted(kwargs)),))
        if not self.tol > 0:
            raise ValueError("Solver tolerance must be positive, got %r"
                             % (self.tol,))
        if not 1 <= self.alpha < 2:
            raise ValueError("Over-relaxation must lie in [1, 2), got %r"
                             % (self.alpha,))
        if not self.rho > 0:
            raise ValueError("Penalty must be positive, got %r" % (self.rho,))
        if self.max_iter < 1:
            raise ValueError("Need at least one iteration")

    def __repr__(self):
        return '<SolverConfig:%s>' % (', '.join(
            '%s=%r' % (k, getattr(self, k)) for k in self.fields),)

    def params(self):
        return OrderedDict(('solver-' + k.replace('_', '-'), getattr(self, k))
                           for k in self.fields)

    @classmethod
    def fromconfig(cls, config):
        return cls(**dict((k, getattr(config, 'solver_' + k, None))
                          for k in cls.fields))

    @classmethod
    def argparse(cls, p):
        descrip = 'numeric settings of the SDP solver'
        g = p.add_argument_group(title=cls.__name__, description=descrip)
        gadd = g.add_argument
        gadd('--solver-max-iter', '--max-iter', type=arg_isnonnegint,
             default=cls.fields['max_iter'],
             help='iteration limit [%(default)s]')
        gadd('--solver-tol', type=float, default=cls.fields['tol'],
             help='primal and dual residual tolerance [%(default)s]')
        gadd('--solver-rho', type=float, default=cls.fields['rho'],
             help='initial penalty parameter [%(default)s]')
        gadd('--solver-alpha', type=float, default=cls.fields['alpha'],
             help='over-relaxation in [1, 2) [%(default)s]')
        gadd('--solver-seed', '--seed', type=arg_isnonnegint,
             default=cls.fields['seed'],
             help='seed of the initial jitter, 0 for none [%(default)s]')
        gadd('--solver-log-every', '--log-every', type=arg_isnonnegint,
             default=cls.fields['log_every'],
             help='log progress every so many iterations [%(default)s]')
        gadd('--solver-max-gram', type=arg_isnonnegint,
             default=cls.fields['max_gram'],
             help='largest Gram size solved densely [%(default)s]')


class GramSolution(object):
    '''a numeric Gram matrix and epsilon, with recomputed residuals'''

    def __init__(self, gram, epsilon, status, iterations=0, residual=0.0,
                 dual=0.0, psd_violation=0.0, loop_residual=None):
        self.gram = np.asarray(gram, dtype=float)
        self.epsilon = float(epsilon)
        self.status = status
        self.iterations = iterations
        self.residual = residual
        self.dual = dual
        self.psd_violation = psd_violation
        self.loop_residual = loop_residual

    def __repr__(self):
        return '<GramSolution:%s,eps=%r,iter=%d>' % (self.status, self.epsilon,
                                                     self.iterations)

    @property
    def gram_size(self):
        return self.gram.shape[0]

    @property
    def converged(self):
        return self.status == CONVERGED

    def report(self):
        return OrderedDict([('status', self.status),
                            ('epsilon', self.epsilon),
                            ('iterations', self.iterations),
                            ('residual', self.residual),
                            ('dual', self.dual),
                            ('psd-violation', self.psd_violation)])


def constraint_matrix(p):
    '''(A, c0, c1) in floating point; A acts on the upper triangle of Q
    in numpy.triu_indices order'''
    N = p.gram_size
    column = dict((v, n) for n, v in enumerate(p.variables()))
    rows, cols, vals = list(), list(), list()
    for r, c in enumerate(p.constraints):
        for v, q in c.coeffs:
            rows.append(r)
            cols.append(column[v])
            vals.append(float(q))
    A = sparse.csr_matrix((vals, (rows, cols)),
                          shape=(len(p.constraints), N * (N + 1) // 2))
    c0 = np.array([float(c.c0) for c in p.constraints])
    c1 = np.array([float(c.c1) for c in p.constraints])
    return A, c0, c1


def measure(p, gram, epsilon):
    '''(constraint residual, psd violation), both infinity norms'''
    gram = np.asarray(gram, dtype=float)
    N = p.gram_size
    if gram.shape != (N, N):
        raise DimensionMismatch("Gram is %s, problem has size %d"
                                % ('x'.join(str(x) for x in gram.shape), N))
    residual = 0.0
    if p.constraints:
        A, c0, c1 = constraint_matrix(p)
        r = A.dot(gram[np.triu_indices(N)]) - c0 - epsilon * c1
        residual = float(np.max(np.abs(r)))
    violation = 0.0
    if N:
        violation = max(0.0, -float(np.linalg.eigvalsh(gram)[0]))
    return residual, violation


def svec_scale(N):
    iu = np.triu_indices(N)
    return iu, np.where(iu[0] == iu[1], 1.0, 1.0 / np.sqrt(2.0))


def unsvec(x, iu, scale, N):
    Q = np.zeros((N, N))
    Q[iu] = x * scale
    return Q + Q.T - np.diag(np.diag(Q))


def psd_part(Q):
    w, V = np.linalg.eigh(Q)
    w = np.maximum(w, 0.0)
    P = (V * w).dot(V.T)
    return (P + P.T) / 2


class AffineProjector(object):
    '''projection onto {v : A v = b}, via a cached pseudo-inverse of A A^T'''

    def __init__(self, A, b):
        self.A = A
        self.At = A.T.tocsr()
        self.b = b
        K = A.dot(self.At).toarray()
        w, V = np.linalg.eigh(K)
        top = max(float(w[-1]) if len(w) else 0.0, 0.0)
        keep = w > PINV_CUTOFF * top if top else np.zeros(len(w), bool)
        self.V = V
        self.winv = np.where(keep, 1.0 / np.where(keep, w, 1.0), 0.0)
        self.rank = int(keep.sum())

    def __call__(self, v):
        r = self.A.dot(v) - self.b
        y = self.V.dot(self.winv * self.V.T.dot(r))
        return v - self.At.dot(y)


@logtimings(logger.info)
def solve(p, cfg=None):
    '''maximize epsilon subject to A(Q) = c0 + eps c1 and Q PSD'''
    cfg = cfg or SolverConfig()
    N = p.gram_size
    if p.degenerate:
        logger.info("Degenerate problem, nothing to solve.")
        return GramSolution(np.zeros((N, N)), float(p.cap), DEGENERATE)
    if N > cfg.max_gram:
        raise CapExceeded("Gram size %d exceeds the dense limit %d"
                          % (N, cfg.max_gram))
    A, c0, c1 = constraint_matrix(p)
    iu, scale = svec_scale(N)
    nv = len(scale)
    As = A.dot(sparse.diags(scale))
    Af = sparse.hstack([As, sparse.csr_matrix(-c1.reshape(-1, 1))]).tocsr()
    project = AffineProjector(Af, c0)
    logger.debug("Affine system: %d constraints, rank %d, %d unknowns",
                 Af.shape[0], project.rank, nv + 1)
    cap = float(p.cap)

    def cone(v):
        Q = psd_part(unsvec(v[:nv], iu, scale, N))
        out = np.empty_like(v)
        out[:nv] = Q[iu] / scale
        out[nv] = min(max(v[nv], -cap), cap)
        return out

    objective = np.zeros(nv + 1)
    objective[nv] = 1.0
    z = np.zeros(nv + 1)
    u = np.zeros(nv + 1)
    if cfg.seed:
        rng = np.random.default_rng(cfg.seed)
        z = cone(1e-3 * rng.standard_normal(nv + 1))
    rho, alpha = float(cfg.rho), float(cfg.alpha)
    x = z
    status = MAXITER
    r = s = float('inf')
    it = 0
    for it in range(1, cfg.max_iter + 1):
        x = project(z - u + objective / rho)
        xh = alpha * x + (1 - alpha) * z
        zold = z
        z = cone(xh + u)
        u = u + xh - z
        r = float(np.max(np.abs(x - z)))
        s = rho * float(np.max(np.abs(z - zold)))
        if not (np.isfinite(r) and np.isfinite(s)):
            status = DIVERGED
            break
        if r <= cfg.tol and s <= cfg.tol:
            status = CONVERGED
            break
        if it % ADAPT_EVERY == 0:
            if r > 10 * s:
                rho, u = rho * 2, u / 2
            elif s > 10 * r:
                rho, u = rho / 2, u * 2
        if cfg.log_every and it % cfg.log_every == 0:
            logger.debug("iteration %d: eps=%.12g primal=%.3g dual=%.3g "
                         "rho=%g", it, x[nv], r, s, rho)
    gram = unsvec(z[:nv], iu, scale, N)
    epsilon = float(x[nv])
    if status == DIVERGED:
        residual, violation = float('nan'), float('nan')
    else:
        residual, violation = measure(p, gram, epsilon)
        if status == CONVERGED and residual > 10 * cfg.tol:
            logger.info("Loop converged but the recomputed residual is %g",
                        residual)
            status = MAXITER
    logger.info("Solver finished: %s after %d iterations, eps=%.12g, "
                "residual=%.3g", status, it, epsilon, residual)
    return GramSolution(gram, epsilon, status, iterations=it,
                        residual=residual, dual=s, psd_violation=violation,
                        loop_residual=r)


def export_solution(s):
    '''the plain text solution format: epsilon, dimension, lower triangle'''
    N = s.gram_size
    lines = ['epsilon %r' % (float(s.epsilon),), 'dimension %d' % (N,)]
    for i in range(N):
        for j in range(i + 1):
            lines.append(repr(float(s.gram[i, j])))
    return '\n'.join(lines) + '\n'


def import_solution(p, text, cfg=None):
    '''read an external solution; residuals are recomputed here'''
    cfg = cfg or SolverConfig()
    lines = [x.strip() for x in text.splitlines()]
    lines = [x for x in lines if x and not x.startswith('#')]
    if not lines or not lines[0].startswith('epsilon'):
        raise ParseError("Solution must start with an 'epsilon' line")
    try:
        epsilon = float(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError("Bad epsilon line %r" % (lines[0],))
    lines = lines[1:]
    N = p.gram_size
    if lines and lines[0].startswith('dimension'):
        try:
            dim = int(lines[0].split()[1])
        except (IndexError, ValueError):
            raise ParseError("Bad dimension line %r" % (lines[0],))
        if dim != N:
            raise DimensionMismatch("Solution has dimension %d, problem has "
                                    "Gram size %d" % (dim, N))
        lines = lines[1:]
    try:
        values = [float(x) for line in lines for x in line.split()]
    except ValueError:
        raise ParseError("Non-numeric Gram entry in solution")
    need = N * (N + 1) // 2
    if len(values) < need:
        raise ParseError("Solution has %d Gram entries, expected %d"
                         % (len(values), need))
    if len(values) > need:
        raise DimensionMismatch("Solution has %d Gram entries, expected %d"
                                % (len(values), need))
    gram = np.zeros((N, N))
    it = iter(values)
    for i in range(N):
        for j in range(i + 1):
            gram[i, j] = gram[j, i] = next(it)
    residual, violation = measure(p, gram, epsilon)
    if violation > cfg.tol:
        status = DIVERGED
        logger.warning("Imported Gram has a negative eigenvalue %g",
                       -violation)
    elif residual <= 10 * cfg.tol:
        status = CONVERGED
    else:
        status = MAXITER
    if p.degenerate:
        status = DEGENERATE
    return GramSolution(gram, epsilon, status, residual=residual,
                        psd_violation=violation)

#
# -- end of file
