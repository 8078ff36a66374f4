#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import json
import logging
import itertools
from fractions import Fraction
from collections import OrderedDict

import numpy as np
import sympy
import networkx as nx
from scipy.linalg import null_space

from kazcert.backends.permutation import PermutationGroup, parity
from kazcert.ball import enumerate_ball, FULL
from kazcert.errors import CapExceeded, NotUnitary, ModuleRelatorViolation
from kazcert.errors import ParseError, KazcertError
from kazcert.resolution import laplacian, rational_rank
from kazcert.utils import logtimings, arg_isdegrees, arg_isnonnegint
from kazcert.utils import arg_isreadablefile, format_rational

logger = logging.getLogger(__name__)

DEFAULT_BAR_CAP = 10 ** 6
KERNEL_THRESHOLD = 1e-10
FLOAT_RANK_TOL = 1e-8
UNITARY_TOL = 1e-12

PASS = 'PASS'
FAIL = 'FAIL'
SKIP = 'SKIP'

builtin_modules = ('trivial', 'regular', 'reg0', 'sign')

REDUCED_EQUALS_ORDINARY = (
    'All modules here are finite dimensional, so every coboundary has '
    'closed image and reduced cohomology coincides with ordinary '
    'cohomology; the reduced statements are checked where they are '
    'literally true.')


class OracleConfig(object):

    @classmethod
    def argparse(cls, p):
        descrip = 'brute-force cohomology and spectra of finite groups'
        g = p.add_argument_group(title=cls.__name__, description=descrip)
        gadd = g.add_argument
        gadd('--oracle-module', '--module', default='reg0',
             choices=builtin_modules,
             help='coefficient module [%(default)s]')
        gadd('--oracle-module-file', '--module-file', default=None,
             type=arg_isreadablefile,
             help='read generator matrices of a module from a file')
        gadd('--oracle-degrees', '--degrees', default='0..2',
             help='degrees to check, "0..2" or "0,1" [%(default)s]')
        gadd('--oracle-bar-cap', '--bar-cap', type=arg_isnonnegint,
             default=DEFAULT_BAR_CAP,
             help='largest bar cochain space, |G|^(k+1) dim [%(default)s]')

    @classmethod
    def degrees(cls, config):
        return arg_isdegrees(config.oracle_degrees)


class FiniteModule(object):
    '''a representation of a finite group, given on the generators

    Matrices act on column vectors on the left, rho(gh) = rho(g) rho(h).
    Exact modules hold Fraction object arrays, the others floats.
    '''

    def __init__(self, ball, name, generator_matrices, exact=True):
        if not ball.is_full:
            raise KazcertError("A finite module needs the whole group, got "
                               "%r" % (ball,))
        self.ball = ball
        self.name = name
        self.exact = exact
        dtype = object if exact else float
        self.generator_matrices = [np.array(m, dtype=dtype)
                                   for m in generator_matrices]
        dims = set(m.shape for m in self.generator_matrices)
        if len(dims) > 1 or any(a != b for a, b in dims):
            raise KazcertError("Module %s: generator matrices must be square "
                               "and of one size" % (name,))
        n = len(ball.presentation.generators)
        if len(self.generator_matrices) != n:
            raise KazcertError("Module %s has %d matrices for %d generators"
                               % (name, len(self.generator_matrices), n))
        self.dimension = dims.pop()[0] if dims else 0
        self._inverses = [self.invert(m) for m in self.generator_matrices]
        self.element_matrices = [self.word_matrix(w) for w in ball.words]
        self.check_relators()
        self.is_unitary = self.check_unitary()

    def __repr__(self):
        return '<FiniteModule:%s,dim=%d>' % (self.name, self.dimension)

    def identity(self):
        if self.exact:
            m = np.empty((self.dimension, self.dimension), dtype=object)
            for i, j in itertools.product(range(self.dimension), repeat=2):
                m[i, j] = Fraction(int(i == j))
            return m
        return np.eye(self.dimension)

    def invert(self, m):
        if not self.exact:
            return np.linalg.inv(m)
        inv = sympy.Matrix(m.tolist()).inv()
        return np.array([[Fraction(int(x.p), int(x.q)) for x in row]
                         for row in inv.tolist()], dtype=object)

    def word_matrix(self, letters):
        m = self.identity()
        for idx, sign in letters:
            step = self.generator_matrices[idx] if sign > 0 \
                else self._inverses[idx]
            m = m.dot(step)
        return m

    def close(self, a, b):
        if self.exact:
            return bool(np.all(a == b))
        return bool(np.max(np.abs(np.asarray(a, float) -
                                  np.asarray(b, float)), initial=0) <=
                    UNITARY_TOL * max(1.0, self.dimension))

    def check_relators(self):
        p = self.ball.presentation
        ident = self.identity()
        for r in p.relators:
            if not self.close(self.word_matrix(r.letters), ident):
                raise ModuleRelatorViolation(
                    "Module %s: relator %s does not act as the identity"
                    % (self.name, p.format_word(r)))

    def check_unitary(self):
        ident = np.eye(self.dimension)
        for m in self.generator_matrices:
            m = np.asarray(m, float)
            if np.max(np.abs(m.dot(m.T) - ident), initial=0) > UNITARY_TOL:
                return False
        return True

    def rho(self, idx):
        return self.element_matrices[idx]

    def right_action(self, idx):
        '''v . g = rho(g^-1) v'''
        return self.element_matrices[self.ball.inverse_index[idx]]

    def specialize(self, a):
        '''rho of a group ring element'''
        dtype = object if self.exact else float
        out = np.zeros((self.dimension, self.dimension), dtype=dtype)
        if self.exact:
            out = out + Fraction(0)
        for g, q in a.coeffs.items():
            out = out + (q if self.exact else float(q)) * self.rho(g)
        return out

    def specialize_matrix(self, A):
        '''the block matrix of rho applied entrywise'''
        d = self.dimension
        dtype = object if self.exact else float
        out = np.zeros((A.rows * d, A.cols * d), dtype=dtype)
        if self.exact:
            out = out + Fraction(0)
        for i, j, a in A.iterentries():
            if a:
                out[i * d:(i + 1) * d, j * d:(j + 1) * d] = self.specialize(a)
        return out

    def rank(self, m):
        return matrix_rank(m, self.exact)


def matrix_rank(m, exact):
    if m.size == 0:
        return 0
    if exact:
        rows = [dict((j, Fraction(x)) for j, x in enumerate(row) if x)
                for row in m]
        return rational_rank(rows, m.shape[1])
    return int(np.linalg.matrix_rank(np.asarray(m, float),
                                     tol=FLOAT_RANK_TOL))


def generator_indices(ball):
    backend = ball.backend
    return [ball.find(backend.generator(i))
            for i in range(len(ball.presentation.generators))]


def trivial_module(ball):
    n = len(ball.presentation.generators)
    return FiniteModule(ball, 'trivial', [[[Fraction(1)]]] * n)


def permutation_matrix(ball, s):
    n = len(ball)
    m = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        m[ball.product_index(s, h)][h] = Fraction(1)
    return m


def regular_module(ball):
    return FiniteModule(ball, 'regular', [permutation_matrix(ball, s)
                                          for s in generator_indices(ball)])


def reg0_module(ball):
    '''the orthogonal complement of the constants in the regular module'''
    n = len(ball)
    B = null_space(np.ones((1, n)))
    mats = list()
    for s in generator_indices(ball):
        P = np.array(permutation_matrix(ball, s), dtype=float)
        mats.append(B.T.dot(P).dot(B))
    return FiniteModule(ball, 'reg0', mats, exact=False)


def sign_module(ball):
    '''permutation sign, or every generator acting by -1'''
    backend = ball.backend
    mats = list()
    for i in range(len(ball.presentation.generators)):
        if isinstance(backend, PermutationGroup):
            value = parity(backend.generator(i))
        else:
            value = -1
        mats.append([[Fraction(value)]])
    return FiniteModule(ball, 'sign', mats)


def builtin_module(name, ball):
    makers = dict(trivial=trivial_module, regular=regular_module,
                  reg0=reg0_module, sign=sign_module)
    if name not in makers:
        raise KazcertError("Unknown module %r; use one of %s"
                           % (name, ', '.join(builtin_modules)))
    return makers[name](ball)


def parse_module(text, ball, name='user'):
    '''generator matrices, one "gen = q,q,...;q,q,..." line per generator'''
    p = ball.presentation
    mats = dict()
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ParseError("Line %d: expected 'generator = rows'" % (n,))
        gen, body = [x.strip() for x in line.split('=', 1)]
        if gen not in p.generators:
            raise ParseError("Line %d: unknown generator %r" % (n, gen))
        try:
            rows = [[Fraction(x) for x in row.split(',') if x.strip()]
                    for row in body.split(';') if row.strip()]
        except (ValueError, ZeroDivisionError):
            raise ParseError("Line %d: bad matrix entry" % (n,))
        if any(len(r) != len(rows) for r in rows):
            raise ParseError("Line %d: matrix is not square" % (n,))
        mats[gen] = rows
    missing = [g for g in p.generators if g not in mats]
    if missing:
        raise ParseError("No matrix for %s" % (', '.join(missing),))
    return FiniteModule(ball, name, [mats[g] for g in p.generators])


def _check_cap(G, k, dim, cap):
    size = G ** (k + 1) * max(dim, 1)
    if size > cap:
        raise CapExceeded("Bar complex in degree %d needs %d > %d entries"
                          % (k, size, cap))


def bar_coboundary(V, n):
    '''delta^n : C^n -> C^{n+1} of the inhomogeneous bar complex'''
    ball = V.ball
    G, d = len(ball), V.dimension
    dtype = object if V.exact else float
    out = np.zeros((G ** (n + 1) * d, G ** n * d), dtype=dtype)
    if V.exact:
        out = out + Fraction(0)
    ident = V.identity()

    def index(t):
        x = 0
        for g in t:
            x = x * G + g
        return x

    for row, t in enumerate(itertools.product(range(G), repeat=n + 1)):
        r = slice(row * d, (row + 1) * d)

        def add(cols, block, sign):
            c = index(cols)
            out[r, c * d:(c + 1) * d] += sign * block

        add(t[1:], V.rho(t[0]), 1)
        for i in range(n):
            merged = t[:i] + (ball.product_index(t[i], t[i + 1]),) + t[i + 2:]
            add(merged, ident, (-1) ** (i + 1))
        add(t[:n], ident, (-1) ** (n + 1))
    return out


def bar_boundary(V, n):
    '''partial_n : C_n -> C_{n-1} of the bar complex, right action'''
    ball = V.ball
    G, d = len(ball), V.dimension
    dtype = object if V.exact else float
    out = np.zeros((G ** (n - 1) * d, G ** n * d), dtype=dtype)
    if V.exact:
        out = out + Fraction(0)
    ident = V.identity()

    def index(t):
        x = 0
        for g in t:
            x = x * G + g
        return x

    for col, t in enumerate(itertools.product(range(G), repeat=n)):
        c = slice(col * d, (col + 1) * d)

        def add(rows, block, sign):
            r = index(rows)
            out[r * d:(r + 1) * d, c] += sign * block

        add(t[1:], V.right_action(t[0]), 1)
        for i in range(n - 1):
            merged = t[:i] + (ball.product_index(t[i], t[i + 1]),) + t[i + 2:]
            add(merged, ident, (-1) ** (i + 1))
        add(t[:n - 1], ident, (-1) ** n)
    return out


@logtimings(logger.debug)
def bar_cohomology(p, V, k, cap=DEFAULT_BAR_CAP):
    '''dim H^k(G, V) from the inhomogeneous bar complex, k <= 2'''
    if not p.is_finite:
        raise KazcertError("Bar cohomology needs a finite group")
    if k < 0 or k > 2:
        raise CapExceeded("Bar cohomology is limited to degrees 0..2")
    G, d = len(V.ball), V.dimension
    _check_cap(G, k, d, cap)
    kernel = G ** k * d - V.rank(bar_coboundary(V, k))
    image = V.rank(bar_coboundary(V, k - 1)) if k > 0 else 0
    return kernel - image


@logtimings(logger.debug)
def bar_homology(p, V, k, cap=DEFAULT_BAR_CAP):
    '''dim H_k(G, V) from the bar complex, k <= 2'''
    if not p.is_finite:
        raise KazcertError("Bar homology needs a finite group")
    if k < 0 or k > 2:
        raise CapExceeded("Bar homology is limited to degrees 0..2")
    G, d = len(V.ball), V.dimension
    _check_cap(G, k, d, cap)
    kernel = G ** k * d - (V.rank(bar_boundary(V, k)) if k > 0 else 0)
    image = V.rank(bar_boundary(V, k + 1))
    return kernel - image


def complex_cohomology(c, V, k):
    '''dim ker rho(M_{k+1}) - rank rho(M_k) on V^{m_k}'''
    d = V.dimension
    total = c.ranks[k] * d
    upper = 0
    if c.has(k + 1):
        upper = V.rank(V.specialize_matrix(c.boundary(k + 1)))
    elif not c.complete:
        logger.warning("d_%d missing; cohomology in degree %d is that of "
                       "the truncated complex", k + 1, k)
    lower = V.rank(V.specialize_matrix(c.boundary(k))) if k >= 1 else 0
    return total - upper - lower


def laplacian_spectrum(c, V, k):
    '''sorted eigenvalues of the specialized Laplacian rho(Delta_k)'''
    if not V.is_unitary:
        raise NotUnitary("Module %s is not orthogonal" % (V.name,))
    L = np.asarray(V.specialize_matrix(laplacian(c, k, V.ball).matrix),
                   dtype=float)
    if L.size == 0:
        return list()
    asym = float(np.max(np.abs(L - L.T)))
    if asym > UNITARY_TOL * max(1.0, float(np.max(np.abs(L)))):
        raise NotUnitary("Specialized Laplacian in degree %d is not "
                         "symmetric (%.3g)" % (k, asym))
    return sorted(float(x) for x in np.linalg.eigvalsh((L + L.T) / 2))


def cayley_graph(ball):
    '''the Cayley multigraph: one edge g -- g s per element and generator'''
    G = nx.MultiGraph()
    G.add_nodes_from(range(len(ball)))
    for s in generator_indices(ball):
        if s == 0:
            continue
        for g in range(len(ball)):
            G.add_edge(g, ball.product_index(g, s))
    return G


def cayley_spectrum(ball):
    return sorted(float(x) for x in nx.laplacian_spectrum(cayley_graph(ball)))


class DegreeResult(object):

    def __init__(self, degree):
        self.degree = degree
        self.cohomology = None
        self.homology = None
        self.complex_cohomology = None
        self.spectrum = None
        self.kernel = None
        self.verdicts = list()

    def verdict(self, name, ok, witness=None):
        if ok is None:
            value = SKIP
        else:
            value = PASS if ok else FAIL
        self.verdicts.append((name, value, witness))
        if value == FAIL:
            logger.info("Degree %d: %s FAILED %s", self.degree, name,
                        witness or '')

    @property
    def passed(self):
        return all(v != FAIL for _, v, _ in self.verdicts)

    def asdict(self):
        return OrderedDict([
            ('degree', self.degree),
            ('cohomology', self.cohomology),
            ('homology', self.homology),
            ('complex-cohomology', self.complex_cohomology),
            ('kernel', self.kernel),
            ('spectrum', self.spectrum),
            ('verdicts', [OrderedDict([('check', n), ('verdict', v),
                                       ('witness', w)])
                          for n, v, w in self.verdicts])])


class OracleReport(object):

    def __init__(self, group, module, results):
        self.group = group
        self.module = module
        self.results = results

    def __repr__(self):
        return '<OracleReport:%s,%s>' % (self.module,
                                         PASS if self.passed else FAIL)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def format(self):
        lines = ['group: %s' % (self.group,), 'module: %s' % (self.module,)]
        for r in self.results:
            spectrum = '-' if r.spectrum is None else \
                ' '.join('%.6g' % (x,) for x in r.spectrum)
            lines.append('degree %d: H^%d=%s H_%d=%s ker=%s' % (
                r.degree, r.degree, _show(r.cohomology), r.degree,
                _show(r.homology), _show(r.kernel)))
            lines.append('  spectrum: %s' % (spectrum,))
            for name, verdict, witness in r.verdicts:
                text = '  %-30s %s' % (name, verdict)
                if witness:
                    text += '  (%s)' % (witness,)
                lines.append(text)
        lines.append('verdict: %s' % (PASS if self.passed else FAIL,))
        lines.append(REDUCED_EQUALS_ORDINARY)
        return '\n'.join(lines) + '\n'

    def to_json(self):
        doc = OrderedDict([('group', self.group), ('module', self.module),
                           ('passed', self.passed),
                           ('note', REDUCED_EQUALS_ORDINARY),
                           ('degrees', [r.asdict() for r in self.results])])
        return json.dumps(doc, indent=2) + '\n'


def _show(x):
    return '-' if x is None else str(x)


def is_complex_witness(c, V, k):
    '''None if rho(M_{k+1}) rho(M_k) vanishes, else a witness string'''
    if k < 1 or not c.has(k + 1):
        return None
    prod = V.specialize_matrix(c.boundary(k + 1)).dot(
        V.specialize_matrix(c.boundary(k)))
    prod = np.asarray(prod, dtype=float)
    if prod.size == 0:
        return None
    worst = np.unravel_index(np.argmax(np.abs(prod)), prod.shape)
    if abs(prod[worst]) <= FLOAT_RANK_TOL:
        return None
    return 'entry (%d, %d) of rho(M_%d M_%d) is %.6g' % (
        worst[0], worst[1], k + 1, k, prod[worst])


@logtimings(logger.info)
def cross_check(c, V, degrees, cap=DEFAULT_BAR_CAP):
    '''PASS/FAIL verdicts tying spectra, kernels and cohomology together'''
    p = c.presentation
    results = list()
    for k in degrees:
        r = DegreeResult(k)
        results.append(r)
        if k > c.top:
            r.verdict('degree-in-complex', False,
                      'top degree is %d' % (c.top,))
            continue
        witness = is_complex_witness(c, V, k)
        r.verdict('is-complex', witness is None, witness)
        resolved = k <= c.exact_through and (c.has(k + 1) or c.complete)
        r.complex_cohomology = complex_cohomology(c, V, k)
        if k <= 2:
            try:
                r.cohomology = bar_cohomology(p, V, k, cap)
                r.homology = bar_homology(p, V, k, cap)
            except CapExceeded as e:
                logger.info("Skipping bar complex: %s", e)
        if r.cohomology is not None and resolved:
            r.verdict('complex-matches-bar',
                      r.complex_cohomology == r.cohomology,
                      'complex %d, bar %d' % (r.complex_cohomology,
                                              r.cohomology))
        known = r.cohomology
        if known is None and resolved:
            known = r.complex_cohomology
        if V.is_unitary:
            r.spectrum = laplacian_spectrum(c, V, k)
            r.kernel = sum(1 for x in r.spectrum if abs(x) <= KERNEL_THRESHOLD)
            gap = min([abs(x) for x in r.spectrum] + [float('inf')])
            r.verdict('spectrum-nonnegative',
                      all(x >= -KERNEL_THRESHOLD for x in r.spectrum),
                      'min %.6g' % (min(r.spectrum + [0.0]),))
            if known is not None:
                r.verdict('kernel-equals-cohomology', r.kernel == known,
                          'ker %d, H^%d %d' % (r.kernel, k, known))
                invertible = gap > KERNEL_THRESHOLD
                if invertible:
                    vanish = known == 0 and r.homology in (None, 0)
                    r.verdict('invertible-implies-vanishing', vanish,
                              'H^%d=%s H_%d=%s' % (k, known, k, r.homology))
                if known == 0:
                    r.verdict('vanishing-implies-gap', invertible,
                              'min |spec| %.6g' % (gap,))
            if k == 0 and V.name == 'regular':
                cayley = cayley_spectrum(V.ball)
                ok = len(cayley) == len(r.spectrum) and all(
                    abs(a - b) <= FLOAT_RANK_TOL
                    for a, b in zip(cayley, r.spectrum))
                r.verdict('cayley-spectrum', ok,
                          'Cayley %s'
                          % (' '.join('%.6g' % x for x in cayley),))
        elif known is not None:
            r.verdict('kernel-equals-cohomology', None, 'module not unitary')
    report = OracleReport(p.text.strip().replace('\n', '; '), V.name, results)
    logger.info("Oracle verdict: %s", PASS if report.passed else FAIL)
    return report


def consistency_check(cert, c):
    '''(ok, min spectrum) comparing a certified epsilon with the least
    eigenvalue of the certified Laplacian on the augmentation module'''
    p = c.presentation
    if not p.is_finite:
        raise KazcertError("Consistency check needs a finite group")
    ball = c.ball if c.ball.is_full else enumerate_ball(p, FULL)
    V = reg0_module(ball)
    spectrum = laplacian_spectrum(c, V, cert.mode.degree)
    if not spectrum:
        return True, None
    least = spectrum[0]
    ok = least >= float(cert.epsilon) - FLOAT_RANK_TOL
    logger.info("Certified eps %s against least eigenvalue %.9g: %s",
                format_rational(cert.epsilon), least, 'ok' if ok else 'BAD')
    return ok, least

#
# -- end of file
