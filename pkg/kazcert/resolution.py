#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging
from argparse import Namespace
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from kazcert.ball import enumerate_ball, FULL
from kazcert.errors import NotAComplex, ShapeMismatch, TruncatedDegree
from kazcert.errors import ParseError, KazcertError, RadiusTooSmall
from kazcert.groupring import GroupRingElement, GroupRingMatrix
from kazcert.groupring import zero, unit, gr_add, gr_mul
from kazcert.groupring import augmentation, format_element, from_word
from kazcert.groupring import parse_element, mat_from_function
from kazcert.groupring import mat_mul, mat_star, mat_add, mat_transpose
from kazcert.groupring import mat_zero, mat_lift
from kazcert.presentation import parse_presentation
from kazcert.utils import sha256text, logtimings

logger = logging.getLogger(__name__)

PRESENTATION_COMPLEX = 'PresentationComplex'
CYCLIC_PERIODIC = 'CyclicPeriodic'
USER_SUPPLIED = 'UserSupplied'
origins = (PRESENTATION_COMPLEX, CYCLIC_PERIODIC, USER_SUPPLIED)

COMPLEX_FORMAT = 'kazcert-complex 1'


def convention_string(p):
    '''the Laplacian normalization, recorded with every certificate'''
    return 'Delta0 = d1* d1 = sum_{s in S} (2 - s - s^-1); S = %s' % (
        ' '.join(p.generators),)


class ChainComplexData(object):
    '''a truncated based free resolution P_K -> ... -> P_0 -> Q

    differentials[k] is the stored m_{k-1} x m_k matrix d_k, whose column
    for a generator of P_k lists its boundary.  Modules are left modules of
    row vectors, so the boundary map is right multiplication by the
    transpose M_k = d_k^T; see boundary().

    complete is True when P_{K+1} = 0 is part of the resolution (free
    groups), so a missing d_{K+1} is genuinely zero rather than truncated.
    '''

    def __repr__(self):
        return '<%s:%s ranks=%r>' % (self.__class__.__name__, self.origin,
                                     self.ranks)

    def __init__(self, ball, ranks, differentials, origin,
                 exact_through=0, complete=False):
        if origin not in origins:
            raise ValueError("Unknown complex origin %r" % (origin,))
        self.ball = ball
        self.presentation = ball.presentation
        self.ranks = list(ranks)
        self.differentials = dict(differentials)
        self.origin = origin
        self.exact_through = exact_through
        self.complete = complete
        self._text = None

    @property
    def top(self):
        return len(self.ranks) - 1

    def has(self, k):
        return k in self.differentials

    def boundary(self, k):
        '''M_k = d_k^T, the m_k x m_{k-1} matrix acting on the right'''
        return mat_transpose(self.differentials[k])

    def entry_radius(self):
        return max([d.radius() for d in self.differentials.values()] + [0])

    @property
    def text(self):
        if self._text is None:
            self._text = serialize_complex(self)
        return self._text

    @property
    def fingerprint(self):
        return sha256text(self.text)

    @property
    def convention(self):
        return convention_string(self.presentation)

    def product_ball(self, factors=2, minimum=0):
        '''a ball holding products of this many differential entries'''
        if self.ball.is_full:
            return self.ball
        radius = max(factors * self.entry_radius(), minimum)
        if radius <= self.ball.radius:
            return self.ball
        return enumerate_ball(self.presentation, radius, cap=self.ball.cap)


def fox_derivative(w, s, ball, p=None):
    '''left Fox derivative of a FreeWord with respect to generator s

    A letter s at position i contributes +u, a letter s^-1 contributes
    -u s^-1, where u is the prefix before position i.
    '''
    d = dict()
    backend = ball.backend
    prefix = backend.identity()
    for idx, sign in w.letters:
        step = backend.letter(idx, sign)
        after = backend.multiply(prefix, step)
        if idx == s:
            handle = prefix if sign > 0 else after
            i = ball.find(handle)
            if i is None:
                raise RadiusTooSmall("Fox derivative leaves the ball of "
                                     "radius %s" % (ball.radius,))
            d[i] = d.get(i, 0) + sign
        prefix = after
    return GroupRingElement(ball, d)


@logtimings(logger.debug)
def build_presentation_complex(p, ball):
    '''the complex of the presentation 2-complex: d_1 = (s - 1), d_2 = Fox'''
    if ball.presentation.key != p.key:
        raise KazcertError("Ball does not belong to this presentation")
    needed = max(1, p.max_relator_length())
    if not ball.is_full and ball.radius < needed:
        raise RadiusTooSmall("Presentation complex needs a ball of radius %d"
                             % (needed,))
    n = len(p.generators)
    r = len(p.relators)
    d1 = mat_from_function(ball, 1, n,
                           lambda i, j: gr_add(from_generator(ball, p, j),
                                               unit(ball, -1)))
    differentials = {1: d1}
    ranks = [1, n]
    complete = True
    if r:
        differentials[2] = mat_from_function(
            ball, n, r, lambda i, j: fox_derivative(p.relators[j], i, ball, p))
        ranks.append(r)
        complete = False
    c = ChainComplexData(ball, ranks, differentials, PRESENTATION_COMPLEX,
                         exact_through=1, complete=complete)
    logger.info("Presentation complex with ranks %r.", c.ranks)
    return c


def cyclic_resolution(n, K, ball):
    '''the periodic resolution of Z/n: d_odd = t - 1, d_even = N'''
    if not ball.is_full or len(ball) != n:
        raise KazcertError("Cyclic resolution needs the full group Z/%d, "
                           "got %r" % (n, ball))
    if len(ball.presentation.generators) != 1:
        raise KazcertError("Cyclic resolution needs a single generator")
    t = ball.find(ball.backend.generator(0))
    tminus = gr_add(GroupRingElement(ball, {t: 1}), unit(ball, -1))
    norm = GroupRingElement(ball, dict((i, 1) for i in range(n)))
    differentials = dict()
    for k in range(1, K + 1):
        entry = tminus if k % 2 else norm
        differentials[k] = GroupRingMatrix(ball, [[entry]])
    c = ChainComplexData(ball, [1] * (K + 1), differentials, CYCLIC_PERIODIC,
                         exact_through=max(K - 1, 0))
    logger.info("Periodic resolution of Z/%d through degree %d.", n, K)
    return c


def composition(c, k, dk=None, dk1=None):
    '''M_{k+1} M_k, which must vanish; None if either side is missing'''
    dk = dk if dk is not None else c.differentials.get(k)
    dk1 = dk1 if dk1 is not None else c.differentials.get(k + 1)
    if dk is None or dk1 is None:
        return None
    out_ball = c.product_ball(minimum=dk.radius() + dk1.radius())
    return mat_mul(mat_transpose(dk1), mat_transpose(dk), out_ball)


def attach_user_differential(c, k, dk, exact=False):
    '''return a new complex with d_k replaced or appended (k = top + 1)'''
    if k < 1 or k > c.top + 1:
        raise ShapeMismatch("Cannot attach d_%d to a complex of top degree %d"
                            % (k, c.top))
    if dk.rows != c.ranks[k - 1]:
        raise ShapeMismatch("d_%d must have %d rows, got %d"
                            % (k, c.ranks[k - 1], dk.rows))
    if k <= c.top and dk.cols != c.ranks[k]:
        raise ShapeMismatch("d_%d must have %d columns, got %d"
                            % (k, c.ranks[k], dk.cols))
    dk = mat_lift(dk, c.ball) if len(dk.ball) != len(c.ball) else dk
    for lower in (k - 1, k):
        below = dk if lower == k else c.differentials.get(lower)
        above = dk if lower == k - 1 else c.differentials.get(lower + 1)
        if below is None or above is None:
            continue
        prod = composition(c, lower, below, above)
        witness = prod.first_nonzero()
        if witness is not None:
            i, j, a = witness
            raise NotAComplex(lower, (i, j), a.describe())
    ranks = list(c.ranks)
    differentials = dict(c.differentials)
    differentials[k] = dk
    if k == c.top + 1:
        ranks.append(dk.cols)
        exact_through = c.exact_through
    else:
        exact_through = min(c.exact_through, k - 2)
    if exact:
        exact_through = max(exact_through, k - 1)
    return ChainComplexData(c.ball, ranks, differentials, c.origin,
                            exact_through=exact_through, complete=False)


def rational_matrix(rows, ncols):
    '''sparse DomainMatrix over QQ from a list of {column: Fraction} rows'''
    d = dict()
    for i, row in enumerate(rows):
        r = dict((j, QQ(q.numerator, q.denominator))
                 for j, q in row.items() if q)
        if r:
            d[i] = r
    return DomainMatrix(d, (len(rows), ncols), QQ)


def rational_rank(rows, ncols):
    if not rows or not ncols:
        return 0
    return rational_matrix(rows, ncols).rank()


def left_kernel(rows, nout):
    '''Q-basis, as dicts, of {x : sum_i x_i rows[i] = 0}'''
    nvars = len(rows)
    columns = [dict() for _ in range(nout)]
    for i, row in enumerate(rows):
        for j, q in row.items():
            columns[j][i] = q
    if not nout:
        return [{i: Fraction(1)} for i in range(nvars)]
    rref, pivots = rational_matrix(columns, nvars).rref()
    rm = rref.to_Matrix()
    basis = list()
    for free in range(nvars):
        if free in pivots:
            continue
        v = {free: Fraction(1)}
        for r, pc in enumerate(pivots):
            x = rm[r, free]
            if x != 0:
                v[pc] = -Fraction(int(x.p), int(x.q))
        basis.append(v)
    return basis


@logtimings(logger.debug)
def extend_finite_resolution(c, top):
    '''extend a complex of a finite group to a resolution through top - 1

    The kernel of x -> x M_K on P_K is computed over Q; module generators
    are chosen greedily until their span under the group is the kernel.
    '''
    ball = c.ball
    if not ball.is_full:
        raise KazcertError("Extending a resolution needs the whole group; "
                           "%r is not finite or not enumerated" % (ball,))
    if c.exact_through < c.top - 1:
        raise KazcertError("Complex is not known to be exact below its top")
    n = len(ball)
    while c.top < top:
        K = c.top
        M = c.boundary(K)
        mk, mk1 = c.ranks[K], c.ranks[K - 1]
        # -- Q-matrix of right multiplication by M_K; row (j, g) is g e_j M_K
        rows = list()
        for j in range(mk):
            for g in range(n):
                row = dict()
                for l in range(mk1):
                    for h, q in M.entries[j][l].coeffs.items():
                        col = l * n + ball.product_index(g, h)
                        row[col] = row.get(col, 0) + q
                rows.append(row)
        kernel = left_kernel(rows, mk1 * n)
        target = len(kernel)
        span = list()
        generators = list()
        for v in kernel:
            if rational_rank(span, mk * n) == target:
                break
            if rational_rank(span + [v], mk * n) == \
                    rational_rank(span, mk * n):
                continue
            generators.append(v)
            for g in range(n):
                moved = dict()
                for col, q in v.items():
                    j, h = divmod(col, n)
                    moved[j * n + ball.product_index(g, h)] = q
                span.append(moved)
        logger.info("Degree %d kernel has Q-dimension %d, %d module "
                    "generators.", K, target, len(generators))
        dk1 = [[zero(ball) for _ in generators] for _ in range(mk)]
        for l, v in enumerate(generators):
            entries = [dict() for _ in range(mk)]
            for col, q in v.items():
                j, h = divmod(col, n)
                entries[j][h] = q
            for j in range(mk):
                dk1[j][l] = GroupRingElement(ball, entries[j])
        dk1 = GroupRingMatrix(ball, dk1, cols=len(generators))
        c = attach_user_differential(c, K + 1, dk1, exact=True)
    return c


def laplacian(c, k, out_ball=None):
    '''Delta_k = M_k M_k* + M_{k+1}* M_{k+1} as a LaplacianMatrix'''
    if k < 0 or k > c.top:
        raise TruncatedDegree("Degree %d outside complex of top degree %d"
                              % (k, c.top))
    if out_ball is None:
        out_ball = c.product_ball()
    m = c.ranks[k]
    result = mat_zero(out_ball, m, m)
    if k >= 1:
        M = mat_lift(c.boundary(k), out_ball)
        result = mat_add(result, mat_mul(M, mat_star(M), out_ball))
    truncated = False
    if c.has(k + 1):
        M1 = mat_lift(c.boundary(k + 1), out_ball)
        result = mat_add(result, mat_mul(mat_star(M1), M1, out_ball))
    elif not c.complete:
        truncated = True
        logger.warning("Laplacian in degree %d: d_%d is missing, the result "
                       "only describes the truncated complex.", k, k + 1)
    return LaplacianMatrix(k, result, truncated)


class LaplacianMatrix(object):

    def __init__(self, degree, matrix, truncated=False):
        self.degree = degree
        self.matrix = matrix
        self.truncated = truncated
        self.support_radius = matrix.radius()

    def __repr__(self):
        return '<LaplacianMatrix:degree=%d,%dx%d%s>' % (
            self.degree, self.matrix.rows, self.matrix.cols,
            ',truncated' if self.truncated else '')


def delta0(c, out_ball=None):
    '''the scalar Laplacian sum_s (2 - s - s^-1) as a group ring element'''
    return laplacian(c, 0, out_ball).matrix.entries[0][0]


class ComplexReport(object):
    '''checked identities of a complex, each (name, ok, witness)'''

    def __init__(self):
        self.checks = list()

    def add(self, name, ok, witness=None):
        self.checks.append(Namespace(name=name, ok=ok, witness=witness))
        logger.debug("%s %s %s", 'PASS' if ok else 'FAIL', name,
                     witness or '')

    @property
    def ok(self):
        return all(x.ok for x in self.checks)

    def failures(self):
        return [x for x in self.checks if not x.ok]

    def format(self):
        lines = list()
        for x in self.checks:
            line = '%s  %s' % ('PASS' if x.ok else 'FAIL', x.name)
            if x.witness:
                line += '  [%s]' % (x.witness,)
            lines.append(line)
        return '\n'.join(lines)


def check_complex(c, out_ball=None):
    '''verify d^2 = 0, the d_1 convention and the Fox fundamental identity'''
    report = ComplexReport()
    p = c.presentation
    ball = c.ball
    if out_ball is None:
        out_ball = c.product_ball(minimum=p.max_relator_length() + 1)

    d1 = c.differentials.get(1)
    if d1 is not None:
        aug = [augmentation(a) for _, _, a in d1.iterentries()]
        report.add('augmentation of d1 vanishes', not any(aug))
    if c.origin == PRESENTATION_COMPLEX and d1 is not None:
        bad = None
        for j in range(len(p.generators)):
            s = ball.find(p.backend.generator(j))
            expected = gr_add(GroupRingElement(ball, {s: 1}), unit(ball, -1))
            if d1.entries[0][j] != expected:
                bad = 'generator %s' % (p.generators[j],)
                break
        report.add('d1 column for s is (s - 1)', bad is None, bad)

    for k in range(1, c.top):
        prod = composition(c, k)
        if prod is None:
            continue
        witness = prod.first_nonzero()
        text = None
        if witness is not None:
            i, j, a = witness
            g = a.support()[0]
            text = 'entry (%d, %d), coefficient %s at %s' % (
                i, j, a.coefficient(g), a.ball.format_element(g))
        report.add('M_%d M_%d = 0' % (k + 1, k), witness is None, text)

    if c.origin == PRESENTATION_COMPLEX:
        gens = [gr_add(from_generator(out_ball, p, j), unit(out_ball, -1))
                for j in range(len(p.generators))]
        for r, w in enumerate(p.relators):
            bad = None
            for n in range(len(w) + 1):
                u = w.prefix(n)
                lhs = zero(out_ball)
                for j in range(len(p.generators)):
                    fd = fox_derivative(u, j, out_ball, p)
                    lhs = gr_add(lhs, gr_mul(fd, gens[j], out_ball))
                rhs = gr_add(from_word(out_ball, u), unit(out_ball, -1))
                if lhs != rhs:
                    bad = 'prefix %s' % (p.format_word(u),)
                    break
            report.add('Fox identity for relator %s' % (p.format_word(w),),
                       bad is None, bad)
        d2 = c.differentials.get(2)
        if d2 is not None:
            bad = None
            for r, w in enumerate(p.relators):
                for j in range(len(p.generators)):
                    fd = fox_derivative(w, j, ball, p)
                    if d2.entries[j][r] != fd:
                        bad = 'relator %s, generator %s' % (
                            p.format_word(w), p.generators[j])
                        break
                if bad:
                    break
            report.add('d2 entries are Fox derivatives', bad is None, bad)
    return report


def from_generator(ball, p, j):
    return GroupRingElement(ball, {ball.find(p.backend.generator(j)): 1})


def serialize_complex(c):
    '''canonical complex file text; its SHA-256 is the complex fingerprint'''
    lines = ['[complex]',
             'format = %s' % (COMPLEX_FORMAT,),
             'origin = %s' % (c.origin,),
             'exact-through = %d' % (c.exact_through,),
             'complete = %s' % ('yes' if c.complete else 'no',),
             'ball-radius = %s' % (FULL if c.ball.is_full else c.ball.radius,),
             'ranks = %s' % (' '.join(str(x) for x in c.ranks),),
             '[presentation]']
    lines.extend(c.presentation.text.splitlines())
    lines.append('[differentials]')
    for k in sorted(c.differentials):
        for i, j, a in c.differentials[k].iterentries():
            if a:
                lines.append('d %d %d %d %s' % (k, i, j, format_element(a)))
    return '\n'.join(lines) + '\n'


def parse_complex(text, cap=None):
    '''rebuild a ChainComplexData from serialize_complex() text'''
    section = None
    header = dict()
    prestext = list()
    entries = list()
    for n, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith('[') and stripped.endswith(']'):
            section = stripped[1:-1]
            continue
        if section == 'complex':
            key, sep, value = stripped.partition('=')
            if not sep:
                raise ParseError("Line %d: expected key = value" % (n,))
            header[key.strip()] = value.strip()
        elif section == 'presentation':
            prestext.append(stripped)
        elif section == 'differentials':
            parts = stripped.split(None, 4)
            if len(parts) != 5 or parts[0] != 'd':
                raise ParseError("Line %d: expected d k row col element"
                                 % (n,))
            try:
                k, i, j = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("Line %d: bad differential index" % (n,))
            entries.append((k, i, j, parts[4], n))
        else:
            raise ParseError("Line %d outside any section" % (n,))
    for key in ('format', 'origin', 'exact-through', 'ball-radius', 'ranks'):
        if key not in header:
            raise ParseError("Complex header lacks %r" % (key,))
    if header['format'] != COMPLEX_FORMAT:
        raise ParseError("Unknown complex format %r" % (header['format'],))
    if header['origin'] not in origins:
        raise ParseError("Unknown origin %r" % (header['origin'],))
    try:
        ranks = [int(x) for x in header['ranks'].split()]
        exact_through = int(header['exact-through'])
        radius = header['ball-radius']
        radius = radius if radius == FULL else int(radius)
    except ValueError:
        raise ParseError("Malformed complex header")
    p = parse_presentation('\n'.join(prestext))
    kwargs = dict()
    if cap is not None:
        kwargs['cap'] = cap
    ball = enumerate_ball(p, radius, **kwargs)
    grids = dict()
    for k in range(1, len(ranks)):
        grids[k] = [[zero(ball) for _ in range(ranks[k])]
                    for _ in range(ranks[k - 1])]
    for k, i, j, etext, n in entries:
        if k not in grids or i >= ranks[k - 1] or j >= ranks[k]:
            raise ParseError("Line %d: entry outside the declared ranks"
                             % (n,))
        grids[k][i][j] = parse_element(etext, ball)
    differentials = dict((k, GroupRingMatrix(ball, g))
                         for k, g in grids.items())
    c = ChainComplexData(ball, ranks, differentials, header['origin'],
                         exact_through=exact_through,
                         complete=header.get('complete') == 'yes')
    return c

#
# -- end of file
