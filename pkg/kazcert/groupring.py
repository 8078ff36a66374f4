#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import re
import logging
from fractions import Fraction

from kazcert.errors import BallMismatch, ShapeMismatch, RadiusTooSmall
from kazcert.errors import ParseError
from kazcert.utils import format_rational

logger = logging.getLogger(__name__)

term = re.compile(r'^\s*(-?\d+(?:/\d+)?)\*g\[(\d+)\]\s*$')


class GroupRingElement(object):
    '''a finitely supported rational combination of ball elements

    coeffs maps ball indices to nonzero Fractions.  Indices are stable
    across balls of one presentation, so elements compare equal when their
    presentations and coefficients agree, whatever ball carries them.
    '''

    def __init__(self, ball, coeffs=None):
        self.ball = ball
        d = dict()
        for idx, q in (coeffs or dict()).items():
            q = Fraction(q)
            if q:
                d[idx] = q
        self.coeffs = d

    def __repr__(self):
        return '<GroupRingElement:%s>' % (format_element(self),)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.ball.compatible(other.ball) and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    __nonzero__ = __bool__

    def __add__(self, other):
        return gr_add(self, other)

    def __sub__(self, other):
        return gr_add(self, gr_scale(other, -1))

    def __neg__(self):
        return gr_scale(self, -1)

    def coefficient(self, idx):
        return self.coeffs.get(idx, Fraction(0))

    def support(self):
        return sorted(self.coeffs)

    def radius(self):
        '''largest word length in the support, 0 for the zero element'''
        wl = self.ball.word_length
        return max([wl[i] for i in self.coeffs] + [0])

    def describe(self):
        '''human text in group notation, e.g. "2*e - 1*t - 1*t^2"'''
        if not self.coeffs:
            return '0'
        parts = list()
        for idx in self.support():
            q = self.coeffs[idx]
            name = self.ball.format_element(idx)
            sign = '-' if q < 0 else '+'
            parts.append('%s %s*%s' % (sign, format_rational(abs(q)), name))
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]


def zero(ball):
    return GroupRingElement(ball)


def unit(ball, q=1):
    '''q times the identity element'''
    return GroupRingElement(ball, {0: q})


def group_element(ball, idx, q=1):
    return GroupRingElement(ball, {idx: q})


def from_word(ball, w, q=1):
    return GroupRingElement(ball, {ball.lookup_word(w): q})


def _larger(a, b):
    a.ball.require_compatible(b.ball)
    return a.ball if len(a.ball) >= len(b.ball) else b.ball


def lift(a, ball):
    '''carry an element to another ball of the same presentation'''
    if a.ball is ball:
        return a
    if not a.ball.compatible(ball):
        raise BallMismatch("Cannot move %r to %r" % (a.ball, ball))
    if a.coeffs and max(a.coeffs) >= len(ball):
        raise RadiusTooSmall("Element of radius %d does not fit the ball of "
                             "radius %s" % (a.radius(), ball.radius))
    return GroupRingElement(ball, a.coeffs)


def gr_add(a, b):
    ball = _larger(a, b)
    d = dict(a.coeffs)
    for idx, q in b.coeffs.items():
        d[idx] = d.get(idx, 0) + q
    return GroupRingElement(ball, d)


def gr_scale(a, q):
    q = Fraction(q)
    return GroupRingElement(a.ball, dict((i, q * c)
                                         for i, c in a.coeffs.items()))


def gr_mul(a, b, out_ball):
    '''convolution product sum a(x) b(y) xy, computed in out_ball'''
    a.ball.require_compatible(out_ball)
    b.ball.require_compatible(out_ball)
    d = dict()
    for x, p in a.coeffs.items():
        for y, q in b.coeffs.items():
            if x >= len(out_ball) or y >= len(out_ball):
                raise RadiusTooSmall("Factor lies outside the product ball "
                                     "of radius %s" % (out_ball.radius,))
            xy = out_ball.product_index(x, y)
            d[xy] = d.get(xy, 0) + p * q
    return GroupRingElement(out_ball, d)


def gr_star(a):
    '''the involution: the coefficient of g moves to g^-1'''
    inv = a.ball.inverse_index
    return GroupRingElement(a.ball, dict((inv[i], q)
                                         for i, q in a.coeffs.items()))


def l1_norm(a):
    return sum([abs(q) for q in a.coeffs.values()], Fraction(0))


def augmentation(a):
    return sum(a.coeffs.values(), Fraction(0))


def format_element(a):
    '''serialize as "q1*g[i1] + q2*g[i2]", indices ascending; "0" if zero'''
    if not a.coeffs:
        return '0'
    return ' + '.join('%s*g[%d]' % (format_rational(a.coeffs[i]), i)
                      for i in a.support())


def parse_element(text, ball):
    text = text.strip()
    if text == '0':
        return zero(ball)
    d = dict()
    for chunk in text.split(' + '):
        m = term.match(chunk)
        if not m:
            raise ParseError("Bad group ring term %r" % (chunk,))
        idx = int(m.group(2))
        if idx >= len(ball):
            raise ParseError("Element index %d outside ball of %d elements"
                             % (idx, len(ball)))
        if idx in d:
            raise ParseError("Repeated element index %d in %r" % (idx, text))
        d[idx] = Fraction(m.group(1))
    return GroupRingElement(ball, d)


class GroupRingMatrix(object):
    '''a dense rows x cols grid of GroupRingElements sharing one ball'''

    def __init__(self, ball, entries, cols=None):
        self.ball = ball
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        if self.entries:
            self.cols = len(self.entries[0])
        else:
            self.cols = cols or 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ShapeMismatch("Ragged matrix rows")

    def __repr__(self):
        return '<GroupRingMatrix:%dx%d>' % (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, GroupRingMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    @property
    def shape(self):
        return (self.rows, self.cols)

    def iterentries(self):
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                yield i, j, a

    def is_zero(self):
        return not any(a for _, _, a in self.iterentries())

    def radius(self):
        return max([a.radius() for _, _, a in self.iterentries()] + [0])

    def first_nonzero(self):
        '''(i, j, element) of the first nonzero entry in row order, or None'''
        for i, j, a in self.iterentries():
            if a:
                return i, j, a
        return None


def mat_from_function(ball, rows, cols, f):
    return GroupRingMatrix(ball, [[f(i, j) for j in range(cols)]
                                  for i in range(rows)], cols=cols)


def mat_zero(ball, rows, cols):
    return mat_from_function(ball, rows, cols, lambda i, j: zero(ball))


def mat_identity(ball, n, q=1):
    return mat_from_function(ball, n, n,
                             lambda i, j: unit(ball, q) if i == j
                             else zero(ball))


def mat_lift(A, ball):
    return mat_from_function(ball, A.rows, A.cols,
                             lambda i, j: lift(A.entries[i][j], ball))


def mat_add(A, B):
    if A.shape != B.shape:
        raise ShapeMismatch("Cannot add %dx%d and %dx%d" % (A.shape + B.shape))
    ball = A.ball if len(A.ball) >= len(B.ball) else B.ball
    return mat_from_function(ball, A.rows, A.cols,
                             lambda i, j: gr_add(A.entries[i][j],
                                                 B.entries[i][j]))


def mat_scale(A, q):
    return mat_from_function(A.ball, A.rows, A.cols,
                             lambda i, j: gr_scale(A.entries[i][j], q))


def mat_mul(A, B, out_ball):
    if A.cols != B.rows:
        raise ShapeMismatch("Cannot multiply %dx%d by %dx%d"
                            % (A.shape + B.shape))

    def entry(i, j):
        acc = zero(out_ball)
        for k in range(A.cols):
            a, b = A.entries[i][k], B.entries[k][j]
            if a and b:
                acc = gr_add(acc, gr_mul(a, b, out_ball))
        return acc
    return mat_from_function(out_ball, A.rows, B.cols, entry)


def mat_scalar_mul(a, A, out_ball, right=None):
    '''a * A (or a * A * right when right is given) for a scalar a'''
    def entry(i, j):
        x = gr_mul(a, A.entries[i][j], out_ball)
        if right is not None:
            x = gr_mul(x, right, out_ball)
        return x
    return mat_from_function(out_ball, A.rows, A.cols, entry)


def mat_transpose(A):
    '''plain transpose, no involution'''
    return mat_from_function(A.ball, A.cols, A.rows,
                             lambda i, j: A.entries[j][i])


def mat_star(A):
    '''transpose followed by the entrywise involution'''
    return mat_from_function(A.ball, A.cols, A.rows,
                             lambda i, j: gr_star(A.entries[j][i]))


def mat_l1_norm(A):
    '''max over rows of the summed l1 norms of the entries'''
    return max([sum([l1_norm(a) for a in row], Fraction(0))
                for row in A.entries] + [Fraction(0)])

#
# -- end of file
