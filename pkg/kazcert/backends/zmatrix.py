#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import math
import logging

import numpy
import sympy

from kazcert.backends.common import BaseBackend, split_assignments
from kazcert.errors import PresentationSyntaxError

logger = logging.getLogger(__name__)


def parse_matrix(text):
    '''"1,1,0,1" or "[1,1,0,1]" -> square tuple-of-tuples, row major'''
    body = text.strip().lstrip('[').rstrip(']')
    try:
        entries = [int(x) for x in body.split(',') if x.strip()]
    except ValueError:
        raise PresentationSyntaxError("Integer matrix expected, got %r"
                                      % (text,))
    n = int(math.isqrt(len(entries)))
    if n == 0 or n * n != len(entries):
        raise PresentationSyntaxError("Matrix %r is not square" % (text,))
    return tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))


class IntegerMatrixGroup(BaseBackend):
    '''a subgroup of GL(n, Z) given by unimodular generator matrices

    Handles are tuples of integer row tuples.  The backend never claims
    finiteness, even when the generated group happens to be finite; use
    the perm backend for finite groups.
    '''
    keyword = 'zmat'

    def __init__(self, generators, matrices):
        super(IntegerMatrixGroup, self).__init__(generators)
        sizes = set(len(m) for m in matrices)
        if len(sizes) > 1:
            raise PresentationSyntaxError("Matrices of mixed sizes %r"
                                          % (sorted(sizes),))
        self.size = sizes.pop() if sizes else 1
        for name, m in zip(self.generators, matrices):
            det = sympy.Matrix(m).det()
            if abs(det) != 1:
                raise PresentationSyntaxError(
                    "Matrix for %s has determinant %s, not +/-1" % (name, det))
        self.matrices = tuple(matrices)
        self._inverses = dict()

    @classmethod
    def fromstatement(cls, rest, generators, statement=None):
        texts = split_assignments(rest, generators, statement)
        return cls(generators, [parse_matrix(t) for t in texts])

    def statement(self):
        parts = [self.keyword]
        for name, m in zip(self.generators, self.matrices):
            parts.append('%s=%s' % (name, ','.join(str(x) for r in m
                                                   for x in r)))
        return ' '.join(parts)

    @staticmethod
    def _handle(a):
        return tuple(tuple(int(x) for x in row) for row in a)

    def identity(self):
        return self._handle(numpy.identity(self.size, dtype=int))

    def generator(self, idx):
        return self.matrices[idx]

    def multiply(self, x, y):
        # -- object dtype keeps Python integers, no overflow
        a = numpy.array(x, dtype=object)
        b = numpy.array(y, dtype=object)
        return self._handle(a.dot(b))

    def inverse(self, x):
        inv = self._inverses.get(x)
        if inv is None:
            inv = self._handle(sympy.Matrix(x).inv().tolist())
            self._inverses[x] = inv
        return inv

    def format_handle(self, h):
        return '[' + '; '.join(' '.join(str(x) for x in r) for r in h) + ']'

#
# -- end of file
