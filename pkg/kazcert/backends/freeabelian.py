#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging

from kazcert.backends.common import BaseBackend

logger = logging.getLogger(__name__)


class FreeAbelian(BaseBackend):
    '''Z^n with one basis vector per generator; handles are exponent tuples'''
    keyword = 'free-abelian'

    def implicit_relators(self):
        '''the commutators [a_i, a_j] for i < j'''
        n = len(self.generators)
        return [((i, 1), (j, 1), (i, -1), (j, -1))
                for i in range(n) for j in range(i + 1, n)]

    def identity(self):
        return (0,) * len(self.generators)

    def generator(self, idx):
        v = [0] * len(self.generators)
        v[idx] = 1
        return tuple(v)

    def multiply(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inverse(self, x):
        return tuple(-a for a in x)

    def format_handle(self, h):
        parts = list()
        for name, n in zip(self.generators, h):
            if n == 1:
                parts.append(name)
            elif n:
                parts.append('%s^%d' % (name, n))
        return ' '.join(parts) or 'e'

#
# -- end of file
