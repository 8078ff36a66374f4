#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging

from kazcert.backends.common import BaseBackend
from kazcert.errors import PresentationSyntaxError

logger = logging.getLogger(__name__)


class CyclicGroup(BaseBackend):
    '''Z/n on a single generator t; handles are residues 0 .. n-1'''
    keyword = 'cyclic'
    finite = True

    def __init__(self, generators, n):
        super(CyclicGroup, self).__init__(generators)
        if len(self.generators) != 1:
            raise PresentationSyntaxError(
                "Backend cyclic needs exactly one generator, got %d"
                % (len(self.generators),))
        if n < 1:
            raise PresentationSyntaxError("Cyclic order must be positive, "
                                          "got %d" % (n,))
        self.n = n

    @classmethod
    def fromstatement(cls, rest, generators, statement=None):
        try:
            n = int(rest.strip())
        except ValueError:
            raise PresentationSyntaxError("Backend cyclic takes one integer "
                                          "order, got %r" % (rest,))
        return cls(generators, n)

    def statement(self):
        return '%s %d' % (self.keyword, self.n)

    def implicit_relators(self):
        return [((0, 1),) * self.n]

    def order(self):
        return self.n

    def identity(self):
        return 0

    def generator(self, idx):
        return 1 % self.n

    def multiply(self, x, y):
        return (x + y) % self.n

    def inverse(self, x):
        return (-x) % self.n

    def format_handle(self, h):
        if h == 0:
            return 'e'
        if h == 1:
            return self.generators[0]
        return '%s^%d' % (self.generators[0], h)

#
# -- end of file
