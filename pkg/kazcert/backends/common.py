#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import re
import logging

from kazcert.errors import PresentationSyntaxError, UndeclaredGenerator

logger = logging.getLogger(__name__)

# -- "name=value" assignments on a backend statement, e.g.
#
#      perm a=(1 2) b=(2 3)(4 5)
#      zmat a=1,1,0,1 b=[1,0,1,1]
#
assignment = re.compile(r'([A-Za-z_][A-Za-z0-9_]*)\s*=\s*')


def split_assignments(rest, generators, statement=None):
    '''split "a=... b=..." into an ordered dict {generator index: text}

    Every declared generator must be assigned exactly once.
    '''
    found = list(assignment.finditer(rest))
    if not found and rest.strip():
        raise PresentationSyntaxError("Cannot parse backend images in %r"
                                      % (rest,))
    images = dict()
    for n, m in enumerate(found):
        end = found[n + 1].start() if n + 1 < len(found) else len(rest)
        name = m.group(1)
        if name not in generators:
            raise UndeclaredGenerator(name, statement)
        idx = generators.index(name)
        if idx in images:
            raise PresentationSyntaxError("Generator %r assigned twice" %
                                          (name,))
        images[idx] = rest[m.end():end].strip()
    missing = [g for i, g in enumerate(generators) if i not in images]
    if missing:
        raise PresentationSyntaxError("No backend image for generator(s) %s"
                                      % (', '.join(missing),))
    return [images[i] for i in range(len(generators))]


class BaseBackend(object):
    '''exact arithmetic in a group with canonical element handles

    Handles are hashable and two handles are equal exactly when the group
    elements are equal.  Subclasses supply identity(), generator(),
    multiply() and inverse(); the rest is derived.
    '''
    keyword = None
    finite = False

    def __repr__(self):
        return '<%s:%s>' % (self.__class__.__name__, self.statement())

    def __init__(self, generators):
        self.generators = tuple(generators)

    @classmethod
    def fromstatement(cls, rest, generators, statement=None):
        if rest.strip():
            raise PresentationSyntaxError("Backend %s takes no arguments: %r"
                                          % (cls.keyword, rest))
        return cls(generators)

    def statement(self):
        return self.keyword

    def implicit_relators(self):
        '''relators the backend adds on its own, as (index, sign) letters'''
        return []

    def letter(self, idx, sign):
        g = self.generator(idx)
        if sign < 0:
            return self.inverse(g)
        return g

    def evaluate(self, letters):
        '''multiply out a sequence of (generator index, +/-1) letters'''
        result = self.identity()
        for idx, sign in letters:
            result = self.multiply(result, self.letter(idx, sign))
        return result

    def format_handle(self, h):
        return repr(h)

    def order(self):
        return None

    def identity(self):
        raise NotImplementedError

    def generator(self, idx):
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

#
# -- end of file
