#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import re
import logging

import networkx as nx

from kazcert.backends.common import BaseBackend, split_assignments
from kazcert.errors import PresentationSyntaxError

logger = logging.getLogger(__name__)

cycle = re.compile(r'\(([^()]*)\)')


def parse_cycles(text):
    '''"(1 2)(3 4 5)" -> list of cycles of 0-based points'''
    leftover = cycle.sub('', text).strip()
    if leftover:
        raise PresentationSyntaxError("Junk %r in cycle notation %r"
                                      % (leftover, text))
    cycles = list()
    for m in cycle.finditer(text):
        points = [int(x) - 1 for x in re.split(r'[\s,]+', m.group(1))
                  if x.strip()]
        if any(p < 0 for p in points):
            raise PresentationSyntaxError("Points are numbered from 1 in %r"
                                          % (text,))
        if len(set(points)) != len(points):
            raise PresentationSyntaxError("Repeated point in cycle %r"
                                          % (m.group(0),))
        cycles.append(points)
    return cycles


def cycles_to_images(cycles, degree):
    images = list(range(degree))
    seen = set()
    for c in cycles:
        if seen.intersection(c):
            raise PresentationSyntaxError("Cycles %r are not disjoint"
                                          % (cycles,))
        seen.update(c)
        for i, p in enumerate(c):
            images[p] = c[(i + 1) % len(c)]
    return tuple(images)


def parity(images):
    '''+1 for an even permutation, -1 for an odd one'''
    g = nx.DiGraph()
    g.add_nodes_from(range(len(images)))
    g.add_edges_from(enumerate(images))
    ncycles = nx.number_weakly_connected_components(g)
    return -1 if (len(images) - ncycles) % 2 else 1


class PermutationGroup(BaseBackend):
    '''a permutation group given by generator images on points 1 .. n

    Handles are image tuples on 0-based points.  Products act on the right:
    (x y)(i) = y(x(i)), so a word is applied left to right.
    '''
    keyword = 'perm'
    finite = True

    def __init__(self, generators, images):
        super(PermutationGroup, self).__init__(generators)
        degree = max([len(x) for x in images] + [1])
        self.images = tuple(tuple(x) + tuple(range(len(x), degree))
                            for x in images)
        self.degree = degree

    @classmethod
    def fromstatement(cls, rest, generators, statement=None):
        texts = split_assignments(rest, generators, statement)
        cyclesets = [parse_cycles(t) for t in texts]
        degree = max([max(c) + 1 for cs in cyclesets for c in cs if c] + [1])
        images = [cycles_to_images(cs, degree) for cs in cyclesets]
        return cls(generators, images)

    def statement(self):
        parts = [self.keyword]
        for name, img in zip(self.generators, self.images):
            parts.append('%s=%s' % (name, self.cycle_notation(img)))
        return ' '.join(parts)

    @staticmethod
    def cycle_notation(img):
        seen = set()
        out = list()
        for start in range(len(img)):
            if start in seen or img[start] == start:
                continue
            c = [start]
            seen.add(start)
            p = img[start]
            while p != start:
                c.append(p)
                seen.add(p)
                p = img[p]
            out.append('(%s)' % (' '.join(str(x + 1) for x in c),))
        return ''.join(out) or '()'

    def identity(self):
        return tuple(range(self.degree))

    def generator(self, idx):
        return self.images[idx]

    def multiply(self, x, y):
        return tuple(y[x[i]] for i in range(self.degree))

    def inverse(self, x):
        inv = [0] * self.degree
        for i, p in enumerate(x):
            inv[p] = i
        return tuple(inv)

    def format_handle(self, h):
        return self.cycle_notation(h)

#
# -- end of file
