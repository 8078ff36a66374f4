#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging

import networkx as nx

from kazcert.errors import BallBudgetExceeded, RadiusTooSmall, BallMismatch
from kazcert.utils import logtimings

logger = logging.getLogger(__name__)

DEFAULT_BALL_CAP = 200000
FULL = 'full'


class Ball(object):
    '''the elements of word length <= radius, found by breadth-first search

    Index 0 is the identity; elements are ordered by word length and then
    by discovery, searching each generator before its inverse.  Since the
    search is deterministic, the ball of radius r is an index prefix of
    every larger ball of the same presentation.

    A ball is read-only once built, apart from the product cache that
    product_index fills as it goes; do not share one ball between threads.
    '''

    def __repr__(self):
        return '<%s:radius=%s,size=%d>' % (self.__class__.__name__,
                                           self.radius, len(self))

    def __init__(self, presentation, radius, cap=DEFAULT_BALL_CAP):
        self.presentation = presentation
        self.backend = presentation.backend
        self.cap = cap
        self.letters = presentation.symmetric_letters()
        self.elements = list()
        self.index = dict()
        self.word_length = list()
        self.words = list()
        self.generator_edges = list()
        self.graph = nx.DiGraph()
        self._products = dict()
        self.is_full = False
        self._search(radius)
        self.inverse_index = [self.index[self.backend.inverse(h)]
                              for h in self.elements]

    def __len__(self):
        return len(self.elements)

    @property
    def key(self):
        return (self.presentation.key, len(self.elements))

    def _add(self, handle, length, word):
        if len(self.elements) >= self.cap:
            raise BallBudgetExceeded(self.cap, self.requested)
        idx = len(self.elements)
        self.elements.append(handle)
        self.index[handle] = idx
        self.word_length.append(length)
        self.words.append(word)
        self.generator_edges.append([None] * len(self.letters))
        self.graph.add_node(idx)
        return idx

    def _search(self, radius):
        self.requested = radius
        backend = self.backend
        steps = [backend.letter(i, s) for i, s in self.letters]
        self._add(backend.identity(), 0, ())
        frontier = [0]
        length = 0
        while frontier:
            if radius != FULL and length >= radius:
                break
            nextfrontier = list()
            for x in frontier:
                for n, step in enumerate(steps):
                    y = backend.multiply(self.elements[x], step)
                    idx = self.index.get(y)
                    if idx is None:
                        word = self.words[x] + (self.letters[n],)
                        idx = self._add(y, length + 1, word)
                        nextfrontier.append(idx)
                    self.generator_edges[x][n] = idx
                    self.graph.add_edge(x, idx, letter=self.letters[n])
            frontier = nextfrontier
            length += 1
        self._complete_edges(steps)
        # -- closed under every generator means the whole group was found
        self.is_full = all(None not in edges
                           for edges in self.generator_edges)
        if radius == FULL:
            self.radius = max(self.word_length)
        else:
            self.radius = radius

    def _complete_edges(self, steps):
        '''fill the generator edges leaving the outermost layer'''
        for x, edges in enumerate(self.generator_edges):
            for n, step in enumerate(steps):
                if edges[n] is not None:
                    continue
                y = self.backend.multiply(self.elements[x], step)
                idx = self.index.get(y)
                if idx is not None:
                    edges[n] = idx
                    self.graph.add_edge(x, idx, letter=self.letters[n])

    def indices_within(self, radius):
        '''indices of elements with word length <= radius, in ball order'''
        return [i for i, l in enumerate(self.word_length) if l <= radius]

    def find(self, handle):
        return self.index.get(handle)

    def lookup_word(self, w):
        '''index of the element a FreeWord evaluates to; RadiusTooSmall if
        it lies outside the ball'''
        idx = self.index.get(self.backend.evaluate(w.letters))
        if idx is None:
            raise RadiusTooSmall("Word %s lies outside the ball of radius %s"
                                 % (self.presentation.format_word(w),
                                    self.radius))
        return idx

    def product_index(self, x, y):
        '''index of elements[x] * elements[y], memoized per ball'''
        key = (x, y)
        idx = self._products.get(key)
        if idx is not None:
            return idx
        if not self.is_full:
            if self.word_length[x] + self.word_length[y] > self.radius:
                raise RadiusTooSmall(
                    "Product of elements of length %d and %d needs radius %d"
                    ", ball has radius %s"
                    % (self.word_length[x], self.word_length[y],
                       self.word_length[x] + self.word_length[y],
                       self.radius))
        handle = self.backend.multiply(self.elements[x], self.elements[y])
        idx = self.index[handle]
        self._products[key] = idx
        return idx

    def format_element(self, idx):
        return self.presentation.format_handle(self.elements[idx])

    def compatible(self, other):
        '''True if indices of this ball mean the same elements in other'''
        return self.presentation.key == other.presentation.key

    def require_compatible(self, other):
        if not self.compatible(other):
            raise BallMismatch("Balls of different presentations: %r, %r"
                               % (self, other))


@logtimings(logger.debug)
def enumerate_ball(p, radius, cap=DEFAULT_BALL_CAP):
    '''breadth-first ball of a presentation; radius may be "full"'''
    if radius != FULL and radius < 0:
        raise ValueError("Negative radius %r" % (radius,))
    ball = Ball(p, radius, cap=cap)
    logger.info("Ball of radius %s has %d elements%s.", ball.radius,
                len(ball), ' (whole group)' if ball.is_full else '')
    return ball


def product_index(ball, x, y):
    return ball.product_index(x, y)

#
# -- end of file
