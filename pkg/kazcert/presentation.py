#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import re
import logging

from kazcert.errors import PresentationSyntaxError, UndeclaredGenerator
from kazcert.errors import UnreducedRelator, BackendRelatorViolation
from kazcert.registry import lookup
from kazcert.utils import sha256text

logger = logging.getLogger(__name__)

identifier = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
exponent = re.compile(r'\^(-?\d+)')

DEFAULT_BACKEND = 'free'


class FreeWord(object):
    '''a word in the free group on the generators of a presentation

    letters is a tuple of (generator index, +1 or -1) pairs; the empty
    tuple is the identity.
    '''

    def __init__(self, letters=()):
        self.letters = tuple((int(i), 1 if s > 0 else -1) for i, s in letters)

    def __repr__(self):
        return '<FreeWord:%r>' % (self.letters,)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.letters)

    def __add__(self, other):
        return FreeWord(self.letters + other.letters)

    def inverse(self):
        return FreeWord((i, -s) for i, s in reversed(self.letters))

    def prefix(self, n):
        return FreeWord(self.letters[:n])

    def unreduced_at(self):
        '''position of the first letter cancelling its predecessor, or None'''
        for n in range(1, len(self.letters)):
            i, s = self.letters[n]
            if self.letters[n - 1] == (i, -s):
                return n
        return None

    def format(self, generators):
        '''canonical text, collapsing runs into exponents: "a^2 b^-1"'''
        if not self.letters:
            return '1'
        runs = list()
        for letter in self.letters:
            if runs and runs[-1][0] == letter:
                runs[-1][1] += 1
            else:
                runs.append([letter, 1])
        parts = list()
        for (i, s), n in runs:
            power = s * n
            if power == 1:
                parts.append(generators[i])
            else:
                parts.append('%s^%d' % (generators[i], power))
        return ' '.join(parts)


def parse_word(text, generators, statement=None):
    '''parse word syntax such as "a b a^-1 b^-1", "ab^2" or "1"

    Generator names are matched longest first, so juxtaposition works
    whenever it is unambiguous.  Exponents are expanded; the result is not
    reduced.
    '''
    names = sorted(generators, key=len, reverse=True)
    letters = list()
    for chunk in text.split():
        if chunk == '1':
            continue
        pos = 0
        while pos < len(chunk):
            name = None
            for candidate in names:
                if chunk.startswith(candidate, pos):
                    name = candidate
                    break
            if name is None:
                m = re.match(r'[A-Za-z_][A-Za-z0-9_]*', chunk[pos:])
                if m:
                    raise UndeclaredGenerator(m.group(0), statement)
                raise PresentationSyntaxError("Cannot parse %r in word %r"
                                              % (chunk[pos:], text))
            pos += len(name)
            power = 1
            m = exponent.match(chunk, pos)
            if m:
                power = int(m.group(1))
                pos = m.end()
            idx = generators.index(name)
            sign = 1 if power > 0 else -1
            letters.extend([(idx, sign)] * abs(power))
    return FreeWord(letters)


def split_statements(text):
    '''strip comments, split on newlines and ";" and drop empty statements'''
    statements = list()
    for line in text.splitlines():
        line = line.split('#', 1)[0]
        for stmt in line.split(';'):
            stmt = stmt.strip()
            if stmt:
                statements.append(stmt)
    return statements


class Presentation(object):
    '''a finite presentation <S | R> with a backend that decides equality

    The canonical text (generators, relators including implicit ones,
    backend statement) is the identity of a presentation; key is its
    SHA-256 digest.
    '''

    def __repr__(self):
        return '<%s:%s>' % (self.__class__.__name__, self.text.strip())

    def __init__(self, generators, relators, backend):
        self.generators = tuple(generators)
        self.relators = tuple(relators)
        self.backend = backend
        self.text = self.canonical()
        self.key = sha256text(self.text)

    def canonical(self):
        lines = ['gens ' + ' '.join(self.generators)]
        for r in self.relators:
            lines.append('rel ' + r.format(self.generators))
        lines.append('backend ' + self.backend.statement())
        return '\n'.join(lines) + '\n'

    @property
    def backend_hint(self):
        return self.backend.keyword

    @property
    def is_finite(self):
        return self.backend.finite

    def symmetric_letters(self):
        '''S u S^-1 in search order: each generator before its inverse'''
        letters = list()
        for i in range(len(self.generators)):
            letters.extend([(i, 1), (i, -1)])
        return letters

    def word(self, text):
        return parse_word(text, self.generators)

    def format_word(self, w):
        return w.format(self.generators)

    def format_handle(self, h):
        return self.backend.format_handle(h)

    def max_relator_length(self):
        return max([len(r) for r in self.relators] + [0])


def eval_word(p, w):
    '''canonical handle of the image of a FreeWord in the group'''
    return p.backend.evaluate(w.letters)


def parse_presentation(text):
    '''parse presentation source into a validated Presentation

    Grammar, one statement per line or ";"-separated, "#" comments:

      gens a b
      rel a b a^-1 b^-1
      backend free | free-abelian | cyclic N | perm a=(1 2) ... | zmat a=...
    '''
    generators = None
    reltexts = list()
    backendtext = None
    for stmt in split_statements(text):
        keyword, _, rest = stmt.partition(' ')
        rest = rest.strip()
        if keyword == 'gens':
            if generators is not None:
                raise PresentationSyntaxError("Repeated gens statement %r"
                                              % (stmt,))
            generators = rest.split()
            for name in generators:
                if not identifier.match(name):
                    raise PresentationSyntaxError("Bad generator name %r"
                                                  % (name,))
            if len(set(generators)) != len(generators):
                raise PresentationSyntaxError("Duplicate generator in %r"
                                              % (stmt,))
        elif keyword == 'rel':
            reltexts.append((rest, stmt))
        elif keyword == 'backend':
            if backendtext is not None:
                raise PresentationSyntaxError("Repeated backend statement %r"
                                              % (stmt,))
            backendtext = (rest, stmt)
        else:
            raise PresentationSyntaxError("Unknown statement %r" % (stmt,))

    if not generators:
        raise PresentationSyntaxError("No generators declared")

    relators = list()
    for reltext, stmt in reltexts:
        w = parse_word(reltext, generators, stmt)
        n = w.unreduced_at()
        if n is not None:
            raise UnreducedRelator(reltext, n)
        relators.append(w)

    if backendtext is None:
        backendtext = (DEFAULT_BACKEND, None)
    rest, stmt = backendtext
    keyword, _, args = rest.partition(' ')
    cls = lookup(keyword)
    backend = cls.fromstatement(args.strip(), generators, stmt)

    for letters in backend.implicit_relators():
        w = FreeWord(letters)
        if w not in relators:
            logger.debug("Adding implicit relator %s from backend %s.",
                         w.format(generators), backend.keyword)
            relators.append(w)

    identity = backend.identity()
    for w in relators:
        if backend.evaluate(w.letters) != identity:
            raise BackendRelatorViolation(w.format(generators),
                                          backend.statement())

    p = Presentation(generators, relators, backend)
    logger.debug("Parsed presentation %s", p.text.replace('\n', '; '))
    return p

#
# -- end of file
