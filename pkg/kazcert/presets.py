#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import string
import logging
from collections import OrderedDict

from kazcert.ball import enumerate_ball, FULL, DEFAULT_BALL_CAP
from kazcert.errors import UnknownPreset
from kazcert.presentation import parse_presentation
from kazcert.resolution import build_presentation_complex, cyclic_resolution
from kazcert.resolution import extend_finite_resolution

logger = logging.getLogger(__name__)

# -- the test zoo; cyclic:N and free:K are parametrized below
#
presets = OrderedDict([
    ('trivial', ('gens t; backend cyclic 1',
                 'the trivial group, as Z/1')),
    ('cyclic:N', (None, 'Z/N with its periodic resolution')),
    ('z', ('gens t; backend free', 'the integers')),
    ('z2', ('gens a b; rel a b a^-1 b^-1; backend free-abelian',
            'Z^2 with its commutator presentation')),
    ('s3', ('gens a b; rel a^2; rel b^2; rel a b a b a b; '
            'backend perm a=(1 2) b=(2 3)',
            'the symmetric group on three points')),
    ('free:K', (None, 'the free group of rank K')),
])

letters = string.ascii_lowercase


def _parameter(name, prefix):
    try:
        n = int(name[len(prefix):])
    except ValueError:
        raise UnknownPreset("Preset %r needs an integer after %r"
                            % (name, prefix))
    if n < 1:
        raise UnknownPreset("Preset %r needs a positive integer" % (name,))
    return n


def preset_text(name):
    '''presentation source for a preset name such as "cyclic:5"'''
    if name.startswith('cyclic:'):
        return 'gens t; backend cyclic %d' % (_parameter(name, 'cyclic:'),)
    if name.startswith('free:'):
        k = _parameter(name, 'free:')
        if k > len(letters):
            raise UnknownPreset("Preset %r has too many generators" % (name,))
        return 'gens %s; backend free' % (' '.join(letters[:k]),)
    entry = presets.get(name)
    if entry is None or entry[0] is None:
        raise UnknownPreset("Unknown preset %r; known presets: %s"
                            % (name, ', '.join(presets)))
    return entry[0]


def preset_presentation(name):
    return parse_presentation(preset_text(name))


def cyclic_order(name):
    if name == 'trivial':
        return 1
    if name.startswith('cyclic:'):
        return _parameter(name, 'cyclic:')
    return None


def preset_complex(name, top_degree=2, cap=DEFAULT_BALL_CAP):
    '''the complex a preset certifies against

    Cyclic groups get the periodic resolution through top_degree; s3 gets
    its presentation complex, extended by linear algebra when top_degree
    exceeds 2; the others get their presentation complex.
    '''
    p = preset_presentation(name)
    n = cyclic_order(name)
    if n is not None:
        ball = enumerate_ball(p, FULL, cap=cap)
        return cyclic_resolution(n, max(top_degree, 1), ball)
    return complex_for_presentation(p, top_degree, cap=cap)


def complex_for_presentation(p, top_degree=2, cap=DEFAULT_BALL_CAP):
    '''the complex for a user presentation; finite groups may be extended'''
    if p.is_finite:
        ball = enumerate_ball(p, FULL, cap=cap)
    else:
        ball = enumerate_ball(p, max(1, p.max_relator_length()), cap=cap)
    c = build_presentation_complex(p, ball)
    if p.is_finite and top_degree > c.top and c.top >= 2:
        c = extend_finite_resolution(c, top_degree)
    return c

#
# -- end of file
