#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging

from kazcert.backends.common import BaseBackend

logger = logging.getLogger(__name__)


class FreeGroup(BaseBackend):
    '''free group on the declared generators; handles are reduced words

    A handle is a tuple of nonzero integers, +(i+1) for generator i and
    -(i+1) for its inverse.
    '''
    keyword = 'free'

    def identity(self):
        return ()

    def generator(self, idx):
        return (idx + 1,)

    def multiply(self, x, y):
        # -- only the seam between x and y can cancel
        n = 0
        while n < min(len(x), len(y)) and x[len(x) - 1 - n] == -y[n]:
            n += 1
        return x[:len(x) - n] + y[n:]

    def inverse(self, x):
        return tuple(-l for l in reversed(x))

    def format_handle(self, h):
        if not h:
            return 'e'
        parts = list()
        for l in h:
            name = self.generators[abs(l) - 1]
            parts.append(name if l > 0 else name + '^-1')
        return ' '.join(parts)

#
# -- end of file
