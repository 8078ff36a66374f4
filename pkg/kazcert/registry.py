#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import inspect
import logging

import kazcert.backends
from kazcert.errors import PresentationSyntaxError

logger = logging.getLogger(__name__)


def getBackendMembers(membertype):
    '''returns a list of kazcert.backends members; convenience function'''
    found = list()
    for name, member in inspect.getmembers(kazcert.backends, membertype):
        logger.debug("Located %s %s (%r).", membertype.__name__, name, member)
        found.append(member)
    return found


def getBackendClasses():
    '''returns the classes known in kazcert.backends

    This is the canonical list of group backends a presentation may name
    on its "backend" statement.
    '''
    return [x for x in getBackendMembers(inspect.isclass)
            if getattr(x, 'keyword', None)]


def lookup(keyword):
    '''return the backend class for a keyword (e.g. "perm")'''
    for backend in knownbackends:
        if backend.keyword == keyword:
            return backend
    raise PresentationSyntaxError("Unknown backend %r; known backends: %s"
                                  % (keyword,
                                     ', '.join(sorted(knownkeywords))))


knownbackends = sorted(getBackendClasses(), key=lambda x: x.keyword)
knownkeywords = set(x.keyword for x in knownbackends)

#
# -- end of file
