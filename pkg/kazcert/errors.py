#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import logging

logger = logging.getLogger(__name__)


class KazcertError(Exception):
    '''base class for every failure raised inside kazcert'''


# -- presentations and backends
#
class PresentationError(KazcertError):
    pass


class PresentationSyntaxError(PresentationError):
    pass


class UndeclaredGenerator(PresentationError):

    def __init__(self, name, statement=None):
        self.name = name
        self.statement = statement
        msg = "Undeclared generator %r" % (name,)
        if statement:
            msg += " in %r" % (statement,)
        super(UndeclaredGenerator, self).__init__(msg)


class UnreducedRelator(PresentationError):

    def __init__(self, relator, position):
        self.relator = relator
        self.position = position
        msg = "Relator %r is not freely reduced at letter %d" % (relator,
                                                                  position)
        super(UnreducedRelator, self).__init__(msg)


class BackendRelatorViolation(PresentationError):

    def __init__(self, relator, backend):
        self.relator = relator
        self.backend = backend
        msg = "Relator %r does not hold in backend %s" % (relator, backend)
        super(BackendRelatorViolation, self).__init__(msg)


class UnknownPreset(KazcertError):
    pass


class UsageError(KazcertError):
    pass


# -- balls and ring arithmetic
#
class BallBudgetExceeded(KazcertError):

    def __init__(self, cap, radius):
        self.cap = cap
        self.radius = radius
        msg = "Ball enumeration passed the cap of %d elements (radius %s)"
        super(BallBudgetExceeded, self).__init__(msg % (cap, radius))


class RadiusTooSmall(KazcertError):

    def __init__(self, message, minimal_half_radius=None):
        self.minimal_half_radius = minimal_half_radius
        if minimal_half_radius is not None:
            message = '%s; minimal sufficient half radius is %d' % (
                message, minimal_half_radius)
        super(RadiusTooSmall, self).__init__(message)


class BallMismatch(KazcertError):
    pass


class ShapeMismatch(KazcertError):
    pass


# -- complexes
#
class NotAComplex(KazcertError):

    def __init__(self, degree, entry, element):
        self.degree = degree
        self.entry = entry
        self.element = element
        msg = "Composition at degree %d is nonzero at entry %r: %s" % (
            degree, entry, element)
        super(NotAComplex, self).__init__(msg)


class TruncatedDegree(KazcertError):
    pass


class ResolutionNotAsserted(KazcertError):
    pass


# -- files exchanged with the outside world
#
class ParseError(KazcertError):
    pass


class DimensionMismatch(KazcertError):
    pass


# -- certification
#
class NotConverged(KazcertError):
    pass


class RepairSingular(KazcertError):

    def __init__(self, rank_defect, constraint):
        self.rank_defect = rank_defect
        self.constraint = constraint
        msg = "Repair system is inconsistent at constraint %r " \
              "(rank defect %d)" % (constraint, rank_defect)
        super(RepairSingular, self).__init__(msg)


class PSDFailedAfterRetries(KazcertError):

    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics or dict()
        super(PSDFailedAfterRetries, self).__init__(message)


class FingerprintMismatch(KazcertError):
    pass


class ConventionMismatch(KazcertError):
    pass


# -- oracle
#
class CapExceeded(KazcertError):
    pass


class NotUnitary(KazcertError):
    pass


class ModuleRelatorViolation(KazcertError):
    pass

#
# -- end of file
