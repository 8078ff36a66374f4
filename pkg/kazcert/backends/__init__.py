# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import

from kazcert.backends.free import FreeGroup
from kazcert.backends.freeabelian import FreeAbelian
from kazcert.backends.cyclic import CyclicGroup
from kazcert.backends.permutation import PermutationGroup
from kazcert.backends.zmatrix import IntegerMatrixGroup
