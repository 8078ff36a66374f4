# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import

import kazcert.config
import kazcert.presentation
import kazcert.resolution
import kazcert.certifier

VERSION = "0.3.1"
