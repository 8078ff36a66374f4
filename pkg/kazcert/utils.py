#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import io
import os
import re
import gzip
import time
import codecs
import hashlib
from fractions import Fraction
from functools import wraps
import logging
logger = logging.getLogger(__name__)


def logtimings(logmethod):
    def anon(f):
        @wraps(f)
        def timing(*args, **kwargs):
            s = time.time()
            result = f(*args, **kwargs)
            e = time.time()
            logmethod('running %s() took %.3f s', f.__name__, e - s)
            return result
        return timing
    return anon


def arg_isloglevel(l, defaultlevel=logging.ERROR):
    try:
        level = int(l)
        return level
    except ValueError:
        pass
    level = getattr(logging, l.upper(), None)
    if not level:
        level = defaultlevel
    return level


def arg_isreadablefile(f):
    if isreadablefile(f):
        return f
    return None


def arg_isnonnegint(s):
    value = int(s)
    if value < 0:
        raise ValueError("negative integer %r" % (s,))
    return value


def arg_isradius(s):
    '''a half radius or ball radius: a non-negative integer or "full"'''
    if str(s).strip().lower() == 'full':
        return 'full'
    return arg_isnonnegint(s)


degreerange = re.compile(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$')


def arg_isdegrees(s):
    '''parse "0..3" or "0,1,2" into a sorted list of degrees'''
    if isinstance(s, (list, tuple)):
        return sorted(set(int(x) for x in s))
    m = degreerange.match(s)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError("empty degree range %r" % (s,))
        return list(range(lo, hi + 1))
    return sorted(set(arg_isnonnegint(x) for x in s.split(',') if x.strip()))


def isreadablefile(f):
    '''True if argument is readable file'''
    return os.path.isfile(f) and os.access(f, os.R_OK)


def format_rational(q):
    '''"p/q" for a Fraction, plain "p" when the denominator is 1'''
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return '%d/%d' % (q.numerator, q.denominator)


def sha256text(text):
    '''return the SHA-256 hex digest of a text, encoded as UTF-8'''
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def writetext(fname, text, compress=None):
    '''write text to a file; gzip when asked or when the name ends in .gz

    Compressed output is written with a zero mtime and no embedded
    filename, so the same text always produces the same bytes.
    '''
    if compress is None:
        compress = fname.endswith('.gz')
    data = text.encode('utf-8')
    if compress:
        buf = io.BytesIO()
        with gzip.GzipFile(filename='', mode='wb', fileobj=buf,
                           mtime=0) as gz:
            gz.write(data)
        data = buf.getvalue()
    with open(fname, 'wb') as f:
        f.write(data)
    logger.debug("Wrote %d bytes to %s.", len(data), fname)
    return fname


def readtext(fname):
    '''read a text file written by writetext(), gzipped or not'''
    with open(fname, 'rb') as f:
        data = f.read()
    if data[:2] == b'\x1f\x8b':
        data = gzip.decompress(data)
    return codecs.decode(data, 'utf-8')

#
# -- end of file
