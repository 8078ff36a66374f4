#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import time
import logging
from fractions import Fraction
from collections import OrderedDict

import numpy as np

from kazcert.ball import enumerate_ball
from kazcert.cascadingconfig import StoreTrueOrNargBool
from kazcert.encoder import SOSMode, SupportBasis, build_support_basis
from kazcert.encoder import target_matrices, work_radius, IDEAL
from kazcert.errors import NotConverged, RepairSingular, ParseError
from kazcert.errors import PSDFailedAfterRetries, FingerprintMismatch
from kazcert.errors import ConventionMismatch, KazcertError
from kazcert.groupring import GroupRingMatrix, gr_star
from kazcert.groupring import gr_mul, gr_add, gr_scale, zero, unit
from kazcert.groupring import group_element, mat_mul, mat_star, mat_add
from kazcert.groupring import mat_scale, mat_zero
from kazcert.solver import CONVERGED
from kazcert.utils import logtimings, format_rational, arg_isnonnegint

logger = logging.getLogger(__name__)

CERTIFICATE_FORMAT = 'kazcert-certificate 1'


class CertifierConfig(object):
    '''rounding and retry settings; margin None means 10 * residual + 1e-7'''

    fields = OrderedDict([
        ('margin', None),
        ('denominator_bits', 48),
        ('max_retries', 8),
        ('no_interior', False),
    ])

    def __init__(self, **kwargs):
        for name, default in self.fields.items():
            value = kwargs.pop(name, None)
            setattr(self, name, default if value is None else value)
        if kwargs:
            raise TypeError("Unknown certifier settings: %s"
                            % (', '.join(sorted(kwargs)),))
        if self.margin is not None and self.margin < 0:
            raise ValueError("Margin must be non-negative")

    def __repr__(self):
        return '<CertifierConfig:%s>' % (', '.join(
            '%s=%r' % (k, getattr(self, k)) for k in self.fields),)

    def params(self):
        margin = 'auto' if self.margin is None else repr(self.margin)
        return OrderedDict([('certifier-margin', margin),
                            ('certifier-denominator-bits',
                             self.denominator_bits),
                            ('certifier-max-retries', self.max_retries),
                            ('certifier-interior', not self.no_interior)])

    @classmethod
    def fromconfig(cls, config):
        return cls(**dict((k, getattr(config, 'certifier_' + k, None))
                          for k in cls.fields))

    @classmethod
    def argparse(cls, p):
        descrip = 'rounding of numeric solutions to exact certificates'
        g = p.add_argument_group(title=cls.__name__, description=descrip)
        gadd = g.add_argument
        gadd('--certifier-margin', '--margin', type=float, default=None,
             help='epsilon safety retreat [10 * residual + 1e-7]')
        gadd('--certifier-denominator-bits', '--denominator-bits',
             type=arg_isnonnegint, default=cls.fields['denominator_bits'],
             help='Gram entries are rounded to multiples of 2^-b '
                  '[%(default)s]')
        gadd('--certifier-max-retries', '--max-retries',
             type=arg_isnonnegint, default=cls.fields['max_retries'],
             help='epsilon halvings after a PSD failure [%(default)s]')
        gadd('--certifier-no-interior', '--no-interior',
             action=StoreTrueOrNargBool, default=False,
             help='retreat along the order unit instead of solving for an '
                  'interior direction [%(default)s]')


class Certificate(object):
    '''an exact rational Gram matrix proving target(epsilon) is a sum of
    hermitian squares; gram maps (p, q), p <= q, to nonzero Fractions'''

    def __init__(self, mode, epsilon, basis, gram, fingerprint, convention,
                 params=None):
        self.mode = mode
        self.epsilon = Fraction(epsilon)
        self.basis = basis
        self.gram = dict(((min(a, b), max(a, b)), Fraction(v))
                         for (a, b), v in gram.items() if v)
        self.fingerprint = fingerprint
        self.convention = convention
        self.params = OrderedDict(params or ())
        self.gram_size = len(basis)

    def __repr__(self):
        return '<Certificate:%s,eps=%s,N=%d>' % (
            self.mode.name, format_rational(self.epsilon), self.gram_size)

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        return serialize_certificate(self) == serialize_certificate(other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    @property
    def half_radius(self):
        return self.basis.half_radius

    def dense(self):
        n = self.gram_size
        Q = [[Fraction(0)] * n for _ in range(n)]
        for (a, b), v in self.gram.items():
            Q[a][b] = Q[b][a] = v
        return Q


def serialize_certificate(cert):
    '''canonical text; the same certificate always gives the same bytes'''
    lines = ['[certificate]',
             'format = %s' % (CERTIFICATE_FORMAT,),
             'mode = %s' % (cert.mode.kind,),
             'degree = %d' % (cert.mode.degree,),
             'epsilon = %s' % (format_rational(cert.epsilon),),
             'half-radius = %d' % (cert.half_radius,),
             'gram-size = %d' % (cert.gram_size,),
             'basis-kind = %s' % (cert.basis.kind,),
             'module-rank = %d' % (cert.basis.rank,),
             'fingerprint = %s' % (cert.fingerprint,),
             'convention = %s' % (cert.convention,)]
    for k, v in sorted(cert.params.items()):
        lines.append('%s = %s' % (k, v))
    lines.append('[basis]')
    for n, (g, j) in enumerate(cert.basis.entries):
        lines.append('%d %d %d' % (n, j, g))
    lines.append('[gram]')
    for (a, b), v in sorted(cert.gram.items(), key=lambda x: (x[0][1],
                                                              x[0][0])):
        lines.append('%d %d %s' % (b, a, format_rational(v)))
    return '\n'.join(lines) + '\n'


header_fields = ('format', 'mode', 'degree', 'epsilon', 'half-radius',
                 'gram-size', 'basis-kind', 'module-rank', 'fingerprint',
                 'convention')


def parse_certificate(text):
    header = OrderedDict()
    basis = list()
    gram = dict()
    section = None
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if line.startswith('[') and line.endswith(']'):
            section = line[1:-1]
            if section not in ('certificate', 'basis', 'gram'):
                raise ParseError("Line %d: unknown section %r" % (n, line))
            continue
        try:
            if section == 'certificate':
                k, v = [x.strip() for x in line.split('=', 1)]
                header[k] = v
            elif section == 'basis':
                p, j, g = [int(x) for x in line.split()]
                if p != len(basis) or j < 0 or g < 0:
                    raise ValueError(line)
                basis.append((g, j))
            elif section == 'gram':
                a, b, v = line.split()
                a, b, v = int(a), int(b), Fraction(v)
                if a < b or b < 0:
                    raise ValueError(line)
                if (b, a) in gram:
                    raise ValueError("repeated entry")
                gram[(b, a)] = v
            else:
                raise ValueError("data outside a section")
        except (ValueError, ZeroDivisionError):
            raise ParseError("Line %d: malformed certificate line %r"
                             % (n, line))
    missing = [k for k in header_fields if k not in header]
    if missing:
        raise ParseError("Certificate header lacks %s" % (', '.join(missing),))
    if header['format'] != CERTIFICATE_FORMAT:
        raise ParseError("Unknown certificate format %r" % (header['format'],))
    try:
        mode = SOSMode(header['mode'], int(header['degree']),
                       allow_paren_zero=True)
        epsilon = Fraction(header['epsilon'])
        half_radius = int(header['half-radius'])
        gram_size = int(header['gram-size'])
        rank = int(header['module-rank'])
    except (ValueError, ZeroDivisionError, KazcertError):
        raise ParseError("Malformed certificate header")
    if mode.degree != int(header['degree']):
        raise ParseError("Mode %s cannot have degree %s"
                         % (mode.kind, header['degree']))
    if any(a >= len(basis) or b >= len(basis) for a, b in gram):
        raise ParseError("Gram entry outside the %d basis entries"
                         % (len(basis),))
    params = OrderedDict((k, v) for k, v in header.items()
                         if k not in header_fields)
    cert = Certificate(mode, epsilon,
                       SupportBasis(basis, header['basis-kind'], half_radius,
                                    rank),
                       gram, header['fingerprint'], header['convention'],
                       params=params)
    cert.gram_size = gram_size
    return cert


class LDLResult(object):
    '''outcome of an exact LDL^T; failed_at is the first bad pivot or None'''

    def __init__(self, pivots, lower, failed_at=None, reason=None):
        self.pivots = pivots
        self.lower = lower
        self.failed_at = failed_at
        self.reason = reason

    def __repr__(self):
        return '<LDLResult:%s>' % ('ok' if self.ok else self.reason,)

    @property
    def ok(self):
        return self.failed_at is None


def ldl(Q):
    '''exact LDL^T of a symmetric Fraction matrix, without reordering

    A zero pivot is accepted only when the rest of its column is zero, so
    success proves Q is positive semidefinite.
    '''
    n = len(Q)
    rows = [dict((j, v) for j, v in enumerate(row) if v) for row in Q]
    lower = [dict() for _ in range(n)]
    pivots = list()
    for k in range(n):
        d = rows[k].get(k, Fraction(0))
        col = dict((i, v) for i, v in rows[k].items() if i > k and v)
        if d < 0:
            return LDLResult(pivots, lower, k, 'negative pivot %s'
                             % (format_rational(d),))
        if d == 0:
            if col:
                return LDLResult(pivots, lower, k, 'zero pivot with a '
                                 'nonzero column')
            pivots.append(Fraction(0))
            continue
        pivots.append(d)
        for i, aik in col.items():
            l = aik / d
            lower[i][k] = l
            row = rows[i]
            for j, akj in col.items():
                v = row.get(j, 0) - l * akj
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
    return LDLResult(pivots, lower)


class RepairSystem(object):
    '''exact elimination of the constraint system, done once per problem

    Each constraint row picks as pivot the variable of largest absolute
    coefficient, lexicographically first among ties.  Dependent rows keep
    the combination of original rows that cancels them, so a right-hand
    side can be checked for consistency.
    '''

    def __init__(self, p):
        self.keys = [c.key for c in p.constraints]
        self.pivots = list()
        self.dependent = list()
        for r, c in enumerate(p.constraints):
            row = dict(c.coeffs)
            combo = {r: Fraction(1)}
            for var, prow, pcombo in self.pivots:
                a = row.get(var)
                if not a:
                    continue
                f = a / prow[var]
                for v, q in prow.items():
                    x = row.get(v, 0) - f * q
                    if x:
                        row[v] = x
                    else:
                        row.pop(v, None)
                for s, q in pcombo.items():
                    x = combo.get(s, 0) - f * q
                    if x:
                        combo[s] = x
                    else:
                        combo.pop(s, None)
            if not row:
                self.dependent.append((r, combo))
                continue
            top = max(abs(q) for q in row.values())
            var = min(v for v, q in row.items() if abs(q) == top)
            self.pivots.append((var, row, combo))
        logger.debug("Repair system: %d pivots, %d dependent rows",
                     len(self.pivots), len(self.dependent))

    @property
    def rank_defect(self):
        return len(self.dependent)

    def solve(self, rhs):
        '''a correction dict {(p, q): Fraction} with A(correction) = rhs'''
        for r, combo in self.dependent:
            if sum((q * rhs[s] for s, q in combo.items()), Fraction(0)):
                raise RepairSingular(self.rank_defect, self.keys[r])
        reduced = [sum((q * rhs[s] for s, q in combo.items()), Fraction(0))
                   for _, _, combo in self.pivots]
        delta = dict()
        for (var, row, _), b in reversed(list(zip(self.pivots, reduced))):
            acc = b - sum((q * delta.get(v, 0) for v, q in row.items()
                           if v != var), Fraction(0))
            value = acc / row[var]
            if value:
                delta[var] = value
        return delta


def dyadic_floor(x):
    '''largest a/2^j <= x for the smallest j with a/2^j >= 3/4 x (x > 0)'''
    x = Fraction(x)
    j = 0
    while True:
        a = (x * 2 ** j).numerator // (x * 2 ** j).denominator
        q = Fraction(a, 2 ** j)
        if q >= x * 3 / 4:
            return q
        j += 1


def exact_gram(values, n):
    '''{(p, q): Fraction} from a symmetric float array, exactly'''
    return dict(((a, b), Fraction(float(values[a, b])))
                for a in range(n) for b in range(a, n) if values[a, b])


def exact_residual(p, gram, epsilon):
    return [c0 - sum((q * gram.get(v, 0) for v, q in coeffs), Fraction(0))
            for coeffs, c0 in ((c.coeffs, c.c0 + epsilon * c.c1)
                               for c in p.constraints)]


def dense(gram, n):
    Q = [[Fraction(0)] * n for _ in range(n)]
    for (a, b), v in gram.items():
        Q[a][b] = Q[b][a] = v
    return Q


def retreat_direction(p, interior=None):
    '''a float Gram D with A(D) = -c1: interior Q + t I, else the order unit'''
    n = p.gram_size
    if interior is not None and interior.converged and interior.epsilon > 0:
        logger.debug("Retreating along the interior direction, t=%g",
                     interior.epsilon)
        return interior.gram + interior.epsilon * np.eye(n)
    D = np.zeros((n, n))
    for (a, b), v in p.order_unit.items():
        D[a, b] = D[b, a] = float(v)
    return D


@logtimings(logger.info)
def round_and_repair(s, p, cfg=None, interior=None, params=None):
    '''turn a converged GramSolution into an exactly verified Certificate'''
    cfg = cfg or CertifierConfig()
    params = OrderedDict(params or ())
    params.update(cfg.params())
    if s.status != CONVERGED:
        raise NotConverged("Solver status is %s, not %s"
                           % (s.status, CONVERGED))
    n = p.gram_size

    def certificate(gram, eps):
        return Certificate(p.mode, eps, p.basis, gram, p.fingerprint,
                           p.convention, params=params)

    # -- an exactly feasible input is its own certificate
    eps = Fraction(s.epsilon)
    gram = exact_gram(s.gram, n)
    if not any(exact_residual(p, gram, eps)) and ldl(dense(gram, n)).ok:
        logger.info("Solution is exactly feasible at eps=%s",
                    format_rational(eps))
        return certificate(gram, eps)

    if cfg.margin is None:
        mu = Fraction(10 * s.residual) + Fraction(1, 10 ** 7)
    else:
        mu = Fraction(cfg.margin)
    diagnostics = OrderedDict([('epsilon', s.epsilon),
                               ('residual', s.residual),
                               ('margin', float(mu))])
    if eps - mu <= 0:
        raise PSDFailedAfterRetries(
            "No positive epsilon survives the margin: eps=%.6g, margin=%.3g"
            % (s.epsilon, float(mu)), diagnostics)
    eps_hat = dyadic_floor(eps - mu)
    system = RepairSystem(p)
    scale = 2 ** cfg.denominator_bits
    direction = retreat_direction(p, interior)
    c1_part = system.solve([c.c1 for c in p.constraints])
    for attempt in range(cfg.max_retries + 1):
        shifted = s.gram + float(eps - eps_hat) * direction
        rounded = dict(((a, b), Fraction(int(round(shifted[a, b] * scale)),
                                         scale))
                       for a in range(n) for b in range(a, n))
        rhs = [c.c0 - sum((q * rounded.get(v, 0) for v, q in c.coeffs),
                          Fraction(0)) for c in p.constraints]
        c0_part = system.solve(rhs)
        for v in set(c0_part) | set(c1_part):
            rounded[v] = rounded.get(v, 0) + c0_part.get(v, 0) + \
                eps_hat * c1_part.get(v, 0)
        result = ldl(dense(rounded, n))
        if result.ok:
            logger.info("Certified eps=%s after %d retries",
                        format_rational(eps_hat), attempt)
            return certificate(rounded, eps_hat)
        logger.info("Attempt %d at eps=%s failed: %s at pivot %d", attempt,
                    format_rational(eps_hat), result.reason, result.failed_at)
        diagnostics['attempt-%d' % (attempt,)] = '%s: %s at pivot %d' % (
            format_rational(eps_hat), result.reason, result.failed_at)
        eps_hat = eps_hat / 2
    raise PSDFailedAfterRetries("No PSD certificate after %d retries"
                                % (cfg.max_retries,), diagnostics)


def retreat_certificate(cert, p, epsilon):
    '''the certificate at a smaller epsilon: Q + (eps_hat - eps) U'''
    epsilon = Fraction(epsilon)
    if epsilon > cert.epsilon:
        raise ValueError("Cannot retreat from %s to a larger %s"
                         % (format_rational(cert.epsilon),
                            format_rational(epsilon)))
    if p.fingerprint != cert.fingerprint:
        raise FingerprintMismatch("Problem and certificate come from "
                                  "different complexes")
    gram = dict(cert.gram)
    step = cert.epsilon - epsilon
    for v, u in p.order_unit.items():
        gram[v] = gram.get(v, 0) + step * u
    return Certificate(cert.mode, epsilon, cert.basis, gram,
                       cert.fingerprint, cert.convention, params=cert.params)


class VerificationReport(object):

    def __init__(self, cert, identity_ok, psd_ok, first_failure=None,
                 elapsed=0.0, pivots=None):
        self.mode = cert.mode
        self.epsilon = cert.epsilon
        self.identity_ok = identity_ok
        self.psd_ok = psd_ok
        self.first_failure = first_failure
        self.elapsed = elapsed
        self.pivots = pivots

    def __repr__(self):
        return '<VerificationReport:%s>' % (
            'accepted' if self.accepted else self.first_failure,)

    @property
    def accepted(self):
        return self.identity_ok and self.psd_ok

    @property
    def equation(self):
        return self.mode.equation(self.epsilon)

    def format(self):
        lines = ['identity: %s' % ('ok' if self.identity_ok else 'FAILED'),
                 'psd: %s' % ('ok' if self.psd_ok else 'FAILED'),
                 'epsilon: %s' % (format_rational(self.epsilon),)]
        if self.first_failure:
            lines.append('first failure: %s' % (self.first_failure,))
        lines.append('time: %.3f s' % (self.elapsed,))
        return '\n'.join(lines)


def certificate_ball(cert, c):
    '''a ball holding the target and every product of basis elements'''
    if c.ball.is_full:
        return c.ball
    radius = max(work_radius(c, cert.mode), 2 * cert.half_radius,
                 c.ball.radius)
    return enumerate_ball(c.presentation, radius, cap=c.ball.cap)


def basis_elements(basis, ball):
    out = list()
    for g, j in basis.entries:
        w = group_element(ball, g)
        if basis.kind == IDEAL:
            w = gr_add(w, unit(ball, -1))
        out.append(w)
    return out


def expand_gram(cert, ball, elements):
    '''sum of Q[p, q] w_p* w_q per block, as {(i, j): GroupRingElement}'''
    blocks = dict()
    stars = [gr_star(w) for w in elements]

    def add(i, j, x):
        blocks[(i, j)] = gr_add(blocks.get((i, j), zero(ball)), x)

    for (a, b), v in cert.gram.items():
        ja, jb = cert.basis.entries[a][1], cert.basis.entries[b][1]
        add(ja, jb, gr_scale(gr_mul(stars[a], elements[b], ball), v))
        if a != b:
            add(jb, ja, gr_scale(gr_mul(stars[b], elements[a], ball), v))
    return blocks


@logtimings(logger.info)
def verify_certificate(cert, c):
    '''exact check of the certificate identity and of Gram positivity'''
    start = time.time()
    if cert.fingerprint != c.fingerprint:
        raise FingerprintMismatch("Certificate was made for complex %s, got "
                                  "%s" % (cert.fingerprint, c.fingerprint))
    if cert.convention != c.convention:
        raise ConventionMismatch("Certificate convention %r differs from %r"
                                 % (cert.convention, c.convention))

    def failed(reason):
        logger.info("Identity check failed: %s", reason)
        return VerificationReport(cert, False, False, reason,
                                  time.time() - start)

    mode = cert.mode
    if mode.degree > c.top:
        return failed("degree %d is outside the complex" % (mode.degree,))
    try:
        ball = certificate_ball(cert, c)
        t0, t1, _, _ = target_matrices(c, mode, ball)
    except KazcertError as e:
        return failed("target cannot be formed: %s" % (e,))
    # -- encode clamps the half radius to the diameter of a finite group
    top = max(ball.word_length) if ball.is_full else cert.half_radius
    if not 0 <= cert.half_radius <= top:
        return failed("half radius %d is not canonical for this complex"
                      % (cert.half_radius,))
    m = t0.rows
    try:
        canonical = build_support_basis(ball, mode, m, cert.half_radius)
    except KazcertError as e:
        return failed("basis cannot be formed: %s" % (e,))
    if canonical != cert.basis or cert.gram_size != len(canonical):
        return failed("basis differs from the canonical basis of half "
                      "radius %d" % (cert.half_radius,))

    blocks = expand_gram(cert, ball, basis_elements(cert.basis, ball))
    for i in range(m):
        for j in range(m):
            want = gr_add(t0.entries[i][j], gr_scale(t1.entries[i][j],
                                                     cert.epsilon))
            got = blocks.get((i, j), zero(ball))
            if got == want:
                continue
            diff = gr_add(got, gr_scale(want, -1))
            g = diff.support()[0]
            return failed("constraint (%d, %d, %s): expansion has %s, target "
                          "has %s" % (i, j, ball.format_element(g),
                                      format_rational(got.coefficient(g)),
                                      format_rational(want.coefficient(g))))

    result = ldl(cert.dense())
    elapsed = time.time() - start
    if not result.ok:
        logger.info("PSD check failed at pivot %d", result.failed_at)
        return VerificationReport(cert, True, False,
                                  'pivot %d: %s' % (result.failed_at,
                                                    result.reason), elapsed)
    return VerificationReport(cert, True, True, elapsed=elapsed,
                              pivots=result.pivots)


def extract_factors(cert, c):
    '''[(pivot, 1 x m row y)] with sum pivot y* y equal to the target'''
    ball = certificate_ball(cert, c)
    elements = basis_elements(cert.basis, ball)
    result = ldl(cert.dense())
    if not result.ok:
        raise PSDFailedAfterRetries("Certificate Gram is not PSD",
                                    {'pivot': result.failed_at})
    m = cert.basis.rank
    factors = list()
    for k, d in enumerate(result.pivots):
        if not d:
            continue
        row = [zero(ball) for _ in range(m)]
        for p, (g, j) in enumerate(cert.basis.entries):
            l = Fraction(1) if p == k else result.lower[p].get(k)
            if l and p >= k:
                row[j] = gr_add(row[j], gr_scale(elements[p], l))
        factors.append((d, GroupRingMatrix(ball, [row])))
    return factors


def factor_sum(factors, ball, m):
    '''sum pivot * y* y as an m x m matrix'''
    total = mat_zero(ball, m, m)
    for d, y in factors:
        total = mat_add(total, mat_scale(mat_mul(mat_star(y), y, ball), d))
    return total

#
# -- end of file
