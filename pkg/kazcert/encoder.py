#! /usr/bin/python
# -*- coding: utf8 -*-
#
# Copyright (c) 2026 kazcert contributors

from __future__ import absolute_import, division, print_function
from __future__ import unicode_literals

import math
import logging
from fractions import Fraction

from kazcert.ball import enumerate_ball, FULL
from kazcert.errors import RadiusTooSmall, TruncatedDegree, ParseError
from kazcert.errors import ResolutionNotAsserted, KazcertError
from kazcert.groupring import gr_mul, mat_identity, mat_scalar_mul
from kazcert.groupring import mat_scale, mat_l1_norm, mat_lift
from kazcert.resolution import laplacian
from kazcert.utils import logtimings, format_rational

logger = logging.getLogger(__name__)

OZAWA = 'ozawa'
BRACKET = 'bracket'
PAREN = 'paren'
INTERIOR = 'interior'
modes = (OZAWA, BRACKET, PAREN)

IDEAL = 'ideal'
GROUP = 'group'

SDPA_FORMAT = 'kazcert-sdpa 1'

subscripts = dict(zip('0123456789', '₀₁₂₃₄₅₆₇₈₉'))


def delta(k):
    return 'Δ' + ''.join(subscripts[x] for x in str(k))


class SOSMode(object):
    '''which certificate equation is encoded

      ozawa       D0 (D0 - eps) = sum x* x
      bracket(k)  Dk - eps = sum x* x
      paren(k)    D0 (Dk - eps) D0 = sum x* x
    '''

    def __init__(self, kind, degree=None, allow_paren_zero=False):
        if kind not in modes:
            raise KazcertError("Unknown mode %r; use one of %s"
                               % (kind, ', '.join(modes)))
        if kind == OZAWA:
            degree = 0
        if degree is None:
            degree = 1
        if kind != OZAWA and degree < 1:
            if not (kind == PAREN and degree == 0 and allow_paren_zero):
                raise KazcertError("Mode %s needs degree >= 1, got %d"
                                   % (kind, degree))
        self.kind = kind
        self.degree = degree
        self.allow_paren_zero = allow_paren_zero

    def __repr__(self):
        return '<SOSMode:%s>' % (self.name,)

    def __eq__(self, other):
        return isinstance(other, SOSMode) and \
            (self.kind, self.degree) == (other.kind, other.degree)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.degree))

    @property
    def name(self):
        if self.kind == OZAWA:
            return OZAWA
        return '%s(%d)' % (self.kind, self.degree)

    @property
    def basis_kind(self):
        return GROUP if self.kind == BRACKET else IDEAL

    @property
    def laplacian_degree(self):
        return self.degree

    def equation(self, eps):
        '''the identity a certificate proves, in group ring notation'''
        eps = format_rational(eps)
        rhs = 'Σᵢ pivotᵢ yᵢ*yᵢ'
        d0, dk = delta(0), delta(self.degree)
        if self.kind == OZAWA:
            return '%s(%s − %s) = %s' % (d0, d0, eps, rhs)
        if self.kind == BRACKET:
            return '%s − %s = %s' % (dk, eps, rhs)
        return '%s(%s − %s)%s = %s' % (d0, dk, eps, d0, rhs)


class SupportBasis(object):
    '''the Gram basis: (ball index g, module row) pairs, row major

    For the ideal kind entry p stands for (g - e) in row j, for the group
    kind it stands for g itself.
    '''

    def __init__(self, entries, kind, half_radius, rank):
        self.entries = [tuple(x) for x in entries]
        self.kind = kind
        self.half_radius = half_radius
        self.rank = rank

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, SupportBasis) and \
            (self.entries, self.kind, self.half_radius, self.rank) == \
            (other.entries, other.kind, other.half_radius, other.rank)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return '<SupportBasis:%s,d=%d,N=%d>' % (self.kind, self.half_radius,
                                                len(self))


def build_support_basis(ball_d, mode, m, half_radius=None):
    '''basis over B_d (the ball, or its indices within half_radius)'''
    if half_radius is None:
        half_radius = ball_d.radius
    elements = ball_d.indices_within(half_radius)
    kind = mode.basis_kind
    if kind == IDEAL:
        elements = [g for g in elements if g != 0]
    entries = [(g, j) for j in range(m) for g in elements]
    return SupportBasis(entries, kind, half_radius, m)


def product_terms(basis, a, b, ball):
    '''coefficients of w_a* w_b as a list of (ball index, integer)'''
    ga, gb = basis.entries[a][0], basis.entries[b][0]
    inv = ball.inverse_index[ga]
    gab = ball.product_index(inv, gb)
    if basis.kind == GROUP:
        return [(gab, 1)]
    return [(gab, 1), (inv, -1), (gb, -1), (0, 1)]


class Constraint(object):
    '''sum over (p, q), p <= q, of coef * Q[p, q] == c0 + eps * c1'''

    __slots__ = ('key', 'coeffs', 'c0', 'c1')

    def __init__(self, key, coeffs, c0, c1):
        self.key = tuple(key)
        self.coeffs = sorted((tuple(v), Fraction(q)) for v, q in coeffs if q)
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)

    def __repr__(self):
        return '<Constraint:%r>' % (self.key,)

    def __eq__(self, other):
        return isinstance(other, Constraint) and \
            (self.key, self.coeffs, self.c0, self.c1) == \
            (other.key, other.coeffs, other.c0, other.c1)

    def __ne__(self, other):
        return not self.__eq__(other)

    def value(self, gram):
        '''A(Q) for this constraint, gram indexable as gram[p][q]'''
        return sum((q * gram[a][b] for (a, b), q in self.coeffs), 0)


class SOSProblem(object):
    '''the semidefinite encoding of one certificate equation'''

    def __init__(self, mode, basis, constraints, cap, fingerprint,
                 convention, order_unit=None, degenerate=False, ball=None):
        self.mode = mode
        self.basis = basis
        self.constraints = list(constraints)
        self.cap = Fraction(cap)
        self.fingerprint = fingerprint
        self.convention = convention
        self.order_unit = dict(order_unit or dict())
        self.degenerate = degenerate
        self.ball = ball

    def __repr__(self):
        return '<SOSProblem:%s,N=%d,constraints=%d>' % (
            self.mode.name, self.gram_size, len(self.constraints))

    def __eq__(self, other):
        if not isinstance(other, SOSProblem):
            return NotImplemented
        return (self.mode, self.basis, self.constraints, self.cap,
                self.fingerprint, self.convention, self.order_unit,
                self.degenerate) == \
            (other.mode, other.basis, other.constraints, other.cap,
             other.fingerprint, other.convention, other.order_unit,
             other.degenerate)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    @property
    def gram_size(self):
        return len(self.basis)

    @property
    def degree(self):
        return self.mode.degree

    @property
    def half_radius(self):
        return self.basis.half_radius

    def variables(self):
        n = self.gram_size
        return [(p, q) for p in range(n) for q in range(p, n)]

    def identity_image(self):
        '''A(I) per constraint'''
        return [sum((q for (a, b), q in c.coeffs if a == b), Fraction(0))
                for c in self.constraints]


def check_degree(c, mode, assert_resolution=False, allow_truncated=False):
    k = mode.degree
    if k > c.top:
        raise TruncatedDegree("Degree %d is beyond the top degree %d of the "
                              "complex" % (k, c.top))
    if mode.kind == OZAWA:
        return
    if k > c.exact_through and not assert_resolution:
        raise ResolutionNotAsserted(
            "The complex is only known to be exact through degree %d; pass "
            "--assert-resolution to certify degree %d anyway"
            % (c.exact_through, k))
    if not c.has(k + 1) and not c.complete and not allow_truncated:
        raise TruncatedDegree(
            "d_%d is missing, so degree %d of the complex is truncated; pass "
            "--allow-truncated or raise --top-degree" % (k + 1, k))


def work_radius(c, mode):
    '''a radius large enough to hold the target of a mode'''
    d1 = c.differentials[1].radius()
    k = mode.degree
    rk = max([c.differentials[j].radius() for j in (k, k + 1)
              if j in c.differentials] + [0])
    if mode.kind == OZAWA:
        return 4 * d1
    if mode.kind == BRACKET:
        return 2 * rk
    return 4 * d1 + 2 * rk


def target_matrices(c, mode, ball):
    '''(T0, T1, scale, D0) with target(eps) = T0 + eps T1

    scale is the Laplacian whose l1 norm bounds eps.
    '''
    k = mode.degree
    lap0 = laplacian(c, 0, ball).matrix
    d0 = lap0.entries[0][0]
    if mode.kind == OZAWA:
        t0 = mat_scalar_mul(d0, lap0, ball)
        t1 = mat_scale(lap0, -1)
        return t0, t1, lap0, d0
    lapk = laplacian(c, k, ball).matrix
    m = lapk.rows
    if mode.kind == BRACKET:
        return lapk, mat_identity(ball, m, -1), lapk, d0
    t0 = mat_scalar_mul(d0, lapk, ball, right=d0)
    t1 = mat_scale(mat_identity(ball, m), -1)
    t1 = mat_scalar_mul(gr_mul(d0, d0, ball), t1, ball)
    return t0, t1, lapk, d0


def order_unit_gram(mode, basis, ball, c, d0):
    '''an exact PSD Gram U whose expansion is -T1'''
    index = dict((x, p) for p, x in enumerate(basis.entries))
    unit = dict()

    def add(p, q, value):
        a, b = min(p, q), max(p, q)
        unit[(a, b)] = unit.get((a, b), 0) + Fraction(value)

    if mode.kind == BRACKET:
        for j in range(basis.rank):
            p = index[(0, j)]
            add(p, p, 1)
    elif mode.kind == OZAWA:
        pres = c.presentation
        for i in range(len(pres.generators)):
            g = ball.find(pres.backend.generator(i))
            if g == 0:
                continue
            p = index[(g, 0)]
            add(p, p, 1)
    else:
        # -- D0 = sum_g c_g (g - e) since D0 has augmentation zero, and D0 is
        # -- self-adjoint, so D0^2 I is the Gram v v^T in every row
        v = [(g, q) for g, q in sorted(d0.coeffs.items()) if g != 0]
        for j in range(basis.rank):
            for ga, qa in v:
                for gb, qb in v:
                    pa, pb = index[(ga, j)], index[(gb, j)]
                    if pa <= pb:
                        add(pa, pb, qa * qb)
    return dict((k, v) for k, v in unit.items() if v)


@logtimings(logger.info)
def encode(c, mode, d=None, assert_resolution=False, allow_truncated=False,
           ball_cap=None):
    '''encode the certificate equation of a mode as an SOSProblem'''
    check_degree(c, mode, assert_resolution, allow_truncated)
    cap_kw = dict(cap=ball_cap or c.ball.cap)
    p = c.presentation
    if c.ball.is_full:
        work = c.ball
    else:
        work = enumerate_ball(p, max(work_radius(c, mode), c.ball.radius),
                              **cap_kw)
    t0, t1, scale, d0 = target_matrices(c, mode, work)
    rt = max(t0.radius(), t1.radius())
    dmin = int(math.ceil(rt / 2))
    if work.is_full:
        if d is None or d == FULL:
            d = max(dmin, max(work.word_length))
        d = min(d, max(work.word_length))
    elif d is None:
        d = dmin
    elif d == FULL:
        raise RadiusTooSmall("Half radius 'full' needs a finite group")
    if d < dmin and not work.is_full:
        raise RadiusTooSmall("No certificate fits half radius %d: the target "
                             "has radius %d" % (d, rt),
                             minimal_half_radius=dmin)
    if work.is_full:
        ball = work
    elif 2 * d > work.radius:
        ball = enumerate_ball(p, 2 * d, **cap_kw)
    else:
        ball = work
    m = t0.rows
    basis = build_support_basis(ball, mode, m, half_radius=d)
    N = len(basis)
    logger.info("Encoding %s: half radius %d, Gram size %d, target radius %d",
                mode.name, d, N, rt)

    table = dict()
    inv = ball.inverse_index

    def keep(i, j, g):
        return i < j or (i == j and g <= inv[g])

    for a in range(N):
        ra = basis.entries[a][1]
        for b in range(N):
            rb = basis.entries[b][1]
            if ra > rb:
                continue
            var = (min(a, b), max(a, b))
            for g, q in product_terms(basis, a, b, ball):
                if not keep(ra, rb, g):
                    continue
                row = table.setdefault((ra, rb, g), dict())
                row[var] = row.get(var, 0) + q

    t0 = mat_lift(t0, ball)
    t1 = mat_lift(t1, ball)
    for i in range(m):
        for j in range(i, m):
            support = set(t0.entries[i][j].coeffs)
            support.update(t1.entries[i][j].coeffs)
            for g in support:
                if keep(i, j, g):
                    table.setdefault((i, j, g), dict())

    constraints = list()
    for key in sorted(table):
        i, j, g = key
        coeffs = [(v, q) for v, q in table[key].items() if q]
        c0 = t0.entries[i][j].coefficient(g)
        c1 = t1.entries[i][j].coefficient(g)
        if not coeffs:
            if c0 or c1:
                raise RadiusTooSmall(
                    "Target coefficient at %s in block (%d, %d) has no Gram "
                    "factorization at half radius %d"
                    % (ball.format_element(g), i, j, d),
                    minimal_half_radius=max(dmin, d + 1))
            continue
        constraints.append(Constraint(key, coeffs, c0, c1))

    cap = 2 * mat_l1_norm(scale)
    degenerate = N == 0 or not any(x.c1 for x in constraints)
    if degenerate:
        logger.warning("Degenerate problem: every epsilon is feasible.")
        unit = dict()
    else:
        unit = order_unit_gram(mode, basis, ball, c, d0)
    problem = SOSProblem(mode, basis, constraints, cap, c.fingerprint,
                         c.convention, order_unit=unit,
                         degenerate=degenerate, ball=ball)
    logger.info("Encoded %r", problem)
    return problem


def interior_problem(p):
    '''maximize t subject to A(Q) = -c1 - t A(I), Q PSD

    A solution gives Q + t I, a strictly positive Gram whose expansion is
    -T1; the certifier retreats along it.
    '''
    aid = p.identity_image()
    constraints = [Constraint(c.key, c.coeffs, -c.c1, -x)
                   for c, x in zip(p.constraints, aid)]
    mode = SOSMode(p.mode.kind, p.mode.degree, allow_paren_zero=True)
    return SOSProblem(mode, p.basis, constraints, max(p.cap, 1),
                      p.fingerprint, p.convention, degenerate=p.degenerate,
                      ball=p.ball)


# -- SDPA sparse format, with the exact data in "*" comment lines
#
def sdpa_number(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return repr(float(q))


def export_sdpa(p):
    '''SDPA sparse (.dat-s) text; blocks N, 1, 1 with eps = eps+ - eps-'''
    N = p.gram_size
    lines = ['* %s' % (SDPA_FORMAT,),
             '* mode %s %d' % (p.mode.kind, p.mode.degree),
             '* half-radius %d' % (p.half_radius,),
             '* basis-kind %s' % (p.basis.kind,),
             '* module-rank %d' % (p.basis.rank,),
             '* fingerprint %s' % (p.fingerprint,),
             '* convention %s' % (p.convention,),
             '* cap %s' % (format_rational(p.cap),),
             '* degenerate %s' % ('yes' if p.degenerate else 'no',)]
    for n, (g, j) in enumerate(p.basis.entries):
        lines.append('* basis %d %d %d' % (n, j, g))
    for r, c in enumerate(p.constraints):
        lines.append('* key %d %d %d %d %s %s' % (
            r + 1, c.key[0], c.key[1], c.key[2],
            format_rational(c.c0), format_rational(c.c1)))
    for (a, b), v in sorted(p.order_unit.items()):
        lines.append('* unit %d %d %s' % (a, b, format_rational(v)))
    blocks = [N, 1, 1] if N else [1, 1]
    lines.append('%d' % (len(p.constraints),))
    lines.append('%d' % (len(blocks),))
    lines.append(' '.join(str(x) for x in blocks))
    lines.append(' '.join(sdpa_number(c.c0) for c in p.constraints))
    plus, minus = (2, 3) if N else (1, 2)
    body = [(0, plus, 1, 1, Fraction(1)), (0, minus, 1, 1, Fraction(-1))]
    for r, c in enumerate(p.constraints, 1):
        for (a, b), q in c.coeffs:
            body.append((r, 1, a + 1, b + 1, q if a == b else q / 2))
        if c.c1:
            body.append((r, plus, 1, 1, -c.c1))
            body.append((r, minus, 1, 1, c.c1))
    for entry in sorted(body):
        lines.append('%d %d %d %d %s' % (entry[:4] + (sdpa_number(entry[4]),)))
    return '\n'.join(lines) + '\n'


def import_sdpa(text):
    '''rebuild an SOSProblem from export_sdpa() text'''
    meta = dict()
    basis = list()
    keys = dict()
    unit = dict()
    numeric = list()
    for n, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith('*') or stripped.startswith('"'):
            words = stripped.lstrip('*').split(None, 1)
            if not words:
                continue
            tag, rest = words[0], (words[1] if len(words) > 1 else '')
            try:
                if tag == 'basis':
                    _, j, g = [int(x) for x in rest.split()]
                    basis.append((g, j))
                elif tag == 'key':
                    parts = rest.split()
                    keys[int(parts[0])] = (
                        tuple(int(x) for x in parts[1:4]),
                        Fraction(parts[4]), Fraction(parts[5]))
                elif tag == 'unit':
                    a, b, v = rest.split()
                    unit[(int(a), int(b))] = Fraction(v)
                else:
                    meta[tag] = rest.strip()
            except (ValueError, IndexError, ZeroDivisionError):
                raise ParseError("Line %d: bad comment data %r" % (n, line))
            continue
        numeric.append((n, stripped.replace(',', ' ').replace('{', ' ')
                        .replace('}', ' ').replace('(', ' ')
                        .replace(')', ' ')))
    if len(numeric) < 3:
        raise ParseError("SDPA header is incomplete")
    try:
        mcount = int(numeric[0][1].split()[0])
        nblocks = int(numeric[1][1].split()[0])
        sizes = [abs(int(x)) for x in numeric[2][1].split()][:nblocks]
    except (ValueError, IndexError):
        raise ParseError("SDPA header is malformed")
    rest = numeric[3:]
    cvec = list()
    if mcount:
        if not rest:
            raise ParseError("SDPA c vector is missing")
        try:
            cvec = [Fraction(x) for x in rest[0][1].split()]
        except ValueError:
            raise ParseError("SDPA c vector is malformed")
        rest = rest[1:]
    if len(cvec) != mcount:
        raise ParseError("SDPA c vector has %d entries, expected %d"
                         % (len(cvec), mcount))
    N = sizes[0] if nblocks == 3 else 0
    plus = 2 if nblocks == 3 else 1
    coeffs = [dict() for _ in range(mcount)]
    c1 = [Fraction(0)] * mcount
    for n, line in rest:
        parts = line.split()
        try:
            r, blk, i, j = [int(x) for x in parts[:4]]
            v = Fraction(parts[4])
        except (ValueError, IndexError):
            raise ParseError("Line %d: bad SDPA entry %r" % (n, line))
        if r == 0:
            continue
        if r > mcount:
            raise ParseError("Line %d: constraint %d out of range" % (n, r))
        if blk == 1 and nblocks == 3:
            a, b = min(i, j) - 1, max(i, j) - 1
            coeffs[r - 1][(a, b)] = v if a == b else 2 * v
        elif blk == plus:
            c1[r - 1] = -v
    constraints = list()
    for r in range(mcount):
        key, c0, c1x = keys.get(r + 1, ((0, 0, r), cvec[r], c1[r]))
        constraints.append(Constraint(key, coeffs[r].items(), c0, c1x))
    try:
        kind, degree = meta.get('mode', '%s 1' % (BRACKET,)).split()
        mode = SOSMode(kind, int(degree), allow_paren_zero=True)
        half_radius = int(meta.get('half-radius', 0))
        rank = int(meta.get('module-rank', 1))
        cap = Fraction(meta.get('cap', '0'))
    except ValueError:
        raise ParseError("SDPA metadata is malformed")
    if not basis:
        basis = [(p, 0) for p in range(N)]
    if len(basis) != N:
        raise ParseError("Basis has %d entries, Gram block has size %d"
                         % (len(basis), N))
    sbasis = SupportBasis(basis, meta.get('basis-kind', mode.basis_kind),
                          half_radius, rank)
    return SOSProblem(mode, sbasis, constraints, cap,
                      meta.get('fingerprint'), meta.get('convention'),
                      order_unit=unit,
                      degenerate=meta.get('degenerate') == 'yes')

#
# -- end of file
