r"""Integral Heisenberg algebra, Fock space, and symmetric-group K-theory.

The algebra h has generators e_n and h_n* (n >= 1) with all e's commuting,
all h*'s commuting, and h_m* e_n = e_n h_m* + e_{n-1} h_{m-1}*, where an
index-0 factor collapses to 1.  As a Z-module h = Sym (x) Sym*, with basis
e_lambda h_mu*; elements are kept in that normal form (all starred letters
rightmost).  h acts on Sym -- the Fock space -- by e_lambda = multiplication
and h_mu* = the dual (adjoint) operator, and the same two operators realize
induction and restriction products on symmetric-group representation classes
under [S^lambda] -> s_lambda.

>>> w = parse_heisword('h1* e1')
>>> render_heis(heis_normalize(w))
'e[1] h*[1] + 1'
"""

from __future__ import annotations

import json
import re

from .combinatorics import partition_key, partitions_of
from .errors import ParseError, VerificationFailure
from .symfunc import SymFunc, convert, dual_apply, hall_pairing, lr_coefficients, \
    multiply, schur, zero

__all__ = [
    'HeisWord',
    'HeisNormal',
    'heis_unit',
    'heis_e',
    'heis_hstar',
    'heis_normalize',
    'heis_product',
    'fock_apply',
    'fock_apply_word',
    'verify_heis_relation',
    'verify_boson_relation',
    'specht_to_sym',
    'ind_class',
    'res_class',
    'verify_weak_fock',
    'parse_heisword',
    'render_heisword',
    'render_heis',
    'heis_to_json',
    'heis_from_json',
]


class HeisWord:
    """A word in the generators: tuple of letters ('e', n) or ('h*', n), n >= 1."""

    __slots__ = ('letters',)

    def __init__(self, letters):
        letters = tuple(letters)
        for kind, n in letters:
            if kind not in ('e', 'h*') or not (isinstance(n, int) and n >= 1):
                raise ValueError(f'bad letter {(kind, n)!r}')
        object.__setattr__(self, 'letters', letters)

    def __setattr__(self, *a):
        raise AttributeError('HeisWord is immutable')

    def __eq__(self, other):
        return isinstance(other, HeisWord) and self.letters == other.letters

    def __repr__(self):
        return f'HeisWord({render_heisword(self)!r})'


class HeisNormal:
    """Integer combination of normal-form basis elements e_lambda h_mu*."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        clean = {}
        for (lam, mu), c in coeffs.items():
            c = int(c)
            if c:
                clean[(tuple(lam), tuple(mu))] = c
        object.__setattr__(self, 'coeffs', clean)

    def __setattr__(self, *a):
        raise AttributeError('HeisNormal is immutable')

    def __eq__(self, other):
        return isinstance(other, HeisNormal) and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return HeisNormal(out)

    def __neg__(self):
        return HeisNormal({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return HeisNormal({k: scalar * c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeisNormal):
            return heis_product(self, other)
        return NotImplemented

    def __repr__(self):
        return f'HeisNormal({render_heis(self)!r})'

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        return sorted(self.coeffs.items(),
                      key=lambda kv: (-(sum(kv[0][0]) + sum(kv[0][1])),
                                      partition_key(kv[0][0]), partition_key(kv[0][1])))


def heis_unit():
    return HeisNormal({((), ()): 1})


def heis_e(lam):
    """The basis element e_lambda (no starred part)."""
    return HeisNormal({(tuple(lam), ()): 1})


def heis_hstar(mu):
    """The basis element h_mu* (no unstarred part)."""
    return HeisNormal({((), tuple(mu)): 1})


def _basis_word(lam, mu):
    return tuple(('e', n) for n in lam) + tuple(('h*', n) for n in mu)


def heis_normalize(w):
    """Rewrite a generator word into the e-left / h*-right normal form.

    The only non-commuting move is h_m* e_n = e_n h_m* + e_{n-1} h_{m-1}*
    (index-0 factors collapse to 1); each application removes one starred
    letter sitting left of an unstarred one, so the rewriting terminates.

    >>> render_heis(heis_normalize(parse_heisword('e2')))
    'e[2]'
    >>> render_heis(heis_normalize(parse_heisword('h2* e1')))
    'e[1] h*[2] + h*[1]'
    """
    pending = {w.letters: 1}
    out = {}
    while pending:
        word, c = pending.popitem()
        for p in range(len(word) - 1):
            if word[p][0] == 'h*' and word[p + 1][0] == 'e':
                m, n = word[p][1], word[p + 1][1]
                swapped = word[:p] + (('e', n), ('h*', m)) + word[p + 2:]
                pending[swapped] = pending.get(swapped, 0) + c
                mid = tuple(x for x in ((('e', n - 1) if n > 1 else None),
                                        (('h*', m - 1) if m > 1 else None))
                            if x is not None)
                dropped = word[:p] + mid + word[p + 2:]
                pending[dropped] = pending.get(dropped, 0) + c
                break
        else:
            lam = tuple(sorted((n for kind, n in word if kind == 'e'), reverse=True))
            mu = tuple(sorted((n for kind, n in word if kind == 'h*'), reverse=True))
            out[(lam, mu)] = out.get((lam, mu), 0) + c
    return HeisNormal(out)


def heis_product(a, b):
    """Bilinear product: concatenate basis words and renormalize.

    >>> lhs = heis_product(heis_hstar((1,)), heis_e((1,)))
    >>> lhs == heis_e((1,)) * heis_hstar((1,)) + heis_unit()
    True
    """
    out = HeisNormal({})
    for (lam1, mu1), c1 in a.coeffs.items():
        for (lam2, mu2), c2 in b.coeffs.items():
            word = HeisWord(_basis_word(lam1, mu1) + _basis_word(lam2, mu2))
            out = out + (c1 * c2) * heis_normalize(word)
    return out


def _e_elem(lam):
    return SymFunc('e', {tuple(lam): 1})


def _h_elem(mu):
    return SymFunc('h', {tuple(mu): 1})


def fock_apply(a, f):
    """Act on Sym: e_lambda multiplies, h_mu* is the dual operator (acting first).

    >>> from symcat.symfunc import parse_symfunc, render
    >>> render(fock_apply(heis_hstar((1,)), parse_symfunc('s[1]')))
    'm[]'
    """
    out = zero('m')
    for (lam, mu), c in a.coeffs.items():
        g = dual_apply(_h_elem(mu), f) if mu else f
        g = multiply(_e_elem(lam), g) if lam else g
        out = out + c * convert(g, 'm')
    return out


def fock_apply_word(w, f):
    """Act letter by letter, rightmost letter first; no normalization involved."""
    g = f
    for kind, n in reversed(w.letters):
        if kind == 'e':
            g = multiply(_e_elem((n,)), g)
        else:
            g = dual_apply(_h_elem((n,)), g)
    return convert(g, 'm')


def _first_failure(report):
    for entry in report:
        if not entry['pass']:
            return entry
    return None


def _schurs_up_to(degree):
    out = []
    for d in range(degree + 1):
        for lam in partitions_of(d):
            out.append((lam, SymFunc('s', {lam: 1})))
    return out


def verify_heis_relation(m, n, D):
    """Check h_m* e_n = e_n h_m* + e_{n-1} h_{m-1}* structurally and on Fock space.

    The structural side compares heis_product outputs; the operator side
    applies both sides letter by letter to every s_lambda with |lambda| <= D
    (independent of the normal-form rewriting), and also confirms that
    normalization preserves the Fock action on the same inputs.
    """
    if m < 1 or n < 1:
        raise ValueError('generator indices start at 1')
    if D < 0:
        raise ValueError('degree cutoff must be nonnegative')
    report = []

    def check(name, ok, detail, lam=None):
        entry = {'check': name, 'm': m, 'n': n, 'pass': bool(ok), 'detail': detail}
        if lam is not None:
            entry['lambda'] = list(lam)
        report.append(entry)

    lhs_word = HeisWord((('h*', m), ('e', n)))
    rhs_main = heis_product(heis_e((n,)), heis_hstar((m,)))
    lower = tuple(x for x in ((('e', n - 1) if n > 1 else None),
                              (('h*', m - 1) if m > 1 else None)) if x is not None)
    rhs_lower_word = HeisWord(lower)
    rhs = rhs_main + heis_normalize(rhs_lower_word)
    check('structural', heis_normalize(lhs_word) == rhs,
          'normal form of h_m* e_n matches e_n h_m* + e_{n-1} h_{m-1}*')

    for lam, s in _schurs_up_to(D):
        got = fock_apply_word(lhs_word, s)
        want = fock_apply_word(HeisWord((('e', n), ('h*', m))), s) \
            + fock_apply_word(rhs_lower_word, s)
        check('operator', got == want, f'both sides applied to s_{list(lam)}', lam)
        check('normalize-compatible',
              fock_apply(heis_normalize(lhs_word), s) == got,
              f'normal form acts like the word on s_{list(lam)}', lam)

    bad = _first_failure(report)
    if bad is not None:
        where = f" at lambda={bad['lambda']}" if 'lambda' in bad else ''
        raise VerificationFailure(
            f'Heisenberg relation check {bad["check"]!r} failed for '
            f'(m, n) = ({m}, {n}){where}', report=report)
    return report


def verify_boson_relation(m, n, D):
    """q_m p_n - p_n q_m = n delta_{m,n} id on s_lambda, |lambda| <= D.

    Here p_n is multiplication by the power sum and q_m = dual_apply(p_m, -);
    this is the rational presentation of the same algebra.
    """
    if m < 1 or n < 1:
        raise ValueError('generator indices start at 1')
    if D < 0:
        raise ValueError('degree cutoff must be nonnegative')
    p_m = SymFunc('p', {(m,): 1})
    p_n = SymFunc('p', {(n,): 1})
    report = []
    for lam, s in _schurs_up_to(D):
        qp = dual_apply(p_m, multiply(p_n, s))
        pq = multiply(p_n, dual_apply(p_m, s))
        want = (n if m == n else 0) * s
        ok = qp - pq == want
        report.append({'check': 'boson-commutator', 'm': m, 'n': n,
                       'lambda': list(lam), 'pass': bool(ok),
                       'detail': f'[q_{m}, p_{n}] on s_{list(lam)}'})
    bad = _first_failure(report)
    if bad is not None:
        raise VerificationFailure(
            f'boson relation failed for (m, n) = ({m}, {n}) at '
            f'lambda={bad["lambda"]}', report=report)
    return report


def specht_to_sym(lam):
    """Class of the Specht module S^lambda: the Schur function s_lambda.

    >>> from symcat.symfunc import render
    >>> render(specht_to_sym((1, 1, 1)))
    's[1,1,1]'
    """
    return convert(schur(tuple(lam)), 's')


def ind_class(M, N):
    """Induction product on representation classes: multiplication in Sym."""
    return multiply(M, N)


def res_class(M, N):
    """Restriction against M: the dual operator applied to N."""
    return dual_apply(M, N)


def verify_weak_fock(m, n, D):
    """The three induction/restriction commutation families on classes.

    Applied to every s_lambda with |lambda| <= D:
      Ind_{E_m} Ind_{E_n} = Ind_{E_n} Ind_{E_m},
      Res_{L_m} Res_{L_n} = Res_{L_n} Res_{L_m},
      Res_{L_m} Ind_{E_n} = Ind_{E_n} Res_{L_m} + Ind_{E_{n-1}} Res_{L_{m-1}}.
    """
    if m < 1 or n < 1:
        raise ValueError('generator indices start at 1')
    if D < 0:
        raise ValueError('degree cutoff must be nonnegative')
    e_m, e_n = _e_elem((m,)), _e_elem((n,))
    h_m, h_n = _h_elem((m,)), _h_elem((n,))
    one = SymFunc('m', {(): 1})
    e_lower = _e_elem((n - 1,)) if n > 1 else one
    h_lower = _h_elem((m - 1,)) if m > 1 else one
    report = []

    def check(name, ok, lam):
        report.append({'check': name, 'm': m, 'n': n, 'lambda': list(lam),
                       'pass': bool(ok), 'detail': f'on s_{list(lam)}'})

    for lam, s in _schurs_up_to(D):
        check('ind-ind-commute',
              ind_class(e_m, ind_class(e_n, s)) == ind_class(e_n, ind_class(e_m, s)),
              lam)
        check('res-res-commute',
              res_class(h_m, res_class(h_n, s)) == res_class(h_n, res_class(h_m, s)),
              lam)
        lhs = res_class(h_m, ind_class(e_n, s))
        rhs = ind_class(e_n, res_class(h_m, s)) \
            + ind_class(e_lower, res_class(h_lower, s))
        check('res-ind-exchange', lhs == rhs, lam)

    bad = _first_failure(report)
    if bad is not None:
        raise VerificationFailure(
            f'class-level check {bad["check"]!r} failed for (m, n) = ({m}, {n}) '
            f'at lambda={bad["lambda"]}', report=report)
    return report


#################
# wire formats  #
#################

_LETTER_RE = re.compile(r'^(?P<kind>[eh])(?P<index>\d+)(?P<star>\*?)$')


def parse_heisword(text):
    """Parse a space-separated generator word like 'e3 h2* e1'; '1' is the unit.

    >>> parse_heisword('e3 h2* e1').letters
    (('e', 3), ('h*', 2), ('e', 1))
    """
    text = text.strip()
    if text in ('', '1'):
        return HeisWord(())
    letters = []
    for token in text.split():
        mo = _LETTER_RE.match(token)
        if not mo:
            raise ParseError(f'bad generator token {token!r}')
        kind, index, star = mo.group('kind'), int(mo.group('index')), mo.group('star')
        if kind == 'e' and star:
            raise ParseError(f'e-generators are unstarred: {token!r}')
        if kind == 'h' and not star:
            raise ParseError(f'h-generators must be starred: {token!r}')
        if index < 1:
            raise ParseError(f'generator indices start at 1: {token!r}')
        letters.append(('e', index) if kind == 'e' else ('h*', index))
    return HeisWord(letters)


def render_heisword(w):
    if not w.letters:
        return '1'
    return ' '.join(f'e{n}' if kind == 'e' else f'h{n}*' for kind, n in w.letters)


def render_heis(a):
    """Deterministic text form of a normal-form element.

    >>> render_heis(heis_e((2, 1)) - 3 * heis_hstar((1,)))
    'e[2,1] - 3 h*[1]'
    """
    if not a.coeffs:
        return '0'
    pieces = []
    for (lam, mu), c in a.terms():
        factors = []
        if lam:
            factors.append('e[' + ','.join(map(str, lam)) + ']')
        if mu:
            factors.append('h*[' + ','.join(map(str, mu)) + ']')
        body = ' '.join(factors) if factors else '1'
        mag = abs(c)
        if mag != 1 or not factors:
            body = f'{mag} {body}' if factors else f'{mag}'
        if not pieces:
            pieces.append(body if c > 0 else '-' + body)
        else:
            pieces.append(('+ ' if c > 0 else '- ') + body)
    return ' '.join(pieces)


def heis_to_json(a):
    """JSON list of {e_partition, hstar_partition, coeff}, canonically ordered."""
    return json.dumps([{'e_partition': list(lam), 'hstar_partition': list(mu),
                        'coeff': c} for (lam, mu), c in a.terms()])


def heis_from_json(text):
    data = json.loads(text)
    out = {}
    for entry in data:
        key = (tuple(entry['e_partition']), tuple(entry['hstar_partition']))
        out[key] = out.get(key, 0) + int(entry['coeff'])
    return HeisNormal(out)
