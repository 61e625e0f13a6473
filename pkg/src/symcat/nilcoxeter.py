r"""Nilcoxeter algebras N_n, their induction/restriction bimodules, and K-theory.

N_n has Z-basis {u_s : s in S_n} with u_s u_t = u_{st} when lengths add and 0
otherwise; in particular u_i^2 = 0 for the generators u_i = u_{s_i}.  The
module provides the algebra arithmetic, the explicit free right-module basis
of N_{n+1} over N_n, a mechanical check of the bimodule decomposition
N_{n+1} (x)_{N_{n-1}} ... behind the categorified relation d x = x d + 1, and
the Grothendieck-group model: induction/restriction on classes of simples and
projectives matches multiplication by x and differentiation d on the two
polynomial lattices of the weyl module.

>>> u1, u2 = nc_generator(1, 3), nc_generator(2, 3)
>>> nc_product(u1, u1).is_zero()
True
>>> nc_product(u1, u2) == NilcoxElem(3, {(2, 3, 1): 1})
True
"""

from __future__ import annotations

import json
import math
import re

from fractions import Fraction

from .combinatorics import (
    all_perms,
    coset_decompose,
    coset_rep,
    identity_perm,
    is_reduced,
    perm_extend,
    perm_length,
    perm_mult,
    reduced_word,
    simple_transposition,
    word_eval,
)
from .errors import (
    BoundExceeded,
    FlavorMismatch,
    ParseError,
    RankMismatch,
    VerificationFailure,
)
from .weyl import DIVIDED_POWERS, MONOMIALS, PolyVector, WeylElement, weyl_apply

__all__ = [
    'G_SIMPLES',
    'K_PROJECTIVES',
    'NilcoxElem',
    'KVector',
    'nc_unit',
    'nc_generator',
    'nc_product',
    'nc_word_eval',
    'x_right_basis',
    'verify_bimodule_iso',
    'simple_class',
    'projective_class',
    'ind_K',
    'res_K',
    'k_pairing',
    'hom_space_dimension',
    'regular_action_matrices',
    'simple_action_matrices',
    'phi_G',
    'phi_K',
    'verify_weyl_squares',
    'parse_nilcox',
    'render_nilcox',
    'report_json',
]

G_SIMPLES = 'G_simples'
K_PROJECTIVES = 'K_projectives'


class NilcoxElem:
    """Integer combination of basis elements u_s, s a permutation of fixed rank."""

    __slots__ = ('n', 'coeffs')

    def __init__(self, n, coeffs):
        clean = {}
        for sigma, c in coeffs.items():
            if len(sigma) != n:
                raise ValueError(f'permutation {sigma!r} has wrong rank for N_{n}')
            c = int(c)
            if c:
                clean[sigma] = c
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'coeffs', clean)

    def __setattr__(self, *a):
        raise AttributeError('NilcoxElem is immutable')

    def __eq__(self, other):
        return (isinstance(other, NilcoxElem) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __add__(self, other):
        if self.n != other.n:
            raise RankMismatch('cannot add elements of different ranks')
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return NilcoxElem(self.n, out)

    def __neg__(self):
        return NilcoxElem(self.n, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return NilcoxElem(self.n, {k: scalar * c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, NilcoxElem):
            return nc_product(self, other)
        return NotImplemented

    def __repr__(self):
        return f'NilcoxElem({self.n}, {render_nilcox(self)!r})'

    def is_zero(self):
        return not self.coeffs


def nc_unit(n):
    return NilcoxElem(n, {identity_perm(n): 1})


def nc_generator(i, n):
    """u_i = u_{s_i} inside N_n (needs 1 <= i <= n-1)."""
    return NilcoxElem(n, {simple_transposition(i, n): 1})


def nc_product(a, b):
    """u_s u_t = u_{st} when l(st) = l(s) + l(t), else 0, extended bilinearly.

    >>> nc_product(nc_generator(1, 3), nc_generator(1, 3)).is_zero()
    True
    """
    if a.n != b.n:
        raise RankMismatch(f'cannot multiply N_{a.n} by N_{b.n}')
    out = {}
    for sigma, c1 in a.coeffs.items():
        ls = perm_length(sigma)
        for tau, c2 in b.coeffs.items():
            st = perm_mult(sigma, tau)
            if perm_length(st) == ls + perm_length(tau):
                out[st] = out.get(st, 0) + c1 * c2
    return NilcoxElem(a.n, out)


def nc_word_eval(word, n):
    """Oracle: evaluate u_{i1} ... u_{ik} by string rewriting alone.

    Explores every word reachable through braid moves (i, i+1, i) <->
    (i+1, i, i+1) and distant swaps; if any reachable word has an adjacent
    repeated letter the product is 0 (u_i^2 = 0), otherwise the word is
    reduced and the product is the single basis vector it spells.

    >>> nc_word_eval((1, 2, 1), 3) == nc_word_eval((2, 1, 2), 3)
    True
    >>> nc_word_eval((1, 2, 1, 2), 3).is_zero()
    True
    """
    start = tuple(word)
    for i in start:
        if not 1 <= i <= n - 1:
            raise ValueError(f'generator index {i} out of range for N_{n}')
    seen = set()
    queue = [start]
    while queue:
        w = queue.pop()
        if w in seen:
            continue
        seen.add(w)
        for p in range(len(w) - 1):
            if w[p] == w[p + 1]:
                return NilcoxElem(n, {})
        for p in range(len(w) - 1):
            if abs(w[p] - w[p + 1]) >= 2:
                queue.append(w[:p] + (w[p + 1], w[p]) + w[p + 2:])
        for p in range(len(w) - 2):
            i, j, k = w[p], w[p + 1], w[p + 2]
            if i == k and abs(i - j) == 1:
                queue.append(w[:p] + (j, i, j) + w[p + 3:])
    return NilcoxElem(n, {word_eval(start, n): 1})


def x_right_basis(n):
    """Free basis of N_{n+1} as a right N_n-module: 1, u_n, u_{n-1}u_n, ..., u_1...u_n.

    Element number j is u_{r_i} for i = n+1-j, where r_i = s_i s_{i+1} ... s_n
    is the minimal coset representative sending n+1 to i.

    >>> [render_nilcox(b) for b in x_right_basis(2)]
    ['u[]', 'u[2]', 'u[1,2]']
    """
    if n < 0:
        raise ValueError('rank must be nonnegative')
    return [NilcoxElem(n + 1, {coset_rep(i, n + 1): 1})
            for i in range(n + 1, 0, -1)]


def _factor_right(elem):
    """Write an element of N_m in the free right N_{m-1}-basis.

    Returns a map (i, sigma') -> coeff with u_s = u_{r_i} u_{sigma'},
    sigma' in S_{m-1}; the coset factorization is always length-additive.
    """
    out = {}
    for sigma, c in elem.coeffs.items():
        i, rest = coset_decompose(sigma)
        key = (i, rest)
        out[key] = out.get(key, 0) + c
    return out


def _first_failure(report):
    for entry in report:
        if not entry['pass']:
            return entry
    return None


def verify_bimodule_iso(n, max_rank=5):
    """Check N_{n+1} = m_1(N_n) (+) m_2(N_n (x)_{N_{n-1}} N_n) explicitly.

    m_1 is the unit inclusion and m_2(a (x) b) = a u_n b.  The report covers
    injectivity of both maps, disjointness and joint spanning of the images
    (n! + n*n! = (n+1)!), the membership criterion for the m_1 image, and
    compatibility with the left and right N_n-actions on generators (which
    for m_2 also exercises well-definedness over the tensor product).

    Raises VerificationFailure naming the first violated check; the full
    report rides on the exception.
    """
    if not 1 <= n <= max_rank:
        raise BoundExceeded(f'rank {n} outside verified range 1..{max_rank}')
    report = []

    def check(name, ok, detail):
        report.append({'check': name, 'n': n, 'pass': bool(ok), 'detail': detail})

    m = n + 1
    sn = list(all_perms(n))
    u_n_top = nc_generator(n, m)

    def m1(elem):
        return NilcoxElem(m, {perm_extend(s, m): c for s, c in elem.coeffs.items()})

    # free basis of the tensor square: (i, tau) with b_i = u_{r_i} in N_n
    # running over x_right_basis(n-1) and tau over S_n
    tensor_basis = [(i, tau) for i in range(n, 0, -1) for tau in sn]

    def m2_image(i, tau):
        left = NilcoxElem(m, {perm_extend(coset_rep(i, n), m): 1})
        right = NilcoxElem(m, {perm_extend(tau, m): 1})
        return nc_product(left, nc_product(u_n_top, right))

    m1_images = {next(iter(m1(NilcoxElem(n, {s: 1})).coeffs)) for s in sn}
    check('m1-injective', len(m1_images) == len(sn),
          f'{len(m1_images)} distinct images of {len(sn)} basis vectors')

    m2_images = {}
    single = True
    for i, tau in tensor_basis:
        img = m2_image(i, tau)
        if len(img.coeffs) != 1 or set(img.coeffs.values()) != {1}:
            single = False
            break
        m2_images[(i, tau)] = next(iter(img.coeffs))
    check('m2-basis-to-basis', single,
          'every basis tensor maps to a single u_sigma with coefficient 1')
    check('m2-injective', single and len(set(m2_images.values())) == len(tensor_basis),
          f'{len(set(m2_images.values()))} distinct images of {len(tensor_basis)} tensors')

    overlap = m1_images & set(m2_images.values())
    check('images-disjoint', single and not overlap, f'{len(overlap)} common basis vectors')

    fixed_top = {s for s in all_perms(m) if s[m - 1] == m}
    check('m1-image-criterion', m1_images == fixed_top,
          'u_sigma lies in the m_1 image exactly when sigma fixes the top letter')

    total = len(m1_images) + len(set(m2_images.values()))
    spanned = single and (m1_images | set(m2_images.values())) == set(all_perms(m))
    check('images-span', spanned and total == math.factorial(m),
          f'{math.factorial(n)} + {n}*{math.factorial(n)} = {total} '
          f'(expect {math.factorial(m)})')

    gens = [nc_generator(j, n) for j in range(1, n)]
    gens_top = [nc_generator(j, m) for j in range(1, n)]

    ok_m1 = True
    for g, g_top in zip(gens, gens_top):
        for s in sn:
            e = NilcoxElem(n, {s: 1})
            if m1(nc_product(g, e)) != nc_product(g_top, m1(e)):
                ok_m1 = False
            if m1(nc_product(e, g)) != nc_product(m1(e), g_top):
                ok_m1 = False
    check('m1-bimodule-map', ok_m1, 'm_1 commutes with both actions on generators')

    def m2_linear(tensor_coeffs):
        out = NilcoxElem(m, {})
        for (i, tau), c in tensor_coeffs.items():
            out = out + c * m2_image(i, tau)
        return out

    ok_left = True
    for j in range(1, n):
        g = gens[j - 1]
        g_top = gens_top[j - 1]
        for i, tau in tensor_basis:
            # push u_j across the free basis: u_j u_{r_i} = sum u_{r_i'} u_{rho},
            # then the N_{n-1} factor rho slides through the tensor onto tau
            moved = {}
            prod = nc_product(g, NilcoxElem(n, {coset_rep(i, n): 1}))
            for (i2, rho), c in _factor_right(prod).items():
                shifted = nc_product(NilcoxElem(n, {perm_extend(rho, n): 1}),
                                     NilcoxElem(n, {tau: 1}))
                for tau2, c2 in shifted.coeffs.items():
                    key = (i2, tau2)
                    moved[key] = moved.get(key, 0) + c * c2
            if m2_linear(moved) != nc_product(g_top, m2_image(i, tau)):
                ok_left = False
    check('m2-left-linear', ok_left,
          'm_2 commutes with the left action (well-defined over the tensor)')

    ok_right = True
    for j in range(1, n):
        g = gens[j - 1]
        g_top = gens_top[j - 1]
        for i, tau in tensor_basis:
            shifted = nc_product(NilcoxElem(n, {tau: 1}), g)
            moved = {(i, tau2): c for tau2, c in shifted.coeffs.items()}
            if m2_linear(moved) != nc_product(m2_image(i, tau), g_top):
                ok_right = False
    check('m2-right-linear', ok_right, 'm_2 commutes with the right action')

    bad = _first_failure(report)
    if bad is not None:
        raise VerificationFailure(
            f'bimodule decomposition check {bad["check"]!r} failed at n={n}: '
            f'{bad["detail"]}', report=report)
    return report


#######################
# Grothendieck groups #
#######################


class KVector:
    """Integer vector of classes: sum c_n [L_n] (flavor G) or sum c_n [N_n] (flavor K)."""

    __slots__ = ('flavor', 'coords')

    def __init__(self, flavor, coords):
        if flavor not in (G_SIMPLES, K_PROJECTIVES):
            raise ValueError(f'unknown flavor {flavor!r}')
        clean = {}
        for nn, c in coords.items():
            if not (isinstance(nn, int) and nn >= 0):
                raise ValueError(f'bad index {nn!r}')
            c = int(c)
            if c:
                clean[nn] = c
        object.__setattr__(self, 'flavor', flavor)
        object.__setattr__(self, 'coords', clean)

    def __setattr__(self, *a):
        raise AttributeError('KVector is immutable')

    def __eq__(self, other):
        return (isinstance(other, KVector) and self.flavor == other.flavor
                and self.coords == other.coords)

    def __add__(self, other):
        if self.flavor != other.flavor:
            raise FlavorMismatch('cannot add vectors of different flavors')
        out = dict(self.coords)
        for nn, c in other.coords.items():
            out[nn] = out.get(nn, 0) + c
        return KVector(self.flavor, out)

    def __neg__(self):
        return KVector(self.flavor, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return KVector(self.flavor, {k: scalar * c for k, c in self.coords.items()})

    def __repr__(self):
        sym = 'L' if self.flavor == G_SIMPLES else 'N'
        if not self.coords:
            return f'KVector({self.flavor!r}, 0)'
        body = ' + '.join(f'{c} [{sym}_{nn}]' if c != 1 else f'[{sym}_{nn}]'
                          for nn, c in sorted(self.coords.items()))
        return f'KVector({self.flavor!r}, {body!r})'

    def is_zero(self):
        return not self.coords


def simple_class(n):
    """[L_n], the class of the one-dimensional simple of N_n."""
    return KVector(G_SIMPLES, {n: 1})


def projective_class(n):
    """[N_n], the class of the regular (free rank one) module."""
    return KVector(K_PROJECTIVES, {n: 1})


def _ind_multiplicity(flavor, n):
    # rank of N_{n+1} as a free right N_n-module, straight from the basis
    rank = len(x_right_basis(n))
    if flavor == G_SIMPLES:
        # Ind L_n has dimension rank * dim L_n; every composition factor is
        # the one simple L_{n+1}, of dimension 1
        return rank * 1
    dim_ind = rank * math.factorial(n)
    mult, rem = divmod(dim_ind, math.factorial(n + 1))
    assert rem == 0
    return mult


def _res_multiplicity(flavor, n):
    if flavor == G_SIMPLES:
        return 1  # dim L_n / dim L_{n-1}
    # N_n restricted to N_{n-1} is free; u_s -> u_{s^{-1}} turns the right
    # coset basis into a left one, so the rank is the same count
    return len(x_right_basis(n - 1))


def ind_K(v):
    """Class of induction to the next rank, computed from module dimensions."""
    out = {}
    for n, c in v.coords.items():
        out[n + 1] = out.get(n + 1, 0) + c * _ind_multiplicity(v.flavor, n)
    return KVector(v.flavor, out)


def res_K(v):
    """Class of restriction to the previous rank; rank 0 restricts to zero."""
    out = {}
    for n, c in v.coords.items():
        if n == 0:
            continue
        out[n - 1] = out.get(n - 1, 0) + c * _res_multiplicity(v.flavor, n)
    return KVector(v.flavor, out)


def k_pairing(a, b):
    """<[N_m], [L_n]> = delta, extended bilinearly.

    >>> k_pairing(projective_class(2), simple_class(2))
    1
    """
    if a.flavor != K_PROJECTIVES or b.flavor != G_SIMPLES:
        raise FlavorMismatch('pairing takes (projective-flavor, simple-flavor) arguments')
    return sum(c * b.coords.get(n, 0) for n, c in a.coords.items())


def regular_action_matrices(n):
    """Left-multiplication matrices of the generators u_i on the u_sigma basis.

    Basis order is all_perms(n); entry [r][c] is the coefficient of basis
    vector r in u_i * (basis vector c).
    """
    basis = list(all_perms(n))
    index = {s: k for k, s in enumerate(basis)}
    mats = []
    for i in range(1, n):
        g = nc_generator(i, n)
        mat = [[0] * len(basis) for _ in basis]
        for c, s in enumerate(basis):
            img = nc_product(g, NilcoxElem(n, {s: 1}))
            for t, coeff in img.coeffs.items():
                mat[index[t]][c] = coeff
        mats.append(mat)
    return mats


def simple_action_matrices(n):
    """Generator actions on the one-dimensional simple: every u_i acts by 0."""
    return [[[0]] for _ in range(1, n)]


def hom_space_dimension(acts_m, dim_m, acts_l, dim_l):
    """dim Hom(M, L) for modules given by generator action matrices.

    Solves F A_i = B_i F for an unknown dim_l x dim_m matrix F by exact
    Gaussian elimination; the answer is the nullity of the stacked system.
    """
    unknowns = dim_l * dim_m
    rows = []
    for a_mat, b_mat in zip(acts_m, acts_l):
        for r in range(dim_l):
            for c in range(dim_m):
                row = [Fraction(0)] * unknowns
                for k in range(dim_m):
                    row[r * dim_m + k] += Fraction(a_mat[k][c])
                for k in range(dim_l):
                    row[k * dim_m + c] -= Fraction(b_mat[r][k])
                if any(row):
                    rows.append(row)
    rank = 0
    for col in range(unknowns):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return unknowns - rank


def phi_G(v):
    """[L_n] -> r_n = x^n/n! in the divided-power lattice."""
    if v.flavor != G_SIMPLES:
        raise FlavorMismatch('phi_G takes the simple flavor')
    return PolyVector(DIVIDED_POWERS, dict(v.coords))


def phi_K(v):
    """[N_n] -> x^n in the monomial lattice."""
    if v.flavor != K_PROJECTIVES:
        raise FlavorMismatch('phi_K takes the projective flavor')
    return PolyVector(MONOMIALS, dict(v.coords))


def verify_weyl_squares(max_n=10):
    """The induction/restriction squares against x and d, plus the Weyl relation.

    On every basis class with index <= max_n, in both flavors:
      phi o ind = (x .) o phi,   phi o res = (d .) o phi,
      res o ind = ind o res + id,
      <ind a, b> = <a, res b>  (indices <= 8).
    """
    x_elt = WeylElement({(1, 0): 1})
    d_elt = WeylElement({(0, 1): 1})
    report = []

    def check(name, ok, detail):
        report.append({'check': name, 'n': max_n, 'pass': bool(ok), 'detail': detail})

    for flavor, phi, label in ((G_SIMPLES, phi_G, 'simples'),
                               (K_PROJECTIVES, phi_K, 'projectives')):
        basis = [KVector(flavor, {n: 1}) for n in range(max_n + 1)]
        check(f'ind-square-{label}',
              all(phi(ind_K(v)) == weyl_apply(x_elt, phi(v)) for v in basis),
              f'phi o ind = x o phi on classes 0..{max_n}')
        check(f'res-square-{label}',
              all(phi(res_K(v)) == weyl_apply(d_elt, phi(v)) for v in basis),
              f'phi o res = d o phi on classes 0..{max_n}')
        check(f'weyl-relation-{label}',
              all(res_K(ind_K(v)) == ind_K(res_K(v)) + v for v in basis),
              f'res o ind = ind o res + id on classes 0..{max_n}')

    adj = all(k_pairing(ind_K(projective_class(m)), simple_class(n))
              == k_pairing(projective_class(m), res_K(simple_class(n)))
              for m in range(9) for n in range(9))
    check('ind-res-adjoint', adj, 'pairing adjunction on classes 0..8')

    bad = _first_failure(report)
    if bad is not None:
        raise VerificationFailure(
            f'K-theory check {bad["check"]!r} failed: {bad["detail"]}', report=report)
    return report


#################
# wire formats  #
#################

_NCTERM_RE = re.compile(r'^\s*(?P<coeff>-?\d+)?\s*u\[(?P<word>[\d,\s]*)\]\s*$')


def parse_nilcox(text, n):
    """Parse a literal like 'u[1,2] + 3 u[]' into N_n.

    The bracket holds a reduced word; a non-reduced word is rejected rather
    than silently evaluated.

    >>> parse_nilcox('u[1,2] + 3 u[]', 3) == (
    ...     NilcoxElem(3, {(2, 3, 1): 1}) + 3 * nc_unit(3))
    True
    """
    text = text.strip()
    if text == '0':
        return NilcoxElem(n, {})
    if not text:
        raise ParseError('empty nilcoxeter literal')
    terms = []
    sign = None
    buf = ''
    for ch in text:
        if ch in '+-':
            if buf.strip():
                terms.append((sign if sign is not None else 1, buf))
            elif sign is not None or terms:
                raise ParseError(f'dangling sign in {text!r}')
            sign = 1 if ch == '+' else -1
            buf = ''
        else:
            buf += ch
    if buf.strip():
        terms.append((sign if sign is not None else 1, buf))
    else:
        raise ParseError(f'trailing sign in {text!r}')
    out = {}
    for sgn, chunk in terms:
        mo = _NCTERM_RE.match(chunk)
        if not mo:
            raise ParseError(f'bad nilcoxeter term {chunk.strip()!r}')
        coeff = int(mo.group('coeff') or 1)
        body = mo.group('word').strip()
        word = tuple(int(p) for p in body.split(',')) if body else ()
        for i in word:
            if not 1 <= i <= n - 1:
                raise ParseError(f'generator index {i} out of range for N_{n}')
        if not is_reduced(word, n):
            raise ParseError(f'word {list(word)} is not reduced')
        sigma = word_eval(word, n)
        out[sigma] = out.get(sigma, 0) + sgn * coeff
    return NilcoxElem(n, out)


def render_nilcox(a):
    """Deterministic text form, shortest words first.

    >>> render_nilcox(nc_unit(2) - 2 * nc_generator(1, 2))
    'u[] - 2 u[1]'
    """
    if not a.coeffs:
        return '0'
    items = sorted(((reduced_word(s), c) for s, c in a.coeffs.items()),
                   key=lambda wc: (len(wc[0]), wc[0]))
    pieces = []
    for word, c in items:
        body = 'u[' + ','.join(str(i) for i in word) + ']'
        mag = abs(c)
        if mag != 1:
            body = f'{mag} {body}'
        if not pieces:
            pieces.append(body if c > 0 else '-' + body)
        else:
            pieces.append(('+ ' if c > 0 else '- ') + body)
    return ' '.join(pieces)


def report_json(report):
    """Serialize a verification report as JSON (stable key order)."""
    return json.dumps(report, sort_keys=True)
