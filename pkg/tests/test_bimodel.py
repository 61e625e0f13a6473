"""Tests for group algebras, composite bimodules, and the diagram functor."""

import math
import random

from fractions import Fraction

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

import symcat.bimodel as bm
from symcat.combinatorics import (
    all_perms,
    coset_rep,
    partitions_of,
    perm_extend,
    perm_mult,
)
from symcat.diagcat import Morphism, parse_diagram
from symcat.errors import (
    BoundExceeded,
    RankMismatch,
    UnrealizableAtRank,
    VerificationFailure,
)


def mor(text):
    return Morphism.from_diagram(parse_diagram(text))


def test_ga_product_basics():
    s1 = bm.ga_perm((2, 1, 3))
    assert bm.ga_product(s1, s1) == bm.ga_unit(3)
    a = bm.GroupAlgElem(2, {(1, 2): 1, (2, 1): 2})
    b = bm.GroupAlgElem(2, {(2, 1): Fraction(1, 2)})
    assert bm.ga_product(a, b) == bm.GroupAlgElem(
        2, {(2, 1): Fraction(1, 2), (1, 2): 1})
    with pytest.raises(RankMismatch):
        bm.ga_product(bm.ga_unit(2), bm.ga_unit(3))


def test_ga_rejects_bad_permutation():
    with pytest.raises(ValueError):
        bm.GroupAlgElem(2, {(1, 1): 1})


def test_idempotents():
    for n in range(2, 6):
        e, ep = bm.symmetrizer(n), bm.antisymmetrizer(n)
        assert bm.ga_product(e, e) == e
        assert bm.ga_product(ep, ep) == ep
        assert bm.ga_product(e, ep).is_zero()
        assert bm.ga_product(ep, e).is_zero()


def test_symmetrizer_rank_one():
    # the trivial and sign isotypic components are one-dimensional
    for n in range(2, 6):
        assert bm.matrix_rank(bm.right_mult_matrix(bm.symmetrizer(n))) == 1
        assert bm.matrix_rank(bm.right_mult_matrix(bm.antisymmetrizer(n))) == 1


def test_render_groupalg():
    a = bm.GroupAlgElem(2, {(1, 2): -1, (2, 1): Fraction(3, 2)})
    assert bm.render_groupalg(a) == '-(1,2) + 3/2 (2,1)'
    assert bm.render_groupalg(bm.GroupAlgElem(2, {})) == '0'


def test_path_from_signature():
    assert bm.path_from_signature('DU', 2).levels == (2, 3, 2)
    assert bm.path_from_signature('UD', 2).levels == (2, 1, 2)
    assert bm.path_from_signature('', 4).levels == (4,)
    with pytest.raises(UnrealizableAtRank):
        bm.path_from_signature('UDD', 1)
    with pytest.raises(ValueError):
        bm.BimodulePath((2, 4))


def test_tensor_basis_sizes():
    # one up-step from n is A_{n+1} itself
    for n in range(0, 4):
        assert len(bm.tensor_basis(bm.path_from_signature('U', n))) == \
            math.factorial(n + 1)
    # Res Ind has size (k+1)!; Ind Res has size k.k!
    for k in range(1, 5):
        assert len(bm.tensor_basis(bm.path_from_signature('DU', k))) == \
            math.factorial(k + 1)
        assert len(bm.tensor_basis(bm.path_from_signature('UD', k))) == \
            k * math.factorial(k)


def test_canonicalize_balanced_moves():
    # moving a subalgebra element across the tensor does not change the class
    k = 3
    path = bm.path_from_signature('UD', k)
    rng = random.Random(5)
    s_k = list(all_perms(k))
    s_km1 = list(all_perms(k - 1))
    for _ in range(40):
        a = coset_rep(rng.randint(1, k), k)
        d = rng.choice(s_km1)
        b, w = rng.choice(s_k), rng.choice(s_k)
        lhs = bm.canonicalize(path, (perm_mult(a, perm_extend(d, k)), b, w))
        mid = bm.canonicalize(path, (a, perm_mult(perm_extend(d, k), b), w))
        assert lhs == mid
        # and pushing the down slot into the free factor
        g = rng.choice(s_k)
        assert bm.canonicalize(path, (a, perm_mult(b, g), w)) == \
            bm.canonicalize(path, (a, b, perm_mult(g, w)))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 30))
def test_canonicalize_idempotent(seed):
    rng = random.Random(seed)
    sig = ''.join(rng.choice('UD') for _ in range(rng.randint(0, 3)))
    base = rng.randint(0, 3)
    try:
        path = bm.path_from_signature(sig, base)
    except UnrealizableAtRank:
        return
    slots = []
    for p in range(path.steps):
        m = path.carrier(path.step_of_position(p))
        slots.append(rng.choice(list(all_perms(m))))
    w = rng.choice(list(all_perms(path.base)))
    elem = tuple(slots) + (w,)
    once = bm.canonicalize(path, elem)
    assert bm.canonicalize(path, once) == once
    assert once in set(bm.tensor_basis(path))


def test_bimodule_elem_merges_balanced_representatives():
    path = bm.path_from_signature('UD', 3)
    a = coset_rep(1, 3)
    d = perm_extend((2, 1), 3)
    w = (1, 2, 3)
    elem1 = (perm_mult(a, d), (1, 2, 3), w)
    elem2 = (a, d, w)
    assert elem1 != elem2
    v = bm.BimoduleElem(path, {elem1: 1, elem2: -1})
    assert v.is_zero()


def test_diagram_to_map_identity_and_shape():
    rep = bm.diagram_to_map(mor('sig:U'), 2)
    assert rep.is_identity()
    assert len(rep.matrix) == 6
    rep = bm.diagram_to_map(mor('sig:; cup+1; cap+1'), 3)
    assert rep.is_identity()
    for n in range(0, 3):
        rep = bm.diagram_to_map(mor('sig:U; cup+1; x2; cap+1'), n)
        assert rep.is_zero()


def test_diagram_to_map_ud_crossing_frozen():
    # base 1: A_1 (x) A_1 -> A_2 sends the single basis vector to t = (2,1),
    # whose canonical coordinates pick out the first DU basis element
    rep = bm.diagram_to_map(mor('sig:UD; x1'), 1)
    assert rep.matrix == ((Fraction(1), Fraction(0)),)


def test_diagram_to_map_needs_realizable_ranks():
    with pytest.raises(UnrealizableAtRank):
        bm.diagram_to_map(mor('sig:UD; x1'), 0)
    # realizable boundary, unrealizable intermediate
    with pytest.raises(UnrealizableAtRank):
        bm.diagram_to_map(mor('sig:DU; x1; x1'), 0)


def test_adjunction_zigzags():
    zigzags = ['sig:U; cup+2; cap-1', 'sig:D; cup+1; cap-2',
               'sig:D; cup-2; cap+1', 'sig:U; cup-1; cap+2']
    for text in zigzags:
        for base in range(0, 4):
            try:
                rep = bm.diagram_to_map(mor(text), base)
            except UnrealizableAtRank:
                assert base == 0 and text[4] == 'D'
                continue
            assert rep.is_identity(), (text, base)


def test_dd_double_crossing_is_identity_in_bimodel():
    for base in range(2, 5):
        assert bm.diagram_to_map(mor('sig:DD; x1; x1'), base).is_identity()


def test_cw_circle_counts_cosets():
    # the clockwise circle acts on A_k by the rank k, so it has no
    # rank-independent scalar value; at rank 0 it is not even realizable
    with pytest.raises(UnrealizableAtRank):
        bm.diagram_to_map(mor('sig:; cup-1; cap-1'), 0)
    for k in range(1, 4):
        rep = bm.diagram_to_map(mor('sig:; cup-1; cap-1'), k)
        want = [[Fraction(k) if r == c else Fraction(0)
                 for c in range(math.factorial(k))]
                for r in range(math.factorial(k))]
        assert rep.matrix == tuple(tuple(row) for row in want)


def test_verify_local_relation_families():
    for rel in bm.LOCAL_RELATIONS:
        for n in range(0, 3):
            report = bm.verify_local_relation(rel, n)
            assert all(entry['pass'] for entry in report)
    with pytest.raises(BoundExceeded):
        bm.verify_local_relation('braid', 4)
    with pytest.raises(ValueError):
        bm.verify_local_relation('bogus', 1)


def test_mackey_check():
    for k in range(1, 5):
        report = bm.mackey_check(k)
        assert all(entry['pass'] for entry in report)
        assert {e['check'] for e in report} >= {
            'dimension', 'm1-injective', 'm2-injective', 'images-disjoint',
            'images-span', 'm1-image-criterion', 'm2-well-defined'}
    with pytest.raises(ValueError):
        bm.mackey_check(0)


def test_character_values():
    # hook lengths of (2,1) give dimension 2; sign and trivial are pinned
    assert bm.character_value((2, 1), (1, 1, 1)) == 2
    assert bm.character_value((2, 1), (2, 1)) == 0
    assert bm.character_value((2, 1), (3,)) == -1
    for alpha in partitions_of(5):
        assert bm.character_value((5,), alpha) == 1
        swaps = sum(part - 1 for part in alpha)
        assert bm.character_value((1, 1, 1, 1, 1), alpha) == (-1) ** swaps
    with pytest.raises(ValueError):
        bm.character_value((2,), (3,))


def test_character_orthogonality():
    # first orthogonality of irreducible characters via the cycle-type sum
    for size in range(1, 6):
        lams = list(partitions_of(size))
        for lam in lams:
            for mu in lams:
                total = Fraction(0)
                for alpha in partitions_of(size):
                    total += Fraction(
                        bm.character_value(lam, alpha)
                        * bm.character_value(mu, alpha),
                        bm._z(alpha))
                assert total == (1 if lam == mu else 0)


def test_induced_character_decomposition():
    assert bm.induced_character_decomposition((1,), (1,)) == \
        {(2,): 1, (1, 1): 1}
    assert bm.induced_character_decomposition((), (2, 1)) == {(2, 1): 1}
    assert bm.induced_character_decomposition((2, 1), ()) == {(2, 1): 1}
    assert bm.induced_character_decomposition((2,), (1, 1)) == \
        {(3, 1): 1, (2, 1, 1): 1}
    # Pieri rule for a row
    assert bm.induced_character_decomposition((2, 1), (2,)) == \
        {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}
    with pytest.raises(BoundExceeded):
        bm.induced_character_decomposition((4, 2), (2,))


def test_induced_decomposition_matches_lr_oracle():
    from symcat.symfunc import lr_coefficients
    for total in range(0, 7):
        for a in range(0, total + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    assert bm.induced_character_decomposition(lam, mu) == \
                        lr_coefficients(lam, mu), (lam, mu)


def test_matrix_text():
    rep = bm.diagram_to_map(mor('sig:; cup+1; cap+1'), 1)
    assert bm.matrix_text(rep) == '1/1'
    rep = bm.LinearMapRep.zero(bm.path_from_signature('', 2),
                               bm.path_from_signature('', 2))
    assert bm.matrix_text(rep) == '0/1 0/1\n0/1 0/1'


def test_linear_map_rep_validates_shape():
    path = bm.path_from_signature('', 2)
    with pytest.raises(ValueError):
        bm.LinearMapRep(path, path, [[1]])


def test_matrix_rank():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)],
            [Fraction(0), Fraction(1)]]
    assert bm.matrix_rank(rows) == 2
    assert bm.matrix_rank([]) == 0


def test_report_json_deterministic():
    report = bm.mackey_check(2)
    assert bm.report_json(report) == bm.report_json(list(report))
    assert '"pass": true' in bm.report_json(report)
