from itertools import product

import pytest

from moufang import catalog
from moufang.birep import Birepresentation, is_faithful, kernel, regular_birepresentation, trivial_birepresentation
from moufang.errors import NotASubloop, QuotientError
from moufang.loops import classify
from moufang.perms import Permutation
from moufang.quotient import (
    induced_birepresentation,
    inner_maps,
    is_normal_divisor,
    kernel_is_normal_check,
    normal_divisors,
    pullback,
    quotient,
    quotient_report,
)

from oracles import is_associative, normal_subloops_by_cosets

A3 = {0, 1, 2}


def sign_pullback(S3):
    flip = [Permutation([0, 1]), Permutation([1, 0])]
    fam = [flip[0] if g in A3 else flip[1] for g in range(6)]
    return Birepresentation(S3, fam, fam)


def test_inner_maps_of_a_group_are_conjugations_only(S3):
    maps = inner_maps(S3)
    assert all(p.is_identity() for p in maps.L_assoc.values())
    assert maps.M_plus[0].is_identity()
    rows = S3.rows
    # M+(g) = R(g)L(g)^-1 sends x to g^-1 x g
    inv = [r.index(0) for r in rows]
    for g in range(6):
        assert maps.M_plus[g].to_list() == [rows[rows[inv[g]][x]][g] for x in range(6)]


def test_inner_maps_nontrivial_on_chein_double(M):
    maps = inner_maps(M)
    assert maps.M_plus[0].is_identity()
    assert any(not p.is_identity() for p in maps.L_assoc.values())


def test_normal_divisor_basics(S3):
    assert is_normal_divisor(S3, {0})
    assert is_normal_divisor(S3, range(6))
    assert is_normal_divisor(S3, A3)
    assert not is_normal_divisor(S3, {0, 3})
    with pytest.raises(NotASubloop):
        is_normal_divisor(S3, {0, 1})


@pytest.mark.parametrize("name", ["Z4", "Z6", "S3", "Z2xZ2", "M_S3_2", "M_Z2xZ2_2", "M_Z3_2"])
def test_normal_divisors_match_coset_oracle(name):
    G = catalog.get(name)
    assert [sorted(N) for N in normal_divisors(G)] == normal_subloops_by_cosets(G.rows)


def test_chein_double_normal_divisors(M):
    found = [sorted(N) for N in normal_divisors(M)]
    assert found == [[0], [0, 1, 2], [0, 1, 2, 3, 4, 5], [0, 1, 2, 6, 7, 8],
                     [0, 1, 2, 9, 10, 11], list(range(12))]


def test_quotient_S3_by_A3(S3):
    qs = quotient(S3, A3)
    assert qs.cosets == ((0, 1, 2), (3, 4, 5))
    assert qs.quotient_table.rows == [[0, 1], [1, 0]]
    assert qs.unit_coset == 0


def test_trivial_quotients(M):
    qs = quotient(M, {0})
    assert qs.quotient_table.rows == M.rows
    assert quotient(M, range(12)).quotient_table.rows == [[0]]


def test_non_normal_subgroup_rejected(S3):
    with pytest.raises(QuotientError):
        quotient(S3, {0, 3})


@pytest.mark.parametrize("name", ["S3", "M_S3_2", "M_Z4_2", "Z6"])
def test_every_quotient_is_consistent(name):
    G = catalog.get(name)
    rows = G.rows
    for N in normal_divisors(G):
        qs = quotient(G, N)
        assert G.order % len(N) == 0
        assert qs.quotient_table.order * len(N) == G.order
        assert list(qs.cosets[qs.unit_coset]) == sorted(N)
        for g in range(G.order):
            assert {rows[g][k] for k in N} == {rows[k][g] for k in N}
        pr = qs.projection
        Q = qs.quotient_table.rows
        for g, h in product(range(G.order), repeat=2):
            assert pr[rows[g][h]] == Q[pr[g]][pr[h]]


def test_quotients_of_chein_double(M):
    orders = {len(N): classify(quotient(M, N).quotient_table) for N in normal_divisors(M)}
    assert orders[3].order == 4 and orders[3].is_group
    assert orders[6].order == 2
    # the order-4 quotient is associative, so M/{0,1,2} is the Klein group
    Q = quotient(M, A3).quotient_table.rows
    assert is_associative(Q) and all(Q[g][g] == 0 for g in range(4))


def test_kernel_is_normal_on_examples(S3, M):
    assert kernel_is_normal_check(regular_birepresentation(S3))
    assert kernel_is_normal_check(sign_pullback(S3))
    assert kernel_is_normal_check(trivial_birepresentation(M))
    for N in normal_divisors(M):
        qs = quotient(M, N)
        b = pullback(regular_birepresentation(qs.quotient_table), qs)
        assert kernel(b) == N
        assert kernel_is_normal_check(b)


def test_induced_birepresentation_of_sign_pullback(S3):
    b = sign_pullback(S3)
    qs, induced = induced_birepresentation(b)
    assert qs.quotient_table.rows == [[0, 1], [1, 0]]
    assert is_faithful(induced)
    for coset in qs.cosets:
        for g in coset:
            assert b.S[g] == induced.S[qs.projection[g]]
            assert b.T[g] == induced.T[qs.projection[g]]


def test_induced_from_trivial_is_on_order_one_loop(M):
    qs, induced = induced_birepresentation(trivial_birepresentation(M, degree=2))
    assert qs.quotient_table.order == 1
    assert is_faithful(induced)


def test_pullback_rejects_wrong_loop(S3):
    qs = quotient(S3, A3)
    with pytest.raises(ValueError):
        pullback(regular_birepresentation(catalog.cyclic(3)), qs)


def test_quotient_report(M):
    rep = quotient_report(M, [0, 1, 2])
    assert rep["divisor"] == [0, 1, 2]
    assert len(rep["cosets"]) == 4
    assert rep["faithful"] is True
