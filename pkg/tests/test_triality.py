from itertools import product

import pytest

from moufang import catalog
from moufang.birep import (
    SUBSTITUTIONS,
    TRIALITY_PAIRS,
    Birepresentation,
    all_ok,
    compose_substitutions,
    regular_triple,
    run_all_checks,
    triality_pair_reports,
    triality_pairs,
    triality_substitute,
    validate,
)
from moufang.errors import RelationViolation
from moufang.perms import inverse_perm

NAMES = list(SUBSTITUTIONS)


def verdicts(t):
    return {sec: [r.ok for r in reps] for sec, reps in run_all_checks(t).items()}


def test_six_pairs_validate_on_chein_double(triple_M):
    reports = triality_pair_reports(triple_M)
    assert list(reports) == list(TRIALITY_PAIRS)
    for name, reps in reports.items():
        assert all_ok(reps), name
        assert all(r.checked == 144 for r in reps[1:])
    pairs = triality_pairs(triple_M)
    assert pairs["(T,P)"].S == triple_M.T and pairs["(T,P)"].T == triple_M.P


def test_inverted_quadratic_pair_is_not_a_birep(triple_M):
    P_inv = triple_M.P_inv
    assert not all_ok(validate(triple_M.loop, P_inv, P_inv)[:3])
    with pytest.raises(RelationViolation):
        Birepresentation(triple_M.loop, P_inv, P_inv)


def test_rho_rotates_families(triple_M):
    r = triality_substitute(triple_M, "rho")
    assert r.S == triple_M.T and r.T == triple_M.P and r.P == triple_M.S


def test_tau_inverts_and_swaps(triple_M):
    t = triality_substitute(triple_M, "tau")
    assert t.S == tuple(inverse_perm(p) for p in triple_M.T)
    assert t.T == tuple(inverse_perm(p) for p in triple_M.S)
    assert triality_substitute(t, "tau") == triple_M


def test_composition_table_on_concrete_triples(triple_M):
    subs = {name: triality_substitute(triple_M, name) for name in NAMES}
    checked = 0
    for a, b in product(NAMES, repeat=2):
        c = compose_substitutions(a, b)
        assert triality_substitute(subs[a], b) == subs[c], (a, b, c)
        checked += 1
    assert checked == 36


def test_substitutions_form_nonabelian_group_of_order_six():
    assert len(set(SUBSTITUTIONS.values())) == 6
    assert all(compose_substitutions("1", a) == a == compose_substitutions(a, "1") for a in NAMES)
    for a in NAMES:
        assert any(compose_substitutions(a, b) == "1" for b in NAMES)
    assert compose_substitutions("rho", "rho") == "rho2"
    assert compose_substitutions("rho", "rho2") == "1"
    assert compose_substitutions("tau", "tau") == "1"
    assert compose_substitutions("rho", "tau") == "rho.tau"
    assert compose_substitutions("tau", "rho") != compose_substitutions("rho", "tau")


@pytest.mark.parametrize("name", ["Z1", "Z4", "S3", "M_S3_2"])
def test_checker_verdicts_invariant_under_substitution(name):
    t = regular_triple(catalog.get(name))
    base = verdicts(t)
    assert all(all(v) for v in base.values())
    for sub in NAMES:
        assert verdicts(triality_substitute(t, sub)) == base, sub


def test_order_one_loop():
    t = regular_triple(catalog.cyclic(1))
    for sub in NAMES:
        s = triality_substitute(t, sub)
        assert all(p.is_identity() for fam in s.families() for p in fam)
    assert all(all_ok(r) for r in triality_pair_reports(t).values())
