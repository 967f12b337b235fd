import json

from fsnlab import (
    METANILPOTENT, NILPOTENT, SUPERSOLUBLE, check_statement1, check_statement2,
    is_f_subnormal, run_corpus, subgroup_lattice, verify_corollary, verify_lemma_inF, verify_lemmas,
    verify_theorem,
)
from fsnlab.core import Subgroup
from fsnlab.corpus import _sl23
from fsnlab.errors import InputError
from fsnlab.groupgen import alternating, cyclic, symmetric
from fsnlab.verify import (
    COUNTEREXAMPLE, SKIPPED_FLAGS, SKIPPED_IN_F, SKIPPED_INSOLUBLE, VERIFIED, check_corollary1,
    check_corollary2, lemma_checks, superradical_violation,
)


def _brute_statement(F, G, masks, alternative):
    for m in masks:
        if is_f_subnormal(F, G, Subgroup(G, m))[0]:
            continue
        if not alternative(m):
            return False
    return True


def test_statements_match_elementwise_oracle(corpus_groups):
    """Statements 1 and 2 quantified over every subgroup rather than class representatives."""
    for G in [G for G in corpus_groups if G.order <= 24]:
        t = G.table
        lat = subgroup_lattice(G)
        proper = [m for m in lat.all_masks() if m != t.all_mask]
        primary = {t.cyclic(x) for x in range(t.n) if _is_prime_power(int(t.orders[x]))}
        self_norm = lambda m: t.normalizer(m, t.all_mask) == m
        for F in (NILPOTENT, METANILPOTENT):
            assert check_statement1(F, G)[0] == _brute_statement(F, G, primary, self_norm)
            assert check_statement2(F, G)[0] == _brute_statement(F, G, proper, self_norm)


def _is_prime_power(n):
    if n < 2:
        return False
    p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return n == 1


def test_s3_verified_with_witness():
    r = verify_theorem(NILPOTENT, symmetric(3))
    assert r.status == VERIFIED
    assert r.statements.as_tuple() == (True, True, True)
    w = r.statements.witnesses["s3"]
    assert w["p"] == 2 and w["order_derived"] == 3 and w["order_kernel"] == 3


def test_sl23_all_false():
    r = verify_theorem(NILPOTENT, _sl23())
    assert r.status == VERIFIED and r.statements.as_tuple() == (False, False, False)
    assert r.statements.witnesses["s1"]["order"] in (3, 4)


def test_a4_corollary():
    r = verify_corollary(NILPOTENT, alternating(4))
    assert r.status == VERIFIED and r.statements.as_tuple() == (True, True, True)


def test_gating():
    assert verify_theorem(NILPOTENT, cyclic(6)).status == SKIPPED_IN_F
    assert verify_theorem(NILPOTENT, alternating(5)).status == SKIPPED_INSOLUBLE
    assert verify_theorem(SUPERSOLUBLE, symmetric(4)).status == SKIPPED_FLAGS
    assert verify_corollary(SUPERSOLUBLE, symmetric(4)).status == SKIPPED_FLAGS


def test_metanilpotent_counterexample_on_s4():
    """S4 = A4 * D8 with both factors NA-subnormal NA-subgroups, yet S4 is not in NA."""
    S4 = symmetric(4)
    r = verify_theorem(METANILPOTENT, S4)
    assert r.status == COUNTEREXAMPLE
    assert r.statements.as_tuple() == (True, True, False)
    A, B = superradical_violation(METANILPOTENT, S4)
    assert {A.order, B.order} == {12, 8}
    assert "superradical_violation" in r.notes
    assert superradical_violation(NILPOTENT, S4) is None
    assert check_corollary1(METANILPOTENT, S4)[0] and check_corollary2(METANILPOTENT, S4)[0]


def test_report_serializes():
    r = verify_theorem(METANILPOTENT, symmetric(4))
    doc = json.loads(json.dumps(r.as_dict()))
    assert doc["status"] == COUNTEREXAMPLE and doc["statements"]["s3"] is False


def test_lemmas_hold_for_nilpotent(corpus_groups):
    for G in [G for G in corpus_groups if G.order <= 24]:
        for o in verify_lemmas(NILPOTENT, G):
            assert o.status == "HOLDS", (G.name, o.name, o.violations[:2])
        assert verify_lemma_inF(NILPOTENT, G)


def test_lemma_violations_for_metanilpotent():
    S4 = symmetric(4)
    bad = {o.name for o in verify_lemmas(METANILPOTENT, S4) if o.status == "VIOLATED"}
    assert bad == {"minimal_non_f_types", "membership_by_primary_cyclic"}
    assert not verify_lemma_inF(METANILPOTENT, S4)


def test_lemma_gating():
    out = {o.name: o.status for o in verify_lemmas(SUPERSOLUBLE, symmetric(4))}
    assert set(out) == set(lemma_checks)
    assert out["membership_by_primary_cyclic"] == "HOLDS"
    out = {o.name: o.status for o in verify_lemmas(NILPOTENT, alternating(5), only={"projector_characterization"})}
    assert out == {"projector_characterization": SKIPPED_INSOLUBLE}


def test_run_corpus_order_and_errors(corpus_groups):
    groups = corpus_groups[:30]

    def broken():
        raise InputError("bad entry")
    broken.name = "broken"
    serial = run_corpus(groups + [broken], METANILPOTENT, "all")
    parallel = run_corpus(groups + [broken], METANILPOTENT, "all", jobs=4)
    key = lambda rep: [(r.group, r.mode, r.status) for r in rep.reports]
    assert key(serial) == key(parallel)
    assert serial.errors == [{"entry": "broken", "error": "InputError: bad entry"}]
    assert serial.exit_code == 0
    assert run_corpus(groups + [symmetric(4)], METANILPOTENT, "theorem").exit_code == 1
    assert run_corpus(groups + [symmetric(4)], NILPOTENT, "theorem").exit_code == 0
