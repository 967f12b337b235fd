"""Acceptance criteria; each test prints one PASS/FAIL line.

Every comparison is exact (booleans, orders and counts); there are no
floating tolerances.  Runtime budgets are pinned below and checked.
"""

import time

from fsnlab import (
    METANILPOTENT, NILPOTENT, SUPERSOLUBLE, build_example_864, carter_subgroups, check_statement1,
    fitting_subgroup, is_f_abnormal, is_f_subnormal, residual, run_corpus, sylow_subgroup,
    verify_lemmas, verify_theorem,
)
from fsnlab.core import ElementTable
from fsnlab.corpus import _sl23
from fsnlab.example864 import proper_subgroups_of_sylow2_report
from fsnlab.groupgen import (
    ActionSpec, affine_group, alternating, cyclic, dihedral, direct_product, elementary_abelian,
    quaternion8, semidirect_product, symmetric,
)
from fsnlab.lattice import exhaustive_subgroups, subgroup_lattice
from fsnlab.verify import check_corollary1

from oracles import closure_elements, f_subnormal_by_chains

SWEEP_BUDGET = 600.0      # criteria 1, 2 and 4
EXAMPLE_BUDGET = 300.0    # criterion 3
FORMATIONS = (NILPOTENT, METANILPOTENT)


def _sweep(groups, mode):
    failures = {}
    for F in FORMATIONS:
        report = run_corpus(groups, F, mode)
        bad = [r.group for r in report.counterexamples] + [e["entry"] for e in report.errors]
        if bad:
            failures[F.name] = bad
    return failures


def _describe(failures):
    return "; ".join(f"{k}: {len(v)} counterexamples ({', '.join(v)})" for k, v in failures.items())


def test_criterion_1_theorem_sweep(corpus_groups, acceptance):
    start = time.perf_counter()
    failures = _sweep(corpus_groups, "theorem")
    seconds = time.perf_counter() - start
    ok = not failures and seconds <= SWEEP_BUDGET
    acceptance(1, ok, f"theorem sweep over {len(corpus_groups)} groups, F in N, NA, "
                      f"{seconds:.1f}s (budget {SWEEP_BUDGET:.0f}s)"
                      + (f"; {_describe(failures)}" if failures else "; zero counterexamples"))
    assert ok, failures


def test_criterion_2_corollary_sweep(corpus_groups, acceptance):
    start = time.perf_counter()
    failures = _sweep(corpus_groups, "corollary")
    seconds = time.perf_counter() - start
    ok = not failures and seconds <= SWEEP_BUDGET
    acceptance(2, ok, f"corollary sweep over {len(corpus_groups)} groups, F in N, NA, "
                      f"{seconds:.1f}s (budget {SWEEP_BUDGET:.0f}s)"
                      + (f"; {_describe(failures)}" if failures else "; zero counterexamples"))
    assert ok, failures


def test_criterion_3_example_864(acceptance):
    start = time.perf_counter()
    G = build_example_864()
    F = METANILPOTENT
    t = G.table
    r_na = residual(F, G)
    p2 = sylow_subgroup(G, 2)
    p3 = sylow_subgroup(G, 3)
    p3_orders = set(t.orders[t.indices(p3.mask)].tolist())
    sub2 = proper_subgroups_of_sylow2_report(G)
    checks = {
        "order 864": G.order == 864,
        "|G^NA| = 36": r_na.order == 36,
        "G^NA = F(G)": r_na == fitting_subgroup(G),
        "|G^N| = 108": residual(NILPOTENT, G).order == 108,
        "|G'| = 216": ElementTable.size(t.derived(t.all_mask)) == 216,
        "G3 elementary abelian of order 27": p3.order == 27 and t.is_abelian(p3.mask) and p3_orders <= {1, 3},
        "G3 NA-subnormal": is_f_subnormal(F, G, p3)[0],
        "G2 self-normalizing": t.normalizer(p2.mask, t.all_mask) == p2.mask,
        "G2 not NA-subnormal": not is_f_subnormal(F, G, p2)[0],
        "G2 not NA-abnormal": not is_f_abnormal(F, G, p2),
        "every proper subgroup of G2 NA-subnormal": sub2["not_subnormal"] == 0,
        "statement (1) true": check_statement1(F, G)[0],
        "corollary c1 false": not check_corollary1(F, G)[0],
    }
    seconds = time.perf_counter() - start
    failed = [k for k, v in checks.items() if not v]
    ok = not failed and seconds <= EXAMPLE_BUDGET
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks, {seconds:.1f}s (budget {EXAMPLE_BUDGET:.0f}s)"
    if failed:
        detail += f"; failed: {', '.join(failed)}"
        if "every proper subgroup of G2 NA-subnormal" in failed:
            detail += (f" ({sub2['not_subnormal']} of {sub2['proper_subgroups']} proper subgroups of G2 "
                       f"are not NA-subnormal, orders {sorted(set(sub2['failing_orders']))})")
    acceptance(3, ok, detail)
    assert ok, failed


def test_criterion_4_lemma_suites(corpus_specs, acceptance):
    groups = [s.build() for s in corpus_specs if s.expected_order <= 100]
    start = time.perf_counter()
    violations = {}
    checked = 0
    for F in (NILPOTENT, SUPERSOLUBLE, METANILPOTENT):
        for G in groups:
            for outcome in verify_lemmas(F, G):
                if outcome.status == "HOLDS":
                    checked += 1
                elif outcome.status == "VIOLATED":
                    violations.setdefault(f"{outcome.name}[{F.name}]", []).append(G.name)
    seconds = time.perf_counter() - start
    ok = not violations and seconds <= SWEEP_BUDGET
    detail = f"{len(groups)} groups of order <= 100, F in N, U, NA, {checked} suites held, {seconds:.1f}s"
    if violations:
        detail += "; violated: " + "; ".join(f"{k} on {', '.join(v)}" for k, v in sorted(violations.items()))
    acceptance(4, ok, detail)
    assert ok, violations


def test_criterion_5_oracle_equivalence(corpus_groups, acceptance):
    small = [G for G in corpus_groups if G.order <= 48]
    cases = disagreements = 0
    for G in small:
        lat = subgroup_lattice(G)
        for F in FORMATIONS:
            cache = {}
            for m in lat.all_masks():
                H = lat.subgroup(m)
                cases += 1
                if is_f_subnormal(F, G, H)[0] != f_subnormal_by_chains(F, G, H, cache):
                    disagreements += 1
    ok = disagreements == 0
    acceptance(5, ok, f"{cases} (G, H, F) cases over {len(small)} groups of order <= 48, "
                      f"{disagreements} disagreements")
    assert ok


def test_criterion_6_spot_checks(acceptance):
    s3 = symmetric(3)
    c7 = cyclic(7)
    c7c3 = semidirect_product(c7, cyclic(3), ActionSpec([[c7.generators[0] ** 2]]))
    r_sl = verify_theorem(NILPOTENT, _sl23())
    r_73 = verify_theorem(NILPOTENT, c7c3)
    carter = carter_subgroups(s3)
    checks = {
        "residual(N, S3) = A3": residual(NILPOTENT, s3) == s3.subgroup([s3.generators[0]]),
        "Carter(S3) one class of order 2": [c.order for c in carter] == [2],
        "SL(2,3) vector (F,F,F)": r_sl.statements.as_tuple() == (False, False, False),
        "C7:C3 vector (T,T,T)": r_73.statements.as_tuple() == (True, True, True),
        "C7:C3 witness p = 3": (r_73.statements.witnesses.get("s3") or {}).get("p") == 3,
    }
    failed = [k for k, v in checks.items() if not v]
    acceptance(6, not failed, f"{len(checks) - len(failed)}/{len(checks)} spot checks"
                              + (f"; failed: {', '.join(failed)}" if failed else ""))
    assert not failed


def _standard_constructions():
    return [
        cyclic(1), cyclic(12), cyclic(60), dihedral(2), dihedral(10), dihedral(50),
        symmetric(3), symmetric(4), symmetric(5), symmetric(6),
        alternating(4), alternating(5), alternating(6), alternating(7),
        elementary_abelian(2, 4), elementary_abelian(3, 3), elementary_abelian(5, 2), quaternion8(),
        direct_product(symmetric(3), symmetric(3), alternating(4)),
        direct_product(symmetric(4), symmetric(4)),
        direct_product(alternating(5), cyclic(7), cyclic(4)),
        affine_group(5, 2, [[[2, 0], [0, 1]], [[0, 1], [1, 0]]]),
        build_example_864(),
    ]


def test_criterion_7_engine_consistency(corpus_groups, acceptance):
    lattice_groups = [G for G in corpus_groups if G.order <= 64]
    lattice_bad = [G.name for G in lattice_groups
                   if subgroup_lattice(G).total_subgroups != len(exhaustive_subgroups(G))]
    standard = [G for G in _standard_constructions() if G.order <= 5000]
    order_bad = [G.name for G in standard if len(closure_elements(G.degree, G.generators)) != G.order]
    ok = not lattice_bad and not order_bad
    acceptance(7, ok, f"lattice counts on {len(lattice_groups)} groups of order <= 64, "
                      f"{len(lattice_bad)} mismatches; orders on {len(standard)} standard constructions, "
                      f"{len(order_bad)} mismatches")
    assert ok, (lattice_bad, order_bad)
