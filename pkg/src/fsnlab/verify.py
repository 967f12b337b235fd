"""Statement checkers for the structure theorem, its corollary and the lemma suites.

Every statement quantifies over conjugacy-class representatives; the
predicates involved are invariant under conjugation, so one representative
per class decides the whole class.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .classify import analysis, is_f_projector, is_minimal_non_f, is_schmidt_group
from .core import ElementTable, Group, Subgroup, p_part, prime_factors, quotient
from .errors import FsnError
from .formations import Formation, formation_pi
from .lattice import is_prime, normal_subgroups, primary_cyclic_subgroups, subgroup_lattice

__all__ = [
    "VERIFIED", "COUNTEREXAMPLE", "SKIPPED_IN_F", "SKIPPED_INSOLUBLE", "SKIPPED_FLAGS",
    "StatementVector", "VerificationReport", "LemmaOutcome", "CorpusReport",
    "check_statement1", "check_statement2", "check_statement3", "verify_theorem",
    "check_corollary1", "check_corollary2", "check_corollary3", "verify_corollary",
    "verify_lemma_inF", "lemma_checks", "verify_lemmas", "superradical_violation", "run_corpus",
]

VERIFIED = "VERIFIED"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
SKIPPED_IN_F = "SKIPPED_IN_F"
SKIPPED_INSOLUBLE = "SKIPPED_INSOLUBLE"
SKIPPED_FLAGS = "SKIPPED_FLAGS"


def _describe(H: Subgroup) -> dict:
    return {"order": H.order, "generators": [str(g) for g in H.generators]}


@dataclass
class StatementVector:
    s1: bool
    s2: bool
    s3: bool
    witnesses: dict = field(default_factory=dict)

    def as_tuple(self) -> tuple:
        return (self.s1, self.s2, self.s3)

    def consistent(self) -> bool:
        return self.s1 == self.s2 == self.s3

    def as_dict(self) -> dict:
        return {"s1": self.s1, "s2": self.s2, "s3": self.s3, "witnesses": self.witnesses}


@dataclass
class VerificationReport:
    group: str
    order: int
    formation: str
    flags: dict
    mode: str
    status: str
    statements: StatementVector | None = None
    lemmas: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "formation": self.formation,
            "flags": self.flags,
            "mode": self.mode,
            "status": self.status,
            "statements": self.statements.as_dict() if self.statements is not None else None,
            "lemmas": [l.as_dict() for l in self.lemmas],
            "notes": self.notes,
            "seconds": round(self.seconds, 4),
        }


# --------------------------------------------------------------------------
# statements


def _sn_or(F: Formation, G: Group, reps, alternative) -> tuple:
    A = analysis(F, G)
    lat = A.lattice
    sn = A.subnormal_classes()
    for H in reps:
        if lat.class_of[H.mask] in sn:
            continue
        if not alternative(A, H.mask):
            return False, _describe(H)
    return True, None


def _self_normalizing(A, h):
    return A.self_normalizing(h)


def _abnormal(A, h):
    return A.is_abnormal(h)


def _proper_reps(G: Group) -> list:
    return [c.representative for c in subgroup_lattice(G).classes if c.order < G.order]


def check_statement1(F: Formation, G: Group) -> tuple:
    """Every primary cyclic subgroup is self-normalizing or F-subnormal."""
    return _sn_or(F, G, primary_cyclic_subgroups(G), _self_normalizing)


def check_statement2(F: Formation, G: Group) -> tuple:
    """Every proper subgroup is self-normalizing or F-subnormal."""
    return _sn_or(F, G, _proper_reps(G), _self_normalizing)


def check_corollary1(F: Formation, G: Group) -> tuple:
    """Every primary cyclic subgroup is F-subnormal or F-abnormal."""
    return _sn_or(F, G, primary_cyclic_subgroups(G), _abnormal)


def check_corollary2(F: Formation, G: Group) -> tuple:
    """Every proper subgroup is F-subnormal or F-abnormal."""
    return _sn_or(F, G, _proper_reps(G), _abnormal)


def _decomposition(F: Formation, G: Group, projector: bool) -> tuple:
    t = G.table
    full = t.all_mask
    d = t.derived(full)
    if projector:
        from .formations import residual
        if residual(F, G).mask != d:
            return False, {"reason": "derived subgroup differs from the residual"}
    tried = []
    for p in prime_factors(G.order):
        P = t.sylow(full, p)
        size = ElementTable.size(P)
        idx = t.indices(P)
        orders = t.orders[idx]
        if int(orders.max()) != size:
            tried.append({"p": p, "reason": "Sylow subgroup not cyclic"})
            continue
        x = int(idx[int(orders.argmax())])
        if t.normalizer(P, full) != P:
            tried.append({"p": p, "reason": "Sylow subgroup not self-normalizing"})
            continue
        if d & P != 1 or t.join(d, P) != full:
            tried.append({"p": p, "reason": "not a complement to the derived subgroup"})
            continue
        kernel = t.join(d, t.cyclic(t.power(x, p)))
        if not F.contains_section(t, kernel, 1):
            tried.append({"p": p, "reason": "G'<x^p> outside the formation"})
            continue
        if projector and not is_f_projector(F, G, Subgroup(G, P)):
            tried.append({"p": p, "reason": "<x> is not a projector"})
            continue
        witness = {
            "p": p, "x": str(t.perm(x)), "order_x": size,
            "order_derived": ElementTable.size(d), "order_kernel": ElementTable.size(kernel),
        }
        _recheck(G, p, x, kernel, witness)
        return True, witness
    return False, {"tried": tried}


def _recheck(G: Group, p: int, x: int, kernel: int, witness: dict):
    """Re-derive the witness claims from ``x`` alone and log the stronger proof property."""
    t = G.table
    cyc = t.cyclic(x)
    if ElementTable.size(cyc) != p_part(G.order, p):
        raise FsnError("witness <x> is not a Sylow subgroup")
    if G.order // ElementTable.size(kernel) != p:
        raise FsnError("witness kernel does not have index p")
    if t.normalizer(cyc, t.all_mask) != cyc or not t.is_nilpotent(cyc):
        raise FsnError("witness <x> is not a Carter subgroup")
    snp = [H for H in primary_cyclic_subgroups(G)
           if H.mask & ~kernel == 0 and t.normalizer(H.mask, t.all_mask) == H.mask]
    witness["kernel_has_self_normalizing_primary_cyclic"] = bool(snp)


def check_statement3(F: Formation, G: Group) -> tuple:
    """``G = G' x| <x>`` with ``<x>`` a cyclic Sylow and Carter subgroup, ``G'<x^p>`` in F."""
    return _decomposition(F, G, projector=False)


def check_corollary3(F: Formation, G: Group) -> tuple:
    """As statement 3, with ``<x>`` an F-projector and ``G' = G^F``; false for G in F."""
    if F.contains_section(G.table, G.table.all_mask, 1):
        return False, {"reason": "group lies in the formation"}
    return _decomposition(F, G, projector=True)


# --------------------------------------------------------------------------
# gating and reports


_THEOREM_FLAGS = ("subgroup_closed", "saturated", "superradical", "contains_nilpotent")


def _gate(F: Formation, G: Group, needed) -> str | None:
    if not all(getattr(F.flags, f) for f in needed):
        return SKIPPED_FLAGS
    if not G.table.is_soluble(G.table.all_mask):
        return SKIPPED_INSOLUBLE
    return None


def superradical_violation(F: Formation, G: Group):
    """A pair ``(A, B)`` of F-subnormal F-subgroups with ``G = AB`` although ``G`` is not in F."""
    t = G.table
    if F.contains_section(t, t.all_mask, 1):
        return None
    A = analysis(F, G)
    lat = A.lattice
    sn = A.subnormal_classes()
    good = [m for m, cid in lat.class_of.items()
            if cid in sn and m != t.all_mask and F.contains_section(t, m, 1)]
    good.sort(key=lambda m: (-ElementTable.size(m), m))
    reps = {lat.classes[lat.class_of[m]].representative.mask for m in good}
    for a in good:
        if a not in reps:
            continue
        na = ElementTable.size(a)
        for b in good:
            if na * ElementTable.size(b) == G.order * ElementTable.size(a & b):
                return Subgroup(G, a), Subgroup(G, b)
    return None


def _report(F, G, mode, status, **kw) -> VerificationReport:
    return VerificationReport(G.name or f"order{G.order}", G.order, F.name, F.flags.as_dict(),
                              mode, status, **kw)


def _verify(F: Formation, G: Group, mode: str, checks) -> VerificationReport:
    start = time.perf_counter()
    status = _gate(F, G, _THEOREM_FLAGS)
    if status is None and F.contains_section(G.table, G.table.all_mask, 1):
        status = SKIPPED_IN_F
    if status is not None:
        return _report(F, G, mode, status, seconds=time.perf_counter() - start)
    (b1, w1), (b2, w2), (b3, w3) = (c(F, G) for c in checks)
    if b2 and not b1:
        raise FsnError("statement 2 holds while statement 1 fails; primary cyclic subgroups "
                       "are proper subgroups, so this is an internal inconsistency")
    vec = StatementVector(b1, b2, b3, {"s1": w1, "s2": w2, "s3": w3})
    notes = {}
    if vec.consistent():
        status = VERIFIED
    else:
        status = COUNTEREXAMPLE
        pair = superradical_violation(F, G)
        if pair is not None:
            notes["superradical_violation"] = {"A": _describe(pair[0]), "B": _describe(pair[1])}
    return _report(F, G, mode, status, statements=vec, notes=notes,
                   seconds=time.perf_counter() - start)


def verify_theorem(F: Formation, G: Group) -> VerificationReport:
    return _verify(F, G, "theorem", (check_statement1, check_statement2, check_statement3))


def verify_corollary(F: Formation, G: Group) -> VerificationReport:
    return _verify(F, G, "corollary", (check_corollary1, check_corollary2, check_corollary3))


# --------------------------------------------------------------------------
# lemma suites


@dataclass
class LemmaOutcome:
    name: str
    status: str  # HOLDS, VIOLATED or a SKIPPED_* status
    checked: int = 0
    violations: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "checked": self.checked,
                "violations": self.violations[:5]}


def _outcome(name, checked, violations) -> LemmaOutcome:
    return LemmaOutcome(name, "VIOLATED" if violations else "HOLDS", checked, violations)


def verify_lemma_inF(F: Formation, G: Group) -> bool:
    """Membership in F agrees with F-subnormality of all primary cyclic subgroups."""
    A = analysis(F, G)
    sn = A.subnormal_classes()
    lat = A.lattice
    all_sn = all(lat.class_of[H.mask] in sn for H in primary_cyclic_subgroups(G))
    return F.contains_section(G.table, G.table.all_mask, 1) == all_sn


def _chain_transitivity(F, G):
    A = analysis(F, G)
    lat = A.lattice
    sn = A.subnormal_classes()
    checked, bad = 0, []
    for cid in sorted(sn):
        h = lat.classes[cid].representative.mask
        for k in lat.subgroups_of(h):
            if A.chain(k, h) is None:
                continue
            checked += 1
            if lat.class_of[k] not in sn:
                bad.append(_describe(Subgroup(G, k)))
    return checked, bad


def _quotients(G):
    return [(N, quotient(G, N)) for N in normal_subgroups(G) if 1 < N.order < G.order]


def _quotient_lift(F, G):
    A = analysis(F, G)
    sn = A.subnormal_classes()
    checked, bad = 0, []
    for N, Q in _quotients(G):
        AQ = analysis(F, Q)
        snq = AQ.subnormal_classes()
        for cid in sorted(snq):
            K = Q.preimage(AQ.lattice.classes[cid].representative)
            checked += 1
            if A.lattice.class_of[K.mask] not in sn:
                bad.append({"N": N.order, "K": _describe(K)})
    return checked, bad


def _quotient_image(F, G):
    A = analysis(F, G)
    lat = A.lattice
    checked, bad = 0, []
    quots = _quotients(G)
    for cid in sorted(A.subnormal_classes()):
        H = lat.classes[cid].representative
        for N, Q in quots:
            checked += 1
            if not analysis(F, Q).is_subnormal(Q.project(H).mask):
                bad.append({"N": N.order, "H": _describe(H)})
    return checked, bad


def _residual_above(F, G):
    A = analysis(F, G)
    lat = A.lattice
    sn = A.subnormal_classes()
    r = A.residual_of(G.table.all_mask)
    checked, bad = 0, []
    for cid, c in enumerate(lat.classes):
        if r & ~c.representative.mask == 0:
            checked += 1
            if cid not in sn:
                bad.append(_describe(c.representative))
    return checked, bad


def _f_subgroups_inherit(F, G):
    A = analysis(F, G)
    lat = A.lattice
    sn = A.subnormal_classes()
    t = G.table
    checked, bad = 0, []
    for cid in sorted(sn):
        h = lat.classes[cid].representative.mask
        if not F.contains_section(t, h, 1):
            continue
        for k in lat.subgroups_of(h):
            checked += 1
            if lat.class_of[k] not in sn:
                bad.append(_describe(Subgroup(G, k)))
    return checked, bad


def _abnormal_overgroups(F, G):
    A = analysis(F, G)
    lat = A.lattice
    t = G.table
    full = t.all_mask
    checked, bad = 0, []
    for c in lat.classes:
        a = c.representative.mask
        if not A.is_abnormal(a):
            continue
        checked += 1
        if t.normalizer(a, full) != a:
            bad.append({"A": _describe(c.representative), "fails": "A = N_G(A)"})
        for b in lat.overgroups(a, proper=True):
            checked += 1
            if not A.is_abnormal(a, b):
                bad.append({"A": _describe(c.representative), "B": ElementTable.size(b),
                            "fails": "A abnormal in B"})
            if not A.is_abnormal(b):
                bad.append({"A": _describe(c.representative), "B": ElementTable.size(b),
                            "fails": "B abnormal in G"})
            if t.normalizer(b, full) != b:
                bad.append({"A": _describe(c.representative), "B": ElementTable.size(b),
                            "fails": "B = N_G(B)"})
    return checked, bad


def _projector_characterization(F, G):
    A = analysis(F, G)
    t = G.table
    checked, bad = 0, []
    for c in A.lattice.classes:
        H = c.representative
        lhs = is_f_projector(F, G, H)
        rhs = F.contains_section(t, H.mask, 1) and A.is_abnormal(H.mask)
        checked += 1
        if lhs != rhs:
            bad.append({"H": _describe(H), "projector": lhs, "in_F_and_abnormal": rhs})
    return checked, bad


def _minimal_non_f_types(F, G):
    lat = subgroup_lattice(G)
    pi_f = formation_pi(F, max(prime_factors(G.order), default=2))
    checked, bad = 0, []
    for c in lat.classes:
        H = c.representative
        if c.order == 1 or not is_minimal_non_f(F, H):
            continue
        checked += 1
        prime_type = is_prime(c.order) and c.order not in pi_f
        if not (prime_type or is_schmidt_group(H)):
            bad.append(_describe(H))
    return checked, bad


def _membership_by_primary_cyclic(F, G):
    return 1, ([] if verify_lemma_inF(F, G) else [{"group_order": G.order}])


# name, required flags, needs solubility, whether prime-order groups must lie in F, check
_LEMMAS = (
    ("chain_transitivity", (), False, False, _chain_transitivity),
    ("quotient_lift", (), False, False, _quotient_lift),
    ("quotient_image", (), False, False, _quotient_image),
    ("residual_above", ("subgroup_closed",), False, False, _residual_above),
    ("f_subgroups_inherit", ("subgroup_closed",), False, False, _f_subgroups_inherit),
    ("abnormal_overgroups", ("subgroup_closed",), False, True, _abnormal_overgroups),
    ("projector_characterization", (), True, False, _projector_characterization),
    ("minimal_non_f_types", ("subgroup_closed", "saturated"), True, False, _minimal_non_f_types),
    ("membership_by_primary_cyclic", ("subgroup_closed", "saturated", "contains_nilpotent"),
     True, False, _membership_by_primary_cyclic),
)

lemma_checks = tuple(name for name, *_ in _LEMMAS)


def verify_lemmas(F: Formation, G: Group, only=None) -> list:
    """Run every lemma suite applicable to ``F`` and ``G``."""
    out = []
    soluble = G.table.is_soluble(G.table.all_mask)
    for name, flags, need_soluble, need_primes, fn in _LEMMAS:
        if only is not None and name not in only:
            continue
        if not all(getattr(F.flags, f) for f in flags):
            out.append(LemmaOutcome(name, SKIPPED_FLAGS))
            continue
        if need_soluble and not soluble:
            out.append(LemmaOutcome(name, SKIPPED_INSOLUBLE))
            continue
        if need_primes:
            primes = prime_factors(G.order)
            if primes and not set(primes) <= formation_pi(F, max(primes)):
                out.append(LemmaOutcome(name, SKIPPED_FLAGS))
                continue
        out.append(_outcome(name, *fn(F, G)))
    return out


def _verify_lemma_report(F: Formation, G: Group) -> VerificationReport:
    start = time.perf_counter()
    outcomes = verify_lemmas(F, G)
    if any(o.status == "VIOLATED" for o in outcomes):
        status = COUNTEREXAMPLE
    elif any(o.status == "HOLDS" for o in outcomes):
        status = VERIFIED
    elif any(o.status == SKIPPED_INSOLUBLE for o in outcomes):
        status = SKIPPED_INSOLUBLE
    else:
        status = SKIPPED_FLAGS
    return _report(F, G, "lemmas", status, lemmas=outcomes, seconds=time.perf_counter() - start)


# --------------------------------------------------------------------------
# corpus sweeps


_MODES = {
    "theorem": (verify_theorem,),
    "corollary": (verify_corollary,),
    "lemmas": (_verify_lemma_report,),
    "all": (verify_theorem, verify_corollary, _verify_lemma_report),
}


@dataclass
class CorpusReport:
    formation: str
    mode: str
    reports: list
    errors: list

    @property
    def counts(self) -> dict:
        out = {}
        for r in self.reports:
            out[r.status] = out.get(r.status, 0) + 1
        return dict(sorted(out.items()))

    @property
    def counterexamples(self) -> list:
        return [r for r in self.reports if r.status == COUNTEREXAMPLE]

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexamples else 0

    def as_dict(self) -> dict:
        return {
            "formation": self.formation,
            "mode": self.mode,
            "counts": self.counts,
            "errors": self.errors,
            "reports": [r.as_dict() for r in self.reports],
        }


def run_corpus(corpus, F: Formation, mode: str = "theorem", jobs: int = 1) -> CorpusReport:
    """Verify every corpus entry; results keep corpus order whatever the worker count.

    Entries are Groups or zero-argument callables producing one; an entry that
    raises is reported in ``errors`` and the sweep continues.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {sorted(_MODES)}")
    checks = _MODES[mode]

    def work(item):
        pos, entry = item
        try:
            G = entry() if callable(entry) else entry
            return pos, [c(F, G) for c in checks], None
        except FsnError as exc:
            name = getattr(entry, "name", None) or f"entry {pos}"
            return pos, [], {"entry": name, "error": f"{type(exc).__name__}: {exc}"}

    items = list(enumerate(corpus))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, items))
    else:
        results = [work(i) for i in items]
    reports, errors = [], []
    for _, reps, err in sorted(results, key=lambda r: r[0]):
        reports.extend(reps)
        if err is not None:
            errors.append(err)
    return CorpusReport(F.name, mode, reports, errors)
