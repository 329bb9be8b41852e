"""Mechanical checks of the graph hierarchy and of the equality criteria.

Each ``check_*`` function computes both sides of an inclusion or an
equivalence independently (a graph built pairwise against a structural
property of the group) and returns a :class:`CheckResult`.  A failing
result always carries a witness.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import core
from .core import (COMMUTATOR_CONVENTION, CayleyGroup, Subgroup, center, closure,
                   commutator, cyclic_subgroup, derived_subgroup, has_cyclic_sylows,
                   is_2_generated, is_abelian, is_dedekind, is_eppo, is_p_group, is_simple,
                   materialize, nilpotency_class, pair_closure, prime_power, sylow_subgroups)
from .errors import GroupGraphsError, NotAPGroup, NotAWitness, OrderLimitExceeded
from .families import TypeBParams, type_b_params
from .graphs import (LIGHT_CAP, GraphKind, build_graph, edge_count, edge_difference,
                     graphs_equal, is_spanning_subgraph)

SUITE_VERSION = "1.0"
CHECKS = ("hierarchy", "thm2", "thm3", "epow", "pow", "dedekind", "ngen", "dnorm", "identities")
STRUCTURE_CAP = 512
SNNC_SEARCH_CAP = 1024


class ClassificationConflict(GroupGraphsError):
    """A group matched two different rows of the type-B list."""


class WitnessKind(enum.Enum):
    SNORM_NOT_COM = "snorm_not_com"
    GENERATING_ADJACENT = "generating_adjacent"


@dataclass(frozen=True)
class WitnessPair:
    x: int
    y: int
    kind: WitnessKind

    def describe(self, G: CayleyGroup) -> dict:
        return {"kind": self.kind.value, "x": self.x, "y": self.y,
                "x_label": G.labels[self.x], "y_label": G.labels[self.y]}


def _power_map(G: CayleyGroup, k: int) -> np.ndarray:
    """x -> x^k for every element at once."""
    out = np.full(G.order, G.identity, dtype=np.int64)
    base = np.arange(G.order)
    while k:
        if k & 1:
            out = G.mul[out, base]
        base = G.mul[base, base]
        k >>= 1
    return out


def _snorm_adjacent(G: CayleyGroup, x: int, y: int) -> bool:
    nm = G.cyclic_normalisers
    return bool(nm[x, y] and nm[y, x])


# ---------------------------------------------------------------------------
# witness pairs


def snorm_witness_pairs(G: CayleyGroup, max_order: int | None = None) -> list[WitnessPair]:
    """All unordered pairs with xy != yx, x in N(<y>) and y in N(<x>)."""
    cap = LIGHT_CAP if max_order is None else max_order
    if G.order > cap:
        raise OrderLimitExceeded(G.order, cap, "witness search")
    nm = G.cyclic_normalisers
    mask = np.triu(nm & nm.T & (G.mul != G.mul.T), 1)
    return [WitnessPair(int(x), int(y), WitnessKind.SNORM_NOT_COM) for x, y in np.argwhere(mask)]


@dataclass(frozen=True)
class WitnessFacts:
    """Structure of H = <x, y> for a witness pair."""

    subgroup_order: int
    derived_order: int
    derived_central: bool
    derived_cyclic_by_commutator: bool
    commutator_commutes: bool
    power_identities: bool
    p_group: bool


def verify_witness_subgroup(G: CayleyGroup, w: WitnessPair) -> WitnessFacts:
    """Check the facts every witness pair satisfies.

    For c = [x, y]: c commutes with x and y, [x^m, y] = c^m = [x, y^m] for
    1 <= m <= |x|, and H' = <c> lies in Z(H) where H = <x, y>.  Raises
    AssertionError if one of them fails.
    """
    x, y = w.x, w.y
    if G.mul[x, y] == G.mul[y, x] or not _snorm_adjacent(G, x, y):
        raise NotAWitness(f"({G.labels[x]}, {G.labels[y]}) is not a non-commuting SNORM pair")
    c = commutator(G, x, y)
    commutes = bool(G.mul[c, x] == G.mul[x, c] and G.mul[c, y] == G.mul[y, c])
    powers_ok = all(
        commutator(G, G.power(x, m), y) == G.power(c, m) == commutator(G, x, G.power(y, m))
        for m in range(1, int(G.orders[x]) + 1)
    )
    H = closure(G, (x, y))
    D = derived_subgroup(G, H)
    facts = WitnessFacts(
        subgroup_order=H.order,
        derived_order=D.order,
        derived_central=D.issubset(center(G, H)),
        derived_cyclic_by_commutator=D == cyclic_subgroup(G, c),
        commutator_commutes=commutes,
        power_identities=powers_ok,
        p_group=is_p_group(G, H),
    )
    assert facts.commutator_commutes, "[x,y] does not commute with x and y"
    assert facts.power_identities, "[x^m,y] = [x,y]^m = [x,y^m] fails"
    assert facts.derived_central and facts.derived_cyclic_by_commutator
    return facts


# ---------------------------------------------------------------------------
# type-B and SNNC recognition


def _require_p_group(P: CayleyGroup) -> tuple[int, int]:
    pk = prime_power(P.order)
    if pk is None:
        raise NotAPGroup(f"{P.name} has order {P.order}, not a prime power")
    return pk


def is_type_b(P: CayleyGroup) -> bool:
    """Non-abelian p-group, 2-generated, with derived subgroup of order p."""
    if P.order > STRUCTURE_CAP:
        raise OrderLimitExceeded(P.order, STRUCTURE_CAP, "type-B test")
    pk = prime_power(P.order)
    if pk is None or is_abelian(P):
        return False
    return derived_subgroup(P).order == pk[0] and is_2_generated(P)


def _is_q8(P: CayleyGroup) -> bool:
    return P.order == 8 and int((P.orders == 2).sum()) == 1 and not is_abelian(P)


def snnc_generators(P: CayleyGroup) -> tuple[int, int, int, int] | None:
    """A generating pair (a, b) satisfying the SNNC relations, with (alpha, beta).

    Relations: b^(p^beta) = [a,b]^p = [a,b,a] = [a,b,b] = 1 and
    a^(p^alpha) = [a,b], with alpha + 1 = log_p |a| and beta = log_p |b|.
    """
    p, n = _require_p_group(P)
    e = P.identity
    comm = P.commutator_table
    for a in range(P.order):
        ka = prime_power(int(P.orders[a]))
        if ka is None:
            continue
        alpha = ka[1] - 1
        beta = n - 1 - alpha
        if not alpha >= beta >= 1 or (p == 2 and alpha == beta == 1):
            continue
        target = P.power(a, p ** alpha)
        b_cand = np.flatnonzero((P.orders == p ** beta) & (comm[a] == target))
        for b in b_cand:
            b = int(b)
            if comm[target, b] != e:
                continue
            if pair_closure(P, a, b).order == P.order:
                return a, b, alpha, beta
    return None


def is_snnc(P: CayleyGroup) -> bool:
    """P is isomorphic to Q8 or to the SNNC presentation for its order."""
    if P.order > STRUCTURE_CAP:
        raise OrderLimitExceeded(P.order, STRUCTURE_CAP, "SNNC test")
    _require_p_group(P)
    if _is_q8(P):
        return True
    return snnc_generators(P) is not None


def classify_type_b(P: CayleyGroup) -> TypeBParams | None:
    """Row of the type-B list matching P, or None if P is not of type B.

    Every generating pair (a, b) with c = [a, b] central of order p is
    tested against every listed tuple: a^(p^alpha) = c^(p^rho) and
    b^(p^beta) = c^(p^sigma).  Matches from two different rows raise
    ClassificationConflict.
    """
    if P.order > STRUCTURE_CAP:
        raise OrderLimitExceeded(P.order, STRUCTURE_CAP, "type-B classification")
    p, n = _require_p_group(P)
    if not is_type_b(P):
        return None
    e = P.identity
    comm = P.commutator_table
    rows = type_b_params(p, n)
    pmap: dict[int, np.ndarray] = {}

    def pw(k):
        if k not in pmap:
            pmap[k] = _power_map(P, k)
        return pmap[k]

    cp = pw(p)
    matched: dict[str, TypeBParams] = {}
    for a in range(P.order):
        c = comm[a]
        ok = (c != e) & (cp[c] == e) & (comm[c, a] == e) & (comm[c, np.arange(P.order)] == e)
        if not ok.any():
            continue
        for row in rows:
            if row.case_tag in matched:
                continue
            ca = c if row.rho == 0 else pw(p)[c]
            cb = c if row.sigma == 0 else pw(p)[c]
            hit = ok & (pw(p ** row.alpha)[a] == ca) & (pw(p ** row.beta) == cb)
            for b in np.flatnonzero(hit):
                if pair_closure(P, a, int(b)).order == P.order:
                    matched[row.case_tag] = row
                    break
    if len(matched) > 1:
        raise ClassificationConflict(f"{P.name} matches rows {sorted(matched)}")
    if not matched:
        raise ClassificationConflict(f"{P.name} is type B but matches no listed row")
    return next(iter(matched.values()))


def find_generating_adjacent_pair(P: CayleyGroup) -> WitnessPair | None:
    """A pair generating P and adjacent in SNORM(P), or None."""
    if P.order > STRUCTURE_CAP:
        raise OrderLimitExceeded(P.order, STRUCTURE_CAP, "generating pair search")
    nm = P.cyclic_normalisers
    adj = nm & nm.T
    reps = P.cyclic_reps
    for i, x in enumerate(reps):
        for y in reps[i:]:
            if adj[x, y] and pair_closure(P, int(x), int(y)).order == P.order:
                return WitnessPair(int(x), int(y), WitnessKind.GENERATING_ADJACENT)
    return None


def has_snnc_subgroup(G: CayleyGroup) -> Subgroup | None:
    """Some subgroup isomorphic to an SNNC group, or None.

    SNNC groups are 2-generated, so scanning the subgroups <x, y> is
    exhaustive.
    """
    if G.order > SNNC_SEARCH_CAP:
        raise OrderLimitExceeded(G.order, SNNC_SEARCH_CAP, "SNNC subgroup search")
    reps = G.cyclic_reps
    seen = set()
    for i, x in enumerate(reps):
        for y in reps[i + 1:]:
            H = pair_closure(G, int(x), int(y))
            if H.key in seen:
                continue
            seen.add(H.key)
            if H.order < 8 or prime_power(H.order) is None or is_abelian(G, H):
                continue
            if is_snnc(materialize(H)):
                return H
    return None


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckResult:
    group: str
    check: str
    passed: bool
    lhs: str
    rhs: str
    detail: dict = field(default_factory=dict)
    witness: dict | None = None
    ms: float = 0.0
    error: str | None = None

    def to_dict(self, timings: bool = False) -> dict:
        out = {"group": self.group, "check": self.check, "pass": self.passed,
               "lhs": self.lhs, "rhs": self.rhs}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        if self.error is not None:
            out["error"] = self.error
        out["ms"] = round(self.ms, 3) if timings else 0
        return out


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def errors(self) -> list[CheckResult]:
        return [r for r in self.results if r.error is not None]

    def to_json(self, timings: bool = False) -> str:
        doc = {"suite_version": SUITE_VERSION, "convention": COMMUTATOR_CONVENTION,
               "results": [r.to_dict(timings) for r in self.results], "pass": self.passed}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"

    def summary_lines(self) -> list[str]:
        return [f"{'PASS' if r.passed else 'FAIL'}  {r.group:<14} {r.check:<11} "
                f"{r.lhs} <=> {r.rhs}" + (f"  [{r.error}]" if r.error else "")
                for r in self.results]


def _edge_witness(G: CayleyGroup, edges, kind: str) -> dict | None:
    if not edges:
        return None
    x, y = edges[0]
    return {"kind": kind, "x": x, "y": y, "x_label": G.labels[x], "y_label": G.labels[y]}


def _subgroup_witness(G: CayleyGroup, H: Subgroup, kind: str) -> dict:
    return {"kind": kind, "order": H.order, "elements": [G.labels[i] for i in H]}


def _equivalence(G, check, lhs, rhs, lhs_val, rhs_val, detail, witness) -> CheckResult:
    res = CheckResult(G.name, check, lhs_val == rhs_val, lhs, rhs,
                      {"lhs": lhs_val, "rhs": rhs_val, **detail}, witness)
    if not res.passed and res.witness is None:
        res.witness = {"kind": "disagreement", "lhs": lhs_val, "rhs": rhs_val}
    return res


# ---------------------------------------------------------------------------
# checks


def check_hierarchy(G: CayleyGroup) -> CheckResult:
    """POW <= EPOW <= COM <= SNORM <= NILP, SNORM <= ENGEL and, when G is
    non-abelian simple or not 2-generated, SNORM <= NGEN."""
    g = {k: build_graph(k, G) for k in GraphKind if k is not GraphKind.DNORM}
    chain = [("pow", "epow"), ("epow", "com"), ("com", "snorm"), ("snorm", "nilp"),
             ("snorm", "engel")]
    simple = is_simple(G) and not is_abelian(G)
    two_gen = is_2_generated(G)
    if simple or not two_gen:
        chain.append(("snorm", "ngen"))
    detail = {"inclusions": {}, "nonabelian_simple": simple, "two_generated": two_gen}
    witness = None
    for a, b in chain:
        A, B = g[GraphKind(a)], g[GraphKind(b)]
        ok = is_spanning_subgraph(A, B)
        detail["inclusions"][f"{a}<={b}"] = ok
        if not ok and witness is None:
            witness = _edge_witness(G, edge_difference(A, B), f"{a}_edge_not_in_{b}")
    info = {}
    for a, b in (("nilp", "engel"), ("snorm", "ngen")):
        A, B = g[GraphKind(a)], g[GraphKind(b)]
        info[f"{a}<={b}"] = is_spanning_subgraph(A, B)
    detail["informational"] = info
    detail["edges"] = {k.value: edge_count(A) for k, A in g.items()}
    passed = all(detail["inclusions"].values())
    return CheckResult(G.name, "hierarchy", passed, "graph inclusions",
                       "hierarchy chain", detail, witness)


def check_theorem2(G: CayleyGroup) -> CheckResult:
    """COM = SNORM iff G has no SNNC subgroup."""
    com, snorm = build_graph("com", G), build_graph("snorm", G)
    equal = graphs_equal(com, snorm)
    H = has_snnc_subgroup(G)
    witness = None
    if not equal:
        witness = _edge_witness(G, edge_difference(snorm, com), "snorm_not_com")
    if H is not None:
        witness = {**(witness or {}), "snnc_subgroup": _subgroup_witness(G, H, "snnc")}
    return _equivalence(G, "thm2", "Com == SNorm", "no SNNC subgroup",
                        equal, H is None, {}, witness)


def check_theorem3(G: CayleyGroup) -> CheckResult:
    """SNORM = NILP iff every Sylow subgroup is Dedekind."""
    equal = graphs_equal(build_graph("snorm", G), build_graph("nilp", G))
    sylows = sylow_subgroups(G)
    flags = {str(p): is_dedekind(G, P) for p, P in sylows.items()}
    witness = None
    bad = [p for p, ok in flags.items() if not ok]
    if bad:
        witness = _subgroup_witness(G, sylows[int(bad[0])], f"non_dedekind_sylow_{bad[0]}")
    return _equivalence(G, "thm3", "SNorm == Nilp", "all Sylow subgroups Dedekind",
                        equal, all(flags.values()), {"sylow_dedekind": flags}, witness)


def check_epow_equality(G: CayleyGroup) -> CheckResult:
    """EPOW = SNORM iff all Sylow subgroups are cyclic."""
    epow, snorm = build_graph("epow", G), build_graph("snorm", G)
    equal = graphs_equal(epow, snorm)
    cyc = has_cyclic_sylows(G)
    witness = None if equal else _edge_witness(G, edge_difference(snorm, epow), "snorm_not_epow")
    return _equivalence(G, "epow", "EPow == SNorm", "cyclic Sylow subgroups",
                        equal, cyc, {}, witness)


def check_pow_equality(G: CayleyGroup) -> CheckResult:
    """POW = SNORM iff G is EPPO with cyclic Sylow subgroups."""
    pow_, snorm = build_graph("pow", G), build_graph("snorm", G)
    equal = graphs_equal(pow_, snorm)
    eppo, cyc = is_eppo(G), has_cyclic_sylows(G)
    witness = None if equal else _edge_witness(G, edge_difference(snorm, pow_), "snorm_not_pow")
    return _equivalence(G, "pow", "Pow == SNorm", "EPPO and cyclic Sylow subgroups",
                        equal, eppo and cyc, {"eppo": eppo, "cyclic_sylows": cyc}, witness)


def check_dedekind_complete(G: CayleyGroup) -> CheckResult:
    """SNORM is complete iff G is Dedekind."""
    snorm = build_graph("snorm", G)
    complete = snorm.is_complete()
    ded = is_dedekind(G)
    witness = None
    if not complete:
        missing = np.argwhere(np.triu(~snorm.adjacency, 1))
        witness = _edge_witness(G, [tuple(int(v) for v in missing[0])], "snorm_non_edge")
    return _equivalence(G, "dedekind", "SNorm complete", "Dedekind", complete, ded, {}, witness)


def check_ngen_equality(G: CayleyGroup) -> CheckResult | None:
    """For G not 2-generated: SNORM = NGEN iff G is Dedekind.  None otherwise."""
    if is_2_generated(G):
        return None
    snorm, ngen = build_graph("snorm", G), build_graph("ngen", G)
    equal = graphs_equal(snorm, ngen)
    witness = None if equal else _edge_witness(G, edge_difference(ngen, snorm), "ngen_not_snorm")
    return _equivalence(G, "ngen", "SNorm == NGen", "Dedekind", equal, is_dedekind(G),
                        {"ngen_complete": ngen.is_complete()}, witness)


def check_dnorm_consistency(G: CayleyGroup) -> CheckResult:
    """x ~ y in SNORM iff x -> y and y -> x in the directed normalising graph."""
    snorm = build_graph("snorm", G).adjacency
    d = build_graph("dnorm", G).adjacency
    both = d & d.T
    diff = np.argwhere(snorm != both)
    witness = _edge_witness(G, [tuple(int(v) for v in diff[0])], "mismatch") if diff.size else None
    return CheckResult(G.name, "dnorm", diff.size == 0, "SNorm edge",
                       "both directed edges", {"mismatches": int(diff.shape[0])}, witness)


def commutator_identity_failures(G: CayleyGroup, samples: int = 1000, seed: int = 0) -> dict:
    """Count failures of the expansion identities for commutators on random triples.

    With [x,y] = x^-1 y^-1 x y and g^z = z^-1 g z:
        [x, yz] = [x, z] [x, y]^z        [xz, y] = [x, y]^z [z, y]
    and with the other convention [x,y]' = x y x^-1 y^-1, g^y = y g y^-1:
        [x, yz]' = [x, y]' [x, z]'^y     [xz, y]' = [z, y]'^x [x, y]'
    """
    m, iv = G.mul, G.inv
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, G.order, size=(3, samples))
    c = G.commutator_table

    def conj(g, h):          # h^-1 g h
        return m[m[iv[h], g], h]

    def cp(a, b):            # a b a^-1 b^-1
        return m[m[a, b], m[iv[a], iv[b]]]

    yz, xz = m[y, z], m[x, z]
    fails = {
        "expand_right": int((c[x, yz] != m[c[x, z], conj(c[x, y], z)]).sum()),
        "expand_left": int((c[xz, y] != m[conj(c[x, y], z), c[z, y]]).sum()),
        "expand_right_alt": int((cp(x, yz) != m[cp(x, y), conj(cp(x, z), iv[y])]).sum()),
        "expand_left_alt": int((cp(xz, y) != m[conj(cp(z, y), iv[x]), cp(x, y)]).sum()),
    }
    return fails


def class_two_power_failures(G: CayleyGroup) -> int:
    """Failures of (ab)^i = [b,a]^(i(i-1)/2) a^i b^i over all a, b and 1 <= i <= exp(G)."""
    m = G.mul
    n = G.order
    a = np.repeat(np.arange(n), n)
    b = np.tile(np.arange(n), n)
    ab = m[a, b]
    c = G.commutator_table[b, a]
    lhs, ai, bi = ab.copy(), a.copy(), b.copy()
    ci = c.copy()                                    # c^i
    tri = np.full(n * n, G.identity)                 # c^(i(i-1)/2)
    fails = 0
    for i in range(1, core.exponent(G) + 1):
        fails += int((lhs != m[m[tri, ai], bi]).sum())
        lhs, ai, bi = m[lhs, ab], m[ai, a], m[bi, b]
        tri = m[tri, ci]
        ci = m[ci, c]
    return fails


def check_identities(G: CayleyGroup, samples: int = 1000, seed: int = 0,
                     exhaustive_limit: int = 128) -> CheckResult:
    """Commutator expansion identities on random triples, and the class-2
    power identity exhaustively when G has class at most 2 and small order."""
    fails = commutator_identity_failures(G, samples, seed)
    cls = nilpotency_class(G)
    detail = {"samples": samples, "seed": seed, "failures": fails, "nilpotency_class": cls}
    if cls is not None and cls <= 2 and G.order <= exhaustive_limit:
        detail["class_two_power_failures"] = class_two_power_failures(G)
    total = sum(fails.values()) + detail.get("class_two_power_failures", 0)
    witness = None if total == 0 else {"kind": "identity_failures", **fails}
    return CheckResult(G.name, "identities", total == 0, "commutator identities",
                       "hold", detail, witness)


CHECK_FUNCTIONS = {
    "hierarchy": check_hierarchy,
    "thm2": check_theorem2,
    "thm3": check_theorem3,
    "epow": check_epow_equality,
    "pow": check_pow_equality,
    "dedekind": check_dedekind_complete,
    "ngen": check_ngen_equality,
    "dnorm": check_dnorm_consistency,
    "identities": check_identities,
}


def resolve_checks(checks) -> list[str]:
    """Normalize a check selection; ``"all"`` expands to every check."""
    if checks is None or checks == "all":
        return list(CHECKS)
    if isinstance(checks, str):
        checks = checks.split(",")
    names = [c.strip() for c in checks if c.strip()]
    if "all" in names:
        return list(CHECKS)
    unknown = [c for c in names if c not in CHECK_FUNCTIONS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [c for c in CHECKS if c in names]


def run_group_checks(spec, checks, max_order: int | None = None) -> list[CheckResult]:
    """Construct one catalog group and run the applicable checks on it."""
    from .groupspec import make_family

    label = str(spec)
    t0 = time.perf_counter()
    try:
        G = make_family(spec, max_order=max_order)
    except GroupGraphsError as exc:
        return [CheckResult(label, "construct", False, "construction", "ok",
                            witness={"kind": "error"}, error=f"{type(exc).__name__}: {exc}",
                            ms=(time.perf_counter() - t0) * 1e3)]
    out = []
    for name in checks:
        t0 = time.perf_counter()
        try:
            res = CHECK_FUNCTIONS[name](G)
        except GroupGraphsError as exc:
            res = CheckResult(G.name, name, False, "-", "-", witness={"kind": "error"},
                              error=f"{type(exc).__name__}: {exc}")
        if res is None:
            continue
        res.ms = (time.perf_counter() - t0) * 1e3
        out.append(res)
    return out


def run_suite(catalog, checks="all", threads: int = 1,
              max_order: int | None = None) -> VerificationReport:
    """Run ``checks`` over every group of ``catalog``; results keep catalog order."""
    names = resolve_checks(checks)
    jobs = list(catalog)
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: run_group_checks(s, names, max_order), jobs))
    else:
        parts = [run_group_checks(s, names, max_order) for s in jobs]
    return VerificationReport([r for part in parts for r in part])
