"""The ten acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal summary
(and echoed to stdout, visible with ``-s``).
"""

import contextlib
import subprocess
import sys
import time

from groupgraphs.catalog import BUILTIN_CATALOG
from groupgraphs.core import (has_cyclic_sylows, is_dedekind, is_eppo, materialize,
                              nilpotency_class, prime_factors, sylow_subgroup)
from groupgraphs.graphs import (GraphKind, build_directed_normalising, build_graph, edge_count,
                                graphs_equal, is_spanning_subgraph)
from groupgraphs.theorems import (check_identities, find_generating_adjacent_pair,
                                  has_snnc_subgroup, snorm_witness_pairs)

from conftest import ACCEPTANCE_LINES, group

SNNC_IN_CATALOG = [s for s in BUILTIN_CATALOG if s.startswith("SNNC")]


@contextlib.contextmanager
def criterion(number, title, limit=None):
    t0 = time.perf_counter()
    ok = False
    note = ""
    try:
        yield
        ok = True
    except AssertionError as exc:
        note = f" ({str(exc).splitlines()[0]})" if str(exc) else ""
        raise
    finally:
        dt = time.perf_counter() - t0
        if ok and limit is not None and dt >= limit:
            ok, note = False, f" (took {dt:.1f}s, limit {limit}s)"
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} [{dt:.2f}s]{note}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert limit is None or dt < limit, f"took {dt:.1f}s, limit {limit}s"


def _graphs(G, kinds):
    return {k: build_graph(k, G) for k in kinds}


def test_criterion_01_hierarchy():
    with criterion(1, "Pow<=EPow<=Com<=SNorm<=Nilp and SNorm<=Engel on the catalog; "
                      "SNorm<=NGen for A5 and EA(2,3)", limit=180):
        chain = [GraphKind.POW, GraphKind.EPOW, GraphKind.COM, GraphKind.SNORM, GraphKind.NILP]
        checked = 0
        for spec in BUILTIN_CATALOG:
            G = group(spec)
            if G.order > 512:
                continue
            g = _graphs(G, chain + [GraphKind.ENGEL])
            for a, b in zip(chain, chain[1:]):
                assert is_spanning_subgraph(g[a], g[b]), f"{spec}: {a.name} not in {b.name}"
            assert is_spanning_subgraph(g[GraphKind.SNORM], g[GraphKind.ENGEL]), spec
            checked += 1
        assert checked == len(BUILTIN_CATALOG)
        for spec in ["A5", "EA(2,3)"]:
            G = group(spec)
            assert is_spanning_subgraph(build_graph("snorm", G), build_graph("ngen", G)), spec


def test_criterion_02_q8():
    with criterion(2, "SNorm(Q8) complete with 28 edges, Com(Q8) 16 edges, 12 witness pairs"):
        Q8 = group("Q8")
        snorm = build_graph("snorm", Q8)
        assert snorm.is_complete() and edge_count(snorm) == 28
        assert edge_count(build_graph("com", Q8)) == 16
        assert len(snorm_witness_pairs(Q8)) == 12


def test_criterion_03_s3():
    with criterion(3, "S3: Pow=EPow=Com=SNorm=Nilp with 6 edges, strictly inside Engel (12)"):
        S3 = group("S3")
        five = [GraphKind.POW, GraphKind.EPOW, GraphKind.COM, GraphKind.SNORM, GraphKind.NILP]
        g = _graphs(S3, five + [GraphKind.ENGEL])
        assert [edge_count(g[k]) for k in five] == [6] * 5
        assert edge_count(g[GraphKind.ENGEL]) == 12
        assert all(graphs_equal(g[five[0]], g[k]) for k in five[1:])
        assert is_spanning_subgraph(g[GraphKind.NILP], g[GraphKind.ENGEL])
        assert not graphs_equal(g[GraphKind.NILP], g[GraphKind.ENGEL])


def test_criterion_04_theorem2():
    with criterion(4, "Com=SNorm iff no SNNC subgroup, on the whole catalog", limit=120):
        outcome = {}
        for spec in BUILTIN_CATALOG:
            G = group(spec)
            equal = graphs_equal(build_graph("com", G), build_graph("snorm", G))
            none = has_snnc_subgroup(G) is None
            assert equal == none, f"{spec}: Com=SNorm is {equal}, no SNNC subgroup is {none}"
            outcome[spec] = equal
        for spec in ["S4", "Heis(3)"]:
            assert outcome[spec] is True, spec
        for spec in ["SL(2,3)", "Q8", "SNNC(2,2,1)", "SNNC(3,1,1)"]:
            assert outcome[spec] is False, spec


def test_criterion_05_dichotomy():
    with criterion(5, "no generating SNorm-adjacent pair in D4, Heis(3), Heis(5); "
                      "one in Q8 and every SNNC group, with a(ab)a^-1 = (ab)^(1+p^alpha)"):
        for spec in ["D4", "Heis(3)", "Heis(5)"]:
            assert find_generating_adjacent_pair(group(spec)) is None, spec
        for spec in ["Q8"] + SNNC_IN_CATALOG:
            assert find_generating_adjacent_pair(group(spec)) is not None, spec
        assert len(SNNC_IN_CATALOG) == 5
        for spec in SNNC_IN_CATALOG:
            P = group(spec)
            p, alpha, _ = P.meta["snnc"]
            a, b = P.generators["a"], P.generators["b"]
            ab = P.mul[a, b]
            assert P.mul[P.mul[a, ab], P.inv[a]] == P.power(ab, 1 + p ** alpha), spec


def _sylows_dedekind(G):
    return all(is_dedekind(materialize(sylow_subgroup(G, p))) for p in prime_factors(G.order))


def test_criterion_06_theorem3():
    with criterion(6, "SNorm=Nilp iff every Sylow subgroup is Dedekind, on the catalog",
                   limit=120):
        outcome = {}
        for spec in BUILTIN_CATALOG:
            G = group(spec)
            equal = graphs_equal(build_graph("snorm", G), build_graph("nilp", G))
            ded = _sylows_dedekind(G)
            assert equal == ded, f"{spec}: SNorm=Nilp is {equal}, Sylows Dedekind is {ded}"
            outcome[spec] = equal
        for spec in ["S3", "SL(2,3)", "x(Q8,C3)"]:
            assert outcome[spec] is True, spec
        for spec in ["S4", "D4", "x(D4,C2)"]:
            assert outcome[spec] is False, spec


def test_criterion_07_epow_pow():
    with criterion(7, "EPow=SNorm iff cyclic Sylows; Pow=SNorm iff EPPO with cyclic Sylows"):
        outcome = {}
        for spec in BUILTIN_CATALOG:
            G = group(spec)
            g = _graphs(G, [GraphKind.POW, GraphKind.EPOW, GraphKind.SNORM])
            cyc = has_cyclic_sylows(G)
            epow_eq = graphs_equal(g[GraphKind.EPOW], g[GraphKind.SNORM])
            pow_eq = graphs_equal(g[GraphKind.POW], g[GraphKind.SNORM])
            assert epow_eq == cyc, spec
            assert pow_eq == (is_eppo(G) and cyc), spec
            outcome[spec] = (epow_eq, pow_eq)
        assert outcome["S3"] == (True, True)
        assert outcome["C6"] == (True, False)
        assert outcome["Q8"] == (False, False)
        assert outcome["EA(2,2)"] == (False, False)


def test_criterion_08_dedekind_dnorm():
    with criterion(8, "SNorm complete iff Dedekind; SNorm edge iff both directed edges"):
        for spec in BUILTIN_CATALOG:
            G = group(spec)
            snorm = build_graph("snorm", G)
            assert snorm.is_complete() == is_dedekind(G), spec
            d = build_directed_normalising(G).adjacency
            assert (snorm.adjacency == (d & d.T)).all(), spec


def test_criterion_09_identities():
    with criterion(9, "commutator expansions on 1000 random triples per group; class-2 power "
                      "formula exhaustively for class <= 2, order <= 128"):
        exhaustive = 0
        for spec in BUILTIN_CATALOG:
            G = group(spec)
            r = check_identities(G, samples=1000)
            assert r.detail["samples"] >= 1000
            assert sum(r.detail["failures"].values()) == 0, spec
            cls = nilpotency_class(G)
            if cls is not None and cls <= 2 and G.order <= 128:
                assert r.detail["class_two_power_failures"] == 0, spec
                exhaustive += 1
        assert exhaustive > 0


def test_criterion_10_determinism(tmp_path):
    with criterion(10, "verify --checks all is byte-identical across --threads values"):
        outs = []
        for threads in (1, 4):
            out = tmp_path / f"report{threads}.json"
            r = subprocess.run([sys.executable, "-m", "groupgraphs", "verify", "--checks", "all",
                                "--threads", str(threads), "--out", str(out)],
                               capture_output=True, text=True)
            assert r.returncode == 0, r.stderr[-2000:]
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
