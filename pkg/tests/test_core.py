import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from groupgraphs import core
from groupgraphs.core import (center, closure, commutator, cyclic_subgroup, derived_subgroup,
                              elem_order, exponent, from_cayley_table, is_2_generated,
                              is_abelian, is_dedekind, is_eppo, is_nilpotent, is_p_group,
                              is_simple, iterated_commutator, materialize, normaliser,
                              sylow_subgroup)
from groupgraphs.errors import BadShape, NotAGroup, OrderLimitExceeded, ParseError
from groupgraphs.permutations import format_cycles, from_permutations, parse_cycles

from conftest import group

CATALOG_SMALL = ["C1", "C6", "C12", "EA(2,3)", "D4", "D6", "Q8", "Q16", "S3", "S4", "A4",
                 "SL(2,3)", "Heis(3)", "SNNC(2,2,1)", "SNNC(3,1,1)", "x(Q8,C3)", "x(D4,C2)"]


# -- construction -------------------------------------------------------------

def test_trivial_table():
    G = from_cayley_table(1, [[0]])
    assert G.order == 1 and G.identity == 0


def test_c2_table():
    G = from_cayley_table(2, [[0, 1], [1, 0]])
    assert G.identity == 0 and list(G.inv) == [0, 1]


def test_identity_found_anywhere():
    G = from_cayley_table(2, [[1, 0], [0, 1]])
    assert G.identity == 1


def _non_associative_loop():
    # a latin square with two-sided identity 0 and inverses, but not a group
    return [
        [0, 1, 2, 3, 4, 5],
        [1, 0, 3, 2, 5, 4],
        [2, 4, 0, 5, 1, 3],
        [3, 5, 4, 0, 2, 1],
        [4, 2, 5, 1, 3, 0],
        [5, 3, 1, 4, 0, 2],
    ]


def test_non_associative_table_reports_triple():
    t = np.array(_non_associative_loop())
    with pytest.raises(NotAGroup) as exc:
        from_cayley_table(6, t)
    err = exc.value
    if err.axiom == "associativity":
        x, y, z = err.witness
        assert t[t[x, y], z] != t[x, t[y, z]]
    else:
        assert err.axiom == "inverse"


def test_non_associative_with_inverses():
    # Moufang-free loop of order 5 with identity 0 and x*x = 0 for all x
    t = np.array([
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ])
    with pytest.raises(NotAGroup) as exc:
        from_cayley_table(5, t)
    assert exc.value.axiom == "associativity"
    x, y, z = exc.value.witness
    assert t[t[x, y], z] != t[x, t[y, z]]


def test_latin_square_violation():
    with pytest.raises(NotAGroup) as exc:
        from_cayley_table(2, [[0, 1], [0, 1]])
    assert exc.value.axiom == "latin square"


def test_bad_shape():
    with pytest.raises(BadShape):
        from_cayley_table(2, [[0, 1]])
    with pytest.raises(BadShape):
        from_cayley_table(2, [[0, 2], [1, 0]])


def test_labels_length_checked():
    with pytest.raises(BadShape):
        from_cayley_table(2, [[0, 1], [1, 0]], labels=["e"])


def test_paranoid_checks_above_threshold(monkeypatch):
    monkeypatch.setattr(core, "ASSOCIATIVITY_CHECK_LIMIT", 3)
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    from_cayley_table(5, t)          # above the limit: associativity skipped
    core.set_paranoid(True)
    try:
        with pytest.raises(NotAGroup):
            from_cayley_table(5, t)
    finally:
        core.set_paranoid(False)


# -- permutations ---------------------------------------------------------------

def test_parse_and_format_cycles():
    p = parse_cycles("(1 2 3)(4 5)", 6)
    assert list(p) == [1, 2, 0, 4, 3, 5]
    assert format_cycles(p) == "(1 2 3)(4 5)"
    assert format_cycles(parse_cycles("()", 3)) == "()"
    assert format_cycles(parse_cycles("", 3)) == "()"


@pytest.mark.parametrize("bad", ["(1 2", "(1 9)", "(1 1)", "(a b)", "1 2"])
def test_parse_cycles_errors(bad):
    with pytest.raises(ParseError):
        parse_cycles(bad, 4)


def test_s3_from_permutations():
    G = from_permutations(3, ["(1 2)", "(1 2 3)"])
    assert G.order == 6 and G.identity == 0 and G.labels[0] == "()"


def test_empty_generators_give_trivial_group():
    assert from_permutations(5, []).order == 1


def test_klein_four():
    G = from_permutations(4, ["(1 2)(3 4)", "(1 3)(2 4)"])
    assert G.order == 4
    assert sorted(G.orders.tolist()) == [1, 2, 2, 2]


def test_composition_left_to_right():
    G = from_permutations(3, ["(1 2)", "(1 2 3)"])
    x, y = G.index("(1 2)"), G.index("(1 2 3)")
    assert G.labels[G.mul[x, y]] == "(1 3)"   # apply (1 2) first, then (1 2 3)


def test_permutation_order_limit():
    with pytest.raises(OrderLimitExceeded):
        from_permutations(5, ["(1 2)", "(1 2 3 4 5)"], max_order=100)


@pytest.mark.parametrize("degree,gens", [
    (4, ["(1 2)", "(1 2 3 4)"]),
    (5, ["(1 2 3)", "(3 4 5)"]),
    (6, ["(1 2)(3 4)", "(1 3 5)", "(2 6)"]),
])
def test_permutation_groups_against_sympy(degree, gens):
    G = from_permutations(degree, gens)
    ref = PermutationGroup([Permutation(parse_cycles(g, degree).tolist()) for g in gens])
    assert G.order == ref.order()
    assert center(G).order == ref.center().order()
    assert derived_subgroup(G).order == ref.derived_subgroup().order()
    assert is_nilpotent(G) == ref.is_nilpotent
    for p in core.prime_factors(G.order):
        assert sylow_subgroup(G, p).order == ref.sylow_subgroup(p).order()
    assert sorted(G.orders.tolist()) == sorted(p.order() for p in ref.elements)


# -- element and subgroup operations ------------------------------------------

def test_elem_order_examples():
    C12 = group("C12")
    assert elem_order(C12, C12.identity) == 1
    assert elem_order(C12, C12.generators["g"]) == 12
    Q8 = group("Q8")
    a = Q8.generators["a"]
    assert elem_order(Q8, Q8.mul[a, a]) == 2


def test_cyclic_subgroup_examples(G):
    S3 = G("S3")
    assert cyclic_subgroup(S3, S3.identity).members == {S3.identity}
    assert cyclic_subgroup(S3, S3.index("(1 2 3)")).order == 3
    P = G("SNNC(3,1,1)")
    assert cyclic_subgroup(P, P.generators["a"]).order == 9


def test_closure_examples(G):
    S3 = G("S3")
    t, r, r2 = S3.index("(1 2)"), S3.index("(1 2 3)"), S3.index("(1 3 2)")
    assert closure(S3, {t, r}).order == 6
    assert closure(S3, set()).members == {S3.identity}
    assert closure(S3, {r, r2}).order == 3


def test_normaliser_examples(G):
    S3 = G("S3")
    assert normaliser(S3, S3.trivial()).order == 6
    assert normaliser(S3, cyclic_subgroup(S3, S3.index("(1 2 3)"))).order == 6
    N = normaliser(S3, cyclic_subgroup(S3, S3.index("(1 2)")))
    assert {S3.labels[i] for i in N} == {"()", "(1 2)"}


def test_center_examples(G):
    C6 = G("C6")
    assert center(C6).order == 6
    assert center(G("Q8")).order == 2
    assert center(G("S3")).order == 1


def test_derived_examples(G):
    assert derived_subgroup(G("C12")).order == 1
    assert derived_subgroup(G("S3")).order == 3
    assert derived_subgroup(G("SNNC(3,2,1)")).order == 3


def test_commutator_examples(G):
    S3 = G("S3")
    r = S3.index("(1 2 3)")
    assert commutator(S3, r, S3.mul[r, r]) == S3.identity
    x, y = S3.index("(1 2)"), S3.index("(1 2 3)")
    assert iterated_commutator(S3, x, y, 2) == S3.identity
    x, y = S3.index("(1 2)"), S3.index("(1 3)")
    assert all(iterated_commutator(S3, x, y, k) != S3.identity for k in range(1, S3.order + 1))


def test_commutator_convention(G):
    S3 = G("S3")
    m, iv = S3.mul, S3.inv
    for x, y in itertools.product(range(6), repeat=2):
        assert commutator(S3, x, y) == m[m[m[iv[x], iv[y]], x], y]


def test_nilpotent_examples(G):
    for spec in ["Q8", "D4", "Heis(3)", "SNNC(2,2,1)", "EA(2,3)", "Q16"]:
        assert is_nilpotent(G(spec))
    assert not is_nilpotent(G("S3"))
    assert is_nilpotent(G("C6"))


def test_sylow_examples(G):
    S4 = G("S4")
    assert sylow_subgroup(S4, 2).order == 8
    assert sylow_subgroup(S4, 3).order == 3
    assert sylow_subgroup(S4, 5).order == 1
    SL = G("SL(2,3)")
    P = sylow_subgroup(SL, 2)
    assert P.order == 8
    assert int((SL.orders[P.elements] == 2).sum()) == 1      # unique involution: Q8


def test_sl23_is_quaternion_by_matrix_arithmetic(G):
    # independent check on the matrices: SL(2,3) has exactly one involution, -I
    SL = G("SL(2,3)")
    invol = [SL.labels[i] for i in np.flatnonzero(SL.orders == 2)]
    assert invol == ["[[2,0],[0,2]]"]


def test_predicate_examples(G):
    assert is_dedekind(G("Q8"))
    assert not is_dedekind(G("D4"))
    assert is_eppo(G("S3")) and not is_eppo(G("C6"))
    assert exponent(G("SNNC(2,2,1)")) == 8
    assert is_simple(G("A5")) and not is_simple(G("S3"))
    assert is_simple(G("C5")) and not is_simple(G("C1"))
    assert is_2_generated(G("D4")) and not is_2_generated(G("EA(2,3)"))
    assert is_p_group(G("Heis(3)")) and not is_p_group(G("S3"))


def test_heisenberg_exponent_by_matrix_powers(G):
    # oracle: cube every unitriangular matrix mod 3 with integer matrix products
    mats = []
    for a, b, c in itertools.product(range(3), repeat=3):
        mats.append(np.array([[1, a, c], [0, 1, b], [0, 0, 1]]))
    assert all(((m @ m @ m) % 3 == np.eye(3, dtype=int)).all() for m in mats)
    assert exponent(G("Heis(3)")) == 3


def test_materialize(G):
    S3 = G("S3")
    whole = materialize(S3.whole())
    assert whole.order == 6
    H = materialize(cyclic_subgroup(S3, S3.index("(1 2 3)")))
    assert H.order == 3 and H.identity == 0
    P = materialize(sylow_subgroup(G("S4"), 2))
    assert P.order == 8 and center(P).order == 2


def test_materialize_index_map(G):
    SL = G("SL(2,3)")
    P = sylow_subgroup(SL, 2)
    M = materialize(P)
    pm = M.meta["parent_map"]
    for i, j in itertools.product(range(M.order), repeat=2):
        assert pm[M.mul[i, j]] == SL.mul[pm[i], pm[j]]
    assert is_dedekind(M) == is_dedekind(SL, P)
    assert is_abelian(M) == is_abelian(SL, P)
    assert center(M).order == center(SL, P).order


# -- invariants --------------------------------------------------------------

@pytest.mark.parametrize("spec", CATALOG_SMALL)
def test_group_axioms(spec):
    G = group(spec)
    idx = np.arange(G.order)
    assert G.identity == 0
    assert (G.mul[G.identity] == idx).all() and (G.mul[:, G.identity] == idx).all()
    assert (G.mul[idx, G.inv] == G.identity).all() and (G.mul[G.inv, idx] == G.identity).all()
    assert (np.sort(G.mul, axis=0) == idx[:, None]).all()
    assert (np.sort(G.mul, axis=1) == idx[None, :]).all()
    assert (G.order % G.orders == 0).all()


@pytest.mark.parametrize("spec", CATALOG_SMALL)
def test_sylow_orders(spec):
    G = group(spec)
    for p in core.prime_factors(G.order):
        P = sylow_subgroup(G, p)
        assert P.order == core.p_part(G.order, p)
        assert is_p_group(G, P, p)


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(CATALOG_SMALL), data=st.data())
def test_subgroup_invariants(spec, data):
    G = group(spec)
    x = data.draw(st.integers(0, G.order - 1))
    y = data.draw(st.integers(0, G.order - 1))
    S = closure(G, {x, y})
    N = normaliser(G, S)
    assert S.issubset(N)
    assert center(G, S).issubset(S)
    D = derived_subgroup(G, S)
    assert D.issubset(S) and core.is_normal(G, D, S)
    M = materialize(S)
    assert is_abelian(M) == is_abelian(G, S)
    assert is_nilpotent(M) == is_nilpotent(G, S)
    assert exponent(M) == exponent(G, S)


@settings(max_examples=40, deadline=None)
@given(spec=st.sampled_from(CATALOG_SMALL), data=st.data())
def test_commutator_expansions(spec, data):
    G = group(spec)
    x, y, z = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    m, iv = G.mul, G.inv

    def conj(g, h):
        return m[m[iv[h], g], h]

    c = lambda a, b: commutator(G, a, b)
    assert c(x, m[y, z]) == m[c(x, z), conj(c(x, y), z)]
    assert c(m[x, z], y) == m[conj(c(x, y), z), c(z, y)]


def test_stated_expansion_form_needs_matching_convention(G):
    # [x,yz] = [x,y] y^-1[x,z]y is not an identity for [x,y] = x^-1 y^-1 x y
    S3 = G("S3")
    m, iv = S3.mul, S3.inv
    bad = 0
    for x, y, z in itertools.product(range(6), repeat=3):
        lhs = commutator(S3, x, m[y, z])
        rhs = m[commutator(S3, x, y), m[m[iv[y], commutator(S3, x, z)], y]]
        bad += lhs != rhs
    assert bad > 0
