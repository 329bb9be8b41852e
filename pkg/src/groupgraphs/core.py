"""Finite groups as Cayley tables, subgroups as membership masks, and the
structural primitives (closure, normaliser, center, commutators, Sylow
subgroups, predicates) that the graph builders and checkers consume.

Elements are integer indices ``0 .. n-1``.  The commutator convention is
``[x, y] = x^-1 y^-1 x y`` everywhere in the package.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import BadShape, NotAGroup, OrderLimitExceeded

COMMUTATOR_CONVENTION = "[x,y] = x^-1 y^-1 x y"

DEFAULT_MAX_ORDER = 20000
ASSOCIATIVITY_CHECK_LIMIT = 512
_paranoid = False


def set_paranoid(flag: bool) -> None:
    """Check associativity of every constructed table, whatever its size."""
    global _paranoid
    _paranoid = bool(flag)


def default_max_order() -> int:
    """Construction cap, overridable through the ``GG_MAX_ORDER`` variable."""
    value = os.environ.get("GG_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``k >= 1``, else None."""
    ps = prime_factors(n)
    if len(ps) != 1:
        return None
    p = ps[0]
    k = 0
    while n > 1:
        n //= p
        k += 1
    return p, k


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


# ---------------------------------------------------------------------------
# groups and subgroups


@dataclass(frozen=True, eq=False)
class CayleyGroup:
    """A finite group given by its multiplication table.

    ``mul[x, y]`` is the index of ``x*y`` and ``inv[x]`` the index of
    ``x^-1``.  Instances are immutable; derived data (element orders, cyclic
    subgroups, normalisers of cyclic subgroups) is computed lazily and
    cached on the instance.
    """

    mul: np.ndarray
    inv: np.ndarray
    identity: int
    labels: tuple[str, ...]
    name: str = "G"
    meta: Mapping = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"CayleyGroup({self.name!r}, order={self.order})"

    def index(self, label: str) -> int:
        """Index of the element displayed as ``label``."""
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def generators(self) -> dict[str, int]:
        """Named generators recorded by the constructor (may be empty)."""
        return dict(self.meta.get("generators", {}))

    def whole(self) -> Subgroup:
        return Subgroup(self, np.ones(self.order, dtype=bool))

    def trivial(self) -> Subgroup:
        mask = np.zeros(self.order, dtype=bool)
        mask[self.identity] = True
        return Subgroup(self, mask)

    def power(self, x: int, m: int) -> int:
        m %= int(self.orders[x])
        out, base = self.identity, x
        while m:
            if m & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            m >>= 1
        return out

    def prod(self, *xs: int) -> int:
        return reduce(lambda a, b: int(self.mul[a, b]), xs, self.identity)

    # -- cached derived data ------------------------------------------------

    @cached_property
    def orders(self) -> np.ndarray:
        return _readonly(self._power_data[0])

    @cached_property
    def powers(self) -> np.ndarray:
        """Boolean matrix with ``powers[x, y]`` true iff ``y`` lies in <x>."""
        return _readonly(self._power_data[1])

    @cached_property
    def _power_data(self):
        n = self.order
        e = self.identity
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        pw = np.zeros((n, n), dtype=bool)
        pw[idx, e] = True
        cur = idx.copy()
        k = 1
        while True:
            live = orders == 0
            if not live.any():
                break
            pw[idx[live], cur[live]] = True
            done = live & (cur == e)
            orders[done] = k
            cur = self.mul[cur, idx]
            k += 1
        return orders, pw

    @cached_property
    def cyclic_ids(self) -> np.ndarray:
        """Label each element by the cyclic subgroup it generates.

        Two elements share an id iff they generate the same cyclic subgroup;
        ids are numbered by first occurrence in index order.
        """
        seen: dict[bytes, int] = {}
        ids = np.empty(self.order, dtype=np.int64)
        for x in range(self.order):
            key = np.packbits(self.powers[x]).tobytes()
            ids[x] = seen.setdefault(key, len(seen))
        return _readonly(ids)

    @cached_property
    def cyclic_reps(self) -> np.ndarray:
        """Smallest element index generating each distinct cyclic subgroup."""
        _, first = np.unique(self.cyclic_ids, return_index=True)
        return _readonly(first)

    @cached_property
    def cyclic_normalisers(self) -> np.ndarray:
        """``nm[x, g]`` true iff ``g`` lies in the normaliser of <x>."""
        n = self.order
        nm = np.empty((n, n), dtype=bool)
        ids = self.cyclic_ids
        for rep in self.cyclic_reps:
            row = _normaliser_mask(self, self.powers[rep])
            nm[ids == ids[rep]] = row
        return _readonly(nm)

    @cached_property
    def commutator_table(self) -> np.ndarray:
        m, iv = self.mul, self.inv
        return _readonly(m[m[iv[:, None], iv[None, :]], m])

    @cached_property
    def _closure_cache(self) -> dict:
        return {}

    @cached_property
    def _nilpotent_cache(self) -> dict:
        return {}


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent`` stored as a boolean membership mask."""

    parent: CayleyGroup
    mask: np.ndarray

    def __post_init__(self):
        if self.mask.flags.writeable:
            object.__setattr__(self, "mask", _readonly(self.mask.copy()))
        assert self.parent.order % self.order == 0, "subgroup order must divide group order"

    @cached_property
    def elements(self) -> np.ndarray:
        return _readonly(np.flatnonzero(self.mask))

    @property
    def members(self) -> frozenset[int]:
        return frozenset(int(x) for x in self.elements)

    @property
    def order(self) -> int:
        return int(self.elements.size)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x) -> bool:
        return bool(self.mask[x])

    def __iter__(self):
        return (int(x) for x in self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.mask, other.mask)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    def issubset(self, other: Subgroup) -> bool:
        return not (self.mask & ~other.mask).any()

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"


# ---------------------------------------------------------------------------
# construction and validation


def _validate(mul: np.ndarray, check_associativity: bool | None) -> tuple[int, np.ndarray]:
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        raise BadShape("table entries must lie in 0..order-1")
    idx = np.arange(n)
    for axis, what in ((1, "row"), (0, "column")):
        s = np.sort(mul, axis=axis)
        bad = (s != (idx[None, :] if axis == 1 else idx[:, None])).any(axis=axis)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise NotAGroup("latin square", (i,), f"{what} {i} is not a permutation of 0..{n - 1}")
    ids = np.flatnonzero((mul == idx[None, :]).all(axis=1))
    e = next((int(i) for i in ids if (mul[:, i] == idx).all()), None)
    if e is None:
        raise NotAGroup("identity", (), "no two-sided identity element")
    rows, cols = np.nonzero(mul == e)
    inv = np.empty(n, dtype=mul.dtype)
    inv[rows] = cols
    bad = np.flatnonzero(mul[inv, idx] != e)
    if bad.size:
        x = int(bad[0])
        raise NotAGroup("inverse", (x,), f"left and right inverse of {x} differ")
    if check_associativity is None:
        check_associativity = _paranoid or n <= ASSOCIATIVITY_CHECK_LIMIT
    if check_associativity:
        for x in range(n):
            lhs = mul[mul[x]]          # (x*y)*z over all y, z
            rhs = mul[x][mul]          # x*(y*z)
            bad = lhs != rhs
            if bad.any():
                y, z = (int(v) for v in np.argwhere(bad)[0])
                raise NotAGroup("associativity", (x, y, z))
    return e, inv


def make_group(table, labels: Sequence[str] | None = None, name: str = "G",
               meta: Mapping | None = None, check_associativity: bool | None = None,
               max_order: int | None = None) -> CayleyGroup:
    """Validate a multiplication table and wrap it as a CayleyGroup."""
    mul = np.asarray(table)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise BadShape(f"table must be a non-empty square matrix, got shape {mul.shape}")
    if not np.issubdtype(mul.dtype, np.integer):
        raise BadShape("table entries must be integers")
    n = mul.shape[0]
    limit = default_max_order() if max_order is None else max_order
    if n > limit:
        raise OrderLimitExceeded(n, limit)
    mul = np.ascontiguousarray(mul, dtype=np.int32)
    e, inv = _validate(mul, check_associativity)
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise BadShape(f"expected {n} labels, got {len(labels)}")
    return CayleyGroup(_readonly(mul), _readonly(inv), e, labels, name, dict(meta or {}))


def from_cayley_table(order: int, table, labels: Sequence[str] | None = None,
                      name: str = "G", **kwargs) -> CayleyGroup:
    """Build a group from an ``order x order`` table of element indices."""
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise BadShape(f"malformed table: {exc}") from None
    if arr.shape != (order, order):
        raise BadShape(f"table has shape {arr.shape}, expected {(order, order)}")
    return make_group(arr, labels, name, **kwargs)


# ---------------------------------------------------------------------------
# element-level operations


def elem_order(G: CayleyGroup, x: int) -> int:
    return int(G.orders[x])


def cyclic_subgroup(G: CayleyGroup, x: int) -> Subgroup:
    return Subgroup(G, G.powers[x].copy())


def commutator(G: CayleyGroup, x: int, y: int) -> int:
    """``[x, y] = x^-1 y^-1 x y``."""
    m, iv = G.mul, G.inv
    return int(m[m[iv[x], iv[y]], m[x, y]])


def iterated_commutator(G: CayleyGroup, x: int, y: int, k: int) -> int:
    """``[x,_k y]``: ``[x,_1 y] = [x, y]`` and ``[x,_k y] = [[x,_{k-1} y], y]``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    c = x
    for _ in range(k):
        c = commutator(G, c, y)
    return c


def conjugate(G: CayleyGroup, x: int, g: int) -> int:
    """``g^-1 x g``."""
    return int(G.mul[G.mul[G.inv[g], x], g])


# ---------------------------------------------------------------------------
# subgroup-level operations


def _as_mask(G: CayleyGroup, S) -> np.ndarray:
    if isinstance(S, Subgroup):
        return S.mask
    mask = np.zeros(G.order, dtype=bool)
    mask[list(S)] = True
    return mask


def closure_mask(G: CayleyGroup, seeds) -> np.ndarray:
    gens = np.unique(np.asarray(list(seeds), dtype=np.int64))
    gens = gens[gens != G.identity]
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    frontier = np.array([G.identity])
    while frontier.size and gens.size:
        prods = np.unique(G.mul[frontier][:, gens])
        prods = prods[~mask[prods]]
        mask[prods] = True
        frontier = prods
    return mask


def closure(G: CayleyGroup, seed_set: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed_set``."""
    return Subgroup(G, closure_mask(G, seed_set))


def pair_closure(G: CayleyGroup, x: int, y: int) -> Subgroup:
    """<x, y>, memoized on the pair of cyclic subgroups <x>, <y>."""
    ids = G.cyclic_ids
    a, b = int(ids[x]), int(ids[y])
    key = (a, b) if a <= b else (b, a)
    cache = G._closure_cache
    H = cache.get(key)
    if H is None:
        H = cache.setdefault(key, closure(G, (x, y)))
    return H


def _normaliser_mask(G: CayleyGroup, smask: np.ndarray) -> np.ndarray:
    s = np.flatnonzero(smask)
    conj = G.mul[G.mul[G.inv[:, None], s[None, :]], np.arange(G.order)[:, None]]   # g^-1 s g
    return smask[conj].all(axis=1)


def normaliser(G: CayleyGroup, S: Subgroup) -> Subgroup:
    """``{g : g S g^-1 = S}``."""
    return Subgroup(G, _normaliser_mask(G, _as_mask(G, S)))


def center(G: CayleyGroup, S: Subgroup | None = None) -> Subgroup:
    smask = G.whole().mask if S is None else _as_mask(G, S)
    s = np.flatnonzero(smask)
    sub = G.mul[np.ix_(s, s)]
    central = (sub == sub.T).all(axis=1)
    mask = np.zeros(G.order, dtype=bool)
    mask[s[central]] = True
    return Subgroup(G, mask)


def _commutators(G: CayleyGroup, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m, iv = G.mul, G.inv
    return np.unique(m[m[iv[a][:, None], iv[b][None, :]], m[np.ix_(a, b)]])


def derived_subgroup(G: CayleyGroup, S: Subgroup | None = None) -> Subgroup:
    s = np.flatnonzero(G.whole().mask if S is None else _as_mask(G, S))
    return closure(G, _commutators(G, s, s))


def lower_central_series(G: CayleyGroup, S: Subgroup | None = None) -> list[Subgroup]:
    """``gamma_1 = S``, ``gamma_{i+1} = <[gamma_i, S]>`` until it stabilises."""
    S = G.whole() if S is None else S
    s = S.elements
    series = [S]
    while True:
        nxt = closure(G, _commutators(G, series[-1].elements, s))
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_nilpotent(G: CayleyGroup, S: Subgroup | None = None) -> bool:
    S = G.whole() if S is None else S
    cache = G._nilpotent_cache
    if S.key not in cache:
        cache[S.key] = lower_central_series(G, S)[-1].order == 1
    return cache[S.key]


def nilpotency_class(G: CayleyGroup, S: Subgroup | None = None) -> int | None:
    """Length of the lower central series to the trivial group; None if not nilpotent."""
    series = lower_central_series(G, S)
    if series[-1].order != 1:
        return None
    return len(series) - 1


def is_normal(G: CayleyGroup, N: Subgroup, S: Subgroup | None = None) -> bool:
    """True iff ``N`` is normalised by every element of ``S`` (default: G)."""
    smask = G.whole().mask if S is None else S.mask
    return not (smask & ~_normaliser_mask(G, N.mask)).any()


def normal_closure(G: CayleyGroup, seeds: Iterable[int]) -> Subgroup:
    seeds = np.asarray(list(seeds), dtype=np.int64)
    g = np.arange(G.order)
    conj = G.mul[G.mul[G.inv[g][:, None], seeds[None, :]], g[:, None]]
    return closure(G, np.unique(conj))


def sylow_subgroup(G: CayleyGroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown by adjoining p-elements of the normaliser."""
    target = p_part(G.order, p)
    if target == 1:
        return G.trivial()
    orders = G.orders
    pelem = orders == p_part(1, p)
    for o in np.unique(orders):
        pelem |= (orders == o) & (p_part(int(o), p) == o)
    start = int(np.argmax(np.where(pelem, orders, 0)))
    P = cyclic_subgroup(G, start)
    while P.order < target:
        N = _normaliser_mask(G, P.mask)
        cand = np.flatnonzero(N & ~P.mask & pelem)
        # p-elements of N(P) outside P always exist while P is not Sylow
        assert cand.size, "no p-element in N(P) \\ P"
        P = Subgroup(G, closure_mask(G, np.concatenate([P.elements, cand[:1]])))
    assert P.order == target
    return P


def materialize(S: Subgroup, name: str | None = None) -> CayleyGroup:
    """Re-index ``S`` as a standalone group.

    The identity becomes index 0; ``meta["parent_map"][i]`` is the parent
    index of element ``i``.
    """
    G = S.parent
    rest = [int(x) for x in S.elements if x != G.identity]
    m = np.array([G.identity] + rest, dtype=np.int64)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[m] = np.arange(m.size)
    table = pos[G.mul[np.ix_(m, m)]]
    return make_group(
        table,
        [G.labels[i] for i in m],
        name or f"sub({G.name},{m.size})",
        meta={"parent_map": tuple(int(i) for i in m)},
        check_associativity=False,
    )


# ---------------------------------------------------------------------------
# predicates


def _sub(G: CayleyGroup, S: Subgroup | None) -> Subgroup:
    return G.whole() if S is None else S


def is_abelian(G: CayleyGroup, S: Subgroup | None = None) -> bool:
    return center(G, _sub(G, S)) == _sub(G, S)


def is_cyclic(G: CayleyGroup, S: Subgroup | None = None) -> bool:
    S = _sub(G, S)
    return int(G.orders[S.elements].max()) == S.order


def is_p_group(G: CayleyGroup, S: Subgroup | None = None, p: int | None = None) -> bool:
    """True iff the order is a power of a prime (of ``p`` when given).

    The trivial group counts as a p-group for every p.
    """
    n = _sub(G, S).order
    if n == 1:
        return True
    pk = prime_power(n)
    return pk is not None and (p is None or pk[0] == p)


def exponent(G: CayleyGroup, S: Subgroup | None = None) -> int:
    return reduce(math.lcm, (int(o) for o in G.orders[_sub(G, S).elements]), 1)


def is_dedekind(G: CayleyGroup, S: Subgroup | None = None) -> bool:
    """Every cyclic subgroup <x>, x in S, is normal in S."""
    S = _sub(G, S)
    s = S.elements
    reps = np.unique(G.cyclic_ids[s], return_index=True)[1]
    for x in s[reps]:
        if not is_normal(G, cyclic_subgroup(G, int(x)), S):
            return False
    return True


def is_eppo(G: CayleyGroup) -> bool:
    """Every element has prime-power order (the identity included)."""
    return all(o == 1 or prime_power(int(o)) is not None for o in np.unique(G.orders))


def conjugacy_classes(G: CayleyGroup) -> list[np.ndarray]:
    g = np.arange(G.order)
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = np.unique(G.mul[G.mul[G.inv[g], x], g])
        seen[cls] = True
        classes.append(cls)
    return classes


def is_simple(G: CayleyGroup) -> bool:
    """Nontrivial and every nonidentity element has normal closure G."""
    if G.order == 1:
        return False
    for cls in conjugacy_classes(G):
        x = int(cls[0])
        if x != G.identity and normal_closure(G, [x]).order != G.order:
            return False
    return True


def generating_pair(G: CayleyGroup, S: Subgroup | None = None) -> tuple[int, int] | None:
    """Some pair (x, y) of elements of S with <x, y> = S, or None."""
    S = _sub(G, S)
    s = S.elements
    reps = s[np.unique(G.cyclic_ids[s], return_index=True)[1]]
    reps = reps[np.argsort(-G.orders[reps], kind="stable")]
    for i, x in enumerate(reps):
        for y in reps[i:]:
            if pair_closure(G, int(x), int(y)) == S:
                return int(x), int(y)
    return None


def is_2_generated(G: CayleyGroup, S: Subgroup | None = None) -> bool:
    return generating_pair(G, S) is not None


def sylow_subgroups(G: CayleyGroup) -> dict[int, Subgroup]:
    return {p: sylow_subgroup(G, p) for p in prime_factors(G.order)}


def has_cyclic_sylows(G: CayleyGroup) -> bool:
    return all(is_cyclic(G, P) for P in sylow_subgroups(G).values())
