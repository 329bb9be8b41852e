"""Constructors for the built-in group families, the SNNC groups and the
exponent-critical type-B groups."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .core import CayleyGroup, default_max_order, is_prime, make_group
from .errors import BadParameter, OrderLimitExceeded
from .permutations import from_permutations


def _check_order(order: int, max_order: int | None) -> int:
    limit = default_max_order() if max_order is None else max_order
    if order > limit:
        raise OrderLimitExceeded(order, limit)
    return limit


def _from_coordinates(coords: np.ndarray, radices, product, labels, name, meta,
                      max_order=None) -> CayleyGroup:
    """Tabulate a group whose elements are integer vectors.

    ``coords`` lists the elements (identity first) as rows with entries
    below ``radices``; ``product(A, B)`` multiplies rows elementwise.
    """
    n = coords.shape[0]
    _check_order(n, max_order)
    weights = np.cumprod([1] + list(radices[:-1])).astype(np.int64)
    codes = coords @ weights
    lookup = np.full(int(np.prod(radices)), -1, dtype=np.int64)
    lookup[codes] = np.arange(n)
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        prod = product(np.broadcast_to(coords[x], coords.shape), coords)
        table[x] = lookup[prod @ weights]
    return make_group(table, labels, name, meta=meta, max_order=max_order)


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def _word(*parts: tuple[str, int]) -> str:
    return "".join(_power_label(s, k) for s, k in parts) or "e"


def _grid(*sizes: int) -> np.ndarray:
    """All integer vectors below ``sizes``, first coordinate fastest."""
    grid = np.indices(tuple(reversed(sizes))).reshape(len(sizes), -1)[::-1]
    return np.ascontiguousarray(grid.T, dtype=np.int64)


# ---------------------------------------------------------------------------
# families


def cyclic(n: int, max_order=None) -> CayleyGroup:
    if n < 1:
        raise BadParameter(f"cyclic(n) needs n >= 1, got {n}")
    _check_order(n, max_order)
    i = np.arange(n)
    table = (i[:, None] + i[None, :]) % n
    labels = [_word(("g", k)) for k in range(n)]
    gens = {"g": 1} if n > 1 else {}
    return make_group(table, labels, f"C{n}", meta={"generators": gens}, max_order=max_order)


def dihedral(n: int, max_order=None) -> CayleyGroup:
    """Dihedral group of order ``2n``: rotations r^i and reflections r^i s."""
    if n < 1:
        raise BadParameter(f"dihedral(n) needs n >= 1, got {n}")

    def product(A, B):
        sign = 1 - 2 * A[:, 1]
        return np.stack([(A[:, 0] + sign * B[:, 0]) % n, (A[:, 1] + B[:, 1]) % 2], axis=1)

    coords = _grid(n, 2)
    labels = [_word(("r", i), ("s", j)) for i, j in coords]
    return _from_coordinates(coords, (n, 2), product, labels, f"D{n}",
                             {"generators": {"r": 1 % n, "s": n}}, max_order)


def generalized_quaternion(m: int, max_order=None) -> CayleyGroup:
    """Generalized quaternion group of order ``2^m`` (``m = 3`` gives Q8).

    Elements a^i b^j with a of order 2^(m-1), b^2 = a^(2^(m-2)) and
    b^-1 a b = a^-1.
    """
    if m < 3:
        raise BadParameter(f"generalized_quaternion(m) needs m >= 3, got {m}")
    N = 2 ** (m - 1)
    _check_order(2 * N, max_order)

    def product(A, B):
        sign = 1 - 2 * A[:, 1]
        carry = (A[:, 1] * B[:, 1]) * (N // 2)
        return np.stack([(A[:, 0] + sign * B[:, 0] + carry) % N,
                         (A[:, 1] + B[:, 1]) % 2], axis=1)

    coords = _grid(N, 2)
    labels = [_word(("a", i), ("b", j)) for i, j in coords]
    return _from_coordinates(coords, (N, 2), product, labels, f"Q{2 * N}",
                             {"generators": {"a": 1, "b": N}}, max_order)


def elementary_abelian(p: int, k: int, max_order=None) -> CayleyGroup:
    if not is_prime(p):
        raise BadParameter(f"elementary_abelian(p, k) needs prime p, got {p}")
    if k < 0:
        raise BadParameter(f"elementary_abelian(p, k) needs k >= 0, got {k}")
    _check_order(p ** k, max_order)
    if k == 0:
        return make_group([[0]], ["e"], f"EA({p},0)")
    coords = _grid(*([p] * k))
    labels = ["(" + ",".join(map(str, row)) + ")" for row in coords]
    gens = {f"e{i + 1}": p ** i for i in range(k)}
    return _from_coordinates(coords, (p,) * k, lambda A, B: (A + B) % p, labels,
                             f"EA({p},{k})", {"generators": gens}, max_order)


def heisenberg(p: int, max_order=None) -> CayleyGroup:
    """Upper unitriangular 3x3 matrices mod an odd prime ``p``.

    (a, b, c) is [[1, a, c], [0, 1, b], [0, 0, 1]].
    """
    if not is_prime(p) or p == 2:
        raise BadParameter(f"heisenberg(p) needs an odd prime, got {p}")

    def product(A, B):
        return np.stack([(A[:, 0] + B[:, 0]) % p, (A[:, 1] + B[:, 1]) % p,
                         (A[:, 2] + B[:, 2] + A[:, 0] * B[:, 1]) % p], axis=1)

    coords = _grid(p, p, p)
    labels = [_word(("x", a), ("y", b), ("z", c)) for a, b, c in coords]
    return _from_coordinates(coords, (p, p, p), product, labels, f"Heis({p})",
                             {"generators": {"x": 1, "y": p}}, max_order)


def special_linear(d: int, p: int, max_order=None) -> CayleyGroup:
    """SL(2, p) by enumeration of determinant-one matrices, ``p <= 7``."""
    if d != 2:
        raise BadParameter(f"special_linear supports dimension 2 only, got {d}")
    if not is_prime(p) or p > 7:
        raise BadParameter(f"special_linear(2, p) needs a prime p <= 7, got {p}")
    allm = _grid(p, p, p, p)                       # (a, b, c, d)
    det = (allm[:, 0] * allm[:, 3] - allm[:, 1] * allm[:, 2]) % p
    coords = allm[det == 1]
    ident = np.flatnonzero((coords == [1, 0, 0, 1]).all(axis=1))[0]
    coords = np.concatenate([coords[ident:ident + 1], np.delete(coords, ident, axis=0)])

    def product(A, B):
        a, b, c, d_ = (A[:, i] for i in range(4))
        e, f, g, h = (B[:, i] for i in range(4))
        return np.stack([a * e + b * g, a * f + b * h, c * e + d_ * g, c * f + d_ * h], axis=1) % p

    labels = [f"[[{a},{b}],[{c},{d_}]]" for a, b, c, d_ in coords]
    return _from_coordinates(coords, (p,) * 4, product, labels, f"SL(2,{p})", {}, max_order)


def symmetric(n: int, max_order=None) -> CayleyGroup:
    if not 1 <= n <= 7:
        raise BadParameter(f"symmetric(n) needs 1 <= n <= 7, got {n}")
    _check_order(factorial(n), max_order)
    gens = []
    if n >= 2:
        gens.append("(1 2)")
    if n >= 3:
        gens.append("(" + " ".join(str(i) for i in range(1, n + 1)) + ")")
    return from_permutations(n, gens, name=f"S{n}", max_order=max_order)


def alternating(n: int, max_order=None) -> CayleyGroup:
    if not 1 <= n <= 7:
        raise BadParameter(f"alternating(n) needs 1 <= n <= 7, got {n}")
    _check_order(max(1, factorial(n) // 2), max_order)
    gens = [f"(1 2 {k})" for k in range(3, n + 1)]
    return from_permutations(n, gens, name=f"A{n}", max_order=max_order)


def direct_product(A: CayleyGroup, B: CayleyGroup, name: str | None = None,
                   max_order=None) -> CayleyGroup:
    """A x B with element ``(x, y)`` at index ``x * |B| + y``."""
    na, nb = A.order, B.order
    _check_order(na * nb, max_order)
    table = (A.mul.astype(np.int64)[:, None, :, None] * nb
             + B.mul[None, :, None, :]).reshape(na * nb, na * nb)
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    gens = {f"{k}_1": v * nb + B.identity for k, v in A.generators.items()}
    gens.update({f"{k}_2": A.identity * nb + v for k, v in B.generators.items()})
    return make_group(table, labels, name or f"x({A.name},{B.name})",
                      meta={"generators": gens, "factors": (A.name, B.name)},
                      max_order=max_order)


# ---------------------------------------------------------------------------
# SNNC and type-B groups


@dataclass(frozen=True)
class SnncParams:
    """Parameters (p, alpha, beta) of an SNNC group of order p^(alpha+beta+1)."""

    p: int
    alpha: int
    beta: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise BadParameter(f"p must be prime, got {self.p}")
        if not self.alpha >= self.beta >= 1:
            raise BadParameter(f"need alpha >= beta >= 1, got alpha={self.alpha}, beta={self.beta}")
        if self.p == 2 and self.alpha == self.beta == 1:
            raise BadParameter("p=2 with alpha=beta=1 gives the dihedral group of order 8, "
                               "not an SNNC group (alpha > 1 required when alpha == beta)")

    @property
    def n(self) -> int:
        return self.alpha + self.beta + 1

    @property
    def order(self) -> int:
        return self.p ** self.n


def make_snnc(params: SnncParams, max_order=None) -> CayleyGroup:
    """Realize the SNNC presentation as a semidirect product.

    Elements are pairs (i, j) with 0 <= i < p^(alpha+1), 0 <= j < p^beta and
    (i, j)(i', j') = (i + i' t^j, j + j') for t = 1 + p^alpha.  The recorded
    generators are a = (1, 0) and b = (0, -1); with them b^-1 a b = a^t, so
    a^(p^alpha) = [a, b] in the x^-1 y^-1 x y convention.  Labels are the
    words a^i b^k in those generators.
    """
    p, alpha, beta = params.p, params.alpha, params.beta
    A, B = p ** (alpha + 1), p ** beta
    _check_order(A * B, max_order)
    t = 1 + p ** alpha
    twist = np.array([pow(t, j, A) for j in range(B)], dtype=np.int64)

    def product(X, Y):
        return np.stack([(X[:, 0] + Y[:, 0] * twist[X[:, 1]]) % A,
                         (X[:, 1] + Y[:, 1]) % B], axis=1)

    coords = _grid(A, B)
    labels = [_word(("a", i), ("b", (-j) % B)) for i, j in coords]
    G = _from_coordinates(coords, (A, B), product, labels, f"SNNC({p},{alpha},{beta})",
                          {"generators": {"a": 1, "b": A * (B - 1)},
                           "snnc": (p, alpha, beta)}, max_order)
    return G


@dataclass(frozen=True)
class TypeBParams:
    """A row (alpha, beta, rho, sigma) of the type-B classification for prime p."""

    p: int
    alpha: int
    beta: int
    rho: int
    sigma: int
    case_tag: str

    @property
    def n(self) -> int:
        return self.alpha + self.beta + 1

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.rho, self.sigma)


_CASES_ODD = (
    ("A1a", 0, 1, "gt"), ("A1b", 1, 1, "gt"), ("A1c", 1, 0, "gt"),
    ("A2a", 0, 1, "eq"), ("A2b", 1, 1, "eq"),
)
_CASES_TWO = (
    ("B1a", 0, 1, "gt"), ("B1b", 1, 1, "gt"), ("B1c", 1, 0, "gt"),
    ("B2a", 0, 1, "eq2"), ("B2b", 1, 1, "eq2"),
    ("B3a", 0, 0, "one"), ("B3b", 1, 1, "one"),
)
SNNC_CASES = frozenset({"A1a", "A2a", "B1a", "B2a", "B3a"})


def type_b_case(p: int, alpha: int, beta: int, rho: int, sigma: int) -> str | None:
    """Case tag of a parameter tuple in the type-B list, or None if unlisted."""
    for tag, r, s, shape in (_CASES_TWO if p == 2 else _CASES_ODD):
        if (rho, sigma) != (r, s):
            continue
        if shape == "gt" and alpha > beta >= 1:
            return tag
        if shape == "eq" and alpha == beta >= 1:
            return tag
        if shape == "eq2" and alpha == beta > 1:
            return tag
        if shape == "one" and alpha == beta == 1:
            return tag
    return None


def type_b_params(p: int, n: int) -> list[TypeBParams]:
    """Every listed parameter tuple for groups of order p^n, in list order."""
    out = []
    for tag, rho, sigma, _ in (_CASES_TWO if p == 2 else _CASES_ODD):
        for beta in range(1, n):
            alpha = n - 1 - beta
            if type_b_case(p, alpha, beta, rho, sigma) == tag:
                out.append(TypeBParams(p, alpha, beta, rho, sigma, tag))
    return out


def make_type_b(p: int, alpha: int, beta: int, rho: int, sigma: int,
                max_order=None) -> CayleyGroup:
    """The group <a, b | [a,b]^p = [a,b,a] = [a,b,b] = 1,
    a^(p^alpha) = [a,b]^(p^rho), b^(p^beta) = [a,b]^(p^sigma)>.

    Elements are normal words a^i b^j c^k with c = [a, b] central.
    """
    if not is_prime(p):
        raise BadParameter(f"p must be prime, got {p}")
    tag = type_b_case(p, alpha, beta, rho, sigma)
    if tag is None:
        raise BadParameter(f"({alpha},{beta},{rho},{sigma}) is not a listed type-B tuple for p={p}")
    PA, PB = p ** alpha, p ** beta
    ca, cb = p ** rho, p ** sigma

    def product(X, Y):
        i, j = X[:, 0] + Y[:, 0], X[:, 1] + Y[:, 1]
        k = X[:, 2] + Y[:, 2] - X[:, 1] * Y[:, 0]      # b^j a^i' = a^i' b^j c^(-i'j)
        k = k + (i // PA) * ca + (j // PB) * cb
        return np.stack([i % PA, j % PB, k % p], axis=1)

    coords = _grid(PA, PB, p)
    labels = [_word(("a", i), ("b", j), ("c", k)) for i, j, k in coords]
    return _from_coordinates(coords, (PA, PB, p), product, labels,
                             f"TB({p},{alpha},{beta},{rho},{sigma})",
                             {"generators": {"a": 1, "b": PA}, "type_b": tag}, max_order)
