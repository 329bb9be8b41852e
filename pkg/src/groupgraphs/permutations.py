"""Permutation groups: cycle notation and closure of generators into a
Cayley table.

Products compose left to right: ``x*y`` applies ``x`` first, then ``y``,
so ``(1 2)*(1 2 3) = (2 3)``.
"""

from __future__ import annotations

import re
from collections import deque

import numpy as np

from .core import CayleyGroup, default_max_order, make_group
from .errors import OrderLimitExceeded, ParseError

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> np.ndarray:
    """Parse disjoint-cycle notation into an image array on ``0..degree-1``.

    ``"(1 2)(3 4)"`` with 1-based points; ``"()"`` and ``""`` are the identity.
    """
    perm = np.arange(degree)
    seen: set[int] = set()
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(stripped, pos)
        if not m:
            raise ParseError(f"expected '(' in cycle string {text!r}", pos)
        body = m.group(1).replace(",", " ").split()
        try:
            points = [int(tok) for tok in body]
        except ValueError:
            raise ParseError(f"non-integer point in {text!r}", pos) from None
        for pt in points:
            if not 1 <= pt <= degree:
                raise ParseError(f"point {pt} outside 1..{degree}", pos)
            if pt in seen:
                raise ParseError(f"point {pt} repeated in {text!r}", pos)
            seen.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            perm[a - 1] = b - 1
        pos = m.end()
    return perm


def format_cycles(perm) -> str:
    """Disjoint-cycle notation, 1-based, fixed points omitted."""
    perm = list(perm)
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(str(i + 1))
            i = perm[i]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def _encode(perms: np.ndarray, degree: int):
    """Map rows of ``perms`` to integers suitable for searchsorted lookup."""
    if degree and degree ** degree < 2 ** 62:
        weights = degree ** np.arange(degree, dtype=np.int64)
        return perms.astype(np.int64) @ weights
    return None


def permutation_table(perms: np.ndarray) -> np.ndarray:
    """Cayley table of a closed list of permutations (rows are images)."""
    n, degree = perms.shape
    table = np.empty((n, n), dtype=np.int64)
    codes = _encode(perms, degree)
    if codes is not None:
        order = np.argsort(codes)
        sorted_codes = codes[order]
        for x in range(n):
            prod = perms[:, perms[x]]          # row y: apply x then y
            table[x] = order[np.searchsorted(sorted_codes, _encode(prod, degree))]
    else:
        index = {row.tobytes(): i for i, row in enumerate(perms)}
        for x in range(n):
            prod = perms[:, perms[x]]
            table[x] = [index[row.tobytes()] for row in prod]
    return table


def from_permutations(degree: int, generators, name: str | None = None,
                      max_order: int | None = None,
                      check_associativity: bool | None = None) -> CayleyGroup:
    """Close ``generators`` (cycle strings) under composition.

    Elements are numbered in breadth-first discovery order from the
    identity (index 0); labels are cycle notations.
    """
    if degree < 0:
        raise ParseError(f"degree must be non-negative, got {degree}")
    limit = default_max_order() if max_order is None else max_order
    gens = [parse_cycles(g, degree) for g in generators]
    ident = np.arange(degree)
    found = {ident.tobytes(): 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g[x]
            key = y.tobytes()
            if key not in found:
                found[key] = len(elems)
                elems.append(y)
                if len(elems) > limit:
                    raise OrderLimitExceeded(len(elems), limit, "permutation closure")
                queue.append(y)
    perms = np.array(elems, dtype=np.int64).reshape(len(elems), degree)
    labels = [format_cycles(p) for p in perms]
    gen_idx = {f"g{i + 1}": found[g.tobytes()] for i, g in enumerate(gens)}
    return make_group(
        permutation_table(perms),
        labels,
        name or f"<{', '.join(generators)}>",
        meta={"generators": gen_idx, "degree": degree},
        check_associativity=check_associativity,
        max_order=limit,
    )
