"""Group constructor expressions.

Grammar::

    spec   := "file:" PATH | "x(" spec "," spec ")" | FAMILY args
    args   := DIGITS | "(" INT ("," INT)* ")"

Family names: C (cyclic), D (dihedral, ``D4`` has order 8), Q (generalized
quaternion, by order: ``Q8``, ``Q16``), S, A, EA, Heis, SL, SNNC and TB
(type-B groups from ``(p, alpha, beta, rho, sigma)``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from . import families as fam
from .core import CayleyGroup, from_cayley_table, prime_power
from .errors import BadParameter, BadShape, GroupGraphsError, ParseError
from .permutations import from_permutations

_SHORT = {
    "SNNC": "snnc", "Heis": "heisenberg", "EA": "elementary_abelian",
    "SL": "special_linear", "TB": "type_b",
    "C": "cyclic", "D": "dihedral", "Q": "generalized_quaternion",
    "S": "symmetric", "A": "alternating",
}
_ARITY = {
    "cyclic": 1, "dihedral": 1, "generalized_quaternion": 1, "symmetric": 1,
    "alternating": 1, "elementary_abelian": 2, "heisenberg": 1,
    "special_linear": 2, "snnc": 3, "type_b": 5,
}
_NAME = re.compile("|".join(sorted(_SHORT, key=len, reverse=True)))


@dataclass(frozen=True)
class GroupSpec:
    family: str
    args: tuple[int, ...] = ()
    factors: tuple["GroupSpec", ...] = ()
    path: str | None = None

    def __str__(self) -> str:
        if self.family == "file":
            return f"file:{self.path}"
        if self.family == "direct_product":
            return f"x({self.factors[0]},{self.factors[1]})"
        short = next(k for k, v in _SHORT.items() if v == self.family)
        if self.family == "generalized_quaternion":
            return f"Q{2 ** self.args[0]}"
        if len(self.args) == 1:
            return f"{short}{self.args[0]}"
        return f"{short}({','.join(map(str, self.args))})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(f"{msg} in {self.text!r}", self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip()
        if not self.text.startswith(ch, self.pos):
            self.error(f"expected {ch!r}")
        self.pos += len(ch)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def spec(self) -> GroupSpec:
        self.skip()
        t = self.text
        if t.startswith("file:", self.pos):
            m = re.compile(r"[^,()]+").match(t, self.pos + 5)
            if not m:
                self.error("expected a path after 'file:'")
            self.pos = m.end()
            return GroupSpec("file", path=m.group().strip())
        if t.startswith("x(", self.pos):
            self.pos += 2
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return GroupSpec("direct_product", factors=(a, b))
        m = _NAME.match(t, self.pos)
        if not m:
            self.error("unknown group family")
        self.pos = m.end()
        family = _SHORT[m.group()]
        self.skip()
        if t.startswith("(", self.pos):
            self.pos += 1
            args = [self.integer()]
            while True:
                self.skip()
                if t.startswith(",", self.pos):
                    self.pos += 1
                    args.append(self.integer())
                else:
                    break
            self.expect(")")
        else:
            d = re.compile(r"\d+").match(t, self.pos)
            if not d:
                self.error(f"expected arguments for {m.group()}")
            self.pos = d.end()
            args = [int(d.group())]
        if len(args) != _ARITY[family]:
            raise BadParameter(f"{m.group()} takes {_ARITY[family]} argument(s), got {len(args)}")
        if family == "generalized_quaternion":
            pk = prime_power(args[0])
            if pk is None or pk[0] != 2 or pk[1] < 3:
                raise BadParameter(f"Q{args[0]}: order must be a power of 2 that is at least 8")
            args = [pk[1]]
        spec = GroupSpec(family, tuple(args))
        _check_domain(spec)
        return spec


def _check_domain(spec: GroupSpec) -> None:
    f, a = spec.family, spec.args
    if f == "snnc":
        fam.SnncParams(*a)
    elif f == "type_b" and fam.type_b_case(*a) is None:
        raise BadParameter(f"TB{a}: not a listed type-B parameter tuple")


def parse_spec(text: str) -> GroupSpec:
    """Parse a constructor expression such as ``"x(Q8,C3)"`` or ``"SNNC(3,2,1)"``."""
    p = _Parser(text)
    spec = p.spec()
    p.skip()
    if p.pos != len(text):
        p.error("trailing characters")
    return spec


def load_group_file(path, max_order=None) -> CayleyGroup:
    """Read a Cayley-table or permutation-group JSON file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise GroupGraphsError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg}", exc.pos) from None
    name = data.get("name", path.stem)
    if "table" in data:
        return from_cayley_table(data["order"], data["table"], data.get("labels"),
                                 name=name, max_order=max_order)
    if "generators" in data:
        return from_permutations(data["degree"], data["generators"], name=name,
                                 max_order=max_order)
    raise BadShape(f"{path}: expected a 'table' or 'generators' key")


def make_family(spec: GroupSpec | str, max_order=None) -> CayleyGroup:
    """Construct the group described by ``spec``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, a = spec.family, spec.args
    if f == "file":
        return load_group_file(spec.path, max_order=max_order)
    if f == "direct_product":
        A = make_family(spec.factors[0], max_order)
        B = make_family(spec.factors[1], max_order)
        return fam.direct_product(A, B, name=str(spec), max_order=max_order)
    if f == "snnc":
        return fam.make_snnc(fam.SnncParams(*a), max_order=max_order)
    if f == "type_b":
        return fam.make_type_b(*a, max_order=max_order)
    builders = {
        "cyclic": fam.cyclic, "dihedral": fam.dihedral,
        "generalized_quaternion": fam.generalized_quaternion,
        "symmetric": fam.symmetric, "alternating": fam.alternating,
        "elementary_abelian": fam.elementary_abelian, "heisenberg": fam.heisenberg,
        "special_linear": fam.special_linear,
    }
    if f not in builders:
        raise BadParameter(f"unknown family {f!r}")
    G = builders[f](*a, max_order=max_order)
    return G
