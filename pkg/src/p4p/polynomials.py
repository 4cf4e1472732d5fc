"""Sparse integer polynomials in the twelve invariant coordinates.

The coefficient listing in ``data/coefficients.txt`` is the ground truth for
the quadratic coefficients. This module parses it into monomial lists,
evaluates those lists term by term (the slow reference path), and factors
them into Horner-style evaluation graphs whose nodes all have the form
``var * child0 + child1``. The graphs are emitted as straight-line Python in
``p4p._kernels`` (see ``tools/generate_kernels.py``).
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from importlib import resources

VARIABLES: tuple[str, ...] = (
    "a0", "a1", "a2", "b0", "b1", "b2", "c0", "c1", "c2", "d0", "d1", "d2",
)
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_TERM_RE = re.compile(r"([+-]?)(\d*)((?:[abcd][0-2](?:\^\d+)?)+)")
_FACTOR_RE = re.compile(r"([abcd][0-2])(?:\^(\d+))?")
_HEADER_RE = re.compile(r"^(X\d\d)\s*=\s*(.*)$")

Exponents = tuple[int, ...]


class Polynomial:
    """Integer-coefficient polynomial stored as ``{exponent vector: coefficient}``.

    Exponent vectors are ordered like :data:`VARIABLES`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponents, int]):
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Polynomial({len(self.terms)} terms)"

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def evaluate(self, values):
        """Sum every monomial directly.

        ``values`` is either a mapping from variable name to value or a
        sequence in :data:`VARIABLES` order. Values may be ints, Fractions,
        floats or numpy arrays (elementwise).
        """
        vals = _as_sequence(values)
        total = 0
        for exps, coef in self.terms.items():
            term = coef
            for var, e in enumerate(exps):
                if e:
                    term = term * vals[var] ** e
            total = total + term
        return total

    def abs_evaluate(self, values):
        """Sum of monomial magnitudes; the natural scale for rounding error."""
        vals = _as_sequence(values)
        total = 0
        for exps, coef in self.terms.items():
            term = abs(coef)
            for var, e in enumerate(exps):
                if e:
                    term = term * abs(vals[var]) ** e
            total = total + term
        return total


def _as_sequence(values) -> Sequence:
    if isinstance(values, Mapping):
        return [values[name] for name in VARIABLES]
    if len(values) != len(VARIABLES):
        raise ValueError(f"expected {len(VARIABLES)} values, got {len(values)}")
    return values


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``±k var^e var ...`` terms concatenated without separators."""
    compact = "".join(text.split())
    terms: dict[Exponents, int] = {}
    pos = 0
    for m in _TERM_RE.finditer(compact):
        if m.start() != pos:
            raise ValueError(f"unparsable text at offset {pos}: {compact[pos:pos + 20]!r}")
        pos = m.end()
        sign, factor, monomial = m.groups()
        coef = int(factor) if factor else 1
        if sign == "-":
            coef = -coef
        exps = [0] * len(VARIABLES)
        for var, power in _FACTOR_RE.findall(monomial):
            exps[_VAR_INDEX[var]] += int(power) if power else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coef
    if pos != len(compact):
        raise ValueError(f"unparsable text at offset {pos}: {compact[pos:pos + 20]!r}")
    return Polynomial(terms)


def read_coefficient_text(path=None) -> dict[str, str]:
    """Return the raw text of each ``Xij`` block, keyed by name."""
    if path is None:
        raw = resources.files("p4p").joinpath("data/coefficients.txt").read_text()
    else:
        with open(path) as fh:
            raw = fh.read()
    blocks: dict[str, str] = {}
    current = None
    for line in raw.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            current = None if not line else current
            continue
        m = _HEADER_RE.match(line)
        if m:
            current = m.group(1)
            if current in blocks:
                raise ValueError(f"duplicate block {current}")
            blocks[current] = m.group(2)
        elif current is None:
            raise ValueError(f"continuation line outside a block: {line[:30]!r}")
        else:
            blocks[current] += line
    return blocks


def load_coefficients(path=None) -> dict[str, Polynomial]:
    return {name: parse_polynomial(text) for name, text in read_coefficient_text(path).items()}


def transpose_text(text: str, i: int, j: int) -> str:
    """Swap variable indices ``i`` and ``j`` textually (``b0`` <-> ``b1`` etc.).

    Exponents such as ``^2`` are untouched because only digits directly
    after a variable letter are rewritten.
    """
    swap = {str(i): str(j), str(j): str(i)}
    return re.sub(r"([abcd])([0-2])", lambda m: m.group(1) + swap.get(m.group(2), m.group(2)), text)


# -- Horner factoring ---------------------------------------------------------


@dataclass
class HornerNode:
    """``VARIABLES[var] * mul + add``; children are nodes or int constants."""

    var: int
    mul: "HornerNode | int"
    add: "HornerNode | int"

    def evaluate(self, vals):
        m = self.mul if isinstance(self.mul, int) else self.mul.evaluate(vals)
        a = self.add if isinstance(self.add, int) else self.add.evaluate(vals)
        return vals[self.var] * m + a


def horner(poly: Polynomial) -> "HornerNode | int":
    """Greedy multivariate Horner factoring.

    At each step the variable occurring in the most monomials is pulled out:
    ``p = v * q + r`` where ``q`` collects the monomials containing ``v``
    (with its exponent lowered by one) and ``r`` the rest.
    """
    return _horner(dict(poly.terms))


def _horner(terms: dict[Exponents, int]) -> "HornerNode | int":
    if not terms:
        return 0
    zero = (0,) * len(VARIABLES)
    if len(terms) == 1 and zero in terms:
        return terms[zero]
    counts = [0] * len(VARIABLES)
    for exps in terms:
        for v, e in enumerate(exps):
            if e:
                counts[v] += 1
    var = max(range(len(VARIABLES)), key=lambda v: (counts[v], -v))
    mul: dict[Exponents, int] = {}
    rest: dict[Exponents, int] = {}
    for exps, coef in terms.items():
        if exps[var]:
            lowered = list(exps)
            lowered[var] -= 1
            mul[tuple(lowered)] = coef
        else:
            rest[exps] = coef
    return HornerNode(var, _horner(mul), _horner(rest))


def count_nodes(node: "HornerNode | int") -> int:
    if isinstance(node, int):
        return 0
    return 1 + count_nodes(node.mul) + count_nodes(node.add)


@dataclass
class _Emitter:
    lines: list[str] = field(default_factory=list)
    counter: int = 0

    def emit(self, node: "HornerNode | int") -> str:
        if isinstance(node, int):
            return str(node)
        mul = self.emit(node.mul)
        add = self.emit(node.add)
        var = VARIABLES[node.var]
        if mul == "1":
            expr = var
        elif mul == "-1":
            expr = f"-{var}"
        else:
            expr = f"{var} * {mul}"
        if add != "0":
            expr = f"{expr} - {add[1:]}" if add.startswith("-") else f"{expr} + {add}"
        name = f"t{self.counter}"
        self.counter += 1
        self.lines.append(f"    {name} = {expr}")
        return name


def emit_row_function(name: str, polys: Sequence[Polynomial], doc: str) -> tuple[str, list[int]]:
    """Straight-line Python source evaluating ``polys``; returns (source, node counts)."""
    em = _Emitter()
    outs = []
    counts = []
    for poly in polys:
        tree = horner(poly)
        counts.append(count_nodes(tree))
        outs.append(em.emit(tree))
    args = ", ".join(VARIABLES)
    src = [f"def {name}({args}):", f'    """{doc}"""', *em.lines, f"    return {', '.join(outs)}", ""]
    return "\n".join(src), counts


def generate_kernel_module(path=None) -> str:
    """Source of ``p4p/_kernels.py``, regenerated from the coefficient listing."""
    coeffs = load_coefficients(path)
    row0, n0 = emit_row_function(
        "row0", [coeffs["X00"], coeffs["X01"], coeffs["X02"]],
        "Return (X00, X01, X02) for the given invariant coordinates.",
    )
    row3, n3 = emit_row_function(
        "row3", [coeffs["X30"], coeffs["X31"], coeffs["X32"]],
        "Return (X30, X31, X32) for the given invariant coordinates.",
    )
    header = [
        "# Generated by tools/generate_kernels.py from data/coefficients.txt. Do not edit.",
        "# Each assignment is one `var * child0 + child1` node of a Horner evaluation graph.",
        "",
        "NODE_COUNTS = {",
        *(f'    "X0{j}": {c},' for j, c in enumerate(n0)),
        *(f'    "X3{j}": {c},' for j, c in enumerate(n3)),
        "}",
        "",
        "",
    ]
    return "\n".join(header) + row0 + "\n\n" + row3
