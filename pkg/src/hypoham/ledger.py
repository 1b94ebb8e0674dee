"""Bounds ledger: the named graph-theoretic constants this project tracks,
each with (lower, upper) integer bounds, provenance prose, and, where an
upper bound rests on arithmetic over a construction, a derivation chain that
is re-evaluated rather than trusted.

Tracked constants (ASCII spellings of the usual symbols):
  h, h4, h5        order of the smallest planar hypohamiltonian graph
                   (unrestricted girth, girth 4, girth 5)
  alpha0, alpha0_4 same quantity in the other common notation
  alpha1, alpha1_4 order of the smallest planar almost hypohamiltonian graph
  C1_3, C2_3       order of the smallest planar 3-connected graph in which
                   every vertex (every pair of vertices) is avoided by some
                   longest cycle
  P1_3, P2_3       the longest-path analogues
  n0               least n0 such that planar hypohamiltonian graphs exist
                   for every order n >= n0
  cubic_min        least number of cubic vertices over all planar
                   hypohamiltonian graphs
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass, replace
from typing import Optional


class LedgerError(ValueError):
    pass


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
}


def evaluate_chain(expression: str) -> int:
    """Evaluate an integer arithmetic expression (+ - * // and parentheses
    only). Used to re-check every stored derivation chain."""

    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int) and not isinstance(node.value, bool):
                return node.value
            raise LedgerError(f"non-integer constant {node.value!r}")
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise LedgerError(f"disallowed syntax in chain: {ast.dump(node)}")

    try:
        tree = ast.parse(expression, mode="eval")
    except SyntaxError as exc:
        raise LedgerError(f"bad chain expression {expression!r}: {exc}") from exc
    return ev(tree)


@dataclass(frozen=True)
class Bound:
    """One ledger row. `chain` is an arithmetic expression that must
    re-evaluate to `upper`; `witness` names the verified artifact justifying
    the upper bound (a fixture name or construction description)."""

    name: str
    lower: Optional[int]
    upper: Optional[int]
    provenance: str
    chain: Optional[str] = None
    witness: Optional[str] = None

    def validate(self) -> None:
        if (self.lower is not None and self.upper is not None
                and self.lower > self.upper):
            raise LedgerError(
                f"{self.name}: lower {self.lower} > upper {self.upper}")
        if self.chain is not None:
            if self.upper is None:
                raise LedgerError(f"{self.name}: chain without an upper bound")
            got = evaluate_chain(self.chain)
            if got != self.upper:
                raise LedgerError(
                    f"{self.name}: chain {self.chain!r} evaluates to {got}, "
                    f"stored upper is {self.upper}")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lower": self.lower,
            "upper": self.upper,
            "provenance": self.provenance,
            "chain": self.chain,
            "witness": self.witness,
        }


class BoundsLedger:
    """Ordered collection of Bound rows with whole-ledger validation."""

    def __init__(self, bounds: list[Bound]):
        self._by_name: dict[str, Bound] = {}
        for b in bounds:
            if b.name in self._by_name:
                raise LedgerError(f"duplicate bound {b.name}")
            self._by_name[b.name] = b
        self.validate()

    def __iter__(self):
        return iter(self._by_name.values())

    def __getitem__(self, name: str) -> Bound:
        return self._by_name[name]

    def names(self) -> list[str]:
        return list(self._by_name)

    def validate(self) -> None:
        for b in self._by_name.values():
            b.validate()

    def with_upper(self, name: str, upper: int, witness: str,
                   chain: Optional[str] = None,
                   witness_order: Optional[int] = None) -> "BoundsLedger":
        """New ledger with one upper bound replaced. The witness order, when
        given, must justify the bound: for order-of-smallest constants an
        upper bound below the witness's own order is not a deduction the
        witness supports."""
        if name not in self._by_name:
            raise LedgerError(f"unknown bound {name}")
        if witness_order is not None and upper < witness_order:
            raise LedgerError(
                f"{name}: upper bound {upper} lies below the verified "
                f"witness order {witness_order}")
        old = self._by_name[name]
        new = replace(old, upper=upper, witness=witness, chain=chain)
        new.validate()
        bounds = [new if b.name == name else b for b in self._by_name.values()]
        return BoundsLedger(bounds)

    def to_dict(self) -> dict:
        return {"bounds": [b.to_dict() for b in self._by_name.values()]}

    @classmethod
    def from_dict(cls, payload: dict) -> "BoundsLedger":
        return cls([Bound(**row) for row in payload["bounds"]])


def baseline_ledger() -> BoundsLedger:
    """State of the tracked bounds before the improvements this package
    reproduces: the 40-vertex era for planar hypohamiltonian orders."""
    return BoundsLedger([
        Bound("h", 23, 40, "previously known: 23 <= h <= 40"),
        Bound("h4", 27, 40, "previously known: 27 <= h4 <= 40"),
        Bound("h5", 45, 45, "previously known exactly: h5 = 45"),
        Bound("alpha0", 23, 40, "same quantity as h, other notation"),
        Bound("alpha0_4", 27, 40, "same quantity as h4, other notation"),
        Bound("alpha1", 22, 31,
              "previously known: 31-vertex planar almost hypohamiltonian "
              "witness; lower bound 22"),
        Bound("alpha1_4", 26, 31,
              "previously known: the 31-vertex witness has girth 4; "
              "lower bound 26"),
        Bound("C1_3", None, None, "no prior value tracked here"),
        Bound("C2_3", None, None, "no prior value tracked here"),
        Bound("P1_3", None, None, "no prior value tracked here"),
        Bound("P2_3", None, None, "no prior value tracked here"),
        Bound("n0", None, 42,
              "previously known: planar hypohamiltonian graphs exist for "
              "every n >= 42"),
        Bound("cubic_min", 4, 30,
              "previously known: between 4 and 30 cubic vertices"),
    ])


# Derivation chains for the composition bounds. All three rest on a verified
# 34-vertex planar hypohamiltonian graph together with two classical
# ingredients: the 70-vertex planar cubic hypohamiltonian graph with 105
# edges (inserted into, then contracted away) and K4.
CHAIN_C2_3 = "(34 - 1) * 70 - 105"                      # 2310 - 105 = 2205
CHAIN_P1_3 = "4 * (34 - 1)"                             # 132
CHAIN_P2_3 = "(4 * (70 - 1)) * (34 - 1) - (4 * (105 - 3) + 6)"  # 9108 - 414


def improved_ledger(witness_34: str = "ph34_a",
                    witness_order: int = 34,
                    cubic_count: int = 26,
                    witness_40_chain: str = "build_order(40..48)")\
        -> BoundsLedger:
    """The ledger after applying the improvements, every upper bound tied to
    a named verified artifact and every arithmetic chain re-evaluated."""
    led = baseline_ledger()
    led = led.with_upper("h", witness_order, witness_34,
                         witness_order=witness_order)
    led = led.with_upper("h4", witness_order, witness_34,
                         witness_order=witness_order)
    led = led.with_upper("alpha0", witness_order, witness_34,
                         witness_order=witness_order)
    led = led.with_upper("alpha0_4", witness_order, witness_34,
                         witness_order=witness_order)
    led = led.with_upper("C1_3", witness_order, witness_34,
                         witness_order=witness_order)
    led = led.with_upper("C2_3", evaluate_chain(CHAIN_C2_3),
                         f"insert {witness_34} into the 70-vertex cubic "
                         "graph, contract its 105 edges", chain=CHAIN_C2_3)
    led = led.with_upper("P1_3", evaluate_chain(CHAIN_P1_3),
                         f"insert {witness_34} into K4", chain=CHAIN_P1_3)
    led = led.with_upper("P2_3", evaluate_chain(CHAIN_P2_3),
                         f"insert the 70-vertex cubic graph into K4, insert "
                         f"{witness_34} into the result, contract",
                         chain=CHAIN_P2_3)
    led = led.with_upper("n0", 40, witness_40_chain)
    led = led.with_upper("cubic_min", cubic_count, witness_34)
    return led
