"""Integer exponent expressions in the symbol m, evaluated per field degree.

Expressions are written in Python syntax and parsed with :mod:`ast`::

    parse("(2**m + 19)//3")      # exact division, must divide evenly
    parse("-(s - 1)/2")          # modular division in Z/(2^m - 1)

``s`` abbreviates 2**((m+1)//2).  ``//`` is exact-integer division,
``/`` multiplies by the inverse of the divisor modulo 2^m - 1, and powers
must have base 2 with an exact nonnegative exponent.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from math import gcd

from .errors import CatalogError


class Node:
    """Base class.  ``_eval`` returns (value, exact); once a modular division
    has been applied the value is only meaningful modulo the group order."""

    def _eval(self, m: int, order: int) -> tuple[int, bool]:
        raise NotImplementedError

    def uses_modular(self) -> bool:
        return any(c.uses_modular() for c in self.children())

    def children(self):
        return ()


@dataclass(frozen=True)
class Const(Node):
    value: int

    def _eval(self, m, order):
        return self.value, True


@dataclass(frozen=True)
class M(Node):
    def _eval(self, m, order):
        return m, True


@dataclass(frozen=True)
class Neg(Node):
    arg: Node

    def children(self):
        return (self.arg,)

    def _eval(self, m, order):
        v, ex = self.arg._eval(m, order)
        return -v, ex


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node

    def children(self):
        return (self.left, self.right)

    def _eval(self, m, order):
        a, ea = self.left._eval(m, order)
        b, eb = self.right._eval(m, order)
        if self.op == "+":
            v = a + b
        elif self.op == "-":
            v = a - b
        else:
            v = a * b
        exact = ea and eb
        return (v if exact else v % order), exact


@dataclass(frozen=True)
class Pow2(Node):
    exponent: Node

    def children(self):
        return (self.exponent,)

    def _eval(self, m, order):
        k, exact = self.exponent._eval(m, order)
        if not exact:
            raise CatalogError("power-of-two exponent must be an exact integer")
        if k < 0:
            raise CatalogError(f"negative power of two 2^{k} at m={m}")
        return 1 << k, True


@dataclass(frozen=True)
class Div(Node):
    num: Node
    divisor: int
    exact: bool

    def children(self):
        return (self.num,)

    def uses_modular(self):
        return (not self.exact) or self.num.uses_modular()

    def _eval(self, m, order):
        v, ex = self.num._eval(m, order)
        if self.exact:
            if not ex:
                raise CatalogError("exact division of a modular quantity")
            if v % self.divisor:
                raise CatalogError(
                    f"{v} is not divisible by {self.divisor} at m={m}"
                )
            return v // self.divisor, True
        if gcd(self.divisor, order) != 1:
            raise CatalogError(
                f"{self.divisor} is not invertible modulo {order} (m={m})"
            )
        return (v * pow(self.divisor, -1, order)) % order, False


_SIGMA = Pow2(Div(BinOp("+", M(), Const(1)), 2, exact=True))


def _convert(node: ast.AST) -> Node:
    if isinstance(node, ast.Expression):
        return _convert(node.body)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return Const(node.value)
    if isinstance(node, ast.Name):
        if node.id == "m":
            return M()
        if node.id == "s":
            return _SIGMA
        raise CatalogError(f"unknown symbol {node.id!r}")
    if isinstance(node, ast.UnaryOp):
        if isinstance(node.op, ast.USub):
            return Neg(_convert(node.operand))
        if isinstance(node.op, ast.UAdd):
            return _convert(node.operand)
    if isinstance(node, ast.BinOp):
        ops = {ast.Add: "+", ast.Sub: "-", ast.Mult: "*"}
        if type(node.op) in ops:
            return BinOp(ops[type(node.op)], _convert(node.left), _convert(node.right))
        if isinstance(node.op, (ast.Div, ast.FloorDiv)):
            den = node.right
            if not (isinstance(den, ast.Constant) and type(den.value) is int and den.value > 0):
                raise CatalogError("divisor must be a positive integer literal")
            return Div(_convert(node.left), den.value, exact=isinstance(node.op, ast.FloorDiv))
        if isinstance(node.op, ast.Pow):
            base = node.left
            if not (isinstance(base, ast.Constant) and base.value == 2):
                raise CatalogError("only powers of 2 are supported")
            return Pow2(_convert(node.right))
    raise CatalogError(f"unsupported syntax: {ast.dump(node)}")


@dataclass(frozen=True)
class ExponentExpr:
    """A parsed exponent; ``text`` is kept for display and equality."""

    text: str
    node: Node

    def evaluate(self, m: int) -> tuple[int, int | None]:
        """Return (residue mod 2^m - 1, exact integer or None)."""
        order = (1 << m) - 1
        v, exact = self.node._eval(m, order)
        return v % order, (v if exact else None)

    def residue(self, m: int) -> int:
        return self.evaluate(m)[0]

    def shifted(self, delta: int) -> "ExponentExpr":
        op = "+" if delta >= 0 else "-"
        return ExponentExpr(
            f"({self.text}) {op} {abs(delta)}",
            BinOp(op, self.node, Const(abs(delta))),
        )

    def __str__(self):
        return self.text


def parse(text) -> ExponentExpr:
    if isinstance(text, ExponentExpr):
        return text
    if isinstance(text, int):
        return ExponentExpr(str(text), Const(text))
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise CatalogError(f"cannot parse exponent {text!r}: {exc}") from None
    return ExponentExpr(text, _convert(tree))
