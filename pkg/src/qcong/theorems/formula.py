"""Exact evaluation of progression formulas such as ``4*p**(2*g+1)*(p*n+j) + (7*p**(2*g+2)-1)/6``.

Formulas are parsed with :mod:`ast` and evaluated over :class:`fractions.Fraction`.
Every ``/`` must divide exactly; a remainder is an :class:`InstantiationError`.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from ..errors import InstantiationError

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
}


@lru_cache(maxsize=None)
def _parse(text: str) -> ast.expr:
    try:
        return ast.parse(text, mode="eval").body
    except SyntaxError as exc:
        raise InstantiationError(f"bad formula {text!r}: {exc}") from None


def _eval(node: ast.expr, env: Mapping[str, int], text: str) -> Fraction:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise InstantiationError(f"formula {text!r} uses unbound name {node.id!r}")
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env, text)
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, env, text)
        right = _eval(node.right, env, text)
        if type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node.op, ast.Div):
            q = left / right
            if q.denominator != 1:
                raise InstantiationError(f"{left} is not divisible by {right} in {text!r}")
            return q
        if isinstance(node.op, ast.Pow):
            if right.denominator != 1 or right < 0:
                raise InstantiationError(f"non-natural exponent {right} in {text!r}")
            return left ** int(right)
    raise InstantiationError(f"unsupported syntax in formula {text!r}")


def evaluate(text: str, env: Mapping[str, int]) -> int:
    value = _eval(_parse(text), env, text)
    if value.denominator != 1:
        raise InstantiationError(f"{text!r} is not an integer for {dict(env)}")
    return int(value)


def linear_in_n(text: str, env: Mapping[str, int]) -> tuple[int, int]:
    """Flatten a formula that is linear in ``n`` to ``(A, B)`` with value ``A*n + B``."""
    values = [evaluate(text, {**env, "n": n}) for n in (0, 1, 2)]
    b = values[0]
    a = values[1] - b
    if values[2] != 2 * a + b:
        raise InstantiationError(f"{text!r} is not linear in n")
    return a, b
