"""Parsing of polynomial strings such as ``x^2 - t*x - 1`` or ``theta^2 + 1``.

Expressions are parsed with sympy and reduced modulo p; integer constants are
read in the prime field.  Variables: ``x`` (the matrix variable), ``theta``,
``t`` (= t1), ``t1``..``t9``.
"""

from __future__ import annotations

import re

import sympy

from .errors import ConfigError
from .fields import GF
from .poly import APoly, MPoly

_T_NAMES = {"t": 0, **{f"t{i}": i - 1 for i in range(1, 10)}}


def _to_sympy(text: str):
    text = text.replace("^", "**").replace("θ", "theta")
    names = {n: sympy.Symbol(n) for n in ["x", "theta", *_T_NAMES]}
    try:
        return sympy.parse_expr(text, local_dict=names), names
    except Exception as exc:  # sympy raises a variety of parse errors
        raise ConfigError(f"cannot parse polynomial {text!r}: {exc}") from None


def count_t_vars(text: str) -> int:
    """Number of t-variables needed to hold the expression."""
    n = 0
    for m in re.finditer(r"\bt(\d?)\b", text):
        n = max(n, int(m.group(1) or 1))
    return n


def parse_x_poly(text: str, F: GF, nvars: int = None):
    """Polynomial in x with F_q[t_1..t_s] coefficients, as a list low -> high."""
    expr, names = _to_sympy(text)
    if nvars is None:
        nvars = max(1, count_t_vars(text))
    tsyms = [names["t"] if i == 0 else names[f"t{i + 1}"] for i in range(nvars)]
    expr = expr.subs(names["t1"], names["t"])
    gens = [names["x"]] + tsyms
    try:
        P = sympy.Poly(sympy.expand(expr), *gens)
    except sympy.PolynomialError as exc:
        raise ConfigError(f"not a polynomial: {text!r}") from exc
    deg = P.degree(names["x"]) if P.as_expr().has(names["x"]) else 0
    coeffs = [MPoly(F, nvars) for _ in range(deg + 1)]
    for monom, c in P.terms():
        if not c.is_integer:
            raise ConfigError(f"non-integer coefficient {c} in {text!r}")
        k = monom[0]
        coeffs[k] = coeffs[k] + MPoly(F, nvars, {tuple(monom[1:]): int(c) % F.p})
    return coeffs


def parse_apoly(text: str, F: GF) -> APoly:
    """A polynomial in one variable, written in ``theta`` or (for k[t]) in ``t``; not both."""
    expr, names = _to_sympy(text)
    if expr.has(names["t"]):
        if expr.has(names["theta"]):
            raise ConfigError(f"mixes theta and t: {text!r}")
        expr = expr.subs(names["t"], names["theta"])
    try:
        P = sympy.Poly(sympy.expand(expr), names["theta"])
    except sympy.PolynomialError as exc:
        raise ConfigError(f"not a polynomial in theta: {text!r}") from exc
    c = [0] * (P.degree() + 1 if P.degree() >= 0 else 0)
    for (k,), v in P.terms():
        if v == 0:
            continue
        if not v.is_integer:
            raise ConfigError(f"non-integer coefficient {v} in {text!r}")
        c[k] = int(v) % F.p
    return APoly(F, c)
