"""Parametric Laurent term tables and the y-side identities they tabulate.

For both families the Laplacian charpoly, pushed through x = y + 2 + 1/y and
cleared of denominators, satisfies

    y^n * (y^2 - 1)^3 * phi|_{x=y+2+1/y}  +  f(n; y)  =  (term table sum)

with n the vertex count and f the fixed boundary polynomial below.  The
tables live in data files (one term per line: coefficient, parity form,
exponent form, all affine in the family parameters) and are treated as data
under test: the verifiers compute the left side independently, from both the
matrix and the recurrence charpoly routes, and report any exponent where the
instantiated table disagrees.  A table mismatch is reported, never patched.

The lowest-exponent term of an instantiated table is what pins down the
family parameters from the spectrum, which is why lowest_term gets dedicated
helpers here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graphs import dumbbell_graph, theta_graph
from .laplacian import charpoly, laplacian
from .polynomials import IntPoly, LaurentPoly, substitute_y
from .recurrences import dumbbell_charpoly_rec, theta_charpoly_rec


@dataclass(frozen=True)
class AffineForm:
    """Integer affine expression  const + sum(coef[sym] * sym)."""

    const: int
    coefs: tuple[tuple[str, int], ...]  # (symbol, coefficient), symbol order fixed

    def evaluate(self, values: dict[str, int]) -> int:
        return self.const + sum(c * values[s] for s, c in self.coefs)

    def __str__(self) -> str:
        parts = []
        for s, c in self.coefs:
            if c:
                parts.append(f"{c:+d}{s}" if abs(c) != 1 else (f"+{s}" if c > 0 else f"-{s}"))
        if self.const or not parts:
            parts.append(f"{self.const:+d}")
        joined = "".join(parts)
        return joined[1:] if joined.startswith("+") else joined


def parse_affine(text: str, symbols: tuple[str, ...]) -> AffineForm:
    expr = text.replace(" ", "")
    if not expr:
        raise ValueError("empty affine form")
    if not expr.startswith(("+", "-")):
        expr = "+" + expr
    const = 0
    coefs = dict.fromkeys(symbols, 0)
    pos = 0
    for m in re.finditer(r"([+-])(\d*)([A-Za-z]?)", expr):
        if m.start() != pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse affine form {text!r}")
        pos = m.end()
        val = int(m.group(2) or 1) * (1 if m.group(1) == "+" else -1)
        sym = m.group(3)
        if sym:
            if sym not in coefs:
                raise ValueError(f"unknown symbol {sym!r} in {text!r}")
            coefs[sym] += val
        else:
            const += val
    if pos != len(expr):
        raise ValueError(f"cannot parse affine form {text!r}")
    return AffineForm(const, tuple((s, coefs[s]) for s in symbols))


@dataclass(frozen=True)
class TableTerm:
    coeff: int
    parity: AffineForm
    exponent: AffineForm


@dataclass(frozen=True)
class TermTable:
    symbols: tuple[str, ...]
    terms: tuple[TableTerm, ...]

    def instantiate(self, **values: int) -> LaurentPoly:
        """Sum the terms at integer parameter values; colliding exponents
        accumulate, which is how parameter coincidences merge terms."""
        if set(values) != set(self.symbols):
            raise ValueError(f"expected values for {self.symbols}, got {sorted(values)}")
        acc: dict[int, int] = {}
        for term in self.terms:
            e = term.exponent.evaluate(values)
            c = term.coeff * (-1) ** term.parity.evaluate(values)
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)


def _parse_table(text: str) -> TermTable:
    symbols: tuple[str, ...] | None = None
    terms: list[TableTerm] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("symbols:"):
            symbols = tuple(line.split(":", 1)[1].split())
            continue
        if symbols is None:
            raise ValueError(f"line {lineno}: term before symbols header")
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 3 fields, got {len(fields)}")
        terms.append(TableTerm(
            coeff=int(fields[0]),
            parity=parse_affine(fields[1], symbols),
            exponent=parse_affine(fields[2], symbols),
        ))
    if symbols is None or not terms:
        raise ValueError("empty term table")
    return TermTable(symbols, tuple(terms))


@lru_cache(maxsize=None)
def load_table(name: str) -> TermTable:
    text = resources.files("lapspec.data").joinpath(name).read_text()
    return _parse_table(text)


def dumbbell_table() -> TermTable:
    return load_table("dumbbell_terms.txt")


def theta_table() -> TermTable:
    return load_table("theta_terms.txt")


def correction_poly(n: int) -> LaurentPoly:
    """The fixed boundary polynomial f(n; y) added to the shifted charpoly."""
    return LaurentPoly([
        (0, 1), (1, -2), (2, -3), (3, 4), (4, 4),
        (2 * n + 2, -4), (2 * n + 3, -4), (2 * n + 4, 3),
        (2 * n + 5, 2), (2 * n + 6, -1),
    ])


_UNIT_CUBE = (LaurentPoly.monomial(2) - 1) \
    * (LaurentPoly.monomial(2) - 1) * (LaurentPoly.monomial(2) - 1)


def identity_lhs(phi: IntPoly, n: int) -> LaurentPoly:
    """y^n (y^2-1)^3 phi|_{x=y+2+1/y} + f(n; y) for a degree-n charpoly."""
    if phi.degree != n:
        raise ValueError(f"charpoly degree {phi.degree} does not match n={n}")
    return substitute_y(phi).shift(n) * _UNIT_CUBE + correction_poly(n)


def _audit(lhs_matrix: LaurentPoly, lhs_rec: LaurentPoly, table: LaurentPoly) -> dict:
    diffs = []
    exps = sorted(set(e for e, _ in lhs_matrix.items()) | set(e for e, _ in table.items()))
    for e in exps:
        if lhs_matrix.coeff(e) != table.coeff(e):
            diffs.append({"exponent": e,
                          "lhs": lhs_matrix.coeff(e),
                          "table": table.coeff(e)})
    return {
        "routes_agree": lhs_matrix == lhs_rec,
        "table_matches": not diffs,
        "diffs": diffs,
    }


def audit_dumbbell_identity(p: int, k: int, q: int) -> dict:
    """One grid point of the dumbbell y-side identity: computes the LHS from
    the matrix and recurrence routes and compares the instantiated table."""
    n = p + k + q
    lhs_matrix = identity_lhs(charpoly(laplacian(dumbbell_graph(p, k, q))), n)
    lhs_rec = identity_lhs(dumbbell_charpoly_rec(p, k, q), n)
    result = _audit(lhs_matrix, lhs_rec, dumbbell_table().instantiate(p=p, k=k, q=q))
    result["params"] = [p, k, q]
    return result


def audit_theta_identity(r: int, s: int, t: int) -> dict:
    """One grid point of the theta y-side identity, same contract."""
    n = r + s + t + 2
    lhs_matrix = identity_lhs(charpoly(laplacian(theta_graph(r, s, t))), n)
    lhs_rec = identity_lhs(theta_charpoly_rec(r, s, t), n)
    result = _audit(lhs_matrix, lhs_rec, theta_table().instantiate(r=r, s=s, t=t))
    result["params"] = [r, s, t]
    return result


def dumbbell_table_lowest_term(p: int, k: int, q: int) -> tuple[int, int]:
    return dumbbell_table().instantiate(p=p, k=k, q=q).lowest_term()


def theta_table_lowest_term(r: int, s: int, t: int) -> tuple[int, int]:
    return theta_table().instantiate(r=r, s=s, t=t).lowest_term()
