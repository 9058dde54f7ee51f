"""Continuous t-norms on exact rationals.

The three classical t-norms are built in; arbitrary ones can be wrapped as
custom evaluators. All arithmetic is exact (fractions.Fraction), so the
axiom checks below decide identities rather than approximate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, UnknownNameError
from .verdict import Verdict, refuted, satisfied

ZERO = Fraction(0)
ONE = Fraction(1)

CLI_NAMES = {"min": "minimum", "prod": "product", "luk": "lukasiewicz"}


@dataclass(frozen=True)
class TNorm:
    """A binary operation on [0,1] meant to satisfy the t-norm axioms.

    lipschitz is the constant used by the sampled continuity check; the
    built-ins are all 1-Lipschitz in each argument.
    """

    kind: str
    fn: Callable[[Fraction, Fraction], Fraction] | None = None
    lipschitz: Fraction = ONE

    def __post_init__(self) -> None:
        if self.kind == "custom" and self.fn is None:
            raise DomainError("custom t-norm requires an evaluator")
        if self.kind not in ("minimum", "product", "lukasiewicz", "custom"):
            raise DomainError(f"unknown t-norm kind {self.kind!r}")


MINIMUM = TNorm("minimum")
PRODUCT = TNorm("product")
LUKASIEWICZ = TNorm("lukasiewicz")


def custom(fn: Callable[[Fraction, Fraction], Fraction],
           lipschitz: Fraction | int = 1) -> TNorm:
    return TNorm("custom", fn=fn, lipschitz=Fraction(lipschitz))


def by_name(name: str) -> TNorm:
    """Resolve the short names used in configs and on the command line."""
    if name not in CLI_NAMES:
        raise UnknownNameError(name, tuple(CLI_NAMES))
    return {"min": MINIMUM, "prod": PRODUCT, "luk": LUKASIEWICZ}[name]


def raw_fn(op: TNorm) -> Callable[[Fraction, Fraction], Fraction]:
    """Evaluator without argument validation, for pre-validated hot loops."""
    if op.kind == "minimum":
        return lambda a, b: a if a <= b else b
    if op.kind == "product":
        return lambda a, b: a * b
    if op.kind == "lukasiewicz":
        def luk(a: Fraction, b: Fraction) -> Fraction:
            s = a + b - 1
            return s if s > 0 else ZERO
        return luk
    return op.fn  # type: ignore[return-value]


def apply(op: TNorm, a: Fraction, b: Fraction) -> Fraction:
    """Evaluate a * b, checking that both arguments lie in [0,1]."""
    a = Fraction(a)
    b = Fraction(b)
    if not (ZERO <= a <= ONE and ZERO <= b <= ONE):
        raise DomainError(f"t-norm arguments must lie in [0,1], got {a}, {b}")
    v = raw_fn(op)(a, b)
    if not ZERO <= v <= ONE:
        raise DomainError(f"t-norm evaluator left [0,1]: {op.kind}({a},{b}) = {v}")
    return v


def _grid(step: Fraction) -> list[Fraction]:
    pts = []
    k = 0
    while True:
        v = k * step
        if v >= 1:
            break
        pts.append(v)
        k += 1
    pts.append(ONE)
    return pts


def verify_axioms(op: TNorm, grid_step: Fraction) -> Verdict:
    """Exhaustively check the t-norm axioms on the grid {0, s, 2s, ..., 1}.

    Identity, commutativity, associativity and monotonicity are decided
    exactly on the grid. Continuity is surrogated by a sampled Lipschitz
    bound |op(a,b) - op(a',b)| <= C * |a - a'| on adjacent grid points.
    """
    grid_step = Fraction(grid_step)
    if not ZERO < grid_step <= Fraction(1, 2):
        raise DomainError(f"grid_step must lie in (0, 1/2], got {grid_step}")
    g = _grid(grid_step)
    f = raw_fn(op)
    checks = 0

    # identity, scanned from 1 downward so a broken unit reports a=1 first
    for a in reversed(g):
        checks += 1
        v = f(a, ONE)
        if v != a:
            return refuted({"axiom": "identity", "a": a, "b": ONE,
                            "got": v, "expected": a})

    tab = [[f(a, b) for b in g] for a in g]
    n = len(g)

    for i in range(n):
        for j in range(i + 1, n):
            checks += 1
            if tab[i][j] != tab[j][i]:
                return refuted({"axiom": "commutativity", "a": g[i], "b": g[j],
                                "lhs": tab[i][j], "rhs": tab[j][i]})

    # monotonicity in the second argument over adjacent grid points; with
    # commutativity established this covers both arguments
    for i in range(n):
        row = tab[i]
        for j in range(n - 1):
            checks += 1
            if row[j] > row[j + 1]:
                return refuted({"axiom": "monotonicity", "a": g[i],
                                "b": g[j], "c": g[j + 1],
                                "lhs": row[j], "rhs": row[j + 1]})

    c = op.lipschitz
    for i in range(n - 1):
        da = g[i + 1] - g[i]
        for j in range(n):
            checks += 1
            if abs(tab[i + 1][j] - tab[i][j]) > c * da:
                return refuted({"axiom": "lipschitz", "a": g[i], "a2": g[i + 1],
                                "b": g[j], "bound": c * da,
                                "gap": abs(tab[i + 1][j] - tab[i][j])})

    for i in range(n):
        for j in range(n):
            ab = tab[i][j]
            for k in range(n):
                checks += 1
                # grid closure: ab and tab[j][k] are valid inputs in [0,1]
                if f(ab, g[k]) != f(g[i], tab[j][k]):
                    return refuted({"axiom": "associativity",
                                    "a": g[i], "b": g[j], "c": g[k],
                                    "lhs": f(ab, g[k]),
                                    "rhs": f(g[i], tab[j][k])})

    return satisfied(certificate={"grid_points": n, "checks": checks,
                                  "violations": 0})
