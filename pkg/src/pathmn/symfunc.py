"""Sparse exact expansions in the Schur and power-sum bases.

A SymExpansion is a degree-homogeneous linear combination with exact rational
coefficients, keyed by partitions. Schur-basis expansions are closed under
multiplication by a power sum p_r (ribbon additions), which is all the
multiplication the package needs; conversions between the classical power
sums, the path power sums, and the Schur basis live here too.
"""

import json
import math
from fractions import Fraction
from functools import cache

from pathmn.errors import ParseError
from pathmn.partitions import (
    check_composition,
    check_partition,
    enumerate_set_partitions,
    format_partition,
    mult_factorial,
)
from pathmn.ribbons import add_ribbons, tiling_tally

__all__ = [
    "SCHUR",
    "POWER",
    "SymExpansion",
    "mult_by_power",
    "power_to_schur",
    "path_power_in_p",
    "p_in_path_basis",
    "path_power_to_schur",
]

SCHUR = "schur"
POWER = "power"

_SYMBOL = {SCHUR: "s", POWER: "p"}

# Unicode used by the human renderer: a middle dot between coefficient and
# basis element, and a true minus sign between terms.
DOT = "·"
MINUS = "−"


class SymExpansion:
    """Homogeneous expansion in one basis: map partition -> nonzero rational."""

    def __init__(self, basis, degree, terms):
        if basis not in (SCHUR, POWER):
            raise ParseError(f"unknown basis {basis!r}")
        if degree < 0:
            raise ParseError(f"degree must be nonnegative, got {degree}")
        self.basis = basis
        self.degree = degree
        clean = {}
        for lam, c in terms.items():
            lam = check_partition(lam)
            if sum(lam) != degree:
                raise ParseError(f"term {lam} has degree {sum(lam)}, expected {degree}")
            c = Fraction(c)
            if c:
                clean[lam] = c
        self.terms = clean

    def coeff(self, lam) -> Fraction:
        return self.terms.get(tuple(lam), Fraction(0))

    def items(self):
        """Terms in canonical (descending lexicographic) partition order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, SymExpansion)
            and self.basis == other.basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymExpansion(self.basis, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SymExpansion":
        c = Fraction(c)
        return SymExpansion(self.basis, self.degree, {lam: c * v for lam, v in self.terms.items()})

    def _compatible(self, other):
        if not isinstance(other, SymExpansion):
            raise TypeError(f"cannot combine SymExpansion with {type(other).__name__}")
        if self.basis != other.basis or self.degree != other.degree:
            raise ParseError(
                f"incompatible expansions: ({self.basis}, {self.degree})"
                f" vs ({other.basis}, {other.degree})"
            )

    def render(self, long=False, symbol=None) -> str:
        """Human format, e.g. "(5/2)·s[6] − (1/2)·s[5,1]" and "1·s[]"."""
        sym = symbol if symbol is not None else _SYMBOL[self.basis]
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.items():
            mag = abs(c)
            coeff = str(mag) if mag.denominator == 1 else f"({mag})"
            pieces.append((c < 0, f"{coeff}{DOT}{sym}{format_partition(lam)}"))
        if long:
            return "\n".join((MINUS if neg else "") + body for neg, body in pieces)
        out = [(MINUS if pieces[0][0] else "") + pieces[0][1]]
        for neg, body in pieces[1:]:
            out.append(f" {MINUS} " if neg else " + ")
            out.append(body)
        return "".join(out)

    def __repr__(self):
        return f"<SymExpansion {self.basis} deg {self.degree}: {self.render()}>"

    def to_json(self) -> str:
        return json.dumps(
            {
                "basis": self.basis,
                "degree": self.degree,
                "terms": [
                    {
                        "partition": list(lam),
                        "num": str(c.numerator),
                        "den": str(c.denominator),
                    }
                    for lam, c in self.items()
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SymExpansion":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from None
        try:
            terms = {}
            for t in data["terms"]:
                lam = tuple(int(p) for p in t["partition"])
                c = Fraction(int(t["num"]), int(t["den"]))
                terms[lam] = terms.get(lam, 0) + c
            return cls(data["basis"], int(data["degree"]), terms)
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed expansion object: {e}") from None


def mult_by_power(f: SymExpansion, r: int) -> SymExpansion:
    """Multiply a Schur-basis expansion by the power sum p_r (ribbon rule)."""
    if f.basis != SCHUR:
        raise ParseError("mult_by_power needs a Schur-basis expansion")
    if r < 1:
        raise ParseError(f"power-sum index must be >= 1, got {r}")
    out = {}
    for lam, c in f.terms.items():
        for add in add_ribbons(lam, r):
            out[add.result] = out.get(add.result, 0) + add.sign * c
    return SymExpansion(SCHUR, f.degree + r, out)


@cache
def _p_to_schur(mu) -> SymExpansion:
    if not mu:
        return SymExpansion(SCHUR, 0, {(): Fraction(1)})
    return mult_by_power(_p_to_schur(mu[1:]), mu[0])


def power_to_schur(f: SymExpansion) -> SymExpansion:
    """Rewrite a power-basis expansion in the Schur basis, term by term."""
    if f.basis != POWER:
        raise ParseError("power_to_schur needs a power-basis expansion")
    out = SymExpansion(SCHUR, f.degree, {})
    for mu, c in f.terms.items():
        out = out + _p_to_schur(tuple(sorted(mu, reverse=True))).scale(c)
    return out


def path_power_in_p(mu) -> SymExpansion:
    """Path power sum as a combination of classical power sums.

    Sum over set partitions of the positions of mu: each block contributes the
    part-sum, weighted by the (#block - 1)! cyclic orders. The coefficient of
    p_sorted(mu) is 1 and all other indices merge parts of mu.
    """
    mu = check_composition(mu)
    terms = {}
    for pi in enumerate_set_partitions(len(mu)):
        index = tuple(sorted((sum(mu[i - 1] for i in block) for block in pi), reverse=True))
        weight = math.prod(math.factorial(len(block) - 1) for block in pi)
        terms[index] = terms.get(index, 0) + weight
    return SymExpansion(POWER, sum(mu), terms)


def p_in_path_basis(mu) -> dict:
    """Classical p_mu as a combination of path power sums (Moebius inversion).

    Returns {partition: integer coefficient} on sorted path-power indices;
    expanding back through path_power_in_p recovers p_mu exactly.
    """
    mu = check_partition(tuple(sorted(mu, reverse=True)))
    out = {}
    for pi in enumerate_set_partitions(len(mu)):
        index = tuple(sorted((sum(mu[i - 1] for i in block) for block in pi), reverse=True))
        sign = -1 if (len(mu) - len(pi)) % 2 else 1
        out[index] = out.get(index, 0) + sign
    return {lam: c for lam, c in out.items() if c}


def path_power_to_schur(mu) -> SymExpansion:
    """Schur expansion of the path power sum: m(mu)! times the signed tally of
    monotonic ribbon tilings with size multiset mu, grouped by shape."""
    mu = check_partition(tuple(sorted(mu, reverse=True)))
    m = mult_factorial(mu)
    tally = tiling_tally(mu)
    return SymExpansion(SCHUR, sum(mu), {shape: m * c for shape, c in tally.items()})
