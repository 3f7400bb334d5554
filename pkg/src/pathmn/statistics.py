"""Permutation statistics as indicator combinations, and their symmetrization.

A statistic on S_n is stored as a merged list of weighted indicators
c·1_{I,J}; the Reynolds operator (average over conjugation) sends it to a
class function, computed here via the atomic expansions of the underlying
partial permutations grouped by graph type. Moments and variances on a
conjugacy class follow by evaluating the resulting Schur coefficients against
character values.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from pathmn.characters import _atomic_from_type
from pathmn.errors import ParseError, check_guard
from pathmn.partial_perm import IndicatorTerm, PartialPermutation, decompose, indicator_product
from pathmn.partitions import check_partition
from pathmn.ribbons import skew_mn
from pathmn.symfunc import SCHUR, SymExpansion

__all__ = [
    "Statistic",
    "ClassFunction",
    "make_statistic",
    "builtin",
    "stat_product",
    "symmetrize",
    "class_eval",
    "variance_on_class",
    "eval_pointwise",
    "stat_to_json",
    "stat_from_json",
]


@dataclass(frozen=True)
class Statistic:
    """Finite combination sum c·1_{I,J} of indicators on S_n, like terms merged."""

    n: int
    terms: tuple  # IndicatorTerm, sorted by (k, I, J), no zero coefficients


@dataclass(frozen=True)
class ClassFunction:
    """A class function on S_n through ch_n: R f = sum c_lam chi^lam."""

    n: int
    schur: SymExpansion


def make_statistic(n: int, terms) -> Statistic:
    merged = {}
    for t in terms:
        if t.pp.n != n:
            raise ParseError(f"term on ambient size {t.pp.n}, expected {n}")
        merged[t.pp] = merged.get(t.pp, 0) + Fraction(t.coeff)
    kept = [
        IndicatorTerm(c, pp)
        for pp, c in merged.items()
        if c
    ]
    kept.sort(key=lambda t: (t.pp.k, t.pp.I, t.pp.J))
    return Statistic(n, tuple(kept))


def builtin(name: str, n: int) -> Statistic:
    """The built-in statistics: "exc" (exceedances) and "maj" (major index).

    exc = sum over i < j of 1_{(i),(j)}; maj puts weight i on the descent
    indicator 1_{(i,i+1),(k,j)} for every value pair j < k.
    """
    if n < 1:
        raise ParseError(f"ambient size must be >= 1, got {n}")
    terms = []
    if name == "exc":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                terms.append(IndicatorTerm(Fraction(1), PartialPermutation(n, (i,), (j,))))
    elif name == "maj":
        for i in range(1, n):
            for j in range(1, n + 1):
                for k in range(j + 1, n + 1):
                    terms.append(
                        IndicatorTerm(Fraction(i), PartialPermutation(n, (i, i + 1), (k, j)))
                    )
    else:
        raise ParseError(f"unknown builtin statistic {name!r}")
    return make_statistic(n, terms)


@cache
def stat_product(f: Statistic, g: Statistic) -> Statistic:
    """Pointwise product, expanded by pairwise indicator merging."""
    if f.n != g.n:
        raise ParseError(f"ambient sizes differ: {f.n} vs {g.n}")
    check_guard(f.n, 12, "statistic product ambient size n")
    acc = {}
    for a in f.terms:
        for b in g.terms:
            t = indicator_product(a, b)
            if t is None:
                continue
            acc[t.pp] = acc.get(t.pp, 0) + t.coeff
    return make_statistic(f.n, (IndicatorTerm(c, pp) for pp, c in acc.items()))


@cache
def symmetrize(f: Statistic) -> ClassFunction:
    """ch_n(R f): group terms by graph type, expand each class atomically.

    Indicators with the same path and cycle type have identical atomic
    expansions, so the Reynolds average costs one expansion per class, divided
    by n! at the end.
    """
    groups = {}
    for t in f.terms:
        gt = decompose(t.pp)
        groups[gt] = groups.get(gt, 0) + t.coeff
    total = SymExpansion(SCHUR, f.n, {})
    for gt, c in groups.items():
        if not c:
            continue
        total = total + _atomic_from_type(gt.path_type, gt.cycle_type).scale(c)
    return ClassFunction(f.n, total.scale(Fraction(1, math.factorial(f.n))))


def class_eval(cf: ClassFunction, mu) -> Fraction:
    """Value of the class function on the conjugacy class of cycle type mu."""
    mu = check_partition(tuple(sorted(mu, reverse=True)))
    if sum(mu) != cf.n:
        raise ParseError(f"|mu| = {sum(mu)} but the class function lives on S_{cf.n}")
    return Fraction(sum(c * skew_mn(lam, mu) for lam, c in cf.schur.terms.items()))


def variance_on_class(f: Statistic, mu) -> Fraction:
    """Variance of f over the conjugacy class of cycle type mu."""
    mean = class_eval(symmetrize(f), mu)
    second = class_eval(symmetrize(stat_product(f, f)), mu)
    return second - mean**2


def eval_pointwise(f: Statistic, w) -> Fraction:
    """Evaluate on one permutation, given as the image tuple (w(1), ..., w(n))."""
    w = tuple(w)
    if sorted(w) != list(range(1, f.n + 1)):
        raise ParseError(f"not a permutation of 1..{f.n}: {w}")
    total = Fraction(0)
    for t in f.terms:
        if all(w[i - 1] == j for i, j in t.pp.pairs()):
            total += t.coeff
    return total


def stat_to_json(f: Statistic) -> str:
    return json.dumps(
        {
            "n": f.n,
            "terms": [
                {
                    "coeff": f"{t.coeff.numerator}/{t.coeff.denominator}",
                    "I": list(t.pp.I),
                    "J": list(t.pp.J),
                }
                for t in f.terms
            ],
        }
    )


def stat_from_json(text: str) -> Statistic:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    try:
        n = int(data["n"])
        terms = [
            IndicatorTerm(
                Fraction(str(t["coeff"])),
                PartialPermutation(n, tuple(int(v) for v in t["I"]), tuple(int(v) for v in t["J"])),
            )
            for t in data["terms"]
        ]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ParseError(f"malformed statistic object: {e}") from None
    return make_statistic(n, terms)
