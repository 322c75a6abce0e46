"""Generalized clustering coefficient C(b).

C(b) compares b-cliques with all trees on b nodes::

    C(b) = b^(b-2) * #b-cliques / #b-node trees

``b^(b-2)`` (Cayley) is the number of trees inside one K_b, so C(b) = 1
exactly on complete graphs. C(3) is the usual global clustering
coefficient. b = 3, 4, 5 have closed forms; other b fall back to subset
enumeration.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import oracle
from .census import MotifCounts, census3, census4, census5
from .errors import ValidationError
from .graph import Graph
from .report import ClusteringReport, cayley, make_report

__all__ = [
    "ClusteringReport", "GnpExpectation", "c3", "c4", "c5", "c_analytic",
    "c_general", "cayley", "expected_c_gnp", "from_census",
]


class EnumerationCostWarning(RuntimeWarning):
    pass


def from_census(counts: MotifCounts, b: int) -> ClusteringReport:
    if b not in counts.tiers:
        raise ValidationError(f"census does not include {b}-node motifs")
    if b == 3:
        return make_report(3, counts.m7_3, counts.m3_3)
    if b == 4:
        return make_report(4, counts.m63_4, counts.m11_4 + counts.m13_4)
    return make_report(5, counts.m1023_5, counts.m75_5 + counts.m77_5 + counts.m86_5)


def c3(g: Graph, dense: bool = False) -> ClusteringReport:
    return from_census(census3(g, dense=dense), 3)


def c4(g: Graph, dense: bool = False) -> ClusteringReport:
    return from_census(census4(g, dense=dense), 4)


def c5(g: Graph, dense: bool = False) -> ClusteringReport:
    return from_census(census5(g, dense=dense), 5)


_ANALYTIC = {3: c3, 4: c4, 5: c5}


def c_analytic(g: Graph, b: int, dense: bool = False) -> ClusteringReport:
    try:
        fn = _ANALYTIC[b]
    except KeyError:
        raise ValidationError(f"closed forms exist for b in 3..5, got {b}") from None
    return fn(g, dense=dense)


def c_general(g: Graph, b: int) -> ClusteringReport:
    """C(b) for any 3 <= b <= n by counting over all b-subsets (O(n^b))."""
    if not 3 <= b <= g.n:
        raise ValidationError(f"need 3 <= b <= n, got b={b}, n={g.n}")
    if b > 5:
        warnings.warn(
            f"C({b}) enumerates {comb(g.n, b)} node subsets", EnumerationCostWarning, stacklevel=2
        )
    return oracle.c_naive(g, b)


@dataclass(frozen=True)
class GnpExpectation:
    b: int
    p: float | Fraction
    exponent: int

    @property
    def value(self) -> float | Fraction:
        return self.p ** self.exponent


def expected_c_gnp(b: int, p: float | Fraction) -> GnpExpectation:
    """C(b) in G(n, p) from expected counts: ``p^C(b-1, 2)``.

    The expected clique count ``C(n,b) p^C(b,2)`` over the expected tree
    count ``b^(b-2) C(n,b) p^(b-1)``, times Cayley's factor.
    """
    if b < 3:
        raise ValidationError(f"b must be at least 3, got {b}")
    if not 0 <= p <= 1:
        raise ValidationError(f"p must lie in [0, 1], got {p}")
    return GnpExpectation(b, p, comb(b - 1, 2))
