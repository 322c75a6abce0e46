from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UndefinedCoefficientError


def cayley(b: int) -> int:
    """Labelled trees on b nodes, ``b^(b-2)``."""
    return b ** (b - 2)


@dataclass(frozen=True)
class ClusteringReport:
    """C(b) = cayley(b) * clique_count / spanning_tree_count, kept exact."""

    b: int
    clique_count: int
    spanning_tree_count: int
    cayley_factor: int
    value: Fraction

    @property
    def value_f64(self) -> float:
        return float(self.value)

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "cliques": self.clique_count,
            "spanning_trees": self.spanning_tree_count,
            "cayley": self.cayley_factor,
            "value_num": self.value.numerator,
            "value_den": self.value.denominator,
            "value": self.value_f64,
        }


def make_report(b: int, cliques: int, trees: int) -> ClusteringReport:
    if trees == 0:
        raise UndefinedCoefficientError(f"C({b}) is undefined: the graph has no {b}-node trees")
    a = cayley(b)
    return ClusteringReport(b, cliques, trees, a, Fraction(a * cliques, trees))
