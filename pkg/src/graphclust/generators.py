"""Deterministic graph families, seeded G(n, p), and the clique-plus-chain family.

Random graphs use :class:`random.Random` (MT19937) seeded with the integer
seed. Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order and
each is kept iff the next ``random()`` draw is ``< p``; one draw per pair,
always, so the stream position never depends on earlier outcomes.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass

from .errors import SamplingError, ValidationError
from .graph import Graph, is_connected

FAMILIES = ("complete", "path", "cycle", "star", "gnp", "gnp_connected", "chain_clique")
_MIN_NODES = {"complete": 1, "path": 1, "cycle": 3, "star": 2}


def named_family(family: str, n: int) -> Graph:
    if family not in _MIN_NODES:
        raise ValidationError(f"unknown family {family!r}")
    if n < _MIN_NODES[family]:
        raise ValidationError(f"{family} needs n >= {_MIN_NODES[family]}, got {n}")
    if family == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    else:
        edges = [(0, i) for i in range(1, n)]
    return Graph.from_edges(n, edges)


def complete(n: int) -> Graph:
    return named_family("complete", n)


def path(n: int) -> Graph:
    return named_family("path", n)


def cycle(n: int) -> Graph:
    return named_family("cycle", n)


def star(n: int) -> Graph:
    """Star on ``n`` nodes: centre 0 and ``n - 1`` leaves."""
    return named_family("star", n)


def _check_gnp(n: int, p: float) -> None:
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    if not 0 <= p <= 1:
        raise ValidationError(f"p must lie in [0, 1], got {p}")


def _draw(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    _check_gnp(n, p)
    return _draw(n, p, random.Random(seed))


def gnp_connected(n: int, p: float, seed: int, max_tries: int = 1000) -> tuple[Graph, int]:
    """Redraw G(n, p) from one seeded stream until connected.

    Returns the graph and the number of draws it took.
    """
    _check_gnp(n, p)
    rng = random.Random(seed)
    for attempt in range(1, max_tries + 1):
        g = _draw(n, p, rng)
        if is_connected(g):
            return g, attempt
    raise SamplingError(f"no connected G({n}, {p}) in {max_tries} draws (seed {seed})")


def chain_clique(b: int, n: int) -> Graph:
    """K_b on nodes ``0..b-1`` with a path ``b..n-1`` hanging off node 0."""
    if not n >= b >= 3:
        raise ValidationError(f"chain_clique needs n >= b >= 3, got b={b}, n={n}")
    edges = [(i, j) for i in range(b) for j in range(i + 1, b)]
    if n > b:
        edges.append((0, b))
        edges.extend((i, i + 1) for i in range(b, n - 1))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    b: int | None = None
    p: float | None = None
    seed: int | None = None
    max_tries: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        wanted = {
            "b": self.family == "chain_clique",
            "p": self.family in ("gnp", "gnp_connected"),
            "seed": self.family in ("gnp", "gnp_connected"),
            "max_tries": self.family == "gnp_connected",
        }
        for name, needed in wanted.items():
            present = getattr(self, name) is not None
            if needed and not present:
                raise ValidationError(f"{self.family} requires {name}")
            if present and not needed:
                raise ValidationError(f"{self.family} does not take {name}")
        if self.n < 1:
            raise ValidationError(f"n must be positive, got {self.n}")
        if self.p is not None and not 0 <= self.p <= 1:
            raise ValidationError(f"p must lie in [0, 1], got {self.p}")
        if self.family == "chain_clique" and not self.n >= self.b >= 3:
            raise ValidationError("chain_clique needs n >= b >= 3")

    def build(self) -> Graph:
        if self.family == "gnp":
            return gnp(self.n, self.p, self.seed)
        if self.family == "gnp_connected":
            return gnp_connected(self.n, self.p, self.seed, self.max_tries)[0]
        if self.family == "chain_clique":
            return chain_clique(self.b, self.n)
        return named_family(self.family, self.n)

    def to_json(self) -> str:
        return json.dumps({k: v for k, v in asdict(self).items() if v is not None}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> GenSpec:
        data = json.loads(text)
        unknown = set(data) - {"family", "n", "b", "p", "seed", "max_tries"}
        if unknown:
            raise ValidationError(f"unknown GenSpec keys: {sorted(unknown)}")
        return cls(**data)
