"""Parameter arithmetic and certified lower-bound constructions.

For a forbidden even cycle on 2*ell vertices and a forbidden
complement star with n leaves, the extremal size is

    max(t*(2*ell-1), n + (n-1)//t)    with t = (n-1)//(2*ell-1) + 1,

realized by two witness families: t disjoint cliques on 2*ell-1
vertices, and a chain of t+1-k cliques of order m sharing one hub
vertex next to k disjoint cliques of order m.  Both avoid the cycle
because every block is smaller than 2*ell, and both have complement
max degree at most n-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import find_cycle_of_length
from .graphs import Graph, build
from .witnesses import BudgetExhausted, CycleWitness, StarWitness


@dataclass(frozen=True)
class ParamTriple:
    """The coupled integer parameters (ell, n) with derived t, k, m.

    t is always derived from (ell, n), so (t-1)(2ell-1) <= n-1 <
    t(2ell-1) holds by construction and inconsistent combinations are
    unrepresentable.
    """

    ell: int
    n: int
    t: int = field(init=False)
    k: int = field(init=False)
    m: int = field(init=False)

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError(f"ell must be at least 2, got {self.ell}")
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        t = (self.n - 1) // (2 * self.ell - 1) + 1
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "k", (self.n - 1) % t)
        object.__setattr__(self, "m", (self.n - 1) // t + 1)

    @property
    def cycle_length(self) -> int:
        return 2 * self.ell

    def to_json(self) -> dict:
        return {"ell": self.ell, "n": self.n, "t": self.t, "k": self.k, "m": self.m}


def extremal_size(params: ParamTriple) -> int:
    """max(t(2ell-1), n + floor((n-1)/t)): the largest certified
    cycle-free, complement-star-free order."""
    return max(
        params.t * (2 * params.ell - 1),
        params.n + (params.n - 1) // params.t,
    )


def regime(params: ParamTriple) -> str:
    """Which of the two witness families realizes the extremal size."""
    clique = params.t * (2 * params.ell - 1)
    star = params.n + (params.n - 1) // params.t
    if clique > star:
        return "clique_dominated"
    if clique < star:
        return "star_dominated"
    return "tie"


def closed_form_value(ell: int, n: int) -> tuple[int, str] | None:
    """Known exact Ramsey values for small-star regimes.

    Returns (value, source) or None when no published closed form
    covers (ell, n):
      - ell >= n >= 2: 2*ell (Dirac/Bondy: min degree above half the
        order forces pancyclicity),
      - n/2 < ell < n: 2*n (Zhang-Broersma-Chen),
      - 3n/8 + 1 <= ell <= n/2: 4*ell - 1 (Zhang-Broersma-Chen).
    """
    if n < 2 or ell < 2:
        return None
    if ell >= n:
        return 2 * ell, "dirac-bondy"
    if 2 * ell > n:
        return 2 * n, "zhang-broersma-chen"
    if 8 * ell >= 3 * n + 8 and 2 * ell <= n:
        return 4 * ell - 1, "zhang-broersma-chen"
    return None


def build_h1(params: ParamTriple) -> Graph:
    """t vertex-disjoint cliques on 2*ell-1 vertices each."""
    q = 2 * params.ell - 1
    edges = []
    for block in range(params.t):
        off = block * q
        edges.extend((off + u, off + v) for u in range(q) for v in range(u + 1, q))
    return build(params.t * q, edges)


def build_h2(params: ParamTriple) -> Graph:
    """k disjoint cliques of order m plus t+1-k cliques of order m
    sharing exactly one hub vertex.

    Layout is fixed for reproducible serialization: the hub is vertex
    0, the shared cliques occupy consecutive ranges after it, and the
    disjoint cliques follow.
    """
    t, k, m = params.t, params.k, params.m
    edges = []
    pos = 1
    for _ in range(t + 1 - k):
        members = [0] + list(range(pos, pos + m - 1))
        pos += m - 1
        edges.extend((members[i], members[j]) for i in range(m) for j in range(i + 1, m))
    for _ in range(k):
        members = list(range(pos, pos + m))
        pos += m
        edges.extend((members[i], members[j]) for i in range(m) for j in range(i + 1, m))
    return build(pos, edges)


@dataclass(frozen=True)
class LowerBoundReport:
    """Certification outcome for one candidate graph.

    cycle_free is None when the search budget ran out; the bound is
    certified only when both freeness checks definitively pass.
    """

    graph_order: int
    cycle_length: int
    star_order: int
    cycle_free: bool | None
    star_free: bool
    cycle_witness: CycleWitness | None = None
    star_witness: StarWitness | None = None
    search_nodes: int = 0

    @property
    def certified_bound(self) -> int | None:
        if self.cycle_free is True and self.star_free:
            return self.graph_order + 1
        return None

    @property
    def indeterminate(self) -> bool:
        return self.cycle_free is None

    def to_json(self) -> dict:
        return {
            "order": self.graph_order,
            "cycle_length": self.cycle_length,
            "star_order": self.star_order,
            "cycle_free": self.cycle_free,
            "star_free": self.star_free,
            "cycle_witness": self.cycle_witness.to_json() if self.cycle_witness else None,
            "star_witness": self.star_witness.to_json() if self.star_witness else None,
            "certified_bound": self.certified_bound,
            "search_nodes": self.search_nodes,
        }


def certify_lower_bound(
    g: Graph, params: ParamTriple, *, max_nodes: int | None = None
) -> LowerBoundReport:
    """Check that g avoids the 2*ell-cycle and that its complement
    avoids the n-star; if both hold, g certifies R > order(g).

    Works on arbitrary candidate graphs: extremal witnesses are not
    unique, so user-supplied graphs are first-class citizens here.
    """
    n_star = params.n
    order = g.order
    star_free = g.min_degree() >= order - n_star if order else True
    star_witness = None
    if not star_free:
        center = min(range(order), key=lambda v: (g.degree(v), v))
        non_neighbors = [
            v for v in range(order) if v != center and not g.has_edge(center, v)
        ]
        star_witness = StarWitness(center, tuple(non_neighbors[:n_star]))
    cycle_free: bool | None
    cycle_witness = None
    nodes = 0
    try:
        cycle_witness = find_cycle_of_length(g, params.cycle_length, max_nodes=max_nodes)
        cycle_free = cycle_witness is None
    except BudgetExhausted as exc:
        cycle_free = None
        nodes = exc.nodes
    return LowerBoundReport(
        graph_order=order,
        cycle_length=params.cycle_length,
        star_order=n_star,
        cycle_free=cycle_free,
        star_free=star_free,
        cycle_witness=cycle_witness,
        star_witness=star_witness,
        search_nodes=nodes,
    )
