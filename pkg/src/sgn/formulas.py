"""Closed-form nullities and bounds for signed paths, cycles, and bicyclics.

Sign data enters only through parities: the number of negative edges on a
cycle matters modulo 2 because switching can move negative edges around a
cycle while preserving their parity.  The infinity-graph formula follows the
full case analysis on the parities of the two cycle lengths and the
connecting path; one subcase (both cycle lengths odd, connecting path of
three or more vertices, odd invariant) has no exact closed form and is
reported as a lower bound with an optional oracle resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import GraphError, SignedGraph, components, find_cycles, is_balanced
from .linalg import nullity_rank

UpperBoundClass = Literal["BPlus", "BPlusPlus", "ThetaUnbalanced", "BicyclicUnbalanced"]

#: (formula offset, minimum n) per graph class.
_BOUNDS: dict[str, tuple[int, int]] = {
    "BPlus": (6, 7),
    "BPlusPlus": (6, 8),
    "ThetaUnbalanced": (4, 5),
    "BicyclicUnbalanced": (3, 4),
}


def nullity_path(n: int) -> int:
    """Nullity of a signed path on n vertices: 1 if n is odd, else 0.

    Signs are irrelevant: every path is balanced, hence switching-equivalent
    to the all-positive path.
    """
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return n % 2


def nullity_cycle(n: int, s: int) -> int:
    """Nullity of a signed cycle on n vertices with s negative edges (parity).

    The full table::

        2  if n = 0 (mod 4) and s even
        2  if n = 2 (mod 4) and s odd
        0  if n odd
        0  if n = 0 (mod 4) and s odd
        0  if n = 2 (mod 4) and s even
    """
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    if s not in (0, 1):
        raise GraphError(f"negative-edge parity must be 0 or 1, got {s}")
    if n % 2 == 1:
        return 0
    if n % 4 == 0:
        return 2 if s == 0 else 0
    return 2 if s == 1 else 0


@dataclass(frozen=True)
class InfinitySpec:
    """Parameters of the infinity graph: cycles C_p and C_q joined by a path
    with l vertices (l = 1 means the cycles share a vertex), plus the
    negative-edge parities of the two cycles."""

    p: int
    q: int
    l: int
    sp: int
    sq: int

    def __post_init__(self):
        if self.p < 3 or self.q < 3:
            raise GraphError(f"cycle lengths must be >= 3, got p={self.p}, q={self.q}")
        if self.l < 1:
            raise GraphError(f"connecting path needs l >= 1 vertices, got {self.l}")
        if self.sp not in (0, 1) or self.sq not in (0, 1):
            raise GraphError("cycle sign parities must be 0 or 1")

    @property
    def vertex_count(self) -> int:
        return self.p + self.q + self.l - 2


@dataclass(frozen=True)
class NullityResult:
    """Either an exact nullity or a lower bound, optionally oracle-resolved."""

    value: int | None = None
    lower_bound: int | None = None
    oracle_value: int | None = None

    def __post_init__(self):
        if (self.value is None) == (self.lower_bound is None):
            raise GraphError("exactly one of value / lower_bound must be set")
        if self.oracle_value is not None and self.lower_bound is not None:
            if self.oracle_value < self.lower_bound:
                raise GraphError("oracle value below the stated lower bound")

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def best(self) -> int:
        """The exact value when known, else the oracle resolution."""
        if self.value is not None:
            return self.value
        if self.oracle_value is not None:
            return self.oracle_value
        raise GraphError("no exact value available for this case")


def nullity_infinity(spec: InfinitySpec, resolve: bool = True) -> NullityResult:
    """Nullity of the infinity graph per the parity case analysis.

    Case p, q both odd:
        0                 if l even
        0                 if l odd and sp - sq + (q - p)/2 even
        1                 if l = 1 and that invariant is odd
        lower bound >= 1  if l >= 3 odd and that invariant is odd

    Case p, q of different parity (e is the even length, se its parity):
        0 if the even cycle has nullity 0, else 1

    Case p, q both even:
        3 if l odd  and both cycle nullities are 2
        1 if l odd  and some cycle nullity is 0
        2 if l even and some cycle nullity is 2
        0 if l even and both cycle nullities are 0

    In the lower-bound case an exact value is computed on a concrete
    realization with the rank oracle when ``resolve`` is set.
    """
    p, q, l, sp, sq = spec.p, spec.q, spec.l, spec.sp, spec.sq
    if p % 2 == 1 and q % 2 == 1:
        invariant = (sp - sq + (q - p) // 2) % 2
        if l % 2 == 0 or invariant == 0:
            return NullityResult(value=0)
        if l == 1:
            return NullityResult(value=1)
        oracle = None
        if resolve:
            from .families import gen_infinity

            oracle = nullity_rank(gen_infinity(p, q, l, sp, sq))
        return NullityResult(lower_bound=1, oracle_value=oracle)
    if p % 2 != q % 2:
        e, se = (p, sp) if p % 2 == 0 else (q, sq)
        return NullityResult(value=0 if nullity_cycle(e, se) == 0 else 1)
    ep, eq = nullity_cycle(p, sp), nullity_cycle(q, sq)
    if l % 2 == 1:
        return NullityResult(value=3 if ep == 2 and eq == 2 else 1)
    return NullityResult(value=2 if ep == 2 or eq == 2 else 0)


def upper_bound(class_name: UpperBoundClass, n: int) -> int:
    """Nullity upper bound for a signed-graph class at vertex count n.

    BPlus (infinity base, cycles vertex-disjoint, trees attached): n - 6 for
    n >= 7.  BPlusPlus (infinity base with shared vertex): n - 6 for n >= 8.
    ThetaUnbalanced: n - 4 for n >= 5.  BicyclicUnbalanced: n - 3 for n >= 4,
    attained only by the two-triangle diamond with both triangles unbalanced.
    """
    try:
        offset, n_min = _BOUNDS[class_name]
    except KeyError:
        raise GraphError(f"unknown class {class_name!r}; expected one of {sorted(_BOUNDS)}")
    if n < n_min:
        raise GraphError(f"{class_name} bound needs n >= {n_min}, got {n}")
    return n - offset


def is_max_nullity_extremal(g: SignedGraph) -> bool:
    """True iff g attains the unbalanced-bicyclic maximum nullity n - 3.

    That happens exactly for the diamond (two triangles sharing an edge,
    4 vertices) with both triangles unbalanced.  Raises unless g is
    connected, bicyclic, and unbalanced.
    """
    if len(components(g)) != 1:
        raise GraphError("extremal test needs a connected graph")
    if g.m != g.n + 1:
        raise GraphError("extremal test needs a bicyclic graph (m = n + 1)")
    balanced, _ = is_balanced(g)
    if balanced:
        raise GraphError("extremal test needs an unbalanced graph")
    if g.n != 4:
        return False
    cycles = find_cycles(g)
    triangles = [w for w in cycles if len(w.vertices) == 3]
    if len(cycles) != 3 or len(triangles) != 2:
        return False
    return all(w.sign == -1 for w in triangles)
