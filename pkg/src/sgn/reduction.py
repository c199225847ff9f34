"""Structural nullity computation with replayable certificates.

The engine applies, in order: component splitting, pendant deletion (delete
a degree-1 vertex together with its neighbor; nullity is unchanged), and the
two cut-point rules.  At a cut-point v with components G_1..G_s of G - v:

* decrement rule: if some G_i has eta(G_i) = eta(G_i + v) + 1, then
  eta(G) = sum_i eta(G_i) - 1;
* split rule: if some G_i has eta(G_i) = eta(G_i + v) - 1, then
  eta(G) = eta(G_i) + eta(G - G_i).

Whether a rule applies is decided with the exact rank oracle (there is no
known syntactic criterion), so the engine is a certificate generator rather
than an oracle-free decision procedure.  When neither rule applies the
subgraph falls back to a rank-oracle base case; paths, cycles and isolated
vertices are closed-form base cases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .formulas import nullity_cycle
from .graph import (
    GraphError,
    SignedGraph,
    components,
    cut_points,
    delete_vertices,
    pendant_pairs,
)
from .linalg import nullity_rank

KIND_COMPONENT_SPLIT = "ComponentSplit"
KIND_PENDANT_DELETE = "PendantDelete"
KIND_CUTPOINT_DECREMENT = "CutPointDecrement"
KIND_CUTPOINT_SPLIT = "CutPointSplit"
KIND_BASE_CASE = "BaseCase"

METHOD_RANK_ORACLE = "RankOracle"
METHOD_CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class ReductionStep:
    """One certificate step; ``before``/``after`` are full graph snapshots."""

    kind: str
    before: SignedGraph
    after: tuple[SignedGraph, ...]
    relation: str
    pendant: int | None = None
    neighbor: int | None = None
    cut_point: int | None = None
    component_index: int | None = None
    method: str | None = None
    value: int | None = None

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "relation": self.relation,
            "before": _graph_dict(self.before),
            "after": [_graph_dict(h) for h in self.after],
        }
        for key in ("pendant", "neighbor", "cut_point", "component_index", "method", "value"):
            val = getattr(self, key)
            if val is not None:
                d[key] = val
        return d


def _graph_dict(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}


@dataclass(frozen=True)
class ReductionTrace:
    """Certificate for one structural nullity computation."""

    root: SignedGraph
    steps: tuple[ReductionStep, ...]
    result: int

    def replay(self) -> int:
        """Recompute the nullity from the recorded steps alone.

        Steps are recorded in pre-order, so a reverse pass resolves every
        subgraph before its parent.  Equal labeled graphs have equal nullity,
        which makes memoizing by graph value safe.
        """
        value: dict[SignedGraph, int] = {}
        for step in reversed(self.steps):
            if step.kind == KIND_BASE_CASE:
                value[step.before] = step.value
                continue
            try:
                parts = [value[h] for h in step.after]
            except KeyError:
                raise GraphError("trace replay: step references an unresolved graph")
            if step.kind == KIND_PENDANT_DELETE:
                value[step.before] = parts[0]
            elif step.kind == KIND_COMPONENT_SPLIT:
                value[step.before] = sum(parts)
            elif step.kind == KIND_CUTPOINT_DECREMENT:
                value[step.before] = sum(parts) - 1
            elif step.kind == KIND_CUTPOINT_SPLIT:
                value[step.before] = sum(parts)
            else:
                raise GraphError(f"trace replay: unknown step kind {step.kind!r}")
        if self.root not in value:
            raise GraphError("trace replay: root graph never resolved")
        return value[self.root]

    def to_json(self) -> str:
        return json.dumps(
            {
                "root": _graph_dict(self.root),
                "result": self.result,
                "steps": [s.to_dict() for s in self.steps],
            },
            indent=2,
        )


def apply_pendant(g: SignedGraph) -> tuple[SignedGraph, ReductionStep] | None:
    """Delete the lowest-labeled pendant together with its neighbor.

    Nullity is unchanged.  Returns None when no pendant exists.
    """
    pairs = pendant_pairs(g)
    if not pairs:
        return None
    v, u = pairs[0]
    reduced, _ = delete_vertices(g, (v, u))
    step = ReductionStep(
        kind=KIND_PENDANT_DELETE,
        before=g,
        after=(reduced,),
        relation=f"eta(G) = eta(G - {{{v},{u}}})",
        pendant=v,
        neighbor=u,
    )
    return reduced, step


def _cutpoint_parts(g: SignedGraph, v: int):
    if v not in cut_points(g):
        raise GraphError(f"vertex {v} is not a cut-point")
    without, keep = delete_vertices(g, (v,))
    parts = []
    for comp, comp_map in components(without):
        original = [keep[i] for i in comp_map]
        plus_v, _ = delete_vertices(g, set(range(g.n)) - set(original) - {v})
        parts.append((comp, tuple(original), plus_v))
    return parts


def try_cutpoint_case1(
    g: SignedGraph, v: int
) -> tuple[tuple[SignedGraph, ...], ReductionStep] | None:
    """Decrement rule at cut-point v.

    Applicable when some component G_i of G - v satisfies
    eta(G_i) = eta(G_i + v) + 1; then eta(G) = sum eta(G_i) - 1.
    The qualifying component of lowest index is recorded as witness.
    """
    parts = _cutpoint_parts(g, v)
    witness = None
    for idx, (comp, _, plus_v) in enumerate(parts):
        if nullity_rank(comp) == nullity_rank(plus_v) + 1:
            witness = idx
            break
    if witness is None:
        return None
    after = tuple(comp for comp, _, _ in parts)
    step = ReductionStep(
        kind=KIND_CUTPOINT_DECREMENT,
        before=g,
        after=after,
        relation=f"eta(G) = sum(eta(G_i) for G_i in G - {v}) - 1",
        cut_point=v,
        component_index=witness,
    )
    return after, step


def try_cutpoint_case2(
    g: SignedGraph, v: int
) -> tuple[tuple[SignedGraph, SignedGraph], ReductionStep] | None:
    """Split rule at cut-point v.

    Applicable when some component G_i of G - v satisfies
    eta(G_i) = eta(G_i + v) - 1; then eta(G) = eta(G_i) + eta(G - G_i),
    where G - G_i keeps v (and every other component).
    """
    parts = _cutpoint_parts(g, v)
    for idx, (comp, original, plus_v) in enumerate(parts):
        if nullity_rank(comp) == nullity_rank(plus_v) - 1:
            rest, _ = delete_vertices(g, original)
            pair = (comp, rest)
            step = ReductionStep(
                kind=KIND_CUTPOINT_SPLIT,
                before=g,
                after=pair,
                relation=f"eta(G) = eta(G_{idx + 1}) + eta(G - G_{idx + 1}), split at {v}",
                cut_point=v,
                component_index=idx,
            )
            return pair, step
    return None


def _is_cycle(g: SignedGraph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n))


def nullity_structural(g: SignedGraph) -> tuple[int, ReductionTrace]:
    """Nullity via structural reduction, with a replayable certificate.

    Rule order: components, pendants, cut-point decrement rule, cut-point
    split rule, base case.  Cut-points are tried in ascending label order.
    The result always equals the rank-oracle nullity; every recorded step's
    relation can be re-checked independently.
    """
    steps: list[ReductionStep] = []
    result = _reduce(g, steps)
    return result, ReductionTrace(root=g, steps=tuple(steps), result=result)


def _base_case(g: SignedGraph, steps: list[ReductionStep]) -> int:
    # closed forms: isolated vertices and cycles (paths with n >= 2 never
    # reach here because they still carry pendants)
    if g.m == 0:
        value = g.n  # n isolated vertices, each contributing 1
        method = METHOD_CLOSED_FORM
        relation = f"eta = {value} (isolated vertices)"
    elif _is_cycle(g):
        s = sum(1 for _, _, sg in g.edges if sg == -1) % 2
        value = nullity_cycle(g.n, s)
        method = METHOD_CLOSED_FORM
        relation = f"eta = {value} (cycle closed form, n={g.n}, s parity {s})"
    else:
        value = nullity_rank(g)
        method = METHOD_RANK_ORACLE
        relation = f"eta = {value} (exact rank)"
    steps.append(
        ReductionStep(
            kind=KIND_BASE_CASE,
            before=g,
            after=(),
            relation=relation,
            method=method,
            value=value,
        )
    )
    return value


def _reduce(g: SignedGraph, steps: list[ReductionStep]) -> int:
    if g.n == 0:
        steps.append(
            ReductionStep(
                kind=KIND_BASE_CASE,
                before=g,
                after=(),
                relation="eta = 0 (empty graph)",
                method=METHOD_CLOSED_FORM,
                value=0,
            )
        )
        return 0
    comps = components(g)
    if len(comps) > 1:
        parts = tuple(comp for comp, _ in comps)
        steps.append(
            ReductionStep(
                kind=KIND_COMPONENT_SPLIT,
                before=g,
                after=parts,
                relation="eta(G) = sum over connected components",
            )
        )
        return sum(_reduce(comp, steps) for comp in parts)
    hit = apply_pendant(g)
    if hit is not None:
        reduced, step = hit
        steps.append(step)
        return _reduce(reduced, steps)
    cuts = sorted(cut_points(g)) if g.n >= 3 else []
    for v in cuts:
        got = try_cutpoint_case1(g, v)
        if got is not None:
            parts, step = got
            steps.append(step)
            return sum(_reduce(comp, steps) for comp in parts) - 1
    for v in cuts:
        got = try_cutpoint_case2(g, v)
        if got is not None:
            (part, rest), step = got
            steps.append(step)
            return _reduce(part, steps) + _reduce(rest, steps)
    return _base_case(g, steps)
