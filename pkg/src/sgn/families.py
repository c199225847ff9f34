"""Deterministic generators for paths, cycles, stars, bicyclic families,
the figure graphs G1..G8 / H1..H13, and nullity-set realizers.

Negative edges are always placed at canonical positions (the first edges of
a cycle or path); correctness under repositioning is covered by switching
invariance, which the verification suites test separately.  Realizers
re-check their own output against the exact rank oracle before returning, so
a mis-transcribed construction fails loudly instead of producing a wrong
witness.
"""

from __future__ import annotations

from .graph import GraphError, SignedGraph, find_cycles, is_connected
from .linalg import nullity_rank


class InternalError(RuntimeError):
    """A construction failed its own oracle self-check; indicates a bug."""


# -- elementary families --------------------------------------------------


def gen_path(n: int) -> SignedGraph:
    """All-positive path 0-1-...-(n-1)."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return SignedGraph(n, [(i, i + 1, 1) for i in range(n - 1)])


def gen_cycle(n: int, s: int = 0) -> SignedGraph:
    """Cycle 0-1-...-(n-1)-0 with the first s edges negative."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    if not (0 <= s <= n):
        raise GraphError(f"negative edge count {s} out of range 0..{n}")
    edges = []
    for i in range(n):
        u, v = i, (i + 1) % n
        edges.append((u, v, -1 if i < s else 1))
    return SignedGraph(n, edges)


def gen_star(k: int) -> SignedGraph:
    """All-positive star on k vertices: center 0 with k - 1 leaves."""
    if k < 1:
        raise GraphError(f"star needs k >= 1, got {k}")
    return SignedGraph(k, [(0, i, 1) for i in range(1, k)])


def gen_infinity(p: int, q: int, l: int, sp: int = 0, sq: int = 0) -> SignedGraph:
    """Two cycles C_p and C_q joined by a path with l vertices.

    With l = 1 the cycles share a single vertex; with l >= 2 the path's
    endpoints lie on the two cycles, so the graph has p + q + l - 2 vertices.
    The first sp edges of C_p and the first sq edges of C_q are negative,
    path edges positive.
    """
    if p < 3 or q < 3:
        raise GraphError(f"cycle lengths must be >= 3, got p={p}, q={q}")
    if l < 1:
        raise GraphError(f"connecting path needs l >= 1 vertices, got {l}")
    if not (0 <= sp <= p and 0 <= sq <= q):
        raise GraphError("negative edge counts out of range")
    edges = []
    for i in range(p):
        u, v = i, (i + 1) % p
        edges.append((u, v, -1 if i < sp else 1))
    if l == 1:
        q_cycle = [0] + list(range(p, p + q - 1))
    else:
        path = [0] + list(range(p, p + l - 1))
        edges.extend((a, b, 1) for a, b in zip(path, path[1:]))
        q_cycle = list(range(p + l - 2, p + l - 2 + q))
    for i in range(q):
        u, v = q_cycle[i], q_cycle[(i + 1) % q]
        edges.append((u, v, -1 if i < sq else 1))
    return SignedGraph(p + q + l - 2, edges)


def gen_theta(
    p: int, q: int, l: int, signs: tuple[int, int, int] = (0, 0, 0)
) -> SignedGraph:
    """Two hubs joined by three internally disjoint paths of edge-lengths
    p, q, l (each >= 1, at most one equal to 1), on p + q + l - 1 vertices.

    ``signs`` gives the negative-edge parity of each path; a parity of 1
    makes the path's first edge (the one leaving hub 0) negative.
    """
    lengths = (p, q, l)
    if any(x < 1 for x in lengths):
        raise GraphError(f"path lengths must be >= 1, got {lengths}")
    if sum(1 for x in lengths if x == 1) > 1:
        raise GraphError("at most one of the three path lengths may be 1")
    if len(signs) != 3 or any(x not in (0, 1) for x in signs):
        raise GraphError(f"signs must be three parities in {{0,1}}, got {signs!r}")
    edges = []
    nxt = 2  # hubs are 0 and 1
    for length, parity in zip(lengths, signs):
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        for i, (a, b) in enumerate(zip(chain, chain[1:])):
            edges.append((a, b, -1 if (i == 0 and parity) else 1))
    return SignedGraph(p + q + l - 1, edges)


# -- figure graphs --------------------------------------------------------
#
# The fixed-size H graphs and the parametric G graphs reproduce the paper's
# constructions.  Where a drawing leaves the attachment vertex ambiguous the
# choice below is the one whose pendant-deletion sequence reproduces the
# stated reduced graph; each generator's docstring records the layout.


def _chain(edges: list, chain: list[int]) -> None:
    edges.extend((a, b, 1) for a, b in zip(chain, chain[1:]))


def _leaves(edges: list, center: int, labels: range) -> None:
    edges.extend((center, j, 1) for j in labels)


def _fig_H1() -> SignedGraph:
    """Unbalanced triangle 0,1,2 with the path 2-3-4-5 attached."""
    edges = [(0, 1, -1), (0, 2, 1), (1, 2, 1)]
    _chain(edges, [2, 3, 4, 5])
    return SignedGraph(6, edges)


def _fig_H2() -> SignedGraph:
    """Unbalanced triangle 0,1,2 with pendant 3 and path 2-4-5, all at 2."""
    edges = [(0, 1, -1), (0, 2, 1), (1, 2, 1), (2, 3, 1)]
    _chain(edges, [2, 4, 5])
    return SignedGraph(6, edges)


def _fig_H3(n: int) -> SignedGraph:
    """Cycle on n - 1 vertices plus one pendant attached at vertex 0."""
    if n is None or n < 4:
        raise GraphError("H3 needs n >= 4 (cycle plus pendant)")
    g = gen_cycle(n - 1, 1)
    return SignedGraph(n, list(g.edges) + [(0, n - 1, 1)])


def _bowtie(sp: int = 1, sq: int = 1) -> list:
    # triangles {0,1,2} and {2,3,4} sharing vertex 2
    return [
        (0, 1, -1 if sp else 1),
        (0, 2, 1),
        (1, 2, 1),
        (2, 3, 1),
        (2, 4, 1),
        (3, 4, -1 if sq else 1),
    ]


def _fig_H4() -> SignedGraph:
    """Bowtie (unbalanced triangles) with a pendant at outer vertex 4."""
    return SignedGraph(6, _bowtie() + [(4, 5, 1)])


def _fig_H5() -> SignedGraph:
    """Bowtie (unbalanced triangles) with a pendant at the shared vertex 2."""
    return SignedGraph(6, _bowtie() + [(2, 5, 1)])


def _infinity341() -> list:
    # triangle {0,1,2} and quadrangle {0,3,4,5} sharing vertex 0;
    # triangle unbalanced, quadrangle balanced
    return [
        (0, 1, 1),
        (1, 2, -1),
        (0, 2, 1),
        (0, 3, 1),
        (3, 4, 1),
        (4, 5, 1),
        (0, 5, 1),
    ]


def _fig_H6() -> SignedGraph:
    """Triangle/quadrangle sharing vertex 0; pendant at triangle vertex 1."""
    return SignedGraph(7, _infinity341() + [(1, 6, 1)])


def _fig_H7() -> SignedGraph:
    """Triangle/quadrangle sharing vertex 0; pendant at the shared vertex."""
    return SignedGraph(7, _infinity341() + [(0, 6, 1)])


def _fig_H8() -> SignedGraph:
    """Triangle/quadrangle sharing vertex 0; pendant at quad vertex 3
    (adjacent to the shared vertex)."""
    return SignedGraph(7, _infinity341() + [(3, 6, 1)])


def _fig_H9() -> SignedGraph:
    """Triangle/quadrangle sharing vertex 0; pendant at quad vertex 4
    (opposite the shared vertex)."""
    return SignedGraph(7, _infinity341() + [(4, 6, 1)])


def _infinity441(s_free_quad: int) -> list:
    # quadrangles {0,1,2,3} and {0,4,5,6} sharing vertex 0; the first
    # quadrangle (the one that never carries the pendant) has parity
    # s_free_quad, the second is balanced
    return [
        (0, 1, -1 if s_free_quad else 1),
        (1, 2, 1),
        (2, 3, 1),
        (0, 3, 1),
        (0, 4, 1),
        (4, 5, 1),
        (5, 6, 1),
        (0, 6, 1),
    ]


def _fig_H10(s: int = 0) -> SignedGraph:
    """Two quadrangles sharing vertex 0; pendant at quad vertex 4.

    The pendant-free quadrangle {0,1,2,3} has negative-edge parity ``s``;
    the nullity is 2 when it is balanced and 0 when unbalanced.
    """
    if s not in (0, 1):
        raise GraphError(f"H10 parity must be 0 or 1, got {s}")
    return SignedGraph(8, _infinity441(s) + [(4, 7, 1)])


def _fig_H11() -> SignedGraph:
    """Two quadrangles sharing vertex 0; pendant at quad vertex 5
    (opposite the shared vertex)."""
    return SignedGraph(8, _infinity441(0) + [(5, 7, 1)])


def _fig_H12() -> SignedGraph:
    """Two quadrangles sharing vertex 0; pendant at the shared vertex."""
    return SignedGraph(8, _infinity441(0) + [(0, 7, 1)])


def _fig_H13(sp: int = 1, sq: int = 1) -> SignedGraph:
    """Bowtie: triangles {0,1,2} and {2,3,4} sharing vertex 2, with
    configurable balanceness parities.  Equal parities give nullity 0."""
    if sp not in (0, 1) or sq not in (0, 1):
        raise GraphError("H13 parities must be 0 or 1")
    return SignedGraph(5, _bowtie(sp, sq))


def _fig_G1(n: int) -> SignedGraph:
    """Unbalanced triangle {0,1,2} joined by edge 0-3 to balanced quadrangle
    {3,4,5,6}, with n - 7 pendant leaves at the triangle's junction vertex 0.

    Deleting one leaf with vertex 0 leaves an edge, the quadrangle, and
    n - 8 isolated vertices, so the nullity is n - 6 (and equals n - 6 for
    n = 7 as well, where the graph is the bare infinity graph).
    """
    if n is None or n < 7:
        raise GraphError("G1 needs n >= 7")
    edges = [(0, 1, 1), (1, 2, -1), (0, 2, 1), (0, 3, 1)]
    edges += [(3, 4, 1), (4, 5, 1), (5, 6, 1), (3, 6, 1)]
    _leaves(edges, 0, range(7, n))
    return SignedGraph(n, edges)


def _fig_G2(n: int, k: int) -> SignedGraph:
    """Two unbalanced triangles joined through a path, with extra leaves.

    Triangle {0,1,2} carries k + 1 leaves at its junction vertex 2; from 2 a
    path with n - k - 7 interior vertices leads to the second triangle's
    junction.  Valid for 1 <= k <= n - 7; the nullity is k.
    """
    _check_nk(n, k, low=1, high_offset=7, name="G2")
    edges = [(0, 1, -1), (0, 2, 1), (1, 2, 1)]
    first_leaf = 3
    _leaves(edges, 2, range(first_leaf, first_leaf + k + 1))
    a = first_leaf + k + 1
    interior = list(range(a, a + n - k - 7))
    t = a + n - k - 7  # second triangle {t, t+1, t+2}, junction t
    _chain(edges, [2] + interior + [t])
    edges += [(t, t + 1, -1), (t, t + 2, 1), (t + 1, t + 2, 1)]
    return SignedGraph(n, edges)


def _fig_G3(n: int) -> SignedGraph:
    """Bowtie with both triangles unbalanced and n - 5 leaves at the outer
    vertex 4.  Nullity n - 6 (needs n >= 6 so at least one leaf exists)."""
    if n is None or n < 6:
        raise GraphError("G3 needs n >= 6")
    edges = _bowtie()
    _leaves(edges, 4, range(5, n))
    return SignedGraph(n, edges)


def _fig_G4(n: int, k: int) -> SignedGraph:
    """Bowtie with both triangles unbalanced, a path with n - k - 7 interior
    vertices from outer vertex 4, ending in a star center with k + 1 leaves.

    Valid for 1 <= k <= n - 7; the nullity is k.
    """
    _check_nk(n, k, low=1, high_offset=7, name="G4")
    edges = _bowtie()
    a = 5
    interior = list(range(a, a + n - k - 7))
    center = a + n - k - 7
    _chain(edges, [4] + interior + [center])
    _leaves(edges, center, range(center + 1, center + 1 + k + 1))
    return SignedGraph(n, edges)


def _diamond() -> list:
    # hubs 0,1 (both triangles unbalanced via the negative hub edge), outer 2,3
    return [(0, 1, -1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, 1)]


def _fig_G5(n: int) -> SignedGraph:
    """Diamond (both triangles unbalanced) with a pendant at outer vertex 2
    and a path of n - 5 vertices at outer vertex 3.  Nullity 0."""
    if n is None or n < 6:
        raise GraphError("G5 needs n >= 6")
    edges = _diamond() + [(2, 4, 1)]
    _chain(edges, [3] + list(range(5, n)))
    return SignedGraph(n, edges)


def _fig_G6(n: int) -> SignedGraph:
    """Diamond (both triangles unbalanced) with n - 4 leaves at hub 0.
    Nullity n - 4."""
    if n is None or n < 5:
        raise GraphError("G6 needs n >= 5")
    edges = _diamond()
    _leaves(edges, 0, range(4, n))
    return SignedGraph(n, edges)


def _fig_G7(n: int, k: int) -> SignedGraph:
    """Diamond (both triangles unbalanced), path with n - k - 5 interior
    vertices from outer vertex 3, star center with k leaves at the far end.

    Needs k >= 1.  Realizes nullity k when n - k is odd.
    """
    _check_nk(n, k, low=1, high_offset=5, name="G7")
    edges = _diamond()
    a = 4
    interior = list(range(a, a + n - k - 5))
    center = a + n - k - 5
    _chain(edges, [3] + interior + [center])
    _leaves(edges, center, range(center + 1, center + 1 + k))
    return SignedGraph(n, edges)


def _fig_G8(n: int, k: int) -> SignedGraph:
    """Theta graph (hub edge 0-1, apex 2, two-edge path 0-3-4-1) with an
    unbalanced triangle and balanced quadrangle, a path with n - k - 5
    interior vertices from the apex, and a star center with k - 1 leaves.

    With k = 1 the star degenerates to the bare path endpoint; the reduction
    then ends at the theta core itself, whose nullity is 1.  Realizes
    nullity k when n - k is even.
    """
    _check_nk(n, k, low=1, high_offset=5, name="G8")
    edges = [(0, 1, 1), (0, 2, -1), (1, 2, 1), (0, 3, 1), (3, 4, 1), (1, 4, 1)]
    a = 5
    interior = list(range(a, a + n - k - 5))
    center = a + n - k - 5
    _chain(edges, [2] + interior + [center])
    _leaves(edges, center, range(center + 1, center + 1 + k - 1))
    return SignedGraph(n, edges)


def _check_nk(n, k, *, low, high_offset, name):
    if n is None or k is None:
        raise GraphError(f"{name} needs both n and k")
    if k < low:
        raise GraphError(f"{name} needs k >= {low}, got k={k}")
    if n - k < high_offset:
        raise GraphError(f"{name} needs k <= n - {high_offset}, got n={n}, k={k}")


_FIXED_FIGURES = {
    "H1": _fig_H1,
    "H2": _fig_H2,
    "H4": _fig_H4,
    "H5": _fig_H5,
    "H6": _fig_H6,
    "H7": _fig_H7,
    "H8": _fig_H8,
    "H9": _fig_H9,
    "H11": _fig_H11,
    "H12": _fig_H12,
}

_PARAMETRIC_N = {"H3": _fig_H3, "G1": _fig_G1, "G3": _fig_G3, "G5": _fig_G5, "G6": _fig_G6}
_PARAMETRIC_NK = {"G2": _fig_G2, "G4": _fig_G4, "G7": _fig_G7, "G8": _fig_G8}


def gen_figure(fig_id: str, n: int | None = None, k: int | None = None, **signs) -> SignedGraph:
    """Build a figure graph by identifier (H1..H13, G1..G8).

    Fixed-size H graphs ignore ``n`` and ``k``.  H10 takes ``s`` (parity of
    the pendant-free quadrangle, default balanced); H13 takes ``sp``/``sq``
    (triangle parities, default both unbalanced).  H3 and G1/G3/G5/G6 take
    ``n``; G2/G4/G7/G8 take ``n`` and ``k``.
    """
    fid = fig_id.upper()
    if fid == "H10":
        s = signs.pop("s", 0)
        _no_extra(fid, signs)
        return _fig_H10(s)
    if fid == "H13":
        sp = signs.pop("sp", 1)
        sq = signs.pop("sq", 1)
        _no_extra(fid, signs)
        return _fig_H13(sp, sq)
    if signs:
        raise GraphError(f"{fid} takes no sign parameters, got {sorted(signs)}")
    if fid in _FIXED_FIGURES:
        return _FIXED_FIGURES[fid]()
    if fid in _PARAMETRIC_N:
        return _PARAMETRIC_N[fid](n)
    if fid in _PARAMETRIC_NK:
        return _PARAMETRIC_NK[fid](n, k)
    raise GraphError(f"unknown figure id {fig_id!r}")


def _no_extra(fid, leftover):
    if leftover:
        raise GraphError(f"{fid} got unexpected parameters {sorted(leftover)}")


# -- nullity-set realizers ------------------------------------------------


def _lowest_eta0_parities(q: int) -> int:
    # parity making an even cycle C_q have nullity 0
    return 1 if q % 4 == 0 else 0


def realize_nullity(class_name: str, n: int, k: int) -> SignedGraph:
    """An unbalanced signed graph of the given class with nullity exactly k.

    Classes and ranges:  ``BPlus`` (infinity base, path length >= 2): n >= 7,
    0 <= k <= n - 6.  ``BPlusPlus`` (infinity base, shared vertex): n >= 8,
    0 <= k <= n - 6.  ``Theta``: n >= 6, 0 <= k <= n - 4.

    The construction follows the class's case split (k = 0 from an exact
    infinity-formula instance or the theta chain G5, maximal k from G1/G3/G6,
    intermediate k from G2/G4/G7/G8 chosen by the parity of n - k).  The
    output is re-verified with the rank oracle before being returned.
    """
    if class_name == "BPlus":
        if n < 7:
            raise GraphError("BPlus realizer needs n >= 7")
        if not (0 <= k <= n - 6):
            raise GraphError(f"BPlus nullity set at n={n} is [0,{n - 6}], got k={k}")
        if k == 0:
            g = gen_infinity(3, 3, n - 4, 1, 1)
        elif k == n - 6:
            g = _fig_G1(n)
        else:
            g = _fig_G2(n, k)
    elif class_name == "BPlusPlus":
        if n < 8:
            raise GraphError("BPlusPlus realizer needs n >= 8")
        if not (0 <= k <= n - 6):
            raise GraphError(f"BPlusPlus nullity set at n={n} is [0,{n - 6}], got k={k}")
        if k == 0:
            q = n - 2
            if q % 2 == 1:
                # both cycles odd: make the parity invariant even, triangle negative
                sq = (1 + ((q - 3) // 2)) % 2
                g = gen_infinity(3, q, 1, 1, sq)
            else:
                # even partner cycle with nullity 0; keep the triangle negative
                g = gen_infinity(3, q, 1, 1, _lowest_eta0_parities(q))
        elif k == n - 6:
            g = _fig_G3(n)
        else:
            g = _fig_G4(n, k)
    elif class_name == "Theta":
        if n < 6:
            raise GraphError("Theta realizer needs n >= 6")
        if not (0 <= k <= n - 4):
            raise GraphError(f"Theta nullity set at n={n} is [0,{n - 4}], got k={k}")
        if k == 0:
            g = _fig_G5(n)
        elif k == n - 4:
            g = _fig_G6(n)
        elif (n - k) % 2 == 1:
            g = _fig_G7(n, k)
        else:
            g = _fig_G8(n, k)
    else:
        raise GraphError(
            f"unknown class {class_name!r}; expected BPlus, BPlusPlus, or Theta"
        )
    got = nullity_rank(g)
    if got != k:
        raise InternalError(
            f"realize_nullity({class_name}, n={n}, k={k}) built a graph with "
            f"nullity {got}; the construction is mis-transcribed"
        )
    return g


def bicyclic_class(g: SignedGraph) -> str:
    """Classify a connected bicyclic graph by its base.

    "BPlus": two vertex-disjoint cycles (infinity base with a real connecting
    path), "BPlusPlus": two cycles sharing one vertex, "Theta": three cycles.
    """
    if not is_connected(g):
        raise GraphError("bicyclic_class needs a connected graph")
    if g.m != g.n + 1:
        raise GraphError(f"bicyclic graph needs m = n + 1, got n={g.n}, m={g.m}")
    cycles = find_cycles(g)
    if len(cycles) == 3:
        return "Theta"
    a, b = (set(w.vertices) for w in cycles)
    return "BPlusPlus" if a & b else "BPlus"


# -- family-spec strings (CLI surface) ------------------------------------


def parse_family_spec(spec: str) -> SignedGraph:
    """Build a graph from a spec string like ``cycle:n=6,s=1`` or
    ``figure:id=G1,n=10`` or ``realize:class=BPlus,n=12,k=6``.

    Kinds: path, cycle, star, infinity, theta, figure, realize.  A leading
    ``family:`` prefix is accepted and ignored.
    """
    text = spec.strip()
    if text.startswith("family:"):
        text = text[len("family:"):]
    kind, _, arg_text = text.partition(":")
    kind = kind.strip().lower()
    args: dict[str, str] = {}
    if arg_text.strip():
        for item in arg_text.split(","):
            key, eq, val = item.partition("=")
            if not eq:
                raise GraphError(f"bad family parameter {item!r}, expected key=value")
            args[key.strip()] = val.strip()

    def intval(key, default=None):
        if key not in args:
            if default is None:
                raise GraphError(f"family {kind!r} needs parameter {key}")
            return default
        raw = args.pop(key)
        try:
            return int(raw)
        except ValueError:
            raise GraphError(f"parameter {key} must be an integer, got {raw!r}")

    if kind == "path":
        g = gen_path(intval("n"))
    elif kind == "cycle":
        g = gen_cycle(intval("n"), intval("s", 0))
    elif kind == "star":
        g = gen_star(intval("k"))
    elif kind == "infinity":
        g = gen_infinity(intval("p"), intval("q"), intval("l"), intval("sp", 0), intval("sq", 0))
    elif kind == "theta":
        g = gen_theta(
            intval("p"), intval("q"), intval("l"),
            (intval("s1", 0), intval("s2", 0), intval("s3", 0)),
        )
    elif kind == "figure":
        fig_id = args.pop("id", None)
        if fig_id is None:
            raise GraphError("family 'figure' needs parameter id")
        extra = {key: intval(key) for key in list(args)}
        g = gen_figure(fig_id, extra.pop("n", None), extra.pop("k", None), **extra)
        return g
    elif kind == "realize":
        cls = args.pop("class", None)
        if cls is None:
            raise GraphError("family 'realize' needs parameter class")
        g = realize_nullity(cls, intval("n"), intval("k"))
    else:
        raise GraphError(f"unknown family kind {kind!r}")
    if args:
        raise GraphError(f"unused family parameters {sorted(args)}")
    return g
