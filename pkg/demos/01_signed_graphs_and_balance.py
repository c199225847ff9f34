"""Signed graphs, switching, balance, and canonical forms.

A signed graph carries a +1/-1 label on every edge.  Switching by a vertex
sign function theta resigns each edge uv to theta(u)*sign*theta(v); it never
changes any cycle's sign, and a graph is balanced (every cycle positive)
exactly when it can be switched to the all-positive signature.

Run:  python demos/01_signed_graphs_and_balance.py
"""

from sgn import (
    SignedGraph,
    canonical_signature,
    find_cycles,
    is_balanced,
    parse_edge_list,
    serialize_edge_list,
    switch,
    switching_equivalent,
)

print("=" * 64)
print("Building and parsing")
print("=" * 64)

triangle = parse_edge_list("""\
# a triangle with one negative edge
3 3
0 1 1
1 2 1
0 2 -1
""")
print("parsed:", triangle)
print("serialized back:\n" + serialize_edge_list(triangle))

print("=" * 64)
print("Balance and witnesses")
print("=" * 64)

ok, witness = is_balanced(triangle)
print("one negative edge on a triangle -> balanced?", ok)
print("negative cycle witness:", witness)

square = SignedGraph(4, [(0, 1, -1), (1, 2, 1), (2, 3, -1), (0, 3, 1)])
ok, theta = is_balanced(square)
print("\ntwo negative edges on a 4-cycle -> balanced?", ok)
print("switching function that clears the signs:", theta)
print("after switching:", switch(square, theta))

print()
print("=" * 64)
print("Switching preserves cycle signs")
print("=" * 64)

theta = {0: -1, 1: 1, 2: -1}
switched = switch(triangle, theta)
print("before:", [(w.vertices, w.sign) for w in find_cycles(triangle)])
print("after :", [(w.vertices, w.sign) for w in find_cycles(switched)])

print()
print("=" * 64)
print("Canonical forms decide switching equivalence")
print("=" * 64)

a = SignedGraph(3, [(0, 1, -1), (1, 2, 1), (0, 2, 1)])
b = SignedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
print("a canonical:", canonical_signature(a))
print("b canonical:", canonical_signature(b))
print("equivalent?", switching_equivalent(a, b))

balanced_square = SignedGraph(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (0, 3, 1)])
print("\nbalanced graphs canonicalize to all-positive:",
      canonical_signature(balanced_square))
