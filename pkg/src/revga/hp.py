"""Exact reversal distance for signed permutations.

d = (n+1) - c + h + f, where c is the number of alternating cycles in the
breakpoint graph, h the number of hurdles and f the fortress indicator.

Definitions used throughout:
  - a gray edge between point positions q < r is oriented iff r - q is even;
  - a nontrivial cycle is oriented iff it has an oriented gray edge;
  - two cycles interleave iff some gray edges cross (q1 < q2 < r1 < r2);
  - components are the connected classes of the interleaving relation over
    nontrivial cycles; a component is unoriented iff all its cycles are;
  - a hurdle is an unoriented component occupying one contiguous run on the
    circle of positions 0..2n+1 restricted to unoriented-component points;
  - a super hurdle is a hurdle whose removal turns some non-hurdle
    unoriented component into a hurdle;
  - f = 1 iff the hurdle count is odd and every hurdle is a super hurdle.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bpgraph import points_of, trace_cycles
from .perms import (
    Permutation,
    Reversal,
    apply_reversal_signed,
    is_identity,
)


class NoImprovingReversal(RuntimeError):
    """No distance-decreasing reversal exists; indicates a distance bug."""


@dataclass(frozen=True)
class DistanceBreakdown:
    n: int
    c: int  # alternating cycles
    h: int  # hurdles
    f: int  # fortress indicator
    d: int  # exact reversal distance

    def render(self) -> str:
        return f"d={self.d} c={self.c} h={self.h} f={self.f}"


def _circular_hurdles(position_comps, include):
    """Components of `include` forming exactly one run on the circle.

    position_comps: (position, component) pairs sorted by position.
    """
    runs = []
    for _, comp in position_comps:
        if comp in include and (not runs or runs[-1] != comp):
            runs.append(comp)
    if len(runs) > 1 and runs[0] == runs[-1]:
        runs.pop()
    counts = {}
    for comp in runs:
        counts[comp] = counts.get(comp, 0) + 1
    return {comp for comp, k in counts.items() if k == 1}


def signed_distance(p: Permutation) -> DistanceBreakdown:
    n = len(p)
    cycles = trace_cycles(points_of(p))
    c = len(cycles)

    nontrivial = [cy for cy in cycles if len(cy.positions) > 2]
    k = len(nontrivial)
    oriented = [
        any((r - q) % 2 == 0 for q, r in cy.gray_edges) for cy in nontrivial
    ]

    # union-find over nontrivial cycles, joined by crossing gray edges
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = [
        (q, r, idx)
        for idx, cy in enumerate(nontrivial)
        for q, r in cy.gray_edges
    ]
    for a in range(len(edges)):
        q1, r1, c1 = edges[a]
        for b in range(a + 1, len(edges)):
            q2, r2, c2 = edges[b]
            ra, rb = find(c1), find(c2)
            if ra != rb and (q1 < q2 < r1 < r2 or q2 < q1 < r2 < r1):
                parent[ra] = rb

    comp_oriented = {}
    comp_positions = {}
    for idx, cy in enumerate(nontrivial):
        root = find(idx)
        comp_oriented[root] = comp_oriented.get(root, False) or oriented[idx]
        comp_positions.setdefault(root, []).extend(cy.positions)

    unoriented_comps = {
        root for root, ok in comp_oriented.items() if not ok
    }
    h = 0
    f = 0
    if unoriented_comps:
        position_comps = sorted(
            (pos, root)
            for root in unoriented_comps
            for pos in comp_positions[root]
        )
        hurdles = _circular_hurdles(position_comps, unoriented_comps)
        h = len(hurdles)
        supers = set()
        for hd in hurdles:
            promoted = _circular_hurdles(position_comps, unoriented_comps - {hd})
            if any(x not in hurdles for x in promoted):
                supers.add(hd)
        if h % 2 == 1 and supers == hurdles:
            f = 1

    d = (n + 1) - c + h + f
    return DistanceBreakdown(n=n, c=c, h=h, f=f, d=d)


def distance_lower_bound(p: Permutation) -> int:
    """(n+1) - c; never exceeds the exact distance since h, f >= 0."""
    n = len(p)
    return (n + 1) - len(trace_cycles(points_of(p)))


def extract_optimal_sequence(p: Permutation) -> list:
    """Greedy optimal sorting: always take the lexicographically smallest
    reversal that drops the exact distance by one."""
    seq = []
    cur = p
    d = signed_distance(cur).d
    n = len(p)
    while d > 0:
        step = None
        for i in range(1, n + 1):
            for j in range(i + 1, n + 2):
                r = Reversal(i, j)
                cand = apply_reversal_signed(cur, r)
                if signed_distance(cand).d == d - 1:
                    step = (r, cand)
                    break
            if step:
                break
        if step is None:
            raise NoImprovingReversal(f"stuck at {cur!r} with d={d}")
        seq.append(step[0])
        cur = step[1]
        d -= 1
    assert is_identity(cur)
    return seq
