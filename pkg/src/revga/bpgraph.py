"""Breakpoint graph for signed permutations.

Each element +x becomes the point pair (2x-1, 2x); -x becomes (2x, 2x-1).
The sequence is padded with 0 in front and 2n+1 at the back. Black edges
join adjacent point positions (2k, 2k+1); gray edges join point values
(2k, 2k+1). (The literature sometimes draws the gray edges red.) Every
point then has exactly one edge of each color, so the alternating-cycle
decomposition is unique.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation, validate_signed


def points_of(p: Permutation) -> tuple:
    """Padded point sequence of length 2n+2 for a signed permutation."""
    pts = [0]
    for x in p:
        if x > 0:
            pts.append(2 * x - 1)
            pts.append(2 * x)
        else:
            pts.append(-2 * x)
            pts.append(-2 * x - 1)
    pts.append(2 * len(p) + 1)
    return tuple(pts)


@dataclass(frozen=True)
class Cycle:
    positions: tuple  # point positions in traversal order
    gray_edges: tuple  # (q, r) position pairs, q < r

    @property
    def trivial(self) -> bool:
        # one black edge + one gray edge: an adjacency already in place
        return len(self.positions) == 2


@dataclass(frozen=True)
class BreakpointGraph:
    points: tuple
    cycles: tuple

    @property
    def n(self) -> int:
        return len(self.points) // 2 - 1


def trace_cycles(points: tuple) -> list:
    """Walk the unique alternating decomposition.

    The black partner of position q is q^1; the gray partner of value v is
    v^1, so the walk is index arithmetic only.
    """
    m = len(points)
    pos = [0] * m
    for q, v in enumerate(points):
        pos[v] = q
    seen = [False] * m
    cycles = []
    for s in range(m):
        if seen[s]:
            continue
        qs = []
        grays = []
        q = s
        while True:
            q2 = q ^ 1
            qs.append(q)
            qs.append(q2)
            seen[q] = seen[q2] = True
            q3 = pos[points[q2] ^ 1]
            grays.append((q2, q3) if q2 < q3 else (q3, q2))
            q = q3
            if q == s:
                break
        cycles.append(Cycle(tuple(qs), tuple(grays)))
    return cycles


def build_graph(p: Permutation) -> BreakpointGraph:
    validate_signed(p)
    pts = points_of(p)
    return BreakpointGraph(points=pts, cycles=tuple(trace_cycles(pts)))


def cycle_count(g: BreakpointGraph) -> int:
    return len(g.cycles)


def breakpoint_count(p: Permutation) -> int:
    """Padded adjacent pairs of an unsigned permutation that are not
    consecutive values (pi[0] := 0, pi[n+1] := n+1)."""
    ext = (0,) + tuple(p) + (len(p) + 1,)
    return sum(1 for k in range(len(ext) - 1) if abs(ext[k + 1] - ext[k]) != 1)


def dump_cycles(g: BreakpointGraph) -> str:
    """One line per cycle: the ordered point positions. For golden files."""
    return "\n".join(" ".join(str(q) for q in c.positions) for c in g.cycles)
