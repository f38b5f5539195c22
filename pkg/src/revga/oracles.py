"""Ground-truth oracles and comparison baselines.

Oracles are breadth-first searches over complete reversal spaces (signed
up to n=7, unsigned up to n=9) plus exhaustive minimization over all 2^n
sign embeddings. Baselines: the one-block-per-reversal trivial sort and a
greedy breakpoint-removal sort.

BFS tables can be cached on disk. Cache format, little-endian: 4-byte
magic b"RVGA", 1-byte format version, 1-byte kind (0 unsigned / 1 signed),
1-byte n, then one distance byte per state indexed by rank (lexicographic
permutation rank; signed rank = perm_rank * 2^n + sign bits, bit k set iff
position k is negative).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import factorial
from pathlib import Path

from .bpgraph import breakpoint_count
from .perms import (
    Permutation,
    Reversal,
    Rng,
    apply_reversal_unsigned,
    find_strips,
    identity,
    is_identity,
)

SIGNED_BFS_MAX_N = 7
UNSIGNED_BFS_MAX_N = 9
EMBEDDING_MAX_N = 16

_MAGIC = b"RVGA"
_CACHE_VERSION = 1
_KIND_CODE = {"unsigned": 0, "signed": 1}

_TABLES = {}  # (kind, n) -> DistanceTable, per-process memo


class SizeTooLarge(ValueError):
    """Requested oracle size exceeds the configured cap."""


def default_cache_dir() -> Path:
    env = os.environ.get("REVGA_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or (Path.home() / ".cache")
    return Path(base) / "revga"


def _perm_rank(vals) -> int:
    # vals: distinct 0-based values; lexicographic rank via Lehmer code
    n = len(vals)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if vals[j] < vals[i])
        r = r * (n - i) + smaller
    return r


def _signed_code(p: Permutation) -> bytes:
    # element code: 2*(|v|-1) + (1 if negative)
    return bytes(2 * (abs(v) - 1) + (v < 0) for v in p)


def _unsigned_code(p: Permutation) -> bytes:
    return bytes(v - 1 for v in p)


def _signed_rank(code: bytes) -> int:
    n = len(code)
    mags = [c >> 1 for c in code]
    bits = 0
    for k, c in enumerate(code):
        bits |= (c & 1) << k
    return (_perm_rank(mags) << n) | bits


@dataclass
class DistanceTable:
    kind: str  # "signed" | "unsigned"
    n: int
    dist: bytes  # distance per state rank

    def distance(self, p: Permutation) -> int:
        if self.kind == "signed":
            return self.dist[_signed_rank(_signed_code(p))]
        return self.dist[_perm_rank(_unsigned_code(p))]

    @property
    def size(self) -> int:
        return len(self.dist)


def _cache_path(cache_dir, kind: str, n: int) -> Path:
    return Path(cache_dir) / f"{kind}_n{n}_v{_CACHE_VERSION}.bin"


def _load_cache(cache_dir, kind: str, n: int, size: int):
    path = _cache_path(cache_dir, kind, n)
    if not path.is_file():
        return None
    blob = path.read_bytes()
    header = _MAGIC + bytes([_CACHE_VERSION, _KIND_CODE[kind], n])
    if not blob.startswith(header) or len(blob) != len(header) + size:
        return None
    return DistanceTable(kind=kind, n=n, dist=blob[len(header):])


def _store_cache(cache_dir, table: DistanceTable) -> None:
    path = _cache_path(cache_dir, table.kind, table.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = _MAGIC + bytes([_CACHE_VERSION, _KIND_CODE[table.kind], table.n])
    path.write_bytes(header + bytes(table.dist))


def _bfs(start: bytes, segments, flip) -> dict:
    """Layered BFS over byte-coded states; flip is a translate table for
    sign negation (None for unsigned states)."""
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for s in frontier:
            for a, b in segments:
                mid = s[a:b][::-1]
                if flip is not None:
                    mid = mid.translate(flip)
                t = s[:a] + mid + s[b:]
                if t not in dist:
                    dist[t] = d
                    nxt.append(t)
        frontier = nxt
    return dist


def bfs_signed_distances(n: int, cache_dir=None) -> DistanceTable:
    """Exact distance for every signed permutation of order n <= 7."""
    if n > SIGNED_BFS_MAX_N:
        raise SizeTooLarge(f"signed BFS capped at n={SIGNED_BFS_MAX_N}")
    key = ("signed", n)
    if key in _TABLES:
        return _TABLES[key]
    size = factorial(n) << n
    if cache_dir is not None:
        cached = _load_cache(cache_dir, "signed", n, size)
        if cached is not None:
            _TABLES[key] = cached
            return cached
    start = bytes(2 * k for k in range(n))
    flip = bytes((c ^ 1) if c < 2 * n else c for c in range(256))
    segments = [(i, j) for i in range(n) for j in range(i + 1, n + 1)]
    dist = _bfs(start, segments, flip)
    assert len(dist) == size, "signed reversal space must be connected"
    arr = bytearray(size)
    for code, dv in dist.items():
        arr[_signed_rank(code)] = dv
    table = DistanceTable(kind="signed", n=n, dist=bytes(arr))
    if cache_dir is not None:
        _store_cache(cache_dir, table)
    _TABLES[key] = table
    return table


def bfs_unsigned_distances(n: int, cache_dir=None) -> DistanceTable:
    """Exact distance for every unsigned permutation of order n <= 9."""
    if n > UNSIGNED_BFS_MAX_N:
        raise SizeTooLarge(f"unsigned BFS capped at n={UNSIGNED_BFS_MAX_N}")
    key = ("unsigned", n)
    if key in _TABLES:
        return _TABLES[key]
    size = factorial(n)
    if cache_dir is not None:
        cached = _load_cache(cache_dir, "unsigned", n, size)
        if cached is not None:
            _TABLES[key] = cached
            return cached
    start = bytes(range(n))
    # length-1 segments are no-ops on unsigned states
    segments = [(i, j) for i in range(n) for j in range(i + 2, n + 1)]
    dist = _bfs(start, segments, None)
    assert len(dist) == size, "unsigned reversal space must be connected"
    arr = bytearray(size)
    for code, dv in dist.items():
        arr[_perm_rank(code)] = dv
    table = DistanceTable(kind="unsigned", n=n, dist=bytes(arr))
    if cache_dir is not None:
        _store_cache(cache_dir, table)
    _TABLES[key] = table
    return table


def bfs_unsigned_distance(p: Permutation, cache_dir=None) -> int:
    return bfs_unsigned_distances(len(p), cache_dir=cache_dir).distance(p)


def random_signed_permutation(n: int, rng: Rng) -> Permutation:
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return tuple(v if rng.random() < 0.5 else -v for v in vals)


def exhaustive_embedding_min(p: Permutation):
    """Minimum signed distance over all 2^n sign embeddings of p.

    Returns (distance, genome) where genome[k] is True for a positive sign
    at position k. The minimum equals the exact unsigned distance of p.
    """
    from .hp import signed_distance  # local import avoids a cycle at import time

    n = len(p)
    if n > EMBEDDING_MAX_N:
        raise SizeTooLarge(f"embedding enumeration capped at n={EMBEDDING_MAX_N}")
    best = None
    best_genome = None
    for mask in range(1 << n):
        sp = tuple(-v if (mask >> k) & 1 else v for k, v in enumerate(p))
        d = signed_distance(sp).d
        if best is None or d < best:
            best = d
            best_genome = tuple(not ((mask >> k) & 1) for k in range(n))
            if best == 0:
                break
    return best, best_genome


def trivial_sort(p: Permutation) -> list:
    """One reversal per gene block: put value k at position k, k = 1..n-1."""
    seq = []
    cur = list(p)
    n = len(cur)
    for k in range(1, n):
        q = cur.index(k) + 1
        if q != k:
            r = Reversal(k, q + 1)
            cur[k - 1:q] = cur[k - 1:q][::-1]
            seq.append(r)
    assert cur == list(range(1, n + 1))
    return seq


def _has_descending(p: Permutation) -> bool:
    return any(s.direction == "descending" for s in find_strips(p))


def greedy_breakpoint_sort(p: Permutation) -> list:
    """Greedy baseline: remove 2 breakpoints if possible, else 1 (keeping a
    descending strip when there is a choice), else flip an ascending strip
    to create a descending one."""
    seq = []
    cur = p
    n = len(cur)
    limit = 2 * (n + 2)
    while not is_identity(cur):
        if len(seq) >= limit:
            raise RuntimeError(f"greedy sort failed to converge on {p!r}")
        bcur = breakpoint_count(cur)
        candidates = []
        for i in range(1, n + 1):
            for j in range(i + 2, n + 2):
                r = Reversal(i, j)
                res = apply_reversal_unsigned(cur, r)
                candidates.append((breakpoint_count(res) - bcur, r, res))
        dmin = min(c[0] for c in candidates)
        if dmin < 0:
            pool = [c for c in candidates if c[0] == dmin]
            if dmin == -1:
                keep = [c for c in pool if _has_descending(c[2])]
                pool = keep or pool
            _, r, res = pool[0]
        else:
            strip = next(
                (s for s in find_strips(cur)
                 if s.direction == "ascending" and s.end > s.start),
                None,
            )
            if strip is None:
                raise RuntimeError(f"greedy sort stuck on {cur!r}")
            r = Reversal(strip.start, strip.end + 1)
            res = apply_reversal_unsigned(cur, r)
        seq.append(r)
        cur = res
    return seq
