"""Exact integer reduced simplicial homology via boundary matrices and Smith
normal form.

The boundary in dimension 0 is the augmentation map (one all-ones row), so
rank H~_d = f_d - rank d_d - rank d_{d+1} holds uniformly and a point has
trivial homology everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .complexes import SimplicialComplex, faces_by_dimension

Face = tuple[int, ...]


@dataclass(eq=True)
class BoundaryMatrix:
    """Matrix of d_d: rows index (d-1)-faces, columns index d-faces, entries in
    {-1,0,+1}; for d=0 the single row () is the augmentation."""

    dim: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    entries: dict[tuple[int, int], int] = field(repr=False)

    def to_dense(self) -> list[list[int]]:
        m = [[0] * len(self.cols) for _ in self.rows]
        for (i, j), v in self.entries.items():
            m[i][j] = v
        return m


@dataclass(frozen=True)
class HomologyGroup:
    """One reduced homology group: free rank plus invariant factors > 1."""

    rank: int
    torsion: tuple[int, ...] = ()


def _boundary_entries(rows: list[Face], cols: list[Face]) -> dict[tuple[int, int], int]:
    index = {f: i for i, f in enumerate(rows)}
    entries: dict[tuple[int, int], int] = {}
    for j, sigma in enumerate(cols):
        if len(sigma) == 1:
            entries[index[()], j] = 1
            continue
        for k in range(len(sigma)):
            tau = sigma[:k] + sigma[k + 1 :]
            entries[index[tau], j] = -1 if k & 1 else 1
    return entries


def boundary_matrix(c: SimplicialComplex, d: int) -> BoundaryMatrix:
    """Boundary map from d-faces to (d-1)-faces; the omitted-vertex position sets
    the sign (-1)^position."""
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    levels = faces_by_dimension(c, d)
    rows = [()] if d == 0 else levels[d - 1]
    cols = levels[d]
    return BoundaryMatrix(d, tuple(rows), tuple(cols), _boundary_entries(rows, cols))


def _columns(entries: dict[tuple[int, int], int]) -> dict[int, dict[int, int]]:
    cols: dict[int, dict[int, int]] = {}
    for (i, j), v in entries.items():
        if v:
            cols.setdefault(j, {})[i] = v
    return cols


def _pivot_values(cols: dict[int, dict[int, int]]) -> list[int]:
    """Diagonalize {col: {row: value}} in place by integer row and column
    operations; returns the diagonal (not yet a divisibility chain)."""
    rows: dict[int, set[int]] = {}
    for j, col in cols.items():
        for i in col:
            rows.setdefault(i, set()).add(j)
    units: list[tuple[int, int]] = [
        (j, i) for j, col in cols.items() for i, v in col.items() if v in (1, -1)
    ]

    def col_axpy(dst: int, src: int, q: int) -> None:
        # column dst -= q * column src
        target = cols.setdefault(dst, {})
        for i, v in cols[src].items():
            new = target.get(i, 0) - q * v
            if new:
                if i not in target:
                    rows[i].add(dst)
                target[i] = new
                if new in (1, -1):
                    units.append((dst, i))
            elif i in target:
                del target[i]
                rows[i].discard(dst)
        if not target:
            del cols[dst]

    pivots: list[int] = []
    while True:
        pj = pi = None
        while units:
            j, i = units.pop()
            if cols.get(j, {}).get(i) in (1, -1):
                pj, pi = j, i
                break
        if pj is None:
            best = None
            for j, col in cols.items():
                for i, v in col.items():
                    if best is None or abs(v) < best[2]:
                        best = (j, i, abs(v))
                if best is not None and best[2] == 1:
                    break
            if best is None:
                return pivots
            pj, pi = best[0], best[1]
        while True:
            v = cols[pj][pi]
            for j in sorted(rows[pi]):
                if j == pj:
                    continue
                q = cols[j][pi] // v
                if q:
                    col_axpy(j, pj, q)
            leftover = [j for j in rows[pi] if j != pj]
            if leftover:
                # a remainder smaller than |v| survives; pivot on it instead
                pj = min(leftover, key=lambda j: abs(cols[j][pi]))
                continue
            col = cols[pj]
            for i in list(col):
                if i == pi:
                    continue
                q = col[i] // v
                if q:
                    # row i -= q * row pi, and row pi lives only in column pj
                    new = col[i] - q * v
                    if new:
                        col[i] = new
                        if new in (1, -1):
                            units.append((pj, i))
                    else:
                        del col[i]
                        rows[i].discard(pj)
            leftover_rows = [i for i in col if i != pi]
            if leftover_rows:
                pi = min(leftover_rows, key=lambda i: abs(col[i]))
                continue
            break
        pivots.append(cols[pj][pi])
        del cols[pj]
        del rows[pi]


def _divisibility_chain(pivots: list[int]) -> tuple[int, ...]:
    vals = sorted(abs(v) for v in pivots)
    if all(v == 1 for v in vals):
        return tuple(vals)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            a, b = vals[i], vals[j]
            g = gcd(a, b)
            vals[i], vals[j] = g, a * b // g
    return tuple(vals)


def smith_normal_form(m) -> tuple[tuple[int, ...], int]:
    """Invariant factors (units included, d1 | d2 | ...) and rank of an integer
    matrix given as rows; the input is not mutated."""
    cols: dict[int, dict[int, int]] = {}
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            if v:
                cols.setdefault(j, {})[i] = int(v)
    factors = _divisibility_chain(_pivot_values(cols))
    return factors, len(factors)


def reduced_homology(c: SimplicialComplex, d_max: int) -> list[HomologyGroup]:
    """H~_d for d = 0..d_max: rank f_d - rank d_d - rank d_{d+1}, torsion from the
    invariant factors of d_{d+1}."""
    if d_max < 0:
        raise ValueError(f"need d_max >= 0, got {d_max}")
    levels = faces_by_dimension(c, d_max + 1)
    ranks: list[int] = []
    chains: list[tuple[int, ...]] = []
    for d in range(d_max + 2):
        rows = [()] if d == 0 else levels[d - 1]
        pivots = _pivot_values(_columns(_boundary_entries(rows, levels[d])))
        ranks.append(len(pivots))
        chains.append(_divisibility_chain(pivots))
    out = []
    for d in range(d_max + 1):
        rank = len(levels[d]) - ranks[d] - ranks[d + 1]
        torsion = tuple(v for v in chains[d + 1] if v > 1)
        out.append(HomologyGroup(rank, torsion))
    return out


def betti_zero_fast(c: SimplicialComplex) -> int:
    """Reduced Betti number in dimension 0: facet-graph components minus one."""
    if not c.facets:
        return 0
    parent = {v: v for v in c.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in c.facets:
        it = iter(sorted(f))
        root = find(next(it))
        for v in it:
            parent[find(v)] = root
    return len({find(v) for v in c.vertices}) - 1


def euler_check(c: SimplicialComplex, d_max: int) -> bool:
    """Euler-Poincare consistency: alternating face count minus one equals the
    alternating sum of homology ranks; vacuously true for the empty complex."""
    if not c.facets:
        return True
    if c.dim > d_max:
        raise ValueError(f"complex has dimension {c.dim}, above the cap {d_max}")
    levels = faces_by_dimension(c, d_max)
    lhs = sum((-1) ** d * len(level) for d, level in enumerate(levels)) - 1
    rhs = sum((-1) ** d * g.rank for d, g in enumerate(reduced_homology(c, d_max)))
    return lhs == rhs
