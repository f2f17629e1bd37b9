"""Family lattices: Mobius function, cross-cuts, spanning subsets, alternating sums.

The lattice on a downward-closed family is graded by cardinality (covers add one
element), meet is intersection, and the join of a subset is the least member
containing its union, or the synthetic top when none does.
"""

from __future__ import annotations

from . import families
from .complexes import SimplicialComplex
from .families import ENUMERATION_GUARD, BitSubset, EnumerationGuardError, FamilyKind

CHAIN_GUARD = 8


class _Top:
    """Synthetic top element, distinct from every member."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TOP"


TOP = _Top()


class FamilyLattice:
    """All members of a family within 2^[n] under inclusion, plus a synthetic top."""

    def __init__(self, kind: FamilyKind, n: int, guard: int = ENUMERATION_GUARD):
        self.kind = kind
        self.n = n
        self.guard = guard
        self.members: list[BitSubset] = families.members(kind, n, guard)
        self._masks = {m.mask for m in self.members}
        self.bottom = self.members[0]

    def is_element(self, x) -> bool:
        return x is TOP or (isinstance(x, BitSubset) and x.mask in self._masks)

    def leq(self, x, y) -> bool:
        if y is TOP:
            return True
        if x is TOP:
            return False
        return x.mask & ~y.mask == 0

    def coatoms(self) -> list[BitSubset]:
        """The maximal members: exactly the elements covered by the top."""
        return families.maximal_members(self.kind, self.n, self.guard)


def _require_elements(lat: FamilyLattice, xs) -> None:
    for x in xs:
        if not lat.is_element(x):
            raise ValueError(f"{x!r} is not an element of the lattice")


def mobius(lat: FamilyLattice, x, y) -> int:
    """mu(x,y) by the recursion mu(x,x)=1, mu(x,y) = -sum over x <= z < y of mu(x,z)."""
    _require_elements(lat, [x, y])
    if not lat.leq(x, y):
        raise ValueError("mobius needs a comparable pair x <= y")
    if x is y or (x is not TOP and y is not TOP and x.mask == y.mask):
        return 1
    interval = [
        z
        for z in lat.members
        if lat.leq(x, z) and lat.leq(z, y) and (y is TOP or z.mask != y.mask)
    ]
    interval.sort(key=lambda z: (len(z), z.mask))
    mu: dict[int, int] = {}
    for z in interval:
        if z.mask == x.mask:
            mu[z.mask] = 1
        else:
            mu[z.mask] = -sum(v for wmask, v in mu.items() if wmask & ~z.mask == 0)
    return -sum(mu.values())


def alt_sum(kind: FamilyKind, n: int, guard: int = ENUMERATION_GUARD) -> int:
    """Alternating sum over cardinalities, k=0 included: sum of (-1)^k F_{n,k}."""
    return families.count_triangle(kind, n, guard).alternating_sum(n)


def is_crosscut(lat: FamilyLattice, cut, guard: int = CHAIN_GUARD) -> bool:
    """True iff cut avoids bottom and top, is an antichain, and meets every maximal chain."""
    if lat.n > guard:
        raise EnumerationGuardError(
            f"maximal-chain enumeration guarded at n <= {guard} (got n={lat.n})"
        )
    cut = list(cut)
    if any(x is TOP for x in cut):
        return False
    _require_elements(lat, cut)
    cut_masks = {x.mask for x in cut}
    if 0 in cut_masks:
        return False
    masks = sorted(cut_masks)
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a & ~b == 0:
                return False
    # search for a maximal chain avoiding the cut: bottom -> +1 element covers -> coatom
    coatom_masks = {m.mask for m in lat.coatoms()}
    seen = {0}
    stack = [0]
    while stack:
        m = stack.pop()
        if m in coatom_masks:
            return False
        for i in range(lat.n):
            if m >> i & 1:
                continue
            nxt = m | 1 << i
            if nxt in seen or nxt in cut_masks or nxt not in lat._masks:
                continue
            seen.add(nxt)
            stack.append(nxt)
    return True


def is_spanning(lat: FamilyLattice, subset) -> bool:
    """True iff the subset's meet is the bottom and its join is the top."""
    elems = list(subset)
    if any(x is TOP for x in elems):
        raise ValueError("spanning test expects elements below the top")
    _require_elements(lat, elems)
    if not elems:
        return False
    meet = elems[0].mask
    union = 0
    for x in elems:
        meet &= x.mask
        union |= x.mask
    if meet != 0:
        return False
    return not any(union & ~m.mask == 0 for m in lat.members)


def crosscut_complex(lat: FamilyLattice, cut, guard: int = CHAIN_GUARD) -> SimplicialComplex:
    """The literal cross-cut complex: one vertex per element of the cut (indexed in
    mask order), and a face for every subset that does not span."""
    if not is_crosscut(lat, cut, guard):
        raise ValueError("crosscut_complex needs a valid cross-cut")
    order = sorted(cut, key=lambda x: x.mask)
    k = len(order)
    faces = []
    for bits in range(1, 1 << k):
        indices = [i for i in range(k) if bits >> i & 1]
        if not is_spanning(lat, [order[i] for i in indices]):
            faces.append(indices)
    return SimplicialComplex(faces)
