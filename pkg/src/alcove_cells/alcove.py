"""Alcoves, facettes, walls, closures, weak order, and stabilizers.

Fix a rank n and a positive integer p.  The affine hyperplanes
H_{alpha,mp} = {x : <x, alpha> = mp}, over positive roots alpha and
integers m, cut the space into open alcoves; an alcove is recorded by its
integer index family {n_alpha}: (n_alpha - 1)p < <x, alpha> < n_alpha p
for every positive root, listed in canonical root order.  A facette
generalizes this by allowing equality (a wall datum) at some roots.  All
membership and realizability questions are answered exactly by the
difference-constraint engine, since every <x, eps_i - eps_j> is a
difference of eps coordinates.

Points are always carried rho-shifted, so the affine Weyl group action
implemented by AffineMap is the dot action written plainly.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Optional, Sequence, Union

from .constraints import DifferenceSystem
from .errors import InvariantViolationError, PreconditionError, ResourceLimitError
from .rootsys import (
    Rational,
    RootA,
    ShiftedPoint,
    inverse_cartan_numerators,
    point_from_e,
    positive_roots,
    root_pairing,
    root_position,
)

DEFAULT_BFS_BOUND = 10**6
BFS_BOUND_ENV = "ALCOVE_CELLS_BFS_BOUND"


def default_bfs_bound() -> int:
    raw = os.environ.get(BFS_BOUND_ENV)
    if raw is None:
        return DEFAULT_BFS_BOUND
    try:
        value = int(raw)
    except ValueError as exc:
        raise PreconditionError(f"{BFS_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise PreconditionError(f"{BFS_BOUND_ENV} must be positive, got {value}")
    return value


# Plain frozen classes, not NamedTuples: tuple equality would make
# Wall(m) == Between(m), silently merging distinct facettes in dicts.
@dataclass(frozen=True)
class Wall:
    """Equality datum: the pairing equals index * p."""

    index: int


@dataclass(frozen=True)
class Between:
    """Open-window datum: (index - 1) * p < pairing < index * p."""

    index: int


Datum = Union[Wall, Between]


def _check_geometry_args(rank: int, p: int) -> None:
    if rank < 1:
        raise PreconditionError(f"rank must be positive, got {rank}")
    if not isinstance(p, int) or p < 1:
        raise PreconditionError(f"p must be a positive integer, got {p!r}")


def _base_system(rank: int, p: int, data: Sequence[Datum]) -> DifferenceSystem:
    """Difference system over eps coordinates e_1..e_{n+1} for the data."""
    ds = DifferenceSystem(rank + 1)
    for r, d in zip(positive_roots(rank), data):
        i, j = r.i - 1, r.j - 1
        if isinstance(d, Wall):
            ds.add_equal(i, j, d.index * p)
        else:
            ds.add_window(i, j, (d.index - 1) * p, d.index * p, strict=True)
    return ds


def _add_box(ds: DifferenceSystem, rank: int, lo: Rational, hi: Rational) -> None:
    """Restrict every simple coordinate a_k = e_k - e_{k+1} to [lo, hi]."""
    for k in range(rank):
        ds.add_window(k, k + 1, lo, hi, strict=False)


@dataclass(frozen=True)
class Alcove:
    """An open alcove, recorded by its index family in canonical root order."""

    rank: int
    p: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_geometry_args(self.rank, self.p)
        idx = tuple(int(v) for v in self.indices)
        object.__setattr__(self, "indices", idx)
        count = self.rank * (self.rank + 1) // 2
        if len(idx) != count:
            raise PreconditionError(
                f"expected {count} indices for rank {self.rank}, got {len(idx)}"
            )
        if not _base_system(self.rank, self.p, self._data()).feasible():
            raise PreconditionError(f"index family {idx} cuts out an empty region")

    def _data(self) -> tuple[Datum, ...]:
        return tuple(Between(v) for v in self.indices)

    def index_of(self, r: RootA) -> int:
        return self.indices[root_position(self.rank)[r]]

    def is_dominant(self) -> bool:
        return all(v >= 1 for v in self.indices)


@dataclass(frozen=True)
class Facette:
    """A facette: per root either a wall equality or an open window."""

    rank: int
    p: int
    data: tuple[Datum, ...]

    def __post_init__(self) -> None:
        _check_geometry_args(self.rank, self.p)
        count = self.rank * (self.rank + 1) // 2
        if len(self.data) != count:
            raise PreconditionError(
                f"expected {count} per-root data for rank {self.rank}, got {len(self.data)}"
            )
        for d in self.data:
            if not isinstance(d, (Wall, Between)) or not isinstance(d.index, int):
                raise PreconditionError(f"bad facette datum {d!r}")
        if not _base_system(self.rank, self.p, self.data).feasible():
            raise PreconditionError(f"facette data {self.data} cut out an empty region")

    def wall_roots(self) -> tuple[tuple[RootA, int], ...]:
        return tuple(
            (r, d.index)
            for r, d in zip(positive_roots(self.rank), self.data)
            if isinstance(d, Wall)
        )

    def is_alcove(self) -> bool:
        return not any(isinstance(d, Wall) for d in self.data)


def facette_from_alcove(a: Alcove) -> Facette:
    return Facette(a.rank, a.p, tuple(Between(v) for v in a.indices))


def _as_facette(f: Union[Facette, Alcove]) -> Facette:
    return facette_from_alcove(f) if isinstance(f, Alcove) else f


def bottom_alcove(rank: int, p: int) -> Alcove:
    return Alcove(rank, p, (1,) * (rank * (rank + 1) // 2))


def alcove_of(pt: ShiftedPoint, p: int) -> Alcove:
    """The unique alcove whose lower closure contains pt.

    The index at alpha is floor(pairing / p) + 1, so a pairing sitting
    exactly on a hyperplane is assigned the alcove directly above it.
    """
    _check_geometry_args(pt.rank, p)
    return Alcove(
        pt.rank, p, tuple(pt.pairing(r) // p + 1 for r in positive_roots(pt.rank))
    )


def facette_of(pt: ShiftedPoint, p: int) -> Facette:
    """The unique facette containing pt."""
    _check_geometry_args(pt.rank, p)
    data: list[Datum] = []
    for r in positive_roots(pt.rank):
        v = pt.pairing(r)
        if v % p == 0:
            data.append(Wall(int(v // p)))
        else:
            data.append(Between(int(v // p) + 1))
    return Facette(pt.rank, p, tuple(data))


def _match_point(f: Facette, pt: ShiftedPoint) -> None:
    if pt.rank != f.rank:
        raise PreconditionError(f"rank mismatch: point {pt.rank}, facette {f.rank}")


def lower_closure_contains(f: Union[Facette, Alcove], pt: ShiftedPoint) -> bool:
    """Membership of pt in the lower closure of f.

    Wall roots keep their equality; window roots admit the half-open
    interval [(index-1)p, index p), i.e. the lower bounding hyperplane is
    adjoined and the upper one is not.
    """
    f = _as_facette(f)
    _match_point(f, pt)
    p = f.p
    for r, d in zip(positive_roots(f.rank), f.data):
        v = pt.pairing(r)
        if isinstance(d, Wall):
            if v != d.index * p:
                return False
        elif not (d.index - 1) * p <= v < d.index * p:
            return False
    return True


def closure_contains(f: Union[Facette, Alcove], pt: ShiftedPoint) -> bool:
    """Membership of pt in the topological closure of f."""
    f = _as_facette(f)
    _match_point(f, pt)
    p = f.p
    for r, d in zip(positive_roots(f.rank), f.data):
        v = pt.pairing(r)
        if isinstance(d, Wall):
            if v != d.index * p:
                return False
        elif not (d.index - 1) * p <= v <= d.index * p:
            return False
    return True


@lru_cache(maxsize=None)
def interior_point(f: Facette) -> ShiftedPoint:
    """A deterministic exact rational point inside f."""
    witness = _base_system(f.rank, f.p, f.data).witness()
    if witness is None:
        raise InvariantViolationError(f"validated facette {f} has no interior point")
    return point_from_e(witness)


@dataclass(frozen=True)
class AffineMap:
    """An element of the affine Weyl group acting on shifted points.

    Stored as a permutation sigma of {1..n+1} together with an exact
    translation vector t in eps coordinates: x maps to the point with
    e'_i = e_{sigma^{-1}(i)} + t_i.  Translations are normalized to
    t_{n+1} = 0; adding a constant vector acts trivially on shifted
    points, so this fixes a canonical representative.
    """

    rank: int
    perm: tuple[int, ...]
    trans: tuple[Q, ...]

    def __post_init__(self) -> None:
        m = self.rank + 1
        if sorted(self.perm) != list(range(1, m + 1)):
            raise PreconditionError(f"{self.perm} is not a permutation of 1..{m}")
        if len(self.trans) != m:
            raise PreconditionError(f"translation needs {m} entries")
        t = tuple(Q(v) for v in self.trans)
        last = t[-1]
        object.__setattr__(self, "trans", tuple(v - last for v in t))

    @classmethod
    def identity(cls, rank: int) -> "AffineMap":
        m = rank + 1
        return cls(rank, tuple(range(1, m + 1)), (Q(0),) * m)

    @classmethod
    def reflection(cls, rank: int, r: RootA, value: Rational) -> "AffineMap":
        """The affine reflection x -> x - (<x, r> - value) r."""
        m = rank + 1
        if not (1 <= r.i < r.j <= m):
            raise PreconditionError(f"{tuple(r)} is not a positive root of A_{rank}")
        perm = list(range(1, m + 1))
        perm[r.i - 1], perm[r.j - 1] = perm[r.j - 1], perm[r.i - 1]
        trans = [Q(0)] * m
        trans[r.i - 1] = Q(value)
        trans[r.j - 1] = -Q(value)
        return cls(rank, tuple(perm), tuple(trans))

    def _inverse_perm(self) -> tuple[int, ...]:
        inv = [0] * (self.rank + 1)
        for k, img in enumerate(self.perm):
            inv[img - 1] = k + 1
        return tuple(inv)

    def apply(self, pt: ShiftedPoint) -> ShiftedPoint:
        if pt.rank != self.rank:
            raise PreconditionError(f"rank mismatch: map {self.rank}, point {pt.rank}")
        e = pt.e_coords()
        inv = self._inverse_perm()
        moved = tuple(e[inv[i] - 1] + self.trans[i] for i in range(self.rank + 1))
        return point_from_e(moved)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """The map applying `other` first, then self."""
        if other.rank != self.rank:
            raise PreconditionError("rank mismatch in composition")
        m = self.rank + 1
        perm = tuple(self.perm[other.perm[k] - 1] for k in range(m))
        inv_self = self._inverse_perm()
        trans = tuple(other.trans[inv_self[i] - 1] + self.trans[i] for i in range(m))
        return AffineMap(self.rank, perm, trans)

    def fixes(self, pt: ShiftedPoint) -> bool:
        return self.apply(pt) == pt


@lru_cache(maxsize=None)
def stabilizer_group(
    pt: ShiftedPoint, p: int, cap: Optional[int] = None
) -> frozenset[AffineMap]:
    """The subgroup generated by the reflections through pt's hyperplanes.

    Generators are the s_{alpha,mp} with <pt, alpha> = mp; closure under
    composition stops at `cap` elements (default (n+1)!, which the order
    always divides) and raises a resource-limit error beyond it.
    """
    _check_geometry_args(pt.rank, p)
    if cap is None:
        cap = math.factorial(pt.rank + 1)
    gens = [
        AffineMap.reflection(pt.rank, r, pt.pairing(r))
        for r in positive_roots(pt.rank)
        if pt.pairing(r) % p == 0
    ]
    group: set[AffineMap] = {AffineMap.identity(pt.rank)}
    frontier = list(group)
    while frontier:
        fresh: list[AffineMap] = []
        for g in frontier:
            for s in gens:
                h = s.compose(g)
                if h not in group:
                    if len(group) >= cap:
                        raise ResourceLimitError(
                            f"stabilizer closure exceeded cap {cap}"
                        )
                    group.add(h)
                    fresh.append(h)
        frontier = fresh
    for g in group:
        if not g.fixes(pt):
            raise InvariantViolationError("stabilizer element moved its point")
    return frozenset(group)


def stabilizer_subroot_system(pt: ShiftedPoint, p: int) -> frozenset[RootA]:
    """Positive roots whose pairing with pt is divisible by p."""
    _check_geometry_args(pt.rank, p)
    return frozenset(r for r in positive_roots(pt.rank) if pt.pairing(r) % p == 0)


def lower_closure_contains_via_stabilizer(
    f: Union[Facette, Alcove], pt: ShiftedPoint
) -> bool:
    """Lower-closure membership via the stabilizer characterization.

    Requires pt to lie in the topological closure of f.  Picks the
    deterministic interior point lam of f and tests lam - w.lam against
    the nonnegative root cone for every stabilizer element w; because lam
    may be a non-integral rational point, the cone test reads "lam >= w.lam"
    through exact simple-root-basis coefficients.
    """
    f = _as_facette(f)
    _match_point(f, pt)
    if not closure_contains(f, pt):
        raise PreconditionError("point lies outside the closure of the facette")
    lam = interior_point(f)
    numerators = inverse_cartan_numerators(f.rank)
    for w in stabilizer_group(pt, f.p):
        moved = w.apply(lam)
        diff = [a - b for a, b in zip(lam.coords, moved.coords)]
        for row in numerators:
            if sum(c * d for c, d in zip(row, diff)) < 0:
                return False
    return True


def _wall_witness(a: Alcove, pos: int, value_index: int) -> Optional[ShiftedPoint]:
    """A point on H_{alpha, value_index * p} interior to that candidate facet."""
    data = list(facette_from_alcove(a).data)
    data[pos] = Wall(value_index)
    ds = _base_system(a.rank, a.p, data)
    witness = ds.witness()
    return None if witness is None else point_from_e(witness)


def _walls(a: Alcove, upper: bool) -> frozenset[tuple[RootA, int]]:
    out = []
    for pos, r in enumerate(positive_roots(a.rank)):
        m = a.indices[pos] if upper else a.indices[pos] - 1
        w = _wall_witness(a, pos, m)
        if w is None:
            continue
        stab = stabilizer_group(w, a.p)
        if len(stab) != 2:
            raise InvariantViolationError(
                f"wall witness for {tuple(r)} has stabilizer order {len(stab)}"
            )
        out.append((r, m))
    return frozenset(out)


def upper_walls(a: Alcove) -> frozenset[tuple[RootA, int]]:
    """Pairs (alpha, n_alpha) whose top hyperplane carries a facet of a.

    Wall-ness is decided by exhibiting an exact rational point on the
    hyperplane that keeps every other pairing strictly inside its window;
    such a witness has stabilizer of order exactly 2, which is verified.
    """
    return _walls(a, upper=True)


def lower_walls(a: Alcove) -> frozenset[tuple[RootA, int]]:
    """Pairs (alpha, n_alpha - 1) whose bottom hyperplane carries a facet."""
    return _walls(a, upper=False)


@lru_cache(maxsize=None)
def _up_step_index_families(
    rank: int, p: int, indices: tuple[int, ...]
) -> tuple[tuple[int, ...], ...]:
    a = Alcove(rank, p, indices)
    roots = positive_roots(rank)
    pos_of = root_position(rank)
    found: list[tuple[int, tuple[int, ...]]] = []
    for r, m in upper_walls(a):
        x = interior_point(facette_from_alcove(a))
        y = AffineMap.reflection(rank, r, m * p).apply(x)
        found.append((pos_of[r], alcove_of(y, p).indices))
    found.sort()
    return tuple(idx for _, idx in found)


def up_step_neighbors(a: Alcove) -> tuple[Alcove, ...]:
    """Alcoves one raising step above a, one per upper wall.

    Each neighbor is obtained by reflecting an interior point of a across
    the wall hyperplane and re-identifying its alcove; results are ordered
    by the wall root's canonical position.
    """
    return tuple(
        Alcove(a.rank, a.p, idx)
        for idx in _up_step_index_families(a.rank, a.p, a.indices)
    )


def weak_leq(a: Alcove, b: Alcove) -> bool:
    """Componentwise index comparison; the weak order on dominant alcoves."""
    if (a.rank, a.p) != (b.rank, b.p):
        raise PreconditionError("weak_leq compares alcoves of equal rank and p")
    if not (a.is_dominant() and b.is_dominant()):
        raise PreconditionError("weak_leq is defined on dominant alcoves only")
    return all(x <= y for x, y in zip(a.indices, b.indices))


def weak_leq_oracle(a: Alcove, b: Alcove, bound: Optional[int] = None) -> bool:
    """Weak order decided independently by BFS along up_step_neighbors.

    The search never visits an alcove whose index exceeds b's anywhere
    (raising steps only ever increase indices, so the prune is exact).
    """
    if (a.rank, a.p) != (b.rank, b.p):
        raise PreconditionError("weak_leq_oracle compares alcoves of equal rank and p")
    if not (a.is_dominant() and b.is_dominant()):
        raise PreconditionError("weak_leq_oracle is defined on dominant alcoves only")
    if bound is None:
        bound = default_bfs_bound()
    start, goal = a.indices, b.indices
    if any(x > y for x, y in zip(start, goal)):
        return False
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            return True
        for nxt in _up_step_index_families(a.rank, a.p, cur):
            if nxt in seen or any(x > y for x, y in zip(nxt, goal)):
                continue
            seen.add(nxt)
            if len(seen) > bound:
                raise ResourceLimitError(f"weak-order BFS exceeded bound {bound}")
            queue.append(nxt)
    return False


def _reflected_root(beta: RootA, g: RootA) -> tuple[RootA, bool]:
    """Image of g under the finite reflection in beta, for g != beta.

    Returns (delta, negated) with delta positive: the image is delta
    itself, or -delta when the reflection flips g negative.
    """

    def swap(x: int) -> int:
        if x == beta.i:
            return beta.j
        if x == beta.j:
            return beta.i
        return x

    u, v = swap(g.i), swap(g.j)
    return (RootA(u, v), False) if u < v else (RootA(v, u), True)


@lru_cache(maxsize=None)
def _raise_tables(rank: int) -> tuple[tuple[tuple[int, int, bool], ...], ...]:
    """Per step root beta: for every root position, (source, bracket, negated).

    Encodes the exact index transform of the reflection in the upper
    bounding hyperplane H_{beta, n_beta p}.  Writing c = <beta, gamma> and
    delta for the positive root with s_beta(gamma) = +-delta, the pairing
    identity <rx, gamma> = <x, s_beta(gamma)> + c n_beta p turns the index
    window at delta into the new window at gamma: the new index is
    n_delta + c n_beta when the sign is +, and 1 - n_delta + c n_beta when
    the reflection flips gamma negative.  At beta itself it is n_beta + 1.
    """
    roots = positive_roots(rank)
    pos_of = root_position(rank)
    tables = []
    for beta in roots:
        row = []
        for g in roots:
            if g == beta:
                row.append((pos_of[beta], 0, False))
            else:
                delta, negated = _reflected_root(beta, g)
                row.append((pos_of[delta], root_pairing(beta, g), negated))
        tables.append(tuple(row))
    return tuple(tables)


def _raise_step(rank: int, indices: tuple[int, ...], beta_pos: int) -> tuple[int, ...]:
    table = _raise_tables(rank)[beta_pos]
    m = indices[beta_pos]
    out = []
    for pos in range(len(indices)):
        if pos == beta_pos:
            out.append(m + 1)
        else:
            src, bracket, negated = table[pos]
            base = 1 - indices[src] if negated else indices[src]
            out.append(base + m * bracket)
    return tuple(out)


def up_reachable(a: Alcove, b: Alcove, bound: Optional[int] = None) -> bool:
    """Reachability of b from a by raising reflections, one per step.

    A single step from alcove C reflects across the upper bounding
    hyperplane H_{beta, n_beta(C) p} for any positive root beta (a wall or
    not); the transitive closure of these steps is the full alcove-level
    raising relation, because the higher reflections s_{beta, mp} with
    m > n_beta factor through consecutive one-steps along beta.  The
    search prunes through exact monotone coordinates: raising steps
    translate points by nonnegative rational multiples of positive roots,
    so each inverse-Cartan-weighted combination of simple-root indices
    must stay above a's floor and below b's ceiling.
    """
    if (a.rank, a.p) != (b.rank, b.p):
        raise PreconditionError("up_reachable compares alcoves of equal rank and p")
    if bound is None:
        bound = default_bfs_bound()
    rank = a.rank
    if a.indices == b.indices:
        return True
    simple_pos = [root_position(rank)[RootA(k, k + 1)] for k in range(1, rank + 1)]
    numerators = inverse_cartan_numerators(rank)

    def floors_and_ceils(idx: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        lo, hi = [], []
        for row in numerators:
            lo.append(sum(c * (idx[sp] - 1) for c, sp in zip(row, simple_pos)))
            hi.append(sum(c * idx[sp] for c, sp in zip(row, simple_pos)))
        return tuple(lo), tuple(hi)

    a_lo, _ = floors_and_ceils(a.indices)
    _, b_hi = floors_and_ceils(b.indices)

    def admissible(idx: tuple[int, ...]) -> bool:
        lo, hi = floors_and_ceils(idx)
        return all(h > al for h, al in zip(hi, a_lo)) and all(
            l < bh for l, bh in zip(lo, b_hi)
        )

    seen = {a.indices}
    queue = deque([a.indices])
    count = len(positive_roots(rank))
    while queue:
        cur = queue.popleft()
        for beta_pos in range(count):
            nxt = _raise_step(rank, cur, beta_pos)
            if nxt in seen or not admissible(nxt):
                continue
            if nxt == b.indices:
                return True
            seen.add(nxt)
            if len(seen) > bound:
                raise ResourceLimitError(f"raising BFS exceeded bound {bound}")
            queue.append(nxt)
    return False
