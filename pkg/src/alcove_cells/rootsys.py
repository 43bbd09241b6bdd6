"""Type A root-system primitives over exact rational arithmetic.

The positive roots of A_n are the vectors eps_i - eps_j for
1 <= i < j <= n+1, stored as the index pair (i, j).  Points are carried
in fundamental-weight coordinates and are always rho-shifted: the k-th
coordinate of a ShiftedPoint is <pt, alpha_k^v> for the k-th simple root,
already including the +1 shift.  The system is simply laced, so roots and
coroots are identified throughout and every pairing below is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from .errors import PreconditionError

Rational = Union[int, Q]


class RootA(NamedTuple):
    """Positive root eps_i - eps_j of A_n, encoded by 1 <= i < j <= n+1."""

    i: int
    j: int


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[RootA, ...]:
    """All n(n+1)/2 positive roots of A_n, lexicographic in (i, j).

    This ordering is the canonical root order of the package: every
    per-root sequence (alcove indices, facette data) follows it.
    """
    if n < 1:
        raise PreconditionError(f"rank must be a positive integer, got {n}")
    return tuple(RootA(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2))


@lru_cache(maxsize=None)
def root_position(n: int) -> dict[RootA, int]:
    """Index of each positive root inside positive_roots(n)."""
    return {r: k for k, r in enumerate(positive_roots(n))}


def simple_roots(n: int) -> tuple[RootA, ...]:
    return tuple(RootA(i, i + 1) for i in range(1, n + 1))


def _check_root(n: int, r: RootA) -> None:
    if not (1 <= r.i < r.j <= n + 1):
        raise PreconditionError(f"{tuple(r)} is not a positive root of A_{n}")


def root_pairing(a: RootA, b: RootA) -> int:
    """Exact bracket <a, b^v> of two type A roots; values in {-2,-1,0,1,2}."""

    def d(x: int, y: int) -> int:
        return 1 if x == y else 0

    return d(a.i, b.i) - d(a.i, b.j) - d(a.j, b.i) + d(a.j, b.j)


def root_leq(a: RootA, b: RootA) -> bool:
    """Root order: a <= b iff b - a is a nonnegative sum of simple roots.

    In type A this is interval containment: [a.i, a.j] inside [b.i, b.j].
    """
    return b.i <= a.i and a.j <= b.j


@dataclass(frozen=True)
class ShiftedPoint:
    """A rho-shifted point of the weight space, in exact coordinates.

    coords[k-1] is the pairing with the k-th simple coroot; the point is
    dominant and regular exactly when every coordinate is positive.
    """

    coords: tuple[Q, ...]
    _prefix: tuple[Q, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.coords) < 1:
            raise PreconditionError("a point needs at least one coordinate")
        vals = tuple(c if isinstance(c, Q) else Q(c) for c in self.coords)
        object.__setattr__(self, "coords", vals)
        acc: list[Q] = [Q(0)]
        for c in vals:
            acc.append(acc[-1] + c)
        object.__setattr__(self, "_prefix", tuple(acc))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def pairing(self, r: RootA) -> Q:
        """Exact value of <pt, r^v>; additive over the root interval."""
        _check_root(self.rank, r)
        return self._prefix[r.j - 1] - self._prefix[r.i - 1]

    def is_regular_dominant(self) -> bool:
        return all(c > 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def weight(self) -> tuple[int, ...]:
        """Unshifted weight coordinates; requires an integral dominant point."""
        if not self.is_integral():
            raise PreconditionError(f"{self} is not integral")
        return tuple(int(c) - 1 for c in self.coords)

    def e_coords(self) -> tuple[Q, ...]:
        """Coordinates in the eps basis, normalized so the last entry is 0.

        e_k - e_l is the pairing with eps_k - eps_l for k < l.
        """
        total = self._prefix[-1]
        return tuple(total - self._prefix[k] for k in range(self.rank + 1))


def shifted_point(coords: Sequence[Rational]) -> ShiftedPoint:
    return ShiftedPoint(tuple(Q(c) for c in coords))


def point_from_weight(weight: Sequence[int]) -> ShiftedPoint:
    """Rho-shift a dominant integral weight given by fundamental coordinates."""
    if any(w < 0 for w in weight):
        raise PreconditionError(f"weight {tuple(weight)} is not dominant")
    return ShiftedPoint(tuple(Q(w + 1) for w in weight))


def point_from_e(e: Sequence[Rational]) -> ShiftedPoint:
    """Inverse of ShiftedPoint.e_coords up to the irrelevant global shift."""
    vals = [Q(c) for c in e]
    if len(vals) < 2:
        raise PreconditionError("eps coordinates need at least two entries")
    return ShiftedPoint(tuple(vals[k] - vals[k + 1] for k in range(len(vals) - 1)))


@lru_cache(maxsize=None)
def inverse_cartan_numerators(n: int) -> tuple[tuple[int, ...], ...]:
    """(n+1) times the inverse Cartan matrix of A_n, as exact integers.

    Entry [k][j] is min(k, j) * (n + 1 - max(k, j)) for 1-based k, j.
    Row k lists (n+1) times the coefficients expressing the k-th
    fundamental weight in the simple-root basis.
    """
    return tuple(
        tuple(min(k, j) * (n + 1 - max(k, j)) for j in range(1, n + 1))
        for k in range(1, n + 1)
    )


def root_basis_coefficients(diff: Sequence[Rational]) -> tuple[Q, ...]:
    """Simple-root-basis coefficients of a vector given in fundamental coords."""
    n = len(diff)
    num = inverse_cartan_numerators(n)
    vals = [Q(c) for c in diff]
    return tuple(
        sum((num[k][j] * vals[j] for j in range(n)), Q(0)) / (n + 1) for k in range(n)
    )


def chain_components(roots: Sequence[RootA]) -> tuple[tuple[int, ...], ...] | None:
    """Decompose a root set into ascending chains, or return None.

    A set of positive roots has pairwise brackets in {0, -1} exactly when
    it splits into disjoint chains (i_1,i_2), (i_2,i_3), ..., with strictly
    increasing nodes and no index shared between chains.  Returns the
    components as tuples of their node indices, ordered canonically:
    weakly decreasing node count, ties by smallest node.  Returns None when
    some pairwise bracket falls outside {0, -1} (duplicates included).
    """
    rs = list(roots)
    for a in range(len(rs)):
        for b in range(a + 1, len(rs)):
            if root_pairing(rs[a], rs[b]) not in (0, -1):
                return None
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in rs:
        parent.setdefault(r.i, r.i)
        parent.setdefault(r.j, r.j)
        parent[find(r.i)] = find(r.j)
    groups: dict[int, set[int]] = {}
    for node in parent:
        groups.setdefault(find(node), set()).add(node)
    comps = [tuple(sorted(g)) for g in groups.values()]
    comps.sort(key=lambda c: (-len(c), c[0]))
    return tuple(comps)
