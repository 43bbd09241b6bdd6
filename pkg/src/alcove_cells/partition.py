"""Integer partitions under the dominance order.

Partitions here always carry their full weight: parts are positive and
weakly decreasing, trailing 1s included, so a partition of m has parts
summing to exactly m.  The dominance order compares prefix sums; it is a
lattice, and `sup` returns the exact join.  Nilpotent orbit labels pair a
partition with the dimension of the orbit it names.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError
from .rootsys import RootA, chain_components


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        p = tuple(int(x) for x in self.parts)
        if len(p) == 0:
            raise PreconditionError("empty partitions are not used here")
        if any(x < 1 for x in p):
            raise PreconditionError(f"parts must be positive, got {p}")
        if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
            raise PreconditionError(f"parts must be weakly decreasing, got {p}")
        object.__setattr__(self, "parts", p)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def prefix_sums(self, length: int) -> tuple[int, ...]:
        """First `length` partial sums, zero-padding parts as needed."""
        acc, out = 0, []
        for k in range(length):
            acc += self.parts[k] if k < len(self.parts) else 0
            out.append(acc)
        return tuple(out)

    def __str__(self) -> str:
        return "+".join(str(x) for x in self.parts)


def partition(parts: Iterable[int]) -> Partition:
    return Partition(tuple(parts))


def dominance_leq(a: Partition, b: Partition) -> bool:
    """a <= b in dominance order: every prefix sum of a is at most b's."""
    if a.total != b.total:
        raise PreconditionError(
            f"dominance compares partitions of equal weight, got {a.total} != {b.total}"
        )
    m = max(len(a.parts), len(b.parts))
    return all(x <= y for x, y in zip(a.prefix_sums(m), b.prefix_sums(m)))


def transpose(a: Partition) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    return Partition(tuple(sum(1 for x in a.parts if x > k) for k in range(a.parts[0])))


def _from_prefix_sums(sums: Sequence[int]) -> Partition | None:
    parts = [sums[0]] + [sums[k] - sums[k - 1] for k in range(1, len(sums))]
    while parts and parts[-1] == 0:
        parts.pop()
    if not parts or any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        return None
    if any(x < 0 for x in parts):
        return None
    return Partition(tuple(parts))


def _meet(ps: Sequence[Partition]) -> Partition:
    """Dominance meet: pointwise minimum of prefix sums, always a partition."""
    m = max(len(q.parts) for q in ps)
    tables = [q.prefix_sums(m) for q in ps]
    mins = tuple(min(t[k] for t in tables) for k in range(m))
    out = _from_prefix_sums(mins)
    assert out is not None, "prefix-sum minima always form a partition"
    return out


def sup(ps: Sequence[Partition]) -> Partition:
    """Least upper bound in the dominance lattice.

    The pointwise maximum of prefix sums is returned directly whenever its
    difference sequence is already a partition (in particular whenever the
    sup is attained by one of the inputs).  Otherwise the join is computed
    through the conjugation anti-isomorphism: join = (meet of conjugates)
    conjugated, with meet the pointwise prefix-sum minimum.
    """
    if not ps:
        raise PreconditionError("sup of an empty family")
    totals = {q.total for q in ps}
    if len(totals) != 1:
        raise PreconditionError(f"sup needs equal weights, got {sorted(totals)}")
    m = max(len(q.parts) for q in ps)
    tables = [q.prefix_sums(m) for q in ps]
    maxima = tuple(max(t[k] for t in tables) for k in range(m))
    direct = _from_prefix_sums(maxima)
    if direct is not None:
        return direct
    return transpose(_meet([transpose(q) for q in ps]))


@dataclass(frozen=True)
class OrbitLabel:
    """A partition naming a nilpotent orbit, with the orbit's dimension."""

    partition: Partition
    dim: int


def orbit_label(a: Partition) -> OrbitLabel:
    t = transpose(a)
    return OrbitLabel(a, a.total**2 - sum(x**2 for x in t.parts))


def partition_of_basis(basis: Iterable[RootA], n: int) -> Partition:
    """Partition of n+1 attached to a chain basis inside A_n.

    Each chain component on m+1 nodes contributes a part m+1; the result
    is padded with parts 1 up to total weight n+1.
    """
    roots = tuple(basis)
    comps = chain_components(roots)
    if comps is None:
        raise PreconditionError(f"{sorted(roots)} is not a chain basis")
    for c in comps:
        if c[-1] > n + 1 or c[0] < 1:
            raise PreconditionError(f"node {c} outside A_{n}")
    parts = sorted((len(c) for c in comps), reverse=True)
    pad = (n + 1) - sum(parts)
    if pad < 0:
        raise PreconditionError(f"basis has more than n+1 = {n + 1} nodes")
    return Partition(tuple(parts) + (1,) * pad)


@lru_cache(maxsize=None)
def partitions_of(total: int) -> tuple[Partition, ...]:
    """All partitions of `total`, in decreasing lexicographic part order."""
    if total < 1:
        raise PreconditionError("total must be positive")

    def rec(rest: int, cap: int) -> Iterable[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in rec(total, total))


def format_partition(a: Partition) -> str:
    return str(a)


def parse_partition(text: str) -> Partition:
    """Accepts '4+2', '4,2' or '[4,2]'."""
    s = text.strip().strip("[]()")
    seps = "+" if "+" in s else ","
    try:
        parts = tuple(int(tok) for tok in s.split(seps) if tok.strip())
    except ValueError as exc:
        raise PreconditionError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)
