from collections import deque
from fractions import Fraction as Q
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcove_cells.alcove import (
    AffineMap,
    Alcove,
    Between,
    Wall,
    _raise_step,
    alcove_of,
    bottom_alcove,
    closure_contains,
    facette_from_alcove,
    facette_of,
    interior_point,
    lower_closure_contains,
    lower_closure_contains_via_stabilizer,
    lower_walls,
    stabilizer_group,
    stabilizer_subroot_system,
    up_reachable,
    up_step_neighbors,
    upper_walls,
    weak_leq,
    weak_leq_oracle,
)
from alcove_cells.errors import PreconditionError, ResourceLimitError
from alcove_cells.rootsys import RootA, positive_roots, shifted_point
from alcove_cells.sweeps import dominant_alcoves


def _points(n, lo, hi):
    return [shifted_point(c) for c in product(range(lo, hi + 1), repeat=n)]


def test_wall_and_between_are_distinct():
    # regression: tuple-like equality here would merge distinct facettes
    assert Wall(1) != Between(1)
    assert len({Wall(1), Between(1)}) == 2


def test_alcove_of_known_values():
    assert alcove_of(shifted_point([6, 6]), 5).indices == (2, 3, 2)
    assert alcove_of(shifted_point([2, 2]), 5) == bottom_alcove(2, 5)
    assert alcove_of(shifted_point([Q(9, 2), Q(1, 2)]), 5).indices == (1, 2, 1)


def test_alcove_rejects_empty_region():
    with pytest.raises(PreconditionError):
        Alcove(2, 5, (1, 3, 1))


def test_facette_of_known_values():
    f = facette_of(shifted_point([Q(9, 2), Q(1, 2)]), 5)
    assert f.data == (Between(1), Wall(1), Between(1))
    assert f.wall_roots() == ((RootA(1, 3), 1),)
    st_vertex = facette_of(shifted_point([5, 5]), 5)
    assert st_vertex.data == (Wall(1), Wall(2), Wall(1))
    assert facette_of(shifted_point([6, 6]), 5).is_alcove()


def test_facette_rejects_empty_region():
    with pytest.raises(PreconditionError):
        # (1,2) pinned to 0 while (1,3) demands pairing > 5 with (2,3) < 5
        Alcove(2, 5, (0, 2, 1))
    with pytest.raises(PreconditionError):
        from alcove_cells.alcove import Facette

        Facette(2, 5, (Wall(0), Wall(2), Between(1)))


def test_lower_closure_examples():
    c0 = bottom_alcove(2, 5)
    f66 = facette_of(shifted_point([6, 6]), 5)
    assert not lower_closure_contains(f66, shifted_point([5, 3]))
    assert lower_closure_contains(c0, shifted_point([0, 3]))
    assert lower_closure_contains(
        Alcove(2, 5, (1, 2, 1)), shifted_point([Q(9, 2), Q(1, 2)])
    )
    assert not lower_closure_contains(c0, shifted_point([5, 0]))


def test_closure_examples():
    c0 = bottom_alcove(2, 5)
    assert closure_contains(c0, shifted_point([0, 3]))
    assert closure_contains(c0, shifted_point([5, 0]))
    assert not closure_contains(c0, shifted_point([6, 0]))


def test_stabilizer_route_examples():
    c0 = bottom_alcove(2, 5)
    assert lower_closure_contains_via_stabilizer(c0, shifted_point([0, 3]))
    assert not lower_closure_contains_via_stabilizer(c0, shifted_point([5, 0]))
    # interior points have trivial stabilizer
    assert lower_closure_contains_via_stabilizer(c0, shifted_point([2, 2]))


def test_stabilizer_route_requires_closure_membership():
    with pytest.raises(PreconditionError):
        lower_closure_contains_via_stabilizer(
            bottom_alcove(2, 5), shifted_point([6, 6])
        )


def test_interior_point_round_trip():
    from alcove_cells.sweeps import facettes_meeting_box

    for f in facettes_meeting_box(2, 3, 6):
        pt = interior_point(f)
        assert facette_of(pt, f.p) == f


def test_affine_map_identity_and_reflection():
    ident = AffineMap.identity(2)
    pt = shifted_point([3, 4])
    assert ident.apply(pt) == pt
    refl = AffineMap.reflection(2, RootA(1, 3), Q(5))
    on_wall = shifted_point([Q(9, 2), Q(1, 2)])
    assert refl.apply(on_wall) == on_wall
    moved = refl.apply(shifted_point([6, 6]))
    assert moved.pairing(RootA(1, 3)) == 10 - 12
    assert refl.compose(refl) == ident


@given(st.data())
@settings(max_examples=100)
def test_affine_map_compose_matches_apply(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    roots = positive_roots(n)

    def draw_map():
        r = data.draw(st.sampled_from(roots))
        v = data.draw(st.integers(min_value=-6, max_value=6))
        return AffineMap.reflection(n, r, Q(v))

    f, g = draw_map(), draw_map()
    coords = data.draw(
        st.lists(
            st.integers(min_value=-8, max_value=8), min_size=n, max_size=n
        )
    )
    pt = shifted_point(coords)
    assert f.compose(g).apply(pt) == f.apply(g.apply(pt))


def test_stabilizer_group_orders():
    assert len(stabilizer_group(shifted_point([6, 6]), 5)) == 1
    assert len(stabilizer_group(shifted_point([Q(9, 2), Q(1, 2)]), 5)) == 2
    assert len(stabilizer_group(shifted_point([5, 5]), 5)) == 6


def test_stabilizer_order_divides_weyl_order():
    for pt in _points(2, 0, 6):
        order = len(stabilizer_group(pt, 3))
        assert factorial(3) % order == 0


def test_stabilizer_subroot_system_known():
    assert stabilizer_subroot_system(shifted_point([5, 5]), 5) == frozenset(
        positive_roots(2)
    )
    assert stabilizer_subroot_system(shifted_point([6, 6]), 5) == frozenset()
    assert stabilizer_subroot_system(shifted_point([5, 3]), 5) == frozenset(
        {RootA(1, 2)}
    )


def test_walls_of_bottom_alcove():
    c0 = bottom_alcove(2, 5)
    assert upper_walls(c0) == frozenset({(RootA(1, 3), 1)})
    assert lower_walls(c0) == frozenset({(RootA(1, 2), 0), (RootA(2, 3), 0)})


def test_walls_of_second_alcove():
    a = Alcove(2, 5, (1, 2, 1))
    assert upper_walls(a) == frozenset({(RootA(1, 2), 1), (RootA(2, 3), 1)})
    assert lower_walls(a) == frozenset({(RootA(1, 3), 1)})


def test_wall_count_is_rank_plus_one():
    for a in dominant_alcoves(2, 5, 3):
        assert len(upper_walls(a)) + len(lower_walls(a)) == 3
    for a in dominant_alcoves(3, 3, 2):
        assert len(upper_walls(a)) + len(lower_walls(a)) == 4


def test_up_step_neighbors_of_bottom():
    c0 = bottom_alcove(2, 5)
    assert tuple(a.indices for a in up_step_neighbors(c0)) == ((1, 2, 1),)


def test_up_step_neighbors_raise_exactly_one_index():
    # adjacent alcoves share a codim-1 facet, so they differ in exactly
    # one index, by exactly +1
    for a in dominant_alcoves(2, 5, 3) + dominant_alcoves(3, 3, 2):
        for b in up_step_neighbors(a):
            deltas = [y - x for x, y in zip(a.indices, b.indices)]
            assert sorted(deltas) == [0] * (len(deltas) - 1) + [1]
            assert up_reachable(a, b)


def test_weak_leq_known_values():
    c_lam = Alcove(2, 5, (2, 3, 2))
    c_mu = Alcove(2, 5, (3, 4, 1))
    assert not weak_leq(c_lam, c_mu)
    assert not weak_leq(c_mu, c_lam)
    assert weak_leq(Alcove(2, 5, (1, 2, 1)), c_lam)
    for b in dominant_alcoves(2, 5, 3):
        assert weak_leq(bottom_alcove(2, 5), b)


def test_weak_leq_matches_oracle_small():
    alcoves = dominant_alcoves(2, 3, 3)
    for a in alcoves:
        for b in alcoves:
            assert weak_leq(a, b) == weak_leq_oracle(a, b)


def test_bfs_depth_counts_separating_hyperplanes():
    # a shortest raising path from the bottom alcove crosses each of the
    # sum(m_alpha - 1) separating hyperplanes exactly once; pruning to
    # indices <= 3 cannot lengthen it since every step raises one index
    c0 = bottom_alcove(2, 5)
    targets = {a: sum(a.indices) - 3 for a in dominant_alcoves(2, 5, 3)}
    depth = {c0: 0}
    queue = deque([c0])
    while queue:
        cur = queue.popleft()
        for nxt in up_step_neighbors(cur):
            if nxt not in depth and all(v <= 3 for v in nxt.indices):
                depth[nxt] = depth[cur] + 1
                queue.append(nxt)
    for a, want in targets.items():
        assert depth[a] == want


def test_up_reachable_remark_pair():
    lam = alcove_of(shifted_point([6, 6]), 5)
    mu = alcove_of(shifted_point([14, 2]), 5)
    assert mu.indices == (3, 4, 1)
    assert up_reachable(lam, mu)
    assert not weak_leq(lam, mu)
    assert up_reachable(lam, lam)


def test_up_reachable_extends_weak_order():
    alcoves = dominant_alcoves(2, 5, 3)
    for a in alcoves:
        for b in alcoves:
            if weak_leq(a, b):
                assert up_reachable(a, b)


def test_raise_step_matches_geometric_reflection():
    for n, p in ((2, 5), (3, 3)):
        roots = positive_roots(n)
        for idx in product(range(-1, 3), repeat=len(roots)):
            try:
                a = Alcove(n, p, idx)
            except PreconditionError:
                continue
            pt = interior_point(facette_from_alcove(a))
            for pos, beta in enumerate(roots):
                refl = AffineMap.reflection(n, beta, Q(a.indices[pos] * p))
                image = alcove_of(refl.apply(pt), p)
                assert _raise_step(n, a.indices, pos) == image.indices


def test_oracle_bound_raises():
    a = bottom_alcove(3, 3)
    b = alcove_of(shifted_point([5, 5, 5]), 3)
    assert b.indices == (2, 4, 6, 2, 4, 2)
    with pytest.raises(ResourceLimitError):
        weak_leq_oracle(a, b, bound=2)


@given(st.data())
@settings(max_examples=150)
def test_alcove_of_contains_its_point(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    p = data.draw(st.sampled_from([2, 3, 5]))
    coords = data.draw(
        st.lists(
            st.fractions(min_value=-10, max_value=10, max_denominator=12),
            min_size=n,
            max_size=n,
        )
    )
    pt = shifted_point(coords)
    a = alcove_of(pt, p)
    assert lower_closure_contains(a, pt)
    f = facette_of(pt, p)
    assert lower_closure_contains(f, pt)
    assert closure_contains(f, pt)
    if not stabilizer_subroot_system(pt, p):
        assert f.is_alcove()
        assert facette_from_alcove(a) == f
