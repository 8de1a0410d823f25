"""Tests for lattice classes, building neighbors, the apartment and the square lemma."""

from collections import Counter
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import lattice_model
from building_model import (
    DivisorProfile,
    LatticeClass,
    LatticeClassError,
    SquareLemmaViolation,
    base_class,
    canonicalize,
    class_distance,
    distance_to_base,
    divisor_profile,
    embed_apartment,
    find_square_center,
    gaussian_binomial,
    is_adjacent,
    neighbor_count,
    neighbors,
    subspace_bases,
    type_of,
    verify_square_lemma,
)
from graph_engine import (
    check_all_centers,
    check_quadrangle,
    check_triangle,
    generate_ball,
    hypercube_oracle,
)
from ladder import square_center
from lattice_model import Vertex
from tests.balls import building_ball, lattice_ball


def _diag(*entries, p=2):
    return canonicalize(np.diag(entries), p)


@st.composite
def unimodular_mixes(draw):
    """A diagonal p-power matrix and a product of elementary column operations."""
    exponents = draw(st.lists(st.integers(0, 3), min_size=4, max_size=4))
    ops = draw(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-2, 2)),
            max_size=6,
        )
    )
    base = np.diag([2**e for e in exponents]).astype(np.int64)
    mixed = base.copy()
    for i, j, c in ops:
        if i != j:
            mixed[:, i] += c * mixed[:, j]
    return base, mixed


class TestSubspaces:
    @pytest.mark.parametrize("p,expected", [(2, [15, 35, 15]), (3, [40, 130, 40])])
    def test_gaussian_binomials(self, p, expected):
        assert [gaussian_binomial(4, k, p) for k in (1, 2, 3)] == expected
        assert gaussian_binomial(4, 0, p) == 1
        assert gaussian_binomial(4, 5, p) == 0

    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_enumeration_matches_count(self, p, k):
        bases = list(subspace_bases(4, k, p))
        assert len(bases) == gaussian_binomial(4, k, p)
        assert len({b.tobytes() for b in bases}) == len(bases)


class TestLatticeClass:
    def test_base_class(self):
        base = base_class(2)
        assert np.array_equal(base.matrix(), np.eye(4, dtype=np.int64))
        assert str(base) == "2|1,0,0,0;1,0,0;1,0;1"
        assert LatticeClass.parse(str(base)) == base
        assert divisor_profile(base) == DivisorProfile((0, 0, 0, 0))
        assert distance_to_base(base) == 0
        assert type_of(base) == 0

    @pytest.mark.parametrize("p", [4, 9, 11])
    def test_rejects_unsupported_primes(self, p):
        with pytest.raises(LatticeClassError):
            base_class(p)

    def test_homothety(self):
        assert canonicalize(np.eye(4, dtype=np.int64), 2) == base_class(2)
        assert canonicalize(2 * np.eye(4, dtype=np.int64), 2) == base_class(2)

    def test_diagonal_profiles(self):
        assert divisor_profile(_diag(2, 1, 1, 1)) == DivisorProfile((1, 0, 0, 0))
        assert divisor_profile(_diag(4, 2, 1, 1)) == DivisorProfile((2, 1, 0, 0))
        assert distance_to_base(_diag(4, 2, 1, 1)) == 2
        assert type_of(_diag(2, 1, 1, 1)) == 1

    def test_bad_matrices(self):
        with pytest.raises(LatticeClassError):
            canonicalize(np.zeros((4, 4), dtype=np.int64), 2)
        with pytest.raises(LatticeClassError):
            canonicalize(np.diag([3, 1, 1, 1]), 2)

    def test_bad_text(self):
        with pytest.raises(LatticeClassError):
            LatticeClass.parse("2|1,0;1,0")
        with pytest.raises(LatticeClassError):
            DivisorProfile((0, 1, 0, 0))

    @settings(max_examples=60, deadline=None)
    @given(pair=unimodular_mixes())
    def test_invariant_under_column_operations(self, pair):
        base, mixed = pair
        canonical = canonicalize(base, 2)
        assert canonicalize(mixed, 2) == canonical
        assert canonicalize(mixed[:, ::-1], 2) == canonical
        assert canonicalize(canonical.matrix(), 2) == canonical


class TestNeighbors:
    def test_count_p2(self):
        found = neighbors(base_class(2))
        assert len(found) == len(set(found)) == 65 == neighbor_count(4, 2)
        assert base_class(2) not in found

    def test_count_p3(self):
        assert len(set(neighbors(base_class(3)))) == 210 == neighbor_count(4, 3)

    def test_types_and_profiles_around_base(self):
        found = neighbors(base_class(2))
        assert Counter(type_of(x) for x in found) == {1: 15, 2: 35, 3: 15}
        profiles = Counter(divisor_profile(x).a for x in found)
        assert profiles == {(1, 0, 0, 0): 15, (1, 1, 0, 0): 35, (1, 1, 1, 0): 15}
        assert all(distance_to_base(x) == 1 for x in found)

    def test_symmetry_around_base(self):
        base = base_class(2)
        for x in neighbors(base):
            assert base in neighbors(x)
            assert is_adjacent(x, base)

    def test_radius_two_ball(self, building_ball_r2):
        ball = building_ball_r2
        for v, d in zip(ball.vertices, ball.dist):
            assert distance_to_base(v) == d
        for i, j in ball.edges():
            assert type_of(ball.vertices[i]) != type_of(ball.vertices[j])
        for v, d in zip(ball.vertices, ball.dist):
            if d < 2:
                found = neighbors(v)
                assert len(set(found)) == 65
                assert v not in found

    @pytest.mark.slow
    def test_degree_constant_on_radius_two_ball(self, building_ball_r2):
        for v in building_ball_r2.vertices:
            found = neighbors(v)
            assert len(set(found)) == 65
            assert v not in found

    def test_profile_two_one_is_at_distance_two(self, building_ball_r2):
        target = _diag(4, 2, 1, 1)
        assert building_ball_r2.distance_of(target) == 2

    @pytest.mark.slow
    def test_radius_three_distances_and_local_weak_modularity(self):
        ball = building_ball(2, 3)
        assert all(distance_to_base(v) == d for v, d in zip(ball.vertices, ball.dist))
        assert check_triangle(ball, neighbors, local_only=True).passed
        assert check_quadrangle(ball, neighbors, local_only=True).passed

    @pytest.mark.slow
    def test_local_weak_modularity_around_every_nearby_class(self):
        centers = building_ball(2, 1).vertices
        reports = check_all_centers(neighbors, centers, 3, local_only=True)
        assert len(reports) == 2 * 66
        assert {r.center for r in reports} == {str(c) for c in centers}
        failing = [r for r in reports if not r.passed]
        assert failing == []


class TestApartment:
    def test_origin_maps_to_base(self):
        assert embed_apartment(Vertex.origin(3), 2) == base_class(2)
        assert divisor_profile(embed_apartment(Vertex((3, -1, -1, -1)), 2)).a == (1, 0, 0, 0)

    def test_adjacency_preserved_radius_one(self):
        ball = lattice_ball(3, 1)
        image = {v: embed_apartment(v, 2) for v in ball.vertices}
        assert len(set(image.values())) == len(image)
        for u, v in combinations(ball.vertices, 2):
            assert lattice_model.is_adjacent(u, v) == is_adjacent(image[u], image[v])

    def test_height_is_distance_to_base(self):
        for v in lattice_ball(3, 3).vertices:
            assert distance_to_base(embed_apartment(v, 2)) == lattice_model.height(v)

    def test_class_distance_from_base(self):
        base = base_class(2)
        for x in neighbors(base)[:10]:
            assert class_distance(base, x) == 1
            assert class_distance(x, base) == 1
        assert class_distance(base, base) == 0

    @pytest.mark.slow
    def test_isometric_on_radius_two(self):
        ball = lattice_ball(3, 2)
        image = {v: embed_apartment(v, 2) for v in ball.vertices}
        for u, v in combinations(ball.vertices, 2):
            gap = lattice_model.height(lattice_model.translate(v, lattice_model.negate(u)))
            assert class_distance(image[u], image[v]) == gap
            assert lattice_model.is_adjacent(u, v) == is_adjacent(image[u], image[v])


class TestSquareLemma:
    def test_lattice_example(self, lattice_ball_n3_r2):
        z = Vertex.origin(3)
        y, a, y_prime = Vertex((2, 2, -2, -2)), Vertex((4, 0, 0, -4)), Vertex((2, -2, 2, -2))
        center = find_square_center(
            lattice_ball_n3_r2, (z, y, a, y_prime), lattice_model.type_of
        )
        assert center == (Vertex((1, 1, 1, -3)), Vertex((3, -1, -1, -1)))
        assert set(center) == set(square_center(z, y, y_prime))

    def test_lattice_rank_three(self, lattice_ball_n3_r2):
        report = verify_square_lemma(lattice_ball_n3_r2, lattice_model.type_of)
        assert report.condition == "square"
        assert report.instances_checked > 0
        assert report.passed

    def test_building(self, building_ball_r2):
        report = verify_square_lemma(building_ball_r2, type_of)
        assert report.instances_checked > 0
        assert report.passed

    def test_cube_square_has_no_center(self):
        oracle = hypercube_oracle(3)
        ball = generate_ball(oracle, (0, 0, 0), 2)
        cycle = ((0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 0))
        with pytest.raises(SquareLemmaViolation, match="no edge"):
            find_square_center(ball, cycle, lambda v: sum(v) % 2)

    def test_mistyped_cycle(self, lattice_ball_n3_r2):
        z = Vertex.origin(3)
        cycle = (z, Vertex((2, 2, -2, -2)), Vertex((4, 0, 0, -4)), Vertex((2, -2, 2, -2)))
        with pytest.raises(SquareLemmaViolation, match="cycle types"):
            find_square_center(lattice_ball_n3_r2, cycle, lambda v: 0)
