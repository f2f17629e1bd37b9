import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscut.complexes import (
    SimplicialComplex,
    coprime_free_collapsed,
    face_complex,
    faces_by_dimension,
)
from crosscut.families import COPRIME_FREE, PRIMITIVE, s_multiple
from crosscut.homology import (
    HomologyGroup,
    betti_zero_fast,
    boundary_matrix,
    euler_check,
    reduced_homology,
    smith_normal_form,
)
from crosscut.numthy import chebyshev_count

import oracles

OCTAHEDRON = SimplicialComplex(
    [
        (1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6),
        (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6),
    ]
)

# six-vertex triangulation of the real projective plane: every edge lies in
# exactly two of the ten triangles
RP2 = SimplicialComplex(
    [
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
        (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
    ]
)


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def test_boundary_edge_orientation():
    c = SimplicialComplex([(3, 7)])
    bm = boundary_matrix(c, 1)
    assert bm.rows == ((3,), (7,))
    assert bm.cols == ((3, 7),)
    dense = bm.to_dense()
    assert dense == [[-1], [1]]


def test_boundary_dim_zero_is_augmentation():
    c = SimplicialComplex([(1,), (5,)])
    bm = boundary_matrix(c, 0)
    assert bm.rows == ((),)
    assert bm.to_dense() == [[1, 1]]


def test_boundary_column_signs_alternate():
    bm = boundary_matrix(OCTAHEDRON, 2)
    for j in range(len(bm.cols)):
        signs = [bm.entries[i, j] for i in range(len(bm.rows)) if (i, j) in bm.entries]
        assert signs == [1, -1, 1]


def test_boundary_composition_is_zero():
    for c in (OCTAHEDRON, RP2, face_complex(COPRIME_FREE, 12), coprime_free_collapsed(30)):
        for d in range(1, max(c.dim, 0) + 1):
            prod = mat_mul(boundary_matrix(c, d).to_dense(), boundary_matrix(c, d + 1).to_dense())
            assert all(v == 0 for row in prod for v in row), d


def test_octahedron_boundary_rank():
    dense = boundary_matrix(OCTAHEDRON, 2).to_dense()
    assert len(dense) == 12 and len(dense[0]) == 8
    assert oracles.rank_over_q(dense) == 7
    assert smith_normal_form(dense)[1] == 7


def test_smith_normal_form_examples():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == ((1, 1, 1), 3)
    assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)
    assert smith_normal_form([]) == ((), 0)
    assert smith_normal_form([[2, 0], [0, 3]]) == ((1, 6), 2)
    assert smith_normal_form([[2, 4], [4, 2]]) == ((2, 6), 2)
    assert smith_normal_form([[6]]) == ((6,), 1)


def test_smith_normal_form_does_not_mutate():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    copy = [row[:] for row in m]
    assert smith_normal_form(m) == ((2, 2, 156), 3)
    assert m == copy


@settings(deadline=None, max_examples=150)
@given(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
def test_smith_normal_form_against_minor_oracle(nrows, ncols, data):
    m = [
        [data.draw(st.integers(min_value=-9, max_value=9)) for _ in range(ncols)]
        for _ in range(nrows)
    ]
    factors, rank = smith_normal_form(m)
    assert (factors, rank) == oracles.snf_by_minors(m)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@settings(deadline=None, max_examples=100)
@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.data(),
)
def test_smith_rank_matches_rational_rank(nrows, ncols, data):
    m = [
        [data.draw(st.integers(min_value=-20, max_value=20)) for _ in range(ncols)]
        for _ in range(nrows)
    ]
    assert smith_normal_form(m)[1] == oracles.rank_over_q(m)


def test_reduced_homology_examples():
    two_points = SimplicialComplex([(1,), (2,)])
    assert reduced_homology(two_points, 2) == [
        HomologyGroup(1), HomologyGroup(0), HomologyGroup(0),
    ]
    point = SimplicialComplex([(1,)])
    assert reduced_homology(point, 1) == [HomologyGroup(0), HomologyGroup(0)]
    simplex = SimplicialComplex([(1, 2, 3, 4)])
    assert reduced_homology(simplex, 3) == [HomologyGroup(0)] * 4
    assert reduced_homology(OCTAHEDRON, 2) == [
        HomologyGroup(0), HomologyGroup(0), HomologyGroup(1),
    ]
    assert reduced_homology(SimplicialComplex([]), 1) == [HomologyGroup(0)] * 2
    with pytest.raises(ValueError):
        reduced_homology(point, -1)


def test_reduced_homology_circle_and_sphere_boundaries():
    circle = SimplicialComplex([(1, 2), (2, 3), (1, 3)])
    assert reduced_homology(circle, 1) == [HomologyGroup(0), HomologyGroup(1)]
    sphere = SimplicialComplex(
        [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    )
    assert reduced_homology(sphere, 2) == [
        HomologyGroup(0), HomologyGroup(0), HomologyGroup(1),
    ]


def test_projective_plane_torsion():
    assert reduced_homology(RP2, 2) == [
        HomologyGroup(0), HomologyGroup(0, (2,)), HomologyGroup(0),
    ]


def test_smultiple_homology_small():
    c = face_complex(s_multiple(2), 5)
    groups = reduced_homology(c, 2)
    assert [g.rank for g in groups] == [0, 3, 0]
    assert all(g.torsion == () for g in groups)
    c6 = face_complex(s_multiple(2), 6)
    assert [g.rank for g in reduced_homology(c6, 2)] == [0, 4, 0]


def test_collapsed_homology_prop7_sample():
    for n in range(4, 31):
        groups = reduced_homology(coprime_free_collapsed(n), 1)
        assert groups[0] == HomologyGroup(chebyshev_count(n) + 1), n
        assert groups[1] == HomologyGroup(0), n


def test_betti_zero_fast():
    assert betti_zero_fast(coprime_free_collapsed(10)) == 2
    assert betti_zero_fast(SimplicialComplex([(1, 2, 3)])) == 0
    assert betti_zero_fast(face_complex(COPRIME_FREE, 3)) == 2
    assert betti_zero_fast(SimplicialComplex([])) == 0


def test_betti_zero_fast_matches_homology():
    for n in range(1, 21):
        c = coprime_free_collapsed(n)
        assert betti_zero_fast(c) == reduced_homology(c, 0)[0].rank, n
    for n in range(2, 10):
        c = face_complex(PRIMITIVE, n)
        assert betti_zero_fast(c) == reduced_homology(c, 0)[0].rank, n


def test_euler_check():
    assert euler_check(OCTAHEDRON, 2)
    assert euler_check(OCTAHEDRON, 5)
    assert euler_check(SimplicialComplex([(1,)]), 0)
    assert euler_check(SimplicialComplex([(1,), (2,)]), 1)
    assert euler_check(SimplicialComplex([]), 0)
    assert euler_check(RP2, 2)
    with pytest.raises(ValueError):
        euler_check(OCTAHEDRON, 1)


def test_octahedron_euler_arithmetic():
    levels = faces_by_dimension(OCTAHEDRON, 2)
    assert [len(level) for level in levels] == [6, 12, 8]
    assert (6 - 12 + 8) - 1 == 1
    groups = reduced_homology(OCTAHEDRON, 2)
    assert sum((-1) ** d * g.rank for d, g in enumerate(groups)) == 1


@settings(deadline=None, max_examples=40)
@given(
    st.lists(
        st.frozensets(st.integers(min_value=1, max_value=6), min_size=1, max_size=4),
        min_size=1,
        max_size=6,
    )
)
def test_random_complex_consistency(faces):
    c = SimplicialComplex(faces)
    d = max(c.dim, 0)
    groups = reduced_homology(c, d)
    assert betti_zero_fast(c) == groups[0].rank
    assert euler_check(c, d)
    for k in range(1, d + 1):
        prod = mat_mul(boundary_matrix(c, k).to_dense(), boundary_matrix(c, k + 1).to_dense())
        assert all(v == 0 for row in prod for v in row)
