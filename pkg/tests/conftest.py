import pytest

from tropcheck import Matrix, Polytope


@pytest.fixture
def golden_idempotent() -> Matrix:
    """The 3x3 idempotent whose projectivised row space is a filled triangle
    with corners (0,0), (3,0), (3,3)."""
    return Matrix([[0, -3, -3], [0, 0, -3], [0, 0, 0]])


@pytest.fixture
def spike_polytope() -> Polytope:
    """Triangle with a one-dimensional spike: generator and dual dimension 3
    but not of pure dimension, hence not min-plus convex, not projective."""
    return Polytope([(0, 0, 0), (5, -2, 0), (5, 5, 0)])


@pytest.fixture
def tripod_polytope() -> Polytope:
    """Three points spanning a tropical line: pure of tropical dimension 2,
    generator and dual dimension 3, hence not projective."""
    return Polytope([(-2, 0, 0), (3, 3, 0), (0, -3, 0)])


@pytest.fixture
def wide_polytope() -> Polytope:
    """Four extremal generators but dual dimension 3: projectivity fails on
    the dimension mismatch alone."""
    return Polytope([(0, 0, 0), (0, 4, 0), (3, -2, 0), (6, -2, 0)])


@pytest.fixture
def rank_gap_matrix(wide_polytope) -> Matrix:
    """4x4 matrix with row generator rank 4 but column generator rank 3
    (rows are the wide-polytope generators with the last column doubled)."""
    return Matrix([list(g) + [g[-1]] for g in wide_polytope.generators])
