"""Exact sparse row reduction, nullspaces, and span comparison."""

import random

import pytest

from hvalgebra.errors import IncompatibleSpaces
from hvalgebra.linalg import (
    SolutionSpace,
    SparseMatrix,
    VarRegistry,
    nullspace,
    rank,
    rref,
    solve_affine,
    span_equal,
)
from hvalgebra.scalars import Scalar


def S(rows):
    return [{c: Scalar.coerce(v) for c, v in row.items()} for row in rows]


def test_registry_is_append_only():
    reg = VarRegistry()
    a = reg.add("a")
    b = reg.add("b")
    assert (a, b) == (0, 1)
    assert reg.id_of("b") == 1
    assert reg.label_of(0) == "a"
    with pytest.raises(ValueError):
        reg.add("a")


def test_rref_canonical_form():
    rows = S([{0: 2, 1: 4}, {1: 1, 2: 1}])
    reduced = rref(rows)
    assert reduced == S([{0: 1, 2: -2}, {1: 1, 2: 1}])
    # leading entries are 1 and pivot columns are cleared elsewhere
    assert rref(reduced) == reduced


def test_rref_depends_only_on_the_row_span():
    rows = S([{0: 1, 1: 2}, {1: 3, 2: 1}, {0: 2, 1: 7, 2: 1}])
    shuffled = [rows[2], rows[0], rows[1]]
    scaled = [{c: v * Scalar(-5) for c, v in row.items()} for row in rows]
    assert rref(rows) == rref(shuffled) == rref(scaled)


def test_rank_and_nullspace_small():
    rows = S([{0: 1, 1: 1}, {1: 1, 2: 1}])
    assert rank(rows) == 2
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    (vec,) = basis
    for row in rows:
        total = sum((row[c] * vec.get(c, Scalar(0)) for c in row), Scalar(0))
        assert not total


def test_rank_nullity_on_random_sparse_matrices():
    rng = random.Random(20240817)
    for _ in range(8):
        ncols = rng.randrange(5, 40)
        nrows = rng.randrange(1, 30)
        rows = []
        for _ in range(nrows):
            row = {
                rng.randrange(ncols): Scalar(rng.randint(-5, 5), rng.randint(-2, 2))
                for _ in range(rng.randrange(1, 5))
            }
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
        r = rank(rows)
        basis = nullspace(rows, ncols)
        assert r + len(basis) == ncols
        for vec in basis:
            for row in rows:
                total = sum(
                    (v * vec.get(c, Scalar(0)) for c, v in row.items()), Scalar(0)
                )
                assert not total
        # nullspace output is itself canonical
        assert rref(basis) == basis


def test_sparse_matrix_wrapper():
    m = SparseMatrix(S([{0: 1, 1: 1}]), 3)
    assert m.rank() == 1
    assert len(m.nullspace()) == 2
    assert m.rref().rows == S([{0: 1, 1: 1}])


def test_solve_affine():
    # x + y = 3, y = 1  ->  x = 2 with no free variables involved
    rows = [({0: Scalar(1), 1: Scalar(1)}, 3), ({1: Scalar(1)}, 1)]
    assert solve_affine(rows, 2) == {0: Scalar(2), 1: Scalar(1)}
    # inconsistent
    rows = [({0: Scalar(1)}, 1), ({0: Scalar(1)}, 2)]
    assert solve_affine(rows, 1) is None
    # underdetermined: free variables default to zero
    rows = [({0: Scalar(1), 1: Scalar(2)}, 4)]
    assert solve_affine(rows, 2) == {0: Scalar(4)}


def _space(reg, rows):
    return SolutionSpace(reg, S(rows))


def test_span_equal_and_witness():
    reg = VarRegistry()
    for name in "abc":
        reg.add(name)
    a = _space(reg, [{0: 1}, {1: 1}])
    b = _space(reg, [{0: 1, 1: 1}, {0: 1, 1: -1}])
    assert span_equal(a, b).equal
    c = _space(reg, [{0: 1}, {2: 1}])
    cmp = span_equal(a, c)
    assert not cmp.equal
    assert cmp.witness is not None and cmp.witness_side in ("left", "right")
    # the witness really is outside the other span
    other = a if cmp.witness_side == "right" else c
    assert not other.contains(cmp.witness)


def test_span_comparison_requires_one_registry():
    reg1, reg2 = VarRegistry(), VarRegistry()
    reg1.add("a"), reg2.add("a")
    with pytest.raises(IncompatibleSpaces):
        span_equal(_space(reg1, [{0: 1}]), _space(reg2, [{0: 1}]))


def test_solution_space_reduce_and_restrict():
    reg = VarRegistry()
    for name in "abcd":
        reg.add(name)
    space = _space(reg, [{0: 1, 2: 1}, {1: 1, 3: -1}])
    assert space.dimension == 2
    assert space.contains({0: Scalar(2), 2: Scalar(2)})
    assert not space.contains({0: Scalar(1)})
    residual = space.reduce({0: Scalar(1), 1: Scalar(1)})
    assert residual  # nonzero residual proves non-membership
    projected = space.restrict(lambda vid: vid < 2)
    assert projected.dimension == 2
    assert projected.contains({0: Scalar(1)})
