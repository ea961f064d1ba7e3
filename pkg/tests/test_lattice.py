import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewpbw.coeffs import Automorphism, RationalFunctionField, genericity_check, integer_lattice_rank, verify_dependency
from skewpbw.errors import Unsupported

K3 = RationalFunctionField(("t1", "t2", "t3"))
t1, t2, t3 = (K3.param(k) for k in range(3))
ID3 = [Automorphism.identity(3)] * 3


def qmatrix(n, upper, field=K3):
    q = [[field.one()] * n for _ in range(n)]
    for (i, j), v in upper.items():
        q[i][j], q[j][i] = v, v ** -1
    return q


def test_rank_examples():
    assert integer_lattice_rank([(1, 0), (0, 1)]) == {"rank": 2, "kernel": []}
    res = integer_lattice_rank([(2, 4), (1, 2)])
    assert res["rank"] == 1
    assert res["kernel"] == [(1, -2)]
    assert integer_lattice_rank([])["rank"] == 0


def test_dependent_triple():
    q = qmatrix(3, {(0, 1): t1, (0, 2): t2, (1, 2): t1 * t2})
    res = genericity_check(q, ID3)
    assert not res.generic
    assert tuple(res.dependency) in {(1, 1, -1), (-1, -1, 1)}
    assert verify_dependency(q, res.pairs, res.dependency)


def test_standard_basis_is_generic():
    q = qmatrix(3, {(0, 1): t1, (0, 2): t2, (1, 2): t3})
    res = genericity_check(q, ID3)
    assert res.generic and res.rank == 3


def test_trivial_parameter_is_not_generic():
    K = RationalFunctionField(("q",))
    q = qmatrix(2, {}, K)
    res = genericity_check(q, [Automorphism.identity(1)] * 2)
    assert not res.generic
    assert verify_dependency(q, res.pairs, res.dependency)


def test_unsupported_cases():
    with pytest.raises(Unsupported):
        genericity_check(qmatrix(2, {(0, 1): 2 * t1}), ID3[:2])
    with pytest.raises(Unsupported):
        genericity_check(qmatrix(2, {(0, 1): t1 + 1}), ID3[:2])
    with pytest.raises(Unsupported):
        genericity_check(qmatrix(2, {(0, 1): t1}), [Automorphism((2, 1, 1))] * 2)


def brute_dependency(vectors, span=3):
    for coeffs in itertools.product(range(-span, span + 1), repeat=len(vectors)):
        if any(coeffs) and all(sum(c * v[k] for c, v in zip(coeffs, vectors)) == 0 for k in range(len(vectors[0]))):
            return coeffs
    return None


@given(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=1, max_size=4))
def test_rank_agrees_with_brute_force(vectors):
    res = integer_lattice_rank(vectors)
    for k in res["kernel"]:
        assert all(sum(c * v[j] for c, v in zip(k, vectors)) == 0 for j in range(3))
    dep = brute_dependency(vectors)
    if dep is not None:
        assert res["rank"] < len(vectors)
    if res["rank"] == len(vectors):
        assert dep is None


@given(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=3, max_size=3))
def test_genericity_agrees_with_brute_force(exps):
    mono = [t1 ** a * t2 ** b * t3 ** c for a, b, c in exps]
    q = qmatrix(3, {(0, 1): mono[0], (0, 2): mono[1], (1, 2): mono[2]})
    res = genericity_check(q, ID3)
    if brute_dependency(exps) is not None:
        assert not res.generic
    if not res.generic:
        assert verify_dependency(q, res.pairs, res.dependency)
