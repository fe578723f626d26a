import numpy as np
import pytest

from hilbert_tensors import (
    DimensionMismatchError,
    HilbertTensor,
    InvalidParameterError,
    apply_naive,
    form_naive,
    norm1,
    norm2,
    t_operator,
)


def test_descriptor_max_sum_examples():
    assert HilbertTensor(3, 4, 1.0).max_sum == 9
    assert HilbertTensor(2, 5, 0.5).max_sum == 8


@pytest.mark.parametrize("bad_shift", [-2.0, 0.0, -1.0, -10.0, 0])
def test_descriptor_rejects_nonpositive_integer_shift(bad_shift):
    with pytest.raises(InvalidParameterError):
        HilbertTensor(3, 4, bad_shift)


def test_descriptor_rejects_bad_order_and_dim():
    with pytest.raises(InvalidParameterError):
        HilbertTensor(1, 4, 1.0)
    with pytest.raises(InvalidParameterError):
        HilbertTensor(2, 0, 1.0)
    with pytest.raises(InvalidParameterError):
        HilbertTensor(2, 2, float("nan"))


def test_descriptor_accepts_negative_noninteger_shift():
    t = HilbertTensor(2, 3, -2.5)
    assert t.shift == -2.5


def test_entry_examples():
    t = HilbertTensor(3, 4, 1.0)
    assert t.entry((0, 0, 0)) == 1.0
    assert t.entry((1, 1, 2)) == 1.0 / 5.0
    t2 = HilbertTensor(2, 2, -2.5)
    assert t2.entry((0, 1)) == 1.0 / -1.5


def test_entry_validation():
    t = HilbertTensor(3, 4, 1.0)
    with pytest.raises(IndexError):
        t.entry((0, 0, 4))
    with pytest.raises(IndexError):
        t.entry((0, 0, -1))
    with pytest.raises(InvalidParameterError):
        t.entry((0, 0))


def test_entry_permutation_symmetry():
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = int(rng.integers(2, 5))
        d = int(rng.integers(1, 6))
        lam = float(rng.uniform(0.1, 3.0))
        t = HilbertTensor(m, d, lam)
        idx = rng.integers(0, d, size=m)
        base = t.entry(tuple(idx))
        perm = rng.permutation(idx)
        assert t.entry(tuple(perm)) == base


def test_entry_matches_generating_vector():
    rng = np.random.default_rng(11)
    for _ in range(50):
        m = int(rng.integers(2, 5))
        d = int(rng.integers(1, 6))
        t = HilbertTensor(m, d, float(rng.uniform(-3.0, 3.0)) + 0.3)
        idx = tuple(int(v) for v in rng.integers(0, d, size=m))
        assert t.entry(idx) == t.generating_vector[sum(idx)]


def test_generating_vector_examples():
    np.testing.assert_allclose(
        HilbertTensor(3, 2, 1.0).generating_vector, [1.0, 0.5, 1 / 3, 0.25], rtol=0
    )
    np.testing.assert_allclose(
        HilbertTensor(2, 2, 0.5).generating_vector, [2.0, 2 / 3, 0.4], rtol=0
    )
    np.testing.assert_allclose(HilbertTensor(2, 1, 1.0).generating_vector, [1.0], rtol=0)


def test_generating_vector_invariants():
    for lam in (0.25, 1.0, 3.7):
        t = HilbertTensor(3, 5, lam)
        h = t.generating_vector
        assert len(h) == t.max_sum + 1
        assert np.all(h > 0)
        assert np.all(np.diff(h) < 0)
        k = np.arange(len(h))
        assert np.abs(h * (k + lam) - 1.0).max() <= 1e-15


def test_apply_naive_examples():
    t = HilbertTensor(3, 2, 1.0)
    np.testing.assert_allclose(apply_naive(t, [1.0, 1.0]), [7 / 3, 17 / 12], rtol=1e-14)
    t2 = HilbertTensor(2, 2, 1.0)
    np.testing.assert_allclose(apply_naive(t2, [1.0, 0.0]), [1.0, 0.5], rtol=0)
    assert np.all(apply_naive(t, [0.0, 0.0]) == 0.0)


def test_apply_naive_dimension_error():
    t = HilbertTensor(3, 2, 1.0)
    with pytest.raises(DimensionMismatchError):
        apply_naive(t, [1.0, 1.0, 1.0])


def test_apply_naive_refuses_infeasible_cost():
    t = HilbertTensor(4, 256, 1.0)  # 256**4 > 1e9 multiplies
    with pytest.raises(InvalidParameterError):
        apply_naive(t, np.ones(256))


def test_form_naive_examples():
    t = HilbertTensor(3, 2, 1.0)
    assert form_naive(t, [1.0, 1.0]) == pytest.approx(15 / 4, rel=1e-14)
    t2 = HilbertTensor(2, 2, 1.0)
    assert form_naive(t2, [1.0, 0.0]) == 1.0
    assert form_naive(t, [0.0, 0.0]) == 0.0


def test_form_apply_coherence():
    rng = np.random.default_rng(3)
    for _ in range(30):
        m = int(rng.integers(2, 5))
        d = int(rng.integers(1, 7))
        lam = float(rng.choice([0.5, 1.0, 2.7, -2.3]))
        t = HilbertTensor(m, d, lam)
        x = rng.uniform(-1.0, 1.0, d)
        f = form_naive(t, x)
        inner = float(x @ apply_naive(t, x))
        assert abs(f - inner) <= 1e-12 * (1.0 + abs(f))


def test_apply_homogeneity():
    rng = np.random.default_rng(5)
    for _ in range(30):
        m = int(rng.integers(2, 5))
        d = int(rng.integers(1, 7))
        t = HilbertTensor(m, d, float(rng.uniform(0.2, 3.0)))
        x = rng.uniform(-1.0, 1.0, d)
        c = float(rng.uniform(-2.0, 2.0))
        lhs = apply_naive(t, c * x)
        rhs = c ** (m - 1) * apply_naive(t, x)
        scale = max(1.0, np.abs(rhs).max())
        assert np.abs(lhs - rhs).max() <= 1e-12 * scale


def test_apply_positivity():
    rng = np.random.default_rng(9)
    for _ in range(20):
        m = int(rng.integers(2, 5))
        d = int(rng.integers(1, 7))
        t = HilbertTensor(m, d, float(rng.uniform(0.1, 4.0)))
        x = rng.uniform(0.0, 1.0, d)
        x[int(rng.integers(0, d))] = 1.0  # at least one strictly positive entry
        assert np.all(apply_naive(t, x) > 0.0)


def test_t_operator_order2_is_apply():
    t = HilbertTensor(2, 3, 1.0)
    x = np.array([0.3, -0.2, 0.9])
    np.testing.assert_array_equal(t_operator(t, x), apply_naive(t, x))


def test_t_operator_example_and_zero():
    t = HilbertTensor(3, 2, 1.0)
    np.testing.assert_allclose(t_operator(t, [1.0, 1.0]), [7 / 6, 17 / 24], rtol=1e-14)
    assert np.all(t_operator(t, [0.0, 0.0]) == 0.0)


def test_t_operator_degree1_homogeneity():
    rng = np.random.default_rng(13)
    for _ in range(20):
        m = int(rng.integers(2, 5))
        d = int(rng.integers(1, 6))
        t = HilbertTensor(m, d, float(rng.uniform(0.2, 3.0)))
        x = rng.uniform(-1.0, 1.0, d)
        c = float(rng.uniform(0.01, 5.0))
        lhs = t_operator(t, c * x)
        rhs = c * t_operator(t, x)
        scale = max(1.0, np.abs(rhs).max())
        assert np.abs(lhs - rhs).max() <= 1e-12 * scale


def test_norm_chain():
    rng = np.random.default_rng(17)
    for _ in range(1000):
        d = int(rng.integers(1, 33))
        x = rng.uniform(-5.0, 5.0, d)
        n1, n2 = norm1(x), norm2(x)
        assert n2 <= n1 * (1.0 + 1e-12)
        assert n1 <= np.sqrt(d) * n2 * (1.0 + 1e-12)
