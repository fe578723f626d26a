import numpy as np
import pytest

from hilbert_tensors import (
    HilbertTensor,
    InvalidParameterError,
    apply_fast,
    apply_naive,
    bench_apply,
    convolve,
    form_fast,
    form_naive,
    hankel_correlate,
    poly_power_coeffs,
)


def rel_err(got, want):
    got = np.atleast_1d(np.asarray(got, dtype=float))
    want = np.atleast_1d(np.asarray(want, dtype=float))
    return np.abs(got - want).max() / max(1.0, np.abs(want).max())


def test_poly_power_examples():
    np.testing.assert_array_equal(poly_power_coeffs([1.0, 1.0], 2), [1, 2, 1])
    np.testing.assert_array_equal(poly_power_coeffs([1.0, 1.0], 3), [1, 3, 3, 1])
    np.testing.assert_array_equal(poly_power_coeffs([2.0, -1.0], 2), [4, -4, 1])


def test_poly_power_rejects_bad_k():
    for k in (0, -1, 1.5):
        with pytest.raises(InvalidParameterError):
            poly_power_coeffs([1.0, 2.0], k)


def test_poly_power_length_and_sum_identity():
    rng = np.random.default_rng(2)
    for _ in range(40):
        d = int(rng.integers(1, 12))
        k = int(rng.integers(1, 5))
        x = rng.uniform(-1.5, 1.5, d)
        for method in ("direct", "fft"):
            c = poly_power_coeffs(x, k, method=method)
            assert len(c) == k * (d - 1) + 1
            want = x.sum() ** k
            assert abs(c.sum() - want) <= 1e-12 * max(1.0, abs(want))


@pytest.mark.parametrize("n", [10, 100, 1000, 10_000])
def test_convolution_paths_agree(n):
    rng = np.random.default_rng(n)
    a = rng.uniform(-1.0, 1.0, n)
    b = rng.uniform(-1.0, 1.0, max(n // 3, 1))
    direct = convolve(a, b, method="direct")
    fft = convolve(a, b, method="fft")
    assert rel_err(fft, direct) <= 1e-10


def test_apply_fast_example():
    t = HilbertTensor(3, 2, 1.0)
    np.testing.assert_allclose(apply_fast(t, [1.0, 1.0]), [7 / 3, 17 / 12], rtol=1e-13)


def test_apply_fast_order2_is_matvec():
    t = HilbertTensor(2, 6, 0.5)
    h = t.generating_vector
    H = h[np.add.outer(np.arange(6), np.arange(6))]
    rng = np.random.default_rng(4)
    x = rng.uniform(-1.0, 1.0, 6)
    np.testing.assert_allclose(apply_fast(t, x), H @ x, rtol=1e-13)


def test_apply_fast_unit_vector_column():
    t = HilbertTensor(2, 5, 1.0)
    e0 = np.zeros(5)
    e0[0] = 1.0
    np.testing.assert_allclose(apply_fast(t, e0), t.generating_vector[:5], rtol=1e-14)


def test_form_fast_examples():
    t = HilbertTensor(3, 2, 1.0)
    assert form_fast(t, [1.0, 1.0]) == pytest.approx(15 / 4, rel=1e-13)
    t2 = HilbertTensor(2, 2, 1.0)
    assert form_fast(t2, [1.0, 0.0]) == pytest.approx(1.0, rel=1e-14)
    assert form_fast(t, [0.0, 0.0]) == 0.0


def test_fast_matches_naive_over_small_grid():
    rng = np.random.default_rng(6)
    for m in (2, 3, 4):
        for d in (1, 2, 3, 5, 8):
            for lam in (0.5, 1.0, -2.3):
                t = HilbertTensor(m, d, lam)
                for _ in range(5):
                    x = rng.uniform(-1.0, 1.0, d)
                    assert rel_err(apply_fast(t, x), apply_naive(t, x)) <= 1e-10
                    assert rel_err(form_fast(t, x), form_naive(t, x)) <= 1e-10


def test_nonnegative_inputs_give_nonnegative_outputs():
    rng = np.random.default_rng(8)
    for method in ("direct", "fft"):
        for _ in range(20):
            m = int(rng.integers(2, 5))
            d = int(rng.integers(1, 40))
            t = HilbertTensor(m, d, float(rng.uniform(0.1, 3.0)))
            x = rng.uniform(0.0, 1.0, d)
            x[rng.uniform(size=d) < 0.3] = 0.0  # zeros exercise round-off sign
            assert poly_power_coeffs(x, m - 1, method=method).min() >= 0.0
            assert apply_fast(t, x, method=method).min() >= 0.0


def test_hankel_correlate_basic_and_guard():
    h = np.array([1.0, 0.5, 1 / 3, 0.25])
    c = np.array([1.0, 2.0, 1.0])
    out = hankel_correlate(h, c, 2)
    np.testing.assert_allclose(out, [7 / 3, 17 / 12], rtol=1e-14)
    with pytest.raises(InvalidParameterError):
        hankel_correlate(h, c, 3)


def test_bench_records_and_cutoff():
    t = HilbertTensor(3, 32, 1.0)
    recs = bench_apply(t, 2, seed=1)
    assert [r["method"] for r in recs] == ["naive", "fast"]
    assert all(not r["skipped"] and r["mean_seconds"] > 0 for r in recs)
    assert all(r["trials"] == 2 for r in recs)

    big = HilbertTensor(3, 4096, 1.0)  # 4096**3 > 1e9: naive must be skipped
    recs = bench_apply(big, 1, seed=1)
    naive = next(r for r in recs if r["method"] == "naive")
    fast = next(r for r in recs if r["method"] == "fast")
    assert naive["skipped"] and naive["mean_seconds"] is None
    assert not fast["skipped"] and fast["mean_seconds"] > 0


def test_bench_rejects_zero_trials():
    t = HilbertTensor(3, 8, 1.0)
    with pytest.raises(InvalidParameterError):
        bench_apply(t, 0)
