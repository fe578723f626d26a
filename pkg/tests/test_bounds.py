import math

import numpy as np
import pytest

from hilbert_tensors import (
    HilbertTensor,
    InvalidParameterError,
    NotApplicableError,
    bound_C,
    bound_M,
    bound_report,
    form_naive,
    frazer_lhs,
    ingham_lhs,
    n_lambda_direct,
    n_lambda_piecewise,
    norm1,
    norm2,
)


def test_n_lambda_direct_examples():
    assert n_lambda_direct(HilbertTensor(2, 3, 0.5)) == 2.0
    assert n_lambda_direct(HilbertTensor(3, 4, 0.5)) == 2.0
    # S >= 3: nearest achievable sum to 2.3 is s=2 at distance 0.3
    assert n_lambda_direct(HilbertTensor(3, 2, -2.3)) == pytest.approx(10 / 3, rel=1e-14)
    with pytest.raises(NotApplicableError):
        n_lambda_direct(HilbertTensor(2, 3, 1.0))


def test_n_lambda_piecewise_examples():
    assert n_lambda_piecewise(HilbertTensor(2, 3, 0.25)) == 4.0
    assert n_lambda_piecewise(HilbertTensor(3, 2, -2.3)) == pytest.approx(10 / 3, rel=1e-14)
    # S = 9, lambda < -S: 1/(-S - lambda) = 1/11.5
    assert n_lambda_piecewise(HilbertTensor(3, 4, -20.5)) == pytest.approx(1 / 11.5, rel=1e-14)
    assert n_lambda_direct(HilbertTensor(3, 4, -20.5)) == pytest.approx(1 / 11.5, rel=1e-14)


@pytest.mark.parametrize("m,d", [(3, 2), (3, 4), (3, 11)])  # S = 3, 9, 30
def test_n_lambda_direct_matches_piecewise(m, d):
    s_max = m * (d - 1)
    rng = np.random.default_rng(s_max)
    count = 0
    while count < 2000:
        lam = float(rng.uniform(-s_max - 5.0, 1.0))
        if abs(lam - round(lam)) < 1e-9:
            continue
        count += 1
        t = HilbertTensor(m, d, lam)
        a = n_lambda_direct(t)
        b = n_lambda_piecewise(t)
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_bound_C_examples():
    assert bound_C(HilbertTensor(2, 2, 1.0)) == 2.0
    assert (4 + math.sqrt(13)) / 6 < 2.0  # dominates the true dominant eigenvalue
    assert bound_C(HilbertTensor(2, 10, 1.0)) == pytest.approx(3.090169943749474, rel=1e-15)
    assert bound_C(HilbertTensor(3, 4, 0.5)) == pytest.approx(8.0, rel=1e-15)


def test_bound_C_degenerate_dim1():
    rep = bound_report(HilbertTensor(2, 1, 2.0))
    assert rep.c_value == pytest.approx(0.5, rel=1e-15)
    assert "degenerate-dim" in rep.flags
    assert rep.branch == "lambda>=1"


def test_bound_report_branches():
    assert bound_report(HilbertTensor(2, 4, 1.0)).branch == "lambda>=1"
    assert bound_report(HilbertTensor(2, 4, 0.3)).branch == "0<lambda<1"
    assert bound_report(HilbertTensor(2, 4, -1.5)).branch == "-S<lambda<0"
    assert bound_report(HilbertTensor(2, 4, -9.5)).branch == "lambda<-S"


def test_bound_report_json_shape():
    rec = bound_report(HilbertTensor(2, 3, -1.5)).to_json()
    assert set(rec) == {"m", "d", "lambda", "N", "C", "M", "branch", "flags"}
    assert rec["C"] == pytest.approx(6.0, rel=1e-14)  # nearest sums 1, 2 at distance 0.5
    assert rec["M"] is None
    rec2 = bound_report(HilbertTensor(3, 4, 0.25)).to_json()
    assert rec2["C"] == pytest.approx(16.0, rel=1e-14)
    assert rec2["M"] == pytest.approx(math.pi * math.sqrt(2), rel=1e-14)


def test_sine_bound_increasing_and_below_pi():
    ds = np.unique(np.geomspace(1, 10**6, 200).astype(np.int64))
    vals = ds * np.sin(np.pi / ds)
    assert np.all(vals < np.pi)
    assert np.all(np.diff(vals) > 0)


def test_bound_M_constants():
    assert bound_M(0.5) == math.pi  # sine branch hits pi exactly at the boundary
    assert bound_M(1.0) == math.pi
    assert bound_M(5.0) == math.pi
    assert abs(bound_M(0.25) - math.pi * math.sqrt(2)) <= 1e-14
    with pytest.raises(NotApplicableError):
        bound_M(0.0)
    with pytest.raises(NotApplicableError):
        bound_M(-1.5)


def test_frazer_lhs_examples():
    assert frazer_lhs([1.0, 0.0, 0.0]) == 1.0
    assert frazer_lhs([1.0, 1.0]) == pytest.approx(7 / 3, rel=1e-14)
    assert frazer_lhs([0.0, 0.0]) == 0.0
    with pytest.raises(NotApplicableError):
        frazer_lhs([1.0])


def test_ingham_lhs_examples():
    assert ingham_lhs([1.0], 1.0) == 1.0 <= math.pi
    assert ingham_lhs([1.0, 1.0], 0.5) == pytest.approx(56 / 15, rel=1e-14)
    assert ingham_lhs([0.0, 0.0], 0.5) == 0.0
    with pytest.raises(InvalidParameterError):
        ingham_lhs([1.0], 0.0)


def test_inequality_ratio_spot_values():
    # unit vector e_0 at d=2: lhs 1 against bound 2*sin(pi/2) = 2
    assert frazer_lhs([1.0, 0.0]) / (2 * math.sin(math.pi / 2)) == 0.5
    # single-entry vector at a=1/2: lhs 2 against M = pi
    assert ingham_lhs([1.0], 0.5) / bound_M(0.5) == pytest.approx(2 / math.pi, rel=1e-15)


def test_ingham_zero_padding_leaves_value_unchanged():
    rng = np.random.default_rng(21)
    x = rng.uniform(-1.0, 1.0, 17)
    padded = np.concatenate([x, np.zeros(13)])
    a = 0.7
    assert ingham_lhs(padded, a) == pytest.approx(ingham_lhs(x, a), rel=1e-14)


def test_frazer_inequality_random():
    rng = np.random.default_rng(23)
    for d in (2, 3, 7, 16, 41, 64):
        bound_const = d * math.sin(math.pi / d)
        for _ in range(100):
            x = rng.uniform(-1.0, 1.0, d)
            lhs = frazer_lhs(x)
            rhs = bound_const * norm2(x) ** 2
            assert lhs < rhs  # strict for x != 0


def test_ingham_inequality_random():
    rng = np.random.default_rng(29)
    for a in (0.1, 0.25, 0.5, 1.0, 3.0):
        m_const = bound_M(a)
        for _ in range(100):
            length = int(rng.integers(1, 257))
            x = rng.uniform(-1.0, 1.0, length)
            assert ingham_lhs(x, a) <= m_const * norm2(x) ** 2


def test_form_bound_for_shift_at_least_one():
    # |T x^m| <= ||x||_2^2 ||x||_1^(m-2) d sin(pi/d) whenever shift >= 1
    rng = np.random.default_rng(31)
    for m in (2, 3, 4):
        for lam in (1.0, 1.5, 5.0):
            for d in (2, 5, 10):
                t = HilbertTensor(m, d, lam)
                for _ in range(20):
                    x = rng.uniform(-1.0, 1.0, d)
                    lhs = abs(form_naive(t, x))
                    rhs = norm2(x) ** 2 * norm1(x) ** (m - 2) * d * math.sin(math.pi / d)
                    assert lhs <= rhs * (1.0 + 1e-12)


def test_form_bound_against_M_for_positive_shift():
    # ||x||_1^(2-m) |T x^m| <= M(lambda) ||x||_2^2 for lambda > 0
    rng = np.random.default_rng(37)
    for m in (2, 3, 4):
        for lam in (0.1, 0.25, 0.5, 0.7, 1.0, 3.0):
            for d in (1, 4, 9):
                t = HilbertTensor(m, d, lam)
                for _ in range(20):
                    x = rng.uniform(-1.0, 1.0, d)
                    n1 = norm1(x)
                    if n1 == 0.0:
                        continue
                    lhs = n1 ** (2 - m) * abs(form_naive(t, x))
                    rhs = bound_M(lam) * norm2(x) ** 2
                    assert lhs <= rhs * (1.0 + 1e-12)
