import json
import math
from fractions import Fraction

import numpy as np
import pytest

from ttfun.encoders import (
    KnotError,
    MixedBaseError,
    PiecewisePolynomial,
    WaveletSpec,
    badic_cover,
    badic_from_float,
    encode_dilated,
    encode_fixed_knot_spline,
    encode_free_knot_spline,
    encode_polynomial,
    encode_sawtooth,
    haar_mother,
    hat_mother,
    n_term_wavelet,
    random_fixed_knot_spline,
    random_free_knot_spline,
    sawtooth_function,
    spline_space_basis,
)
from ttfun.grids import DomainError, Grid
from ttfun.train import add, dot_l2, evaluate, norm_l2, ranks, scale, tt_round
from ttfun.analysis import rank_span_oracle

QUASI = np.mod(0.5 + np.arange(1, 1001) * 0.6180339887498949, 1.0)


# ---------------------------------------------------------------------------
# PiecewisePolynomial plumbing
# ---------------------------------------------------------------------------


def test_badic_from_float():
    assert badic_from_float(0.375, 2) == (3, 3)
    assert badic_from_float(0.5, 2) == (1, 1)
    with pytest.raises(KnotError, match="0.3333333333333333"):
        badic_from_float(1 / 3, 2)


def test_knot_normalization_and_validation():
    pp = PiecewisePolynomial(2, ((2, 2),), ([1.0], [2.0]))
    assert pp.knots == ((1, 1),)  # 2/4 reduces to 1/2
    with pytest.raises(KnotError):
        PiecewisePolynomial(2, ((1, 1), (1, 1)), ([1.0], [2.0], [3.0]))
    with pytest.raises(DomainError):
        PiecewisePolynomial(2, ((1, 1),), ([1.0],))


def test_json_round_trip():
    pp = PiecewisePolynomial(2, ((3, 3), (1, 1)), ([0.0, 1.0], [2.0], [1.0, 0.0, -1.0]))
    doc = json.loads(json.dumps(pp.to_json_dict()))
    back = PiecewisePolynomial.from_json_dict(doc)
    assert back.base == pp.base and back.knots == pp.knots
    assert all(np.array_equal(a, b) for a, b in zip(back.pieces, pp.pieces))
    # float knots are accepted when exactly b-adic
    doc2 = {"base": 2, "knots": [0.375], "pieces": [[1.0], [0.0]]}
    assert PiecewisePolynomial.from_json_dict(doc2).knots == ((3, 3),)


def test_evaluation_half_open():
    pp = PiecewisePolynomial(2, ((1, 1),), ([0.0, 1.0], [5.0]))
    assert pp(0.25) == 0.5  # local coordinate of the left piece
    assert pp(0.5) == 5.0  # knots belong to the right piece
    with pytest.raises(DomainError):
        pp(1.0)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def test_constant_is_rank_one():
    tt = encode_polynomial([2.5], Grid(2, 4))
    assert tt.bond_dims == (1, 1, 1, 1)
    assert np.abs(evaluate(tt, QUASI) - 2.5).max() < 1e-14


def test_x_squared_ranks():
    tt = encode_polynomial([0.0, 0.0, 1.0], Grid(2, 2))
    assert ranks(tt).ranks == (2, 3)
    f = lambda x: np.asarray(x) ** 2
    assert [rank_span_oracle(f, Grid(2, 2), nu) for nu in (1, 2)] == [2, 3]


def test_degree5_ranks_frozen_from_oracle():
    # dimension bound min(6, 2^nu) holds; the numerically visible counts at
    # the stated tolerances are frozen from the span oracle itself
    rng = np.random.default_rng(0)
    c = rng.standard_normal(6)
    f = lambda x: np.polynomial.polynomial.polyval(np.asarray(x), c)
    tt = encode_polynomial(c, Grid(2, 6))
    rk = ranks(tt).ranks
    oracle = [rank_span_oracle(f, Grid(2, 6), nu) for nu in range(1, 7)]
    assert oracle == [2, 4, 5, 4, 4, 4]
    assert rk == (2, 4, 5, 5, 5, 4)
    for nu, (a, b) in enumerate(zip(rk, oracle), start=1):
        assert max(a, b) <= min(6, 2**nu)


@pytest.mark.parametrize("deg", [1, 2, 3])
def test_low_degree_generic_equality(deg):
    rng = np.random.default_rng(deg)
    c = rng.standard_normal(deg + 1)
    tt = encode_polynomial(c, Grid(2, 5))
    assert ranks(tt).ranks == tuple(min(deg + 1, 2**nu) for nu in range(1, 6))


def test_polynomial_pointwise_exactness():
    rng = np.random.default_rng(1)
    for b, d in ((2, 6), (3, 4)):
        c = rng.standard_normal(5)
        tt = encode_polynomial(c, Grid(b, d))
        ref = np.polynomial.polynomial.polyval(QUASI, c)
        assert np.abs(evaluate(tt, QUASI) - ref).max() < 1e-12


# ---------------------------------------------------------------------------
# fixed-knot splines
# ---------------------------------------------------------------------------


def test_haar_mother():
    h = haar_mother()
    assert ranks(h).ranks == (1,)
    assert h(0.25) == pytest.approx(-1.0, abs=1e-14)
    assert h(0.75) == pytest.approx(1.0, abs=1e-14)
    assert norm_l2(h) == pytest.approx(1.0, abs=1e-14)


def test_hat_ranks_depth4():
    t = encode_dilated(WaveletSpec(hat_mother(), 0, 0, 2.0), 4)
    assert all(r <= 2 for r in ranks(t).ranks)
    hat = lambda x: np.where(np.asarray(x) < 0.5, 2 * np.asarray(x), 2 * (1 - np.asarray(x)))
    assert np.abs(evaluate(t, QUASI) - hat(QUASI)).max() < 1e-14


def test_random_spline_rank_bound():
    rng = np.random.default_rng(2)
    s = random_fixed_knot_spline(rng, 2, 3, 1, -1)
    tt = encode_fixed_knot_spline(s)
    for nu, r in enumerate(ranks(tt).ranks, start=1):
        assert r <= min(2 * 2 ** (3 - nu), 2**nu)
    assert np.abs(evaluate(tt, QUASI) - s(QUASI)).max() < 1e-12


def test_uniform_grid_required():
    pp = PiecewisePolynomial(2, ((1, 2),), ([1.0], [2.0]))  # knot at 1/4 only
    with pytest.raises(DomainError):
        encode_fixed_knot_spline(pp)


@pytest.mark.parametrize(
    "base,depth,degree,cont",
    [(2, 2, 1, -1), (2, 2, 1, 0), (2, 1, 3, 1), (3, 1, 2, 0), (2, 2, 2, 1)],
)
def test_spline_space_dimension(base, depth, degree, cont):
    # Gram rank of the encoded truncated-power basis equals
    # (m+1)N - (N-1)(c+1)
    fns = spline_space_basis(base, depth, degree, cont)
    n = base**depth
    expected = (degree + 1) * n - (n - 1) * (cont + 1)
    assert len(fns) == expected
    trains = [encode_fixed_knot_spline(f, degree=degree) for f in fns]
    G = np.array([[dot_l2(a, b) for b in trains] for a in trains])
    sv = np.linalg.svd(G, compute_uv=False)
    assert int(np.sum(sv > 1e-10 * sv[0])) == expected


def test_random_spline_continuity():
    rng = np.random.default_rng(3)
    s = random_fixed_knot_spline(rng, 2, 3, 3, 1)  # C^1 cubic spline
    eps = 1e-7
    for k in range(1, 8):
        x = k / 8.0
        left, right = s(x - eps), s(x)
        assert abs(left - right) < 1e-5
        dl = (s(x - eps) - s(x - 2 * eps)) / eps
        dr = (s(x + eps) - s(x)) / eps
        assert abs(dl - dr) < 1e-3


# ---------------------------------------------------------------------------
# free-knot splines
# ---------------------------------------------------------------------------


def test_single_piece_reduces_to_polynomial():
    pp = PiecewisePolynomial(2, (), ([0.5, -1.0, 2.0],))
    tt = encode_free_knot_spline(pp, depth=3)
    ref = encode_polynomial([0.5, -1.0, 2.0], Grid(2, 3))
    assert np.abs(evaluate(tt, QUASI) - evaluate(ref, QUASI)).max() < 1e-13


def test_two_piece_constant_rank_collapse():
    # one dyadic knot at 1/2 and constant pieces: every level span is the
    # constants, so the rounded ranks are all 1 (frozen from the oracle)
    pp = PiecewisePolynomial(2, ((1, 1),), ([1.0], [2.5]))
    tt = tt_round(encode_free_knot_spline(pp, depth=4), 1e-12)
    assert ranks(tt).ranks == (1, 1, 1, 1)
    assert [rank_span_oracle(pp, Grid(2, 4), nu) for nu in range(1, 5)] == [1, 1, 1, 1]


def test_badic_cover_examples():
    assert badic_cover(Fraction(0), Fraction(3, 8), 2, 3) == [(0, 2), (2, 3)]
    assert badic_cover(Fraction(0), Fraction(1), 2, 3) == [(0, 0)]
    # worst-ish case stays under 2 d (b-1)
    cov = badic_cover(Fraction(1, 16), Fraction(15, 16), 2, 4)
    assert len(cov) <= 2 * 4 * (2 - 1)


def test_cover_bound_random_sweep():
    rng = np.random.default_rng(6)
    for b in (2, 3):
        for _ in range(40):
            d = int(rng.integers(1, 9))
            lo = int(rng.integers(0, b**d))
            hi = int(rng.integers(lo + 1, b**d + 1))
            cov = badic_cover(Fraction(lo, b**d), Fraction(hi, b**d), b, d)
            assert len(cov) <= 2 * d * (b - 1)
            total = sum(Fraction(1, b**lv) for _, lv in cov)
            assert total == Fraction(hi - lo, b**d)


def test_free_knot_exactness_and_ranks():
    rng = np.random.default_rng(7)
    s = random_free_knot_spline(rng, 2, 3, 2, 4)
    tt = encode_free_knot_spline(s)
    assert np.abs(evaluate(tt, QUASI) - s(QUASI)).max() < 1e-12
    d = max(s.max_level, 1)
    rk = ranks(tt_round(tt, 1e-12))
    for nu, r in enumerate(rk.ranks, start=1):
        assert r <= min(2**nu, 3 * 2 ** (d - nu), 2 + 3)


def test_free_knot_reports_offending_knot():
    with pytest.raises(KnotError, match="0.3"):
        PiecewisePolynomial.from_json_dict(
            {"base": 2, "knots": [0.3], "pieces": [[1.0], [2.0]]}
        )


# ---------------------------------------------------------------------------
# dilations and wavelet sums
# ---------------------------------------------------------------------------


def _haar_fn(level, shift, p=2.0):
    def f(x):
        x = np.asarray(x, dtype=float)
        t = 2.0**level * x - shift
        inside = (t >= 0) & (t < 1)
        return 2.0 ** (level / p) * np.where(t < 0.5, -1.0, 1.0) * inside

    return f


def test_dilated_haar():
    tt = encode_dilated(WaveletSpec(haar_mother(), 2, 1, 2.0), 6)
    assert ranks(tt).ranks == (1, 1, 1, 1, 1, 1)
    assert norm_l2(tt) == pytest.approx(1.0, abs=1e-13)
    ref = _haar_fn(2, 1)
    assert np.abs(evaluate(tt, QUASI) - ref(QUASI)).max() < 1e-13


def test_dilated_hat():
    tt = encode_dilated(WaveletSpec(hat_mother(), 1, 0, 2.0), 5)
    assert ranks(tt).ranks[0] == 1
    assert all(r <= 2 for r in ranks(tt).ranks[1:])


def test_dilated_level_zero_identity():
    h = haar_mother()
    tt = encode_dilated(WaveletSpec(h, 0, 0, 2.0), 1)
    assert np.abs(evaluate(tt, QUASI) - evaluate(h, QUASI)).max() == 0.0


def test_dilated_depth_error():
    with pytest.raises(DomainError):
        encode_dilated(WaveletSpec(haar_mother(), 2, 0, 2.0), 2)


def test_n_term_single_matches_dilated():
    spec = WaveletSpec(haar_mother(), 1, 1, 2.0)
    a = n_term_wavelet([(1.0, spec)], 4)
    b = encode_dilated(spec, 4)
    assert np.abs(evaluate(a, QUASI) - evaluate(b, QUASI)).max() == 0.0


def test_n_term_disjoint_rounds_small():
    h = haar_mother()
    s = n_term_wavelet(
        [(1.0, WaveletSpec(h, 2, 0, 2.0)), (-3.0, WaveletSpec(h, 2, 3, 2.0))], 5
    )
    assert max(ranks(tt_round(s, 1e-12)).ranks) <= 2


def test_n_term_vanishing_moment():
    h = haar_mother()
    rng = np.random.default_rng(8)
    terms = [(float(c), WaveletSpec(h, 2, j, 2.0)) for j, c in enumerate(rng.standard_normal(4))]
    s = n_term_wavelet(terms, 5)
    one = encode_polynomial([1.0], Grid(2, 5), basis_kind=s.basis.kind)
    assert abs(dot_l2(s, one)) < 1e-12


def test_n_term_mixed_base_error():
    h2 = haar_mother()
    s3 = PiecewisePolynomial.uniform(3, 1, [[1.0], [0.0], [-1.0]])
    m3 = encode_fixed_knot_spline(s3)
    with pytest.raises(MixedBaseError):
        n_term_wavelet([(1.0, WaveletSpec(h2, 0, 0)), (1.0, WaveletSpec(m3, 0, 0))])


# ---------------------------------------------------------------------------
# sawtooth family
# ---------------------------------------------------------------------------


def test_sawtooth_depth1_is_hat_tooth():
    tt = encode_sawtooth(Grid(2, 1), 1)
    # single tooth: rises on the left half-leaf (psi_1(y) = y)
    assert tt(0.25) == pytest.approx(0.5, abs=1e-15)
    assert tt(0.75) == pytest.approx(0.5, abs=1e-15)
    assert tt(0.5) == pytest.approx(1.0, abs=1e-15)


def test_sawtooth_norms():
    tt = encode_sawtooth(Grid(2, 3), 1)
    assert norm_l2(tt) ** 2 == pytest.approx(1.0 / 3.0, abs=1e-14)


def test_sawtooth_ranks_exactly_two():
    for d in (2, 4, 6):
        tt = encode_sawtooth(Grid(2, d), 1)
        assert ranks(tt).ranks == tuple([2] * d)
        f = sawtooth_function(d)
        assert [rank_span_oracle(f, Grid(2, d), nu) for nu in range(1, d + 1)] == [2] * d


def test_sawtooth_matches_sampler():
    for d in (1, 3, 6):
        tt = encode_sawtooth(Grid(2, d), 2)
        f = sawtooth_function(d)
        assert np.abs(evaluate(tt, QUASI) - f(QUASI)).max() < 1e-14


def test_sawtooth_base_error():
    with pytest.raises(DomainError):
        encode_sawtooth(Grid(3, 3), 1)
    with pytest.raises(DomainError):
        encode_sawtooth(Grid(2, 3), 0)


# ---------------------------------------------------------------------------
# every encoder matches its source pointwise
# ---------------------------------------------------------------------------


def test_encoder_outputs_match_sources():
    rng = np.random.default_rng(10)
    cases = []
    c = rng.standard_normal(4)
    cases.append((lambda x: np.polynomial.polynomial.polyval(np.asarray(x), c),
                  encode_polynomial(c, Grid(2, 5))))
    s = random_fixed_knot_spline(rng, 2, 3, 2, 0)
    cases.append((s, encode_fixed_knot_spline(s)))
    fs = random_free_knot_spline(rng, 2, 3, 1, 4)
    cases.append((fs, encode_free_knot_spline(fs)))
    cases.append((_haar_fn(1, 1), encode_dilated(WaveletSpec(haar_mother(), 1, 1, 2.0), 4)))
    cases.append((sawtooth_function(4), encode_sawtooth(Grid(2, 4), 1)))
    for f, tt in cases:
        assert np.abs(evaluate(tt, QUASI) - np.asarray(f(QUASI))).max() < 1e-12
