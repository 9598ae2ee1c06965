"""Exact encoders and their rank structure.

Polynomials encode with ranks min(deg+1, b^nu); splines on the uniform
grid follow the spline-space dimension profile; dilated Haar wavelets are
rank one at every level; the self-similar sawtooth family is rank two
everywhere with parameter count linear in the depth.
"""

import numpy as np

from ttfun import Grid, ranks
from ttfun.analysis import rank_span_oracle
from ttfun.complexity import complexity
from ttfun.encoders import (
    PiecewisePolynomial,
    WaveletSpec,
    encode_dilated,
    encode_free_knot_spline,
    encode_polynomial,
    encode_sawtooth,
    haar_mother,
    random_fixed_knot_spline,
    encode_fixed_knot_spline,
    sawtooth_function,
)
from ttfun.train import evaluate, tt_round


def main():
    print("polynomial x^2 on the 4-leaf grid: ranks", ranks(encode_polynomial([0, 0, 1], Grid(2, 2))).ranks)

    rng = np.random.default_rng(2)
    s = random_fixed_knot_spline(rng, 2, 4, 1, 0)   # continuous piecewise linear
    tt = encode_fixed_knot_spline(s)
    print("C^0 linear spline, 16 pieces: ranks", ranks(tt).ranks,
          " bound", tuple(min(2 ** (4 - nu) + 1, 2**nu) for nu in range(1, 5)))

    # free knots: a 2-piece spline with knot 3/8 covered by two dyadic blocks
    pp = PiecewisePolynomial(2, ((3, 3),), ([0.0, 1.0], [1.0, -1.0]))
    ft = encode_free_knot_spline(pp)
    print("free knot at 3/8: sparse bonds", ft.bond_dims,
          "-> rounded ranks", ranks(tt_round(ft, 1e-12)).ranks)

    h = encode_dilated(WaveletSpec(haar_mother(), 2, 1, 2.0), 6)
    print("Haar at level 2, shift 1: ranks", ranks(h).ranks)

    for d in (4, 8):
        st = encode_sawtooth(Grid(2, d), 1)
        rep = complexity(st)
        oracle = [rank_span_oracle(sawtooth_function(d), Grid(2, d), nu) for nu in range(1, d + 1)]
        print(f"sawtooth depth {d}: ranks {ranks(st).ranks} (oracle {oracle}), "
              f"cost_C {rep.cost_c} <= {8 * d + 4}")
        xs = np.linspace(0, 0.999, 7)
        assert np.allclose(evaluate(st, xs), sawtooth_function(d)(xs))


if __name__ == "__main__":
    main()
