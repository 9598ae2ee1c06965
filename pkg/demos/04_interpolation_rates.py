"""Leaf-wise interpolation, re-interpolation, and Chebyshev truncation.

Interpolating leaf by leaf at degree m converges like b^(-d(m+1)) for
smooth targets; re-interpolation trades depth for degree at controlled
cost; truncated Chebyshev series feed the spectral construction.
"""

import numpy as np

from ttfun import Grid
from ttfun.interpolation import (
    Interpolator,
    chebyshev_truncate,
    polynomial_interpolant_train,
    reinterpolate,
    tensor_interpolate,
)
from ttfun.train import evaluate

DENSE = np.linspace(0.0, 0.9995, 4001)


def main():
    f = lambda x: np.sin(2 * np.pi * np.asarray(x))
    print("sup error of leaf-wise interpolation of sin(2 pi x):")
    for m in (1, 2, 3):
        errs = []
        for d in (4, 6, 8):
            tt = tensor_interpolate(f, Grid(2, d), Interpolator(m))
            errs.append(np.abs(evaluate(tt, DENSE) - f(DENSE)).max())
        print(f"  m={m}: " + "  ".join(f"d={d}: {e:.2e}" for d, e in zip((4, 6, 8), errs)))

    # re-interpolation: cubic interpolant at depth 3 pushed to linear depth 8
    g = lambda x: np.exp(np.asarray(x))
    s = tensor_interpolate(g, Grid(2, 3), Interpolator(3))
    st = reinterpolate(s, 8, 1)
    print("\nexp: |f - I_{2,3,3} f|_inf =", f"{np.abs(evaluate(s, DENSE) - g(DENSE)).max():.2e}",
          " after re-interpolation to (8, 1):", f"{np.abs(evaluate(st, DENSE) - g(DENSE)).max():.2e}")

    # Chebyshev truncation of an analytic function, then a degree-1 interpolant
    h = lambda x: 1.0 / (np.asarray(x) + 2.0)
    coeffs = chebyshev_truncate(h, 24)
    print("\nChebyshev coefficients of 1/(x+2) decay geometrically:")
    print("  |a_k| at k=0,6,12,18,24:", ", ".join(f"{abs(coeffs[k]):.1e}" for k in (0, 6, 12, 18, 24)))
    tt = polynomial_interpolant_train(coeffs, Grid(2, 12), 1, input_basis="chebyshev")
    print("  interpolant at depth 12, degree 1: sup error",
          f"{np.abs(evaluate(tt, DENSE) - h(DENSE)).max():.2e}")


if __name__ == "__main__":
    main()
