"""Tensorization basics: the conversion map, leaves, and the L^p isometry.

A point x in [0,1) factors into base-b digits plus a remainder; a function
factors accordingly into b^d leaf functions. Norms computed leaf by leaf
agree with norms computed on the whole interval.
"""

import math

import numpy as np

from ttfun import Grid, decode_point, encode_point, leaf_restriction, lp_norm_from_leaves
from ttfun.analysis import leaf_lp_norms, piecewise_poly_lp_norm
from ttfun.encoders import random_fixed_knot_spline


def main():
    grid = Grid(2, 3)
    print(f"grid: base {grid.base}, depth {grid.depth}, {grid.leaf_count} leaves")

    for x in (0.625, 0.3, 7 / 9):
        p = encode_point(x, grid)
        print(f"x={x:<10.6f} digits={p.digits} remainder={p.remainder:.6f} "
              f"decode={decode_point(p):.6f}")

    # a leaf restriction is the function on one subinterval, rescaled
    f = lambda t: np.asarray(t) ** 2
    g = leaf_restriction(f, grid, 5)
    print(f"\nleaf 5 of x^2 at y=0.5: {g(0.5):.6f} (= f({(5 + 0.5) / 8}) = {f(0.6875):.6f})")

    # the isometry: leaf-sum norms equal whole-interval norms
    rng = np.random.default_rng(0)
    s = random_fixed_knot_spline(rng, 2, 3, 2, 0)
    print("\nnorms of a random C^0 quadratic spline on the 8-piece grid:")
    for p in (1.0, 2.0, math.inf):
        direct = piecewise_poly_lp_norm(s, p)
        leafs = lp_norm_from_leaves(leaf_lp_norms(s, grid, p), grid, p)
        print(f"  p={p}: direct {direct:.12f}   leaf-sum {leafs:.12f}")


if __name__ == "__main__":
    main()
