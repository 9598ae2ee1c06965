"""Complexity measures and the cost-bound audit.

cost_N counts rank indices, cost_C parameter slots, cost_S nonzeros. The
audit sweeps the encoder families against the bounds their constructions
satisfy, including the explicit constants where the derivations give them.
"""

from collections import Counter

from ttfun import Grid
from ttfun.complexity import audit_bounds, complexity, default_audit_sweep
from ttfun.encoders import encode_sawtooth


def main():
    tt = encode_sawtooth(Grid(2, 6), 1)
    rep = complexity(tt)
    print("sawtooth at depth 6:", rep.to_json_dict())
    print(f"  cost_C {rep.cost_c} <= 8d + 2m + 2 = {8 * 6 + 2 * 1 + 2}")

    print("\nsingle instance (free-knot, b=2, N=4, m=1, level 6):")
    for r in audit_bounds("free_knot", b=2, N=4, m=1, d=6)[:4]:
        flag = "ok " if r.passed else "FAIL"
        print(f"  [{flag}] {r.quantity:24s} measured {r.measured:10.0f} bound {r.bound:10.0f}")

    recs = default_audit_sweep()
    by_instance = Counter(r.instance for r in recs)
    bad = [r for r in recs if not r.passed]
    print(f"\nfull sweep: {len(recs)} bounds over {dict(by_instance)}")
    print(f"violations: {len(bad)}")


if __name__ == "__main__":
    main()
