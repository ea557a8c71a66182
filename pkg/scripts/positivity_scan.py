"""Scan the two signed-product expansions for negative coefficients.

Both products pair a reciprocal eta-type quotient with an alternating
triangular-exponent sum:

  pair flavour:  overpartition_pair_series * (-1 + S_k + q^k S_k)
                 where S_k = alt_triangular_sum(k, HALF)
  odd flavour:   pod_bipartition_series * alt_triangular_sum(k, WHOLE)

Every coefficient observed so far is nonnegative; this script pushes the
truncation order well past what the test suite exercises and reports the
smallest coefficient seen for each k, so a counterexample (if one exists)
would be caught immediately.  Exits 1 on the first negative coefficient.
"""

from __future__ import annotations

import argparse
import sys

from qident import (
    HALF,
    WHOLE,
    add,
    alt_triangular_sum,
    monomial,
    mul,
    overpartition_pair_series,
    pod_bipartition_series,
    shift,
)


def pair_flavour(k: int, order: int):
    half = alt_triangular_sum(k, HALF, order)
    bracket = add(monomial(-1, 0, order), add(half, shift(half, k)))
    return mul(overpartition_pair_series(order), bracket)


def odd_flavour(k: int, order: int):
    return mul(pod_bipartition_series(order), alt_triangular_sum(k, WHOLE, order))


def scan(label: str, build, kmax: int, order: int) -> bool:
    print(f"{label}  (order {order})")
    print(f"  {'k':>3}  {'min coeff':>12}  {'at n':>6}  {'max coeff':>16}  first terms")
    clean = True
    for k in range(kmax + 1):
        series = build(k, order)
        coeffs = series.coeffs
        lo = min(coeffs)
        hi = max(coeffs)
        lead = " ".join(str(c) for c in coeffs[:8])
        print(f"  {k:>3}  {lo:>12}  {coeffs.index(lo):>6}  {hi:>16}  {lead} ...")
        if lo < 0:
            print(f"  !! negative coefficient for k={k}")
            clean = False
    return clean


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=8, help="largest shift index to scan")
    parser.add_argument("--order", type=int, default=120, help="truncation order")
    args = parser.parse_args(argv)
    if args.kmax < 0 or args.order < 0:
        parser.error("--kmax and --order must be nonnegative")

    ok = scan("pair flavour", pair_flavour, args.kmax, args.order)
    print()
    ok &= scan("odd flavour", odd_flavour, args.kmax, args.order)
    print()
    print("no negative coefficients found" if ok else "NEGATIVE COEFFICIENT FOUND")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
