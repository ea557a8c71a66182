"""Print a growth table for one chain-family series.

For the chosen family/sign/k/m the script tabulates the coefficient of q^n
together with the ratio to the previous nonzero coefficient, which makes the
asymptotic growth (and the sign pattern of the minus series) easy to eyeball:

    python3 scripts/coefficient_growth.py --family V --sign plus --k 3 --order 40
    python3 scripts/coefficient_growth.py --family C --k 1 --m inf --order 60
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from qident import INFINITE, FamilySpec, family_series


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", choices=("V", "W", "A", "C"), required=True)
    parser.add_argument("--sign", choices=("plus", "minus"), default="plus")
    parser.add_argument("--k", type=int, required=True, help="number of chain links")
    parser.add_argument("--m", default="inf",
                        help="largest part bound, or 'inf' for unbounded")
    parser.add_argument("--order", type=int, default=40, help="truncation order")
    args = parser.parse_args(argv)

    m = INFINITE if args.m == "inf" else int(args.m)
    spec = FamilySpec(family=args.family, sign=1 if args.sign == "plus" else -1,
                      k=args.k, m=m)
    series = family_series(spec, args.order)

    m_text = "inf" if m is INFINITE else str(m)
    print(f"family={args.family} sign={args.sign} k={args.k} m={m_text} order={args.order}")
    print(f"{'n':>5}  {'coefficient':>24}  {'ratio':>10}")
    previous = None
    for n, c in enumerate(series.coeffs):
        if c == 0:
            continue
        if previous:
            ratio = f"{float(Fraction(c, previous)):>10.4f}"
        else:
            ratio = f"{'-':>10}"
        print(f"{n:>5}  {c:>24}  {ratio}")
        previous = c
    return 0


if __name__ == "__main__":
    sys.exit(main())
