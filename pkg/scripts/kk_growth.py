"""Syzygy dimensions of the simples of the truncated KK algebras.

The resolutions grow fast, so keep the cutoff small for n >= 2.

    python scripts/kk_growth.py --n 2 --cutoff 5
"""
import argparse

from asymcover.corpus import kk_algebra
from asymcover.homology import minimal_resolution
from asymcover.linalg import GF
from asymcover.representations import simple_modules


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--cutoff", type=int, default=4)
    ap.add_argument("--p", type=int, default=5)
    args = ap.parse_args()
    a = kk_algebra(args.n, GF(args.p))
    print(f"KK{args.n} over GF({args.p}): dim {a.dim}")
    for i, s in enumerate(simple_modules(a)):
        r = minimal_resolution(s, args.cutoff, detect_period=False)
        print(f"  S{i}: syzygy dims {r.syzygy_dims}  terms {r.term_dims()}  {r.verdict()}")


if __name__ == "__main__":
    main()
