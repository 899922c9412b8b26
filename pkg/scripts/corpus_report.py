"""Build the cover for every corpus algebra and print a one-line summary each.

    python scripts/corpus_report.py [--no-kk3] [--cutoff N]
"""
import argparse
import time

from asymcover.corpus import standard_corpus
from asymcover.cover import build_cover, verify_cover_socle, verify_findim_theorem, verify_radical_powers
from asymcover.homology import findim_zero_test


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--no-kk3", action="store_true")
    ap.add_argument("--cutoff", type=int, default=3)
    args = ap.parse_args()
    print(f"{'algebra':<16}{'dim':>5}{'cover':>7}  blocks        base0  coverop0  soc   pd    rad^n  top/socQ   secs")
    for entry in standard_corpus(include_lambda3=not args.no_kk3):
        t0 = time.perf_counter()
        c = build_cover(entry.algebra)
        soc = verify_cover_socle(c)
        cut = 2 if entry.name.startswith("KK3") else args.cutoff
        th = verify_findim_theorem(c, cutoff=cut)
        rp = verify_radical_powers(c, 4)
        base0 = findim_zero_test(entry.algebra).is_zero
        soc_ok = all(bool(v) for v in soc.values()) if isinstance(soc, dict) else bool(soc)
        dt = time.perf_counter() - t0
        print(f"{entry.name:<16}{entry.algebra.dim:>5}{c.tilde.dim:>7}  {str(c.blocks):<13} "
              f"{base0!s:<6} {th.cover_op_zero!s:<9} {soc_ok!s:<5} {th.ok!s:<5} "
              f"{rp.powers_ok!s:<6} {rp.top_dim}/{rp.soc_Q_dim:<7} {dt:6.2f}")


if __name__ == "__main__":
    main()
