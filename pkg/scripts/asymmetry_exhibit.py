"""The smallest asymmetry example: A2 has fin.dim 1, the opposite of its cover has fin.dim 0.

    python scripts/asymmetry_exhibit.py
"""
from asymcover.corpus import path_algebra_An
from asymcover.cover import build_cover, pushforward_module, standard_test_modules
from asymcover.homology import findim_zero_test, minimal_resolution
from asymcover.linalg import GF
from asymcover.algebra import opposite


def main():
    a = path_algebra_An(2, GF(5))
    c = build_cover(a)
    print(f"A2: dim {a.dim}, cover dim {c.tilde.dim}, blocks {c.blocks}")
    print(f"fin.dim A2 = 0?          {findim_zero_test(a).is_zero}")
    print(f"fin.dim cover^op = 0?    {findim_zero_test(opposite(c.tilde)).is_zero}")
    for m in standard_test_modules(a):
        base = minimal_resolution(m, 4).verdict()
        pushed = minimal_resolution(pushforward_module(c, m), 4).verdict()
        print(f"  pd {m.name:<10} base {base!s:<10} cover {pushed}")


if __name__ == "__main__":
    main()
