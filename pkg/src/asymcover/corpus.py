"""Standard small algebras used by tests, scripts and the CLI."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, direct_product
from .linalg import Field, GF, QQ, Mat, Subspace
from .presentation import compile_presentation, kk_presentation, linear_quiver


def field_algebra(f: Field) -> Algebra:
    one = Mat.identity(f, 1)
    return Algebra.from_products(f, 1, {(0, 0): {0: 1}}, (1,), basis_names=("1",),
                                 radical=Subspace.zero(f, 1), simple_actions=((one,),),
                                 idempotents=((f.one,),), origin=str(f))


def matrix_algebra(f: Field, n: int = 2) -> Algebra:
    """Full matrix algebra M_n on the matrix units E_ij (index i*n + j)."""
    products = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                products[(i * n + j, j * n + l)] = {i * n + l: 1}
    unit = [0] * (n * n)
    for i in range(n):
        unit[i * n + i] = 1
    names = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    return Algebra.from_products(f, n * n, products, unit, basis_names=names,
                                 radical=Subspace.zero(f, n * n), origin=f"M{n}({f})")


def gf4_over_gf2() -> Algebra:
    """GF(4) as a 2-dim GF(2)-algebra on 1, w with w^2 = w + 1."""
    f = GF(2)
    products = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1, 1: 1}}
    return Algebra.from_products(f, 2, products, (1, 0), basis_names=("1", "w"),
                                 radical=Subspace.zero(f, 2), origin="GF(4)/GF(2)")


def truncated_polynomial(f: Field, n: int) -> Algebra:
    """k[x]/(x^n) on 1, x, ..., x^(n-1)."""
    products = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    unit = [1] + [0] * (n - 1)
    names = ("1",) + tuple("x" if i == 1 else f"x^{i}" for i in range(1, n))
    simple = tuple(Mat.identity(f, 1) if i == 0 else Mat.zero(f, 1, 1) for i in range(n))
    return Algebra.from_products(f, n, products, unit, basis_names=names,
                                 radical=Subspace.coordinate(f, n, range(1, n)),
                                 simple_actions=(simple,), idempotents=(tuple(f(u) for u in unit),),
                                 origin=f"{f}[x]/(x^{n})")


def path_algebra_An(n: int, f: Field) -> Algebra:
    return compile_presentation(linear_quiver(n, f)).algebra


def kk_algebra(n: int, f: Field) -> Algebra:
    return compile_presentation(kk_presentation(n, f)).algebra


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    algebra: Algebra
    semisimple: bool = False
    basic: bool = True


def semisimple_corpus() -> list[CorpusEntry]:
    f5 = GF(5)
    return [
        CorpusEntry("GF(5)", field_algebra(f5), True),
        CorpusEntry("GF(5)xGF(5)", direct_product([field_algebra(f5), field_algebra(f5)]), True),
        CorpusEntry("M2(GF(5))", matrix_algebra(f5, 2), True, basic=False),
        CorpusEntry("GF(4)/GF(2)", gf4_over_gf2(), True),
        CorpusEntry("QQ", field_algebra(QQ), True),
    ]


def standard_corpus(include_lambda3: bool = True) -> list[CorpusEntry]:
    """Semisimple examples plus local, hereditary and KK algebras."""
    f5 = GF(5)
    out = semisimple_corpus()
    out += [
        CorpusEntry("GF(5)[x]/(x^2)", truncated_polynomial(f5, 2)),
        CorpusEntry("GF(5)[x]/(x^3)", truncated_polynomial(f5, 3)),
        CorpusEntry("QQ[x]/(x^2)", truncated_polynomial(QQ, 2)),
        CorpusEntry("A2/GF(5)", path_algebra_An(2, f5)),
        CorpusEntry("A3/GF(5)", path_algebra_An(3, f5)),
        CorpusEntry("A2/QQ", path_algebra_An(2, QQ)),
        CorpusEntry("KK1/GF(5)", kk_algebra(1, f5)),
        CorpusEntry("KK2/GF(5)", kk_algebra(2, f5)),
        CorpusEntry("KK1/QQ", kk_algebra(1, QQ)),
    ]
    if include_lambda3:
        out.append(CorpusEntry("KK3/GF(5)", kk_algebra(3, f5)))
    return out
