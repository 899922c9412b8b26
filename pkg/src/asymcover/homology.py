"""Projective covers, minimal resolutions and the finitistic-dimension-zero test."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, Module, ModuleMap, CheckResult, AlgebraError, regular_module, opposite
from .linalg import Mat, Subspace, left_kernel
from .representations import (
    submodule, direct_sum, zero_module, radical_of_module, socle_of_module, top_of_module,
    hom_space, simple_modules, multiplicity, primitive_idempotents, idempotent_simple_index,
    principal_module, find_isomorphism, algebra_generators,
)


@dataclass(frozen=True, eq=False)
class Projective:
    """A direct sum of principal projectives ``e_i A``, one summand per entry of ``summands``."""
    module: Module
    summands: tuple  # simple indices, in block order


@dataclass(frozen=True, eq=False)
class ProjectiveCover:
    projective: Projective
    surjection: ModuleMap  # rows: basis of the projective, columns: target coordinates
    generators: tuple  # generator vectors of the target, one per summand


def principal_projectives(a: Algebra) -> list[tuple]:
    """``(e_i, P_i)`` for each simple ``S_i`` (indexed like ``simple_modules``), P_i = e_i A."""
    cached = a._cache.get("principal")
    if cached is not None:
        return cached
    simples = simple_modules(a)
    idem = primitive_idempotents(a)
    which = idempotent_simple_index(a)
    out = [None] * len(simples)
    for e, i in zip(idem, which):
        if out[i] is None:
            sub = principal_module(a, e)
            out[i] = (e, sub)
    if any(x is None for x in out):
        raise AlgebraError("some simple has no primitive idempotent")
    a._cache["principal"] = out
    return out


def _cyclic(m: Module, v) -> Subspace:
    return Subspace.span(m.field, m.dim, (m.apply(v, m.algebra.basis_vec(j)) for j in range(m.algebra.dim)))


def projective_cover(m: Module) -> ProjectiveCover:
    """Minimal projective cover: one principal summand per simple constituent of top m."""
    a = m.algebra
    f = m.field
    prin = principal_projectives(a)
    covered = radical_of_module(m).subspace
    gens = []
    images = [Subspace.span(f, m.dim, m.act(e).rows).basis for e, _ in prin]
    while covered.dim < m.dim:
        progress = False
        for i, img in enumerate(images):
            for v in img:
                if not covered.contains_vector(v):
                    gens.append((i, v))
                    covered = covered + _cyclic(m, v)
                    progress = True
                    break
            if covered.dim == m.dim:
                break
        if not progress:
            raise AlgebraError("projective cover did not exhaust the module")
    mods, rows, summands = [], [], []
    for i, v in gens:
        e, sub = prin[i]
        mods.append(sub.module)
        summands.append(i)
        for x in sub.subspace.basis:
            rows.append(m.apply(v, x))
    if mods:
        P = direct_sum(mods)
    else:
        P = zero_module(a)
    surj = Mat(f, P.dim, m.dim, tuple(rows))
    proj = Projective(P, tuple(summands))
    return ProjectiveCover(proj, ModuleMap(P, m, surj), tuple(v for _, v in gens))


def syzygy_with_inclusion(m: Module):
    cov = projective_cover(m)
    ker = left_kernel(cov.surjection.matrix)
    sub = submodule(cov.projective.module, ker)
    return cov, sub


def syzygy(m: Module) -> Module:
    return syzygy_with_inclusion(m)[1].module


# ---------------------------------------------------------------------------
# resolutions


@dataclass(frozen=True)
class Finite:
    d: int

    def __str__(self):
        return f"Finite({self.d})"


@dataclass(frozen=True)
class AtLeast:
    d: int

    def __str__(self):
        return f"AtLeast({self.d})"


@dataclass(eq=False)
class Resolution:
    """``... -> P_1 -> P_0 -> M -> 0``; ``differentials[0]`` is the augmentation P_0 -> M."""
    module: Module
    terms: list
    differentials: list
    exact: bool  # True: the last syzygy vanished, length = len(terms) - 1
    cutoff: int
    syzygy_dims: list = dc_field(default_factory=list)
    periodic: tuple | None = None  # (i, j) with Omega^i iso Omega^j, i < j

    @property
    def length(self):
        return len(self.terms) - 1

    @property
    def status(self):
        return "exact" if self.exact else "truncated"

    def verdict(self):
        return Finite(max(self.length, 0)) if self.exact else AtLeast(self.cutoff + 1)

    def term_dims(self):
        return [t.module.dim for t in self.terms]

    def note(self):
        if self.periodic:
            i, j = self.periodic
            return f"syzygies {i} and {j} are isomorphic: periodic, hence infinite"
        return ""


PERIOD_DIM_LIMIT = 24


def minimal_resolution(m: Module, cutoff: int = 5, detect_period: bool = True) -> Resolution:
    """Minimal projective resolution up to ``P_cutoff``.

    Consecutive syzygies of dimension at most ``PERIOD_DIM_LIMIT`` are
    compared for isomorphism; a hit only adds a note, the verdict stays
    ``AtLeast``.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    terms, diffs = [], []
    syz = [m]
    syz_dims = [m.dim]
    current = m
    prev_incl = None
    exact = False
    period = None
    while True:
        if current.dim == 0:
            exact = True
            break
        if len(terms) > cutoff:
            break
        cov = projective_cover(current)
        ker = left_kernel(cov.surjection.matrix)
        terms.append(cov.projective)
        d = cov.surjection.matrix
        if prev_incl is not None:
            d = d @ prev_incl
        diffs.append(ModuleMap(cov.projective.module, terms[-2].module if len(terms) > 1 else m, d))
        if len(terms) > cutoff:
            # only the size of the last syzygy matters; skip building its action
            syz_dims.append(ker.dim)
            exact = ker.dim == 0
            break
        sub = submodule(cov.projective.module, ker)
        prev_incl = sub.inclusion
        current = sub.module
        syz.append(current)
        syz_dims.append(current.dim)
        if detect_period and period is None and 0 < current.dim <= PERIOD_DIM_LIMIT:
            for i in range(1, len(syz) - 1):
                if syz[i].dim == current.dim and find_isomorphism(syz[i], current) is not None:
                    period = (i, len(syz) - 1)
                    break
    if not terms and m.dim == 0:
        exact = True
    return Resolution(m, terms, diffs, exact, cutoff, syz_dims, period)


def verify_resolution(res: Resolution) -> CheckResult:
    """Re-check exactness, minimality and (when exact) the Euler characteristic."""
    m = res.module
    if not res.terms:
        if m.dim:
            return CheckResult(False, "empty resolution of a nonzero module")
        return CheckResult(True, "zero module")
    ranks = [d.matrix.rank() for d in res.differentials]
    if ranks[0] != m.dim:
        return CheckResult(False, "augmentation is not surjective", 0)
    for i, d in enumerate(res.differentials):
        src = res.terms[i].module
        tgt = m if i == 0 else res.terms[i - 1].module
        # commuting with a generating set suffices
        for g in algebra_generators(m.algebra):
            if src.action[g] @ d.matrix != d.matrix @ tgt.action[g]:
                return CheckResult(False, f"differential {i} is not a module map", (i, g))
        if i > 0:
            prev = res.differentials[i - 1].matrix
            if not (d.matrix @ prev).is_zero():
                return CheckResult(False, f"d{i} d{i - 1} != 0", i)
            # minimality: image inside the radical of the target
            rad = radical_of_module(tgt).subspace
            for row in d.matrix.rows:
                if not rad.contains_vector(row):
                    return CheckResult(False, f"image of d{i} leaves the radical", i)
    # exactness at P_i: rank d_{i+1} + rank d_i = dim P_i
    for i, t in enumerate(res.terms):
        nxt = ranks[i + 1] if i + 1 < len(ranks) else None
        if nxt is None:
            if res.exact and ranks[i] != t.module.dim:
                return CheckResult(False, f"last map not injective at P_{i}", i)
            continue
        if nxt + ranks[i] != t.module.dim:
            return CheckResult(False, f"not exact at P_{i}", i)
    if res.exact:
        euler = sum((-1) ** i * t.module.dim for i, t in enumerate(res.terms))
        if euler != m.dim:
            return CheckResult(False, f"Euler characteristic {euler} != {m.dim}")
    return CheckResult(True, "exact, minimal" + (", Euler characteristic matches" if res.exact else ""))


def proj_dim_up_to(m: Module, cutoff: int = 5):
    return minimal_resolution(m, cutoff).verdict()


# ---------------------------------------------------------------------------
# finitistic dimension zero


@dataclass(eq=False)
class FindimVerdict:
    algebra: Algebra
    is_zero: bool
    embeddings: list  # per simple of the opposite algebra: injective map into the regular module, or None
    failing_simple: int | None = None

    @property
    def big_findim_note(self):
        return big_findim_flag(self.algebra, self)


def findim_zero_test(a: Algebra) -> FindimVerdict:
    """fin.dim a = 0 iff every simple module over the opposite algebra has nonzero dual."""
    ao = opposite(a)
    reg = regular_module(ao)
    embeds = []
    failing = None
    for i, s in enumerate(simple_modules(ao)):
        hom = hom_space(s, reg)
        w = next((h for h in hom if h.is_injective()), None)
        embeds.append(w)
        if w is None and failing is None:
            failing = i
    return FindimVerdict(a, failing is None, embeds, failing)


def findim_zero_by_socle(a: Algebra) -> bool:
    """Same verdict read off the socle of the regular module of the opposite algebra."""
    ao = opposite(a)
    soc = socle_of_module(regular_module(ao)).module
    return all(multiplicity(s, soc) > 0 for s in simple_modules(ao))


def verify_findim_verdict(v: FindimVerdict) -> CheckResult:
    ao = opposite(v.algebra)
    reg = regular_module(ao)
    simples = simple_modules(ao)
    for i, (s, w) in enumerate(zip(simples, v.embeddings)):
        if w is None:
            if hom_space(s, reg):
                return CheckResult(False, f"simple {i} does embed but no witness was stored", i)
            continue
        if w.matrix.rank() != s.dim or w.source.dim != s.dim:
            return CheckResult(False, f"witness for simple {i} is not injective", i)
        for g in range(ao.dim):
            if s.action[g] @ w.matrix != w.matrix @ reg.action[g]:
                return CheckResult(False, f"witness for simple {i} is not a module map", i)
    return CheckResult(True, "witnesses re-verified")


BIG_ZERO = "Fin.dim = 0 (perfect + small findim 0)"
BIG_POSITIVE = "Fin.dim > 0"


def big_findim_flag(a: Algebra, v: FindimVerdict) -> str:
    """Finite-dimensional algebras are perfect on both sides, so Fin.dim = 0 iff fin.dim = 0."""
    return BIG_ZERO if v.is_zero else BIG_POSITIVE
