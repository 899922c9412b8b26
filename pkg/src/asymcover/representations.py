"""Modules over structure-constant algebras.

Radicals, socles, tops, hom-spaces, simple modules, endomorphism algebras
and primitive idempotents.  The radical of an algebra is taken from
provenance when a construction recorded it; otherwise the trace form is
used, which is only valid over QQ or GF(p) with p > dim.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Sequence

import sympy

from .algebra import (
    Algebra, Module, ModuleMap, CheckResult, AlgebraError,
    module_axiom_witness, regular_module, is_two_sided_ideal, is_nilpotent_subspace,
    quotient_by_ideal,
)
from .linalg import Mat, Subspace, nullspace_of_sparse_rows, inverse, left_kernel, solve_left


class CapabilityError(RuntimeError):
    """The requested computation is not available for this field/algebra."""


@dataclass(frozen=True, eq=False)
class Submodule:
    module: Module
    inclusion: Mat  # rows = basis of the submodule in ambient coordinates
    subspace: Subspace

    @property
    def dim(self):
        return self.module.dim


@dataclass(frozen=True, eq=False)
class QuotientModule:
    module: Module
    projection: Mat  # ambient dim x quotient dim
    kernel: Subspace

    @property
    def dim(self):
        return self.module.dim


def verify_module(m: Module) -> CheckResult:
    w = module_axiom_witness(m.algebra, m.action, m.dim)
    if w:
        return CheckResult(False, f"module axiom fails: {w}", w)
    return CheckResult(True, "module axioms hold")


def verify_module_map(phi: ModuleMap) -> CheckResult:
    a = phi.source.algebra
    for i in range(a.dim):
        if phi.source.action[i] @ phi.matrix != phi.matrix @ phi.target.action[i]:
            return CheckResult(False, f"does not commute with basis vector {i}", i)
    return CheckResult(True, "module homomorphism")


# ---------------------------------------------------------------------------
# sub, quotient, sum, restriction


def submodule(m: Module, w: Subspace) -> Submodule:
    """Submodule on the subspace ``w`` (must be invariant)."""
    f = m.field
    acts = []
    for A in m.action:
        rows = []
        for b in w.basis:
            img = A.vecmul(b)
            rows.append(w.coordinates(img))
        acts.append(Mat(f, w.dim, w.dim, tuple(rows)))
    sub = Module(m.algebra, w.dim, tuple(acts))
    return Submodule(sub, w.matrix(), w)


def quotient_module(m: Module, w: Subspace) -> QuotientModule:
    f = m.field
    comp = w.complement_indices()

    def project(v):
        r = w.reduce(v)
        return tuple(r[c] for c in comp)

    acts = []
    for A in m.action:
        acts.append(Mat(f, len(comp), len(comp), tuple(project(A.rows[c]) for c in comp)))
    q = Module(m.algebra, len(comp), tuple(acts))
    proj = Mat(f, m.dim, len(comp), tuple(project(r) for r in Mat.identity(f, m.dim).rows))
    return QuotientModule(q, proj, w)


def direct_sum(mods: Sequence[Module]) -> Module:
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    a = mods[0].algebra
    f = a.field
    n = sum(x.dim for x in mods)
    acts = []
    for i in range(a.dim):
        rows = []
        off = 0
        for x in mods:
            for r in x.action[i].rows:
                row = [f.zero] * n
                row[off:off + x.dim] = r
                rows.append(tuple(row))
            off += x.dim
        acts.append(Mat(f, n, n, tuple(rows)))
    return Module(a, n, tuple(acts))


def zero_module(a: Algebra) -> Module:
    z = Mat.zero(a.field, 0, 0)
    return Module(a, 0, (z,) * a.dim)


def restrict(m: Module, b: Algebra, phi: Mat) -> Module:
    """Restriction of scalars along the algebra map ``phi: b -> m.algebra`` (rows = images)."""
    acts = tuple(m.act(phi.rows[i]) for i in range(b.dim))
    return Module(b, m.dim, acts)


def submodule_generated(m: Module, vectors) -> Subspace:
    """Smallest submodule containing ``vectors``."""
    f = m.field
    span = Subspace.span(f, m.dim, vectors)
    frontier = list(span.basis)
    while frontier:
        new = []
        for v in frontier:
            for A in m.action:
                w = A.vecmul(v)
                if not span.contains_vector(w):
                    span = span + Subspace.span(f, m.dim, [w])
                    new.append(w)
        frontier = new
    return span


# ---------------------------------------------------------------------------
# radical


def trace_form_radical(a: Algebra) -> Subspace:
    """``{x : tr(R_x R_y) = 0 for all y}``; equals rad a over QQ or GF(p), p > dim."""
    f = a.field
    n = a.dim
    p = f.characteristic
    # trace of right multiplication by b_k: sum_i c[i][k][i]
    tr = [f.zero] * n
    for k in range(n):
        t = f.zero
        for i in range(n):
            for kk, c in a.mult[i][k]:
                if kk == i:
                    t += c
        tr[k] = t % p if p else t
    # Gram rows: column j of G is the functional x -> tr(R_{x b_j})
    rows = []
    for j in range(n):
        row = {}
        for i in range(n):
            s = f.zero
            for k, c in a.mult[i][j]:
                s += c * tr[k]
            if p:
                s %= p
            if s:
                row[i] = s
        rows.append(row)
    return nullspace_of_sparse_rows(f, n, rows)


def radical_capable(a: Algebra) -> bool:
    p = a.field.characteristic
    return p == 0 or p > a.dim


def radical_of_algebra(a: Algebra) -> Subspace:
    """Jacobson radical: provenance first, then the trace form where valid."""
    if a.radical is not None:
        return a.radical
    cached = a._cache.get("radical")
    if cached is not None:
        return cached
    if not radical_capable(a):
        raise CapabilityError(
            f"radical of a {a.dim}-dim algebra over GF({a.field.characteristic}) needs provenance "
            "(trace form requires characteristic 0 or p > dim); supply a 'radical =' line or build "
            "the algebra from a presentation")
    j = trace_form_radical(a)
    while True:
        # the kernel is already the radical in this range; the loop guards the claim
        if is_two_sided_ideal(a, j) is None and is_nilpotent_subspace(a, j):
            break
        raise AlgebraError("trace-form kernel is not a nilpotent ideal")
    a._cache["radical"] = j
    return j


def verify_radical(a: Algebra, j: Subspace | None = None) -> CheckResult:
    """Is ``j`` (default: the provenance radical) a nilpotent ideal with semisimple quotient?"""
    j = j if j is not None else radical_of_algebra(a)
    w = is_two_sided_ideal(a, j)
    if w is not None:
        return CheckResult(False, "not a two-sided ideal", w)
    if not is_nilpotent_subspace(a, j):
        return CheckResult(False, "not nilpotent")
    if radical_capable(a):
        if trace_form_radical(a) != j:
            return CheckResult(False, "differs from the trace-form radical")
        return CheckResult(True, "nilpotent ideal, equals trace-form radical")
    return CheckResult(True, "nilpotent ideal (semisimplicity of the quotient not checkable here)")


def with_radical(a: Algebra) -> Algebra:
    """``a`` itself if it carries a radical, else a copy that does."""
    if a.radical is not None:
        return a
    return replace(a, radical=radical_of_algebra(a), tags=dict(a.tags), _cache={})


# ---------------------------------------------------------------------------
# radical / socle / top of modules


def radical_of_module(m: Module) -> Submodule:
    j = radical_of_algebra(m.algebra)
    vecs = []
    for x in j.basis:
        vecs.extend(m.act(x).rows)
    return submodule(m, Subspace.span(m.field, m.dim, vecs))


def socle_of_module(m: Module) -> Submodule:
    """Largest submodule annihilated by the radical."""
    j = radical_of_algebra(m.algebra)
    f = m.field
    # v in socle iff v @ act(r) = 0 for all radical basis r: left kernel of [act(r1) | act(r2) | ...]
    rows = []
    for x in j.basis:
        A = m.act(x)
        for c in range(m.dim):
            rows.append({r: A.rows[r][c] for r in range(m.dim) if A.rows[r][c]})
    w = nullspace_of_sparse_rows(f, m.dim, rows)
    return submodule(m, w)


def top_of_module(m: Module) -> QuotientModule:
    return quotient_module(m, radical_of_module(m).subspace)


# ---------------------------------------------------------------------------
# hom spaces


def algebra_generators(a: Algebra) -> tuple:
    """Basis indices whose vectors generate ``a`` as an algebra.

    Any set spanning ``a`` modulo ``rad(a)^2`` generates; without a radical
    every basis vector is used.
    """
    g = a._cache.get("generators")
    if g is not None:
        return g
    try:
        j = radical_of_algebra(a)
    except CapabilityError:
        j = None
    if j is None:
        g = tuple(range(a.dim))
    else:
        j2 = a.elementwise_products(j, j)
        span = j2
        chosen = []
        for i in range(a.dim):
            v = a.basis_vec(i)
            if not span.contains_vector(v):
                chosen.append(i)
                span = span + a.span([v])
            if span.dim == a.dim:
                break
        g = tuple(chosen)
    a._cache["generators"] = g
    return g


def hom_space(m: Module, n: Module) -> list[ModuleMap]:
    """Basis of Hom(m, n): matrices X (m.dim x n.dim) with act_m(g) X = X act_n(g)."""
    if m.algebra is not n.algebra and not m.algebra.same_tensor(n.algebra):
        raise AlgebraError("modules over different algebras")
    f = m.field
    p = f.characteristic
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    rows = []
    for g in algebra_generators(m.algebra):
        A = m.action[g].rows
        B = n.action[g].rows
        Bcols = [[(l, B[l][c]) for l in range(dn) if B[l][c]] for c in range(dn)]
        Arows = [[(k, x) for k, x in enumerate(A[r]) if x] for r in range(dm)]
        for r in range(dm):
            for c in range(dn):
                eq = {}
                for k, x in Arows[r]:
                    key = k * dn + c
                    eq[key] = eq.get(key, 0) + x
                for l, y in Bcols[c]:
                    key = r * dn + l
                    eq[key] = eq.get(key, 0) - y
                if p:
                    eq = {k: v % p for k, v in eq.items() if v % p}
                else:
                    eq = {k: v for k, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    ker = nullspace_of_sparse_rows(f, dm * dn, rows)
    out = []
    for v in ker.basis:
        mat = Mat(f, dm, dn, tuple(tuple(v[r * dn:(r + 1) * dn]) for r in range(dm)))
        out.append(ModuleMap(m, n, mat))
    return out


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


def dual_is_nonzero(m: Module) -> bool:
    """Is Hom(m, regular module) nonzero?"""
    return bool(hom_space(m, regular_module(m.algebra)))


def random_combination(maps: Sequence[ModuleMap], rng: random.Random) -> ModuleMap:
    f = maps[0].source.field
    acc = Mat.zero(f, maps[0].matrix.nrows, maps[0].matrix.ncols)
    for phi in maps:
        if f.characteristic:
            c = rng.randrange(f.characteristic)
        else:
            c = rng.randint(-7, 7)
        if c:
            acc = acc + phi.matrix.scale(c)
    return ModuleMap(maps[0].source, maps[0].target, acc)


def find_isomorphism(m: Module, n: Module, seed: int = 0, tries: int = 40):
    """Search for an invertible module map; ``None`` if none was found (not a proof)."""
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return ModuleMap(m, n, Mat.zero(m.field, 0, 0))
    homs = hom_space(m, n)
    if not homs:
        return None
    for phi in homs:
        if phi.matrix.rank() == m.dim:
            return phi
    rng = random.Random(seed)
    for _ in range(tries):
        phi = random_combination(homs, rng)
        if phi.matrix.rank() == m.dim:
            return phi
    return None


# ---------------------------------------------------------------------------
# endomorphism algebras


def endomorphism_algebra(m: Module, simple: bool = False) -> Algebra:
    """End(m) with product ``phi * psi = phi o psi``; unit is the identity map.

    With ``simple=True`` the module is known simple, so End(m) is a division
    algebra: radical 0, regular module simple, unit primitive.
    """
    f = m.field
    homs = hom_space(m, m)
    d = len(homs)
    flat = [tuple(x for r in h.matrix.rows for x in r) for h in homs]
    space = Subspace.span(f, m.dim * m.dim, flat)
    # hom_space returns the canonical basis, so it coincides with space.basis
    mats = [h.matrix for h in homs]
    products = {}
    for i in range(d):
        for j in range(d):
            comp = mats[j] @ mats[i]  # first phi_j, then phi_i
            products[(i, j)] = space.coordinates(tuple(x for r in comp.rows for x in r))
    ident = Mat.identity(f, m.dim)
    unit = space.coordinates(tuple(x for r in ident.rows for x in r))
    kw = {}
    if simple:
        kw = dict(radical=Subspace.zero(f, d), idempotents=(tuple(f(x) for x in unit),))
    e = Algebra.from_products(f, d, products, unit, basis_names=tuple(f"phi{i}" for i in range(d)),
                              origin="End", **kw)
    e.tags["hom_basis"] = tuple(mats)
    e.tags["module"] = m
    if simple:
        # the regular module of a division algebra is its only simple
        reg = regular_module(e)
        object.__setattr__(e, "simple_actions", (reg.action,))
    return e


def multiplicity(s: Module, x: Module, end_dim: int | None = None) -> int:
    """Multiplicity of the simple ``s`` in the semisimple module ``x``."""
    h = hom_dim(s, x)
    d = end_dim if end_dim is not None else hom_dim(s, s)
    if h % d:
        raise AlgebraError("hom dimension not divisible by dim End(S); is x semisimple?")
    return h // d


# ---------------------------------------------------------------------------
# simplicity and splitting


def _frobenius_fixed_dim(e: Algebra) -> int:
    p = e.field.characteristic
    rows = []
    for i in range(e.dim):
        x = e.basis_vec(i)
        y = _power(e, x, p)
        rows.append(e.sub(y, x))
    return e.dim - Mat(e.field, e.dim, e.dim, tuple(rows)).rank()


def _power(e: Algebra, x, k):
    result = tuple(e.unit)
    base = tuple(x)
    while k:
        if k & 1:
            result = e.mul(result, base)
        base = e.mul(base, base)
        k >>= 1
    return result


def _is_commutative(e: Algebra) -> bool:
    return all(e.mult[i][j] == e.mult[j][i] for i in range(e.dim) for j in range(i + 1, e.dim))


def is_division_algebra(e: Algebra) -> bool:
    """Division test for a semisimple algebra (e.g. End of a semisimple module)."""
    if e.dim == 1:
        return True
    if e.field.characteristic == 0:
        raise CapabilityError("division-algebra test over QQ beyond dimension 1 is not implemented")
    # finite division rings are fields; a commutative semisimple algebra over GF(p)
    # is a product of as many fields as the dimension of its Frobenius-fixed subspace
    return _is_commutative(e) and _frobenius_fixed_dim(e) == 1


def is_simple(m: Module) -> bool:
    """Exact: m != 0, m * rad = 0 and End(m) is a division algebra."""
    if m.dim == 0:
        return False
    if radical_of_module(m).dim:
        return False
    return is_division_algebra(endomorphism_algebra(m))


class SplittingError(RuntimeError):
    pass


def _min_poly(phi: Mat):
    """Minimal polynomial coefficients (low to high, monic) via Krylov on matrix powers."""
    f = phi.field
    n = phi.nrows
    powers = [Mat.identity(f, n)]
    flat = lambda M: tuple(x for r in M.rows for x in r)
    while True:
        nxt = powers[-1] @ phi
        basis = Mat(f, len(powers), n * n, tuple(flat(P) for P in powers))
        sol = solve_left(basis, Mat(f, 1, n * n, (flat(nxt),)))
        if sol is not None:
            p = f.characteristic
            coeffs = [(-c) % p if p else -c for c in sol.rows[0]] + [f.one]
            return coeffs
        powers.append(nxt)


def _poly_at(phi: Mat, coeffs) -> Mat:
    f = phi.field
    n = phi.nrows
    acc = Mat.zero(f, n, n)
    for c in reversed(coeffs):
        acc = acc @ phi + Mat.identity(f, n).scale(c)
    return acc


def _factor(coeffs, f):
    """Irreducible factors with multiplicity of a polynomial over ``f`` (low-to-high coefficients)."""
    x = sympy.Symbol("x")
    p = f.characteristic
    if p:
        poly = sympy.Poly(list(reversed([int(c) for c in coeffs])), x, modulus=p)
    else:
        poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])),
                          x, domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for q, k in facs:
        cs = [f(int(c)) if p else f(str(c)) for c in reversed(q.all_coeffs())]
        out.append((cs, k))
    return out


def _poly_pow(coeffs, k, p):
    res = [1]
    for _ in range(k):
        new = [0] * (len(res) + len(coeffs) - 1)
        for i, a in enumerate(res):
            for j, b in enumerate(coeffs):
                new[i + j] = new[i + j] + a * b
        res = [c % p for c in new] if p else new
    return res


def decompose_semisimple(m: Module, seed: int = 0, budget: int = 60) -> list[Subspace]:
    """Inner direct-sum decomposition of a semisimple module into simple submodules.

    Las Vegas: primary decomposition of random endomorphisms splits off
    invariant pieces; every final piece is certified simple.  Over QQ only
    pieces with End = QQ are certified; a piece whose endomorphisms never
    split is reported as a capability error.
    """
    f = m.field
    if radical_of_module(m).dim:
        raise AlgebraError("module is not annihilated by the radical")
    rng = random.Random(seed)
    p = f.characteristic

    def split(w: Subspace) -> list[Subspace]:
        sub = submodule(m, w).module
        homs = hom_space(sub, sub)
        if len(homs) == 1:
            return [w]
        if p and is_division_algebra(endomorphism_algebra(sub)):
            return [w]
        for _ in range(budget):
            phi = random_combination(homs, rng).matrix
            mp = _min_poly(phi)
            facs = _factor(mp, f)
            if len(facs) < 2:
                continue
            pieces = []
            for q, k in facs:
                K = _poly_at(phi, _poly_pow(q, k, p))
                ker = left_kernel(K)
                # back to ambient coordinates of m
                pieces.append(Subspace.span(f, m.dim, (_lift(v, w) for v in ker.basis)))
            out = []
            for piece in pieces:
                out.extend(split(piece))
            return out
        if not p:
            raise CapabilityError("piece with End of dimension > 1 over QQ (non-split simple?)")
        raise SplittingError(f"splitting budget exhausted (seed={seed})")

    return split(Subspace.full(f, m.dim))


def _lift(coords, w: Subspace):
    f = w.field
    p = f.characteristic
    acc = [f.zero] * w.ambient_dim
    for c, b in zip(coords, w.basis):
        if c:
            for i, x in enumerate(b):
                if x:
                    acc[i] += c * x
    return tuple(a % p for a in acc) if p else tuple(acc)


def split_semisimple(m: Module, seed: int = 0) -> list[Module]:
    """Simple constituents (as submodules) of a semisimple module."""
    pieces = decompose_semisimple(m, seed)
    mods = [submodule(m, w).module for w in pieces]
    for x in mods:
        if not is_simple(x):
            raise SplittingError("a split piece failed the simplicity check")
    return mods


# ---------------------------------------------------------------------------
# simple modules


def _first_appearance(s: Module) -> int:
    for i, A in enumerate(s.action):
        if not A.is_zero():
            return i
    return s.algebra.dim


def simple_modules(a: Algebra, seed: int = 0) -> list[Module]:
    """Complete list of pairwise non-isomorphic simples, certified against top of A_A."""
    cached = a._cache.get("simples")
    if cached is not None:
        return cached
    f = a.field
    if a.simple_actions is not None:
        simples = [Module(a, acts[0].nrows if acts else 0, tuple(acts), name=f"S{i}")
                   for i, acts in enumerate(a.simple_actions)]
    else:
        top = top_of_module(regular_module(a)).module
        pieces = split_semisimple(top, seed)
        simples = []
        for s in pieces:
            if not any(hom_dim(s, t) for t in simples):
                simples.append(s)
        simples.sort(key=_first_appearance)
        simples = [Module(a, s.dim, s.action, name=f"S{i}") for i, s in enumerate(simples)]
    certify_simples(a, simples)
    a._cache["simples"] = simples
    return simples


def certify_simples(a: Algebra, simples: Sequence[Module]) -> None:
    """Raise unless the list is simple, pairwise non-isomorphic and complete."""
    for s in simples:
        r = verify_module(s)
        if not r:
            raise AlgebraError(f"simple {s.name}: {r.detail}")
        if not is_simple(s):
            raise AlgebraError(f"module {s.name} is not simple")
    for i, s in enumerate(simples):
        for t in simples[i + 1:]:
            if hom_dim(s, t):
                raise AlgebraError(f"simples {s.name} and {t.name} are isomorphic")
    top = top_of_module(regular_module(a)).module
    total = 0
    for s in simples:
        total += multiplicity(s, top) * s.dim
    if total != top.dim:
        raise AlgebraError(f"simple list incomplete: constituents give dim {total}, top has {top.dim}")


# ---------------------------------------------------------------------------
# idempotents


def _newton_idempotent(a: Algebra, x):
    """Iterate ``x <- 3x^2 - 2x^3`` until idempotent."""
    for _ in range(64):
        x2 = a.mul(x, x)
        if x2 == tuple(x):
            return tuple(x)
        x3 = a.mul(x2, x)
        x = a.sub(a.smul(3, x2), a.smul(2, x3))
    raise AlgebraError("idempotent lifting did not converge")


def check_idempotent_system(a: Algebra, idem) -> CheckResult:
    for i, e in enumerate(idem):
        if not a.is_idempotent(e):
            return CheckResult(False, f"element {i} is not idempotent", i)
        for j, g in enumerate(idem):
            if i != j and any(a.mul(e, g)):
                return CheckResult(False, f"elements {i}, {j} are not orthogonal", (i, j))
    total = a.zero_vec()
    for e in idem:
        total = a.add(total, e)
    if total != tuple(a.unit):
        return CheckResult(False, "idempotents do not sum to 1")
    return CheckResult(True, "complete orthogonal idempotents")


def principal_module(a: Algebra, e) -> Submodule:
    """The right ideal ``e a`` as a submodule of the regular module."""
    w = a.span(a.mul(e, a.basis_vec(j)) for j in range(a.dim))
    return submodule(regular_module(a), w)


def is_primitive(a: Algebra, e) -> bool:
    top = top_of_module(principal_module(a, e).module).module
    if top.dim == 0:
        return False
    count = sum(multiplicity(s, top) for s in simple_modules(a))
    return count == 1


def primitive_idempotents(a: Algebra, seed: int = 0) -> list[tuple]:
    """Complete system of orthogonal primitive idempotents (coordinate tuples)."""
    cached = a._cache.get("idempotents")
    if cached is not None:
        return cached
    if a.idempotents is not None:
        idem = [tuple(e) for e in a.idempotents]
    else:
        f = a.field
        j = radical_of_algebra(a)
        b, proj = quotient_by_ideal(a, j)
        reg = regular_module(b)
        pieces = decompose_semisimple(reg, seed)
        # write 1 = sum of components in the pieces
        basis = [v for w in pieces for v in w.basis]
        coords = solve_left(Mat(f, len(basis), b.dim, tuple(basis)), Mat(f, 1, b.dim, (tuple(b.unit),)))
        comps = []
        k = 0
        for w in pieces:
            c = coords.rows[0][k:k + w.dim]
            k += w.dim
            comps.append(_lift(c, w))
        comp_idx = j.complement_indices()

        def preimage(y):
            v = [f.zero] * a.dim
            for s, c in enumerate(y):
                v[comp_idx[s]] = c
            return tuple(v)

        idem = []
        F = a.zero_vec()
        one = tuple(a.unit)
        for y in comps[:-1]:
            z = preimage(y)
            c = a.sub(one, F)
            z = a.mul(a.mul(c, z), c)
            e = _newton_idempotent(a, z)
            idem.append(e)
            F = a.add(F, e)
        idem.append(a.sub(one, F))
    r = check_idempotent_system(a, idem)
    if not r:
        raise AlgebraError(f"idempotent system invalid: {r.detail}")
    a._cache["idempotents"] = idem
    return idem


def idempotent_simple_index(a: Algebra) -> list[int]:
    """For each primitive idempotent e, the index of the unique simple S with S e != 0."""
    simples = simple_modules(a)
    out = []
    for e in primitive_idempotents(a):
        hits = [i for i, s in enumerate(simples) if not s.act(e).is_zero()]
        if len(hits) != 1:
            raise AlgebraError("idempotent is not primitive (matches %d simples)" % len(hits))
        out.append(hits[0])
    return out


def module_inverse(phi: ModuleMap) -> ModuleMap:
    inv = inverse(phi.matrix)
    if inv is None:
        raise AlgebraError("map is not invertible")
    return ModuleMap(phi.target, phi.source, inv)
