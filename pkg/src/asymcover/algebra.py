"""Structure-constant algebras, modules and the ring constructions.

An algebra of dimension n over a field k is stored by its structure
constants: ``mult[i][j]`` is a tuple of ``(k, c)`` pairs meaning
``b_i * b_j = sum c * b_k``.  Modules are right modules in row-vector form,
``m -> m @ action[i]`` for the basis vector ``b_i``; a left module over B is
a right module over B^op, so a left action matrix satisfies
``L[y*y'] = L[y'] @ L[y]``.

Composite bases always come in the order: first factor / A-block, then the
second copy or bimodule strip, then the B-block.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .linalg import Field, Mat, Subspace, DimensionError, solve


class AlgebraError(ValueError):
    """A construction precondition failed; ``witness`` locates the failure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    detail: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Algebra:
    field: Field
    dim: int
    mult: tuple
    unit: tuple
    basis_names: tuple = ()
    radical: Subspace | None = None
    # each simple is stored as its tuple of action matrices (one per basis vector)
    simple_actions: tuple | None = None
    idempotents: tuple | None = None
    origin: str = ""
    tags: dict = dc_field(default_factory=dict, compare=False, repr=False)
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"b{i}" for i in range(self.dim)))
        if len(self.unit) != self.dim or len(self.mult) != self.dim:
            raise DimensionError("unit / structure tensor size does not match dim")

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field}, origin={self.origin!r})"

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_products(cls, field: Field, dim: int, products, unit, **kw) -> "Algebra":
        """Build from ``products[(i, j)] = {k: c}`` (or a coordinate sequence); missing pairs are 0."""
        mult = [[() for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            if isinstance(v, dict):
                items = v.items()
            else:
                items = enumerate(v)
            mult[i][j] = tuple(sorted((k, field(c)) for k, c in items if field(c)))
        unit = tuple(field(x) for x in unit)
        return cls(field, dim, tuple(tuple(r) for r in mult), unit, **kw)

    @classmethod
    def from_tensor(cls, field: Field, tensor, unit, **kw) -> "Algebra":
        """Build from a dense ``tensor[i][j][k]``."""
        n = len(tensor)
        products = {(i, j): tensor[i][j] for i in range(n) for j in range(n)}
        return cls.from_products(field, n, products, unit, **kw)

    def dense_tensor(self) -> tuple:
        z = self.field.zero
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                v = [z] * self.dim
                for k, c in self.mult[i][j]:
                    v[k] = c
                row.append(tuple(v))
            out.append(tuple(row))
        return tuple(out)

    def same_tensor(self, other: "Algebra") -> bool:
        return (self.field == other.field and self.dim == other.dim
                and self.mult == other.mult and self.unit == other.unit)

    # -- arithmetic on coordinate tuples -------------------------------------

    def basis_vec(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if j == i else z for j in range(self.dim))

    def zero_vec(self) -> tuple:
        return (self.field.zero,) * self.dim

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        p = self.field.characteristic
        acc = [self.field.zero] * self.dim
        ynz = [(j, b) for j, b in enumerate(y) if b]
        mult = self.mult
        for i, a in enumerate(x):
            if not a:
                continue
            mi = mult[i]
            for j, b in ynz:
                ab = a * b
                for k, c in mi[j]:
                    acc[k] += ab * c
        if p:
            return tuple(v % p for v in acc)
        return tuple(acc)

    def add(self, x, y) -> tuple:
        p = self.field.characteristic
        return tuple(((a + b) % p if p else a + b) for a, b in zip(x, y))

    def sub(self, x, y) -> tuple:
        p = self.field.characteristic
        return tuple(((a - b) % p if p else a - b) for a, b in zip(x, y))

    def smul(self, c, x) -> tuple:
        c = self.field(c)
        p = self.field.characteristic
        return tuple(((c * a) % p if p else c * a) for a in x)

    def right_matrix(self, y: Sequence) -> Mat:
        """Matrix of ``x -> x*y`` in row-vector form."""
        return Mat(self.field, self.dim, self.dim,
                   tuple(self._basis_times(i, y) for i in range(self.dim)))

    def left_matrix(self, x: Sequence) -> Mat:
        """Matrix of ``y -> x*y`` in row-vector form."""
        return Mat(self.field, self.dim, self.dim,
                   tuple(self.mul(x, self.basis_vec(j)) for j in range(self.dim)))

    def _basis_times(self, i, y):
        p = self.field.characteristic
        acc = [self.field.zero] * self.dim
        mi = self.mult[i]
        for j, b in enumerate(y):
            if b:
                for k, c in mi[j]:
                    acc[k] += b * c
        return tuple(v % p for v in acc) if p else tuple(acc)

    def element(self, coords) -> "Element":
        return Element(self, tuple(self.field(c) for c in coords))

    def one(self) -> "Element":
        return Element(self, self.unit)

    def basis(self) -> list["Element"]:
        return [Element(self, self.basis_vec(i)) for i in range(self.dim)]

    def is_idempotent(self, x) -> bool:
        return self.mul(x, x) == tuple(x)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def elementwise_products(self, u: Subspace, v: Subspace) -> Subspace:
        """Span of ``x*y`` for x in u, y in v."""
        return self.span(self.mul(x, y) for x in u.basis for y in v.basis)


class Element:
    """An algebra element; a thin wrapper over a coordinate tuple."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        if len(coords) != algebra.dim:
            raise DimensionError("coordinate vector has the wrong length")
        self.algebra = algebra
        self.coords = tuple(coords)

    def _same(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraError("elements of different algebras")

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return Element(self.algebra, self.algebra.smul(other, self.coords))

    __rmul__ = lambda self, c: Element(self.algebra, self.algebra.smul(c, self.coords))

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, self.algebra.add(self.coords, other.coords))

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, self.algebra.sub(self.coords, other.coords))

    def __neg__(self):
        return Element(self.algebra, self.algebra.smul(-1, self.coords))

    def __eq__(self, other):
        return (isinstance(other, Element) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __repr__(self):
        f = self.algebra.field
        terms = [f"{f.fmt(c)}*{n}" for c, n in zip(self.coords, self.algebra.basis_names) if c]
        return " + ".join(terms) if terms else "0"


def multiply(x: Element, y: Element) -> Element:
    if x.algebra is not y.algebra:
        raise AlgebraError("elements of different algebras")
    return Element(x.algebra, x.algebra.mul(x.coords, y.coords))


# ---------------------------------------------------------------------------
# modules (data only; computations live in representations)


@dataclass(frozen=True, eq=False)
class Module:
    """Right module: ``action[i]`` is the matrix of the basis vector ``b_i``."""

    algebra: Algebra
    dim: int
    action: tuple
    name: str = ""
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __repr__(self):
        return f"Module(dim={self.dim}, over {self.algebra!r}{', ' + self.name if self.name else ''})"

    @property
    def field(self) -> Field:
        return self.algebra.field

    def act(self, x: Sequence) -> Mat:
        """Matrix of the algebra element with coordinates ``x``."""
        f = self.field
        p = f.characteristic
        acc = [[f.zero] * self.dim for _ in range(self.dim)]
        for i, c in enumerate(x):
            if not c:
                continue
            for r, row in enumerate(self.action[i].rows):
                ar = acc[r]
                for s, v in enumerate(row):
                    if v:
                        ar[s] += c * v
        if p:
            acc = [[v % p for v in r] for r in acc]
        return Mat(f, self.dim, self.dim, tuple(tuple(r) for r in acc))

    def apply(self, v: Sequence, x: Sequence) -> tuple:
        """``v * x`` for a module vector v and algebra coordinates x."""
        f = self.field
        p = f.characteristic
        acc = [f.zero] * self.dim
        for i, c in enumerate(x):
            if not c:
                continue
            rows = self.action[i].rows
            for r, a in enumerate(v):
                if not a:
                    continue
                ca = c * a
                for s, y in enumerate(rows[r]):
                    if y:
                        acc[s] += ca * y
        return tuple(t % p for t in acc) if p else tuple(acc)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Module
    target: Module
    matrix: Mat

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.matrix.rank() == self.target.dim


@dataclass(frozen=True, eq=False)
class Bimodule:
    """(B, A)-bimodule: left B-action and right A-action on the same space."""

    left_algebra: Algebra
    right_algebra: Algebra
    dim: int
    left_action: tuple
    right_action: tuple

    @classmethod
    def zero(cls, left: Algebra, right: Algebra) -> "Bimodule":
        f = left.field
        z = Mat.zero(f, 0, 0)
        return cls(left, right, 0, (z,) * left.dim, (z,) * right.dim)


def module_axiom_witness(algebra: Algebra, action: Sequence[Mat], dim: int, left: bool = False):
    """First violated module axiom or None.

    With ``left=True`` the matrices must form a left action (``L[xy] = L[y] L[x]``).
    """
    f = algebra.field
    if len(action) != algebra.dim:
        return ("arity", len(action))
    for i, m in enumerate(action):
        if m.shape != (dim, dim):
            return ("shape", i)
    ident = Mat.identity(f, dim)
    acc = Mat.zero(f, dim, dim)
    for i, c in enumerate(algebra.unit):
        if c:
            acc = acc + action[i].scale(c)
    if acc != ident:
        return ("unit",)
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            lhs = action[j] @ action[i] if left else action[i] @ action[j]
            rhs = Mat.zero(f, dim, dim)
            for k, c in algebra.mult[i][j]:
                rhs = rhs + action[k].scale(c)
            if lhs != rhs:
                return ("product", i, j)
    return None


# ---------------------------------------------------------------------------
# verification


def verify_algebra(a: Algebra) -> CheckResult:
    """Exact check of associativity and the two-sided unit on all basis triples."""
    n = a.dim
    f = a.field
    for i in range(n):
        bi = a.basis_vec(i)
        if a.mul(a.unit, bi) != bi or a.mul(bi, a.unit) != bi:
            return CheckResult(False, f"unit axiom fails on basis vector {i}", ("unit", i))
    p = f.characteristic
    mult = a.mult
    for i in range(n):
        for j in range(n):
            ij = mult[i][j]
            for l in range(n):
                left = {}
                for k, c in ij:
                    for m, d in mult[k][l]:
                        left[m] = left.get(m, 0) + c * d
                right = {}
                for k, c in mult[j][l]:
                    for m, d in mult[i][k]:
                        right[m] = right.get(m, 0) + c * d
                keys = set(left) | set(right)
                for m in keys:
                    diff = left.get(m, 0) - right.get(m, 0)
                    if p:
                        diff %= p
                    if diff:
                        return CheckResult(False, f"associativity fails on ({i}, {j}, {l})", (i, j, l))
    return CheckResult(True, "associative and unital")


def is_two_sided_ideal(a: Algebra, i: Subspace):
    """None if ``i`` is a two-sided ideal, else a witness ``(side, basis index, ideal vector)``."""
    for v in i.basis:
        for j in range(a.dim):
            bj = a.basis_vec(j)
            if not i.contains_vector(a.mul(v, bj)):
                return ("right", j, v)
            if not i.contains_vector(a.mul(bj, v)):
                return ("left", j, v)
    return None


def is_nilpotent_subspace(a: Algebra, i: Subspace) -> bool:
    p = i
    for _ in range(a.dim + 1):
        if p.dim == 0:
            return True
        p = a.elementwise_products(p, i)
    return p.dim == 0


# ---------------------------------------------------------------------------
# constructions


def _dual_actions(actions: Sequence[Mat]) -> tuple:
    return tuple(m.transpose() for m in actions)


def opposite(a: Algebra) -> Algebra:
    """Opposite algebra: ``c_op[i][j] = c[j][i]``; simples become the dual modules."""
    n = a.dim
    mult = tuple(tuple(a.mult[j][i] for j in range(n)) for i in range(n))
    simples = None
    if a.simple_actions is not None:
        simples = tuple(_dual_actions(s) for s in a.simple_actions)
    out = Algebra(a.field, n, mult, a.unit, a.basis_names, a.radical, simples,
                  a.idempotents, f"op({a.origin})")
    out.tags["op_of"] = a
    return out


def _embed(vec, offset, total, field):
    z = field.zero
    out = [z] * total
    for i, x in enumerate(vec):
        out[offset + i] = x
    return tuple(out)


def _block_diag(mats: Sequence[Mat], field: Field) -> Mat:
    total = sum(m.nrows for m in mats)
    z = field.zero
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            row = [z] * total
            row[off:off + m.ncols] = r
            rows.append(tuple(row))
        off += m.ncols
    return Mat(field, total, total, tuple(rows))


def direct_product(factors: Sequence[Algebra]) -> Algebra:
    """Product algebra on the concatenated bases; the unit is the sum of units."""
    factors = list(factors)
    if not factors:
        raise AlgebraError("empty product")
    f = factors[0].field
    if any(x.field != f for x in factors):
        raise AlgebraError("factors over different fields")
    if len(factors) == 1:
        return factors[0]
    offs = []
    n = 0
    for x in factors:
        offs.append(n)
        n += x.dim
    mult = [[() for _ in range(n)] for _ in range(n)]
    unit = []
    names = []
    for t, (x, o) in enumerate(zip(factors, offs)):
        for i in range(x.dim):
            for j in range(x.dim):
                mult[o + i][o + j] = tuple((o + k, c) for k, c in x.mult[i][j])
        unit.extend(x.unit)
        names.extend(f"{t}:{nm}" for nm in x.basis_names)
    radical = None
    if all(x.radical is not None for x in factors):
        radical = Subspace.span(f, n, (_embed(v, o, n, f) for x, o in zip(factors, offs)
                                       for v in x.radical.basis))
    simples = None
    if all(x.simple_actions is not None for x in factors):
        simples = []
        for x, o in zip(factors, offs):
            for s in x.simple_actions:
                d = s[0].nrows if s else 0
                zero = Mat.zero(f, d, d)
                acts = [zero] * n
                for i in range(x.dim):
                    acts[o + i] = s[i]
                simples.append(tuple(acts))
        simples = tuple(simples)
    idem = None
    if all(x.idempotents is not None for x in factors):
        idem = tuple(_embed(e, o, n, f) for x, o in zip(factors, offs) for e in x.idempotents)
    return Algebra(f, n, tuple(tuple(r) for r in mult), tuple(unit), tuple(names), radical,
                   simples, idem, "prod(" + ", ".join(x.origin for x in factors) + ")")


@dataclass(frozen=True, eq=False)
class TrivialExtension(Algebra):
    base: Algebra | None = None
    natural_ideal: Subspace | None = None


def trivial_extension(a: Algebra) -> TrivialExtension:
    """``T(a) = a + a`` with ``(x, y)(x', y') = (xx', xy' + yx')``."""
    n = a.dim
    f = a.field
    N = 2 * n
    mult = [[() for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            c = a.mult[i][j]
            shifted = tuple((k + n, v) for k, v in c)
            mult[i][j] = c
            mult[i][n + j] = shifted
            mult[n + i][j] = shifted
    unit = tuple(a.unit) + (f.zero,) * n
    names = tuple(f"({nm},0)" for nm in a.basis_names) + tuple(f"(0,{nm})" for nm in a.basis_names)
    natural = Subspace.coordinate(f, N, range(n, N))
    radical = None
    if a.radical is not None:
        radical = Subspace.span(f, N, [_embed(v, 0, N, f) for v in a.radical.basis] + list(natural.basis))
    simples = None
    if a.simple_actions is not None:
        simples = tuple(tuple(s) + (Mat.zero(f, s[0].nrows, s[0].nrows),) * n for s in a.simple_actions)
    idem = None
    if a.idempotents is not None:
        idem = tuple(_embed(e, 0, N, f) for e in a.idempotents)
    return TrivialExtension(f, N, tuple(tuple(r) for r in mult), unit, names, radical, simples,
                            idem, f"T({a.origin})", base=a, natural_ideal=natural)


def bimodule_witness(m: Bimodule):
    """None if ``m`` satisfies the bimodule axioms, else a witness tuple."""
    w = module_axiom_witness(m.right_algebra, m.right_action, m.dim)
    if w:
        return ("right",) + w
    w = module_axiom_witness(m.left_algebra, m.left_action, m.dim, left=True)
    if w:
        return ("left",) + w
    for i, L in enumerate(m.left_action):
        for j, R in enumerate(m.right_action):
            if L @ R != R @ L:
                return ("commute", i, j)
    return None


def triangular_matrix_ring(a: Algebra, b: Algebra, m: Bimodule, check: bool = True) -> Algebra:
    """The ring ``[[a, 0], [m, b]]`` on ``a + m + b``.

    ``[[x,0],[s,y]] * [[x',0],[s',y']] = [[xx',0],[s x' + y s', yy']]``.
    Tags ``e``/``f`` hold the two block idempotents.
    """
    f = a.field
    if b.field != f:
        raise AlgebraError("blocks over different fields")
    if m.left_algebra is not b or m.right_algebra is not a:
        raise AlgebraError("bimodule is not over (b, a)")
    if check:
        w = bimodule_witness(m)
        if w:
            raise AlgebraError(f"bimodule axiom fails: {w}", w)
    na, nm, nb = a.dim, m.dim, b.dim
    oM, oB = na, na + nm
    N = na + nm + nb
    mult = [[() for _ in range(N)] for _ in range(N)]
    for i in range(na):
        for j in range(na):
            mult[i][j] = a.mult[i][j]
    for i in range(nb):
        for j in range(nb):
            mult[oB + i][oB + j] = tuple((oB + k, c) for k, c in b.mult[i][j])
    # strip * a-block: right action
    for j in range(na):
        R = m.right_action[j].rows
        for u in range(nm):
            mult[oM + u][j] = tuple((oM + w, c) for w, c in enumerate(R[u]) if c)
    # b-block * strip: left action
    for i in range(nb):
        L = m.left_action[i].rows
        for u in range(nm):
            mult[oB + i][oM + u] = tuple((oM + w, c) for w, c in enumerate(L[u]) if c)
    unit = tuple(a.unit) + (f.zero,) * nm + tuple(b.unit)
    names = (tuple(f"A:{x}" for x in a.basis_names) + tuple(f"M:{u}" for u in range(nm))
             + tuple(f"B:{x}" for x in b.basis_names))
    radical = None
    if a.radical is not None and b.radical is not None:
        vecs = [_embed(v, 0, N, f) for v in a.radical.basis]
        vecs += list(Subspace.coordinate(f, N, range(oM, oB)).basis)
        vecs += [_embed(v, oB, N, f) for v in b.radical.basis]
        radical = Subspace.span(f, N, vecs)
    simples = None
    if a.simple_actions is not None and b.simple_actions is not None:
        simples = []
        for s in a.simple_actions:
            d = s[0].nrows
            z = Mat.zero(f, d, d)
            simples.append(tuple(s) + (z,) * (nm + nb))
        for s in b.simple_actions:
            d = s[0].nrows
            z = Mat.zero(f, d, d)
            simples.append((z,) * (na + nm) + tuple(s))
        simples = tuple(simples)
    idem = None
    if a.idempotents is not None and b.idempotents is not None:
        idem = tuple(_embed(e, 0, N, f) for e in a.idempotents) + \
            tuple(_embed(e, oB, N, f) for e in b.idempotents)
    out = Algebra(f, N, tuple(tuple(r) for r in mult), unit, names, radical,
                  simples, idem, f"tri({a.origin}, {b.origin})")
    out.tags.update(
        e=_embed(a.unit, 0, N, f),
        f=_embed(b.unit, oB, N, f),
        blocks=(na, nm, nb),
        a_block=a, b_block=b, bimodule=m,
    )
    return out


def corner(a: Algebra, e: Sequence):
    """Corner algebra ``e a e`` and its inclusion matrix (rows = basis in ``a`` coordinates)."""
    e = tuple(a.field(x) for x in e)
    if not a.is_idempotent(e):
        raise AlgebraError("corner element is not idempotent", e)
    f = a.field
    sub = a.span(a.mul(a.mul(e, a.basis_vec(i)), e) for i in range(a.dim))
    basis = sub.basis
    d = len(basis)
    products = {}
    for i in range(d):
        for j in range(d):
            products[(i, j)] = sub.coordinates(a.mul(basis[i], basis[j]))
    unit = sub.coordinates(e)
    names = tuple(f"c{i}" for i in range(d))
    radical = None
    if a.radical is not None:
        rad = a.span(a.mul(a.mul(e, v), e) for v in a.radical.basis)
        radical = Subspace.span(f, d, (sub.coordinates(v) for v in rad.basis))
    simples = None
    if a.simple_actions is not None:
        simples = []
        for acts in a.simple_actions:
            mod = Module(a, acts[0].nrows, tuple(acts))
            img = Subspace.span(f, mod.dim, mod.act(e).rows)
            if img.dim == 0:
                continue
            new = []
            for b in basis:
                M = mod.act(b)
                new.append(Mat(f, img.dim, img.dim,
                               tuple(img.coordinates(M.vecmul(v)) for v in img.basis)))
            simples.append(tuple(new))
        simples = tuple(simples)
    out = Algebra.from_products(f, d, products, unit, basis_names=names, radical=radical,
                                simple_actions=simples, origin=f"corner({a.origin})")
    return out, Mat(f, d, a.dim, basis)


def quotient_by_ideal(a: Algebra, i: Subspace):
    """Quotient algebra on the non-pivot coordinate complement, with the projection matrix."""
    w = is_two_sided_ideal(a, i)
    if w is not None:
        raise AlgebraError("subspace is not a two-sided ideal", w)
    f = a.field
    comp = i.complement_indices()
    d = len(comp)

    def project(v):
        r = i.reduce(v)
        return tuple(r[c] for c in comp)

    products = {}
    for s, ci in enumerate(comp):
        for t, cj in enumerate(comp):
            products[(s, t)] = project(a.mul(a.basis_vec(ci), a.basis_vec(cj)))
    proj = Mat(f, a.dim, d, tuple(project(a.basis_vec(k)) for k in range(a.dim)))
    radical = None
    if a.radical is not None:
        radical = Subspace.span(f, d, (project(v) for v in a.radical.basis))
    simples = None
    if a.simple_actions is not None:
        simples = []
        for acts in a.simple_actions:
            if all(Module(a, acts[0].nrows, tuple(acts)).act(v).is_zero() for v in i.basis):
                simples.append(tuple(acts[c] for c in comp))
        simples = tuple(simples)
    idem = None
    if a.idempotents is not None:
        idem = tuple(x for x in (project(e) for e in a.idempotents) if any(x))
    out = Algebra.from_products(f, d, products, project(a.unit),
                                basis_names=tuple(a.basis_names[c] for c in comp),
                                radical=radical, simple_actions=simples, idempotents=idem,
                                origin=f"{a.origin}/I")
    return out, proj


def ideal_power(a: Algebra, i: Subspace, n: int) -> Subspace:
    """Span of all n-fold products of elements of ``i``."""
    if n < 1:
        raise ValueError("power must be >= 1")
    p = i
    for _ in range(n - 1):
        if p.dim == 0:
            break
        p = a.elementwise_products(p, i)
    return p


def regular_module(a: Algebra) -> Module:
    """``a`` as a right module over itself."""
    m = a._cache.get("regular")
    if m is None:
        acts = tuple(a.right_matrix(a.basis_vec(i)) for i in range(a.dim))
        m = Module(a, a.dim, acts, name="regular")
        a._cache["regular"] = m
    return m


def apply_linear(m: Mat, v: Sequence) -> tuple:
    return m.vecmul(v)


def check_algebra_map(a: Algebra, b: Algebra, phi: Mat, unital: bool = True) -> CheckResult:
    """Is ``v -> v phi`` multiplicative (and unital) from ``a`` to ``b``?"""
    if phi.shape != (a.dim, b.dim):
        return CheckResult(False, "shape mismatch")
    img = [phi.rows[i] for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = phi.vecmul(a.mul(a.basis_vec(i), a.basis_vec(j)))
            if lhs != b.mul(img[i], img[j]):
                return CheckResult(False, f"not multiplicative on ({i}, {j})", (i, j))
    if unital and phi.vecmul(a.unit) != tuple(b.unit):
        return CheckResult(False, "unit not preserved")
    return CheckResult(True, "algebra homomorphism")


def check_isomorphism(a: Algebra, b: Algebra, phi: Mat) -> CheckResult:
    """Witness-based isomorphism check: multiplicative, unital and invertible."""
    if a.dim != b.dim:
        return CheckResult(False, f"dimensions differ ({a.dim} vs {b.dim})")
    r = check_algebra_map(a, b, phi)
    if not r:
        return r
    if phi.rank() != a.dim:
        return CheckResult(False, "map is not invertible")
    return CheckResult(True, "isomorphism", phi)


def isomorphism_from_generators(a: Algebra, b: Algebra, gens: Sequence, images: Sequence):
    """Extend ``gens[i] -> images[i]`` multiplicatively; returns the matrix or None.

    Words in the generators are expanded until they span ``a``; the linear
    map is then solved for and checked exactly.
    """
    f = a.field
    pairs = [(tuple(g), tuple(h)) for g, h in zip(gens, images)]
    words = [(tuple(a.unit), tuple(b.unit))] + pairs
    span = a.span(w for w, _ in words)
    frontier = list(words)
    while span.dim < a.dim and frontier:
        new = []
        for x, y in frontier:
            for g, h in pairs:
                xg = a.mul(x, g)
                if not span.contains_vector(xg):
                    span = span + a.span([xg])
                    new.append((xg, b.mul(y, h)))
        words.extend(new)
        frontier = new
    if span.dim < a.dim:
        return None
    src = Mat(f, len(words), a.dim, tuple(w for w, _ in words))
    dst = Mat(f, len(words), b.dim, tuple(v for _, v in words))
    # phi with src @ phi = dst
    phi = solve(src, dst)
    if phi is None:
        return None
    return phi if check_isomorphism(a, b, phi) else None
