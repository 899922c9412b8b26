"""Text formats: ``algfile v1`` for structure constants and ``modfile v1`` for modules.

algfile::

    algfile v1
    field 5
    dim 2
    basis 1 x
    mult 0 0 = 0:1
    mult 0 1 = 1:1
    mult 1 0 = 1:1
    unit = 0:1
    radical = 1

modfile (matrices of the basis vectors, rows separated by ``;``)::

    modfile v1
    dim 1
    act 0 = 1
    act 1 = 0
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, Module
from .linalg import Field, Mat, Subspace


class FormatError(ValueError):
    def __init__(self, message, line=0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _scalar(field: Field, text: str, lineno: int):
    try:
        return field(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar {text!r} ({exc})", lineno) from None


def _int(text, lineno, what="integer"):
    try:
        return int(text)
    except ValueError:
        raise FormatError(f"expected {what}, got {text!r}", lineno) from None


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _sparse_terms(field, text, lineno, dim):
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise FormatError(f"expected index:coefficient, got {part!r}", lineno)
        k, c = part.split(":", 1)
        k = _int(k.strip(), lineno, "basis index")
        if not 0 <= k < dim:
            raise FormatError(f"basis index {k} out of range", lineno)
        out[k] = out.get(k, 0) + _scalar(field, c.strip(), lineno)
    return out


def parse_algfile(text: str) -> Algebra:
    it = _lines(text)
    try:
        n, head = next(it)
    except StopIteration:
        raise FormatError("empty input") from None
    if head.split() != ["algfile", "v1"]:
        raise FormatError("expected header 'algfile v1'", n)
    field = dim = unit = None
    names = ()
    products = {}
    radical = None
    for n, line in it:
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "field":
            try:
                field = Field(_int(rest, n, "characteristic"))
            except ValueError as exc:
                raise FormatError(str(exc), n) from None
        elif key == "dim":
            dim = _int(rest, n, "dimension")
            if dim < 1:
                raise FormatError("dim must be positive", n)
        elif field is None or dim is None:
            raise FormatError("'field' and 'dim' must come first", n)
        elif key == "basis":
            names = tuple(rest.split())
            if len(names) != dim:
                raise FormatError(f"{len(names)} basis names for dim {dim}", n)
        elif key == "mult":
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise FormatError("expected 'mult i j = k:c,...'", n)
            ij = lhs.split()
            if len(ij) != 2:
                raise FormatError("expected two indices before '='", n)
            i, j = (_int(x, n, "basis index") for x in ij)
            if not (0 <= i < dim and 0 <= j < dim):
                raise FormatError("basis index out of range", n)
            if (i, j) in products:
                raise FormatError(f"product ({i}, {j}) given twice", n)
            products[(i, j)] = _sparse_terms(field, rhs, n, dim)
        elif key == "unit":
            unit = _sparse_terms(field, rest.lstrip("=").strip(), n, dim)
        elif key == "radical":
            idx = [_int(x.strip(), n, "basis index") for x in rest.lstrip("=").split(",") if x.strip()]
            if any(not 0 <= k < dim for k in idx):
                raise FormatError("radical index out of range", n)
            radical = Subspace.coordinate(field, dim, idx)
        else:
            raise FormatError(f"unknown directive {key!r}", n)
    if field is None or dim is None:
        raise FormatError("missing 'field' or 'dim'")
    if unit is None:
        raise FormatError("missing 'unit'")
    uvec = [0] * dim
    for k, c in unit.items():
        uvec[k] = c
    return Algebra.from_products(field, dim, products, uvec, basis_names=names,
                                 radical=radical, origin="algfile")


def format_algfile(a: Algebra, radical: bool = True) -> str:
    f = a.field
    out = ["algfile v1", f"field {f.characteristic}", f"dim {a.dim}"]
    if all(" " not in x and "#" not in x for x in a.basis_names):
        out.append("basis " + " ".join(a.basis_names))
    for i in range(a.dim):
        for j in range(a.dim):
            if a.mult[i][j]:
                out.append(f"mult {i} {j} = " + ",".join(f"{k}:{f.fmt(c)}" for k, c in a.mult[i][j]))
    out.append("unit = " + ",".join(f"{k}:{f.fmt(c)}" for k, c in enumerate(a.unit) if c))
    if radical and a.radical is not None:
        # only coordinate radicals are expressible in the format
        if all(sum(1 for x in b if x) == 1 for b in a.radical.basis):
            out.append("radical = " + ",".join(str(c) for c in a.radical.pivots))
    return "\n".join(out) + "\n"


def parse_modfile(text: str, algebra: Algebra) -> Module:
    f = algebra.field
    it = _lines(text)
    try:
        n, head = next(it)
    except StopIteration:
        raise FormatError("empty input") from None
    if head.split() != ["modfile", "v1"]:
        raise FormatError("expected header 'modfile v1'", n)
    dim = None
    acts = {}
    for n, line in it:
        key, _, rest = line.partition(" ")
        if key == "dim":
            dim = _int(rest.strip(), n, "dimension")
        elif key == "act":
            if dim is None:
                raise FormatError("'dim' must come first", n)
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise FormatError("expected 'act i = row; row; ...'", n)
            i = _int(lhs.strip(), n, "basis index")
            if not 0 <= i < algebra.dim:
                raise FormatError("basis index out of range", n)
            rows = [r.split() for r in rhs.split(";")]
            if len(rows) != dim or any(len(r) != dim for r in rows):
                raise FormatError(f"action of {i} is not {dim}x{dim}", n)
            acts[i] = Mat(f, dim, dim, tuple(tuple(_scalar(f, x, n) for x in r) for r in rows))
        else:
            raise FormatError(f"unknown directive {key!r}", n)
    if dim is None:
        raise FormatError("missing 'dim'")
    zero = Mat.zero(f, dim, dim)
    return Module(algebra, dim, tuple(acts.get(i, zero) for i in range(algebra.dim)), name="input")


def format_modfile(m: Module) -> str:
    f = m.field
    out = ["modfile v1", f"dim {m.dim}"]
    for i, A in enumerate(m.action):
        if not A.is_zero():
            out.append(f"act {i} = " + "; ".join(" ".join(f.fmt(x) for x in r) for r in A.rows))
    return "\n".join(out) + "\n"
