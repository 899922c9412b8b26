"""Quivers with relations and their compilation to structure constants.

Paths are written the way composites are written: the word ``(b, a)`` is
``b*a`` and means "first a, then b", so it is composable when the target
of ``a`` is the source of ``b``.  The algebra product of two paths is the
written concatenation.  Every path of length >= the nilpotency bound is zero.

Compilation orients each relation into a rule ``lead -> smaller terms``
(length first, then lexicographic in declared arrow order), completes the
rule set on its finitely many critical pairs, and reads off the normal
paths.  :func:`ideal_span_quotient_dim` is an independent linear-algebra
oracle for the resulting dimension.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra, CheckResult, Mat
from .linalg import Field, Subspace, GF


class QuiverSyntaxError(ValueError):
    def __init__(self, message, line=0, col=0):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class PresentationError(ValueError):
    pass


class ConfluenceError(PresentationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class QuiverPresentation:
    """``relations`` are tuples of ``(coeff, word)``; words list arrow indices as written."""

    field: Field
    vertices: tuple
    arrows: tuple
    relations: tuple
    nilpotency_bound: int

    def __post_init__(self):
        if self.nilpotency_bound < 1:
            raise PresentationError("nilpotency bound must be >= 1")
        for rel in self.relations:
            for _, w in rel:
                if not w or not self.composable(w):
                    raise PresentationError(f"relation term {self.word_str(w)!r} is not a path")

    def composable(self, word: Sequence[int]) -> bool:
        arr = self.arrows
        return all(arr[word[i]].source == arr[word[i + 1]].target for i in range(len(word) - 1))

    def source(self, word) -> int:
        return self.arrows[word[-1]].source

    def target(self, word) -> int:
        return self.arrows[word[0]].target

    def word_str(self, word) -> str:
        return "*".join(self.arrows[i].name for i in word)

    def relation_str(self, rel) -> str:
        f = self.field
        parts = []
        for c, w in rel:
            parts.append(f"{f.fmt(c)}*{self.word_str(w)}")
        return " + ".join(parts) if parts else "0"

    def paths(self, max_len: int) -> list[tuple]:
        """All nonempty composable words of length <= max_len, shortest first."""
        out = []
        layer = [(i,) for i in range(len(self.arrows))]
        length = 1
        while layer and length <= max_len:
            out.extend(layer)
            nxt = []
            for w in layer:
                s = self.source(w)
                for i, a in enumerate(self.arrows):
                    if a.target == s:
                        nxt.append(w + (i,))
            layer = nxt
            length += 1
        return out


def path_key(word):
    return (len(word), word)


# ---------------------------------------------------------------------------
# parsing and printing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[+\-*])|(?P<bad>\S))")


def _parse_relation(text, lineno, col0, field, arrow_index, arrows):
    terms = []
    seen = set()
    pos = 0
    sign = 1
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("bad"):
            col = col0 + m.start("bad")
            prev = tokens[-1] if tokens else None
            if prev and prev[0] == "num" and prev[2] + len(prev[1]) == m.start("bad"):
                raise QuiverSyntaxError(f"bad scalar literal {prev[1]}{m.group('bad')}", lineno, col0 + prev[2])
            raise QuiverSyntaxError(f"unexpected character {m.group('bad')!r}", lineno, col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    # num directly followed by a name without '*' is a malformed literal (e.g. 2x)
    for a, b in zip(tokens, tokens[1:]):
        if a[0] == "num" and b[0] == "name" and a[2] + len(a[1]) == b[2]:
            raise QuiverSyntaxError(f"bad scalar literal {a[1]}{b[1]}", lineno, col0 + a[2])
    i = 0
    while i < len(tokens):
        kind, val, start = tokens[i]
        if kind == "op" and val in "+-":
            sign = sign * (-1 if val == "-" else 1)
            i += 1
            if i >= len(tokens):
                raise QuiverSyntaxError("dangling operator", lineno, col0 + start)
            continue
        coeff = 1
        if kind == "num":
            try:
                coeff = field(val)
            except ZeroDivisionError:
                raise QuiverSyntaxError(f"bad scalar literal {val}", lineno, col0 + start)
            if i + 1 >= len(tokens) or tokens[i + 1][1] != "*":
                raise QuiverSyntaxError("scalar must multiply a path", lineno, col0 + start)
            i += 2
        word = []
        while True:
            if i >= len(tokens) or tokens[i][0] != "name":
                c = col0 + (tokens[i][2] if i < len(tokens) else len(text))
                raise QuiverSyntaxError("expected an arrow name", lineno, c)
            name, start = tokens[i][1], tokens[i][2]
            if name not in arrow_index:
                raise QuiverSyntaxError(f"unknown arrow {name!r}", lineno, col0 + start)
            word.append(arrow_index[name])
            if len(word) > 1:
                x, y = arrows[word[-2]], arrows[word[-1]]
                if x.source != y.target:
                    raise QuiverSyntaxError(
                        f"path not composable at {name!r}: target of {name} is not the source of "
                        f"{arrows[word[-2]].name}", lineno, col0 + start)
            i += 1
            if i < len(tokens) and tokens[i][1] == "*":
                i += 1
                continue
            break
        word = tuple(word)
        if word in seen:
            raise QuiverSyntaxError(f"monomial {'*'.join(arrows[k].name for k in word)} repeated "
                                    "in one relation", lineno, col0 + start)
        seen.add(word)
        c = field(sign * coeff)
        if c:
            terms.append((c, word))
        sign = 1
        if i < len(tokens) and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise QuiverSyntaxError(f"unexpected token {tokens[i][1]!r}", lineno, col0 + tokens[i][2])
    if not seen:
        raise QuiverSyntaxError("empty relation", lineno, col0)
    return tuple(terms)


def parse_presentation(text: str) -> QuiverPresentation:
    """Parse the ``quiverfile v1`` format; errors carry line and column."""
    lines = text.splitlines()
    header_seen = False
    field = None
    vertices = None
    arrows: list[Arrow] = []
    arrow_index: dict[str, int] = {}
    raw_relations = []
    nil = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        stripped = line.strip()
        if not header_seen:
            if stripped != "quiverfile v1":
                raise QuiverSyntaxError("expected header 'quiverfile v1'", lineno, col0)
            header_seen = True
            continue
        key, _, rest = stripped.partition(" ")
        rest_col = col0 + len(key) + 1
        if key == "field":
            try:
                field = Field(int(rest))
            except ValueError as e:
                raise QuiverSyntaxError(f"bad field: {e}", lineno, rest_col)
        elif key == "vertices":
            vertices = tuple(rest.split())
            if len(set(vertices)) != len(vertices):
                raise QuiverSyntaxError("repeated vertex", lineno, rest_col)
        elif key == "arrow":
            m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\S+)\s*->\s*(\S+)\s*", rest)
            if not m:
                raise QuiverSyntaxError("expected 'arrow NAME : SOURCE -> TARGET'", lineno, rest_col)
            if vertices is None:
                raise QuiverSyntaxError("arrow before vertices", lineno, col0)
            name, s, t = m.groups()
            for v, g in ((s, 2), (t, 3)):
                if v not in vertices:
                    raise QuiverSyntaxError(f"unknown vertex {v!r}", lineno, rest_col + m.start(g))
            if name in arrow_index:
                raise QuiverSyntaxError(f"repeated arrow {name!r}", lineno, rest_col)
            arrow_index[name] = len(arrows)
            arrows.append(Arrow(name, vertices.index(s), vertices.index(t)))
        elif key == "nilpotency":
            try:
                nil = int(rest)
            except ValueError:
                raise QuiverSyntaxError("nilpotency must be an integer", lineno, rest_col)
            if nil < 1:
                raise QuiverSyntaxError("nilpotency must be >= 1", lineno, rest_col)
        elif key == "relation":
            raw_relations.append((rest, lineno, rest_col))
        else:
            raise QuiverSyntaxError(f"unknown directive {key!r}", lineno, col0)
    if not header_seen:
        raise QuiverSyntaxError("empty input", 1, 1)
    if field is None or vertices is None or nil is None:
        missing = [k for k, v in (("field", field), ("vertices", vertices), ("nilpotency", nil)) if v is None]
        raise QuiverSyntaxError(f"missing directive(s): {', '.join(missing)}", len(lines), 1)
    rels = []
    for text_, lineno, col in raw_relations:
        rels.append(_parse_relation(text_, lineno, col, field, arrow_index, arrows))
    return QuiverPresentation(field, vertices, tuple(arrows), tuple(rels), nil)


def format_presentation(p: QuiverPresentation) -> str:
    f = p.field
    out = ["quiverfile v1", f"field {f.characteristic}", "vertices " + " ".join(p.vertices)]
    for a in p.arrows:
        out.append(f"arrow {a.name} : {p.vertices[a.source]} -> {p.vertices[a.target]}")
    out.append(f"nilpotency {p.nilpotency_bound}")
    for rel in p.relations:
        parts = []
        for k, (c, w) in enumerate(rel):
            neg = f.characteristic == 0 and c < 0
            mag = -c if neg else c
            lit = "" if mag == 1 else f"{f.fmt(mag)}*"
            sign = ("- " if neg else "+ ") if k else ("-" if neg else "")
            parts.append(f"{sign}{lit}{p.word_str(w)}")
        out.append("relation " + " ".join(parts))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------


def idempotent_split_relations(p: QuiverPresentation) -> QuiverPresentation:
    """Replace each relation g by its nonzero components ``e_i g e_j``.

    The generated two-sided ideal is unchanged since ``g = sum e_i g e_j``
    and each component is ``e_i * g * e_j``.  Zero relations are dropped.
    """
    out = []
    for rel in p.relations:
        groups: dict = {}
        for c, w in rel:
            groups.setdefault((p.target(w), p.source(w)), []).append((c, w))
        for key in sorted(groups):
            comp = tuple(t for t in groups[key] if t[0])
            if comp:
                out.append(comp)
    return QuiverPresentation(p.field, p.vertices, p.arrows, tuple(out), p.nilpotency_bound)


# ---------------------------------------------------------------------------
# rewriting


@dataclass
class RewriteSystem:
    """Rules ``lead -> rhs`` (rhs a dict word -> coeff of smaller parallel words)."""

    presentation: QuiverPresentation
    rules: list = dc_field(default_factory=list)
    _nf: dict = dc_field(default_factory=dict, repr=False)

    @property
    def L(self) -> int:
        return self.presentation.nilpotency_bound

    @property
    def p(self) -> int:
        return self.presentation.field.characteristic

    def add_rule(self, lead, rhs):
        for w in rhs:
            if path_key(w) >= path_key(lead):
                raise PresentationError("rule right side is not smaller than its lead")
        self.rules.append((tuple(lead), dict(rhs)))
        self._nf.clear()

    def _find(self, word):
        n = len(word)
        leads = self._lead_index()
        for i in range(n):
            for j in range(i + 1, n + 1):
                idx = leads.get(word[i:j])
                if idx is not None:
                    return i, j, idx
        return None

    def _lead_index(self):
        li = self._nf.get("__leads__")
        if li is None:
            li = {}
            for k, (lead, _) in enumerate(self.rules):
                li.setdefault(lead, k)
            self._nf["__leads__"] = li
        return li

    def normal_form(self, word) -> dict:
        """Normal form of a single word as a dict word -> coeff."""
        word = tuple(word)
        if len(word) >= self.L:
            return {}
        hit = self._nf.get(word)
        if hit is not None:
            return hit
        found = self._find(word)
        if found is None:
            res = {word: 1}
        else:
            i, j, k = found
            u, v = word[:i], word[j:]
            res = {}
            for r, c in self.rules[k][1].items():
                t = u + r + v
                assert path_key(t) < path_key(word), "rewrite did not decrease the path order"
                self._accumulate(res, self.normal_form(t), c)
        self._nf[word] = res
        return res

    def _accumulate(self, acc, vec, c):
        p = self.p
        for w, x in vec.items():
            y = acc.get(w, 0) + c * x
            if p:
                y %= p
            if y:
                acc[w] = y
            else:
                acc.pop(w, None)

    def reduce(self, vec: dict) -> dict:
        out = {}
        for w, c in vec.items():
            self._accumulate(out, self.normal_form(w), c)
        return out

    def times(self, u, vec: dict, v) -> dict:
        """``u * vec * v`` with length truncation (u, v words, possibly empty)."""
        L = self.L
        out = {}
        for w, c in vec.items():
            t = tuple(u) + w + tuple(v)
            if len(t) < L:
                out[t] = (out.get(t, 0) + c) % self.p if self.p else out.get(t, 0) + c
        return {w: c for w, c in out.items() if c}

    def rule_vector(self, k) -> dict:
        """``lead - rhs`` for rule k (an element of the ideal)."""
        lead, rhs = self.rules[k]
        p = self.p
        out = {lead: 1}
        for w, c in rhs.items():
            out[w] = (-c) % p if p else -c
        return out

    def critical_pairs(self):
        """Yield ``(description, s_element)`` for every overlap, inclusion and truncation ambiguity."""
        pres = self.presentation
        L = self.L
        rules = self.rules
        for i, (li, ri) in enumerate(rules):
            for j, (lj, rj) in enumerate(rules):
                # inclusion: li inside lj
                if i != j and len(li) <= len(lj):
                    n = len(li)
                    for s in range(len(lj) - n + 1):
                        if lj[s:s + n] == li:
                            u, v = lj[:s], lj[s + n:]
                            yield (("inclusion", i, j, s),
                                   self._diff(self.times(u, ri, v), dict(rj)))
                # proper overlap: suffix of li == prefix of lj
                for o in range(1, min(len(li), len(lj))):
                    if li[-o:] == lj[:o]:
                        x, z = li[:-o], lj[o:]
                        yield (("overlap", i, j, o),
                               self._diff(self.times((), ri, z), self.times(x, rj, ())))
            # truncation: words u, v with |u| + |li| + |v| == L
            extra = L - len(li)
            if extra <= 0:
                continue
            for ul in range(extra + 1):
                vl = extra - ul
                for u in self._words_ending_at(pres.target(li), ul):
                    for v in self._words_starting_at(pres.source(li), vl):
                        s = self.times(u, ri, v)
                        if s:
                            yield (("truncation", i, u, v), s)

    def _words_ending_at(self, vertex, length):
        # words u such that u * path is composable for a path with target ``vertex``
        if length == 0:
            return [()]
        return [w for w in self._all_words(length) if self.presentation.source(w) == vertex]

    def _words_starting_at(self, vertex, length):
        if length == 0:
            return [()]
        return [w for w in self._all_words(length) if self.presentation.target(w) == vertex]

    def _all_words(self, length):
        key = ("__words__", length)
        ws = self._nf.get(key)
        if ws is None:
            ws = [w for w in self.presentation.paths(length) if len(w) == length]
            self._nf[key] = ws
        return ws

    def _diff(self, a, b):
        p = self.p
        out = dict(a)
        for w, c in b.items():
            y = out.get(w, 0) - c
            if p:
                y %= p
            if y:
                out[w] = y
            else:
                out.pop(w, None)
        return out


def _orient(p_field: Field, vec: dict):
    """Turn a nonzero ideal element into ``(lead, rhs)``."""
    lead = max(vec, key=path_key)
    c = vec[lead]
    inv = p_field.inv(p_field(c))
    q = p_field.characteristic
    rhs = {}
    for w, x in vec.items():
        if w == lead:
            continue
        y = -x * inv
        rhs[w] = y % q if q else y
    return lead, {w: y for w, y in rhs.items() if y}


def check_confluence(r: RewriteSystem, L: int | None = None) -> CheckResult:
    """Resolve every critical pair; report the first one that does not join."""
    if L is not None and L != r.L:
        raise ValueError("nilpotency bound disagrees with the rewrite system")
    for desc, s in r.critical_pairs():
        nf = r.reduce(s)
        if nf:
            return CheckResult(False, f"critical pair {desc} does not resolve", (desc, nf))
    return CheckResult(True, f"{len(r.rules)} rules, all critical pairs resolve")


def rewrite_system(p: QuiverPresentation) -> RewriteSystem:
    """Rules oriented from the (split) relations, without completion."""
    rs = RewriteSystem(p)
    L = p.nilpotency_bound
    for rel in p.relations:
        vec = {}
        for c, w in rel:
            if len(w) < L:
                rs._accumulate(vec, {w: 1}, c)
        if not vec:
            continue
        heads = sorted(vec, key=path_key, reverse=True)
        if len(heads) > 1 and path_key(heads[0]) == path_key(heads[1]):
            raise PresentationError("relation has two equal leading monomials")
        lead, rhs = _orient(p.field, vec)
        rs.add_rule(lead, rhs)
    return rs


def complete(rs: RewriteSystem, max_rounds: int = 10_000) -> RewriteSystem:
    """Add rules for unresolved critical pairs until the system is confluent.

    Every new lead is irreducible for the current rules and has length below
    the nilpotency bound, so this stops after finitely many rounds.
    """
    f = rs.presentation.field
    for _ in range(max_rounds):
        added = False
        for desc, s in list(rs.critical_pairs()):
            nf = rs.reduce(s)
            if nf:
                lead, rhs = _orient(f, nf)
                rs.add_rule(lead, rhs)
                added = True
                break
        if not added:
            return rs
    raise ConfluenceError("completion did not terminate")


@dataclass
class CompiledQuiver:
    presentation: QuiverPresentation
    algebra: Algebra
    basis: tuple  # labels: ("e", v) for vertices, word tuples for paths
    arrow_ideal: Subspace
    rewriting: RewriteSystem

    def path_names(self):
        return self.algebra.basis_names

    def evaluate(self, terms) -> tuple:
        """Coordinates of ``sum c * word`` in the compiled algebra."""
        f = self.algebra.field
        idx = {b: i for i, b in enumerate(self.basis)}
        vec = {}
        for c, w in terms:
            self.rewriting._accumulate(vec, self.rewriting.normal_form(tuple(w)), f(c))
        out = [f.zero] * self.algebra.dim
        for w, c in vec.items():
            out[idx[w]] = f(c)
        return tuple(out)


def compile_presentation(p: QuiverPresentation, complete_rules: bool = True) -> CompiledQuiver:
    """Structure constants on the normal paths of the (completed) rewrite system."""
    sp = idempotent_split_relations(p)
    rs = rewrite_system(sp)
    if complete_rules:
        complete(rs)
    verdict = check_confluence(rs)
    if not verdict:
        raise ConfluenceError(verdict.detail, verdict.witness)
    f = p.field
    L = p.nilpotency_bound
    nv = len(p.vertices)
    leads = {lead for lead, _ in rs.rules}

    def reducible(w):
        n = len(w)
        return any(w[i:j] in leads for i in range(n) for j in range(i + 1, n + 1))

    words = []
    layer = [(i,) for i in range(len(p.arrows)) if not reducible((i,))] if L > 1 else []
    while layer:
        words.extend(layer)
        nxt = []
        for w in layer:
            if len(w) + 1 >= L:
                continue
            s = p.source(w)
            for i, a in enumerate(p.arrows):
                if a.target == s:
                    w2 = w + (i,)
                    if not reducible(w2):
                        nxt.append(w2)
        layer = nxt
    words.sort(key=path_key)
    basis = tuple(("e", v) for v in range(nv)) + tuple(words)
    idx = {b: i for i, b in enumerate(basis)}
    n = len(basis)

    def endpoints(b):
        if b[0] == "e":
            return b[1], b[1]
        return p.source(b), p.target(b)

    products = {}
    for i, x in enumerate(basis):
        sx, tx = endpoints(x)
        for j, y in enumerate(basis):
            sy, ty = endpoints(y)
            if sx != ty:
                continue
            if x[0] == "e":
                products[(i, j)] = {j: 1}
            elif y[0] == "e":
                products[(i, j)] = {i: 1}
            else:
                nf = rs.normal_form(x + y)
                products[(i, j)] = {idx[w]: c for w, c in nf.items()}
    unit = [f.zero] * n
    for v in range(nv):
        unit[v] = f.one
    names = tuple(f"e_{p.vertices[v]}" for v in range(nv)) + tuple(p.word_str(w) for w in words)
    arrow_ideal = Subspace.coordinate(f, n, range(nv, n))
    simples = []
    for v in range(nv):
        acts = []
        for b in basis:
            val = f.one if b == ("e", v) else f.zero
            acts.append(Mat(f, 1, 1, ((val,),)))
        simples.append(tuple(acts))
    idem = tuple(tuple(f.one if k == v else f.zero for k in range(n)) for v in range(nv))
    alg = Algebra.from_products(f, n, products, unit, basis_names=names, radical=arrow_ideal,
                                simple_actions=tuple(simples), idempotents=idem,
                                origin="quiver")
    alg.tags["presentation"] = p
    return CompiledQuiver(p, alg, basis, arrow_ideal, rs)


def ideal_span_quotient_dim(p: QuiverPresentation) -> int:
    """Dimension of the quotient computed by brute-force linear algebra.

    Spans ``u * g * w`` for all relations g (as given, unsplit) and all
    paths u, w including trivial ones, inside the space of paths of length
    below the bound.  No rewriting is involved.
    """
    f = p.field
    L = p.nilpotency_bound
    nv = len(p.vertices)
    words = p.paths(L - 1)
    space = [("e", v) for v in range(nv)] + words
    idx = {b: i for i, b in enumerate(space)}
    n = len(space)
    # (source, target, word) for every path, including trivial ones
    allpaths = [(v, v, ()) for v in range(nv)] + [(p.source(w), p.target(w), w) for w in words]
    vecs = []
    for rel in p.relations:
        for us, ut, uw in allpaths:
            for ws, wt, ww in allpaths:
                vec = {}
                for c, t in rel:
                    if p.target(t) != us or p.source(t) != wt:
                        continue
                    full = uw + t + ww
                    if len(full) >= L:
                        continue
                    k = idx[full]
                    vec[k] = vec.get(k, 0) + c
                if any(f(x) for x in vec.values()):
                    row = [f.zero] * n
                    for k, x in vec.items():
                        row[k] = f(x)
                    vecs.append(row)
    rank = Subspace.span(f, n, vecs).dim
    return n - rank


# ---------------------------------------------------------------------------
# examples


def kk_presentation(n: int, field: Field) -> QuiverPresentation:
    """Truncation of the Kirkman-Kuzmanovich quiver to arrows a_1..a_n, b_1..b_n.

    a_i: v1 -> v2, b_i: v2 -> v1; relations b_t a_s b_r, b_t a_s - a_t b_t (t > s),
    a_r b_r; all paths of length 4 vanish.
    """
    if n < 1:
        raise PresentationError("n must be >= 1")
    arrows = tuple(Arrow(f"a{i}", 0, 1) for i in range(1, n + 1)) + \
        tuple(Arrow(f"b{i}", 1, 0) for i in range(1, n + 1))
    a = lambda i: i - 1
    b = lambda i: n + i - 1
    one = field.one
    rels = []
    for t in range(1, n + 1):
        for s in range(1, n + 1):
            for r in range(1, n + 1):
                rels.append(((one, (b(t), a(s), b(r))),))
    for t in range(1, n + 1):
        for s in range(1, t):
            rels.append(((one, (b(t), a(s))), (field(-1), (a(t), b(t)))))
    for r in range(1, n + 1):
        rels.append(((one, (a(r), b(r))),))
    return QuiverPresentation(field, ("v1", "v2"), arrows, tuple(rels), 4)


def linear_quiver(n: int, field: Field, nilpotency: int | None = None) -> QuiverPresentation:
    """A_n: v1 -> v2 -> ... -> vn, no relations."""
    verts = tuple(f"v{i}" for i in range(1, n + 1))
    arrows = tuple(Arrow(f"a{i}", i - 1, i) for i in range(1, n))
    return QuiverPresentation(field, verts, arrows, (), nilpotency or n)


def random_presentation(rng: random.Random, field: Field | None = None,
                        max_vertices=4, max_arrows=6, max_relations=6, max_L=4) -> QuiverPresentation:
    """Random small presentation with monomial and parallel-binomial relations."""
    field = field or GF(rng.choice([2, 3, 5, 7]))
    nv = rng.randint(1, max_vertices)
    na = rng.randint(0, max_arrows)
    arrows = tuple(Arrow(f"x{i}", rng.randrange(nv), rng.randrange(nv)) for i in range(na))
    L = rng.randint(1, max_L)
    base = QuiverPresentation(field, tuple(f"v{i}" for i in range(nv)), arrows, (), L)
    paths = base.paths(max(L - 1, 1)) if na else []
    rels = []
    for _ in range(rng.randint(0, max_relations)):
        if not paths:
            break
        w = rng.choice(paths)
        if rng.random() < 0.5:
            rels.append(((field.one, w),))
            continue
        par = [q for q in paths if q != w and base.source(q) == base.source(w)
               and base.target(q) == base.target(w)]
        if not par:
            rels.append(((field.one, w),))
            continue
        q = rng.choice(par)
        c = field(rng.randrange(1, field.characteristic)) if field.characteristic else field(rng.randint(1, 5))
        rels.append(((field.one, w), (field(-c), q)))
    return QuiverPresentation(field, base.vertices, arrows, tuple(rels), L)
