"""Command line entry point.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input,
3 the computation is not available (e.g. radical in small characteristic).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import __version__
from .algebra import Algebra, AlgebraError, verify_algebra, ideal_power, opposite
from .corpus import standard_corpus
from .formats import FormatError, parse_algfile, format_algfile, parse_modfile
from .linalg import Field
from .presentation import (
    QuiverSyntaxError, PresentationError, ConfluenceError, parse_presentation,
    compile_presentation, ideal_span_quotient_dim, kk_presentation, format_presentation,
)
from .representations import (
    CapabilityError, SplittingError, simple_modules, verify_radical, radical_of_algebra, verify_module,
)
from .homology import findim_zero_test, minimal_resolution, verify_resolution, big_findim_flag
from . import cover as cv

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPABILITY = 0, 1, 2, 3


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# inputs


@dataclass
class Loaded:
    algebra: Algebra
    digest: str
    kind: str  # quiverfile | algfile | builtin
    compiled: object = None


def load_input(spec: str) -> Loaded:
    """A quiverfile, an algfile, or ``builtin:NAME`` from the standard corpus."""
    if spec.startswith("builtin:"):
        name = spec[len("builtin:"):]
        for e in standard_corpus():
            if e.name == name:
                return Loaded(e.algebra, hashlib.sha256(spec.encode()).hexdigest(), "builtin")
        raise InputError(f"unknown builtin {name!r}")
    try:
        data = Path(spec).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc.strerror}") from None
    digest = hashlib.sha256(data).hexdigest()
    text = data.decode("utf-8", errors="replace")
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), "")
    try:
        if first.startswith("quiverfile"):
            p = parse_presentation(text)
            comp = compile_presentation(p)
            return Loaded(comp.algebra, digest, "quiverfile", comp)
        if first.startswith("algfile"):
            return Loaded(parse_algfile(text), digest, "algfile")
    except (QuiverSyntaxError, FormatError) as exc:
        raise InputError(f"{spec}: {exc}") from None
    except ConfluenceError:
        raise
    except PresentationError as exc:
        raise InputError(f"{spec}: {exc}") from None
    raise InputError(f"{spec}: unrecognised header {first!r} (expected quiverfile v1 or algfile v1)")


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    command: str
    digest: str
    params: dict = dc_field(default_factory=dict)
    checks: list = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)
    timings: bool = False

    def add(self, check_id: str, anchor: str, ok, witness=None, elapsed=None):
        entry = {"id": check_id, "anchor": anchor,
                 "verdict": "skip" if ok is None else ("pass" if ok else "fail"),
                 "witness": _plain(witness or {})}
        if self.timings and elapsed is not None:
            entry["runtime_s"] = round(elapsed, 3)
        self.checks.append(entry)

    @property
    def ok(self):
        return all(c["verdict"] != "fail" for c in self.checks)

    def tree(self):
        return {"tool": "asymcover", "version": __version__, "command": self.command,
                "input_sha256": self.digest, "params": _plain(self.params),
                "info": _plain(self.info), "checks": self.checks,
                "result": "pass" if self.ok else "fail"}

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.tree(), sort_keys=True, indent=2) + "\n"
        lines = [f"asymcover {__version__} {self.command}  input {self.digest[:16]}"]
        for k in sorted(self.info):
            lines.append(f"  {k}: {_short(self.info[k])}")
        for c in self.checks:
            tag = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[c["verdict"]]
            w = ", ".join(f"{k}={_short(v)}" for k, v in sorted(c["witness"].items()))
            lines.append(f"[{tag}] {c['id']} ({c['anchor']})" + (f": {w}" if w else ""))
        lines.append("result: " + ("pass" if self.ok else "fail"))
        return "\n".join(lines) + "\n"


def _plain(x):
    """JSON-friendly copy: tuples to lists, Fractions and other scalars to strings."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _short(v):
    if isinstance(v, list):
        return "[" + ", ".join(_short(x) for x in v) + "]"
    return str(v)


def _timed(fn, *a, **kw):
    t = time.perf_counter()
    out = fn(*a, **kw)
    return out, time.perf_counter() - t


def _mat_rows(m):
    f = m.field
    return [[f.fmt(x) for x in r] for r in m.rows]


# ---------------------------------------------------------------------------
# commands


def cmd_compile(args) -> int:
    loaded = load_input(args.input)
    rep = Report("compile", loaded.digest, {}, timings=args.timings)
    a = loaded.algebra
    rep.info.update(dim=a.dim, field=str(a.field), kind=loaded.kind)
    if loaded.compiled is not None:
        comp = loaded.compiled
        oracle, dt = _timed(ideal_span_quotient_dim, comp.presentation)
        rep.add("oracle_dimension", "rewriting basis vs brute-force span", oracle == a.dim,
                {"compiled": a.dim, "oracle": oracle}, dt)
        rep.info["basis"] = list(a.basis_names)
        rep.info["rules"] = len(comp.rewriting.rules)
    r, dt = _timed(verify_algebra, a)
    rep.add("algebra_axioms", "associativity and unit", r.ok, {"detail": r.detail}, dt)
    sys.stdout.write(rep.render(args.report))
    if args.dump:
        Path(args.dump).write_text(format_algfile(a))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_cover(args) -> int:
    loaded = load_input(args.input)
    a = loaded.algebra
    rep = Report("cover", loaded.digest, {"seed": args.seed, "semilocal": args.semilocal},
                 timings=args.timings)
    r, dt = _timed(verify_algebra, a)
    rep.add("algebra_axioms", "associativity and unit", r.ok, {"detail": r.detail}, dt)
    if not r.ok:
        sys.stdout.write(rep.render(args.report))
        return EXIT_FAIL
    c, dt = _timed(cv.build_cover, a, args.seed)
    t = c.tilde
    simples = simple_modules(t)
    rep.info.update({
        "dim_A": a.dim, "dim_S": c.blocks[1], "dim_Abar": c.blocks[2], "dim_cover": t.dim,
        "simples_of_A": [s.dim for s in c.simples],
        "end_dims": [e.dim for e in c.endomorphisms],
        "simples_of_cover": len(simples), "field": str(a.field),
    })
    s = cv.verify_cover_structure(c)
    rep.add("cover_structure", "cover idempotents and corner", s.ok, {"detail": s.detail}, dt)
    if args.semilocal:
        sc, dt = _timed(cv.build_semilocal_cover, a, c, args.seed)
        rep.info["dim_semilocal"] = sc.wide.dim
        rep.info["basic"] = sc.basic
        rep.add("semilocal_corner", "semilocal cover corner",
                (sc.iso is not None) if sc.basic else None, {"note": sc.note}, dt)
    out = rep.render(args.report)
    if args.report == "text":
        out = f"dim cover = {t.dim}, simples: {len(simples)}\n" + out
    sys.stdout.write(out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def run_verify(a: Algebra, loaded: Loaded, cutoff: int, seed: int, nmax: int, timings=False) -> Report:
    rep = Report("verify", loaded.digest, {"cutoff": cutoff, "seed": seed, "nmax": nmax}, timings=timings)
    r, dt = _timed(verify_algebra, a)
    rep.add("algebra_axioms", "associativity and unit", r.ok,
            {"detail": r.detail, "triple": r.witness}, dt)
    if not r.ok:
        return rep
    if a.radical is not None:
        r, dt = _timed(verify_radical, a)
        rep.add("declared_radical", "radical is a nilpotent ideal", r.ok, {"detail": r.detail}, dt)
        if not r.ok:
            return rep
    comp = loaded.compiled
    if comp is not None:
        oracle, dt = _timed(ideal_span_quotient_dim, comp.presentation)
        rep.add("oracle_dimension", "rewriting basis vs brute-force span", oracle == a.dim,
                {"compiled": a.dim, "oracle": oracle}, dt)
        bad, dt = _timed(lambda: [i for i, rel in enumerate(comp.presentation.relations)
                                  if any(comp.evaluate(rel))])
        rep.add("relations_vanish", "generating relations are zero", not bad, {"nonzero": bad}, dt)
        L = comp.presentation.nilpotency_bound
        pw, dt = _timed(ideal_power, a, comp.arrow_ideal, L)
        rep.add("arrow_ideal_nilpotent", "radical power at the bound vanishes", pw.dim == 0,
                {"bound": L, "dim": pw.dim}, dt)
    j = radical_of_algebra(a)
    rep.info.update(dim_A=a.dim, dim_rad_A=j.dim, field=str(a.field))
    if j.dim == 0:
        te, dt = _timed(cv.trivial_extension_suite, a)
        rep.add("trivial_extension", "rad T(A) = soc T(A) = natural ideal, top iso soc",
                te["ok"], {k: te[k] for k in ("rad_is_natural", "soc_is_natural",
                                              "top_to_soc_invertible", "dim")}, dt)
    c, dt = _timed(cv.build_cover, a, seed)
    s = cv.verify_cover_structure(c)
    rep.info.update(dim_cover=c.tilde.dim, blocks=list(c.blocks))
    rep.add("cover_structure", "cover idempotents, P + Q, corner eAe = A", s.ok, {"detail": s.detail}, dt)
    h, dt = _timed(cv.hom_dims_PQ, c)
    rep.add("hom_PQ", "Hom(P,Q) = S and Hom(Q,Q) = Abar (dimensions)",
            h["hom_PQ"] == h["dim_S"] and h["hom_QQ"] == h["dim_Abar"], h, dt)
    soc, dt = _timed(cv.verify_cover_socle, c)
    rep.add("cover_socle", "soc Q = S + soc Abar; every simple embeds", soc["ok"],
            {k: soc[k] for k in ("soc_Q_dim", "expected_dim", "subspace_equal", "multiplicities",
                                 "expected_multiplicities", "all_embed")}, dt)
    th, dt = _timed(cv.verify_findim_theorem, c, None, cutoff)
    rep.add("findim_cover_op", "fin.dim of the cover's opposite is 0",
            th.cover_op_zero and th.witnesses_ok, {"flag": th.cover_op_flag}, dt)
    # the next three read off the same run
    rep.add("pd_preserved", "pushforward keeps projective dimension",
            all(b == p for _, b, p in th.pd_rows if p != "skipped"),
            {"rows": [list(x) for x in th.pd_rows]}, dt)
    rep.add("asymmetry", "base findim vs cover-op findim", th.cover_op_zero,
            {"base_findim_zero": th.base_zero, "cover_op_findim_zero": th.cover_op_zero,
             "line": ("base findim = 0" if th.base_zero else "base findim != 0")
             + (", cover-op findim = 0" if th.cover_op_zero else ", cover-op findim != 0")}, dt)
    rep.add("big_findim_base", "Fin.dim reporting rule (base)", True, {"flag": th.base_flag}, dt)
    rp, dt = _timed(cv.verify_radical_powers, c, nmax)
    rep.add("radical_powers", "(rad cover)^n = (rad A)^n for n >= 2", rp.powers_ok,
            {"dims": [list(x) for x in rp.power_dims]}, dt)
    rep.add("top_vs_soc_Q", "dim top cover = dim soc Q, same constituents", rp.top_soc_ok,
            {"top_dim": rp.top_dim, "soc_Q_dim": rp.soc_Q_dim,
             "top_multiplicities": rp.top_multiplicities, "soc_multiplicities": rp.soc_multiplicities}, dt)
    return rep


def cmd_verify(args) -> int:
    loaded = load_input(args.input)
    rep = run_verify(loaded.algebra, loaded, args.cutoff, args.seed, args.nmax, args.timings)
    sys.stdout.write(rep.render(args.report))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_kk(args) -> int:
    if args.n < 1:
        raise InputError("--n must be at least 1")
    try:
        field = Field(args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(format_presentation(kk_presentation(args.n, field)))
    return EXIT_OK


def cmd_resolve(args) -> int:
    loaded = load_input(args.input)
    a = loaded.algebra
    rep = Report("resolve", loaded.digest, {"module": args.module, "cutoff": args.cutoff},
                 timings=args.timings)
    r, dt = _timed(verify_algebra, a)
    if not r.ok:
        rep.add("algebra_axioms", "associativity and unit", False, {"detail": r.detail}, dt)
        sys.stdout.write(rep.render(args.report))
        return EXIT_FAIL
    if args.module.lstrip("-").isdigit():
        simples = simple_modules(a, args.seed)
        k = int(args.module)
        if not 0 <= k < len(simples):
            raise InputError(f"simple index {k} out of range (algebra has {len(simples)} simples)")
        m = simples[k]
    else:
        try:
            m = parse_modfile(Path(args.module).read_text(), a)
        except OSError as exc:
            raise InputError(f"cannot read {args.module}: {exc.strerror}") from None
        except FormatError as exc:
            raise InputError(f"{args.module}: {exc}") from None
        vm = verify_module(m)
        if not vm.ok:
            raise InputError(f"{args.module}: {vm.detail}")
    res, dt = _timed(minimal_resolution, m, args.cutoff)
    v = verify_resolution(res)
    rep.info.update(module_dim=m.dim, verdict=str(res.verdict()), term_dims=res.term_dims(),
                    summands=[list(t.summands) for t in res.terms], syzygy_dims=res.syzygy_dims,
                    note=res.note())
    rep.add("resolution", "minimal projective resolution", v.ok, {"detail": v.detail}, dt)
    sys.stdout.write(rep.render(args.report))
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="asymcover", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"asymcover {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("input", help="quiverfile, algfile, or builtin:NAME")
        p.add_argument("--report", choices=("text", "json"), default="text")
        p.add_argument("--timings", action="store_true", help="include runtimes (non-deterministic)")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compile", help="parse and compile, cross-checked by the span oracle")
    common(p, seed=False)
    p.add_argument("--dump", help="write the compiled algebra as an algfile")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("cover", help="build the cover (and optionally the semilocal variant)")
    common(p)
    p.add_argument("--semilocal", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="run the full check battery")
    common(p)
    p.add_argument("--cutoff", type=int, default=4)
    p.add_argument("--nmax", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kk", help="print the truncated KK presentation as a quiverfile")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--field", type=int, default=5)
    p.set_defaults(func=cmd_kk)

    p = sub.add_parser("resolve", help="minimal projective resolution of a module")
    common(p)
    p.add_argument("--module", default="0", help="simple index or modfile path")
    p.add_argument("--cutoff", type=int, default=5)
    p.set_defaults(func=cmd_resolve)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CapabilityError, SplittingError) as exc:
        print(f"capability: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (ConfluenceError, AlgebraError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
