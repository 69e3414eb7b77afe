"""Command-line front end: ``hopfcyc <command> [options]``.

A JSON report goes to stdout and a short human summary to stderr.  Exit
codes: 0 all checks pass, 1 a check failed, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import charmap, cyclic, hopf, manifest, quasi
from .fields import format_scalar
from .report import Report

REPORT_SCHEMA = "hopfcyc-report/1"
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

COMMANDS = ("validate", "pair-check", "pair-search", "cyclic-verify", "cohomology", "dual", "drinfeld",
            "double-cover", "trace-space", "charmap-verify", "export-catalog")


class InputError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


# ------------------------------------------------------------------ helpers

class Context:
    """Resolves object names against a manifest file or the built-in catalog."""

    def __init__(self, args):
        self.args = args
        self._cache: dict = {}
        if args.manifest:
            self._cache["file"] = manifest.load(args.manifest)
            self.sources = ["file"]
        elif args.field:
            self.sources = [args.field]
        else:
            self.sources = ["rationals", "cyclotomic3"]

    def _man(self, src) -> manifest.Manifest:
        if src not in self._cache:
            try:
                self._cache[src] = manifest.catalog_manifest(src)
            except ValueError as e:
                raise InputError("field", str(e)) from None
        return self._cache[src]

    def find(self, attr: str, name: str):
        for src in self.sources:
            man = self._man(src)
            if name in getattr(man, attr):
                return man
        raise InputError("reference", f"unknown {'module algebra' if attr == 'modules' else 'object'} {name!r}")

    def hopf(self):
        name = self.need("object")
        man = self.find("hopf", name)
        return man, man.hopf[name]

    def pair(self, man, H):
        return man.get_pair(H.name, self.need("pair"))

    def need(self, opt: str):
        val = getattr(self.args, opt.replace("-", "_"))
        if val is None:
            raise InputError("usage", f"--{opt} is required for {self.args.command}")
        return val


def _pair_data(H, pair) -> dict:
    return {"name": pair.name, "delta": [format_scalar(v, H.field) for v in _covector_list(H, pair.delta)],
            "sigma": H.format_vector(pair.sigma), "normalized": pair.normalized,
            "in_involution": pair.in_involution}


def _covector_list(H, f) -> list:
    return [f.cols.get(i, {}).get(0, 0) for i in range(H.dim)]


def _write(args, text: str, rep: Report):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.data["output"] = args.output


# ----------------------------------------------------------------- commands

def cmd_validate(ctx, rep):
    if ctx.args.module:
        man = ctx.find("modules", ctx.args.module)
        rep.merge(charmap.validate_action(man.modules[ctx.args.module].algebra))
        return
    man, H = ctx.hopf()
    rep.merge(hopf.validate_hopf(H), "axioms")
    for cname, delta in man.characters.get(H.name, {}).items():
        rep.merge(hopf.check_twisted_antipode_properties(H, delta), f"twisted antipode [{cname}]")
    rep.data["dim"] = H.dim
    rep.data["cocommutative"] = hopf.is_cocommutative(H)
    rep.data["commutative"] = hopf.is_commutative(H)
    S2 = H.antipode @ H.antipode
    rep.data["antipode squared is identity"] = S2 == H.id


def cmd_pair_check(ctx, rep):
    man, H = ctx.hopf()
    pair = ctx.pair(man, H)
    rep.merge(hopf.pair_report(H, pair.delta, pair.sigma), "pair")
    rep.data["pair"] = _pair_data(H, pair)


def cmd_pair_search(ctx, rep):
    man, H = ctx.hopf()
    chars, gls = man.characters.get(H.name, {}), man.group_likes.get(H.name, {})
    found = hopf.search_modular_pairs(H, chars, gls)
    rep.data["grid"] = {"characters": list(chars), "group_likes": list(gls)}
    rep.data["found"] = [{"delta": dn, "sigma": sn} for dn, sn, _ in found]
    for dn, sn, pair in found:
        rep.check(f"({dn}, {sn}) in involution", hopf.is_modular_pair_in_involution(H, pair))


def cmd_cyclic_verify(ctx, rep):
    man, H = ctx.hopf()
    pair = ctx.pair(man, H)
    a = ctx.args
    guard = not a.no_involution_guard
    if guard and not rep.check("pair in involution", pair.normalized and pair.in_involution):
        rep.data["refused"] = "pair is not a modular pair in involution (use --no-involution-guard to force)"
        return
    C = cyclic.CocyclicModule(H, pair, require_involution=guard, max_space=a.max_space)
    L = a.max_level if a.max_level is not None else 3
    rep.merge(C.verify_cocyclic(L), "cocyclic")
    rep.data["level dims"] = {n: H.dim ** n for n in range(L + 1)}


def cmd_cohomology(ctx, rep):
    man, H = ctx.hopf()
    pair = man.get_pair(H.name, ctx.args.pair or "eps_one")
    a = ctx.args
    guard = not a.no_involution_guard
    if guard and not rep.check("pair in involution", pair.normalized and pair.in_involution):
        return
    C = cyclic.CocyclicModule(H, pair, require_involution=guard, max_space=a.max_space)
    D = a.max_degree if a.max_degree is not None else 2
    C._guard(D + 1)
    rep.merge(C.bicomplex_report(D + 1), "bicomplex")
    table = C.cohomology_dims(D)
    rep.data["table"] = table
    rep.data["HH"] = [r["HH"] for r in table]
    rep.data["HC"] = [r["HC"] for r in table]


def cmd_dual(ctx, rep):
    man, H = ctx.hopf()
    Hd = hopf.dual(H)
    rep.merge(hopf.validate_hopf(Hd), "dual axioms")
    out = manifest.Manifest(H.field)
    out.hopf[Hd.name] = Hd
    out.pairs[Hd.name] = {}
    pairs = [ctx.pair(man, H)] if ctx.args.pair else list(man.pairs.get(H.name, {}).values())
    for p in pairs:
        _, new, prep = hopf.dual_pair(H, p)
        rep.merge(prep, f"dual transport [{p.name}]")
        out.pairs[Hd.name][new.name] = new
    rep.data["dual"] = Hd.name
    _write(ctx.args, manifest.dumps(out), rep)


def _rmatrix(ctx, man, H):
    return man.get_rmatrix(H.name, ctx.need("rmatrix"))


def cmd_drinfeld(ctx, rep):
    man, H = ctx.hopf()
    R = _rmatrix(ctx, man, H)
    qrep, qs = quasi.check_quasitriangular(H, R)
    if qs is None:
        rep.merge(qrep)
        return
    u, drep = quasi.drinfeld_element(H, R)
    rep.merge(drep, "drinfeld")
    rep.data["u"] = H.format_vector(u)


def cmd_double_cover(ctx, rep):
    man, H = ctx.hopf()
    R = _rmatrix(ctx, man, H)
    qrep, qs = quasi.check_quasitriangular(H, R)
    if qs is None:
        rep.merge(qrep)
        return
    Ht, sigma, drep = quasi.double_cover(H, R)
    rep.merge(drep, "double cover")
    if Ht is None or sigma is None:
        return
    pair = quasi.canonical_pair(Ht, sigma)
    rep.check("(eps, sigma) is a modular pair in involution", hopf.is_modular_pair_in_involution(Ht, pair))
    rep.data["dim"] = Ht.dim
    rep.data["sigma"] = Ht.format_vector(sigma)
    out = manifest.Manifest(Ht.field)
    out.hopf[Ht.name] = Ht
    out.pairs[Ht.name] = {pair.name: pair}
    _write(ctx.args, manifest.dumps(out), rep)


def _module(ctx):
    name = ctx.need("module")
    man = ctx.find("modules", name)
    entry = man.modules[name]
    H = man.hopf[entry.hopf]
    pair = man.get_pair(entry.hopf, ctx.args.pair or entry.pair)
    return man, entry, H, pair


def cmd_trace_space(ctx, rep):
    _, entry, H, pair = _module(ctx)
    M = entry.algebra
    rep.merge(charmap.validate_action(M))
    basis = charmap.sigma_trace_space(M, pair.sigma, pair.delta)
    rep.data["dimension"] = len(basis)
    rep.data["basis"] = [[format_scalar(t.cols.get(i, {}).get(0, 0), M.field) for i in range(M.dim)]
                         for t in basis]
    for k, t in enumerate(basis):
        rep.merge(charmap.trace_report(M, t, pair), f"basis vector {k}")
    for tname, t in entry.traces.items():
        rep.data[f"trace {tname} in space"] = (charmap.is_sigma_trace(M, t, pair.sigma)
                                                and charmap.is_delta_invariant(M, t, pair.delta))


def cmd_charmap_verify(ctx, rep):
    _, entry, H, pair = _module(ctx)
    tname = ctx.need("trace")
    if tname not in entry.traces:
        raise InputError("reference", f"module {entry.algebra.name!r} has no trace {tname!r}")
    L = ctx.args.max_level if ctx.args.max_level is not None else 3
    C = cyclic.CocyclicModule(H, pair, require_involution=False, max_space=ctx.args.max_space)
    C._guard(L)
    if entry.algebra.dim ** (L + 1) > ctx.args.max_space:
        raise cyclic.LevelCapExceeded(f"cochains at level {L} exceed cap {ctx.args.max_space}")
    rep.merge(charmap.verify_characteristic_map(entry.algebra, entry.traces[tname], pair, L,
                                                max_space=ctx.args.max_space), "charmap")


def cmd_export_catalog(ctx, rep):
    fld = ctx.args.field or "rationals"
    try:
        man = manifest.catalog_manifest(fld)
    except ValueError as e:
        raise InputError("field", str(e)) from None
    text = manifest.dumps(man)
    rep.check("round trip", manifest.manifests_equal(man, manifest.loads(text)))
    rep.data["objects"] = list(man.hopf)
    rep.data["module_algebras"] = list(man.modules)
    if ctx.args.output:
        _write(ctx.args, text, rep)
    else:
        rep.data["manifest"] = manifest.to_dict(man)


HANDLERS = {
    "validate": cmd_validate, "pair-check": cmd_pair_check, "pair-search": cmd_pair_search,
    "cyclic-verify": cmd_cyclic_verify, "cohomology": cmd_cohomology, "dual": cmd_dual,
    "drinfeld": cmd_drinfeld, "double-cover": cmd_double_cover, "trace-space": cmd_trace_space,
    "charmap-verify": cmd_charmap_verify, "export-catalog": cmd_export_catalog,
}


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcyc", description="Exact checks for Hopf-cyclic structures.")
    p.add_argument("command", help=", ".join(COMMANDS))
    p.add_argument("--manifest", help="JSON manifest (default: built-in catalog)")
    p.add_argument("--field", help="catalog field: rationals or cyclotomic3")
    p.add_argument("--object", help="Hopf algebra name")
    p.add_argument("--pair", help="modular pair name")
    p.add_argument("--rmatrix", help="R-matrix name")
    p.add_argument("--module", help="module algebra name")
    p.add_argument("--trace", help="trace name on the module algebra")
    p.add_argument("--max-level", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--max-space", type=int, default=cyclic.DEFAULT_MAX_SPACE,
                   help="largest level dimension to materialize (default %(default)s)")
    p.add_argument("--no-involution-guard", action="store_true",
                   help="build the cyclic operators even if the pair is not in involution")
    p.add_argument("--output", help="write a manifest (dual, double-cover, export-catalog)")
    p.add_argument("--quiet", action="store_true", help="no summary on stderr")
    return p


def run(argv=None) -> tuple[dict, int]:
    """Parse ``argv``, run one command and return ``(report document, exit code)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        doc = {"schema": REPORT_SCHEMA, "command": None, "ok": False,
               "error": {"kind": "usage", "message": "bad command line"}, "exit_code": EXIT_INPUT}
        return doc, EXIT_INPUT if e.code else EXIT_OK
    doc = {"schema": REPORT_SCHEMA, "command": args.command,
           "arguments": {k: v for k, v in sorted(vars(args).items()) if k != "command" and v not in (None, False)}}
    t0 = time.perf_counter()
    rep = Report(args.command)
    code = EXIT_OK
    try:
        if args.command not in HANDLERS:
            raise InputError("usage", f"unknown command {args.command!r}; expected one of {', '.join(COMMANDS)}")
        if args.max_space < 1:
            raise InputError("usage", "--max-space must be positive")
        ctx = Context(args)
        HANDLERS[args.command](ctx, rep)
        code = EXIT_OK if rep.ok else EXIT_FAIL
    except (InputError, manifest.ManifestError) as e:
        doc["error"] = {"kind": e.kind, "message": getattr(e, "message", str(e))}
        code = EXIT_INPUT
    except (hopf.MalformedPair, hopf.HopfStructureError, charmap.ModuleAlgebraError, charmap.InvalidTrace) as e:
        doc["error"] = {"kind": "structure", "message": str(e)}
        code = EXIT_INPUT
    except cyclic.LevelCapExceeded as e:
        doc["error"] = {"kind": "resource", "message": str(e)}
        code = EXIT_CAP
    doc["ok"] = code == EXIT_OK
    doc["checks"] = rep.checks
    doc["witnesses"] = rep.witnesses
    doc["data"] = rep.data
    doc["exit_code"] = code
    doc["timings"] = {"total_seconds": round(time.perf_counter() - t0, 6)}
    return doc, code


def _summary(doc: dict) -> str:
    lines = [f"hopfcyc {doc.get('command')}: {'PASS' if doc['ok'] else 'FAIL'} (exit {doc['exit_code']})"]
    if "error" in doc:
        lines.append(f"  {doc['error']['kind']} error: {doc['error']['message']}")
    checks = doc.get("checks", {})
    failed = [n for n, ok in checks.items() if not ok]
    if checks:
        lines.append(f"  {len(checks) - len(failed)}/{len(checks)} checks passed")
    for n in failed[:20]:
        w = doc["witnesses"].get(n)
        lines.append(f"  FAILED {n}" + (f" (witness {w})" if w is not None else ""))
    for k in ("HH", "HC", "dimension", "found"):
        if k in doc.get("data", {}):
            lines.append(f"  {k}: {doc['data'][k]}")
    return "\n".join(lines)


def main(argv=None) -> int:
    doc, code = run(argv)
    json.dump(doc, sys.stdout, indent=1, ensure_ascii=False, default=str)
    sys.stdout.write("\n")
    if not (argv and "--quiet" in argv) and "--quiet" not in sys.argv[1:]:
        print(_summary(doc), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
