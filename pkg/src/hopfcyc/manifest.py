"""JSON manifests: Hopf algebras, pairs, R-matrices and module algebras as sparse lists.

A sparse tensor is a list of entries ``[row indices..., col indices..., "scalar"]``
(row multi-index first, then the column multi-index).  Scalars are strings
so exactness survives a round trip; integers are also accepted.  See
``docs/formats.md`` for the full schema.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .catalog import (catalog_algebras, catalog_r_matrices, cyclic_group, group_characters,
                      standard_pairs, taft_characters, taft_group_likes)
from .charmap import ModuleAlgebra, ModuleAlgebraError, catalog_module_algebras
from .fields import RATIONALS, FieldError, FieldSpec, format_scalar, parse_scalar
from .hopf import HopfAlgebra, HopfStructureError, MalformedPair, ModularPair, modular_pair
from .tensormap import TensorMap, flatten, unflatten

SCHEMA = "hopfcyc-manifest/1"


class ManifestError(ValueError):
    """Input error; ``kind`` is one of parse, schema, field, scalar, dimension, reference, structure."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind} error: {message}")
        self.kind = kind
        self.message = message


@dataclass
class ModuleEntry:
    hopf: str
    algebra: ModuleAlgebra
    traces: dict
    pair: str


@dataclass
class Manifest:
    field: FieldSpec
    hopf: dict = field(default_factory=dict)
    pairs: dict = field(default_factory=dict)          # hopf name -> {pair name: ModularPair}
    characters: dict = field(default_factory=dict)     # hopf name -> {name: covector}
    group_likes: dict = field(default_factory=dict)    # hopf name -> {name: vector}
    rmatrices: dict = field(default_factory=dict)      # hopf name -> {name: element of H (x) H}
    modules: dict = field(default_factory=dict)        # name -> ModuleEntry

    def get_hopf(self, name: str) -> HopfAlgebra:
        if name not in self.hopf:
            raise ManifestError("reference", f"no Hopf algebra named {name!r} (have {sorted(self.hopf)})")
        return self.hopf[name]

    def get_pair(self, hname: str, pname: str) -> ModularPair:
        pairs = self.pairs.get(hname, {})
        if pname not in pairs:
            raise ManifestError("reference", f"{hname} has no pair named {pname!r} (have {sorted(pairs)})")
        return pairs[pname]

    def get_rmatrix(self, hname: str, rname: str) -> TensorMap:
        rs = self.rmatrices.get(hname, {})
        if rname not in rs:
            raise ManifestError("reference", f"{hname} has no R-matrix named {rname!r} (have {sorted(rs)})")
        return rs[rname]

    def get_module(self, name: str) -> ModuleEntry:
        if name not in self.modules:
            raise ManifestError("reference", f"no module algebra named {name!r} (have {sorted(self.modules)})")
        return self.modules[name]


# ------------------------------------------------------------------ parsing

def _field_from(desc, where="field") -> FieldSpec:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ManifestError("schema", f"{where}: expected an object with a 'kind'")
    try:
        if desc["kind"] == "rationals":
            return RATIONALS
        if desc["kind"] == "extension":
            mod = [parse_scalar(c) if isinstance(c, str) else c for c in desc["modulus"]]
            check = desc.get("irreducibility", "checked") != "unchecked"
            fld = FieldSpec.extension(mod, desc.get("generator", "z"), check_irreducible=check)
            if desc.get("irreducibility") == "known":
                fld = FieldSpec("extension", fld.modulus, fld.generator, "known")
            return fld
    except (FieldError, KeyError, TypeError) as e:
        raise ManifestError("field", f"{where}: {e}") from None
    raise ManifestError("field", f"{where}: unknown field kind {desc['kind']!r}")


def _tensor(fld, obj, dom, cod, where) -> TensorMap:
    if not isinstance(obj, list):
        raise ManifestError("schema", f"{where}: expected a list of entries")
    nr, nc = len(cod), len(dom)
    cols: dict = {}
    for k, e in enumerate(obj):
        here = f"{where}[{k}]"
        if not isinstance(e, list) or len(e) != nr + nc + 1:
            raise ManifestError("dimension", f"{here}: entry {e!r} must have {nr + nc} indices and a scalar")
        idx, s = e[:-1], e[-1]
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in idx):
            raise ManifestError("schema", f"{here}: indices must be integers, got {idx!r}")
        for i, (v, n) in enumerate(zip(idx, tuple(cod) + tuple(dom))):
            if not 0 <= v < n:
                raise ManifestError("dimension", f"{here}: index {v} at position {i} out of range for dimension {n}"
                                    f" in entry {e!r}")
        if isinstance(s, bool) or not isinstance(s, (str, int)):
            raise ManifestError("scalar", f"{here}: scalar must be a string, got {s!r}")
        try:
            val = parse_scalar(s, fld) if isinstance(s, str) else s
        except FieldError as err:
            raise ManifestError("scalar", f"{here}: {err}") from None
        r, c = flatten(idx[:nr], cod), flatten(idx[nr:], dom)
        col = cols.setdefault(c, {})
        col[r] = col.get(r, 0) + val
    return TensorMap(fld, tuple(dom), tuple(cod), cols)


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ManifestError("schema", f"{where}: missing {key!r}")
    return obj[key]


def _basis(obj, where) -> list:
    b = _require(obj, "basis", where)
    if not isinstance(b, list) or not b or not all(isinstance(x, str) for x in b):
        raise ManifestError("schema", f"{where}.basis: expected a nonempty list of labels")
    if len(set(b)) != len(b):
        raise ManifestError("schema", f"{where}.basis: duplicate labels")
    return b


def _hopf_from(fld, name, obj) -> HopfAlgebra:
    where = f"hopf.{name}"
    labels = _basis(obj, where)
    d = len(labels)
    maps = {}
    for key, dom, cod in (("mult", (d, d), (d,)), ("unit", (), (d,)), ("comult", (d,), (d, d)),
                          ("counit", (d,), ()), ("antipode", (d,), (d,))):
        maps[key] = _tensor(fld, _require(obj, key, where), dom, cod, f"{where}.{key}")
    try:
        return HopfAlgebra(fld, d, tuple(labels), name=name, **maps)
    except HopfStructureError as e:
        raise ManifestError("dimension", f"{where}: {e}") from None


def _named(fld, obj, where, dom, cod) -> dict:
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise ManifestError("schema", f"{where}: expected an object")
    return {k: _tensor(fld, v, dom, cod, f"{where}.{k}") for k, v in obj.items()}


def from_dict(doc) -> Manifest:
    if not isinstance(doc, dict):
        raise ManifestError("schema", "top level must be an object")
    if doc.get("schema") != SCHEMA:
        raise ManifestError("schema", f"expected schema {SCHEMA!r}, got {doc.get('schema')!r}")
    fld = _field_from(doc.get("field", {"kind": "rationals"}))
    man = Manifest(fld)
    for name, obj in (doc.get("hopf") or {}).items():
        H = _hopf_from(fld, name, obj)
        d = H.dim
        man.hopf[name] = H
        where = f"hopf.{name}"
        chars = _named(fld, obj.get("characters"), f"{where}.characters", (d,), ())
        gls = _named(fld, obj.get("group_likes"), f"{where}.group_likes", (), (d,))
        man.characters[name], man.group_likes[name] = chars, gls
        man.rmatrices[name] = _named(fld, obj.get("rmatrices"), f"{where}.rmatrices", (), (d, d))
        pairs = {}
        for pname, p in (obj.get("pairs") or {}).items():
            pw = f"{where}.pairs.{pname}"
            parts = {}
            for key, table, dom, cod in (("delta", chars, (d,), ()), ("sigma", gls, (), (d,))):
                ref = _require(p, key, pw)
                if isinstance(ref, str):
                    if ref not in table:
                        raise ManifestError("reference", f"{pw}.{key}: dangling reference {ref!r}")
                    parts[key] = table[ref]
                else:
                    parts[key] = _tensor(fld, ref, dom, cod, f"{pw}.{key}")
            try:
                pairs[pname] = modular_pair(H, parts["delta"], parts["sigma"], pname)
            except MalformedPair as e:
                raise ManifestError("structure", f"{pw}: {e}") from None
        man.pairs[name] = pairs
    for name, obj in (doc.get("module_algebras") or {}).items():
        where = f"module_algebras.{name}"
        hname = _require(obj, "hopf", where)
        if hname not in man.hopf:
            raise ManifestError("reference", f"{where}.hopf: dangling reference {hname!r}")
        H = man.hopf[hname]
        labels = _basis(obj, where)
        m = len(labels)
        try:
            M = ModuleAlgebra(
                H, m, tuple(labels),
                mult=_tensor(fld, _require(obj, "mult", where), (m, m), (m,), f"{where}.mult"),
                unit=_tensor(fld, _require(obj, "unit", where), (), (m,), f"{where}.unit"),
                action=_tensor(fld, _require(obj, "action", where), (H.dim, m), (m,), f"{where}.action"),
                name=name,
            )
        except ModuleAlgebraError as e:
            raise ManifestError("dimension", f"{where}: {e}") from None
        traces = _named(fld, obj.get("traces"), f"{where}.traces", (m,), ())
        pname = obj.get("pair", "eps_one")
        if pname not in man.pairs[hname]:
            raise ManifestError("reference", f"{where}.pair: dangling reference {pname!r}")
        man.modules[name] = ModuleEntry(hname, M, traces, pname)
    return man


def loads(text: str) -> Manifest:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ManifestError("parse", f"line {e.lineno} column {e.colno}: {e.msg}") from None
    return from_dict(doc)


def load(path) -> Manifest:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ManifestError("parse", f"cannot read {path}: {e.strerror}") from None
    return loads(text)


# ---------------------------------------------------------------- exporting

def tensor_entries(t: TensorMap) -> list:
    out = []
    for r, c, v in t.entries():
        out.append(list(unflatten(r, t.cod)) + list(unflatten(c, t.dom)) + [format_scalar(v, t.field)])
    return out


def _named_out(d: dict) -> dict:
    return {k: tensor_entries(v) for k, v in d.items()}


def to_dict(man: Manifest) -> dict:
    doc = {"schema": SCHEMA, "field": man.field.describe(), "hopf": {}, "module_algebras": {}}
    for name, H in man.hopf.items():
        obj = {"basis": list(H.basis_labels)}
        for key in ("mult", "unit", "comult", "counit", "antipode"):
            obj[key] = tensor_entries(getattr(H, key))
        obj["characters"] = _named_out(man.characters.get(name, {}))
        obj["group_likes"] = _named_out(man.group_likes.get(name, {}))
        obj["pairs"] = {pn: {"delta": tensor_entries(p.delta), "sigma": tensor_entries(p.sigma)}
                        for pn, p in man.pairs.get(name, {}).items()}
        obj["rmatrices"] = _named_out(man.rmatrices.get(name, {}))
        doc["hopf"][name] = obj
    for name, e in man.modules.items():
        M = e.algebra
        doc["module_algebras"][name] = {
            "hopf": e.hopf, "basis": list(M.basis_labels),
            "mult": tensor_entries(M.mult), "unit": tensor_entries(M.unit),
            "action": tensor_entries(M.action), "pair": e.pair, "traces": _named_out(e.traces),
        }
    return doc


def _compact(obj, depth: int = 0) -> str:
    """JSON with one line per innermost list, so fixtures diff entry by entry."""
    pad, inner = " " * depth, " " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_compact(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(x, (list, dict)) for x in obj):
        return "[\n" + ",\n".join(inner + _compact(x, depth + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(man: Manifest) -> str:
    return _compact(to_dict(man)) + "\n"


# ------------------------------------------------------------------ catalog

def catalog_manifest(fld_name: str = "rationals") -> Manifest:
    """The built-in catalog as a manifest."""
    algebras = catalog_algebras(fld_name)
    fld = next(iter(algebras.values())).field
    man = Manifest(fld)
    for name, H in algebras.items():
        man.hopf[name] = H
        man.pairs[name] = standard_pairs(H)
        man.rmatrices[name] = catalog_r_matrices(H)
        if name.startswith("Taft"):
            man.characters[name], man.group_likes[name] = taft_characters(H), taft_group_likes(H)
        elif name in ("Z2", "Z3", "Z3_cyc") and (name != "Z3" or fld.degree > 1):
            G = cyclic_group(H.dim)
            man.characters[name] = group_characters(G, fld)
            man.group_likes[name] = {l: H.vector({l: 1}) for l in H.basis_labels}
        else:
            man.characters[name] = {"eps": H.counit}
            man.group_likes[name] = {"1": H.unit}
    for name, (hname, M, traces, pname) in catalog_module_algebras(algebras).items():
        man.modules[name] = ModuleEntry(hname, M, traces, pname)
    return man


def manifests_equal(a: Manifest, b: Manifest) -> bool:
    if a.field != b.field or list(a.hopf) != list(b.hopf) or list(a.modules) != list(b.modules):
        return False
    for n in a.hopf:
        if not a.hopf[n].same_structure(b.hopf[n]) or a.hopf[n].basis_labels != b.hopf[n].basis_labels:
            return False
        pa, pb = a.pairs.get(n, {}), b.pairs.get(n, {})
        if list(pa) != list(pb) or any(pa[k].delta != pb[k].delta or pa[k].sigma != pb[k].sigma for k in pa):
            return False
        for table in ("characters", "group_likes", "rmatrices"):
            if getattr(a, table).get(n, {}) != getattr(b, table).get(n, {}):
                return False
    for n in a.modules:
        x, y = a.modules[n], b.modules[n]
        if (x.hopf, x.pair, x.traces) != (y.hopf, y.pair, y.traces):
            return False
        if (x.algebra.mult, x.algebra.unit, x.algebra.action) != (y.algebra.mult, y.algebra.unit, y.algebra.action):
            return False
    return True
