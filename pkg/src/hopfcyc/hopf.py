"""Finite-dimensional Hopf algebras given by structure constants.

A Hopf algebra of dimension ``d`` is five :class:`TensorMap` objects with
leg dimension ``d``::

    mult      (d, d) -> (d,)      unit     () -> (d,)
    comult    (d,)   -> (d, d)    counit   (d,) -> ()
    antipode  (d,)   -> (d,)

Elements are vectors (maps out of the ground field); characters are
covectors (maps into it).  The functions here work on that representation
and report every identity as an exact equality of sparse maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .fields import FieldSpec
from .linalg import solve
from .report import Report
from .tensormap import TensorMap, compose, tensor, unflatten


class HopfStructureError(ValueError):
    """Structure tensors with inconsistent shapes or fields."""


class MalformedPair(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    field: FieldSpec
    dim: int
    basis_labels: tuple
    mult: TensorMap
    unit: TensorMap
    comult: TensorMap
    counit: TensorMap
    antipode: TensorMap
    name: str = ""

    def __post_init__(self):
        d = self.dim
        if d < 1:
            raise HopfStructureError("dimension must be >= 1")
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        if len(self.basis_labels) != d:
            raise HopfStructureError(f"{len(self.basis_labels)} basis labels for dimension {d}")
        shapes = {
            "mult": ((d, d), (d,)),
            "unit": ((), (d,)),
            "comult": ((d,), (d, d)),
            "counit": ((d,), ()),
            "antipode": ((d,), (d,)),
        }
        for name, (dom, cod) in shapes.items():
            m = getattr(self, name)
            if m.dom != dom or m.cod != cod:
                raise HopfStructureError(f"{name} has shape {m.dom}->{m.cod}, expected {dom}->{cod}")
            if m.field != self.field:
                raise HopfStructureError(f"{name} is over a different field")

    def structure(self) -> tuple:
        return (self.mult, self.unit, self.comult, self.counit, self.antipode)

    def same_structure(self, other: "HopfAlgebra") -> bool:
        return self.field == other.field and self.structure() == other.structure()

    # -- shorthand maps -----------------------------------------------
    @cached_property
    def id(self) -> TensorMap:
        return TensorMap.identity(self.field, (self.dim,))

    @cached_property
    def swap(self) -> TensorMap:
        return TensorMap.permutation(self.field, (self.dim, self.dim), (1, 0))

    @cached_property
    def one(self) -> TensorMap:
        return self.unit

    def vector(self, coeffs: Mapping) -> TensorMap:
        """Element of H from ``{basis index or label: scalar}``."""
        out = {}
        for k, v in coeffs.items():
            i = self.basis_labels.index(k) if isinstance(k, str) else k
            out[(i,)] = v
        return TensorMap.vector(self.field, (self.dim,), out)

    def basis_vector(self, i) -> TensorMap:
        return self.vector({i: 1})

    def covector(self, coeffs: Mapping) -> TensorMap:
        out = {}
        for k, v in coeffs.items():
            i = self.basis_labels.index(k) if isinstance(k, str) else k
            out[(i,)] = v
        return TensorMap.covector(self.field, (self.dim,), out)

    def label(self, idx) -> str:
        if isinstance(idx, int):
            idx = (idx,)
        if not idx:
            return "1"
        return "⊗".join(self.basis_labels[i] for i in idx)

    def format_vector(self, v: TensorMap) -> str:
        terms = []
        for idx, c in sorted(v.as_vector().items()):
            terms.append(f"({self.field.format(c)})*{self.label(idx)}")
        return " + ".join(terms) if terms else "0"

    # -- multiplication helpers ----------------------------------------
    def left_mult(self, s: TensorMap) -> TensorMap:
        """h -> s h."""
        return compose(self.mult, tensor(s, self.id))

    def right_mult(self, s: TensorMap) -> TensorMap:
        """h -> h s."""
        return compose(self.mult, tensor(self.id, s))

    def multiply(self, a: TensorMap, b: TensorMap) -> TensorMap:
        return compose(self.mult, tensor(a, b))

    def tensor_mult(self, n: int) -> TensorMap:
        """Componentwise product on H^(x)n: (a_1..a_n, b_1..b_n) -> (a_1 b_1, ..., a_n b_n)."""
        d = self.dim
        perm = tuple(x for k in range(n) for x in (k, n + k))
        shuffle = TensorMap.permutation(self.field, (d,) * (2 * n), perm)
        mu = TensorMap.identity(self.field, ())
        for _ in range(n):
            mu = tensor(mu, self.mult)
        return compose(mu, shuffle)

    def multiply_n(self, a: TensorMap, b: TensorMap) -> TensorMap:
        """Product of two elements of H^(x)n, computed entrywise."""
        n = len(a.cod)
        out: dict = {}
        mt = self.mult_table
        for ia, ca in a.as_vector().items():
            for ib, cb in b.as_vector().items():
                terms = {(): ca * cb}
                for x, y in zip(ia, ib):
                    prod = mt.get((x, y))
                    if not prod:
                        terms = {}
                        break
                    terms = {k + (z,): v * w for k, v in terms.items() for z, w in prod.items()}
                for k, v in terms.items():
                    out[k] = out.get(k, 0) + v
        return TensorMap.vector(self.field, (self.dim,) * n, out)

    def inverse(self, s: TensorMap):
        """Two-sided inverse of an element, or None when it is not invertible."""
        x = solve(self.left_mult(s), self.unit)
        if x is None or self.multiply(x, s) != self.unit:
            return None
        return x

    def iterated_comult(self, k: int) -> TensorMap:
        """Delta^(k-1): H -> H^(x)k (identity for k == 1)."""
        out = self.id
        for j in range(1, k):
            out = compose(tensor(self.comult, TensorMap.identity(self.field, (self.dim,) * (j - 1))), out)
        return out

    # -- sparse tables --------------------------------------------------
    @cached_property
    def mult_table(self) -> dict:
        d = self.dim
        return {divmod(c, d): dict(col) for c, col in self.mult.cols.items()}

    @cached_property
    def comult_table(self) -> list:
        d = self.dim
        return [{divmod(r, d): v for r, v in self.comult.cols.get(i, {}).items()} for i in range(d)]

    @cached_property
    def antipode_table(self) -> list:
        return [dict(self.antipode.cols.get(i, {})) for i in range(self.dim)]

    @cached_property
    def counit_values(self) -> list:
        return [self.counit.cols.get(i, {}).get(0, 0) for i in range(self.dim)]

    @cached_property
    def unit_vector(self) -> dict:
        return dict(self.unit.cols.get(0, {}))


def _witness(H: HopfAlgebra, lhs: TensorMap, rhs: TensorMap):
    c = lhs.first_difference(rhs)
    if c is None:
        return None
    return H.label(unflatten(c, lhs.dom)) if lhs.dom else "1"


def _eq(report: Report, H: HopfAlgebra, name: str, lhs: TensorMap, rhs: TensorMap) -> bool:
    return report.check(name, lhs == rhs, _witness(H, lhs, rhs))


def validate_hopf(H: HopfAlgebra) -> Report:
    """Check every Hopf algebra axiom; failures carry the first bad basis index."""
    rep = Report("hopf axioms")
    fld, d = H.field, H.dim
    mu, eta, De, ep, S, I = H.mult, H.unit, H.comult, H.counit, H.antipode, H.id
    _eq(rep, H, "associativity", compose(mu, tensor(mu, I)), compose(mu, tensor(I, mu)))
    _eq(rep, H, "left unit", compose(mu, tensor(eta, I)), I)
    _eq(rep, H, "right unit", compose(mu, tensor(I, eta)), I)
    _eq(rep, H, "coassociativity", compose(tensor(De, I), De), compose(tensor(I, De), De))
    _eq(rep, H, "left counit", compose(tensor(ep, I), De), I)
    _eq(rep, H, "right counit", compose(tensor(I, ep), De), I)
    # Delta(ab) = Delta(a) Delta(b), evaluated on basis pairs
    rhs = TensorMap.from_columns(
        fld, (d, d), (d, d),
        lambda ij: H.multiply_n(
            TensorMap.vector(fld, (d, d), H.comult.column((ij[0],))),
            TensorMap.vector(fld, (d, d), H.comult.column((ij[1],))),
        ).as_vector(),
    )
    _eq(rep, H, "comultiplication is multiplicative", compose(De, mu), rhs)
    _eq(rep, H, "comultiplication is unital", compose(De, eta), tensor(eta, eta))
    _eq(rep, H, "counit is multiplicative", compose(ep, mu), tensor(ep, ep))
    _eq(rep, H, "counit is unital", compose(ep, eta), TensorMap.scalar(fld, 1))
    ee = compose(eta, ep)
    _eq(rep, H, "left antipode", compose(mu, compose(tensor(S, I), De)), ee)
    _eq(rep, H, "right antipode", compose(mu, compose(tensor(I, S), De)), ee)
    return rep


# ---------------------------------------------------------------- elements

def group_like_report(H: HopfAlgebra, s: TensorMap) -> Report:
    rep = Report("group-like")
    rep.check("comultiplicative", compose(H.comult, s) == tensor(s, s))
    rep.check("counital", compose(H.counit, s) == TensorMap.scalar(H.field, 1))
    s_inv = H.inverse(s)
    rep.check("invertible", s_inv is not None)
    if s_inv is not None:
        rep.check("antipode is inverse", compose(H.antipode, s) == s_inv)
        rep.data["inverse"] = H.format_vector(s_inv)
    return rep


def is_group_like(H: HopfAlgebra, s: TensorMap) -> bool:
    """Delta s = s (x) s, eps(s) = 1 and s invertible."""
    rep = group_like_report(H, s)
    return all(rep.checks[k] for k in ("comultiplicative", "counital", "invertible"))


def character_report(H: HopfAlgebra, f: TensorMap) -> Report:
    rep = Report("character")
    lhs, rhs = compose(f, H.mult), tensor(f, f)
    c = lhs.first_difference(rhs)
    rep.check("multiplicative", c is None, None if c is None else H.label(unflatten(c, lhs.dom)))
    rep.check("unital", compose(f, H.unit) == TensorMap.scalar(H.field, 1))
    return rep


def is_character(H: HopfAlgebra, f: TensorMap) -> bool:
    """f(ab) = f(a) f(b) on all basis pairs and f(1) = 1."""
    return character_report(H, f).ok


def twisted_antipode(H: HopfAlgebra, delta: TensorMap) -> TensorMap:
    """h -> sum delta(h_(1)) S(h_(2))."""
    if not is_character(H, delta):
        raise MalformedPair("twisted antipode needs a character")
    return compose(tensor(delta, H.antipode), H.comult)


def check_twisted_antipode_properties(H: HopfAlgebra, delta: TensorMap) -> Report:
    St = twisted_antipode(H, delta)
    rep = Report("twisted antipode")
    _eq(rep, H, "antimultiplicative", compose(St, H.mult), compose(H.mult, compose(tensor(St, St), H.swap)))
    _eq(rep, H, "unital", compose(St, H.unit), H.unit)
    _eq(rep, H, "coalgebra twisted antimorphism", compose(H.comult, St),
        compose(tensor(H.antipode, St), compose(H.swap, H.comult)))
    _eq(rep, H, "counit twist", compose(H.counit, St), delta)
    return rep


# ------------------------------------------------------------ modular pairs

@dataclass(frozen=True, eq=False)
class ModularPair:
    delta: TensorMap
    sigma: TensorMap
    normalized: bool
    in_involution: bool
    name: str = ""


def pair_report(H: HopfAlgebra, delta: TensorMap, sigma: TensorMap) -> Report:
    """Character, group-like, normalization and involution checks for (delta, sigma)."""
    if delta.dom != (H.dim,) or delta.cod != () or sigma.dom != () or sigma.cod != (H.dim,):
        raise MalformedPair("delta must be a covector and sigma a vector on H")
    rep = Report("modular pair")
    rep.merge(character_report(H, delta), "delta character")
    rep.merge(group_like_report(H, sigma), "sigma group-like")
    if not (rep.checks["delta character/multiplicative"] and rep.checks["delta character/unital"]
            and rep.checks["sigma group-like/invertible"]):
        return rep
    rep.check("normalized", compose(delta, sigma) == TensorMap.scalar(H.field, 1))
    St = twisted_antipode(H, delta)
    sigma_inv = H.inverse(sigma)
    T = compose(H.left_mult(sigma_inv), St)
    lhs = compose(T, T)
    involution = rep.check("involution", lhs == H.id, _witness(H, lhs, H.id))
    conj = compose(H.left_mult(sigma), H.right_mult(sigma_inv))
    St2 = compose(St, St)
    conj_form = rep.check("twisted antipode squared is conjugation", St2 == conj, _witness(H, St2, conj))
    rep.check("involution forms agree", involution == conj_form)
    return rep


def modular_pair(H: HopfAlgebra, delta: TensorMap, sigma: TensorMap, name: str = "") -> ModularPair:
    rep = pair_report(H, delta, sigma)
    basic = [k for k in rep.checks if k.startswith(("delta character/", "sigma group-like/"))
             and not k.endswith("antipode is inverse")]
    bad = [k for k in basic if not rep.checks[k]]
    if bad:
        raise MalformedPair(f"not a candidate modular pair: {', '.join(bad)}")
    return ModularPair(delta, sigma, rep.checks["normalized"], rep.checks["involution"], name)


def is_modular_pair_in_involution(H: HopfAlgebra, pair: ModularPair) -> bool:
    rep = pair_report(H, pair.delta, pair.sigma)
    if not rep.checks.get("involution forms agree", True):
        raise AssertionError("the two formulations of the involution condition disagree")
    return rep.checks.get("normalized", False) and rep.checks.get("involution", False)


def search_modular_pairs(H: HopfAlgebra, characters: Mapping, group_likes: Mapping) -> list:
    """All (delta, sigma) from the candidate grid that are modular pairs in involution.

    Candidates are ``{name: TensorMap}``; the result lists ``(delta_name,
    sigma_name, ModularPair)`` in grid order.
    """
    found = []
    for dn, delta in characters.items():
        for sn, sigma in group_likes.items():
            try:
                pair = modular_pair(H, delta, sigma, f"{dn},{sn}")
            except MalformedPair:
                continue
            if pair.normalized and pair.in_involution:
                found.append((dn, sn, pair))
    return found


# --------------------------------------------------------------------- dual

def dual(H: HopfAlgebra, name: str | None = None) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis; every structure map is transposed."""
    return HopfAlgebra(
        H.field, H.dim, tuple(f"{l}*" if not l.endswith("*") else l[:-1] for l in H.basis_labels),
        mult=H.comult.transpose(),
        unit=H.counit.transpose(),
        comult=H.mult.transpose(),
        counit=H.unit.transpose(),
        antipode=H.antipode.transpose(),
        name=name if name is not None else (f"{H.name}*" if H.name else ""),
    )


def dual_pair(H: HopfAlgebra, pair: ModularPair) -> tuple[HopfAlgebra, ModularPair, Report]:
    """Carry (delta, sigma) on H to (sigma as character, delta as group-like) on H*."""
    Hd = dual(H)
    rep = Report("dual transport")
    rep.merge(validate_hopf(Hd), "dual axioms")
    new = modular_pair(Hd, pair.sigma.transpose(), pair.delta.transpose(), f"dual({pair.name})")
    rep.check("normalized preserved", new.normalized == pair.normalized)
    rep.check("involution preserved", new.in_involution == pair.in_involution)
    return Hd, new, rep


# -------------------------------------------------------------- properties

def is_cocommutative(H: HopfAlgebra) -> bool:
    return compose(H.swap, H.comult) == H.comult


def is_commutative(H: HopfAlgebra) -> bool:
    return compose(H.mult, H.swap) == H.mult
