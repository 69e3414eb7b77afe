"""Module algebras, invariant sigma-traces, and the characteristic map.

Cochains on A are stored as value vectors: an n-cochain is the vector of
its values on basis tuples of A^(x)(n+1), so an operator on cochains is the
transpose (pullback) of a map between tensor powers of A.  The cocyclic
structure used on A's side is the standard one for cochains of an algebra:

    (d_i phi)(x^0..x^n) = phi(x^0, .., x^i x^(i+1), .., x^n)    0 <= i < n
    (d_n phi)(x^0..x^n) = phi(x^n x^0, x^1, .., x^(n-1))
    (s_i phi)(x^0..x^n) = phi(x^0, .., x^i, 1, x^(i+1), .., x^n)
    (t_n phi)(x^0..x^n) = phi(x^n, x^0, .., x^(n-1))

The sigma-trace property absorbs the sigma appended by the Hopf-side face
and cyclic operators, so no twist survives here.  The twisted variant
(sigma applied to the rotated argument) can be selected for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import CocyclicModule
from .hopf import HopfAlgebra, ModularPair, is_character, twisted_antipode
from .linalg import rank_and_kernel
from .report import Report
from .catalog import cyclic_group
from .tensormap import TensorMap, block, compose, tensor, unflatten


class ModuleAlgebraError(ValueError):
    pass


class InvalidTrace(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ModuleAlgebra:
    """An algebra A (dimension m) with an action H (x) A -> A."""

    H: HopfAlgebra
    dim: int
    basis_labels: tuple
    mult: TensorMap
    unit: TensorMap
    action: TensorMap
    name: str = ""

    def __post_init__(self):
        m, d = self.dim, self.H.dim
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        if len(self.basis_labels) != m:
            raise ModuleAlgebraError(f"{len(self.basis_labels)} labels for dimension {m}")
        for nm, m_, dom, cod in (("mult", self.mult, (m, m), (m,)), ("unit", self.unit, (), (m,)),
                                 ("action", self.action, (d, m), (m,))):
            if m_.dom != dom or m_.cod != cod:
                raise ModuleAlgebraError(f"{nm} has shape {m_.dom}->{m_.cod}, expected {dom}->{cod}")
            if m_.field != self.H.field:
                raise ModuleAlgebraError(f"{nm} is over a different field")

    @property
    def field(self):
        return self.H.field

    @property
    def id(self) -> TensorMap:
        return TensorMap.identity(self.field, (self.dim,))

    def ids(self, k: int) -> TensorMap:
        return TensorMap.identity(self.field, (self.dim,) * k)

    def acting(self, h: TensorMap) -> TensorMap:
        """a -> h(a) for an element h of H."""
        return compose(self.action, tensor(h, self.id))

    def label(self, idx) -> str:
        return "⊗".join(self.basis_labels[i] for i in idx) if idx else "1"

    def covector(self, coeffs: dict) -> TensorMap:
        out = {}
        for k, v in coeffs.items():
            i = self.basis_labels.index(k) if isinstance(k, str) else k
            out[(i,)] = v
        return TensorMap.covector(self.field, (self.dim,), out)


@dataclass(frozen=True, eq=False)
class TraceCandidate:
    tau: TensorMap
    sigma_trace: bool
    delta_invariant: bool


def _mixed_label(M: ModuleAlgebra, idx: tuple, legs: str) -> str:
    parts = []
    for i, kind in zip(idx, legs):
        parts.append(M.H.basis_labels[i] if kind == "h" else M.basis_labels[i])
    return "⊗".join(parts)


def _eq(rep: Report, M: ModuleAlgebra, name: str, lhs: TensorMap, rhs: TensorMap, legs: str) -> bool:
    c = lhs.first_difference(rhs)
    return rep.check(name, c is None, None if c is None else _mixed_label(M, unflatten(c, lhs.dom), legs))


def validate_action(M: ModuleAlgebra) -> Report:
    rep = Report("module algebra")
    H, fld = M.H, M.field
    mu, eta, act, I = M.mult, M.unit, M.action, M.id
    d, m = H.dim, M.dim
    _eq(rep, M, "A associative", compose(mu, tensor(mu, I)), compose(mu, tensor(I, mu)), "aaa")
    _eq(rep, M, "A left unit", compose(mu, tensor(eta, I)), I, "a")
    _eq(rep, M, "A right unit", compose(mu, tensor(I, eta)), I, "a")
    _eq(rep, M, "module action", compose(act, tensor(H.id, act)), compose(act, tensor(H.mult, I)), "hha")
    _eq(rep, M, "unit acts trivially", compose(act, tensor(H.unit, I)), I, "a")
    shuffle = TensorMap.permutation(fld, (d, d, m, m), (0, 2, 1, 3))
    rhs = compose(mu, compose(tensor(act, act), compose(shuffle, tensor(H.comult, M.ids(2)))))
    _eq(rep, M, "action respects products", compose(act, tensor(H.id, mu)), rhs, "haa")
    _eq(rep, M, "action respects the unit", compose(act, tensor(H.id, eta)), compose(eta, H.counit), "h")
    return rep


def _sigma_trace_defect(M: ModuleAlgebra, sigma: TensorMap) -> TensorMap:
    """(a, b) -> ab - b sigma(a), as a map A (x) A -> A."""
    fld, m = M.field, M.dim
    swap = TensorMap.permutation(fld, (m, m), (1, 0))
    twisted = compose(M.mult, compose(tensor(M.id, M.acting(sigma)), swap))
    return M.mult - twisted


def _invariance_defect(M: ModuleAlgebra, delta: TensorMap) -> TensorMap:
    """(h, a, b) -> h(a) b - a S~(h)(b), as a map H (x) A (x) A -> A."""
    fld, d, m = M.field, M.H.dim, M.dim
    St = twisted_antipode(M.H, delta)
    lhs = compose(M.mult, tensor(M.action, M.id))
    perm = TensorMap.permutation(fld, (d, m, m), (1, 0, 2))
    act_twisted = compose(M.action, tensor(St, M.id))
    rhs = compose(M.mult, compose(tensor(M.id, act_twisted), perm))
    return lhs - rhs


def is_sigma_trace(M: ModuleAlgebra, tau: TensorMap, sigma: TensorMap) -> bool:
    """tau(ab) = tau(b sigma(a)) on all basis pairs, sigma acting through the action."""
    return not compose(tau, _sigma_trace_defect(M, sigma)).cols


def is_delta_invariant(M: ModuleAlgebra, tau: TensorMap, delta: TensorMap) -> bool:
    """tau(h(a) b) = tau(a S~(h)(b)) on all basis triples."""
    return not compose(tau, _invariance_defect(M, delta)).cols


def trace_report(M: ModuleAlgebra, tau: TensorMap, pair: ModularPair) -> Report:
    rep = Report("trace")
    defect = compose(tau, _sigma_trace_defect(M, pair.sigma))
    c = min(defect.cols) if defect.cols else None
    rep.check("sigma-trace", c is None, None if c is None else _mixed_label(M, unflatten(c, defect.dom), "aa"))
    defect = compose(tau, _invariance_defect(M, pair.delta))
    c = min(defect.cols) if defect.cols else None
    rep.check("delta-invariant", c is None,
              None if c is None else _mixed_label(M, unflatten(c, defect.dom), "haa"))
    return rep


def trace_candidate(M: ModuleAlgebra, tau: TensorMap, pair: ModularPair) -> TraceCandidate:
    rep = trace_report(M, tau, pair)
    return TraceCandidate(tau, rep.checks["sigma-trace"], rep.checks["delta-invariant"])


def sigma_trace_space(M: ModuleAlgebra, sigma: TensorMap, delta: TensorMap) -> list[TensorMap]:
    """Basis of all delta-invariant sigma-traces (both conditions are linear in tau)."""
    if not is_character(M.H, delta):
        raise InvalidTrace("delta must be a character")
    m, d = M.dim, M.H.dim
    c1 = _sigma_trace_defect(M, sigma).transpose().reshape(dom=(m,), cod=(m * m,))
    c2 = _invariance_defect(M, delta).transpose().reshape(dom=(m,), cod=(d * m * m,))
    K = block(M.field, {(0, 0): c1, (1, 0): c2},
              [m * m, d * m * m], [m])
    _, kernel = rank_and_kernel(K)
    return [TensorMap(M.field, (m,), (), {k: {0: v} for k, v in vec.items()}) for vec in kernel]


# ------------------------------------------------------- characteristic map

def characteristic_map(M: ModuleAlgebra, tau: TensorMap, n: int) -> TensorMap:
    """gamma: H^(x)n -> n-cochains on A, as a map (d,)*n -> (m,)*(n+1).

    gamma(h^1..h^n)(x^0..x^n) = tau(x^0 h^1(x^1) ... h^n(x^n)); gamma(1) = tau at n = 0.
    """
    fld, m, d = M.field, M.dim, M.H.dim
    mt = {divmod(c, m): col for c, col in M.mult.cols.items()}
    at = {divmod(c, m): col for c, col in M.action.cols.items()}
    tv = {c: col[0] for c, col in tau.cols.items()}

    def column(hidx):
        states = {(a,): {a: 1} for a in range(m)}
        for h in hidx:
            nxt = {}
            for prefix, vec in states.items():
                for x in range(m):
                    hx = at.get((h, x))
                    if not hx:
                        continue
                    out = {}
                    for a, ca in vec.items():
                        for b, cb in hx.items():
                            for k, w in mt.get((a, b), {}).items():
                                out[k] = out.get(k, 0) + ca * cb * w
                    out = {k: v for k, v in out.items() if v}
                    if out:
                        nxt[prefix + (x,)] = out
            states = nxt
        result = {}
        for xs, vec in states.items():
            val = sum((c * tv[k] for k, c in vec.items() if k in tv), 0)
            if val:
                result[xs] = val
        return result

    return TensorMap.from_columns(fld, (d,) * n, (m,) * (n + 1), column)


def characteristic_cochain(M: ModuleAlgebra, tau: TensorMap, c: TensorMap, pair: ModularPair,
                           check: bool = True) -> TensorMap:
    """gamma(c) for c in H^(x)n, as a covector on A^(x)(n+1)."""
    if check:
        rep = trace_report(M, tau, pair)
        if not rep.ok:
            raise InvalidTrace(f"tau fails {rep.failures()}: {rep.witnesses}")
    if c.dom != () or any(k != M.H.dim for k in c.cod):
        raise ModuleAlgebraError("c must be an element of a tensor power of H")
    n = len(c.cod)
    return compose(characteristic_map(M, tau, n), c).transpose()


# ----------------------------------------------------- A-side cyclic module

class CochainModule:
    """Cocyclic structure on cochains of A; operators are pullbacks."""

    def __init__(self, M: ModuleAlgebra, sigma: TensorMap | None = None, twisted: bool = False):
        self.M = M
        self.m = M.dim
        self.field = M.field
        self.twisted = twisted
        self.sig = M.acting(sigma) if (twisted and sigma is not None) else M.id

    def _ids(self, k):
        return self.M.ids(k)

    def _rotate(self, n: int) -> TensorMap:
        """(x^0..x^n) -> (x^n, x^0, .., x^(n-1)) on A^(x)(n+1), sigma applied to x^n if twisted."""
        perm = (n,) + tuple(range(n))
        p = TensorMap.permutation(self.field, (self.m,) * (n + 1), perm)
        return compose(tensor(self.sig, self._ids(n)), p)

    def face(self, n: int, i: int) -> TensorMap:
        """d_i: C^(n-1)(A) -> C^n(A)."""
        if i < n:
            f = tensor(tensor(self._ids(i), self.M.mult), self._ids(n - 1 - i))
        else:
            f = compose(tensor(self.M.mult, self._ids(n - 1)), self._rotate(n))
        return f.transpose()

    def degeneracy(self, n: int, i: int) -> TensorMap:
        """s_i: C^(n+1)(A) -> C^n(A)."""
        f = tensor(tensor(self._ids(i + 1), self.M.unit), self._ids(n - i))
        return f.transpose()

    def cyclic(self, n: int) -> TensorMap:
        return self._rotate(n).transpose()

    def hochschild_b(self, n: int) -> TensorMap:
        out = None
        for i in range(n + 1):
            f = self.face(n, i) if i % 2 == 0 else -self.face(n, i)
            out = f if out is None else out + f
        return out


def verify_characteristic_map(M: ModuleAlgebra, tau: TensorMap, pair: ModularPair, max_level: int,
                              twisted_convention: bool = False, max_space: int = 10 ** 4) -> Report:
    """gamma o op_H = op_A o gamma for every face, degeneracy and cyclic operator, plus b."""
    rep = Report(f"characteristic map up to level {max_level}")
    rep.merge(validate_action(M))
    rep.merge(trace_report(M, tau, pair))
    C = CocyclicModule(M.H, pair, require_involution=False, max_space=max_space)
    A = CochainModule(M, pair.sigma, twisted=twisted_convention)
    gam = {n: characteristic_map(M, tau, n) for n in range(max_level + 1)}

    def check(name, lhs, rhs):
        c = lhs.first_difference(rhs)
        rep.check(name, c is None, None if c is None else M.H.label(unflatten(c, lhs.dom)))

    for n in range(1, max_level + 1):
        for i in range(n + 1):
            check(f"face d{i} at level {n}", compose(gam[n], C.face(n, i)), compose(A.face(n, i), gam[n - 1]))
    for n in range(0, max_level):
        for i in range(n + 1):
            check(f"degeneracy s{i} at level {n}", compose(gam[n], C.degeneracy(n, i)),
                  compose(A.degeneracy(n, i), gam[n + 1]))
    for n in range(0, max_level + 1):
        check(f"cyclic t{n}", compose(gam[n], C.cyclic(n)), compose(A.cyclic(n), gam[n]))
    for n in range(1, max_level + 1):
        check(f"b at level {n}", compose(gam[n], C.hochschild_b(n)), compose(A.hochschild_b(n), gam[n - 1]))
    return rep


# ---------------------------------------------------------------- examples

def ground_module(H: HopfAlgebra) -> ModuleAlgebra:
    """H acting on the ground field through the counit."""
    fld = H.field
    return ModuleAlgebra(
        H, 1, ("1",),
        mult=TensorMap.from_entries(fld, (1, 1), (1,), [((0,), (0, 0), 1)]),
        unit=TensorMap.from_entries(fld, (), (1,), [((0,), (), 1)]),
        action=TensorMap(fld, (H.dim, 1), (1,), {i: {0: v} for i, v in enumerate(H.counit_values)}),
        name="ground",
    )


def translation_module(H: HopfAlgebra, G) -> ModuleAlgebra:
    """k[G] acting on functions on G by (g.f)(h) = f(hg); basis of point indicators."""
    fld, n = H.field, G.order
    entries = []
    for g in range(n):
        for k in range(n):
            # (g . p_k)(h) = p_k(h g) = 1 iff h = k g^-1
            entries.append(((G.mul(k, G.inverse_table[g]),), (g, k), 1))
    return ModuleAlgebra(
        H, n, tuple(f"p_{l}" for l in G.labels),
        mult=TensorMap.from_entries(fld, (n, n), (n,), [((a,), (a, a), 1) for a in range(n)]),
        unit=TensorMap.from_entries(fld, (), (n,), [((a,), (), 1) for a in range(n)]),
        action=TensorMap.from_entries(fld, (n, n), (n,), entries),
        name=f"translation({G.name})",
    )


def conjugation_module_m2(H: HopfAlgebra) -> ModuleAlgebra:
    """k[Z2] acting on 2x2 matrices by conjugation with K = diag(1, -1).

    Basis E11, E12, E21, E22 (index 2r + c); g.E_rc = (-1)^(r+c) E_rc.
    """
    fld = H.field
    if H.dim != 2:
        raise ModuleAlgebraError("expects the group algebra of Z2")
    mult = []
    for r in range(2):
        for c in range(2):
            for s in range(2):
                mult.append(((2 * r + s,), (2 * r + c, 2 * c + s), 1))
    action = []
    for a in range(4):
        r, c = divmod(a, 2)
        action.append(((a,), (0, a), 1))
        action.append(((a,), (1, a), (-1) ** (r + c)))
    return ModuleAlgebra(
        H, 4, ("E11", "E12", "E21", "E22"),
        mult=TensorMap.from_entries(fld, (4, 4), (4,), mult),
        unit=TensorMap.from_entries(fld, (), (4,), [((0,), (), 1), ((3,), (), 1)]),
        action=TensorMap.from_entries(fld, (2, 4), (4,), action),
        name="conjugation(M2)",
    )


def broken_translation_module(H: HopfAlgebra) -> ModuleAlgebra:
    """Functions on Z3 in the basis 1, p_g, p_g2, with g^j cycling the three basis vectors.

    This is a representation of Z3 but not by algebra maps, so the product
    rule fails (e.g. g(1 p_g) = p_g2 while g(1) g(p_g) = p_g p_g2 = 0).
    """
    fld = H.field
    if H.dim != 3:
        raise ModuleAlgebraError("expects the group algebra of Z3")
    mult = [((0,), (0, 0), 1), ((1,), (0, 1), 1), ((1,), (1, 0), 1), ((2,), (0, 2), 1),
            ((2,), (2, 0), 1), ((1,), (1, 1), 1), ((2,), (2, 2), 1)]
    return ModuleAlgebra(
        H, 3, ("1", "p_g", "p_g2"),
        mult=TensorMap.from_entries(fld, (3, 3), (3,), mult),
        unit=TensorMap.from_entries(fld, (), (3,), [((0,), (), 1)]),
        action=TensorMap.from_entries(fld, (3, 3), (3,), [(((i + j) % 3,), (j, i), 1)
                                                           for j in range(3) for i in range(3)]),
        name="broken(Z3)",
    )


def catalog_module_algebras(algebras: dict) -> dict:
    """Named module algebras over catalog Hopf algebras.

    Values are ``(hopf name, module algebra, traces, pair name)``; the
    traces dict maps names to covectors on A.
    """
    out = {}
    if "Z3" in algebras:
        H = algebras["Z3"]
        G = cyclic_group(3)
        M = translation_module(H, G)
        out["translation_Z3"] = ("Z3", M, {"haar": M.covector({0: 1, 1: 1, 2: 1}),
                                           "eval_e": M.covector({0: 1})}, "eps_one")
        B = broken_translation_module(H)
        out["broken_Z3"] = ("Z3", B, {"haar": B.covector({0: 3, 1: 1, 2: 1})}, "eps_one")
    if "Z2" in algebras:
        M = conjugation_module_m2(algebras["Z2"])
        out["conjugation_M2"] = ("Z2", M, {"trK": M.covector({"E11": 1, "E22": -1}),
                                           "tr": M.covector({"E11": 1, "E22": 1})}, "eps_g")
    for hname in ("trivial", "H4"):
        if hname in algebras:
            M = ground_module(algebras[hname])
            out[f"ground_{hname}"] = (hname, M, {"one": M.covector({0: 1})}, "eps_one")
    return out
