"""Concrete Hopf algebras with their known modular pairs and R-matrices.

Conventions (frozen):

* Sweedler H4 has basis ``1, g, x, gx`` with g^2 = 1, x^2 = 0, xg = -gx,
  Delta x = x (x) 1 + g (x) x, S(x) = -gx.
* Taft(N) has basis g^i x^j at index ``j*N + i`` with g^N = 1, x^N = 0,
  xg = zeta gx, Delta x = x (x) 1 + g (x) x, S(x) = -g^{-1} x.  With N = 2
  and zeta = -1 this is exactly Sweedler's algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .fields import RATIONALS, FieldError, FieldSpec, cyclotomic_field, is_primitive_root, primitive_root
from .hopf import HopfAlgebra, ModularPair, dual, modular_pair, search_modular_pairs, validate_hopf
from .tensormap import TensorMap


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    order: int
    cayley_table: tuple
    inverse_table: tuple
    identity_index: int
    labels: tuple = ()
    name: str = ""

    def __post_init__(self):
        n = self.order
        table = tuple(tuple(row) for row in self.cayley_table)
        object.__setattr__(self, "cayley_table", table)
        object.__setattr__(self, "inverse_table", tuple(self.inverse_table))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"g{i}" for i in range(n)))
        if len(table) != n or any(len(r) != n for r in table):
            raise CatalogError("Cayley table has the wrong size")
        if any(not 0 <= x < n for r in table for x in r):
            raise CatalogError("Cayley table entry out of range")
        e = self.identity_index
        for a in range(n):
            if table[e][a] != a or table[a][e] != a:
                raise CatalogError(f"{e} is not a two-sided identity (fails at {a})")
            if table[a][self.inverse_table[a]] != e or table[self.inverse_table[a]][a] != e:
                raise CatalogError(f"inverse table wrong at {a}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise CatalogError(f"not associative at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.cayley_table[a][b]


def cyclic_group(n: int) -> GroupPresentation:
    labels = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return GroupPresentation(
        n,
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [(-a) % n for a in range(n)],
        0,
        tuple(labels),
        f"Z{n}",
    )


def symmetric_group(n: int) -> GroupPresentation:
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}

    def compose_perm(p, q):  # (p q)(k) = p(q(k))
        return tuple(p[q[k]] for k in range(n))

    def inverse(p):
        out = [0] * n
        for k, v in enumerate(p):
            out[v] = k
        return tuple(out)

    table = [[index[compose_perm(p, q)] for q in perms] for p in perms]
    return GroupPresentation(
        len(perms), table, [index[inverse(p)] for p in perms], index[tuple(range(n))],
        tuple("e" if p == tuple(range(n)) else "".join(map(str, p)) for p in perms),
        f"S{n}",
    )


# ------------------------------------------------------------ constructors

def _hopf(fld, labels, mult, unit, comult, counit, antipode, name) -> HopfAlgebra:
    d = len(labels)
    H = HopfAlgebra(
        fld, d, labels,
        mult=TensorMap.from_entries(fld, (d, d), (d,), mult),
        unit=TensorMap.from_entries(fld, (), (d,), unit),
        comult=TensorMap.from_entries(fld, (d,), (d, d), comult),
        counit=TensorMap.from_entries(fld, (d,), (), counit),
        antipode=TensorMap.from_entries(fld, (d,), (d,), antipode),
        name=name,
    )
    rep = validate_hopf(H)
    if not rep.ok:
        raise CatalogError(f"{name} fails {rep.failures()}: {rep.witnesses}")
    return H


def trivial_hopf(fld: FieldSpec = RATIONALS) -> HopfAlgebra:
    """The ground field as a one-dimensional Hopf algebra."""
    one = [((0,), (0, 0), 1)]
    return _hopf(fld, ("1",), one, [((0,), (), 1)], [((0, 0), (0,), 1)], [((), (0,), 1)],
                 [((0,), (0,), 1)], "trivial")


def group_algebra(G: GroupPresentation, fld: FieldSpec = RATIONALS) -> HopfAlgebra:
    n = G.order
    return _hopf(
        fld, G.labels,
        [((G.mul(a, b),), (a, b), 1) for a in range(n) for b in range(n)],
        [((G.identity_index,), (), 1)],
        [((a, a), (a,), 1) for a in range(n)],
        [((), (a,), 1) for a in range(n)],
        [((G.inverse_table[a],), (a,), 1) for a in range(n)],
        f"k[{G.name}]" if G.name else "",
    )


def function_algebra(G: GroupPresentation, fld: FieldSpec = RATIONALS) -> HopfAlgebra:
    """Functions on G with the basis of point indicators ``p_a``."""
    n = G.order
    comult = []
    for a in range(n):
        for b in range(n):
            comult.append(((a, b), (G.mul(a, b),), 1))
    return _hopf(
        fld, tuple(f"{l}*" for l in G.labels),
        [((a,), (a, a), 1) for a in range(n)],
        [((a,), (), 1) for a in range(n)],
        comult,
        [((), (G.identity_index,), 1)],
        [((G.inverse_table[a],), (a,), 1) for a in range(n)],
        f"F({G.name})" if G.name else "",
    )


H4_LABELS = ("1", "g", "x", "gx")


def sweedler_h4(fld: FieldSpec = RATIONALS) -> HopfAlgebra:
    """Sweedler's four-dimensional Hopf algebra (hand-entered tables)."""
    one, g, x, gx = range(4)
    # products of basis elements: (a, b) -> [(c, coeff)]
    table = {
        (one, one): [(one, 1)], (one, g): [(g, 1)], (one, x): [(x, 1)], (one, gx): [(gx, 1)],
        (g, one): [(g, 1)], (g, g): [(one, 1)], (g, x): [(gx, 1)], (g, gx): [(x, 1)],
        (x, one): [(x, 1)], (x, g): [(gx, -1)], (x, x): [], (x, gx): [],
        (gx, one): [(gx, 1)], (gx, g): [(x, -1)], (gx, x): [], (gx, gx): [],
    }
    mult = [((c,), (a, b), v) for (a, b), terms in table.items() for c, v in terms]
    comult = [
        ((one, one), (one,), 1),
        ((g, g), (g,), 1),
        ((x, one), (x,), 1), ((g, x), (x,), 1),
        # Delta(gx) = (g (x) g)(x (x) 1 + g (x) x) = gx (x) g + 1 (x) gx
        ((gx, g), (gx,), 1), ((one, gx), (gx,), 1),
    ]
    counit = [((), (one,), 1), ((), (g,), 1)]
    # S(gx) = S(x) S(g) = -gx g = x
    antipode = [((one,), (one,), 1), ((g,), (g,), 1), ((gx,), (x,), -1), ((x,), (gx,), 1)]
    return _hopf(fld, H4_LABELS, mult, [((one,), (), 1)], comult, counit, antipode, "H4")


def sweedler_r_matrix(lam, fld: FieldSpec = RATIONALS) -> TensorMap:
    """R_lam = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + lam/2 (x(x)x - x(x)gx + gx(x)x + gx(x)gx).

    Entered as data; check with ``check_quasitriangular`` before use.
    """
    one, g, x, gx = range(4)
    h = Fraction(1, 2)
    lam = fld.coerce(lam)
    coeffs = {
        (one, one): h, (one, g): h, (g, one): h, (g, g): -h,
        (x, x): lam * h, (x, gx): -lam * h, (gx, x): lam * h, (gx, gx): lam * h,
    }
    return TensorMap.vector(fld, (4, 4), coeffs)


def taft(N: int, fld: FieldSpec | None = None, zeta=None) -> HopfAlgebra:
    """Taft algebra of dimension N^2 at a primitive N-th root of unity."""
    if N < 2:
        raise CatalogError("Taft algebras need N >= 2")
    fld = cyclotomic_field(N) if fld is None else fld
    zeta = primitive_root(fld, N) if zeta is None else fld.coerce(zeta)
    if not is_primitive_root(zeta, N):
        raise FieldError(f"{zeta} is not a primitive {N}-th root of unity")
    idx = lambda i, j: j * N + i  # noqa: E731
    zp = [zeta ** k if k else 1 for k in range(N)]

    # (g^a x^b)(g^c x^d) = zeta^(b c) g^(a+c) x^(b+d)
    def mul(u: dict, v: dict) -> dict:
        out = {}
        for (a, b), cu in u.items():
            for (c, e), cv in v.items():
                if b + e >= N:
                    continue
                key = ((a + c) % N, b + e)
                out[key] = out.get(key, 0) + cu * cv * zp[(b * c) % N]
        return {k: v for k, v in out.items() if v}

    def mul2(U: dict, V: dict) -> dict:
        out = {}
        for (p, q), cu in U.items():
            for (r, s), cv in V.items():
                for k1, v1 in mul({p: 1}, {r: 1}).items():
                    for k2, v2 in mul({q: 1}, {s: 1}).items():
                        out[(k1, k2)] = out.get((k1, k2), 0) + cu * cv * v1 * v2
        return {k: v for k, v in out.items() if v}

    G, X, ONE = (1, 0), (0, 1), (0, 0)
    ginv = ((N - 1) % N, 0)
    labels = []
    for j in range(N):
        for i in range(N):
            gpart = "" if i == 0 else ("g" if i == 1 else f"g{i}")
            xpart = "" if j == 0 else ("x" if j == 1 else f"x{j}")
            labels.append(gpart + xpart or "1")
    mult, comult, counit, antipode = [], [], [], []
    Dg = {(G, G): 1}
    Dx = {(X, ONE): 1, (G, X): 1}
    Sg = {ginv: 1}
    Sx = mul({ginv: -1}, {X: 1})
    for a, b in itertools.product(range(N), repeat=2):
        for c, e in itertools.product(range(N), repeat=2):
            for (i, j), v in mul({(a, b): 1}, {(c, e): 1}).items():
                mult.append(((idx(i, j),), (idx(a, b), idx(c, e)), v))
        # Delta and S of g^a x^b from those of the generators
        D = {(ONE, ONE): 1}
        S = {ONE: 1}
        for _ in range(a):
            D = mul2(D, Dg)
            S = mul(Sg, S)
        for _ in range(b):
            D = mul2(D, Dx)
        Sb = {ONE: 1}
        for _ in range(b):
            Sb = mul(Sx, Sb)
        S = mul(Sb, S)  # S(g^a x^b) = S(x)^b S(g)^a
        for (p, q), v in D.items():
            comult.append(((idx(*p), idx(*q)), (idx(a, b),), v))
        for k, v in S.items():
            antipode.append(((idx(*k),), (idx(a, b),), v))
        if b == 0:
            counit.append(((), (idx(a, b),), 1))
    return _hopf(fld, tuple(labels), mult, [((0,), (), 1)], comult, counit, antipode, f"Taft{N}")


# ---------------------------------------------------- candidate characters

def taft_root(H: HopfAlgebra) -> object:
    """zeta with xg = zeta gx, read back from the structure constants."""
    N = int(round(H.dim ** 0.5))
    x, g = N, 1
    prod = H.mult.column((x, g))
    ((k,), v), = prod.items()
    assert k == N + 1
    return v


def taft_characters(H: HopfAlgebra) -> dict:
    """Characters delta_k: g -> zeta^k, x -> 0 (delta(x) = 0 is forced)."""
    N = int(round(H.dim ** 0.5))
    zeta = taft_root(H)
    out = {}
    for k in range(N):
        zk = zeta ** k if k else 1
        out["eps" if k == 0 else f"delta{k}"] = H.covector({i: zk ** i if i else 1 for i in range(N)})
    return out


def taft_group_likes(H: HopfAlgebra) -> dict:
    N = int(round(H.dim ** 0.5))
    return {"1" if k == 0 else ("g" if k == 1 else f"g{k}"): H.vector({k: 1}) for k in range(N)}


def taft_modular_pairs(H: HopfAlgebra) -> list:
    """Exhaustive search of the N x N grid of (delta_k, g^l)."""
    return search_modular_pairs(H, taft_characters(H), taft_group_likes(H))


def group_characters(G: GroupPresentation, fld: FieldSpec) -> dict:
    """One-dimensional characters of a cyclic group available in ``fld``."""
    n = G.order
    if G.name != f"Z{n}":
        raise CatalogError("characters are enumerated for cyclic groups only")
    zeta = primitive_root(fld, n) if n > 1 else 1
    out = {}
    for k in range(n):
        zk = zeta ** k if k else 1
        out["eps" if k == 0 else f"chi{k}"] = TensorMap.covector(
            fld, (n,), {(a,): (zk ** a if a else 1) for a in range(n)})
    return out


# ----------------------------------------------------------- named objects

def standard_pairs(H: HopfAlgebra) -> dict:
    """Named modular pairs shipped with each catalog algebra."""
    eps, one = H.counit, H.unit
    pairs = {"eps_one": modular_pair(H, eps, one, "eps_one")}
    if H.name == "H4":
        g = H.vector({"g": 1})
        pairs["eps_g"] = modular_pair(H, eps, g, "eps_g")
        pairs["delta_one"] = modular_pair(H, H.covector({"1": 1, "g": -1}), one, "delta_one")
    elif H.name == "k[Z2]":
        pairs["eps_g"] = modular_pair(H, eps, H.vector({"g": 1}), "eps_g")
    elif H.name.startswith("Taft"):
        for dn, sn, pair in taft_modular_pairs(H):
            nm = f"{dn}_{'one' if sn == '1' else sn}"
            pairs[nm] = ModularPair(pair.delta, pair.sigma, True, True, nm)
    return pairs


def catalog_algebras(fld_name: str = "rationals") -> dict:
    """All catalog Hopf algebras over the named field (``rationals`` or ``cyclotomic3``)."""
    if fld_name == "rationals":
        Q = RATIONALS
        Z2, Z3, S3 = cyclic_group(2), cyclic_group(3), symmetric_group(3)
        return {
            "trivial": trivial_hopf(Q),
            "Z2": group_algebra(Z2, Q),
            "Z3": group_algebra(Z3, Q),
            "S3": group_algebra(S3, Q),
            "F_Z2": function_algebra(Z2, Q),
            "F_Z3": function_algebra(Z3, Q),
            "F_S3": function_algebra(S3, Q),
            "H4": sweedler_h4(Q),
        }
    if fld_name == "cyclotomic3":
        K = cyclotomic_field(3)
        return {
            "Z3_cyc": group_algebra(cyclic_group(3), K),
            "Taft3": taft(3, K),
        }
    raise CatalogError(f"unknown catalog field {fld_name!r}")


def catalog_r_matrices(H: HopfAlgebra) -> dict:
    if H.name == "H4":
        return {"R0": sweedler_r_matrix(0, H.field), "R1": sweedler_r_matrix(1, H.field)}
    return {}


# re-exported for convenience
__all__ = [
    "GroupPresentation", "cyclic_group", "symmetric_group", "trivial_hopf", "group_algebra",
    "function_algebra", "sweedler_h4", "sweedler_r_matrix", "taft", "taft_characters",
    "taft_group_likes", "taft_modular_pairs", "group_characters", "standard_pairs",
    "catalog_algebras", "catalog_r_matrices", "dual",
]
