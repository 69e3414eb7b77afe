"""Quasitriangular structures, the Drinfeld element, and the double cover H(theta)."""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import (HopfAlgebra, ModularPair, group_like_report, modular_pair, pair_report,
                   validate_hopf)
from .linalg import solve
from .report import Report
from .tensormap import TensorMap, compose, tensor, unflatten


class QuasitriangularError(ValueError):
    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class QuasitriangularStructure:
    R: TensorMap
    R_inverse: TensorMap
    u: TensorMap | None = None
    theta: TensorMap | None = None


def _legs(H: HopfAlgebra, R: TensorMap, where: tuple, n: int = 3) -> TensorMap:
    """Place the two legs of R at positions ``where`` of H^(x)n, units elsewhere."""
    d = H.dim
    v = R
    for _ in range(n - 2):
        v = tensor(v, H.unit)
    # v has legs (R1, R2, 1, ...); send leg 0 -> where[0], leg 1 -> where[1]
    rest = [k for k in range(n) if k not in where]
    src = [0] * n
    src[where[0]], src[where[1]] = 0, 1
    for k, pos in enumerate(rest):
        src[pos] = 2 + k
    return compose(TensorMap.permutation(H.field, (d,) * n, tuple(src)), v)


def inverse_n(H: HopfAlgebra, x: TensorMap):
    """Inverse of an element of H^(x)n, or None."""
    n = len(x.cod)
    d = H.dim
    one = H.unit
    for _ in range(n - 1):
        one = tensor(one, H.unit)
    left = TensorMap.from_columns(
        H.field, (d,) * n, (d,) * n,
        lambda idx: H.multiply_n(x, TensorMap.vector(H.field, (d,) * n, {idx: 1})).as_vector())
    y = solve(left, one)
    if y is None or H.multiply_n(y, x) != one:
        return None
    return y


def check_quasitriangular(H: HopfAlgebra, R: TensorMap) -> tuple[Report, QuasitriangularStructure | None]:
    d = H.dim
    if R.dom != () or R.cod != (d, d):
        raise QuasitriangularError("R must be an element of H (x) H")
    rep = Report("quasitriangular")
    R_inv = inverse_n(H, R)
    if not rep.check("R invertible", R_inv is not None):
        return rep, None
    De = H.comult
    opDe = compose(H.swap, De)
    lhs = TensorMap.from_columns(
        H.field, (d,), (d, d),
        lambda i: H.multiply_n(H.multiply_n(R, TensorMap.vector(H.field, (d, d), De.column(i))),
                               R_inv).as_vector())
    c = lhs.first_difference(opDe)
    rep.check("opposite comultiplication is conjugate", c is None,
              None if c is None else H.label(unflatten(c, (d,))))
    R13, R23, R12 = _legs(H, R, (0, 2)), _legs(H, R, (1, 2)), _legs(H, R, (0, 1))
    I = H.id
    rep.check("(Delta (x) id) R = R13 R23", compose(tensor(De, I), R) == H.multiply_n(R13, R23))
    rep.check("(id (x) Delta) R = R13 R12", compose(tensor(I, De), R) == H.multiply_n(R13, R12))
    return rep, QuasitriangularStructure(R, R_inv) if rep.ok else None


def drinfeld_element(H: HopfAlgebra, R: TensorMap) -> tuple[TensorMap, Report]:
    """u = sum S(R^(2)) R^(1), with its three defining identities checked."""
    qrep, qs = check_quasitriangular(H, R)
    if qs is None:
        raise QuasitriangularError("R fails the quasitriangular axioms", qrep)
    rep = Report("drinfeld element")
    rep.merge(qrep)
    u = compose(H.mult, compose(tensor(H.antipode, H.id), compose(H.swap, R)))
    rep.data["u"] = H.format_vector(u)
    rep.check("counit of u is 1", compose(H.counit, u) == TensorMap.scalar(H.field, 1))
    u_inv = H.inverse(u)
    if not rep.check("u invertible", u_inv is not None):
        return u, rep
    S2 = compose(H.antipode, H.antipode)
    conj = compose(H.left_mult(u), H.right_mult(u_inv))
    c = S2.first_difference(conj)
    rep.check("S^2 is conjugation by u", c is None, None if c is None else H.basis_labels[c])
    R21R = H.multiply_n(compose(H.swap, R), R)
    W = inverse_n(H, R21R)
    if rep.check("R21 R invertible", W is not None):
        rep.check("Delta u = (R21 R)^-1 (u (x) u)",
                  compose(H.comult, u) == H.multiply_n(W, tensor(u, u)))
    return u, rep


def double_cover(H: HopfAlgebra, R: TensorMap, u: TensorMap | None = None):
    """Adjoin a central square root theta of u S(u).

    Basis of H(theta) is ``e_i`` (index i) followed by ``theta e_i`` (index
    d + i).  Returns ``(H_theta, sigma, report)`` with sigma = theta^-1 u,
    or ``(None, None, report)`` when a precondition fails.
    """
    d, fld = H.dim, H.field
    rep = Report("double cover")
    if u is None:
        u, drep = drinfeld_element(H, R)
        rep.merge(drep)
    Su = compose(H.antipode, u)
    c = H.multiply(u, Su)
    rep.data["u S(u)"] = H.format_vector(c)
    rep.check("u S(u) = S(u) u", c == H.multiply(Su, u))
    Lc, Rc = H.left_mult(c), H.right_mult(c)
    w = Lc.first_difference(Rc)
    rep.check("u S(u) central", w is None, None if w is None else H.basis_labels[w])
    R21R = H.multiply_n(compose(H.swap, R), R)
    W = inverse_n(H, R21R)
    rep.check("R21 R invertible", W is not None)
    if not rep.ok:
        return None, None, rep

    mt, ct, st = H.mult_table, H.comult_table, H.antipode_table
    cvec = c.as_vector()
    mult, comult, antipode, counit = {}, {}, {}, {}
    for a in (0, 1):
        for i in range(d):
            for b in (0, 1):
                for j in range(d):
                    col = {}
                    for k, v in mt.get((i, j), {}).items():
                        if a + b < 2:
                            col[(a + b) * d + k] = col.get((a + b) * d + k, 0) + v
                        else:
                            # theta^2 = c lands back in H
                            for (m,), cv in cvec.items():
                                for kk, vv in mt.get((m, k), {}).items():
                                    col[kk] = col.get(kk, 0) + v * cv * vv
                    mult[(a * d + i) * 2 * d + b * d + j] = col
            De_i = TensorMap.vector(fld, (d, d), ct[i])
            if a:
                De_i = H.multiply_n(W, De_i)
            comult[a * d + i] = {(a * d + p) * 2 * d + a * d + q: v
                                 for (p, q), v in De_i.as_vector().items()}
            counit[a * d + i] = {0: H.counit_values[i]}
            antipode[a * d + i] = {a * d + k: v for k, v in st[i].items()}
    D = 2 * d
    labels = tuple(H.basis_labels) + tuple("θ" if l == "1" else f"θ{l}" for l in H.basis_labels)
    Ht = HopfAlgebra(
        fld, D, labels,
        mult=TensorMap(fld, (D, D), (D,), mult),
        unit=TensorMap(fld, (), (D,), {0: dict(H.unit.cols[0])}),
        comult=TensorMap(fld, (D,), (D, D), comult),
        counit=TensorMap(fld, (D,), (), counit),
        antipode=TensorMap(fld, (D,), (D,), antipode),
        name=f"{H.name}(theta)" if H.name else "",
    )
    rep.merge(validate_hopf(Ht), "H(theta) axioms")
    theta = Ht.vector({d: 1})
    u_up = TensorMap(fld, (), (D,), u.cols)
    theta_inv = Ht.inverse(theta)
    if not rep.check("theta invertible", theta_inv is not None):
        return Ht, None, rep
    sigma = Ht.multiply(theta_inv, u_up)
    rep.data["sigma"] = Ht.format_vector(sigma)
    rep.check("theta central", Ht.left_mult(theta) == Ht.right_mult(theta))
    rep.check("counit of theta is 1", compose(Ht.counit, theta) == TensorMap.scalar(fld, 1))
    rep.check("S(theta) = theta", compose(Ht.antipode, theta) == theta)
    glr = group_like_report(Ht, sigma)
    rep.merge(glr, "sigma group-like")
    sigma_inv = Ht.inverse(sigma)
    if sigma_inv is not None:
        Sp = compose(Ht.left_mult(sigma_inv), Ht.antipode)
        rep.check("S' squared is the identity", compose(Sp, Sp) == Ht.id)
    prep = pair_report(Ht, Ht.counit, sigma)
    rep.merge(prep, "(eps, sigma)")
    return Ht, sigma, rep


def canonical_pair(Ht: HopfAlgebra, sigma: TensorMap) -> ModularPair:
    return modular_pair(Ht, Ht.counit, sigma, "eps_sigma")
