"""Independent dense reference implementations used to cross-check the sparse engine.

Nothing here imports the package's tensor or elimination code: matrices are
plain lists of rows, and the H4 / trivial cocyclic modules are rebuilt from
their defining relations on monomial words.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# ----------------------------------------------------------- dense matrices

def dense_rref(rows, ncols):
    """Textbook Gauss-Jordan; returns (reduced rows, pivot columns)."""
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = Fraction(1) / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def dense_rank(rows, ncols) -> int:
    return len(dense_rref(rows, ncols)[1])


def dense_kernel(rows, ncols) -> list:
    R, piv = dense_rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def dense_matmul(A, B):
    m = len(B[0])
    out = []
    for row in A:
        acc = [0] * m
        for k, a in enumerate(row):
            if a:
                acc = [x + a * y for x, y in zip(acc, B[k])]
        out.append(acc)
    return out


def kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


# -------------------------------------------------- H4 from its relations

# basis words (a, b) for g^a x^b, in the order 1, g, x, gx
H4_BASIS = [(0, 0), (1, 0), (0, 1), (1, 1)]
H4_INDEX = {w: i for i, w in enumerate(H4_BASIS)}


def h4_mul_words(u, v) -> dict:
    (a, b), (c, d) = u, v
    if b + d >= 2:
        return {}
    # x^b g^c = (-1)^(bc) g^c x^b
    return {((a + c) % 2, b + d): (-1) ** (b * c)}


def h4_comult_word(w) -> dict:
    a, b = w
    if b == 0:
        return {((a, 0), (a, 0)): 1}
    # Delta(g^a x) = g^a x (x) g^a + g^(a+1) (x) g^a x
    return {((a, 1), (a, 0)): 1, (((a + 1) % 2, 0), (a, 1)): 1}


def h4_antipode_word(w) -> dict:
    return {(0, 0): {(0, 0): 1}, (1, 0): {(1, 0): 1}, (0, 1): {(1, 1): -1}, (1, 1): {(0, 1): 1}}[w]


def h4_counit_word(w):
    return 1 if w[1] == 0 else 0


class DenseCocyclic:
    """Cocyclic module of a Hopf algebra given word-level callables, as dense matrices."""

    def __init__(self, basis, mul, comult, antipode, counit, delta, sigma):
        self.basis = basis
        self.index = {w: i for i, w in enumerate(basis)}
        self.d = len(basis)
        self.mul, self.comult, self.antipode, self.counit = mul, comult, antipode, counit
        self.delta, self.sigma = delta, sigma  # delta: word -> scalar, sigma: {word: scalar}

    def words(self, n):
        return list(itertools.product(self.basis, repeat=n))

    def idx(self, ws) -> int:
        i = 0
        for w in ws:
            i = i * self.d + self.index[w]
        return i

    def _mul_el(self, u: dict, v: dict) -> dict:
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.mul(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {k: v for k, v in out.items() if v}

    def _iter_comult(self, el: dict, k: int) -> dict:
        """Delta^(k-1) of an element into k tensor factors (tuples of words)."""
        cur = {(w,): c for w, c in el.items()}
        for _ in range(k - 1):
            nxt = {}
            for ws, c in cur.items():
                for (p, q), v in self.comult(ws[0]).items():
                    key = (p, q) + ws[1:]
                    nxt[key] = nxt.get(key, 0) + c * v
            cur = nxt
        return cur

    def twisted(self, w) -> dict:
        out = {}
        for (p, q), v in self.comult(w).items():
            for r, s in self.antipode(q).items():
                out[r] = out.get(r, 0) + v * self.delta(p) * s
        return {k: v for k, v in out.items() if v}

    def _mat(self, n_src, n_dst, fn):
        rows = [[Fraction(0)] * (self.d ** n_src) for _ in range(self.d ** n_dst)]
        for ws in self.words(n_src):
            j = self.idx(ws)
            for out, v in fn(ws).items():
                rows[self.idx(out)][j] += v
        return rows

    def face(self, n, i):
        one = self.basis[0]

        def fn(ws):
            if i == 0:
                return {(one,) + ws: 1}
            if i == n:
                return {ws + (s,): c for s, c in self.sigma.items()}
            out = {}
            for (p, q), v in self.comult(ws[i - 1]).items():
                out[ws[:i - 1] + (p, q) + ws[i:]] = v
            return out
        return self._mat(n - 1, n, fn)

    def degeneracy(self, n, i):
        return self._mat(n + 1, n, lambda ws: {ws[:i] + ws[i + 1:]: self.counit(ws[i])}
                         if self.counit(ws[i]) else {})

    def cyclic(self, n):
        if n == 0:
            return [[Fraction(1)]]

        def fn(ws):
            first = self._iter_comult(self.twisted(ws[0]), n)
            out = {}
            for s, cs in self.sigma.items():
                tail = ws[1:] + (s,)
                for fs, cf in first.items():
                    # componentwise product fs * tail
                    acc = {(): cf * cs}
                    for a, b in zip(fs, tail):
                        prod = self.mul(a, b)
                        acc = {k + (w,): v * z for k, v in acc.items() for w, z in prod.items()}
                    for k, v in acc.items():
                        out[k] = out.get(k, 0) + v
            return out
        return self._mat(n, n, fn)


def _add(A, B, sign=1):
    return [[a + sign * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _ident(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def dense_cohomology(C: DenseCocyclic, max_degree: int):
    """(HH list, HC list) via dense b, B and the total complex."""
    d = C.d
    L = max_degree + 1
    b = {}
    for n in range(1, L + 1):
        m = [[Fraction(0)] * (d ** (n - 1)) for _ in range(d ** n)]
        for i in range(n + 1):
            m = _add(m, C.face(n, i), 1 if i % 2 == 0 else -1)
        b[n] = m
    t = {n: C.cyclic(n) for n in range(0, L + 1)}
    lam = {n: t[n] if n % 2 == 0 else [[-x for x in r] for r in t[n]] for n in t}
    B = {}
    for n in range(0, L):
        N = [[Fraction(0)] * (d ** n) for _ in range(d ** n)]
        p = _ident(d ** n)
        for _ in range(n + 1):
            N = _add(N, p)
            p = dense_matmul(lam[n], p)
        extra = dense_matmul(C.degeneracy(n, n), t[n + 1])
        B[n] = dense_matmul(N, dense_matmul(extra, _add(_ident(d ** (n + 1)), lam[n + 1], -1)))

    def total(n):
        src = list(range(n, -1, -2))
        dst = list(range(n + 1, -1, -2))
        roff = {k: sum(d ** x for x in dst[:j]) for j, k in enumerate(dst)}
        coff = {k: sum(d ** x for x in src[:j]) for j, k in enumerate(src)}
        R = sum(d ** k for k in dst)
        Cc = sum(d ** k for k in src)
        M = [[Fraction(0)] * Cc for _ in range(R)]
        for k in src:
            for blk, tgt in ((b[k + 1], k + 1), (B.get(k - 1), k - 1)):
                if blk is None or tgt < 0:
                    continue
                for i, row in enumerate(blk):
                    for j, v in enumerate(row):
                        if v:
                            M[roff[tgt] + i][coff[k] + j] += v
        return M, Cc

    rb = {n: dense_rank(b[n], d ** (n - 1)) for n in b}
    rb[0] = 0
    rD = {-1: 0}
    for n in range(0, max_degree + 1):
        M, cc = total(n)
        rD[n] = dense_rank(M, cc)
    HH = [d ** n - rb[n + 1] - rb[n] for n in range(max_degree + 1)]
    HC = [sum(d ** k for k in range(n, -1, -2)) - rD[n] - rD[n - 1] for n in range(max_degree + 1)]
    return HH, HC, b, B


def h4_dense(pair: str) -> DenseCocyclic:
    """pair in {"eps_g", "eps_one", "delta_one"}."""
    delta = (lambda w: 1 if w[1] == 0 else 0) if pair.startswith("eps") else \
            (lambda w: (-1) ** w[0] if w[1] == 0 else 0)
    sigma = {(1, 0): 1} if pair == "eps_g" else {(0, 0): 1}
    return DenseCocyclic(H4_BASIS, h4_mul_words, h4_comult_word, h4_antipode_word, h4_counit_word,
                         delta, sigma)


def trivial_dense() -> DenseCocyclic:
    w = ()
    return DenseCocyclic([w], lambda a, b: {w: 1}, lambda a: {(w, w): 1}, lambda a: {w: 1},
                         lambda a: 1, lambda a: 1, {w: 1})
