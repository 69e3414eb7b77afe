"""The cocyclic module of a Hopf algebra with a modular pair in involution.

Level n is H^(x)n for n >= 1 and the ground field for n = 0, with

* faces ``face(n, i): C^(n-1) -> C^n``: insert 1 on the left (i = 0), apply
  the coproduct to slot i (1 <= i <= n-1), or append sigma (i = n); at
  n = 1 these send 1 to 1_H and to sigma;
* degeneracies ``degeneracy(n, i): C^(n+1) -> C^n``: apply the counit to
  slot i (0-based);
* cyclic operators ``cyclic(n)``:
  h^1 (x) ... (x) h^n -> Delta^(n-1)(S~(h^1)) . (h^2 (x) ... (x) h^n (x) sigma),
  with S~ the twisted antipode and tau_0 the identity.

The cyclic coboundary is B = N o sigma_{-1} o (1 - lambda) with
lambda_m = (-1)^m tau_m, N = sum_i lambda_n^i on the target level and the
extra degeneracy sigma_{-1} = sigma_n o tau_{n+1}; b is the alternating sum
of faces.  Both are checked (b^2 = B^2 = bB + Bb = 0) whenever built.
"""

from __future__ import annotations

from .hopf import HopfAlgebra, ModularPair, twisted_antipode
from .linalg import rank
from .report import Report
from .tensormap import TensorMap, block, compose, tensor, unflatten

DEFAULT_MAX_SPACE = 10 ** 4


class LevelCapExceeded(RuntimeError):
    pass


class NotInInvolution(ValueError):
    pass


class BicomplexError(AssertionError):
    pass


def _expand(parts: list, coeff, out: dict):
    """Add coeff * (parts[0] (x) parts[1] (x) ...) into ``out`` (dict vectors)."""
    acc = {(): coeff}
    for p in parts:
        acc = {k + (i,): v * w for k, v in acc.items() for i, w in p.items()}
    for k, v in acc.items():
        out[k] = out.get(k, 0) + v


class CocyclicModule:
    """H^natural for (H, (delta, sigma)); operators are built lazily and cached."""

    def __init__(self, H: HopfAlgebra, pair: ModularPair, *, require_involution: bool = True,
                 max_space: int = DEFAULT_MAX_SPACE):
        if require_involution and not (pair.normalized and pair.in_involution):
            raise NotInInvolution("the modular pair is not normalized and in involution")
        self.H = H
        self.pair = pair
        self.field = H.field
        self.d = H.dim
        self.max_space = max_space
        self.twisted = twisted_antipode(H, pair.delta)
        self._sigma = {k[0]: v for k, v in pair.sigma.as_vector().items()}
        self._tw = [{k: v for k, v in self.twisted.cols.get(i, {}).items()} for i in range(self.d)]
        self._cache: dict = {}

    # -- helpers ------------------------------------------------------------
    def _guard(self, n: int):
        if self.d ** n > self.max_space:
            raise LevelCapExceeded(
                f"level {n} has dimension {self.d}^{n} = {self.d ** n} > cap {self.max_space}")

    def dims(self, n: int) -> tuple:
        return (self.d,) * n

    def identity(self, n: int) -> TensorMap:
        return TensorMap.identity(self.field, self.dims(n))

    def _cached(self, key, build):
        m = self._cache.get(key)
        if m is None:
            m = build()
            self._cache.setdefault(key, m)
            m = self._cache[key]
        return m

    def _mul_vec(self, a: int, vec: dict) -> dict:
        """e_a . vec for a dict vector of H."""
        out: dict = {}
        mt = self.H.mult_table
        for b, c in vec.items():
            for k, v in mt.get((a, b), {}).items():
                out[k] = out.get(k, 0) + v * c
        return {k: v for k, v in out.items() if v}

    def _vec_mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        mt = self.H.mult_table
        for a, cu in u.items():
            for b, cv in v.items():
                for k, w in mt.get((a, b), {}).items():
                    out[k] = out.get(k, 0) + w * cu * cv
        return {k: w for k, w in out.items() if w}

    def _apply(self, m: dict, vec: dict) -> dict:
        out: dict = {}
        for i, c in vec.items():
            for k, v in m[i].items():
                out[k] = out.get(k, 0) + v * c
        return {k: v for k, v in out.items() if v}

    def _iterated(self, n: int) -> list:
        """Delta^(n-1)(S~(e_i)) for every basis index i, as dicts of n-tuples."""
        def build():
            De = self.H.comult_table
            out = []
            for i in range(self.d):
                cur = {(k,): v for k, v in self._tw[i].items()}
                for _ in range(n - 1):
                    nxt: dict = {}
                    for key, c in cur.items():
                        for (p, q), w in De[key[-1]].items():
                            nk = key[:-1] + (p, q)
                            nxt[nk] = nxt.get(nk, 0) + c * w
                    cur = {k: v for k, v in nxt.items() if v}
                out.append(cur)
            return out
        return self._cached(("iterated", n), build)

    def _cyclic_image(self, n: int, first: dict, tails: list) -> dict:
        """Delta^(n-1)(S~(first)) . (tails[0] (x) ... (x) tails[n-1])."""
        iterated = self._iterated(n)
        out: dict = {}
        cache = [dict() for _ in tails]
        for i, ci in first.items():
            for key, c in iterated[i].items():
                parts = []
                for slot, a in enumerate(key):
                    p = cache[slot].get(a)
                    if p is None:
                        p = cache[slot][a] = self._mul_vec(a, tails[slot])
                    if not p:
                        break
                    parts.append(p)
                else:
                    _expand(parts, c * ci, out)
        return out

    # -- operators ----------------------------------------------------------
    def face(self, n: int, i: int) -> TensorMap:
        if n < 1 or not 0 <= i <= n:
            raise IndexError(f"face index {i} out of range at level {n}")
        self._guard(n)
        H = self.H

        def build():
            if i == 0:
                return tensor(H.unit, self.identity(n - 1))
            if i == n:
                return tensor(self.identity(n - 1), self.pair.sigma)
            return tensor(tensor(self.identity(i - 1), H.comult), self.identity(n - 1 - i))
        return self._cached(("face", n, i), build)

    def degeneracy(self, n: int, i: int) -> TensorMap:
        if n < 0 or not 0 <= i <= n:
            raise IndexError(f"degeneracy index {i} out of range at level {n}")
        self._guard(n + 1)
        return self._cached(
            ("degeneracy", n, i),
            lambda: tensor(tensor(self.identity(i), self.H.counit), self.identity(n - i)))

    def cyclic(self, n: int) -> TensorMap:
        if n < 0:
            raise IndexError("negative level")
        self._guard(n)
        if n == 0:
            return self.identity(0)

        def build():
            sigma = self._sigma
            return TensorMap.from_columns(
                self.field, self.dims(n), self.dims(n),
                lambda idx: self._cyclic_image(
                    n, {idx[0]: 1}, [{h: 1} for h in idx[1:]] + [sigma]))
        return self._cached(("cyclic", n), build)

    def extra_degeneracy(self, n: int) -> TensorMap:
        """sigma_{-1} = sigma_n o tau_{n+1}: C^(n+1) -> C^n."""
        return self._cached(("extra", n), lambda: compose(self.degeneracy(n, n), self.cyclic(n + 1)))

    def cyclic_power_formula(self, n: int, j: int) -> TensorMap:
        """Closed form of tau_n^j for 1 <= j <= n + 1.

        tau_n^j(h^1..h^n) = Delta^(n-1) S~(x_j) . (x_{j+1} (x) ... (x) x_{j+n}) where
        x = (h^1, ..., h^n, sigma, S~^2(h^1) sigma, ..., S~^2(h^n) sigma).
        """
        if not 1 <= j <= n + 1:
            raise IndexError("power out of range")
        self._guard(n)
        sigma = self._sigma
        tw2 = [self._apply(self._tw, self._tw[i]) for i in range(self.d)]
        tw2s = [self._vec_mul(v, sigma) for v in tw2]

        def col(idx):
            xs = [{h: 1} for h in idx] + [sigma] + [tw2s[h] for h in idx]
            return self._cyclic_image(n, xs[j - 1], xs[j:j + n])
        return TensorMap.from_columns(self.field, self.dims(n), self.dims(n), col)

    # -- verification ------------------------------------------------------
    def _label(self, m: TensorMap, c: int) -> str:
        return self.H.label(unflatten(c, m.dom)) if m.dom else "1"

    def _identity_check(self, rep: Report, name: str, lhs: TensorMap, rhs: TensorMap):
        c = lhs.first_difference(rhs)
        rep.check(name, c is None, None if c is None else self._label(lhs, c))

    def verify_cocyclic(self, max_level: int, induction_levels: int = 3) -> Report:
        """Every cosimplicial and cyclic identity whose spaces sit at levels <= max_level."""
        self._guard(max_level)
        rep = Report(f"cocyclic identities up to level {max_level}")
        N = max_level
        f, s, t, I = self.face, self.degeneracy, self.cyclic, self.identity
        for n in range(2, N + 1):
            for j in range(1, n + 1):
                for i in range(j):
                    self._identity_check(rep, f"d{j} d{i} = d{i} d{j - 1} (level {n})",
                                         compose(f(n, j), f(n - 1, i)), compose(f(n, i), f(n - 1, j - 1)))
        for n in range(0, N - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    self._identity_check(rep, f"s{j} s{i} = s{i} s{j + 1} (level {n})",
                                         compose(s(n, j), s(n + 1, i)), compose(s(n, i), s(n + 1, j + 1)))
        for n in range(0, N):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = compose(s(n, j), f(n + 1, i))
                    if i < j:
                        rhs, what = compose(f(n, i), s(n - 1, j - 1)), f"d{i} s{j - 1}"
                    elif i in (j, j + 1):
                        rhs, what = I(n), "id"
                    else:
                        rhs, what = compose(f(n, i - 1), s(n - 1, j)), f"d{i - 1} s{j}"
                    self._identity_check(rep, f"s{j} d{i} = {what} (level {n})", lhs, rhs)
        for n in range(1, N + 1):
            self._identity_check(rep, f"t{n} d0 = d{n}", compose(t(n), f(n, 0)), f(n, n))
            for i in range(1, n + 1):
                self._identity_check(rep, f"t{n} d{i} = d{i - 1} t{n - 1}",
                                     compose(t(n), f(n, i)), compose(f(n, i - 1), t(n - 1)))
        for n in range(0, N):
            t1 = t(n + 1)
            self._identity_check(rep, f"t{n} s0 = s{n} t{n + 1}^2",
                                 compose(t(n), s(n, 0)), compose(s(n, n), compose(t1, t1)))
            for i in range(1, n + 1):
                self._identity_check(rep, f"t{n} s{i} = s{i - 1} t{n + 1}",
                                     compose(t(n), s(n, i)), compose(s(n, i - 1), t1))
        for n in range(0, N + 1):
            self._identity_check(rep, f"t{n}^{n + 1} = id", t(n).power(n + 1), I(n))
        for n in range(1, min(N, induction_levels) + 1):
            for j in range(1, n + 2):
                self._identity_check(rep, f"t{n}^{j} closed form", t(n).power(j),
                                     self.cyclic_power_formula(n, j))
        return rep

    # -- (b, B) bicomplex ------------------------------------------------
    def hochschild_b(self, n: int) -> TensorMap:
        """b: C^(n-1) -> C^n."""
        def build():
            out = TensorMap.zero(self.field, self.dims(n - 1), self.dims(n))
            for i in range(n + 1):
                out = out + (self.face(n, i) if i % 2 == 0 else -self.face(n, i))
            return out
        return self._cached(("b", n), build)

    def _lam(self, m: int) -> TensorMap:
        return self.cyclic(m) if m % 2 == 0 else -self.cyclic(m)

    def connes_B(self, n: int) -> TensorMap:
        """B: C^(n+1) -> C^n."""
        def build():
            lam = self._lam(n)
            N = TensorMap.zero(self.field, self.dims(n), self.dims(n))
            p = self.identity(n)
            for _ in range(n + 1):
                N = N + p
                p = compose(lam, p)
            one_minus = self.identity(n + 1) - self._lam(n + 1)
            return compose(N, compose(self.extra_degeneracy(n), one_minus))
        return self._cached(("B", n), build)

    def bicomplex(self, max_level: int) -> tuple[dict, dict]:
        """b_n for 1 <= n <= L and B_n for 0 <= n < L, with b^2 = B^2 = bB + Bb = 0 asserted."""
        self._guard(max_level)
        L = max_level
        b = {n: self.hochschild_b(n) for n in range(1, L + 1)}
        B = {n: self.connes_B(n) for n in range(0, L)}
        for n in range(1, L):
            if compose(b[n + 1], b[n]) != TensorMap.zero(self.field, self.dims(n - 1), self.dims(n + 1)):
                raise BicomplexError(f"b^2 != 0 from level {n - 1}")
        for n in range(1, L):
            if compose(B[n - 1], B[n]) != TensorMap.zero(self.field, self.dims(n + 1), self.dims(n - 1)):
                raise BicomplexError(f"B^2 != 0 from level {n + 1}")
        for n in range(0, L):
            total = TensorMap.zero(self.field, self.dims(n), self.dims(n))
            if n >= 1:
                total = total + compose(b[n], B[n - 1])
            if n + 1 <= L:
                total = total + compose(B[n], b[n + 1])
            if total.cols:
                raise BicomplexError(f"bB + Bb != 0 at level {n}")
        return b, B

    def bicomplex_report(self, max_level: int) -> Report:
        """The three bicomplex identities at each level, as named checks."""
        self._guard(max_level)
        L = max_level
        rep = Report(f"bicomplex identities up to level {L}")
        b = {n: self.hochschild_b(n) for n in range(1, L + 1)}
        B = {n: self.connes_B(n) for n in range(0, L)}
        for n in range(1, L):
            rep.check(f"b b = 0 from level {n - 1}", not compose(b[n + 1], b[n]).cols)
            rep.check(f"B B = 0 from level {n + 1}", not compose(B[n - 1], B[n]).cols)
        for n in range(0, L):
            total = compose(B[n], b[n + 1])
            if n >= 1:
                total = total + compose(b[n], B[n - 1])
            rep.check(f"bB + Bb = 0 at level {n}", not total.cols)
        return rep

    def total_differential(self, n: int, b: dict, B: dict) -> TensorMap:
        """(b + B): Tot^n -> Tot^(n+1), Tot^n = C^n + C^(n-2) + ... (in that order)."""
        src = list(range(n, -1, -2))
        dst = list(range(n + 1, -1, -2))
        sizes = lambda levels: [self.d ** k for k in levels]  # noqa: E731
        blocks = {}
        for j, k in enumerate(src):
            blocks[(j, j)] = b[k + 1]  # C^k -> C^(k+1) sits in row block j
            if k >= 1:
                blocks[(j + 1, j)] = B[k - 1]  # C^k -> C^(k-1) sits in row block j+1
        return block(self.field, blocks, sizes(dst), sizes(src))

    def cohomology_dims(self, max_degree: int) -> list[dict]:
        """Hochschild and cyclic cohomology dimensions for degrees 0..max_degree."""
        L = max_degree + 1
        self._guard(L)
        b, B = self.bicomplex(L)
        rb = {n: rank(b[n]) for n in b}
        rb[0] = 0
        D = {n: self.total_differential(n, b, B) for n in range(0, max_degree + 1)}
        rD = {n: rank(D[n]) for n in D}
        rD[-1] = 0
        table = []
        for n in range(max_degree + 1):
            dimC = self.d ** n
            tot = sum(self.d ** k for k in range(n, -1, -2))
            table.append({
                "degree": n,
                "dim_C": dimC,
                "dim_Tot": tot,
                "HH": dimC - rb[n + 1] - rb[n],
                "HC": tot - rD[n] - rD[n - 1],
            })
        return table
