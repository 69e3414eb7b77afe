"""Sparse linear maps between tensor powers, with exact scalar entries.

A :class:`TensorMap` goes from a space with leg dimensions ``dom`` to one
with leg dimensions ``cod``.  For maps on tensor powers of one algebra of
dimension ``d`` the legs are ``(d,) * arity``; the empty tuple is the
ground field (dimension 1).

Multi-index convention, used everywhere: a basis tensor
``e_{i_1} (x) ... (x) e_{i_k}`` has flat index computed row-major, i.e. the
LEFTMOST factor is the most significant digit.  ``tensor(f, g)`` therefore
puts the legs of ``f`` to the left of the legs of ``g``.

Entries are stored column-wise: ``cols[c][r]`` is the coefficient of the
output basis vector ``r`` in the image of input basis vector ``c``.  No
zero is ever stored and no empty column is kept.
"""

from __future__ import annotations

from math import prod
from typing import Callable, Iterable, Mapping

from .fields import RATIONALS, FieldMismatch, FieldSpec


class ShapeMismatch(ValueError):
    pass


def flatten(idx: Iterable[int], dims: tuple) -> int:
    flat = 0
    for i, d in zip(idx, dims):
        flat = flat * d + i
    return flat


def unflatten(flat: int, dims: tuple) -> tuple:
    out = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


def multi_indices(dims: tuple):
    """All multi-indices of ``dims`` in flat-index order."""
    if not dims:
        yield ()
        return
    import itertools

    yield from itertools.product(*(range(d) for d in dims))


class TensorMap:
    __slots__ = ("field", "dom", "cod", "cols", "_hash")

    def __init__(self, fld: FieldSpec, dom: tuple, cod: tuple, cols: Mapping[int, Mapping[int, object]]):
        self.field = fld
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.cols = _drop_zeros(cols)
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def from_entries(cls, fld, dom, cod, entries: Iterable) -> "TensorMap":
        """Build from ``(row_multi_index, col_multi_index, scalar)`` triples.

        Repeated positions accumulate; indices are range-checked.
        """
        dom, cod = tuple(dom), tuple(cod)
        cols: dict = {}
        for ridx, cidx, v in entries:
            ridx, cidx = tuple(ridx), tuple(cidx)
            _check_index(ridx, cod, "row")
            _check_index(cidx, dom, "column")
            v = fld.coerce(v)
            r, c = flatten(ridx, cod), flatten(cidx, dom)
            col = cols.setdefault(c, {})
            col[r] = col.get(r, 0) + v
        return cls(fld, dom, cod, _drop_zeros(cols))

    @classmethod
    def from_columns(cls, fld, dom, cod, fn: Callable[[tuple], Mapping[tuple, object]]) -> "TensorMap":
        """Build by evaluating ``fn`` on every input basis multi-index.

        ``fn`` returns the image as a mapping from output multi-index to
        coefficient.
        """
        dom, cod = tuple(dom), tuple(cod)
        cols = {}
        for c, cidx in enumerate(multi_indices(dom)):
            img = fn(cidx)
            col = {}
            for ridx, v in img.items():
                if v:
                    r = flatten(ridx, cod)
                    col[r] = col.get(r, 0) + v
            col = {r: v for r, v in col.items() if v}
            if col:
                cols[c] = col
        return cls(fld, dom, cod, cols)

    @classmethod
    def zero(cls, fld, dom, cod) -> "TensorMap":
        return cls(fld, dom, cod, {})

    @classmethod
    def identity(cls, fld, dims) -> "TensorMap":
        n = prod(dims)
        return cls(fld, dims, dims, {i: {i: 1} for i in range(n)})

    @classmethod
    def vector(cls, fld, cod, coeffs: Mapping[tuple, object]) -> "TensorMap":
        """A vector of ``cod`` as a map from the ground field."""
        return cls.from_entries(fld, (), cod, ((k, (), v) for k, v in coeffs.items()))

    @classmethod
    def covector(cls, fld, dom, coeffs: Mapping[tuple, object]) -> "TensorMap":
        return cls.from_entries(fld, dom, (), (((), k, v) for k, v in coeffs.items()))

    @classmethod
    def scalar(cls, fld, value) -> "TensorMap":
        value = fld.coerce(value)
        return cls(fld, (), (), {0: {0: value}} if value else {})

    @classmethod
    def permutation(cls, fld, dims: tuple, perm: tuple) -> "TensorMap":
        """Leg permutation: input leg ``perm[k]`` becomes output leg ``k``."""
        dims = tuple(dims)
        out_dims = tuple(dims[p] for p in perm)
        cols = {}
        for c, idx in enumerate(multi_indices(dims)):
            cols[c] = {flatten((idx[p] for p in perm), out_dims): 1}
        return cls(fld, dims, out_dims, cols)

    # -- shape --------------------------------------------------------
    @property
    def domain_arity(self) -> int:
        return len(self.dom)

    @property
    def codomain_arity(self) -> int:
        return len(self.cod)

    @property
    def base_dim(self):
        dims = set(self.dom) | set(self.cod)
        if len(dims) > 1:
            raise ShapeMismatch(f"mixed leg dimensions {self.dom} -> {self.cod}")
        return dims.pop() if dims else None

    @property
    def nrows(self) -> int:
        return prod(self.cod)

    @property
    def ncols(self) -> int:
        return prod(self.dom)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    # -- access -------------------------------------------------------
    def entries(self):
        """Sorted ``(row, col, value)`` triples with flat indices."""
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                yield r, c, col[r]

    def column(self, cidx) -> dict:
        """Image of a basis multi-index, as ``{row_multi_index: value}``."""
        c = flatten(cidx, self.dom) if isinstance(cidx, tuple) else cidx
        return {unflatten(r, self.cod): v for r, v in self.cols.get(c, {}).items()}

    def __getitem__(self, pos):
        r, c = pos
        if isinstance(r, tuple):
            r = flatten(r, self.cod)
        if isinstance(c, tuple):
            c = flatten(c, self.dom)
        return self.cols.get(c, {}).get(r, 0)

    def as_vector(self) -> dict:
        """Coefficients of a map out of the ground field, keyed by multi-index."""
        if self.dom:
            raise ShapeMismatch("as_vector needs a map from the ground field")
        return self.column(0)

    def as_covector(self) -> dict:
        if self.cod:
            raise ShapeMismatch("as_covector needs a map to the ground field")
        return {unflatten(c, self.dom): col[0] for c, col in self.cols.items()}

    def to_dense(self) -> list:
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            rows[r][c] = v
        return rows

    # -- algebra ------------------------------------------------------
    def __matmul__(self, other: "TensorMap") -> "TensorMap":
        return compose(self, other)

    def __add__(self, other: "TensorMap") -> "TensorMap":
        _same_space(self, other)
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            acc = cols.setdefault(c, {})
            for r, v in col.items():
                acc[r] = acc.get(r, 0) + v
        return TensorMap(self.field, self.dom, self.cod, _drop_zeros(cols))

    def __neg__(self) -> "TensorMap":
        return self.scale(-1)

    def __sub__(self, other: "TensorMap") -> "TensorMap":
        return self + (-other)

    def scale(self, s) -> "TensorMap":
        s = self.field.coerce(s)
        if not s:
            return TensorMap(self.field, self.dom, self.cod, {})
        return TensorMap(self.field, self.dom, self.cod,
                         {c: {r: v * s for r, v in col.items()} for c, col in self.cols.items()})

    def transpose(self) -> "TensorMap":
        cols: dict = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v
        return TensorMap(self.field, self.cod, self.dom, cols)

    def reshape(self, dom=None, cod=None) -> "TensorMap":
        """Reinterpret leg structure without moving any entry."""
        dom = self.dom if dom is None else tuple(dom)
        cod = self.cod if cod is None else tuple(cod)
        if prod(dom) != self.ncols or prod(cod) != self.nrows:
            raise ShapeMismatch("reshape must preserve total dimensions")
        return TensorMap(self.field, dom, cod, self.cols)

    def power(self, k: int) -> "TensorMap":
        if self.dom != self.cod:
            raise ShapeMismatch("power of a non-endomorphism")
        out = TensorMap.identity(self.field, self.dom)
        for _ in range(k):
            out = compose(self, out)
        return out

    def first_difference(self, other: "TensorMap"):
        """Smallest flat column index where the two maps differ, or None."""
        _same_space(self, other)
        for c in sorted(set(self.cols) | set(other.cols)):
            if self.cols.get(c, {}) != other.cols.get(c, {}):
                return c
        return None

    def __eq__(self, other):
        if not isinstance(other, TensorMap):
            return NotImplemented
        return (self.field == other.field and self.dom == other.dom
                and self.cod == other.cod and self.cols == other.cols)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, tuple(self.entries())))
        return self._hash

    def __repr__(self):
        return f"TensorMap({self.dom} -> {self.cod}, nnz={self.nnz})"


def _check_index(idx: tuple, dims: tuple, what: str):
    if len(idx) != len(dims):
        raise ShapeMismatch(f"{what} multi-index {idx} has arity {len(idx)}, expected {len(dims)}")
    for i, d in zip(idx, dims):
        if not 0 <= i < d:
            raise ShapeMismatch(f"{what} multi-index {idx} out of range for dimensions {dims}")


def _drop_zeros(cols: dict) -> dict:
    out = {}
    for c, col in cols.items():
        col = {r: v for r, v in col.items() if v}
        if col:
            out[c] = col
    return out


def _same_field(f: TensorMap, g: TensorMap):
    if f.field != g.field:
        raise FieldMismatch(f"field mismatch: {f.field.describe()} vs {g.field.describe()}")


def _same_space(f: TensorMap, g: TensorMap):
    _same_field(f, g)
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatch(f"maps live on different spaces: {f.dom}->{f.cod} vs {g.dom}->{g.cod}")


def compose(f: TensorMap, g: TensorMap) -> TensorMap:
    """``f o g`` (apply ``g`` first)."""
    _same_field(f, g)
    if f.dom != g.cod:
        raise ShapeMismatch(
            f"cannot compose: f has domain arity {len(f.dom)} {f.dom}, "
            f"g has codomain arity {len(g.cod)} {g.cod}")
    fcols = f.cols
    cols = {}
    for c, gcol in g.cols.items():
        acc: dict = {}
        for k, v in gcol.items():
            fcol = fcols.get(k)
            if fcol is None:
                continue
            for r, w in fcol.items():
                acc[r] = acc.get(r, 0) + w * v
        acc = {r: v for r, v in acc.items() if v}
        if acc:
            cols[c] = acc
    return TensorMap(f.field, g.dom, f.cod, cols)


def tensor(f: TensorMap, g: TensorMap) -> TensorMap:
    """Kronecker product ``f (x) g``; legs of ``f`` are the leftmost."""
    _same_field(f, g)
    gn_in, gn_out = g.ncols, g.nrows
    cols = {}
    for c1, col1 in f.cols.items():
        for c2, col2 in g.cols.items():
            col = {}
            for r1, v1 in col1.items():
                base = r1 * gn_out
                for r2, v2 in col2.items():
                    col[base + r2] = v1 * v2
            cols[c1 * gn_in + c2] = col
    return TensorMap(f.field, f.dom + g.dom, f.cod + g.cod, cols)


def tensor_all(maps: Iterable[TensorMap], fld: FieldSpec = RATIONALS) -> TensorMap:
    out = None
    for m in maps:
        out = m if out is None else tensor(out, m)
    return out if out is not None else TensorMap.identity(fld, ())


def block(fld: FieldSpec, blocks: Mapping[tuple, TensorMap], row_sizes: list, col_sizes: list) -> TensorMap:
    """Assemble a block matrix; ``blocks[(i, j)]`` fills row block i, column block j."""
    roff = [sum(row_sizes[:i]) for i in range(len(row_sizes))]
    coff = [sum(col_sizes[:j]) for j in range(len(col_sizes))]
    cols: dict = {}
    for (i, j), m in blocks.items():
        if m.nrows != row_sizes[i] or m.ncols != col_sizes[j]:
            raise ShapeMismatch(f"block ({i},{j}) has size {m.nrows}x{m.ncols}")
        for c, col in m.cols.items():
            acc = cols.setdefault(coff[j] + c, {})
            for r, v in col.items():
                acc[roff[i] + r] = acc.get(roff[i] + r, 0) + v
    return TensorMap(fld, (sum(col_sizes),), (sum(row_sizes),), _drop_zeros(cols))
