"""Exact rank, kernel and linear solves for sparse :class:`TensorMap` matrices.

Sparse Gauss-Jordan elimination over the map's field.  Pivoting is fixed:
columns are scanned in increasing order and the pivot is the remaining row
with the smallest index holding a nonzero entry in that column.  Output is
therefore a deterministic function of the input.
"""

from __future__ import annotations

from .fields import inv
from .tensormap import TensorMap, compose


def _rows_of(f: TensorMap) -> dict:
    rows: dict = {}
    for c, col in f.cols.items():
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    return rows


def _rref(rows: dict, ncols: int, stop_col: int | None = None):
    """Reduce ``rows`` (row index -> {col: value}) in place.

    Returns ``(pivots, reduced)`` where ``pivots`` maps pivot column to the
    reduced row (pivot entry normalized to 1).  Columns ``>= stop_col`` are
    carried along but never pivoted on.
    """
    stop = ncols if stop_col is None else stop_col
    # column -> set of live row ids holding a nonzero there
    where: dict = {}
    for rid, row in rows.items():
        for c in row:
            where.setdefault(c, set()).add(rid)
    live = set(rows)
    pivots: dict = {}
    # fill-in only ever lands right of the current column, so a plain scan is exact
    for c in range(stop):
        holders = where.get(c)
        cand = holders & live if holders else None
        if not cand:
            continue
        p = min(cand)
        live.discard(p)
        prow = rows[p]
        scale = inv(prow[c])
        if scale != 1:
            for k in prow:
                prow[k] = prow[k] * scale
        for rid in list(where[c]):
            if rid == p:
                continue
            row = rows[rid]
            factor = row[c]
            for k, v in prow.items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    if k not in row:
                        where.setdefault(k, set()).add(rid)
                    row[k] = nv
                elif k in row:
                    del row[k]
                    where[k].discard(rid)
        pivots[c] = p
    return pivots, rows


def rank(f: TensorMap) -> int:
    pivots, _ = _rref(_rows_of(f), f.ncols)
    return len(pivots)


def rank_and_kernel(f: TensorMap) -> tuple[int, list[dict]]:
    """Exact rank of ``f`` and a basis of its kernel.

    Kernel vectors are ``{domain flat index: value}`` dicts, one per free
    column in increasing order, each with a 1 at its own free column and
    zeros at the other free columns (reduced echelon form).
    """
    n = f.ncols
    pivots, rows = _rref(_rows_of(f), n)
    pivot_rows = {c: rows[p] for c, p in pivots.items()}
    # free column -> list of (pivot col, coefficient in that pivot row)
    deps: dict = {}
    for pc, row in pivot_rows.items():
        for k, v in row.items():
            if k != pc:
                deps.setdefault(k, []).append((pc, v))
    kernel = []
    for fc in range(n):
        if fc in pivots:
            continue
        vec = {fc: 1}
        for pc, v in deps.get(fc, ()):
            vec[pc] = -v
        kernel.append(dict(sorted(vec.items())))
    return len(pivots), kernel


def solve(f: TensorMap, rhs: TensorMap):
    """A solution ``x`` (as a map from the ground field) of ``f x = rhs``, or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    if rhs.dom != () or rhs.cod != f.cod:
        raise ValueError("rhs must be a vector in the codomain of f")
    n = f.ncols
    rows = _rows_of(f)
    for r, v in rhs.cols.get(0, {}).items():
        rows.setdefault(r, {})[n] = v
    pivots, rows = _rref(rows, n + 1, stop_col=n)
    pivot_rows = {p for p in pivots.values()}
    for rid, row in rows.items():
        if rid not in pivot_rows and row.get(n):
            return None
    col = {}
    for c, p in pivots.items():
        v = rows[p].get(n, 0)
        if v:
            col[c] = v
    x = TensorMap(f.field, (), f.dom, {0: col} if col else {})
    assert compose(f, x) == rhs
    return x


def kernel_maps(f: TensorMap) -> list[TensorMap]:
    """Kernel basis as vectors (maps from the ground field) in ``f.dom``."""
    _, ker = rank_and_kernel(f)
    return [TensorMap(f.field, (), f.dom, {0: v}) for v in ker]
