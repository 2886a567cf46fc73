"""Persistent homology via boundary-matrix column reduction.

Columns are processed dimension by dimension, top down, so the clearing trick
applies: the pivot rows found while reducing dimension d are exactly the cells
of dimension d - 1 whose own columns would reduce to zero, and those columns
are skipped outright.  Within a dimension the rows are reindexed locally, which
keeps the F_2 fast path (columns as Python ints, addition = XOR, pivot = top
bit) compact even in large complexes.

Boundary coefficients are stored as integers by the builders and only reduced
mod p here, so the same complex can be reduced over several primes.  A pair
with equal entry times contributes no bar; an unpaired cell contributes an
essential bar (birth, inf).  Output dimensions honor the complex's reliability
rule: a truncated complex cannot certify its cut dimension.
"""

from __future__ import annotations

from collections import defaultdict

from .bars import INF, Bar, Barcode, GradedBarcode
from .complexes import FilteredComplex
from .errors import InputError

DEFAULT_FIELD = 2
MAX_FIELD = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_field(p: int) -> None:
    if not isinstance(p, int) or not 2 <= p < MAX_FIELD or not _is_prime(p):
        raise InputError(f"field characteristic must be a prime below 2^31, got {p!r}")


def _reduction_pairs(cx: FilteredComplex, p: int) -> tuple[list[tuple[int, int]], bytearray]:
    """Run the reduction; return (negative pairs as (row, column) ids, paired flags)."""
    cells = cx.cells
    ids_by_dim: dict[int, list[int]] = defaultdict(list)
    for j, cell in enumerate(cells):
        ids_by_dim[cell.dim].append(j)

    paired = bytearray(len(cells))
    cleared = bytearray(len(cells))
    pairs: list[tuple[int, int]] = []

    for d in range(cx.top_dim, 0, -1):
        rows = ids_by_dim.get(d - 1, [])
        local = {gid: k for k, gid in enumerate(rows)}
        if p == 2:
            owner: dict[int, int] = {}
            for j in ids_by_dim.get(d, []):
                if cleared[j]:
                    continue
                col = 0
                for i, c in cells[j].boundary:
                    if c % 2:
                        col |= 1 << local[i]
                while col:
                    piv = col.bit_length() - 1
                    other = owner.get(piv)
                    if other is None:
                        break
                    col ^= other
                if col:
                    piv = col.bit_length() - 1
                    owner[piv] = col
                    i = rows[piv]
                    cleared[i] = 1
                    paired[i] = paired[j] = 1
                    pairs.append((i, j))
        else:
            # Owner columns are normalized to pivot coefficient 1 on insertion.
            owner_p: dict[int, dict[int, int]] = {}
            for j in ids_by_dim.get(d, []):
                if cleared[j]:
                    continue
                col: dict[int, int] = {}
                for i, c in cells[j].boundary:
                    v = c % p
                    if v:
                        col[local[i]] = v
                while col:
                    piv = max(col)
                    other = owner_p.get(piv)
                    if other is None:
                        break
                    factor = col[piv]
                    for r, v in other.items():
                        nv = (col.get(r, 0) - factor * v) % p
                        if nv:
                            col[r] = nv
                        else:
                            col.pop(r, None)
                if col:
                    piv = max(col)
                    inv = pow(col[piv], p - 2, p)
                    owner_p[piv] = {r: (v * inv) % p for r, v in col.items()}
                    i = rows[piv]
                    cleared[i] = 1
                    paired[i] = paired[j] = 1
                    pairs.append((i, j))
    return pairs, paired


def reduce(cx: FilteredComplex, p: int = DEFAULT_FIELD) -> GradedBarcode:
    """Barcodes of a filtered complex over F_p, dimensions 0..cx.reliable_dim.

    Every reliable dimension appears in the result, empty or not, so serialized
    documents record which dimensions were actually computed.
    """
    _check_field(p)
    pairs, paired = _reduction_pairs(cx, p)

    reliable = cx.reliable_dim
    bars_by_dim: dict[int, list[Bar]] = {n: [] for n in range(reliable + 1)}
    cells = cx.cells
    for i, j in pairs:
        birth, death = cells[i].filtration, cells[j].filtration
        if birth != death:
            bars_by_dim[cells[i].dim].append(Bar(birth, death))
    for j, flag in enumerate(paired):
        if not flag and cells[j].dim <= reliable:
            bars_by_dim[cells[j].dim].append(Bar(cells[j].filtration, INF))
    return GradedBarcode({n: Barcode(bars) for n, bars in bars_by_dim.items()})


def betti_curve(cx: FilteredComplex, p: int, n: int) -> tuple[tuple[float, int], ...]:
    """Step function t -> dim over F_p of degree-n homology, as (start, value) pairs.

    Each pair gives the value on [start, next start); the first start is 0.0.
    Dimensions above the complex's reliable range are refused unless the
    complex is complete there, in which case the curve is identically zero.
    """
    if n < 0:
        raise InputError(f"homological dimension must be >= 0, got {n}")
    if n > cx.reliable_dim:
        if cx.complete:
            _check_field(p)
            return ((0.0, 0),)
        raise InputError(
            f"dimension {n} is not reliable for a complex truncated at {cx.top_dim}; "
            f"rebuild with maxdim >= {n + 1}"
        )
    code = reduce(cx, p)[n]
    curve: list[tuple[float, int]] = []
    for t in sorted({0.0, *code.endpoints()}):
        v = code.dim_at(t)
        if not curve or curve[-1][1] != v:
            curve.append((t, v))
    return tuple(curve)
