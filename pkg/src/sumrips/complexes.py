"""Filtered chain complexes and their two constructors.

`vietoris_rips` builds the flag complex of a finite generalized metric space:
a subset enters at the largest pairwise distance among its points, diagonal
entries included, so a point with d(v, v) > 0 is born late.  `tensor_complex`
builds the chain-level product of two filtered complexes with the usual Koszul
sign, filtered by the sum of the factor filtrations; its persistent homology is
exactly the algebraically predicted module for the sum-metric product.

Cells are globally ordered by (filtration, dimension, construction key), where
the construction key is the ascending vertex tuple for Rips cells and the pair
of factor ids for tensor cells.  Ids are positions in that order, so boundaries
always point at strictly smaller ids and the order is reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, InputError, SumripsError
from .metric import FiniteMetricSpace

DEFAULT_CELL_CAP = 50_000_000


class ComplexError(SumripsError):
    """A filtered complex violates its structural invariants."""


@dataclass(frozen=True, slots=True)
class Cell:
    """One cell: dimension, entry time, signed boundary, construction data.

    boundary holds (face id, integer coefficient) pairs in ascending id order.
    Exactly one of `vertices` (Rips: point indices, ascending) and `factors`
    (tensor: ids in the two factor complexes) is set; hand-built cells may
    leave both unset.
    """

    dim: int
    filtration: float
    boundary: tuple[tuple[int, int], ...]
    label: str
    vertices: tuple[int, ...] | None = None
    factors: tuple[int, int] | None = None


class FilteredComplex:
    """Immutable cell list plus the truncation bookkeeping reduction relies on.

    top_dim is the largest dimension the construction allowed; `complete` says
    the untruncated object holds nothing above it.  Homology is trustworthy up
    to `reliable_dim`: top_dim when complete, else top_dim - 1, because cycles
    in the cut dimension can never be paired with the missing cofaces.
    """

    __slots__ = ("cells", "top_dim", "complete")

    def __init__(self, cells: Sequence[Cell], top_dim: int, complete: bool) -> None:
        object.__setattr__(self, "cells", tuple(cells))
        object.__setattr__(self, "top_dim", int(top_dim))
        object.__setattr__(self, "complete", bool(complete))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FilteredComplex is immutable")

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def reliable_dim(self) -> int:
        return self.top_dim if self.complete else self.top_dim - 1

    def dim_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(c.dim for c in self.cells).items()))

    def critical_values(self) -> tuple[float, ...]:
        return tuple(sorted({c.filtration for c in self.cells}))

    def validate(self) -> None:
        """Check ordering, face monotonicity, and boundary-squared = 0 over Z.

        Integer coefficients make the d^2 check field-independent.  Intended
        for tests and debugging; builders already guarantee these invariants.
        """
        prev_key = (-math.inf, -1)
        for j, cell in enumerate(self.cells):
            key = (cell.filtration, cell.dim)
            if key < prev_key:
                raise ComplexError(f"cell {j} breaks the (filtration, dimension) order")
            prev_key = key
            if cell.dim > self.top_dim:
                raise ComplexError(f"cell {j} has dim {cell.dim} above top_dim {self.top_dim}")
            last_face = -1
            for i, coeff in cell.boundary:
                if coeff == 0:
                    raise ComplexError(f"cell {j} has a zero boundary coefficient")
                if not last_face < i < j:
                    raise ComplexError(f"cell {j} boundary ids are not ascending and below {j}")
                last_face = i
                face = self.cells[i]
                if face.dim != cell.dim - 1:
                    raise ComplexError(f"cell {j} (dim {cell.dim}) has a face of dim {face.dim}")
                if face.filtration > cell.filtration:
                    raise ComplexError(
                        f"face {i} enters at {face.filtration} after cell {j} at {cell.filtration}"
                    )
            square: dict[int, int] = defaultdict(int)
            for i, coeff in cell.boundary:
                for i2, coeff2 in self.cells[i].boundary:
                    square[i2] += coeff * coeff2
            if any(v != 0 for v in square.values()):
                raise ComplexError(f"boundary of boundary of cell {j} is nonzero")

    def dump_lines(self) -> list[str]:
        """Debug format, one cell per line: id dim filtration boundary label."""
        out = []
        for j, cell in enumerate(self.cells):
            pairs = ",".join(f"{i}:{c}" for i, c in cell.boundary) or "-"
            out.append(f"{j} {cell.dim} {cell.filtration!r} {pairs} {cell.label}")
        return out

    def __repr__(self) -> str:
        return (f"FilteredComplex(cells={len(self.cells)}, top_dim={self.top_dim}, "
                f"complete={self.complete})")


def rips_cell_count(n_points: int, maxdim: int) -> int:
    """Number of cells vietoris_rips would build; cheap cap pre-check."""
    top = min(maxdim, n_points - 1)
    return sum(math.comb(n_points, s) for s in range(1, top + 2))


def vietoris_rips(space: FiniteMetricSpace, maxdim: int,
                  cell_cap: int = DEFAULT_CELL_CAP) -> FilteredComplex:
    """Flag complex of all subsets of size <= maxdim + 1.

    The filtration value of a subset is the max of d over all ordered pairs of
    its points, including d(v, v): the diagonal can delay a vertex.  Faces never
    enter after cofaces because the max is monotone under inclusion.
    """
    if maxdim < 0:
        raise InputError(f"maxdim must be >= 0, got {maxdim}")
    m = len(space)
    top = min(maxdim, m - 1)
    needed = rips_cell_count(m, maxdim)
    if needed > cell_cap:
        raise CapExceeded(f"Rips complex needs {needed} cells, exceeding the cap {cell_cap}")

    dist = space.dist
    raw: list[tuple[float, int, tuple[int, ...]]] = []
    for size in range(1, top + 2):
        combos = np.array(list(itertools.combinations(range(m), size)), dtype=np.intp)
        filt = np.zeros(len(combos))
        for p in range(size):
            for q in range(p, size):
                np.maximum(filt, dist[combos[:, p], combos[:, q]], out=filt)
        dim = size - 1
        for verts, f in zip(combos.tolist(), filt.tolist()):
            raw.append((f, dim, tuple(verts)))
    raw.sort()

    id_of = {verts: j for j, (_, _, verts) in enumerate(raw)}
    labels = space.labels
    cells = []
    for f, dim, verts in raw:
        if dim == 0:
            boundary: tuple[tuple[int, int], ...] = ()
        else:
            pairs = []
            for pos in range(len(verts)):
                face = verts[:pos] + verts[pos + 1:]
                pairs.append((id_of[face], -1 if pos & 1 else 1))
            pairs.sort()
            boundary = tuple(pairs)
        cells.append(Cell(dim, f, boundary, ",".join(labels[v] for v in verts), vertices=verts))
    return FilteredComplex(cells, top, maxdim >= m - 1)


def tensor_cell_count(cx: FilteredComplex, cy: FilteredComplex, maxdim: int | None) -> int:
    by_x = Counter(c.dim for c in cx.cells)
    by_y = Counter(c.dim for c in cy.cells)
    full = cx.top_dim + cy.top_dim
    top = full if maxdim is None else min(maxdim, full)
    return sum(nx * ny
               for dx, nx in by_x.items() if dx <= top
               for dy, ny in by_y.items() if dx + dy <= top)


def tensor_complex(cx: FilteredComplex, cy: FilteredComplex, maxdim: int | None = None,
                   cell_cap: int = DEFAULT_CELL_CAP) -> FilteredComplex:
    """Chain-level product: cells (s, t), filtration l(s) + l(t), Koszul signs.

    d(s x t) = ds x t + (-1)^dim(s) s x dt.  Keeping all pairs with total
    dimension <= maxdim requires each factor to carry every cell up to maxdim
    itself (or be complete); otherwise low product dimensions would silently
    lose cells, so that is rejected rather than repaired.
    """
    full = cx.top_dim + cy.top_dim
    if maxdim is not None and maxdim < 0:
        raise InputError(f"maxdim must be >= 0, got {maxdim}")
    top = full if maxdim is None else min(maxdim, full)
    for name, factor in (("left", cx), ("right", cy)):
        if not factor.complete and factor.top_dim < top:
            raise InputError(
                f"{name} factor is truncated at dim {factor.top_dim} < {top}; "
                f"build it at least to dim {top} for a faithful product"
            )
    needed = tensor_cell_count(cx, cy, maxdim)
    if needed > cell_cap:
        raise CapExceeded(f"tensor complex needs {needed} cells, exceeding the cap {cell_cap}")

    by_dim_y = defaultdict(list)
    for j, b in enumerate(cy.cells):
        by_dim_y[b.dim].append(j)
    raw: list[tuple[float, int, tuple[int, int]]] = []
    for i, a in enumerate(cx.cells):
        room = top - a.dim
        if room < 0:
            continue
        for dy in range(room + 1):
            for j in by_dim_y.get(dy, ()):
                b = cy.cells[j]
                raw.append((a.filtration + b.filtration, a.dim + dy, (i, j)))
    raw.sort()

    id_of = {pair: j for j, (_, _, pair) in enumerate(raw)}
    cells = []
    for f, dim, (i, j) in raw:
        a, b = cx.cells[i], cy.cells[j]
        pairs = [(id_of[fi, j], coeff) for fi, coeff in a.boundary]
        sign = -1 if a.dim & 1 else 1
        pairs.extend((id_of[i, gj], sign * coeff) for gj, coeff in b.boundary)
        pairs.sort()
        cells.append(Cell(dim, f, tuple(pairs), f"{a.label}|{b.label}", factors=(i, j)))
    complete = cx.complete and cy.complete and top == full
    return FilteredComplex(cells, top, complete)


@dataclass(frozen=True, slots=True)
class FiltrationCheckReport:
    """Outcome of the product filtration sandwich check."""

    ok: bool
    cells_checked: int
    violation: tuple[str, float, float, float] | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"ok: {self.cells_checked} product cells satisfy the filtration bounds"
        label, filt, lower, upper = self.violation
        return (f"violation at cell {label}: filtration {filt!r} outside "
                f"[{lower!r}, {upper!r}] after {self.cells_checked} checks")


def verify_product_filtration(product: FilteredComplex, x: FiniteMetricSpace,
                              y: FiniteMetricSpace) -> FiltrationCheckReport:
    """Check max(l_X, l_Y) <= l_product <= l_X + l_Y on every cell of `product`.

    Cells must carry product-space vertices (index = ix * len(y) + iy).  The
    factor filtrations are evaluated on the projected vertex sets, diagonal
    included, so the bounds hold exactly in float arithmetic.
    """
    dx, dy = x.dist, y.dist
    ny = len(y)
    checked = 0
    for cell in product.cells:
        if cell.vertices is None:
            raise InputError("product complex cells lack vertex data")
        xs = sorted({v // ny for v in cell.vertices})
        ys = sorted({v % ny for v in cell.vertices})
        lx = max(dx[p, q] for p in xs for q in xs)
        ly = max(dy[p, q] for p in ys for q in ys)
        checked += 1
        if not max(lx, ly) <= cell.filtration <= lx + ly:
            return FiltrationCheckReport(False, checked,
                                         (cell.label, cell.filtration, max(lx, ly), lx + ly))
    return FiltrationCheckReport(True, checked)


def filtration_inequality_check(x: FiniteMetricSpace, y: FiniteMetricSpace, maxdim: int,
                                cell_cap: int = DEFAULT_CELL_CAP) -> FiltrationCheckReport:
    """Build the sum-metric product Rips complex and run the sandwich check."""
    from .metric import product_sum

    product = vietoris_rips(product_sum(x, y), maxdim, cell_cap=cell_cap)
    return verify_product_filtration(product, x, y)
