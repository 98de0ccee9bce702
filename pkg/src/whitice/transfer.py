"""Row transfer contraction: layer-by-layer evaluation of ice systems.

The one-row transfer operator of width C is conceptually a 2^C x 2^C matrix
V(alpha, beta) holding the weight of the unique admissible horizontal
completion of a row with vertical spins alpha on top and beta below (zero if
none exists).  It is never materialized: applying it to a supported layer
vector walks each alpha across the columns, branching on the bottom spin and
carrying just the forced horizontal spin and the running charge label, so the
cost is proportional to support size times columns times branching.

Contraction sweeps a full system top to bottom, merging layer vectors as it
goes; many enumeration paths share layers, which is the speedup over direct
state enumeration.  Two-row systems (a gamma row above a delta row or the
reverse, top boundary carrying two more - spins than the bottom) use the same
walker with explicit per-row (family, variable) assignments.
"""

from __future__ import annotations

import random
from typing import Iterator

from .coeffs import Mode
from .lattice import (MINUS, PLUS, Boundary, row_variable, weight_table)
from .laurent import LaurentPoly

Layer = tuple[int, ...]
LayerVector = dict[Layer, LaurentPoly]


def row_completions(top: Layer, columns: int, family: str,
                    mode: Mode) -> Iterator[tuple[Layer, object, int]]:
    """Yield (bottom layer, coefficient, z-exponent) for every admissible
    one-row completion below the given top layer.

    gamma rows are walked right to left (their charge counts + spins to the
    east, so the label is known on arrival); delta rows left to right.  The
    horizontal spin ahead of the walk is forced by parity at each step, and
    walks die as soon as they hit an inadmissible configuration.
    """
    table = weight_table(family)
    topset = frozenset(top)
    n = mode.n
    if family == "gamma":
        positions = range(columns - 1, -1, -1)  # start at the - right boundary
        start_spin = MINUS
    else:
        positions = range(columns)  # start at the + left boundary
        start_spin = PLUS
    order = list(positions)

    def walk(step: int, ahead: int, label: int, minus_cols: list[int],
             coeff, zexp: int):
        if step == len(order):
            if family == "gamma":
                if ahead == PLUS:  # left boundary reached
                    yield tuple(sorted(minus_cols, reverse=True)), coeff, zexp
            else:
                if ahead == MINUS:  # right boundary reached
                    yield tuple(sorted(minus_cols, reverse=True)), coeff, zexp
            return
        p = order[step]
        c = columns - 1 - p
        nsp = MINUS if c in topset else PLUS
        for ssp in (PLUS, MINUS):
            if family == "gamma":
                west = nsp * ssp * ahead
                config = (nsp, ssp, west, ahead)
            else:
                east = nsp * ssp * ahead
                config = (nsp, ssp, ahead, east)
            entry = table.get(config)
            if entry is None:
                continue
            kind, inc = entry
            if kind == "1":
                factor = None
            elif kind == "g":
                factor = mode.g(label)
            else:
                factor = mode.h(label)
            if factor is not None and mode.is_zero(factor):
                continue
            new_coeff = coeff if factor is None else coeff * factor
            if family == "gamma":
                new_ahead = west
                new_label = (label + (1 if west == PLUS else 0)) % n
            else:
                new_ahead = east
                new_label = (label + (1 if east == MINUS else 0)) % n
            if ssp == MINUS:
                minus_cols.append(c)
            yield from walk(step + 1, new_ahead, new_label, minus_cols,
                            new_coeff, zexp + inc)
            if ssp == MINUS:
                minus_cols.pop()

    yield from walk(0, start_spin, 0, [], mode.one, 0)


def apply_row(support: LayerVector, family: str, var_index: int,
              columns: int, mode: Mode, nvars: int) -> LayerVector:
    """One transfer step: w(beta) = sum_alpha v(alpha) * V(alpha, beta)."""
    out: LayerVector = {}
    for alpha, acc in support.items():
        for beta, coeff, zexp in row_completions(alpha, columns, family, mode):
            shift = [0] * nvars
            shift[var_index] = zexp
            term = acc.mul_monomial(shift, coeff)
            if beta in out:
                out[beta] = out[beta] + term
            else:
                out[beta] = term
    return {key: val for key, val in out.items() if not val.is_zero()}


def contract_partition(boundary: Boundary, family: str, mode: Mode) -> LaurentPoly:
    """Z of a full system by top-to-bottom layer contraction."""
    r = boundary.rank
    nvars = r + 1
    support: LayerVector = {
        boundary.top_minus: LaurentPoly.const(nvars, mode, mode.one)
    }
    for row in range(r + 1):
        var = row_variable(family, row, r)
        support = apply_row(support, family, var, boundary.columns, mode, nvars)
    return support.get((), LaurentPoly.zero(nvars, mode))


# ---------------------------------------------------------------------------
#  Two-row systems
# ---------------------------------------------------------------------------

TWO_ROW_ORDERS = ("gamma-delta", "delta-gamma")


def two_row_rows(order: str) -> tuple[tuple[str, int], tuple[str, int]]:
    """(family, variable) of the top and bottom row.  The variable travels
    with the family: gamma rows always carry z1, delta rows z2."""
    if order == "gamma-delta":
        return (("gamma", 0), ("delta", 1))
    if order == "delta-gamma":
        return (("delta", 1), ("gamma", 0))
    raise ValueError(f"unknown two-row order {order!r}")


def check_two_row_boundary(top: Layer, bottom: Layer, columns: int | None) -> int:
    top = tuple(top)
    bottom = tuple(bottom)
    for row in (top, bottom):
        if any(a <= b for a, b in zip(row, row[1:])):
            raise ValueError("boundary - positions must be strictly decreasing")
    if len(top) != len(bottom) + 2:
        raise ValueError("top boundary must carry two more - spins than the bottom")
    if columns is None:
        columns = (top[0] + 1) if top else 1
    if top and top[0] >= columns:
        raise ValueError("top - position out of range")
    if bottom and bottom[0] >= columns:
        raise ValueError("bottom - position out of range")
    return columns


def slab_middle_values(top: Layer, bottom: Layer,
                       rows: tuple[tuple[str, int], tuple[str, int]],
                       mode: Mode, columns: int) -> dict[Layer, LaurentPoly]:
    """Weights of a two-row slab with explicit (family, variable) per row,
    split by the middle layer: middle layer -> two-variable weight."""
    (fam1, var1), (fam2, var2) = rows
    bottom = tuple(bottom)
    out: dict[Layer, LaurentPoly] = {}
    for mid, coeff1, zexp1 in row_completions(tuple(top), columns, fam1, mode):
        for low, coeff2, zexp2 in row_completions(mid, columns, fam2, mode):
            if low != bottom:
                continue
            exps = [0, 0]
            exps[var1] += zexp1
            exps[var2] += zexp2
            term = LaurentPoly.monomial(2, mode, exps, coeff1 * coeff2)
            if mid in out:
                out[mid] = out[mid] + term
            else:
                out[mid] = term
    return {key: val for key, val in out.items() if not val.is_zero()}


def two_row_middle_values(top: Layer, bottom: Layer, order: str, mode: Mode,
                          columns: int | None = None) -> dict[Layer, LaurentPoly]:
    """Weight of the mixed two-row system split by the middle layer."""
    columns = check_two_row_boundary(top, bottom, columns)
    return slab_middle_values(top, bottom, two_row_rows(order), mode, columns)


def two_row_partition(top: Layer, bottom: Layer, order: str, mode: Mode,
                      columns: int | None = None) -> LaurentPoly:
    """Z of the two-row system with the given boundary, in (z1, z2)."""
    total = LaurentPoly.zero(2, mode)
    for value in two_row_middle_values(top, bottom, order, mode, columns).values():
        total = total + value
    return total


def two_row_check(top: Layer, bottom: Layer, mode: Mode, tol: float = 1e-9,
                  columns: int | None = None):
    """Compare Z(gamma-delta) with Z(delta-gamma) on one boundary.

    Returns (equal, Z_gd, Z_dg)."""
    z_gd = two_row_partition(top, bottom, "gamma-delta", mode, columns)
    z_dg = two_row_partition(top, bottom, "delta-gamma", mode, columns)
    return z_gd.equal(z_dg, tol), z_gd, z_dg


def coefficient_pair(l: Layer, m: Layer, k: int, mode: Mode):
    """The matched monomial coefficients refining the two-row equality.

    States of either mixed system with outer layers (l, m) and middle-layer
    sum k all carry the monomial z1^(d0-k) z2^(k-d2), d0 = sum(l),
    d2 = sum(m); this returns that coefficient in both systems.
    """
    d0 = sum(l)
    d2 = sum(m)
    exps = (d0 - k, k - d2)
    z_gd = two_row_partition(l, m, "gamma-delta", mode)
    z_dg = two_row_partition(l, m, "delta-gamma", mode)
    return z_gd.coeff(exps), z_dg.coeff(exps)


def random_two_row_boundary(rng: random.Random, max_width: int = 8,
                            require_states: bool = True) -> tuple[Layer, Layer, int]:
    """A random (top, bottom, columns) with |top| = |bottom| + 2, preferring
    boundaries whose systems are nonempty."""
    for _ in range(200):
        columns = rng.randint(3, max_width)
        size = rng.randint(2, max(2, columns // 2 + 1))
        if size > columns:
            continue
        top = tuple(sorted(rng.sample(range(columns), size), reverse=True))
        bottom = tuple(sorted(rng.sample(range(columns), size - 2), reverse=True))
        if not require_states:
            return top, bottom, columns
        mode_probe = _PROBE
        if any(low == bottom
               for mid, _, _ in row_completions(top, columns, "gamma", mode_probe)
               for low, _, _ in row_completions(mid, columns, "delta", mode_probe)):
            return top, bottom, columns
    return top, bottom, columns


class _CountingMode:
    """Cheap stand-in coefficient mode for existence probes."""

    name = "symbolic"
    n = 1
    one = 1

    def g(self, b):
        return 1

    def h(self, b):
        return 1

    def is_zero(self, c):
        return c == 0


_PROBE = _CountingMode()
