"""Square-ice grids: boundaries, admissible states, charges, weight tables.

Geometry conventions
--------------------
A system of rank r has r + 1 numbered rows of vertices and C columns labeled
0..C-1 *increasing from right to left* (the leftmost column has the largest
label).  Every edge carries a spin, written +1 / -1.

Boundary conditions for a dominant weight lam = (lam_r, .., lam_1, 0):
the top edge of column lam_j + j is -, every other top edge is +, the bottom
edge of every column is +, each row starts with + on its left end and ends
with - on its right end, and C = lam_r + r + 1.

A state is recorded by its vertical spins only: ``layers[k]`` is the
descending tuple of column labels whose vertical edge between vertex row k-1
and vertex row k carries -, with ``layers[0]`` the top boundary and
``layers[r+1]`` the (empty) bottom boundary.  Horizontal spins are never
stored; each row's horizontal edges are forced from the vertical spins by the
even-parity rule (an admissible vertex has an even number of + among its four
edges), so they are recomputed on demand by :func:`fill_row`.

Vertex configurations are keyed (N, S, W, E).  Of the eight even-parity
configurations the two "crossing" ones, (+,-,+,-) and (-,+,-,+), are
inadmissible; the remaining six receive weights from the gamma or delta
table.  The charge argument of a g/h weight counts + spins strictly east of
the vertex in its row (gamma) or - spins strictly west of it (delta), reduced
mod n at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

PLUS = 1
MINUS = -1

Config = tuple[int, int, int, int]  # (N, S, W, E)

FORBIDDEN: frozenset[Config] = frozenset({(PLUS, MINUS, PLUS, MINUS),
                                          (MINUS, PLUS, MINUS, PLUS)})

ADMISSIBLE: tuple[Config, ...] = tuple(sorted(
    (n, s, w, e)
    for n in (PLUS, MINUS) for s in (PLUS, MINUS)
    for w in (PLUS, MINUS) for e in (PLUS, MINUS)
    if n * s * w * e == 1 and (n, s, w, e) not in FORBIDDEN
))

# weight kind per admissible configuration: ("1" | "g" | "h", z-exponent)
GAMMA_TABLE: dict[Config, tuple[str, int]] = {
    (PLUS, PLUS, PLUS, PLUS): ("1", 0),
    (MINUS, MINUS, MINUS, MINUS): ("1", 1),
    (MINUS, MINUS, PLUS, PLUS): ("g", 0),
    (PLUS, PLUS, MINUS, MINUS): ("1", 1),
    (PLUS, MINUS, MINUS, PLUS): ("h", 1),
    (MINUS, PLUS, PLUS, MINUS): ("1", 0),
}

DELTA_TABLE: dict[Config, tuple[str, int]] = {
    (PLUS, PLUS, PLUS, PLUS): ("1", 0),
    (MINUS, MINUS, MINUS, MINUS): ("g", 1),
    (MINUS, MINUS, PLUS, PLUS): ("1", 0),
    (PLUS, PLUS, MINUS, MINUS): ("1", 1),
    (PLUS, MINUS, MINUS, PLUS): ("h", 1),
    (MINUS, PLUS, PLUS, MINUS): ("1", 0),
}

FAMILIES = ("gamma", "delta")


def weight_table(family: str) -> dict[Config, tuple[str, int]]:
    if family == "gamma":
        return GAMMA_TABLE
    if family == "delta":
        return DELTA_TABLE
    raise ValueError(f"unknown family {family!r}")


def row_variable(family: str, row: int, rank: int) -> int:
    """0-based index of the z variable carried by vertex row `row` (counted
    from the top) in a full system of the given rank.

    gamma rows carry z_{r+1}, .., z_1 top to bottom; delta rows z_1, .., z_{r+1}.
    """
    if family == "gamma":
        return rank - row
    if family == "delta":
        return row
    raise ValueError(f"unknown family {family!r}")


def is_admissible(config: Config) -> bool:
    n, s, w, e = config
    return n * s * w * e == 1 and config not in FORBIDDEN


@dataclass(frozen=True)
class Boundary:
    """Fixed boundary data of a full system: C columns, top - positions."""

    columns: int
    top_minus: tuple[int, ...]  # descending column labels carrying - on top

    def __post_init__(self):
        cols = tuple(self.top_minus)
        if list(cols) != sorted(cols, reverse=True) or len(set(cols)) != len(cols):
            raise ValueError("top_minus must be strictly decreasing")
        if cols and (cols[0] >= self.columns or cols[-1] < 0):
            raise ValueError("top_minus out of column range")
        if not cols:
            raise ValueError("top boundary needs at least one - spin")

    @property
    def rank(self) -> int:
        return len(self.top_minus) - 1

    @property
    def rows(self) -> int:
        return len(self.top_minus)

    @property
    def top_row(self) -> tuple[int, ...]:
        """The strictly dominant vector lam + rho, largest entry first."""
        return self.top_minus


def boundary_from_lambda(lam) -> Boundary:
    """Boundary for a dominant weight given as (lam_r, .., lam_1, lam_0 = 0)."""
    lam = tuple(int(x) for x in lam)
    if not lam:
        raise ValueError("lam must have at least one part")
    if lam[-1] != 0:
        raise ValueError("lam must end with the part 0")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("lam must be weakly decreasing")
    if lam[-1] < 0:
        raise ValueError("lam parts must be nonnegative")
    r = len(lam) - 1
    # entry lam_j of the paper indexing is lam[r - j]; top - at lam_j + j
    top = tuple(sorted((lam[r - j] + j for j in range(r + 1)), reverse=True))
    return Boundary(columns=lam[0] + r + 1, top_minus=top)


def lambda_of(boundary: Boundary) -> tuple[int, ...]:
    """Inverse of :func:`boundary_from_lambda`."""
    r = boundary.rank
    return tuple(v - (r - i) for i, v in enumerate(boundary.top_minus))


@dataclass(frozen=True)
class IceState:
    """Vertical-spin data of one admissible state of a full system."""

    boundary: Boundary
    layers: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.boundary.rank

    def vertex_rows(self) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...]]]:
        """Yield (row index from the top, layer above, layer below)."""
        for k in range(self.boundary.rows):
            yield k, self.layers[k], self.layers[k + 1]


def fill_row(top: tuple[int, ...], bot: tuple[int, ...], columns: int):
    """Forced horizontal spins of one row, or None if no admissible fill.

    `top`/`bot` list the column labels carrying - above/below the row.  The
    result is a tuple of C + 1 spins, left boundary first (always +), east
    edge of the rightmost vertex last (must come out -).
    """
    topset = frozenset(top)
    botset = frozenset(bot)
    edges = [PLUS]
    w = PLUS
    for p in range(columns):
        c = columns - 1 - p
        nsp = MINUS if c in topset else PLUS
        ssp = MINUS if c in botset else PLUS
        e = nsp * ssp * w  # even parity forces the east spin
        if (nsp, ssp, w, e) in FORBIDDEN:
            return None
        edges.append(e)
        w = e
    if edges[-1] != MINUS:
        return None
    return tuple(edges)


def row_configs(top: tuple[int, ...], bot: tuple[int, ...], columns: int):
    """List of (N,S,W,E) configurations left to right, or None."""
    edges = fill_row(top, bot, columns)
    if edges is None:
        return None
    topset = frozenset(top)
    botset = frozenset(bot)
    out = []
    for p in range(columns):
        c = columns - 1 - p
        nsp = MINUS if c in topset else PLUS
        ssp = MINUS if c in botset else PLUS
        out.append((nsp, ssp, edges[p], edges[p + 1]))
    return out


def row_charges(edges: tuple[int, ...], family: str) -> list[int]:
    """Raw (unreduced) charge of each vertex, left to right.

    gamma: number of + horizontal spins strictly east of the vertex;
    delta: number of - horizontal spins strictly west of the vertex.
    """
    columns = len(edges) - 1
    if family == "gamma":
        # charge at p counts + among the edges strictly east: indices p+1..C
        charges = [0] * columns
        suffix = 0
        for p in range(columns - 1, -1, -1):
            suffix += 1 if edges[p + 1] == PLUS else 0
            charges[p] = suffix
        return charges
    if family == "delta":
        charges = []
        acc = 0
        for p in range(columns):
            acc += 1 if edges[p] == MINUS else 0
            charges.append(acc)
        return charges
    raise ValueError(f"unknown family {family!r}")


def edge_labels(edges: tuple[int, ...], family: str) -> list[int]:
    """Incremental charge labels on the row's horizontal edges.

    gamma labels count + spins at the edge and east of it (so the label of a
    vertex's east edge is its charge, the right boundary edge is labeled 0 and
    the label grows by one exactly when an edge carries +, moving west).
    delta labels count - spins at the edge and west of it.
    """
    columns = len(edges) - 1
    if family == "gamma":
        labels = [0] * (columns + 1)
        acc = 0
        for i in range(columns, -1, -1):
            if edges[i] == PLUS:
                acc += 1
            labels[i] = acc
        return labels
    if family == "delta":
        labels = []
        acc = 0
        for i in range(columns + 1):
            if edges[i] == MINUS:
                acc += 1
            labels.append(acc)
        return labels
    raise ValueError(f"unknown family {family!r}")


def charges_from_labels(labels: list[int], family: str) -> list[int]:
    """Vertex charges read off the edge labels (vertex p sits between edges
    p and p+1)."""
    columns = len(labels) - 1
    if family == "gamma":
        return [labels[p + 1] for p in range(columns)]
    if family == "delta":
        return [labels[p] for p in range(columns)]
    raise ValueError(f"unknown family {family!r}")


def strict_interleavings(upper: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All strictly decreasing tuples y with upper[i] >= y[i] >= upper[i+1]."""
    m = len(upper)
    if m <= 1:
        yield ()
        return
    acc: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == m - 1:
            yield tuple(acc)
            return
        hi = upper[i] if not acc else min(upper[i], acc[-1] - 1)
        lo = upper[i + 1]
        for y in range(hi, lo - 1, -1):
            acc.append(y)
            yield from rec(i + 1)
            acc.pop()

    yield from rec(0)


def enumerate_states(boundary: Boundary) -> list[IceState]:
    """All admissible states, sorted lexicographically by their layers."""
    states: list[IceState] = []
    layers: list[tuple[int, ...]] = [boundary.top_minus]

    def rec(k: int):
        if k == boundary.rows:
            states.append(IceState(boundary=boundary, layers=tuple(layers) + ((),)))
            return
        for y in strict_interleavings(layers[-1]):
            layers.append(y)
            rec(k + 1)
            layers.pop()

    rec(1)
    states.sort(key=lambda s: s.layers)
    return states


def count_states(boundary: Boundary) -> int:
    """Number of admissible states, by direct recursion on the layers."""

    def rec(upper: tuple[int, ...]) -> int:
        if len(upper) <= 1:
            return 1
        return sum(rec(y) for y in strict_interleavings(upper))

    return rec(boundary.top_minus)
