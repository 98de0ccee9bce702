"""Strict Gelfand-Tsetlin patterns and their ice counterparts.

A strict pattern of rank r is a triangular array of r + 1 rows, each row a
strictly decreasing tuple of nonnegative integers one shorter than the row
above, consecutive rows interleaving:

        a[0] = (l_1, .., l_{r+1})        (top row, the boundary data)
        a[1] = (..)                      (r entries)
        ..
        a[r] = (single entry)

The set of such patterns with fixed top row is in bijection with the
admissible states of the full system whose top boundary - positions are that
row: row k of the pattern is exactly ``layers[k]`` of the state (and the
forced empty ``layers[r+1]`` is dropped).

Each entry a[i][j] is classified against the two entries above it
(above-left a[i-1][j], above-right a[i-1][j+1]):

* equal to above-right  - the entry is "right-leaning",
* equal to above-left   - "left-leaning",
* strictly between      - "free".

The gamma statistic of an entry uses the box sum
``b[i][j] = sum_{l >= j} (a[i][l] - a[i-1][l])`` and contributes g(b) for a
left-leaning entry, 1 for right-leaning, h(b) for free; the delta statistic
uses ``c[i][j] = sum_{l <= j} (a[i-1][l-1] - a[i][l])`` (0-indexed: entries
above-left and here, summed from the left end) and contributes g(c) for
right-leaning, 1 for left-leaning, h(c) for free.  The product over all
entries is the pattern's gamma / delta weight; together with the monomial
exponents it reproduces the state weight of the corresponding ice state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .lattice import Boundary, IceState, strict_interleavings


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.rows
        for i, row in enumerate(rows):
            if len(row) != len(rows[0]) - i:
                raise ValueError("row lengths must decrease by one")
            if any(a <= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must be strictly decreasing")
            if i > 0:
                up = rows[i - 1]
                for j, v in enumerate(row):
                    if not (up[j] >= v >= up[j + 1]):
                        raise ValueError("consecutive rows must interleave")

    @property
    def rank(self) -> int:
        return len(self.rows) - 1

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[0]


def pattern_from_state(state: IceState) -> GTPattern:
    return GTPattern(rows=state.layers[:-1])


def state_from_pattern(pattern: GTPattern, boundary: Boundary | None = None) -> IceState:
    if boundary is None:
        boundary = Boundary(columns=pattern.top[0] + 1, top_minus=pattern.top)
    if boundary.top_minus != pattern.top:
        raise ValueError("pattern top row does not match the boundary")
    return IceState(boundary=boundary, layers=pattern.rows + ((),))


def enumerate_patterns(top: tuple[int, ...]) -> Iterator[GTPattern]:
    """All strict patterns with the given top row."""
    rows: list[tuple[int, ...]] = [tuple(top)]

    def rec(k: int) -> Iterator[GTPattern]:
        if len(rows[-1]) == 1:
            yield GTPattern(rows=tuple(rows))
            return
        for y in strict_interleavings(rows[-1]):
            rows.append(y)
            yield from rec(k + 1)
            rows.pop()

    yield from rec(0)


def entry_case(up: tuple[int, ...], j: int, value: int) -> str:
    """'right' if the entry equals its above-right neighbour, 'left' if it
    equals above-left, 'free' otherwise."""
    if value == up[j + 1]:
        return "right"
    if value == up[j]:
        return "left"
    return "free"


def gamma_box(rows, i: int, j: int) -> int:
    """b[i][j] = sum over l >= j of (rows[i][l] - rows[i-1][l + 1])."""
    up, row = rows[i - 1], rows[i]
    return sum(row[l] - up[l + 1] for l in range(j, len(row)))


def delta_box(rows, i: int, j: int) -> int:
    """c[i][j] = sum over l <= j of (rows[i-1][l] - rows[i][l])."""
    up, row = rows[i - 1], rows[i]
    return sum(up[l] - row[l] for l in range(j + 1))


def gamma_entries(pattern: GTPattern) -> list[tuple[str, int]]:
    """(case, box) of every entry below the top row, row by row."""
    out = []
    rows = pattern.rows
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            out.append((entry_case(rows[i - 1], j, rows[i][j]),
                        gamma_box(rows, i, j)))
    return out


def delta_entries(pattern: GTPattern) -> list[tuple[str, int]]:
    out = []
    rows = pattern.rows
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            out.append((entry_case(rows[i - 1], j, rows[i][j]),
                        delta_box(rows, i, j)))
    return out


def gamma_weight(pattern: GTPattern, mode):
    """G(pattern) in the gamma statistic: product of g(b)/1/h(b) factors."""
    acc = mode.one
    for case, box in gamma_entries(pattern):
        if case == "left":
            acc = acc * mode.g(box)
        elif case == "free":
            acc = acc * mode.h(box)
    return acc


def delta_weight(pattern: GTPattern, mode):
    acc = mode.one
    for case, box in delta_entries(pattern):
        if case == "right":
            acc = acc * mode.g(box)
        elif case == "free":
            acc = acc * mode.h(box)
    return acc


def row_sums(pattern: GTPattern) -> list[int]:
    return [sum(row) for row in pattern.rows]


def gamma_exponents(pattern: GTPattern) -> tuple[int, ...]:
    """Exponent of z_1, .., z_{r+1} carried by the pattern, gamma statistic.

    Row k of vertices carries z_{r+1-k}; its exponent is d_k - d_{k+1} where
    d_k = sum of pattern row k (d_{r+1} = 0).
    """
    d = row_sums(pattern) + [0]
    r = pattern.rank
    # variable z_m (1-indexed) sits on vertex row k = r + 1 - m
    return tuple(d[r + 1 - m] - d[r + 2 - m] for m in range(1, r + 2))


def delta_exponents(pattern: GTPattern) -> tuple[int, ...]:
    """Same for the delta statistic: vertex row k carries z_{k+1}."""
    d = row_sums(pattern) + [0]
    return tuple(d[m - 1] - d[m] for m in range(1, pattern.rank + 2))


def gamma_spin_vector(pattern: GTPattern) -> tuple[int, ...]:
    """k^Gamma = (k_1, .., k_r): k_i = sum_{l >= i} (a[i][l] - a[0][l + ..])

    Concretely k_i = d_i - (l_{i+1} + .. + l_{r+1}) with d_i the i-th row sum
    and l the top row.  These are the mod-n residues classifying the monomial
    in the gamma expansion.
    """
    top = pattern.top
    d = row_sums(pattern)
    r = pattern.rank
    out = []
    for i in range(1, r + 1):
        out.append(d[i] - sum(top[i:]))
    return tuple(out)


def delta_spin_vector(pattern: GTPattern) -> tuple[int, ...]:
    """k^Delta: k_i = (l_1 + .. + l_i) - d_{r+1-i}."""
    top = pattern.top
    d = row_sums(pattern)
    r = pattern.rank
    out = []
    for i in range(1, r + 1):
        out.append(sum(top[:i]) - d[r + 1 - i])
    return tuple(out)


# ---------------------------------------------------------------------------
#  Short patterns: three interleaved rows l / a / m with the middle row free
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShortPattern:
    """Rows l (length p + 1), a (length p), m (length p - 1), each strictly
    decreasing, with l/a interleaving and a/m interleaving."""

    top: tuple[int, ...]
    mid: tuple[int, ...]
    bot: tuple[int, ...]

    def __post_init__(self):
        for row in (self.top, self.mid, self.bot):
            if any(x <= y for x, y in zip(row, row[1:])):
                raise ValueError("short pattern rows must be strictly decreasing")
        if len(self.mid) != len(self.top) - 1 or len(self.bot) != len(self.mid) - 1:
            raise ValueError("short pattern row lengths must step down by one")
        for j, v in enumerate(self.mid):
            if not (self.top[j] >= v >= self.top[j + 1]):
                raise ValueError("top and middle rows must interleave")
        for j, v in enumerate(self.bot):
            if not (self.mid[j] >= v >= self.mid[j + 1]):
                raise ValueError("middle and bottom rows must interleave")


def enumerate_short_patterns(top: tuple[int, ...], bot: tuple[int, ...],
                             mid_sum: int | None = None) -> list[ShortPattern]:
    """All short patterns with the given outer rows; optionally restrict the
    middle row sum."""
    out = []
    p = len(top) - 1
    if len(bot) != p - 1:
        raise ValueError("bottom row must be two shorter than the top row")
    acc: list[int] = []

    def rec(j: int):
        if j == p:
            sp = ShortPattern(top=tuple(top), mid=tuple(acc), bot=tuple(bot))
            if mid_sum is None or sum(acc) == mid_sum:
                out.append(sp)
            return
        hi = top[j] if not acc else min(top[j], acc[-1] - 1)
        lo = top[j + 1]
        if 0 <= j - 1 < len(bot):
            hi = min(hi, bot[j - 1])
        if j < len(bot):
            lo = max(lo, bot[j])
        for y in range(hi, lo - 1, -1):
            acc.append(y)
            rec(j + 1)
            acc.pop()

    rec(0)
    out.sort(key=lambda s: s.mid, reverse=True)
    return out


def short_gamma_delta(sp: ShortPattern, mode):
    """G(t) with the gamma statistic on the middle row and delta on the
    bottom row."""
    top, mid, bot = sp.top, sp.mid, sp.bot
    acc = mode.one
    for i in range(len(mid)):
        case = entry_case(top, i, mid[i])
        if case != "right":
            box = sum(mid[l] - top[l + 1] for l in range(i, len(mid)))
            acc = acc * (mode.g(box) if case == "left" else mode.h(box))
    for j in range(len(bot)):
        case = entry_case(mid, j, bot[j])
        if case != "left":
            box = sum(mid[l] - bot[l] for l in range(j + 1))
            acc = acc * (mode.g(box) if case == "right" else mode.h(box))
    return acc


def short_delta_gamma(sp: ShortPattern, mode):
    """G(t) with the delta statistic on the middle row and gamma on the
    bottom row."""
    top, mid, bot = sp.top, sp.mid, sp.bot
    acc = mode.one
    for i in range(len(mid)):
        case = entry_case(top, i, mid[i])
        if case != "left":
            box = sum(top[l] - mid[l] for l in range(i + 1))
            acc = acc * (mode.g(box) if case == "right" else mode.h(box))
    for j in range(len(bot)):
        case = entry_case(mid, j, bot[j])
        if case != "right":
            box = sum(bot[l] - mid[l + 1] for l in range(j, len(bot)))
            acc = acc * (mode.g(box) if case == "left" else mode.h(box))
    return acc


def middle_reflection(sp: ShortPattern, convention: str = "outer") -> ShortPattern | None:
    """Involution on the middle row holding the outer rows fixed.

    convention="outer" reflects each entry in the *outer* bracketing values,

        a'_i = max(l_{i-1}, m_{i-1}) + min(l_i, m_i) - a_i

    (indices clipped to the l row at the ends).  convention="interval"
    reflects within the actual admissible interval of the entry,

        a'_i = min(l_{i-1}, m_{i-1}) + max(l_i, m_i) - a_i.

    Under either convention the middle row sum k maps to (sum l) + (sum m)
    - k.  "outer" can leave the interleaving region;
    the image is then not a valid short pattern and None is returned, so that
    downstream weights of the image are treated as zero.  "interval" never
    leaves the region.
    """
    top, mid, bot = sp.top, sp.mid, sp.bot
    new = []
    for i in range(len(mid)):
        # neighbours >= mid[i]: top[i] and bot[i-1]; <= mid[i]: top[i+1], bot[i]
        above = [top[i]] + ([bot[i - 1]] if 0 <= i - 1 < len(bot) else [])
        below = [top[i + 1]] + ([bot[i]] if i < len(bot) else [])
        if convention == "outer":
            new.append(max(above) + min(below) - mid[i])
        elif convention == "interval":
            new.append(min(above) + max(below) - mid[i])
        else:
            raise ValueError(f"unknown convention {convention!r}")
    try:
        return ShortPattern(top=top, mid=tuple(new), bot=bot)
    except ValueError:
        return None


def statement_b_sums(top, bot, k: int, mode, convention: str = "outer"):
    """Both sides of the middle-row exchange identity at middle sum k.

    Left: sum of the gamma-then-delta weights over all short patterns with
    outer rows (top, bot) and middle row summing to k.  Right: sum, over the
    same patterns, of the delta-then-gamma weight of the reflected pattern,
    counting reflections that leave the interleaving region as zero.
    Returns (left, right) as coefficients.
    """
    left = mode.zero
    right = mode.zero
    for sp in enumerate_short_patterns(top, bot, mid_sum=k):
        left = left + short_gamma_delta(sp, mode)
        image = middle_reflection(sp, convention)
        if image is not None:
            right = right + short_delta_gamma(image, mode)
    return left, right
