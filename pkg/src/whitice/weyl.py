"""Functional equations of the partition function under z_i <-> z_{i+1}.

A monomial with exponent vector a lies in class j (mod n) for the row pair
(i, i+1) when a_i - a_{i+1} = j mod n.  Splitting Z along classes gives the
pieces Z_i^(j); the functional equation, in cleared polynomial form, says

    (z_{i+1}^n - u*z_i^n) * Z_i^(j)(sigma_i z)
        = p_j(z_{i+1}, z_i) * Z_i^(j)(z) + q_j(z_{i+1}, z_i) * Z_i^(n-j)(z)

with p_j(x, y) = (1-u) x^j y^(n-j) and q_j(x, y) = g(j)(x^n - y^n), reading
g(0) = -u.  At n = 1 there is a single class and the identity collapses to
the row-swap endpoint identity checked in the ybe module.

The same exchange is realized locally by a partial crossing vertex that is
only defined on the all-+ and all-- spin configurations, with entries graded
by the charges carried on the horizontal edges; attaching it to the left or
right of a two-row slab must give equal partition functions, which is the
functional equation restricted to that slab.  Whether these two entries
extend to a full crossing-vertex table obeying the braid relation for n > 1
is not settled; nothing here asserts such a completion (for n = 1 the
completion is pinned and verified in the ybe module).

Charge/monomial duality underlies the slab computation: in every gamma row
the z-exponent plus the left-edge charge label equals the number of columns,
hence a_i - a_{i+1} = c_{i+1} - c_i for the left-edge labels c.
"""

from __future__ import annotations

from itertools import combinations

from .coeffs import Mode
from .lattice import (
    Boundary,
    boundary_from_lambda,
    charges_from_labels,
    edge_labels,
    fill_row,
    row_charges,
    row_configs,
    weight_table,
)
from .laurent import LaurentPoly
from .partition import partition_function
from .transfer import check_two_row_boundary


# ---------------------------------------------------------------------------
#  Class decomposition
# ---------------------------------------------------------------------------

def decompose(z: LaurentPoly, i: int, n: int) -> dict[int, LaurentPoly]:
    """Split z by the class (a_i - a_{i+1}) mod n of each monomial.

    ``i`` is 1-based: variables i-1 and i of the polynomial.  Every class
    0..n-1 is present in the result (possibly zero).
    """
    if not 1 <= i <= z.nvars - 1:
        raise ValueError(f"row pair index {i} out of range for {z.nvars} variables")
    buckets: dict[int, dict] = {j: {} for j in range(n)}
    for exps, coeff in z.terms.items():
        j = (exps[i - 1] - exps[i]) % n
        buckets[j][exps] = coeff
    return {j: LaurentPoly(z.nvars, z.mode, terms) for j, terms in buckets.items()}


def recombine(parts: dict[int, LaurentPoly], nvars: int, mode: Mode) -> LaurentPoly:
    total = LaurentPoly.zero(nvars, mode)
    for part in parts.values():
        total = total + part
    return total


# ---------------------------------------------------------------------------
#  The p/q factors
# ---------------------------------------------------------------------------

def p_poly(j: int, n: int, mode: Mode, nvars: int, x: int, y: int) -> LaurentPoly:
    """(1-u) * x^j * y^(n-j) with x, y variable indices and j taken mod n."""
    j = j % n
    exps = [0] * nvars
    exps[x] += j
    exps[y] += n - j
    return LaurentPoly.monomial(nvars, mode, exps, mode.one_minus_u)


def q_poly(j: int, n: int, mode: Mode, nvars: int, x: int, y: int) -> LaurentPoly:
    """g(j) * (x^n - y^n); the coefficient policy reads g(0) as -u."""
    xe = [0] * nvars
    xe[x] = n
    ye = [0] * nvars
    ye[y] = n
    diff = (LaurentPoly.monomial(nvars, mode, xe, mode.one)
            - LaurentPoly.monomial(nvars, mode, ye, mode.one))
    return diff.scale(mode.g(j))


def clearing_factor(n: int, mode: Mode, nvars: int, x: int, y: int) -> LaurentPoly:
    """x^n - u*y^n, the shared denominator of the rational factor pair."""
    xe = [0] * nvars
    xe[x] = n
    ye = [0] * nvars
    ye[y] = n
    return (LaurentPoly.monomial(nvars, mode, xe, mode.one)
            - LaurentPoly.monomial(nvars, mode, ye, mode.u))


def factor_pq(j: int, n: int, mode: Mode, nvars: int = 2,
              x: int = 1, y: int = 0) -> dict[str, LaurentPoly]:
    """Cleared numerators p, q and their shared denominator x^n - u*y^n."""
    return {
        "p": p_poly(j, n, mode, nvars, x, y),
        "q": q_poly(j, n, mode, nvars, x, y),
        "denominator": clearing_factor(n, mode, nvars, x, y),
    }


# ---------------------------------------------------------------------------
#  Functional equation on a full system
# ---------------------------------------------------------------------------

def functional_eq_check(lam, i: int, j: int, n: int, mode: Mode,
                        family: str = "gamma", tol: float = 1e-8):
    """Check the cleared exchange identity for the row pair (i, i+1), class j.

    Returns (ok, lhs, rhs).  For n > 1 a numeric coefficient policy is the
    meaningful choice, since the identity relies on g(j)g(n-j) = u.
    """
    boundary = boundary_from_lambda(lam)
    rank = boundary.rank
    if not 1 <= i <= rank:
        raise ValueError(f"row pair index {i} out of range for rank {rank}")
    nvars = rank + 1
    z = partition_function(boundary, family, mode)
    parts = decompose(z, i, n)
    zj = parts[j % n]
    znj = parts[(n - j) % n]
    x, y = i, i - 1  # z_{i+1}, z_i as variable indices
    lhs = clearing_factor(n, mode, nvars, x, y) * zj.swap_vars(i - 1, i)
    rhs = (p_poly(j, n, mode, nvars, x, y) * zj
           + q_poly(j, n, mode, nvars, x, y) * znj)
    return lhs.equal(rhs, tol), lhs, rhs


# ---------------------------------------------------------------------------
#  Charge/monomial duality
# ---------------------------------------------------------------------------

def charge_duality_check(boundary: Boundary):
    """Per-state consistency of charge labels with z-exponents.

    For every state and both families, the charge sequence read off the
    running edge labels must equal the directly counted charges; and in each
    gamma row, z-exponent + left-edge label = number of columns, which forces
    a_i - a_{i+1} = c_{i+1} - c_i across adjacent rows.  Returns
    (ok, failures) where failures lists (layers, row, reason).
    """
    from .lattice import enumerate_states

    columns = boundary.columns
    table = weight_table("gamma")
    failures = []
    for state in enumerate_states(boundary):
        for k, top, bot in state.vertex_rows():
            edges = fill_row(top, bot, columns)
            configs = row_configs(top, bot, columns)
            for family in ("gamma", "delta"):
                labels = edge_labels(edges, family)
                if charges_from_labels(labels, family) != row_charges(edges, family):
                    failures.append((state.layers, k, f"{family} label/charge mismatch"))
            zexp = sum(table[c][1] for c in configs)
            left_label = edge_labels(edges, "gamma")[0]
            if zexp + left_label != columns:
                failures.append((state.layers, k, "gamma exponent/label duality"))
    return not failures, failures


# ---------------------------------------------------------------------------
#  Partial crossing vertex (odd n) on a two-row slab
# ---------------------------------------------------------------------------

def rvertex_allplus_weight(j: int, jprime: int, n: int,
                           mode: Mode) -> LaurentPoly:
    """All-+ entry of the partial crossing vertex, classes j (outer) and
    jprime (inner), as a polynomial in (z_i, z_{i+1}) = (var 0, var 1)."""
    j %= n
    jprime %= n
    if j == 0:
        if jprime != 0:
            return LaurentPoly.zero(2, mode)
        # p_0 + q_0 = z_i^n - u*z_{i+1}^n
        return clearing_factor(n, mode, 2, x=0, y=1)
    if jprime == j:
        return p_poly(j, n, mode, 2, x=1, y=0)
    if jprime == (n - j) % n:
        return q_poly(j, n, mode, 2, x=1, y=0)
    return LaurentPoly.zero(2, mode)


def rvertex_allminus_weight(n: int, mode: Mode, d_i: int = 0,
                            d_i1: int = 0) -> LaurentPoly:
    """All-- entry: zero unless both charges vanish, else z_{i+1}^n - u*z_i^n."""
    if d_i % n or d_i1 % n:
        return LaurentPoly.zero(2, mode)
    return clearing_factor(n, mode, 2, x=1, y=0)


def _gamma_row_data(topset, botset, columns: int, mode: Mode):
    """(coefficient, z-exponent, left-edge label) of one gamma row, or None."""
    edges = fill_row(topset, botset, columns)
    if edges is None:
        return None
    configs = row_configs(topset, botset, columns)
    labels = edge_labels(edges, "gamma")
    charges = charges_from_labels(labels, "gamma")
    table = weight_table("gamma")
    coeff = mode.one
    zexp = 0
    for p, config in enumerate(configs):
        kind, ze = table[config]
        zexp += ze
        if kind == "g":
            coeff = coeff * mode.g(charges[p])
        elif kind == "h":
            coeff = coeff * mode.h(charges[p])
        if mode.is_zero(coeff):
            return None
    return coeff, zexp, labels[0]


def slab_states(top, bottom, mode: Mode, columns: int | None = None):
    """All states of a two-gamma-row slab, top row carrying variable 1.

    Yields (coefficient, (exp_z1, exp_z2), class) where the class is
    (c_top - c_bot) computed from left-edge charge labels.
    """
    columns = check_two_row_boundary(top, bottom, columns)
    topset = frozenset(top)
    botset = frozenset(bottom)
    for mid in combinations(range(columns), len(top) - 1):
        midset = frozenset(mid)
        upper = _gamma_row_data(topset, midset, columns, mode)
        if upper is None:
            continue
        lower = _gamma_row_data(midset, botset, columns, mode)
        if lower is None:
            continue
        c1, e1, label1 = upper
        c2, e2, label2 = lower
        yield c1 * c2, (e2, e1), label1 - label2


def fe_via_rvertex_two_row(top, bottom, j: int, n: int, mode: Mode,
                           tol: float = 1e-8, columns: int | None = None):
    """Attach the partial crossing vertex to a two-gamma-row slab.

    Left attachment: each state of the slab is weighted by the all-+ entry
    whose inner class is the state's label difference c_top - c_bot.  Right
    attachment: the all-- entry (charges forced to zero at the right
    boundary) times the class-j part of the slab partition function with the
    two variables exchanged.  The two must agree; returns (ok, left, right).
    Only odd n is supported.
    """
    if n % 2 == 0:
        raise ValueError("partial crossing vertex requires odd n")
    left = LaurentPoly.zero(2, mode)
    z = LaurentPoly.zero(2, mode)
    for coeff, exps, jstate in slab_states(top, bottom, mode, columns):
        monomial = LaurentPoly.monomial(2, mode, exps, coeff)
        z = z + monomial
        left = left + rvertex_allplus_weight(j, jstate, n, mode) * monomial
    zj = decompose(z, 1, n)[j % n]
    right = rvertex_allminus_weight(n, mode) * zj.swap_vars(0, 1)
    return left.equal(right, tol), left, right
