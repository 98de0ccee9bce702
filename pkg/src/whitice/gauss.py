"""Gauss sums over F_q for a multiplicative character of order n.

For a prime q with 2n | q - 1, fix the smallest primitive root w of F_q* and
let chi be the character sending w^k to exp(2*pi*i*k/n).  The table stores

    g(b) = (1/q) * sum_t chi(t)^b * exp(2*pi*i*t/q)      (t over F_q*)
    h(b) = (1/q) * sum_t chi(t)^b                        (t over F_q*)

indexed by b mod n.  Expected identities (all verified in the test suite):
h(b) = 0 unless n | b, h(0) = 1 - 1/q, g(0) = -1/q, |g(b)|^2 = 1/q and
g(b) * g(n - b) = 1/q for b not divisible by n.  The condition 2n | q - 1
makes chi(-1) = 1, which the pairing identity needs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def primitive_root(q: int) -> int:
    """Smallest primitive root mod prime q."""
    phi = q - 1
    factors = set()
    m = phi
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    for w in range(2, q):
        if all(pow(w, phi // p, q) != 1 for p in factors):
            return w
    raise ValueError(f"{q} has no primitive root; is it prime?")


@dataclass(frozen=True)
class GaussTable:
    n: int
    q: int
    root: int
    gvals: tuple[complex, ...]
    hvals: tuple[complex, ...]

    def g(self, b: int) -> complex:
        return self.gvals[b % self.n]

    def h(self, b: int) -> complex:
        return self.hvals[b % self.n]


def gauss_table(n: int, q: int) -> GaussTable:
    """Build the table of g(b), h(b) for b = 0..n-1 by direct summation."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if (q - 1) % (2 * n) != 0:
        raise ValueError(f"need 2n | q - 1; got n = {n}, q = {q}")
    w = primitive_root(q)
    # discrete logs: dlog[t] = k with w^k = t (mod q)
    dlog = [0] * q
    t = 1
    for k in range(q - 1):
        dlog[t] = k
        t = (t * w) % q
    zeta_n = [cmath.exp(2j * math.pi * k / n) for k in range(n)]
    zeta_q = [cmath.exp(2j * math.pi * t / q) for t in range(q)]
    gvals = []
    hvals = []
    for b in range(n):
        gs = 0j
        hs = 0j
        for t in range(1, q):
            chi_b = zeta_n[(b * dlog[t]) % n]
            gs += chi_b * zeta_q[t]
            hs += chi_b
        gvals.append(gs / q)
        hvals.append(hs / q)
    return GaussTable(n=n, q=q, root=w, gvals=tuple(gvals), hvals=tuple(hvals))
