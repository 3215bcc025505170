"""Independent oracle for frozen test values (sympy, brute-force expansion).

Run: python3 tests/oracles/derive_values.py
Nothing here is used by the C++ build; the printed values are pasted into tests.
"""
import itertools
from fractions import Fraction
from math import comb, factorial

import sympy as sp

h = sp.Symbol("h")


def eps(ds, i):
    if i < 0 or i > len(ds):
        return 0
    return sum(sp.Mul(*c) for c in itertools.combinations(ds, i))


def segre_product(N, n, ds, m):
    """h-coefficients of s(Omega_X(m)) by sympy series expansion."""
    expr = (1 + (1 - m) * h) ** (-(N + 1)) * (1 - m * h)
    for d in ds:
        expr *= 1 + (d - m) * h
    ser = sp.series(expr, h, 0, n + 1).removeO()
    return [sp.expand(ser.coeff(h, j)) for j in range(n + 1)]


def M(n, l, j):
    return sum((-1) ** i * sp.binomial(n - 2 + i + j, i) for i in range(l - j + 1))


def morse_kappa1(N, n, a, ds):
    """Direct binomial expansion of (u+2h)^{2n-1} - (2n-1)(2+a)(u+2h)^{2n-2}h,
    pushed forward with u^{n-1+i} -> s_i, divided by deg X."""
    s = segre_product(N, n, ds, 0)
    tot = 0
    for i in range(2 * n):
        p = 2 * n - 1 - i
        coeff = comb(2 * n - 1, i) * 2 ** i
        idx = p - (n - 1)
        if 0 <= idx <= n and i + idx == n:
            tot += coeff * s[idx]
    for j in range(2 * n - 1):
        p = 2 * n - 2 - j
        coeff = (2 * n - 1) * (2 + a) * comb(2 * n - 2, j) * 2 ** j
        idx = p - (n - 1)
        if 0 <= idx <= n and j + 1 + idx == n:
            tot -= coeff * s[idx]
    return sp.expand(tot)


if __name__ == "__main__":
    d1, d2, d3 = sp.symbols("d1 d2 d3")
    print("segre N=4 n=2 m=0:", segre_product(4, 2, [d1, d2], 0))
    print("segre N=3 n=2 c=1 m=1:", segre_product(3, 2, [d1], 1))
    print("segre N=3 n=2 c=1 m=-2:", segre_product(3, 2, [d1], -2))
    print("M2_{1,0}", M(2, 1, 0), "M3_{2,0}", M(3, 2, 0), "M3_{3,1}", M(3, 3, 1))
    mk = morse_kappa1(4, 2, 4, [d1, d2])
    print("morse N=4 n=2 a=4:", mk, "at 34:", mk.subs({d1: 34, d2: 34}), "at 33:", mk.subs({d1: 33, d2: 33}))
    print("morse N=4 n=2 a=0:", morse_kappa1(4, 2, 0, [d1, d2]))
    print("morse N=6 n=3 a=0:", morse_kappa1(6, 3, 0, [d1, d2, d3]))
    # (u1+2h)^3 at level 1, N=4, n=2: integral incl. Bezout factor
    s = segre_product(4, 2, [d1, d2], 0)
    val = (s[2] + 6 * s[1] + 12) * d1 * d2
    print("int (u1+2h)^3:", sp.expand(val))
    # frontier scan for N=4 n=2 a=0
    p0 = morse_kappa1(4, 2, 0, [d1, d2])
    last_neg = max(r for r in range(1, 200) if p0.subs({d1: r, d2: r}) <= 0)
    print("frontier a=0:", last_neg + 1)
    # rough bound
    def rough(N, n, a):
        first = Fraction(2 ** (n - 1) * (n * (2 + a) - 2) * n * n, N + 1) * comb(2 * n - 1, n) + 1
        return first * comb(n, n // 2) * Fraction(factorial(N + n) * factorial(N - 2 * n), factorial(N) * factorial(N - n))
    print("rough(6,2,0)=", rough(6, 2, 0), " rough(4,2,4)=", rough(4, 2, 4), " rough(6,3,6)=", rough(6, 3, 6),
          " rough(5,1,0)=", rough(5, 1, 0), " rough(200,2,200)=", float(rough(200, 2, 200)))
