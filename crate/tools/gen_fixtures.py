#!/usr/bin/env python3
"""Regenerate the bundled OEIS fixtures under crates/core/fixtures/.

The sandbox this project is developed in has no route to oeis.org, so every
fixture is computed here from the entry's defining formula: closed forms,
binomial transforms of Narayana/Catalan rows, Lagrange inversion of a rational
F, or brute-force permutation enumeration. Where a published prefix is known
it is checked below before anything is written.

Run from the repository root:  python3 tools/gen_fixtures.py
"""
import json
import os
from fractions import Fraction
from itertools import permutations
from math import comb

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "fixtures")
N_TERMS = 24


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def narayana_moment(v, t, n):
    if n == 0:
        return Fraction(1)
    return Fraction(v) ** n * sum(
        Fraction(comb(n, k - 1) * comb(n - 1, k - 1), k) * Fraction(t) ** k
        for k in range(1, n + 1)
    )


def translate(seq, u):
    u = Fraction(u)
    return [sum(comb(n, k) * u ** (n - k) * seq[k] for k in range(n + 1)) for n in range(len(seq))]


def mp_translate(s, u, v, n_terms):
    base = [narayana_moment(u, s, n) for n in range(n_terms)]
    return translate(base, v)


def wigner_moment(s, n):
    if n % 2:
        return Fraction(0)
    m = n // 2
    return Fraction(comb(2 * m + 1, m), 2 * m + 1) * Fraction(s) ** m


def wigner_translate(s, u, n_terms):
    return translate([wigner_moment(s, n) for n in range(n_terms)], u)


# --- power series helpers (lists of Fractions, lowest degree first) ---
def ps_mul(a, b, n):
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def ps_inv(a, n):
    out = [Fraction(0)] * n
    out[0] = 1 / Fraction(a[0])
    for k in range(1, n):
        acc = sum(Fraction(a[j]) * out[k - j] for j in range(1, min(k, len(a) - 1) + 1))
        out[k] = -acc * out[0]
    return out


def pad(p, n):
    p = [Fraction(x) for x in p]
    return (p + [Fraction(0)] * n)[:n]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def lagrange_moments(P, Q, n_terms):
    """s_0..s_{n-1} of F = wP/Q via [z^{n+1}] D = [w^n] (Q/P)^{n+1} / (n+1)."""
    ratio = ps_mul(pad(Q, n_terms), ps_inv(pad(P, n_terms), n_terms), n_terms)
    out = []
    power = [Fraction(1)] + [Fraction(0)] * (n_terms - 1)
    for n in range(n_terms):
        power = ps_mul(power, ratio, n_terms)
        out.append(power[n] / (n + 1))
    return out


def descents(p):
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def eulerian_rows(max_n):
    rows = [[1]]
    for n in range(1, max_n + 1):
        row = [0] * (n + 1)
        for p in permutations(range(n)):
            row[descents(p) + 1] += 1
        rows.append(row)
    return rows


def conger_rows(max_k):
    rows = [[1]]
    for k in range(1, max_k + 1):
        row = [0] * k
        rest = [x for x in range(1, k + 3) if x != 2]
        for tail in permutations(rest):
            row[descents((2,) + tail) - 1] += 1
        rows.append(row)
    return rows


def aerate(seq):
    return seq[::2]


def as_ints(seq):
    out = []
    for x in seq:
        x = Fraction(x)
        assert x.denominator == 1, x
        out.append(int(x))
    return out


FIXTURES = []


def add(a_number, terms, offset=0, skip=0, note=""):
    FIXTURES.append(
        {
            "a_number": a_number,
            "offset": offset,
            "terms": [str(t) for t in as_ints(terms)],
            "alignment": {"skip": skip, "note": note},
        }
    )


N = N_TERMS
add("A000012", [1] * N, note="all ones")
add("A033999", [(-1) ** n for n in range(N)], note="(-1)^n")
add("A000108", [catalan(n) for n in range(N)], note="Catalan numbers")
add("A001764", [comb(3 * n, n) // (2 * n + 1) for n in range(N)], note="binomial(3n,n)/(2n+1)")
add("A069271", [Fraction(comb(4 * n + 2, n) * 2, 4 * n + 2) for n in range(N)], note="binomial(4n+2,n)*2/(4n+2)")
add("A212072", [Fraction(comb(6 * n + 3, n) * 3, 6 * n + 3) for n in range(N)], note="binomial(6n+3,n)*3/(6n+3)")
add("A001263", [comb(n, k - 1) * comb(n - 1, k - 1) // k for n in range(1, 12) for k in range(1, n + 1)],
    offset=1, note="Narayana triangle, rows n>=1, k=1..n")
add("A123125", [x for row in eulerian_rows(9) for x in row],
    note="Eulerian triangle T(n,k), 0<=k<=n, T(n,k)=#perms of [n] with k-1 descents; row n is the coefficient list of w*E_n(w)")
add("A120434", [x for row in conger_rows(8) for x in row],
    note="row 0 = [1]; row k>=1 lists e~(k,i), i=0..k-1: perms of [k+2] with sigma(1)=2 and i+1 descents")

# Marchenko-Pastur translations MP(u,s) boxplus delta_v, (s,u,v)
mp_cases = [
    ("A007317", (1, 1, 1), 0, 1),
    ("A005043", (1, 1, -1), 0, 0),
    ("A168491", (1, -1, 0), 0, 0),
    ("A001405", (1, -1, 2), 0, 0),
    ("A005773", (1, -1, 3), 1, 0),
    ("A001700", (1, -1, 4), 0, 0),
    ("A151374", (1, 2, 0), 0, 0),
    ("A005159", (1, 3, 0), 0, 0),
    ("A006318", (2, 1, 0), 0, 0),
    ("A047891", (3, 1, 0), 0, 0),
    ("A001003", (Fraction(1, 2), 2, 0), 0, 0),
    ("A007564", (Fraction(1, 3), 3, 0), 0, 0),
    ("A052709", (2, 1, -1), 1, 1),
]
for a, (s, u, v), skip, offset in mp_cases:
    terms = mp_translate(s, u, v, N)
    lead = {"A005773": [1], "A052709": [0]}.get(a, [])
    add(a, lead + terms[: N - len(lead)], offset=offset, skip=skip,
        note=f"moments of MP({u},{s}) translated by {v}")

# Wigner translations W(s) boxplus delta_u, (s,u); fixtures not already present
w_cases = [
    ("A001006", (1, 1), 0, [1]),
    ("A002212", (1, 3), 1, [1]),
    ("A005572", (1, 4), 0, []),
    ("A071356", (2, 2), 0, []),
    ("A059231", (4, 5), 1, [1]),
]
for a, (s, u), skip, lead in w_cases:
    terms = wigner_translate(s, u, N)
    if skip == 0:
        lead = []
    add(a, lead + terms[: N - len(lead)], skip=skip, note=f"moments of W({s}) translated by {u}")

# Rational F examples: moments by Lagrange inversion
def from_r_pq(num, den):
    """F = w*den/(den+num) for R = num/den."""
    n = max(len(num), len(den))
    s = [(num[i] if i < len(num) else 0) + (den[i] if i < len(den) else 0) for i in range(n)]
    return den, s


lag_cases = [
    ("A109081", [1, -2, 1], [1, -1, 1], "F = w(1-w)^2/(1-w+w^2), free cumulants r_n = n"),
    ("A007297", [1, -1], poly_pow([1, 1], 3), "F = w(1-w)/(1+w)^3"),
    ("A048779", poly_mul([1, -1], [1, -2, 2]), [1], "F = w(1-w)(1-2w+2w^2)"),
    ("A121988", poly_mul([1, -1], [1, -1, 1]), [1], "F = w(1-w)(1-w+w^2)"),
    ("A078623", [1, -1], [1, -1, 2, -1], "F = w(1-w)/(1-w+2w^2-w^3)"),
    ("A085614", poly_mul([1, -1], [1, -2]), [1], "F = w(1-w)(1-2w)"),
    ("A003168", [1], poly_mul(poly_pow([1, 1], 2), [1, 2]), "F = w/((1+w)^2(1+2w))"),
    ("A106228", [1], poly_mul([1, 1], [1, 1, 1]), "F = w/((1+w)(1+w+w^2))"),
    ("A120984", [1], [1, 0, 3, 1], "F = w/(1+3w^2+w^3)"),
    ("A242566", poly_mul([1, -1], [1]), None, "MP(1,1) monotone W(1)"),
]
for a, P, Q, note in lag_cases:
    if a == "A242566":
        # F_W(1)(F_MP(1,1)(w)) with F_MP(1,1) = w(1-w): w(1-w)/(1+w^2(1-w)^2)
        P = [1, -1]
        Q = [1, 0, 1, -2, 1]
    if a == "A003168":
        add(a, [1] + lagrange_moments(P, Q, N - 1), skip=1, note=note + "; a(0)=1 then s_n; terms by Lagrange inversion")
        continue
    add(a, lagrange_moments(P, Q, N), note=note + "; terms by Lagrange inversion")

# A250886: x=0,u=-1,v=2 deconvolution MP(u,a) boxplus MP(v,b)
def mpmp_pq(u, v, x):
    u, v, x = Fraction(u), Fraction(v), Fraction(x)
    a = (u - x) ** 3 / (u ** 2 * (u - v))
    b = (v - x) ** 3 / (v ** 2 * (v - u))
    P = [Fraction(1), -(u + v), u * v]
    Q = [Fraction(1), a + b - u - v, -(a * v + b * u) + u * v]
    return P, Q

P, Q = mpmp_pq(-1, 2, 0)
add("A250886", lagrange_moments(P, Q, N), note="MP(-1,a) boxplus MP(2,b) at x=0; terms by Lagrange inversion")

# aerated darkmatter powers: F^{boxplus t} = (w - w^3)/(1+(t-1)w^2)
add("A027307", aerate(lagrange_moments([1, 0, -1], [1, 0, 1], 2 * N))[:N],
    note="even moments of (w-w^3)/(1+w^2); aerated relation")
add("A219535", aerate(lagrange_moments([1, 0, -1], [1, 0, 2], 2 * N))[:N],
    note="even moments of (w-w^3)/(1+2w^2); aerated relation")
# W(1) monotone W(1)
add("A007852", aerate(lagrange_moments([1, 0, 1], [1, 0, 3, 0, 1], 2 * N))[1:N + 1],
    offset=1, skip=0,
    note="s_{2n}, n>=1, of W(1) monotone W(1), F = w(1+w^2)/(1+3w^2+w^4); fixture starts at s_2")

KNOWN = {
    "A000108": [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862],
    "A001764": [1, 1, 3, 12, 55, 273, 1428, 7752],
    "A006318": [1, 2, 6, 22, 90, 394, 1806, 8558, 41586],
    "A001003": [1, 1, 3, 11, 45, 197, 903, 4279, 20793],
    "A001006": [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188],
    "A007317": [1, 2, 5, 15, 51, 188, 731, 2950, 12235],
    "A005043": [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603],
    "A001405": [1, 1, 2, 3, 6, 10, 20, 35, 70, 126],
    "A005773": [1, 1, 2, 5, 13, 35, 96, 267, 750, 2123],
    "A001700": [1, 3, 10, 35, 126, 462, 1716],
    "A002212": [1, 1, 3, 10, 36, 137, 543, 2219, 9285],
    "A005572": [1, 4, 17, 76, 354, 1704, 8421],
    "A109081": [1, 1, 3, 10, 37, 146, 602, 2563, 11181, 49720, 224540],
    "A007297": [1, 4, 23, 156, 1162, 9192],
    "A069271": [1, 2, 9, 52, 340, 2394],
    "A007564": [1, 1, 4, 19, 100, 562, 3304],
    "A047891": [1, 3, 12, 57, 300, 1686],
    "A151374": [1, 2, 8, 40, 224, 1344],
    "A005159": [1, 3, 18, 135, 1134],
    "A052709": [0, 1, 1, 3, 9, 31, 113, 431],
    "A071356": [1, 2, 6, 20, 72, 272, 1064],
    "A059231": [1, 1, 5, 29, 185, 1257],
    "A123125": [1, 0, 1, 0, 1, 1, 0, 1, 4, 1, 0, 1, 11, 11, 1],
    "A001263": [1, 1, 1, 1, 3, 1, 1, 6, 6, 1],
}


def main():
    by_id = {f["a_number"]: f for f in FIXTURES}
    for a, prefix in KNOWN.items():
        got = [int(x) for x in by_id[a]["terms"][: len(prefix)]]
        assert got == prefix, (a, got, prefix)
    os.makedirs(OUT, exist_ok=True)
    for f in FIXTURES:
        assert len(f["terms"]) >= 12, f["a_number"]
        path = os.path.join(OUT, f["a_number"] + ".json")
        with open(path, "w") as fh:
            json.dump(f, fh, indent=1)
            fh.write("\n")
    print(f"wrote {len(FIXTURES)} fixtures to {os.path.normpath(OUT)}")


if __name__ == "__main__":
    main()
