#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen expected values in tests/.

Everything here is computed with sympy over GF(p) from first principles
(direct substitution, explicit sums over the group, dense rank over GF(p)),
without touching the C++ implementation. Run it to regenerate the numbers
that are hard-coded in the doctest suites:

    python3 tests/oracles/derive_values.py
"""

import itertools
from functools import reduce

import sympy as sp


def gens(m):
    ys = sp.symbols(" ".join(f"y{i}" for i in range(1, m + 1)))
    xs = sp.symbols(" ".join(f"x{i}" for i in range(1, m + 1)))
    if m == 1:
        ys, xs = (ys,), (xs,)
    order = []
    for i in range(m):
        order += [ys[i], xs[i]]
    return xs, ys, order


def poly(expr, order, p):
    return sp.Poly(sp.expand(expr), *order, modulus=p)


def canon(expr, order, p):
    """Terms in grevlex-descending order with symmetric coefficients."""
    P = poly(expr, order, p)
    out = []
    for mon, c in P.terms(order="grevlex"):
        c = int(c) % p
        out.append((c, mon))
    return out


def sigma(expr, xs, ys, k=1):
    return expr.subs({ys[i]: ys[i] + k * xs[i] for i in range(len(xs))}, simultaneous=True)


def transfer(expr, xs, ys, p):
    return sp.expand(sum(sigma(expr, xs, ys, k) for k in range(p)))


def rank_mod_p(rows, p):
    M = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(M)):
            if M[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], p - 2, p)
        M[rank] = [(v * inv) % p for v in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col] % p:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def component_monomials(lam, xs, ys, order, p):
    mons = []
    for a in itertools.product(*[range(l + 1) for l in lam]):
        mons.append(reduce(lambda u, v: u * v,
                           [xs[i] ** a[i] * ys[i] ** (lam[i] - a[i]) for i in range(len(lam))], 1))
    # grevlex-descending via sympy
    P = poly(sum(mons), order, p)
    return [sp.Mul(*[g ** e for g, e in zip(order, mon)]) for mon, _ in P.terms(order="grevlex")]


def op_matrix(op, basis, order, p):
    idx = {poly(b, order, p).monoms()[0]: i for i, b in enumerate(basis)}
    cols = []
    for b in basis:
        img = poly(op(b), order, p)
        col = [0] * len(basis)
        for mon, c in img.terms():
            if int(c) % p:
                col[idx[mon]] = int(c) % p
        cols.append(col)
    # row-major: rows indexed by target
    return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


def matpow(A, k, p):
    n = len(A)
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        R = [[sum(R[i][t] * A[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
    return R


def decompose(lam, p):
    m = len(lam)
    xs, ys, order = gens(m)
    basis = component_monomials(lam, xs, ys, order, p)
    A = op_matrix(lambda f: sp.expand(sigma(f, xs, ys) - f), basis, order, p)
    d = [rank_mod_p(matpow(A, j, p), p) for j in range(p + 2)]
    d[p] = d[p + 1] = 0
    return {i: d[i - 1] - 2 * d[i] + d[i + 1] for i in range(1, p + 1) if d[i - 1] - 2 * d[i] + d[i + 1]}


def main():
    print("fp: 2^(7-1) mod 7 =", pow(2, 6, 7))

    print("rank [[1,1],[2,2]] mod 3 =", rank_mod_p([[1, 1], [2, 2]], 3))

    xs, ys, order = gens(2)
    u12 = xs[0] * ys[1] - xs[1] * ys[0]
    print("u12^2 mod 2:", canon(u12 ** 2, order, 2))
    print("component (1,1) order:", component_monomials((1, 1), xs, ys, order, 5))
    print("sigma(u12) - u12 =", sp.expand(sigma(u12, xs, ys) - u12))
    print("Tr(y1*y2) p=3:", canon(transfer(ys[0] * ys[1], xs, ys, 3), order, 3))
    print("Tr(y1^2) p=3:", canon(transfer(ys[0] ** 2, xs, ys, 3), order, 3))
    print("Tr(y1) p=5 is zero:", poly(transfer(ys[0], xs, ys, 5), order, 5).is_zero)
    N2 = sp.expand(ys[0] * (ys[0] + xs[0]))
    print("N(y1) p=2:", canon(N2, order, 2))

    for p in (2, 3, 5, 7):
        print(f"decompose (1,1) p={p}:", decompose((1, 1), p))
        print(f"decompose (1,1,1,2) p={p}:", decompose((1, 1, 1, 2), p))
    print("decompose (3) p=3:", decompose((3,), 3))
    print("decompose (2,1) p=3:", decompose((2, 1), 3))

    # three-variable transfer used by the subduction example
    xs3, ys3, order3 = gens(3)
    T = transfer(ys3[0] * ys3[1] * ys3[2], xs3, ys3, 3)
    print("Tr(y1y2y3) p=3:", canon(T, order3, 3))
    x1u23 = xs3[0] * (xs3[1] * ys3[2] - xs3[2] * ys3[1])
    x3u12 = xs3[2] * (xs3[0] * ys3[1] - xs3[1] * ys3[0])
    print("Tr(y1y2y3) + x1u23 - x3u12 mod 3:", poly(T + x1u23 - x3u12, order3, 3).as_expr())

    # Kempe uncrossing with a passive x5
    xs5, ys5, order5 = gens(5)
    u = lambda i, j: xs5[i - 1] * ys5[j - 1] - xs5[j - 1] * ys5[i - 1]
    lhs = xs5[4] * u(1, 3) * u(2, 4)
    rhs = xs5[4] * u(1, 2) * u(3, 4) + xs5[4] * u(1, 4) * u(2, 3)
    print("x5 u13 u24 - (x5 u12 u34 + x5 u14 u23) =", sp.expand(lhs - rhs))
    print("R(x5u12u34 + x4u12u35) with x5->x4,y5->y4:",
          sp.factor(sp.expand((xs5[4] * u(1, 2) * u(3, 4) + xs5[3] * u(1, 2) * u(3, 5)).subs(
              {xs5[4]: xs5[3], ys5[4]: ys5[3]}, simultaneous=True))))

    # Dickson invariants for p = 2
    x, y = sp.symbols("x y")
    Ny = sp.expand(y * (y + x))
    L2 = sp.expand(x * Ny)
    D2 = sp.expand(Ny + x ** 2)
    print("p=2 L:", sp.Poly(L2, y, x, modulus=2).as_expr(), " D:", sp.Poly(D2, y, x, modulus=2).as_expr())
    N3 = sp.expand(y * (y + x) * (y + 2 * x))
    D3 = sp.expand(N3 ** 2 + x ** 6)
    lower = lambda f: sp.expand(f.subs({x: x + y}, simultaneous=True))
    print("p=3 D invariant under x->x+y:", sp.Poly(lower(D3) - D3, y, x, modulus=3).is_zero)

    # S_m counts and the D_m sets
    for p, m in ((3, 2), (2, 3)):
        Dm = [lam for lam in itertools.product(range(0, p * (p - 1) + 1, p), repeat=m) if sum(lam) == p * (p - 1)]
        print(f"D_{m} for p={p}:", Dm, " |S_m| =", m * (m - 1) // 2 + m + m * (m - 1) + len(Dm))

    # count tables by brute force
    def classify(word, p):
        h = 0
        for c in word:
            h += 1 if c == "x" else -1
            if h < 0:
                return "N"
            if h == p - 1:
                return "I"
        return h
    for p, d in ((7, 5), (3, 3), (3, 4), (2, 4)):
        tally = {}
        for w in itertools.product("xy", repeat=d):
            c = classify(w, p)
            tally[c] = tally.get(c, 0) + 1
        print(f"paths d={d} p={p}:", dict(sorted(tally.items(), key=str)))


if __name__ == "__main__":
    main()
