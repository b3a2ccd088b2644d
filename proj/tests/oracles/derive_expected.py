#!/usr/bin/env python3
"""Symbolic oracle for the frozen expected values used in the C++ tests.

Everything here is computed from the raw definitions (e^{-B} ch twist,
central charge, tilt slope numerators) with sympy, independently of the
C++ polynomial code. Output is pasted into the tests as literals.
"""
import sympy as sp

a, b, s = sp.symbols("a b s")  # a = alpha, b = beta
d = 2  # H^3 on the quadric


def twist(ch, beta):
    r, c1, c2, c3 = ch
    return (r,
            c1 - beta * r,
            c2 - beta * c1 + beta**2 * r / 2,
            c3 - d * beta * c2 + d * beta**2 * c1 / 2 - d * beta**3 * r / 6)


def Z(ch, sval=sp.Rational(1, 6)):
    r, aB, bB, cB = twist(ch, b)
    re = -cB + sval * d * a**2 * aB
    im = d * a * bB - d * a**3 * r / 2
    return sp.expand(re), sp.expand(im)


R = sp.Rational
O = lambda n: (1, n, R(n * n, 2), R(n**3 * d, 6))
Sm1 = (2, -1, 0, R(1, 6))
shift = lambda ch, k: tuple((-1) ** k * x for x in ch)


def cross(v, w):
    rv, iv = Z(v)
    rw, iw = Z(w)
    return sp.factor(sp.expand(rv * iw - iv * rw))


def show(label, expr):
    print(f"{label}: {sp.expand(expr)}    [factored: {sp.factor(expr)}]")


# k(x) via the resolution alternating sum.
kx = tuple(O(1)[i] - 4 * O(0)[i] + 2 * Sm1[i] - O(-1)[i] for i in range(4))
print("ch(k(x)) from resolution:", kx)
S = tuple(4 * O(0)[i] - Sm1[i] for i in range(4))
print("ch(S) from spinor sequence:", S)
print("twist(S(-1), -1):", tuple(sp.nsimplify(x) for x in twist(Sm1, -1)))

gens = {"O(1)": O(1), "O[1]": shift(O(0), 1), "S(-1)[2]": Sm1, "O(-1)[3]": shift(O(-1), 3)}
for name, g in gens.items():
    show(f"cross(O[1], {name})", cross(gens["O[1]"], g))
for name, g in gens.items():
    show(f"Re Z({name})", Z(g)[0])
    show(f"Im Z({name})", Z(g)[1])


def heart(v):
    A, B, C, D = v
    return tuple(-A * O(-1)[i] + B * Sm1[i] - C * O(0)[i] + D * O(1)[i] for i in range(4))


for v in [(0, 2, 4, 1), (0, 1, 0, 1), (1, 2, 4, 1)]:
    show(f"Im heart{v}", Z(heart(v))[1])


def wall(v, w):
    rv, av, bv, _ = twist(v, b)
    rw, aw, bw, _ = twist(w, b)
    return sp.expand((bv - a**2 * rv / 2) * aw - (bw - a**2 * rw / 2) * av)


show("W(O, O(1))", wall(O(0), O(1)))
print("W(O,O(1)) at (b,a)=(1/5,2/5):", wall(O(0), O(1)).subs({b: R(1, 5), a: R(2, 5)}))
show("W(O, O(2))", wall(O(0), O(2)))

OO1 = tuple(O(0)[i] + O(1)[i] for i in range(4))
r, aB, bB, cB = twist(OO1, b)
alpha2 = 2 * bB / r
print("O+O(1) nu=0 alpha^2:", sp.expand(alpha2))
print("O+O(1) margin:", sp.factor(sp.expand(R(1, 6) * d * alpha2 * aB - cB)))

# cli example values
al, be = R(1, 4), R(-1, 4)
r, aB, bB, cB = twist(Sm1, be)
print("slopes S(-1) at (1/4,-1/4): mu =", aB / (al * r), " nu =", (bB - al**2 * r / 2) / (al * aB),
      " Z =", [e.subs({a: al, b: be}) for e in Z(Sm1)])
print("Im Z(O(1)) at (1/4,-1/8):", Z(O(1))[1].subs({a: R(1, 4), b: R(-1, 8)}))
print("Im Z(O[1]) at (1/8,-3/8):", Z(gens["O[1]"])[1].subs({a: R(1, 8), b: R(-3, 8)}))
print("cross(O[1],O(1)) at (1/8,-3/8):", cross(gens["O[1]"], O(1)).subs({a: R(1, 8), b: R(-3, 8)}))
