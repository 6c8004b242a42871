#!/usr/bin/env python3
"""Writes the shipped group definitions and character tables under data/.

Groups are built from the same generators as the Rust constructors. Character
values are defined structurally on elements (cycle type, rotation index,
quotient maps) and evaluated on class representatives found by closure here,
so every table carries representatives that bind it to its group file.
The Rust loader re-validates every table (orthogonality, degrees, square map).
"""

import json
import math
import os
from fractions import Fraction
from functools import reduce

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


# ---------------------------------------------------------------- permutations

def from_cycles(degree, cycles):
    img = list(range(degree))
    for c in cycles:
        for i, p in enumerate(c):
            img[p] = c[(i + 1) % len(c)]
    return tuple(img)


def then(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycles(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j)
            j = p[j]
        out.append(c)
    return out


def order(p):
    return reduce(lambda a, b: a * b // math.gcd(a, b), (len(c) for c in cycles(p)), 1)


def cycle_type(p):
    lengths = sorted((len(c) for c in cycles(p)), reverse=True)
    return tuple(lengths + [1] * (len(p) - sum(lengths)))


class Group:
    def __init__(self, name, degree, gens):
        self.name, self.degree, self.gens = name, degree, gens
        ident = tuple(range(degree))
        seen, queue = {ident}, [ident]
        while queue:
            x = queue.pop()
            for g in gens:
                y = then(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        self.elements = sorted(seen)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._classes = None

    def classes(self):
        if self._classes is None:
            done, raw = set(), []
            for x in self.elements:
                if x in done:
                    continue
                cls, queue = {x}, [x]
                while queue:
                    y = queue.pop()
                    for g in self.gens:
                        z = then(then(inverse(g), y), g)
                        if z not in cls:
                            cls.add(z)
                            queue.append(z)
                done |= cls
                raw.append(sorted(cls))
            raw.sort(key=lambda c: (order(c[0]), len(c), self.index[c[0]]))
            self._classes = raw
        return self._classes

    def class_of(self, x):
        for i, c in enumerate(self.classes()):
            if x in c:
                return i
        raise KeyError(x)

    def json(self):
        def gen(p):
            cs = cycles(p)
            return cs[0] if len(cs) == 1 else cs
        return {"name": self.name, "degree": self.degree, "generators": [gen(g) for g in self.gens]}


def cyc(degree, *cs):
    return from_cycles(degree, [list(c) for c in cs])


def cyclic(n):
    return Group(f"C{n}", n, [cyc(n, range(n))] if n > 1 else [])


def dihedral(n):
    s = from_cycles(n, [[i, n - i] for i in range(1, n) if i < n - i])
    return Group(f"D{n}", n, [cyc(n, range(n)), s])


def symmetric(n):
    return Group(f"S{n}", n, [cyc(n, range(n)), cyc(n, [0, 1])])


def alternating(n):
    first = cyc(n, range(n)) if n % 2 == 1 else cyc(n, range(1, n))
    return Group(f"A{n}", n, [first, cyc(n, [0, 1, 2])])


def klein_four():
    return Group("V4", 4, [cyc(4, [0, 1], [2, 3]), cyc(4, [0, 2], [1, 3])])


def projective(p, name, extra_scalings=()):
    inf = p
    translate = tuple((z + 1) % p if z != inf else inf for z in range(p + 1))

    def minus_inverse(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        zi = next(y for y in range(1, p) if y * z % p == 1)
        return (p - zi) % p

    gens = [translate, tuple(minus_inverse(z) for z in range(p + 1))]
    for a in extra_scalings:
        gens.append(tuple(a * z % p if z != inf else inf for z in range(p + 1)))
    return Group(name, p + 1, gens)


def product(g1, g2, name):
    d = g1.degree + g2.degree

    def shift(p, off):
        img = list(range(d))
        for i, x in enumerate(p):
            img[i + off] = x + off
        return tuple(img)

    gens = [shift(p, 0) for p in g1.gens] + [shift(p, g1.degree) for p in g2.gens]
    return Group(name, d, gens)


# ------------------------------------------------------------ cyclotomic values

def phi_poly(n, _cache={}):
    """Integer coefficients of the n-th cyclotomic polynomial, lowest first."""
    if n in _cache:
        return _cache[n]
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        den = phi_poly(d)
        dd = len(den) - 1
        quot = [0] * (len(num) - dd)
        for i in range(len(quot) - 1, -1, -1):
            c = num[i + dd]
            quot[i] = c
            for j, b in enumerate(den):
                num[i + j] -= c * b
        num = quot
    _cache[n] = num
    return num


def reduce_mod(vec, n):
    phi = phi_poly(n)
    d = len(phi) - 1
    a = list(vec)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d):
                a[i - d + j] -= c * phi[j]
            a[i] = 0
    a = a[:d] + [Fraction(0)] * max(0, d - len(a))
    return a


def solve(columns, target):
    rows, width = len(target), len(columns)
    m = [[columns[j][r] for j in range(width)] + [target[r]] for r in range(rows)]
    piv, r = [], 0
    for c in range(width):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    if any(m[i][width] != 0 for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * width
    for i, c in enumerate(piv):
        sol[c] = m[i][width]
    return sol


class Cyc:
    """Value sum_k coeffs[k] * zeta_n^k, stored unreduced over conductor n."""

    def __init__(self, n, coeffs):
        self.n = n
        self.c = [Fraction(x) for x in coeffs] + [Fraction(0)] * (n - len(coeffs))

    @staticmethod
    def integer(k):
        return Cyc(1, [k])

    @staticmethod
    def zeta(n, k):
        v = [0] * n
        v[k % n] = 1
        return Cyc(n, v)

    def lift(self, m):
        step = m // self.n
        v = [Fraction(0)] * m
        for i, x in enumerate(self.c):
            v[(i * step) % m] += x
        return v

    def __add__(self, other):
        m = self.n * other.n // math.gcd(self.n, other.n)
        return Cyc(m, [a + b for a, b in zip(self.lift(m), other.lift(m))])

    def __mul__(self, other):
        m = self.n * other.n // math.gcd(self.n, other.n)
        a, b = self.lift(m), other.lift(m)
        v = [Fraction(0)] * m
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        v[(i + j) % m] += x * y
        return Cyc(m, v)

    def __neg__(self):
        return Cyc(self.n, [-x for x in self.c])

    def canonical(self):
        n = self.n
        red = reduce_mod(self.c, n)
        for d in sorted(x for x in range(1, n + 1) if n % x == 0):
            width = len(phi_poly(d)) - 1
            cols = []
            for j in range(width):
                v = [Fraction(0)] * ((n // d) * j + 1)
                v[(n // d) * j] = Fraction(1)
                cols.append(reduce_mod(v, n))
            sol = solve(cols, red)
            if sol is not None:
                return d, sol
        raise AssertionError("unreachable")

    def json(self):
        d, coeffs = self.canonical()
        return {"conductor": d, "coeffs": [[x.numerator, x.denominator] for x in coeffs]}


def I(k):
    return Cyc.integer(k)


# ---------------------------------------------------------------- tables

def table(group, characters):
    """characters: list of functions element -> Cyc."""
    cls = group.classes()
    classes = []
    for c in cls:
        rep = c[0]
        classes.append({
            "size": len(c),
            "order": order(rep),
            "square": group.class_of(then(rep, rep)),
            "representative": cycles(rep),
        })
    chars = [[chi(c[0]).json() for c in cls] for chi in characters]
    return {"group": group.name, "classes": classes, "chars": chars}


def cyclic_table(n):
    g = cyclic(n)
    # the element sending 0 to k is the k-th power of the n-cycle
    return table(g, [lambda e, j=j: Cyc.zeta(n, j * e[0]) for j in range(n)])


def klein_table():
    g = klein_four()

    def chi(s, t):
        return lambda e: I((-1) ** ((s * (e[0] in (1, 3))) + (t * (e[0] in (2, 3)))))

    return table(g, [chi(s, t) for s in (0, 1) for t in (0, 1)])


def dihedral_table(n):
    g = dihedral(n)

    def is_reflection(e):
        return e[1] == (e[0] - 1) % n

    chars = [lambda e: I(1), lambda e: I(-1 if is_reflection(e) else 1)]
    if n % 2 == 0:
        chars.append(lambda e: I((-1) ** e[0]))
        chars.append(lambda e: I((-1) ** e[0] * (-1 if is_reflection(e) else 1)))
    for h in range(1, (n - 1) // 2 + 1):
        chars.append(lambda e, h=h: I(0) if is_reflection(e) else Cyc.zeta(n, h * e[0]) + Cyc.zeta(n, -h * e[0]))
    return table(g, chars)


def by_cycle_type(rows):
    return [lambda e, r=r: I(r[cycle_type(e)]) for r in rows]


def symmetric3_table():
    types = [(1, 1, 1), (2, 1), (3,)]
    vals = [[1, 1, 1], [1, -1, 1], [2, 0, -1]]
    return table(symmetric(3), by_cycle_type([dict(zip(types, v)) for v in vals]))


def symmetric4_table():
    types = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    vals = [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [2, 0, 2, -1, 0],
        [3, 1, -1, 0, -1],
        [3, -1, -1, 0, 1],
    ]
    return table(symmetric(4), by_cycle_type([dict(zip(types, v)) for v in vals]))


S5_TYPES = [(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)]
S5_ROWS = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, -1, 1],
    [4, 2, 0, 1, -1, 0, -1],
    [4, -2, 0, 1, 1, 0, -1],
    [5, 1, 1, -1, 1, -1, 0],
    [5, -1, 1, -1, -1, 1, 0],
    [6, 0, -2, 0, 0, 0, 1],
]


def symmetric5_table():
    return table(symmetric(5), by_cycle_type([dict(zip(S5_TYPES, v)) for v in S5_ROWS]))


def alternating4_table():
    g = alternating(4)
    a = g.class_of(cyc(4, [0, 1, 2]))

    def lin(power):
        def chi(e):
            if order(e) != 3:
                return I(1)
            return Cyc.zeta(3, power if g.class_of(e) == a else 2 * power)
        return chi

    def three(e):
        return I({1: 3, 2: -1, 3: 0}[order(e)])

    return table(g, [lin(0), lin(1), lin(2), three])


GOLDEN = -(Cyc.zeta(5, 2) + Cyc.zeta(5, 3))        # (1 + sqrt 5) / 2
GOLDEN_BAR = I(1) + Cyc.zeta(5, 2) + Cyc.zeta(5, 3)  # (1 - sqrt 5) / 2


def a5_characters(g, pick):
    """pick(e) maps an element of the A5 factor group to the A5 element."""
    five = g.class_of(pick.embed(cyc(5, range(5))))

    def three(swap):
        def chi(e):
            x = pick(e)
            o = order(x)
            if o == 5:
                first = (g.class_of(e) == five) if pick.direct else pick.is_first(x)
                return (GOLDEN if first != swap else GOLDEN_BAR)
            return I({1: 3, 2: -1, 3: 0}[o])
        return chi

    def fixed(vals):
        return lambda e: I(vals[order(pick(e))])

    return [
        fixed({1: 1, 2: 1, 3: 1, 5: 1}),
        three(False),
        three(True),
        fixed({1: 4, 2: 0, 3: 1, 5: -1}),
        fixed({1: 5, 2: 1, 3: -1, 5: 0}),
    ]


def alternating5_table():
    g = alternating(5)

    def pick(e):
        return e
    pick.direct = True
    pick.embed = lambda p: p
    return table(g, a5_characters(g, pick))


def a5xc2_table():
    a5 = alternating(5)
    g = product(a5, cyclic(2), "A5xC2")
    first_class = set(a5.classes()[a5.class_of(cyc(5, range(5)))])

    def pick(e):
        return tuple(e[:5])
    pick.direct = False
    pick.embed = lambda p: tuple(list(p) + [5, 6])
    pick.is_first = lambda x: x in first_class

    def sign(e):
        return -1 if e[5] == 6 else 1

    base = a5_characters(g, pick)
    chars = base + [lambda e, chi=chi: chi(e) * I(sign(e)) for chi in base]
    return table(g, chars)


def l27_table():
    g = projective(7, "L2_7")
    alpha = Cyc.zeta(7, 1) + Cyc.zeta(7, 2) + Cyc.zeta(7, 4)
    alpha_bar = Cyc.zeta(7, 3) + Cyc.zeta(7, 5) + Cyc.zeta(7, 6)
    first = g.class_of(g.gens[0])

    def three(swap):
        def chi(e):
            o = order(e)
            if o == 7:
                return alpha if (g.class_of(e) == first) != swap else alpha_bar
            return I({1: 3, 2: -1, 3: 0, 4: 1}[o])
        return chi

    def fixed(vals):
        return lambda e: I(vals[order(e)])

    return table(g, [
        fixed({1: 1, 2: 1, 3: 1, 4: 1, 7: 1}),
        three(False),
        three(True),
        fixed({1: 6, 2: 2, 3: 0, 4: 0, 7: -1}),
        fixed({1: 7, 2: -1, 3: 1, 4: -1, 7: 0}),
        fixed({1: 8, 2: 0, 3: -1, 4: 0, 7: 1}),
    ])


# ---------------------------------------------------------------- output

def write(kind, name, payload):
    path = os.path.join(ROOT, kind, f"{name}.json")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(payload, f, separators=(",", ":"))
        f.write("\n")


def main():
    groups = [cyclic(n) for n in range(1, 61)]
    groups += [klein_four(), symmetric(3)]
    groups += [dihedral(n) for n in range(3, 31)]
    groups += [alternating(4), symmetric(4), alternating(5), symmetric(5)]
    groups += [product(alternating(5), cyclic(2), "A5xC2")]
    groups += [projective(7, "L2_7"), projective(11, "L2_11"), projective(13, "L2_13")]
    groups += [projective(5, "PGL2_5", extra_scalings=(2,))]
    for g in groups:
        write("groups", g.name, g.json())

    tables = [cyclic_table(n) for n in range(1, 31)]
    tables += [klein_table(), symmetric3_table(), dihedral_table(4), dihedral_table(5)]
    tables += [alternating4_table(), symmetric4_table(), alternating5_table()]
    tables += [symmetric5_table(), a5xc2_table(), l27_table()]
    for t in tables:
        write("tables", t["group"], t)


if __name__ == "__main__":
    main()
