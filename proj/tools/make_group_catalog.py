#!/usr/bin/env python3
"""Regenerates data/groups/: one multiplication-table file per group of order
2..27, plus the completeness manifest.

Every group is built from an explicit construction (cyclic, direct product,
dihedral, dicyclic, semidirect product, central product, permutation or
matrix closure). The script checks the group axioms, checks that the groups
listed for each order are pairwise non-isomorphic, and checks the count per
order against the standard classification of groups of small order. Tables
are written in the `.grp` format the library loader validates again on load.

Usage: python3 tools/make_group_catalog.py [output-dir]
"""

import itertools
import os
import sys


class Group:
    def __init__(self, name, elements, mul, identity):
        self.name = name
        self.elements = list(elements)
        index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.n = n
        self.table = [[index[mul(a, b)] for b in self.elements] for a in self.elements]
        self.identity = index[identity]

    def check_axioms(self):
        n, t, e = self.n, self.table, self.identity
        for a in range(n):
            assert sorted(t[a]) == list(range(n)), (self.name, "row", a)
            assert sorted(t[b][a] for b in range(n)) == list(range(n)), (self.name, "col", a)
            assert t[e][a] == a and t[a][e] == a, (self.name, "identity")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    assert t[ab][c] == t[a][t[b][c]], (self.name, "assoc", a, b, c)

    def inverse(self, a):
        return self.table[a].index(self.identity)

    def element_order(self, a):
        x, k = a, 1
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def order_profile(self):
        return tuple(sorted(self.element_order(a) for a in range(self.n)))

    def center_size(self):
        return sum(
            1
            for a in range(self.n)
            if all(self.table[a][b] == self.table[b][a] for b in range(self.n))
        )

    def is_abelian(self):
        return self.center_size() == self.n

    def generating_sequence(self):
        gens, closure = [], {self.identity}
        while len(closure) < self.n:
            best = None
            for a in range(self.n):
                if a in closure:
                    continue
                new = close(self.table, self.identity, gens + [a])
                if best is None or len(new) > len(best[1]):
                    best = (a, new)
                if len(new) == self.n:
                    break
            gens.append(best[0])
            closure = best[1]
        return gens


def close(table, identity, gens):
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def isomorphic(A, B):
    if A.n != B.n:
        return False
    if A.order_profile() != B.order_profile():
        return False
    if A.center_size() != B.center_size():
        return False
    gens = A.generating_sequence()
    gen_orders = [A.element_order(g) for g in gens]
    candidates = [
        [b for b in range(B.n) if B.element_order(b) == o] for o in gen_orders
    ]

    def extend(images):
        # build phi by closure from generator images; None on conflict
        phi = {A.identity: B.identity}
        frontier = [A.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g, h in zip(gens, images):
                    y = A.table[x][g]
                    img = B.table[phi[x]][h]
                    if y in phi:
                        if phi[y] != img:
                            return None
                    else:
                        phi[y] = img
                        nxt.append(y)
            frontier = nxt
        if len(set(phi.values())) != A.n:
            return None
        for a in range(A.n):
            for b in range(A.n):
                if phi[A.table[a][b]] != B.table[phi[a]][phi[b]]:
                    return None
        return phi

    for images in itertools.product(*candidates):
        if extend(images) is not None:
            return True
    return False


# ---- constructions ---------------------------------------------------------

def cyclic(n, name=None):
    return Group(name or f"Z{n}", range(n), lambda a, b: (a + b) % n, 0)


def direct(A, B, name=None):
    els = [(a, b) for a in range(A.n) for b in range(B.n)]
    return Group(
        name or f"{A.name}x{B.name}",
        els,
        lambda x, y: (A.table[x[0]][y[0]], B.table[x[1]][y[1]]),
        (A.identity, B.identity),
    )


def dihedral(m, name=None):
    els = [(i, f) for f in range(2) for i in range(m)]

    def mul(x, y):
        i, f = x
        j, g = y
        return ((i + j) % m if f == 0 else (i - j) % m, (f + g) % 2)

    return Group(name or f"D{m}", els, mul, (0, 0))


def dicyclic(m, name=None):
    # order 4m: a^(2m)=1, b^2=a^m, b a b^-1 = a^-1
    els = [(i, f) for f in range(2) for i in range(2 * m)]

    def mul(x, y):
        i, f = x
        j, g = y
        if f == 0:
            return ((i + j) % (2 * m), g)
        if g == 0:
            return ((i - j) % (2 * m), 1)
        return ((i - j + m) % (2 * m), 0)

    return Group(name or f"Dic{m}", els, mul, (0, 0))


def semidirect_cyclic(n, m, k, name):
    # Zn x| Zm with the generator of Zm acting by x -> k*x; needs k^m = 1 mod n
    assert pow(k, m, n) == 1
    pows = [pow(k, j, n) for j in range(m)]

    def mul(x, y):
        i, f = x
        j, g = y
        return ((i + j * pows[f]) % n, (f + g) % m)

    return Group(name, [(i, j) for j in range(m) for i in range(n)], mul, (0, 0))


def z4xz2_semi_z2():
    # (Z4 x Z2) x| Z2, the action fixing Z2 and mapping u -> u*v
    def phi(h):
        a, b = h
        return (a, (b + a) % 2)

    def mul(x, y):
        (h, c), (h2, c2) = x, y
        g = h2 if c == 0 else phi(h2)
        return (((h[0] + g[0]) % 4, (h[1] + g[1]) % 2), (c + c2) % 2)

    els = [((a, b), c) for c in range(2) for a in range(4) for b in range(2)]
    return Group("Z4xZ2:Z2", els, mul, ((0, 0), 0))


def pauli16():
    # central product Z4 o D4: phases i^k times one of I,X,Y,Z
    prod = {}
    for s in range(4):
        prod[(0, s)] = (0, s)
        prod[(s, 0)] = (0, s)
    for s in range(1, 4):
        prod[(s, s)] = (0, 0)
    # X*Y = iZ, Y*Z = iX, Z*X = iY and the reversed products pick up -i
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        prod[(a, b)] = (1, c)
        prod[(b, a)] = (3, c)

    def mul(x, y):
        (p, s), (q, t) = x, y
        r, u = prod[(s, t)]
        return ((p + q + r) % 4, u)

    els = [(p, s) for p in range(4) for s in range(4)]
    return Group("Z4oD4", els, mul, (0, 0))


def gen_dihedral_z3z3():
    # (Z3 x Z3) x| Z2 with inversion
    def mul(x, y):
        (h, c), (h2, c2) = x, y
        g = h2 if c == 0 else ((-h2[0]) % 3, (-h2[1]) % 3)
        return (((h[0] + g[0]) % 3, (h[1] + g[1]) % 3), (c + c2) % 2)

    els = [((a, b), c) for c in range(2) for a in range(3) for b in range(3)]
    return Group("(Z3xZ3):Z2", els, mul, ((0, 0), 0))


def heisenberg3():
    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)

    els = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    return Group("Heis3", els, mul, (0, 0, 0))


def perm_group(name, gens, degree):
    idp = tuple(range(degree))
    seen = {idp}
    frontier = [idp]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    els = sorted(seen)
    return Group(name, els, lambda p, q: tuple(p[q[i]] for i in range(degree)), idp)


def sl23():
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    els = [m for m in itertools.product(range(3), repeat=4)
           if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]
    return Group("SL(2,3)", sorted(els), mul, (1, 0, 0, 1))


def c3_semi_d4(kernel):
    # Z3 x| D4 with D4 acting through a quotient of order 2; `kernel` names
    # the acting kernel: "rot" (rotations act trivially) or "r2s" (<r^2, s>)
    d4 = dihedral(4)

    def sign(d):
        i, f = d4.elements[d]
        if kernel == "rot":
            return 1 if f == 0 else -1
        return 1 if i % 2 == 0 else -1

    def mul(x, y):
        (i, d), (j, e) = x, y
        return ((i + j * sign(d)) % 3, d4.table[d][e])

    els = [(i, d) for d in range(8) for i in range(3)]
    return Group(f"Z3:D4[{kernel}]", els, mul, (0, d4.identity))


# ---- catalog ---------------------------------------------------------------

EXPECTED_COUNTS = {
    2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
    13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2,
    23: 1, 24: 15, 25: 2, 26: 2, 27: 5,
}


def catalog():
    groups = []
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        groups.append(cyclic(p))
    for p2, parts in ((4, 2), (9, 3), (25, 5)):
        groups.append(cyclic(p2))
        groups.append(direct(cyclic(parts), cyclic(parts)))
    for p in (3, 5, 7, 11, 13):
        groups.append(cyclic(2 * p))
        groups.append(dihedral(p))
    groups.append(cyclic(15))
    groups.append(cyclic(21))
    groups.append(semidirect_cyclic(7, 3, 2, "Z7:Z3"))

    groups += [
        cyclic(8), direct(cyclic(4), cyclic(2)),
        direct(cyclic(2), direct(cyclic(2), cyclic(2), "Z2xZ2"), "Z2xZ2xZ2"),
        dihedral(4), dicyclic(2, "Q8"),
    ]
    groups += [
        cyclic(12), direct(cyclic(2), cyclic(6)), dihedral(6), dicyclic(3),
        perm_group("A4", [[1, 2, 0, 3], [0, 2, 3, 1]], 4),
    ]
    groups += [
        cyclic(16), direct(cyclic(4), cyclic(4)), direct(cyclic(8), cyclic(2)),
        direct(cyclic(4), direct(cyclic(2), cyclic(2), "Z2xZ2"), "Z4xZ2xZ2"),
        direct(direct(cyclic(2), cyclic(2), "Z2xZ2"),
               direct(cyclic(2), cyclic(2), "Z2xZ2"), "Z2^4"),
        dihedral(8), dicyclic(4, "Q16"),
        semidirect_cyclic(8, 2, 3, "SD16"),
        semidirect_cyclic(8, 2, 5, "M4(2)"),
        direct(dihedral(4), cyclic(2)), direct(dicyclic(2, "Q8"), cyclic(2)),
        semidirect_cyclic(4, 4, 3, "Z4:Z4"),
        z4xz2_semi_z2(), pauli16(),
    ]
    groups += [
        cyclic(18), direct(cyclic(3), cyclic(6)), dihedral(9),
        direct(dihedral(3), cyclic(3), "S3xZ3"), gen_dihedral_z3z3(),
    ]
    groups += [
        cyclic(20), direct(cyclic(2), cyclic(10)), dihedral(10), dicyclic(5),
        semidirect_cyclic(5, 4, 2, "F20"),
    ]
    groups += [
        cyclic(24), direct(cyclic(2), cyclic(12)),
        direct(direct(cyclic(2), cyclic(2), "Z2xZ2"), cyclic(6), "Z2xZ2xZ6"),
        dihedral(12), dicyclic(6),
        perm_group("S4", [[1, 2, 3, 0], [1, 0, 2, 3]], 4),
        direct(perm_group("A4", [[1, 2, 0, 3], [0, 2, 3, 1]], 4), cyclic(2), "A4xZ2"),
        direct(cyclic(3), dihedral(4), "Z3xD4"),
        direct(cyclic(3), dicyclic(2, "Q8"), "Z3xQ8"),
        direct(cyclic(4), dihedral(3), "Z4xS3"),
        direct(direct(cyclic(2), cyclic(2), "Z2xZ2"), dihedral(3), "Z2xZ2xS3"),
        direct(cyclic(2), dicyclic(3), "Z2xDic3"),
        sl23(),
        semidirect_cyclic(3, 8, 2, "Z3:Z8"),
        c3_semi_d4("rot"), c3_semi_d4("r2s"),
    ]
    groups += [
        cyclic(27), direct(cyclic(9), cyclic(3)),
        direct(direct(cyclic(3), cyclic(3), "Z3xZ3"), cyclic(3), "Z3xZ3xZ3"),
        heisenberg3(), semidirect_cyclic(9, 3, 4, "Z9:Z3"),
    ]
    return groups


def sanitize(name):
    out = []
    for c in name.lower():
        out.append(c if c.isalnum() else "_")
    s = "".join(out)
    while "__" in s:
        s = s.replace("__", "_")
    return s.strip("_")


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join("data", "groups")
    groups = catalog()
    by_order = {}
    for g in groups:
        g.check_axioms()
        by_order.setdefault(g.n, []).append(g)

    kept = {}
    for order in sorted(by_order):
        distinct = []
        for g in by_order[order]:
            if any(isomorphic(g, h) for h in distinct):
                print(f"  note: order {order}: {g.name} duplicates an earlier group, dropped")
                continue
            distinct.append(g)
        expected = EXPECTED_COUNTS[order]
        assert len(distinct) == expected, (
            f"order {order}: built {len(distinct)} pairwise non-isomorphic groups, "
            f"classification says {expected}")
        kept[order] = distinct
        print(f"order {order}: {len(distinct)} groups")

    os.makedirs(outdir, exist_ok=True)
    for f in os.listdir(outdir):
        if f.endswith(".grp"):
            os.remove(os.path.join(outdir, f))
    for order, gs in kept.items():
        for g in gs:
            path = os.path.join(outdir, f"order{order:02d}_{sanitize(g.name)}.grp")
            with open(path, "w") as fh:
                fh.write(f"order={g.n}\n")
                fh.write(f"name={g.name}\n")
                for row in g.table:
                    fh.write(" ".join(map(str, row)) + "\n")
    with open(os.path.join(outdir, "completeness.toml"), "w") as fh:
        fh.write("# orders whose group list is complete per the standard\n")
        fh.write("# classification of groups of small order\n")
        fh.write("complete = [" + ", ".join(str(o) for o in sorted(kept)) + "]\n")
    total = sum(len(gs) for gs in kept.values())
    print(f"wrote {total} groups to {outdir}")


if __name__ == "__main__":
    main()
