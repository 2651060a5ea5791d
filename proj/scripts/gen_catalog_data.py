#!/usr/bin/env python3
"""Regenerate src/catalog_data.cpp (embedded group catalogs) and data/groups/*.json.

Groups are built from explicit constructions (cycles, products, semidirect
products, coset actions), verified by closure, and frozen as cycle strings.
Run from the repository root:  python3 scripts/gen_catalog_data.py
"""

import itertools
import json
import os
from fractions import Fraction

# ---------------------------------------------------------------------------
# permutations: tuples over 0..n-1, compose(p,q) applies q first


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def from_cycles(n, cycles):
    img = list(range(n))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            img[a] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def cycle_string(p):
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append("(" + ",".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) if out else "()"


def closure(gens):
    n = len(gens[0])
    e = identity(n)
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def order_of(p):
    k = 1
    q = p
    e = identity(len(p))
    while q != e:
        q = compose(p, q)
        k += 1
    return k


def is_transitive(gens, n):
    seen = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for g in gens:
            if g[x] not in seen:
                seen.add(g[x])
                todo.append(g[x])
    return len(seen) == n


def shift(p, off, n):
    img = list(range(n))
    for i, v in enumerate(p):
        img[i + off] = v + off
    return tuple(img)


def direct(*gen_lists):
    degs = [len(gl[0]) for gl in gen_lists]
    n = sum(degs)
    out = []
    off = 0
    for gl, d in zip(gen_lists, degs):
        for g in gl:
            out.append(shift(g, off, n))
        off += d
    return out


def cyclic(n):
    return [from_cycles(n, [tuple(range(n))])]


def cyclic_compact(n):
    """single generator of order n as a product of prime-power cycles"""
    fac = []
    m = n
    d = 2
    while m > 1:
        if m % d == 0:
            pk = 1
            while m % d == 0:
                pk *= d
                m //= d
            fac.append(pk)
        d += 1
    if len(fac) == 1:
        return cyclic(n)
    deg = sum(fac)
    cycs = []
    off = 0
    for pk in fac:
        cycs.append(tuple(range(off, off + pk)))
        off += pk
    return [from_cycles(deg, cycs)]


def negation(n):
    return tuple((-i) % n for i in range(n))


def dihedral(n):
    return [cyclic(n)[0], negation(n)]


def affine(p, m):
    """x -> x+1 and x -> m*x on Z/p"""
    return [cyclic(p)[0], tuple((m * i) % p for i in range(p))]


def sym(n):
    return [from_cycles(n, [tuple(range(n))]), from_cycles(n, [(0, 1)])]


def alt(n):
    if n % 2 == 1:
        return [from_cycles(n, [(0, 1, 2)]), from_cycles(n, [tuple(range(n))])]
    return [from_cycles(n, [(0, 1, 2)]), from_cycles(n, [tuple(range(1, n))])]


def semidirect_cyclic(k, h, action_pow):
    """C_k x| C_h, generator of C_h acting by x -> action_pow*x; degree k+h"""
    n = k + h
    a = from_cycles(n, [tuple(range(k))])
    act = [(action_pow * i) % k for i in range(k)] + list(range(k, n))
    b = list(act)
    # multiply by the h-cycle on the tail
    tail = from_cycles(n, [tuple(range(k, n))])
    b = compose(tail, tuple(b))
    return [a, b]


def coset_action(gens, sub_gens):
    """left action of <gens> on left cosets of <sub_gens>; returns perms of cosets"""
    G = sorted(closure(gens))
    H = closure(sub_gens) if sub_gens else {identity(len(gens[0]))}
    cosets = []
    elem_to_coset = {}
    for g in G:
        if g in elem_to_coset:
            continue
        cos = frozenset(compose(g, h) for h in H)
        idx = len(cosets)
        cosets.append((min(cos), cos))
        for x in cos:
            elem_to_coset[x] = idx
    cosets_sorted = sorted(range(len(cosets)), key=lambda i: cosets[i][0])
    renum = {old: new for new, old in enumerate(cosets_sorted)}
    out = []
    for g in gens:
        img = [0] * len(cosets)
        for idx, (rep, _) in enumerate(cosets):
            img[renum[idx]] = renum[elem_to_coset[compose(g, rep)]]
        out.append(tuple(img))
    return out


# ---------------------------------------------------------------------------
# abstract groups (for regular representations of the awkward cases)


class AbsGroup:
    def __init__(self, elems, mult, e, gens):
        self.elems = sorted(elems, key=repr)
        self.elems.remove(e)
        self.elems.insert(0, e)
        self.mult = mult
        self.e = e
        self.gens = gens
        self.index = {x: i for i, x in enumerate(self.elems)}

    def regular_rep(self):
        out = []
        for g in self.gens:
            out.append(tuple(self.index[self.mult(g, x)] for x in self.elems))
        return out


def q8_abs():
    # 0..7 = 1,-1,i,-i,j,-j,k,-k
    neg = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4, 6: 7, 7: 6}
    base = {(0, x): x for x in range(8)}
    for x in range(8):
        base[(x, 0)] = x
    table = {("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
             ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
             ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1"}
    name = {2: "i", 4: "j", 6: "k"}
    code = {"1": 0, "-1": 1, "i": 2, "-i": 3, "j": 4, "-j": 5, "k": 6, "-k": 7}

    def mult(x, y):
        sx, sy = x % 2, y % 2
        bx, by = x - sx, y - sy
        if bx == 0:
            r = y
        elif by == 0:
            r = x - sx + 0
            r = bx
        else:
            r = code[table[(name[bx], name[by])]]
        if (sx + sy) % 2:
            r = neg[r]
        return r

    return AbsGroup(list(range(8)), mult, 0, [2, 4])


def metacyclic_abs(na, nb, b2, conj):
    """<a,b | a^na, b^nb with b^2=a^b2 when nb==2-with-twist, b a b^-1 = a^conj>.

    Elements (i,j), i mod na, j in 0..nb-1, with  b^nb = a^(b2*nb/2) convention:
    used for Q16: na=8, nb=2, b2=4, conj=-1  (b^2 = a^4).
    """

    def norm(i, j):
        return (i % na, j % 2)

    def mult(x, y):
        i, j = x
        k, l = y
        # (a^i b^j)(a^k b^l) = a^(i + k*conj^j) b^(j+l), b^2 = a^b2
        kk = (k * (conj ** j)) % na
        i2 = (i + kk) % na
        j2 = j + l
        if j2 >= 2:
            j2 -= 2
            i2 = (i2 + b2) % na
        return (i2, j2)

    elems = [(i, j) for i in range(na) for j in range(2)]
    return AbsGroup(elems, mult, (0, 0), [(1, 0), (0, 1)])


def central_product_d8_c4():
    """(D8 x C4) / <(r^2, c^2)>"""
    d8 = [(i, j) for i in range(4) for j in range(2)]  # r^i s^j

    def d8mult(x, y):
        i, j = x
        k, l = y
        kk = (-k) % 4 if j else k
        return ((i + kk) % 4, (j + l) % 2)

    elems0 = [(d, c) for d in d8 for c in range(4)]

    def mult0(x, y):
        return (d8mult(x[0], y[0]), (x[1] + y[1]) % 4)

    z = ((2, 0), 2)  # (r^2, c^2)
    pairs = {}
    for x in elems0:
        x2 = mult0(x, z)
        key = min(x, x2)
        pairs[x] = key
    elems = sorted(set(pairs.values()))

    def mult(x, y):
        return pairs[mult0(x, y)]

    return AbsGroup(elems, mult, pairs[((0, 0), 0)],
                    [pairs[((1, 0), 0)], pairs[((0, 1), 0)], pairs[((0, 0), 1)]])


# ---------------------------------------------------------------------------
# isomorphism testing (orders <= 64 here)


def elem_orders(G):
    return sorted(order_of(g) for g in G)


def minimal_gens(Gset):
    G = sorted(Gset)
    gens = []
    cur = {G[0]} if G[0] == identity(len(G[0])) else None
    cur = {identity(len(G[0]))}
    for x in G:
        if x in cur:
            continue
        gens.append(x)
        cur = closure(gens)
        if len(cur) == len(G):
            break
    return gens


def isomorphic(gs1, gs2):
    G1, G2 = closure(gs1), closure(gs2)
    if len(G1) != len(G2):
        return False
    if elem_orders(G1) != elem_orders(G2):
        return False
    gens = minimal_gens(G1)
    G2l = sorted(G2)
    by_order = {}
    for x in G2l:
        by_order.setdefault(order_of(x), []).append(x)
    e1 = identity(len(gs1[0]))
    e2 = identity(len(gs2[0]))

    def extend(mapping, g, img):
        # mapping: dict G1-elem -> G2-elem, closed; add g->img and re-close
        m = dict(mapping)
        if g in m:
            return m if m[g] == img else None
        m[g] = img
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in list(m.keys()):
                for a, b in ((compose(x, y), compose(m[x], m[y])),
                             (compose(y, x), compose(m[y], m[x]))):
                    if a in m:
                        if m[a] != b:
                            return None
                    else:
                        m[a] = b
                        frontier.append(a)
        vals = set(m.values())
        if len(vals) != len(m):
            return None
        return m

    def search(mapping, i):
        if len(mapping) == len(G1):
            return True
        if i == len(gens):
            # mapping closed but not full: extend gens
            for x in sorted(G1):
                if x not in mapping:
                    gens.append(x)
                    break
            return search(mapping, i)
        g = gens[i]
        for img in by_order.get(order_of(g), []):
            m = extend(mapping, g, img)
            if m is not None and search(m, i + 1):
                return True
        return False

    return search({e1: e2}, 0)


# ---------------------------------------------------------------------------
# named constructions


def v4():
    return [from_cycles(4, [(0, 1), (2, 3)]), from_cycles(4, [(0, 2), (1, 3)])]


def klein_regular():
    return [from_cycles(4, [(0, 1), (2, 3)]), from_cycles(4, [(0, 2), (1, 3)])]


def wreath_c2_c3():
    return [from_cycles(6, [(0, 1)]), from_cycles(6, [(0, 2, 4), (1, 3, 5)])]


def wreath_c2_s3():
    return [from_cycles(6, [(0, 1)]), from_cycles(6, [(0, 2, 4), (1, 3, 5)]),
            from_cycles(6, [(2, 4), (3, 5)])]


def wreath_c3_c2():
    return [from_cycles(6, [(0, 1, 2)]), from_cycles(6, [(0, 3), (1, 4), (2, 5)])]


def wreath_s3_c2():
    return [from_cycles(6, [(0, 1, 2)]), from_cycles(6, [(0, 1)]),
            from_cycles(6, [(0, 3), (1, 4), (2, 5)])]


def hol_s3():
    s3 = sorted(closure(sym(3)))
    idx = {x: i for i, x in enumerate(s3)}
    lam = lambda g: tuple(idx[compose(g, x)] for x in s3)
    conj = lambda g: tuple(idx[compose(compose(g, x), inverse(g))] for x in s3)
    return [lam(from_cycles(3, [(0, 1, 2)])), lam(from_cycles(3, [(0, 1)])),
            conj(from_cycles(3, [(0, 1)])), conj(from_cycles(3, [(0, 1, 2)]))]


def s3_regular():
    s3 = sorted(closure(sym(3)))
    idx = {x: i for i, x in enumerate(s3)}
    lam = lambda g: tuple(idx[compose(g, x)] for x in s3)
    return [lam(from_cycles(3, [(0, 1, 2)])), lam(from_cycles(3, [(0, 1)]))]


def f36_deg6():
    # E9 x| C4 acting on cosets of an S3 subgroup
    elems = [(x, y, k) for x in range(3) for y in range(3) for k in range(4)]

    def rot(x, y, times):
        for _ in range(times % 4):
            x, y = (-y) % 3, x
        return x, y

    def mult(p, q):
        x, y, k = p
        u, v, l = q
        ru, rv = rot(u, v, k)
        return ((x + ru) % 3, (y + rv) % 3, (k + l) % 4)

    G = AbsGroup(elems, mult, (0, 0, 0), [(1, 0, 0), (0, 0, 1)])
    perms = G.regular_rep()
    # S3 = <a=(1,0,0), s=(0,0,2)>
    a = tuple(G.index[mult((1, 0, 0), x)] for x in G.elems)
    s = tuple(G.index[mult((0, 0, 2), x)] for x in G.elems)
    sub = [a, s]
    assert len(closure(sub)) == 6
    return coset_action(perms, sub)


def s4_on_c4_cosets():
    return coset_action(sym(4), [from_cycles(4, [(0, 1, 2, 3)])])


def s4_on_pairs():
    return coset_action(sym(4), [from_cycles(4, [(0, 1)]), from_cycles(4, [(2, 3)])])


def a4_deg6():
    return coset_action(alt(4), [from_cycles(4, [(0, 1), (2, 3)])])


def psl27_deg7():
    # GL(3,2) acting on the 7 nonzero vectors of F_2^3, point i <-> binary i+1
    def matvec(M, v):
        out = 0
        for r in range(3):
            bit = 0
            for c in range(3):
                bit ^= ((M[r] >> c) & 1) & ((v >> c) & 1)
            out |= bit << r
        return out

    def matperm(M):
        return tuple(matvec(M, v + 1) - 1 for v in range(7))

    A = [0b010, 0b100, 0b011]  # companion of x^3 + x + 1
    B = [0b011, 0b010, 0b100]  # e1 -> e1+e2 transvection
    ga, gb = matperm(A), matperm(B)
    assert len(closure([ga, gb])) == 168
    return [ga, gb]


def psl211_deg11():
    # PSL(2,11) on P^1(F11) (12 points), then on cosets of an A5 subgroup
    pts = list(range(11)) + ["inf"]
    idx = {p: i for i, p in enumerate(pts)}

    def frac(fn):
        img = []
        for p in pts:
            img.append(idx[fn(p)])
        return tuple(img)

    def add1(z):
        return "inf" if z == "inf" else (z + 1) % 11

    def neginv(z):
        if z == "inf":
            return 0
        if z == 0:
            return "inf"
        return (-pow(z, 9, 11)) % 11

    t, s = frac(add1), frac(neginv)
    G = sorted(closure([t, s]))
    assert len(G) == 660
    invs = [x for x in G if x != identity(12) and compose(x, x) == identity(12)]
    thirds = [x for x in G if order_of(x) == 3]
    sub = None
    for x in invs:
        for y in thirds:
            if order_of(compose(x, y)) == 5:
                c = closure([x, y])
                if len(c) == 60:
                    sub = [x, y]
                    break
        if sub:
            break
    assert sub is not None
    act = coset_action([t, s], sub)
    assert is_transitive(act, 11)
    assert len(closure(act)) == 660
    return act


# ---------------------------------------------------------------------------
# catalog assembly

SMALL = {}  # order -> list of (name, gens)


def add_small(order, name, gens):
    G = closure(gens)
    assert len(G) == order, (name, order, len(G))
    for other_name, other in SMALL.get(order, []):
        assert not isomorphic(gens, other), (name, other_name)
    SMALL.setdefault(order, []).append((name, gens))


def build_small():
    add_small(1, "C1", [identity(1)])
    for p in [2, 3, 5, 7, 11, 13]:
        add_small(p, "C%d" % p, cyclic(p))
    add_small(4, "C4", cyclic(4))
    add_small(4, "V4", v4())
    add_small(6, "C6", cyclic_compact(6))
    add_small(6, "S3", sym(3))
    add_small(8, "C8", cyclic(8))
    add_small(8, "C4xC2", direct(cyclic(4), cyclic(2)))
    add_small(8, "C2xC2xC2", direct(cyclic(2), cyclic(2), cyclic(2)))
    add_small(8, "D_{2·4}", dihedral(4))
    add_small(8, "Q8", q8_abs().regular_rep())
    add_small(9, "C9", cyclic(9))
    add_small(9, "C3xC3", direct(cyclic(3), cyclic(3)))
    add_small(10, "C10", cyclic_compact(10))
    add_small(10, "D_{2·5}", dihedral(5))
    add_small(12, "C12", cyclic_compact(12))
    add_small(12, "C2xC6", direct(cyclic(2), cyclic_compact(6)))
    add_small(12, "D_{2·6}", dihedral(6))
    add_small(12, "A4", alt(4))
    add_small(12, "Dic3", semidirect_cyclic(3, 4, -1))
    add_small(14, "C14", cyclic_compact(14))
    add_small(14, "D_{2·7}", dihedral(7))
    add_small(15, "C15", cyclic_compact(15))
    # order 16
    add_small(16, "C16", cyclic(16))
    add_small(16, "C8xC2", direct(cyclic(8), cyclic(2)))
    add_small(16, "C4xC4", direct(cyclic(4), cyclic(4)))
    add_small(16, "C4xC2xC2", direct(cyclic(4), cyclic(2), cyclic(2)))
    add_small(16, "C2xC2xC2xC2", direct(*[cyclic(2)] * 4))
    add_small(16, "D_{2·8}", dihedral(8))
    add_small(16, "SD16", affine(8, 3))
    add_small(16, "M16", affine(8, 5))
    add_small(16, "Q16", metacyclic_abs(8, 2, 4, -1).regular_rep())
    add_small(16, "D8xC2", direct(dihedral(4), cyclic(2)))
    add_small(16, "Q8xC2", direct(q8_abs().regular_rep(), cyclic(2)))
    add_small(16, "C4:C4", semidirect_cyclic(4, 4, -1))
    add_small(16, "(C2xC2):C4",
              [from_cycles(8, [(0, 1)]),
               from_cycles(8, [(0, 2), (1, 3), (4, 5, 6, 7)])])
    add_small(16, "D8*C4", central_product_d8_c4().regular_rep())
    # order 18
    add_small(18, "C18", cyclic_compact(18))
    add_small(18, "C3xC6", direct(cyclic(3), cyclic_compact(6)))
    add_small(18, "D_{2·9}", dihedral(9))
    add_small(18, "C3xS3", direct(cyclic(3), sym(3)))
    add_small(18, "(C3xC3):C2",
              [from_cycles(6, [(0, 1, 2)]), from_cycles(6, [(3, 4, 5)]),
               from_cycles(6, [(1, 2), (4, 5)])])
    # order 20
    add_small(20, "C20", cyclic_compact(20))
    add_small(20, "C2xC10", direct(cyclic(2), cyclic_compact(10)))
    add_small(20, "D_{2·10}", dihedral(10))
    add_small(20, "Dic5", semidirect_cyclic(5, 4, -1))
    add_small(20, "F20", affine(5, 2))
    add_small(21, "C21", cyclic_compact(21))
    add_small(21, "F21", affine(7, 2))
    # order 24
    add_small(24, "C24", cyclic_compact(24))
    add_small(24, "C12xC2", direct(cyclic_compact(12), cyclic(2)))
    add_small(24, "C6xC2xC2", direct(cyclic_compact(6), cyclic(2), cyclic(2)))
    add_small(24, "C3:C8", semidirect_cyclic(3, 8, -1))
    add_small(24, "SL(2,3)", sl23())
    add_small(24, "Dic6", dic_via_q8(3))
    add_small(24, "C4xS3", direct(cyclic(4), sym(3)))
    add_small(24, "D_{2·12}", dihedral(12))
    add_small(24, "C2xDic3", direct(cyclic(2), semidirect_cyclic(3, 4, -1)))
    add_small(24, "C3:D8", c3_semi_d8())
    add_small(24, "C3xD8", direct(cyclic(3), dihedral(4)))
    add_small(24, "C3xQ8", direct(cyclic(3), q8_abs().regular_rep()))
    add_small(24, "S4", sym(4))
    add_small(24, "C2xA4", direct(cyclic(2), alt(4)))
    add_small(24, "C2xC2xS3", direct(cyclic(2), cyclic(2), sym(3)))
    # order 30
    add_small(30, "C30", cyclic_compact(30))
    add_small(30, "D_{2·15}", dihedral(15))
    add_small(30, "C3xD_{2·5}", direct(cyclic(3), dihedral(5)))
    add_small(30, "C5xS3", direct(cyclic(5), sym(3)))
    # order 40
    add_small(40, "C40", cyclic_compact(40))
    add_small(40, "C20xC2", direct(cyclic_compact(20), cyclic(2)))
    add_small(40, "C10xC2xC2", direct(cyclic_compact(10), cyclic(2), cyclic(2)))
    add_small(40, "D_{2·20}", dihedral(20))
    add_small(40, "Dic10", dic_via_q8(5))
    add_small(40, "C5:C8(4)", semidirect_cyclic(5, 8, 2))
    add_small(40, "C5:C8(2)", semidirect_cyclic(5, 8, -1))
    add_small(40, "C2xDic5", direct(cyclic(2), semidirect_cyclic(5, 4, -1)))
    add_small(40, "C2xF20", direct(cyclic(2), affine(5, 2)))
    add_small(40, "C4xD_{2·5}", direct(cyclic(4), dihedral(5)))
    add_small(40, "C2xC2xD_{2·5}", direct(cyclic(2), cyclic(2), dihedral(5)))
    add_small(40, "C5xD8", direct(cyclic(5), dihedral(4)))
    add_small(40, "C5xQ8", direct(cyclic(5), q8_abs().regular_rep()))
    add_small(40, "C5:D8", c5_semi_d8())
    # order 60
    add_small(60, "C60", cyclic_compact(60))
    add_small(60, "C2xC30", direct(cyclic(2), cyclic_compact(30)))
    add_small(60, "A5", alt(5))
    add_small(60, "D_{2·30}", dihedral(30))
    add_small(60, "Dic15", semidirect_cyclic(15, 4, -1))
    add_small(60, "C15:C4", c15_semi_c4())
    add_small(60, "C3xF20", direct(cyclic(3), affine(5, 2)))
    add_small(60, "C5xA4", direct(cyclic(5), alt(4)))
    add_small(60, "S3xD_{2·5}", direct(sym(3), dihedral(5)))
    add_small(60, "C6xD_{2·5}", direct(cyclic_compact(6), dihedral(5)))
    add_small(60, "C10xS3", direct(cyclic_compact(10), sym(3)))
    add_small(60, "C5xDic3", direct(cyclic(5), semidirect_cyclic(3, 4, -1)))
    add_small(60, "C3xDic5", direct(cyclic(3), semidirect_cyclic(5, 4, -1)))


def sl23():
    # Q8 x| C3, C3 cycling i -> j -> k, acting on the 8 quaternion points
    q = q8_abs()
    perms = q.regular_rep()
    rot = {0: 0, 1: 1, 2: 4, 3: 5, 4: 6, 5: 7, 6: 2, 7: 3}  # i->j->k->i
    c = tuple(q.index[rot[x]] for x in q.elems)
    gens = perms + [c]
    assert len(closure(gens)) == 24
    return gens


def dic_via_q8(k):
    # C_k x| Q8 with kernel <i>: j inverts the k-part; dicyclic of order 8k
    q = q8_abs()
    qperms = q.regular_rep()  # i, j on 8 points
    n = k + 8
    a = from_cycles(n, [tuple(range(k))])
    i_p = shift(qperms[0], k, n)
    inv = tuple((-x) % k for x in range(k)) + tuple(range(k, n))
    j_p = compose(shift(qperms[1], k, n), inv)
    gens = [a, i_p, j_p]
    assert len(closure(gens)) == 8 * k
    return gens


def c3_semi_d8():
    # C3 x| D8 where both r and s act by inversion (kernel the Klein <r^2, rs>)
    n = 3 + 4
    a = from_cycles(n, [(0, 1, 2)])
    inv = from_cycles(n, [(1, 2)])
    r = compose(from_cycles(n, [(3, 4, 5, 6)]), inv)
    s = compose(from_cycles(n, [(4, 6)]), inv)
    gens = [a, r, s]
    assert len(closure(gens)) == 24
    return gens


def c5_semi_d8():
    n = 5 + 4
    a = from_cycles(n, [(0, 1, 2, 3, 4)])
    inv = from_cycles(n, [(1, 4), (2, 3)])
    r = compose(from_cycles(n, [(5, 6, 7, 8)]), inv)
    s = compose(from_cycles(n, [(6, 8)]), inv)
    gens = [a, r, s]
    assert len(closure(gens)) == 40
    return gens


def c15_semi_c4():
    # C15 x| C4, generator acting as inversion on C3 and x->2x on C5
    n = 3 + 5 + 4
    a = from_cycles(n, [(0, 1, 2), (3, 4, 5, 6, 7)])
    act = from_cycles(n, [(1, 2), (4, 5, 7, 6)])  # -1 on C3, *2 on C5
    b = compose(from_cycles(n, [(8, 9, 10, 11)]), act)
    gens = [a, b]
    assert len(closure(gens)) == 60
    return gens


TRANSITIVE = {}  # degree -> list of (name, order, gens or None)


def add_trans(degree, name, order, gens):
    if gens is not None:
        G = closure(gens)
        assert len(G) == order, (name, order, len(G))
        assert is_transitive(gens, degree), name
    TRANSITIVE.setdefault(degree, []).append((name, order, gens))


def build_transitive():
    add_trans(2, "C2", 2, cyclic(2))
    add_trans(3, "C3", 3, cyclic(3))
    add_trans(3, "S3", 6, sym(3))
    add_trans(4, "C4", 4, cyclic(4))
    add_trans(4, "V4", 4, v4())
    add_trans(4, "D_{2·4}", 8, dihedral(4))
    add_trans(4, "A4", 12, alt(4))
    add_trans(4, "S4", 24, sym(4))
    add_trans(5, "C5", 5, cyclic(5))
    add_trans(5, "D_{2·5}", 10, dihedral(5))
    add_trans(5, "F20", 20, affine(5, 2))
    add_trans(5, "A5", 60, alt(5))
    add_trans(5, "S5", 120, sym(5))
    # degree 6, in table order
    add_trans(6, "C6", 6, cyclic(6))
    add_trans(6, "S3", 6, s3_regular())
    add_trans(6, "D_{2·6}", 12, dihedral(6))
    add_trans(6, "A4", 12, a4_deg6())
    add_trans(6, "F18", 18, wreath_c3_c2())
    add_trans(6, "2A4", 24, wreath_c2_c3())
    add_trans(6, "S4(6d)", 24, s4_on_pairs())
    add_trans(6, "S4(6c)", 24, s4_on_c4_cosets())
    add_trans(6, "F_{18}:2", 36, hol_s3())
    add_trans(6, "F36", 36, f36_deg6())
    add_trans(6, "2S4", 48, wreath_c2_s3())
    add_trans(6, "A5", 60, [from_cycles(6, [(1, 2, 3, 4, 5)]),
                            from_cycles(6, [(0, 1), (2, 5)])])
    add_trans(6, "F_{36}:2", 72, wreath_s3_c2())
    add_trans(6, "S5", 120, [from_cycles(6, [(1, 2, 3, 4, 5)]),
                             from_cycles(6, [(0, 1), (2, 5)]),
                             from_cycles(6, [(2, 3, 5, 4)])])
    add_trans(6, "A6", 360, alt(6))
    add_trans(6, "S6", 720, sym(6))
    # S4(6d) is the even copy, S4(6c) the odd one
    assert all(parity(g) == 0 for g in s4_on_pairs())
    assert any(parity(g) == 1 for g in s4_on_c4_cosets())
    add_trans(7, "C7", 7, cyclic(7))
    add_trans(7, "D_{2·7}", 14, dihedral(7))
    add_trans(7, "F21", 21, affine(7, 2))
    add_trans(7, "F42", 42, affine(7, 3))
    add_trans(7, "PSL(2,7)", 168, psl27_deg7())
    add_trans(7, "A7", 2520, alt(7))
    add_trans(7, "S7", 5040, sym(7))
    add_trans(11, "C11", 11, cyclic(11))
    add_trans(11, "D_{2·11}", 22, dihedral(11))
    add_trans(11, "F55", 55, affine(11, 3))
    add_trans(11, "F110", 110, affine(11, 2))
    add_trans(11, "PSL(2,11)", 660, psl211_deg11())
    add_trans(11, "M11", 7920, None)
    add_trans(11, "A11", 19958400, None)
    add_trans(11, "S11", 39916800, None)


def parity(p):
    n = len(p)
    seen = [False] * n
    par = 0
    for i in range(n):
        if seen[i]:
            continue
        j = i
        ln = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        par ^= (ln - 1) & 1
    return par


# ---------------------------------------------------------------------------
# output


def gens_string(gens):
    return ";".join(cycle_string(g) for g in gens)


def emit_cpp(path):
    lines = []
    lines.append("// Embedded group catalogs. Generated by scripts/gen_catalog_data.py;")
    lines.append("// do not edit by hand.")
    lines.append('#include "hgk/groupid.hpp"')
    lines.append("")
    lines.append("namespace hgk::detail {")
    lines.append("")
    lines.append("const RawCatalogEntry kSmallGroups[] = {")
    for order in sorted(SMALL):
        for name, gens in SMALL[order]:
            deg = len(gens[0])
            lines.append('    {"%s", %d, %d, "%s"},' % (name, deg, order, gens_string(gens)))
    lines.append("};")
    lines.append("const std::size_t kSmallGroupCount = sizeof(kSmallGroups) / sizeof(kSmallGroups[0]);")
    lines.append("")
    lines.append("const RawCatalogEntry kTransitiveGroups[] = {")
    for degree in sorted(TRANSITIVE):
        for name, order, gens in TRANSITIVE[degree]:
            gs = gens_string(gens) if gens is not None else ""
            lines.append('    {"%s", %d, %d, "%s"},' % (name, degree, order, gs))
    lines.append("};")
    lines.append("const std::size_t kTransitiveGroupCount = sizeof(kTransitiveGroups) / sizeof(kTransitiveGroups[0]);")
    lines.append("")
    lines.append("}  // namespace hgk::detail")
    lines.append("")
    with open(path, "w") as fh:
        fh.write("\n".join(lines))


def emit_group_json(path, degree, gens, name):
    doc = {"degree": degree, "generators": [cycle_string(g) for g in gens], "name": name}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def emit_examples(root):
    os.makedirs(root, exist_ok=True)
    emit_group_json(os.path.join(root, "V4.json"), 4, v4(), "V4")
    emit_group_json(os.path.join(root, "C4.json"), 4, cyclic(4), "C4")
    emit_group_json(os.path.join(root, "C6.json"), 6, cyclic(6), "C6")
    emit_group_json(os.path.join(root, "C8.json"), 8, cyclic(8), "C8")
    emit_group_json(os.path.join(root, "S3.json"), 3, sym(3), "S3")
    emit_group_json(os.path.join(root, "S3_point_stab.json"), 3,
                    [from_cycles(3, [(1, 2)])], "point stabilizer in S3")
    emit_group_json(os.path.join(root, "D8.json"), 4, dihedral(4), "D8 on 4 points")
    emit_group_json(os.path.join(root, "D8_point_stab.json"), 4,
                    [from_cycles(4, [(1, 3)])], "point stabilizer in D8")
    emit_group_json(os.path.join(root, "trivial4.json"), 4, [], "trivial")
    s46c = s4_on_c4_cosets()
    emit_group_json(os.path.join(root, "S4deg6.json"), 6, s46c, "S4(6c)")
    # stabilizer of point 1 inside S4(6c)
    G = sorted(closure(s46c))
    stab = [g for g in G if g[0] == 0 and g != identity(6)]
    stab_gens = minimal_gens(set(stab) | {identity(6)})
    emit_group_json(os.path.join(root, "S4deg6_point_stab.json"), 6, stab_gens,
                    "point stabilizer in S4(6c)")


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(here)
    build_small()
    build_transitive()
    counts = {o: len(v) for o, v in sorted(SMALL.items())}
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 18: 5, 20: 5,
                21: 2, 24: 15, 30: 4, 40: 14, 60: 13}
    assert counts == expected, counts
    emit_cpp(os.path.join(root, "src", "catalog_data.cpp"))
    emit_examples(os.path.join(root, "data", "groups"))
    print("small groups:", sum(counts.values()))
    print("transitive entries:", sum(len(v) for v in TRANSITIVE.values()))


if __name__ == "__main__":
    main()
