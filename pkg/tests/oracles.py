"""Brute-force reference implementations used as test oracles.

Everything here works on Python ``set`` tables and quantifies literally over
the definitions (including the joint ``(y, z)`` existential), sharing no code
with the bitmask implementation under test.
"""

from itertools import product


def sets_of(h):
    """Hypergroupoid -> list of lists of frozensets."""
    n = h.order
    return [[frozenset(e for e in range(n) if h.table[x][y] >> e & 1) for y in range(n)] for x in range(n)]


def set_product(t, a, b):
    out = set()
    for x in a:
        for y in b:
            out |= t[x][y]
    return out


def is_hq(t):
    g = set(range(len(t)))
    return all(set_product(t, {x}, g) == g and set_product(t, g, {x}) == g for x in g)


def is_sub(t, k):
    k = set(k)
    if not k:
        return False
    if any(not t[x][y] <= k for x in k for y in k):
        return False
    return all(set_product(t, {a}, k) == k and set_product(t, k, {a}) == k for a in k)


def all_subs(t):
    n = len(t)
    out = []
    for bits in range(1, 1 << n):
        k = {e for e in range(n) if bits >> e & 1}
        if is_sub(t, k):
            out.append(frozenset(k))
    return out


def ifsh(t, mu, lam):
    g = range(len(t))
    c1 = all(min(mu[x], mu[y]) <= min(mu[z] for z in t[x][y]) for x in g for y in g)
    c3 = all(max(lam[z] for z in t[x][y]) <= max(lam[x], lam[y]) for x in g for y in g)
    c2 = all(
        any(
            x in t[a][y] and x in t[z][a] and min(mu[a], mu[x]) <= min(mu[y], mu[z])
            for y in g for z in g
        )
        for x in g for a in g
    )
    c4 = all(
        any(
            x in t[a][y] and x in t[z][a] and max(lam[y], lam[z]) <= max(lam[a], lam[x])
            for y in g for z in g
        )
        for x in g for a in g
    )
    return c1 and c2 and c3 and c4


def fuzzy_subhq(t, f):
    g = range(len(t))
    c1 = all(min(f[x], f[y]) <= min(f[z] for z in t[x][y]) for x in g for y in g)
    c2 = all(any(x in t[a][y] and min(f[a], f[x]) <= f[y] for y in g) for x in g for a in g)
    c3 = all(any(x in t[z][a] and min(f[a], f[x]) <= f[z] for z in g) for x in g for a in g)
    return c1 and c2 and c3


def products_by_words(t, max_len):
    """Values of every parenthesised product of at most ``max_len`` factors.

    ``level[k]`` holds the values of products of exactly k factors, built
    from all splits i + (k - i).
    """
    n = len(t)
    level = {1: {frozenset({x}) for x in range(n)}}
    for k in range(2, max_len + 1):
        vals = set()
        for i in range(1, k):
            for u in level[i]:
                for v in level[k - i]:
                    vals.add(frozenset(set_product(t, u, v)))
        level[k] = vals
    out = set()
    for vals in level.values():
        out |= vals
    return out


def transitive_closure_classes(n, related):
    """Classes of the reflexive-transitive closure of a symmetric relation (Warshall)."""
    r = [[x == y or related(x, y) for y in range(n)] for x in range(n)]
    for k, i, j in product(range(n), repeat=3):
        if r[i][k] and r[k][j]:
            r[i][j] = True
    classes = []
    for x in range(n):
        cls = frozenset(y for y in range(n) if r[x][y] and r[y][x])
        if cls not in classes:
            classes.append(cls)
    return classes
