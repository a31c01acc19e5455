"""Schur multiplier and abelianization of a finite group given by a presentation.

The multiplier is read off Hopf's formula in the form R/[F,R] = (R^ab)_G:
R^ab is the cycle space of the Cayley graph of G, and the coinvariants are
taken under the left regular action. For finite G the result is
Z^{#generators} + M(G); the torsion part is M(G).

Elimination runs over Z/p^e with p-adic pivoting, which is exact for p-groups
as long as p^e exceeds the exponent of M(G) (checked).
"""

import numpy as np
from sympy.combinatorics.fp_groups import FpGroup
from sympy.matrices.normalforms import invariant_factors
from sympy import Matrix


def coset_table(free, relators):
    group = FpGroup(free, relators)
    table = group.coset_enumeration([])
    table.compress()
    table.standardize()
    # columns alternate x, x^-1 for each generator; keep the forward ones
    ngens = len(free.generators)
    forward = [[row[2 * i] for i in range(ngens)] for row in table.table]
    return forward


def _valuation(arr, p, e):
    v = np.zeros(arr.shape, dtype=np.int64)
    cur = arr.copy()
    mask = cur != 0
    v[~mask] = e
    for _ in range(e):
        div = mask & (cur % p == 0)
        if not div.any():
            break
        v[div] += 1
        cur[div] //= p
        mask = div
    return v


def local_elementary_divisors(mat, p, e):
    """Valuations of the elementary divisors of mat over Z/p^e (e means zero)."""
    mod = p ** e
    a = np.array(mat, dtype=np.int64) % mod
    rows, cols = a.shape
    out = []
    k = 0
    while k < min(rows, cols):
        sub = a[k:, k:]
        if not sub.any():
            break
        vals = _valuation(sub, p, e)
        idx = np.unravel_index(np.argmin(vals), vals.shape)
        v = int(vals[idx])
        i, j = idx[0] + k, idx[1] + k
        a[[k, i], :] = a[[i, k], :]
        a[:, [k, j]] = a[:, [j, k]]
        piv = int(a[k, k])
        unit = piv // (p ** v)
        inv = pow(unit, -1, mod)
        col = a[k + 1:, k] // (p ** v)
        factors = (col * inv) % mod
        a[k + 1:, :] = (a[k + 1:, :] - np.outer(factors, a[k, :]) % mod) % mod
        a[k, k + 1:] = 0
        out.append(v)
        k += 1
    return out


def schur_multiplier(table, p, e=8):
    """Exponent partition of M(G) for the Cayley table of a finite p-group."""
    n = len(table)
    ngens = len(table[0])
    # BFS spanning tree rooted at the identity (coset 0)
    parent = [None] * n
    parent[0] = (-1, -1)
    order = [0]
    for v in order:
        for x in range(ngens):
            w = table[v][x]
            if parent[w] is None:
                parent[w] = (v, x)
                order.append(w)
    tree = set()
    for w in range(1, n):
        tree.add(parent[w])
    nontree = {}
    for v in range(n):
        for x in range(ngens):
            if (v, x) not in tree:
                nontree[(v, x)] = len(nontree)
    words = [None] * n
    words[0] = []
    for w in order[1:]:
        v, x = parent[w]
        words[w] = words[v] + [x]

    def walk(start, word):
        """Edges traversed reading word from vertex start."""
        edges = []
        cur = start
        for x in word:
            edges.append((cur, x))
            cur = table[cur][x]
        return edges, cur

    def cycle_coords(start, v, x):
        """Non-tree coordinates of g.f_e where g is the element at start."""
        coords = {}
        path_in, gv = walk(start, words[v])
        path_out, _ = walk(start, words[table[v][x]])
        for edge in path_in + [(gv, x)]:
            if edge in nontree:
                coords[nontree[edge]] = coords.get(nontree[edge], 0) + 1
        for edge in path_out:
            if edge in nontree:
                coords[nontree[edge]] = coords.get(nontree[edge], 0) - 1
        return coords

    c = len(nontree)
    rows = []
    for g in range(ngens):
        start = table[0][g]
        for (v, x), idx in nontree.items():
            coords = cycle_coords(start, v, x)
            coords[idx] = coords.get(idx, 0) - 1
            row = np.zeros(c, dtype=np.int64)
            for k, val in coords.items():
                row[k] = val
            rows.append(row)
    vals = local_elementary_divisors(np.array(rows), p, e)
    free = c - sum(1 for v in vals if v < e)
    if free != ngens:
        raise RuntimeError(f"precision too low: {free} saturated summands, expected {ngens}")
    return sorted((v for v in vals if 0 < v < e), reverse=True)


def abelianization(free, relators, p):
    gens = free.generators
    rows = []
    for r in relators:
        rows.append([sum(exp for sym, exp in r.array_form if sym == g.array_form[0][0]) for g in gens])
    factors = invariant_factors(Matrix(rows))
    parts = []
    for f in factors:
        f = abs(int(f))
        if f == 0:
            raise RuntimeError("infinite abelianization")
        k = 0
        while f % p == 0:
            f //= p
            k += 1
        if f != 1:
            raise RuntimeError("abelianization is not a p-group")
        if k:
            parts.append(k)
    return sorted(parts, reverse=True)
