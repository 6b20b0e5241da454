"""Floating-point LP cross-check (scipy) for the small colored examples."""
from itertools import combinations, product

import numpy as np
from scipy.optimize import linprog


def hulls_meet(points, parts):
    d = len(points[0])
    nvar = sum(len(p) for p in parts) + d
    rows, rhs = [], []
    off = 0
    for part in parts:
        r = np.zeros(nvar); r[off:off + len(part)] = 1; rows.append(r); rhs.append(1)
        for t in range(d):
            r = np.zeros(nvar)
            for j, v in enumerate(part):
                r[off + j] = points[v][t]
            r[-d + t] = -1
            rows.append(r); rhs.append(0)
        off += len(part)
    bounds = [(0, None)] * (nvar - d) + [(None, None)] * d
    res = linprog(np.zeros(nvar), A_eq=np.array(rows), b_eq=rhs, bounds=bounds)
    return res.status == 0


def rainbow_faces(n, color):
    for k in range(1, n + 1):
        for f in combinations(range(n), k):
            if len({color[v] for v in f}) == k:
                yield f


cross = [(1, 0), (-1, 0), (0, 1), (0, -1), (2, 2), (-2, -2)]
color = [0, 0, 1, 1, 2, 2]
hits = [(a, b) for a, b in combinations(list(rainbow_faces(6, color)), 2)
        if not set(a) & set(b) and hulls_meet(cross, [a, b])]
hits = [tuple(sorted(h)) for h in hits]
print("cross rainbow pairs:", len(hits), "first:", min(hits))

w = [(0, 0), (0, 0), (1, 0), (1, 0), (0, 1), (0, 1)]
print("witness parts meet:", hulls_meet(w, [(0, 2, 4), (1, 3, 5)]))
