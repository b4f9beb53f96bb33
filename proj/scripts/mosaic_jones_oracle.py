"""Independent tally of a layout: own tracer, naive state-sum Jones, table lookup.

Usage: mosaic_jones_oracle.py LAYOUT [INVARIANTS_TABLE]
Prints one line per class: link, jones=1, or the matching knot names.
"""

import itertools
import sys
from collections import Counter, defaultdict
from pathlib import Path

T, R, B, L = "T", "R", "B", "L"
OPPOSITE = {T: B, B: T, L: R, R: L}
STEP = {T: (-1, 0), B: (1, 0), L: (0, -1), R: (0, 1)}
VEC = {T: (0, 1), B: (0, -1), L: (-1, 0), R: (1, 0)}  # y up
CCW = {T: L, L: B, B: R, R: T}
CW = {v: k for k, v in CCW.items()}
PAIRS = {
    1: [(L, B)], 2: [(B, R)], 3: [(T, R)], 4: [(T, L)], 5: [(L, R)], 6: [(T, B)],
    7: [(T, R), (B, L)], 8: [(T, L), (B, R)], 9: [(T, B), (L, R)], 10: [(T, B), (L, R)],
}


def partner(kind, side):
    for a, b in PAIRS[kind]:
        if a == side:
            return b
        if b == side:
            return a
    raise ValueError(f"tile {kind} has no end at {side}")


def components(g):
    """Closed walks as lists of (row, col, entry, exit)."""
    n = len(g)
    starts = sorted((r, c, s) for r in range(n) for c in range(n) if g[r][c] for p in PAIRS[g[r][c]] for s in p)
    seen, out = set(), []
    for start in starts:
        if start in seen:
            continue
        r, c, s = start
        walk = []
        while True:
            e = partner(g[r][c], s)
            seen.update({(r, c, s), (r, c, e)})
            walk.append((r, c, s, e))
            dr, dc = STEP[e]
            r, c, s = r + dr, c + dc, OPPOSITE[e]
            if (r, c, s) == start:
                break
        out.append(walk)
    return out


def mul(p, q):
    out = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return {k: v for k, v in out.items() if v}


def add(p, q):
    out = defaultdict(int, p)
    for k, v in q.items():
        out[k] += v
    return {k: v for k, v in out.items() if v}


def writhe(g, walk):
    passes = defaultdict(list)
    for r, c, s, e in walk:
        if g[r][c] >= 9:
            passes[(r, c)].append((s, e))
    w = 0
    for (r, c), ps in passes.items():
        vertical_over = g[r][c] == 9
        over = next(p for p in ps if (p[0] in (T, B)) == vertical_over)
        under = next(p for p in ps if p is not over)
        o = (VEC[over[1]][0] - VEC[over[0]][0], VEC[over[1]][1] - VEC[over[0]][1])
        u = (VEC[under[1]][0] - VEC[under[0]][0], VEC[under[1]][1] - VEC[under[0]][1])
        w += 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1
    return w


def jones_x4(g):
    """Jones polynomial as {4 * t-exponent: coefficient}, or None for links."""
    walks = components(g)
    if len(walks) != 1:
        return None
    walk = walks[0]
    crossings = [(r, c) for r in range(len(g)) for c in range(len(g)) if g[r][c] >= 9]
    if not crossings:
        return {0: 1}
    visits = [v for v in walk if g[v[0]][v[1]] >= 9]
    arcs = [((a[0], a[1], a[3]), (b[0], b[1], b[2])) for a, b in zip(visits, visits[1:] + visits[:1])]
    total = {}
    for state in itertools.product([0, 1], repeat=len(crossings)):
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for x, y in arcs:
            union(x, y)
        n_a = 0
        for (r, c), smoothing in zip(crossings, state):
            over_sides = (T, B) if g[r][c] == 9 else (L, R)
            # A-smoothing joins each over end with the under end clockwise from it.
            turn = CW if smoothing == 0 else CCW
            n_a += smoothing == 0
            for side in over_sides:
                union((r, c, side), (r, c, turn[side]))
        loops = len({find(x) for x in parent})
        term = {n_a - (len(crossings) - n_a): 1}
        for _ in range(loops - 1):
            term = mul(term, {2: -1, -2: -1})
        total = add(total, term)
    w = writhe(g, walk)
    total = mul(total, {-3 * w: (-1) ** w})
    # A = t^(-1/4)
    return {-k: v for k, v in total.items()}


def load_table(path):
    """Jones (either chirality) -> knot names."""
    table = defaultdict(list)
    for line in open(path):
        if line.startswith("#") or not line.strip():
            continue
        name, jones, _, _ = line.strip().split(";")
        poly = {}
        for term in jones.replace(" - ", " + -").split(" + "):
            coef, exp = term.split("*q^")
            poly[int(exp)] = int(coef)
        table[frozenset(poly.items())].append(name)
        table[frozenset({-k: v for k, v in poly.items()}.items())].append(name)
    return table


def parse_layout(text):
    rows = [line.split() for line in text.replace(" / ", "\n").strip().splitlines()]
    return rows, [(r, c) for r, row in enumerate(rows) for c, v in enumerate(row) if v == "*"]


def tally(layout_text, table):
    rows, wild = parse_layout(layout_text)
    counts = Counter()
    for fill in itertools.product([7, 8, 9, 10], repeat=len(wild)):
        g = [[0 if v == "*" else int(v) for v in row] for row in rows]
        for (r, c), k in zip(wild, fill):
            g[r][c] = k
        j = jones_x4(g)
        if j is None:
            counts["link"] += 1
        elif j == {0: 1}:
            counts["jones=1"] += 1
        else:
            counts["/".join(sorted(set(table.get(frozenset(j.items()), ["?"]))))] += 1
    return counts


def main():
    root = Path(__file__).resolve().parent.parent
    table_path = sys.argv[2] if len(sys.argv) > 2 else root / "tests" / "data" / "knotinfo_invariants.txt"
    counts = tally(Path(sys.argv[1]).read_text(), load_table(table_path))
    for name, n in sorted(counts.items()):
        print(name, n)


if __name__ == "__main__":
    main()
