#!/usr/bin/env python3
"""Re-verify the certificates in a tperf JSON report, independently of tperf.

Usage: check_certificate.py REPORT.json   (or - for stdin)

Exit status 0 if every certificate verifies, 1 otherwise. Uses only the standard
library.
"""

import json
import sys
from fractions import Fraction


def from_graph6(s):
    data = [ord(c) - 63 for c in s.strip()]
    if data[0] < 63:
        n, data = data[0], data[1:]
    else:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    bits = [(d >> (5 - i)) & 1 for d in data for i in range(6)]
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return adj


def edges(adj):
    return [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]


def stable_sets(adj):
    def go(v, cand, cur):
        if v == len(adj):
            yield cur
            return
        yield from go(v + 1, cand, cur)
        if cand >> v & 1:
            yield from go(v + 1, cand & ~adj[v], cur | 1 << v)
    yield from go(0, (1 << len(adj)) - 1, 0)


def members(mask):
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def is_cycle(adj, cyc):
    k = len(cyc)
    return k >= 3 and len(set(cyc)) == k and all(adj[cyc[i]] >> cyc[(i + 1) % k] & 1 for i in range(k))


def is_induced_path(adj, p):
    if len(set(p)) != len(p):
        return False
    return all(bool(adj[p[i]] >> p[j] & 1) == (j == i + 1) for i in range(len(p)) for j in range(i + 1, len(p)))


def induced_paths_from(adj, s):
    """All induced paths starting at s, as vertex lists."""
    def go(path, forbidden):
        yield path
        for w in members(adj[path[-1]] & ~forbidden):
            yield from go(path + [w], forbidden | adj[path[-1]] | 1 << w)
    yield from go([s], 1 << s)


def induced_odd_cycles(adj):
    """Each induced odd cycle once, starting at its smallest vertex."""
    for s in range(len(adj)):
        def go(path, blocked):
            last = path[-1]
            for w in members(adj[last] & ~blocked):
                if w < s:
                    continue
                if len(path) >= 2 and adj[w] >> s & 1:
                    if len(path) % 2 == 0 and path[1] < w:
                        yield path + [w]
                    continue
                # N(s) stays open so the cycle can close
                grow = adj[last] if last != s else 0
                yield from go(path + [w], blocked | grow | 1 << w)
        yield from go([s], 1 << s)


def check_fractional_point(adj, c):
    x = [Fraction(q) for q in c["point"]]
    a = [Fraction(q) for q in c["normal"]]
    rhs = Fraction(c["rhs"])
    n = len(adj)
    assert len(x) == n and len(a) == n, "dimension"
    assert all(q >= 0 for q in x), "negative coordinate"
    assert all(x[u] + x[v] <= 1 for u, v in edges(adj)), "edge inequality violated"
    for cyc in induced_odd_cycles(adj):
        assert sum(x[v] for v in cyc) <= Fraction(len(cyc) - 1, 2), f"odd cycle {cyc} violated"
    assert sum(p * q for p, q in zip(a, x)) > rhs, "point not cut off"
    for s in stable_sets(adj):
        assert sum(a[v] for v in members(s)) <= rhs, "hyperplane cuts a stable set"


def check_harmonious(adj, c):
    parts = [set(p) for p in c["parts"]]
    g1, g2 = set(c["separation"]["g1"]), set(c["separation"]["g2"])
    x = g1 & g2
    assert all(p for p in parts), "empty part"
    assert sum(len(p) for p in parts) == len(set().union(*parts)) and set().union(*parts) == x, "parts"
    assert g1 | g2 == set(range(len(adj))) and g1 - x and g2 - x, "separation"
    assert not any(adj[u] >> v & 1 for u in g1 - x for v in g2 - x), "edge across"
    if len(parts) >= 3:
        assert all(adj[u] >> v & 1 for i, p in enumerate(parts) for q in parts[i + 1:] for u in p for v in q)
    part = {v: i for i, p in enumerate(parts) for v in p}
    for u in x:
        for p in induced_paths_from(adj, u):
            if p[-1] in x:
                odd = (len(p) - 1) % 2 == 1
                assert odd != (part[u] == part[p[-1]]), f"path {p} has the wrong parity"


def check(adj, c):
    kind = c["kind"]
    n = len(adj)
    if kind == "induced_subgraph":
        pat = from_graph6(c["pattern_graph6"])
        m = c["map"]
        assert len(m) == len(pat) and len(set(m)) == len(m) and all(0 <= h < n for h in m), "map"
        for p in range(len(pat)):
            for q in range(p + 1, len(pat)):
                assert bool(pat[p] >> q & 1) == bool(adj[m[p]] >> m[q] & 1), "not induced"
        if "pattern_imperfect" in c:
            verify(c["pattern_imperfect"], pat)
    elif kind == "fractional_point":
        check_fractional_point(adj, c)
    elif kind == "colouring":
        col = {int(v): k for v, k in c["colours"].items()}
        assert sorted(col) == list(range(n)) and all(1 <= k <= c["k"] for k in col.values()), "colours"
        assert all(col[u] != col[v] for u, v in edges(adj)), "improper"
    elif kind == "odd_cycle":
        assert is_cycle(adj, c["cycle"]) and len(c["cycle"]) % 2 == 1, "not an odd cycle"
    elif kind == "bipartition":
        side = set(c["side"])
        assert all((u in side) != (v in side) for u, v in edges(adj)), "not a bipartition"
    elif kind == "near_bipartite":
        assert len(c["sides"]) == n
        for v, side in enumerate(c["sides"]):
            rest = set(members((1 << n) - 1 & ~adj[v]))
            side = set(side)
            assert side <= rest
            assert all((a in side) != (b in side) for a, b in edges(adj) if a in rest and b in rest), v
    elif kind == "odd_cycle_outside_neighbourhood":
        cyc = c["cycle"]
        assert is_cycle(adj, cyc) and len(cyc) % 2 == 1, "not an odd cycle"
        assert not any(adj[c["vertex"]] >> w & 1 for w in cyc), "cycle meets the neighbourhood"
    elif kind == "fractional_colouring":
        value = Fraction(c["value"])
        cover = [0] * n
        for ws in c["cover"]:
            s = sum(1 << v for v in ws["set"])
            w = Fraction(ws["weight"])
            assert w >= 0 and not any(adj[v] & s for v in ws["set"]), "cover set not stable"
            for v in ws["set"]:
                cover[v] += w
        assert all(q >= 1 for q in cover), "vertex not covered"
        assert sum(Fraction(ws["weight"]) for ws in c["cover"]) == value, "cover weight"
        dual = [Fraction(q) for q in c["dual"]]
        assert all(q >= 0 for q in dual) and sum(dual) == value, "dual value"
        assert all(sum(dual[v] for v in members(s)) <= 1 for s in stable_sets(adj)), "dual infeasible"
        if c.get("odd_cycle") is not None:
            assert is_cycle(adj, c["odd_cycle"]) and len(c["odd_cycle"]) % 2 == 1
    elif kind == "harmonious_tuple":
        check_harmonious(adj, c)
    elif kind == "induced_path":
        p = c["path"]
        assert is_induced_path(adj, p), "not an induced path"
        assert (len(p) - 1) % 2 == (0 if c["parity"] == "even" else 1), "parity"
    elif kind == "clique_separator":
        k = set(c["clique"])
        assert all(adj[u] >> v & 1 for u in k for v in k if u != v), "not a clique"
        comps = [set(x) for x in c["components"]]
        assert len(comps) >= 2 and set().union(*comps) == set(range(n)) - k
        assert not any(adj[u] >> v & 1 for i, a in enumerate(comps) for b in comps[i + 1:] for u in a for v in b)
    elif kind == "tminor_step":
        verify(c["witness"], from_graph6(c["minor_graph6"]))
    elif kind == "disagreement":
        for part in c["parts"]:
            verify(part, adj)
    else:
        raise AssertionError(f"cannot verify certificate kind {kind}")


def verify(c, adj):
    if "graph6" in c:
        adj = from_graph6(c["graph6"])
    check(adj, c)


def main():
    src = sys.stdin if sys.argv[1:] in ([], ["-"]) else open(sys.argv[1])
    report = json.load(src)
    jobs = []
    default = report["input"]["graph6"] if report.get("input") else None
    for v in report["verdicts"]:
        if v["certificate"] is not None:
            jobs.append((v["property"], v["certificate"], default))
    for ce in (report.get("sweep") or {}).get("counterexamples", []):
        jobs.append((ce["graph6"], ce["certificate"], ce["graph6"]))
    failed = 0
    for name, c, g6 in jobs:
        try:
            if "graph6" not in c and g6 is None:
                raise AssertionError("no graph to check against")
            verify(c, from_graph6(c.get("graph6", g6)))
            print(f"ok    {name}: {c['kind']}")
        except (AssertionError, KeyError, ValueError, TypeError, IndexError) as e:
            failed += 1
            print(f"FAIL  {name}: {c.get('kind')}: {e}")
    print(f"{len(jobs) - failed}/{len(jobs)} certificates verified")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
