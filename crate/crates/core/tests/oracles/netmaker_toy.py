"""Independent re-implementation of the NetMaker construction contract.

Prints the edge list (one-based ids, canonical order) for the toy instance
checked in tests/generators.rs. Run: python3 netmaker_toy.py
"""
M64 = (1 << 64) - 1


class SplitMix:
    def __init__(self, seed):
        self.s = seed & M64

    def next(self):
        self.s = (self.s + 0x9E3779B97F4A7C15) & M64
        z = self.s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
        return z ^ (z >> 31)

    def below(self, n):
        m = self.next() * n
        low = m & M64
        if low < n:
            t = ((1 << 64) - n) % n
            while low < t:
                m = self.next() * n
                low = m & M64
        return m >> 64


def tag(s):
    return int.from_bytes(s.ljust(8, b"\0"), "big")


def substream(seed, t):
    return SplitMix(SplitMix(seed ^ tag(t)).next())


def netmaker(n, amin, amax, window, seed):
    rs = substream(seed, b"STRUCTUR")
    sigma = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rs.below(i + 1)
        sigma[i], sigma[j] = sigma[j], sigma[i]
    succ = {}
    cyc = []
    for i in range(n):
        u, v = sigma[i], sigma[(i + 1) % n]
        succ[u] = v
        cyc.append((u, v))
    loc = []
    half = window // 2
    for u in range(1, n + 1):
        target = amax if amin >= amax else amin + 1 + rs.below(amax - amin)
        want = target - 1
        lo, hi = max(1, u - half), min(n, u + half)
        cand = [w for w in range(lo, hi + 1) if w != u and w != succ[u]]
        take = min(want, len(cand))
        for i in range(take):
            j = i + rs.below(len(cand) - i)
            cand[i], cand[j] = cand[j], cand[i]
        loc += [(u, w) for w in cand[:take]]
    rc = substream(seed, b"COSTS")
    bands = [(1, 333), (334, 666), (667, 1000)]
    edges = []
    for u, v in cyc:
        perm = [0, 1, 2]
        for i in range(2, 0, -1):
            j = rc.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        c = []
        for b in perm:
            lo, hi = bands[b]
            c.append(lo + rc.below(hi - lo + 1))
        edges.append((u, v, tuple(c)))
    for u, w in loc:
        edges.append((u, w, tuple(1 + rc.below(99) for _ in range(3))))
    return sorted(edges)


if __name__ == "__main__":
    for u, v, c in netmaker(20, 1, 4, 4, 2024):
        print(f"({u}, {v}, [{c[0]}, {c[1]}, {c[2]}]),")
