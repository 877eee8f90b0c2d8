"""Independent reference for the seeded topology generator.

Writes the canonical topology text for (n, seed) with default parameters.
Used once to freeze tests/golden/*.txt; not part of the build.
"""
import sys

M = (1 << 64) - 1


class SplitMix:
    def __init__(self, seed):
        self.s = seed & M

    def next(self):
        self.s = (self.s + 0x9E3779B97F4A7C15) & M
        z = self.s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
        return z ^ (z >> 31)

    def unit(self):
        return float(self.next()) / 18446744073709551616.0


def generate(n, seed, p=0.15, bw=(1.0, 6.0), delay=(1.0, 20.0),
             jitter=(0.0, 5.0), loss=(0.0, 0.05)):
    rng = SplitMix(seed)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.next() % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    links = set()
    for i in range(n - 1):
        a, b = sorted((perm[i], perm[i + 1]))
        links.add((a, b))
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) in links:
                continue
            if rng.unit() < p:
                links.add((a, b))
    out = ["n=%d" % n]
    for a, b in sorted(links):
        vals = [r[0] + rng.unit() * (r[1] - r[0]) for r in (bw, delay, jitter, loss)]
        out.append("%d %d " % (a, b) + " ".join("%.6g" % v for v in vals))
    return "\n".join(out) + "\n"


if __name__ == "__main__":
    sys.stdout.write(generate(int(sys.argv[1]), int(sys.argv[2])))
